#include <cmath>
#include <random>

#include "doctest.h"
#include "isochiral/quadrature.hpp"
#include "isochiral/states.hpp"

using namespace isochiral;
using namespace isochiral::states;
using algebra::cd;
using gauge::IsoGauge;

namespace {
std::mt19937_64 rng(31415);
cd crand() {
  std::uniform_real_distribution<double> u(-1, 1);
  return {u(rng), u(rng)};
}

angular::DoubletAnsatz k_linked_ansatz(int tj, int tm, int delta, int mu, cd A) {
  angular::DoubletAnsatz a;
  a.j = HalfInt(tj);
  a.m = HalfInt(tm);
  const cd f1 = crand(), f2 = crand();
  a.f = {f1, f2, double(mu) * f2, double(mu) * f1};
  const cd link = double(delta) * std::exp(cd(0, 1) * A);
  for (int k = 0; k < 4; ++k) a.g[k] = link * a.f[3 - k];
  return a;
}

angular::DoubletAnsatz j0_ansatz(int delta, cd A) {
  angular::DoubletAnsatz a;
  a.j = HalfInt(0);
  a.m = HalfInt(0);
  const cd f2 = crand(), f4 = crand();
  a.f = {0.0, f2, 0.0, f4};
  const cd link = double(delta) * std::exp(cd(0, 1) * A);
  a.g = {link * f4, 0.0, link * f2, 0.0};
  return a;
}
}  // namespace

TEST_CASE("abelian states: construction rules") {
  const HalfInt half(1);
  CHECK_NOTHROW(build_abelian(half, HalfInt::whole(1), HalfInt::whole(0), 1, 1.0, 2.0));
  // j = 1/2 is not in the eg = 1/2 ladder {0, 1, 2, ...}
  CHECK_THROWS_AS(build_abelian(half, half, half, 1, 1.0, 2.0), std::domain_error);
  // minimal truncations: eg = +1/2 keeps rows 1,3; eg = -1/2 keeps rows 2,4
  const AbelianAnsatz ap = build_abelian_minimal(half, HalfInt(0), 1.0, 2.0);
  CHECK(ap.j == HalfInt(0));
  CHECK(ap.f[1] == cd(0.0));
  CHECK(ap.f[0] == cd(1.0));
  const AbelianAnsatz am = build_abelian_minimal(-half, HalfInt(0), 1.0, 2.0);
  CHECK(am.f[0] == cd(0.0));
  CHECK(am.f[1] == cd(1.0));
  // eg = 0 reduces to the free pattern: attachments are -+1/2
  const AbelianAnsatz fr = build_abelian(HalfInt(0), half, half, 1, 1.0, 2.0);
  CHECK(fr.sigma_of(0) == -half);
  CHECK(fr.sigma_of(1) == half);
}

TEST_CASE("factorization of composite states: coefficients and reconstruction") {
  // j=1, mu=delta=+1, A=0 -> coefficients (1, 1)
  const auto a = k_linked_ansatz(2, 2, +1, +1, 0.0);
  const Factorization f = factorize(a, +1, +1, 1.0);
  CHECK(std::abs(f.coeff_plus - 1.0) < 1e-15);
  CHECK(std::abs(f.coeff_minus - 1.0) < 1e-15);
  CHECK(f.reconstruction_error < 1e-12);
  // random quantum numbers and complex A
  for (auto [tj, tm, delta, mu] : {std::array{2, 0, -1, 1}, {4, -2, 1, -1},
                                   {6, 4, -1, -1}}) {
    const cd A = crand();
    const cd Delta = std::exp(cd(0, 1) * A);
    const auto st = k_linked_ansatz(tj, tm, delta, mu, A);
    const Factorization fac = factorize(st, delta, mu, Delta);
    CHECK(fac.reconstruction_error < 1e-12);
    CHECK(std::abs(fac.coeff_minus - double(mu * delta) * Delta) < 1e-14);
  }
}

TEST_CASE("factorization at j = 0") {
  // delta=-1, A=i: second coefficient -e^{-1}
  const cd A(0, 1);
  const auto a = j0_ansatz(-1, A);
  const Factorization f = factorize(a, -1, 0, std::exp(cd(0, 1) * A));
  CHECK(std::abs(f.coeff_minus + std::exp(-1.0)) < 1e-14);
  CHECK(f.reconstruction_error < 1e-12);
}

TEST_CASE("gauge translations of sections") {
  const auto a = k_linked_ansatz(2, 0, +1, +1, cd(0.3, 0.2));
  const angular::Section s = angular::section_from_ansatz(a);
  // round trip S -> C -> S is the identity
  const angular::Section c = to_gauge(s, IsoGauge::Schwinger, IsoGauge::Cartesian);
  const angular::Section back = to_gauge(c, IsoGauge::Cartesian, IsoGauge::Schwinger);
  for (double th : {0.4, 1.5, 2.7})
    for (double ph : {0.6, 3.9}) {
      CHECK((back.value(th, ph) - s.value(th, ph)).cwiseAbs().maxCoeff() < 1e-14);
    }
  // S -> D multiplies the T+ block by e^{-i phi/2} (the phase consistent with
  // the Dirac-gauge reflection operator)
  const angular::Section d = to_gauge(s, IsoGauge::Schwinger, IsoGauge::Dirac);
  for (double th : {0.8, 2.1})
    for (double ph : {0.5, 2.2}) {
      const Eigen::VectorXcd vd = d.value(th, ph);
      const Eigen::VectorXcd vs = s.value(th, ph);
      for (int k = 0; k < 4; ++k) {
        CHECK(std::abs(vd[k] - algebra::iexp(-0.5 * ph) * vs[k]) < 1e-14);
        CHECK(std::abs(vd[4 + k] - algebra::iexp(0.5 * ph) * vs[4 + k]) < 1e-14);
      }
    }
  // S -> C at theta ~ 0: the helicity columns collapse to (e^{-i phi/2}, 0)
  const double th0 = 1e-9, ph0 = 1.1;
  const algebra::Mat2c m = iso_gauge_matrix(IsoGauge::Schwinger, IsoGauge::Cartesian,
                                            th0, ph0);
  CHECK(std::abs(m(0, 0) - algebra::iexp(-0.5 * ph0)) < 1e-8);
  CHECK(std::abs(m(1, 0)) < 1e-8);
}

TEST_CASE("gauge-covariant N_A eigen action in Dirac and Cartesian gauges") {
  const cd A(0.7, -0.6);
  for (auto [tj, tm, delta] : {std::array{2, 2, 1}, {4, 0, -1}}) {
    const auto a = k_linked_ansatz(tj, tm, delta, +1, A);
    const auto ec = discrete::eigen_constraints(HalfInt(tj), delta, A);
    const angular::Section s = angular::section_from_ansatz(a);
    for (auto g : {IsoGauge::Dirac, IsoGauge::Cartesian}) {
      const angular::Section sg = to_gauge(s, IsoGauge::Schwinger, g);
      const discrete::DiscreteOperatorSpec spec{g, discrete::Tetrad::spherical,
                                                discrete::ChiralParameter(A)};
      const angular::Section ns = discrete::apply_n_section(spec, sg);
      for (double th : {0.5, 1.3, 2.6})
        for (double ph : {0.2, 2.0}) {
          const Eigen::VectorXcd lhs = ns.value(th, ph);
          const Eigen::VectorXcd rhs = ec.eigenvalue * sg.value(th, ph);
          CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
  }
}

TEST_CASE("monopole harmonics: signs, poles, norms") {
  const HalfInt half(1);
  // chi_{+1/2}(theta=0) = (e^{-i phi/2}, 0)
  const Vec2c chi0 = monopole_harmonic(HarmonicKind::chi_plus, half, half, half,
                                       0.0, 0.77);
  CHECK(std::abs(chi0[0] - algebra::iexp(-0.5 * 0.77)) < 1e-12);
  CHECK(std::abs(chi0[1]) < 1e-12);
  // xi^{(1)} + xi^{(2)} = 2 chi_- D_{k+1/2}; xi^{(1)} - xi^{(2)} = 2 chi_+ D_{k-1/2}
  const HalfInt j = HalfInt::whole(1), m = HalfInt::whole(0), k = half;
  for (double th : {0.9, 2.0})
    for (double ph : {0.4, 3.7}) {
      const Vec2c x1 = monopole_harmonic(HarmonicKind::xi_1, j, m, k, th, ph);
      const Vec2c x2 = monopole_harmonic(HarmonicKind::xi_2, j, m, k, th, ph);
      const Vec2c chi_m = monopole_harmonic(HarmonicKind::chi_minus, j, m, k, th, ph);
      const Vec2c chi_p = monopole_harmonic(HarmonicKind::chi_plus, j, m, k, th, ph);
      const cd d_plus = wigner::D_state(j, m, k + half, th, ph);
      const cd d_minus = wigner::D_state(j, m, k - half, th, ph);
      CHECK((x1 + x2 - 2.0 * chi_m * d_plus).norm() < 1e-13);
      CHECK((x1 - x2 - 2.0 * chi_p * d_minus).norm() < 1e-13);
    }
  // quadrature norms of xi^{(1,2)} finite and equal for +-k
  const auto sph = quad::sphere_rule(48, 64);
  auto norm_of = [&](HarmonicKind kind, HalfInt kk) {
    double n = 0.0;
    for (std::size_t it = 0; it < sph.theta.size(); ++it)
      for (std::size_t ip = 0; ip < sph.phi.size(); ++ip)
        n += sph.wtheta[it] * sph.wphi *
             monopole_harmonic(kind, j, m, kk, sph.theta[it], sph.phi[ip])
                 .squaredNorm();
    return n;
  };
  const double n1p = norm_of(HarmonicKind::xi_1, k);
  const double n1m = norm_of(HarmonicKind::xi_1, -k);
  CHECK(std::isfinite(n1p));
  CHECK(n1p == doctest::Approx(n1m).epsilon(1e-8));
  // Omega norm: unit by construction of the prefactor (half-integer labels)
  double no = 0.0;
  for (std::size_t it = 0; it < sph.theta.size(); ++it)
    for (std::size_t ip = 0; ip < sph.phi.size(); ++ip)
      no += sph.wtheta[it] * sph.wphi *
            monopole_harmonic(HarmonicKind::omega_plus, HalfInt(3), HalfInt(1),
                              HalfInt(0), sph.theta[it], sph.phi[ip])
                .squaredNorm();
  CHECK(no == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("Pauli-frame translation of fixed-parity free states") {
  const HalfInt j(3), m(1);  // j = 3/2
  const cd f = crand(), g = crand();
  // delta = +1: P = (-1)^{j+1}; expect top ~ Omega^+, bottom ~ Omega^-
  const AbelianAnsatz st = build_free_parity(j, m, +1, f, g);
  const PauliPair pp = to_pauli_cartesian(section_from_abelian(st));
  for (double th : {0.7, 1.8})
    for (double ph : {0.9, 4.1}) {
      const Vec2c top(pp.top.value(th, ph)[0], pp.top.value(th, ph)[1]);
      const Vec2c bot(pp.bottom.value(th, ph)[0], pp.bottom.value(th, ph)[1]);
      const Vec2c op = monopole_harmonic(HarmonicKind::omega_plus, j, m, HalfInt(0),
                                         th, ph);
      const Vec2c om = monopole_harmonic(HarmonicKind::omega_minus, j, m, HalfInt(0),
                                         th, ph);
      // proportionality: top x Omega+ = 0 componentwise cross check
      CHECK(std::abs(top[0] * op[1] - top[1] * op[0]) < 1e-12);
      CHECK(std::abs(bot[0] * om[1] - bot[1] * om[0]) < 1e-12);
    }
}

TEST_CASE("Pauli-frame translation of monopole states lands on xi harmonics") {
  const HalfInt half(1);
  const HalfInt j = HalfInt::whole(1), m = HalfInt::whole(1), eg = half;
  const cd f1 = crand(), f2 = crand();
  for (int mu : {+1, -1}) {
    const AbelianAnsatz st = build_abelian(eg, j, m, mu, f1, f2);
    const PauliPair pp = to_pauli_cartesian(section_from_abelian(st));
    // mu=+1: top ~ xi1, bottom ~ xi2; mu=-1: top ~ xi2, bottom ~ xi1
    const HarmonicKind top_kind = mu > 0 ? HarmonicKind::xi_1 : HarmonicKind::xi_2;
    const HarmonicKind bot_kind = mu > 0 ? HarmonicKind::xi_2 : HarmonicKind::xi_1;
    for (double th : {0.8, 2.2})
      for (double ph : {0.3, 2.9}) {
        const Vec2c top(pp.top.value(th, ph)[0], pp.top.value(th, ph)[1]);
        const Vec2c bot(pp.bottom.value(th, ph)[0], pp.bottom.value(th, ph)[1]);
        const Vec2c xt = monopole_harmonic(top_kind, j, m, eg, th, ph);
        const Vec2c xb = monopole_harmonic(bot_kind, j, m, eg, th, ph);
        CHECK(std::abs(top[0] * xt[1] - top[1] * xt[0]) < 1e-12);
        CHECK(std::abs(bot[0] * xb[1] - bot[1] * xb[0]) < 1e-12);
      }
  }
}

TEST_CASE("minimal-j monopole state in the Pauli frame: single chi column") {
  const HalfInt half(1);
  const AbelianAnsatz st = build_abelian_minimal(half, HalfInt(0), crand(), crand());
  const PauliPair pp = to_pauli_cartesian(section_from_abelian(st));
  for (double th : {0.6, 1.9})
    for (double ph : {0.8, 3.4}) {
      const Vec2c top(pp.top.value(th, ph)[0], pp.top.value(th, ph)[1]);
      const Vec2c chi = monopole_harmonic(HarmonicKind::chi_plus, half, HalfInt(0),
                                          half, th, ph);
      CHECK(std::abs(top[0] * chi[1] - top[1] * chi[0]) < 1e-12);
    }
}

TEST_CASE("single-valuedness windings") {
  const HalfInt half(1);
  // free j=1/2 state: single-valued
  const AbelianAnsatz fr = build_free_parity(half, half, +1, 0.8, cd(0.3, 0.4));
  const PauliPair pf = to_pauli_cartesian(section_from_abelian(fr));
  auto rep = single_valuedness_check(pf.top, wigner::Endpoint::theta_zero);
  CHECK(rep.kind == WindingReport::Kind::single_valued);
  // eg=+1/2 minimal state: e^{-i phi/2} at theta=0, e^{+i phi/2} at theta=pi
  const AbelianAnsatz mono = build_abelian_minimal(half, HalfInt(0), 1.0, 0.5);
  const PauliPair pm = to_pauli_cartesian(section_from_abelian(mono));
  rep = single_valuedness_check(pm.top, wigner::Endpoint::theta_zero);
  CHECK(rep.kind == WindingReport::Kind::phase_winding);
  CHECK(rep.winding == doctest::Approx(-0.5).epsilon(1e-6));
  rep = single_valuedness_check(pm.top, wigner::Endpoint::theta_pi);
  CHECK(rep.kind == WindingReport::Kind::phase_winding);
  CHECK(rep.winding == doctest::Approx(0.5).epsilon(1e-6));
  // all-zero section: indeterminate
  angular::Section zero;
  zero.dim = 2;
  zero.value = [](double, double) { return Eigen::VectorXcd::Zero(2).eval(); };
  rep = single_valuedness_check(zero, wigner::Endpoint::theta_zero);
  CHECK(rep.kind == WindingReport::Kind::indeterminate);
}

TEST_CASE("the composite doublet is single-valued in the Cartesian frames") {
  const auto a = k_linked_ansatz(2, 0, +1, +1, cd(0.4, 0.1));
  const CompositeSigma cs = cartesian_doublet_sigma(a, std::exp(cd(0, 1) * cd(0.4, 0.1)), +1);
  angular::Section s;
  s.dim = 4;
  s.value = [cs](double th, double ph) -> Eigen::VectorXcd {
    return cs.evaluate(true, th, ph);
  };
  auto rep = single_valuedness_check(s, wigner::Endpoint::theta_zero);
  CHECK(rep.kind == WindingReport::Kind::single_valued);
  rep = single_valuedness_check(s, wigner::Endpoint::theta_pi);
  CHECK(rep.kind == WindingReport::Kind::single_valued);
}

TEST_CASE("Cartesian block decomposition reconstructs the gauge-transformed state") {
  for (auto [tj, tm, delta] : {std::array{2, 2, 1}, {4, -2, -1}, {6, 0, 1},
                               {2, 0, -1}}) {
    const cd A = crand();
    const cd Delta = std::exp(cd(0, 1) * A);
    angular::DoubletAnsatz a;
    a.j = HalfInt(tj);
    a.m = HalfInt(tm);
    for (int k = 0; k < 4; ++k) a.f[k] = crand();
    const cd link = double(delta) * Delta;
    for (int k = 0; k < 4; ++k) a.g[k] = link * a.f[3 - k];
    const CartesianBlockTable tab = decompose_cartesian(a, Delta, delta);
    const angular::Section sc = to_gauge(angular::section_from_ansatz(a),
                                         IsoGauge::Schwinger, IsoGauge::Cartesian);
    for (double th : {0.5, 1.4, 2.3})
      for (double ph : {0.7, 2.8, 5.0}) {
        const Vec8c lhs = tab.evaluate(th, ph);
        const Eigen::VectorXcd rhs = sc.value(th, ph);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-11);
      }
  }
}

TEST_CASE("stretched projection kills the sqrt(j-m) block") {
  const auto a = k_linked_ansatz(2, 2, +1, +1, 0.0);  // j = m = 1
  const CartesianBlockTable tab = decompose_cartesian(a, 1.0, +1);
  for (int k = 0; k < 4; ++k) CHECK(std::abs(tab.coeff[2][k]) < 1e-15);
}

TEST_CASE("j=0 decomposition uses only the j+1/2 blocks") {
  const auto a = j0_ansatz(+1, cd(0.2, 0.4));
  const CartesianBlockTable tab = decompose_cartesian(a, std::exp(cd(0, 1) * cd(0.2, 0.4)), +1);
  for (int k = 0; k < 4; ++k) {
    CHECK(std::abs(tab.coeff[0][k]) < 1e-15);
    CHECK(std::abs(tab.coeff[2][k]) < 1e-15);
  }
  const angular::Section sc = to_gauge(angular::section_from_ansatz(a),
                                       IsoGauge::Schwinger, IsoGauge::Cartesian);
  for (double th : {0.9, 2.1})
    for (double ph : {0.5, 4.2})
      CHECK((tab.evaluate(th, ph) - Vec8c(sc.value(th, ph))).cwiseAbs().maxCoeff() <
            1e-12);
}

TEST_CASE("composite Sigma matches the direct pipeline") {
  for (auto [tj, tm, delta] : {std::array{2, 0, 1}, {4, 2, -1}}) {
    const cd A = crand();
    const cd Delta = std::exp(cd(0, 1) * A);
    const auto a = k_linked_ansatz(tj, tm, delta, +1, A);
    const CompositeSigma cs = cartesian_doublet_sigma(a, Delta, delta);
    // pipeline: S -> C gauge, then Cartesian tetrad + Pauli frame
    const angular::Section sc = to_gauge(angular::section_from_ansatz(a),
                                         IsoGauge::Schwinger, IsoGauge::Cartesian);
    const PauliPair pp = to_pauli_cartesian(sc);
    for (double th : {0.6, 1.7, 2.5})
      for (double ph : {0.4, 2.6}) {
        // pipeline component order: (iso+, s1), (iso+, s2), (iso-, s1), (iso-, s2)
        const Eigen::VectorXcd top = pp.top.value(th, ph);
        const Eigen::VectorXcd bot = pp.bottom.value(th, ph);
        const Eigen::Vector4cd cs_top = cs.evaluate(true, th, ph);
        const Eigen::Vector4cd cs_bot = cs.evaluate(false, th, ph);
        CHECK((cs_top - Eigen::Vector4cd(top)).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((cs_bot - Eigen::Vector4cd(bot)).cwiseAbs().maxCoeff() < 1e-10);
      }
  }
}

TEST_CASE("at A=0 each Sigma block carries a single Omega kind") {
  const auto a = k_linked_ansatz(4, 2, +1, +1, 0.0);
  const CompositeSigma cs = cartesian_doublet_sigma(a, 1.0, +1);
  // delta=+1: the (T+, j-1/2) block pairs carry only Omega^-
  int nplus = 0, nminus = 0;
  for (const auto& t : cs.plus) {
    if (t.iso == 0 && t.jp == HalfInt(3) && std::abs(t.coeff) > 1e-13) {
      if (t.pm > 0) ++nplus;
      else ++nminus;
    }
  }
  CHECK(nplus == 0);
  CHECK(nminus == 1);
}

TEST_CASE("doublet states built from radial solutions satisfy N and K") {
  const double eps = 1.4, mass = 0.6;
  const HalfInt j = HalfInt::whole(1), m = HalfInt::whole(0);
  std::vector<double> grid(401);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 0.7 + 0.02 * i;
  const auto pf = gauge::ProfileFunctions::embedded_abelian();
  const auto base = radial::build_system(j, pf, eps, mass);
  const cd A(1.1, -0.8);
  const int delta = -1, mu = +1;
  const auto rr = radial::reduce_with_n(base, delta, A, grid);
  const auto ksys = radial::reduce_with_k(*rr.system, mu);
  const auto sol = radial::solve(ksys, radial::BoundaryKind::regular_at_origin, grid);
  const DoubletState st = build_doublet(eps, mass, j, m, delta,
                                        discrete::ChiralParameter(A), ksys, sol);
  const auto ec = discrete::eigen_constraints(j, delta, A);
  for (std::size_t ir : {std::size_t(0), grid.size() / 2, grid.size() - 1}) {
    const angular::DoubletAnsatz a = st.ansatz_at(ir);
    const auto na = discrete::apply_n_ansatz(A, a);
    CHECK(angular::max_coeff_diff(na, ec.eigenvalue * a) < 1e-12);
    const auto kr = angular::apply_K(a);
    CHECK(kr.linkage_residual < 1e-12);
    CHECK(angular::max_coeff_diff(kr.section, angular::k_eigenvalue(j, mu) * a) < 1e-12);
  }
}

TEST_CASE("Abelian-state pole structure matches the boundary tables") {
  const HalfInt half(1);
  const AbelianAnsatz st = build_abelian(half, HalfInt::whole(1), HalfInt::whole(1),
                                         +1, 0.7, cd(0.2, 0.4));
  for (int k = 0; k < 4; ++k) {
    const HalfInt sigma = st.sigma_of(k);
    if (sigma.abs() > st.j) continue;
    for (auto ep : {wigner::Endpoint::theta_zero, wigner::Endpoint::theta_pi}) {
      const auto bv = wigner::boundary_value({st.j, -st.m, sigma}, ep);
      const double th = ep == wigner::Endpoint::theta_zero ? 1e-6 : M_PI - 1e-6;
      const cd got = st.evaluate(th, 0.9)[k];
      if (bv.is_zero)
        CHECK(std::abs(got) < 1e-4);
      else
        CHECK(std::abs(got - st.f[k] * bv.value(0.9)) < 1e-4);
    }
  }
}

TEST_CASE("the z-deformed massless family stays an eigenstate of N_z") {
  const HalfInt j(3), m(1);
  const cd z(0.8, -0.5);
  for (int delta : {+1, -1}) {
    const AbelianAnsatz st = build_massless_z_state(j, m, delta, z, 0.6, cd(0.1, 0.9));
    const algebra::Mat4c op = discrete::massless_conjugated_operator(z);
    const cd eig = double(delta) * std::exp(cd(0, 1) * M_PI * (j.value() + 1.0));
    for (double th : {0.6, 1.8})
      for (double ph : {0.4, 3.1}) {
        const Vec4c lhs = op * st.evaluate(M_PI - th, ph + M_PI);
        const Vec4c rhs = eig * st.evaluate(th, ph);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
      }
  }
}

TEST_CASE("state CSV and harmonic JSON exports") {
  std::vector<double> grid(21);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 0.8 + 0.2 * i;
  const auto pf = gauge::ProfileFunctions::embedded_abelian();
  const auto base = radial::build_system(HalfInt::whole(1), pf, 1.5, 0.7);
  const auto rr = radial::reduce_with_n(base, +1, 0.0, grid);
  const auto ksys = radial::reduce_with_k(*rr.system, +1);
  const auto sol = radial::solve(ksys, radial::BoundaryKind::regular_at_origin, grid);
  const DoubletState st = build_doublet(1.5, 0.7, HalfInt::whole(1), HalfInt::whole(0),
                                        +1, discrete::ChiralParameter(cd(0, 0)), ksys, sol);
  const std::string csv = state_to_csv(st, {0.5, 1.5}, {0.0, 3.0});
  CHECK(csv.find("Re_T+1") != std::string::npos);
  CHECK(csv.find("case=k_reduced") != std::string::npos);
  const std::string js = harmonic_table_json(HarmonicKind::xi_1, HalfInt::whole(1),
                                             HalfInt::whole(0), HalfInt(1),
                                             {0.5, 1.5}, {0.0, 2.0});
  CHECK(js.find("\"kind\": \"xi_1\"") != std::string::npos);
}
