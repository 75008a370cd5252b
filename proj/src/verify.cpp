#include "isochiral/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

#include "isochiral/angular.hpp"
#include "isochiral/discrete.hpp"
#include "isochiral/gauge.hpp"
#include "isochiral/pauli.hpp"
#include "isochiral/quadrature.hpp"
#include "isochiral/radial.hpp"
#include "isochiral/selection.hpp"
#include "isochiral/states.hpp"
#include "isochiral/wigner.hpp"

namespace isochiral::verify {

namespace {

using algebra::cd;
using wigner::EulerAngles;
using wigner::WignerIndex;

struct Ctx {
  std::mt19937_64 rng;
  const Options* opt;
  double urand(double a, double b) {
    return std::uniform_real_distribution<double>(a, b)(rng);
  }
  HalfInt rand_j() {
    return HalfInt(std::uniform_int_distribution<int>(0, opt->j_max_twice)(rng));
  }
  HalfInt rand_proj(HalfInt j) {
    const int n = std::uniform_int_distribution<int>(0, j.twice())(rng);
    return HalfInt(-j.twice() + 2 * n);
  }
  cd crand() { return {urand(-1, 1), urand(-1, 1)}; }
};

using Check = std::function<double(Ctx&)>;

struct Entry {
  std::string name;
  double tol;
  Check run;
  std::string detail;
};

const std::vector<cd> kA10 = {{0, 0},  {1, 0},    {0, 1},    {2, 3},  {-1.3, 0.4},
                              {0.5, -2}, {3.1, 0}, {0, -0.7}, {1.1, 1.1}, {-2.2, -0.3}};

angular::DoubletAnsatz eigen_ansatz(Ctx& c, int tj, int tm, int delta, cd A,
                                    int mu = 0) {
  angular::DoubletAnsatz a;
  a.j = HalfInt(tj);
  a.m = HalfInt(tm);
  const cd link = double(delta) * std::exp(cd(0, 1) * A);
  if (tj == 0) {
    const cd f2 = c.crand(), f4 = c.crand();
    a.f = {0.0, f2, 0.0, f4};
    a.g = {link * f4, 0.0, link * f2, 0.0};
    return a;
  }
  if (mu == 0) {
    for (int k = 0; k < 4; ++k) a.f[k] = c.crand();
  } else {
    const cd f1 = c.crand(), f2 = c.crand();
    a.f = {f1, f2, double(mu) * f2, double(mu) * f1};
  }
  for (int k = 0; k < 4; ++k) a.g[k] = link * a.f[3 - k];
  return a;
}

std::vector<Entry> registry() {
  std::vector<Entry> reg;
  auto add = [&](std::string name, double tol, Check run) {
    reg.push_back({std::move(name), tol, std::move(run), ""});
  };

  // ---- wigner_core ----------------------------------------------------------
  add("wigner_unitarity", 1e-12, [](Ctx& c) {
    double worst = 0.0;
    for (int t = 0; t < 60; ++t) {
      const HalfInt j = c.rand_j();
      const HalfInt m = c.rand_proj(j);
      const EulerAngles a{c.urand(0, 2 * M_PI), c.urand(0, M_PI), c.urand(0, 2 * M_PI)};
      double sum = 0.0;
      for (int tm = -j.twice(); tm <= j.twice(); tm += 2)
        sum += std::norm(wigner::big_D({j, m, HalfInt(tm)}, a));
      worst = std::max(worst, std::abs(sum - 1.0));
    }
    return worst;
  });

  add("wigner_orthogonality", 1e-8, [](Ctx&) {
    const auto sph = quad::sphere_rule(64, 128);
    double worst = 0.0;
    for (auto [tj1, tj2] : {std::pair{1, 1}, {1, 3}, {2, 4}, {3, 3}}) {
      const HalfInt j1(tj1), j2(tj2), m(tj1 % 2), mp(tj1 % 2);
      cd acc = 0.0;
      for (std::size_t it = 0; it < sph.theta.size(); ++it)
        for (std::size_t ip = 0; ip < sph.phi.size(); ++ip) {
          const EulerAngles a{sph.phi[ip], sph.theta[it], 0.0};
          acc += sph.wtheta[it] * sph.wphi *
                 std::conj(wigner::big_D({j1, m, mp}, a)) *
                 wigner::big_D({j2, m, mp}, a);
        }
      const double expect = tj1 == tj2 ? 4.0 * M_PI / (tj1 + 1.0) : 0.0;
      worst = std::max(worst, std::abs(acc - expect));
    }
    return worst;
  });

  add("wigner_boundary_tables", 1e-14, [](Ctx& c) {
    // every nonzero cell reproduces its e^{+-i w phi} structure; zero cells 0
    double worst = 0.0;
    for (int tmp : {-3, -2, -1, 1, 2, 3}) {
      for (int tj = std::abs(tmp); tj <= 7; tj += 2) {
        const HalfInt j(tj), mp(tmp);
        for (int tm = -tj; tm <= tj; tm += 2) {
          const WignerIndex idx{j, HalfInt(tm), mp};
          for (auto ep : {wigner::Endpoint::theta_zero, wigner::Endpoint::theta_pi}) {
            const auto bv = wigner::boundary_value(idx, ep);
            const bool expect_nonzero = (ep == wigner::Endpoint::theta_zero)
                                            ? (tm == tmp)
                                            : (tm == -tmp);
            if (!expect_nonzero) {
              if (!bv.is_zero) return 1.0;
              continue;
            }
            const double phi = c.urand(0, 2 * M_PI);
            // winding matches e^{-i m phi}; the sign is the conventional one
            const cd val = bv.value(phi);
            const cd phase = std::exp(cd(0, -0.5 * tm * phi));
            worst = std::max(worst, std::abs(val - double(bv.sign) * phase));
            worst = std::max(worst, std::abs(std::abs(val) - 1.0));
          }
        }
      }
    }
    return worst;
  });

  add("wigner_recursion_derivative", 1e-12, [](Ctx& c) {
    double worst = 0.0;
    const bool fault = c.opt->inject_fault == "recursion_sign";
    for (int t = 0; t < 200; ++t) {
      const HalfInt j = c.rand_j();
      const WignerIndex idx{j, c.rand_proj(j), c.rand_proj(j)};
      const EulerAngles a{c.urand(0, 2 * M_PI), c.urand(0.05, M_PI - 0.05),
                          c.urand(0, 2 * M_PI)};
      double res = wigner::recursion_residual_derivative(idx, a);
      if (fault) {
        // deliberately corrupted route used by the fault-injection harness
        const double jv = j.value(), mpv = idx.mprime.value();
        const cd lhs = wigner::small_d_dbeta(idx, a.beta) *
                       std::exp(cd(0, -(idx.m.value() * a.alpha + mpv * a.gamma)));
        auto D = [&](HalfInt mp) -> cd {
          if (mp.abs() > j) return 0.0;
          return wigner::big_D({j, idx.m, mp}, a);
        };
        const cd rhs = 0.5 * std::sqrt((jv + mpv) * (jv - mpv + 1.0)) *
                           std::exp(cd(0, -a.gamma)) * D(idx.mprime - HalfInt::whole(1)) +
                       0.5 * std::sqrt((jv - mpv) * (jv + mpv + 1.0)) *
                           std::exp(cd(0, a.gamma)) * D(idx.mprime + HalfInt::whole(1));
        res = std::abs(lhs - rhs);
      }
      worst = std::max(worst, res);
    }
    return worst;
  });

  add("wigner_recursion_weight", 1e-12, [](Ctx& c) {
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
      const HalfInt j = c.rand_j();
      const WignerIndex idx{j, c.rand_proj(j), c.rand_proj(j)};
      const EulerAngles a{c.urand(0, 2 * M_PI), c.urand(0.05, M_PI - 0.05),
                          c.urand(0, 2 * M_PI)};
      worst = std::max(worst, wigner::recursion_residual_weight(idx, a));
    }
    return worst;
  });

  add("wigner_34a_specialization", 1e-12, [](Ctx& c) {
    double worst = 0.0;
    for (const int tj : {2, 4, 6}) {
      const HalfInt j(tj);
      const double jv = j.value();
      const double nu = std::sqrt(jv * (jv + 1)), om = std::sqrt((jv - 1) * (jv + 2));
      for (int tm = -tj; tm <= tj; tm += 2) {
        const HalfInt m(tm);
        const double th = c.urand(0.2, M_PI - 0.2), ph = c.urand(0, 2 * M_PI);
        auto Ds = [&](int ts) -> cd {
          if (std::abs(ts) > tj) return 0.0;
          return wigner::D_state(j, m, HalfInt(ts), th, ph);
        };
        auto Dt = [&](int ts) { return wigner::D_state_dtheta(j, m, HalfInt(ts), th, ph); };
        const double mv = m.value(), st = std::sin(th), ct = std::cos(th);
        worst = std::max({worst,
                          std::abs(Dt(-2) - 0.5 * (om * Ds(-4) - nu * Ds(0))),
                          std::abs((mv - ct) / st * Ds(-2) - 0.5 * (om * Ds(-4) + nu * Ds(0))),
                          std::abs(Dt(0) - 0.5 * nu * (Ds(-2) - Ds(2))),
                          std::abs(mv / st * Ds(0) - 0.5 * nu * (Ds(-2) + Ds(2))),
                          std::abs(Dt(2) - 0.5 * (nu * Ds(0) - om * Ds(4))),
                          std::abs((mv + ct) / st * Ds(2) - 0.5 * (nu * Ds(0) + om * Ds(4)))});
      }
    }
    return worst;
  });

  add("wigner_half_angle_couplings", 1e-12, [](Ctx& c) {
    double worst = 0.0;
    for (int t = 0; t < 80; ++t) {
      HalfInt j = c.rand_j();
      if (j.twice() == 0) j = HalfInt(1);
      const HalfInt m = c.rand_proj(j - HalfInt(1)), mp = c.rand_proj(j - HalfInt(1));
      const EulerAngles a{c.urand(0, 2 * M_PI), c.urand(0, M_PI), c.urand(0, 2 * M_PI)};
      worst = std::max({worst,
                        wigner::half_angle_coupling({j, m, mp}, a, wigner::Branch::cos_branch),
                        wigner::half_angle_coupling({j, m, mp}, a, wigner::Branch::sin_branch)});
    }
    return worst;
  });

  // ---- pauli_selector -------------------------------------------------------
  add("pauli_verdict_vs_ladder", 1e-10, [](Ctx&) {
    for (int tj = 0; tj <= 7; ++tj)
      for (int tl = -7; tl <= 7; ++tl) {
        const double j = 0.5 * tj, lam = 0.5 * tl;
        const bool allowed = pauli::check_pauli(j, lam).allowed;
        const double res = pauli::lowering_annihilation_residual(j, lam);
        if (allowed && res > 1e-10) return res;
        if (!allowed && res < 1e-2) return 1.0;
      }
    for (auto [j, lam] : {std::pair{0.25, 0.25}, {0.0, 0.5}, {1.0, 0.5},
                          {0.7, 0.7}, {2.0, 2.5}, {1.25, 0.25}, {0.5, 0.2},
                          {3.0, 1.5}, {1.75, 0.75}, {2.25, 1.25}}) {
      if (pauli::check_pauli(j, lam).allowed) continue;
      if (pauli::lowering_annihilation_residual(j, lam) < 1e-2) return 1.0;
    }
    return 0.0;
  });

  add("pauli_phi_wigner_identity", 1e-12, [](Ctx& c) {
    double worst = 0.0;
    for (auto [tj, tm, tl] : {std::array{1, 1, 1}, {2, 0, 0}, {3, 1, -1},
                              {4, -2, 2}, {5, 3, 1}, {6, 0, -2}}) {
      const pauli::PhiFunction phi = pauli::build_phi(HalfInt(tj), HalfInt(tm), HalfInt(tl));
      for (int t = 0; t < 6; ++t) {
        const double th = c.urand(0.2, M_PI - 0.2), ph = c.urand(0, 2 * M_PI);
        worst = std::max(worst, std::abs(phi(th, ph) -
                                         pauli::phi_from_wigner(HalfInt(tj), HalfInt(tm),
                                                                HalfInt(tl), th, ph)));
      }
    }
    return worst;
  });

  add("pauli_phi_norm", 1e-8, [](Ctx&) {
    const auto sph = quad::sphere_rule(64, 64);
    double worst = 0.0;
    for (auto [tj, tm, tl] : {std::array{1, 1, 1}, {2, 0, 0}, {4, 2, -2}}) {
      const pauli::PhiFunction phi = pauli::build_phi(HalfInt(tj), HalfInt(tm), HalfInt(tl));
      double n = 0.0;
      for (std::size_t it = 0; it < sph.theta.size(); ++it)
        for (std::size_t ip = 0; ip < sph.phi.size(); ++ip)
          n += sph.wtheta[it] * sph.wphi * std::norm(phi(sph.theta[it], sph.phi[ip]));
      worst = std::max(worst, std::abs(n - 1.0));
    }
    return worst;
  });

  add("pauli_charge_quantization", 0.0, [](Ctx&) {
    // both lambda = eg +- 1/2 admitted iff 2 eg integer
    for (double eg : {0.0, 0.5, 1.0, 1.5, 2.0}) {
      if (pauli::check_pauli(std::abs(eg) + 1.5, eg + 0.5).reason ==
          pauli::Reason::lambda_not_half_integer)
        return 1.0;
    }
    for (double eg : {0.25, 0.6, 1.1}) {
      if (pauli::check_pauli(5.0, eg + 0.5).reason !=
          pauli::Reason::lambda_not_half_integer)
        return 1.0;
    }
    return 0.0;
  });

  // ---- gauge_frames ---------------------------------------------------------
  add("gibbs_rotation_orthogonality", 1e-13, [](Ctx& c) {
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
      const gauge::Vec3 v{c.urand(-3, 3), c.urand(-3, 3), c.urand(-3, 3)};
      const gauge::Mat3 O = gauge::rotation_from_gibbs({v});
      worst = std::max(worst, (O.transpose() * O - gauge::Mat3::Identity())
                                  .cwiseAbs()
                                  .maxCoeff());
      worst = std::max(worst, std::abs(O.determinant() - 1.0));
    }
    return worst;
  });

  add("gibbs_composite_product", 1e-13, [](Ctx&) {
    const auto cf = gauge::gibbs_cartesian_to_dirac();
    const auto cpf = gauge::gibbs_dirac_to_schwinger();
    double worst = 0.0;
    for (int i = 1; i <= 20; ++i)
      for (int k = 0; k < 20; ++k) {
        const double th = 0.01 + i * (M_PI - 0.02) / 21.0;
        const double ph = -M_PI + 0.08 + k * (2 * M_PI - 0.16) / 20.0;
        if (std::abs(std::abs(ph) - M_PI) < 0.03) continue;
        const auto lhs = gauge::rotation_from_gibbs(gauge::composite_gibbs(th, ph));
        const auto rhs = gauge::rotation_from_gibbs({cpf.eval(th, ph)}) *
                         gauge::rotation_from_gibbs({cf.eval(th, ph)});
        worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
        worst = std::max(worst, (lhs - gauge::composite_rotation_closed_form(th, ph))
                                    .cwiseAbs()
                                    .maxCoeff());
      }
    return worst;
  });

  add("gauge_potential_chain", 1e-10, [](Ctx&) {
    gauge::ProfileFunctions pf;
    pf.e = 1.3;
    pf.phi_of_r = [](double r) { return 0.7 / (1 + r); };
    pf.f_of_r = [](double r) { return 0.4 * std::exp(-r); };
    pf.k_of_r = [](double r) { return 0.9 / (1 + r * r); };
    const auto cart = gauge::cartesian_ansatz(pf);
    const auto dirac = gauge::transform_potential(cart, gauge::gibbs_cartesian_to_dirac(),
                                                  gauge::IsoGauge::Dirac);
    const auto schw = gauge::transform_potential(dirac, gauge::gibbs_dirac_to_schwinger(),
                                                 gauge::IsoGauge::Schwinger);
    const auto dref = gauge::dirac_closed_form(pf);
    const auto sref = gauge::schwinger_closed_form(pf);
    double worst = 0.0;
    for (double r : {0.7, 2.0})
      for (double th : {0.4, 1.3, 2.4})
        for (double ph : {0.2, 1.9, 2.7})
          for (int mu = 0; mu < 4; ++mu) {
            worst = std::max(worst, (dirac.W(mu, r, th, ph) - dref.W(mu, r, th, ph)).norm());
            worst = std::max(worst, (schw.W(mu, r, th, ph) - sref.W(mu, r, th, ph)).norm());
          }
    return worst;
  });

  add("gauge_roundtrip", 1e-10, [](Ctx&) {
    gauge::ProfileFunctions pf = gauge::ProfileFunctions::trivial();
    pf.k_of_r = [](double r) { return -0.5 / (1 + r * r); };
    const auto cart = gauge::cartesian_ansatz(pf);
    auto fwd = gauge::gibbs_cartesian_to_dirac();
    gauge::GibbsField bwd;
    bwd.c = [fwd](double th, double ph) -> gauge::Vec3 { return -fwd.c(th, ph); };
    bwd.dc_dtheta = [fwd](double th, double ph) -> gauge::Vec3 {
      return -fwd.dc_dtheta(th, ph);
    };
    bwd.dc_dphi = [fwd](double th, double ph) -> gauge::Vec3 {
      return -fwd.dc_dphi(th, ph);
    };
    const auto back = gauge::transform_potential(
        gauge::transform_potential(cart, fwd, gauge::IsoGauge::Dirac), bwd,
        gauge::IsoGauge::Cartesian);
    double worst = 0.0;
    for (double r : {0.8, 2.4})
      for (double th : {0.5, 1.6, 2.6})
        for (double ph : {0.4, 3.2})
          for (int mu = 0; mu < 4; ++mu)
            worst = std::max(worst,
                             (back.W(mu, r, th, ph) - cart.W(mu, r, th, ph)).norm());
    return worst;
  });

  add("gauge_embedded_abelian", 1e-12, [](Ctx&) {
    const double e = 2.0;
    const auto schw = gauge::transform_potential(
        gauge::cartesian_ansatz(gauge::ProfileFunctions::embedded_abelian(e)),
        gauge::gibbs_cartesian_to_schwinger(), gauge::IsoGauge::Schwinger);
    double worst = 0.0;
    for (double r : {0.5, 1.5})
      for (double th : {0.4, 1.2, 2.1})
        for (double ph : {0.3, 2.2, 4.0}) {
          worst = std::max(worst, schw.W(2, r, th, ph).norm());
          const auto wphi = schw.W(3, r, th, ph);
          worst = std::max({worst, std::abs(wphi.x()), std::abs(wphi.y()),
                            std::abs(wphi.z() - std::cos(th) / e)});
        }
    return worst;
  });

  add("gauge_spinor_vector_homomorphism", 1e-12, [](Ctx& c) {
    double worst = 0.0;
    for (int t = 0; t < 30; ++t) {
      const auto b1 = gauge::spinor_gauge_matrix(c.urand(0.1, 3.0), c.urand(-3, 3));
      const auto b2 = gauge::spinor_gauge_matrix(c.urand(0.1, 3.0), c.urand(-3, 3));
      worst = std::max(worst, (gauge::vector_rep_of_matrix(b1 * b2) -
                               gauge::vector_rep_of_matrix(b1) *
                                   gauge::vector_rep_of_matrix(b2))
                                  .cwiseAbs()
                                  .maxCoeff());
    }
    for (auto [th, ph] : {std::pair{M_PI / 3, M_PI / 4}, {1.1, 2.0}}) {
      const auto L = gauge::vector_rep_of_matrix(gauge::spinor_gauge_matrix(th, ph));
      const auto O = gauge::rotation_from_gibbs(gauge::composite_gibbs(th, ph));
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k)
          worst = std::max(worst, std::abs(L(i + 1, k + 1) - O(i, k)));
    }
    return worst;
  });

  // ---- angular_operators ----------------------------------------------------
  add("angular_su2_commutators", 1e-8, [](Ctx& c) {
    double worst = 0.0;
    const auto a = eigen_ansatz(c, 4, 2, +1, cd(0.3, 0.1));
    const auto s = angular::section_from_ansatz(a);
    for (auto spec : {angular::MomentumSpec::doublet()}) {
      for (auto [x, y, z] : {std::array{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}) {
        const auto jab = angular::apply_J(spec, x, angular::apply_J(spec, y, s));
        const auto jba = angular::apply_J(spec, y, angular::apply_J(spec, x, s));
        const auto jc = angular::apply_J(spec, z, s);
        for (double th : {0.7, 1.9})
          for (double ph : {0.6, 3.8}) {
            const Eigen::VectorXcd r = jab.value(th, ph) - jba.value(th, ph) -
                                       cd(0, 1) * jc.value(th, ph);
            worst = std::max(worst, r.cwiseAbs().maxCoeff());
          }
      }
    }
    return worst;
  });

  add("angular_sigma_vs_differential", 1e-8, [](Ctx& c) {
    double worst = 0.0;
    for (int tj : {2, 4}) {
      const auto a = eigen_ansatz(c, tj, 0, +1, 0.0);
      const auto s = angular::section_from_ansatz(a);
      const auto ds = angular::apply_sigma_differential(s);
      const auto exact = angular::apply_sigma(a);
      for (double th : {0.5, 1.4, 2.4})
        for (double ph : {0.3, 2.5})
          worst = std::max(worst, (ds.value(th, ph) -
                                   Eigen::VectorXcd(exact.evaluate(th, ph)))
                                      .cwiseAbs()
                                      .maxCoeff());
    }
    return worst;
  });

  add("angular_jsq_eigen", 1e-8, [](Ctx& c) {
    double worst = 0.0;
    for (auto [tj, tm] : {std::pair{2, 2}, {4, -2}}) {
      const auto a = eigen_ansatz(c, tj, tm, +1, 0.0);
      const auto s = angular::section_from_ansatz(a);
      const auto jsq = angular::apply_Jsq(angular::MomentumSpec::doublet(), s);
      const double jv = 0.5 * tj;
      for (double th : {0.8, 2.0})
        for (double ph : {0.9, 4.4})
          worst = std::max(worst, (jsq.value(th, ph) -
                                   jv * (jv + 1.0) * s.value(th, ph))
                                      .cwiseAbs()
                                      .maxCoeff());
    }
    return worst;
  });

  add("angular_k_operator", 1e-12, [](Ctx& c) {
    double worst = 0.0;
    for (auto [tj, mu] : {std::pair{2, 1}, {4, -1}, {6, 1}}) {
      const auto a = eigen_ansatz(c, tj, 0, +1, cd(0.2, -0.4), mu);
      const auto kr = angular::apply_K(a);
      worst = std::max(worst, kr.linkage_residual);
      worst = std::max(worst, angular::max_coeff_diff(
                                  kr.section,
                                  angular::k_eigenvalue(HalfInt(tj), mu) * a));
    }
    return worst;
  });

  add("angular_k_n_commute", 1e-10, [](Ctx& c) {
    const cd A(0.4, -0.7);
    const auto a = eigen_ansatz(c, 4, -2, +1, A, -1);
    const auto kn = angular::apply_K(discrete::apply_n_ansatz(A, a)).section;
    const auto nk = discrete::apply_n_ansatz(A, angular::apply_K(a).section);
    return angular::max_coeff_diff(kn, nk);
  });

  // ---- discrete_symmetry ----------------------------------------------------
  add("discrete_involution", 1e-13, [](Ctx& c) {
    double worst = 0.0;
    for (cd A : kA10)
      for (int t = 0; t < 5; ++t) {
        const double th = c.urand(0.05, M_PI - 0.05), ph = c.urand(0, 2 * M_PI);
        const auto s1 = discrete::n_iso_factor(gauge::IsoGauge::Schwinger, A, th, ph);
        const auto s2 = discrete::n_iso_factor(gauge::IsoGauge::Schwinger, A,
                                               M_PI - th, ph + M_PI);
        worst = std::max(worst, (s1 * s2 - algebra::Mat2c::Identity()).norm());
        const auto c1 = discrete::n_iso_factor(gauge::IsoGauge::Cartesian, A, th, ph);
        const auto c2 = discrete::n_iso_factor(gauge::IsoGauge::Cartesian, A,
                                               M_PI - th, ph + M_PI);
        worst = std::max(worst, (c1 * c2 + algebra::Mat2c::Identity()).norm());
      }
    return worst;
  });

  add("discrete_gauge_covariance", 1e-12, [](Ctx& c) {
    double worst = 0.0;
    for (cd A : kA10)
      for (int t = 0; t < 4; ++t) {
        const double th = c.urand(0.05, M_PI - 0.05), ph = c.urand(0.05, 2.8);
        const auto piS = discrete::n_iso_factor(gauge::IsoGauge::Schwinger, A, th, ph);
        const auto B = gauge::spinor_gauge_matrix(th, ph);
        const auto BP = gauge::spinor_gauge_matrix(M_PI - th, ph + M_PI);
        worst = std::max(worst,
                         (discrete::n_iso_factor(gauge::IsoGauge::Cartesian, A, th, ph) -
                          algebra::Mat2c(B.inverse() * piS * BP))
                             .norm());
      }
    return worst;
  });

  add("discrete_eigen_action", 1e-12, [](Ctx& c) {
    double worst = 0.0;
    for (cd A : kA10)
      for (auto [tj, tm, delta] : {std::array{0, 0, 1}, {2, 2, -1}, {4, 0, 1},
                                   {6, -4, -1}}) {
        const auto a = eigen_ansatz(c, tj, tm, delta, A);
        const auto ec = discrete::eigen_constraints(HalfInt(tj), delta, A);
        const auto na = discrete::apply_n_ansatz(A, a);
        worst = std::max(worst, angular::max_coeff_diff(na, ec.eigenvalue * a));
      }
    return worst;
  });

  add("discrete_chiral_conjugation", 1e-13, [](Ctx& c) {
    double worst = 0.0;
    for (cd A : kA10) {
      const auto U = discrete::chiral_u(A, gauge::IsoGauge::Schwinger, 0, 0);
      worst = std::max(worst,
                       (algebra::Mat2c(U * algebra::sigma(1) * U.inverse()) -
                        discrete::n_iso_factor(gauge::IsoGauge::Schwinger, A, 1.0, 1.0))
                           .norm());
      const double th = c.urand(0.1, M_PI - 0.1), ph = c.urand(0, 2 * M_PI);
      const auto Uc = discrete::chiral_u(A, gauge::IsoGauge::Cartesian, th, ph);
      const auto UcP = discrete::chiral_u(A, gauge::IsoGauge::Cartesian, M_PI - th,
                                          ph + M_PI);
      const auto pi0 = discrete::n_iso_factor(gauge::IsoGauge::Cartesian, 0.0, th, ph);
      worst = std::max(worst,
                       (algebra::Mat2c(Uc * pi0 * UcP.inverse()) -
                        discrete::n_iso_factor(gauge::IsoGauge::Cartesian, A, th, ph))
                           .norm());
    }
    return worst;
  });

  add("discrete_real_A_su2", 1e-14, [](Ctx&) {
    double worst = 0.0;
    for (double f : {0.3, 1.7, -2.4}) {
      const auto U = std::exp(cd(0, -0.5 * f)) *
                     discrete::chiral_u(cd(f, 0), gauge::IsoGauge::Cartesian, 1.0, 2.0);
      worst = std::max(worst, (U * U.adjoint() - algebra::Mat2c::Identity()).norm());
      worst = std::max(worst, std::abs(U.determinant() - cd(1, 0)));
    }
    return worst;
  });

  add("discrete_overlap_law", 1e-8, [](Ctx& c) {
    const auto sph = quad::sphere_rule(48, 64);
    std::array<cd, 4> f;
    for (auto& v : f) v = c.crand();
    auto build = [&](cd A, int delta) {
      angular::DoubletAnsatz a;
      a.j = HalfInt::whole(1);
      a.m = HalfInt::whole(0);
      a.f = f;
      const cd link = double(delta) * std::exp(cd(0, 1) * A);
      for (int k = 0; k < 4; ++k) a.g[k] = link * a.f[3 - k];
      return a;
    };
    auto inner = [&](const angular::DoubletAnsatz& x, const angular::DoubletAnsatz& y) {
      cd acc = 0.0;
      for (std::size_t it = 0; it < sph.theta.size(); ++it)
        for (std::size_t ip = 0; ip < sph.phi.size(); ++ip)
          acc += sph.wtheta[it] * sph.wphi *
                 x.evaluate(sph.theta[it], sph.phi[ip])
                     .dot(y.evaluate(sph.theta[it], sph.phi[ip]));
      return acc;
    };
    const cd norm0 = inner(build(0, +1), build(0, +1));
    double worst = 0.0;
    for (cd A : {cd(0, 1), cd(2, 3), cd(1.2, 0)})
      for (auto [d1, d2] : {std::pair{1, 1}, {1, -1}})
        worst = std::max(worst, std::abs(inner(build(A, d1), build(A, d2)) / norm0 -
                                         discrete::overlap(A, d1, d2)));
    return worst;
  });

  add("discrete_adjoint_defect", 1e-8, [](Ctx& c) {
    auto rand_section = [&]() {
      angular::DoubletAnsatz p = eigen_ansatz(c, 2, 0, +1, 0.0);
      for (int k = 0; k < 4; ++k) p.g[k] = c.crand();  // break the linkage
      return angular::section_from_ansatz(p);
    };
    const auto sa = rand_section(), sb = rand_section();
    double worst = 0.0;
    for (cd A : {cd(0.9, 0.0), cd(0, 1), cd(2, 3)}) {
      const auto d = discrete::adjoint_defect(A, sa, sb);
      worst = std::max(worst, std::abs(d.corrected));
      if (std::abs(A.imag()) < 1e-12) worst = std::max(worst, std::abs(d.plain));
      if (std::abs(A.imag()) > 1e-12 && std::abs(d.plain) < 1e-3) worst = 1.0;
    }
    return worst;
  });

  add("discrete_expectation_cases", 1e-12, [](Ctx&) {
    const HalfInt j = HalfInt::whole(1);
    double worst = 0.0;
    for (double f : {0.0, 0.9, 2.4})
      for (double g : {0.0, 0.5, -1.1})
        for (double G : {0.15, 0.8, 1.45})
          for (double al : {0.0, 2.0})
            for (double be : {0.7, 4.1}) {
              const cd A(f, g);
              worst = std::max(worst,
                               std::abs(discrete::expectation_n(A, G, al, be, j) -
                                        discrete::expectation_n_via_coefficients(
                                            A, G, al, be, j)));
            }
    // the four printed cases at spot values
    worst = std::max(worst, std::abs(discrete::expectation_n(0.0, 0.3, 0, 0, j) -
                                     std::cos(0.6)));
    worst = std::max(worst, std::abs(discrete::expectation_n(0.0, M_PI / 4, 0, 0, j)));
    return worst;
  });

  add("discrete_massless_analogue", 1e-13, [](Ctx&) {
    double worst = 0.0;
    for (cd A : {cd(M_PI / 3, 0.0), cd(0.4, 1.2)}) {
      const cd z = std::exp(cd(0, 1) * A);
      worst = std::max(worst, (discrete::massless_conjugated_operator(z) -
                               discrete::massless_exp_gamma5_form(A))
                                  .norm());
    }
    return worst;
  });

  // ---- radial_systems -------------------------------------------------------
  add("radial_compatibility_gate", 0.0, [](Ctx&) {
    std::vector<double> grid;
    for (int i = 0; i <= 40; ++i) grid.push_back(0.5 + 0.1 * i);
    gauge::ProfileFunctions pf = gauge::ProfileFunctions::embedded_abelian();
    pf.f_of_r = [](double) { return 1.0; };
    auto sys = radial::build_system(HalfInt::whole(1), pf, 1.0, 0.5);
    if (radial::reduce_with_n(sys, +1, 0.0, grid).system.has_value()) return 1.0;
    pf = gauge::ProfileFunctions::trivial();
    sys = radial::build_system(HalfInt::whole(1), pf, 1.0, 0.5);
    if (radial::reduce_with_n(sys, +1, cd(0, 1), grid).system.has_value()) return 1.0;
    if (!radial::reduce_with_n(sys, +1, 0.0, grid).system.has_value()) return 1.0;
    pf = gauge::ProfileFunctions::embedded_abelian();
    sys = radial::build_system(HalfInt::whole(1), pf, 1.0, 0.5);
    if (!radial::reduce_with_n(sys, +1, cd(0, 1), grid).system.has_value()) return 1.0;
    return 0.0;
  });

  add("radial_lift_consistency", 1e-9, [](Ctx&) {
    std::vector<double> grid(901);
    for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = 0.6 + 0.01 * i;
    const auto pf = gauge::ProfileFunctions::embedded_abelian();
    const auto base = radial::build_system(HalfInt::whole(2), pf, 1.1, 0.6);
    const cd A(0.8, -0.4);
    const auto rr = radial::reduce_with_n(base, -1, A, grid);
    const auto ksys = radial::reduce_with_k(*rr.system, +1);
    const auto sol = radial::solve(ksys, radial::BoundaryKind::regular_at_origin,
                                   grid, 1e-12);
    const auto v4 = radial::lift_k_to_free(sol.values, +1);
    const auto v8 = radial::lift_n_to_full(v4, -1, rr.system->Delta);
    return std::max(radial::residual_on_grid(*rr.system, grid, v4),
                    radial::residual_on_grid(base, grid, v8));
  });

  add("radial_full_operator", 1e-6, [](Ctx&) {
    std::vector<double> grid(800);
    for (std::size_t i = 0; i < grid.size(); ++i)
      grid[i] = 0.8 + 5.2 * double(i) / double(grid.size() - 1);
    const auto pf = gauge::ProfileFunctions::embedded_abelian();
    const auto base = radial::build_system(HalfInt::whole(1), pf, 1.3, 0.5);
    const auto rr = radial::reduce_with_n(base, +1, cd(0.2, 0.5), grid);
    const auto ksys = radial::reduce_with_k(*rr.system, +1);
    const auto sol = radial::solve(ksys, radial::BoundaryKind::regular_at_origin,
                                   grid, 1e-13);
    const auto v8 = radial::lift_n_to_full(radial::lift_k_to_free(sol.values, +1), +1,
                                           rr.system->Delta);
    angular::RadialSampledAnsatz rs;
    rs.j = HalfInt::whole(1);
    rs.m = HalfInt::whole(1);
    rs.epsilon = 1.3;
    rs.mass = 0.5;
    rs.r = grid;
    double scale = 0.0;
    for (const auto& v : v8) scale = std::max(scale, v.cwiseAbs().maxCoeff());
    for (int k = 0; k < 8; ++k) {
      rs.comp[k].resize(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) rs.comp[k][i] = v8[i][k] / scale;
    }
    return angular::apply_dirac_operator(rs, pf).max_coeff;
  });

  // ---- wavefunctions --------------------------------------------------------
  add("states_factorization", 1e-12, [](Ctx& c) {
    double worst = 0.0;
    for (auto [tj, tm, delta, mu] : {std::array{2, 0, 1, 1}, {4, -2, -1, -1}}) {
      const cd A = c.crand();
      const auto a = eigen_ansatz(c, tj, tm, delta, A, mu);
      worst = std::max(worst, states::factorize(a, delta, mu, std::exp(cd(0, 1) * A))
                                  .reconstruction_error);
    }
    const cd A(0, 1);
    angular::DoubletAnsatz a0 = eigen_ansatz(c, 0, 0, -1, A);
    worst = std::max(worst,
                     states::factorize_j0(a0, -1, std::exp(cd(0, 1) * A))
                         .reconstruction_error);
    return worst;
  });

  add("states_cartesian_decomposition", 1e-11, [](Ctx& c) {
    double worst = 0.0;
    for (auto [tj, tm, delta] : {std::array{2, 2, 1}, {4, -2, -1}, {6, 0, 1}}) {
      const cd A = c.crand();
      const auto a = eigen_ansatz(c, tj, tm, delta, A);
      const auto tab = states::decompose_cartesian(a, std::exp(cd(0, 1) * A), delta);
      const auto sc = states::to_gauge(angular::section_from_ansatz(a),
                                       gauge::IsoGauge::Schwinger,
                                       gauge::IsoGauge::Cartesian);
      for (double th : {0.5, 1.5, 2.4})
        for (double ph : {0.8, 3.0})
          worst = std::max(worst, (tab.evaluate(th, ph) -
                                   algebra::Vec8c(sc.value(th, ph)))
                                      .cwiseAbs()
                                      .maxCoeff());
    }
    return worst;
  });

  add("states_composite_sigma", 1e-10, [](Ctx& c) {
    double worst = 0.0;
    for (auto [tj, tm, delta] : {std::array{2, 0, 1}, {4, 2, -1}}) {
      const cd A = c.crand();
      const auto a = eigen_ansatz(c, tj, tm, delta, A, +1);
      const auto cs = states::cartesian_doublet_sigma(a, std::exp(cd(0, 1) * A), delta);
      const auto sc = states::to_gauge(angular::section_from_ansatz(a),
                                       gauge::IsoGauge::Schwinger,
                                       gauge::IsoGauge::Cartesian);
      const auto pp = states::to_pauli_cartesian(sc);
      for (double th : {0.7, 2.1})
        for (double ph : {0.4, 2.8}) {
          worst = std::max(worst, (cs.evaluate(true, th, ph) -
                                   Eigen::Vector4cd(pp.top.value(th, ph)))
                                      .cwiseAbs()
                                      .maxCoeff());
          worst = std::max(worst, (cs.evaluate(false, th, ph) -
                                   Eigen::Vector4cd(pp.bottom.value(th, ph)))
                                      .cwiseAbs()
                                      .maxCoeff());
        }
    }
    return worst;
  });

  add("states_single_valuedness", 1e-3, [](Ctx&) {
    using states::WindingReport;
    const HalfInt half(1);
    const auto fr = states::build_free_parity(half, half, +1, 0.8, cd(0.3, 0.4));
    const auto pf = states::to_pauli_cartesian(states::section_from_abelian(fr));
    auto rep = states::single_valuedness_check(pf.top, wigner::Endpoint::theta_zero);
    if (rep.kind != WindingReport::Kind::single_valued) return 1.0;
    const auto mono = states::build_abelian_minimal(half, HalfInt(0), 1.0, 0.5);
    const auto pm = states::to_pauli_cartesian(states::section_from_abelian(mono));
    rep = states::single_valuedness_check(pm.top, wigner::Endpoint::theta_zero);
    if (rep.kind != WindingReport::Kind::phase_winding) return 1.0;
    return std::abs(rep.winding + 0.5);
  });

  add("states_gauge_roundtrip", 1e-14, [](Ctx& c) {
    const auto a = eigen_ansatz(c, 2, 0, +1, cd(0.3, 0.2));
    const auto s = angular::section_from_ansatz(a);
    const auto back = states::to_gauge(
        states::to_gauge(s, gauge::IsoGauge::Schwinger, gauge::IsoGauge::Cartesian),
        gauge::IsoGauge::Cartesian, gauge::IsoGauge::Schwinger);
    double worst = 0.0;
    for (double th : {0.5, 1.7})
      for (double ph : {0.9, 4.0})
        worst = std::max(worst,
                         (back.value(th, ph) - s.value(th, ph)).cwiseAbs().maxCoeff());
    return worst;
  });

  // ---- selection_rules ------------------------------------------------------
  add("selection_classification", 0.0, [](Ctx&) {
    using selection::Omega;
    if (selection::classify(selection::observable_identity(), 0.0).omega !=
        Omega::plus)
      return 1.0;
    for (int ax : {0, 1, 2})
      if (selection::classify(selection::observable_position(ax), 0.0).omega !=
          Omega::minus)
        return 1.0;
    if (selection::classify(selection::observable_position(2), cd(0, 0.5)).omega !=
        Omega::indefinite)
      return 1.0;
    if (selection::classify(selection::observable_offdiag_sigma1_gamma0(), 0.0)
            .omega != Omega::plus)
      return 1.0;
    if (selection::classify(selection::observable_offdiag_sigma1_gamma0(),
                            cd(M_PI_4, 0))
            .omega != Omega::indefinite)
      return 1.0;
    return 0.0;
  });

  add("selection_x_expectation_zero", 1e-8, [](Ctx&) {
    selection::QuadratureSpec q;
    q.ntheta = 48;
    q.nphi = 64;
    q.rgrid.resize(41);
    for (std::size_t i = 0; i < q.rgrid.size(); ++i) q.rgrid[i] = 0.4 + 0.09 * i;
    selection::StateSpec s;
    s.j = HalfInt::whole(1);
    s.m = HalfInt::whole(0);
    s.delta = +1;
    s.mu = +1;
    s.A = 0.6;
    s.radial.f1 = [](double r) { return std::exp(-0.7 * (r - 1.4) * (r - 1.4)); };
    s.radial.f2 = [](double r) { return r * std::exp(-0.9 * (r - 1.1) * (r - 1.1)); };
    double worst = 0.0;
    for (int ax : {0, 1, 2})
      worst = std::max(worst,
                       std::abs(selection::matrix_element(
                                    s, selection::observable_position(ax), s, q)
                                    .total));
    return worst;
  });

  add("selection_half_space_folding", 1e-8, [](Ctx&) {
    selection::QuadratureSpec q;
    q.ntheta = 48;
    q.nphi = 64;
    q.rgrid.resize(41);
    for (std::size_t i = 0; i < q.rgrid.size(); ++i) q.rgrid[i] = 0.4 + 0.09 * i;
    selection::StateSpec bra, ket;
    bra.j = ket.j = HalfInt::whole(1);
    bra.m = ket.m = HalfInt::whole(1);
    bra.delta = +1;
    ket.delta = -1;
    bra.mu = ket.mu = +1;
    bra.A = ket.A = 0.0;
    bra.radial.f1 = ket.radial.f1 = [](double r) {
      return std::exp(-0.7 * (r - 1.4) * (r - 1.4));
    };
    bra.radial.f2 = ket.radial.f2 = [](double r) {
      return r * std::exp(-0.9 * (r - 1.1) * (r - 1.1));
    };
    return selection::half_space_folding(bra, selection::observable_position(2), ket,
                                         selection::Omega::minus, q)
        .residual();
  });

  add("selection_abelian_control", 1e-12, [](Ctx&) {
    const auto d = selection::abelian_no_rule_demo(HalfInt(1), HalfInt::whole(1),
                                                   HalfInt::whole(0), +1);
    if (d.best_same_function_fit < 1e-2) return 1.0;
    return std::max(d.charge_flip_residual, d.eg_zero_residual);
  });

  return reg;
}

}  // namespace

std::vector<std::string> property_names() {
  std::vector<std::string> names;
  for (const auto& e : registry()) names.push_back(e.name);
  return names;
}

std::vector<PropertyResult> run_all(const Options& opt,
                                    const std::vector<std::string>& only) {
  std::vector<Entry> entries;
  for (const auto& e : registry()) {
    if (!only.empty() &&
        std::find(only.begin(), only.end(), e.name) == only.end())
      continue;
    entries.push_back(e);
  }
  std::vector<PropertyResult> out(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next.fetch_add(1); i < entries.size();
         i = next.fetch_add(1)) {
      const Entry& e = entries[i];
      Ctx ctx{std::mt19937_64(opt.seed), &opt};
      PropertyResult r;
      r.name = e.name;
      r.tolerance = e.tol;
      if (const auto it = opt.tolerance_overrides.find(e.name);
          it != opt.tolerance_overrides.end())
        r.tolerance = it->second;
      try {
        r.residual = e.run(ctx);
        r.passed = r.residual <= std::max(r.tolerance, 0.0);
      } catch (const std::exception& ex) {
        r.residual = std::numeric_limits<double>::infinity();
        r.passed = false;
        r.detail = ex.what();
      }
      out[i] = std::move(r);
    }
  };
  const int nthreads = std::max(1, std::min<int>(opt.threads, int(entries.size())));
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace isochiral::verify
