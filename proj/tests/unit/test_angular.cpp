#include <cmath>
#include <random>

#include "doctest.h"
#include "isochiral/angular.hpp"
#include "isochiral/discrete.hpp"
#include "isochiral/verify.hpp"
#include "isochiral/wigner.hpp"

using namespace isochiral;
using namespace isochiral::angular;
using algebra::cd;

namespace {
std::mt19937_64 rng(4242);
cd crand() {
  std::uniform_real_distribution<double> u(-1, 1);
  return {u(rng), u(rng)};
}
DoubletAnsatz random_ansatz(int tj, int tm) {
  DoubletAnsatz a;
  a.j = HalfInt(tj);
  a.m = HalfInt(tm);
  for (int k = 0; k < 4; ++k) {
    a.f[k] = crand();
    a.g[k] = crand();
  }
  if (tj == 0) {
    a.f[0] = a.f[2] = a.g[1] = a.g[3] = 0.0;
  }
  return a;
}

// smooth scalar building block with analytic derivatives
struct Smooth {
  double a, b;
  int n;
  cd value(double th, double ph) const {
    return std::pow(std::sin(th), 2) * std::cos(a * th) *
           std::exp(cd(0, n * ph)) * (b + std::cos(th));
  }
  cd dth(double th, double ph) const {
    const double s = std::sin(th), c = std::cos(th);
    const double f1 = s * s * std::cos(a * th) * (b + c);
    const double d1 = 2 * s * c * std::cos(a * th) * (b + c) -
                      a * s * s * std::sin(a * th) * (b + c) -
                      s * s * s * std::cos(a * th);
    (void)f1;
    return d1 * std::exp(cd(0, n * ph));
  }
  cd dph(double th, double ph) const { return cd(0, n) * value(th, ph); }
};

Section smooth_section(int dim, unsigned seed) {
  std::mt19937_64 local(seed);
  std::uniform_real_distribution<double> u(0.5, 2.0);
  std::uniform_int_distribution<int> ni(-2, 2);
  std::vector<Smooth> parts(dim);
  for (auto& p : parts) p = {u(local), u(local), ni(local)};
  Section s;
  s.dim = dim;
  s.value = [parts, dim](double th, double ph) {
    Eigen::VectorXcd v(dim);
    for (int k = 0; k < dim; ++k) v[k] = parts[k].value(th, ph);
    return v;
  };
  s.dth = [parts, dim](double th, double ph) {
    Eigen::VectorXcd v(dim);
    for (int k = 0; k < dim; ++k) v[k] = parts[k].dth(th, ph);
    return v;
  };
  s.dph = [parts, dim](double th, double ph) {
    Eigen::VectorXcd v(dim);
    for (int k = 0; k < dim; ++k) v[k] = parts[k].dph(th, ph);
    return v;
  };
  return s;
}
}  // namespace

TEST_CASE("apply_sigma reproduces the printed pattern") {
  DoubletAnsatz a;
  a.j = HalfInt::whole(1);
  a.m = HalfInt::whole(0);
  a.f = {1.0, 0.0, 0.0, 0.0};
  const DoubletAnsatz out = apply_sigma(a);
  const double nu = std::sqrt(2.0);
  CHECK(std::abs(out.f[0]) < 1e-15);
  CHECK(std::abs(out.f[1]) < 1e-15);
  CHECK(std::abs(out.f[2]) < 1e-15);
  CHECK(std::abs(out.f[3] - cd(0, -nu)) < 1e-15);  // -i f1 nu on comp 4 (D_0 row)
  // j = 0 annihilates
  DoubletAnsatz z = random_ansatz(0, 0);
  CHECK(apply_sigma(z).norm() == 0.0);
}

TEST_CASE("apply_sigma agrees with the differential form of the operator") {
  for (int tj : {2, 4, 6}) {
    const DoubletAnsatz a = random_ansatz(tj, tj >= 2 ? 2 : 0);
    const Section s = section_from_ansatz(a);
    const Section ds = apply_sigma_differential(s);
    const DoubletAnsatz exact = apply_sigma(a);
    for (double th : {0.4, 1.2, 2.0, 2.8})
      for (double ph : {0.1, 2.2, 4.0}) {
        const Eigen::VectorXcd lhs = ds.value(th, ph);
        const Vec8c rhs = exact.evaluate(th, ph);
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-8);
      }
  }
}

TEST_CASE("mixing pattern equals the tensor matrix action") {
  const algebra::Mat8c mix = mixing_matrix();
  for (int tj : {0, 2, 4}) {
    const DoubletAnsatz a = random_ansatz(tj, 0);
    const double c = 1.7;
    const DoubletAnsatz out = apply_mixing(a, c);
    for (double th : {0.5, 1.4, 2.3})
      for (double ph : {0.7, 3.1}) {
        const Vec8c lhs = out.evaluate(th, ph);
        const Vec8c rhs = c * (mix * a.evaluate(th, ph));
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-13);
      }
  }
}

TEST_CASE("one-sided mixing input produces the printed zero slots") {
  DoubletAnsatz a = random_ansatz(2, 0);
  a.g = {0.0, 0.0, 0.0, 0.0};
  const DoubletAnsatz out = apply_mixing(a, 2.0);
  CHECK(std::abs(out.f[0]) + std::abs(out.f[1]) + std::abs(out.f[2]) +
            std::abs(out.f[3]) ==
        0.0);
  CHECK(std::abs(out.g[1]) + std::abs(out.g[3]) == 0.0);
  CHECK(std::abs(out.g[0]) > 0.0);
  CHECK(std::abs(out.g[2]) > 0.0);
}

TEST_CASE("J3 and J^2 eigenvalues on the ansatz") {
  for (auto [tj, tm] : {std::pair{2, 2}, {4, -2}, {6, 0}}) {
    const DoubletAnsatz a = random_ansatz(tj, tm);
    const Section s = section_from_ansatz(a);
    const MomentumSpec spec = MomentumSpec::doublet();
    const Section j3 = apply_J(spec, 3, s);
    const Section jsq = apply_Jsq(spec, s);
    const double jv = 0.5 * tj, mv = 0.5 * tm;
    for (double th : {0.6, 1.5, 2.4})
      for (double ph : {0.2, 2.9}) {
        const Eigen::VectorXcd base = s.value(th, ph);
        CHECK((j3.value(th, ph) - mv * base).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((jsq.value(th, ph) - jv * (jv + 1.0) * base).cwiseAbs().maxCoeff() <
              1e-8);
      }
  }
}

TEST_CASE("exact ladder coefficient matches the differential raising") {
  const DoubletAnsatz a = random_ansatz(4, 0);
  const Section s = section_from_ansatz(a);
  const MomentumSpec spec = MomentumSpec::doublet();
  // J+ = J1 + i J2 applied to the m=0 ansatz lands on the m=1 ansatz
  const Section j1 = apply_J(spec, 1, s), j2 = apply_J(spec, 2, s);
  DoubletAnsatz target = a;
  target.m = HalfInt::whole(1);
  const double coeff = ansatz_ladder_coefficient(a.j, a.m, +1);
  for (double th : {0.7, 1.9})
    for (double ph : {0.4, 3.3}) {
      const Eigen::VectorXcd lhs =
          j1.value(th, ph) + cd(0, 1) * j2.value(th, ph);
      const Vec8c rhs = coeff * target.evaluate(th, ph);
      CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-9);
    }
}

TEST_CASE("su(2) commutators for all three momentum variants") {
  struct Probe {
    MomentumSpec spec;
    int dim;
  };
  std::vector<Probe> probes;
  probes.push_back({MomentumSpec::scalar(0.5), 1});
  probes.push_back({MomentumSpec::abelian(HalfInt(1)), 4});
  probes.push_back({MomentumSpec::doublet(), 8});
  int seed = 11;
  for (const auto& p : probes) {
    const Section s = smooth_section(p.dim, seed += 3);
    for (auto [a, b, c] : {std::array{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}) {
      const Section jab = apply_J(p.spec, a, apply_J(p.spec, b, s));
      const Section jba = apply_J(p.spec, b, apply_J(p.spec, a, s));
      const Section jc = apply_J(p.spec, c, s);
      for (double th : {0.7, 1.3, 2.2})
        for (double ph : {0.5, 2.6, 4.8}) {
          const Eigen::VectorXcd lhs =
              jab.value(th, ph) - jba.value(th, ph) -
              cd(0, 1) * jc.value(th, ph);
          CHECK(lhs.cwiseAbs().maxCoeff() < 1e-8);
        }
    }
  }
}

TEST_CASE("apply_J agrees with pure finite differences") {
  // strip the analytic derivatives; the FD fallback must agree
  const Section s = smooth_section(4, 99);
  Section raw;
  raw.dim = 4;
  raw.value = s.value;
  const MomentumSpec spec = MomentumSpec::abelian(HalfInt(1));
  for (int compo : {1, 2, 3}) {
    const Section exact = apply_J(spec, compo, s);
    const Section fd = apply_J(spec, compo, raw);
    for (double th : {0.8, 1.9})
      for (double ph : {1.1, 4.2})
        CHECK((exact.value(th, ph) - fd.value(th, ph)).cwiseAbs().maxCoeff() < 1e-9);
  }
}

TEST_CASE("K operator eigenstructure") {
  // j=1, mu=+1: eigenvalue -sqrt(2)
  DoubletAnsatz a;
  a.j = HalfInt::whole(1);
  a.m = HalfInt::whole(1);
  const cd f1 = crand(), f2 = crand(), g1 = crand(), g2 = crand();
  for (int mu : {+1, -1}) {
    a.f = {f1, f2, double(mu) * f2, double(mu) * f1};
    a.g = {g1, g2, double(mu) * g2, double(mu) * g1};
    const KResult kr = apply_K(a);
    CHECK(kr.linkage_residual < 1e-15);
    const double lam = k_eigenvalue(a.j, mu);
    CHECK(lam == doctest::Approx(-mu * std::sqrt(2.0)).epsilon(1e-14));
    CHECK(max_coeff_diff(kr.section, lam * a) < 1e-13);
  }
  // j=2, mu=-1 -> eigenvalue +sqrt(6)
  CHECK(k_eigenvalue(HalfInt::whole(2), -1) ==
        doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
  // generic input reports a nonzero linkage residual
  const DoubletAnsatz gen = random_ansatz(2, 0);
  CHECK(apply_K(gen).linkage_residual > 1e-3);
}

TEST_CASE("<s, K s> is real on eigen-inputs") {
  DoubletAnsatz a;
  a.j = HalfInt::whole(2);
  a.m = HalfInt::whole(1);
  const cd f1 = crand(), f2 = crand();
  const int mu = +1;
  a.f = {f1, f2, double(mu) * f2, double(mu) * f1};
  a.g = {0.3 * f1, 0.9 * f2, mu * 0.9 * f2, mu * 0.3 * f1};
  const KResult kr = apply_K(a);
  // coefficient-space inner product weighted by the common D-norms
  cd ip = 0.0;
  for (int k = 0; k < 4; ++k)
    ip += std::conj(a.f[k]) * kr.section.f[k] + std::conj(a.g[k]) * kr.section.g[k];
  CHECK(std::abs(ip.imag()) < 1e-13);
}

TEST_CASE("K and N_A commute on the eigen family") {
  const cd A(0.4, -0.7);
  DoubletAnsatz a;
  a.j = HalfInt::whole(2);
  a.m = HalfInt::whole(-1);
  const cd f1 = crand(), f2 = crand();
  const int mu = -1, delta = +1;
  const cd link = double(delta) * std::exp(cd(0, 1) * A);
  a.f = {f1, f2, double(mu) * f2, double(mu) * f1};
  a.g = {link * a.f[3], link * a.f[2], link * a.f[1], link * a.f[0]};
  const DoubletAnsatz kn = apply_K(discrete::apply_n_ansatz(A, a)).section;
  const DoubletAnsatz nk = discrete::apply_n_ansatz(A, apply_K(a).section);
  CHECK(max_coeff_diff(kn, nk) < 1e-10);
}

TEST_CASE("the angular Hamiltonian blocks preserve the (j, m) eigenvalues") {
  // Sigma and the mixing term map the separated ansatz to itself, so J^2 and J3
  // eigenvalues survive the Hamiltonian's angular action
  const DoubletAnsatz a = random_ansatz(4, 2);
  const MomentumSpec spec = MomentumSpec::doublet();
  for (const DoubletAnsatz& out : {apply_sigma(a), apply_mixing(a, 1.3)}) {
    const Section s = section_from_ansatz(out);
    const Section j3 = apply_J(spec, 3, s);
    const Section jsq = apply_Jsq(spec, s);
    for (double th : {0.7, 1.9})
      for (double ph : {0.5, 3.6}) {
        const Eigen::VectorXcd base = s.value(th, ph);
        CHECK((j3.value(th, ph) - 1.0 * base).cwiseAbs().maxCoeff() < 1e-10);
        CHECK((jsq.value(th, ph) - 6.0 * base).cwiseAbs().maxCoeff() < 1e-8);
      }
  }
}

TEST_CASE("the verify registry census stays above the floor") {
  CHECK(isochiral::verify::property_names().size() >= 25);
}
