#include <cmath>
#include <random>

#include "doctest.h"
#include "isochiral/quadrature.hpp"
#include "isochiral/wigner.hpp"

using namespace isochiral;
using namespace isochiral::wigner;
using isochiral::HalfInt;

namespace {
const HalfInt h12(1), h1 = HalfInt::whole(1), h32(3), h0(0);
std::mt19937_64 rng(20250811);
double urand(double a, double b) {
  return std::uniform_real_distribution<double>(a, b)(rng);
}
HalfInt rand_j(int twice_max) {
  return HalfInt(std::uniform_int_distribution<int>(0, twice_max)(rng));
}
HalfInt rand_proj(HalfInt j) {
  const int n = std::uniform_int_distribution<int>(0, j.twice())(rng);
  return HalfInt(-j.twice() + 2 * n);
}
}  // namespace

TEST_CASE("small_d scalar and spin-1/2 values") {
  CHECK(small_d({h0, h0, h0}, 1.3) == doctest::Approx(1.0).epsilon(1e-15));
  // d^{1/2}_{1/2,1/2}(pi/2) = cos(pi/4)
  CHECK(small_d({h12, h12, h12}, M_PI_2) ==
        doctest::Approx(std::cos(M_PI_2 / 2)).epsilon(1e-14));
  CHECK(small_d({h12, h12, -h12}, 0.7) == doctest::Approx(-std::sin(0.35)).epsilon(1e-14));
  CHECK(small_d({h12, -h12, h12}, 0.7) == doctest::Approx(std::sin(0.35)).epsilon(1e-14));
}

TEST_CASE("small_d identity rotation") {
  for (int tj = 0; tj <= 7; ++tj) {
    const HalfInt j(tj);
    for (int tm = -tj; tm <= tj; tm += 2)
      for (int tmp = -tj; tmp <= tj; tmp += 2) {
        const double v = small_d({j, HalfInt(tm), HalfInt(tmp)}, 0.0);
        if (tm == tmp)
          CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
        else
          CHECK(std::abs(v) < 1e-14);
      }
  }
}

TEST_CASE("small_d spin-1 explicit matrix") {
  const double b = 1.234;
  CHECK(small_d({h1, h1, h1}, b) == doctest::Approx(0.5 * (1 + std::cos(b))).epsilon(1e-14));
  CHECK(small_d({h1, h1, h0}, b) == doctest::Approx(-std::sin(b) / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(small_d({h1, h0, h1}, b) == doctest::Approx(std::sin(b) / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(small_d({h1, h0, h0}, b) == doctest::Approx(std::cos(b)).epsilon(1e-14));
  CHECK(small_d({h1, h1, -h1}, b) == doctest::Approx(0.5 * (1 - std::cos(b))).epsilon(1e-14));
}

TEST_CASE("analytic beta-derivatives match finite differences") {
  for (int trial = 0; trial < 40; ++trial) {
    const HalfInt j = rand_j(7);
    const WignerIndex idx{j, rand_proj(j), rand_proj(j)};
    const double b = urand(0.1, M_PI - 0.1), h = 1e-5;
    const double fd =
        (8 * (small_d(idx, b + h) - small_d(idx, b - h)) -
         (small_d(idx, b + 2 * h) - small_d(idx, b - 2 * h))) /
        (12 * h);
    CHECK(small_d_dbeta(idx, b) == doctest::Approx(fd).epsilon(1e-8));
    const double fd2 =
        (8 * (small_d_dbeta(idx, b + h) - small_d_dbeta(idx, b - h)) -
         (small_d_dbeta(idx, b + 2 * h) - small_d_dbeta(idx, b - 2 * h))) /
        (12 * h);
    CHECK(small_d_d2beta(idx, b) == doctest::Approx(fd2).epsilon(1e-7));
  }
}

TEST_CASE("big_D phases at the poles reproduce the table rows") {
  const double phi = 0.83;
  // j=1/2, m=+1/2, m'=+1/2 at theta=0 -> e^{-i phi/2}
  CHECK(std::abs(big_D({h12, h12, h12}, {phi, 0.0, 0.0}) -
                 std::exp(cd(0, -0.5 * phi))) < 1e-14);
  // j=1, m=-1, m'=+1 at theta=pi -> e^{+i phi} (sign +1 here)
  CHECK(std::abs(big_D({h1, -h1, h1}, {phi, M_PI, 0.0}) -
                 std::exp(cd(0, phi))) < 1e-14);
  // j=3/2, m=+3/2, m'=+3/2 at theta=0 -> e^{-i 3 phi/2}
  CHECK(std::abs(big_D({h32, h32, h32}, {phi, 0.0, 0.0}) -
                 std::exp(cd(0, -1.5 * phi))) < 1e-14);
}

TEST_CASE("invalid index is rejected") {
  CHECK_THROWS_AS(small_d({h12, h32, h12}, 0.3), std::domain_error);
  CHECK_THROWS_AS(small_d({h1, h12, h0}, 0.3), std::domain_error);  // m not integer-spaced
}

TEST_CASE("boundary_value matches the closed-form limits") {
  // spec examples
  auto bv = boundary_value({h12, -h12, -h12}, Endpoint::theta_zero);
  CHECK(!bv.is_zero);
  CHECK(std::abs(bv.value(0.7) - std::exp(cd(0, 0.5 * 0.7))) < 1e-15);
  bv = boundary_value({HalfInt::whole(2), -HalfInt::whole(2), h1}, Endpoint::theta_zero);
  CHECK(bv.is_zero);
  bv = boundary_value({HalfInt(5), HalfInt(5), -h32}, Endpoint::theta_pi);
  CHECK(bv.is_zero);
  // limits agree with small_d approached numerically
  for (int trial = 0; trial < 30; ++trial) {
    const HalfInt j = rand_j(7);
    const WignerIndex idx{j, rand_proj(j), rand_proj(j)};
    const double phi = urand(0, 2 * M_PI);
    for (auto ep : {Endpoint::theta_zero, Endpoint::theta_pi}) {
      const double th = (ep == Endpoint::theta_zero) ? 1e-7 : M_PI - 1e-7;
      const cd lim = boundary_value(idx, ep).value(phi);
      const cd near = big_D(idx, {phi, th, 0.0});
      CHECK(std::abs(lim - near) < 1e-5);
    }
  }
}

TEST_CASE("master recursions hold over random samples, j <= 7/2") {
  for (int trial = 0; trial < 200; ++trial) {
    const HalfInt j = rand_j(7);
    const WignerIndex idx{j, rand_proj(j), rand_proj(j)};
    const EulerAngles a{urand(0, 2 * M_PI), urand(0.05, M_PI - 0.05), urand(0, 2 * M_PI)};
    CHECK(recursion_residual_derivative(idx, a) < 1e-12);
    CHECK(recursion_residual_weight(idx, a) < 1e-12);
  }
}

TEST_CASE("weighted recursion rejects the poles") {
  CHECK_THROWS_AS(recursion_residual_weight({h1, h0, h0}, {0.0, 0.0, 0.0}),
                  std::domain_error);
}

TEST_CASE("edge projections drop the out-of-range ladder term") {
  // j=1/2, m'=+1/2: raising coefficient sqrt((j-m')(j+m'+1)) = 0
  const EulerAngles a{0.4, 0.9, 1.7};
  CHECK(recursion_residual_derivative({h12, h12, h12}, a) < 1e-13);
  // j=3/2, m'=-3/2 lower edge in the weighted relation
  CHECK(recursion_residual_weight({h32, h12, -h32}, {0.0, 2.0, 0.0}) < 1e-12);
}

TEST_CASE("the m' = -1, 0, +1 rows specialize the master recursions") {
  // D_sigma = D^j_{-m,sigma}(phi,theta,0); nu = sqrt(j(j+1)), om = sqrt((j-1)(j+2))
  for (const int tj : {2, 4, 6}) {
    const HalfInt j(tj);
    const double jv = j.value();
    const double nu = std::sqrt(jv * (jv + 1.0)), om = std::sqrt((jv - 1.0) * (jv + 2.0));
    for (int tm = -tj; tm <= tj; tm += 2) {
      const HalfInt m(tm);
      const double mv = m.value();
      const double th = urand(0.2, M_PI - 0.2), ph = urand(0, 2 * M_PI);
      auto Ds = [&](int tsigma) -> cd {
        if (std::abs(tsigma) > tj) return 0.0;
        return D_state(j, m, HalfInt(tsigma), th, ph);
      };
      auto Dth = [&](int tsigma) { return D_state_dtheta(j, m, HalfInt(tsigma), th, ph); };
      const double st = std::sin(th), ct = std::cos(th);
      CHECK(std::abs(Dth(-2) - 0.5 * (om * Ds(-4) - nu * Ds(0))) < 1e-12);
      CHECK(std::abs((mv - ct) / st * Ds(-2) - 0.5 * (om * Ds(-4) + nu * Ds(0))) < 1e-12);
      CHECK(std::abs(Dth(0) - 0.5 * (nu * Ds(-2) - nu * Ds(2))) < 1e-12);
      CHECK(std::abs(mv / st * Ds(0) - 0.5 * nu * (Ds(-2) + Ds(2))) < 1e-12);
      CHECK(std::abs(Dth(2) - 0.5 * (nu * Ds(0) - om * Ds(4))) < 1e-12);
      CHECK(std::abs((mv + ct) / st * Ds(2) - 0.5 * (nu * Ds(0) + om * Ds(4))) < 1e-12);
    }
  }
}

TEST_CASE("half-angle couplings, both branches") {
  // spec example j=1/2, m=m'=0
  const EulerAngles a0{0.0, 0.9, 0.0};
  CHECK(half_angle_coupling({h12, h0, h0}, a0, Branch::cos_branch) < 1e-13);
  CHECK(half_angle_coupling({h12, h0, h0}, a0, Branch::sin_branch) < 1e-13);
  // identity rotation reduces to the Kronecker combination
  CHECK(half_angle_coupling({h12, h0, h0}, {0.3, 0.0, 0.1}, Branch::cos_branch) < 1e-14);
  for (int trial = 0; trial < 60; ++trial) {
    const HalfInt j = rand_j(7);
    if (j == h0) continue;
    // the coupling's (m, m') sit on the lattice shifted by 1/2 from j
    const HalfInt m = rand_proj(j - h12), mp = rand_proj(j - h12);
    const EulerAngles a{urand(0, 2 * M_PI), urand(0, M_PI), urand(0, 2 * M_PI)};
    CHECK(half_angle_coupling({j, m, mp}, a, Branch::cos_branch) < 1e-12);
    CHECK(half_angle_coupling({j, m, mp}, a, Branch::sin_branch) < 1e-12);
  }
}

TEST_CASE("half_angle_expand reproduces the product pointwise") {
  for (int trial = 0; trial < 60; ++trial) {
    const HalfInt j = rand_j(6);
    const HalfInt u = rand_proj(j), v = rand_proj(j);
    const double th = urand(0.1, M_PI - 0.1), ph = urand(0, 2 * M_PI);
    for (auto kind : {Branch::cos_branch, Branch::sin_branch}) {
      for (int sign : {+1, -1}) {
        const auto [lo, hi] = half_angle_expand(kind, sign, j, u, v);
        const double trig = (kind == Branch::cos_branch) ? std::cos(0.5 * th)
                                                         : std::sin(0.5 * th);
        const cd lhs = trig * std::exp(cd(0, 0.5 * sign * ph)) *
                       big_D({j, u, v}, {ph, th, 0.0});
        cd rhs = 0.0;
        for (const auto& t : {lo, hi})
          if (t.coeff != 0.0) rhs += t.coeff * big_D({t.j, t.u, t.v}, {ph, th, 0.0});
        CHECK(std::abs(lhs - rhs) < 1e-13);
      }
    }
  }
}

TEST_CASE("conjugation symmetry and reflection identity") {
  for (int trial = 0; trial < 40; ++trial) {
    const HalfInt j = rand_j(7);
    const HalfInt m = rand_proj(j), mp = rand_proj(j);
    const double th = urand(0.1, M_PI - 0.1), ph = urand(0, 2 * M_PI);
    const cd lhs = std::conj(big_D({j, m, mp}, {ph, th, 0.0}));
    CHECK(std::abs(lhs - conj_symmetry_rhs({j, m, mp}, th, ph)) < 1e-13);
    // D^j_{-m,sigma}(phi+pi, pi-theta, 0) = i^{2j} D^j_{-m,-sigma}(phi,theta,0)
    const cd refl = D_state(j, -m, mp, M_PI - th, ph + M_PI);
    CHECK(std::abs(refl - reflection_phase(j) * D_state(j, -m, -mp, th, ph)) < 1e-13);
  }
}

TEST_CASE("unitarity: sum_mprime |D|^2 = 1") {
  for (int tj = 0; tj <= 7; ++tj) {
    const HalfInt j(tj);
    for (int trial = 0; trial < 4; ++trial) {
      const HalfInt m = rand_proj(j);
      const EulerAngles a{urand(0, 2 * M_PI), urand(0, M_PI), urand(0, 2 * M_PI)};
      double sum = 0.0;
      for (int tmp = -tj; tmp <= tj; tmp += 2)
        sum += std::norm(big_D({j, m, HalfInt(tmp)}, a));
      CHECK(std::abs(sum - 1.0) < 1e-12);
    }
  }
}

TEST_CASE("orthogonality on the sphere by quadrature") {
  const auto sph = quad::sphere_rule(64, 128);
  for (auto [tj1, tj2] : {std::pair{1, 1}, {1, 3}, {2, 2}, {2, 4}, {3, 3}, {0, 2}}) {
    const HalfInt j1(tj1), j2(tj2);
    const HalfInt m = HalfInt(std::min(tj1, tj2) % 2 ? 1 : 0);
    const HalfInt mp = m;
    cd acc = 0.0;
    for (std::size_t it = 0; it < sph.theta.size(); ++it)
      for (std::size_t ip = 0; ip < sph.phi.size(); ++ip) {
        const EulerAngles a{sph.phi[ip], sph.theta[it], 0.0};
        acc += sph.wtheta[it] * sph.wphi * std::conj(big_D({j1, m, mp}, a)) *
               big_D({j2, m, mp}, a);
      }
    const double expect = (tj1 == tj2) ? 4.0 * M_PI / (tj1 + 1.0) : 0.0;
    CHECK(std::abs(acc - expect) < 1e-8);
  }
}
