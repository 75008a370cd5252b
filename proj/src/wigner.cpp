#include "isochiral/wigner.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace isochiral::wigner {

namespace {

constexpr int kFactMax = 170;

const std::array<double, kFactMax + 1>& factorial_table() {
  static const auto table = [] {
    std::array<double, kFactMax + 1> t{};
    t[0] = 1.0;
    for (int n = 1; n <= kFactMax; ++n) t[n] = t[n - 1] * n;
    return t;
  }();
  return table;
}

double fact(int n) {
  if (n < 0) throw std::domain_error("factorial of negative integer");
  if (n <= kFactMax) return factorial_table()[n];
  return std::exp(std::lgamma(double(n) + 1.0));
}

// x^n with 0^0 = 1; n is never negative where the coefficient is nonzero
double pow_int(double x, int n) {
  if (n == 0) return 1.0;
  if (n < 0) return std::pow(x, n);
  double r = 1.0, b = x;
  for (int e = n; e > 0; e >>= 1) {
    if (e & 1) r *= b;
    b *= b;
  }
  return r;
}

struct DTerm {
  double amp;  // signed amplitude
  int p, q;    // cos^(p/...) exponents: term = amp * c^p * s^q
};

// Terms of the Wigner sum for d^j_{m,m'}; exponents p,q are integers.
// d = sum_k (-1)^k sqrt((j+m)!(j-m)!(j+m')!(j-m')!)
//       / [k!(j+m-k)!(j-m'-k)!(m'-m+k)!] c^{2j+m-m'-2k} s^{m'-m+2k}
void d_terms(const WignerIndex& idx, std::vector<DTerm>& out) {
  out.clear();
  const int tj = idx.j.twice(), tm = idx.m.twice(), tmp = idx.mprime.twice();
  const int jpm = (tj + tm) / 2, jmm = (tj - tm) / 2;
  const int jpmp = (tj + tmp) / 2, jmmp = (tj - tmp) / 2;
  const int dmm = (tmp - tm) / 2;  // m' - m
  const double num =
      std::sqrt((fact(jpm) * fact(jmm)) * (fact(jpmp) * fact(jmmp)));
  const int kmin = std::max(0, -dmm);
  const int kmax = std::min(jpm, jmmp);
  for (int k = kmin; k <= kmax; ++k) {
    const double den = fact(k) * fact(jpm - k) * fact(jmmp - k) * fact(dmm + k);
    const double amp = ((k % 2) ? -1.0 : 1.0) * num / den;
    out.push_back({amp, tj - dmm - 2 * k, dmm + 2 * k});
  }
}

}  // namespace

EulerAngles EulerAngles::normalized() const {
  constexpr double twopi = 2.0 * M_PI;
  auto wrap = [](double x) {
    double y = std::fmod(x, twopi);
    return y < 0 ? y + twopi : y;
  };
  double b = std::fmod(beta, twopi);
  if (b < 0) b += twopi;
  double a = alpha, g = gamma;
  if (b > M_PI) {  // (a,b,g) ~ (a+pi, 2pi-b, g+pi)
    b = twopi - b;
    a += M_PI;
    g += M_PI;
  }
  return {wrap(a), b, wrap(g)};
}

double small_d(const WignerIndex& idx, double beta) {
  idx.require_valid();
  const double c = std::cos(0.5 * beta), s = std::sin(0.5 * beta);
  std::vector<DTerm> terms;
  d_terms(idx, terms);
  double sum = 0.0;
  for (const auto& t : terms) sum += t.amp * pow_int(c, t.p) * pow_int(s, t.q);
  return sum;
}

double small_d_dbeta(const WignerIndex& idx, double beta) {
  idx.require_valid();
  const double c = std::cos(0.5 * beta), s = std::sin(0.5 * beta);
  std::vector<DTerm> terms;
  d_terms(idx, terms);
  double sum = 0.0;
  for (const auto& t : terms) {
    double v = 0.0;
    if (t.p > 0) v -= 0.5 * t.p * pow_int(c, t.p - 1) * pow_int(s, t.q + 1);
    if (t.q > 0) v += 0.5 * t.q * pow_int(c, t.p + 1) * pow_int(s, t.q - 1);
    sum += t.amp * v;
  }
  return sum;
}

double small_d_d2beta(const WignerIndex& idx, double beta) {
  idx.require_valid();
  const double c = std::cos(0.5 * beta), s = std::sin(0.5 * beta);
  std::vector<DTerm> terms;
  d_terms(idx, terms);
  double sum = 0.0;
  for (const auto& t : terms) {
    const double p = t.p, q = t.q;
    double v = -0.25 * (p * (q + 1) + q * (p + 1)) * pow_int(c, t.p) * pow_int(s, t.q);
    if (t.p > 1) v += 0.25 * p * (p - 1) * pow_int(c, t.p - 2) * pow_int(s, t.q + 2);
    if (t.q > 1) v += 0.25 * q * (q - 1) * pow_int(c, t.p + 2) * pow_int(s, t.q - 2);
    sum += t.amp * v;
  }
  return sum;
}

cd big_D(const WignerIndex& idx, const EulerAngles& a) {
  const double d = small_d(idx, a.beta);
  const double phase = -(idx.m.value() * a.alpha + idx.mprime.value() * a.gamma);
  return d * std::exp(cd(0.0, phase));
}

cd D_state(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi) {
  const WignerIndex idx{j, -m, sigma};
  return big_D(idx, {phi, theta, 0.0});
}

cd D_state_dtheta(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi) {
  const WignerIndex idx{j, -m, sigma};
  return small_d_dbeta(idx, theta) * std::exp(cd(0.0, m.value() * phi));
}

BoundaryValue boundary_value(const WignerIndex& idx, Endpoint ep) {
  idx.require_valid();
  BoundaryValue bv;
  bv.winding = -idx.m;
  if (ep == Endpoint::theta_zero) {
    if (idx.m == idx.mprime) {
      bv.is_zero = false;
      bv.sign = +1;
    }
  } else {
    if (idx.m == -idx.mprime) {
      bv.is_zero = false;
      const int e = (idx.j - idx.mprime).twice() / 2;  // j - m' integer
      bv.sign = (e % 2 == 0) ? +1 : -1;
    }
  }
  return bv;
}

namespace {
cd D_or_zero(HalfInt j, HalfInt m, HalfInt mp, const EulerAngles& a) {
  if (m.abs() > j || mp.abs() > j) return {0.0, 0.0};
  return big_D({j, m, mp}, a);
}
}  // namespace

double recursion_residual_derivative(const WignerIndex& idx, const EulerAngles& a) {
  idx.require_valid();
  const double jv = idx.j.value(), mpv = idx.mprime.value();
  const cd lhs = small_d_dbeta(idx, a.beta) *
                 std::exp(cd(0.0, -(idx.m.value() * a.alpha + mpv * a.gamma)));
  const HalfInt one = HalfInt::whole(1);
  const cd rhs =
      0.5 * std::sqrt((jv + mpv) * (jv - mpv + 1.0)) * std::exp(cd(0.0, -a.gamma)) *
          D_or_zero(idx.j, idx.m, idx.mprime - one, a) -
      0.5 * std::sqrt((jv - mpv) * (jv + mpv + 1.0)) * std::exp(cd(0.0, +a.gamma)) *
          D_or_zero(idx.j, idx.m, idx.mprime + one, a);
  return std::abs(lhs - rhs);
}

double recursion_residual_weight(const WignerIndex& idx, const EulerAngles& a) {
  idx.require_valid();
  const double sb = std::sin(a.beta);
  if (std::abs(sb) < 1e-12)
    throw std::domain_error("weighted recursion: beta at a pole; use boundary_value");
  const double jv = idx.j.value(), mv = idx.m.value(), mpv = idx.mprime.value();
  const cd lhs = (mv - mpv * std::cos(a.beta)) / sb * big_D(idx, a);
  const HalfInt one = HalfInt::whole(1);
  const cd rhs =
      -0.5 * std::sqrt((jv + mpv) * (jv - mpv + 1.0)) * std::exp(cd(0.0, -a.gamma)) *
          D_or_zero(idx.j, idx.m, idx.mprime - one, a) -
      0.5 * std::sqrt((jv - mpv) * (jv + mpv + 1.0)) * std::exp(cd(0.0, +a.gamma)) *
          D_or_zero(idx.j, idx.m, idx.mprime + one, a);
  return std::abs(lhs - rhs);
}

double half_angle_coupling(const WignerIndex& idx, const EulerAngles& a, Branch br) {
  // idx carries (j, m, m') of the RHS; LHS lives at (j, m+1/2, m'+-1/2).
  const double jv = idx.j.value(), mv = idx.m.value(), mpv = idx.mprime.value();
  const HalfInt half = HalfInt(1);
  const double c = std::cos(0.5 * a.beta), s = std::sin(0.5 * a.beta);
  cd lhs, rhs;
  if (br == Branch::cos_branch) {
    lhs = c * std::exp(cd(0.0, 0.5 * (a.alpha + a.gamma))) *
          D_or_zero(idx.j, idx.m + half, idx.mprime + half, a);
    rhs = (std::sqrt((jv + mv + 0.5) * (jv + mpv + 0.5)) *
               D_or_zero(idx.j - half, idx.m, idx.mprime, a) +
           std::sqrt((jv - mv + 0.5) * (jv - mpv + 0.5)) *
               D_or_zero(idx.j + half, idx.m, idx.mprime, a)) /
          (2.0 * jv + 1.0);
  } else {
    lhs = s * std::exp(cd(0.0, 0.5 * (a.alpha - a.gamma))) *
          D_or_zero(idx.j, idx.m + half, idx.mprime - half, a);
    rhs = (-std::sqrt((jv + mv + 0.5) * (jv - mpv + 0.5)) *
               D_or_zero(idx.j - half, idx.m, idx.mprime, a) +
           std::sqrt((jv - mv + 0.5) * (jv + mpv + 0.5)) *
               D_or_zero(idx.j + half, idx.m, idx.mprime, a)) /
          (2.0 * jv + 1.0);
  }
  return std::abs(lhs - rhs);
}

cd conj_symmetry_rhs(const WignerIndex& idx, double theta, double phi) {
  const int e = (idx.m - idx.mprime).twice() / 2;
  const double sgn = (e % 2 == 0) ? 1.0 : -1.0;
  return sgn * big_D({idx.j, -idx.m, -idx.mprime}, {phi, theta, 0.0});
}

cd reflection_phase(HalfInt j) {
  switch (((j.twice() % 4) + 4) % 4) {  // i^{2j}
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::pair<HalfAngleTerm, HalfAngleTerm> half_angle_expand(
    Branch kind, int sign, HalfInt j, HalfInt u, HalfInt v) {
  const double jv = j.value(), uv = u.value(), vv = v.value();
  const double inv = 1.0 / (2.0 * jv + 1.0);
  const HalfInt half = HalfInt(1);
  HalfAngleTerm lo, hi;
  if (kind == Branch::cos_branch && sign > 0) {
    lo = {j - half, u - half, v - half,
          std::sqrt((jv + uv) * (jv + vv)) * inv};
    hi = {j + half, u - half, v - half,
          std::sqrt((jv - uv + 1.0) * (jv - vv + 1.0)) * inv};
  } else if (kind == Branch::sin_branch && sign > 0) {
    lo = {j - half, u - half, v + half,
          -std::sqrt((jv + uv) * (jv - vv)) * inv};
    hi = {j + half, u - half, v + half,
          std::sqrt((jv - uv + 1.0) * (jv + vv + 1.0)) * inv};
  } else if (kind == Branch::cos_branch) {  // e^{-i phi/2}
    lo = {j - half, u + half, v + half,
          std::sqrt((jv - uv) * (jv - vv)) * inv};
    hi = {j + half, u + half, v + half,
          std::sqrt((jv + uv + 1.0) * (jv + vv + 1.0)) * inv};
  } else {
    lo = {j - half, u + half, v - half,
          std::sqrt((jv - uv) * (jv + vv)) * inv};
    hi = {j + half, u + half, v - half,
          -std::sqrt((jv + uv + 1.0) * (jv - vv + 1.0)) * inv};
  }
  auto fix = [](HalfAngleTerm& t) {
    if (t.j.twice() < 0 || t.u.abs() > t.j || t.v.abs() > t.j ||
        !integer_spaced(t.j, t.u) || !integer_spaced(t.j, t.v))
      t.coeff = 0.0;
  };
  fix(lo);
  fix(hi);
  return {lo, hi};
}

}  // namespace isochiral::wigner
