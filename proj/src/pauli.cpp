#include "isochiral/pauli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "isochiral/wigner.hpp"

namespace isochiral::pauli {

namespace {

constexpr double kHalfIntTol = 1e-9;

bool near_integer(double x, double tol = kHalfIntTol) {
  return std::abs(x - std::round(x)) < tol;
}

// Ladder state: e^{i m phi} (1-c)^u (1+c)^v Q(c)
struct LadderState {
  double m, u, v;
  std::vector<double> q;  // polynomial in c, ascending powers
};

std::vector<double> poly_deriv(const std::vector<double>& p) {
  std::vector<double> d;
  for (std::size_t k = 1; k < p.size(); ++k) d.push_back(p[k] * double(k));
  if (d.empty()) d.push_back(0.0);
  return d;
}

void poly_axpy(std::vector<double>& acc, const std::vector<double>& p,
               double scale, int shift) {
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) acc[k + shift] += scale * p[k];
}

double poly_eval(const std::vector<double>& p, double c) {
  double v = 0.0;
  for (std::size_t k = p.size(); k-- > 0;) v = v * c + p[k];
  return v;
}

// J_- : m -> m-1, u -> u-1/2, v -> v-1/2,
//       Q -> ((v-u+lambda) - (u+v+m) c) Q + (1-c^2) Q'
LadderState lower_once(const LadderState& s, double lambda) {
  LadderState out;
  out.m = s.m - 1.0;
  out.u = s.u - 0.5;
  out.v = s.v - 0.5;
  std::vector<double> q;
  poly_axpy(q, s.q, s.v - s.u + lambda, 0);
  poly_axpy(q, s.q, -(s.u + s.v + s.m), 1);
  const auto dq = poly_deriv(s.q);
  poly_axpy(q, dq, 1.0, 0);
  poly_axpy(q, dq, -1.0, 2);
  out.q = std::move(q);
  return out;
}

double sup_on_grid(const LadderState& s) {
  double best = 0.0;
  for (int i = 0; i <= 40; ++i) {
    const double theta = 0.3 + (M_PI - 0.6) * i / 40.0;
    const double c = std::cos(theta);
    const double val = std::pow(1.0 - c, s.u) * std::pow(1.0 + c, s.v) *
                       poly_eval(s.q, c);
    best = std::max(best, std::abs(val));
  }
  return best;
}

}  // namespace

PauliVerdict check_pauli(double j, double lambda) {
  if (j < 0) throw std::domain_error("check_pauli: j < 0");
  if (!near_integer(2.0 * lambda))
    return {false, Reason::lambda_not_half_integer};
  const double al = std::abs(lambda);
  if (j < al - kHalfIntTol) return {false, Reason::j_below_floor};
  if (!near_integer(j - al)) return {false, Reason::j_lambda_offset_not_integer};
  return {true, Reason::ok};
}

std::vector<HalfInt> allowed_j_values(HalfInt lambda, int count) {
  if (count <= 0) throw std::domain_error("allowed_j_values: count must be positive");
  std::vector<HalfInt> out;
  HalfInt j = lambda.abs();
  for (int i = 0; i < count; ++i, j += HalfInt::whole(1)) out.push_back(j);
  return out;
}

std::vector<HalfInt> allowed_j_values_bispinor(HalfInt eg, int count) {
  if (count <= 0) throw std::domain_error("allowed_j_values_bispinor: count must be positive");
  std::vector<HalfInt> out;
  HalfInt j = (eg.abs() - HalfInt(1)).abs();
  for (int i = 0; i < count; ++i, j += HalfInt::whole(1)) out.push_back(j);
  return out;
}

double lowering_annihilation_residual(double j, double lambda) {
  if (j < 0) throw std::domain_error("lowering_annihilation_residual: j < 0");
  // highest weight: (1-c)^{(j-lambda)/2} (1+c)^{(j+lambda)/2}
  LadderState s{j, 0.5 * (j - lambda), 0.5 * (j + lambda), {1.0}};
  const bool j_half_integer = near_integer(2.0 * j);
  const int nsteps = j_half_integer ? int(std::round(2.0 * j)) + 1
                                    : int(std::floor(2.0 * j)) + 1;
  double prev_sup = sup_on_grid(s);
  for (int step = 0; step < nsteps; ++step) {
    const LadderState next = lower_once(s, lambda);
    const double sup = sup_on_grid(next);
    if (step == nsteps - 1) return prev_sup > 0 ? sup / prev_sup : sup;
    prev_sup = sup_on_grid(next);
    s = next;
  }
  return 0.0;  // nsteps >= 1 always
}

PhiFunction::PhiFunction(HalfInt j, HalfInt m, HalfInt lambda)
    : j_(j), m_(m), lam_(lambda) {
  const auto verdict = check_pauli(j, lambda);
  if (!verdict.allowed)
    throw std::domain_error("build_phi: (j,lambda) fails the Pauli criterion");
  if (m.abs() > j || !integer_spaced(j, m))
    throw std::domain_error("build_phi: invalid m");
  const int jpl = (j + lambda).twice() / 2;   // j+lambda, integer >= 0
  const int jml = (j - lambda).twice() / 2;   // j-lambda
  const int nder = (j - m).twice() / 2;       // j-m
  // expand (1+c)^{j+lambda} (1-c)^{j-lambda}
  auto binom_row = [](int n, double sign) {
    std::vector<double> p(n + 1, 0.0);
    double b = 1.0;
    for (int k = 0; k <= n; ++k) {
      p[k] = b * (k % 2 && sign < 0 ? -1.0 : 1.0);
      b = b * double(n - k) / double(k + 1);
    }
    return p;
  };
  const auto a = binom_row(jpl, +1.0);
  const auto b = binom_row(jml, -1.0);
  std::vector<double> p(jpl + jml + 1, 0.0);
  for (int ka = 0; ka <= jpl; ++ka)
    for (int kb = 0; kb <= jml; ++kb) p[ka + kb] += a[ka] * b[kb];
  for (int d = 0; d < nder; ++d) p = poly_deriv(p);
  poly_ = std::move(p);
  // N^lambda_{jm} from the general closed form (gives unit L2 norm)
  const double jv = j.value(), mv = m.value(), lv = lambda.value();
  norm_ = std::exp(-jv * std::log(2.0)) / std::sqrt(2.0 * M_PI) *
          std::sqrt((2.0 * jv + 1.0) *
                    std::exp(std::lgamma(jv + mv + 1.0) -
                             std::lgamma(jv - mv + 1.0) -
                             std::lgamma(jv + lv + 1.0) -
                             std::lgamma(jv - lv + 1.0)) /
                    2.0);
  // sin^{-m} (1-c)^{lambda/2} (1+c)^{-lambda/2}
  exp_minus_ = 0.5 * (lv - mv);
  exp_plus_ = -0.5 * (lv + mv);
}

cd PhiFunction::operator()(double theta, double phi) const {
  const double c = std::cos(theta);
  const double radial = std::pow(1.0 - c, exp_minus_) *
                        std::pow(1.0 + c, exp_plus_) * poly_eval(poly_, c);
  return norm_ * radial * std::exp(cd(0.0, m_.value() * phi));
}

cd phi_from_wigner(HalfInt j, HalfInt m, HalfInt lambda, double theta, double phi) {
  const double jv = j.value();
  const int e = (j - m).twice() / 2;
  const double sgn = (e % 2 == 0) ? 1.0 : -1.0;
  return std::sqrt((2.0 * jv + 1.0) / (4.0 * M_PI)) * sgn *
         wigner::big_D({j, -m, -lambda}, {phi, theta, 0.0});
}

}  // namespace isochiral::pauli
