#include "isochiral/angular.hpp"

#include <cmath>
#include <stdexcept>

#include "isochiral/wigner.hpp"

namespace isochiral::angular {

namespace {

double nu_of(HalfInt j) {
  const double jv = j.value();
  return std::sqrt(jv * (jv + 1.0));
}

// 6th-order central difference of a closure
template <typename F>
Eigen::VectorXcd fd6(const F& f, double x, double h) {
  return (45.0 * (f(x + h) - f(x - h)) - 9.0 * (f(x + 2 * h) - f(x - 2 * h)) +
          (f(x + 3 * h) - f(x - 3 * h))) /
         (60.0 * h);
}

constexpr double kFDh = 5e-3;

}  // namespace

bool DoubletAnsatz::j_zero_pattern_ok() const {
  if (j.twice() != 0) return true;
  return f[0] == cd(0) && f[2] == cd(0) && g[1] == cd(0) && g[3] == cd(0);
}

Vec8c DoubletAnsatz::evaluate(double theta, double phi) const {
  Vec8c out = Vec8c::Zero();
  for (int iso = 0; iso < 2; ++iso)
    for (int k = 0; k < 4; ++k) {
      const cd coeff = iso == 0 ? f[k] : g[k];
      if (coeff == cd(0)) continue;
      const HalfInt sig = HalfInt::whole(sigma_of(iso, k));
      if (sig.abs() > j) continue;  // j = 0: D_{+-1} entries are absent
      out[4 * iso + k] = coeff * wigner::D_state(j, m, sig, theta, phi);
    }
  return out;
}

double DoubletAnsatz::norm() const {
  double n = 0.0;
  for (int k = 0; k < 4; ++k) n += std::norm(f[k]) + std::norm(g[k]);
  return std::sqrt(n);
}

DoubletAnsatz operator+(const DoubletAnsatz& a, const DoubletAnsatz& b) {
  if (a.j != b.j || a.m != b.m)
    throw std::invalid_argument("DoubletAnsatz: quantum-number mismatch");
  DoubletAnsatz out = a;
  for (int k = 0; k < 4; ++k) {
    out.f[k] += b.f[k];
    out.g[k] += b.g[k];
  }
  return out;
}

DoubletAnsatz operator*(cd scale, const DoubletAnsatz& a) {
  DoubletAnsatz out = a;
  for (int k = 0; k < 4; ++k) {
    out.f[k] *= scale;
    out.g[k] *= scale;
  }
  return out;
}

double max_coeff_diff(const DoubletAnsatz& a, const DoubletAnsatz& b) {
  double r = 0.0;
  for (int k = 0; k < 4; ++k) {
    r = std::max(r, std::abs(a.f[k] - b.f[k]));
    r = std::max(r, std::abs(a.g[k] - b.g[k]));
  }
  return r;
}

Eigen::VectorXcd Section::d_theta(double th, double ph) const {
  if (dth) return dth(th, ph);
  return fd6([&](double x) { return value(x, ph); }, th, kFDh);
}
Eigen::VectorXcd Section::d_phi(double th, double ph) const {
  if (dph) return dph(th, ph);
  return fd6([&](double x) { return value(th, x); }, ph, kFDh);
}
Eigen::VectorXcd Section::d2_thth(double th, double ph) const {
  if (dthth) return dthth(th, ph);
  return fd6([&](double x) { return d_theta(x, ph); }, th, kFDh);
}
Eigen::VectorXcd Section::d2_thph(double th, double ph) const {
  if (dthph) return dthph(th, ph);
  return fd6([&](double x) { return d_theta(th, x); }, ph, kFDh);
}
Eigen::VectorXcd Section::d2_phph(double th, double ph) const {
  if (dphph) return dphph(th, ph);
  return fd6([&](double x) { return d_phi(th, x); }, ph, kFDh);
}

Section section_from_ansatz(const DoubletAnsatz& a) {
  Section s;
  s.dim = 8;
  s.value = [a](double th, double ph) -> Eigen::VectorXcd { return a.evaluate(th, ph); };
  s.dth = [a](double th, double ph) -> Eigen::VectorXcd {
    Vec8c out = Vec8c::Zero();
    for (int iso = 0; iso < 2; ++iso)
      for (int k = 0; k < 4; ++k) {
        const cd coeff = iso == 0 ? a.f[k] : a.g[k];
        if (coeff == cd(0)) continue;
        const HalfInt sig = HalfInt::whole(DoubletAnsatz::sigma_of(iso, k));
        if (sig.abs() > a.j) continue;
        out[4 * iso + k] = coeff * wigner::D_state_dtheta(a.j, a.m, sig, th, ph);
      }
    return out;
  };
  s.dph = [a](double th, double ph) -> Eigen::VectorXcd {
    return cd(0, a.m.value()) * a.evaluate(th, ph);
  };
  s.dthth = [a](double th, double ph) -> Eigen::VectorXcd {
    Vec8c out = Vec8c::Zero();
    for (int iso = 0; iso < 2; ++iso)
      for (int k = 0; k < 4; ++k) {
        const cd coeff = iso == 0 ? a.f[k] : a.g[k];
        if (coeff == cd(0)) continue;
        const HalfInt sig = HalfInt::whole(DoubletAnsatz::sigma_of(iso, k));
        if (sig.abs() > a.j) continue;
        out[4 * iso + k] =
            coeff * wigner::small_d_d2beta({a.j, -a.m, sig}, th) *
            algebra::iexp(a.m.value() * ph);
      }
    return out;
  };
  Section tmp = s;  // capture dth by value for the mixed derivative
  s.dthph = [tmp, a](double th, double ph) -> Eigen::VectorXcd {
    return cd(0, a.m.value()) * tmp.dth(th, ph);
  };
  s.dphph = [a](double th, double ph) -> Eigen::VectorXcd {
    const double mv = a.m.value();
    return cd(-mv * mv, 0) * a.evaluate(th, ph);
  };
  return s;
}

MomentumSpec MomentumSpec::scalar(double lambda) {
  MomentumSpec s;
  s.weights = Eigen::VectorXd::Constant(1, lambda);
  return s;
}

MomentumSpec MomentumSpec::abelian(HalfInt eg) {
  MomentumSpec s;
  s.weights.resize(4);
  const double e = eg.value();
  s.weights << 0.5 - e, -0.5 - e, 0.5 - e, -0.5 - e;
  return s;
}

MomentumSpec MomentumSpec::doublet() {
  MomentumSpec s;
  s.weights.resize(8);
  s.weights << 1.0, 0.0, 1.0, 0.0, 0.0, -1.0, 0.0, -1.0;
  return s;
}

Section apply_J(const MomentumSpec& spec, int component, const Section& s) {
  if (spec.weights.size() != s.dim)
    throw std::invalid_argument("apply_J: spec/section dimension mismatch");
  const Eigen::VectorXd w = spec.weights;
  Section out;
  out.dim = s.dim;
  const Section in = s;
  if (component == 3) {
    out.value = [in](double th, double ph) -> Eigen::VectorXcd {
      return cd(0, -1) * in.d_phi(th, ph);
    };
    out.dth = [in](double th, double ph) -> Eigen::VectorXcd {
      return cd(0, -1) * in.d2_thph(th, ph);
    };
    out.dph = [in](double th, double ph) -> Eigen::VectorXcd {
      return cd(0, -1) * in.d2_phph(th, ph);
    };
    return out;
  }
  if (component != 1 && component != 2)
    throw std::invalid_argument("apply_J: component must be 1, 2 or 3");
  // J1 = i sin(ph) d_th + i cot(th) cos(ph) d_ph + Lambda cos(ph)/sin(th)
  // J2 = -i cos(ph) d_th + i cot(th) sin(ph) d_ph + Lambda sin(ph)/sin(th)
  const bool first = (component == 1);
  auto trig_a = [first](double ph) { return first ? std::sin(ph) : -std::cos(ph); };
  auto trig_b = [first](double ph) { return first ? std::cos(ph) : std::sin(ph); };
  out.value = [in, w, trig_a, trig_b](double th, double ph) -> Eigen::VectorXcd {
    const double ct = 1.0 / std::tan(th), cs = 1.0 / std::sin(th);
    Eigen::VectorXcd v = cd(0, 1) * trig_a(ph) * in.d_theta(th, ph) +
                         cd(0, 1) * ct * trig_b(ph) * in.d_phi(th, ph);
    const Eigen::VectorXcd base = in.value(th, ph);
    for (int k = 0; k < v.size(); ++k) v[k] += w[k] * trig_b(ph) * cs * base[k];
    return v;
  };
  out.dth = [in, w, trig_a, trig_b](double th, double ph) -> Eigen::VectorXcd {
    const double st = std::sin(th), ct = std::cos(th);
    Eigen::VectorXcd v =
        cd(0, 1) * trig_a(ph) * in.d2_thth(th, ph) +
        cd(0, 1) * (ct / st) * trig_b(ph) * in.d2_thph(th, ph) +
        cd(0, 1) * (-1.0 / (st * st)) * trig_b(ph) * in.d_phi(th, ph);
    const Eigen::VectorXcd base = in.d_theta(th, ph);
    const Eigen::VectorXcd val = in.value(th, ph);
    for (int k = 0; k < v.size(); ++k)
      v[k] += w[k] * trig_b(ph) * (base[k] / st - ct / (st * st) * val[k]);
    return v;
  };
  out.dph = [in, w, trig_a, trig_b, first](double th, double ph) -> Eigen::VectorXcd {
    const double st = std::sin(th), ct = std::cos(th);
    const double da = first ? std::cos(ph) : std::sin(ph);   // d trig_a / d ph
    const double db = first ? -std::sin(ph) : std::cos(ph);  // d trig_b / d ph
    Eigen::VectorXcd v = cd(0, 1) * (trig_a(ph) * in.d2_thph(th, ph) +
                                     da * in.d_theta(th, ph)) +
                         cd(0, 1) * (ct / st) * (trig_b(ph) * in.d2_phph(th, ph) +
                                                 db * in.d_phi(th, ph));
    const Eigen::VectorXcd base = in.value(th, ph);
    const Eigen::VectorXcd dphv = in.d_phi(th, ph);
    for (int k = 0; k < v.size(); ++k)
      v[k] += w[k] / st * (db * base[k] + trig_b(ph) * dphv[k]);
    return v;
  };
  return out;
}

Section apply_Jsq(const MomentumSpec& spec, const Section& s) {
  const Section j1 = apply_J(spec, 1, s), j2 = apply_J(spec, 2, s),
                j3 = apply_J(spec, 3, s);
  const Section j11 = apply_J(spec, 1, j1), j22 = apply_J(spec, 2, j2),
                j33 = apply_J(spec, 3, j3);
  Section out;
  out.dim = s.dim;
  out.value = [j11, j22, j33](double th, double ph) -> Eigen::VectorXcd {
    return j11.value(th, ph) + j22.value(th, ph) + j33.value(th, ph);
  };
  return out;
}

double ansatz_ladder_coefficient(HalfInt j, HalfInt m, int up) {
  const double jv = j.value(), mv = m.value();
  const double arg = up > 0 ? (jv - mv) * (jv + mv + 1.0) : (jv + mv) * (jv - mv + 1.0);
  return -std::sqrt(arg);
}

DoubletAnsatz apply_sigma(const DoubletAnsatz& a) {
  DoubletAnsatz out;
  out.j = a.j;
  out.m = a.m;
  if (a.j.twice() == 0) return out;  // Sigma Psi_{e0} = 0
  const double nu = nu_of(a.j);
  const cd i(0, 1);
  out.f = {-i * nu * a.f[3], i * nu * a.f[2], i * nu * a.f[1], -i * nu * a.f[0]};
  out.g = {-i * nu * a.g[3], i * nu * a.g[2], i * nu * a.g[1], -i * nu * a.g[0]};
  return out;
}

Section apply_sigma_differential(const Section& s) {
  if (s.dim != 8) throw std::invalid_argument("apply_sigma_differential: need dim 8");
  using algebra::Mat8c;
  static const Mat8c g1 = algebra::kron(algebra::Mat2c::Identity(), algebra::gamma(1));
  static const Mat8c g2 = algebra::kron(algebra::Mat2c::Identity(), algebra::gamma(2));
  // i sigma12 + t3 as a diagonal weight over the 8 components
  static const Eigen::VectorXd w = MomentumSpec::doublet().weights;
  const Section in = s;
  Section out;
  out.dim = 8;
  out.value = [in](double th, double ph) -> Eigen::VectorXcd {
    const Eigen::VectorXcd v = in.value(th, ph);
    const Eigen::VectorXcd vth = in.d_theta(th, ph);
    const Eigen::VectorXcd vph = in.d_phi(th, ph);
    Eigen::VectorXcd weighted(8);
    const double ct = std::cos(th), st = std::sin(th);
    for (int k = 0; k < 8; ++k)
      weighted[k] = (cd(0, 1) * vph[k] + w[k] * ct * v[k]) / st;
    return cd(0, 1) * (g1 * vth) + g2 * weighted;
  };
  return out;
}

algebra::Mat8c mixing_matrix() {
  using algebra::Mat2c;
  return algebra::kron(0.5 * Mat2c(algebra::sigma(2)), algebra::gamma(1)) -
         algebra::kron(0.5 * Mat2c(algebra::sigma(1)), algebra::gamma(2));
}

DoubletAnsatz apply_mixing(const DoubletAnsatz& a, double two_w_over_r) {
  DoubletAnsatz out;
  out.j = a.j;
  out.m = a.m;
  const cd i(0, 1);
  const double c = two_w_over_r;
  out.f = {0.0, i * c * a.g[2], 0.0, -i * c * a.g[0]};
  out.g = {-i * c * a.f[3], 0.0, i * c * a.f[1], 0.0};
  return out;
}

KResult apply_K(const DoubletAnsatz& a) {
  // bispinor factor -i g0 g3 = -i diag(1,-1,-1,1) on top of Sigma
  const DoubletAnsatz s = apply_sigma(a);
  static const std::array<cd, 4> mfac = {cd(0, -1), cd(0, 1), cd(0, 1), cd(0, -1)};
  KResult res;
  res.section.j = a.j;
  res.section.m = a.m;
  for (int k = 0; k < 4; ++k) {
    res.section.f[k] = mfac[k] * s.f[k];
    res.section.g[k] = mfac[k] * s.g[k];
  }
  // K-linkage deviation of the input
  auto link = [&](int mu) {
    return std::max({std::abs(a.f[3] - double(mu) * a.f[0]),
                     std::abs(a.f[2] - double(mu) * a.f[1]),
                     std::abs(a.g[3] - double(mu) * a.g[0]),
                     std::abs(a.g[2] - double(mu) * a.g[1])});
  };
  res.linkage_residual = std::min(link(+1), link(-1));
  return res;
}

double k_eigenvalue(HalfInt j, int mu) { return -double(mu) * nu_of(j); }

namespace {

// 4th-order first derivative on a uniform grid, one-sided at the edges
cd deriv4(const std::vector<cd>& y, std::size_t i, double h) {
  const std::size_t n = y.size();
  if (i >= 2 && i + 2 < n)
    return (8.0 * (y[i + 1] - y[i - 1]) - (y[i + 2] - y[i - 2])) / (12.0 * h);
  if (i < 2)
    return (-25.0 * y[i] + 48.0 * y[i + 1] - 36.0 * y[i + 2] + 16.0 * y[i + 3] -
            3.0 * y[i + 4]) /
           (12.0 * h);
  return (25.0 * y[i] - 48.0 * y[i - 1] + 36.0 * y[i - 2] - 16.0 * y[i - 3] +
          3.0 * y[i - 4]) /
         (12.0 * h);
}

}  // namespace

DiracResidual apply_dirac_operator(const RadialSampledAnsatz& s,
                                   const gauge::ProfileFunctions& pf) {
  const std::size_t n = s.r.size();
  if (n < 7) throw std::invalid_argument("apply_dirac_operator: grid too small");
  const double h = s.r[1] - s.r[0];
  const double nu = nu_of(s.j);
  const cd i(0, 1);
  DiracResidual out;
  std::vector<double> angle_th = {0.4, 1.1, 2.3}, angle_ph = {0.3, 2.1, 4.4};
  for (std::size_t p = 0; p < n; ++p) {
    const double r = s.r[p];
    const double Ft = 0.5 * pf.e * r * pf.f_of_r(r);
    const double Pt = 0.5 * pf.kappa * r * pf.phi_of_r(r);
    const double mixc = (pf.e * r * r * pf.k_of_r(r) + 1.0) / r;  // 2W/r
    const double ep = s.epsilon, mm = s.mass;
    std::array<cd, 8> v{}, dv{};
    for (int k = 0; k < 8; ++k) {
      v[k] = s.comp[k][p];
      dv[k] = deriv4(s.comp[k], p, h);
    }
    const cd *f = v.data(), *g = v.data() + 4;
    const cd *df = dv.data(), *dg = dv.data() + 4;
    std::array<cd, 8> res;
    // T+ block: components attach to (D_-1, D_0, D_-1, D_0)
    res[0] = (ep + Ft) * f[2] - i * df[2] - i * (nu / r) * f[3] - (mm + Pt) * f[0];
    res[1] = (ep + Ft) * f[3] + i * df[3] + i * (nu / r) * f[2] + i * mixc * g[2] -
             (mm + Pt) * f[1];
    res[2] = (ep + Ft) * f[0] + i * df[0] + i * (nu / r) * f[1] - (mm + Pt) * f[2];
    res[3] = (ep + Ft) * f[1] - i * df[1] - i * (nu / r) * f[0] - i * mixc * g[0] -
             (mm + Pt) * f[3];
    // T- block: (D_0, D_+1, D_0, D_+1)
    res[4] = (ep - Ft) * g[2] - i * dg[2] - i * (nu / r) * g[3] - i * mixc * f[3] -
             (mm - Pt) * g[0];
    res[5] = (ep - Ft) * g[3] + i * dg[3] + i * (nu / r) * g[2] - (mm - Pt) * g[1];
    res[6] = (ep - Ft) * g[0] + i * dg[0] + i * (nu / r) * g[1] + i * mixc * f[1] -
             (mm - Pt) * g[2];
    res[7] = (ep - Ft) * g[1] - i * dg[1] - i * (nu / r) * g[0] - (mm - Pt) * g[3];
    if (s.j.twice() == 0) {
      // only the D_0 attachments exist
      res[0] = res[2] = res[5] = res[7] = 0.0;
    }
    double mc = 0.0;
    for (int k = 0; k < 8; ++k) mc = std::max(mc, std::abs(res[k]));
    out.max_coeff = std::max(out.max_coeff, mc);
    if (p % std::max<std::size_t>(1, n / 16) == 0) {
      DoubletAnsatz ra;
      ra.j = s.j;
      ra.m = s.m;
      for (int k = 0; k < 4; ++k) {
        ra.f[k] = res[k];
        ra.g[k] = res[4 + k];
      }
      for (double th : angle_th)
        for (double ph : angle_ph)
          out.max_pointwise =
              std::max(out.max_pointwise,
                       ra.evaluate(th, ph).cwiseAbs().maxCoeff());
    }
  }
  return out;
}

}  // namespace isochiral::angular
