#include "isochiral/discrete.hpp"

#include <cmath>
#include <stdexcept>

#include "isochiral/quadrature.hpp"
#include "isochiral/wigner.hpp"

namespace isochiral::discrete {

namespace {

Mat2c sigma_dot_n(double theta, double phi) {
  return std::sin(theta) * std::cos(phi) * algebra::sigma(1) +
         std::sin(theta) * std::sin(phi) * algebra::sigma(2) +
         std::cos(theta) * algebra::sigma(3);
}

cd pow_iexp(double x) { return std::exp(cd(0, x)); }

}  // namespace

ChiralParameter::ChiralParameter(cd a) : A(a) {
  const cd d = std::exp(cd(0, 1) * a);
  if (!std::isfinite(d.real()) || !std::isfinite(d.imag()) || std::abs(d) == 0.0)
    throw std::domain_error("ChiralParameter: e^{iA} must be finite and nonzero");
}

Mat2c n_iso_factor(gauge::IsoGauge g, cd A, double theta, double phi) {
  const cd d = std::exp(cd(0, 1) * A);
  Mat2c m = Mat2c::Zero();
  switch (g) {
    case gauge::IsoGauge::Schwinger:
      m(0, 1) = 1.0 / d;
      m(1, 0) = d;
      return m;
    case gauge::IsoGauge::Dirac:
      m(0, 1) = cd(0, -1) / d * pow_iexp(-phi);
      m(1, 0) = cd(0, 1) * d * pow_iexp(phi);
      return m;
    default: {
      // -i exp(-i A sigma.n) = -i cos(A) - sin(A) sigma.n
      const cd ca = std::cos(A), sa = std::sin(A);
      return cd(0, -1) * ca * Mat2c::Identity() - sa * sigma_dot_n(theta, phi);
    }
  }
}

NOperatorMatrix n_operator_matrix(const DiscreteOperatorSpec& spec, double theta,
                                  double phi) {
  const Mat4c pb = spec.tetrad == Tetrad::spherical
                       ? algebra::parity_bisp_spherical()
                       : algebra::parity_bisp_cartesian();
  return {algebra::kron(n_iso_factor(spec.iso_gauge, spec.a.A, theta, phi), pb),
          true};
}

angular::DoubletAnsatz apply_n_ansatz(cd A, const angular::DoubletAnsatz& a) {
  // N psi: f'_k = -i^{2j} e^{-iA} g_{5-k},  g'_k = -i^{2j} e^{+iA} f_{5-k}
  const cd ph = wigner::reflection_phase(a.j);
  const cd d = std::exp(cd(0, 1) * A);
  angular::DoubletAnsatz out;
  out.j = a.j;
  out.m = a.m;
  for (int k = 0; k < 4; ++k) {
    out.f[k] = -ph / d * a.g[3 - k];
    out.g[k] = -ph * d * a.f[3 - k];
  }
  return out;
}

angular::Section apply_n_section(const DiscreteOperatorSpec& spec,
                                 const angular::Section& s) {
  if (s.dim != 8) throw std::invalid_argument("apply_n_section: need dim 8");
  const angular::Section in = s;
  const DiscreteOperatorSpec sp = spec;
  angular::Section out;
  out.dim = 8;
  out.value = [in, sp](double th, double ph) -> Eigen::VectorXcd {
    const auto op = n_operator_matrix(sp, th, ph);
    return op.matrix * in.value(M_PI - th, ph + M_PI);
  };
  return out;
}

EigenConstraints eigen_constraints(HalfInt j, int delta, cd A) {
  if (j.twice() < 0) throw std::domain_error("eigen_constraints: j < 0");
  EigenConstraints ec;
  const cd d = std::exp(cd(0, 1) * A);
  ec.linkage = double(delta) * d;
  if (j.twice() == 0) {
    ec.eigenvalue = -double(delta);
  } else {
    // delta (-1)^{j+1} with (-1)^x read as e^{i pi x} for half-integer j
    ec.eigenvalue =
        double(delta) * std::exp(cd(0, 1) * M_PI * (j.value() + 1.0));
    if (j.is_integer())
      ec.eigenvalue = cd(std::round(ec.eigenvalue.real()), 0.0);
  }
  return ec;
}

Mat2c chiral_u(cd A, gauge::IsoGauge g, double theta, double phi) {
  if (g != gauge::IsoGauge::Cartesian) {
    Mat2c m = Mat2c::Identity();
    m(1, 1) = std::exp(cd(0, 1) * A);
    return m;
  }
  const cd half = 0.5 * A;
  return std::exp(cd(0, 1) * half) *
         (std::cos(half) * Mat2c::Identity() -
          cd(0, 1) * std::sin(half) * sigma_dot_n(theta, phi));
}

std::pair<cd, cd> basis_change(cd A, int delta) {
  const cd d = std::exp(cd(0, 1) * A);
  return {0.5 * (1.0 + double(delta) * d), 0.5 * (1.0 - double(delta) * d)};
}

std::pair<cd, cd> basis_change_inverse(cd A, int delta) {
  const cd d = std::exp(cd(0, -1) * A);
  return {0.5 * (1.0 + double(delta) * d), 0.5 * (1.0 - double(delta) * d)};
}

cd overlap(cd A, int delta1, int delta2) {
  const cd e = std::exp(cd(0, 1) * (A - std::conj(A)));
  return delta1 == delta2 ? 0.5 * (1.0 + e) : 0.5 * (1.0 - e);
}

AdjointDefect adjoint_defect(cd A, const angular::Section& phi_s,
                             const angular::Section& psi_s, int ntheta, int nphi) {
  const DiscreteOperatorSpec spec{gauge::IsoGauge::Schwinger, Tetrad::spherical,
                                  ChiralParameter(A)};
  const angular::Section nphi_s = apply_n_section(spec, phi_s);
  const angular::Section npsi_s = apply_n_section(spec, psi_s);
  const cd eph = std::exp(cd(0, 1) * (A - std::conj(A)));
  const auto sph = quad::sphere_rule(ntheta, nphi);
  cd lhs = 0.0, rhs_corr = 0.0, rhs_plain = 0.0;
  for (std::size_t it = 0; it < sph.theta.size(); ++it)
    for (std::size_t ip = 0; ip < sph.phi.size(); ++ip) {
      const double w = sph.wtheta[it] * sph.wphi;
      const double th = sph.theta[it], ph = sph.phi[ip];
      const Eigen::VectorXcd p = phi_s.value(th, ph);
      const Eigen::VectorXcd q = psi_s.value(th, ph);
      const Eigen::VectorXcd np = nphi_s.value(th, ph);
      const Eigen::VectorXcd nq = npsi_s.value(th, ph);
      lhs += w * np.dot(q);  // Eigen's dot conjugates the left argument
      Eigen::VectorXcd weighted = nq;
      weighted.segment<4>(0) *= eph;
      weighted.segment<4>(4) /= eph;
      rhs_corr += w * p.dot(weighted);
      rhs_plain += w * p.dot(nq);
    }
  return {lhs - rhs_corr, lhs - rhs_plain};
}

cd expectation_n(cd A, double Gamma, double alpha, double beta, HalfInt j) {
  const double f = A.real(), g = A.imag();
  const double sab = std::sin(alpha - beta);
  const double rho = std::cos(2 * Gamma) * std::cos(f) +
                     std::sin(2 * Gamma) * std::sin(f) * sab;
  const double sig = -std::cos(2 * Gamma) * std::sin(f) +
                     std::sin(2 * Gamma) * std::cos(f) * sab;
  const cd phase = j.is_integer()
                       ? cd(((j.twice() / 2) % 2 == 0) ? -1.0 : 1.0, 0.0)
                       : std::exp(cd(0, 1) * M_PI * (j.value() + 1.0));
  return phase * cd(rho * std::cosh(g), sig * std::sinh(g));
}

cd expectation_n_via_coefficients(cd A, double Gamma, double alpha, double beta,
                                  HalfInt j) {
  const cd p = std::exp(cd(0, alpha)) * std::cos(Gamma);
  const cd q = std::exp(cd(0, beta)) * std::sin(Gamma);
  const auto [cp, cm] = basis_change_inverse(A, +1);
  // Psi_{+1} = cp Psi^A_+ + cm Psi^A_-;  Psi_{-1} = cm Psi^A_+ + cp Psi^A_-
  const cd m = p * cp + q * cm;
  const cd n = p * cm + q * cp;
  const cd E = std::exp(cd(0, 1) * (A - std::conj(A)));
  const cd phase = j.is_integer()
                       ? cd(((j.twice() / 2) % 2 == 0) ? -1.0 : 1.0, 0.0)
                       : std::exp(cd(0, 1) * M_PI * (j.value() + 1.0));
  return phase * ((std::conj(m) * m - std::conj(n) * n) * 0.5 * (1.0 + E) +
                  (std::conj(n) * m - n * std::conj(m)) * 0.5 * (1.0 - E));
}

std::pair<double, double> invert_expectation(cd A, cd nbar, HalfInt j) {
  const double f = A.real(), g = A.imag();
  const cd phase = j.is_integer()
                       ? cd(((j.twice() / 2) % 2 == 0) ? -1.0 : 1.0, 0.0)
                       : std::exp(cd(0, 1) * M_PI * (j.value() + 1.0));
  const cd v = nbar / phase;
  const double rho = v.real() / std::cosh(g);
  const double sig = (std::abs(g) > 1e-14) ? v.imag() / std::sinh(g) : 0.0;
  // cos 2G = rho cos f - sigma sin f; sin 2G sin(a-b) = rho sin f + sigma cos f
  if (std::abs(g) > 1e-14)
    return {rho * std::cos(f) - sig * std::sin(f),
            rho * std::sin(f) + sig * std::cos(f)};
  // real A: only the rho combination is observable
  return {rho * std::cos(f), rho * std::sin(f)};
}

Vec4c massless_transform(cd z, const Vec4c& xi_eta) {
  if (std::abs(z) == 0.0) throw std::domain_error("massless_transform: z = 0");
  Vec4c out = xi_eta;
  out[2] *= z;
  out[3] *= z;
  return out;
}

Mat4c massless_conjugated_operator(cd z) {
  if (std::abs(z) == 0.0)
    throw std::domain_error("massless_conjugated_operator: z = 0");
  const Mat4c g1 = algebra::gamma(1);
  const Mat4c pb = algebra::parity_bisp_spherical();  // = -g5 g1
  return 0.5 * (z + 1.0 / z) * pb + 0.5 * (z - 1.0 / z) * (-g1);
}

Mat4c massless_exp_gamma5_form(cd A) {
  const Mat4c g5 = algebra::gamma5();
  const Mat4c e = std::cos(A) * Mat4c::Identity() + cd(0, 1) * std::sin(A) * g5;
  return e * algebra::parity_bisp_spherical();
}

}  // namespace isochiral::discrete
