#pragma once

#include <complex>
#include <utility>

#include "isochiral/algebra.hpp"
#include "isochiral/angular.hpp"
#include "isochiral/gauge.hpp"
#include "isochiral/halfint.hpp"

namespace isochiral::discrete {

using algebra::cd;
using algebra::Mat2c;
using algebra::Mat4c;
using algebra::Mat8c;
using algebra::Vec4c;

// complex chiral parameter A = f + i g; Delta = e^{iA}
struct ChiralParameter {
  cd A{0.0, 0.0};
  ChiralParameter() = default;
  ChiralParameter(cd a);  // validates e^{iA} finite and nonzero
  ChiralParameter(double f, double g) : ChiralParameter(cd(f, g)) {}
  double f() const { return A.real(); }
  double g() const { return A.imag(); }
  cd delta() const { return std::exp(cd(0, 1) * A); }
};

enum class Tetrad { spherical, cartesian };

struct DiscreteOperatorSpec {
  gauge::IsoGauge iso_gauge = gauge::IsoGauge::Schwinger;
  Tetrad tetrad = Tetrad::spherical;
  ChiralParameter a;
};

// isotopic 2x2 factor of N_A in the requested gauge at (theta, phi)
Mat2c n_iso_factor(gauge::IsoGauge g, cd A, double theta, double phi);

// iso (x) bispinor matrix factor; the operator always acts together with the
// coordinate reflection (theta,phi) -> (pi-theta, phi+pi)
struct NOperatorMatrix {
  Mat8c matrix;
  bool reflects = true;
};
NOperatorMatrix n_operator_matrix(const DiscreteOperatorSpec& spec, double theta,
                                  double phi);

// exact action on the separated doublet ansatz (Schwinger gauge, spherical tetrad)
angular::DoubletAnsatz apply_n_ansatz(cd A, const angular::DoubletAnsatz& a);
// generic action on an 8-component section in any gauge
angular::Section apply_n_section(const DiscreteOperatorSpec& spec,
                                 const angular::Section& s);

// eigenvalue N = delta (-1)^{j+1} (j = 0: N = -delta) and the linkage
// g_i = delta Delta f_{5-i} (j = 0: g1 = dD f4, g3 = dD f2)
struct EigenConstraints {
  cd eigenvalue;
  cd linkage;  // delta * e^{iA}
};
EigenConstraints eigen_constraints(HalfInt j, int delta, cd A);

// chiral symmetry U(A): diag(1, e^{iA}) in the unitary gauges; the Cartesian
// form e^{iA/2} exp(-i(A/2) sigma.n)
Mat2c chiral_u(cd A, gauge::IsoGauge g, double theta, double phi);

// expansion coefficients of Psi^A_delta over {Psi_{+1}, Psi_{-1}} and back
std::pair<cd, cd> basis_change(cd A, int delta);
std::pair<cd, cd> basis_change_inverse(cd A, int delta);

// closed-form overlaps relative to the unit-normalized A=0 basis:
// same delta: (1+e^{i(A-A*)})/2, opposite: (1-e^{i(A-A*)})/2
cd overlap(cd A, int delta1, int delta2);

// <N_A Phi | Psi> - <Phi | e^{i(A-A*) sigma3} N_A Psi> by sphere quadrature,
// plus the plain-adjoint defect <N_A Phi|Psi> - <Phi|N_A Psi>
struct AdjointDefect {
  cd corrected;
  cd plain;
};
AdjointDefect adjoint_defect(cd A, const angular::Section& phi_s,
                             const angular::Section& psi_s, int ntheta = 48,
                             int nphi = 64);

// expectation value of N_A in the state e^{ia} cos(G) Psi_{+1} + e^{ib} sin(G) Psi_{-1}
cd expectation_n(cd A, double Gamma, double alpha, double beta, HalfInt j);
// independent route through the A-basis coefficient algebra and the overlap law
cd expectation_n_via_coefficients(cd A, double Gamma, double alpha, double beta,
                                  HalfInt j);
// recover (cos 2Gamma, sin 2Gamma sin(alpha-beta)) from a measured N-bar
std::pair<double, double> invert_expectation(cd A, cd nbar, HalfInt j);

// ---- massless Dirac analogue -------------------------------------------------
Vec4c massless_transform(cd z, const Vec4c& xi_eta);        // diag(I, zI)
Mat4c massless_conjugated_operator(cd z);  // z-conjugated parity, bispinor factor
Mat4c massless_exp_gamma5_form(cd A);                       // e^{iA g5} P_bisp^sph

}  // namespace isochiral::discrete
