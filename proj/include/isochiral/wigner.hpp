#pragma once

#include <complex>
#include <optional>
#include <stdexcept>

#include "isochiral/halfint.hpp"

namespace isochiral::wigner {

using cd = std::complex<double>;

struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;

  // beta folded into [0,pi]; alpha, gamma into [0,2pi)
  EulerAngles normalized() const;
};

struct WignerIndex {
  HalfInt j;
  HalfInt m;
  HalfInt mprime;

  bool valid() const {
    return j.twice() >= 0 && m.abs() <= j && mprime.abs() <= j &&
           integer_spaced(j, m) && integer_spaced(j, mprime);
  }
  void require_valid() const {
    if (!valid())
      throw std::domain_error("WignerIndex: invalid (j,m,m') = (" + j.str() +
                              "," + m.str() + "," + mprime.str() + ")");
  }
};

// d^j_{m,m'}(beta) by the explicit Wigner sum, log-factorial stabilized.
// Convention: d = matrix element of exp(-i beta J_y), real, d(0) = identity.
double small_d(const WignerIndex& idx, double beta);

// Analytic d/dbeta and d2/dbeta2 of small_d (term-by-term differentiation).
double small_d_dbeta(const WignerIndex& idx, double beta);
double small_d_d2beta(const WignerIndex& idx, double beta);

// D^j_{m,m'}(alpha,beta,gamma) = e^{-i m alpha} d^j_{m,m'}(beta) e^{-i m' gamma}
cd big_D(const WignerIndex& idx, const EulerAngles& a);

// D^j_{-m,sigma}(phi,theta,0), the combination all wave functions here use.
cd D_state(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi);
cd D_state_dtheta(HalfInt j, HalfInt m, HalfInt sigma, double theta, double phi);

enum class Endpoint { theta_zero, theta_pi };

// Exact limit of D^j_{m,m'}(phi, theta, 0) at theta -> 0 or pi.
// winding w: value = sign * e^{i w phi}; zero entries flagged.
struct BoundaryValue {
  bool is_zero = true;
  int sign = 0;        // +1 or -1 when nonzero
  HalfInt winding;     // value(phi) = sign * exp(i*winding*phi)
  cd value(double phi) const {
    if (is_zero) return {0.0, 0.0};
    return double(sign) * std::exp(cd(0.0, winding.value() * phi));
  }
};
BoundaryValue boundary_value(const WignerIndex& idx, Endpoint ep);

// |LHS - RHS| of the two master recursions (first: d/dbeta; second: the
// (m - m' cos)/sin weighted one). Out-of-range m'+-1 terms are zero.
double recursion_residual_derivative(const WignerIndex& idx, const EulerAngles& a);
double recursion_residual_weight(const WignerIndex& idx, const EulerAngles& a);

enum class Branch { cos_branch, sin_branch };

// Residual of the half-angle coupling identities
//   cos(b/2) e^{i(a+g)/2} D^j_{m+1/2,m'+1/2} =
//     [sqrt((j+m+1/2)(j+m'+1/2)) D^{j-1/2}_{mm'}
//      + sqrt((j-m+1/2)(j-m'+1/2)) D^{j+1/2}_{mm'}]/(2j+1)
// and its sin analogue.  `idx` carries (j, m, m') of the right-hand side.
double half_angle_coupling(const WignerIndex& idx, const EulerAngles& a, Branch br);

// D^j_{mm'}*(phi,theta,0) = (-1)^{m-m'} D^j_{-m,-m'}(phi,theta,0)
cd conj_symmetry_rhs(const WignerIndex& idx, double theta, double phi);

// exact phase i^{2j} of the reflection identity
// D^j_{-m,sigma}(phi+pi, pi-theta, 0) = i^{2j} D^j_{-m,-sigma}(phi,theta,0)
cd reflection_phase(HalfInt j);

// Expansion of (cos|sin)(theta/2) e^{s i phi/2} D^j_{u,v}(phi,theta,0) over
// D^{j-1/2} and D^{j+1/2}; used by the Cartesian decompositions.
struct HalfAngleTerm {
  HalfInt j, u, v;  // term is coeff * D^{j}_{u,v}(phi,theta,0)
  double coeff;
};
// kind: cos_branch pairs with phase e^{+i phi/2} when sign=+1 (raising both
// indices), sin_branch couples u+1/2, v-1/2; sign=-1 gives the conjugated
// (e^{-i phi/2}) forms.
std::pair<HalfAngleTerm, HalfAngleTerm> half_angle_expand(
    Branch kind, int sign, HalfInt j, HalfInt u, HalfInt v);

}  // namespace isochiral::wigner
