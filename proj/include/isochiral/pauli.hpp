#pragma once

#include <complex>
#include <vector>

#include "isochiral/halfint.hpp"

namespace isochiral::pauli {

using cd = std::complex<double>;

enum class Reason {
  ok,
  lambda_not_half_integer,
  j_below_floor,
  j_lambda_offset_not_integer,
};

struct PauliVerdict {
  bool allowed = false;
  Reason reason = Reason::ok;
};

// Pauli criterion: allowed iff 2*lambda integer, j >= |lambda| and
// j - |lambda| integer. Real-valued inputs yield a verdict, never a throw.
PauliVerdict check_pauli(double j, double lambda);
inline PauliVerdict check_pauli(HalfInt j, HalfInt lambda) {
  return check_pauli(j.value(), lambda.value());
}

// {|lambda|, |lambda|+1, ...}, `count` entries
std::vector<HalfInt> allowed_j_values(HalfInt lambda, int count);

// j floor for the bispinor particle with weights eg -+ 1/2 on its components:
// j = ||eg|-1/2|, ||eg|-1/2|+1, ...
std::vector<HalfInt> allowed_j_values_bispinor(HalfInt eg, int count);

// The lowest-weight annihilation test J_- Phi_{j,-j} = 0 carried out by an
// exact symbolic ladder started from the highest-weight closed form.  For
// allowed pairs the ladder closes after 2j+1 lowerings (residual ~ roundoff);
// for violating pairs it is probed at the first weight below -j (O(1)).
// Residual is sup-norm relative to the previous ladder stage on an interior
// theta grid.
double lowering_annihilation_residual(double j, double lambda);

// Phi^lambda_{jm}(theta,phi): unit-L2-normalized spherical function built from
// the Rodrigues-type closed form (derivative expanded exactly).
class PhiFunction {
 public:
  PhiFunction(HalfInt j, HalfInt m, HalfInt lambda);

  cd operator()(double theta, double phi) const;
  HalfInt j() const { return j_; }
  HalfInt m() const { return m_; }
  HalfInt lambda() const { return lam_; }
  double norm_constant() const { return norm_; }

 private:
  HalfInt j_, m_, lam_;
  double norm_;                // N^lambda_{jm}
  double exp_minus_, exp_plus_;  // (1-c)^a (1+c)^b prefactor exponents
  std::vector<double> poly_;   // coefficients of p(c)
};

inline PhiFunction build_phi(HalfInt j, HalfInt m, HalfInt lambda) {
  return PhiFunction(j, m, lambda);
}

// sqrt((2j+1)/4pi) * (-1)^{j-m} * D^j_{-m,-lambda}(phi,theta,0); the D-side of
// the Phi <-> Wigner identity.
cd phi_from_wigner(HalfInt j, HalfInt m, HalfInt lambda, double theta, double phi);

}  // namespace isochiral::pauli
