#pragma once

#include <functional>
#include <string>
#include <vector>

#include "isochiral/algebra.hpp"
#include "isochiral/angular.hpp"
#include "isochiral/discrete.hpp"
#include "isochiral/states.hpp"

namespace isochiral::selection {

using algebra::cd;
using algebra::Mat2c;
using algebra::Mat4c;
using algebra::Mat8c;

// composite observable G(x) = (g_ij(x)) (x) G0(x): scalar isotopic entries
// tensored with one bispinor matrix field, evaluated in spherical coordinates
struct ObservableSpec {
  std::string label;
  std::array<std::array<std::function<cd(double, double, double)>, 2>, 2> iso;
  std::function<Mat4c(double, double, double)> lorentz;

  Mat8c full(double r, double th, double ph) const;
  Mat8c full_reflected(double r, double th, double ph) const;  // at (r, pi-th, ph+pi)
};

// standard test corpus entries
ObservableSpec observable_identity();
ObservableSpec observable_position(int axis);          // x, y or z times I4
ObservableSpec observable_sigma3();                    // sigma3 (x) I4
ObservableSpec observable_sigma3_position();           // sigma3 (x) x3 I4 (composite scalar)
ObservableSpec observable_offdiag_sigma1_gamma0();     // sigma1 (x) gamma0-type probe

enum class Omega { plus, minus, indefinite };

struct ParityClass {
  Omega omega = Omega::indefinite;
  cd a_context;
  double residual_plus = 0.0;   // classification residuals for both signs
  double residual_minus = 0.0;
};

// tests (pi_A^+ (x) P_b) G(-x) (pi_A (x) P_b) = Omega G(x) over a Sobol sample
ParityClass classify(const ObservableSpec& obs, cd A, int nsample = 200,
                     double tol = 1e-10);

enum class Selection { vanishes, allowed };
// vanishes iff 1 + Omega delta delta' (-1)^{j+j'} == 0
Selection selection_predicate(Omega omega, HalfInt j, HalfInt jprime, int delta,
                              int deltaprime);

struct QuadratureSpec {
  int ntheta = 64;
  int nphi = 128;
  std::vector<double> rgrid;  // odd count, uniform (Simpson weights)
};

struct MatrixElement {
  cd total;
  cd term_diag_plus;    // <T+ block | G | T+ block>
  cd term_diag_minus;   // |e^{iA}|^2-weighted T- block term
  cd term_cross;        // isotopic cross term
};

// radial profile carried by both states: f_i(r) columns sampled on rgrid
struct RadialProfile {
  std::function<cd(double)> f1, f2;  // the reduced radial pair; f3, f4 via mu
};

// bra/ket described by quantum numbers + chiral parameter; the angular factors
// are the exact composite doublet patterns
struct StateSpec {
  HalfInt j, m;
  int delta = +1;
  int mu = +1;
  cd A{0.0, 0.0};
  RadialProfile radial;
};

MatrixElement matrix_element(const StateSpec& bra, const ObservableSpec& obs,
                             const StateSpec& ket, const QuadratureSpec& q);

// folding check: full integral vs [1 + Omega dd'(-1)^{j+j'}] x half-space
struct FoldingCheck {
  cd full;
  cd folded;  // factor times the half-space integral
  double residual() const { return std::abs(full - folded); }
};
FoldingCheck half_space_folding(const StateSpec& bra, const ObservableSpec& obs,
                                const StateSpec& ket, Omega omega,
                                const QuadratureSpec& q);

// the Abelian negative control
struct AbelianDemo {
  double charge_flip_residual;    // Phi^{+eg}(-x) vs P_b Phi^{-eg}(x)
  cd m_eigenvalue;                // mu (-1)^{j+1} of the composite M operator
  double best_same_function_fit;  // inf over candidate matrices of the same-function misfit
  double eg_zero_residual;        // the same-function reflection relation at eg = 0
};
AbelianDemo abelian_no_rule_demo(HalfInt eg, HalfInt j, HalfInt m, int mu);

}  // namespace isochiral::selection
