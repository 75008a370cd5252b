#pragma once

#include <array>
#include <functional>
#include <vector>

#include "isochiral/algebra.hpp"
#include "isochiral/gauge.hpp"
#include "isochiral/halfint.hpp"

namespace isochiral::angular {

using algebra::cd;
using algebra::Vec4c;
using algebra::Vec8c;

// ---- pattern space ----------------------------------------------------------
// The separated doublet ansatz at fixed (j, m) and fixed radius: the T_{+1/2} block carries
// (f1 D_-1, f2 D_0, f3 D_-1, f4 D_0), the T_{-1/2} block
// (g1 D_0, g2 D_+1, g3 D_0, g4 D_+1), D_sigma = D^j_{-m,sigma}(phi,theta,0).
struct DoubletAnsatz {
  HalfInt j, m;
  std::array<cd, 4> f{};
  std::array<cd, 4> g{};

  // sigma attachment of component k in block iso (0: T+, 1: T-)
  static int sigma_of(int iso, int k) {
    static const int s[2][4] = {{-1, 0, -1, 0}, {0, +1, 0, +1}};
    return s[iso][k];
  }
  bool j_zero_pattern_ok() const;  // j = 0 requires f1=f3=g2=g4=0
  Vec8c evaluate(double theta, double phi) const;
  double norm() const;  // coefficient-space 2-norm
};

DoubletAnsatz operator+(const DoubletAnsatz& a, const DoubletAnsatz& b);
DoubletAnsatz operator*(cd scale, const DoubletAnsatz& a);
double max_coeff_diff(const DoubletAnsatz& a, const DoubletAnsatz& b);

// ---- generic sections -------------------------------------------------------
// n-component complex field on the sphere with optional analytic derivatives;
// missing derivatives fall back to 6th-order central differences.
struct Section {
  int dim = 0;
  using Fn = std::function<Eigen::VectorXcd(double, double)>;
  Fn value;
  Fn dth, dph;                  // optional first derivatives
  Fn dthth, dthph, dphph;       // optional second derivatives

  Eigen::VectorXcd d_theta(double th, double ph) const;
  Eigen::VectorXcd d_phi(double th, double ph) const;
  Eigen::VectorXcd d2_thth(double th, double ph) const;
  Eigen::VectorXcd d2_thph(double th, double ph) const;
  Eigen::VectorXcd d2_phph(double th, double ph) const;
};

Section section_from_ansatz(const DoubletAnsatz& a);  // analytic derivatives

// ---- conserved momentum -----------------------------------------------------
// J_i = l_i + Lambda * (cos phi, sin phi)/sin theta (i = 1, 2), J_3 = l_3,
// with Lambda a diagonal per-component weight matrix.
struct MomentumSpec {
  Eigen::VectorXd weights;
  static MomentumSpec scalar(double lambda);
  static MomentumSpec abelian(HalfInt eg);  // 4 components, i sigma12 - eg
  static MomentumSpec doublet();            // 8 components, i sigma12 + t3
};

Section apply_J(const MomentumSpec& spec, int component, const Section& s);
Section apply_Jsq(const MomentumSpec& spec, const Section& s);

// exact ladder on the ansatz: J_+- Psi_{jm} = -sqrt((j -+ m)(j +- m + 1)) Psi_{j,m+-1}
// (coefficient of the target ansatz with the same f, g)
double ansatz_ladder_coefficient(HalfInt j, HalfInt m, int up);

// ---- the angular operator Sigma_{theta,phi} ---------------------------------
// exact closed action: nu (-i f4, +i f3, +i f2, -i f1) on the T+ block and the
// g analogue; j = 0 gives the zero section.
DoubletAnsatz apply_sigma(const DoubletAnsatz& a);
// differential form on a generic 8-component section (cross-validation path)
Section apply_sigma_differential(const Section& s);

// isotopic mixing term: full coefficient (e r^2 K + 1)/r = 2W/r
DoubletAnsatz apply_mixing(const DoubletAnsatz& a, double two_w_over_r);
algebra::Mat8c mixing_matrix();  // (gamma1 (x) t2 - gamma2 (x) t1)

// ---- K operator -------------------------------------------------------------
struct KResult {
  DoubletAnsatz section;
  double linkage_residual;  // 0 for K-linked eigen inputs (f4 = mu f1, f3 = mu f2)
};
KResult apply_K(const DoubletAnsatz& a);
double k_eigenvalue(HalfInt j, int mu);  // -mu sqrt(j(j+1))

// ---- full Dirac operator on a radially sampled ansatz -----------------------
struct RadialSampledAnsatz {
  HalfInt j, m;
  double epsilon = 0.0, mass = 0.0;
  std::vector<double> r;
  std::array<std::vector<cd>, 8> comp;  // f1..f4, g1..g4 on the grid
};

struct DiracResidual {
  double max_coeff = 0.0;      // sup over grid of the 8 pattern residuals
  double max_pointwise = 0.0;  // sampled at angles
};

// Assembles every term of the Schwinger-gauge spherical-tetrad equation:
// time term via epsilon, radial derivative by 4th-order finite differences,
// angular term via apply_sigma, mixing and mass/Higgs terms from the profiles.
DiracResidual apply_dirac_operator(const RadialSampledAnsatz& s,
                                   const gauge::ProfileFunctions& pf);

}  // namespace isochiral::angular
