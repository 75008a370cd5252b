#pragma once

#include <array>
#include <optional>
#include <vector>

#include "isochiral/algebra.hpp"
#include "isochiral/angular.hpp"
#include "isochiral/discrete.hpp"
#include "isochiral/radial.hpp"
#include "isochiral/wigner.hpp"

namespace isochiral::states {

using algebra::cd;
using algebra::Vec4c;
using algebra::Vec8c;
using Vec2c = Eigen::Vector2cd;

// ---- Abelian 4-component ansatz ---------------------------------------------
// components (f1 D_{eg-1/2}, f2 D_{eg+1/2}, f3 D_{eg-1/2}, f4 D_{eg+1/2}),
// D_sigma = D^j_{-m,sigma}(phi,theta,0); out-of-range attachments are absent.
struct AbelianAnsatz {
  HalfInt eg, j, m;
  std::array<cd, 4> f{};
  Vec4c evaluate(double theta, double phi) const;
  HalfInt sigma_of(int k) const {
    return (k % 2 == 0) ? eg - HalfInt(1) : eg + HalfInt(1);
  }
};

// general state with the mu linkage f4 = mu f1, f3 = mu f2 (j > j_min)
AbelianAnsatz build_abelian(HalfInt eg, HalfInt j, HalfInt m, int mu, cd f1, cd f2);
// minimal j = |eg| - 1/2 truncation: only the surviving pair of rows
AbelianAnsatz build_abelian_minimal(HalfInt eg, HalfInt m, cd fa, cd fb);

// free fixed-parity state (eg = 0): (f, g, delta g, delta f) pattern,
// parity eigenvalue delta (-1)^{j+1}
AbelianAnsatz build_free_parity(HalfInt j, HalfInt m, int delta, cd f, cd g);
// the z-deformed massless family: diag(I, zI) applied to build_free_parity
AbelianAnsatz build_massless_z_state(HalfInt j, HalfInt m, int delta, cd z, cd f, cd g);

// ---- composite doublet states -----------------------------------------------
struct DoubletState {
  double epsilon = 0.0;
  double mass = 0.0;
  HalfInt j, m;
  int delta = +1;
  int mu = 0;  // 0 = not K-linked
  discrete::ChiralParameter a;
  gauge::IsoGauge iso_gauge = gauge::IsoGauge::Schwinger;
  discrete::Tetrad tetrad = discrete::Tetrad::spherical;
  bool w_zero_family = true;  // delta*Delta linkage (W=0) vs delta only
  radial::CaseTag case_tag = radial::CaseTag::free_reduced;
  std::vector<double> rgrid;
  std::vector<Eigen::VectorXcd> fvals;  // 4-component (f1..f4) per grid point

  cd linkage() const {  // coefficient of the T_{-1/2} block
    return w_zero_family ? double(delta) * a.delta() : cd(delta, 0);
  }
  // the separated-ansatz pattern at a grid index (Schwinger gauge, spherical tetrad)
  angular::DoubletAnsatz ansatz_at(std::size_t ir) const;
  angular::DoubletAnsatz ansatz_from(const Eigen::VectorXcd& f4) const;
};

// assembles the composite state from a reduced-system radial solution
DoubletState build_doublet(double epsilon, double mass, HalfInt j, HalfInt m,
                           int delta, discrete::ChiralParameter a,
                           const radial::RadialSystem& sys,
                           const radial::RadialSolution& sol);

// ---- factorization over isotopic unit vectors and Abelian states -------------
struct Factorization {
  cd coeff_plus;               // T_{+1/2} (x) Phi^{eg=-1/2}
  cd coeff_minus;              // T_{-1/2} (x) Phi^{eg=+1/2}
  AbelianAnsatz phi_minus_half;
  AbelianAnsatz phi_plus_half;
  double reconstruction_error = 0.0;  // pointwise, against the direct ansatz
};
Factorization factorize(const angular::DoubletAnsatz& a, int delta, int mu, cd Delta);
Factorization factorize_j0(const angular::DoubletAnsatz& a, int delta, cd Delta);

// ---- gauge and tetrad translations ------------------------------------------
// isotopic gauge change on an 8-component section: Psi_S = u(c') Psi_D = B Psi_C
angular::Section to_gauge(const angular::Section& s, gauge::IsoGauge from,
                          gauge::IsoGauge to);
algebra::Mat2c iso_gauge_matrix(gauge::IsoGauge from, gauge::IsoGauge to,
                                double theta, double phi);

// spherical -> Cartesian tetrad, then the Weyl -> Pauli frame change
// phi = (xi + eta)/sqrt(2), chi = (xi - eta)/sqrt(2).
// 4-component input -> (phi, chi) pair of 2-component sections;
// 8-component input -> pair of 4-component (iso x 2) sections.
struct PauliPair {
  angular::Section top;     // "phi"
  angular::Section bottom;  // "chi"
};
PauliPair to_pauli_cartesian(const angular::Section& s);

// ---- spinor monopole harmonics ----------------------------------------------
enum class HarmonicKind { xi_1, xi_2, omega_plus, omega_minus, chi_plus, chi_minus };
Vec2c monopole_harmonic(HarmonicKind kind, HalfInt j, HalfInt m, HalfInt k,
                        double theta, double phi);

// ---- single-valuedness diagnostics ------------------------------------------
struct WindingReport {
  enum class Kind { single_valued, phase_winding, indeterminate } kind;
  double winding = 0.0;  // the offending (non-integer) winding when present
  std::vector<double> component_windings;
};
WindingReport single_valuedness_check(const angular::Section& s,
                                      wigner::Endpoint axis_point);

// ---- Cartesian-gauge block decomposition --------------------------------------
struct CartesianBlockTable {
  HalfInt j, m;
  // blocks: 0 (T+, j-1/2), 1 (T+, j+1/2), 2 (T-, j-1/2), 3 (T-, j+1/2)
  // coeff[b][k] multiplies D^{j_b}_{-m_b, -+1/2} with the (-.+,-,+) pattern
  std::array<std::array<cd, 4>, 4> coeff{};
  HalfInt block_j(int b) const { return b % 2 == 0 ? j - HalfInt(1) : j + HalfInt(1); }
  HalfInt block_m(int b) const { return b < 2 ? m - HalfInt(1) : m + HalfInt(1); }
  Vec8c evaluate(double theta, double phi) const;
};
CartesianBlockTable decompose_cartesian(const angular::DoubletAnsatz& a, cd Delta,
                                        int delta);

// ---- composite Cartesian-tetrad two-column functions ---------------------------
struct OmegaTerm {
  int iso;        // 0: T+, 1: T-
  int pm;         // +1: Omega^{(+)}, -1: Omega^{(-)}
  HalfInt jp, mp; // the Omega_{jp,mp} label
  cd coeff;
};
struct CompositeSigma {
  std::vector<OmegaTerm> plus;   // Sigma^{(+)}
  std::vector<OmegaTerm> minus;  // Sigma^{(-)}
  Eigen::Vector4cd evaluate(bool upper, double theta, double phi) const;
};
CompositeSigma cartesian_doublet_sigma(const angular::DoubletAnsatz& a, cd Delta,
                                       int delta);

// helpers used by tests: section views of the ansatz families
angular::Section section_from_abelian(const AbelianAnsatz& a);

// ---- exports ------------------------------------------------------------
// sampled state values over a structured (r_index, theta, phi) grid
std::string state_to_csv(const DoubletState& st, const std::vector<double>& thetas,
                         const std::vector<double>& phis);
// harmonic values tabulated as JSON
std::string harmonic_table_json(HarmonicKind kind, HalfInt j, HalfInt m, HalfInt k,
                                const std::vector<double>& thetas,
                                const std::vector<double>& phis);

}  // namespace isochiral::states
