#pragma once

#include <complex>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isochiral/algebra.hpp"
#include "isochiral/gauge.hpp"
#include "isochiral/halfint.hpp"

namespace isochiral::radial {

using algebra::cd;

enum class CaseTag {
  general_j,          // 8 equations
  j_zero,             // 4 equations (f2, f4, g1, g3)
  n_reduced,          // 4 equations with (delta, Delta) couplings
  free_reduced,       // 4 equations, W = 0
  w_nonzero_reduced,  // 4 equations, W != 0, Delta = +-1
  j0_free,            // 2 equations (f2, f4)
  j0_w,               // 2 equations with the W term
  k_reduced,          // 2 equations (f1, f2)
};
std::string case_name(CaseTag t);

// first-order linear system y' = A(r) y
struct RadialSystem {
  CaseTag tag = CaseTag::general_j;
  int size = 8;
  HalfInt j;
  double nu = 0.0;
  double epsilon = 0.0, mass = 0.0;
  int delta = 0;            // set on N-reduced systems
  int mu = 0;               // set on K-reduced systems
  cd Delta{1.0, 0.0};       // e^{iA} on N-reduced systems
  std::function<double(double)> w_of_r;      // (e r^2 K + 1)/2
  std::function<double(double)> f_tilde;     // e r F / 2
  std::function<double(double)> phi_tilde;   // kappa r Phi / 2
  std::function<Eigen::MatrixXcd(double)> coeff;  // A(r)

  std::vector<std::string> component_names() const;
};

RadialSystem build_system(HalfInt j, const gauge::ProfileFunctions& pf,
                          double epsilon, double mass);

// outcome of reduce_with_n
struct Incompatibility {
  std::string what;                    // "f_tilde", "phi_tilde" or "chiral"
  std::vector<double> offending_r;     // grid points where the obstruction sits
};
struct ReduceResult {
  std::optional<RadialSystem> system;
  std::optional<Incompatibility> incompatibility;
};

ReduceResult reduce_with_n(const RadialSystem& sys, int delta, cd A,
                           const std::vector<double>& probe_grid);

RadialSystem reduce_with_k(const RadialSystem& sys, int mu);

enum class BoundaryKind { regular_at_origin, incoming, outgoing };

struct RadialSolution {
  std::vector<double> grid;
  std::vector<Eigen::VectorXcd> values;  // one state vector per grid point
  double residual_norm = 0.0;            // |y'_fd - A y| sup over the grid
};

// adaptive Dormand-Prince RK45, dense output onto `grid`
RadialSolution solve(const RadialSystem& sys, BoundaryKind boundary,
                     const std::vector<double>& grid, double tol = 1e-10);

// substitute an arbitrary sampled solution into the system (6th-order FD)
double residual_on_grid(const RadialSystem& sys, const std::vector<double>& grid,
                        const std::vector<Eigen::VectorXcd>& values);

// lift reduced solutions back through the linkage maps
// k_reduced (f1,f2) -> free_reduced (f1..f4) via f4 = mu f1, f3 = mu f2
std::vector<Eigen::VectorXcd> lift_k_to_free(const std::vector<Eigen::VectorXcd>& v,
                                             int mu);
// 4-component reduced (f1..f4) -> 8-component (f, g) via g_i = delta Delta f_{5-i}
std::vector<Eigen::VectorXcd> lift_n_to_full(const std::vector<Eigen::VectorXcd>& v,
                                             int delta, cd Delta);
// j0 pair (f2,f4) -> j_zero 4-component (f2,f4,g1,g3)
std::vector<Eigen::VectorXcd> lift_j0_to_full(const std::vector<Eigen::VectorXcd>& v,
                                              int delta, cd Delta);

enum class Admissibility { any_a, only_real_delta, inadmissible };
struct CompatibilityEntry {
  cd A;
  Admissibility verdict;
  std::string detail;
};
std::vector<CompatibilityEntry> compatibility_scan(
    const gauge::ProfileFunctions& pf, const std::vector<cd>& a_samples,
    const std::vector<double>& probe_grid);

// CSV export: r, Re/Im of each component; metadata header lines start with '#'
std::string solution_to_csv(const RadialSystem& sys, const RadialSolution& sol);
std::string solution_to_json(const RadialSystem& sys, const RadialSolution& sol);

}  // namespace isochiral::radial
