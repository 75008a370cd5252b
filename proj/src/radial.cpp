#include "isochiral/radial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace isochiral::radial {

namespace {

const cd I(0.0, 1.0);

double nu_of(HalfInt j) {
  const double jv = j.value();
  return std::sqrt(jv * (jv + 1.0));
}

// 6th-order interior / 5th-order one-sided first derivative
cd deriv_fd(const std::vector<Eigen::VectorXcd>& y, int comp, std::size_t i,
            double h) {
  const std::size_t n = y.size();
  auto v = [&](std::size_t k) { return y[k][comp]; };
  if (i >= 3 && i + 3 < n)
    return (45.0 * (v(i + 1) - v(i - 1)) - 9.0 * (v(i + 2) - v(i - 2)) +
            (v(i + 3) - v(i - 3))) /
           (60.0 * h);
  if (i < 3)
    return (-137.0 / 60.0 * v(i) + 5.0 * v(i + 1) - 5.0 * v(i + 2) +
            10.0 / 3.0 * v(i + 3) - 5.0 / 4.0 * v(i + 4) + 1.0 / 5.0 * v(i + 5)) /
           h;
  return -(-137.0 / 60.0 * v(i) + 5.0 * v(i - 1) - 5.0 * v(i - 2) +
           10.0 / 3.0 * v(i - 3) - 5.0 / 4.0 * v(i - 4) + 1.0 / 5.0 * v(i - 5)) /
         h;
}

}  // namespace

std::string case_name(CaseTag t) {
  switch (t) {
    case CaseTag::general_j: return "general_j";
    case CaseTag::j_zero: return "j_zero";
    case CaseTag::n_reduced: return "n_reduced";
    case CaseTag::free_reduced: return "free_reduced";
    case CaseTag::w_nonzero_reduced: return "w_nonzero_reduced";
    case CaseTag::j0_free: return "j0_free";
    case CaseTag::j0_w: return "j0_w";
    default: return "k_reduced";
  }
}

std::vector<std::string> RadialSystem::component_names() const {
  switch (tag) {
    case CaseTag::general_j:
      return {"f1", "f2", "f3", "f4", "g1", "g2", "g3", "g4"};
    case CaseTag::j_zero:
      return {"f2", "f4", "g1", "g3"};
    case CaseTag::j0_free:
    case CaseTag::j0_w:
      return {"f2", "f4"};
    case CaseTag::k_reduced:
      return {"f1", "f2"};
    default:
      return {"f1", "f2", "f3", "f4"};
  }
}

RadialSystem build_system(HalfInt j, const gauge::ProfileFunctions& pf,
                          double epsilon, double mass) {
  if (!j.is_integer() || j.twice() < 0)
    throw std::domain_error(
        "build_system: the doublet multiplet admits integer j >= 0 only "
        "(Pauli criterion)");
  RadialSystem s;
  s.j = j;
  s.nu = nu_of(j);
  s.epsilon = epsilon;
  s.mass = mass;
  const double e = pf.e, kappa = pf.kappa;
  auto K = pf.k_of_r, F = pf.f_of_r, Ph = pf.phi_of_r;
  s.w_of_r = [e, K](double r) { return 0.5 * (e * r * r * K(r) + 1.0); };
  s.f_tilde = [e, F](double r) { return 0.5 * e * r * F(r); };
  s.phi_tilde = [kappa, Ph](double r) { return 0.5 * kappa * r * Ph(r); };
  const auto w = s.w_of_r, ft = s.f_tilde, pt = s.phi_tilde;
  const double nu = s.nu;
  if (j.twice() == 0) {
    s.tag = CaseTag::j_zero;
    s.size = 4;
    s.coeff = [w, ft, pt, epsilon, mass](double r) {
      // y = (f2, f4, g1, g3)
      const double Fp = epsilon + ft(r), Fm = epsilon - ft(r);
      const double Mp = mass + pt(r), Mm = mass - pt(r);
      const double c = 2.0 * w(r) / r;
      Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(4, 4);
      A(0, 0) = -I * Fp;  A(0, 1) = I * Mp;   A(0, 2) = -c;
      A(1, 1) = I * Fp;   A(1, 0) = -I * Mp;  A(1, 3) = -c;
      A(2, 2) = I * Fm;   A(2, 3) = -I * Mm;  A(2, 0) = -c;
      A(3, 3) = -I * Fm;  A(3, 2) = I * Mm;   A(3, 1) = -c;
      return A;
    };
    return s;
  }
  s.tag = CaseTag::general_j;
  s.size = 8;
  s.coeff = [w, ft, pt, epsilon, mass, nu](double r) {
    // y = (f1..f4, g1..g4)
    const double Fp = epsilon + ft(r), Fm = epsilon - ft(r);
    const double Mp = mass + pt(r), Mm = mass - pt(r);
    const double c = 2.0 * w(r) / r, nr = nu / r;
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(8, 8);
    A(0, 0) = I * Fp;   A(0, 1) = -nr;     A(0, 2) = -I * Mp;
    A(1, 1) = -I * Fp;  A(1, 0) = -nr;     A(1, 4) = -c;  A(1, 3) = I * Mp;
    A(2, 2) = -I * Fp;  A(2, 3) = -nr;     A(2, 0) = I * Mp;
    A(3, 3) = I * Fp;   A(3, 2) = -nr;     A(3, 6) = -c;  A(3, 1) = -I * Mp;
    A(4, 4) = I * Fm;   A(4, 5) = -nr;     A(4, 1) = -c;  A(4, 6) = -I * Mm;
    A(5, 5) = -I * Fm;  A(5, 4) = -nr;     A(5, 7) = I * Mm;
    A(6, 6) = -I * Fm;  A(6, 7) = -nr;     A(6, 3) = -c;  A(6, 4) = I * Mm;
    A(7, 7) = I * Fm;   A(7, 6) = -nr;     A(7, 5) = -I * Mm;
    return A;
  };
  return s;
}

ReduceResult reduce_with_n(const RadialSystem& sys, int delta, cd A_param,
                           const std::vector<double>& probe_grid) {
  if (sys.tag != CaseTag::general_j && sys.tag != CaseTag::j_zero)
    throw std::invalid_argument("reduce_with_n: expects the general or j=0 system");
  const cd Delta = std::exp(cd(0, 1) * A_param);
  constexpr double tol = 1e-12;
  Incompatibility inc;
  for (double r : probe_grid) {
    if (std::abs(sys.f_tilde(r)) > tol) {
      inc.what = "f_tilde";
      inc.offending_r.push_back(r);
    }
  }
  if (!inc.offending_r.empty()) return {std::nullopt, inc};
  for (double r : probe_grid) {
    if (std::abs(sys.phi_tilde(r)) > tol) {
      inc.what = "phi_tilde";
      inc.offending_r.push_back(r);
    }
  }
  if (!inc.offending_r.empty()) return {std::nullopt, inc};
  bool w_zero = true;
  for (double r : probe_grid)
    if (std::abs(sys.w_of_r(r)) > tol) w_zero = false;
  if (!w_zero && std::min(std::abs(Delta - 1.0), std::abs(Delta + 1.0)) > 1e-12) {
    inc.what = "chiral";
    return {std::nullopt, inc};
  }

  RadialSystem out = sys;
  out.delta = delta;
  out.Delta = Delta;
  const double eps = sys.epsilon, mass = sys.mass, nu = sys.nu;
  const auto w = sys.w_of_r;
  const cd dD = double(delta) * Delta;
  if (sys.tag == CaseTag::j_zero) {
    out.size = 2;
    out.tag = w_zero ? CaseTag::j0_free : CaseTag::j0_w;
    out.coeff = [eps, mass, w, dD, w_zero](double r) {
      // y = (f2, f4):  f2' = -i eps f2 - (2W/r) dD f4 + i m f4
      //                f4' = +i eps f4 - (2W/r) dD f2 - i m f2
      Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(2, 2);
      const cd c = w_zero ? cd(0.0) : cd(2.0 * w(r) / r) * dD;
      A(0, 0) = -I * eps;  A(0, 1) = I * mass - c;
      A(1, 1) = I * eps;   A(1, 0) = -I * mass - c;
      return A;
    };
    return {out, std::nullopt};
  }
  out.size = 4;
  out.tag = w_zero ? CaseTag::free_reduced : CaseTag::w_nonzero_reduced;
  out.coeff = [eps, mass, nu, w, dD, w_zero](double r) {
    // y = (f1..f4); the W terms carry delta Delta (= delta Delta^{-1} here)
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(4, 4);
    const double nr = nu / r;
    const cd c = w_zero ? cd(0.0) : cd(2.0 * w(r) / r) * dD;
    A(0, 0) = I * eps;   A(0, 1) = -nr;  A(0, 2) = -I * mass;
    A(1, 1) = -I * eps;  A(1, 0) = -nr;  A(1, 3) = I * mass - c;
    A(2, 2) = -I * eps;  A(2, 3) = -nr;  A(2, 0) = I * mass;
    A(3, 3) = I * eps;   A(3, 2) = -nr;  A(3, 1) = -I * mass - c;
    return A;
  };
  return {out, std::nullopt};
}

RadialSystem reduce_with_k(const RadialSystem& sys, int mu) {
  if (sys.tag != CaseTag::free_reduced)
    throw std::invalid_argument("reduce_with_k: expects the free-reduced system");
  RadialSystem out = sys;
  out.tag = CaseTag::k_reduced;
  out.size = 2;
  out.mu = mu;
  const double eps = sys.epsilon, mass = sys.mass, nu = sys.nu;
  out.coeff = [eps, mass, nu, mu](double r) {
    // f1' = +i eps f1 - (nu/r) f2 - i mu m f2
    // f2' = -i eps f2 - (nu/r) f1 + i mu m f1
    Eigen::MatrixXcd A = Eigen::MatrixXcd::Zero(2, 2);
    A(0, 0) = I * eps;   A(0, 1) = -nu / r - I * double(mu) * mass;
    A(1, 1) = -I * eps;  A(1, 0) = -nu / r + I * double(mu) * mass;
    return A;
  };
  return out;
}

namespace {

// Dormand-Prince 5(4) step
struct DPStep {
  Eigen::VectorXcd y5, y4;
};

DPStep dp45(const std::function<Eigen::MatrixXcd(double)>& A, double r,
            const Eigen::VectorXcd& y, double h) {
  auto f = [&](double x, const Eigen::VectorXcd& v) -> Eigen::VectorXcd {
    return A(x) * v;
  };
  const Eigen::VectorXcd k1 = f(r, y);
  const Eigen::VectorXcd k2 = f(r + h / 5.0, y + h * (k1 / 5.0));
  const Eigen::VectorXcd k3 = f(r + 3 * h / 10.0, y + h * (3.0 / 40 * k1 + 9.0 / 40 * k2));
  const Eigen::VectorXcd k4 =
      f(r + 4 * h / 5.0, y + h * (44.0 / 45 * k1 - 56.0 / 15 * k2 + 32.0 / 9 * k3));
  const Eigen::VectorXcd k5 =
      f(r + 8 * h / 9.0, y + h * (19372.0 / 6561 * k1 - 25360.0 / 2187 * k2 +
                                  64448.0 / 6561 * k3 - 212.0 / 729 * k4));
  const Eigen::VectorXcd k6 =
      f(r + h, y + h * (9017.0 / 3168 * k1 - 355.0 / 33 * k2 + 46732.0 / 5247 * k3 +
                        49.0 / 176 * k4 - 5103.0 / 18656 * k5));
  const Eigen::VectorXcd y5 =
      y + h * (35.0 / 384 * k1 + 500.0 / 1113 * k3 + 125.0 / 192 * k4 -
               2187.0 / 6784 * k5 + 11.0 / 84 * k6);
  const Eigen::VectorXcd k7 = f(r + h, y5);
  const Eigen::VectorXcd y4 =
      y + h * (5179.0 / 57600 * k1 + 7571.0 / 16695 * k3 + 393.0 / 640 * k4 -
               92097.0 / 339200 * k5 + 187.0 / 2100 * k6 + 1.0 / 40 * k7);
  return {y5, y4};
}

// integrate from (r0, y0) to r1 adaptively, landing exactly on r1
Eigen::VectorXcd integrate_to(const std::function<Eigen::MatrixXcd(double)>& A,
                              double r0, const Eigen::VectorXcd& y0, double r1,
                              double tol) {
  double r = r0;
  Eigen::VectorXcd y = y0;
  double h = (r1 - r0) * 0.05;
  if (h == 0.0) return y;
  const double hmin = std::abs(r1 - r0) * 1e-12;
  int guard = 0;
  while ((r1 - r) * (r1 - r0) > 0) {
    if (std::abs(h) > std::abs(r1 - r)) h = r1 - r;
    const DPStep st = dp45(A, r, y, h);
    // error-per-unit-step keeps the global error near tol * interval
    const double err = (st.y5 - st.y4).cwiseAbs().maxCoeff() /
                       std::max(1.0, st.y5.cwiseAbs().maxCoeff()) /
                       std::max(std::abs(h), 1e-300);
    if (err < tol || std::abs(h) <= hmin) {
      r += h;
      y = st.y5;
    }
    const double scale = 0.9 * std::pow(tol / std::max(err, 1e-300), 0.25);
    h *= std::min(4.0, std::max(0.2, scale));
    if (++guard > 2000000)
      throw std::runtime_error("radial solve: step floor reached (stiff blow-up)");
  }
  return y;
}

Eigen::VectorXcd regular_ic(const RadialSystem& sys, double r0) {
  // Frobenius leading branch of A(r) ~ A_{-1}/r: eigenvector of A_{-1} with
  // the largest real exponent
  const double eps_r = 1e-6 * r0;
  const Eigen::MatrixXcd lead = sys.coeff(eps_r) * eps_r;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(lead);
  int best = 0;
  double best_re = es.eigenvalues()[0].real();
  for (int k = 1; k < es.eigenvalues().size(); ++k)
    if (es.eigenvalues()[k].real() > best_re) {
      best = k;
      best_re = es.eigenvalues()[k].real();
    }
  return es.eigenvectors().col(best) * std::pow(r0, best_re);
}

Eigen::VectorXcd asymptotic_ic(const RadialSystem& sys, double rmax, bool outgoing) {
  // constant-coefficient limit: pick the e^{+ikr} (outgoing) or e^{-ikr} branch
  const Eigen::MatrixXcd Ainf = sys.coeff(rmax * 1e6);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(Ainf);
  int best = -1;
  double target = outgoing ? 1.0 : -1.0;
  double best_score = -1e300;
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    const double score = target * es.eigenvalues()[k].imag();
    if (score > best_score) {
      best = k;
      best_score = score;
    }
  }
  return es.eigenvectors().col(best);
}

}  // namespace

RadialSolution solve(const RadialSystem& sys, BoundaryKind boundary,
                     const std::vector<double>& grid, double tol) {
  if (grid.size() < 2) throw std::invalid_argument("solve: grid too small");
  RadialSolution sol;
  sol.grid = grid;
  sol.values.resize(grid.size());
  if (boundary == BoundaryKind::regular_at_origin) {
    // seed the Frobenius branch deep near the origin so the irregular
    // admixture has decayed away by the first grid point
    const double r_seed =
        std::min(grid.front(),
                 1e-3 / std::max({std::abs(sys.epsilon), std::abs(sys.mass), 1.0}));
    Eigen::VectorXcd y = regular_ic(sys, r_seed);
    y = integrate_to(sys.coeff, r_seed, y, grid.front(), tol);
    const double ynorm = y.cwiseAbs().maxCoeff();
    if (ynorm > 0) y /= ynorm;
    sol.values.front() = y;
    for (std::size_t i = 1; i < grid.size(); ++i) {
      y = integrate_to(sys.coeff, grid[i - 1], y, grid[i], tol);
      sol.values[i] = y;
    }
  } else {
    Eigen::VectorXcd y =
        asymptotic_ic(sys, grid.back(), boundary == BoundaryKind::outgoing);
    sol.values.back() = y;
    for (std::size_t i = grid.size() - 1; i-- > 0;) {
      y = integrate_to(sys.coeff, grid[i + 1], y, grid[i], tol);
      sol.values[i] = y;
    }
  }
  sol.residual_norm = residual_on_grid(sys, sol.grid, sol.values);
  return sol;
}

double residual_on_grid(const RadialSystem& sys, const std::vector<double>& grid,
                        const std::vector<Eigen::VectorXcd>& values) {
  if (grid.size() < 11) return 0.0;  // the one-sided stencils need the room
  const double h = grid[1] - grid[0];
  double worst = 0.0;
  double scale = 0.0;
  for (const auto& v : values) scale = std::max(scale, v.cwiseAbs().maxCoeff());
  if (scale == 0.0) scale = 1.0;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const Eigen::MatrixXcd A = sys.coeff(grid[i]);
    const Eigen::VectorXcd rhs = A * values[i];
    for (int cpt = 0; cpt < sys.size; ++cpt) {
      const cd d = deriv_fd(values, cpt, i, h);
      worst = std::max(worst, std::abs(d - rhs[cpt]) / scale);
    }
  }
  return worst;
}

std::vector<Eigen::VectorXcd> lift_k_to_free(const std::vector<Eigen::VectorXcd>& v,
                                             int mu) {
  std::vector<Eigen::VectorXcd> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Eigen::VectorXcd y(4);
    y[0] = v[i][0];
    y[1] = v[i][1];
    y[2] = double(mu) * v[i][1];
    y[3] = double(mu) * v[i][0];
    out[i] = y;
  }
  return out;
}

std::vector<Eigen::VectorXcd> lift_n_to_full(const std::vector<Eigen::VectorXcd>& v,
                                             int delta, cd Delta) {
  const cd dD = double(delta) * Delta;
  std::vector<Eigen::VectorXcd> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Eigen::VectorXcd y(8);
    for (int k = 0; k < 4; ++k) y[k] = v[i][k];
    for (int k = 0; k < 4; ++k) y[4 + k] = dD * v[i][3 - k];
    out[i] = y;
  }
  return out;
}

std::vector<Eigen::VectorXcd> lift_j0_to_full(const std::vector<Eigen::VectorXcd>& v,
                                              int delta, cd Delta) {
  const cd dD = double(delta) * Delta;
  std::vector<Eigen::VectorXcd> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Eigen::VectorXcd y(4);
    y[0] = v[i][0];        // f2
    y[1] = v[i][1];        // f4
    y[2] = dD * v[i][1];   // g1 = delta Delta f4
    y[3] = dD * v[i][0];   // g3 = delta Delta f2
    out[i] = y;
  }
  return out;
}

std::vector<CompatibilityEntry> compatibility_scan(
    const gauge::ProfileFunctions& pf, const std::vector<cd>& a_samples,
    const std::vector<double>& probe_grid) {
  const RadialSystem sys = build_system(HalfInt::whole(1), pf, 1.0, 0.5);
  std::vector<CompatibilityEntry> out;
  for (cd A : a_samples) {
    const ReduceResult rr = reduce_with_n(sys, +1, A, probe_grid);
    CompatibilityEntry e;
    e.A = A;
    if (rr.incompatibility) {
      if (rr.incompatibility->what == "chiral") {
        e.verdict = Admissibility::only_real_delta;
        e.detail = "W != 0 requires e^{iA} = +-1";
      } else {
        e.verdict = Admissibility::inadmissible;
        e.detail = rr.incompatibility->what + " nonzero on the grid";
      }
    } else {
      e.verdict = rr.system->tag == CaseTag::free_reduced ? Admissibility::any_a
                                                          : Admissibility::only_real_delta;
      e.detail = case_name(rr.system->tag);
      if (rr.system->tag == CaseTag::w_nonzero_reduced)
        e.detail += " (admitted: e^{iA} = +-1)";
    }
    out.push_back(e);
  }
  return out;
}

std::string solution_to_csv(const RadialSystem& sys, const RadialSolution& sol) {
  std::ostringstream os;
  os.precision(17);
  os << "# case=" << case_name(sys.tag) << " j=" << sys.j.str()
     << " epsilon=" << sys.epsilon << " mass=" << sys.mass;
  if (sys.delta != 0) os << " delta=" << sys.delta;
  if (sys.mu != 0) os << " mu=" << sys.mu;
  os << " residual_norm=" << sol.residual_norm << "\n";
  os << "r";
  for (const auto& n : sys.component_names()) os << ",Re_" << n << ",Im_" << n;
  os << "\n";
  for (std::size_t i = 0; i < sol.grid.size(); ++i) {
    os << sol.grid[i];
    for (int k = 0; k < sys.size; ++k)
      os << "," << sol.values[i][k].real() << "," << sol.values[i][k].imag();
    os << "\n";
  }
  return os.str();
}

std::string solution_to_json(const RadialSystem& sys, const RadialSolution& sol) {
  nlohmann::json j;
  j["case"] = case_name(sys.tag);
  j["j"] = sys.j.str();
  j["epsilon"] = sys.epsilon;
  j["mass"] = sys.mass;
  j["delta"] = sys.delta;
  j["mu"] = sys.mu;
  j["residual_norm"] = sol.residual_norm;
  j["r"] = sol.grid;
  const auto names = sys.component_names();
  for (int k = 0; k < sys.size; ++k) {
    std::vector<double> re, im;
    for (const auto& v : sol.values) {
      re.push_back(v[k].real());
      im.push_back(v[k].imag());
    }
    j["components"][names[k]] = {{"re", re}, {"im", im}};
  }
  return j.dump(2);
}

}  // namespace isochiral::radial
