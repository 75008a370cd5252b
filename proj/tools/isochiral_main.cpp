// isochiral: verification suites, boundary tables, radial solutions,
// selection-rule sweeps and expectation tables for the doublet-monopole system.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "isochiral/discrete.hpp"
#include "isochiral/radial.hpp"
#include "isochiral/selection.hpp"
#include "isochiral/states.hpp"
#include "isochiral/verify.hpp"
#include "isochiral/wigner.hpp"

namespace {

using isochiral::HalfInt;
using cd = std::complex<double>;

// complex literals of the form "f+gi" / "f-gi" / "gi" / "f"
cd parse_complex(const std::string& text) {
  std::string s = text;
  s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
  if (s.empty()) throw CLI::ValidationError("empty complex literal");
  if (s == "i") return {0, 1};
  if (s == "-i") return {0, -1};
  if (s.back() == 'i') {
    s.pop_back();
    // split at the last +/- that is not an exponent sign or position 0
    for (std::size_t p = s.size(); p-- > 1;) {
      if ((s[p] == '+' || s[p] == '-') && s[p - 1] != 'e' && s[p - 1] != 'E') {
        const std::string re = s.substr(0, p);
        std::string im = s.substr(p);
        if (im == "+") im = "1";
        if (im == "-") im = "-1";
        return {std::stod(re), std::stod(im)};
      }
    }
    return {0.0, std::stod(s)};
  }
  return {std::stod(s), 0.0};
}

HalfInt parse_halfint(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return HalfInt::whole(std::stoi(text));
  if (text.substr(slash + 1) != "2")
    throw CLI::ValidationError("half-integers are written like 5/2");
  return HalfInt(std::stoi(text.substr(0, slash)));
}

struct OutputSink {
  std::string path;  // empty -> stdout
  void write(const std::string& content) const {
    if (path.empty()) {
      std::cout << content;
      return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output path: " + path);
    os << content;
  }
};

// key=value config file; flags override
void apply_config_file(const std::string& path, double& jmax,
                       std::vector<std::string>& a_list, unsigned& seed,
                       std::string& format,
                       std::map<std::string, double>& tol_overrides) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot read config file: " + path);
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t");
      const auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (key == "j_max") jmax = std::stod(val);
    else if (key == "a") a_list.push_back(val);
    else if (key == "seed") seed = unsigned(std::stoul(val));
    else if (key == "format") format = val;
    else if (key.rfind("tol_", 0) == 0) tol_overrides[key.substr(4)] = std::stod(val);
  }
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

int threads_from_env() {
  if (const char* env = std::getenv("ISOCHIRAL_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 1;
}

// ---- tables -----------------------------------------------------------------
std::string boundary_tables_csv(double jmax) {
  using namespace isochiral::wigner;
  std::ostringstream os;
  os << "mprime,j,m,endpoint,zero,sign,winding\n";
  for (int tmp : {1, -1, 2, -2, 3, -3}) {
    for (int tj = std::abs(tmp); tj <= int(std::lround(2 * jmax)); tj += 2) {
      for (int tm = -tj; tm <= tj; tm += 2) {
        const WignerIndex idx{HalfInt(tj), HalfInt(tm), HalfInt(tmp)};
        for (auto ep : {Endpoint::theta_zero, Endpoint::theta_pi}) {
          const auto bv = boundary_value(idx, ep);
          os << HalfInt(tmp).str() << "," << HalfInt(tj).str() << ","
             << HalfInt(tm).str() << ","
             << (ep == Endpoint::theta_zero ? "theta=0" : "theta=pi") << ","
             << (bv.is_zero ? 1 : 0) << "," << (bv.is_zero ? 0 : bv.sign) << ","
             << (bv.is_zero ? "0" : bv.winding.str()) << "\n";
        }
      }
    }
  }
  return os.str();
}

std::string boundary_tables_json(double jmax) {
  using namespace isochiral::wigner;
  nlohmann::json out = nlohmann::json::array();
  for (int tmp : {1, -1, 2, -2, 3, -3}) {
    for (int tj = std::abs(tmp); tj <= int(std::lround(2 * jmax)); tj += 2) {
      for (int tm = -tj; tm <= tj; tm += 2) {
        const WignerIndex idx{HalfInt(tj), HalfInt(tm), HalfInt(tmp)};
        for (auto ep : {Endpoint::theta_zero, Endpoint::theta_pi}) {
          const auto bv = boundary_value(idx, ep);
          nlohmann::json row;
          row["mprime"] = HalfInt(tmp).str();
          row["j"] = HalfInt(tj).str();
          row["m"] = HalfInt(tm).str();
          row["endpoint"] = ep == Endpoint::theta_zero ? "theta=0" : "theta=pi";
          row["zero"] = bv.is_zero;
          if (!bv.is_zero) {
            row["sign"] = bv.sign;
            row["winding"] = bv.winding.str();
          }
          out.push_back(row);
        }
      }
    }
  }
  return out.dump(2) + "\n";
}

// ---- expectation tables -----------------------------------------------------
std::string expectation_table_csv(const std::vector<cd>& a_samples, int ngamma,
                                  HalfInt j) {
  std::ostringstream os;
  os.precision(17);
  os << "A_re,A_im,Gamma,alpha,beta,Re_N,Im_N,case\n";
  for (cd A : a_samples) {
    const char* tag = (A.imag() == 0.0)
                          ? (A.real() == 0.0 ? "a_zero" : "a_real")
                          : (A.real() == 0.0 ? "a_imaginary" : "a_complex");
    for (int ig = 0; ig <= ngamma; ++ig) {
      const double G = 0.5 * M_PI * ig / ngamma;
      const double alpha = 0.9, beta = 0.2;
      const cd n = isochiral::discrete::expectation_n(A, G, alpha, beta, j);
      os << A.real() << "," << A.imag() << "," << G << "," << alpha << ","
         << beta << "," << n.real() << "," << n.imag() << "," << tag << "\n";
    }
  }
  return os.str();
}

// ---- selection sweep --------------------------------------------------------
std::string selection_table_csv(double jmax) {
  using isochiral::selection::Omega;
  using isochiral::selection::Selection;
  std::ostringstream os;
  os << "Omega,j,jprime,delta,deltaprime,verdict\n";
  for (int om : {+1, -1})
    for (int tj = 0; tj <= int(std::lround(jmax)); ++tj)
      for (int tjp = 0; tjp <= int(std::lround(jmax)); ++tjp)
        for (int d : {+1, -1})
          for (int dp : {+1, -1}) {
            const Selection v = isochiral::selection::selection_predicate(
                om > 0 ? Omega::plus : Omega::minus, HalfInt::whole(tj),
                HalfInt::whole(tjp), d, dp);
            os << om << "," << tj << "," << tjp << "," << d << "," << dp << ","
               << (v == Selection::vanishes ? "vanishes" : "allowed") << "\n";
          }
  return os.str();
}

// truth table with a quadrature |ME| column for the x3 observable
std::string selection_quadrature_csv(int ntheta, int nr) {
  using namespace isochiral::selection;
  QuadratureSpec q;
  q.ntheta = std::max(16, ntheta);
  q.nphi = 64;
  if (nr % 2 == 0) ++nr;
  q.rgrid.resize(std::max(nr, 21));
  for (std::size_t i = 0; i < q.rgrid.size(); ++i)
    q.rgrid[i] = 0.4 + 3.6 * double(i) / double(q.rgrid.size() - 1);
  RadialProfile prof;
  prof.f1 = [](double r) { return std::exp(-0.7 * (r - 1.4) * (r - 1.4)); };
  prof.f2 = [](double r) { return r * std::exp(-0.9 * (r - 1.1) * (r - 1.1)); };
  std::ostringstream os;
  os.precision(6);
  os << "observable,Omega,j,jprime,delta,deltaprime,verdict,abs_me\n";
  const ObservableSpec obs = observable_position(2);
  for (int tj : {1, 2})
    for (int tjp : {1, 2})
      for (int d : {+1, -1})
        for (int dp : {+1, -1}) {
          StateSpec bra, ket;
          bra.j = HalfInt::whole(tj);
          ket.j = HalfInt::whole(tjp);
          bra.m = ket.m = HalfInt::whole(1);
          bra.delta = d;
          ket.delta = dp;
          bra.mu = ket.mu = +1;
          bra.radial = ket.radial = prof;
          const auto me = matrix_element(bra, obs, ket, q);
          const auto v = selection_predicate(Omega::minus, bra.j, ket.j, d, dp);
          os << "x3,-1," << tj << "," << tjp << "," << d << "," << dp << ","
             << (v == Selection::vanishes ? "vanishes" : "allowed") << ","
             << std::abs(me.total) << "\n";
        }
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "isochiral: Wigner-function, gauge-frame, discrete-symmetry and radial "
      "machinery for a Dirac doublet in an embedded-Abelian monopole field"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string out_path, format = "csv", config_path, inject_fault;
  std::string jmax_text = "7/2";
  double jmax = 3.5;
  std::vector<std::string> a_flags;
  unsigned seed = 20250811;
  int grid_r = 801, grid_theta = 64;
  app.add_option("--config", config_path, "key=value config file");
  app.add_option("--j-max", jmax_text, "largest j in sweeps/tables (e.g. 2 or 7/2)");
  app.add_option("--a", a_flags, "chiral parameter(s), complex 'f+gi'")
      ->take_all();
  app.add_option("--grid-r", grid_r, "radial grid points");
  app.add_option("--grid-theta", grid_theta, "theta quadrature order");
  app.add_option("--out", out_path, "output path (default: stdout)");
  app.add_option("--format", format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--seed", seed, "pseudo-random seed");

  auto* tables = app.add_subcommand("tables", "boundary-value tables at theta = 0, pi");
  auto* verifyc = app.add_subcommand("verify", "run every property suite");
  verifyc->add_option("--inject-fault", inject_fault,
                      "test harness: corrupt a named evaluation route");
  auto* radialc = app.add_subcommand("radial", "solve a reduced radial system");
  std::string jr = "1", boundary = "regular";
  double epsilon = 1.5, mass = 0.7, rmin = 0.5, rmax = 10.0;
  int delta = +1, mu = +1;
  bool simplest = true;
  radialc->add_option("--j", jr, "doublet j (integer)");
  radialc->add_option("--epsilon", epsilon, "energy");
  radialc->add_option("--mass", mass, "mass");
  radialc->add_option("--delta", delta, "N_A eigen label")->check(CLI::IsMember({-1, 1}));
  radialc->add_option("--mu", mu, "K eigen label (0: skip the K reduction)")
      ->check(CLI::IsMember({-1, 0, 1}));
  radialc->add_option("--r-min", rmin, "grid start");
  radialc->add_option("--r-max", rmax, "grid end");
  radialc->add_option("--boundary", boundary, "regular | incoming | outgoing")
      ->check(CLI::IsMember({"regular", "incoming", "outgoing"}));
  radialc->add_flag("--simplest,!--free", simplest,
                    "embedded monopole (default); --free: free doublet, W = 1/2");
  auto* selectionc = app.add_subcommand("selection", "selection-rule truth tables");
  bool sel_quadrature = false;
  selectionc->add_flag("--quadrature", sel_quadrature,
                       "cross-check each row by matrix-element quadrature");
  auto* expectationc = app.add_subcommand("expectation", "expectation-value tables");
  int ngamma = 32;
  expectationc->add_option("--n-gamma", ngamma, "Gamma grid size");
  auto* decomposec =
      app.add_subcommand("decompose", "Cartesian-gauge block decomposition");
  std::string jd = "1", md = "0";
  decomposec->add_option("--j", jd, "doublet j (integer)");
  decomposec->add_option("--m", md, "projection m");
  decomposec->add_option("--delta", delta, "N_A eigen label");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    jmax = parse_halfint(jmax_text).value();
    std::map<std::string, double> tol_overrides;
    if (!config_path.empty())
      apply_config_file(config_path, jmax, a_flags, seed, format, tol_overrides);
    std::vector<cd> a_samples;
    for (const auto& s : a_flags) a_samples.push_back(parse_complex(s));
    if (a_samples.empty()) a_samples = {cd(0, 0)};
    const OutputSink sink{out_path};

    if (*tables) {
      sink.write(format == "csv" ? boundary_tables_csv(jmax)
                                 : boundary_tables_json(jmax));
      return 0;
    }

    if (*verifyc) {
      isochiral::verify::Options opt;
      opt.seed = seed;
      opt.j_max_twice = int(std::lround(2 * jmax));
      opt.inject_fault = inject_fault;
      opt.threads = threads_from_env();
      opt.tolerance_overrides = tol_overrides;
      const auto results = isochiral::verify::run_all(opt);
      nlohmann::json rep;
      rep["seed"] = seed;
      rep["groups"] = nlohmann::json::array();
      bool all_ok = true;
      for (const auto& r : results) {
        nlohmann::json g;
        g["name"] = r.name;
        g["residual"] = r.residual;
        g["tolerance"] = r.tolerance;
        g["passed"] = r.passed;
        if (!r.detail.empty()) g["detail"] = r.detail;
        rep["groups"].push_back(g);
        all_ok = all_ok && r.passed;
        std::cerr << (r.passed ? "[ok]   " : "[FAIL] ") << r.name
                  << "  residual=" << fmt_double(r.residual)
                  << " tol=" << fmt_double(r.tolerance) << "\n";
      }
      rep["passed"] = all_ok;
      sink.write(rep.dump(2) + "\n");
      return all_ok ? 0 : 1;
    }

    if (*radialc) {
      using namespace isochiral::radial;
      const HalfInt j = parse_halfint(jr);
      const auto pf = simplest
                          ? isochiral::gauge::ProfileFunctions::embedded_abelian()
                          : isochiral::gauge::ProfileFunctions::trivial();
      std::vector<double> grid(grid_r);
      for (int i = 0; i < grid_r; ++i)
        grid[i] = rmin + (rmax - rmin) * double(i) / double(grid_r - 1);
      const RadialSystem base = build_system(j, pf, epsilon, mass);
      const auto rr = reduce_with_n(base, delta, a_samples.front(), grid);
      if (!rr.system) {
        nlohmann::json err;
        err["error"] = "incompatible reduction";
        err["what"] = rr.incompatibility->what;
        err["offending_r"] = rr.incompatibility->offending_r;
        sink.write(err.dump(2) + "\n");
        return 1;
      }
      RadialSystem sys = *rr.system;
      if (mu != 0 && sys.tag == CaseTag::free_reduced) sys = reduce_with_k(sys, mu);
      const BoundaryKind bk = boundary == "regular" ? BoundaryKind::regular_at_origin
                              : boundary == "incoming" ? BoundaryKind::incoming
                                                       : BoundaryKind::outgoing;
      const RadialSolution sol = solve(sys, bk, grid);
      sink.write(format == "csv" ? solution_to_csv(sys, sol)
                                 : solution_to_json(sys, sol));
      return 0;
    }

    if (*selectionc) {
      sink.write(sel_quadrature
                     ? selection_quadrature_csv(grid_theta, grid_r)
                     : selection_table_csv(jmax > 2 ? 2 : jmax));
      return 0;
    }

    if (*expectationc) {
      if (format == "json") {
        nlohmann::json out = nlohmann::json::array();
        for (cd A : a_samples) {
          nlohmann::json blk;
          blk["A"] = {A.real(), A.imag()};
          blk["case"] = A.imag() == 0.0
                            ? (A.real() == 0.0 ? "a_zero" : "a_real")
                            : (A.real() == 0.0 ? "a_imaginary" : "a_complex");
          for (int ig = 0; ig <= ngamma; ++ig) {
            const double G = 0.5 * M_PI * ig / ngamma;
            const cd n = isochiral::discrete::expectation_n(A, G, 0.9, 0.2,
                                                            HalfInt::whole(1));
            blk["rows"].push_back({G, n.real(), n.imag()});
          }
          out.push_back(blk);
        }
        sink.write(out.dump(2) + "\n");
      } else {
        sink.write(expectation_table_csv(a_samples, ngamma, HalfInt::whole(1)));
      }
      return 0;
    }

    if (*decomposec) {
      const HalfInt j = parse_halfint(jd), m = parse_halfint(md);
      isochiral::angular::DoubletAnsatz a;
      a.j = j;
      a.m = m;
      std::mt19937_64 gen(seed);
      std::uniform_real_distribution<double> u(-1, 1);
      if (j.twice() == 0) {
        a.f = {0.0, cd(u(gen), u(gen)), 0.0, cd(u(gen), u(gen))};
      } else {
        for (int k = 0; k < 4; ++k) a.f[k] = cd(u(gen), u(gen));
      }
      const cd A = a_samples.front();
      const cd link = double(delta) * std::exp(cd(0, 1) * A);
      if (j.twice() == 0) {
        a.g = {link * a.f[3], 0.0, link * a.f[1], 0.0};
      } else {
        for (int k = 0; k < 4; ++k) a.g[k] = link * a.f[3 - k];
      }
      const auto tab =
          isochiral::states::decompose_cartesian(a, std::exp(cd(0, 1) * A), delta);
      nlohmann::json out;
      out["j"] = j.str();
      out["m"] = m.str();
      out["A"] = {A.real(), A.imag()};
      out["delta"] = delta;
      const char* names[4] = {"Tplus_jminus", "Tplus_jplus", "Tminus_jminus",
                              "Tminus_jplus"};
      for (int b = 0; b < 4; ++b) {
        nlohmann::json blk;
        blk["j"] = tab.block_j(b).str();
        blk["m"] = tab.block_m(b).str();
        for (int k = 0; k < 4; ++k)
          blk["coeff"].push_back({tab.coeff[b][k].real(), tab.coeff[b][k].imag()});
        out["blocks"][names[b]] = blk;
      }
      sink.write(out.dump(2) + "\n");
      return 0;
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 2;
}
