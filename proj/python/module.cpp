#include <pybind11/complex.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "isochiral/discrete.hpp"
#include "isochiral/gauge.hpp"
#include "isochiral/pauli.hpp"
#include "isochiral/radial.hpp"
#include "isochiral/selection.hpp"
#include "isochiral/states.hpp"
#include "isochiral/verify.hpp"
#include "isochiral/wigner.hpp"

namespace py = pybind11;
using namespace isochiral;
using cd = std::complex<double>;

namespace {

HalfInt hi(double x) { return HalfInt::from_double(x); }

std::vector<std::vector<double>> mat3_to_list(const gauge::Mat3& m) {
  std::vector<std::vector<double>> out(3, std::vector<double>(3));
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out[i][k] = m(i, k);
  return out;
}

std::vector<std::vector<cd>> mat2c_to_list(const algebra::Mat2c& m) {
  std::vector<std::vector<cd>> out(2, std::vector<cd>(2));
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) out[i][k] = m(i, k);
  return out;
}

}  // namespace

PYBIND11_MODULE(_isochiral, m) {
  m.doc() =
      "Wigner-function, gauge-frame, discrete-symmetry and radial machinery "
      "for a Dirac doublet in an embedded-Abelian monopole field";

  // ---- wigner ----
  m.def("small_d",
        [](double j, double mm, double mp, double beta) {
          return wigner::small_d({hi(j), hi(mm), hi(mp)}, beta);
        },
        py::arg("j"), py::arg("m"), py::arg("mprime"), py::arg("beta"));
  m.def("big_d",
        [](double j, double mm, double mp, double alpha, double beta, double gamma) {
          return wigner::big_D({hi(j), hi(mm), hi(mp)}, {alpha, beta, gamma});
        },
        py::arg("j"), py::arg("m"), py::arg("mprime"), py::arg("alpha"),
        py::arg("beta"), py::arg("gamma") = 0.0);
  m.def("boundary_value",
        [](double j, double mm, double mp, const std::string& endpoint, double phi) {
          const auto bv = wigner::boundary_value(
              {hi(j), hi(mm), hi(mp)},
              endpoint == "theta_zero" ? wigner::Endpoint::theta_zero
                                       : wigner::Endpoint::theta_pi);
          py::dict d;
          d["zero"] = bv.is_zero;
          d["value"] = bv.value(phi);
          if (!bv.is_zero) {
            d["sign"] = bv.sign;
            d["winding"] = bv.winding.value();
          }
          return d;
        },
        py::arg("j"), py::arg("m"), py::arg("mprime"), py::arg("endpoint"),
        py::arg("phi") = 0.0);
  m.def("recursion_residuals",
        [](double j, double mm, double mp, double alpha, double beta, double gamma) {
          const wigner::WignerIndex idx{hi(j), hi(mm), hi(mp)};
          const wigner::EulerAngles a{alpha, beta, gamma};
          return py::make_tuple(wigner::recursion_residual_derivative(idx, a),
                                wigner::recursion_residual_weight(idx, a));
        });

  // ---- pauli ----
  m.def("check_pauli", [](double j, double lam) {
    const auto v = pauli::check_pauli(j, lam);
    const char* reason = v.reason == pauli::Reason::ok ? "ok"
                         : v.reason == pauli::Reason::lambda_not_half_integer
                             ? "lambda_not_half_integer"
                         : v.reason == pauli::Reason::j_below_floor
                             ? "j_below_floor"
                             : "j_lambda_offset_not_integer";
    return py::make_tuple(v.allowed, std::string(reason));
  });
  m.def("allowed_j_values", [](double lam, int count) {
    std::vector<double> out;
    for (const auto& j : pauli::allowed_j_values(hi(lam), count))
      out.push_back(j.value());
    return out;
  });
  m.def("allowed_j_values_bispinor", [](double eg, int count) {
    std::vector<double> out;
    for (const auto& j : pauli::allowed_j_values_bispinor(hi(eg), count))
      out.push_back(j.value());
    return out;
  });
  m.def("lowering_annihilation_residual", &pauli::lowering_annihilation_residual);
  m.def("phi_jm", [](double j, double mm, double lam, double theta, double phi) {
    return pauli::build_phi(hi(j), hi(mm), hi(lam))(theta, phi);
  });

  // ---- gauge ----
  m.def("rotation_from_gibbs", [](std::array<double, 3> c) {
    return mat3_to_list(gauge::rotation_from_gibbs({gauge::Vec3(c[0], c[1], c[2])}));
  });
  m.def("gibbs_between", [](std::array<double, 3> a, std::array<double, 3> b) {
    const auto g = gauge::gibbs_between(gauge::Vec3(a[0], a[1], a[2]),
                                        gauge::Vec3(b[0], b[1], b[2]));
    return std::array<double, 3>{g.c.x(), g.c.y(), g.c.z()};
  });
  m.def("composite_gibbs", [](double th, double ph) {
    const auto g = gauge::composite_gibbs(th, ph);
    return std::array<double, 3>{g.c.x(), g.c.y(), g.c.z()};
  });
  m.def("spinor_gauge_matrix", [](double th, double ph) {
    return mat2c_to_list(gauge::spinor_gauge_matrix(th, ph));
  });

  // ---- discrete symmetry ----
  m.def("n_eigenvalue", [](double j, int delta, cd A) {
    return discrete::eigen_constraints(hi(j), delta, A).eigenvalue;
  });
  m.def("overlap", &discrete::overlap, py::arg("A"), py::arg("delta1"),
        py::arg("delta2"));
  m.def("basis_change", [](cd A, int delta) {
    const auto [a, b] = discrete::basis_change(A, delta);
    return py::make_tuple(a, b);
  });
  m.def("expectation_n",
        [](cd A, double Gamma, double alpha, double beta, double j) {
          return discrete::expectation_n(A, Gamma, alpha, beta, hi(j));
        },
        py::arg("A"), py::arg("Gamma"), py::arg("alpha"), py::arg("beta"),
        py::arg("j") = 1.0);
  m.def("n_iso_factor", [](const std::string& g, cd A, double th, double ph) {
    const auto tag = g == "schwinger"   ? gauge::IsoGauge::Schwinger
                     : g == "dirac"     ? gauge::IsoGauge::Dirac
                                        : gauge::IsoGauge::Cartesian;
    return mat2c_to_list(discrete::n_iso_factor(tag, A, th, ph));
  });
  m.def("chiral_u", [](const std::string& g, cd A, double th, double ph) {
    const auto tag = g == "schwinger"   ? gauge::IsoGauge::Schwinger
                     : g == "dirac"     ? gauge::IsoGauge::Dirac
                                        : gauge::IsoGauge::Cartesian;
    return mat2c_to_list(discrete::chiral_u(A, tag, th, ph));
  });

  // ---- radial ----
  m.def(
      "solve_radial",
      [](double j, bool simplest, double epsilon, double mass, int delta, cd A,
         int mu, double rmin, double rmax, int n) {
        const auto pf = simplest ? gauge::ProfileFunctions::embedded_abelian()
                                 : gauge::ProfileFunctions::trivial();
        std::vector<double> grid(n);
        for (int i = 0; i < n; ++i)
          grid[i] = rmin + (rmax - rmin) * double(i) / double(n - 1);
        const auto base = radial::build_system(hi(j), pf, epsilon, mass);
        const auto rr = radial::reduce_with_n(base, delta, A, grid);
        py::dict out;
        if (!rr.system) {
          out["compatible"] = false;
          out["obstruction"] = rr.incompatibility->what;
          return out;
        }
        radial::RadialSystem sys = *rr.system;
        if (mu != 0 && sys.tag == radial::CaseTag::free_reduced)
          sys = radial::reduce_with_k(sys, mu);
        const auto sol =
            radial::solve(sys, radial::BoundaryKind::regular_at_origin, grid);
        out["compatible"] = true;
        out["case"] = radial::case_name(sys.tag);
        out["r"] = sol.grid;
        out["residual_norm"] = sol.residual_norm;
        const auto names = sys.component_names();
        for (int k = 0; k < sys.size; ++k) {
          std::vector<cd> col;
          for (const auto& v : sol.values) col.push_back(v[k]);
          out[names[k].c_str()] = col;
        }
        return out;
      },
      py::arg("j"), py::arg("simplest") = true, py::arg("epsilon") = 1.5,
      py::arg("mass") = 0.7, py::arg("delta") = 1, py::arg("A") = cd(0, 0),
      py::arg("mu") = 1, py::arg("rmin") = 0.5, py::arg("rmax") = 10.0,
      py::arg("n") = 801);

  // ---- selection rules ----
  m.def("selection_vanishes", [](int omega, double j, double jp, int d, int dp) {
    return selection::selection_predicate(
               omega > 0 ? selection::Omega::plus : selection::Omega::minus, hi(j),
               hi(jp), d, dp) == selection::Selection::vanishes;
  });
  m.def("classify_observable", [](const std::string& name, cd A) {
    const selection::ObservableSpec obs =
        name == "identity"    ? selection::observable_identity()
        : name == "x1"        ? selection::observable_position(0)
        : name == "x2"        ? selection::observable_position(1)
        : name == "x3"        ? selection::observable_position(2)
        : name == "sigma3"    ? selection::observable_sigma3()
        : name == "sigma3_x3" ? selection::observable_sigma3_position()
                              : selection::observable_offdiag_sigma1_gamma0();
    const auto pc = selection::classify(obs, A);
    return pc.omega == selection::Omega::plus    ? 1
           : pc.omega == selection::Omega::minus ? -1
                                                 : 0;
  });

  // ---- verification registry ----
  m.def("verify_all", [](unsigned seed) {
    verify::Options opt;
    opt.seed = seed;
    py::list out;
    for (const auto& r : verify::run_all(opt)) {
      py::dict d;
      d["name"] = r.name;
      d["residual"] = r.residual;
      d["tolerance"] = r.tolerance;
      d["passed"] = r.passed;
      out.append(d);
    }
    return out;
  }, py::arg("seed") = 20250811);
}
