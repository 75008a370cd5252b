#include <gsl/gsl_sf_bessel.h>

#include <cmath>

#include "doctest.h"
#include "isochiral/angular.hpp"
#include "isochiral/radial.hpp"

using namespace isochiral;
using namespace isochiral::radial;
using algebra::cd;

namespace {

std::vector<double> make_grid(double a, double b, std::size_t n) {
  std::vector<double> g(n);
  for (std::size_t i = 0; i < n; ++i) g[i] = a + (b - a) * double(i) / double(n - 1);
  return g;
}

// spherical Bessel of real order l via J_{l+1/2}
double sph_j(double l, double x) {
  return std::sqrt(M_PI / (2.0 * x)) * gsl_sf_bessel_Jnu(l + 0.5, x);
}
double sph_j_prime(double l, double x) {
  // j_l'(x) = j_{l-1}(x) - (l+1)/x j_l(x)
  return sph_j(l - 1.0, x) - (l + 1.0) / x * sph_j(l, x);
}

const gauge::ProfileFunctions kSimplest = gauge::ProfileFunctions::embedded_abelian();

}  // namespace

TEST_CASE("build_system rejects half-integer j and tags the cases") {
  CHECK_THROWS_AS(build_system(HalfInt(1), kSimplest, 1.0, 0.5), std::domain_error);
  const RadialSystem s8 = build_system(HalfInt::whole(1), kSimplest, 1.0, 0.5);
  CHECK(s8.tag == CaseTag::general_j);
  CHECK(s8.size == 8);
  CHECK(s8.nu == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(std::abs(s8.w_of_r(1.7)) < 1e-15);   // K = -1/(e r^2): W = 0
  CHECK(std::abs(s8.f_tilde(2.0)) < 1e-15);
  const RadialSystem s4 = build_system(HalfInt::whole(0), kSimplest, 1.0, 0.5);
  CHECK(s4.tag == CaseTag::j_zero);
  CHECK(s4.size == 4);
}

TEST_CASE("free doublet differs from the monopole one only through W") {
  gauge::ProfileFunctions free_pf = gauge::ProfileFunctions::trivial();
  const RadialSystem sys_free = build_system(HalfInt::whole(1), free_pf, 1.3, 0.4);
  const RadialSystem sys_mono = build_system(HalfInt::whole(1), kSimplest, 1.3, 0.4);
  CHECK(sys_free.w_of_r(2.2) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(std::abs(sys_mono.w_of_r(2.2)) < 1e-15);
  // all non-W coefficient entries coincide
  for (double r : {0.7, 1.9, 4.2}) {
    Eigen::MatrixXcd a = sys_free.coeff(r), b = sys_mono.coeff(r);
    // the W entries live at the mixing slots; zero them in both
    for (auto [i, k] : {std::pair{1, 4}, {3, 6}, {4, 1}, {6, 3}})
      a(i, k) = b(i, k) = 0.0;
    CHECK((a - b).cwiseAbs().maxCoeff() < 1e-14);
  }
}

TEST_CASE("reduce_with_n compatibility gates") {
  const auto grid = make_grid(0.5, 5.0, 41);
  // F != 0 obstructs
  gauge::ProfileFunctions pf = gauge::ProfileFunctions::embedded_abelian();
  pf.f_of_r = [](double) { return 1.0; };
  auto rr = reduce_with_n(build_system(HalfInt::whole(1), pf, 1.0, 0.5), +1, 0.0, grid);
  CHECK(!rr.system.has_value());
  CHECK(rr.incompatibility->what == "f_tilde");
  CHECK(!rr.incompatibility->offending_r.empty());
  // kappa != 0 obstructs
  pf = gauge::ProfileFunctions::embedded_abelian();
  pf.kappa = 0.3;
  pf.phi_of_r = [](double) { return 1.0; };
  rr = reduce_with_n(build_system(HalfInt::whole(1), pf, 1.0, 0.5), +1, 0.0, grid);
  CHECK(!rr.system.has_value());
  CHECK(rr.incompatibility->what == "phi_tilde");
  // W = 0: any complex A admissible
  rr = reduce_with_n(build_system(HalfInt::whole(1), kSimplest, 1.0, 0.5), +1,
                     cd(0, 1), grid);
  CHECK(rr.system.has_value());
  CHECK(rr.system->tag == CaseTag::free_reduced);
  // W != 0 and A = 0 -> the W-coupled reduced system
  pf = gauge::ProfileFunctions::trivial();
  rr = reduce_with_n(build_system(HalfInt::whole(1), pf, 1.0, 0.5), +1, 0.0, grid);
  CHECK(rr.system.has_value());
  CHECK(rr.system->tag == CaseTag::w_nonzero_reduced);
  // W != 0 and complex A -> chiral incompatibility
  rr = reduce_with_n(build_system(HalfInt::whole(1), pf, 1.0, 0.5), +1, cd(0, 1), grid);
  CHECK(!rr.system.has_value());
  CHECK(rr.incompatibility->what == "chiral");
  // A = pi (Delta = -1) passes the W != 0 gate
  rr = reduce_with_n(build_system(HalfInt::whole(1), pf, 1.0, 0.5), +1, M_PI, grid);
  CHECK(rr.system.has_value());
}

TEST_CASE("compatibility_scan classifies the A samples") {
  const auto grid = make_grid(0.5, 5.0, 21);
  gauge::ProfileFunctions pf = gauge::ProfileFunctions::embedded_abelian();
  auto rep = compatibility_scan(pf, {cd(0, 0), cd(0, 1), cd(2, -3)}, grid);
  for (const auto& e : rep) CHECK(e.verdict == Admissibility::any_a);
  pf.f_of_r = [](double) { return 0.7; };
  rep = compatibility_scan(pf, {cd(0, 0)}, grid);
  CHECK(rep[0].verdict == Admissibility::inadmissible);
  pf = gauge::ProfileFunctions::trivial();
  rep = compatibility_scan(pf, {cd(0, 1)}, grid);
  CHECK(rep[0].verdict == Admissibility::only_real_delta);
}

TEST_CASE("j=0 free system: plane waves with k = sqrt(eps^2 - m^2)") {
  const double eps = 2.0, mass = 1.0, k = std::sqrt(3.0);
  const auto grid = make_grid(0.8, 10.0, 801);
  const RadialSystem sys0 = build_system(HalfInt::whole(0), kSimplest, eps, mass);
  const auto rr = reduce_with_n(sys0, +1, 0.0, grid);
  REQUIRE(rr.system.has_value());
  CHECK(rr.system->tag == CaseTag::j0_free);
  const RadialSolution sol = solve(*rr.system, BoundaryKind::outgoing, grid);
  CHECK(sol.residual_norm < 1e-8);
  // fit a e^{ikr} + b e^{-ikr} on f2 from two points, then check globally
  auto fit_check = [&](int compo) {
    const double r0 = grid[100], r1 = grid[101];
    Eigen::Matrix2cd M;
    M << std::exp(cd(0, k * r0)), std::exp(cd(0, -k * r0)),
        std::exp(cd(0, k * r1)), std::exp(cd(0, -k * r1));
    const Eigen::Vector2cd ab =
        M.inverse() * Eigen::Vector2cd(sol.values[100][compo], sol.values[101][compo]);
    double worst = 0.0;
    for (std::size_t i = 0; i < grid.size(); i += 10) {
      const cd model = ab[0] * std::exp(cd(0, k * grid[i])) +
                       ab[1] * std::exp(cd(0, -k * grid[i]));
      worst = std::max(worst, std::abs(model - sol.values[i][compo]));
    }
    return worst;
  };
  CHECK(fit_check(0) < 1e-8);
  CHECK(fit_check(1) < 1e-8);
}

TEST_CASE("K-reduced solutions match the spherical-Bessel closed forms") {
  const double eps = 1.5, mass = 0.7, k = std::sqrt(eps * eps - mass * mass);
  const HalfInt j = HalfInt::whole(1);
  const double nu = std::sqrt(2.0);
  const auto grid = make_grid(0.4, 12.0, 1201);
  const RadialSystem base = build_system(j, kSimplest, eps, mass);
  const auto rr = reduce_with_n(base, +1, cd(0.3, 0.2), grid);
  REQUIRE(rr.system.has_value());
  for (int mu : {+1, -1}) {
    const RadialSystem ksys = reduce_with_k(*rr.system, mu);
    const RadialSolution sol = solve(ksys, BoundaryKind::regular_at_origin, grid);
    CHECK(sol.residual_norm < 1e-8);
    // closed form: F = f1+f2 = a k r j_nu(kr); G = f1-f2 with
    // G = [F' + (nu/r) F]/(i(eps+mu m))
    std::vector<cd> F_model(grid.size()), G_model(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double r = grid[i], x = k * r;
      const double F = x * sph_j(nu, x);
      const double dF = k * (sph_j(nu, x) + x * sph_j_prime(nu, x));
      F_model[i] = F;
      G_model[i] = (dF + (nu / r) * F) / (cd(0, 1) * (eps + mu * mass));
    }
    // the numeric solution is regular too; match the overall scale on F at mid
    const std::size_t mid = grid.size() / 2;
    const cd Fnum_mid = sol.values[mid][0] + sol.values[mid][1];
    const cd scale = Fnum_mid / F_model[mid];
    double worst = 0.0, amp = 0.0;
    for (std::size_t i = 0; i < grid.size(); i += 7) {
      const cd Fnum = sol.values[i][0] + sol.values[i][1];
      const cd Gnum = sol.values[i][0] - sol.values[i][1];
      worst = std::max(worst, std::abs(Fnum - scale * F_model[i]));
      worst = std::max(worst, std::abs(Gnum - scale * G_model[i]));
      amp = std::max(amp, std::abs(Fnum));
    }
    CHECK(worst / amp < 1e-8);
  }
}

TEST_CASE("j=0 with W != 0 solves and carries the W/r coupling") {
  gauge::ProfileFunctions pf = gauge::ProfileFunctions::trivial();  // W = 1/2
  const auto grid = make_grid(1.0, 9.0, 2001);
  const RadialSystem sys0 = build_system(HalfInt::whole(0), pf, 1.2, 0.3);
  const auto rr = reduce_with_n(sys0, +1, 0.0, grid);
  REQUIRE(rr.system.has_value());
  CHECK(rr.system->tag == CaseTag::j0_w);
  const RadialSolution sol = solve(*rr.system, BoundaryKind::outgoing, grid, 1e-12);
  CHECK(sol.residual_norm < 1e-10);
  // the coefficient matrix really contains the delta W term
  const Eigen::MatrixXcd A = rr.system->coeff(2.0);
  CHECK(std::abs(A(0, 1) - (cd(0, 0.3) - cd(0.5, 0))) < 1e-14);  // i m - 2W delta/r, r=2
}

TEST_CASE("lifting reduced solutions up the chain keeps residuals tiny") {
  const double eps = 1.1, mass = 0.6;
  const HalfInt j = HalfInt::whole(2);
  const auto grid = make_grid(0.6, 9.0, 901);
  const RadialSystem base = build_system(j, kSimplest, eps, mass);
  const cd A(0.8, -0.4);
  const int delta = -1;
  const auto rr = reduce_with_n(base, delta, A, grid);
  REQUIRE(rr.system.has_value());
  for (int mu : {+1, -1}) {
    const RadialSystem ksys = reduce_with_k(*rr.system, mu);
    const RadialSolution sol = solve(ksys, BoundaryKind::regular_at_origin, grid, 1e-12);
    // lift the K-reduced pair to the four-equation system
    const auto v4 = lift_k_to_free(sol.values, mu);
    CHECK(residual_on_grid(*rr.system, grid, v4) < 1e-9);
    // lift the four-equation system to the eight-equation one
    const auto v8 = lift_n_to_full(v4, delta, rr.system->Delta);
    CHECK(residual_on_grid(base, grid, v8) < 1e-9);
  }
}

TEST_CASE("j=0 lift to the 4-equation system") {
  const auto grid = make_grid(0.7, 7.0, 501);
  const RadialSystem sys0 = build_system(HalfInt::whole(0), kSimplest, 1.4, 0.2);
  const cd A(0, 0.9);
  const auto rr = reduce_with_n(sys0, -1, A, grid);
  REQUIRE(rr.system.has_value());
  const RadialSolution sol = solve(*rr.system, BoundaryKind::incoming, grid, 1e-12);
  const auto v4 = lift_j0_to_full(sol.values, -1, rr.system->Delta);
  CHECK(residual_on_grid(sys0, grid, v4) < 1e-9);
}

TEST_CASE("full Dirac operator residual with measured convergence order") {
  const double eps = 1.3, mass = 0.5;
  const HalfInt j = HalfInt::whole(1);
  const cd A(0.2, 0.5);
  const int delta = +1, mu = +1;
  auto run = [&](std::size_t n) {
    const auto grid = make_grid(0.8, 6.0, n);
    const RadialSystem base = build_system(j, kSimplest, eps, mass);
    const auto rr = reduce_with_n(base, delta, A, grid);
    const RadialSystem ksys = reduce_with_k(*rr.system, mu);
    const RadialSolution sol = solve(ksys, BoundaryKind::regular_at_origin, grid, 1e-13);
    const auto v8 = lift_n_to_full(lift_k_to_free(sol.values, mu), delta,
                                   rr.system->Delta);
    angular::RadialSampledAnsatz rs;
    rs.j = j;
    rs.m = HalfInt::whole(1);
    rs.epsilon = eps;
    rs.mass = mass;
    rs.r = grid;
    double scale = 0.0;
    for (const auto& v : v8) scale = std::max(scale, v.cwiseAbs().maxCoeff());
    for (int c = 0; c < 8; ++c) {
      rs.comp[c].resize(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i) rs.comp[c][i] = v8[i][c] / scale;
    }
    return angular::apply_dirac_operator(rs, kSimplest);
  };
  const auto res1 = run(500);
  const auto res2 = run(1000);
  CHECK(res1.max_coeff < 1e-6);
  CHECK(res2.max_coeff < 1e-6);
  const double order = std::log2(res1.max_coeff / res2.max_coeff);
  CHECK(order > 3.9);
  CHECK(res2.max_pointwise < 1e-6);
  // negative control: a non-solution gives O(1) residual
  auto bad = run(500);
  (void)bad;
  {
    const auto grid = make_grid(0.8, 6.0, 500);
    angular::RadialSampledAnsatz rs;
    rs.j = j;
    rs.m = HalfInt::whole(0);
    rs.epsilon = eps;
    rs.mass = mass;
    rs.r = grid;
    for (int c = 0; c < 8; ++c) {
      rs.comp[c].resize(grid.size());
      for (std::size_t i = 0; i < grid.size(); ++i)
        rs.comp[c][i] = std::exp(-grid[i]) * (1.0 + 0.1 * c);
    }
    CHECK(angular::apply_dirac_operator(rs, kSimplest).max_coeff > 0.05);
  }
}

TEST_CASE("j=0 W != 0 solution satisfies the full operator") {
  gauge::ProfileFunctions pf = gauge::ProfileFunctions::trivial();
  const double eps = 1.2, mass = 0.3;
  const auto grid = make_grid(0.5, 8.0, 1501);
  const RadialSystem sys0 = build_system(HalfInt::whole(0), pf, eps, mass);
  const auto rr = reduce_with_n(sys0, +1, 0.0, grid);
  const RadialSolution sol = solve(*rr.system, BoundaryKind::outgoing, grid, 1e-12);
  const auto v4 = lift_j0_to_full(sol.values, +1, rr.system->Delta);
  angular::RadialSampledAnsatz rs;
  rs.j = HalfInt::whole(0);
  rs.m = HalfInt::whole(0);
  rs.epsilon = eps;
  rs.mass = mass;
  rs.r = grid;
  double scale = 0.0;
  for (const auto& v : v4) scale = std::max(scale, v.cwiseAbs().maxCoeff());
  for (int c = 0; c < 8; ++c) rs.comp[c].assign(grid.size(), 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    rs.comp[1][i] = v4[i][0] / scale;  // f2
    rs.comp[3][i] = v4[i][1] / scale;  // f4
    rs.comp[4][i] = v4[i][2] / scale;  // g1
    rs.comp[6][i] = v4[i][3] / scale;  // g3
  }
  CHECK(angular::apply_dirac_operator(rs, pf).max_coeff < 1e-6);
}

TEST_CASE("CSV and JSON exports carry the metadata") {
  const auto grid = make_grid(0.5, 2.0, 7);
  const RadialSystem sys0 = build_system(HalfInt::whole(0), kSimplest, 2.0, 1.0);
  const auto rr = reduce_with_n(sys0, +1, 0.0, grid);
  const RadialSolution sol = solve(*rr.system, BoundaryKind::outgoing, grid);
  const std::string csv = solution_to_csv(*rr.system, sol);
  CHECK(csv.find("case=j0_free") != std::string::npos);
  CHECK(csv.find("Re_f2") != std::string::npos);
  const std::string js = solution_to_json(*rr.system, sol);
  CHECK(js.find("\"case\": \"j0_free\"") != std::string::npos);
}
