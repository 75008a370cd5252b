#include "isochiral/selection.hpp"

#include <cmath>

#include "isochiral/quadrature.hpp"
#include "isochiral/wigner.hpp"

namespace isochiral::selection {

namespace {

const cd I(0, 1);

Mat2c pi_schwinger(cd A) {
  Mat2c m = Mat2c::Zero();
  m(0, 1) = std::exp(-I * A);
  m(1, 0) = std::exp(I * A);
  return m;
}

// 8-component composite state T+ (x) Phi^{eg=-1/2} + mu delta Delta T- (x) Phi^{eg=+1/2}
struct CompositeState {
  states::AbelianAnsatz plus, minus;
  cd cminus;
  Eigen::Matrix<cd, 8, 1> evaluate(double th, double ph) const {
    Eigen::Matrix<cd, 8, 1> v;
    v.segment<4>(0) = plus.evaluate(th, ph);
    v.segment<4>(4) = cminus * minus.evaluate(th, ph);
    return v;
  }
};

CompositeState make_state(const StateSpec& s, cd f1, cd f2) {
  CompositeState c;
  const HalfInt half(1);
  c.plus = states::build_abelian(-half, s.j, s.m, s.mu, f1, f2);
  c.minus = states::build_abelian(half, s.j, s.m, s.mu, f1, f2);
  c.cminus = double(s.mu * s.delta) * std::exp(I * s.A);
  return c;
}

}  // namespace

Mat8c ObservableSpec::full(double r, double th, double ph) const {
  Mat2c g;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) g(i, k) = iso[i][k](r, th, ph);
  return algebra::kron(g, lorentz(r, th, ph));
}

Mat8c ObservableSpec::full_reflected(double r, double th, double ph) const {
  return full(r, M_PI - th, ph + M_PI);
}

namespace {
ObservableSpec base_spec(const std::string& label) {
  ObservableSpec o;
  o.label = label;
  auto zero = [](double, double, double) -> cd { return 0.0; };
  auto one = [](double, double, double) -> cd { return 1.0; };
  o.iso = {{{one, zero}, {zero, one}}};
  o.lorentz = [](double, double, double) { return Mat4c::Identity(); };
  return o;
}
}  // namespace

ObservableSpec observable_identity() { return base_spec("identity"); }

ObservableSpec observable_position(int axis) {
  ObservableSpec o = base_spec(axis == 0 ? "x1" : axis == 1 ? "x2" : "x3");
  o.lorentz = [axis](double r, double th, double ph) -> Mat4c {
    const double n[3] = {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                         std::cos(th)};
    return r * n[axis] * Mat4c::Identity();
  };
  return o;
}

ObservableSpec observable_sigma3() {
  ObservableSpec o = base_spec("sigma3");
  auto zero = [](double, double, double) -> cd { return 0.0; };
  auto one = [](double, double, double) -> cd { return 1.0; };
  auto mone = [](double, double, double) -> cd { return -1.0; };
  o.iso = {{{one, zero}, {zero, mone}}};
  return o;
}

ObservableSpec observable_sigma3_position() {
  ObservableSpec o = observable_sigma3();
  o.label = "sigma3_x3";
  o.lorentz = [](double r, double th, double) -> Mat4c {
    return r * std::cos(th) * Mat4c::Identity();
  };
  return o;
}

ObservableSpec observable_offdiag_sigma1_gamma0() {
  ObservableSpec o = base_spec("sigma1_gamma0");
  auto zero = [](double, double, double) -> cd { return 0.0; };
  auto one = [](double, double, double) -> cd { return 1.0; };
  o.iso = {{{zero, one}, {one, zero}}};
  o.lorentz = [](double, double, double) { return Mat4c(algebra::gamma(0)); };
  return o;
}

ParityClass classify(const ObservableSpec& obs, cd A, int nsample, double tol) {
  const Mat8c op = algebra::kron(pi_schwinger(A), algebra::parity_bisp_spherical());
  const Mat8c op_dag = op.adjoint();
  const auto pts = quad::sobol3(nsample);
  double rp = 0.0, rm = 0.0, scale = 0.0;
  for (const auto& p : pts) {
    const double r = 0.5 + 2.5 * p[0];
    const double th = 0.05 + (M_PI - 0.1) * p[1];
    const double ph = 2.0 * M_PI * p[2];
    const Mat8c g = obs.full(r, th, ph);
    const Mat8c lhs = op_dag * obs.full_reflected(r, th, ph) * op;
    rp = std::max(rp, (lhs - g).cwiseAbs().maxCoeff());
    rm = std::max(rm, (lhs + g).cwiseAbs().maxCoeff());
    scale = std::max(scale, g.cwiseAbs().maxCoeff());
  }
  ParityClass pc;
  pc.a_context = A;
  if (scale == 0.0) scale = 1.0;
  pc.residual_plus = rp / scale;
  pc.residual_minus = rm / scale;
  if (pc.residual_plus < tol)
    pc.omega = Omega::plus;
  else if (pc.residual_minus < tol)
    pc.omega = Omega::minus;
  else
    pc.omega = Omega::indefinite;
  return pc;
}

Selection selection_predicate(Omega omega, HalfInt j, HalfInt jprime, int delta,
                              int deltaprime) {
  if (omega == Omega::indefinite)
    throw std::domain_error("selection_predicate: omega must be definite");
  if (!j.is_integer() || !jprime.is_integer())
    throw std::domain_error("selection_predicate: doublet j must be integer");
  const int sgn = (omega == Omega::plus ? 1 : -1) * delta * deltaprime *
                  (((j + jprime).twice() / 2) % 2 == 0 ? 1 : -1);
  return (1 + sgn == 0) ? Selection::vanishes : Selection::allowed;
}

MatrixElement matrix_element(const StateSpec& bra, const ObservableSpec& obs,
                             const StateSpec& ket, const QuadratureSpec& q) {
  if (q.rgrid.size() < 3 || q.rgrid.size() % 2 == 0)
    throw std::invalid_argument("matrix_element: odd-sized radial grid required");
  const auto sph = quad::sphere_rule(q.ntheta, q.nphi);
  const auto wr = quad::simpson_weights(q.rgrid.size(), q.rgrid[1] - q.rgrid[0]);
  static const Mat4c g0 = algebra::gamma(0);
  MatrixElement me{0.0, 0.0, 0.0, 0.0};
  for (std::size_t ir = 0; ir < q.rgrid.size(); ++ir) {
    const double r = q.rgrid[ir];
    const CompositeState b = make_state(bra, bra.radial.f1(r), bra.radial.f2(r));
    const CompositeState k = make_state(ket, ket.radial.f1(r), ket.radial.f2(r));
    for (std::size_t it = 0; it < sph.theta.size(); ++it)
      for (std::size_t ip = 0; ip < sph.phi.size(); ++ip) {
        const double th = sph.theta[it], ph = sph.phi[ip];
        const double w = wr[ir] * sph.wtheta[it] * sph.wphi;
        const Mat8c G = obs.full(r, th, ph);
        const Eigen::Matrix<cd, 8, 1> vb = b.evaluate(th, ph);
        const Eigen::Matrix<cd, 8, 1> vk = k.evaluate(th, ph);
        // Dirac bar on the bispinor factor: psi^+ (I2 (x) g0)
        Eigen::Matrix<cd, 8, 1> bbar;
        bbar.segment<4>(0) = g0.transpose() * vb.segment<4>(0).conjugate();
        bbar.segment<4>(4) = g0.transpose() * vb.segment<4>(4).conjugate();
        const Eigen::Matrix<cd, 8, 1> gk = G * vk;
        cd full = 0.0;
        for (int c = 0; c < 8; ++c) full += bbar[c] * gk[c];
        me.total += w * full;
        // term split: iso-diagonal ++ / -- and the cross remainder
        cd tpp = 0.0, tmm = 0.0;
        for (int c = 0; c < 4; ++c) {
          tpp += bbar[c] * (G.block<4, 4>(0, 0) * vk.segment<4>(0))[c];
          tmm += bbar[4 + c] * (G.block<4, 4>(4, 4) * vk.segment<4>(4))[c];
        }
        me.term_diag_plus += w * tpp;
        me.term_diag_minus += w * tmm;
        me.term_cross += w * (full - tpp - tmm);
      }
  }
  return me;
}

FoldingCheck half_space_folding(const StateSpec& bra, const ObservableSpec& obs,
                                const StateSpec& ket, Omega omega,
                                const QuadratureSpec& q) {
  const auto sph = quad::sphere_rule(q.ntheta, q.nphi);
  const auto wr = quad::simpson_weights(q.rgrid.size(), q.rgrid[1] - q.rgrid[0]);
  static const Mat4c g0 = algebra::gamma(0);
  cd full = 0.0, half = 0.0;
  for (std::size_t ir = 0; ir < q.rgrid.size(); ++ir) {
    const double r = q.rgrid[ir];
    const CompositeState b = make_state(bra, bra.radial.f1(r), bra.radial.f2(r));
    const CompositeState k = make_state(ket, ket.radial.f1(r), ket.radial.f2(r));
    for (std::size_t it = 0; it < sph.theta.size(); ++it)
      for (std::size_t ip = 0; ip < sph.phi.size(); ++ip) {
        const double th = sph.theta[it], ph = sph.phi[ip];
        const double w = wr[ir] * sph.wtheta[it] * sph.wphi;
        const Eigen::Matrix<cd, 8, 1> vb = b.evaluate(th, ph);
        const Eigen::Matrix<cd, 8, 1> vk = k.evaluate(th, ph);
        Eigen::Matrix<cd, 8, 1> bbar;
        bbar.segment<4>(0) = g0.transpose() * vb.segment<4>(0).conjugate();
        bbar.segment<4>(4) = g0.transpose() * vb.segment<4>(4).conjugate();
        const Eigen::Matrix<cd, 8, 1> gk = obs.full(r, th, ph) * vk;
        cd val = 0.0;
        for (int c = 0; c < 8; ++c) val += bbar[c] * gk[c];
        full += w * val;
        if (th < M_PI_2) half += w * val;
      }
  }
  const double sgn = (omega == Omega::plus ? 1.0 : -1.0) * bra.delta * ket.delta *
                     (((bra.j + ket.j).twice() / 2) % 2 == 0 ? 1.0 : -1.0);
  return {full, (1.0 + sgn) * half};
}

AbelianDemo abelian_no_rule_demo(HalfInt eg, HalfInt j, HalfInt m, int mu) {
  using states::AbelianAnsatz;
  using algebra::Vec4c;
  const cd f1(0.8, 0.2), f2(0.4, -0.6);
  const AbelianAnsatz phi_p = states::build_abelian(eg, j, m, mu, f1, f2);
  const AbelianAnsatz phi_m = states::build_abelian(-eg, j, m, mu, f1, f2);
  static const Mat4c pb = algebra::parity_bisp_spherical();
  // mu (-1)^{j+1} with (-1)^x = e^{i pi x}
  const cd eig = double(mu) * std::exp(cd(0, 1) * M_PI * (j.value() + 1.0));
  AbelianDemo demo{};
  demo.m_eigenvalue = eig;
  double worst = 0.0;
  std::vector<std::pair<double, double>> grid;
  for (double th : {0.4, 1.0, 1.7, 2.5})
    for (double ph : {0.3, 1.9, 3.6, 5.4}) grid.push_back({th, ph});
  for (auto [th, ph] : grid) {
    const Vec4c lhs = phi_p.evaluate(M_PI - th, ph + M_PI);
    const Vec4c rhs = eig * (pb * phi_m.evaluate(th, ph));
    worst = std::max(worst, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  demo.charge_flip_residual = worst;

  // exhaustive candidate-matrix probe of the same-function reflection form
  std::vector<Mat4c> candidates = {Mat4c::Identity(), algebra::gamma(0),
                                   algebra::gamma(1), algebra::gamma(2),
                                   algebra::gamma(3), algebra::gamma5(),
                                   pb, cd(0, 1) * algebra::gamma(0),
                                   algebra::gamma5() * algebra::gamma(1)};
  double best = 1e300, scale = 0.0;
  for (auto [th, ph] : grid)
    scale = std::max(scale, phi_p.evaluate(th, ph).cwiseAbs().maxCoeff());
  for (const auto& M : candidates) {
    cd num = 0.0;
    double den = 0.0;
    for (auto [th, ph] : grid) {
      const Vec4c mv = M * phi_p.evaluate(th, ph);
      const Vec4c refl = phi_p.evaluate(M_PI - th, ph + M_PI);
      num += mv.dot(refl);
      den += mv.squaredNorm();
    }
    const cd c = den > 0 ? num / den : cd(0.0);
    double res = 0.0;
    for (auto [th, ph] : grid) {
      const Vec4c mv = M * phi_p.evaluate(th, ph);
      const Vec4c refl = phi_p.evaluate(M_PI - th, ph + M_PI);
      res = std::max(res, (refl - c * mv).cwiseAbs().maxCoeff());
    }
    best = std::min(best, res / scale);
  }
  demo.best_same_function_fit = best;

  // eg = 0 control: the same-function reflection relation with P_bisp
  const AbelianAnsatz free_state =
      states::build_free_parity(HalfInt(3), HalfInt(1), +1, f1, f2);
  const cd eig0 =
      std::exp(cd(0, 1) * M_PI * (free_state.j.value() + 1.0));  // delta = +1
  double w0 = 0.0;
  for (auto [th, ph] : grid) {
    const Vec4c lhs = free_state.evaluate(M_PI - th, ph + M_PI);
    const Vec4c rhs = eig0 * (pb * free_state.evaluate(th, ph));
    w0 = std::max(w0, (lhs - rhs).cwiseAbs().maxCoeff());
  }
  demo.eg_zero_residual = w0;
  return demo;
}

}  // namespace isochiral::selection
