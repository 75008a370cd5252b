#include "isochiral/states.hpp"

#include <cmath>
#include <stdexcept>

#include <sstream>

#include "isochiral/pauli.hpp"
#include "isochiral/wigner.hpp"
#include "json.hpp"

namespace isochiral::states {

namespace {

cd D_or_zero(HalfInt j, HalfInt m, HalfInt sigma, double th, double ph) {
  if (sigma.abs() > j || m.abs() > j || j.twice() < 0 ||
      !integer_spaced(j, sigma) || !integer_spaced(j, m))
    return {0.0, 0.0};
  return wigner::D_state(j, m, sigma, th, ph);
}

Vec2c chi_spinor(int sign, double th, double ph) {
  const cd em = algebra::iexp(-0.5 * ph), ep = algebra::iexp(0.5 * ph);
  if (sign > 0) return {std::cos(0.5 * th) * em, std::sin(0.5 * th) * ep};
  return {-std::sin(0.5 * th) * em, std::cos(0.5 * th) * ep};
}

}  // namespace

Vec4c AbelianAnsatz::evaluate(double theta, double phi) const {
  Vec4c out = Vec4c::Zero();
  for (int k = 0; k < 4; ++k) {
    if (f[k] == cd(0)) continue;
    out[k] = f[k] * D_or_zero(j, m, sigma_of(k), theta, phi);
  }
  return out;
}

AbelianAnsatz build_abelian(HalfInt eg, HalfInt j, HalfInt m, int mu, cd f1, cd f2) {
  const HalfInt jmin = (eg.abs() - HalfInt(1)).abs();
  if (j < jmin || !integer_spaced(j, jmin))
    throw std::domain_error("build_abelian: j fails the Pauli floor for this eg");
  if (m.abs() > j || !integer_spaced(j, m))
    throw std::domain_error("build_abelian: invalid m");
  AbelianAnsatz a;
  a.eg = eg;
  a.j = j;
  a.m = m;
  a.f = {f1, f2, double(mu) * f2, double(mu) * f1};
  return a;
}

AbelianAnsatz build_abelian_minimal(HalfInt eg, HalfInt m, cd fa, cd fb) {
  if (eg.twice() == 0)
    throw std::domain_error("build_abelian_minimal: eg must be nonzero");
  AbelianAnsatz a;
  a.eg = eg;
  a.j = eg.abs() - HalfInt(1);
  a.m = m;
  if (eg.twice() > 0)
    a.f = {fa, 0.0, fb, 0.0};  // rows with D_{eg-1/2}
  else
    a.f = {0.0, fa, 0.0, fb};  // rows with D_{eg+1/2}
  return a;
}

AbelianAnsatz build_free_parity(HalfInt j, HalfInt m, int delta, cd f, cd g) {
  AbelianAnsatz a;
  a.eg = HalfInt(0);
  a.j = j;
  a.m = m;
  a.f = {f, g, double(delta) * g, double(delta) * f};
  return a;
}

AbelianAnsatz build_massless_z_state(HalfInt j, HalfInt m, int delta, cd z, cd f,
                                     cd g) {
  AbelianAnsatz a = build_free_parity(j, m, delta, f, g);
  a.f[2] *= z;
  a.f[3] *= z;
  return a;
}

angular::DoubletAnsatz DoubletState::ansatz_from(const Eigen::VectorXcd& f4) const {
  angular::DoubletAnsatz a;
  a.j = j;
  a.m = m;
  const cd link = linkage();
  if (j.twice() == 0) {
    // minimal pattern: F = (0, f2, 0, f4), G = link (f4, 0, f2, 0)
    a.f = {0.0, f4[0], 0.0, f4[1]};
    a.g = {link * f4[1], 0.0, link * f4[0], 0.0};
  } else {
    a.f = {f4[0], f4[1], f4[2], f4[3]};
    a.g = {link * f4[3], link * f4[2], link * f4[1], link * f4[0]};
  }
  return a;
}

angular::DoubletAnsatz DoubletState::ansatz_at(std::size_t ir) const {
  return ansatz_from(fvals.at(ir));
}

DoubletState build_doublet(double epsilon, double mass, HalfInt j, HalfInt m,
                           int delta, discrete::ChiralParameter a,
                           const radial::RadialSystem& sys,
                           const radial::RadialSolution& sol) {
  using radial::CaseTag;
  DoubletState st;
  st.epsilon = epsilon;
  st.mass = mass;
  st.j = j;
  st.m = m;
  st.delta = delta;
  st.a = a;
  st.case_tag = sys.tag;
  st.rgrid = sol.grid;
  switch (sys.tag) {
    case CaseTag::free_reduced:
      st.w_zero_family = true;
      st.fvals = sol.values;
      break;
    case CaseTag::w_nonzero_reduced:
      st.w_zero_family = false;
      st.fvals = sol.values;
      break;
    case CaseTag::k_reduced: {
      st.w_zero_family = true;
      st.mu = sys.mu;
      st.fvals = radial::lift_k_to_free(sol.values, sys.mu);
      break;
    }
    case CaseTag::j0_free:
    case CaseTag::j0_w: {
      st.w_zero_family = sys.tag == CaseTag::j0_free;
      st.fvals.resize(sol.values.size());
      for (std::size_t i = 0; i < sol.values.size(); ++i) {
        Eigen::VectorXcd v(4);  // store as (unused, f2, unused, f4)
        v << 0.0, sol.values[i][0], 0.0, sol.values[i][1];
        st.fvals[i] = v;
      }
      break;
    }
    default:
      throw std::domain_error("build_doublet: radial case is not a reduced system");
  }
  if (j.twice() == 0) {
    // repackage to the 2-component (f2, f4) convention used by the ansatz
    for (auto& v : st.fvals) {
      Eigen::VectorXcd w(2);
      w << v[1], v[3];
      v = w;
    }
  }
  return st;
}

Factorization factorize(const angular::DoubletAnsatz& a, int delta, int mu, cd Delta) {
  if (a.j.twice() == 0)
    return factorize_j0(a, delta, Delta);
  if (mu == 0)
    throw std::domain_error("factorize: state must carry the K linkage (mu = +-1)");
  Factorization fac;
  const HalfInt half(1);
  fac.coeff_plus = 1.0;
  fac.coeff_minus = double(mu * delta) * Delta;
  fac.phi_minus_half = build_abelian(-half, a.j, a.m, mu, a.f[0], a.f[1]);
  fac.phi_plus_half = build_abelian(half, a.j, a.m, mu, a.f[3] * double(mu),
                                    a.f[2] * double(mu));
  // pointwise reconstruction error against the direct pattern
  double err = 0.0;
  for (double th : {0.3, 1.0, 1.7, 2.6})
    for (double ph : {0.2, 2.1, 4.3}) {
      const Vec8c direct = a.evaluate(th, ph);
      Vec8c rec = Vec8c::Zero();
      rec.segment<4>(0) = fac.coeff_plus * fac.phi_minus_half.evaluate(th, ph);
      rec.segment<4>(4) = fac.coeff_minus * fac.phi_plus_half.evaluate(th, ph);
      err = std::max(err, (direct - rec).cwiseAbs().maxCoeff());
    }
  fac.reconstruction_error = err;
  return fac;
}

Factorization factorize_j0(const angular::DoubletAnsatz& a, int delta, cd Delta) {
  Factorization fac;
  const HalfInt half(1), zero(0);
  fac.coeff_plus = 1.0;
  fac.coeff_minus = double(delta) * Delta;
  fac.phi_minus_half = build_abelian_minimal(-half, a.m, a.f[1], a.f[3]);
  fac.phi_plus_half = build_abelian_minimal(half, a.m, a.f[3], a.f[1]);
  double err = 0.0;
  for (double th : {0.3, 1.0, 2.6})
    for (double ph : {0.2, 2.1, 4.3}) {
      const Vec8c direct = a.evaluate(th, ph);
      Vec8c rec = Vec8c::Zero();
      rec.segment<4>(0) = fac.coeff_plus * fac.phi_minus_half.evaluate(th, ph);
      rec.segment<4>(4) = fac.coeff_minus * fac.phi_plus_half.evaluate(th, ph);
      err = std::max(err, (direct - rec).cwiseAbs().maxCoeff());
    }
  fac.reconstruction_error = err;
  return fac;
}

algebra::Mat2c iso_gauge_matrix(gauge::IsoGauge from, gauge::IsoGauge to,
                                double theta, double phi) {
  using gauge::IsoGauge;
  auto to_schwinger = [&](IsoGauge g) -> algebra::Mat2c {
    switch (g) {
      case IsoGauge::Schwinger:
        return algebra::Mat2c::Identity();
      case IsoGauge::Dirac: {
        // Psi_S = diag(e^{i phi/2}, e^{-i phi/2}) Psi_D
        algebra::Mat2c u = algebra::Mat2c::Zero();
        u(0, 0) = algebra::iexp(0.5 * phi);
        u(1, 1) = algebra::iexp(-0.5 * phi);
        return u;
      }
      default:
        return gauge::spinor_gauge_matrix(theta, phi);  // Psi_S = B Psi_C
    }
  };
  const algebra::Mat2c a = to_schwinger(from);
  const algebra::Mat2c b = to_schwinger(to);
  return b.inverse() * a;
}

angular::Section to_gauge(const angular::Section& s, gauge::IsoGauge from,
                          gauge::IsoGauge to) {
  if (s.dim != 8) throw std::invalid_argument("to_gauge: need an 8-component section");
  const angular::Section in = s;
  angular::Section out;
  out.dim = 8;
  out.value = [in, from, to](double th, double ph) -> Eigen::VectorXcd {
    const algebra::Mat8c u =
        algebra::kron(iso_gauge_matrix(from, to, th, ph), algebra::Mat4c::Identity());
    return u * in.value(th, ph);
  };
  return out;
}

PauliPair to_pauli_cartesian(const angular::Section& s) {
  if (s.dim != 4 && s.dim != 8)
    throw std::invalid_argument("to_pauli_cartesian: need 4 or 8 components");
  const angular::Section in = s;
  const int nblocks = s.dim / 4;
  PauliPair out;
  out.top.dim = out.bottom.dim = 2 * nblocks;
  auto make = [in, nblocks](bool upper) {
    return [in, nblocks, upper](double th, double ph) -> Eigen::VectorXcd {
      // U^{-1} has the helicity spinors as columns
      Eigen::Matrix2cd Uinv;
      Uinv.col(0) = chi_spinor(+1, th, ph);
      Uinv.col(1) = chi_spinor(-1, th, ph);
      const Eigen::VectorXcd v = in.value(th, ph);
      Eigen::VectorXcd res(2 * nblocks);
      for (int b = 0; b < nblocks; ++b) {
        const Vec2c xi = Uinv * Vec2c(v[4 * b], v[4 * b + 1]);
        const Vec2c eta = Uinv * Vec2c(v[4 * b + 2], v[4 * b + 3]);
        const Vec2c p = upper ? Vec2c((xi + eta) / std::sqrt(2.0))
                              : Vec2c((xi - eta) / std::sqrt(2.0));
        res[2 * b] = p[0];
        res[2 * b + 1] = p[1];
      }
      return res;
    };
  };
  out.top.value = make(true);
  out.bottom.value = make(false);
  return out;
}

Vec2c monopole_harmonic(HarmonicKind kind, HalfInt j, HalfInt m, HalfInt k,
                        double theta, double phi) {
  const HalfInt half(1);
  switch (kind) {
    case HarmonicKind::chi_plus:
      return chi_spinor(+1, theta, phi);
    case HarmonicKind::chi_minus:
      return chi_spinor(-1, theta, phi);
    case HarmonicKind::xi_1:
    case HarmonicKind::xi_2: {
      const double sgn = kind == HarmonicKind::xi_1 ? 1.0 : -1.0;
      return chi_spinor(-1, theta, phi) * D_or_zero(j, m, k + half, theta, phi) +
             sgn * chi_spinor(+1, theta, phi) *
                 D_or_zero(j, m, k - half, theta, phi);
    }
    default: {
      const double sgn = kind == HarmonicKind::omega_plus ? 1.0 : -1.0;
      const int e = (m + half).twice() / 2;  // m + 1/2 is an integer here
      const double pref = ((e % 2) ? -1.0 : 1.0) *
                          std::sqrt((2.0 * j.value() + 1.0) / (8.0 * M_PI));
      return pref * (sgn * chi_spinor(+1, theta, phi) *
                         D_or_zero(j, m, -half, theta, phi) +
                     chi_spinor(-1, theta, phi) *
                         D_or_zero(j, m, half, theta, phi));
    }
  }
}

WindingReport single_valuedness_check(const angular::Section& s,
                                      wigner::Endpoint axis_point) {
  const double th0 = axis_point == wigner::Endpoint::theta_zero ? 1e-3 : M_PI - 1e-3;
  constexpr int nphi = 64;
  std::vector<Eigen::VectorXcd> ring(nphi);
  double scale = 0.0;
  for (int i = 0; i < nphi; ++i) {
    ring[i] = s.value(th0, 2.0 * M_PI * i / nphi);
    scale = std::max(scale, ring[i].cwiseAbs().maxCoeff());
  }
  WindingReport rep;
  rep.kind = WindingReport::Kind::indeterminate;
  if (scale == 0.0) return rep;
  bool any = false, all_integer = true;
  double offender_amp = 0.0;
  for (int k = 0; k < s.dim; ++k) {
    double amax = 0.0;
    for (int i = 0; i < nphi; ++i) amax = std::max(amax, std::abs(ring[i][k]));
    if (amax < 1e-8 * scale) {
      rep.component_windings.push_back(std::nan(""));
      continue;
    }
    any = true;
    // phase slope from successive ratios; no wrap-around term, since
    // half-integer windings make the ring anti-periodic
    double w = 0.0;
    const double dphi = 2.0 * M_PI / nphi;
    for (int i = 0; i + 1 < nphi; ++i) {
      const cd ratio = ring[i + 1][k] / ring[i][k];
      w += std::arg(ratio) / dphi;
    }
    w /= (nphi - 1);
    rep.component_windings.push_back(w);
    const double half_round = std::round(2.0 * w) / 2.0;
    if (std::abs(w - half_round) > 1e-3) continue;  // not a clean winding
    if (std::abs(half_round - std::round(half_round)) > 0.25) {
      all_integer = false;
      if (amax > offender_amp) {  // report the dominant offender
        offender_amp = amax;
        rep.winding = half_round;
      }
    }
  }
  if (!any) return rep;
  rep.kind = all_integer ? WindingReport::Kind::single_valued
                         : WindingReport::Kind::phase_winding;
  return rep;
}

CartesianBlockTable decompose_cartesian(const angular::DoubletAnsatz& a, cd Delta,
                                        int delta) {
  using wigner::Branch;
  using wigner::half_angle_expand;
  CartesianBlockTable tab;
  tab.j = a.j;
  tab.m = a.m;
  const cd link = double(delta) * Delta;
  const std::array<cd, 4> g = {link * a.f[3], link * a.f[2], link * a.f[1],
                               link * a.f[0]};
  // accumulate one product expansion into the table
  auto add = [&](int iso_out, int k, Branch kind, int sign, HalfInt sigma, cd coeff) {
    if (coeff == cd(0)) return;
    if (sigma.abs() > a.j) return;  // absent attachment (j = 0 rows)
    const auto [lo, hi] = half_angle_expand(kind, sign, a.j, -a.m, sigma);
    for (const auto& t : {lo, hi}) {
      if (t.coeff == 0.0) continue;
      const bool upper_j = t.j == a.j + HalfInt(1);
      const int b = 2 * iso_out + (upper_j ? 1 : 0);
      tab.coeff[b][k] += coeff * t.coeff;
    }
  };
  for (int k = 0; k < 4; ++k) {
    const HalfInt sf = HalfInt::whole(angular::DoubletAnsatz::sigma_of(0, k));
    const HalfInt sg = HalfInt::whole(angular::DoubletAnsatz::sigma_of(1, k));
    // T+ row of B^{-1}: cos(th/2) e^{-i phi/2} F - sin(th/2) e^{-i phi/2} G
    add(0, k, Branch::cos_branch, -1, sf, a.f[k]);
    add(0, k, Branch::sin_branch, -1, sg, -g[k]);
    // T- row: sin(th/2) e^{+i phi/2} F + cos(th/2) e^{+i phi/2} G
    add(1, k, Branch::sin_branch, +1, sf, a.f[k]);
    add(1, k, Branch::cos_branch, +1, sg, g[k]);
  }
  return tab;
}

Vec8c CartesianBlockTable::evaluate(double theta, double phi) const {
  Vec8c out = Vec8c::Zero();
  const HalfInt half(1);
  for (int b = 0; b < 4; ++b) {
    const HalfInt jb = block_j(b), mb = block_m(b);
    if (jb.twice() < 0) continue;
    const int iso = b / 2;
    for (int k = 0; k < 4; ++k) {
      if (coeff[b][k] == cd(0)) continue;
      const HalfInt sigma = (k % 2 == 0) ? -half : half;
      out[4 * iso + k] += coeff[b][k] * D_or_zero(jb, mb, sigma, theta, phi);
    }
  }
  return out;
}

CompositeSigma cartesian_doublet_sigma(const angular::DoubletAnsatz& a, cd Delta,
                                       int delta) {
  const CartesianBlockTable tab = decompose_cartesian(a, Delta, delta);
  CompositeSigma cs;
  const HalfInt half(1);
  for (int b = 0; b < 4; ++b) {
    const HalfInt jb = tab.block_j(b), mb = tab.block_m(b);
    if (jb.twice() < 0) continue;
    const int iso = b / 2;
    // Pauli frame: phi = (xi + eta)/sqrt(2), chi = (xi - eta)/sqrt(2)
    const cd p1 = (tab.coeff[b][0] + tab.coeff[b][2]) / std::sqrt(2.0);
    const cd p2 = (tab.coeff[b][1] + tab.coeff[b][3]) / std::sqrt(2.0);
    const cd c1 = (tab.coeff[b][0] - tab.coeff[b][2]) / std::sqrt(2.0);
    const cd c2 = (tab.coeff[b][1] - tab.coeff[b][3]) / std::sqrt(2.0);
    // chi_+ D_{-1/2} = (O+ - O-)/(2N'), chi_- D_{+1/2} = (O+ + O-)/(2N')
    const int e = (mb + half).twice() / 2;
    const double npr = ((e % 2) ? -1.0 : 1.0) *
                       std::sqrt((2.0 * jb.value() + 1.0) / (8.0 * M_PI));
    const cd inv = 1.0 / (2.0 * npr);
    cs.plus.push_back({iso, +1, jb, mb, (p1 + p2) * inv});
    cs.plus.push_back({iso, -1, jb, mb, (p2 - p1) * inv});
    cs.minus.push_back({iso, +1, jb, mb, (c1 + c2) * inv});
    cs.minus.push_back({iso, -1, jb, mb, (c2 - c1) * inv});
  }
  return cs;
}

Eigen::Vector4cd CompositeSigma::evaluate(bool upper, double theta, double phi) const {
  Eigen::Vector4cd out = Eigen::Vector4cd::Zero();
  for (const auto& t : (upper ? plus : minus)) {
    if (t.coeff == cd(0)) continue;
    const Vec2c om = monopole_harmonic(
        t.pm > 0 ? HarmonicKind::omega_plus : HarmonicKind::omega_minus, t.jp, t.mp,
        HalfInt(0), theta, phi);
    out[2 * t.iso] += t.coeff * om[0];
    out[2 * t.iso + 1] += t.coeff * om[1];
  }
  return out;
}

angular::Section section_from_abelian(const AbelianAnsatz& a) {
  angular::Section s;
  s.dim = 4;
  s.value = [a](double th, double ph) -> Eigen::VectorXcd { return a.evaluate(th, ph); };
  return s;
}

}  // namespace isochiral::states

namespace isochiral::states {

std::string state_to_csv(const DoubletState& st, const std::vector<double>& thetas,
                         const std::vector<double>& phis) {
  std::ostringstream os;
  os.precision(17);
  os << "# j=" << st.j.str() << " m=" << st.m.str() << " delta=" << st.delta
     << " mu=" << st.mu << " A=" << st.a.A.real() << (st.a.A.imag() < 0 ? "" : "+")
     << st.a.A.imag() << "i gauge=" << gauge::gauge_name(st.iso_gauge)
     << " case=" << radial::case_name(st.case_tag) << "\n";
  os << "r,theta,phi";
  static const char* comp[8] = {"T+1", "T+2", "T+3", "T+4", "T-1", "T-2", "T-3", "T-4"};
  for (const char* c : comp) os << ",Re_" << c << ",Im_" << c;
  os << "\n";
  for (std::size_t ir = 0; ir < st.rgrid.size(); ++ir) {
    const angular::DoubletAnsatz a = st.ansatz_at(ir);
    for (double th : thetas)
      for (double ph : phis) {
        const Vec8c v = a.evaluate(th, ph) / st.rgrid[ir];
        os << st.rgrid[ir] << "," << th << "," << ph;
        for (int k = 0; k < 8; ++k) os << "," << v[k].real() << "," << v[k].imag();
        os << "\n";
      }
  }
  return os.str();
}

std::string harmonic_table_json(HarmonicKind kind, HalfInt j, HalfInt m, HalfInt k,
                                const std::vector<double>& thetas,
                                const std::vector<double>& phis) {
  nlohmann::json out;
  static const char* names[] = {"xi_1", "xi_2", "omega_plus", "omega_minus",
                                "chi_plus", "chi_minus"};
  out["kind"] = names[int(kind)];
  out["j"] = j.str();
  out["m"] = m.str();
  out["k"] = k.str();
  out["theta"] = thetas;
  out["phi"] = phis;
  nlohmann::json vals = nlohmann::json::array();
  for (double th : thetas)
    for (double ph : phis) {
      const Vec2c v = monopole_harmonic(kind, j, m, k, th, ph);
      vals.push_back({v[0].real(), v[0].imag(), v[1].real(), v[1].imag()});
    }
  out["values"] = vals;
  return out.dump(2);
}

}  // namespace isochiral::states
