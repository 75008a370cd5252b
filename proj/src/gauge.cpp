#include "isochiral/gauge.hpp"

#include <cmath>
#include <stdexcept>

#include "json.hpp"

namespace isochiral::gauge {

namespace {

Mat3 cross_matrix(const Vec3& c) {
  Mat3 m;
  m << 0, -c.z(), c.y(), c.z(), 0, -c.x(), -c.y(), c.x(), 0;
  return m;
}

Vec3 unit_radial(double th, double ph) {
  return {std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph), std::cos(th)};
}
Vec3 unit_theta(double th, double ph) {
  return {std::cos(th) * std::cos(ph), std::cos(th) * std::sin(ph), -std::sin(th)};
}
Vec3 unit_phi(double /*th*/, double ph) { return {-std::sin(ph), std::cos(ph), 0.0}; }

Mat3 f_of_gibbs(const Vec3& c) {
  return -2.0 * (Mat3::Identity() + cross_matrix(c)) / (1.0 + c.squaredNorm());
}

constexpr double kPoleTol = 1e-12;

}  // namespace

std::string gauge_name(IsoGauge g) {
  switch (g) {
    case IsoGauge::Cartesian: return "cartesian";
    case IsoGauge::Dirac: return "dirac";
    default: return "schwinger";
  }
}

Mat3 rotation_from_gibbs(const GibbsVector& g) {
  const double n2 = g.c.squaredNorm();
  if (1.0 + n2 == 0.0) throw std::domain_error("rotation_from_gibbs: degenerate c");
  const Mat3 cx = cross_matrix(g.c);
  return Mat3::Identity() + 2.0 * (cx + cx * cx) / (1.0 + n2);
}

GibbsVector gibbs_between(const Vec3& a, const Vec3& b) {
  const double den = (a + b).dot(a);
  if (a.norm() == 0.0 || std::abs(den) < 1e-14 * a.squaredNorm())
    throw std::domain_error("gibbs_between: degenerate (antiparallel or zero) input");
  return {a.cross(b) / den};
}

Vec3 GibbsField::dtheta(double th, double ph) const {
  if (dc_dtheta) return dc_dtheta(th, ph);
  const double h = 1e-5;  // 4th-order centered fallback
  return (8.0 * (c(th + h, ph) - c(th - h, ph)) -
          (c(th + 2 * h, ph) - c(th - 2 * h, ph))) /
         (12.0 * h);
}

Vec3 GibbsField::dphi(double th, double ph) const {
  if (dc_dphi) return dc_dphi(th, ph);
  const double h = 1e-5;
  return (8.0 * (c(th, ph + h) - c(th, ph - h)) -
          (c(th, ph + 2 * h) - c(th, ph - 2 * h))) /
         (12.0 * h);
}

GibbsField gibbs_cartesian_to_dirac() {
  GibbsField f;
  f.c = [](double th, double ph) -> Vec3 {
    if (std::abs(th - M_PI) < kPoleTol)
      throw std::domain_error("gibbs field singular at theta = pi");
    const double t = std::tan(0.5 * th);
    return {t * std::sin(ph), -t * std::cos(ph), 0.0};
  };
  f.dc_dtheta = [](double th, double ph) -> Vec3 {
    const double s = 0.5 / (std::cos(0.5 * th) * std::cos(0.5 * th));
    return {s * std::sin(ph), -s * std::cos(ph), 0.0};
  };
  f.dc_dphi = [](double th, double ph) -> Vec3 {
    const double t = std::tan(0.5 * th);
    return {t * std::cos(ph), t * std::sin(ph), 0.0};
  };
  return f;
}

GibbsField gibbs_dirac_to_schwinger() {
  GibbsField f;
  f.c = [](double, double ph) -> Vec3 {
    if (std::abs(ph - M_PI) < kPoleTol)
      throw std::domain_error("gibbs field singular at phi = pi");
    return {0.0, 0.0, -std::tan(0.5 * ph)};
  };
  f.dc_dtheta = [](double, double) -> Vec3 { return Vec3::Zero(); };
  f.dc_dphi = [](double, double ph) -> Vec3 {
    return {0.0, 0.0, -0.5 / (std::cos(0.5 * ph) * std::cos(0.5 * ph))};
  };
  return f;
}

GibbsField gibbs_cartesian_to_schwinger() {
  GibbsField f;
  f.c = [](double th, double ph) -> Vec3 {
    const GibbsVector g = composite_gibbs(th, ph);
    return g.c;
  };
  f.dc_dtheta = [](double th, double ph) -> Vec3 {
    const double s = 0.5 / (std::cos(0.5 * th) * std::cos(0.5 * th));
    return {s * std::tan(0.5 * ph), -s, 0.0};
  };
  f.dc_dphi = [](double th, double ph) -> Vec3 {
    const double s = 0.5 / (std::cos(0.5 * ph) * std::cos(0.5 * ph));
    return {std::tan(0.5 * th) * s, 0.0, -s};
  };
  return f;
}

GibbsVector composite_gibbs(double theta, double phi) {
  if (std::abs(theta - M_PI) < kPoleTol || std::abs(phi - M_PI) < kPoleTol)
    throw std::domain_error("composite_gibbs: pole at theta = pi or phi = pi");
  const double tt = std::tan(0.5 * theta), tp = std::tan(0.5 * phi);
  return {{tt * tp, -tt, -tp}};
}

Mat3 composite_rotation_closed_form(double theta, double phi) {
  const double st = std::sin(theta), ct = std::cos(theta);
  const double sp = std::sin(phi), cp = std::cos(phi);
  Mat3 m;
  m << ct * cp, ct * sp, -st,
       -sp,     cp,      0,
       st * cp, st * sp, ct;
  return m;
}

ProfileFunctions ProfileFunctions::trivial(double e) {
  ProfileFunctions pf;
  pf.phi_of_r = [](double) { return 0.0; };
  pf.f_of_r = [](double) { return 0.0; };
  pf.k_of_r = [](double) { return 0.0; };
  pf.e = e;
  pf.kappa = 0.0;
  pf.g = 1.0 / e;
  return pf;
}

ProfileFunctions ProfileFunctions::embedded_abelian(double e) {
  ProfileFunctions pf = trivial(e);
  pf.k_of_r = [e](double r) { return -1.0 / (e * r * r); };
  return pf;
}

Vec3 PotentialSet::W(int mu, double r, double th, double ph) const {
  return {components[0][mu](r, th, ph), components[1][mu](r, th, ph),
          components[2][mu](r, th, ph)};
}

Vec3 PotentialSet::Phi(double r, double th, double ph) const {
  return {scalar_triplet[0](r, th, ph), scalar_triplet[1](r, th, ph),
          scalar_triplet[2](r, th, ph)};
}

std::string PotentialSet::to_json(const std::vector<double>& rg,
                                  const std::vector<double>& tg,
                                  const std::vector<double>& pg) const {
  nlohmann::json j;
  j["gauge"] = gauge_name(gauge);
  j["e"] = e;
  j["grid"] = {{"r", rg}, {"theta", tg}, {"phi", pg}};
  static const char* mu_names[4] = {"t", "r", "theta", "phi"};
  for (int a = 0; a < 3; ++a) {
    for (int mu = 0; mu < 4; ++mu) {
      std::vector<double> vals;
      vals.reserve(rg.size() * tg.size() * pg.size());
      for (double r : rg)
        for (double th : tg)
          for (double ph : pg) vals.push_back(components[a][mu](r, th, ph));
      j["W"][std::to_string(a + 1)][mu_names[mu]] = vals;
    }
    std::vector<double> vals;
    for (double r : rg)
      for (double th : tg)
        for (double ph : pg) vals.push_back(scalar_triplet[a](r, th, ph));
    j["Phi"][std::to_string(a + 1)] = vals;
  }
  return j.dump(2);
}

PotentialSet cartesian_ansatz(const ProfileFunctions& pf) {
  PotentialSet p;
  p.gauge = IsoGauge::Cartesian;
  p.e = pf.e;
  auto F = pf.f_of_r, K = pf.k_of_r, Ph = pf.phi_of_r;
  for (int a = 0; a < 3; ++a) {
    p.components[a][0] = [F, a](double r, double th, double ph) {
      return r * F(r) * unit_radial(th, ph)[a];
    };
    p.components[a][1] = [](double, double, double) { return 0.0; };
    p.components[a][2] = [K, a](double r, double th, double ph) {
      return K(r) * r * r * unit_phi(th, ph)[a];
    };
    p.components[a][3] = [K, a](double r, double th, double ph) {
      return -K(r) * r * r * std::sin(th) * unit_theta(th, ph)[a];
    };
    p.scalar_triplet[a] = [Ph, a](double r, double th, double ph) {
      return r * Ph(r) * unit_radial(th, ph)[a];
    };
  }
  return p;
}

PotentialSet transform_potential(const PotentialSet& p, const GibbsField& cf,
                                 IsoGauge target) {
  PotentialSet out;
  out.gauge = target;
  out.e = p.e;
  const PotentialSet src = p;  // value copy keeps the closures alive
  for (int a = 0; a < 3; ++a) {
    for (int mu = 0; mu < 4; ++mu) {
      out.components[a][mu] = [src, cf, a, mu](double r, double th, double ph) {
        const Vec3 c = cf.eval(th, ph);
        const Mat3 O = rotation_from_gibbs({c});
        double val = O.row(a).dot(src.W(mu, r, th, ph));
        if (mu == 2)
          val += (f_of_gibbs(c) * cf.dtheta(th, ph))(a) / src.e;
        else if (mu == 3)
          val += (f_of_gibbs(c) * cf.dphi(th, ph))(a) / src.e;
        return val;
      };
    }
    out.scalar_triplet[a] = [src, cf, a](double r, double th, double ph) {
      const Mat3 O = rotation_from_gibbs({cf.eval(th, ph)});
      return O.row(a).dot(src.Phi(r, th, ph));
    };
  }
  return out;
}

PotentialSet dirac_closed_form(const ProfileFunctions& pf) {
  PotentialSet p;
  p.gauge = IsoGauge::Dirac;
  p.e = pf.e;
  const double e = pf.e;
  auto F = pf.f_of_r, K = pf.k_of_r, Ph = pf.phi_of_r;
  auto Q = [K, e](double r) { return r * r * K(r) + 1.0 / e; };
  auto zero = [](double, double, double) { return 0.0; };
  for (int a = 0; a < 3; ++a)
    for (int mu = 0; mu < 4; ++mu) p.components[a][mu] = zero;
  p.components[2][0] = [F](double r, double, double) { return r * F(r); };
  p.components[0][2] = [Q](double r, double, double ph) { return -Q(r) * std::sin(ph); };
  p.components[1][2] = [Q](double r, double, double ph) { return Q(r) * std::cos(ph); };
  p.components[0][3] = [Q](double r, double th, double ph) {
    return -Q(r) * std::sin(th) * std::cos(ph);
  };
  p.components[1][3] = [Q](double r, double th, double ph) {
    return -Q(r) * std::sin(th) * std::sin(ph);
  };
  p.components[2][3] = [e](double, double th, double) {
    return (std::cos(th) - 1.0) / e;
  };
  p.scalar_triplet[0] = zero;
  p.scalar_triplet[1] = zero;
  p.scalar_triplet[2] = [Ph](double r, double, double) { return r * Ph(r); };
  return p;
}

PotentialSet schwinger_closed_form(const ProfileFunctions& pf) {
  PotentialSet p;
  p.gauge = IsoGauge::Schwinger;
  p.e = pf.e;
  const double e = pf.e;
  auto F = pf.f_of_r, K = pf.k_of_r, Ph = pf.phi_of_r;
  auto Q = [K, e](double r) { return r * r * K(r) + 1.0 / e; };
  auto zero = [](double, double, double) { return 0.0; };
  for (int a = 0; a < 3; ++a)
    for (int mu = 0; mu < 4; ++mu) p.components[a][mu] = zero;
  p.components[2][0] = [F](double r, double, double) { return r * F(r); };
  p.components[1][2] = [Q](double r, double, double) { return Q(r); };
  p.components[0][3] = [Q](double r, double th, double) { return -Q(r) * std::sin(th); };
  p.components[2][3] = [e](double, double th, double) { return std::cos(th) / e; };
  p.scalar_triplet[0] = zero;
  p.scalar_triplet[1] = zero;
  p.scalar_triplet[2] = [Ph](double r, double, double) { return r * Ph(r); };
  return p;
}

Mat2c spinor_gauge_matrix(double theta, double phi, int sign) {
  const double c = std::cos(0.5 * theta), s = std::sin(0.5 * theta);
  const cd ep = std::exp(cd(0.0, 0.5 * phi)), em = std::exp(cd(0.0, -0.5 * phi));
  Mat2c b;
  b << c * ep, s * em, -s * ep, c * em;
  return double(sign) * b;
}

Mat2c spinor_from_gibbs(const GibbsVector& g) {
  static const Mat2c sx = (Mat2c() << 0, 1, 1, 0).finished();
  static const Mat2c sy = (Mat2c() << 0, cd(0, -1), cd(0, 1), 0).finished();
  static const Mat2c sz = (Mat2c() << 1, 0, 0, -1).finished();
  const Mat2c sc = g.c.x() * sx + g.c.y() * sy + g.c.z() * sz;
  return (Mat2c::Identity() - cd(0, 1) * sc) / std::sqrt(1.0 + g.c.squaredNorm());
}

Mat4 vector_rep_of_matrix(const Mat2c& a_in) {
  const cd det = a_in.determinant();
  if (std::abs(det) < 1e-14) throw std::domain_error("vector_rep: singular parameter");
  const Mat2c a = a_in / std::sqrt(det);
  static const Mat2c s[4] = {
      Mat2c::Identity(), (Mat2c() << 0, 1, 1, 0).finished(),
      (Mat2c() << 0, cd(0, -1), cd(0, 1), 0).finished(),
      (Mat2c() << 1, 0, 0, -1).finished()};
  Mat4 L;
  for (int b = 0; b < 4; ++b) {
    const Mat2c m = a * s[b] * a.adjoint();
    for (int r = 0; r < 4; ++r) L(r, b) = 0.5 * (s[r] * m).trace().real();
  }
  return L;
}

Mat4 vector_rep(const std::array<cd, 4>& k) {
  static const Mat2c s1 = (Mat2c() << 0, 1, 1, 0).finished();
  static const Mat2c s2 = (Mat2c() << 0, cd(0, -1), cd(0, 1), 0).finished();
  static const Mat2c s3 = (Mat2c() << 1, 0, 0, -1).finished();
  const Mat2c a = k[0] * Mat2c::Identity() + k[1] * s1 + k[2] * s2 + k[3] * s3;
  return vector_rep_of_matrix(a);
}

}  // namespace isochiral::gauge
