#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <string>

namespace isochiral::gauge {

using cd = std::complex<double>;
using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Mat2c = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4d;

enum class IsoGauge { Cartesian, Dirac, Schwinger };
std::string gauge_name(IsoGauge g);

// ---- Gibbs-vector SO(3) algebra -------------------------------------------

struct GibbsVector {
  Vec3 c = Vec3::Zero();
};

// O(c) = I + 2 (c^x + (c^x)^2) / (1 + c.c); proper orthogonal
Mat3 rotation_from_gibbs(const GibbsVector& g);

// Gibbs vector of the simplest rotation taking a to b (|a| = |b| != 0):
// c = (a x b) / ((a+b).a); throws for (anti)degenerate input.
GibbsVector gibbs_between(const Vec3& a, const Vec3& b);

// A Gibbs vector field c(theta,phi) together with analytic derivatives.
struct GibbsField {
  std::function<Vec3(double, double)> c;
  std::function<Vec3(double, double)> dc_dtheta;  // may be null -> FD fallback
  std::function<Vec3(double, double)> dc_dphi;
  Vec3 eval(double th, double ph) const { return c(th, ph); }
  Vec3 dtheta(double th, double ph) const;
  Vec3 dphi(double th, double ph) const;
};

// the canonical fields of the construction
GibbsField gibbs_cartesian_to_dirac();   // c(theta,phi), singular at theta=pi
GibbsField gibbs_dirac_to_schwinger();   // c' = (0,0,-tan(phi/2))
GibbsField gibbs_cartesian_to_schwinger();  // c'' (composite)

// c''(theta,phi) value (pole error at theta=pi or phi=pi)
GibbsVector composite_gibbs(double theta, double phi);

// the printed composite rotation matrix, row 3 = radial unit vector
Mat3 composite_rotation_closed_form(double theta, double phi);

// ---- monopole potentials ---------------------------------------------------

struct ProfileFunctions {
  std::function<double(double)> phi_of_r;  // Phi(r)
  std::function<double(double)> f_of_r;    // F(r)
  std::function<double(double)> k_of_r;    // K(r)
  double e = 1.0;      // gauge coupling
  double kappa = 0.0;  // scalar coupling
  double g = 1.0;      // magnetic charge (bookkeeping for the Abelian forms)

  static ProfileFunctions trivial(double e = 1.0);
  // K = -1/(e r^2): the embedded-Abelian ("simplest") monopole
  static ProfileFunctions embedded_abelian(double e = 1.0);
};

// isotopic index a=0..2, coordinate mu in {t,r,theta,phi} = 0..3
struct PotentialSet {
  IsoGauge gauge = IsoGauge::Cartesian;
  double e = 1.0;
  // components[a][mu](r, theta, phi)
  std::array<std::array<std::function<double(double, double, double)>, 4>, 3> components;
  std::array<std::function<double(double, double, double)>, 3> scalar_triplet;

  Vec3 W(int mu, double r, double th, double ph) const;
  Vec3 Phi(double r, double th, double ph) const;
  std::string to_json(const std::vector<double>& rgrid,
                      const std::vector<double>& thgrid,
                      const std::vector<double>& phgrid) const;
};

// the Cartesian-gauge ansatz built from profile functions, in spherical
// coordinate components (W_t, W_r, W_theta, W_phi)
PotentialSet cartesian_ansatz(const ProfileFunctions& pf);

// W'^a_mu = O_ab(c) W^b_mu + (1/e) f_ab(c) dc_b/dx^mu, scalar triplet rotated
PotentialSet transform_potential(const PotentialSet& p, const GibbsField& cfield,
                                 IsoGauge target);

// closed forms of the Dirac / Schwinger gauge sets for reference tests
PotentialSet dirac_closed_form(const ProfileFunctions& pf);
PotentialSet schwinger_closed_form(const ProfileFunctions& pf);

// ---- spinor and vector representations -------------------------------------

// B(theta,phi) of the Cartesian->Schwinger spinor change, sign = +-1
Mat2c spinor_gauge_matrix(double theta, double phi, int sign = +1);

// (I - i sigma.c)/sqrt(1 + c.c) for a real Gibbs vector
Mat2c spinor_from_gibbs(const GibbsVector& g);

// 4x4 Lorentz matrix of A in SL(2,C): A X(x) A^+ = X(Lx), X = x^0 I + x.sigma.
// Input k: the four complex parameters, A = k0 I + k.sigma, normalized by
// sqrt(det A) internally; throws if det A = 0.
Mat4 vector_rep(const std::array<cd, 4>& k);
Mat4 vector_rep_of_matrix(const Mat2c& a);

}  // namespace isochiral::gauge
