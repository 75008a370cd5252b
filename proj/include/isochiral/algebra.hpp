#pragma once

#include <Eigen/Dense>
#include <complex>

namespace isochiral::algebra {

using cd = std::complex<double>;
using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;
using Mat8c = Eigen::Matrix<cd, 8, 8>;
using Vec4c = Eigen::Vector4cd;
using Vec8c = Eigen::Matrix<cd, 8, 1>;

inline const Mat2c& sigma(int k) {
  static const Mat2c s[3] = {
      (Mat2c() << 0, 1, 1, 0).finished(),
      (Mat2c() << 0, cd(0, -1), cd(0, 1), 0).finished(),
      (Mat2c() << 1, 0, 0, -1).finished()};
  return s[k - 1];
}

// Weyl (spinor) basis: gamma^0 = offdiag(I,I), gamma^k = offdiag(-sigma_k, sigma_k)
inline Mat4c gamma(int a) {
  Mat4c g = Mat4c::Zero();
  if (a == 0) {
    g.block<2, 2>(0, 2) = Mat2c::Identity();
    g.block<2, 2>(2, 0) = Mat2c::Identity();
  } else {
    g.block<2, 2>(0, 2) = -sigma(a);
    g.block<2, 2>(2, 0) = sigma(a);
  }
  return g;
}

// chirality matrix, sign convention -i g0 g1 g2 g3 = diag(-I, I)
inline Mat4c gamma5() {
  Mat4c g = Mat4c::Zero();
  g.block<2, 2>(0, 0) = -Mat2c::Identity();
  g.block<2, 2>(2, 2) = Mat2c::Identity();
  return g;
}

// bispinor parity in the spherical tetrad: antidiagonal -1 matrix (= -g5 g1)
inline Mat4c parity_bisp_spherical() {
  Mat4c p = Mat4c::Zero();
  p(0, 3) = p(1, 2) = p(2, 1) = p(3, 0) = -1.0;
  return p;
}

// bispinor parity in the Cartesian tetrad: i gamma^0
inline Mat4c parity_bisp_cartesian() { return cd(0, 1) * gamma(0); }

// bispinor factor of the K operator: -i gamma^0 gamma^3 = -i diag(1,-1,-1,1)
inline Mat4c k_operator_bisp() {
  Mat4c m = Mat4c::Zero();
  m(0, 0) = cd(0, -1);
  m(1, 1) = cd(0, 1);
  m(2, 2) = cd(0, 1);
  m(3, 3) = cd(0, -1);
  return m;
}

// i sigma^{12} = (1/2)(sigma3 (+) sigma3): diagonal (1/2, -1/2, 1/2, -1/2)
inline Mat4c i_sigma12() {
  Mat4c m = Mat4c::Zero();
  m(0, 0) = 0.5;
  m(1, 1) = -0.5;
  m(2, 2) = 0.5;
  m(3, 3) = -0.5;
  return m;
}

// iso (2x2) tensor bispinor (4x4) -> 8x8, iso-major component order
inline Mat8c kron(const Mat2c& a, const Mat4c& b) {
  Mat8c m;
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) m.block<4, 4>(4 * i, 4 * k) = a(i, k) * b;
  return m;
}

inline Vec8c kron_vec(int iso /*0:T+, 1:T-*/, const Vec4c& v) {
  Vec8c out = Vec8c::Zero();
  out.segment<4>(4 * iso) = v;
  return out;
}

inline cd iexp(double x) { return std::exp(cd(0.0, x)); }
inline cd iexp(cd z) { return std::exp(cd(0.0, 1.0) * z); }

}  // namespace isochiral::algebra
