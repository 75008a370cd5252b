#include "isochiral/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace isochiral::quad {

Rule1D gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n < 1");
  Rule1D r;
  r.x.resize(n);
  r.w.resize(n);
  const int mid = (n + 1) / 2;
  for (int i = 0; i < mid; ++i) {
    // Newton from the Chebyshev-based initial guess
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int k = 0; k < n; ++k) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * k + 1.0) * x * p1 - k * p2) / (k + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return r;
}

SphereRule sphere_rule(int ntheta, int nphi) {
  if (nphi % 2 != 0) throw std::invalid_argument("sphere_rule: nphi must be even");
  SphereRule s;
  const Rule1D gl = gauss_legendre(ntheta);
  s.theta.resize(ntheta);
  s.wtheta = gl.w;
  for (int i = 0; i < ntheta; ++i) s.theta[i] = std::acos(gl.x[ntheta - 1 - i]);
  // acos of descending x gives ascending theta; weights are symmetric
  s.phi.resize(nphi);
  for (int i = 0; i < nphi; ++i) s.phi[i] = 2.0 * M_PI * i / nphi;
  s.wphi = 2.0 * M_PI / nphi;
  return s;
}

std::vector<double> simpson_weights(std::size_t n, double h) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("simpson_weights: need odd point count >= 3");
  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i + 2 < n; i += 2) {
    w[i] += h / 3.0;
    w[i + 1] += 4.0 * h / 3.0;
    w[i + 2] += h / 3.0;
  }
  return w;
}

std::vector<std::array<double, 3>> sobol3(std::size_t npts) {
  // dimensions 1-3 of the Joe-Kuo Sobol sequence (dim 1 = van der Corput)
  constexpr int kBits = 30;
  unsigned v[3][kBits];
  for (int b = 0; b < kBits; ++b) v[0][b] = 1u << (kBits - 1 - b);
  // dim 2: s=1, a=0, m = {1}
  // dim 3: s=2, a=1, m = {1,3}
  {
    unsigned m[kBits];
    m[0] = 1;
    for (int b = 1; b < kBits; ++b) m[b] = m[b - 1] ^ (m[b - 1] << 1);
    for (int b = 0; b < kBits; ++b) v[1][b] = m[b] << (kBits - 1 - b);
  }
  {
    unsigned m[kBits];
    m[0] = 1;
    m[1] = 3;
    for (int b = 2; b < kBits; ++b)
      m[b] = m[b - 2] ^ (m[b - 2] << 2) ^ (m[b - 1] << 1) ^ m[b - 1];
    for (int b = 0; b < kBits; ++b) v[2][b] = m[b] << (kBits - 1 - b);
  }
  std::vector<std::array<double, 3>> pts(npts);
  unsigned x[3] = {0, 0, 0};
  const double scale = 1.0 / double(1u << kBits);
  for (std::size_t i = 0; i < npts; ++i) {
    if (i > 0) {
      unsigned c = 0, ii = static_cast<unsigned>(i - 1);
      while (ii & 1u) {
        ++c;
        ii >>= 1;
      }
      for (int d = 0; d < 3; ++d) x[d] ^= v[d][c];
    }
    pts[i] = {x[0] * scale, x[1] * scale, x[2] * scale};
  }
  return pts;
}

}  // namespace isochiral::quad
