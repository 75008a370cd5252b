#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <vector>

namespace isochiral::quad {

struct Rule1D {
  std::vector<double> x;
  std::vector<double> w;
};

// Gauss-Legendre nodes/weights on [-1,1]
Rule1D gauss_legendre(int n);

// Product rule on the sphere: Gauss-Legendre in cos(theta), uniform trapezoid
// in phi (periodic).  Node order: theta-major.  Weights include sin(theta)
// d(theta) d(phi) measure.  Grids exclude the theta poles.
struct SphereRule {
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<double> wtheta;  // GL weights in cos(theta)
  double wphi;                 // 2 pi / nphi
  // index of the reflected node (pi - theta, phi + pi)
  std::size_t reflect_theta(std::size_t it) const { return theta.size() - 1 - it; }
  std::size_t reflect_phi(std::size_t ip) const { return (ip + phi.size() / 2) % phi.size(); }
};
SphereRule sphere_rule(int ntheta, int nphi);

// Composite Simpson weights on an even-sized uniform grid (n odd count).
std::vector<double> simpson_weights(std::size_t n, double h);

// First npts points of the 3-dimensional Sobol sequence (Joe-Kuo directions).
std::vector<std::array<double, 3>> sobol3(std::size_t npts);

}  // namespace isochiral::quad
