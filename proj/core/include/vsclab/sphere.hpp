#ifndef VSCLAB_SPHERE_HPP
#define VSCLAB_SPHERE_HPP

#include <vector>

#include "vsclab/geometry.hpp"

namespace vsclab {

// Quadrature nodes on a sphere of given radius: Gauss-Legendre in the polar
// cosine times a uniform azimuthal grid.  Weights sum to 4*pi*radius^2.
struct SpherePointSet {
  double radius = 1.0;
  int n_polar = 0;
  int n_azimuth = 0;
  double azimuth_offset = 0.0;
  std::vector<Vec3> points;
  std::vector<double> weights;

  int size() const { return static_cast<int>(points.size()); }
  double weight_sum() const;
};

// Builds the product rule with 2*k^2 nodes where k = round(sqrt(n/2)),
// k >= 2.  The azimuth offset rotates the grid; receiver sets use a
// half-step offset so they never coincide with source nodes.
SpherePointSet make_sphere_rule(int requested_points, double radius,
                                double azimuth_offset = 0.0);

// Gauss-Legendre nodes/weights on [-1,1] (Newton iteration on P_n).
void gauss_legendre(int n, std::vector<double>& nodes,
                    std::vector<double>& weights);

}  // namespace vsclab

#endif
