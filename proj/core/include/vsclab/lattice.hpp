#ifndef VSCLAB_LATTICE_HPP
#define VSCLAB_LATTICE_HPP

#include <cstddef>

#include "vsclab/geometry.hpp"

namespace vsclab {

// Truncated Fourier lattice on the cube Q = (-pi,pi)^3.  Coefficients are
// kept for gamma in Z^3 with |gamma|_inf <= max_degree; grid_size sample
// points per axis, grid_size >= 2*max_degree+1 so retained modes never alias.
class Lattice {
 public:
  Lattice(int max_degree, int grid_size);

  int max_degree() const { return max_degree_; }
  int grid_size() const { return grid_size_; }
  int coeff_per_axis() const { return 2 * max_degree_ + 1; }

  std::size_t coeff_count() const;
  std::size_t grid_count() const;

  // Lexicographic order over (g0,g1,g2), each axis running -N..N.
  std::size_t coeff_index(const GammaIndex& gamma) const;
  GammaIndex gamma_at(std::size_t index) const;

  // Grid node position along one axis: -pi + 2*pi*j/grid_size.
  double grid_coord(int j) const;
  Vec3 grid_point(int j0, int j1, int j2) const;

  bool operator==(const Lattice& o) const {
    return max_degree_ == o.max_degree_ && grid_size_ == o.grid_size_;
  }

 private:
  int max_degree_;
  int grid_size_;
};

// Smoothness indices of Theorem-style statements: 3/2 < m < s, s != 2m+3/2,
// and a bound c_s on the H^s norm of the exact contrast.
struct SobolevParams {
  double m;
  double s;
  double c_s;

  SobolevParams(double m_in, double s_in, double c_s_in);
};

}  // namespace vsclab

#endif
