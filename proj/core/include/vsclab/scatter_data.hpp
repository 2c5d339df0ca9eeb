#ifndef VSCLAB_SCATTER_DATA_HPP
#define VSCLAB_SCATTER_DATA_HPP

#include <filesystem>
#include <vector>

#include "vsclab/sphere.hpp"

namespace vsclab {

enum class DataKind { kNearField, kFarField };

// Scattering data matrix over (source|incident direction) x (receiver|
// observation direction) point sets.  Near field: total fields w_f(x,y) on
// dB_R x dB_R.  Far field: pattern u_inf(xhat, d) on S^2 x S^2.  The L^2
// norm uses the product surface measure without normalization; the
// quadrature weights live in the point sets.
struct ScatterData {
  DataKind kind = DataKind::kFarField;
  double kappa = 1.0;
  double radius = 1.0;  // R for near field, 1 for far field
  SpherePointSet sources;
  SpherePointSet receivers;
  std::vector<Complex> values;  // row-major [source][receiver]

  Complex& at(int s, int r) { return values[std::size_t(s) * receivers.size() + r]; }
  Complex at(int s, int r) const { return values[std::size_t(s) * receivers.size() + r]; }
  bool same_geometry(const ScatterData& o) const;
};

// Quadrature-weighted L^2(product measure) norm of the data matrix.
double data_norm(const ScatterData& d);

// Elementwise difference; geometries must match.
ScatterData data_difference(const ScatterData& a, const ScatterData& b);

// Single file: magic, JSON header (kind, kappa, R, point sets, weights),
// then the matrix as interleaved little-endian doubles.
void save_scatter_data(const std::filesystem::path& path, const ScatterData& d);
ScatterData load_scatter_data(const std::filesystem::path& path);

}  // namespace vsclab

#endif
