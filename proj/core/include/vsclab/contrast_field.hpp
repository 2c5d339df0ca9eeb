#ifndef VSCLAB_CONTRAST_FIELD_HPP
#define VSCLAB_CONTRAST_FIELD_HPP

#include <filesystem>
#include <vector>

#include "vsclab/lattice.hpp"

namespace vsclab {

// A complex contrast f on Q = (-pi,pi)^3, held in the dual representation
// coefficient <-> grid.  Coefficients follow the normalization
//   fhat(gamma) = (2 pi)^{-3/2} \int_Q f(x) e^{-i gamma.x} dx,
// so a constant c has fhat(0) = (2 pi)^{3/2} c.
//
// Admissibility flags record measured facts about the grid representation:
//   in_admissible_set:  max Im f <= 1e-10 and max Re f <= 1 + 1e-10,
//   supported_in_ball:  max |f| outside B_pi <= 1e-8 * max |f|.
class ContrastField {
 public:
  ContrastField(const Lattice& lattice, std::vector<Complex> coeffs);

  const Lattice& lattice() const { return lattice_; }
  const std::vector<Complex>& coeffs() const { return coeffs_; }
  Complex coeff(const GammaIndex& gamma) const {
    return coeffs_[lattice_.coeff_index(gamma)];
  }

  // Samples on the lattice grid (cached synthesis).
  const std::vector<Complex>& grid_samples() const;

  bool in_admissible_set() const { return in_admissible_set_; }
  bool supported_in_ball() const { return supported_in_ball_; }
  // max Im f and max Re f - 1 over the grid; <= 0 means constraint met.
  double im_excess() const { return im_excess_; }
  double re_excess() const { return re_excess_; }
  // max |f| on grid points outside B_pi, relative to max |f|.
  double support_violation() const { return support_violation_; }
  double max_abs() const { return max_abs_; }

  static ContrastField zero(const Lattice& lattice);

 private:
  void classify();

  Lattice lattice_;
  std::vector<Complex> coeffs_;
  std::vector<Complex> grid_;
  bool in_admissible_set_ = false;
  bool supported_in_ball_ = false;
  double im_excess_ = 0.0;
  double re_excess_ = 0.0;
  double support_violation_ = 0.0;
  double max_abs_ = 0.0;
};

// Discrete realization of the coefficient integral by the trapezoidal rule
// on the periodic grid (computed with an FFT).  Exact on band-limited input.
ContrastField analyze(const std::vector<Complex>& grid_samples,
                      const Lattice& lattice);

// Evaluates the truncated Fourier series on the lattice grid.
std::vector<Complex> synthesize(const ContrastField& field);

// Grid-pointwise clamp Im <= 0, Re <= 1, times a smooth radial cutoff that
// vanishes outside B_pi, re-analyzed to coefficients.  The cutoff plateau
// is [0, plateau_radius]; the transition ends just inside pi.
ContrastField project_to_admissible(const ContrastField& field,
                                    double plateau_radius = 0.9 * 3.14159265358979323846);

// Difference field (same lattice required).
ContrastField field_difference(const ContrastField& a, const ContrastField& b);
ContrastField field_sum(const ContrastField& a, const ContrastField& b);
ContrastField field_scale(const ContrastField& a, Complex c);

// Binary field format: magic/version header, lattice parameters, then the
// coefficients as interleaved little-endian doubles in lexicographic order.
void save_field(const std::filesystem::path& path, const ContrastField& field);
ContrastField load_field(const std::filesystem::path& path);

}  // namespace vsclab

#endif
