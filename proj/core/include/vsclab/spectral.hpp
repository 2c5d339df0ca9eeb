#ifndef VSCLAB_SPECTRAL_HPP
#define VSCLAB_SPECTRAL_HPP

#include <vector>

#include "vsclab/contrast_field.hpp"

namespace vsclab {

// Truncated-lattice Sobolev norm (sum over retained gamma of
// (1+|gamma|^2)^m |fhat|^2)^{1/2}.  Defined for any real m.
double sobolev_norm(const ContrastField& field, double m);

// Real part of the H^m pairing <a, b>_{H^m} over the retained lattice.
double sobolev_inner_real(const ContrastField& a, const ContrastField& b,
                          double m);

// Certified upper bound for the Sobolev embedding constant
//   M_em = (2 pi)^{-3/2} (sum_{gamma in Z^3} (1+|gamma|^2)^{-m})^{1/2},
// obtained from exact enumeration up to a truncation radius plus an
// integral tail majorant.  Requires m > 3/2, else the sum diverges.
double embedding_constant(double m, const Lattice& lattice);

// sum over gamma in Z^3 with |gamma| <= rho of (1+|gamma|^2)^lambda,
// by exact enumeration.  rho >= 1 is not required here; rho < 1 keeps
// only the origin.
double lattice_sum(double lambda, double rho);

struct LatticeSumBoundReport {
  double c4_fit = 0.0;        // max of sqrt(sum)/rho^tau over the list
  double max_ratio = 0.0;     // same value; kept for report symmetry
  double tau = 0.0;           // max(lambda + 3/2, 0)
  double trend_slope = 0.0;   // log-log regression slope over largest decade
  bool bounded = false;       // no growth trend in the largest decade
  std::vector<double> rhos;
  std::vector<double> ratios;
};

// Ratios sqrt(lattice_sum(lambda, rho)) / rho^tau over the given radii.
// lambda == -3/2 is rejected (the excluded logarithmic-growth exponent).
LatticeSumBoundReport lattice_sum_bound_check(double lambda,
                                              const std::vector<double>& rhos);

struct HighFreqSplitReport {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

// Evaluates, over the retained lattice,
//   Re sum_{|gamma| > rho} (1+|gamma|^2)^m fdag conj(fdag - f)
//     <= 1/8 ||fdag - f||_{H^m}^2 + 2 ||fdag||_{H^s}^2 rho^{2(m-s)}.
HighFreqSplitReport high_freq_split_check(const ContrastField& f_dagger,
                                          const ContrastField& f,
                                          const SobolevParams& params,
                                          double rho);

}  // namespace vsclab

#endif
