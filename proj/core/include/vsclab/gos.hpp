#ifndef VSCLAB_GOS_HPP
#define VSCLAB_GOS_HPP

#include <array>
#include <optional>
#include <vector>

#include "vsclab/contrast_field.hpp"
#include "vsclab/scatter_data.hpp"

namespace vsclab {

// Orthonormal pair orthogonal to a lattice vector gamma (proof frame for
// the zeta/eta construction).  Deterministic tie-breaking: d1 is the
// normalized cross product of gamma with the lowest-index basis vector not
// parallel to gamma, d2 = normalized gamma x d1.  gamma = 0 gives (e1,e2).
struct FramePair {
  Vec3 d1, d2;
};

FramePair frame_vectors(const GammaIndex& gamma);

// Complex frequency zeta in C^3 with zeta.zeta = kappa^2 (bilinear dot) and
// t = |Im zeta|.
struct ComplexFrequency {
  CVec3 zeta;
  double t = 0.0;
  double kappa = 1.0;
};

ComplexFrequency make_complex_frequency(const CVec3& zeta, double kappa);

// The proof pair zeta_t = -gamma/2 + i t d1 + sqrt(kappa^2+t^2-|gamma|^2/4) d2
// and eta_t its sign-flipped partner, so zeta+eta = -gamma exactly.
// Throws if the radicand is negative.
std::pair<ComplexFrequency, ComplexFrequency> zeta_eta(const GammaIndex& gamma,
                                                       double t, double kappa);

// t0 = 2 kappa^2 (R'/pi) M_em C_m.
double t_zero(double c_m, double kappa, double r_prime, double m_em);

struct GosConfig {
  int grid_size = 32;
  double r_prime = 0.0;  // half-side of the periodized cube; must be > pi
  double tolerance = 1e-8;
  int max_iterations = 200;
};

// u = e^{i zeta.x} (1 + v) with v solving the conjugated equation
//   Delta v + 2 i zeta.grad v = kappa^2 f (1 + v)
// on the periodized cube of side 2R', discretized on a rotated grid whose
// first axis is aligned with Im zeta and a half-integer-shifted dual lattice
// (the Faddeev symbol -xi.xi - 2 zeta.xi never vanishes on it).
struct GosSolution {
  ComplexFrequency freq;
  std::array<Vec3, 3> frame;  // rotation columns; frame[0] || Im zeta
  int grid_size = 0;
  double r_prime = 0.0;
  std::vector<Complex> v;  // on the rotated grid
  double residual = 0.0;   // relative residual of the conjugated equation
  int iterations = 0;
  double v_l2 = 0.0;        // ||v||_{L^2(B_R')}
  double u_l2_scaled = 0.0; // ||u||_{L^2(B_R')} * exp(-t R')
  double u_l2 = 0.0;        // may overflow to inf for large t*R'

  Vec3 grid_point_rotated(int j0, int j1, int j2) const;  // x' coords
};

// Solves for v.  Requires t >= 2 kappa^2 (R'/pi) ||f||_inf (grid max).
// frame_override forces a specific rotation (used to put a zeta/eta pair on
// one common grid); its first axis must be parallel to Im zeta up to sign.
GosSolution solve_gos(const ContrastField& f, const ComplexFrequency& freq,
                      const GosConfig& cfg,
                      const std::optional<std::array<Vec3, 3>>& frame_override =
                          std::nullopt);

struct GosBoundsRow {
  double t = 0.0;
  double v_l2 = 0.0;
  double ratio_vt = 0.0;    // t ||v|| / ||f||_inf   (estimate (3.2) shape)
  double u_scaled = 0.0;    // ||u|| e^{-R' t}       (estimate (3.4) shape)
  double residual = 0.0;
};

struct GosBoundsReport {
  double c2_fit = 0.0;      // max over rows of max(ratio_vt, v_l2, u_scaled)
  double trend_slope = 0.0; // log-log slope of ratio_vt vs t
  std::vector<GosBoundsRow> rows;
};

GosBoundsReport verify_gos_bounds(const ContrastField& f,
                                  const std::vector<double>& t_list,
                                  const GosConfig& cfg);

struct Lemma31Report {
  double lhs = 0.0;          // |int_{B_pi} (f1-f2) u1 u2|
  double rhs_over_c1 = 0.0;  // ||w1-w2|| ||u1|| ||u2||
  double ratio = 0.0;
};

// Both solutions must live on the same rotated grid (same frame).
Lemma31Report lemma31_check(const ContrastField& f1, const ContrastField& f2,
                            const GosSolution& u1, const GosSolution& u2,
                            const ScatterData& w1, const ScatterData& w2);

struct LowFreqBound {
  double lhs = 0.0;    // |fhat1(gamma) - fhat2(gamma)|
  double bound = 0.0;  // c3 e^{4R't} ||w1-w2|| + (c3/t) ||f1-f2||_{H^m}
  bool holds = false;
};

// Evaluates the low-frequency coefficient estimate with a supplied c3.
// Requires t >= t0 and |gamma| <= 2 sqrt(kappa^2 + t^2).
LowFreqBound low_freq_coeff_estimate(const ContrastField& f1,
                                     const ContrastField& f2,
                                     const GammaIndex& gamma, double t,
                                     double w_diff_norm, double c3, double m,
                                     double r_prime, double t0, double kappa);

// Smallest c3 making the estimate hold for one evaluated case.
double low_freq_min_c3(const ContrastField& f1, const ContrastField& f2,
                       const GammaIndex& gamma, double t, double w_diff_norm,
                       double m, double r_prime, double t0, double kappa,
                       const GosConfig& cfg);

}  // namespace vsclab

#endif
