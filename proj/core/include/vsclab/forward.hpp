#ifndef VSCLAB_FORWARD_HPP
#define VSCLAB_FORWARD_HPP

#include <functional>
#include <memory>

#include "vsclab/contrast_field.hpp"
#include "vsclab/scatter_data.hpp"

namespace vsclab {

struct SolverConfig {
  int grid_size = 64;
  // Half-side of the periodization cube.  Must be an integer multiple of pi
  // (so band-limited contrasts restrict to the solver grid exactly); 0 picks
  // the smallest multiple of pi that is >= 2R.
  double periodization_radius = 0.0;
  double tolerance = 1e-8;
  int max_iterations = 400;
};

struct IncidentField {
  enum class Kind { kPointSource, kPlaneWave };

  Kind kind = Kind::kPlaneWave;
  Vec3 source;      // point-source center, |source| = R > pi
  Vec3 direction;   // unit propagation direction
  double kappa = 1.0;

  static IncidentField point_source(const Vec3& center, double kappa);
  static IncidentField plane_wave(const Vec3& direction, double kappa);

  Complex evaluate(const Vec3& x) const;
};

// One total-field solve u = u^i - kappa^2 V[f u] against a fixed contrast.
// The solver state stores t = f*u on the periodization grid; the scattered
// field anywhere follows from the representation integral.
struct TotalField {
  double kappa = 1.0;
  double residual = 0.0;  // relative discrete integral-equation residual
  int iterations = 0;
  int grid_size = 0;
  double cube_half_side = 0.0;
  std::vector<Complex> contrast_times_field;  // t = f*u, solver grid
  std::vector<Complex> total_on_support;      // u on grid points with |x|<=pi

  Complex scattered_at(const Vec3& x) const;
  Complex total_at(const Vec3& x, const IncidentField& inc) const;
  Complex far_field_at(const Vec3& obs_direction) const;
};

class LippmannSchwingerSolver {
 public:
  // Band-limited contrast evaluated on the solver grid via its Fourier
  // series (exact; requires grid_size > 2 * q * max_degree where
  // periodization_radius = q*pi), zero outside B_pi.
  LippmannSchwingerSolver(const ContrastField& f, double kappa,
                          const SolverConfig& cfg, double kernel_radius);

  // Contrast given by a pointwise sampler (phantoms with a closed form).
  LippmannSchwingerSolver(const std::function<Complex(const Vec3&)>& sampler,
                          double kappa, const SolverConfig& cfg,
                          double kernel_radius);

  ~LippmannSchwingerSolver();
  LippmannSchwingerSolver(LippmannSchwingerSolver&&) noexcept;

  TotalField solve(const IncidentField& inc) const;

  // Solve with arbitrary incident samples on the solver grid (masked to the
  // contrast support); used for superposition checks.
  TotalField solve_with_samples(const std::vector<Complex>& incident) const;

  int grid_size() const;
  double cube_half_side() const;
  double grid_step() const;
  Vec3 grid_point(int j0, int j1, int j2) const;
  const std::vector<Complex>& contrast_samples() const;

  // y = x + kappa^2 f .* V x (the discrete Lippmann-Schwinger operator on
  // t-space) and its transpose partner; exposed for the adjoint gradient.
  void apply_operator(const std::vector<Complex>& x, std::vector<Complex>& y) const;
  void apply_volume_potential(const std::vector<Complex>& x, std::vector<Complex>& y) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// Helper: smallest admissible periodization radius (integer multiple of pi
// covering 2R) for a measurement radius R.
double default_periodization_radius(double measurement_radius);

// Near-field operator data: for each point source y on dB_R, the total field
// sampled at the receiver set on dB_R (receivers half-step rotated so the
// point-source diagonal singularity is never sampled).
ScatterData near_field_data(const ContrastField& f, double kappa, double R,
                            int n_points, const SolverConfig& cfg);
ScatterData near_field_data(const LippmannSchwingerSolver& solver,
                            const SpherePointSet& sources,
                            const SpherePointSet& receivers);

// Far-field operator data for plane-wave incidence.
ScatterData far_field_data(const ContrastField& f, double kappa, int n_dirs,
                           const SolverConfig& cfg);
ScatterData far_field_data(const LippmannSchwingerSolver& solver,
                           const SpherePointSet& inc_dirs,
                           const SpherePointSet& obs_dirs);

// Adjoint-state gradient of the data misfit f -> ||F(f) - g||^2 in the flat
// coefficient (L^2(Q)) metric: returns ghat with
//   d misfit = 2 Re sum_gamma ghat(gamma) conj(d chat(gamma)).
// residual must be F(f) - g on the same geometry the solver produces.
ContrastField misfit_gradient(const ContrastField& f, double kappa,
                              const ScatterData& residual,
                              const SolverConfig& cfg);

}  // namespace vsclab

#endif
