#ifndef VSCLAB_PSI_HPP
#define VSCLAB_PSI_HPP

namespace vsclab {

// mu = min{1, (s-m)/(m+3/2)} for 3/2 < m < s.
double mu_exponent(double m, double s);

// Concave index function family
//   near: psi(t) = A (ln(3+1/t))^{-2 mu}
//   far:  psi(t) = B (ln(3+1/t))^{-2 mu theta},  theta in (0,1).
struct PsiFunction {
  enum class Variant { kNear, kFar };

  Variant variant = Variant::kNear;
  double constant = 1.0;  // A (near) or B (far)
  double mu = 1.0;
  double theta = 1.0;     // only used by the far variant

  double exponent() const {
    return variant == Variant::kNear ? 2.0 * mu : 2.0 * mu * theta;
  }

  static PsiFunction near(double a, double mu);
  static PsiFunction far(double b, double mu, double theta);
};

// psi(t) for t >= 0; psi(0) = 0 (limit value).
double psi_eval(const PsiFunction& psi, double t);

// psi'(t) = e * C * (ln(3+1/t))^{-e-1} / (3 t^2 + t) with e the decay
// exponent (2mu or 2mu*theta) and C the constant; t > 0.
double psi_derivative(const PsiFunction& psi, double t);

// A-priori parameter choice 1/(2 alpha) = psi'(4 delta^2).
double alpha_rule(const PsiFunction& psi, double delta);

}  // namespace vsclab

#endif
