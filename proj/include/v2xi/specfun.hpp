#pragma once

// Digamma, trigamma and the order-2 Hurwitz zeta function for positive real
// arguments. All routines shift the argument above 10 with the upward
// recurrence and finish with the asymptotic (Bernoulli) expansion.

namespace v2xi::specfun {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kEulerGamma = 0.5772156649015329;
// Four-digit value used when reproducing the closed forms exactly as printed.
inline constexpr double kEulerGammaPrinted = 0.5772;
inline constexpr double kBasel = kPi * kPi / 6.0;

enum class EulerConstant { full, printed };

constexpr double euler_gamma(EulerConstant which) {
  return which == EulerConstant::full ? kEulerGamma : kEulerGammaPrinted;
}

struct SpecialValue {
  double value = 0.0;
  double abs_error_estimate = 0.0;
};

/// Psi(z) = Gamma'(z)/Gamma(z). Throws Error{domain} for z <= 0 or non-finite z.
SpecialValue digamma(double z);

/// Psi_1(z) = d/dz Psi(z) = zeta(2, z). Throws Error{domain} for z <= 0.
SpecialValue trigamma(double z);

/// zeta(2, a) = sum_{j>=0} (a + j)^-2. Same evaluation path as trigamma.
SpecialValue hurwitz_zeta2(double a);

}  // namespace v2xi::specfun
