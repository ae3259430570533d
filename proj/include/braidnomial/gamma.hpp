#ifndef BRAIDNOMIAL_GAMMA_HPP
#define BRAIDNOMIAL_GAMMA_HPP

#include <cmath>
#include <complex>
#include <limits>

namespace braidnomial {

// Lanczos approximation, g = 7, 9 terms. Accurate to ~1e-13 relative on the
// parameter ranges used by the series coefficients.
namespace detail {
inline constexpr double kLanczosG = 7.0;
inline constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
}  // namespace detail

/// log Gamma(z) for complex z, principal branch on Re z >= 0.5; reflection
/// elsewhere. Not continuous across the negative real axis (unused there
/// except at the poles, which callers handle via reciprocal_gamma).
inline std::complex<double> log_gamma(std::complex<double> z) {
  constexpr double pi = 3.14159265358979323846264338327950288;
  if (z.real() < 0.5) {
    // log G(z) = log(pi / sin(pi z)) - log G(1 - z)
    return std::log(pi / std::sin(pi * z)) - log_gamma(1.0 - z);
  }
  z -= 1.0;
  std::complex<double> x = detail::kLanczos[0];
  for (int i = 1; i < 9; ++i) x += detail::kLanczos[i] / (z + double(i));
  std::complex<double> t = z + detail::kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

inline std::complex<double> complex_gamma(std::complex<double> z) {
  return std::exp(log_gamma(z));
}

inline bool is_nonpositive_integer(double x, double eps = 1e-9) {
  return x < 0.5 && std::abs(x - std::round(x)) < eps;
}

/// 1/Gamma(x) for real x; zero at the poles of Gamma.
inline double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  if (x > 0.5) return std::exp(-std::lgamma(x));
  // reflection: 1/G(x) = G(1-x) sin(pi x) / pi
  constexpr double pi = 3.14159265358979323846264338327950288;
  return std::exp(std::lgamma(1.0 - x)) * std::sin(pi * x) / pi;
}

/// Gamma(x) for real non-pole x, with sign.
inline double real_gamma(double x) {
  double rg = reciprocal_gamma(x);
  if (rg == 0.0) return std::numeric_limits<double>::infinity();
  return 1.0 / rg;
}

/// Gamma(a)/Gamma(b) with a not a pole; returns 0 when b is a pole of Gamma.
inline double gamma_ratio(double a, double b) {
  double rb = reciprocal_gamma(b);
  if (rb == 0.0) return 0.0;
  return real_gamma(a) * rb;
}

}  // namespace braidnomial

#endif
