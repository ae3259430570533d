#ifndef BRAIDNOMIAL_SERIES_HPP
#define BRAIDNOMIAL_SERIES_HPP

#include <cmath>
#include <complex>
#include <vector>

#include "braidnomial/equation.hpp"
#include "braidnomial/gamma.hpp"

namespace braidnomial {

struct SeriesEvaluation {
  Complex value{0.0, 0.0};
  int terms_used = 0;
  double tail_bound_estimate = 0.0;  // magnitude of the last included term
  bool domain_ok = true;
};

namespace series_detail {

// Coefficient tables c_k = Gamma(a0 + k*da) / (Gamma(b0 + k*db) * k!).
// Built by a stride recurrence: after `stride` steps in k both Gamma
// arguments shift by an integer, so c_{k+stride}/c_k is a rational product.
// Restarts from log-gamma whenever a pole zeroed the running value.
inline std::vector<double> ratio_coefficients(double a0, double da, double b0, double db,
                                              long stride, int K) {
  std::vector<double> c(K);
  auto direct = [&](int k) {
    double a = a0 + da * k, b = b0 + db * k;
    return gamma_ratio(a, b) * std::exp(-std::lgamma(double(k) + 1.0));
  };
  for (int k = 0; k < K && k < stride; ++k) c[k] = direct(k);
  double ia = da * stride, ib = db * stride;  // integer shifts
  for (int k = 0; k + stride < K; ++k) {
    double prev = c[k];
    if (prev == 0.0) {
      c[k + stride] = direct(k + int(stride));
      continue;
    }
    double a = a0 + da * k, b = b0 + db * k;
    double f = prev;
    for (long j = 0; j < std::lround(ia); ++j) f *= (a + j);          // Gamma(a+ia)/Gamma(a)
    for (long j = 1; j <= std::lround(-ib); ++j) {                     // Gamma(b)/Gamma(b+ib)
      double factor = b - j;
      f *= factor;
    }
    for (long j = 0; j < std::lround(ib); ++j) f /= (b + j);
    for (long j = 1; j <= stride; ++j) f /= double(k + j);             // k! -> (k+stride)!
    c[k + stride] = f;
  }
  return c;
}

inline Complex principal_pow(Complex X, double expo) {
  return std::exp(expo * std::log(X));
}

}  // namespace series_detail

inline double domain_ratio(const TrinomialEquation& eq, Complex X) {
  return std::pow(std::abs(X), double(eq.N)) / to_double(eq.R);
}

/// Root series near X = infinity for the master label t in [0, n-1]:
///   Y_t(X) = ((-1)^{1/n} e(rt/n)/n) X^{r/n}
///            sum_k G((1+pk)/n)/(G((1-qk)/n+1) k!) (e^{-(q+2tN) pi i/n} X^{-N/n})^k.
/// Polar form with an explicit (possibly unwrapped) argument of X; fractional
/// powers use X^e = |X|^e exp(i e arg).
inline SeriesEvaluation eval_inf_series_polar(const TrinomialEquation& eq, long t, double mod,
                                              double arg, int K) {
  const long n = eq.n, p = eq.p, q = eq.q, N = eq.N, r = eq.r;
  if (t < 0 || t >= n) throw OutOfRange("t out of [0, n-1]");
  if (K < 1) throw OutOfRange("K must be >= 1");
  auto coeff = series_detail::ratio_coefficients(1.0 / n, double(p) / n, 1.0 + 1.0 / n,
                                                 -double(q) / n, n, K);
  Complex z = std::polar(std::pow(mod, -double(N) / double(n)),
                         -(double(q) + 2.0 * double(t) * double(N)) * kPi / double(n) -
                             arg * double(N) / double(n));
  Complex sum = 0.0, zk = 1.0;
  double last = 0.0;
  for (int k = 0; k < K; ++k) {
    Complex term = coeff[k] * zk;
    sum += term;
    last = std::abs(term);
    zk *= z;
  }
  Complex front = std::polar(1.0, kPi / double(n)) * unit_phase(Rational(r * t, n)) / double(n);
  SeriesEvaluation ev;
  ev.value = front * std::polar(std::pow(mod, double(r) / double(n)), arg * double(r) / double(n)) * sum;
  ev.terms_used = K;
  ev.tail_bound_estimate = last;
  ev.domain_ok = std::pow(mod, double(N)) / to_double(eq.R) > 1.0;
  return ev;
}

inline SeriesEvaluation eval_inf_series(const TrinomialEquation& eq, long t, Complex X, int K) {
  return eval_inf_series_polar(eq, t, std::abs(X), std::arg(X), K);
}

/// p-solution near X = 0, t in [0, p-1]:
///   Y_t(X) = (X^{(r-g)/p}/p) sum_k G((1+nk)/p)/(G((1+p+qk)/p) k!) e((r-g+Nk)t/p) X^{Nk/p}.
inline SeriesEvaluation eval_p_series(const TrinomialEquation& eq, long t, Complex X, int K) {
  const long n = eq.n, p = eq.p, q = eq.q, N = eq.N, r = eq.r, g = eq.g;
  if (t < 0 || t >= p) throw OutOfRange("t out of [0, p-1]");
  if (K < 1) throw OutOfRange("K must be >= 1");
  auto coeff = series_detail::ratio_coefficients(1.0 / p, double(n) / p,
                                                 (1.0 + double(p)) / p, double(q) / p, p, K);
  SeriesEvaluation ev;
  ev.terms_used = K;
  ev.domain_ok = domain_ratio(eq, X) < 1.0;
  if (X == Complex(0.0, 0.0)) {  // positive leading exponent
    ev.value = 0.0;
    return ev;
  }
  Complex xp = series_detail::principal_pow(X, double(N) / double(p));
  Complex sum = 0.0, zk = 1.0;
  double last = 0.0;
  for (int k = 0; k < K; ++k) {
    Complex term = coeff[k] * unit_phase(Rational((r - g + N * k) * t, p)) * zk;
    sum += term;
    last = std::abs(term);
    zk *= xp;
  }
  ev.value = series_detail::principal_pow(X, double(r - g) / double(p)) / double(p) * sum;
  ev.tail_bound_estimate = last;
  return ev;
}

/// q-solution near X = 0, t' in [p, n-1]:
///   Y_t'(X) = (X^{g/q}/q) sum_k G((-1+nk)/q)/(G((-1+pk)/q+1) k!) e((g+Nk)t'/q) X^{Nk/q}.
inline SeriesEvaluation eval_q_series(const TrinomialEquation& eq, long t_prime, Complex X,
                                      int K) {
  const long n = eq.n, p = eq.p, q = eq.q, N = eq.N, g = eq.g;
  if (t_prime < p || t_prime >= n) throw OutOfRange("t' out of [p, n-1]");
  if (K < 1) throw OutOfRange("K must be >= 1");
  auto coeff = series_detail::ratio_coefficients(-1.0 / q, double(n) / q,
                                                 1.0 - 1.0 / q, double(p) / q, q, K);
  SeriesEvaluation ev;
  ev.terms_used = K;
  ev.domain_ok = domain_ratio(eq, X) < 1.0;
  if (X == Complex(0.0, 0.0)) {
    ev.value = 0.0;
    return ev;
  }
  Complex xq = series_detail::principal_pow(X, double(N) / double(q));
  Complex sum = 0.0, zk = 1.0;
  double last = 0.0;
  for (int k = 0; k < K; ++k) {
    Complex term = coeff[k] * unit_phase(Rational((g + N * k) * t_prime, q)) * zk;
    sum += term;
    last = std::abs(term);
    zk *= xq;
  }
  ev.value = series_detail::principal_pow(X, double(g) / double(q)) / double(q) * sum;
  ev.tail_bound_estimate = last;
  return ev;
}

/// Distinct labels t' in [p, n-1] produce coinciding q-series values whenever
/// gcd(q, g, N) > 1: the phases e((g + Nk)t'/q) then depend only on t' modulo
/// q / gcd(q, g, N). Callers must fall back to tracker-based labeling (and flag
/// the report) when this returns true.
inline bool q_series_degenerate(const TrinomialEquation& eq) {
  return std::gcd(eq.q, std::gcd(eq.g, eq.N)) > 1;
}

/// Generalized binomial series psi(alpha, s, x) =
///   sum_k alpha G(alpha + k(s+1)) / G(alpha + ks + 1) x^k / k!.
inline SeriesEvaluation eval_psi(Complex alpha, Complex s, Complex x, int K) {
  if (K < 1) throw OutOfRange("K must be >= 1");
  SeriesEvaluation ev;
  ev.terms_used = K;
  double radius = std::abs(std::exp(s * std::log(s) - (s + 1.0) * std::log(s + 1.0)));
  ev.domain_ok = std::abs(x) < radius;
  Complex sum = 0.0, xk = 1.0;
  double last = 0.0;
  double lkfact = 0.0;
  for (int k = 0; k < K; ++k) {
    Complex num = alpha + double(k) * (s + 1.0);
    Complex den = alpha + double(k) * s + 1.0;
    Complex term;
    if (std::abs(num.imag()) < 1e-14 && is_nonpositive_integer(num.real())) {
      term = 0.0;  // pole upstairs: skip
    } else if (std::abs(den.imag()) < 1e-14 && is_nonpositive_integer(den.real())) {
      term = 0.0;  // 1/Gamma vanishes
    } else {
      term = alpha * std::exp(log_gamma(num) - log_gamma(den) - lkfact) * xk;
    }
    sum += term;
    last = std::abs(term);
    xk *= x;
    lkfact += std::log(double(k + 1));
  }
  ev.value = sum;
  ev.tail_bound_estimate = last;
  return ev;
}

/// The generalized binomial series satisfies psi(alpha, s, x) = B^alpha where
/// B is the branch of B = 1 + x B^{s+1} with B(0) = 1 (Lagrange inversion).
/// Evaluates that branch by Newton continuation along the ray from 0 to x.
/// Valid on the closed disk of convergence except very near the boundary
/// branch point, where the root degenerates (see psi_branch_point_value).
inline Complex eval_psi_algebraic(Complex alpha, Complex s, Complex x, int steps = 200) {
  Complex B = 1.0;
  for (int step = 1; step <= steps; ++step) {
    Complex xt = x * (double(step) / double(steps));
    for (int it = 0; it < 100; ++it) {
      Complex f = B - 1.0 - xt * std::exp((s + 1.0) * std::log(B));
      Complex fp = 1.0 - xt * (s + 1.0) * std::exp(s * std::log(B));
      Complex d = f / fp;
      B -= d;
      if (std::abs(d) < 1e-15) break;
    }
  }
  return std::exp(alpha * std::log(B));
}

/// Value of psi(alpha, s, x) exactly at a branch point of B = 1 + x B^{s+1},
/// where additionally 1 = x (s+1) B^s, so B = (x(s+1))^{-1/s} in closed form.
/// The points e(-p/2n) R^{-1/n} with (alpha, s) = (-1/n, -p/n) are of this
/// kind: the series converges there only like K^{-1/2}, but the function
/// value itself is algebraic and real after the e(-1/2n) phase.
inline Complex psi_branch_point_value(Complex alpha, Complex s, Complex x) {
  Complex B = std::exp((-1.0 / s) * std::log(x * (s + 1.0)));
  return std::exp(alpha * std::log(B));
}

}  // namespace braidnomial

#endif
