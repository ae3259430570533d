#ifndef BRAIDNOMIAL_EQUATION_HPP
#define BRAIDNOMIAL_EQUATION_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "braidnomial/errors.hpp"

namespace braidnomial {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline double to_double(const Rational& r) {
  return static_cast<double>(boost::multiprecision::cpp_bin_float_100(r));
}

constexpr double kPi = 3.14159265358979323846264338327950288;

/// e(a) = exp(2 pi i a), the unit phase of a fractional turn.
inline Complex unit_phase(double turns) {
  return std::polar(1.0, 2.0 * kPi * turns);
}
inline Complex unit_phase(const Rational& turns) { return unit_phase(to_double(turns)); }

enum class GcdMode { Reject, Warn };

/// Validated data of the trinomial family Y^{mn} - X^g Y^{mp} + X^r = 0.
///
/// The constructor input carries total exponents (mn, mp); m is derived as
/// their gcd. All derived constants (q, N, R) live on the reduced master
/// triple (n, p, q).
struct TrinomialEquation {
  long n_total = 0;  // degree mn
  long p_total = 0;  // middle exponent mp
  long g = 0;
  long r = 0;
  long m = 1;
  long n = 0, p = 0, q = 0;
  long N = 0;          // qr - ng on the reduced triple
  Rational R;          // p^p q^q / n^n, exact
  bool gcd_ok = true;  // gcd(n,N) = gcd(n,r) = 1

  long degree() const { return n_total; }

  /// |Sigma| radius R^{1/N}.
  double sigma_radius() const { return std::pow(to_double(R), 1.0 / static_cast<double>(N)); }

  /// Default base point: modulus 0.5 * R^{1/N}, argument pi/(4N).
  Complex base_point() const {
    return std::polar(0.5 * sigma_radius(), kPi / (4.0 * static_cast<double>(N)));
  }

  /// f(X, Y) for the full (total-exponent) equation.
  template <class C>
  C f(const C& X, const C& Y) const {
    return pow_i(Y, n_total) - pow_i(X, g) * pow_i(Y, p_total) + pow_i(X, r);
  }
  template <class C>
  C df_dY(const C& X, const C& Y) const {
    return C(double(n_total)) * pow_i(Y, n_total - 1) -
           C(double(p_total)) * pow_i(X, g) * pow_i(Y, p_total - 1);
  }
  template <class C>
  C df_dX(const C& X, const C& Y) const {
    C dx = -C(double(g)) * pow_i(X, g - 1) * pow_i(Y, p_total);
    if (r >= 1) dx += C(double(r)) * pow_i(X, r - 1);
    return dx;
  }

  /// Master equation T^n - X^g T^p + X^r (equals f when m = 1).
  TrinomialEquation master() const {
    TrinomialEquation e = *this;
    e.n_total = n;
    e.p_total = p;
    e.m = 1;
    return e;
  }

  template <class C>
  static C pow_i(C base, long e) {
    C acc(1.0);
    for (; e > 0; e >>= 1, base *= base)
      if (e & 1) acc *= base;
    return acc;
  }
};

struct NewtonPolygon {
  std::vector<std::pair<long, long>> vertices;  // (0, mn), (g, mp), (r, 0)
  long area_twice = 0;
};

struct BranchingSet {
  double modulus = 0.0;          // R^{1/N}
  std::vector<Complex> points;   // omega_l = R^{1/N} e(l/N)
  Complex base_point;            // epsilon
};

inline TrinomialEquation build_equation(long n_total, long p_total, long g, long r,
                                        GcdMode mode = GcdMode::Reject) {
  if (n_total < 1 || p_total < 1 || g < 1 || r < 1)
    throw BadInput("all equation parameters must be >= 1");
  if (p_total >= n_total) throw BadInput("middle exponent must be smaller than the degree");

  TrinomialEquation eq;
  eq.n_total = n_total;
  eq.p_total = p_total;
  eq.g = g;
  eq.r = r;
  eq.m = std::gcd(n_total, p_total);
  eq.n = n_total / eq.m;
  eq.p = p_total / eq.m;
  eq.q = eq.n - eq.p;
  if (eq.q <= 1) throw QTooSmall("q = n - p must exceed 1");
  eq.N = eq.q * r - eq.n * g;
  if (eq.N <= 0) throw NonConvexNewton("qr - ng must be positive");
  if (std::gcd(eq.p, r - g < 0 ? g - r : r - g) != 1)
    throw BadMiddleGcd("gcd(p, r - g) must be 1");
  BigInt num = boost::multiprecision::pow(BigInt(eq.p), unsigned(eq.p)) *
               boost::multiprecision::pow(BigInt(eq.q), unsigned(eq.q));
  BigInt den = boost::multiprecision::pow(BigInt(eq.n), unsigned(eq.n));
  eq.R = Rational(num, den);
  eq.gcd_ok = std::gcd(eq.n, eq.N) == 1 && std::gcd(eq.n, eq.r) == 1;
  if (!eq.gcd_ok && mode == GcdMode::Reject)
    throw GcdConditionViolated("gcd(n,N) and gcd(n,r) must be 1 for the predictor");
  return eq;
}

inline NewtonPolygon newton_polygon(const TrinomialEquation& eq) {
  NewtonPolygon np;
  np.vertices = {{0, eq.n_total}, {eq.g, eq.p_total}, {eq.r, 0}};
  // shoelace, doubled
  long s = 0;
  for (size_t i = 0; i < 3; ++i) {
    auto [x0, y0] = np.vertices[i];
    auto [x1, y1] = np.vertices[(i + 1) % 3];
    s += x0 * y1 - x1 * y0;
  }
  np.area_twice = s < 0 ? -s : s;
  return np;
}

inline BranchingSet branching_points(const TrinomialEquation& eq) {
  BranchingSet bs;
  bs.modulus = eq.sigma_radius();
  bs.points.reserve(eq.N);
  for (long l = 0; l < eq.N; ++l)
    bs.points.push_back(std::polar(bs.modulus, 2.0 * kPi * double(l) / double(eq.N)));
  bs.base_point = eq.base_point();
  return bs;
}

inline long mod_inverse(long a, long n) {
  long t = 0, nt = 1, rr = n, nr = ((a % n) + n) % n;
  while (nr != 0) {
    long qq = rr / nr;
    t -= qq * nt;
    std::swap(t, nt);
    rr -= qq * nr;
    std::swap(rr, nr);
  }
  if (rr != 1) throw NoInverse("no modular inverse");
  return ((t % n) + n) % n;
}

/// The unique coinciding pair (t, t') at omega_{l}: t solves
/// l = p(rt + 1) mod n, and r(t' - t) = 1 mod n.
inline std::pair<long, long> coincidence_pair(const TrinomialEquation& eq, long ell_bar) {
  if (ell_bar < 0 || ell_bar >= eq.N) throw OutOfRange("ell out of [0, N-1]");
  if (std::gcd(eq.n, eq.r) != 1) throw NoInverse("gcd(n, r) != 1: predictor unavailable");
  long n = eq.n, p = eq.p, r = eq.r;
  long rinv = mod_inverse(r % n, n);
  long pinv = mod_inverse(p % n, n);
  // ell = p(rt+1) mod n  =>  t = r^-1 (p^-1 ell - 1) mod n
  long t = ((rinv * ((pinv * (ell_bar % n)) % n - 1 + n)) % n + n) % n;
  long tp = (t + rinv) % n;
  return {t, tp};
}

}  // namespace braidnomial

#endif
