#ifndef BRAIDNOMIAL_LAURENT_HPP
#define BRAIDNOMIAL_LAURENT_HPP

#include <sstream>
#include <string>
#include <vector>

#include "braidnomial/equation.hpp"

namespace braidnomial {

/// Laurent polynomial sum_j coeffs[j] t^{low + j} over an exact coefficient
/// ring (BigInt or Rational). Always kept normalized: no leading/trailing
/// zero coefficients; zero is represented by an empty coefficient list.
template <class Coeff>
struct Laurent {
  long low = 0;
  std::vector<Coeff> coeffs;

  Laurent() = default;
  Laurent(Coeff c, long degree = 0) : low(degree) {
    coeffs.push_back(std::move(c));
    normalize();
  }

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(Coeff(1), 0); }
  static Laurent t(long degree = 1) { return Laurent(Coeff(1), degree); }

  bool is_zero() const { return coeffs.empty(); }
  long high() const { return low + long(coeffs.size()) - 1; }

  Coeff at(long degree) const {
    if (degree < low || degree > high()) return Coeff(0);
    return coeffs[degree - low];
  }

  void normalize() {
    size_t a = 0, b = coeffs.size();
    while (a < b && coeffs[a] == 0) ++a;
    while (b > a && coeffs[b - 1] == 0) --b;
    if (a == b) {
      coeffs.clear();
      low = 0;
      return;
    }
    coeffs.erase(coeffs.begin() + b, coeffs.end());
    coeffs.erase(coeffs.begin(), coeffs.begin() + a);
    low += long(a);
  }

  friend Laurent operator+(const Laurent& x, const Laurent& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    long lo = std::min(x.low, y.low), hi = std::max(x.high(), y.high());
    Laurent z;
    z.low = lo;
    z.coeffs.assign(hi - lo + 1, Coeff(0));
    for (size_t j = 0; j < x.coeffs.size(); ++j) z.coeffs[x.low + j - lo] += x.coeffs[j];
    for (size_t j = 0; j < y.coeffs.size(); ++j) z.coeffs[y.low + j - lo] += y.coeffs[j];
    z.normalize();
    return z;
  }

  friend Laurent operator-(const Laurent& x) {
    Laurent z = x;
    for (auto& c : z.coeffs) c = -c;
    return z;
  }
  friend Laurent operator-(const Laurent& x, const Laurent& y) { return x + (-y); }

  friend Laurent operator*(const Laurent& x, const Laurent& y) {
    if (x.is_zero() || y.is_zero()) return zero();
    Laurent z;
    z.low = x.low + y.low;
    z.coeffs.assign(x.coeffs.size() + y.coeffs.size() - 1, Coeff(0));
    for (size_t i = 0; i < x.coeffs.size(); ++i)
      for (size_t j = 0; j < y.coeffs.size(); ++j) z.coeffs[i + j] += x.coeffs[i] * y.coeffs[j];
    z.normalize();
    return z;
  }

  Laurent& operator+=(const Laurent& y) { return *this = *this + y; }
  Laurent& operator-=(const Laurent& y) { return *this = *this - y; }
  Laurent& operator*=(const Laurent& y) { return *this = *this * y; }

  friend bool operator==(const Laurent& x, const Laurent& y) {
    return x.low == y.low && x.coeffs == y.coeffs;
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long j = long(coeffs.size()) - 1; j >= 0; --j) {
      const Coeff& c = coeffs[j];
      if (c == 0) continue;
      long d = low + j;
      if (!first) os << (c > 0 ? " + " : " - ");
      else if (c < 0) os << "-";
      first = false;
      Coeff a = c < 0 ? Coeff(-c) : c;
      if (a != 1 || d == 0) os << a;
      if (d != 0) {
        if (a != 1) os << "*";
        os << var;
        if (d != 1) os << "^" << d;
      }
    }
    return os.str();
  }
};

using LaurentZ = Laurent<BigInt>;
using LaurentQ = Laurent<Rational>;

inline LaurentQ to_rational(const LaurentZ& x) {
  LaurentQ y;
  y.low = x.low;
  y.coeffs.reserve(x.coeffs.size());
  for (const auto& c : x.coeffs) y.coeffs.emplace_back(c);
  return y;
}

}  // namespace braidnomial

#endif
