#ifndef BRAIDNOMIAL_BURAU_HPP
#define BRAIDNOMIAL_BURAU_HPP

#include <vector>

#include "braidnomial/laurent.hpp"

namespace braidnomial {

/// Dense square matrix over a Laurent polynomial ring.
template <class Coeff>
struct LaurentMatrix {
  long dim = 0;
  std::vector<Laurent<Coeff>> a;  // row-major

  explicit LaurentMatrix(long d = 0) : dim(d), a(d * d) {}

  Laurent<Coeff>& at(long i, long j) { return a[i * dim + j]; }
  const Laurent<Coeff>& at(long i, long j) const { return a[i * dim + j]; }

  static LaurentMatrix identity(long d) {
    LaurentMatrix m(d);
    for (long i = 0; i < d; ++i) m.at(i, i) = Laurent<Coeff>::one();
    return m;
  }

  friend LaurentMatrix operator*(const LaurentMatrix& x, const LaurentMatrix& y) {
    LaurentMatrix z(x.dim);
    for (long i = 0; i < x.dim; ++i)
      for (long k = 0; k < x.dim; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (long j = 0; j < x.dim; ++j) {
          if (y.at(k, j).is_zero()) continue;
          z.at(i, j) += x.at(i, k) * y.at(k, j);
        }
      }
    return z;
  }

  friend bool operator==(const LaurentMatrix& x, const LaurentMatrix& y) {
    return x.dim == y.dim && x.a == y.a;
  }

  Laurent<Coeff> trace() const {
    Laurent<Coeff> s;
    for (long i = 0; i < dim; ++i) s += at(i, i);
    return s;
  }
};

using BurauMatrix = LaurentMatrix<BigInt>;

/// Reduced Burau image of sigma_i^{+/-1} in B_n: an (n-1) x (n-1) matrix
/// differing from the identity only in rows i-1 .. i+1 (1-based generator
/// index, 0-based matrix rows i-2 .. i).
inline BurauMatrix burau_generator(long n, long i, int sign) {
  if (n < 2) throw OutOfRange("need at least two strands");
  if (i < 1 || i > n - 1) throw OutOfRange("generator index out of range");
  long d = n - 1;
  BurauMatrix m = BurauMatrix::identity(d);
  LaurentZ t = LaurentZ::t(1), tinv = LaurentZ::t(-1), one = LaurentZ::one();
  long k = i - 1;  // 0-based row of the -t pivot
  if (sign > 0) {
    m.at(k, k) = -t;
    if (k > 0) m.at(k - 1, k) = t;
    if (k + 1 < d) m.at(k + 1, k) = one;
  } else {
    m.at(k, k) = -tinv;
    if (k > 0) m.at(k - 1, k) = one;
    if (k + 1 < d) m.at(k + 1, k) = tinv;
  }
  return m;
}

/// Burau image of a word given as signed generator indices, composed in
/// chronological (left-to-right) order.
inline BurauMatrix burau_of(long n, const std::vector<int>& letters) {
  BurauMatrix m = BurauMatrix::identity(n - 1);
  for (int s : letters) {
    if (s == 0) throw OutOfRange("zero is not a generator");
    m = m * burau_generator(n, s > 0 ? s : -s, s > 0 ? +1 : -1);
  }
  return m;
}

/// Characteristic polynomial det(lambda I - M) by Faddeev-LeVerrier;
/// result[k] is the Laurent-polynomial coefficient of lambda^k.
inline std::vector<LaurentQ> char_poly(const BurauMatrix& m) {
  long d = m.dim;
  LaurentMatrix<Rational> mq(d);
  for (long i = 0; i < d * d; ++i) mq.a[i] = to_rational(m.a[i]);
  std::vector<LaurentQ> c(d + 1);
  c[d] = LaurentQ::one();
  auto mk = LaurentMatrix<Rational>::identity(d);  // M^0 adjusted iterate
  for (long k = 1; k <= d; ++k) {
    mk = mq * mk;
    LaurentQ tr = mk.trace();
    LaurentQ ck;
    // c_{d-k} = -(1/k) * trace(M * B_{k-1}) with B updated below
    for (size_t j = 0; j < tr.coeffs.size(); ++j) tr.coeffs[j] /= k;
    ck = -tr;
    c[d - k] = ck;
    for (long i = 0; i < d; ++i) mk.at(i, i) += ck;
  }
  return c;
}

}  // namespace braidnomial

#endif
