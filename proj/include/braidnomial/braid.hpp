#ifndef BRAIDNOMIAL_BRAID_HPP
#define BRAIDNOMIAL_BRAID_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "braidnomial/burau.hpp"
#include "braidnomial/perm.hpp"

namespace braidnomial {

/// Artin braid word. Letters are nonzero signed generator indices
/// (sign = crossing sign, magnitude in [1, strand_count-1]); the list reads
/// chronologically left to right (first crossing first).
struct BraidWord {
  long strand_count = 1;
  std::vector<int> letters;

  BraidWord() = default;
  BraidWord(long n, std::vector<int> w) : strand_count(n), letters(std::move(w)) { validate(); }

  void validate() const {
    if (strand_count < 1) throw OutOfRange("strand count must be >= 1");
    for (int s : letters) {
      int i = s > 0 ? s : -s;
      if (i < 1 || i > strand_count - 1) throw OutOfRange("generator index out of range");
    }
  }

  void push(int letter) {
    int i = letter > 0 ? letter : -letter;
    if (i < 1 || i > strand_count - 1) throw OutOfRange("generator index out of range");
    letters.push_back(letter);
  }

  BraidWord inverse() const {
    BraidWord w;
    w.strand_count = strand_count;
    w.letters.reserve(letters.size());
    for (auto it = letters.rbegin(); it != letters.rend(); ++it) w.letters.push_back(-*it);
    return w;
  }

  /// Chronological concatenation: *this happens first, then other.
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b) {
    if (a.strand_count != b.strand_count) throw StrandMismatch("strand counts differ");
    BraidWord w = a;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    return w;
  }

  long exponent_sum() const {
    long s = 0;
    for (int x : letters) s += x > 0 ? 1 : -1;
    return s;
  }

  /// Start-position -> end-position map of the strands.
  Permutation permutation() const {
    Permutation p = identity_perm(strand_count);
    for (int s : letters) {
      long i = (s > 0 ? s : -s) - 1;  // positions i, i+1 swap
      for (auto& v : p)
        if (v == i) v = i + 1;
        else if (v == i + 1) v = i;
    }
    return p;
  }

  std::string str() const {
    std::string out = "[";
    for (size_t j = 0; j < letters.size(); ++j) {
      if (j) out += ", ";
      out += std::to_string(letters[j]);
    }
    return out + "]";
  }
};

enum class LambdaKind { Plain, Bar, Plus, Minus };

/// The four descending/ascending generator runs, with the edge conventions
/// plain(0) = bar(n) = plus(0) = minus(n) = id:
///   plain(l) = s_l s_{l-1} ... s_1          l in [0, n-1]
///   bar(l)   = s_{n-l} ... s_{n-1}          l in [1, n]
///   plus(k)  = s_1 ... s_k                  k in [0, n-1]
///   minus(j) = s_{n-1} ... s_{n-j}          j in [1, n]
inline BraidWord lambda_family(LambdaKind kind, long arg, long n) {
  if (n < 1) throw OutOfRange("strand count must be >= 1");
  BraidWord w;
  w.strand_count = n;
  switch (kind) {
    case LambdaKind::Plain:
      if (arg < 0 || arg > n - 1) throw OutOfRange("plain arg out of [0, n-1]");
      for (long i = arg; i >= 1; --i) w.letters.push_back(int(i));
      break;
    case LambdaKind::Bar:
      if (arg < 1 || arg > n) throw OutOfRange("bar arg out of [1, n]");
      if (arg == n) break;
      for (long i = n - arg; i <= n - 1; ++i) w.letters.push_back(int(i));
      break;
    case LambdaKind::Plus:
      if (arg < 0 || arg > n - 1) throw OutOfRange("plus arg out of [0, n-1]");
      for (long i = 1; i <= arg; ++i) w.letters.push_back(int(i));
      break;
    case LambdaKind::Minus:
      if (arg < 1 || arg > n) throw OutOfRange("minus arg out of [1, n]");
      if (arg == n) break;
      for (long i = n - 1; i >= n - arg; --i) w.letters.push_back(int(i));
      break;
  }
  return w;
}

/// Half twist Delta = plain(1) plain(2) ... plain(n-1).
inline BraidWord half_twist(long n) {
  BraidWord w;
  w.strand_count = n;
  for (long l = 1; l <= n - 1; ++l) {
    BraidWord part = lambda_family(LambdaKind::Plain, l, n);
    w.letters.insert(w.letters.end(), part.letters.begin(), part.letters.end());
  }
  return w;
}

struct BraidInvariants {
  Permutation permutation;
  long exponent_sum = 0;
  BurauMatrix burau;
};

inline BraidInvariants invariants_of(const BraidWord& w) {
  w.validate();
  BraidInvariants inv;
  inv.permutation = w.permutation();
  inv.exponent_sum = w.exponent_sum();
  inv.burau = w.strand_count >= 2 ? burau_of(w.strand_count, w.letters) : BurauMatrix(0);
  return inv;
}

enum class SameElement { EqualByInvariants, Distinct };

/// Invariant-based comparison. Equal permutation, exponent sum, and reduced
/// Burau matrix is strong evidence of equality, not proof: Burau is known to
/// be unfaithful for five or more strands.
inline SameElement same_element(const BraidWord& a, const BraidWord& b) {
  if (a.strand_count != b.strand_count) throw StrandMismatch("strand counts differ");
  auto ia = invariants_of(a), ib = invariants_of(b);
  bool eq = ia.permutation == ib.permutation && ia.exponent_sum == ib.exponent_sum &&
            ia.burau == ib.burau;
  return eq ? SameElement::EqualByInvariants : SameElement::Distinct;
}

struct ConjugationInvariants {
  std::vector<long> permutation_class;  // sorted cycle type
  long exponent_sum = 0;
  std::vector<LaurentQ> burau_char_poly;  // coefficient of lambda^k at index k

  friend bool operator==(const ConjugationInvariants& x, const ConjugationInvariants& y) {
    return x.permutation_class == y.permutation_class && x.exponent_sum == y.exponent_sum &&
           x.burau_char_poly == y.burau_char_poly;
  }
};

inline ConjugationInvariants conjugation_invariants(const BraidWord& w) {
  auto inv = invariants_of(w);
  ConjugationInvariants ci;
  ci.permutation_class = cycle_type(inv.permutation);
  ci.exponent_sum = inv.exponent_sum;
  ci.burau_char_poly = char_poly(inv.burau);
  return ci;
}

}  // namespace braidnomial

#endif
