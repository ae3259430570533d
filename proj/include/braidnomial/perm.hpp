#ifndef BRAIDNOMIAL_PERM_HPP
#define BRAIDNOMIAL_PERM_HPP

#include <algorithm>
#include <numeric>
#include <vector>

#include "braidnomial/errors.hpp"

namespace braidnomial {

/// A permutation of [0, n-1]; perm[i] is the image of i.
using Permutation = std::vector<long>;

inline Permutation identity_perm(long n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline bool is_identity(const Permutation& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != long(i)) return false;
  return true;
}

/// "a then b": result[i] = b[a[i]].
inline Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw StrandMismatch("permutation sizes differ");
  Permutation c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = b[a[i]];
  return c;
}

inline Permutation inverse(const Permutation& p) {
  Permutation q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = long(i);
  return q;
}

inline bool is_valid_perm(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  for (long v : p) {
    if (v < 0 || v >= long(p.size()) || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

/// Sorted cycle lengths: the conjugacy class of p in the symmetric group.
inline std::vector<long> cycle_type(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<long> lens;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    long len = 0;
    for (long j = long(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

inline std::vector<std::vector<long>> cycles_of(const Permutation& p) {
  std::vector<char> seen(p.size(), 0);
  std::vector<std::vector<long>> out;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<long> cyc;
    for (long j = long(i); !seen[j]; j = p[j]) {
      seen[j] = 1;
      cyc.push_back(j);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

}  // namespace braidnomial

#endif
