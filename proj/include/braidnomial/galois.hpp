#ifndef BRAIDNOMIAL_GALOIS_HPP
#define BRAIDNOMIAL_GALOIS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "braidnomial/equation.hpp"
#include "braidnomial/perm.hpp"

namespace braidnomial {

inline BigInt factorial_big(long n) {
  BigInt f = 1;
  for (long k = 2; k <= n; ++k) f *= k;
  return f;
}

/// Deterministic stabilizer chain (Schreier–Sims) for exact order and
/// membership of a permutation group on [0, n-1].
class StabilizerChain {
 public:
  explicit StabilizerChain(long n, const std::vector<Permutation>& generators = {}) : n_(n) {
    for (const auto& g : generators) add_generator(g);
  }

  void add_generator(const Permutation& g) {
    if (long(g.size()) != n_ || !is_valid_perm(g)) throw BadInput("invalid permutation");
    Permutation res;
    size_t lvl;
    if (strip(g, 0, &res, &lvl)) return;
    insert(res, 0, lvl);
    for (size_t i = lvl + 1; i-- > 0;) close(i);
  }

  BigInt order() const {
    BigInt o = 1;
    for (const auto& t : trans_) o *= long(t.size());
    return o;
  }

  bool contains(const Permutation& g) const {
    if (long(g.size()) != n_) return false;
    Permutation res;
    size_t lvl;
    return strip(g, 0, &res, &lvl);
  }

 private:
  long n_;
  std::vector<long> base_;
  std::vector<std::vector<Permutation>> gens_;         // gens_[i] fix base_[0..i-1]
  std::vector<std::map<long, Permutation>> trans_;     // orbit point -> coset rep

  bool strip(Permutation g, size_t from, Permutation* residue, size_t* level) const {
    for (size_t i = from; i < base_.size(); ++i) {
      long x = g[base_[i]];
      auto it = trans_[i].find(x);
      if (it == trans_[i].end()) {
        *residue = std::move(g);
        *level = i;
        return false;
      }
      g = compose(g, inverse(it->second));
    }
    if (!is_identity(g)) {
      *residue = std::move(g);
      *level = base_.size();
      return false;
    }
    return true;
  }

  // A residue that fixes base_[0..lvl-1] belongs to the generating set of
  // every stabilizer level from `from` through `lvl` (Schreier's lemma needs
  // it at each intermediate level, not just where the sift stopped).
  void insert(const Permutation& g, size_t from, size_t lvl) {
    if (lvl == base_.size()) {
      long b = -1;
      for (long i = 0; i < n_; ++i)
        if (g[i] != i) {
          b = i;
          break;
        }
      base_.push_back(b);
      gens_.push_back({});
      trans_.push_back({{b, identity_perm(n_)}});
    }
    for (size_t j = from; j <= lvl; ++j) gens_[j].push_back(g);
  }

  void build_orbit(size_t i) {
    trans_[i] = {{base_[i], identity_perm(n_)}};
    std::vector<long> queue{base_[i]};
    while (!queue.empty()) {
      long x = queue.back();
      queue.pop_back();
      Permutation ux = trans_[i][x];
      for (const auto& s : gens_[i]) {
        long y = s[x];
        if (!trans_[i].count(y)) {
          trans_[i][y] = compose(ux, s);
          queue.push_back(y);
        }
      }
    }
  }

  /// Close level i: every Schreier generator must strip to identity through
  /// the deeper levels; residues are inserted and the deeper levels reclosed.
  void close(size_t i) {
    build_orbit(i);
    bool changed = true;
    while (changed) {
      changed = false;
      // snapshot: trans_/gens_ may grow at deeper levels, not at this one
      std::vector<std::pair<long, Permutation>> orbit(trans_[i].begin(), trans_[i].end());
      for (const auto& [x, ux] : orbit) {
        for (const auto& s : gens_[i]) {
          Permutation schreier = compose(compose(ux, s), inverse(trans_[i].at(s[x])));
          Permutation res;
          size_t lvl;
          if (strip(schreier, i + 1, &res, &lvl)) continue;
          insert(res, i + 1, lvl);
          for (size_t j = lvl + 1; j-- > i + 1;) close(j);
          changed = true;
        }
        if (changed) break;
      }
      if (changed) build_orbit(i);
    }
  }
};

/// Does every generator map each block of the partition onto a block?
/// block_of[i] = block index of point i.
inline bool respects_partition(const std::vector<Permutation>& gens,
                               const std::vector<long>& block_of) {
  for (const auto& g : gens) {
    std::map<long, long> image;  // block -> image block
    for (size_t i = 0; i < g.size(); ++i) {
      long b = block_of[i], ib = block_of[g[i]];
      auto [it, fresh] = image.emplace(b, ib);
      if (!fresh && it->second != ib) return false;
    }
  }
  return true;
}

/// Induced permutations on the blocks of a respected partition.
inline std::vector<Permutation> block_action(const std::vector<Permutation>& gens,
                                             const std::vector<long>& block_of) {
  long nb = 0;
  for (long b : block_of) nb = std::max(nb, b + 1);
  std::vector<Permutation> out;
  for (const auto& g : gens) {
    Permutation q(nb, -1);
    for (size_t i = 0; i < g.size(); ++i) q[block_of[i]] = block_of[g[i]];
    if (!is_valid_perm(q)) throw BadInput("partition is not respected");
    out.push_back(std::move(q));
  }
  return out;
}

/// Smallest block system whose blocks merge the seed pair (Atkinson-style
/// fixpoint on a union-find); returns block_of, or an empty vector when the
/// merge forces the trivial one-block system.
inline std::vector<long> minimal_block_system(const std::vector<Permutation>& gens, long n,
                                              long seed_a, long seed_b) {
  std::vector<long> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<long(long)> find = [&](long x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](long a, long b) {
    a = find(a), b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  };
  unite(seed_a, seed_b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : gens)
      for (long x = 0; x < n; ++x)
        for (long y = x + 1; y < n; ++y)
          if (find(x) == find(y) && unite(g[x], g[y])) changed = true;
  }
  std::map<long, long> index;
  std::vector<long> block_of(n);
  for (long i = 0; i < n; ++i) {
    long r = find(i);
    auto [it, fresh] = index.emplace(r, long(index.size()));
    block_of[i] = it->second;
  }
  if (index.size() <= 1) return {};
  return block_of;
}

/// All distinct minimal block systems (from every seed pair with point 0).
inline std::vector<std::vector<long>> minimal_block_systems(const std::vector<Permutation>& gens,
                                                            long n) {
  std::vector<std::vector<long>> out;
  for (long b = 1; b < n; ++b) {
    auto sys = minimal_block_system(gens, n, 0, b);
    if (sys.empty()) continue;
    if (std::find(out.begin(), out.end(), sys) == out.end()) out.push_back(sys);
  }
  return out;
}

/// Structure report of a permutation group given by generators: exact order,
/// transitivity, minimal block systems, and (when tied to an equation with
/// parameters m, n) the behaviour on the m-sheet blocks {(t, 0..m-1)}.
struct PermGroupReport {
  long degree = 0;
  long generator_count = 0;
  BigInt order = 0;
  bool transitive = false;
  std::vector<std::vector<long>> block_systems;  // block_of vectors, nontrivial only
  bool is_symmetric = false;                     // the full symmetric group on all points
  bool respects_m_blocks = false;                // sheet blocks are permuted as blocks
  BigInt block_action_order = 0;                 // induced action on the n sheet blocks
  bool blocks_act_as_full_symmetric = false;
  bool order_matches_reduced_wreath = false;     // m^(n-1) * n!
  bool order_matches_wreath = false;             // m^n * n!
};

inline PermGroupReport group_from_generators(const std::vector<Permutation>& gens) {
  if (gens.empty()) throw DegreeMismatch("at least one generator is required");
  PermGroupReport rep;
  rep.degree = long(gens.front().size());
  rep.generator_count = long(gens.size());
  for (const auto& g : gens)
    if (long(g.size()) != rep.degree) throw DegreeMismatch("generator degrees differ");
  StabilizerChain chain(rep.degree, gens);
  rep.order = chain.order();
  rep.is_symmetric = rep.order == factorial_big(rep.degree);
  std::vector<char> orbit(rep.degree, 0);
  orbit[0] = 1;
  std::vector<long> queue{0};
  while (!queue.empty()) {
    long x = queue.back();
    queue.pop_back();
    for (const auto& g : gens)
      if (!orbit[g[x]]) orbit[g[x]] = 1, queue.push_back(g[x]);
  }
  rep.transitive = std::find(orbit.begin(), orbit.end(), 0) == orbit.end();
  rep.block_systems = minimal_block_systems(gens, rep.degree);
  return rep;
}

inline PermGroupReport analyze_monodromy_group(const TrinomialEquation& eq,
                                         const std::vector<Permutation>& gens) {
  PermGroupReport rep = group_from_generators(gens);
  if (rep.degree != eq.n_total) throw DegreeMismatch("generator degree is not m*n");
  std::vector<long> block_of(eq.n_total);
  for (long i = 0; i < eq.n_total; ++i) block_of[i] = i / eq.m;
  rep.respects_m_blocks = eq.m == 1 || respects_partition(gens, block_of);
  if (rep.respects_m_blocks && eq.m > 1) {
    StabilizerChain quotient(eq.n, block_action(gens, block_of));
    rep.block_action_order = quotient.order();
  } else {
    rep.block_action_order = rep.order;
  }
  rep.blocks_act_as_full_symmetric = rep.block_action_order == factorial_big(eq.n);
  BigInt mw = 1;
  for (long k = 0; k < eq.n - 1; ++k) mw *= eq.m;
  rep.order_matches_reduced_wreath = rep.order == mw * factorial_big(eq.n);
  rep.order_matches_wreath = rep.order == mw * eq.m * factorial_big(eq.n);
  return rep;
}

}  // namespace braidnomial

#endif
