#ifndef BRAIDNOMIAL_TWIST_HPP
#define BRAIDNOMIAL_TWIST_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "braidnomial/braid.hpp"
#include "braidnomial/equation.hpp"

namespace braidnomial {

/// Rigid angular turn of a subset of strands about a center, by alpha full
/// turns (anticlockwise positive), optionally combined with a radial scaling
/// toward/away from the center (log-linear in time, reaching `scale` at the
/// end of the stage). `concurrent` marks a twist running in the same time
/// window as its predecessor in a sequence (member sets must then be
/// disjoint); otherwise twists run consecutively.
struct RationalTwist {
  Rational alpha;
  Complex center{0.0, 0.0};
  std::vector<long> members;
  double scale = 1.0;
  bool concurrent = false;
};

struct TwistSequence {
  long strand_count = 0;
  std::vector<Complex> initial_positions;
  std::vector<RationalTwist> twists;
};

enum class EndpointPolicy { Exact, Snap };

struct ProjectionSetup {
  double direction = 1.0 / 137.0;  // projection axis angle, in turns
  EndpointPolicy endpoint_policy = EndpointPolicy::Exact;
  long time_resolution = 256;  // coarse samples per twist stage
};

namespace twist_detail {

// Stage = maximal run of one twist plus its `concurrent` successors.
inline std::vector<std::vector<size_t>> stages_of(const TwistSequence& seq) {
  std::vector<std::vector<size_t>> stages;
  for (size_t j = 0; j < seq.twists.size(); ++j) {
    if (seq.twists[j].concurrent && !stages.empty()) stages.back().push_back(j);
    else stages.push_back({j});
  }
  return stages;
}

struct Simulator {
  const TwistSequence& seq;
  double theta;  // projection angle in radians
  long resolution;
  std::vector<int> letters;

  Simulator(const TwistSequence& s, double direction_turns, long res)
      : seq(s), theta(2.0 * kPi * direction_turns), resolution(res) {}

  double along(Complex z) const { return std::real(z * std::polar(1.0, -theta)); }
  double depth(Complex z) const { return std::imag(z * std::polar(1.0, -theta)); }

  static std::vector<Complex> stage_positions(const std::vector<Complex>& start,
                                              const std::vector<const RationalTwist*>& tw,
                                              double u) {
    std::vector<Complex> pos = start;
    for (const RationalTwist* t : tw) {
      Complex rot = unit_phase(to_double(t->alpha) * u) * std::pow(t->scale, u);
      for (long i : t->members) pos[i] = (start[i] - t->center) * rot + t->center;
    }
    return pos;
  }

  std::vector<long> order_of(const std::vector<Complex>& pos) const {
    std::vector<long> ord(pos.size());
    for (size_t i = 0; i < pos.size(); ++i) ord[i] = long(i);
    std::sort(ord.begin(), ord.end(),
              [&](long a, long b) { return along(pos[a]) < along(pos[b]); });
    return ord;
  }

  // Record the crossings between two sampled instants; bisect until each
  // interval realizes at most a product of disjoint adjacent slot swaps.
  template <class PosFn>
  void resolve(PosFn&& at, double u0, double u1, const std::vector<long>& ord0,
               const std::vector<long>& ord1) {
    if (ord0 == ord1) return;
    std::vector<size_t> swaps;
    bool simple = true;
    for (size_t k = 0; k < ord0.size() && simple; ++k) {
      if (ord0[k] == ord1[k]) continue;
      if (k + 1 < ord0.size() && ord0[k] == ord1[k + 1] && ord0[k + 1] == ord1[k]) {
        swaps.push_back(k);
        ++k;  // consumed the pair
      } else {
        simple = false;
      }
    }
    if (!simple) {
      if (u1 - u0 < 1e-12)
        throw DegenerateProjection("unresolvable multi-crossing along projection axis");
      double um = 0.5 * (u0 + u1);
      auto ordm = order_of(at(um));
      resolve(at, u0, um, ord0, ordm);
      resolve(at, um, u1, ordm, ord1);
      return;
    }
    auto mid = at(0.5 * (u0 + u1));
    for (size_t k : swaps) {
      Complex w = mid[ord0[k + 1]] - mid[ord0[k]];
      int sign = depth(w) > 0.0 ? +1 : -1;  // anticlockwise pass = positive
      letters.push_back(sign * int(k + 1));
    }
  }

  template <class PosFn>
  std::vector<long> run_window(PosFn&& at, std::vector<long> ord) {
    for (long s = 0; s < resolution; ++s) {
      double u0 = double(s) / double(resolution), u1 = double(s + 1) / double(resolution);
      auto ord1 = order_of(at(u1));
      resolve(at, u0, u1, ord, ord1);
      ord = std::move(ord1);
    }
    return ord;
  }
};

}  // namespace twist_detail

/// One stage of strand motion: positions of all strands at time u in [0, 1];
/// the positions at u = 0 must equal the previous stage's positions at u = 1.
using MotionStage = std::function<std::vector<Complex>(double)>;

struct MotionResult {
  BraidWord word;
  /// endpoint_map[i] = index of the initial position where strand i ends
  /// (after the snap isotopy under EndpointPolicy::Snap).
  std::vector<long> endpoint_map;
};

/// Core projection engine: simulate the given motion stages, read off the
/// crossings chronologically along the projection axis. Retries with a
/// doubled projection angle when the direction is degenerate. With
/// EndpointPolicy::Snap, a final straight-line isotopy carries each strand to
/// the nearest initial position and must be crossing-free.
inline MotionResult project_motion_stages(long n, const std::vector<Complex>& initial,
                                          const std::vector<MotionStage>& stages,
                                          ProjectionSetup setup = {}) {
  if (n < 1 || long(initial.size()) != n)
    throw BadInput("strand count and initial positions disagree");
  TwistSequence dummy;  // the simulator only needs the projection geometry
  const int kMaxAttempts = 8;
  double direction = setup.direction;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt, direction *= 2.0) {
    twist_detail::Simulator sim(dummy, direction, setup.time_resolution);
    try {
      std::vector<Complex> pos = initial;
      auto ord = sim.order_of(pos);
      for (size_t k = 0; k + 1 < ord.size(); ++k)
        if (sim.along(pos[ord[k + 1]]) - sim.along(pos[ord[k]]) < 1e-12)
          throw DegenerateProjection("initial positions collide along projection axis");

      for (const auto& stage : stages) {
        ord = sim.run_window(stage, std::move(ord));
        pos = stage(1.0);
      }

      std::vector<long> target;
      if (setup.endpoint_policy == EndpointPolicy::Snap) {
        target.assign(n, -1);
        std::vector<char> used(n, 0);
        for (long i = 0; i < n; ++i) {
          double best = 0.0;
          long bj = -1;
          for (long j = 0; j < n; ++j) {
            double d = std::abs(pos[i] - initial[j]);
            if (bj < 0 || d < best) best = d, bj = j;
          }
          if (used[bj]) throw SnapCollision("two strands snap to the same marked position");
          used[bj] = 1;
          target[i] = bj;
        }
        std::vector<Complex> start = pos;
        auto at = [&](double u) {
          std::vector<Complex> p(n);
          for (long i = 0; i < n; ++i) p[i] = start[i] + u * (initial[target[i]] - start[i]);
          return p;
        };
        size_t before = sim.letters.size();
        try {
          ord = sim.run_window(at, std::move(ord));
        } catch (const DegenerateProjection&) {
          throw SnapCollision("snap isotopy is not crossing-free");
        }
        if (sim.letters.size() != before)
          throw SnapCollision("snap isotopy is not crossing-free");
      }

      MotionResult res;
      res.word.strand_count = n;
      res.word.letters = std::move(sim.letters);
      res.endpoint_map = std::move(target);
      return res;
    } catch (const DegenerateProjection&) {
      if (attempt + 1 == kMaxAttempts) throw;
    }
  }
  throw DegenerateProjection("no valid projection direction found");
}

/// Compile a twist sequence into motion stages (one per concurrency window).
inline std::vector<MotionStage> motion_stages_of(const TwistSequence& seq,
                                                 std::vector<Complex>* final_positions = nullptr) {
  std::vector<MotionStage> out;
  std::vector<Complex> pos = seq.initial_positions;
  for (const auto& group : twist_detail::stages_of(seq)) {
    std::vector<RationalTwist> tw;
    for (size_t j : group) tw.push_back(seq.twists[j]);
    std::vector<Complex> start = pos;
    out.push_back([start, tw](double u) {
      std::vector<const RationalTwist*> ptrs;
      for (const auto& t : tw) ptrs.push_back(&t);
      return twist_detail::Simulator::stage_positions(start, ptrs, u);
    });
    pos = out.back()(1.0);
  }
  if (final_positions) *final_positions = pos;
  return out;
}

/// Geometric projection of a twist sequence to an Artin braid word.
inline BraidWord project_twists(const TwistSequence& seq, ProjectionSetup setup = {}) {
  for (const auto& t : seq.twists) {
    if (t.members.empty()) throw BadInput("twist with no members");
    if (!(t.scale > 0.0)) throw BadInput("twist scale must be positive");
    for (long i : t.members)
      if (i < 0 || i >= seq.strand_count) throw OutOfRange("twist member out of range");
  }
  auto stages = motion_stages_of(seq);
  return project_motion_stages(seq.strand_count, seq.initial_positions, stages, setup).word;
}

/// Marked points of a regular n-gon on the unit circle.
inline std::vector<Complex> regular_polygon(long n, double radius = 1.0, double phase_turns = 0.0) {
  std::vector<Complex> pts;
  for (long j = 0; j < n; ++j)
    pts.push_back(std::polar(radius, 2.0 * kPi * (double(j) / double(n) + phase_turns)));
  return pts;
}

/// The full-turn word: one anticlockwise turn of a regular n-gon about its
/// barycenter, i.e. the Garside element squared.
inline BraidWord full_turn_word(long n) {
  TwistSequence seq;
  seq.strand_count = n;
  seq.initial_positions = regular_polygon(n);
  RationalTwist t;
  t.alpha = Rational(1);
  for (long i = 0; i < n; ++i) t.members.push_back(i);
  seq.twists.push_back(std::move(t));
  return project_twists(seq);
}

}  // namespace braidnomial

#endif
