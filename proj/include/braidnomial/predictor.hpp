#ifndef BRAIDNOMIAL_PREDICTOR_HPP
#define BRAIDNOMIAL_PREDICTOR_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>
#include <vector>

#include "braidnomial/equation.hpp"
#include "braidnomial/series.hpp"
#include "braidnomial/tracker.hpp"
#include "braidnomial/twist.hpp"

namespace braidnomial {

enum class LoopKind { AroundZero, AroundSigma, AroundInfinity, AroundOmega };

struct LoopSpec {
  LoopKind kind = LoopKind::AroundZero;
  long ell = 0;  // only for AroundOmega
};

struct MonodromyPrediction {
  /// Canonical closed-form twist description of the loop's action: exact
  /// rational angles on the p-/q-blocks about the origin, and half twists of
  /// coinciding pairs about their collision centers. This is the statement of
  /// the prediction; `artin` below is produced from an endpoint-exact staging
  /// of the same loop.
  TwistSequence twists;
  /// Label map in the tracker's convention: the strand of label i ends at the
  /// base position of label permutation[i].
  Permutation permutation;
  /// Ray-anchored coincidence data (ell, t, t') contributing to this loop.
  std::vector<std::array<long, 3>> coincidences;
  BraidWord artin;
};

namespace predictor_detail {

/// The approach corridor from the base point to the omega_l ray takes the
/// shortest angular way, while the coincidence congruence is anchored on the
/// unwrapped anticlockwise argument 2*pi*l/N. Each full-turn difference
/// between the two shifts every far-field label by one (Y_t at arg-2pi equals
/// Y_{t+1} at arg), so the based loop exchanges the ray pair shifted by w.
inline long corridor_label_shift(const TrinomialEquation& eq, long ell) {
  double a0 = std::arg(eq.base_point());
  double phi = 2.0 * kPi * double(ell) / double(eq.N);
  double d_short = std::remainder(phi - a0, 2.0 * kPi);
  double d_ray = phi - a0;
  return std::lround((d_ray - d_short) / (2.0 * kPi));
}

/// Master-equation collision value at omega_l: the double root satisfies
/// T^q = (p/n) X^g; pick the q-th root branch minimizing |f|.
inline Complex master_collision_value(const TrinomialEquation& eq, long ell) {
  TrinomialEquation master = eq.master();
  double rho = eq.sigma_radius();
  double phi = 2.0 * kPi * double(ell) / double(eq.N);
  // polar powers with the unwrapped ray argument
  Complex Tq = double(eq.p) / double(eq.n) *
               std::polar(std::pow(rho, double(eq.g)), phi * double(eq.g));
  Complex best{0.0, 0.0};
  double best_res = 1e300;
  Complex omega = std::polar(rho, phi);
  for (long b = 0; b < eq.q; ++b) {
    Complex T = std::exp((std::log(std::abs(Tq)) + Complex(0.0, std::arg(Tq) + 2.0 * kPi * b)) /
                         double(eq.q));
    double res = std::abs(master.f(omega, T));
    if (res < best_res) best_res = res, best = T;
  }
  return best;
}

/// Sheet pairing at the collision for m > 1: label (a, j) meets label
/// (b, j + kappa mod m), where 2*pi*kappa is the winding difference the two
/// master roots accumulate between the far-field anchor (where the m-th root
/// branches are cut) and the collision point, along the based corridor.
/// Computed from the far-field series with continuous argument unwrapping.
inline long sheet_pair_shift(const TrinomialEquation& eq, long ell, long a, long b,
                             int terms = 60) {
  if (eq.m == 1) return 0;
  TrinomialEquation master = eq.master();
  double rho = eq.sigma_radius();
  double r_far = std::pow(4.0, 1.0 / double(eq.N)) * rho;
  double a0 = std::arg(eq.base_point());
  double phi = 2.0 * kPi * double(ell) / double(eq.N);
  double d_short = std::remainder(phi - a0, 2.0 * kPi);
  const int kArc = 64, kRad = 64;
  double Aa = 0.0, Ab = 0.0;
  bool first = true;
  auto step = [&](double mod, double arg) {
    Complex Ta = eval_inf_series_polar(master, a, mod, arg, terms).value;
    Complex Tb = eval_inf_series_polar(master, b, mod, arg, terms).value;
    if (first) {
      Aa = std::arg(Ta);
      Ab = std::arg(Tb);
      first = false;
    } else {
      Aa += std::remainder(std::arg(Ta) - Aa, 2.0 * kPi);
      Ab += std::remainder(std::arg(Tb) - Ab, 2.0 * kPi);
    }
  };
  for (int s = 0; s <= kArc; ++s) step(r_far, a0 + d_short * double(s) / kArc);
  double r_end = rho * 1.02;
  for (int s = 1; s <= kRad; ++s)
    step(r_far * std::pow(r_end / r_far, double(s) / kRad), a0 + d_short);
  return std::lround((Aa - Ab) / (2.0 * kPi));
}

struct Context {
  TrinomialEquation eq;
  BaseLabeling base;
  std::vector<long> p_labels, q_labels;  // strand indices at the base point

  static const TrinomialEquation& require_predictable(const TrinomialEquation& e) {
    if (std::gcd(e.n, e.N) != 1 || std::gcd(e.n, e.r) != 1)
      throw GcdConditionViolated("prediction requires gcd(n, N) = gcd(n, r) = 1");
    return e;
  }

  Context(const TrinomialEquation& e, const TrackerControls& c)
      : eq(require_predictable(e)), base(label_base_roots(e, c)) {
    std::vector<long> order(eq.n_total);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](long a, long b) {
      return std::abs(base.roots[a]) < std::abs(base.roots[b]);
    });
    // (r-g)/p > g/q (equivalent to N > 0), so the p-cluster is the inner one
    for (long k = 0; k < eq.n_total; ++k)
      (k < eq.m * eq.p ? p_labels : q_labels).push_back(order[k]);
    std::sort(p_labels.begin(), p_labels.end());
    std::sort(q_labels.begin(), q_labels.end());
  }

  std::vector<long> all_labels() const {
    std::vector<long> all(eq.n_total);
    std::iota(all.begin(), all.end(), 0);
    return all;
  }

  std::vector<long> tile_pair_members(long a, long b) const {
    std::vector<long> mem;
    for (long j = 0; j < eq.m; ++j) mem.push_back(a * eq.m + j);
    for (long j = 0; j < eq.m; ++j) mem.push_back(b * eq.m + j);
    std::sort(mem.begin(), mem.end());
    return mem;
  }

  // ---- endpoint-exact motion staging -----------------------------------

  struct Staging {
    std::vector<MotionStage> stages;
    std::vector<Complex> positions;
  };

  Staging fresh() const { return {{}, base.roots}; }

  static void add_rigid(Staging& st, std::vector<RationalTwist> tws) {
    TwistSequence seq;
    seq.strand_count = long(st.positions.size());
    seq.initial_positions = st.positions;
    for (size_t i = 1; i < tws.size(); ++i) tws[i].concurrent = true;
    seq.twists = std::move(tws);
    std::vector<Complex> end;
    for (auto& s : motion_stages_of(seq, &end)) st.stages.push_back(std::move(s));
    st.positions = std::move(end);
  }

  static void add_morph(Staging& st, std::vector<Complex> target) {
    std::vector<Complex> start = st.positions;
    st.stages.push_back([start, target](double u) {
      std::vector<Complex> p(start.size());
      for (size_t i = 0; i < p.size(); ++i) p[i] = start[i] + u * (target[i] - start[i]);
      return p;
    });
    st.positions = std::move(target);
  }

  /// Straight-line move of every strand to the nearest marked base position
  /// (bijectively); keeps composite stagings continuous between loops.
  void add_settle(Staging& st) const {
    const long n = eq.n_total;
    std::vector<Complex> target(n);
    std::vector<char> used(n, 0);
    for (long i = 0; i < n; ++i) {
      long bj = -1;
      double best = 0.0;
      for (long j = 0; j < n; ++j) {
        double d = std::abs(st.positions[i] - base.roots[j]);
        if (bj < 0 || d < best) best = d, bj = j;
      }
      if (used[bj]) throw SnapCollision("two strands settle to the same marked position");
      used[bj] = 1;
      target[i] = base.roots[bj];
    }
    add_morph(st, std::move(target));
  }

  void realize_zero(Staging& st, int sign) const {
    RationalTwist tp, tq;
    tp.alpha = Rational(sign * (eq.r - eq.g), eq.m * eq.p);
    tp.members = p_labels;
    tq.alpha = Rational(sign * eq.g, eq.m * eq.q);
    tq.members = q_labels;
    add_rigid(st, {tp, tq});
    add_settle(st);
  }

  /// One anticlockwise circle at the far anchor radius, conjugated by a
  /// radial morph: out to the labeled far-field roots, rigid r/(mn) turn
  /// (the far-field leading phases are equally spaced, so the turn maps the
  /// configuration to itself up to corrections), back in. The morphs cancel,
  /// so the word's exponent sum and permutation are those of the far turn.
  void realize_big(Staging& st, int sign) const {
    // slot-preserving radial morph: the strand occupying base slot j goes to
    // far slot j (the radial transport defining the labels does not permute)
    const long nn = eq.n_total;
    {
      std::vector<Complex> target(nn);
      std::vector<char> used(nn, 0);
      for (long i = 0; i < nn; ++i) {
        long bj = -1;
        double best = 0.0;
        for (long j = 0; j < nn; ++j) {
          double d = std::abs(st.positions[i] - base.roots[j]);
          if (bj < 0 || d < best) best = d, bj = j;
        }
        if (used[bj]) throw SnapCollision("two strands occupy the same base slot");
        used[bj] = 1;
        target[i] = base.far_roots[bj];
      }
      add_morph(st, std::move(target));
    }
    RationalTwist turn;
    turn.alpha = Rational(sign * eq.r, eq.m * eq.n);
    turn.members = all_labels();
    add_rigid(st, {turn});
    // map each strand to the far slot it now occupies, then to the matching
    // base position
    const long n = eq.n_total;
    std::vector<Complex> target(n);
    std::vector<char> used(n, 0);
    for (long i = 0; i < n; ++i) {
      long bj = -1;
      double best = 0.0;
      for (long j = 0; j < n; ++j) {
        double d = std::abs(st.positions[i] - base.far_roots[j]);
        if (bj < 0 || d < best) best = d, bj = j;
      }
      if (used[bj]) throw SnapCollision("far-field turn does not permute the anchor slots");
      used[bj] = 1;
      target[i] = base.roots[bj];
    }
    add_morph(st, std::move(target));
  }

  void realize_sigma(Staging& st) const {
    realize_zero(st, -1);
    realize_big(st, +1);
  }

  void realize_infinity(Staging& st) const { realize_big(st, -1); }

  /// The based loop around omega_l exchanges, for each sheet index j, the
  /// strands (a, j) and (b, j), where (a, b) is the ray-anchored coincidence
  /// pair shifted by the corridor wrap. Realized as m concurrent half twists,
  /// each pair first shrunk about its own midpoint so no bystander is swept.
  void realize_omega(Staging& st, long ell) const {
    auto [t, tp] = coincidence_pair(eq, ell);
    long w = corridor_label_shift(eq, ell);
    long a = ((t + w) % eq.n + eq.n) % eq.n;
    long b = ((tp + w) % eq.n + eq.n) % eq.n;
    long kappa = sheet_pair_shift(eq, ell, a, b);
    auto bj = [&](long j) { return ((j + kappa) % eq.m + eq.m) % eq.m; };
    std::vector<RationalTwist> shrinks, halves, grows;
    std::vector<Complex> centers(eq.m);
    for (long j = 0; j < eq.m; ++j)
      centers[j] = 0.5 * (st.positions[a * eq.m + j] + st.positions[b * eq.m + bj(j)]);
    for (long j = 0; j < eq.m; ++j) {
      std::vector<long> pair = {a * eq.m + j, b * eq.m + bj(j)};
      double rmax = std::max(std::abs(st.positions[pair[0]] - centers[j]),
                             std::abs(st.positions[pair[1]] - centers[j]));
      double dmin = 1e300;
      for (long i = 0; i < eq.n_total; ++i)
        if (i != pair[0] && i != pair[1])
          dmin = std::min(dmin, std::abs(st.positions[i] - centers[j]));
      for (long k = 0; k < eq.m; ++k)
        if (k != j) dmin = std::min(dmin, std::abs(centers[k] - centers[j]));
      double scale = std::min(1.0, 0.3 * dmin / rmax);
      RationalTwist shrink;
      shrink.alpha = Rational(0);
      shrink.center = centers[j];
      shrink.members = pair;
      shrink.scale = scale;
      RationalTwist half = shrink;
      half.alpha = Rational(1, 2);
      half.scale = 1.0;
      RationalTwist grow = shrink;
      grow.scale = 1.0 / scale;
      shrinks.push_back(std::move(shrink));
      halves.push_back(std::move(half));
      grows.push_back(std::move(grow));
    }
    add_rigid(st, shrinks);
    add_rigid(st, halves);
    add_rigid(st, grows);
    add_settle(st);
  }

  void realize(Staging& st, const LoopSpec& loop) const {
    switch (loop.kind) {
      case LoopKind::AroundZero: realize_zero(st, +1); break;
      case LoopKind::AroundSigma: realize_sigma(st); break;
      case LoopKind::AroundInfinity: realize_infinity(st); break;
      case LoopKind::AroundOmega:
        if (loop.ell < 0 || loop.ell >= eq.N) throw OutOfRange("ell out of [0, N-1]");
        realize_omega(st, loop.ell);
        break;
    }
  }

  // ---- canonical twist data --------------------------------------------

  TwistSequence canonical_twists(const LoopSpec& loop) const {
    TwistSequence seq;
    seq.strand_count = eq.n_total;
    seq.initial_positions = base.roots;
    auto block = [&](Rational alpha, std::vector<long> members, bool conc) {
      RationalTwist t;
      t.alpha = std::move(alpha);
      t.members = std::move(members);
      t.concurrent = conc;
      seq.twists.push_back(std::move(t));
    };
    auto omega_half = [&](long ell, bool conc) {
      // one half twist per sheet: (t, j) with (t', j) about the sheet's
      // collision value
      auto [t, tp] = coincidence_pair(eq, ell);
      Complex Tm = std::exp(std::log(master_collision_value(eq, ell)) / double(eq.m));
      for (long j = 0; j < eq.m; ++j) {
        RationalTwist h;
        h.alpha = Rational(1, 2);
        h.center = unit_phase(double(j) / double(eq.m)) * Tm;
        h.members = {t * eq.m + j, tp * eq.m + j};
        h.concurrent = conc || j > 0;
        seq.twists.push_back(std::move(h));
      }
    };
    switch (loop.kind) {
      case LoopKind::AroundZero:
        block(Rational(eq.r - eq.g, eq.m * eq.p), p_labels, false);
        block(Rational(eq.g, eq.m * eq.q), q_labels, true);
        break;
      case LoopKind::AroundSigma:
        block(Rational(-eq.N, eq.m * eq.n * eq.p), p_labels, false);
        block(Rational(eq.N, eq.m * eq.n * eq.q), q_labels, true);
        for (long ell = 0; ell < eq.N; ++ell) omega_half(ell, false);
        break;
      case LoopKind::AroundInfinity:
        block(Rational(-eq.r, eq.m * eq.n), all_labels(), false);
        break;
      case LoopKind::AroundOmega:
        omega_half(loop.ell, false);
        break;
    }
    return seq;
  }

  std::vector<std::array<long, 3>> coincidences_of(const LoopSpec& loop) const {
    std::vector<std::array<long, 3>> out;
    auto push = [&](long ell) {
      auto [t, tp] = coincidence_pair(eq, ell);
      out.push_back({ell, t, tp});
    };
    if (loop.kind == LoopKind::AroundSigma)
      for (long ell = 0; ell < eq.N; ++ell) push(ell);
    else if (loop.kind == LoopKind::AroundOmega)
      push(loop.ell);
    return out;
  }
};

}  // namespace predictor_detail

/// Closed-form monodromy prediction for one canonical loop.
inline MonodromyPrediction predict(const TrinomialEquation& eq, const LoopSpec& loop,
                                   ProjectionSetup setup = {}, TrackerControls controls = {}) {
  predictor_detail::Context ctx(eq, controls);
  if (loop.kind == LoopKind::AroundOmega && (loop.ell < 0 || loop.ell >= eq.N))
    throw OutOfRange("ell out of [0, N-1]");
  MonodromyPrediction pred;
  pred.twists = ctx.canonical_twists(loop);
  pred.coincidences = ctx.coincidences_of(loop);
  auto st = ctx.fresh();
  ctx.realize(st, loop);
  setup.endpoint_policy = EndpointPolicy::Snap;
  auto res = project_motion_stages(eq.n_total, ctx.base.roots, st.stages, setup);
  pred.artin = std::move(res.word);
  pred.permutation = Permutation(res.endpoint_map.begin(), res.endpoint_map.end());
  return pred;
}

/// Predicted Artin word of a product of canonical loops (applied in order),
/// simulated as one continuous motion.
inline BraidWord predicted_artin(const TrinomialEquation& eq, const std::vector<LoopSpec>& loops,
                                 ProjectionSetup setup = {}, TrackerControls controls = {}) {
  predictor_detail::Context ctx(eq, controls);
  auto st = ctx.fresh();
  for (const auto& loop : loops) ctx.realize(st, loop);
  setup.endpoint_policy = EndpointPolicy::Snap;
  return project_motion_stages(eq.n_total, ctx.base.roots, st.stages, setup).word;
}

inline BraidWord predicted_artin(const TrinomialEquation& eq, const LoopSpec& loop,
                                 ProjectionSetup setup = {}, TrackerControls controls = {}) {
  return predicted_artin(eq, std::vector<LoopSpec>{loop}, setup, controls);
}

}  // namespace braidnomial

#endif
