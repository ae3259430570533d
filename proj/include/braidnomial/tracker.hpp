#ifndef BRAIDNOMIAL_TRACKER_HPP
#define BRAIDNOMIAL_TRACKER_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "braidnomial/braid.hpp"
#include "braidnomial/path.hpp"
#include "braidnomial/series.hpp"
#include "braidnomial/twist.hpp"

namespace braidnomial {

struct TrackerControls {
  double residual_tol = 1e-10;   // relative to the monomial scale
  int newton_max = 20;
  double step_guard = 0.3;       // max displacement as a fraction of min separation
  double initial_step = 1.0 / 64.0;
  double min_step = 1e-12;
  int series_terms = 60;
};

struct TracedPath {
  std::vector<Complex> xs;
  std::vector<std::vector<Complex>> roots;  // per sample, in label order
  double max_residual = 0.0;                // relative
  double min_pair_separation = 1e300;
};

namespace tracker_detail {

template <class T>
std::complex<T> cpow_i(std::complex<T> b, long e) {
  std::complex<T> acc(T(1));
  for (; e > 0; e >>= 1, b *= b)
    if (e & 1) acc *= b;
  return acc;
}

template <class T>
struct Eval {
  long n_total, p_total, g, r;
  explicit Eval(const TrinomialEquation& eq)
      : n_total(eq.n_total), p_total(eq.p_total), g(eq.g), r(eq.r) {}
  std::complex<T> f(std::complex<T> X, std::complex<T> Y) const {
    return cpow_i(Y, n_total) - cpow_i(X, g) * cpow_i(Y, p_total) + cpow_i(X, r);
  }
  std::complex<T> fy(std::complex<T> X, std::complex<T> Y) const {
    return T(n_total) * cpow_i(Y, n_total - 1) - T(p_total) * cpow_i(X, g) * cpow_i(Y, p_total - 1);
  }
  std::complex<T> fx(std::complex<T> X, std::complex<T> Y) const {
    std::complex<T> d = -T(g) * cpow_i(X, g - 1) * cpow_i(Y, p_total);
    if (r >= 1) d += T(r) * cpow_i(X, r - 1);
    return d;
  }
  T scale(std::complex<T> X, std::complex<T> Y) const {
    using std::abs;
    return abs(cpow_i(Y, n_total)) + abs(cpow_i(X, g) * cpow_i(Y, p_total)) + abs(cpow_i(X, r)) +
           T(1);
  }
  // Newton-polish Y at fixed X; returns relative residual, or -1 on failure.
  double polish(std::complex<T> X, std::complex<T>& Y, int max_iter, double tol) const {
    using std::abs;
    for (int it = 0; it < max_iter; ++it) {
      std::complex<T> d = f(X, Y) / fy(X, Y);
      Y -= d;
      if (abs(d) < T(1e-14) * (T(1) + abs(Y))) break;
    }
    double res = double(abs(f(X, Y)) / scale(X, Y));
    return res <= tol ? res : -1.0;
  }
};

template <class T>
double min_separation(const std::vector<std::complex<T>>& ys) {
  double best = 1e300;
  for (size_t i = 0; i < ys.size(); ++i)
    for (size_t j = i + 1; j < ys.size(); ++j)
      best = std::min(best, double(std::abs(ys[i] - ys[j])));
  return best;
}

template <class T>
TracedPath trace_impl(const TrinomialEquation& eq, const PathSpec& path,
                      const std::vector<Complex>& start_roots, const TrackerControls& c) {
  using Cx = std::complex<T>;
  Eval<T> ev(eq);
  std::vector<Cx> ys(start_roots.begin(), start_roots.end());
  TracedPath out;
  auto record = [&](Complex X) {
    out.xs.push_back(X);
    out.roots.emplace_back(ys.begin(), ys.end());
    out.min_pair_separation = std::min(out.min_pair_separation, min_separation(ys));
  };
  // settle the starting roots exactly on the curve
  {
    Cx X0(path.start());
    for (auto& y : ys) {
      double res = ev.polish(X0, y, c.newton_max, c.residual_tol);
      if (res < 0.0) throw ResidualBlowup("start roots do not satisfy the residual tolerance");
      out.max_residual = std::max(out.max_residual, res);
    }
    record(path.start());
  }
  for (const auto& piece : path.pieces) {
    double u = 0.0, du = c.initial_step;
    while (u < 1.0) {
      du = std::min(du, 1.0 - u);
      Cx X0(piece.at(u)), X1(piece.at(u + du));
      double sep0 = min_separation(ys);
      std::vector<Cx> next = ys;
      bool ok = true;
      double maxdisp = 0.0;
      for (auto& y : next) {
        Cx dY = -ev.fx(X0, y) / ev.fy(X0, y) * (X1 - X0);
        y += dY;
        double res = ev.polish(X1, y, c.newton_max, c.residual_tol);
        if (res < 0.0) {
          ok = false;
          break;
        }
        out.max_residual = std::max(out.max_residual, res);
      }
      if (ok)
        for (size_t i = 0; i < ys.size(); ++i)
          maxdisp = std::max(maxdisp, double(std::abs(next[i] - ys[i])));
      if (!ok || maxdisp >= c.step_guard * sep0) {
        du *= 0.5;
        if (du < c.min_step) throw StepCollapse("step size underflow during continuation");
        continue;
      }
      ys = std::move(next);
      u += du;
      record(piece.at(u));
      if (maxdisp < 0.1 * c.step_guard * sep0) du *= 2.0;
    }
  }
  return out;
}

}  // namespace tracker_detail

/// All roots of the full equation at fixed X by the Aberth-Ehrlich iteration.
inline std::vector<Complex> all_roots_at(const TrinomialEquation& eq, Complex X) {
  long d = eq.n_total;
  tracker_detail::Eval<double> ev(eq);
  double radius =
      std::max({std::pow(std::abs(std::pow(X, eq.r)), 1.0 / double(d)),
                std::pow(std::abs(std::pow(X, eq.g)), 1.0 / double(d - eq.p_total)), 0.1});
  std::vector<Complex> ys(d);
  for (long i = 0; i < d; ++i)
    ys[i] = std::polar(radius * (1.0 + 0.05 * i), 2.0 * kPi * (double(i) / d + 1.0 / (4 * d)));
  for (int it = 0; it < 200; ++it) {
    double move = 0.0;
    for (long i = 0; i < d; ++i) {
      Complex ratio = ev.f(X, ys[i]) / ev.fy(X, ys[i]);
      Complex s = 0.0;
      for (long j = 0; j < d; ++j)
        if (j != i) s += 1.0 / (ys[i] - ys[j]);
      Complex w = ratio / (1.0 - ratio * s);
      ys[i] -= w;
      move = std::max(move, std::abs(w));
    }
    if (move < 1e-14 * (1.0 + radius)) break;
  }
  for (auto& y : ys)
    if (ev.polish(Complex(X), y, 40, 1e-9) < 0.0)
      throw ResidualBlowup("root solve failed to converge");
  return ys;
}

/// Labeled roots at the base point. Index convention: label (t, j) lives at
/// index t*m + j; master label t = index / m.
struct BaseLabeling {
  Complex base_x;
  std::vector<Complex> roots;      // label order, at base_x
  Complex far_x;                   // anchor point on the ray, |X^N/R| = 4
  std::vector<Complex> far_roots;  // label order, at far_x
  bool q_degenerate = false;       // local q-series cannot separate labels
  bool labels_ambiguous = false;   // far-field series could not separate either;
                                   // labels assigned by magnitude/argument order
};

/// Anchor labels at |X^N/R| = 4 on the ray through eps from the far-field
/// series (master roots, then the m sheet values), then transport radially
/// to eps by continuation.
inline BaseLabeling label_base_roots(const TrinomialEquation& eq, TrackerControls c = {}) {
  Complex eps = eq.base_point();
  double r_far = std::pow(4.0, 1.0 / double(eq.N)) * eq.sigma_radius();
  Complex x_far = std::polar(r_far, std::arg(eps));
  TrinomialEquation master = eq.master();

  std::vector<Complex> predicted(eq.n_total);
  for (long t = 0; t < eq.n; ++t) {
    Complex T = eval_inf_series(master, t, x_far, c.series_terms).value;
    Complex root_m = std::exp(std::log(T) / double(eq.m));
    for (long j = 0; j < eq.m; ++j) predicted[t * eq.m + j] = unit_phase(double(j) / eq.m) * root_m;
  }
  auto numeric = all_roots_at(eq, x_far);
  double gap = tracker_detail::min_separation(
      std::vector<std::complex<double>>(numeric.begin(), numeric.end()));
  std::vector<long> pick(eq.n_total, -1);
  std::vector<char> used(eq.n_total, 0);
  bool ambiguous = false;
  for (long i = 0; i < eq.n_total; ++i) {
    double best = 1e300;
    long bj = -1;
    for (long j = 0; j < eq.n_total; ++j) {
      double d = std::abs(predicted[i] - numeric[j]);
      if (d < best) best = d, bj = j;
    }
    if (best > 0.1 * gap || used[bj]) {
      // When the gcd conditions fail, distinct master labels produce the same
      // far-field values and no series-based labeling exists; fall back to a
      // deterministic order so tracker-only runs can still proceed.
      if (eq.gcd_ok) throw LabelAmbiguity("far-field series does not separate the roots");
      ambiguous = true;
      break;
    }
    used[bj] = 1;
    pick[i] = bj;
  }
  std::vector<Complex> labeled(eq.n_total);
  if (ambiguous) {
    labeled = std::vector<Complex>(numeric.begin(), numeric.end());
    std::sort(labeled.begin(), labeled.end(), [](Complex a, Complex b) {
      double ma = std::abs(a), mb = std::abs(b);
      if (std::abs(ma - mb) > 1e-12 * (ma + mb)) return ma < mb;
      return std::arg(a) < std::arg(b);
    });
  } else {
    for (long i = 0; i < eq.n_total; ++i) labeled[i] = numeric[pick[i]];
  }

  PathSpec down{{PathPiece::segment(x_far, eps)}};
  TracedPath t = tracker_detail::trace_impl<double>(eq, down, labeled, c);
  BaseLabeling out;
  out.base_x = eps;
  out.roots = t.roots.back();
  out.far_x = x_far;
  out.far_roots = labeled;
  out.q_degenerate = q_series_degenerate(eq);
  out.labels_ambiguous = ambiguous;
  return out;
}

/// Continue the labeled roots along the path; falls back to extended
/// precision if the double-precision steps collapse.
inline TracedPath trace(const TrinomialEquation& eq, const PathSpec& path,
                        const std::vector<Complex>& start_roots, TrackerControls c = {}) {
  try {
    return tracker_detail::trace_impl<double>(eq, path, start_roots, c);
  } catch (const StepCollapse&) {
    return tracker_detail::trace_impl<long double>(eq, path, start_roots, c);
  }
}

struct ExtractedBraid {
  BraidWord word;
  Permutation endpoint_perm;  // label i's strand ends at the start position of endpoint_perm[i]
};

/// Read the braid word off a traced path: crossings are changes of the root
/// ordering along the projection axis, signs from the anticlockwise
/// convention. Non-simple ordering changes between samples are refined by
/// re-polishing roots at intermediate X values.
inline ExtractedBraid extract_braid(const TrinomialEquation& eq, const TracedPath& traced,
                                    ProjectionSetup setup = {}, const TrackerControls& c = {}) {
  const long n = eq.n_total;
  tracker_detail::Eval<double> ev(eq);
  const int kMaxAttempts = 8;
  double direction = setup.direction;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt, direction *= 2.0) {
    double theta = 2.0 * kPi * direction;
    auto along = [&](Complex z) { return std::real(z * std::polar(1.0, -theta)); };
    auto depth = [&](Complex z) { return std::imag(z * std::polar(1.0, -theta)); };
    auto order_of = [&](const std::vector<Complex>& pos) {
      std::vector<long> ord(pos.size());
      for (size_t i = 0; i < pos.size(); ++i) ord[i] = long(i);
      std::sort(ord.begin(), ord.end(), [&](long a, long b) { return along(pos[a]) < along(pos[b]); });
      return ord;
    };
    std::vector<int> letters;
    // roots at an intermediate point between two samples, seeded from the left
    auto roots_between = [&](Complex X0, const std::vector<Complex>& y0, Complex Xm) {
      std::vector<Complex> ys = y0;
      for (auto& y : ys) {
        Complex dY = -ev.fx(X0, y) / ev.fy(X0, y) * (Xm - X0);
        y += dY;
        if (ev.polish(Xm, y, c.newton_max, 1e-8) < 0.0)
          throw UnresolvedCrossing("refinement polish failed between samples");
      }
      return ys;
    };
    std::function<void(Complex, const std::vector<Complex>&, Complex, const std::vector<Complex>&,
                       const std::vector<long>&, const std::vector<long>&, int)>
        resolve = [&](Complex X0, const std::vector<Complex>& y0, Complex X1,
                      const std::vector<Complex>& y1, const std::vector<long>& ord0,
                      const std::vector<long>& ord1, int depth_left) {
          if (ord0 == ord1) return;
          std::vector<size_t> swaps;
          bool simple = true;
          for (size_t k = 0; k < ord0.size() && simple; ++k) {
            if (ord0[k] == ord1[k]) continue;
            if (k + 1 < ord0.size() && ord0[k] == ord1[k + 1] && ord0[k + 1] == ord1[k]) {
              swaps.push_back(k);
              ++k;
            } else {
              simple = false;
            }
          }
          if (!simple) {
            if (depth_left == 0) throw UnresolvedCrossing("projectively coincident roots");
            Complex Xm = 0.5 * (X0 + X1);
            auto ym = roots_between(X0, y0, Xm);
            auto ordm = order_of(ym);
            resolve(X0, y0, Xm, ym, ord0, ordm, depth_left - 1);
            resolve(Xm, ym, X1, y1, ordm, ord1, depth_left - 1);
            return;
          }
          auto ym = roots_between(X0, y0, 0.5 * (X0 + X1));
          for (size_t k : swaps) {
            Complex w = ym[ord0[k + 1]] - ym[ord0[k]];
            letters.push_back((depth(w) > 0.0 ? +1 : -1) * int(k + 1));
          }
        };
    try {
      auto ord = order_of(traced.roots.front());
      for (size_t k = 0; k + 1 < ord.size(); ++k)
        if (along(traced.roots.front()[ord[k + 1]]) - along(traced.roots.front()[ord[k]]) < 1e-13)
          throw UnresolvedCrossing("initial roots tie along projection axis");
      for (size_t i = 0; i + 1 < traced.xs.size(); ++i) {
        auto ord1 = order_of(traced.roots[i + 1]);
        resolve(traced.xs[i], traced.roots[i], traced.xs[i + 1], traced.roots[i + 1], ord, ord1,
                40);
        ord = std::move(ord1);
      }
      ExtractedBraid out;
      out.word.strand_count = n;
      out.word.letters = std::move(letters);
      // endpoint label map by nearest assignment
      const auto& y0 = traced.roots.front();
      const auto& y1 = traced.roots.back();
      out.endpoint_perm.assign(n, -1);
      std::vector<char> used(n, 0);
      for (long i = 0; i < n; ++i) {
        double best = 1e300;
        long bj = -1;
        for (long j = 0; j < n; ++j) {
          double d = std::abs(y1[i] - y0[j]);
          if (d < best) best = d, bj = j;
        }
        if (used[bj]) throw LabelAmbiguity("endpoint matching is not a bijection");
        used[bj] = 1;
        out.endpoint_perm[i] = bj;
      }
      return out;
    } catch (const UnresolvedCrossing&) {
      if (attempt + 1 == kMaxAttempts) throw;
    }
  }
  throw UnresolvedCrossing("no valid projection direction found");
}

/// Which pair of master labels collides at omega_l, detected numerically by
/// continuing the labeled roots to the probe point at distance delta.
inline std::pair<long, long> collision_pair_at(const TrinomialEquation& eq, long ell,
                                               double delta = -1.0, TrackerControls c = {}) {
  if (ell < 0 || ell >= eq.N) throw OutOfRange("ell out of [0, N-1]");
  if (delta <= 0.0) delta = 1e-3 * eq.sigma_radius();
  // Anchor the far-field labels directly on the omega_l ray, with the
  // unwrapped argument 2 pi l / N the coincidence statement assumes, and
  // descend radially from outside.
  double phi = 2.0 * kPi * double(ell) / double(eq.N);
  double rho = eq.sigma_radius();
  double r_far = std::pow(4.0, 1.0 / double(eq.N)) * rho;
  Complex x_far = std::polar(r_far, phi);
  TrinomialEquation master = eq.master();
  std::vector<Complex> predicted(eq.n_total);
  for (long t = 0; t < eq.n; ++t) {
    Complex T = eval_inf_series_polar(master, t, r_far, phi, c.series_terms).value;
    Complex root_m = std::exp(std::log(T) / double(eq.m));
    for (long j = 0; j < eq.m; ++j) predicted[t * eq.m + j] = unit_phase(double(j) / eq.m) * root_m;
  }
  auto numeric = all_roots_at(eq, x_far);
  double gap = tracker_detail::min_separation(
      std::vector<std::complex<double>>(numeric.begin(), numeric.end()));
  std::vector<Complex> labeled(eq.n_total);
  {
    std::vector<char> used(eq.n_total, 0);
    for (long i = 0; i < eq.n_total; ++i) {
      double best = 1e300;
      long bj = -1;
      for (long j = 0; j < eq.n_total; ++j) {
        double d = std::abs(predicted[i] - numeric[j]);
        if (d < best) best = d, bj = j;
      }
      if (best > 0.1 * gap || used[bj])
        throw LabelAmbiguity("far-field series does not separate the roots");
      used[bj] = 1;
      labeled[i] = numeric[bj];
    }
  }
  for (int attempt = 0; attempt < 6; ++attempt, delta *= 0.5) {
    PathSpec probe{{PathPiece::segment(x_far, std::polar(rho + delta, phi))}};
    TracedPath t = trace(eq, probe, labeled, c);
    const auto& ys = t.roots.back();
    double best = 1e300, second = 1e300;
    long bi = -1, bj = -1;
    for (long i = 0; i < eq.n_total; ++i)
      for (long j = i + 1; j < eq.n_total; ++j) {
        double d = std::abs(ys[i] - ys[j]);
        if (d < best) second = best, best = d, bi = i, bj = j;
        else if (d < second) second = d;
      }
    if (best <= 0.1 * second) return {bi / eq.m, bj / eq.m};  // unordered pair, ascending
  }
  throw AmbiguousCollision("no unambiguous closest pair at the probe radius");
}

}  // namespace braidnomial

#endif
