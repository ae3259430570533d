#ifndef BRAIDNOMIAL_PATH_HPP
#define BRAIDNOMIAL_PATH_HPP

#include <cmath>
#include <vector>

#include "braidnomial/equation.hpp"

namespace braidnomial {

/// One parametric piece of an X-plane path, u in [0, 1].
struct PathPiece {
  enum class Kind { Segment, Arc } kind = Kind::Segment;
  Complex a, b;              // segment endpoints
  Complex center;            // arc data
  double radius = 0.0, arg0 = 0.0, arg1 = 0.0;  // radians; arg1-arg0 = swept angle

  static PathPiece segment(Complex from, Complex to) {
    PathPiece p;
    p.kind = Kind::Segment;
    p.a = from;
    p.b = to;
    return p;
  }
  static PathPiece arc(Complex center, double radius, double arg0, double arg1) {
    PathPiece p;
    p.kind = Kind::Arc;
    p.center = center;
    p.radius = radius;
    p.arg0 = arg0;
    p.arg1 = arg1;
    return p;
  }

  Complex at(double u) const {
    if (kind == Kind::Segment) return a + u * (b - a);
    return center + std::polar(radius, arg0 + u * (arg1 - arg0));
  }
  double length() const {
    if (kind == Kind::Segment) return std::abs(b - a);
    return radius * std::abs(arg1 - arg0);
  }
};

struct PathSpec {
  std::vector<PathPiece> pieces;

  Complex start() const { return pieces.front().at(0.0); }
  Complex end() const { return pieces.back().at(1.0); }
  bool closed(double tol = 1e-12) const { return std::abs(start() - end()) < tol; }

  /// Smallest sampled distance from the path to the branching set and 0.
  double margin(const TrinomialEquation& eq, int samples_per_piece = 256) const {
    double rho = eq.sigma_radius(), best = 1e300;
    for (const auto& p : pieces)
      for (int s = 0; s <= samples_per_piece; ++s) {
        Complex X = p.at(double(s) / samples_per_piece);
        best = std::min(best, std::abs(X));
        for (long l = 0; l < eq.N; ++l)
          best = std::min(best, std::abs(X - std::polar(rho, 2.0 * kPi * l / double(eq.N))));
      }
    return best;
  }
};

/// Anticlockwise circle of radius |eps| about the origin, based at eps.
inline PathSpec loop_zero(const TrinomialEquation& eq) {
  Complex eps = eq.base_point();
  double a0 = std::arg(eps);
  return {{PathPiece::arc(0.0, std::abs(eps), a0, a0 + 2.0 * kPi)}};
}

/// Radial excursion to the circle |X^N/R| = 4 and one full turn there;
/// turns = +1 encircles 0 and all of Sigma anticlockwise, -1 is the
/// anticlockwise loop about X = infinity.
inline PathSpec loop_big(const TrinomialEquation& eq, int turns) {
  Complex eps = eq.base_point();
  double a0 = std::arg(eps);
  double r_out = std::pow(4.0, 1.0 / double(eq.N)) * eq.sigma_radius();
  Complex out = std::polar(r_out, a0);
  return {{PathPiece::segment(eps, out),
           PathPiece::arc(0.0, r_out, a0, a0 + turns * 2.0 * kPi),
           PathPiece::segment(out, eps)}};
}

inline PathSpec loop_infinity(const TrinomialEquation& eq) { return loop_big(eq, -1); }

/// Loop around Sigma only: undo the small circle about 0, then the big circle
/// about everything, so that zero * sigma * infinity is contractible.
inline PathSpec loop_sigma(const TrinomialEquation& eq) {
  Complex eps = eq.base_point();
  double a0 = std::arg(eps);
  PathSpec p;
  p.pieces.push_back(PathPiece::arc(0.0, std::abs(eps), a0, a0 - 2.0 * kPi));
  for (auto& piece : loop_big(eq, +1).pieces) p.pieces.push_back(piece);
  return p;
}

enum class OmegaTails { Inside, Outside };

/// Approach corridor for omega_l: an arc on the approach circle from eps's
/// ray to omega_l's ray, then a radial segment to the point at distance
/// delta from omega_l on that ray (inside tails approach from the base
/// circle, outside tails from beyond Sigma).
inline std::vector<PathPiece> omega_corridor(const TrinomialEquation& eq, long ell, double delta,
                                             OmegaTails tails) {
  Complex eps = eq.base_point();
  double rho = eq.sigma_radius();
  double phi = 2.0 * kPi * double(ell) / double(eq.N);
  double a0 = std::arg(eps);
  // shortest signed angular difference from a0 to phi
  double d = std::remainder(phi - a0, 2.0 * kPi);
  std::vector<PathPiece> pieces;
  if (tails == OmegaTails::Inside) {
    double r_in = std::abs(eps);
    pieces.push_back(PathPiece::arc(0.0, r_in, a0, a0 + d));
    pieces.push_back(
        PathPiece::segment(std::polar(r_in, phi), std::polar(rho - delta, phi)));
  } else {
    double r_out = std::pow(4.0, 1.0 / double(eq.N)) * rho;
    pieces.push_back(PathPiece::segment(eps, std::polar(r_out, a0)));
    pieces.push_back(PathPiece::arc(0.0, r_out, a0, a0 + d));
    pieces.push_back(
        PathPiece::segment(std::polar(r_out, phi), std::polar(rho + delta, phi)));
  }
  return pieces;
}

/// Open path from eps to the probe point at distance delta from omega_l.
inline PathSpec omega_probe(const TrinomialEquation& eq, long ell, double delta,
                            OmegaTails tails = OmegaTails::Outside) {
  if (ell < 0 || ell >= eq.N) throw OutOfRange("ell out of [0, N-1]");
  return {omega_corridor(eq, ell, delta, tails)};
}

/// Closed loop around omega_l: corridor, full anticlockwise delta-circle,
/// corridor reversed. Outside tails by default: the far arc lies beyond all
/// of Sigma, so the based pair is the ray-anchored coincidence pair shifted
/// only by the corridor's full-turn wrap.
inline PathSpec loop_omega(const TrinomialEquation& eq, long ell, double delta,
                           OmegaTails tails = OmegaTails::Outside) {
  if (ell < 0 || ell >= eq.N) throw OutOfRange("ell out of [0, N-1]");
  double rho = eq.sigma_radius();
  double phi = 2.0 * kPi * double(ell) / double(eq.N);
  Complex omega = std::polar(rho, phi);
  auto corridor = omega_corridor(eq, ell, delta, tails);
  PathSpec p;
  p.pieces = corridor;
  // start angle of the probe point as seen from omega
  double start_arg = tails == OmegaTails::Inside ? phi + kPi : phi;
  p.pieces.push_back(PathPiece::arc(omega, delta, start_arg, start_arg + 2.0 * kPi));
  for (auto it = corridor.rbegin(); it != corridor.rend(); ++it) {
    PathPiece rev = *it;
    if (rev.kind == PathPiece::Kind::Segment) std::swap(rev.a, rev.b);
    else std::swap(rev.arg0, rev.arg1);
    p.pieces.push_back(rev);
  }
  return p;
}

}  // namespace braidnomial

#endif
