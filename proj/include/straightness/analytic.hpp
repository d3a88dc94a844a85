#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "straightness/core.hpp"

namespace straightness {

/// Angle between two consecutive radii. Only constructible from an integer
/// radius count k >= 3, so theta is always 2*pi/k.
class Sector {
 public:
  static Sector from_radii(int radii_count) {
    if (radii_count < 3) {
      throw InvalidInput("sides are not defined for fewer than 3 radii, got " +
                         std::to_string(radii_count));
    }
    return Sector(radii_count);
  }

  int radii_count() const { return radii_count_; }
  double theta() const { return 2.0 * std::numbers::pi / radii_count_; }
  /// Angle between a radius and the side leaving it.
  double side_angle() const { return (std::numbers::pi - theta()) / 2.0; }

 private:
  explicit Sector(int k) : radii_count_(k) {}
  int radii_count_;
};

inline constexpr double kRectilinearTheta = std::numbers::pi / 2.0;

namespace detail {

inline void require_finite(double value, const char* what) {
  if (!std::isfinite(value)) throw InvalidInput(std::string(what) + " must be finite");
}

// Position within the sector, in [0, theta).
inline double sector_offset(double theta, double alpha) {
  double a = std::fmod(alpha, theta);
  if (a < 0.0) a += theta;
  if (a >= theta) a = 0.0;
  return a;
}

inline double rectilinear_closed_form(double alpha) {
  return 1.0 / (std::cos(alpha) + std::sin(alpha));
}

// Straightness of the route that leaves along the first radius, valid for
// any destination angle in [0, theta] on the first side.
inline double lower_route_closed_form(const Sector& sector, double alpha) {
  const double beta = sector.side_angle();
  const double s = std::sin(alpha);
  return 1.0 / (std::cos(alpha) + s / std::tan(beta) + s / std::sin(beta));
}

}  // namespace detail

/// Reduces alpha to [0, theta/2] using the rotation period theta and the
/// reflection about the sector bisector.
inline double canonicalize(double theta, double alpha) {
  detail::require_finite(theta, "theta");
  detail::require_finite(alpha, "alpha");
  if (theta <= 0.0) throw InvalidInput("theta must be positive");
  const double a = detail::sector_offset(theta, alpha);
  return a > theta / 2.0 ? theta - a : a;
}

/// Center-to-periphery straightness of a square grid, 1 / (cos a + sin a),
/// for any direction alpha.
inline double straightness_rectilinear(double alpha) {
  return detail::rectilinear_closed_form(canonicalize(kRectilinearTheta, alpha));
}

/// Center-to-periphery straightness of a radio-concentric network with
/// sector angle theta = 2*pi/k, for any direction alpha.
inline double straightness_radial(const Sector& sector, double alpha) {
  return detail::lower_route_closed_form(sector, canonicalize(sector.theta(), alpha));
}

/// Same values as straightness_radial but computed without the reflection:
/// the better of the two routes bounding the sector (first radius or next
/// radius). This is the form that draws the periodic ripple.
inline double ripple_straightness_radial(const Sector& sector, double alpha) {
  detail::require_finite(alpha, "alpha");
  const double a = detail::sector_offset(sector.theta(), alpha);
  return std::max(detail::lower_route_closed_form(sector, a),
                  detail::lower_route_closed_form(sector, sector.theta() - a));
}

inline double ripple_straightness_rectilinear(double alpha) {
  detail::require_finite(alpha, "alpha");
  const double a = detail::sector_offset(kRectilinearTheta, alpha);
  return std::max(detail::rectilinear_closed_form(a),
                  detail::rectilinear_closed_form(kRectilinearTheta - a));
}

/// Explicit coordinates of the first mesh: center p1 at the origin, first
/// radius along +x to p3 = (1, 0), next radius to p3' at angle theta, and
/// the destination p4 on the side chord [p3, p3'] at direction alpha.
/// p2 is the projection of p4 on the first radius.
struct MeshGeometry {
  Point2D destination;        // p4
  double crow_flies = 0.0;    // |p1 p4|
  double along_radius = 0.0;  // |p1 p2|
  double radius_rest = 0.0;   // |p2 p3|
  double offset = 0.0;        // |p2 p4|
  double side_travel = 0.0;   // |p3 p4|
  double beta = 0.0;          // angle at p3 between the radius and the side
  double lower_route = 0.0;   // p1 -> p3 -> p4
  double upper_route = 0.0;   // p1 -> p3' -> p4
};

inline MeshGeometry first_mesh_geometry(const Sector& sector, double alpha) {
  detail::require_finite(alpha, "alpha");
  const double theta = sector.theta();
  if (alpha < 0.0 || alpha > theta) {
    throw InvalidInput("mesh destination angle must lie in [0, theta]");
  }
  const Point2D p3{1.0, 0.0};
  const Point2D p3_next{std::cos(theta), std::sin(theta)};
  const Point2D dir{std::cos(alpha), std::sin(alpha)};
  const Point2D side{p3_next.x - p3.x, p3_next.y - p3.y};

  // Intersection of the ray t*dir with the line p3 + s*side.
  const double t = (p3.x * side.y - p3.y * side.x) / (dir.x * side.y - dir.y * side.x);
  const Point2D p4{t * dir.x, t * dir.y};

  MeshGeometry g;
  g.destination = p4;
  g.crow_flies = euclidean_distance({0.0, 0.0}, p4);
  g.along_radius = p4.x;
  g.radius_rest = p3.x - p4.x;
  g.offset = std::abs(p4.y);
  g.side_travel = euclidean_distance(p3, p4);
  const Point2D to_center{-p3.x, -p3.y};
  g.beta = std::acos((to_center.x * side.x + to_center.y * side.y) /
                     (std::hypot(to_center.x, to_center.y) * std::hypot(side.x, side.y)));
  g.lower_route = euclidean_distance({0.0, 0.0}, p3) + g.side_travel;
  g.upper_route = euclidean_distance({0.0, 0.0}, p3_next) + euclidean_distance(p3_next, p4);
  return g;
}

/// Straightness obtained by comparing both candidate routes in explicit
/// coordinates. Independent of the closed forms above.
inline double mesh_oracle_radial(const Sector& sector, double alpha) {
  const MeshGeometry g = first_mesh_geometry(sector, alpha);
  return g.crow_flies / std::min(g.lower_route, g.upper_route);
}

enum class NetworkKind { rectilinear, radioconcentric };

inline std::string to_string(NetworkKind kind) {
  return kind == NetworkKind::rectilinear ? "rectilinear" : "radioconcentric";
}

struct CurveSample {
  double alpha = 0.0;
  double straightness = 0.0;
};

/// Samples alpha uniformly over [0, alpha_max] (both ends included).
/// `radii_count` is ignored for the rectilinear kind.
inline std::vector<CurveSample> analytic_curve(NetworkKind kind, int radii_count,
                                               int alpha_steps,
                                               double alpha_max = std::numbers::pi / 4.0) {
  if (alpha_steps < 2) throw InvalidInput("alpha_steps must be >= 2");
  detail::require_finite(alpha_max, "alpha_max");
  if (alpha_max <= 0.0) throw InvalidInput("alpha_max must be positive");

  std::vector<CurveSample> rows;
  rows.reserve(static_cast<std::size_t>(alpha_steps));
  if (kind == NetworkKind::rectilinear) {
    for (int i = 0; i < alpha_steps; ++i) {
      const double alpha = alpha_max * i / (alpha_steps - 1);
      rows.push_back({alpha, ripple_straightness_rectilinear(alpha)});
    }
  } else {
    const Sector sector = Sector::from_radii(radii_count);
    for (int i = 0; i < alpha_steps; ++i) {
      const double alpha = alpha_max * i / (alpha_steps - 1);
      rows.push_back({alpha, ripple_straightness_radial(sector, alpha)});
    }
  }
  return rows;
}

}  // namespace straightness
