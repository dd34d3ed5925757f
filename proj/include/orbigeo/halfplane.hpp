#pragma once

// Floating-point geometry of the upper half-plane: orientation-preserving
// isometries as SL(2,R) matrices, geodesics, reflections, axes, crossings.

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

namespace orbigeo {

using Complex = std::complex<double>;

inline constexpr double kDefaultTolerance = 1e-9;
inline constexpr double kDeterminantTolerance = 1e-10;
/// Two geodesics meeting at a smaller angle (radians) are not transverse.
inline constexpr double kTangencyAngle = 1e-6;

class NotHyperbolic : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NoCrossing : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotDisjoint : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A point of R ∪ {∞}.
struct BoundaryPoint {
  double x = 0.0;
  bool infinite = false;

  static constexpr BoundaryPoint at(double value) { return {value, false}; }
  static constexpr BoundaryPoint infinity() { return {0.0, true}; }
};

bool approx_equal(BoundaryPoint u, BoundaryPoint v, double tol);

/// z ↦ (az+b)/(cz+d) with ad − bc = 1. Signs are kept as produced by
/// products; use projectively_equal to compare in PSL(2,R).
struct MoebiusMap {
  double a = 1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  static constexpr MoebiusMap identity() { return {}; }

  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
  MoebiusMap inverse() const { return {d, -b, -c, a}; }
  MoebiusMap operator-() const { return {-a, -b, -c, -d}; }

  Complex operator()(Complex z) const;
  BoundaryPoint operator()(BoundaryPoint x) const;

  friend MoebiusMap operator*(const MoebiusMap& m, const MoebiusMap& n) {
    return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
            m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
  }
};

/// Entrywise equality up to the sign ambiguity of PSL(2,R).
bool projectively_equal(const MoebiusMap& m, const MoebiusMap& n, double tol);
double projective_distance(const MoebiusMap& m, const MoebiusMap& n);
MoebiusMap power(const MoebiusMap& m, int exponent);

struct Vertical {
  double x;
};

struct HalfCircle {
  double center;
  double radius;
};

/// A complete geodesic: a vertical line or a half-circle orthogonal to R.
class Geodesic {
 public:
  using Shape = std::variant<Vertical, HalfCircle>;

  static Geodesic vertical(double x) { return Geodesic(Vertical{x}); }
  static Geodesic half_circle(double center, double radius);
  /// The geodesic with the two given ideal endpoints.
  static Geodesic through(BoundaryPoint u, BoundaryPoint v);
  /// The geodesic through two distinct interior points.
  static Geodesic through(Complex z, Complex w);

  const Shape& shape() const { return shape_; }
  bool is_vertical() const { return std::holds_alternative<Vertical>(shape_); }
  const Vertical& as_vertical() const { return std::get<Vertical>(shape_); }
  const HalfCircle& as_half_circle() const { return std::get<HalfCircle>(shape_); }

  /// Ideal endpoints, (x, ∞) for a vertical and (c−ρ, c+ρ) for a half-circle.
  std::pair<BoundaryPoint, BoundaryPoint> endpoints() const;
  /// Euclidean residual of z from the carrier line or circle.
  double residual(Complex z) const;
  /// Unit Euclidean tangent at z pointing toward w along the geodesic.
  Complex tangent_toward(Complex z, Complex w) const;

  std::string to_string() const;

 private:
  explicit Geodesic(Shape shape) : shape_(shape) {}
  Shape shape_;
};

bool same_geodesic(const Geodesic& l1, const Geodesic& l2, double tol);

struct Identity {};
struct Elliptic {
  /// Order in PSL(2,R); empty when the rotation angle is not a rational
  /// multiple of π with denominator at most kMaxDetectedOrder.
  std::optional<int> order;
  double trace_abs;
};
struct Parabolic {
  double trace_abs;
};
struct Hyperbolic {
  double trace_abs;
  double translation_length;
};

using IsometryClass = std::variant<Identity, Elliptic, Parabolic, Hyperbolic>;

enum class IsometryKind { identity, elliptic, parabolic, hyperbolic };

inline constexpr int kMaxDetectedOrder = 10000;

IsometryKind kind_of(const IsometryClass& cls);
const char* to_string(IsometryKind kind);

/// |tr| = 2 cosh(T/2).
double translation_length_from_trace(double trace_abs);
double trace_from_translation_length(double length);

IsometryClass classify_isometry(const MoebiusMap& g, double tol = kDefaultTolerance);

/// Geodesic joining the two real fixed points of a hyperbolic map.
Geodesic axis_of(const MoebiusMap& g, double tol = kDefaultTolerance);

/// Height y at which the axis of g meets the imaginary axis: y = √(b/c).
double imaginary_axis_crossing(const MoebiusMap& g, double tol = kDefaultTolerance);

/// z ↦ (a·z̄ + b)/(c·z̄ + d) with ad − bc = −1.
struct ReflectionMap {
  double a = -1.0;
  double b = 0.0;
  double c = 0.0;
  double d = 1.0;

  double det() const { return a * d - b * c; }
  Complex operator()(Complex z) const;
};

ReflectionMap reflection_in(const Geodesic& mirror);

/// r1 ∘ r2 (apply r2 first).
MoebiusMap compose_reflections(const ReflectionMap& r1, const ReflectionMap& r2);

/// The unique geodesic orthogonal to two geodesics that are disjoint in the
/// closed half-plane. Throws NotDisjoint otherwise.
Geodesic common_orthogonal(const Geodesic& l1, const Geodesic& l2,
                           double tol = kDefaultTolerance);

struct Crossing {
  Complex point;
  /// Angle between the two geodesics in [0, π/2].
  double angle;
  bool transverse;
};

std::optional<Crossing> intersect_geodesics(const Geodesic& l1, const Geodesic& l2);

double hyperbolic_distance(Complex z, Complex w);

/// A map sending the geodesic to the imaginary axis with
/// endpoints().first ↦ 0 and endpoints().second ↦ ∞.
MoebiusMap standard_position(const Geodesic& l);

/// The point of l closest to w in the hyperbolic metric.
Complex nearest_point_on(const Geodesic& l, Complex w);

}  // namespace orbigeo
