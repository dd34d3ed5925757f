#include "orbigeo/halfplane.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace orbigeo {

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs_entry_diff(const MoebiusMap& m, const MoebiusMap& n) {
  return std::max({std::abs(m.a - n.a), std::abs(m.b - n.b), std::abs(m.c - n.c),
                   std::abs(m.d - n.d)});
}

std::optional<int> rotation_order(double trace_abs) {
  // trace_abs = 2cos(θ) with θ ∈ (0, π/2]; the PSL order is the least n
  // with nθ/π an integer.
  const double ratio = std::acos(std::clamp(trace_abs / 2.0, -1.0, 1.0)) / kPi;
  for (int n = 2; n <= kMaxDetectedOrder; ++n) {
    const double scaled = ratio * n;
    if (std::abs(scaled - std::round(scaled)) < 1e-9 * n) return n;
  }
  return std::nullopt;
}

// Angular position of z on a circle centred on the real axis, in [0, π].
double arg_on(const HalfCircle& h, Complex z) {
  return std::atan2(std::max(z.imag(), 0.0), z.real() - h.center);
}

}  // namespace

bool approx_equal(BoundaryPoint u, BoundaryPoint v, double tol) {
  if (u.infinite || v.infinite) return u.infinite == v.infinite;
  return std::abs(u.x - v.x) <= tol * std::max({1.0, std::abs(u.x), std::abs(v.x)});
}

Complex MoebiusMap::operator()(Complex z) const { return (a * z + b) / (c * z + d); }

BoundaryPoint MoebiusMap::operator()(BoundaryPoint x) const {
  if (x.infinite) {
    if (c == 0.0) return BoundaryPoint::infinity();
    return BoundaryPoint::at(a / c);
  }
  const double denom = c * x.x + d;
  if (denom == 0.0) return BoundaryPoint::infinity();
  return BoundaryPoint::at((a * x.x + b) / denom);
}

bool projectively_equal(const MoebiusMap& m, const MoebiusMap& n, double tol) {
  return projective_distance(m, n) <= tol;
}

double projective_distance(const MoebiusMap& m, const MoebiusMap& n) {
  return std::min(max_abs_entry_diff(m, n), max_abs_entry_diff(m, -n));
}

MoebiusMap power(const MoebiusMap& m, int exponent) {
  MoebiusMap base = exponent < 0 ? m.inverse() : m;
  unsigned remaining = static_cast<unsigned>(exponent < 0 ? -exponent : exponent);
  MoebiusMap result = MoebiusMap::identity();
  while (remaining != 0) {
    if (remaining & 1U) result = result * base;
    base = base * base;
    remaining >>= 1U;
  }
  return result;
}

Geodesic Geodesic::half_circle(double center, double radius) {
  if (!(radius > 0.0) || !std::isfinite(radius) || !std::isfinite(center)) {
    throw std::invalid_argument("half-circle radius must be positive and finite");
  }
  return Geodesic(HalfCircle{center, radius});
}

Geodesic Geodesic::through(BoundaryPoint u, BoundaryPoint v) {
  if (u.infinite && v.infinite) throw std::invalid_argument("geodesic endpoints coincide");
  if (u.infinite) return vertical(v.x);
  if (v.infinite) return vertical(u.x);
  if (u.x == v.x) throw std::invalid_argument("geodesic endpoints coincide");
  return half_circle((u.x + v.x) / 2.0, std::abs(u.x - v.x) / 2.0);
}

Geodesic Geodesic::through(Complex z, Complex w) {
  const double dx = w.real() - z.real();
  if (std::abs(dx) <= 1e-14 * std::max({1.0, std::abs(z), std::abs(w)})) {
    if (z == w) throw std::invalid_argument("geodesic needs two distinct points");
    return vertical((z.real() + w.real()) / 2.0);
  }
  const double center = (std::norm(w) - std::norm(z)) / (2.0 * dx);
  return half_circle(center, std::abs(z - center));
}

std::pair<BoundaryPoint, BoundaryPoint> Geodesic::endpoints() const {
  if (const auto* v = std::get_if<Vertical>(&shape_)) {
    return {BoundaryPoint::at(v->x), BoundaryPoint::infinity()};
  }
  const auto& h = std::get<HalfCircle>(shape_);
  return {BoundaryPoint::at(h.center - h.radius), BoundaryPoint::at(h.center + h.radius)};
}

double Geodesic::residual(Complex z) const {
  if (const auto* v = std::get_if<Vertical>(&shape_)) return std::abs(z.real() - v->x);
  const auto& h = std::get<HalfCircle>(shape_);
  return std::abs(std::abs(z - h.center) - h.radius);
}

Complex Geodesic::tangent_toward(Complex z, Complex w) const {
  if (is_vertical()) return {0.0, w.imag() >= z.imag() ? 1.0 : -1.0};
  const auto& h = as_half_circle();
  const double phi = arg_on(h, z);
  const Complex forward = Complex(0.0, 1.0) * std::polar(1.0, phi);
  return arg_on(h, w) >= phi ? forward : -forward;
}

std::string Geodesic::to_string() const {
  std::ostringstream out;
  out.precision(17);
  if (const auto* v = std::get_if<Vertical>(&shape_)) {
    out << "Vertical{x=" << v->x << "}";
  } else {
    const auto& h = std::get<HalfCircle>(shape_);
    out << "HalfCircle{center=" << h.center << ", radius=" << h.radius << "}";
  }
  return out.str();
}

bool same_geodesic(const Geodesic& l1, const Geodesic& l2, double tol) {
  const auto [u1, v1] = l1.endpoints();
  const auto [u2, v2] = l2.endpoints();
  return (approx_equal(u1, u2, tol) && approx_equal(v1, v2, tol)) ||
         (approx_equal(u1, v2, tol) && approx_equal(v1, u2, tol));
}

IsometryKind kind_of(const IsometryClass& cls) {
  return static_cast<IsometryKind>(cls.index());
}

const char* to_string(IsometryKind kind) {
  switch (kind) {
    case IsometryKind::identity: return "identity";
    case IsometryKind::elliptic: return "elliptic";
    case IsometryKind::parabolic: return "parabolic";
    case IsometryKind::hyperbolic: return "hyperbolic";
  }
  return "unknown";
}

double translation_length_from_trace(double trace_abs) {
  return 2.0 * std::acosh(trace_abs / 2.0);
}

double trace_from_translation_length(double length) { return 2.0 * std::cosh(length / 2.0); }

IsometryClass classify_isometry(const MoebiusMap& g, double tol) {
  const double t = std::abs(g.trace());
  if (t < 2.0 - tol) return Elliptic{rotation_order(t), t};
  if (t <= 2.0 + tol) {
    if (projectively_equal(g, MoebiusMap::identity(), tol)) return Identity{};
    return Parabolic{t};
  }
  return Hyperbolic{t, translation_length_from_trace(t)};
}

Geodesic axis_of(const MoebiusMap& g, double tol) {
  const double t = g.trace();
  if (std::abs(t) <= 2.0 + tol) throw NotHyperbolic("axis_of: map is not hyperbolic");
  const double root = std::sqrt(t * t - 4.0);
  const double scale = std::abs(g.a) + std::abs(g.b) + std::abs(g.c) + std::abs(g.d);
  if (std::abs(g.c) <= 1e-15 * scale) {
    // Fixes ∞ and the finite point b/(d − a).
    return Geodesic::vertical(g.b / (g.d - g.a));
  }
  // Roots of c z² + (d − a) z − b = 0, computed without cancellation.
  const double m = g.a - g.d;
  const double r1 = (m + std::copysign(root, m)) / (2.0 * g.c);
  const double r2 = (-g.b / g.c) / r1;
  return Geodesic::through(BoundaryPoint::at(r1), BoundaryPoint::at(r2));
}

double imaginary_axis_crossing(const MoebiusMap& g, double tol) {
  if (std::abs(g.trace()) <= 2.0 + tol) {
    throw NotHyperbolic("imaginary_axis_crossing: map is not hyperbolic");
  }
  if (!(g.b * g.c > 0.0)) {
    throw NoCrossing("imaginary_axis_crossing: bc <= 0, axis misses the imaginary axis");
  }
  return std::sqrt(g.b / g.c);
}

Complex ReflectionMap::operator()(Complex z) const {
  const Complex w = std::conj(z);
  return (a * w + b) / (c * w + d);
}

ReflectionMap reflection_in(const Geodesic& mirror) {
  if (mirror.is_vertical()) {
    const double x = mirror.as_vertical().x;
    return {-1.0, 2.0 * x, 0.0, 1.0};
  }
  const auto& h = mirror.as_half_circle();
  const double rho = h.radius;
  return {h.center / rho, (rho * rho - h.center * h.center) / rho, 1.0 / rho, -h.center / rho};
}

MoebiusMap compose_reflections(const ReflectionMap& r1, const ReflectionMap& r2) {
  // r1(r2(z)) = M1(conj(M2(conj z))) = M1(M2(z)) since the entries are real.
  const MoebiusMap m1{r1.a, r1.b, r1.c, r1.d};
  const MoebiusMap m2{r2.a, r2.b, r2.c, r2.d};
  return m1 * m2;
}

Geodesic common_orthogonal(const Geodesic& l1, const Geodesic& l2, double tol) {
  if (l1.is_vertical() && l2.is_vertical()) {
    throw NotDisjoint("common_orthogonal: vertical geodesics share the endpoint at infinity");
  }
  if (l1.is_vertical() || l2.is_vertical()) {
    const double x = (l1.is_vertical() ? l1 : l2).as_vertical().x;
    const auto& h = (l1.is_vertical() ? l2 : l1).as_half_circle();
    const double gap = std::abs(x - h.center) - h.radius;
    if (gap <= tol * std::max(1.0, h.radius)) {
      throw NotDisjoint("common_orthogonal: geodesics meet in the closed half-plane");
    }
    // Circle centred at x, orthogonal to h: |x − c|² = ρ² + ρ_h².
    const double dx = x - h.center;
    return Geodesic::half_circle(x, std::sqrt(dx * dx - h.radius * h.radius));
  }
  const auto& h1 = l1.as_half_circle();
  const auto& h2 = l2.as_half_circle();
  const double sep = std::abs(h1.center - h2.center);
  const double scale = std::max({1.0, h1.radius, h2.radius});
  const bool apart = sep > h1.radius + h2.radius + tol * scale;
  const bool nested = sep < std::abs(h1.radius - h2.radius) - tol * scale;
  if (!apart && !nested) {
    throw NotDisjoint("common_orthogonal: geodesics meet in the closed half-plane");
  }
  if (sep <= tol * scale) return Geodesic::vertical((h1.center + h2.center) / 2.0);
  // Radical centre: equal power with respect to both circles.
  const double c = (h1.radius * h1.radius - h2.radius * h2.radius - h1.center * h1.center +
                    h2.center * h2.center) /
                   (2.0 * (h2.center - h1.center));
  const double power1 = (c - h1.center) * (c - h1.center) - h1.radius * h1.radius;
  return Geodesic::half_circle(c, std::sqrt(power1));
}

std::optional<Crossing> intersect_geodesics(const Geodesic& l1, const Geodesic& l2) {
  const auto finish = [](Complex point, double cos_angle) {
    const double angle = std::acos(std::clamp(std::abs(cos_angle), 0.0, 1.0));
    return Crossing{point, angle, angle > kTangencyAngle};
  };
  if (l1.is_vertical() && l2.is_vertical()) return std::nullopt;
  if (l1.is_vertical() || l2.is_vertical()) {
    const double x = (l1.is_vertical() ? l1 : l2).as_vertical().x;
    const auto& h = (l1.is_vertical() ? l2 : l1).as_half_circle();
    const double dx = x - h.center;
    const double y2 = h.radius * h.radius - dx * dx;
    if (!(y2 > 0.0)) return std::nullopt;
    // Normals (1, 0) and (dx, y)/ρ.
    return finish({x, std::sqrt(y2)}, dx / h.radius);
  }
  const auto& h1 = l1.as_half_circle();
  const auto& h2 = l2.as_half_circle();
  if (h1.center == h2.center) return std::nullopt;
  const double x = (h1.radius * h1.radius - h2.radius * h2.radius - h1.center * h1.center +
                    h2.center * h2.center) /
                   (2.0 * (h2.center - h1.center));
  const double dx1 = x - h1.center;
  const double y2 = h1.radius * h1.radius - dx1 * dx1;
  if (!(y2 > 0.0)) return std::nullopt;
  const Complex z{x, std::sqrt(y2)};
  const Complex n1 = (z - h1.center) / h1.radius;
  const Complex n2 = (z - h2.center) / h2.radius;
  return finish(z, n1.real() * n2.real() + n1.imag() * n2.imag());
}

double hyperbolic_distance(Complex z, Complex w) {
  return std::acosh(1.0 + std::norm(z - w) / (2.0 * z.imag() * w.imag()));
}

MoebiusMap standard_position(const Geodesic& l) {
  if (l.is_vertical()) return {1.0, -l.as_vertical().x, 0.0, 1.0};
  const auto [u, v] = l.endpoints();
  // z ↦ −(z − u)/(z − v), determinant v − u > 0.
  const double s = 1.0 / std::sqrt(v.x - u.x);
  return {-s, u.x * s, s, -v.x * s};
}

Complex nearest_point_on(const Geodesic& l, Complex w) {
  const MoebiusMap m = standard_position(l);
  const Complex image = m(w);
  return m.inverse()(Complex(0.0, std::abs(image)));
}

}  // namespace orbigeo
