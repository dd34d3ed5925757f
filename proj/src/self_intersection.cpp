#include "orbigeo/self_intersection.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>

namespace orbigeo {

namespace {

constexpr double kSegmentSlack = 1e-12;

double height_in_standard_position(const MoebiusMap& s, Complex z) { return std::abs(s(z)); }

}  // namespace

double AxisSegment::position(Complex z) const {
  const MoebiusMap s = standard_position(carrier);
  const double origin = std::log(height_in_standard_position(s, start));
  const double period = std::log(height_in_standard_position(s, end)) - origin;
  return (std::log(height_in_standard_position(s, z)) - origin) / period;
}

bool AxisSegment::contains(Complex z) const {
  const double t = position(z);
  return t >= -kSegmentSlack && t < 1.0 - kSegmentSlack;
}

AxisSegment fundamental_segment(const TriangleGroup& group, const MoebiusMap& g, int base_shift) {
  if (kind_of(classify_isometry(g)) != IsometryKind::hyperbolic) {
    throw NotHyperbolic("self-intersection count needs a hyperbolic element");
  }
  const Geodesic axis = axis_of(g);
  Complex start = nearest_point_on(axis, group.center());
  start = power(g, base_shift)(start);
  // Re-project to stay on the carrier despite rounding.
  start = nearest_point_on(axis, start);
  return {axis, start, nearest_point_on(axis, g(start)), g};
}

std::size_t SelfIntersectionResult::crossing_axes_within(int limit) const {
  std::size_t n = 0;
  for (const auto& c : crossings) {
    if (static_cast<int>(c.conjugator.size()) <= limit) ++n;
  }
  return n;
}

SelfIntersectionResult self_intersection_count(const TriangleGroup& group, const MoebiusMap& g,
                                               int budget, const SelfIntersectionOptions& options) {
  if (budget < 0) throw std::invalid_argument("word budget must be >= 0");
  const AxisSegment segment = fundamental_segment(group, g, options.base_shift);
  const auto [u, v] = segment.carrier.endpoints();
  const WordTable table(group, budget, options.exec);

  struct Hit {
    Geodesic axis;
    Complex point;
    double position;
  };
  const auto hits = map_indices<std::optional<Hit>>(
      table.size(),
      [&](std::size_t i) -> std::optional<Hit> {
        const MoebiusMap& w = table.element(i);
        // Axis of w g w⁻¹ is the image of the axis of g under w.
        const BoundaryPoint wu = w(u);
        const BoundaryPoint wv = w(v);
        if (approx_equal(wu, wv, 0.0)) return std::nullopt;
        const Geodesic image = Geodesic::through(wu, wv);
        if (same_geodesic(image, segment.carrier, kAxisDedupTolerance)) return std::nullopt;
        const auto crossing = intersect_geodesics(image, segment.carrier);
        if (!crossing || !crossing->transverse) return std::nullopt;
        if (!segment.contains(crossing->point)) return std::nullopt;
        return Hit{image, crossing->point, segment.position(crossing->point)};
      },
      options.exec);

  SelfIntersectionResult result{0, 0, budget, {}, segment, {}};
  for (std::size_t i = 0; i < hits.size(); ++i) {
    if (!hits[i]) continue;
    bool seen = false;
    for (const auto& c : result.crossings) {
      if (same_geodesic(c.axis, hits[i]->axis, kAxisDedupTolerance)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      result.crossings.push_back({hits[i]->axis, hits[i]->point, hits[i]->position, table.word(i)});
    }
  }
  result.crossing_axes = result.crossings.size();
  result.count = result.crossing_axes / 2;
  result.stability.budgets = {budget - 2, budget - 1, budget};
  for (int k = 0; k < 3; ++k) {
    result.stability.counts[k] = result.count_within(result.stability.budgets[k]);
  }
  result.stability.stable = result.stability.counts[1] == result.stability.counts[2];
  return result;
}

}  // namespace orbigeo
