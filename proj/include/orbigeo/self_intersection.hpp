#pragma once

// Self-intersection counting from the definition: lift one period of the
// closed geodesic to a segment of the axis of g and collect the distinct
// conjugate axes w g w⁻¹ that cross it transversely, w ranging over reduced
// words up to a length budget.
//
// Each transverse double point of the closed geodesic is met twice along
// one period, once on each branch, and the two visits see two different
// conjugate axes. The number of double points is therefore half the number
// of crossing axes; both are reported.

#include <array>
#include <cstddef>
#include <vector>

#include "orbigeo/halfplane.hpp"
#include "orbigeo/kernels.hpp"
#include "orbigeo/triangle_group.hpp"
#include "orbigeo/word.hpp"

namespace orbigeo {

inline constexpr int kDefaultWordBudget = 8;
inline constexpr double kAxisDedupTolerance = 1e-8;

struct SelfIntersectionOptions {
  /// Start the segment at g^k(z₀) instead of z₀.
  int base_shift = 0;
  Execution exec = Execution::parallel;
};

/// One period [start, g(start)) of the axis of g.
struct AxisSegment {
  Geodesic carrier;
  Complex start;
  Complex end;
  MoebiusMap owner;

  /// Position of a point of the carrier in units of the period, 0 at start
  /// and 1 at end.
  double position(Complex z) const;
  bool contains(Complex z) const;
};

AxisSegment fundamental_segment(const TriangleGroup& group, const MoebiusMap& g, int base_shift = 0);

struct CrossingAxis {
  Geodesic axis;
  Complex point;
  double position;
  GroupWord conjugator;
};

struct StabilityReport {
  std::array<int, 3> budgets;
  std::array<std::size_t, 3> counts;
  /// Count unchanged between the last two budgets.
  bool stable;
};

struct SelfIntersectionResult {
  /// Double points of the closed geodesic: crossing_axes / 2.
  std::size_t count;
  std::size_t crossing_axes;
  int budget;
  StabilityReport stability;
  AxisSegment segment;
  /// Distinct crossing axes, shortest conjugator first.
  std::vector<CrossingAxis> crossings;

  /// Distinct crossing axes reachable with conjugators of length ≤ budget.
  std::size_t crossing_axes_within(int budget) const;
  std::size_t count_within(int budget) const { return crossing_axes_within(budget) / 2; }
};

/// Throws NotHyperbolic if g is not hyperbolic.
SelfIntersectionResult self_intersection_count(const TriangleGroup& group, const MoebiusMap& g,
                                               int budget = kDefaultWordBudget,
                                               const SelfIntersectionOptions& options = {});

}  // namespace orbigeo
