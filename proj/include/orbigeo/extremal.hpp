#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "orbigeo/classifier.hpp"
#include "orbigeo/kernels.hpp"
#include "orbigeo/triangle_group.hpp"
#include "orbigeo/word.hpp"

namespace orbigeo {

inline constexpr int kDefaultCutoff = 8;

/// Lower bound on figure-eight traces for signatures with some finite entry
/// above the cutoff. Traces are non-decreasing in each entry, so capping the
/// large entries at the cutoff can only lower a trace; the bound is the
/// least eligible trace on that capped frontier.
struct PruningCertificate {
  double frontier_lower_bound;
  /// frontier_lower_bound exceeds the minimum found inside the cutoff.
  bool certified;
};

struct ExtremalResult {
  ClassificationRecord minimizer;
  /// Distinct unoriented geodesics attaining the minimum.
  std::size_t minimizing_geodesics;
  bool unique;
  std::optional<ClassificationRecord> runner_up;
  int cutoff;
  std::size_t signatures_examined;
  std::optional<PruningCertificate> certificate;

  double trace_abs() const { return minimizer.trace_abs; }
  double length() const { return *minimizer.length; }
  int puncture_count() const { return minimizer.signature.puncture_count(); }
};

/// Valid ordered signatures with exactly `punctures` infinite entries and
/// finite entries in [2, cutoff].
std::vector<TriangleSignature> enumerate_stratum(int punctures, int cutoff);

/// Shortest figure eight among the given signatures (no certificate).
std::optional<ExtremalResult> min_figure8_among(const std::vector<TriangleSignature>& sigs,
                                                int cutoff, Execution exec = Execution::parallel,
                                                double tol = kDefaultTolerance);

/// Shortest figure eight on triangle group orbifolds with exactly
/// `punctures` punctures (0..3).
std::optional<ExtremalResult> min_figure8(int punctures, int cutoff = kDefaultCutoff,
                                          Execution exec = Execution::parallel,
                                          double tol = kDefaultTolerance);

/// Minimum over all puncture counts.
std::optional<ExtremalResult> global_min_figure8(int cutoff = kDefaultCutoff,
                                                 Execution exec = Execution::parallel,
                                                 double tol = kDefaultTolerance);

/// 2cos(2π/7) + 1.
double gamma_star_trace();
/// 2 arccosh(cos(2π/7) + 1/2).
double gamma_star_length();

struct GammaStarCandidate {
  GroupWord word;
  double trace_abs;
  double length;
  /// Fixed point u(i) of the order-two element u A u⁻¹ lying on the axis.
  Complex order_two_point;
  GroupWord conjugator;
};

/// Shortest reduced word in Γ(2,3,7) of length ≤ budget whose |trace| is
/// 2cos(2π/7)+1 and whose axis passes through an order-two fixed point.
std::optional<GammaStarCandidate> gamma_star_search(int budget,
                                                    Execution exec = Execution::parallel);

struct Table1Row {
  std::string classification;
  std::string closed_geodesics;
  double trace_abs;
  double length;
  std::string orbifold;
  double area;
};

std::array<Table1Row, 3> reproduce_table1(int cutoff = kDefaultCutoff,
                                          Execution exec = Execution::parallel,
                                          double tol = kDefaultTolerance);

}  // namespace orbigeo
