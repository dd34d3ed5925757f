#pragma once

// Serializers for reports: JSON documents, RFC 4180 CSV for the extremal table and an
// SVG rendering of the fundamental domain with an optional axis chord.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "orbigeo/classifier.hpp"
#include "orbigeo/extremal.hpp"
#include "orbigeo/self_intersection.hpp"
#include "orbigeo/triangle_group.hpp"

namespace orbigeo {

struct Provenance {
  std::string tool = "orbigeo";
  std::string version = ORBIGEO_VERSION;
  double tolerance = kDefaultTolerance;
  std::optional<int> cutoff;
  std::optional<int> word_budget;
  /// Omitted from output when empty (reproducible mode).
  std::string generated_at;
};

/// ISO-8601 UTC timestamp of now.
std::string utc_timestamp();

nlohmann::json to_json(const Provenance& p);
nlohmann::json to_json(const ClassificationRecord& rec);
nlohmann::json to_json(const ExtremalResult& result);
nlohmann::json to_json(const SelfIntersectionResult& result);
nlohmann::json to_json(const GammaStarCandidate& candidate);
nlohmann::json to_json(const Table1Row& row);

/// "3" for finite orders, "inf" for ∞.
nlohmann::json order_json(Order o);

/// The extremal table as CSV: one "#" provenance line, a header row, three data rows.
std::string table1_csv(const std::array<Table1Row, 3>& rows, const Provenance& p);

/// Shortest formatting with at least 17 significant digits.
std::string format_number(double x);

/// The part of a geodesic inside T*, as the two boundary crossing points and
/// the indices of the sides they lie on.
struct DomainChord {
  Complex from;
  Complex to;
  int from_side;
  int to_side;
};

std::optional<DomainChord> clip_to_domain(const FundamentalDomain& fd, const Geodesic& line);

struct RenderOptions {
  std::optional<PairWord> axis;
  int width = 1000;
  int height = 500;
};

/// Upper half-plane region [−2.5, 2.5] × (0, 2.5] drawn linearly.
std::string render_svg(const TriangleGroup& group, const RenderOptions& options,
                       const Provenance& p);

}  // namespace orbigeo
