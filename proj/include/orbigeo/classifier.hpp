#pragma once

// Case analysis for the three distinguished elements BA⁻¹, BC⁻¹, AC⁻¹ of a
// normalized triangle group. The integer case table decides the projection
// of each element; traces are computed independently and must agree with it.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "orbigeo/halfplane.hpp"
#include "orbigeo/kernels.hpp"
#include "orbigeo/triangle_group.hpp"
#include "orbigeo/word.hpp"

namespace orbigeo {

/// Signals a bug: the numeric isometry type contradicts the case table.
class InconsistentClassification : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Projection is a cone point of the given order, or a puncture when ∞.
struct EllipticPoint {
  Order order;
};
/// Figure eight geodesic whose two loops bound the given singular points.
struct Figure8 {
  Order first;
  Order second;
};
/// Geodesic loop through the order-three cone point.
struct ThroughConePoint3 {};
/// Geodesic path from the order-two point to the order-four point and back.
struct BackAndForthPath {};

using ProjectionDescriptor = std::variant<EllipticPoint, Figure8, ThroughConePoint3, BackAndForthPath>;

std::string describe(const ProjectionDescriptor& descriptor);
bool is_figure8(const ProjectionDescriptor& descriptor);
/// Isometry type implied by a descriptor.
IsometryKind expected_kind(const ProjectionDescriptor& descriptor);

/// The case table for an ordered signature.
ProjectionDescriptor case_table(const TriangleSignature& sig, PairWord word);

struct ClassificationRecord {
  TriangleSignature signature;
  PairWord word;
  IsometryClass isometry;
  ProjectionDescriptor descriptor;
  double trace_abs;
  std::optional<double> length;
  /// |trace| of the literal matrix product, when the matrices exist.
  std::optional<double> matrix_trace_abs;
  /// Records of one signature with equal geodesic_class project to the same
  /// unoriented closed geodesic.
  int geodesic_class;
  /// BC⁻¹ in Γ(3,3,r): same geodesic as BA⁻¹ traversed the other way.
  bool reversed_orientation;
};

ClassificationRecord classify_pair_element(const TriangleSignature& sig, PairWord word,
                                           double tol = kDefaultTolerance);
std::array<ClassificationRecord, 3> classify_signature(const TriangleSignature& sig,
                                                       double tol = kDefaultTolerance);

/// Every valid ordered signature with finite entries in [2, max_entry],
/// optionally also taking ∞ for any entry.
std::vector<TriangleSignature> signature_grid(int max_entry, bool include_infinity);

/// Classifies every signature; a signature whose classification throws is
/// reported in `failures` rather than aborting the sweep.
struct GridClassification {
  std::vector<std::array<ClassificationRecord, 3>> records;
  std::vector<std::string> failures;
};
GridClassification classify_grid(const std::vector<TriangleSignature>& sigs,
                                 double tol = kDefaultTolerance,
                                 Execution exec = Execution::parallel);

struct LemmaBAReport {
  bool is_hyperbolic;
  double crossing_height;
  bool at_i;
  double trace_abs;
};

/// BA⁻¹ in Γ(3,q,r), q ≥ 3, r ≥ 4: hyperbolic, meets the imaginary axis at
/// height ≤ 1, with equality iff q = r.
LemmaBAReport check_lemma_BA(const TriangleSignature& sig);

/// Shortest reduced word w of length ≤ max_length with w g w⁻¹ ≡ ±h.
std::optional<GroupWord> conjugacy_witness(const TriangleGroup& group, const MoebiusMap& g,
                                           const MoebiusMap& h, int max_length,
                                           Execution exec = Execution::parallel);

}  // namespace orbigeo
