#include "orbigeo/classifier.hpp"

#include <cmath>
#include <numbers>

namespace orbigeo {

namespace {

constexpr double kTraceAgreement = 1e-9;
constexpr double kWitnessTolerance = 1e-8;

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

int geodesic_class_of(const TriangleSignature& sig, PairWord word) {
  if (sig.p() == Order(3)) {
    if (word != PairWord::BC) return 0;  // BA⁻¹ ∼ AC⁻¹
    return sig.q() == Order(3) ? 0 : 1;  // BC⁻¹ ∼ (BA⁻¹)⁻¹ when q = 3
  }
  return static_cast<int>(word);
}

// Checks that a measured |trace| is compatible with the table's verdict and
// returns the isometry class carrying the table's data.
IsometryClass reconcile(const ProjectionDescriptor& descriptor, double trace_abs, double tol,
                        const TriangleSignature& sig, PairWord word, const char* source) {
  const auto fail = [&](const std::string& why) {
    throw InconsistentClassification(std::string(source) + " for " + to_string(word) + " in (" +
                                     sig.to_string() + "): " + why);
  };
  switch (expected_kind(descriptor)) {
    case IsometryKind::elliptic: {
      const Order order = std::get<EllipticPoint>(descriptor).order;
      if (trace_abs > 2.0 + tol) fail("table says elliptic but |trace| > 2");
      if (std::abs(trace_abs - 2.0 * order.cos_pi_over()) > kTraceAgreement) {
        fail("|trace| does not match 2cos(pi/" + order.to_string() + ")");
      }
      return Elliptic{order.value(), trace_abs};
    }
    case IsometryKind::parabolic:
      if (std::abs(trace_abs - 2.0) > tol) fail("table says parabolic but |trace| != 2");
      return Parabolic{trace_abs};
    case IsometryKind::hyperbolic:
      if (trace_abs <= 2.0 + tol) fail("table says hyperbolic but |trace| <= 2");
      return Hyperbolic{trace_abs, translation_length_from_trace(trace_abs)};
    case IsometryKind::identity:
      break;
  }
  fail("table produced no isometry type");
  return Identity{};
}

ClassificationRecord classify_with(const TriangleSignature& sig, PairWord word, double tol,
                                   const std::optional<TriangleGroup>& group) {
  const ProjectionDescriptor descriptor = case_table(sig, word);
  const double trace_abs = pair_trace(sig, word);
  IsometryClass isometry = reconcile(descriptor, trace_abs, tol, sig, word, "closed form");

  std::optional<double> matrix_trace;
  if (group) {
    const MoebiusMap g = group->pair_element(word);
    matrix_trace = std::abs(g.trace());
    if (std::abs(*matrix_trace - trace_abs) > kTraceAgreement * std::max(1.0, trace_abs)) {
      throw InconsistentClassification("matrix and closed-form traces disagree for " +
                                       std::string(to_string(word)) + " in (" + sig.to_string() +
                                       ")");
    }
    const IsometryClass numeric = classify_isometry(g, tol);
    // Elliptic elements of huge order can read as parabolic; the table wins there.
    const bool compatible = kind_of(numeric) == kind_of(isometry) ||
                            (kind_of(isometry) == IsometryKind::elliptic &&
                             kind_of(numeric) == IsometryKind::parabolic);
    if (!compatible) {
      throw InconsistentClassification("matrix product of " + std::string(to_string(word)) +
                                       " in (" + sig.to_string() + ") is " +
                                       orbigeo::to_string(kind_of(numeric)));
    }
    reconcile(descriptor, *matrix_trace, tol, sig, word, "matrix product");
  }

  std::optional<double> length;
  if (const auto* h = std::get_if<Hyperbolic>(&isometry)) length = h->translation_length;

  return {sig,
          word,
          isometry,
          descriptor,
          trace_abs,
          length,
          matrix_trace,
          geodesic_class_of(sig, word),
          sig.p() == Order(3) && sig.q() == Order(3) && word == PairWord::BC};
}

}  // namespace

std::string describe(const ProjectionDescriptor& descriptor) {
  return std::visit(
      Overloaded{
          [](const EllipticPoint& e) {
            return e.order.is_infinite() ? std::string("puncture")
                                         : "cone point of order " + e.order.to_string();
          },
          [](const Figure8& f) {
            return "figure eight bounding " + f.first.to_string() + " and " + f.second.to_string();
          },
          [](const ThroughConePoint3&) { return std::string("loop through the order-3 point"); },
          [](const BackAndForthPath&) {
            return std::string("path from the order-2 point to the order-4 point and back");
          }},
      descriptor);
}

bool is_figure8(const ProjectionDescriptor& descriptor) {
  return std::holds_alternative<Figure8>(descriptor);
}

IsometryKind expected_kind(const ProjectionDescriptor& descriptor) {
  if (const auto* e = std::get_if<EllipticPoint>(&descriptor)) {
    return e->order.is_infinite() ? IsometryKind::parabolic : IsometryKind::elliptic;
  }
  return IsometryKind::hyperbolic;
}

ProjectionDescriptor case_table(const TriangleSignature& sig, PairWord word) {
  const Order p = sig.p();
  const Order q = sig.q();
  const Order r = sig.r();
  if (p == Order(2)) {
    switch (word) {
      case PairWord::BA: return EllipticPoint{r};
      case PairWord::AC: return EllipticPoint{q};
      case PairWord::BC:
        if (q == Order(3)) return EllipticPoint{r};
        if (q == Order(4)) return BackAndForthPath{};
        return Figure8{q, r};
    }
  }
  if (p == Order(3)) {
    switch (word) {
      case PairWord::BA:
      case PairWord::AC:
        if (q == r) return ThroughConePoint3{};
        return Figure8{p, q};
      case PairWord::BC:
        if (q == Order(3)) return Figure8{p, q};
        return Figure8{q, r};
    }
  }
  switch (word) {
    case PairWord::BA: return Figure8{p, q};
    case PairWord::BC: return Figure8{q, r};
    case PairWord::AC: return Figure8{p, r};
  }
  throw std::logic_error("case_table: unreachable");
}

ClassificationRecord classify_pair_element(const TriangleSignature& sig, PairWord word,
                                           double tol) {
  std::optional<TriangleGroup> group;
  if (matrices_available(sig)) group = build_group(sig);
  return classify_with(sig, word, tol, group);
}

std::array<ClassificationRecord, 3> classify_signature(const TriangleSignature& sig, double tol) {
  std::optional<TriangleGroup> group;
  if (matrices_available(sig)) group = build_group(sig);
  return {classify_with(sig, PairWord::BA, tol, group), classify_with(sig, PairWord::BC, tol, group),
          classify_with(sig, PairWord::AC, tol, group)};
}

std::vector<TriangleSignature> signature_grid(int max_entry, bool include_infinity) {
  std::vector<Order> values;
  for (int n = 2; n <= max_entry; ++n) values.emplace_back(n);
  if (include_infinity) values.push_back(Order::infinity());
  std::vector<TriangleSignature> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i; j < values.size(); ++j) {
      for (std::size_t k = j; k < values.size(); ++k) {
        try {
          out.push_back(TriangleSignature::make(values[i], values[j], values[k]));
        } catch (const InvalidSignature&) {
        }
      }
    }
  }
  return out;
}

GridClassification classify_grid(const std::vector<TriangleSignature>& sigs, double tol,
                                 Execution exec) {
  struct Outcome {
    std::optional<std::array<ClassificationRecord, 3>> records;
    std::string error;
  };
  const auto outcomes = map_indices<Outcome>(
      sigs.size(),
      [&](std::size_t i) {
        Outcome o;
        try {
          o.records = classify_signature(sigs[i], tol);
        } catch (const std::exception& e) {
          o.error = e.what();
        }
        return o;
      },
      exec);
  GridClassification result;
  for (const auto& o : outcomes) {
    if (o.records) {
      result.records.push_back(*o.records);
    } else {
      result.failures.push_back(o.error);
    }
  }
  return result;
}

LemmaBAReport check_lemma_BA(const TriangleSignature& sig) {
  if (sig.p() != Order(3) || sig.r() < Order(4)) {
    throw std::invalid_argument("check_lemma_BA needs a signature (3,q,r) with r >= 4");
  }
  const TriangleGroup group = build_group(sig);
  const MoebiusMap g = group.pair_element(PairWord::BA);
  const bool hyperbolic = kind_of(classify_isometry(g)) == IsometryKind::hyperbolic;
  const double height = imaginary_axis_crossing(g);
  return {hyperbolic, height, std::abs(height - 1.0) < 1e-9, std::abs(g.trace())};
}

std::optional<GroupWord> conjugacy_witness(const TriangleGroup& group, const MoebiusMap& g,
                                           const MoebiusMap& h, int max_length, Execution exec) {
  const WordTable table(group, max_length, exec);
  const auto found = find_first_index(
      table.size(),
      [&](std::size_t i) {
        const MoebiusMap& w = table.element(i);
        return projectively_equal(w * g * w.inverse(), h, kWitnessTolerance);
      },
      exec);
  if (!found) return std::nullopt;
  return table.word(*found);
}

}  // namespace orbigeo
