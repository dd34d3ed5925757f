#include "orbigeo/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace orbigeo {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kGammaStarTraceTolerance = 1e-8;
constexpr double kOnAxisTolerance = 1e-7;

// A word whose element can project to a figure eight for some signature
// that caps to `sig`.
bool eligible_after_capping(const TriangleSignature& sig, PairWord word) {
  if (sig.p() != Order(2)) return true;
  return word == PairWord::BC && sig.q() >= Order(5);
}

int max_finite_entry(const TriangleSignature& sig) {
  int m = 0;
  for (const Order o : sig.entries()) {
    if (!o.is_infinite()) m = std::max(m, o.value());
  }
  return m;
}

PruningCertificate frontier_certificate(int punctures, int cutoff, double minimum) {
  double bound = std::numeric_limits<double>::infinity();
  for (const auto& sig : enumerate_stratum(punctures, cutoff)) {
    if (max_finite_entry(sig) != cutoff) continue;
    for (const PairWord w : kPairWords) {
      if (eligible_after_capping(sig, w)) bound = std::min(bound, pair_trace(sig, w));
    }
  }
  return {bound, bound > minimum + kTieTolerance};
}

}  // namespace

std::vector<TriangleSignature> enumerate_stratum(int punctures, int cutoff) {
  if (punctures < 0 || punctures > 3) throw std::invalid_argument("puncture count must be 0..3");
  std::vector<TriangleSignature> out;
  for (const auto& sig : signature_grid(cutoff, punctures > 0)) {
    if (sig.puncture_count() == punctures) out.push_back(sig);
  }
  return out;
}

std::optional<ExtremalResult> min_figure8_among(const std::vector<TriangleSignature>& sigs,
                                                int cutoff, Execution exec, double tol) {
  const GridClassification grid = classify_grid(sigs, tol, exec);
  if (!grid.failures.empty()) throw InconsistentClassification(grid.failures.front());

  std::vector<const ClassificationRecord*> figure8;
  for (const auto& triple : grid.records) {
    for (const auto& rec : triple) {
      if (is_figure8(rec.descriptor)) figure8.push_back(&rec);
    }
  }
  if (figure8.empty()) return std::nullopt;
  // Enumeration order breaks ties, so the result does not depend on threads.
  std::stable_sort(figure8.begin(), figure8.end(),
                   [](const auto* x, const auto* y) { return x->trace_abs < y->trace_abs; });

  const auto same_geodesic_class = [](const ClassificationRecord& x, const ClassificationRecord& y) {
    return x.signature == y.signature && x.geodesic_class == y.geodesic_class;
  };
  const ClassificationRecord& best = *figure8.front();
  std::vector<const ClassificationRecord*> minimizers;
  std::optional<ClassificationRecord> runner_up;
  for (const auto* rec : figure8) {
    const bool duplicate = std::any_of(minimizers.begin(), minimizers.end(), [&](const auto* m) {
      return same_geodesic_class(*m, *rec);
    });
    if (rec->trace_abs <= best.trace_abs + kTieTolerance) {
      if (!duplicate) minimizers.push_back(rec);
    }
    if (!runner_up && !same_geodesic_class(best, *rec)) runner_up = *rec;
  }
  return ExtremalResult{best,   minimizers.size(), minimizers.size() == 1, runner_up, cutoff,
                        sigs.size(), std::nullopt};
}

std::optional<ExtremalResult> min_figure8(int punctures, int cutoff, Execution exec, double tol) {
  if (cutoff < 8) throw std::invalid_argument("cutoff must be >= 8");
  auto result = min_figure8_among(enumerate_stratum(punctures, cutoff), cutoff, exec, tol);
  if (result) {
    if (punctures == 3) {
      result->certificate = PruningCertificate{std::numeric_limits<double>::infinity(), true};
    } else {
      result->certificate = frontier_certificate(punctures, cutoff, result->trace_abs());
    }
  }
  return result;
}

std::optional<ExtremalResult> global_min_figure8(int cutoff, Execution exec, double tol) {
  std::vector<ExtremalResult> strata;
  for (int k = 0; k <= 3; ++k) {
    if (auto r = min_figure8(k, cutoff, exec, tol)) strata.push_back(std::move(*r));
  }
  if (strata.empty()) return std::nullopt;
  const auto best_it = std::min_element(strata.begin(), strata.end(), [](const auto& x, const auto& y) {
    return x.trace_abs() < y.trace_abs() - kTieTolerance;
  });
  ExtremalResult best = *best_it;
  best.signatures_examined = 0;
  best.minimizing_geodesics = 0;
  for (const auto& r : strata) {
    best.signatures_examined += r.signatures_examined;
    if (r.trace_abs() <= best_it->trace_abs() + kTieTolerance) {
      best.minimizing_geodesics += r.minimizing_geodesics;
    }
    if (&r != &*best_it &&
        (!best.runner_up || r.trace_abs() < best.runner_up->trace_abs - kTieTolerance)) {
      best.runner_up = r.minimizer;
    }
  }
  best.unique = best.minimizing_geodesics == 1;
  return best;
}

double gamma_star_trace() { return 2.0 * std::cos(2.0 * std::numbers::pi / 7.0) + 1.0; }

double gamma_star_length() {
  return 2.0 * std::acosh(std::cos(2.0 * std::numbers::pi / 7.0) + 0.5);
}

std::optional<GammaStarCandidate> gamma_star_search(int budget, Execution exec) {
  const TriangleGroup group = build_group(TriangleSignature::make(2, 3, 7));
  const WordTable table(group, budget, exec);
  const double target = gamma_star_trace();
  const Complex order_two_fixed{0.0, 1.0};  // A is the half-turn about i

  const auto on_axis = [&](const Geodesic& axis, std::size_t u) {
    const Complex point = table.element(u)(order_two_fixed);
    return hyperbolic_distance(point, nearest_point_on(axis, point)) < kOnAxisTolerance;
  };
  const auto found = find_first_index(
      table.size(),
      [&](std::size_t i) {
        const MoebiusMap& g = table.element(i);
        if (std::abs(std::abs(g.trace()) - target) > kGammaStarTraceTolerance) return false;
        const Geodesic axis = axis_of(g);
        for (std::size_t u = 0; u < table.size(); ++u) {
          if (on_axis(axis, u)) return true;
        }
        return false;
      },
      exec);
  if (!found) return std::nullopt;

  const MoebiusMap& g = table.element(*found);
  const Geodesic axis = axis_of(g);
  for (std::size_t u = 0; u < table.size(); ++u) {
    if (on_axis(axis, u)) {
      const double t = std::abs(g.trace());
      return GammaStarCandidate{table.word(*found), t, translation_length_from_trace(t),
                                table.element(u)(order_two_fixed), table.word(u)};
    }
  }
  return std::nullopt;
}

std::array<Table1Row, 3> reproduce_table1(int cutoff, Execution exec, double tol) {
  const auto row_from = [](const ExtremalResult& r, std::string classification,
                           std::string geodesics) {
    return Table1Row{std::move(classification), std::move(geodesics), r.trace_abs(), r.length(),
                     "O(" + r.minimizer.signature.to_string() + ")",
                     orbifold_area(r.minimizer.signature)};
  };
  const auto shortest = global_min_figure8(cutoff, exec, tol);
  const auto punctured = min_figure8(3, cutoff, exec, tol);
  if (!shortest || !punctured) throw std::logic_error("figure eight search returned no result");
  const TriangleSignature s237 = TriangleSignature::make(2, 3, 7);
  return {
      Table1Row{"Shortest non-simple closed geodesic on a 2-orbifold",
                "Passes through order two orbifold point", gamma_star_trace(),
                gamma_star_length(), "O(" + s237.to_string() + ")", orbifold_area(s237)},
      row_from(*shortest,
               "Shortest figure eight geodesic on a 2-orbifold without order two orbifold points",
               "Figure eight geodesic bounding orbifold points of order three"),
      row_from(*punctured, "Shortest non-simple closed geodesic on a 2-manifold",
               "All three figure eight geodesics"),
  };
}

}  // namespace orbigeo
