#pragma once

// Data-parallel loops over group words and signatures. Every kernel has a
// plain serial path that is kept as the reference for the OpenMP path; both
// produce identical, index-ordered output.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "orbigeo/halfplane.hpp"
#include "orbigeo/triangle_group.hpp"
#include "orbigeo/word.hpp"

namespace orbigeo {

enum class Execution { serial, parallel };

/// Number of OpenMP threads, or 1 when built without OpenMP.
int worker_count();

/// Every reduced word of length ≤ max_length in shortlex-by-layer order,
/// together with its matrix. Index 0 is the empty word.
class WordTable {
 public:
  WordTable(const TriangleGroup& group, int max_length, Execution exec = Execution::parallel);

  std::size_t size() const { return elements_.size(); }
  int max_length() const { return max_length_; }
  /// One past the last index with word length ≤ length.
  std::size_t end_of_length(int length) const;

  const MoebiusMap& element(std::size_t i) const { return elements_[i]; }
  int length(std::size_t i) const;
  GroupWord word(std::size_t i) const;

 private:
  int max_length_;
  std::vector<MoebiusMap> elements_;
  std::vector<std::int32_t> parent_;
  std::vector<Letter> last_;
  std::vector<std::size_t> layer_end_;
};

/// Applies fn to 0..count−1 and collects the results in index order.
template <class Result, class Fn>
std::vector<Result> map_indices(std::size_t count, Fn&& fn, Execution exec) {
  std::vector<Result> out(count);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 256)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  return out;
}

/// Smallest index in [0, count) satisfying pred.
template <class Pred>
std::optional<std::size_t> find_first_index(std::size_t count, Pred&& pred, Execution exec) {
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < count; ++i) {
      if (pred(i)) return i;
    }
    return std::nullopt;
  }
  std::size_t best = count;
  const auto n = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(dynamic, 256) reduction(min : best)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (idx < best && pred(idx)) best = idx;
  }
  if (best == count) return std::nullopt;
  return best;
}

}  // namespace orbigeo
