#include "orbigeo/kernels.hpp"

#include <algorithm>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace orbigeo {

int worker_count() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

WordTable::WordTable(const TriangleGroup& group, int max_length, Execution exec)
    : max_length_(max_length) {
  if (max_length < 0) throw std::invalid_argument("word length budget must be >= 0");
  const std::size_t total = reduced_word_count(max_length);
  elements_.resize(total);
  parent_.assign(total, -1);
  last_.assign(total, Letter::A);
  layer_end_.reserve(static_cast<std::size_t>(max_length) + 1);

  elements_[0] = MoebiusMap::identity();
  layer_end_.push_back(1);
  if (max_length == 0) return;

  const MoebiusMap gens[4] = {generator(group, Letter::A), generator(group, Letter::AInv),
                              generator(group, Letter::B), generator(group, Letter::BInv)};
  for (int k = 0; k < 4; ++k) {
    elements_[1 + k] = gens[k];
    parent_[1 + k] = 0;
    last_[1 + k] = kLetters[k];
  }
  layer_end_.push_back(5);

  for (int len = 2; len <= max_length; ++len) {
    const std::size_t parent_begin = layer_end_[len - 2];
    const std::size_t parent_end = layer_end_[len - 1];
    const std::size_t begin = parent_end;
    const auto parents = static_cast<std::ptrdiff_t>(parent_end - parent_begin);
    // Each parent has exactly three reduced extensions, in letter order.
    const auto extend = [&](std::ptrdiff_t offset) {
      const std::size_t parent = parent_begin + static_cast<std::size_t>(offset);
      const Letter forbidden = inverse(last_[parent]);
      std::size_t slot = begin + static_cast<std::size_t>(offset) * 3;
      for (int k = 0; k < 4; ++k) {
        if (kLetters[k] == forbidden) continue;
        elements_[slot] = elements_[parent] * gens[k];
        parent_[slot] = static_cast<std::int32_t>(parent);
        last_[slot] = kLetters[k];
        ++slot;
      }
    };
    if (exec == Execution::serial) {
      for (std::ptrdiff_t offset = 0; offset < parents; ++offset) extend(offset);
    } else {
#pragma omp parallel for schedule(static)
      for (std::ptrdiff_t offset = 0; offset < parents; ++offset) extend(offset);
    }
    layer_end_.push_back(begin + static_cast<std::size_t>(parents) * 3);
  }
}

std::size_t WordTable::end_of_length(int length) const {
  if (length < 0) return 0;
  return layer_end_[static_cast<std::size_t>(std::min(length, max_length_))];
}

int WordTable::length(std::size_t i) const {
  const auto it = std::upper_bound(layer_end_.begin(), layer_end_.end(), i);
  return static_cast<int>(it - layer_end_.begin());
}

GroupWord WordTable::word(std::size_t i) const {
  std::vector<Letter> reversed;
  for (auto node = static_cast<std::int32_t>(i); node > 0; node = parent_[static_cast<std::size_t>(node)]) {
    reversed.push_back(last_[static_cast<std::size_t>(node)]);
  }
  return GroupWord(std::vector<Letter>(reversed.rbegin(), reversed.rend()));
}

}  // namespace orbigeo
