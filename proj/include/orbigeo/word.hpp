#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "orbigeo/halfplane.hpp"
#include "orbigeo/triangle_group.hpp"

namespace orbigeo {

enum class Letter : std::uint8_t { A, AInv, B, BInv };

inline constexpr Letter kLetters[] = {Letter::A, Letter::AInv, Letter::B, Letter::BInv};

constexpr Letter inverse(Letter l) {
  switch (l) {
    case Letter::A: return Letter::AInv;
    case Letter::AInv: return Letter::A;
    case Letter::B: return Letter::BInv;
    case Letter::BInv: return Letter::B;
  }
  return l;
}

/// 'A', 'a', 'B', 'b' with lower case for inverses.
char to_char(Letter l);
MoebiusMap generator(const TriangleGroup& group, Letter l);

/// Freely reduced word over {A, A⁻¹, B, B⁻¹}. Evaluation is the matrix
/// product of the letters from left to right.
class GroupWord {
 public:
  GroupWord() = default;
  explicit GroupWord(const std::vector<Letter>& letters);
  /// Letters "AaBb"; whitespace is ignored and "1" is the empty word.
  static GroupWord parse(std::string_view text);

  void push_back(Letter l);
  GroupWord inverse() const;
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const std::vector<Letter>& letters() const { return letters_; }

  MoebiusMap evaluate(const TriangleGroup& group) const;
  /// "1" for the empty word.
  std::string to_string() const;

  friend GroupWord operator*(const GroupWord& u, const GroupWord& v);
  friend bool operator==(const GroupWord&, const GroupWord&) = default;

 private:
  std::vector<Letter> letters_;
};

/// Number of reduced words of length at most max_length.
std::size_t reduced_word_count(int max_length);

}  // namespace orbigeo
