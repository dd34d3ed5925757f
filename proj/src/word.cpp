#include "orbigeo/word.hpp"

#include <cctype>
#include <stdexcept>

namespace orbigeo {

char to_char(Letter l) {
  switch (l) {
    case Letter::A: return 'A';
    case Letter::AInv: return 'a';
    case Letter::B: return 'B';
    case Letter::BInv: return 'b';
  }
  return '?';
}

MoebiusMap generator(const TriangleGroup& group, Letter l) {
  switch (l) {
    case Letter::A: return group.A;
    case Letter::AInv: return group.A.inverse();
    case Letter::B: return group.B;
    case Letter::BInv: return group.B.inverse();
  }
  return MoebiusMap::identity();
}

GroupWord::GroupWord(const std::vector<Letter>& letters) {
  for (const Letter l : letters) push_back(l);
}

GroupWord GroupWord::parse(std::string_view text) {
  GroupWord w;
  for (const char ch : text) {
    switch (ch) {
      case 'A': w.push_back(Letter::A); break;
      case 'a': w.push_back(Letter::AInv); break;
      case 'B': w.push_back(Letter::B); break;
      case 'b': w.push_back(Letter::BInv); break;
      case '1': break;
      default:
        if (std::isspace(static_cast<unsigned char>(ch))) break;
        throw std::invalid_argument(std::string("invalid letter '") + ch +
                                    "' in group word (use A, a, B, b)");
    }
  }
  return w;
}

void GroupWord::push_back(Letter l) {
  if (!letters_.empty() && letters_.back() == orbigeo::inverse(l)) {
    letters_.pop_back();
  } else {
    letters_.push_back(l);
  }
}

GroupWord GroupWord::inverse() const {
  GroupWord w;
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.push_back(orbigeo::inverse(*it));
  return w;
}

MoebiusMap GroupWord::evaluate(const TriangleGroup& group) const {
  MoebiusMap m = MoebiusMap::identity();
  for (const Letter l : letters_) m = m * generator(group, l);
  return m;
}

std::string GroupWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  s.reserve(letters_.size());
  for (const Letter l : letters_) s.push_back(to_char(l));
  return s;
}

GroupWord operator*(const GroupWord& u, const GroupWord& v) {
  GroupWord w = u;
  for (const Letter l : v.letters_) w.push_back(l);
  return w;
}

std::size_t reduced_word_count(int max_length) {
  if (max_length <= 0) return 1;
  std::size_t total = 1;
  std::size_t layer = 4;
  for (int k = 1; k <= max_length; ++k) {
    total += layer;
    layer *= 3;
  }
  return total;
}

}  // namespace orbigeo
