#pragma once

#include <array>
#include <compare>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "orbigeo/halfplane.hpp"

namespace orbigeo {

/// Invalid or non-hyperbolic signature.
class InvalidSignature : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The normalized generators are not defined for this signature.
class MatricesUnavailable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// λ is only defined when p and q are finite.
class LambdaUndefined : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Order of a singular point: an integer ≥ 2, or ∞ for a puncture.
class Order {
 public:
  explicit Order(int n);
  static constexpr Order infinity() { return Order(); }
  static Order parse(std::string_view token);

  bool is_infinite() const { return n_ == 0; }
  int value() const;
  double cos_pi_over() const;
  double sin_pi_over() const;
  double reciprocal() const;
  std::string to_string() const;

  friend bool operator==(Order, Order) = default;
  friend std::strong_ordering operator<=>(Order x, Order y);

 private:
  constexpr Order() = default;
  int n_ = 0;  // 0 encodes ∞
};

/// (p, q, r) with 2 ≤ p ≤ q ≤ r ≤ ∞ and 1/p + 1/q + 1/r < 1.
class TriangleSignature {
 public:
  /// Sorts the entries ascending and validates; the permutation is recorded.
  static TriangleSignature make(Order x, Order y, Order z);
  static TriangleSignature make(int x, int y, int z);
  /// "p,q,r" with "inf" for ∞.
  static TriangleSignature parse(std::string_view text);

  Order p() const { return entries_[0]; }
  Order q() const { return entries_[1]; }
  Order r() const { return entries_[2]; }
  const std::array<Order, 3>& entries() const { return entries_; }
  /// source_index()[k] is the argument position of sorted entry k.
  const std::array<int, 3>& source_index() const { return source_; }

  int puncture_count() const;
  /// Of the form (2,3,r) or (2,4,r).
  bool is_exceptional() const;
  std::string to_string() const;

  friend bool operator==(const TriangleSignature& s, const TriangleSignature& t) {
    return s.entries_ == t.entries_;
  }

 private:
  TriangleSignature(std::array<Order, 3> entries, std::array<int, 3> source)
      : entries_(entries), source_(source) {}
  std::array<Order, 3> entries_;
  std::array<int, 3> source_;
};

/// E = cos(π/r) + cos(π/p)cos(π/q).
double lambda_numerator(const TriangleSignature& sig);
/// λ > 1 with λ + λ⁻¹ = 2E / (sin(π/p) sin(π/q)).
double lambda_of(const TriangleSignature& sig);

/// The three distinguished elements BA⁻¹, BC⁻¹, AC⁻¹.
enum class PairWord { BA, BC, AC };
inline constexpr std::array<PairWord, 3> kPairWords{PairWord::BA, PairWord::BC, PairWord::AC};

const char* to_string(PairWord word);
/// Accepts "ba", "bc", "ac" (any case).
std::optional<PairWord> parse_pair_word(std::string_view token);

struct TriangleGroup {
  TriangleSignature signature;
  std::optional<double> lambda;  // absent for (∞,∞,∞)
  MoebiusMap A;
  MoebiusMap B;
  MoebiusMap C;  // B⁻¹A⁻¹

  /// Interior reference point: i·λ^(−1/2), or i for (∞,∞,∞).
  Complex center() const;
  MoebiusMap pair_element(PairWord word) const;
};

/// Throws MatricesUnavailable for (p,∞,∞) with p finite.
TriangleGroup build_group(const TriangleSignature& sig);
bool matrices_available(const TriangleSignature& sig);

/// Quadrilateral T* = T ∪ σ₁(T). T has vertices i (angle π/p),
/// λ⁻¹i (angle π/q) and the C-fixed vertex left of the imaginary axis
/// (angle π/r, ideal when r = ∞).
struct FundamentalDomain {
  /// T* corners in boundary order: i, left vertex, λ⁻¹i, right vertex.
  std::array<Complex, 4> vertices;
  /// sides[k] joins vertices[k] and vertices[(k + 1) % 4].
  std::array<Geodesic, 4> sides;
  /// Carriers of the sides of T: s₁ on the imaginary axis, s₂ through i,
  /// s₃ through λ⁻¹i.
  std::array<Geodesic, 3> mirrors;
  std::array<ReflectionMap, 3> reflections;
  /// Interior angles of T at i, λ⁻¹i and the left vertex.
  std::array<double, 3> angles;

  Complex top() const { return vertices[0]; }
  Complex left() const { return vertices[1]; }
  Complex bottom() const { return vertices[2]; }
  Complex right() const { return vertices[3]; }
};

FundamentalDomain fundamental_domain(const TriangleGroup& group);

/// Closed-form |trace| of a pair element, total over all signatures.
double pair_trace(const TriangleSignature& sig, PairWord word);

/// 2π(1 − 1/p − 1/q − 1/r).
double orbifold_area(const TriangleSignature& sig);

/// Admissibility of a Fuchsian signature (g : m₁,…,m_c ; n ; b):
/// 2g − 2 + n + b + Σ(1 − 1/mⱼ) > 0, evaluated exactly.
bool validate_signature(int genus, std::span<const int> orders, int punctures, int boundaries);

}  // namespace orbigeo
