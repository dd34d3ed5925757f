#include "orbigeo/triangle_group.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <vector>

namespace orbigeo {

namespace {

constexpr double kPi = std::numbers::pi;

std::string lowercase(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_hyperbolic_triple(const std::array<Order, 3>& e) {
  // 1/p + 1/q + 1/r < 1 over the finite entries, in integers.
  std::int64_t num = 0;  // Σ over finite entries of the product of the others
  std::int64_t prod = 1;
  std::vector<std::int64_t> finite;
  for (const Order o : e) {
    if (!o.is_infinite()) finite.push_back(o.value());
  }
  for (const auto v : finite) prod *= v;
  for (std::size_t k = 0; k < finite.size(); ++k) num += prod / finite[k];
  return num < prod;
}

}  // namespace

Order::Order(int n) : n_(n) {
  if (n < 2) throw InvalidSignature("orbifold point order must be an integer >= 2 or inf");
}

Order Order::parse(std::string_view token) {
  token = trim(token);
  const std::string lower = lowercase(token);
  if (lower == "inf" || lower == "infinity" || lower == "∞") return infinity();
  int value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw InvalidSignature("cannot parse order '" + std::string(token) + "'");
  }
  return Order(value);
}

int Order::value() const {
  if (is_infinite()) throw std::logic_error("Order::value on infinite order");
  return n_;
}

double Order::cos_pi_over() const { return is_infinite() ? 1.0 : std::cos(kPi / n_); }
double Order::sin_pi_over() const { return is_infinite() ? 0.0 : std::sin(kPi / n_); }
double Order::reciprocal() const { return is_infinite() ? 0.0 : 1.0 / n_; }
std::string Order::to_string() const { return is_infinite() ? "inf" : std::to_string(n_); }

std::strong_ordering operator<=>(Order x, Order y) {
  if (x.is_infinite() || y.is_infinite()) {
    return static_cast<int>(x.is_infinite()) <=> static_cast<int>(y.is_infinite());
  }
  return x.n_ <=> y.n_;
}

TriangleSignature TriangleSignature::make(Order x, Order y, Order z) {
  std::array<Order, 3> raw{x, y, z};
  std::array<int, 3> source{0, 1, 2};
  std::stable_sort(source.begin(), source.end(),
                   [&](int i, int j) { return raw[i] < raw[j]; });
  const std::array<Order, 3> sorted{raw[source[0]], raw[source[1]], raw[source[2]]};
  if (!is_hyperbolic_triple(sorted)) {
    throw InvalidSignature("signature (" + x.to_string() + "," + y.to_string() + "," +
                           z.to_string() + ") is not hyperbolic: 1/p+1/q+1/r >= 1");
  }
  return TriangleSignature(sorted, source);
}

TriangleSignature TriangleSignature::make(int x, int y, int z) {
  return make(Order(x), Order(y), Order(z));
}

TriangleSignature TriangleSignature::parse(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    parts.push_back(text.substr(start, comma == std::string_view::npos ? comma : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (parts.size() != 3) {
    throw InvalidSignature("signature must have three comma-separated entries, got '" +
                           std::string(text) + "'");
  }
  return make(Order::parse(parts[0]), Order::parse(parts[1]), Order::parse(parts[2]));
}

int TriangleSignature::puncture_count() const {
  return static_cast<int>(std::count_if(entries_.begin(), entries_.end(),
                                        [](Order o) { return o.is_infinite(); }));
}

bool TriangleSignature::is_exceptional() const {
  return p() == Order(2) && (q() == Order(3) || q() == Order(4));
}

std::string TriangleSignature::to_string() const {
  return p().to_string() + "," + q().to_string() + "," + r().to_string();
}

double lambda_numerator(const TriangleSignature& sig) {
  return sig.r().cos_pi_over() + sig.p().cos_pi_over() * sig.q().cos_pi_over();
}

double lambda_of(const TriangleSignature& sig) {
  if (sig.p().is_infinite() || sig.q().is_infinite()) {
    throw LambdaUndefined("lambda is undefined when p or q is infinite");
  }
  const double e = lambda_numerator(sig);
  const double s = sig.p().sin_pi_over() * sig.q().sin_pi_over();
  return (e + std::sqrt(e * e - s * s)) / s;
}

const char* to_string(PairWord word) {
  switch (word) {
    case PairWord::BA: return "BA^-1";
    case PairWord::BC: return "BC^-1";
    case PairWord::AC: return "AC^-1";
  }
  return "?";
}

std::optional<PairWord> parse_pair_word(std::string_view token) {
  const std::string lower = lowercase(trim(token));
  if (lower == "ba") return PairWord::BA;
  if (lower == "bc") return PairWord::BC;
  if (lower == "ac") return PairWord::AC;
  return std::nullopt;
}

Complex TriangleGroup::center() const {
  if (!lambda) return {0.0, 1.0};
  return {0.0, 1.0 / std::sqrt(*lambda)};
}

MoebiusMap TriangleGroup::pair_element(PairWord word) const {
  switch (word) {
    case PairWord::BA: return B * A.inverse();
    case PairWord::BC: return B * C.inverse();
    case PairWord::AC: return A * C.inverse();
  }
  return MoebiusMap::identity();
}

bool matrices_available(const TriangleSignature& sig) {
  return !sig.q().is_infinite() || sig.p().is_infinite();
}

TriangleGroup build_group(const TriangleSignature& sig) {
  if (sig.p().is_infinite()) {
    const MoebiusMap a{1.0, 2.0, 0.0, 1.0};
    const MoebiusMap b{1.0, 0.0, -2.0, 1.0};
    return {sig, std::nullopt, a, b, b.inverse() * a.inverse()};
  }
  if (sig.q().is_infinite()) {
    throw MatricesUnavailable("no generator matrices for signature (" + sig.to_string() + ")");
  }
  const double lambda = lambda_of(sig);
  const double cp = sig.p().cos_pi_over();
  const double sp = sig.p().sin_pi_over();
  const double cq = sig.q().cos_pi_over();
  const double sq = sig.q().sin_pi_over();
  const MoebiusMap a{cp, -sp, sp, cp};
  const MoebiusMap b{cq, -sq / lambda, lambda * sq, cq};
  return {sig, lambda, a, b, b.inverse() * a.inverse()};
}

FundamentalDomain fundamental_domain(const TriangleGroup& group) {
  const auto& sig = group.signature;
  if (!group.lambda) {
    throw MatricesUnavailable("fundamental domain needs finite p and q");
  }
  const double y = 1.0 / *group.lambda;
  const double cot_p = sig.p().cos_pi_over() / sig.p().sin_pi_over();
  const double csc_p = 1.0 / sig.p().sin_pi_over();
  const double cot_q = sig.q().cos_pi_over() / sig.q().sin_pi_over();
  const double csc_q = 1.0 / sig.q().sin_pi_over();

  const Geodesic s1 = Geodesic::vertical(0.0);
  const Geodesic s2 = Geodesic::half_circle(cot_p, csc_p);
  const Geodesic s3 = Geodesic::half_circle(-y * cot_q, y * csc_q);

  // s₂ ∩ s₃; the circles are tangent on ℝ when r = ∞.
  const auto& h2 = s2.as_half_circle();
  const auto& h3 = s3.as_half_circle();
  const double x = (h2.radius * h2.radius - h3.radius * h3.radius - h2.center * h2.center +
                    h3.center * h3.center) /
                   (2.0 * (h3.center - h2.center));
  const double height2 = h2.radius * h2.radius - (x - h2.center) * (x - h2.center);
  const double height = sig.r().is_infinite() ? 0.0 : std::sqrt(std::max(height2, 0.0));
  const Complex left{x, height};
  const Complex right{-x, height};
  const Complex top{0.0, 1.0};
  const Complex bottom{0.0, y};

  FundamentalDomain fd{
      {top, left, bottom, right},
      {s2, s3, Geodesic::half_circle(y * cot_q, y * csc_q), Geodesic::half_circle(-cot_p, csc_p)},
      {s1, s2, s3},
      {reflection_in(s1), reflection_in(s2), reflection_in(s3)},
      {}};

  const auto angle = [](const Geodesic& l1, Complex at, Complex toward1, const Geodesic& l2,
                        Complex toward2) {
    const Complex t1 = l1.tangent_toward(at, toward1);
    const Complex t2 = l2.tangent_toward(at, toward2);
    return std::acos(std::clamp(t1.real() * t2.real() + t1.imag() * t2.imag(), -1.0, 1.0));
  };
  fd.angles = {angle(s1, top, bottom, s2, left), angle(s1, bottom, top, s3, left),
               angle(s2, left, top, s3, bottom)};
  return fd;
}

double pair_trace(const TriangleSignature& sig, PairWord word) {
  const double cp = sig.p().cos_pi_over();
  const double cq = sig.q().cos_pi_over();
  const double cr = sig.r().cos_pi_over();
  switch (word) {
    case PairWord::BA: return 2.0 * (2.0 * cp * cq + cr);
    case PairWord::BC: return 2.0 * (2.0 * cq * cr + cp);
    case PairWord::AC: return 2.0 * (2.0 * cp * cr + cq);
  }
  return 0.0;
}

double orbifold_area(const TriangleSignature& sig) {
  return 2.0 * kPi * (1.0 - sig.p().reciprocal() - sig.q().reciprocal() - sig.r().reciprocal());
}

bool validate_signature(int genus, std::span<const int> orders, int punctures, int boundaries) {
  if (genus < 0 || punctures < 0 || boundaries < 0) return false;
  std::int64_t common = 1;
  for (const int m : orders) {
    if (m < 2) return false;
    common = std::lcm(common, static_cast<std::int64_t>(m));
  }
  // Scaled by lcm(mⱼ) so the comparison with zero is exact.
  std::int64_t total = (2LL * genus - 2 + punctures + boundaries) * common;
  for (const int m : orders) total += common - common / m;
  return total > 0;
}

}  // namespace orbigeo
