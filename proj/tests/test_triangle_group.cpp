#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "orbigeo/triangle_group.hpp"

using namespace orbigeo;

namespace {

constexpr double kPi = std::numbers::pi;

oracle::M2 plain(const MoebiusMap& m) { return {m.a, m.b, m.c, m.d}; }

int raw(Order o) { return o.is_infinite() ? 0 : o.value(); }

std::vector<TriangleSignature> finite_grid(int n) {
  std::vector<TriangleSignature> out;
  for (int p = 2; p <= n; ++p)
    for (int q = p; q <= n; ++q)
      for (int r = q; r <= n; ++r)
        if (q * r + p * r + p * q < p * q * r) out.push_back(TriangleSignature::make(p, q, r));
  return out;
}

}  // namespace

TEST_CASE("Order parsing and arithmetic") {
  CHECK(Order::parse("7").value() == 7);
  CHECK(Order::parse("inf").is_infinite());
  CHECK(Order::parse("infinity").is_infinite());
  CHECK_THROWS_AS(Order::parse("1"), InvalidSignature);
  CHECK_THROWS_AS(Order::parse("x"), InvalidSignature);
  CHECK(Order::infinity().cos_pi_over() == 1.0);
  CHECK(Order::infinity().sin_pi_over() == 0.0);
  CHECK(Order::infinity().reciprocal() == 0.0);
  CHECK(Order(5) < Order::infinity());
  CHECK(Order::infinity().to_string() == "inf");
}

TEST_CASE("signatures are sorted and validated") {
  const auto s = TriangleSignature::make(7, 2, 3);
  CHECK(s.p() == Order(2));
  CHECK(s.q() == Order(3));
  CHECK(s.r() == Order(7));
  CHECK(s.source_index() == std::array<int, 3>{1, 2, 0});
  CHECK(s.to_string() == "2,3,7");
  CHECK(TriangleSignature::parse("inf,3,3").to_string() == "3,3,inf");
  CHECK(TriangleSignature::parse("inf,inf,inf").puncture_count() == 3);
  CHECK_THROWS_AS(TriangleSignature::make(2, 3, 6), InvalidSignature);
  CHECK_THROWS_AS(TriangleSignature::make(3, 3, 3), InvalidSignature);
  CHECK_THROWS_AS(TriangleSignature::make(2, 4, 4), InvalidSignature);
  CHECK_THROWS_AS(TriangleSignature::make(2, 2, 100), InvalidSignature);
  CHECK_THROWS_AS(TriangleSignature::parse("3,4"), InvalidSignature);
  CHECK(TriangleSignature::make(2, 3, 7).is_exceptional());
  CHECK(TriangleSignature::make(2, 4, 5).is_exceptional());
  CHECK_FALSE(TriangleSignature::make(2, 5, 5).is_exceptional());
}

TEST_CASE("lambda") {
  const auto s334 = TriangleSignature::make(3, 3, 4);
  const double l = lambda_of(s334);
  CHECK(std::abs(l - 2.06896) < 1e-4);
  const double sp = std::sin(kPi / 3);
  CHECK(std::abs(l + 1.0 / l - 2.0 * lambda_numerator(s334) / (sp * sp)) < 1e-10);
  CHECK(std::abs(l - oracle::lambda(3, 3, 4)) < 1e-12);

  const auto s237 = TriangleSignature::make(2, 3, 7);
  const double m = lambda_of(s237);
  CHECK(std::abs(m + 1.0 / m - 2.0 * std::cos(kPi / 7) / (1.0 * std::sin(kPi / 3))) < 1e-10);

  const auto s33inf = TriangleSignature::parse("3,3,inf");
  CHECK(lambda_numerator(s33inf) == doctest::Approx(1.25));
  CHECK(std::isfinite(lambda_of(s33inf)));
  CHECK(lambda_of(s33inf) > 1.0);
  CHECK_THROWS_AS(lambda_of(TriangleSignature::parse("2,inf,inf")), LambdaUndefined);

  for (const auto& sig : finite_grid(16)) {
    const double x = lambda_of(sig);
    CHECK(x > 1.0);
    CHECK(std::abs(x - oracle::lambda(raw(sig.p()), raw(sig.q()), raw(sig.r()))) < 1e-9 * x);
  }
}

TEST_CASE("generators match the normalized form") {
  for (const auto& sig : finite_grid(12)) {
    const TriangleGroup g = build_group(sig);
    const auto ref = oracle::generators(raw(sig.p()), raw(sig.q()), raw(sig.r()));
    const auto close = [](const oracle::M2& x, const oracle::M2& y) {
      return std::abs(x.a - y.a) + std::abs(x.b - y.b) + std::abs(x.c - y.c) + std::abs(x.d - y.d) <
             1e-9 * (1.0 + std::abs(y.c));
    };
    CHECK(close(plain(g.A), ref.A));
    CHECK(close(plain(g.B), ref.B));
    CHECK(close(plain(g.C), ref.C));
    CHECK(std::abs(g.C.trace() + 2.0 * std::cos(kPi / raw(sig.r()))) < 1e-9);
    for (const auto* m : {&g.A, &g.B, &g.C}) CHECK(std::abs(m->det() - 1.0) < 1e-10);
  }
}

TEST_CASE("presentation relations") {
  const TriangleGroup g = build_group(TriangleSignature::make(3, 3, 4));
  CHECK(projectively_equal(power(g.A, 3), MoebiusMap::identity(), 1e-8));
  CHECK(projectively_equal(power(g.B, 3), MoebiusMap::identity(), 1e-8));
  CHECK(projectively_equal(power(g.C, 4), MoebiusMap::identity(), 1e-8));
  CHECK(projectively_equal(g.A * g.B * g.C, MoebiusMap::identity(), 1e-12));

  const TriangleGroup g237 = build_group(TriangleSignature::make(2, 3, 7));
  CHECK(std::abs(g237.C.trace() + 2.0 * std::cos(kPi / 7)) < 1e-9);
}

TEST_CASE("the thrice punctured sphere group") {
  const TriangleGroup g = build_group(TriangleSignature::parse("inf,inf,inf"));
  CHECK(g.A.a == 1.0);
  CHECK(g.A.b == 2.0);
  CHECK(g.B.c == -2.0);
  CHECK(std::abs(std::abs(g.C.trace()) - 2.0) < 1e-12);
  CHECK_FALSE(g.lambda);
  CHECK(g.center() == Complex(0.0, 1.0));
  CHECK_THROWS_AS(build_group(TriangleSignature::parse("3,inf,inf")), MatricesUnavailable);
  CHECK_FALSE(matrices_available(TriangleSignature::parse("2,inf,inf")));
  CHECK(matrices_available(TriangleSignature::parse("3,3,inf")));
}

TEST_CASE("fundamental domain") {
  SUBCASE("(3,3,4)") {
    const TriangleGroup g = build_group(TriangleSignature::make(3, 3, 4));
    const FundamentalDomain fd = fundamental_domain(g);
    CHECK(std::abs(fd.angles[0] - kPi / 3) < 1e-8);
    CHECK(std::abs(fd.angles[1] - kPi / 3) < 1e-8);
    CHECK(std::abs(fd.angles[2] - kPi / 4) < 1e-8);
    CHECK(std::abs(fd.top() - Complex(0.0, 1.0)) < 1e-15);
    CHECK(std::abs(fd.bottom() - Complex(0.0, 1.0 / *g.lambda)) < 1e-15);
    CHECK(fd.left().real() < 0.0);
    CHECK(std::abs(fd.right() + std::conj(fd.left())) < 1e-12);
    // C fixes the left vertex.
    CHECK(std::abs(g.C(fd.left()) - fd.left()) < 1e-10);
    for (int k = 0; k < 4; ++k) {
      CHECK(fd.sides[k].residual(fd.vertices[k]) < 1e-10);
      CHECK(fd.sides[k].residual(fd.vertices[(k + 1) % 4]) < 1e-10);
    }
  }
  SUBCASE("(2,3,7) reflections generate A and B") {
    const TriangleGroup g = build_group(TriangleSignature::make(2, 3, 7));
    const FundamentalDomain fd = fundamental_domain(g);
    const auto& s = fd.reflections;
    CHECK(projectively_equal(compose_reflections(s[1], s[0]), g.A, 1e-9));
    CHECK(projectively_equal(compose_reflections(s[0], s[2]), g.B, 1e-9));
  }
  SUBCASE("(3,3,4) product of reflections in opposite sides is BA^-1") {
    const TriangleGroup g = build_group(TriangleSignature::make(3, 3, 4));
    const FundamentalDomain fd = fundamental_domain(g);
    // Side 2 of T* is the mirror image of s₃ across the imaginary axis.
    const MoebiusMap m = compose_reflections(reflection_in(fd.sides[2]), reflection_in(fd.sides[0]));
    CHECK(projectively_equal(m, g.B * g.A.inverse(), 1e-9));
  }
  SUBCASE("(3,3,inf) has an ideal vertex fixed by a parabolic C") {
    const TriangleGroup g = build_group(TriangleSignature::parse("3,3,inf"));
    const FundamentalDomain fd = fundamental_domain(g);
    CHECK(std::abs(fd.left().imag()) < 1e-9);
    CHECK(std::abs(std::abs(g.C.trace()) - 2.0) < 1e-9);
    const BoundaryPoint x = BoundaryPoint::at(fd.left().real());
    CHECK(approx_equal(g.C(x), x, 1e-8));
  }
  SUBCASE("angles over the grid") {
    for (const auto& sig : finite_grid(10)) {
      const FundamentalDomain fd = fundamental_domain(build_group(sig));
      CHECK(std::abs(fd.angles[0] - kPi / raw(sig.p())) < 1e-8);
      CHECK(std::abs(fd.angles[1] - kPi / raw(sig.q())) < 1e-8);
      CHECK(std::abs(fd.angles[2] - kPi / raw(sig.r())) < 1e-8);
    }
  }
}

TEST_CASE("pair traces") {
  const double s2 = 1.0 + std::sqrt(2.0);
  const auto s334 = TriangleSignature::make(3, 3, 4);
  for (const PairWord w : kPairWords) CHECK(std::abs(pair_trace(s334, w) - s2) < 1e-12);
  CHECK(std::abs(pair_trace(TriangleSignature::make(2, 5, 5), PairWord::BC) -
                 4.0 * std::pow(std::cos(kPi / 5), 2)) < 1e-12);
  const auto s3inf = TriangleSignature::parse("inf,inf,inf");
  for (const PairWord w : kPairWords) CHECK(pair_trace(s3inf, w) == doctest::Approx(6.0));

  SUBCASE("closed forms agree with the matrices and with the trace identity") {
    for (const auto& sig : finite_grid(12)) {
      const TriangleGroup g = build_group(sig);
      const auto ref = oracle::pair_traces(raw(sig.p()), raw(sig.q()), raw(sig.r()));
      const MoebiusMap words[3] = {g.B * g.A.inverse(), g.B * g.C.inverse(), g.A * g.C.inverse()};
      for (int k = 0; k < 3; ++k) {
        CHECK(std::abs(pair_trace(sig, kPairWords[k]) - std::abs(ref[k])) < 1e-12);
        CHECK(std::abs(std::abs(words[k].trace()) - pair_trace(sig, kPairWords[k])) < 1e-9);
        CHECK(std::abs(std::abs(g.pair_element(kPairWords[k]).trace()) -
                       std::abs(words[k].trace())) < 1e-12);
      }
      const double identity =
          (g.A.inverse() * g.B).trace() - (g.A.trace() * g.B.trace() - (g.A * g.B).trace());
      CHECK(std::abs(identity) < 1e-10);
    }
  }

  SUBCASE("traces grow with each entry") {
    std::vector<int> entries;
    for (int n = 2; n <= 24; ++n) entries.push_back(n);
    entries.push_back(0);
    const auto order = [](int n) { return n == 0 ? Order::infinity() : Order(n); };
    const auto reciprocal = [](int n) { return n == 0 ? 0.0 : 1.0 / n; };
    std::size_t compared = 0;
    for (std::size_t i = 0; i < entries.size(); ++i)
      for (std::size_t j = i; j < entries.size(); ++j)
        for (std::size_t k = j; k < entries.size(); ++k) {
          const std::size_t idx[3] = {i, j, k};
          const int e[3] = {entries[i], entries[j], entries[k]};
          if (reciprocal(e[0]) + reciprocal(e[1]) + reciprocal(e[2]) >= 1.0 - 1e-12) continue;
          const auto sig = TriangleSignature::make(order(e[0]), order(e[1]), order(e[2]));
          for (int slot = 0; slot < 3; ++slot) {
            // Raise one entry while keeping the triple sorted.
            const std::size_t next = idx[slot] + 1;
            if (next >= entries.size() || (slot < 2 && next > idx[slot + 1])) continue;
            int f[3] = {e[0], e[1], e[2]};
            f[slot] = entries[next];
            const auto bigger = TriangleSignature::make(order(f[0]), order(f[1]), order(f[2]));
            for (const PairWord w : kPairWords) {
              const double t0 = pair_trace(sig, w);
              const double t1 = pair_trace(bigger, w);
              // BA⁻¹ ignores q and AC⁻¹ ignores r when cos(π/p) = 0.
              const bool flat = e[0] == 2 && ((w == PairWord::BA && slot == 1) ||
                                              (w == PairWord::AC && slot == 2));
              if (flat) {
                CHECK(std::abs(t1 - t0) < 1e-12);
              } else {
                CHECK(t1 > t0);
              }
              ++compared;
            }
          }
        }
    CHECK(compared > 1000);
  }
}

TEST_CASE("orbifold area") {
  CHECK(orbifold_area(TriangleSignature::make(2, 3, 7)) == doctest::Approx(kPi / 21).epsilon(1e-12));
  CHECK(orbifold_area(TriangleSignature::make(3, 3, 4)) == doctest::Approx(kPi / 6).epsilon(1e-12));
  CHECK(orbifold_area(TriangleSignature::parse("inf,inf,inf")) == doctest::Approx(2 * kPi));
}

TEST_CASE("validate_signature") {
  const int o237[] = {2, 3, 7};
  const int o236[] = {2, 3, 6};
  const int o33[] = {3, 3};
  const int o1[] = {1};
  CHECK(validate_signature(0, o237, 0, 0));
  CHECK_FALSE(validate_signature(0, o236, 0, 0));
  CHECK(validate_signature(0, o33, 1, 0));
  CHECK(validate_signature(1, {}, 1, 0));
  CHECK_FALSE(validate_signature(0, {}, 2, 0));
  CHECK(validate_signature(2, {}, 0, 0));
  CHECK_FALSE(validate_signature(0, o1, 3, 0));
}
