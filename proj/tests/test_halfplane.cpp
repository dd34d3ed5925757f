#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "orbigeo/halfplane.hpp"

using namespace orbigeo;

namespace {

constexpr double kPi = std::numbers::pi;

MoebiusMap random_sl2(std::mt19937_64& rng, double spread = 3.0) {
  std::uniform_real_distribution<double> u(-spread, spread);
  for (;;) {
    const double a = u(rng), b = u(rng), c = u(rng);
    if (std::abs(a) < 0.1) continue;
    return {a, b, c, (1.0 + b * c) / a};
  }
}

MoebiusMap random_hyperbolic(std::mt19937_64& rng) {
  for (;;) {
    const MoebiusMap g = random_sl2(rng);
    if (std::abs(g.trace()) > 2.1) return g;
  }
}

// Dot product of unit tangents of two geodesics at a common point.
Complex unit_tangent(const Geodesic& l, Complex z) {
  if (l.is_vertical()) return {0.0, 1.0};
  const Complex radial = z - l.as_half_circle().center;
  return Complex(0.0, 1.0) * radial / std::abs(radial);
}

double tangent_dot(const Geodesic& l1, const Geodesic& l2, Complex z) {
  const Complex t1 = unit_tangent(l1, z);
  const Complex t2 = unit_tangent(l2, z);
  return t1.real() * t2.real() + t1.imag() * t2.imag();
}

}  // namespace

TEST_CASE("classify_isometry recognizes the four types") {
  CHECK(kind_of(classify_isometry(MoebiusMap::identity())) == IsometryKind::identity);
  CHECK(kind_of(classify_isometry(-MoebiusMap::identity())) == IsometryKind::identity);
  CHECK(kind_of(classify_isometry({1, 2, 0, 1})) == IsometryKind::parabolic);

  const double t = std::cos(kPi / 7);
  const MoebiusMap rot{t, -std::sin(kPi / 7), std::sin(kPi / 7), t};
  const auto cls = classify_isometry(rot);
  REQUIRE(kind_of(cls) == IsometryKind::elliptic);
  CHECK(std::get<Elliptic>(cls).order == 7);
  CHECK(std::get<Elliptic>(cls).trace_abs == doctest::Approx(1.80194).epsilon(1e-5));

  const double e = 1.0 + std::sqrt(2.0);
  const double s = std::sqrt(e * e - 4.0);
  const MoebiusMap h{(e + s) / 2.0, 0.0, 0.0, (e - s) / 2.0};
  const auto hc = classify_isometry(h);
  REQUIRE(kind_of(hc) == IsometryKind::hyperbolic);
  CHECK(std::abs(std::get<Hyperbolic>(hc).translation_length - 1.26595) < 1e-5);
  CHECK(std::get<Hyperbolic>(hc).translation_length ==
        doctest::Approx(2.0 * std::acosh(e / 2.0)).epsilon(1e-15));
}

TEST_CASE("elliptic rotation by pi/n has order dividing 2n") {
  for (int n = 2; n <= 30; ++n) {
    const MoebiusMap g{std::cos(kPi / n), -std::sin(kPi / n), std::sin(kPi / n), std::cos(kPi / n)};
    CHECK(projectively_equal(power(g, 2 * n), MoebiusMap::identity(), 1e-8));
    const auto cls = classify_isometry(g);
    REQUIRE(kind_of(cls) == IsometryKind::elliptic);
    CHECK(std::get<Elliptic>(cls).order == n);
  }
}

TEST_CASE("translation length is a conjugacy invariant") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    const MoebiusMap g = random_hyperbolic(rng);
    const MoebiusMap h = random_sl2(rng, 2.0);
    const MoebiusMap conj = h * g * h.inverse();
    const double lg = std::get<Hyperbolic>(classify_isometry(g)).translation_length;
    const auto cc = classify_isometry(conj);
    REQUIRE(kind_of(cc) == IsometryKind::hyperbolic);
    CHECK(std::abs(std::get<Hyperbolic>(cc).translation_length - lg) < 1e-9 * std::max(1.0, lg));
    CHECK(std::abs(conj.det() - 1.0) < 1e-10 * std::max(1.0, std::abs(conj.a * conj.d)));
  }
}

TEST_CASE("projective equality ignores sign") {
  const MoebiusMap m{2, 1, 1, 1};
  CHECK(projectively_equal(m, -m, 1e-12));
  CHECK_FALSE(projectively_equal(m, m.inverse(), 1e-12));
  CHECK(projective_distance(m, -m) == 0.0);
}

TEST_CASE("geodesic construction") {
  CHECK_THROWS_AS(Geodesic::half_circle(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Geodesic::half_circle(0.0, -1.0), std::invalid_argument);
  const Geodesic l = Geodesic::through(BoundaryPoint::at(-1.0), BoundaryPoint::at(3.0));
  CHECK(l.as_half_circle().center == doctest::Approx(1.0));
  CHECK(l.as_half_circle().radius == doctest::Approx(2.0));
  CHECK(Geodesic::through(BoundaryPoint::infinity(), BoundaryPoint::at(2.0)).is_vertical());
  const auto [u, v] = Geodesic::vertical(4.0).endpoints();
  CHECK(u.x == 4.0);
  CHECK(v.infinite);
  const Geodesic pts = Geodesic::through(Complex(-1.0, 1.0), Complex(1.0, 1.0));
  CHECK(pts.as_half_circle().center == doctest::Approx(0.0));
  CHECK(pts.as_half_circle().radius == doctest::Approx(std::sqrt(2.0)));
}

TEST_CASE("axis_of") {
  SUBCASE("diagonal map has the imaginary axis") {
    const MoebiusMap g{3.0, 0.0, 0.0, 1.0 / 3.0};
    const Geodesic axis = axis_of(g);
    REQUIRE(axis.is_vertical());
    CHECK(std::abs(axis.as_vertical().x) < 1e-15);
  }
  SUBCASE("upper triangular map has a vertical at the finite fixed point") {
    const MoebiusMap g{2.0, 3.0, 0.0, 0.5};
    const Geodesic axis = axis_of(g);
    REQUIRE(axis.is_vertical());
    CHECK(axis.as_vertical().x == doctest::Approx(3.0 / (0.5 - 2.0)));
  }
  SUBCASE("endpoints are fixed by random hyperbolic maps") {
    std::mt19937_64 rng(5);
    for (int k = 0; k < 500; ++k) {
      const MoebiusMap g = random_hyperbolic(rng);
      const auto [u, v] = axis_of(g).endpoints();
      for (const BoundaryPoint x : {u, v}) {
        const BoundaryPoint gx = g(x);
        if (x.infinite) {
          CHECK(gx.infinite);
        } else {
          REQUIRE_FALSE(gx.infinite);
          CHECK(std::abs(gx.x - x.x) < 1e-9 * std::max(1.0, std::abs(x.x)));
        }
      }
    }
  }
  SUBCASE("non-hyperbolic maps are rejected") {
    CHECK_THROWS_AS(axis_of(MoebiusMap{1, 1, 0, 1}), NotHyperbolic);
    CHECK_THROWS_AS(axis_of(MoebiusMap{0, -1, 1, 0}), NotHyperbolic);
  }
}

TEST_CASE("imaginary_axis_crossing") {
  CHECK(imaginary_axis_crossing(MoebiusMap{2, 1, 1, 1}) == doctest::Approx(1.0));
  CHECK_THROWS_AS(imaginary_axis_crossing(MoebiusMap{3, -1, 1, 0}), NoCrossing);
  CHECK_THROWS_AS(imaginary_axis_crossing(MoebiusMap{1, 1, 0, 1}), NotHyperbolic);

  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> pos(0.05, 4.0);
  int checked = 0;
  while (checked < 500) {
    const double a = pos(rng), b = pos(rng), c = pos(rng);
    const MoebiusMap g{a, b, c, (1.0 + b * c) / a};
    if (std::abs(g.trace()) <= 2.0 + 1e-6) continue;
    const double y = imaginary_axis_crossing(g);
    // Geometric route: fixed points from the quadratic, then the height
    // where that circle meets the imaginary axis.
    const auto [u, v] = oracle::fixed_points({g.a, g.b, g.c, g.d});
    const double center = (u.x + v.x) / 2.0;
    const double radius = std::abs(v.x - u.x) / 2.0;
    const double geometric = std::sqrt((radius - center) * (radius + center));
    CHECK(std::abs(y - geometric) < 1e-9 * std::max(1.0, y));
    const auto hit = intersect_geodesics(axis_of(g), Geodesic::vertical(0.0));
    REQUIRE(hit);
    CHECK(std::abs(hit->point.imag() - y) < 1e-9 * std::max(1.0, y));
    CHECK(std::abs(hit->point.real()) < 1e-9 * std::max(1.0, y));
    ++checked;
  }
}

TEST_CASE("reflections") {
  const ReflectionMap r0 = reflection_in(Geodesic::vertical(0.0));
  CHECK(std::abs(r0(Complex(1.5, 2.0)) - Complex(-1.5, 2.0)) < 1e-15);
  const ReflectionMap unit = reflection_in(Geodesic::half_circle(0.0, 1.0));
  const Complex z(0.3, 0.7);
  CHECK(std::abs(unit(z) - 1.0 / std::conj(z)) < 1e-15);

  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::uniform_real_distribution<double> r(0.2, 3.0);
  for (int k = 0; k < 100; ++k) {
    const Geodesic l = k % 5 == 0 ? Geodesic::vertical(u(rng)) : Geodesic::half_circle(u(rng), r(rng));
    const ReflectionMap s = reflection_in(l);
    CHECK(std::abs(s.det() + 1.0) < 1e-10);
    CHECK(projectively_equal(compose_reflections(s, s), MoebiusMap::identity(), 1e-10));
    for (int j = 0; j < 5; ++j) {
      const Complex w(u(rng), r(rng));
      CHECK(std::abs(s(s(w)) - w) < 1e-10 * std::max(1.0, std::abs(w)));
    }
    for (const double t : {0.2, 1.0, 2.5}) {
      Complex on;
      if (l.is_vertical()) {
        on = Complex(l.as_vertical().x, t);
      } else {
        const double angle = t;  // in (0, π)
        on = Complex(l.as_half_circle().center + l.as_half_circle().radius * std::cos(angle),
                     l.as_half_circle().radius * std::sin(angle));
      }
      CHECK(std::abs(s(on) - on) < 1e-10);
    }
  }
}

TEST_CASE("compose_reflections") {
  const ReflectionMap r = reflection_in(Geodesic::half_circle(1.0, 2.0));
  CHECK(kind_of(classify_isometry(compose_reflections(r, r))) == IsometryKind::identity);
  const MoebiusMap shift =
      compose_reflections(reflection_in(Geodesic::vertical(1.0)), reflection_in(Geodesic::vertical(0.0)));
  CHECK(projectively_equal(shift, MoebiusMap{1, 2, 0, 1}, 1e-12));
  CHECK(kind_of(classify_isometry(shift)) == IsometryKind::parabolic);
}

TEST_CASE("common_orthogonal") {
  SUBCASE("two unit circles at plus and minus three") {
    const Geodesic l1 = Geodesic::half_circle(-3.0, 1.0);
    const Geodesic l2 = Geodesic::half_circle(3.0, 1.0);
    const Geodesic m = common_orthogonal(l1, l2);
    REQUIRE_FALSE(m.is_vertical());
    // Orthogonality of circles: |c₁ − c|² = ρ₁² + ρ².
    const auto& h = m.as_half_circle();
    CHECK(std::abs((h.center + 3.0) * (h.center + 3.0) - 1.0 - h.radius * h.radius) < 1e-9);
    CHECK(std::abs((h.center - 3.0) * (h.center - 3.0) - 1.0 - h.radius * h.radius) < 1e-9);
    CHECK(std::abs(h.center) < 1e-12);
    CHECK(h.radius == doctest::Approx(std::sqrt(8.0)).epsilon(1e-12));
  }
  SUBCASE("degenerate inputs") {
    const Geodesic l = Geodesic::half_circle(0.0, 1.0);
    CHECK_THROWS_AS(common_orthogonal(l, l), NotDisjoint);
    CHECK_THROWS_AS(common_orthogonal(l, Geodesic::half_circle(0.5, 1.0)), NotDisjoint);
    CHECK_THROWS_AS(common_orthogonal(l, Geodesic::half_circle(2.0, 1.0)), NotDisjoint);
    CHECK_THROWS_AS(common_orthogonal(Geodesic::vertical(-2.0), Geodesic::vertical(2.0)), NotDisjoint);
  }
  SUBCASE("agrees with the axis of the product of the reflections") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    std::uniform_real_distribution<double> r(0.1, 2.0);
    int disjoint = 0;
    for (int k = 0; k < 400; ++k) {
      const Geodesic l1 = k % 7 == 0 ? Geodesic::vertical(u(rng)) : Geodesic::half_circle(u(rng), r(rng));
      const Geodesic l2 = Geodesic::half_circle(u(rng), r(rng));
      const MoebiusMap g = compose_reflections(reflection_in(l1), reflection_in(l2));
      CHECK(std::abs(g.det() - 1.0) < 1e-10);
      const bool hyperbolic = kind_of(classify_isometry(g)) == IsometryKind::hyperbolic;
      std::optional<Geodesic> m;
      try {
        m = common_orthogonal(l1, l2);
      } catch (const NotDisjoint&) {
      }
      CHECK(hyperbolic == m.has_value());
      if (!m) continue;
      ++disjoint;
      CHECK(same_geodesic(*m, axis_of(g), 1e-8));
      for (const Geodesic& l : {l1, l2}) {
        const auto foot = intersect_geodesics(*m, l);
        REQUIRE(foot);
        CHECK(std::abs(tangent_dot(*m, l, foot->point)) < 1e-9);
      }
    }
    CHECK(disjoint > 50);
  }
}

TEST_CASE("intersect_geodesics") {
  const auto a = intersect_geodesics(Geodesic::vertical(0.0), Geodesic::half_circle(0.0, 1.0));
  REQUIRE(a);
  CHECK(std::abs(a->point - Complex(0.0, 1.0)) < 1e-15);
  CHECK(a->transverse);
  CHECK(a->angle == doctest::Approx(kPi / 2));
  CHECK_FALSE(intersect_geodesics(Geodesic::vertical(0.0), Geodesic::vertical(1.0)));
  const auto b = intersect_geodesics(Geodesic::half_circle(0.0, 2.0), Geodesic::half_circle(1.0, 2.0));
  REQUIRE(b);
  // Subtracting the two circle equations gives x = 1/2.
  CHECK(std::abs(b->point - Complex(0.5, std::sqrt(4.0 - 0.25))) < 1e-12);
  CHECK_FALSE(intersect_geodesics(Geodesic::half_circle(0.0, 1.0), Geodesic::half_circle(5.0, 1.0)));
  CHECK_FALSE(intersect_geodesics(Geodesic::half_circle(0.0, 1.0), Geodesic::half_circle(2.0, 1.0)));
}

TEST_CASE("nearest point and distance") {
  const Geodesic axis = Geodesic::vertical(0.0);
  const Complex w(3.0, 4.0);
  const Complex n = nearest_point_on(axis, w);
  CHECK(std::abs(n - Complex(0.0, 5.0)) < 1e-12);
  CHECK(hyperbolic_distance(Complex(0, 1), Complex(0, std::exp(2.0))) == doctest::Approx(2.0));
  const Geodesic circle = Geodesic::half_circle(1.0, 2.0);
  const MoebiusMap s = standard_position(circle);
  CHECK(std::abs(s(Complex(1.0, 2.0)).real()) < 1e-12);
  CHECK(std::abs(s(std::complex<double>(-1.0, 1e-12)) ) < 1e-9);
}
