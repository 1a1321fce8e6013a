#include "doctest.h"
#include "hermform/random.hpp"

using namespace hermform;

namespace {

Poly P(std::initializer_list<long long> c) { return Poly::from_ints(c); }

PolyMatrix M2(const Poly& a, const Poly& b, const Poly& c, const Poly& d) { return PolyMatrix(2, 2, {a, b, c, d}); }

Poly one() { return Poly(Elem::one()); }

// Random gcd-1, nonsingular 2x2 epsilon-form with entries of degree <= deg.
PolyMatrix random_reduced_2x2(std::mt19937_64& rng, FormKind kind, int deg) {
  for (;;) {
    Poly a = random_poly(rng, deg), b = random_poly(rng, deg), c = random_poly(rng, deg);
    if (kind == FormKind::Hermitian) {
      a = even_part(a);
      c = even_part(c);
    } else {
      a = odd_part(a);
      c = odd_part(c);
    }
    const Poly lower = kind == FormKind::Hermitian ? star(b) : -star(b);
    PolyMatrix m = M2(a, b, lower, c);
    if (entry_gcd(m).is_one() && !determinant(m).is_zero()) return m;
  }
}

}  // namespace

TEST_CASE("isotropic vectors") {
  Tower tw(5);
  TowerScope scope(tw);
  const Vec e = isotropic_vector(M2(Poly(), one(), one(), Poly::t() * Poly::t()), FormKind::Hermitian);
  CHECK(e == Vec{one(), Poly()});

  const PolyMatrix h = M2(one(), Poly::t(), -Poly::t(), one());
  // [[1, t], [-t, 1]] is hermitian: (t)* = -t.
  REQUIRE(has_kind(h, FormKind::Hermitian));
  const Vec v = isotropic_vector(h, FormKind::Hermitian);
  CHECK(form_value(h, v, v).is_zero());
  CHECK(gcd(v).is_one());

  const PolyMatrix s = M2(Poly::t(), one(), -one(), Poly::t());
  REQUIRE(has_kind(s, FormKind::Skew));
  const Vec w = isotropic_vector(s, FormKind::Skew);
  CHECK(form_value(s, w, w).is_zero());
  CHECK(gcd(w).is_one());

  CHECK_THROWS_AS(isotropic_vector(PolyMatrix(1, 1, {one()}), FormKind::Hermitian), DomainError);
}

TEST_CASE("her2 examples") {
  Tower tw(5);
  TowerScope scope(tw);
  Certificate c = her2_diagonalize(M2(Poly(), one(), one(), Poly()));
  CHECK(c.B == PolyMatrix::diagonal({one(), P({-1})}));
  const PolyMatrix a = M2(Poly(), P({-1, 1}), P({-1, -1}), P({0, 0, 1}));
  c = her2_diagonalize(a);
  CHECK(c.B == PolyMatrix::diagonal({one(), P({-1, 0, 1})}));
  CHECK(c.verifies(a));
  const PolyMatrix d = PolyMatrix::diagonal({one(), P({3})});
  c = her2_diagonalize(d);
  CHECK(c.B == d);
  CHECK_THROWS_AS(her2_diagonalize(PolyMatrix::diagonal({Poly::t(), Poly::t()})), DomainError);
  CHECK_THROWS_AS(her2_diagonalize(PolyMatrix::diagonal({one(), Poly()})), DomainError);
}

TEST_CASE("her2 property") {
  for (std::uint32_t p : {3u, 5u, 7u}) {
    Tower tw(p);
    TowerScope scope(tw);
    std::mt19937_64 rng(p);
    for (int i = 0; i < 40; ++i) {
      const PolyMatrix a = random_reduced_2x2(rng, FormKind::Hermitian, 4);
      const Certificate c = her2_diagonalize(a);
      CHECK(c.B == PolyMatrix::diagonal({one(), determinant(a)}));
      CHECK(c.verifies(a));
    }
  }
}

TEST_CASE("sk2 examples and property") {
  Tower tw(5);
  TowerScope scope(tw);
  const PolyMatrix a = M2(Poly(), one(), -one(), Poly::t());
  Certificate c = sk2_zero_diagonal(a);
  CHECK(c.B(0, 0).is_zero());
  CHECK(c.B(1, 1).is_zero());
  CHECK(c.verifies(a));
  const PolyMatrix z = M2(Poly(), P({-1, 1}), P({1, 1}), Poly());
  c = sk2_zero_diagonal(z);
  CHECK(c.S == PolyMatrix::identity(2));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    const PolyMatrix s = random_reduced_2x2(rng, FormKind::Skew, 8);
    const Certificate cs = sk2_zero_diagonal(s);
    CHECK(cs.B(0, 0).is_zero());
    CHECK(cs.B(1, 1).is_zero());
    CHECK(cs.verifies(s));
    const Poly d = exact_div(determinant(cs.B), determinant(s));
    CHECK(d.degree() == 0);
  }
}

TEST_CASE("represent one and split one") {
  Tower tw(5);
  TowerScope scope(tw);
  CHECK(represent_one(PolyMatrix(1, 1, {one()})) == Vec{one()});
  const PolyMatrix h = M2(Poly(), one(), one(), Poly());
  const Vec v = represent_one(h);
  CHECK(form_value(h, v, v).is_one());
  const Vec half{one(), Poly(Elem::from_int(2).inverse())};
  const Certificate c = split_one(h, half);
  CHECK(c.B(0, 0).is_one());
  CHECK(c.B(0, 1).is_zero());
  CHECK(c.B(1, 1).degree() == 0);
  CHECK(c.verifies(h));

  const PolyMatrix d = direct_sum(PolyMatrix(1, 1, {one()}), M2(Poly::t() * Poly::t(), one(), one(), Poly()));
  const Certificate same = split_one(d, Vec{one(), Poly(), Poly()});
  CHECK(same.B == d);
  CHECK(same.S == PolyMatrix::identity(3));

  // over F_5 the constant vector (1, 2) has value 4; over F_3 no constant
  // vector represents a unit
  const Poly t2 = Poly::t() * Poly::t();
  const PolyMatrix q = M2(t2, one(), one(), t2);
  const Vec c5 = represent_one(q);
  CHECK(c5[0].is_constant());
  CHECK(c5[1].is_constant());
  CHECK(form_value(q, c5, c5).is_one());
  {
    Tower t3(3);
    TowerScope s3(t3);
    const PolyMatrix q3 = M2(t2, one(), one(), t2);
    const Vec g = represent_one(q3);
    CHECK(form_value(q3, g, g).is_one());
    CHECK_FALSE((g[0].is_constant() && g[1].is_constant()));
  }

  for (std::uint32_t p : {3u, 5u}) {
    Tower tp(p);
    TowerScope sp(tp);
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      RandomSpec spec;
      spec.seed = seed;
      spec.n = 3;
      spec.kind = FormKind::Hermitian;
      spec.singular_rate = 0;
      const RandomInstance ri = random_instance(spec);
      if (!ri.factors.entries[0].is_one()) continue;
      const Vec w = represent_one(ri.a);
      CHECK(form_value(ri.a, w, w).is_one());
      const Certificate sc = split_one(ri.a, w);
      CHECK(sc.B(0, 0).is_one());
      CHECK(sc.verifies(ri.a));
    }
  }
}

TEST_CASE("sk_split property") {
  for (std::uint32_t p : {3u, 5u}) {
    Tower tw(p);
    TowerScope scope(tw);
    int checked = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
      RandomSpec spec;
      spec.seed = seed;
      spec.n = 2 + seed % 3;
      spec.kind = FormKind::Skew;
      spec.singular_rate = 0;
      const RandomInstance ri = random_instance(spec);
      if (!ri.factors.entries[0].is_one() || ri.factors.entries.back().is_zero()) continue;
      const SkewSplitResult res = sk_split(ri.a);
      const Poly f2 = invariant_factors(ri.a)[1];
      CHECK(is_pure(res.f));
      CHECK(2 * res.nu == f2.degree());
      CHECK((res.f * star(res.f)).monic() == f2);
      CHECK(res.cert.verifies(ri.a));
      ++checked;
    }
    CHECK(checked > 10);
  }
}

TEST_CASE("block swap") {
  Tower tw(5);
  TowerScope scope(tw);
  Certificate c = block_swap(P({-1, 1}), P({-1, 1}));
  CHECK(c.S == PolyMatrix::identity(2));
  c = block_swap(P({-1, 1}), P({-1, -1}));
  CHECK(c.B == hyperbolic_block(P({-1, -1})));
  CHECK(c.verifies(hyperbolic_block(P({-1, 1}))));
  // Mixed: (t - 1)(t - 2) against (t - 1)(t + 2), equal norms.
  const Poly f = P({-1, 1}) * P({-2, 1});
  const Poly g = P({-1, 1}) * P({2, 1});
  c = block_swap(f, g);
  CHECK(c.B == hyperbolic_block(g));
  CHECK(c.verifies(hyperbolic_block(f)));
  // Constant factor in the norm.
  c = block_swap(P({-2, 2}), P({-1, 1}));
  CHECK(c.B == hyperbolic_block(P({-1, 1})));
  CHECK(c.verifies(hyperbolic_block(P({-2, 2}))));
  CHECK_THROWS_AS(block_swap(P({-1, 1}), P({-2, 1})), DomainError);
  CHECK_THROWS_AS(block_swap(Poly::t(), Poly::t()), DomainError);
}

TEST_CASE("trace emits one line per move") {
  Tower tw(5);
  TowerScope scope(tw);
  std::vector<std::string> lines;
  her2_diagonalize(M2(one(), Poly::t(), -Poly::t(), one()), [&](const std::string& s) { lines.push_back(s); });
  CHECK(!lines.empty());
  for (const auto& l : lines) CHECK(l.rfind("her2:", 0) == 0);
}
