#include "doctest.h"
#include "hermform/starpoly.hpp"

using namespace hermform;

namespace {

Poly P(std::initializer_list<long long> c) { return Poly::from_ints(c); }

}  // namespace

TEST_CASE("star and parity") {
  Tower tw(5);
  TowerScope scope(tw);
  CHECK(star(Poly::t()) == -Poly::t());
  CHECK(star(P({1, 0, 1})) == P({1, 0, 1}));
  CHECK(star(P({0, 0, 1, 1})) == P({0, 0, 1, -1}));
  CHECK(parity(P({0, 0, 1, 0, 3})) == Parity::Even);
  CHECK(parity(P({0, -2, 0, 1})) == Parity::Odd);
  CHECK(parity(P({1, 1})) == Parity::Mixed);
  CHECK(parity(Poly()) == Parity::Zero);
}

TEST_CASE("gcd_bezout") {
  Tower tw(5);
  TowerScope scope(tw);
  CHECK(gcd_bezout(P({-1, 0, 1}), P({-1, 1})).g == P({-1, 1}));
  const Bezout b = gcd_bezout(Poly::t(), P({1, 1}));
  CHECK(b.g.is_one());
  CHECK(b.u == P({-1}));
  CHECK(b.v == P({1}));
  CHECK_THROWS_AS(gcd_bezout(Poly(), Poly()), DomainError);
}

TEST_CASE("purity") {
  Tower tw(5);
  TowerScope scope(tw);
  CHECK(is_pure(P({-1, 1})));
  CHECK_FALSE(is_pure(Poly::t()));
  CHECK_FALSE(is_pure(P({-1, 0, 1})));
  CHECK_THROWS_AS(is_pure(Poly()), DomainError);

  auto s = pure_split(P({0, -1, 0, 1}));
  CHECK(s.a0 == P({0, -1, 0, 1}));
  CHECK(s.a1.degree() == 0);
  s = pure_split(P({0, -1, 1}));
  CHECK(s.a0 == Poly::t());
  CHECK(s.a1 == P({-1, 1}));
  s = pure_split(P({2, 1}));
  CHECK(s.a0.is_one());
  CHECK(s.a1 == P({2, 1}));
}

TEST_CASE("norm factorization") {
  Tower tw(5);
  TowerScope scope(tw);
  CHECK(norm_factor(P({1, 0, -1})) == P({1, 1}));
  const Poly z = norm_factor(P({0, 0, -1}));
  CHECK(z * star(z) == P({0, 0, -1}));
  CHECK(z.degree() == 1);
  const Poly y = P({-1, 0, 1});
  const Poly w = norm_factor(y);
  CHECK(w * star(w) == y);
  // z = c(1 + t) with c^2 = -1.
  CHECK(w[0] * w[0] == Elem::from_int(-1));
  CHECK(w[0] == w[1]);
  CHECK_THROWS_AS(norm_factor(Poly::t()), DomainError);
  CHECK_THROWS_AS(norm_factor(Poly()), DomainError);
}

TEST_CASE("norm factorization needing extensions") {
  Tower tw(3);
  TowerScope scope(tw);
  for (const Poly& y : {P({1, 0, 1}), P({2, 0, 1, 0, 1}), P({1, 0, 0, 0, 0, 0, 1}), P({0, 0, 1, 0, 2, 0, 1})}) {
    const Poly z = norm_factor(y);
    CHECK(z * star(z) == y);
    CHECK(2 * z.degree() == y.degree());
    if (!y[0].is_zero()) CHECK(is_pure(z));
  }
}

TEST_CASE("norm factor avoiding") {
  Tower tw(5);
  TowerScope scope(tw);
  const Poly a1 = P({-1, 1});
  const Poly z = norm_factor_avoiding(P({1, 0, -1}), a1);
  CHECK(z == P({-1, 1}));
  CHECK(is_pure(a1 * z));
  CHECK_THROWS_AS(norm_factor_avoiding(P({0, 0, 1}), a1), DomainError);
}

TEST_CASE("norm equations") {
  Tower tw(5);
  TowerScope scope(tw);
  CHECK(solve_norm_equation(P({1}), P({4}), NormSign::Plus) == P({2}));
  const Poly a = P({-1, 1});
  Poly x = solve_norm_equation(a, P({2}), NormSign::Plus);
  CHECK(a * x + star(a) * star(x) == P({2}));
  CHECK(x == P({-1}));
  x = solve_norm_equation(a, P({0, 2}), NormSign::Minus);
  CHECK(a * x - star(a) * star(x) == P({0, 2}));
  CHECK(x == P({1}));
  CHECK(solve_norm_equation(a, Poly(), NormSign::Plus).is_zero());
  CHECK_THROWS_AS(solve_norm_equation(Poly::t(), P({1}), NormSign::Plus), DomainError);
  CHECK_THROWS_AS(solve_norm_equation(a, P({0, 1}), NormSign::Plus), DomainError);
}

TEST_CASE("coprime even bezout") {
  Tower tw(5);
  TowerScope scope(tw);
  auto r = coprime_even_bezout(P({0, 0, 1}), P({-1, 1}));
  CHECK(P({0, 0, 1}) * r.x + P({-1, 1}) * r.y == P({1}));
  CHECK(parity(r.x) != Parity::Odd);
  CHECK(parity(r.x) != Parity::Mixed);
  r = coprime_even_bezout(P({1}), P({2, 1}));
  CHECK(r.x == P({1}));
  CHECK(r.y.is_zero());
}

TEST_CASE("eval") {
  Tower tw(5);
  TowerScope scope(tw);
  CHECK(P({1, 0, 1}).eval(Elem::from_int(2)).is_zero());
  CHECK(P({3, 1, 4}).eval(Elem()) == Elem::from_int(3));
}
