#include "doctest.h"
#include "hermform/factor.hpp"

#include <set>

using namespace hermform;

namespace {

Elem E(long long v) { return Elem::from_int(v); }

// Brute-force multiplication table oracle for F_9 = F_3[u]/(u^2 + 1).
struct F9 {
  int a, b;  // a + b u
  F9 operator*(const F9& o) const {
    return {((a * o.a - b * o.b) % 3 + 3) % 3, ((a * o.b + b * o.a) % 3 + 3) % 3};
  }
};

}  // namespace

TEST_CASE("prime field arithmetic") {
  Tower tw(5);
  TowerScope scope(tw);
  CHECK(E(3) + E(4) == E(2));
  CHECK(E(2).inverse() == E(3));
  CHECK(E(-1) == E(4));
  CHECK_THROWS_AS(Elem().inverse(), DomainError);
}

TEST_CASE("tower rejects bad primes") {
  CHECK_THROWS_AS(Tower(2), DomainError);
  CHECK_THROWS_AS(Tower(9), DomainError);
}

TEST_CASE("p = 3 with u^2 = -1") {
  Tower tw(3);
  TowerScope scope(tw);
  const std::size_t k = tw.append_level({E(1), E(0), E(1)});
  CHECK(k == 1);
  Elem u(Digits{0, 1});
  CHECK(u * u == E(2));
  // Full multiplication table against the hand-rolled F_9 model.
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          const F9 r = F9{a, b} * F9{c, d};
          const Elem x = E(a) + E(b) * u, y = E(c) + E(d) * u;
          CHECK(x * y == E(r.a) + E(r.b) * u);
          if (!(a == 0 && b == 0)) CHECK(x * x.inverse() == Elem::one());
        }
}

TEST_CASE("square roots") {
  Tower tw(5);
  TowerScope scope(tw);
  CHECK(sqrt(Elem()) == Elem());
  CHECK(sqrt(E(4)) == E(2));
  CHECK(tw.top() == 0);
  const Elem r = sqrt(E(2));
  CHECK(r * r == E(2));
  CHECK(tw.top() == 1);

  Tower tw3(3);
  TowerScope s3(tw3);
  const Elem r3 = sqrt(E(2));
  CHECK(r3 * r3 == E(2));
}

TEST_CASE("find_roots") {
  SUBCASE("x^2 - 1 over F_7") {
    Tower tw(7);
    TowerScope scope(tw);
    auto roots = find_roots(Poly::from_ints({-1, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == E(1));
    CHECK(roots[1] == E(6));
  }
  SUBCASE("x^2 + 1 over F_3 needs an extension") {
    Tower tw(3);
    TowerScope scope(tw);
    const Poly f = Poly::from_ints({1, 0, 1});
    auto roots = find_roots(f);
    REQUIRE(roots.size() == 2);
    CHECK(tw.top() == 1);
    for (const Elem& r : roots) CHECK(f.eval(r).is_zero());
    CHECK(roots[0] + roots[1] == Elem());
  }
  SUBCASE("multiplicity") {
    Tower tw(5);
    TowerScope scope(tw);
    auto roots = find_roots(Poly::from_ints({4, -4, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == E(2));
    CHECK(roots[1] == E(2));
  }
  SUBCASE("round trip on random polynomials") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
      Tower tw(3);
      TowerScope scope(tw);
      std::vector<Elem> cs;
      const int deg = 1 + static_cast<int>(rng() % 6);
      for (int i = 0; i < deg; ++i) cs.push_back(E(static_cast<long long>(rng() % 3)));
      cs.push_back(E(1 + static_cast<long long>(rng() % 2)));
      const Poly f(cs);
      auto roots = find_roots(f);
      REQUIRE(roots.size() == static_cast<std::size_t>(f.degree()));
      Poly prod(f.lead());
      for (const Elem& r : roots) prod = prod * Poly(std::vector<Elem>{-r, Elem::one()});
      CHECK(prod == f);
    }
  }
  CHECK_THROWS_AS(find_roots(Poly()), DomainError);
}

TEST_CASE("scalar stream") {
  Tower tw(3);
  TowerScope scope(tw);
  ScalarStream s(tw);
  CHECK(s.next() == E(0));
  CHECK(s.next() == E(1));
  CHECK(s.next() == E(2));
  const Elem fourth = s.next();
  CHECK(fourth.level() == 1);
  ScalarStream a(tw), b(tw);
  std::set<std::vector<std::uint32_t>> seen;
  for (int i = 0; i < 60; ++i) {
    const Elem x = a.next();
    CHECK(x == b.next());
    CHECK(seen.insert({x.digits().begin(), x.digits().end()}).second);
  }
}

TEST_CASE("field axioms at mixed levels") {
  Tower tw(5);
  TowerScope scope(tw);
  tw.append_standard_level();
  tw.append_level({E(1), E(1), E(0), E(1)});  // x^3 + x + 1, irreducible over F_25
  for (int i = 0; i < 2000; ++i) {
    const Elem a = tw.random_elem(i % 3), b = tw.random_elem((i + 1) % 3), c = tw.random_elem(2);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Elem::one());
    const Elem r = sqrt(a);
    CHECK(r * r == a);
  }
}

TEST_CASE("embedding stability") {
  Tower tw(7);
  TowerScope scope(tw);
  const Elem a = E(3), b = E(5);
  const Elem before = a * b.inverse() + a;
  tw.append_standard_level();
  tw.append_standard_level();
  CHECK(a * b.inverse() + a == before);
}
