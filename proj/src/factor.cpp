#include "hermform/factor.hpp"

#include <algorithm>

namespace hermform {

namespace {

Poly random_poly(std::size_t level, int degree_below) {
  Tower& tw = Tower::current();
  std::vector<Elem> cs;
  for (int i = 0; i < degree_below; ++i) cs.push_back(tw.random_elem(level));
  return Poly(std::move(cs));
}

void sort_polys(std::vector<Poly>& v) {
  std::sort(v.begin(), v.end(), [](const Poly& a, const Poly& b) { return compare(a, b) < 0; });
}

}  // namespace

std::vector<Poly> equal_degree_split(const Poly& g, std::size_t d, std::size_t level) {
  Tower& tw = Tower::current();
  std::vector<Poly> out;
  if (g.degree() <= 0) return out;
  if (static_cast<std::size_t>(g.degree()) == d) {
    out.push_back(g.monic());
    return out;
  }
  const BigInt q = tw.order(level);
  BigInt qd = 1;
  for (std::size_t i = 0; i < d; ++i) qd *= q;
  const BigInt e = (qd - 1) / 2;
  const Poly one(Elem::one());
  for (int attempt = 0; attempt < 10000; ++attempt) {
    Poly r = random_poly(level, g.degree());
    if (r.degree() <= 0) continue;
    Poly h = powmod(r, e, g) - one;
    Poly f = gcd(g, h);
    if (f.degree() > 0 && f.degree() < g.degree()) {
      out = equal_degree_split(f, d, level);
      auto rest = equal_degree_split(exact_div(g, f), d, level);
      out.insert(out.end(), rest.begin(), rest.end());
      sort_polys(out);
      return out;
    }
  }
  throw InvariantError("equal-degree splitting did not converge");
}

std::vector<Factor> factor_over(const Poly& f, std::size_t level) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  Tower& tw = Tower::current();
  const BigInt q = tw.order(level);
  std::vector<Factor> out;
  Poly rem = f.monic();
  const Poly x = Poly::t();
  Poly h = x;
  for (std::size_t d = 1; rem.degree() > 0; ++d) {
    if (static_cast<std::size_t>(rem.degree()) < d) throw InvariantError("distinct-degree factorization overran");
    h = powmod(h, q, rem);
    Poly g = gcd(rem, h - x);
    if (g.degree() <= 0) continue;
    for (const Poly& irr : equal_degree_split(g, d, level)) {
      Factor fac{irr, 0};
      while (divides(irr, rem)) {
        rem = exact_div(rem, irr);
        ++fac.multiplicity;
      }
      out.push_back(fac);
    }
    if (rem.degree() > 0) h = h % rem;
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return compare(a.poly, b.poly) < 0; });
  return out;
}

std::vector<Elem> roots_in_level(const Poly& f, std::size_t level) {
  if (f.is_zero()) throw DomainError("zero polynomial has no finite root set");
  Tower& tw = Tower::current();
  std::vector<Elem> roots;
  Poly rem = f.monic();
  const Poly x = Poly::t();
  if (rem.degree() <= 0) return roots;
  Poly g = gcd(rem, powmod(x, tw.order(level), rem) - x);
  for (const Poly& lin : equal_degree_split(g, 1, level)) {
    const Elem r = -lin[0];
    while (divides(lin, rem)) {
      rem = exact_div(rem, lin);
      roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end(), elem_less);
  return roots;
}

std::vector<Elem> find_roots(const Poly& f) {
  if (f.is_zero()) throw DomainError("zero polynomial has no finite root set");
  Tower& tw = Tower::current();
  std::vector<Elem> roots;
  Poly rem = f.monic();
  const Poly x = Poly::t();
  while (rem.degree() > 0) {
    const std::size_t k = tw.top();
    for (const Elem& r : roots_in_level(rem, k)) {
      roots.push_back(r);
      rem = exact_div(rem, Poly(std::vector<Elem>{-r, Elem::one()}));
    }
    if (rem.degree() <= 0) break;
    // No roots left in L_k: adjoin a root of the smallest irreducible factor.
    const BigInt q = tw.order(k);
    Poly h = x;
    for (std::size_t d = 1;; ++d) {
      h = powmod(h, q, rem);
      Poly g = gcd(rem, h - x);
      if (g.degree() > 0) {
        if (d == 1) throw InvariantError("root finder missed a root");
        auto parts = equal_degree_split(g, d, k);
        tw.append_level(parts.front().coeffs());
        break;
      }
    }
  }
  std::sort(roots.begin(), roots.end(), elem_less);
  return roots;
}

}  // namespace hermform
