#include "hermform/starpoly.hpp"

#include "hermform/factor.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace hermform {

std::string_view to_string(Parity p) {
  switch (p) {
    case Parity::Zero: return "zero";
    case Parity::Even: return "even";
    case Parity::Odd: return "odd";
    case Parity::Mixed: return "mixed";
  }
  return "?";
}

Poly star(const Poly& a) {
  std::vector<Elem> cs = a.coeffs();
  for (std::size_t k = 1; k < cs.size(); k += 2) cs[k] = -cs[k];
  return Poly(std::move(cs));
}

Parity parity(const Poly& a) {
  if (a.is_zero()) return Parity::Zero;
  bool has_even = false, has_odd = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero()) continue;
    (k % 2 == 0 ? has_even : has_odd) = true;
  }
  if (has_even && has_odd) return Parity::Mixed;
  return has_even ? Parity::Even : Parity::Odd;
}

Poly even_part(const Poly& a) {
  std::vector<Elem> cs = a.coeffs();
  for (std::size_t k = 1; k < cs.size(); k += 2) cs[k] = Elem();
  return Poly(std::move(cs));
}

Poly odd_part(const Poly& a) {
  std::vector<Elem> cs = a.coeffs();
  for (std::size_t k = 0; k < cs.size(); k += 2) cs[k] = Elem();
  return Poly(std::move(cs));
}

std::optional<int> homogeneity(const Poly& a) {
  switch (parity(a)) {
    case Parity::Even: return 1;
    case Parity::Odd: return -1;
    default: return std::nullopt;
  }
}

bool is_pure(const Poly& a) {
  if (a.is_zero()) throw DomainError("purity of the zero polynomial");
  return gcd(a, star(a)).is_one();
}

PureSplit pure_split(const Poly& a) {
  if (a.is_zero()) throw DomainError("pure split of the zero polynomial");
  Poly a0 = gcd(a, star(a));
  return {a0, exact_div(a, a0)};
}

std::size_t coeff_level(const Poly& a) {
  std::size_t lvl = 0;
  for (const auto& c : a.coeffs()) lvl = std::max(lvl, c.level());
  return lvl;
}

namespace {

// Y(s) with Y(t^2) = y for even y.
Poly compress_even(const Poly& y) {
  std::vector<Elem> cs;
  for (std::size_t k = 0; k < y.size(); k += 2) cs.push_back(y[k]);
  return Poly(std::move(cs));
}

Poly expand_even(const Poly& Y) {
  std::vector<Elem> cs(Y.size() == 0 ? 0 : 2 * Y.size() - 1);
  for (std::size_t k = 0; k < Y.size(); ++k) cs[2 * k] = Y[k];
  return Poly(std::move(cs));
}


struct NormPair {
  Poly q;  // monic; q * monic(q*) = +-P(t^2) for an irreducible P
  int multiplicity;
};

// Monic irreducible P(s) over L_level with P(0) != 0: split P(t^2) into pairs
// {Q, Q*}, climbing quadratic levels until the norm of a root of P becomes a
// square.
void split_norm(const Poly& P, std::size_t level, int mult, std::vector<NormPair>& out) {
  Tower& tw = Tower::current();
  const int e = P.degree();
  const Elem nrm = (e % 2 == 0) ? P[0] : -P[0];
  if (pow(nrm, (tw.order(level) - 1) / 2).is_one()) {
    auto parts = equal_degree_split(expand_even(P), static_cast<std::size_t>(e), level);
    if (parts.size() != 2) throw InvariantError("norm splitting produced an unexpected factor count");
    out.push_back({parts[0], mult});
    return;
  }
  const std::size_t next = level + 1;
  if (next > tw.top()) tw.append_standard_level();
  for (const Factor& f : factor_over(P, next)) split_norm(f.poly, next, mult, out);
}

std::vector<NormPair> norm_pairs(const Poly& Y) {
  std::vector<NormPair> out;
  if (Y.degree() <= 0) return out;
  const std::size_t lvl = coeff_level(Y);
  for (const Factor& f : factor_over(Y, lvl)) split_norm(f.poly, lvl, f.multiplicity, out);
  return out;
}

Poly pow_poly(const Poly& a, int m) {
  Poly r(Elem::one());
  for (int i = 0; i < m; ++i) r = r * a;
  return r;
}

// Assembles c * t^m * prod(chosen_j^{m_j}) with the constant fixed so that
// z z* = y.
Poly assemble_norm(const Poly& y, std::size_t m, const std::vector<NormPair>& pairs,
                   const std::function<Poly(const Poly&)>& choose) {
  Poly z = Poly::monomial(Elem::one(), m);
  for (const auto& pr : pairs) z = z * pow_poly(choose(pr.q), pr.multiplicity);
  const Poly zz = z * star(z);
  const Elem k2 = y.lead() / zz.lead();
  z = sqrt(k2) * z;
  if (z * star(z) != y) throw InvariantError("norm factorization failed to reproduce its input");
  return z;
}

void check_even(const Poly& y) {
  if (y.is_zero()) throw DomainError("norm factorization of zero");
  if (parity(y) != Parity::Even) throw DomainError("norm factorization needs an even polynomial");
}

}  // namespace

Poly norm_factor(const Poly& y) {
  check_even(y);
  const std::size_t low = y.low_order();
  const Poly Y = compress_even(y.shift_down(low)).monic();
  const auto pairs = norm_pairs(Y);
  return assemble_norm(y, low / 2, pairs, [](const Poly& q) {
    Poly qs = star(q).monic();
    return compare(q, qs) <= 0 ? q : qs;
  });
}

std::size_t norm_level_bound(const Poly& y) {
  check_even(y);
  const Poly Y = compress_even(y.shift_down(y.low_order())).monic();
  const std::size_t lvl = coeff_level(Y);
  std::size_t need = std::max(lvl, y.lead().level());
  if (Y.degree() <= 0) return need;
  const BigInt half = (Tower::current().order(lvl) - 1) / 2;
  for (const Factor& f : factor_over(Y, lvl)) {
    const int e = f.poly.degree();
    const Elem nrm = (e % 2 == 0) ? f.poly[0] : -f.poly[0];
    if (pow(nrm, half).is_one()) continue;
    need = std::max(need, lvl + 1 + static_cast<std::size_t>(std::countr_zero(static_cast<unsigned>(e))));
  }
  return need;
}

Poly norm_factor_avoiding(const Poly& y, const Poly& a1) {
  check_even(y);
  if (y[0].is_zero()) throw DomainError("norm factor avoiding: y(0) = 0 admits no pure factor");
  if (!is_pure(a1)) throw DomainError("norm factor avoiding: a1 is not pure");
  const Poly a1s = star(a1);
  const auto pairs = norm_pairs(compress_even(y).monic());
  return assemble_norm(y, 0, pairs, [&](const Poly& q) {
    Poly qs = star(q).monic();
    // q must not divide a1*; purity of a1 leaves at most one side excluded.
    const bool q_ok = gcd(q, a1s).is_one();
    const bool qs_ok = gcd(qs, a1s).is_one();
    if (q_ok && qs_ok) return compare(q, qs) <= 0 ? q : qs;
    if (q_ok) return q;
    if (qs_ok) return qs;
    throw InvariantError("both sides of a norm pair collide with a1");
  });
}

Poly solve_norm_equation(const Poly& a, const Poly& b, NormSign sign) {
  if (a.is_zero() || !is_pure(a)) throw DomainError("norm equation: a is not pure");
  if (b.is_zero()) return {};
  const Parity pb = parity(b);
  if ((sign == NormSign::Plus && pb != Parity::Even) || (sign == NormSign::Minus && pb != Parity::Odd))
    throw DomainError("norm equation: parity of b does not match the sign");
  const Poly as = star(a);
  const Poly half = Elem::from_int(2).inverse() * b;
  // a y + a* z = b/2 with y reduced modulo a*.
  const Bezout bz = gcd_bezout(a, as);
  Poly y = bz.u * half;
  if (as.degree() > 0) y = y % as;
  const Poly z = exact_div(half - a * y, as);
  Poly x = sign == NormSign::Plus ? y + star(z) : y - star(z);
  return x;
}

EvenBezout coprime_even_bezout(const Poly& a, const Poly& b) {
  if (b.is_zero() || !is_pure(b)) throw DomainError("coprime even bezout: b is not pure");
  const Bezout bz = gcd_bezout(a, b);
  if (!bz.g.is_one()) throw DomainError("coprime even bezout: gcd(a, b) != 1");
  const Poly z = solve_norm_equation(b, star(bz.u) - bz.u, NormSign::Minus);
  return {bz.u + b * z, bz.v - a * z};
}

EvenBezout homogeneous_bezout(const Poly& a, const Poly& b) {
  const auto sa = homogeneity(a);
  if (!sa) throw DomainError("homogeneous bezout: a is not homogeneous");
  if (!b.is_zero() && parity(b) != Parity::Even) throw DomainError("homogeneous bezout: b is not even");
  const Bezout bz = gcd_bezout(a, b);
  if (!bz.g.is_one()) throw DomainError("homogeneous bezout: gcd(a, b) != 1");
  // Averaging with the starred identity a* u* + b* v* = 1 keeps the sum 1.
  const Elem half = Elem::from_int(2).inverse();
  const Poly us = star(bz.u);
  Poly x = half * (*sa == 1 ? bz.u + us : bz.u - us);
  Poly y = half * (bz.v + star(bz.v));
  return {x, y};
}

}  // namespace hermform
