#include "hermform/poly.hpp"

#include <algorithm>

namespace hermform {

namespace {
const Elem kZero{};
}

Poly::Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(const Elem& c) {
  if (!c.is_zero()) c_.push_back(c);
}

Poly Poly::from_ints(std::initializer_list<long long> low_to_high) {
  std::vector<Elem> cs;
  for (long long v : low_to_high) cs.push_back(Elem::from_int(v));
  return Poly(std::move(cs));
}

Poly Poly::monomial(const Elem& c, std::size_t k) {
  if (c.is_zero()) return {};
  std::vector<Elem> cs(k + 1);
  cs[k] = c;
  return Poly(std::move(cs));
}

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Elem& Poly::operator[](std::size_t i) const { return i < c_.size() ? c_[i] : kZero; }

const Elem& Poly::lead() const { return c_.empty() ? kZero : c_.back(); }

Poly Poly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  const Elem li = c_.back().inverse();
  return li * *this;
}

Elem Poly::eval(const Elem& x) const {
  Elem acc;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Poly Poly::derivative() const {
  std::vector<Elem> cs;
  for (std::size_t i = 1; i < c_.size(); ++i) cs.push_back(Elem::from_int(static_cast<long long>(i)) * c_[i]);
  return Poly(std::move(cs));
}

std::size_t Poly::low_order() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k].is_zero()) ++k;
  return c_.empty() ? 0 : k;
}

Poly Poly::shift_down(std::size_t k) const {
  if (k >= c_.size()) return {};
  return Poly(std::vector<Elem>(c_.begin() + k, c_.end()));
}

Poly Poly::shift_up(std::size_t k) const {
  if (c_.empty()) return {};
  std::vector<Elem> cs(k);
  cs.insert(cs.end(), c_.begin(), c_.end());
  return Poly(std::move(cs));
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<Elem> cs(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) cs[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(std::move(cs));
}

Poly operator*(const Elem& c, const Poly& a) {
  if (c.is_zero()) return {};
  std::vector<Elem> cs = a.c_;
  for (auto& x : cs) x = c * x;
  return Poly(std::move(cs));
}

Poly Poly::operator-() const {
  std::vector<Elem> cs = c_;
  for (auto& x : cs) x = -x;
  return Poly(std::move(cs));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Elem> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  std::vector<Elem> q(r.size() - db);
  const Elem li = b.lead().inverse();
  for (std::size_t k = r.size(); k-- > db;) {
    if (r[k].is_zero()) continue;
    const Elem c = r[k] * li;
    q[k - db] = c;
    for (std::size_t i = 0; i <= db; ++i) r[k - db + i] -= c * bc[i];
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw InvariantError("inexact polynomial division");
  return q;
}

bool divides(const Poly& d, const Poly& a) {
  if (d.is_zero()) return a.is_zero();
  return (a % d).is_zero();
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly gcd(const std::vector<Poly>& polys) {
  Poly g;
  for (const auto& p : polys) {
    g = gcd(g, p);
    if (g.is_one()) break;
  }
  return g;
}

Bezout gcd_bezout(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw DomainError("gcd of two zero polynomials");
  Poly r0 = a, r1 = b, s0 = Elem::one(), s1;
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  const Elem li = r0.lead().inverse();
  Poly g = li * r0;
  Poly u = li * s0;
  if (!b.is_zero()) {
    const Poly bg = exact_div(b, g);
    if (bg.degree() > 0) u = u % bg;
    else if (bg.degree() == 0 && !a.is_zero()) u = Poly();
  }
  // v = (g - a u) / b
  Poly v = b.is_zero() ? Poly() : exact_div(g - a * u, b);
  return {g, u, v};
}

Poly powmod(const Poly& base, const BigInt& e, const Poly& mod) {
  Poly result = Poly(Elem::one()) % mod;
  Poly b = base % mod;
  const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % mod;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = (result * b) % mod;
  }
  return result;
}

int compare(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (std::size_t i = a.size(); i-- > 0;) {
    const int c = compare(a[i], b[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string to_string(const Poly& a, const std::string& var) {
  if (a.is_zero()) return "0";
  const Tower& tw = Tower::current();
  const std::uint32_t p = tw.p();
  std::string out;
  bool first = true;
  for (std::size_t k = a.size(); k-- > 0;) {
    const Elem& c = a[k];
    if (c.is_zero()) continue;
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    bool negative = false;
    std::string coef;
    if (c.is_prime()) {
      std::uint32_t v = c.prime_value();
      if (v > p / 2) {
        negative = true;
        v = p - v;
      }
      coef = std::to_string(v);
      if (v == 1 && !mono.empty()) coef.clear();
    } else {
      coef = "(" + tw.format(c) + ")";
    }
    std::string body = coef.empty() ? mono : (mono.empty() ? coef : coef + "*" + mono);
    if (first) out += negative ? "-" + body : body;
    else out += (negative ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace hermform
