#include "hermform/fftower.hpp"

#include <algorithm>
#include <functional>
#include <tuple>

namespace hermform {

namespace {

thread_local Tower* g_current = nullptr;

struct Term {
  bool negative = false;
  std::string body;
};

std::string join_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i == 0) {
      if (terms[i].negative) out += "-";
    } else {
      out += terms[i].negative ? " - " : " + ";
    }
    out += terms[i].body;
  }
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// ---------------------------------------------------------------- Elem

Elem::Elem(Digits digits) : d_(std::move(digits)) { strip(); }

void Elem::strip() {
  while (!d_.empty() && d_.back() == 0) d_.pop_back();
}

Elem Elem::from_int(long long value) {
  Digits d{Tower::current().reduce(value)};
  return Elem(std::move(d));
}

std::size_t Elem::level() const { return Tower::current().level_of(*this); }

Elem Elem::inverse() const { return Tower::current().inv(*this); }

Elem& Elem::operator+=(const Elem& o) {
  if (o.d_.empty()) return *this;
  return *this = Tower::current().add(*this, o);
}

Elem& Elem::operator-=(const Elem& o) {
  if (o.d_.empty()) return *this;
  return *this = Tower::current().sub(*this, o);
}

Elem& Elem::operator*=(const Elem& o) { return *this = *this * o; }

Elem& Elem::operator/=(const Elem& o) { return *this = *this / o; }

Elem operator*(const Elem& a, const Elem& b) {
  if (a.d_.empty() || b.d_.empty()) return Elem();
  return Tower::current().mul(a, b);
}

Elem Elem::operator-() const {
  if (d_.empty()) return *this;
  return Tower::current().neg(*this);
}

int compare(const Elem& a, const Elem& b) {
  const Tower& t = Tower::current();
  const std::size_t la = t.level_of(a), lb = t.level_of(b);
  if (la != lb) return la < lb ? -1 : 1;
  const auto& x = a.digits();
  const auto& y = b.digits();
  const std::size_t n = std::max(x.size(), y.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint32_t u = i < x.size() ? x[i] : 0;
    const std::uint32_t v = i < y.size() ? y[i] : 0;
    if (u != v) return u < v ? -1 : 1;
  }
  return 0;
}

Elem pow(const Elem& a, const BigInt& e) {
  if (e < 0) return pow(a.inverse(), -e);
  Elem result = Elem::one();
  Elem base = a;
  const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = result * result;
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = result * base;
  }
  return result;
}

namespace {

bool is_square_in(const Tower& t, std::size_t k, const Elem& a) {
  if (a.is_zero()) return true;
  return pow(a, (t.order(k) - 1) / 2).is_one();
}

// Tonelli-Shanks in L_k; a must be a nonzero square there.
Elem tonelli_shanks(Tower& t, std::size_t k, const Elem& a) {
  BigInt q1 = t.order(k) - 1;
  unsigned s = 0;
  while (!boost::multiprecision::bit_test(q1, 0)) {
    q1 >>= 1;
    ++s;
  }
  const Elem z = t.first_nonsquare(k);
  Elem c = pow(z, q1);
  Elem x = pow(a, (q1 + 1) / 2);
  Elem u = pow(a, q1);
  unsigned m = s;
  while (!u.is_one()) {
    unsigned i = 0;
    Elem w = u;
    while (!w.is_one()) {
      w = w * w;
      ++i;
      if (i >= m) throw InvariantError("tonelli-shanks: element is not a square");
    }
    Elem b = c;
    for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
    x = x * b;
    c = b * b;
    u = u * c;
    m = i;
  }
  return x;
}

}  // namespace

bool is_square(const Elem& a) {
  const Tower& t = Tower::current();
  return is_square_in(t, t.top(), a);
}

Elem sqrt(const Elem& a) {
  if (a.is_zero()) return a;
  Tower& t = Tower::current();
  if (!is_square_in(t, t.top(), a)) t.append_standard_level();
  Elem r = tonelli_shanks(t, t.top(), a);
  Elem s = -r;
  return compare(r, s) <= 0 ? r : s;
}

// ---------------------------------------------------------------- Tower

Tower::Tower(std::uint32_t p, std::uint64_t seed) : p_(p), rng_(seed) {
  if (p == 2 || !is_prime(p)) throw DomainError("characteristic must be an odd prime");
  if (p >= (1u << 31)) throw DomainError("characteristic too large");
  Level base;
  levels_.push_back(base);
  nonsquares_.emplace_back();
}

Tower& Tower::current() {
  if (g_current == nullptr) throw InvariantError("no active tower on this thread");
  return *g_current;
}

Tower* Tower::current_or_null() { return g_current; }

TowerScope::TowerScope(Tower& t) : prev_(g_current) { g_current = &t; }
TowerScope::~TowerScope() { g_current = prev_; }

std::uint32_t Tower::reduce(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

std::size_t Tower::level_of(const Elem& a) const {
  const std::size_t n = a.digits().size();
  for (std::size_t k = 0; k < levels_.size(); ++k)
    if (levels_[k].abs_degree >= n) return k;
  throw InvariantError("element does not belong to this tower");
}

BigInt Tower::order(std::size_t k) const {
  BigInt q = 1;
  for (std::size_t i = 0; i < abs_degree(k); ++i) q *= p_;
  return q;
}

std::size_t Tower::append_level(std::vector<Elem> minpoly) {
  if (minpoly.size() < 3) throw DomainError("extension degree must be at least 2");
  if (!minpoly.back().is_one()) throw DomainError("minimal polynomial must be monic");
  for (const auto& c : minpoly)
    if (level_of(c) > top()) throw DomainError("coefficient outside the tower");
  Level lv;
  lv.name = "u" + std::to_string(levels_.size());
  lv.degree = minpoly.size() - 1;
  lv.abs_degree = levels_.back().abs_degree * lv.degree;
  if (lv.degree == 2 && minpoly[1].is_zero()) {
    lv.quadratic = true;
    lv.square = -minpoly[0];
  }
  lv.minpoly = std::move(minpoly);
  levels_.push_back(std::move(lv));
  nonsquares_.emplace_back();
  return top();
}

std::size_t Tower::append_standard_level() {
  const Elem c = first_nonsquare(top());
  const std::size_t k = append_level({-c, Elem(), Elem::one()});
  levels_[k].standard = true;
  return k;
}

Elem Tower::nth_element(const BigInt& n) const {
  Digits d;
  BigInt m = n;
  while (m > 0) {
    d.push_back(static_cast<std::uint32_t>(m % p_));
    m /= p_;
  }
  return Elem(std::move(d));
}

Elem Tower::first_nonsquare(std::size_t k) {
  if (nonsquares_.at(k)) return *nonsquares_[k];
  const BigInt q = order(k);
  const BigInt e = (q - 1) / 2;
  // The first order(k-1) indices enumerate the subfield. Its elements are all
  // squares under an even relative degree and keep their status otherwise.
  BigInt start = 1;
  if (k > 0 && levels_[k].degree % 2 == 0) {
    start = order(k - 1);
  } else if (k > 0) {
    nonsquares_[k] = first_nonsquare(k - 1);
    return *nonsquares_[k];
  }
  for (BigInt n = start; n < q; ++n) {
    Elem a = nth_element(n);
    if (!pow(a, e).is_one()) {
      nonsquares_[k] = a;
      return a;
    }
  }
  throw InvariantError("finite field without non-squares");
}

Elem Tower::random_elem(std::size_t k) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p_ - 1);
  Digits d(abs_degree(k));
  for (auto& x : d) x = dist(rng_);
  return Elem(std::move(d));
}

Elem Tower::add(const Elem& a, const Elem& b) const {
  const auto& x = a.digits();
  const auto& y = b.digits();
  Digits d(std::max(x.size(), y.size()), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    std::uint32_t s = (i < x.size() ? x[i] : 0) + (i < y.size() ? y[i] : 0);
    d[i] = s >= p_ ? s - p_ : s;
  }
  return Elem(std::move(d));
}

Elem Tower::neg(const Elem& a) const {
  Digits d = a.digits();
  for (auto& x : d) x = x == 0 ? 0 : p_ - x;
  return Elem(std::move(d));
}

Elem Tower::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

void Tower::mul_dense(std::size_t k, const std::uint32_t* a, const std::uint32_t* b,
                      std::uint32_t* out) const {
  if (k == 0) {
    out[0] = static_cast<std::uint32_t>(std::uint64_t(a[0]) * b[0] % p_);
    return;
  }
  const Level& lv = levels_[k];
  const std::size_t m = levels_[k - 1].abs_degree;
  auto addv = [&](std::uint32_t* dst, const std::uint32_t* src) {
    for (std::size_t i = 0; i < m; ++i) {
      std::uint32_t s = dst[i] + src[i];
      dst[i] = s >= p_ ? s - p_ : s;
    }
  };
  auto subv = [&](std::uint32_t* dst, const std::uint32_t* src) {
    for (std::size_t i = 0; i < m; ++i) dst[i] = dst[i] >= src[i] ? dst[i] - src[i] : dst[i] + p_ - src[i];
  };
  if (lv.quadratic) {
    // (a0 + a1 u)(b0 + b1 u) with u^2 = c, Karatsuba style.
    std::vector<std::uint32_t> buf(6 * m, 0);
    std::uint32_t* t0 = buf.data();
    std::uint32_t* t1 = t0 + m;
    std::uint32_t* t2 = t1 + m;
    std::uint32_t* sa = t2 + m;
    std::uint32_t* sb = sa + m;
    std::uint32_t* cc = sb + m;
    mul_dense(k - 1, a, b, t0);
    mul_dense(k - 1, a + m, b + m, t1);
    std::copy(a, a + m, sa);
    addv(sa, a + m);
    std::copy(b, b + m, sb);
    addv(sb, b + m);
    mul_dense(k - 1, sa, sb, t2);
    const auto& c = lv.square.digits();
    if (c.size() <= 1) {
      const std::uint64_t cv = c.empty() ? 0 : c[0];
      for (std::size_t i = 0; i < m; ++i) cc[i] = static_cast<std::uint32_t>(t1[i] * cv % p_);
    } else {
      std::fill(sa, sa + m, 0);
      std::copy(c.begin(), c.end(), sa);
      mul_dense(k - 1, t1, sa, cc);
    }
    std::copy(t0, t0 + m, out);
    addv(out, cc);
    std::copy(t2, t2 + m, out + m);
    subv(out + m, t0);
    subv(out + m, t1);
    return;
  }
  const std::size_t d = lv.degree;
  std::vector<std::uint32_t> prod((2 * d - 1) * m, 0), tmp(m), coef(m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      mul_dense(k - 1, a + i * m, b + j * m, tmp.data());
      addv(prod.data() + (i + j) * m, tmp.data());
    }
  // Reduce with the monic minimal polynomial: u^d = -sum_{i<d} mp_i u^i.
  for (std::size_t j = 2 * d - 1; j-- > d;) {
    std::copy(prod.begin() + j * m, prod.begin() + (j + 1) * m, coef.begin());
    for (std::size_t i = 0; i < d; ++i) {
      const auto& mp = lv.minpoly[i].digits();
      if (mp.empty()) continue;
      std::vector<std::uint32_t> mpd(m, 0);
      std::copy(mp.begin(), mp.end(), mpd.begin());
      mul_dense(k - 1, coef.data(), mpd.data(), tmp.data());
      subv(prod.data() + (j - d + i) * m, tmp.data());
    }
  }
  std::copy(prod.begin(), prod.begin() + d * m, out);
}

Elem Tower::mul(const Elem& a, const Elem& b) const {
  const auto& x = a.digits();
  const auto& y = b.digits();
  if (x.empty() || y.empty()) return Elem();
  if (x.size() == 1 && y.size() == 1) return Elem(Digits{static_cast<std::uint32_t>(std::uint64_t(x[0]) * y[0] % p_)});
  if (x.size() == 1 || y.size() == 1) {
    const std::uint64_t s = x.size() == 1 ? x[0] : y[0];
    Digits d = x.size() == 1 ? y : x;
    for (auto& v : d) v = static_cast<std::uint32_t>(v * s % p_);
    return Elem(std::move(d));
  }
  const std::size_t k = std::max(level_of(a), level_of(b));
  const std::size_t n = abs_degree(k);
  std::vector<std::uint32_t> da(n, 0), db(n, 0), out(n, 0);
  std::copy(x.begin(), x.end(), da.begin());
  std::copy(y.begin(), y.end(), db.begin());
  mul_dense(k, da.data(), db.data(), out.data());
  return Elem(Digits(out.begin(), out.end()));
}

Elem Tower::inv(const Elem& a) const {
  if (a.is_zero()) throw DomainError("division by zero");
  return inv_level(level_of(a), a);
}

Elem Tower::inv_level(std::size_t k, const Elem& a) const {
  if (k == 0) {
    // Extended Euclid on integers.
    long long r0 = p_, r1 = a.prime_value(), s0 = 0, s1 = 1;
    while (r1 != 0) {
      const long long q = r0 / r1;
      std::tie(r0, r1) = std::make_pair(r1, r0 - q * r1);
      std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    }
    return Elem(Digits{reduce(s0)});
  }
  const Level& lv = levels_[k];
  const std::size_t m = levels_[k - 1].abs_degree;
  const auto& d = a.digits();
  auto chunk = [&](std::size_t j) {
    Digits c;
    for (std::size_t i = j * m; i < std::min(d.size(), (j + 1) * m); ++i) c.push_back(d[i]);
    return Elem(std::move(c));
  };
  auto assemble = [&](const std::vector<Elem>& cs) {
    Digits out(lv.abs_degree, 0);
    for (std::size_t j = 0; j < cs.size() && j < lv.degree; ++j) {
      const auto& cd = cs[j].digits();
      std::copy(cd.begin(), cd.end(), out.begin() + j * m);
    }
    return Elem(std::move(out));
  };
  if (lv.quadratic) {
    const Elem a0 = chunk(0), a1 = chunk(1);
    const Elem norm = a0 * a0 - lv.square * a1 * a1;
    const Elem ni = inv_level(k - 1, norm);
    return assemble({a0 * ni, -(a1 * ni)});
  }
  // Extended Euclid over L_{k-1} between a(u) and the minimal polynomial.
  using V = std::vector<Elem>;
  auto trim = [](V& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
  };
  V r0 = lv.minpoly, r1, s0, s1{Elem::one()};
  for (std::size_t j = 0; j < lv.degree; ++j) r1.push_back(chunk(j));
  trim(r1);
  while (r1.size() > 1) {
    // r0 = q r1 + r
    V q(r0.size() >= r1.size() ? r0.size() - r1.size() + 1 : 1);
    const Elem li = inv_level(k - 1, r1.back());
    V r = r0;
    while (r.size() >= r1.size()) {
      const Elem c = r.back() * li;
      const std::size_t sh = r.size() - r1.size();
      q[sh] = c;
      for (std::size_t i = 0; i < r1.size(); ++i) r[sh + i] -= c * r1[i];
      trim(r);
      if (r.empty()) break;
    }
    V s(std::max(s0.size(), q.size() + s1.size()));
    for (std::size_t i = 0; i < s0.size(); ++i) s[i] = s0[i];
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j) s[i + j] -= q[i] * s1[j];
    trim(s);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r1.empty()) throw InvariantError("non-invertible element: reducible minimal polynomial");
  const Elem ci = inv_level(k - 1, r1[0]);
  for (auto& c : s1) c = c * ci;
  return assemble(s1);
}

std::string Tower::format(const Elem& a) const {
  if (a.is_zero()) return "0";
  return format_level(level_of(a), a.digits(), 0);
}

std::string Tower::format_level(std::size_t k, const Digits& d, std::size_t offset) const {
  // Recursively renders the digit block [offset, offset + D_k) as a sum of
  // terms coef * u_k^j.
  std::vector<Term> terms;
  auto digit = [&](std::size_t i) -> std::uint32_t { return i < d.size() ? d[i] : 0; };
  std::function<void(std::size_t, std::size_t, const std::string&)> render =
      [&](std::size_t lvl, std::size_t off, const std::string& mono) {
        if (lvl == 0) {
          std::uint32_t v = digit(off);
          if (v == 0) return;
          Term t;
          long long sv = v;
          if (v > p_ / 2) {
            t.negative = true;
            sv = static_cast<long long>(p_) - v;
          }
          if (mono.empty()) t.body = std::to_string(sv);
          else t.body = sv == 1 ? mono : std::to_string(sv) + "*" + mono;
          terms.push_back(t);
          return;
        }
        const Level& lv = levels_[lvl];
        const std::size_t m = levels_[lvl - 1].abs_degree;
        for (std::size_t j = lv.degree; j-- > 0;) {
          const std::size_t o = off + j * m;
          bool nz = false;
          for (std::size_t i = o; i < o + m; ++i) nz = nz || digit(i) != 0;
          if (!nz) continue;
          std::string power = j == 0 ? "" : (j == 1 ? lv.name : lv.name + "^" + std::to_string(j));
          std::string nm = mono.empty() ? power : (power.empty() ? mono : power + "*" + mono);
          // Is the coefficient a prime-field element?
          bool prime = true;
          for (std::size_t i = o + 1; i < o + m; ++i) prime = prime && digit(i) == 0;
          if (prime || j == 0) {
            render(lvl - 1, o, nm);
          } else {
            Digits sub(d.begin() + std::min(o, d.size()), d.begin() + std::min(o + m, d.size()));
            std::string inner = format_level(lvl - 1, sub, 0);
            terms.push_back({false, "(" + inner + ")*" + nm});
          }
        }
      };
  render(k, offset, "");
  return join_terms(terms);
}

// ---------------------------------------------------------------- ScalarStream

Elem ScalarStream::next() {
  while (n_ >= tower_->order(tower_->top())) tower_->append_standard_level();
  Elem e = tower_->nth_element(n_);
  ++n_;
  return e;
}

}  // namespace hermform
