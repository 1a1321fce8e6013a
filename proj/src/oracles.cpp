#include "hermform/oracles.hpp"

namespace hermform {

namespace {

// c_k -> (-1)^k c_k
std::vector<Elem> conj_coeffs(const Poly& f) {
  std::vector<Elem> c = f.coeffs();
  for (std::size_t k = 1; k < c.size(); k += 2) c[k] = -c[k];
  return c;
}

std::vector<Elem> convolve(const std::vector<Elem>& a, const std::vector<Elem>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Elem> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Poly from_digits(std::uint64_t code, std::size_t len, std::uint32_t p) {
  std::vector<Elem> c(len);
  for (std::size_t i = 0; i < len; ++i) {
    c[i] = Elem::from_int(static_cast<long long>(code % p));
    code /= p;
  }
  return Poly(std::move(c));
}

}  // namespace

Poly naive_form_value(const PolyMatrix& a, const Vec& v, const Vec& w) {
  std::vector<Elem> acc;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto term = convolve(convolve(conj_coeffs(v[i]), a(i, j).coeffs()), w[j].coeffs());
      if (acc.size() < term.size()) acc.resize(term.size());
      for (std::size_t k = 0; k < term.size(); ++k) acc[k] += term[k];
    }
  return Poly(std::move(acc));
}

std::optional<Vec> brute_force_isotropic(const PolyMatrix& a, int max_deg) {
  const std::uint32_t p = Tower::current().p();
  const std::size_t n = a.rows();
  const std::size_t len = static_cast<std::size_t>(max_deg + 1);
  std::uint64_t per = 1;
  for (std::size_t i = 0; i < len; ++i) per *= p;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= per;
  for (std::uint64_t code = 1; code < total; ++code) {
    Vec v(n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = from_digits(c % per, len, p);
      c /= per;
    }
    if (!gcd(v).is_one()) continue;
    if (naive_form_value(a, v, v).is_zero()) return v;
  }
  return std::nullopt;
}

std::vector<Poly> homogeneous_monics(int max_deg) {
  const std::uint32_t p = Tower::current().p();
  std::vector<Poly> out;
  for (int d = 0; d <= max_deg; ++d) {
    // free coefficients at degrees d-2, d-4, ...
    const std::size_t free = static_cast<std::size_t>(d / 2);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<Elem> c(static_cast<std::size_t>(d) + 1);
      c[static_cast<std::size_t>(d)] = Elem::one();
      std::uint64_t x = code;
      for (std::size_t i = 0; i < free; ++i) {
        c[static_cast<std::size_t>(d) - 2 * (i + 1)] = Elem::from_int(static_cast<long long>(x % p));
        x /= p;
      }
      out.emplace_back(std::move(c));
    }
  }
  return out;
}

std::vector<FactorSequence> enumerate_sequences(std::size_t max_n, int max_deg, FormKind kind) {
  const std::vector<Poly> mons = homogeneous_monics(max_deg);
  std::vector<FactorSequence> out;
  std::function<void(Vec&, std::size_t)> grow = [&](Vec& cur, std::size_t n) {
    if (cur.size() == n) {
      out.push_back({cur, kind});
      return;
    }
    const bool after_zero = !cur.empty() && cur.back().is_zero();
    if (!after_zero)
      for (const auto& m : mons)
        if (cur.empty() || divides(cur.back(), m)) {
          cur.push_back(m);
          grow(cur, n);
          cur.pop_back();
        }
    cur.push_back(Poly());
    grow(cur, n);
    cur.pop_back();
  };
  for (std::size_t n = 1; n <= max_n; ++n) {
    Vec cur;
    grow(cur, n);
  }
  return out;
}

bool realizable_by_pairing(const FactorSequence& fs) {
  const Vec& f = fs.entries;
  std::size_t r = 0;
  while (r < f.size() && !f[r].is_zero()) ++r;
  const int eps = sign_of(fs.kind);
  auto right = [&](std::size_t i) { return (parity(f[i]) == Parity::Odd ? -1 : 1) == eps; };
  std::vector<char> ok(r + 1, 0);
  ok[r] = 1;
  for (std::size_t i = r; i-- > 0;) {
    if (right(i) && ok[i + 1]) ok[i] = 1;
    if (i + 1 < r && !right(i) && !right(i + 1) && ok[i + 2]) {
      const Poly q = exact_div(f[i + 1], f[i]);
      if (!q[0].is_zero()) ok[i] = 1;
    }
  }
  return ok[0] != 0;
}

}  // namespace hermform
