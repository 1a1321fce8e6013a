#include "hermform/random.hpp"

namespace hermform {

namespace {

Elem random_scalar(std::mt19937_64& rng, bool nonzero) {
  const std::uint32_t p = Tower::current().p();
  const std::uint64_t lo = nonzero ? 1 : 0;
  return Elem::from_int(static_cast<long long>(lo + rng() % (p - lo)));
}

int sign_of_poly(const Poly& f) { return parity(f) == Parity::Odd ? -1 : 1; }

enum class Want { Any, Odd, Even };

// Monic multiplier m with deg(cur m) <= budget.
std::optional<Poly> pick_multiplier(std::mt19937_64& rng, const Poly& cur, int budget, Want want) {
  std::vector<Poly> options;
  const Poly t = Poly::t();
  const Poly even = Poly(std::vector<Elem>{-random_scalar(rng, true), Elem(), Elem::one()});
  if (want != Want::Odd) {
    options.push_back(Poly(Elem::one()));
    options.push_back(Poly(Elem::one()));
    options.push_back(even);
  }
  if (want != Want::Even) {
    options.push_back(t);
    options.push_back(t * even);
  }
  std::vector<Poly> fit;
  for (const auto& m : options)
    if (cur.degree() + m.degree() <= budget) fit.push_back(m);
  if (fit.empty()) return std::nullopt;
  return fit[rng() % fit.size()];
}

// Monic pure p of degree <= deg with p(0) != 0.
Poly random_pure(std::mt19937_64& rng, int deg) {
  for (;;) {
    const int d = static_cast<int>(rng() % (deg + 1));
    std::vector<Elem> cs;
    for (int i = 0; i < d; ++i) cs.push_back(random_scalar(rng, i == 0));
    cs.push_back(Elem::one());
    Poly p(std::move(cs));
    if (is_pure(p)) return p;
  }
}

}  // namespace

Poly random_poly(std::mt19937_64& rng, int deg) {
  std::vector<Elem> cs;
  for (int i = 0; i <= deg; ++i) cs.push_back(random_scalar(rng, false));
  return Poly(std::move(cs));
}

RandomInstance random_instance(const RandomSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  const std::size_t n = spec.n;
  const int eps = sign_of(spec.kind);
  std::size_t r = n;
  if (n > 0 && std::uniform_real_distribution<double>(0, 1)(rng) < spec.singular_rate) r = rng() % n;

  RandomInstance out;
  out.factors.kind = spec.kind;
  out.factors.entries.assign(n, Poly());
  out.c = PolyMatrix(n, n);
  Poly cur(Elem::one());
  std::size_t i = 0;
  while (i < r) {
    const bool last = i + 1 == r;
    const bool wrong_now = sign_of_poly(cur) != eps;
    const Want want = !last ? Want::Any : wrong_now ? Want::Odd : Want::Even;
    auto m = pick_multiplier(rng, cur, spec.max_degree, want);
    if (!m) break;
    const Poly g = cur * *m;
    if (sign_of_poly(g) == eps || last) {
      if (sign_of_poly(g) != eps) break;
      out.factors.entries[i] = g;
      out.c(i, i) = g;
      cur = g;
      i += 1;
      continue;
    }
    const int room = spec.max_degree - g.degree();
    if (room < 0) break;
    const Poly p = random_pure(rng, std::min(room, 2));
    const Poly pp = p * star(p);
    const Poly h = g * pp.monic();
    out.factors.entries[i] = g;
    out.factors.entries[i + 1] = h;
    out.c.set_block(i, i, g * hyperbolic_block(p));
    cur = h;
    i += 2;
  }

  PolyMatrix s = PolyMatrix::identity(n);
  for (int k = 0; k < spec.moves && n > 0; ++k) {
    const std::size_t a = rng() % n;
    const std::size_t b = rng() % n;
    switch (rng() % 4) {
      case 0:
      case 1:
        if (a != b) s.add_col(a, b, random_poly(rng, spec.move_degree));
        break;
      case 2:
        s.swap_cols(a, b);
        break;
      default:
        s.scale_col(a, Poly(random_scalar(rng, true)));
        break;
    }
  }
  out.s = s;
  out.a = star_transpose(s) * out.c * s;
  return out;
}

}  // namespace hermform
