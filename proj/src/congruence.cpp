#include "hermform/congruence.hpp"

namespace hermform {

namespace {

constexpr int kScanLimit = 100000;

void emit(const TraceSink& trace, const std::string& op, const std::string& what, const PolyMatrix& move) {
  if (trace) trace(op + ": " + what + " move=" + to_string(move));
}

void emit(const TraceSink& trace, const std::string& op, const std::string& what) {
  if (trace) trace(op + ": " + what);
}

void require_kind(const PolyMatrix& a, FormKind kind, const char* op) {
  if (!a.is_square() || !has_kind(a, kind))
    throw DomainError(std::string(op) + ": matrix is not " + std::string(to_string(kind)));
}

void require_reduced(const PolyMatrix& a, const char* op) {
  if (!entry_gcd(a).is_one()) throw DomainError(std::string(op) + ": gcd(A) != 1");
  if (determinant(a).is_zero()) throw DomainError(std::string(op) + ": det A = 0");
}

void require_certificate(const PolyMatrix& a, const Certificate& c, const char* op) {
  if (auto why = certificate_failure(a, c.S, c.B)) throw InvariantError(std::string(op) + ": " + *why);
}

Vec divide_vector(Vec v) {
  const Poly g = gcd(v);
  for (auto& x : v) x = exact_div(x, g);
  return v;
}

Vec mat_vec(const PolyMatrix& m, const Vec& v) {
  Vec out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!v[j].is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

PolyMatrix two_by_two(const Poly& a, const Poly& b, const Poly& c, const Poly& d) {
  return PolyMatrix(2, 2, {a, b, c, d});
}

// Isotropic reduction of a 2x2 form: B(0, 0) = 0 afterwards.
void make_corner_isotropic(Certificate& acc, FormKind kind, const TraceSink& trace, const char* op) {
  if (acc.B(0, 0).is_zero()) return;
  const Vec v = isotropic_vector(acc.B, kind);
  const PolyMatrix t = unimodular_completion(v);
  emit(trace, op, "isotropic basis", t);
  apply_congruence(acc, t);
}

// The vector of the 2x2 hermitian construction, in the coordinates of a.
Vec her2_vector(const PolyMatrix& a, const TraceSink& trace) {
  Certificate acc = Certificate::identity(a);
  make_corner_isotropic(acc, FormKind::Hermitian, trace, "her2");
  const Poly& av = acc.B(0, 1);
  const Poly& b = acc.B(1, 1);
  const PureSplit ps = pure_split(av);
  EvenBezout hb = homogeneous_bezout(ps.a0, b);
  Poly x = hb.x, y = hb.y;
  if (y.is_zero() || y[0].is_zero()) {
    // a0 is even here, since an odd a0 vanishes at 0 and forces y(0) != 0.
    x = x - b;
    y = y + ps.a0;
  }
  const Poly z = norm_factor_avoiding(y, ps.a1);
  const Poly w = solve_norm_equation(ps.a1 * z, Poly(Elem::one()), NormSign::Plus);
  emit(trace, "her2", "a0=" + to_string(ps.a0) + " a1=" + to_string(ps.a1) + " y=" + to_string(y) +
                          " z=" + to_string(z) + " w=" + to_string(w));
  const Vec v1{star(x) * star(w), z};
  if (!form_value(acc.B, v1, v1).is_one()) throw InvariantError("her2: constructed vector does not represent 1");
  return mat_vec(acc.S, v1);
}

}  // namespace

PolyMatrix hyperbolic_block(const Poly& f) { return two_by_two(Poly(), f, -star(f), Poly()); }

namespace {

std::size_t coeff_level(const PolyMatrix& a) {
  std::size_t lvl = 0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) lvl = std::max(lvl, hermform::coeff_level(a(i, j)));
  return lvl;
}

}  // namespace

Vec isotropic_vector(const PolyMatrix& a, FormKind kind) {
  require_kind(a, kind, "isotropic_vector");
  const std::size_t n = a.rows();
  if (n == 0) throw DomainError("isotropic_vector: empty matrix");
  for (std::size_t i = 0; i < n; ++i)
    if (a(i, i).is_zero()) {
      Vec e(n);
      e[i] = Poly(Elem::one());
      return e;
    }
  if (n == 1) throw DomainError("isotropic_vector: 1x1 form with nonzero entry has no isotropic vector");
  // Frames (u1, u2) = (e_i, e_j + lambda e_k); the one whose norm equation
  // needs the lowest tower level wins, ties going to the smaller degree.
  const std::size_t base = coeff_level(a);
  struct Frame {
    Vec u1, u2;
    Poly x, b, y;
  };
  std::optional<Frame> best;
  std::pair<std::size_t, int> best_score{};
  auto consider = [&](Vec u1, Vec u2) {
    Frame f{std::move(u1), std::move(u2), {}, {}, {}};
    f.x = form_value(a, f.u1, f.u1);
    f.b = form_value(a, f.u1, f.u2);
    const Poly c = form_value(a, f.u2, f.u2);
    f.y = kind == FormKind::Hermitian ? f.b * star(f.b) - f.x * c : f.b * star(f.b) + f.x * c;
    const std::pair<std::size_t, int> score{f.y.is_zero() ? 0 : norm_level_bound(f.y), f.y.degree()};
    if (!best || score < best_score) {
      best = std::move(f);
      best_score = score;
    }
  };
  auto unit = [&](std::size_t i) {
    Vec e(n);
    e[i] = Poly(Elem::one());
    return e;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) consider(unit(i), unit(j));
  const std::uint32_t p = Tower::current().p();
  for (std::uint32_t lam = 1; lam < p && best_score.first > base; ++lam)
    for (std::size_t i = 0; i < n && best_score.first > base; ++i)
      for (std::size_t j = 0; j < n && best_score.first > base; ++j)
        for (std::size_t k = j + 1; k < n && best_score.first > base; ++k) {
          if (i == j || i == k) continue;
          Vec u2 = unit(j);
          u2[k] = Poly(Elem::from_int(lam));
          consider(unit(i), std::move(u2));
        }
  const Poly w = best->y.is_zero() ? Poly() : norm_factor(best->y);
  Vec v(n);
  for (std::size_t r = 0; r < n; ++r) v[r] = (w - best->b) * best->u1[r] + best->x * best->u2[r];
  v = divide_vector(std::move(v));
  if (!form_value(a, v, v).is_zero()) throw InvariantError("isotropic_vector: vector is not isotropic");
  return v;
}

Certificate split_one(const PolyMatrix& a, const Vec& v) {
  if (!form_value(a, v, v).is_one()) throw DomainError("split_one: f_A(v, v) != 1");
  PolyMatrix t = unimodular_completion(v);
  for (std::size_t j = 1; j < t.cols(); ++j) {
    const Poly c = form_value(a, v, t.col(j));
    t.add_col(j, 0, -c);
  }
  Certificate acc = Certificate::identity(a);
  apply_congruence(acc, t);
  for (std::size_t j = 1; j < acc.B.cols(); ++j)
    if (!acc.B(0, j).is_zero()) throw InvariantError("split_one: complement is not orthogonal");
  require_certificate(a, acc, "split_one");
  return acc;
}

Certificate her2_diagonalize(const PolyMatrix& a, const TraceSink& trace) {
  if (a.rows() != 2) throw DomainError("her2_diagonalize: expected a 2x2 matrix");
  require_kind(a, FormKind::Hermitian, "her2_diagonalize");
  require_reduced(a, "her2_diagonalize");
  const Vec v = her2_vector(a, trace);
  Certificate acc = split_one(a, v);
  const Poly det = determinant(a);
  const Poly k = exact_div(acc.B(1, 1), det);
  if (k.degree() != 0) throw InvariantError("her2_diagonalize: complement entry is not a unit multiple of det A");
  const Elem s = sqrt(k[0]).inverse();
  const PolyMatrix m = PolyMatrix::diagonal({Poly(Elem::one()), Poly(s)});
  emit(trace, "her2", "normalize", m);
  apply_congruence(acc, m);
  if (acc.B != PolyMatrix::diagonal({Poly(Elem::one()), det})) throw InvariantError("her2_diagonalize: B != diag(1, det A)");
  require_certificate(a, acc, "her2_diagonalize");
  return acc;
}

Certificate sk2_zero_diagonal(const PolyMatrix& a, const TraceSink& trace) {
  if (a.rows() != 2) throw DomainError("sk2_zero_diagonal: expected a 2x2 matrix");
  require_kind(a, FormKind::Skew, "sk2_zero_diagonal");
  require_reduced(a, "sk2_zero_diagonal");
  Certificate acc = Certificate::identity(a);
  if (a(0, 0).is_zero() && a(1, 1).is_zero()) return acc;
  make_corner_isotropic(acc, FormKind::Skew, trace, "sk2");
  const Poly av = acc.B(0, 1);
  const Poly b = acc.B(1, 1);
  if (!b.is_zero()) {
    // a = a1 c c* with a1 c pure.
    const PureSplit ps = pure_split(av);
    const Poly& a1 = ps.a1;
    const Poly c = norm_factor_avoiding(ps.a0, a1);
    const Poly cs = star(c);
    const EvenBezout eb = coprime_even_bezout(b, c);
    Poly x = eb.x, d = eb.y;
    Tower& tw = Tower::current();
    ScalarStream lambdas(tw);
    int tries = 0;
    for (;; ++tries) {
      if (tries > kScanLimit) throw InvariantError("sk2: lambda scan did not terminate");
      const Elem lam = lambdas.next();
      const Poly xl = x + lam * (c * cs);
      if (gcd(a1, xl).is_one()) {
        x = xl;
        d = d - lam * (b * cs);
        break;
      }
    }
    emit(trace, "sk2", "lambda scan rejected " + std::to_string(tries));
    const Poly w = solve_norm_equation(c, -b, NormSign::Minus);
    const Poly a1s = star(a1);
    const Bezout bz = gcd_bezout(a1s, -(c * x));
    if (!bz.g.is_one()) throw InvariantError("sk2: gcd(a1*, c x) != 1");
    const Poly rhs = x * star(w) - star(d);
    const Poly v = bz.u * rhs;
    const Poly p = star(bz.v * rhs);
    const Poly q = solve_norm_equation(a1s, p - star(p), NormSign::Minus);
    const Poly y = v + c * x * q;
    const Poly z = w + cs * (p + a1 * star(q));
    // S = [[c x, y], [a1* c*, z]] has det 1 and carries the zero-diagonal
    // form to the current one; its inverse goes the other way.
    const PolyMatrix m = two_by_two(z, -y, -(a1s * cs), c * x);
    emit(trace, "sk2", "zero diagonal", m);
    apply_congruence(acc, m);
  }
  if (!acc.B(0, 0).is_zero() || !acc.B(1, 1).is_zero()) throw InvariantError("sk2: diagonal not cleared");
  require_certificate(a, acc, "sk2_zero_diagonal");
  return acc;
}

namespace {

Vec represent_core(const PolyMatrix& a, const TraceSink& trace) {
  const std::size_t n = a.rows();
  if (n == 0) throw DomainError("represent_one: empty matrix");
  if (!entry_gcd(a).is_one()) throw DomainError("represent_one: gcd(A) != 1");
  Vec v;
  if (determinant(a).is_zero()) {
    const Certificate ks = kernel_split(a, FormKind::Hermitian);
    std::size_t r = 0;
    for (const auto& f : invariant_factors(a))
      if (!f.is_zero()) ++r;
    const Vec w = represent_one(ks.B.block(n - r, n - r, r, r), trace);
    Vec full(n);
    for (std::size_t i = 0; i < r; ++i) full[n - r + i] = w[i];
    v = mat_vec(ks.S, full);
  } else if (n == 1) {
    if (a(0, 0).degree() != 0) throw InvariantError("represent_one: 1x1 entry is not a unit");
    v = {Poly(sqrt(a(0, 0)[0]).inverse())};
  } else if (n == 2) {
    v = her2_vector(a, trace);
  } else {
    Certificate acc = Certificate::identity(a);
    const Vec iso = isotropic_vector(a, FormKind::Hermitian);
    const PolyMatrix t = unimodular_completion(iso);
    emit(trace, "represent_one", "isotropic basis", t);
    apply_congruence(acc, t);
    // Concentrate the first row into the last column.
    Vec row(n - 1);
    for (std::size_t j = 1; j < n; ++j) row[j - 1] = acc.B(0, j);
    const Poly g = gcd(row);
    if (g.is_zero()) throw InvariantError("represent_one: zero first row in a nonsingular form");
    for (auto& x : row) x = exact_div(x, g);
    const PolyMatrix w = unimodular_completion(row);
    PolyMatrix tinv = inverse_unimodular(transpose(w));
    // row * tinv = e_1; rotate that column to the end.
    PolyMatrix rot(n - 1, n - 1);
    for (std::size_t j = 0; j + 1 < n; ++j)
      for (std::size_t i = 0; i + 1 < n; ++i) rot(i, (j + n - 2) % (n - 1)) = tinv(i, j);
    PolyMatrix m = PolyMatrix::identity(n);
    m.set_block(1, 1, rot);
    emit(trace, "represent_one", "clear first row", m);
    apply_congruence(acc, m);
    // Among the first few admissible lambdas, a 2x2 remainder is chosen by
    // the tower level its determinant needs.
    ScalarStream lambdas(Tower::current());
    std::optional<PolyMatrix> pick;
    std::pair<std::size_t, int> pick_score{};
    int found = 0, tries = 0;
    for (; found < (n == 3 ? 6 : 1); ++tries) {
      if (tries > kScanLimit) throw InvariantError("represent_one: lambda scan did not terminate");
      PolyMatrix ml = PolyMatrix::identity(n);
      ml(0, 1) = Poly(lambdas.next());
      const PolyMatrix sub = (star_transpose(ml) * acc.B * ml).block(1, 1, n - 1, n - 1);
      if (!entry_gcd(sub).is_one()) continue;
      ++found;
      std::pair<std::size_t, int> score{0, 0};
      if (n == 3) {
        const Poly d = determinant(sub);
        score = d.is_zero() ? std::pair<std::size_t, int>{0, -1} : std::pair{norm_level_bound(-d), d.degree()};
      }
      if (!pick || score < pick_score) {
        pick = ml;
        pick_score = score;
      }
    }
    const PolyMatrix& ml = *pick;
    emit(trace, "represent_one", "lambda scan tried " + std::to_string(tries), ml);
    const PolyMatrix sub = (star_transpose(ml) * acc.B * ml).block(1, 1, n - 1, n - 1);
    const Vec w1 = represent_one(sub, trace);
    Vec lifted(n);
    for (std::size_t i = 1; i < n; ++i) lifted[i] = w1[i - 1];
    v = mat_vec(acc.S, mat_vec(ml, lifted));
  }
  return v;
}

}  // namespace

namespace {

// v / sqrt(c) for a constant vector v over F_p with f_A(v, v) = c a nonzero
// constant, or empty. Unit vectors first, then up to kConstantSearch others.
constexpr std::uint64_t kConstantSearch = 4096;

Vec constant_representation(const PolyMatrix& a, const TraceSink& trace) {
  const std::size_t n = a.rows();
  auto found = [&](Vec v, const Poly& c) {
    const Poly s(sqrt(c[0]).inverse());
    for (auto& x : v) x = s * x;
    if (trace) trace("represent_one: constant vector");
    return v;
  };
  for (std::size_t i = 0; i < n; ++i)
    if (a(i, i).is_constant() && !a(i, i).is_zero()) {
      Vec v(n);
      v[i] = Poly(Elem::one());
      return found(std::move(v), a(i, i));
    }
  const std::uint32_t p = Tower::current().p();
  for (std::uint64_t code = 1; code < kConstantSearch; ++code) {
    Vec v(n);
    std::uint64_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= p) v[i] = Poly::constant(static_cast<long long>(c % p));
    if (c != 0) break;
    const Poly q = form_value(a, v, v);
    if (q.is_constant() && !q.is_zero()) return found(std::move(v), q);
  }
  return {};
}

}  // namespace

Vec represent_one(const PolyMatrix& a, const TraceSink& trace) {
  require_kind(a, FormKind::Hermitian, "represent_one");
  Vec v = constant_representation(a, trace);
  if (v.empty()) {
    const Certificate red = reduce_degrees(a);
    Vec u = constant_representation(red.B, trace);
    if (u.empty()) u = represent_core(red.B, trace);
    v = mat_vec(red.S, u);
  }
  if (!form_value(a, v, v).is_one()) throw InvariantError("represent_one: f_A(v, v) != 1");
  return v;
}

SkewSplitResult sk_split(const PolyMatrix& a, const TraceSink& trace) {
  require_kind(a, FormKind::Skew, "sk_split");
  const std::size_t n = a.rows();
  if (n < 2) throw DomainError("sk_split: need n >= 2");
  require_reduced(a, "sk_split");
  Certificate acc = Certificate::identity(a);
  if (n == 2) {
    acc = sk2_zero_diagonal(a, trace);
  } else {
    const SmithForm sf = smith_form(a);
    const Poly f2 = sf.factors[1];
    // C = U^{-1} D V^{-1} is congruent mod f2 to a rank one form spanned by
    // alpha = U^{-1} e_1; the vector x with x* = e_1^T U pairs to 1 with it.
    const PolyMatrix uinv = inverse_unimodular(sf.U);
    const Vec alpha = uinv.col(0);
    Vec x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = star(sf.U(0, j));
    PolyMatrix q = unimodular_completion(x);
    for (std::size_t j = 1; j < n; ++j) {
      Poly pair;
      for (std::size_t i = 0; i < n; ++i) pair += star(q(i, j)) * alpha[i];
      q.add_col(j, 0, -star(pair));
    }
    emit(trace, "sk_split", "adapt to f2=" + to_string(f2), q);
    apply_congruence(acc, q);
    const Poly c11 = acc.B(0, 0);
    Vec rho(n - 1);
    for (std::size_t j = 1; j < n; ++j) rho[j - 1] = exact_div(acc.B(0, j), f2);
    const PolyMatrix dd = divide_entries(acc.B.block(1, 1, n - 1, n - 1), f2);
    // H = c11 D'' + f2 rho^dagger rho is hermitian with gcd 1; a vector
    // representing 1 by H spans, with e_1, a plane of determinant f2.
    PolyMatrix h(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0; j + 1 < n; ++j) h(i, j) = c11 * dd(i, j) + f2 * star(rho[i]) * rho[j];
    const Vec w = represent_one(h, trace);
    PolyMatrix m = PolyMatrix::identity(n);
    m.set_block(1, 1, unimodular_completion(w));
    emit(trace, "sk_split", "plane of determinant f2", m);
    apply_congruence(acc, m);
    const Certificate c2 = sk2_zero_diagonal(acc.B.block(0, 0, 2, 2), trace);
    apply_block_congruence(acc, 0, c2.S);
    const Poly r = acc.B(0, 1);
    const Poly rs = star(r);
    PolyMatrix clear = PolyMatrix::identity(n);
    for (std::size_t j = 2; j < n; ++j) {
      clear(0, j) = exact_div(acc.B(1, j), rs);
      clear(1, j) = -exact_div(acc.B(0, j), r);
    }
    emit(trace, "sk_split", "clear rows 1-2", clear);
    apply_congruence(acc, clear);
  }
  SkewSplitResult res;
  res.f = acc.B(0, 1);
  res.nu = res.f.degree();
  if (!is_pure(res.f)) throw InvariantError("sk_split: f is not pure");
  const Poly ff = res.f * star(res.f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool in_b = i < 2 && j < 2;
      const bool in_d = i >= 2 && j >= 2;
      if (!in_b && !in_d && !acc.B(i, j).is_zero()) throw InvariantError("sk_split: B is not block diagonal");
      if (in_d && !divides(ff, acc.B(i, j))) throw InvariantError("sk_split: f f* does not divide D");
    }
  require_certificate(a, acc, "sk_split");
  res.cert = std::move(acc);
  return res;
}

Certificate block_swap(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero() || !is_pure(f) || !is_pure(g)) throw DomainError("block_swap: inputs must be pure");
  const PolyMatrix start = hyperbolic_block(f);
  Certificate acc = Certificate::identity(start);
  const Poly gg = g * star(g);
  const auto [k, rem] = divmod(f * star(f), gg);
  if (!rem.is_zero() || k.degree() != 0) throw DomainError("block_swap: norms differ");
  apply_congruence(acc, PolyMatrix::diagonal({Poly(sqrt(k[0]).inverse()), Poly(Elem::one())}));
  const Poly f1 = acc.B(0, 1);
  if (f1 != g) {
    // f1 = a b and g = +-a b* with gcd(a a*, b b*) = 1.
    const Poly a = gcd(f1, g);
    const Poly b = exact_div(f1, a);
    const Poly bg = exact_div(g, a);
    const Poly as = star(a), bs = star(b);
    if (bg != bs && bg != -bs) throw InvariantError("block_swap: quotient is not a star of the other");
    const Bezout bz = gcd_bezout(b * bs, a * as);
    if (!bz.g.is_one()) throw InvariantError("block_swap: gcd(a a*, b b*) != 1");
    const Poly x = even_part(bz.u);
    const Poly y = -even_part(bz.v);
    // S = [[b* x, a y], [a*, b]] maps the g-side to the f-side; use S^{-1}.
    apply_congruence(acc, two_by_two(b, -(a * y), -as, bs * x));
    if (bg == -bs) apply_congruence(acc, PolyMatrix::diagonal({Poly(Elem::from_int(-1)), Poly(Elem::one())}));
  }
  if (acc.B != hyperbolic_block(g)) throw InvariantError("block_swap: result differs from the target block");
  require_certificate(start, acc, "block_swap");
  return acc;
}

}  // namespace hermform
