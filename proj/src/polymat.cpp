#include "hermform/polymat.hpp"

#include <algorithm>

namespace hermform {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries)
    : rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows * cols) throw DomainError("matrix entry count does not match its shape");
}

PolyMatrix PolyMatrix::identity(std::size_t n) {
  PolyMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly(Elem::one());
  return m;
}

PolyMatrix PolyMatrix::diagonal(const Vec& d) {
  PolyMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

PolyMatrix PolyMatrix::column(const Vec& v) { return PolyMatrix(v.size(), 1, v); }

bool PolyMatrix::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Poly& p) { return p.is_zero(); });
}

Vec PolyMatrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

PolyMatrix PolyMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  PolyMatrix m(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

void PolyMatrix::set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

void PolyMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void PolyMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void PolyMatrix::add_row(std::size_t dst, std::size_t src, const Poly& c) {
  if (c.is_zero()) return;
  for (std::size_t j = 0; j < cols_; ++j)
    if (!(*this)(src, j).is_zero()) (*this)(dst, j) += c * (*this)(src, j);
}

void PolyMatrix::add_col(std::size_t dst, std::size_t src, const Poly& c) {
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, src).is_zero()) (*this)(i, dst) += (*this)(i, src) * c;
}

void PolyMatrix::scale_row(std::size_t r, const Poly& c) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = c * (*this)(r, j);
}

void PolyMatrix::scale_col(std::size_t c, const Poly& k) {
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, c) = (*this)(i, c) * k;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
  PolyMatrix m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Poly& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (!b(k, j).is_zero()) m(i, j) += x * b(k, j);
    }
  return m;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix sum shape mismatch");
  PolyMatrix m = a;
  for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
  return m;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DomainError("matrix difference shape mismatch");
  PolyMatrix m = a;
  for (std::size_t i = 0; i < m.e_.size(); ++i) m.e_[i] -= b.e_[i];
  return m;
}

PolyMatrix operator*(const Poly& c, const PolyMatrix& a) {
  PolyMatrix m = a;
  for (auto& e : m.e_) e = c * e;
  return m;
}

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b) {
  PolyMatrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

PolyMatrix transpose(const PolyMatrix& a) {
  PolyMatrix m(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(j, i) = a(i, j);
  return m;
}

PolyMatrix divide_entries(const PolyMatrix& a, const Poly& d) {
  PolyMatrix m = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = exact_div(a(i, j), d);
  return m;
}

std::string to_string(const PolyMatrix& a) {
  std::string s = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) s += ", ";
      s += to_string(a(i, j));
    }
    s += "]";
  }
  return s + "]";
}

PolyMatrix star_transpose(const PolyMatrix& a) {
  PolyMatrix m(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(j, i) = star(a(i, j));
  return m;
}

std::string_view to_string(FormKind k) { return k == FormKind::Hermitian ? "hermitian" : "skew-hermitian"; }

bool has_kind(const PolyMatrix& a, FormKind k) {
  if (!a.is_square()) return false;
  const std::size_t n = a.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const Poly s = star(a(j, i));
      if (k == FormKind::Hermitian ? a(i, j) != s : a(i, j) != -s) return false;
    }
  return true;
}

std::optional<FormKind> form_kind(const PolyMatrix& a) {
  if (has_kind(a, FormKind::Hermitian)) return FormKind::Hermitian;
  if (has_kind(a, FormKind::Skew)) return FormKind::Skew;
  return std::nullopt;
}

Poly form_value(const PolyMatrix& a, const Vec& v, const Vec& w) {
  if (v.size() != a.rows() || w.size() != a.cols()) throw DomainError("form value shape mismatch");
  Poly acc;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (v[i].is_zero()) continue;
    Poly row;
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!w[j].is_zero() && !a(i, j).is_zero()) row += a(i, j) * w[j];
    acc += star(v[i]) * row;
  }
  return acc;
}

Poly determinant(const PolyMatrix& a) {
  if (!a.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Poly(Elem::one());
  PolyMatrix m = a;
  Poly prev(Elem::one());
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m(r, k).is_zero()) ++r;
      if (r == n) return {};
      m.swap_rows(k, r);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

std::size_t rank(const PolyMatrix& a) {
  std::size_t r = 0;
  for (const auto& f : invariant_factors(a))
    if (!f.is_zero()) ++r;
  return r;
}

namespace {

SmithForm smith_impl(const PolyMatrix& a, bool track) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithForm sf;
  sf.D = a;
  if (track) {
    sf.U = PolyMatrix::identity(m);
    sf.V = PolyMatrix::identity(n);
  }
  PolyMatrix& D = sf.D;
  const std::size_t lim = std::min(m, n);
  for (std::size_t k = 0; k < lim; ++k) {
    for (;;) {
      // Pivot: minimal degree, ties broken row-major.
      std::size_t pi = m, pj = n;
      int best = -1;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j) {
          const int d = D(i, j).degree();
          if (d >= 0 && (best < 0 || d < best)) {
            best = d;
            pi = i;
            pj = j;
          }
        }
      if (best < 0) goto finished;
      D.swap_rows(k, pi);
      D.swap_cols(k, pj);
      if (track) {
        sf.U.swap_rows(k, pi);
        sf.V.swap_cols(k, pj);
      }
      bool clean = true;
      for (std::size_t i = k + 1; i < m; ++i) {
        if (D(i, k).is_zero()) continue;
        auto [q, r] = divmod(D(i, k), D(k, k));
        const Poly nq = -q;
        D.add_row(i, k, nq);
        if (track) sf.U.add_row(i, k, nq);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (D(k, j).is_zero()) continue;
        auto [q, r] = divmod(D(k, j), D(k, k));
        const Poly nq = -q;
        D.add_col(j, k, nq);
        if (track) sf.V.add_col(j, k, nq);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;
      // Divisibility of the remaining block by the pivot.
      bool moved = false;
      for (std::size_t i = k + 1; i < m && !moved; ++i)
        for (std::size_t j = k + 1; j < n && !moved; ++j)
          if (!divides(D(k, k), D(i, j))) {
            const Poly one(Elem::one());
            D.add_row(k, i, one);
            if (track) sf.U.add_row(k, i, one);
            moved = true;
          }
      if (!moved) break;
    }
    {
      const Poly li(D(k, k).lead().inverse());
      D.scale_row(k, li);
      if (track) sf.U.scale_row(k, li);
    }
  }
finished:
  sf.factors.resize(lim);
  for (std::size_t k = 0; k < lim; ++k) sf.factors[k] = D(k, k);
  return sf;
}

}  // namespace

SmithForm smith_form(const PolyMatrix& a) { return smith_impl(a, true); }

Vec invariant_factors(const PolyMatrix& a) { return smith_impl(a, false).factors; }

Poly entry_gcd(const PolyMatrix& a) { return gcd(a.entries()); }

MatrixGcd gcd_of_matrix(const PolyMatrix& a, FormKind kind) {
  if (a.is_zero()) throw DomainError("gcd of the zero matrix");
  if (!has_kind(a, kind)) throw DomainError("gcd_of_matrix: matrix is not of the stated kind");
  Poly d = entry_gcd(a);
  const Parity par = parity(d);
  if (par != Parity::Even && par != Parity::Odd) throw InvariantError("gcd of an epsilon-form is not homogeneous");
  return {d, par};
}

bool is_unimodular(const PolyMatrix& s) {
  if (!s.is_square()) return false;
  const Poly d = determinant(s);
  return d.degree() == 0;
}

std::optional<std::string> certificate_failure(const PolyMatrix& a, const PolyMatrix& s, const PolyMatrix& b) {
  if (!a.is_square() || !s.is_square() || !b.is_square() || a.rows() != s.rows() || a.rows() != b.rows())
    return std::string("shape mismatch");
  if (!is_unimodular(s)) return std::string("not unimodular");
  const PolyMatrix c = star_transpose(s) * a * s;
  for (std::size_t i = 0; i < c.rows(); ++i)
    for (std::size_t j = 0; j < c.cols(); ++j)
      if (c(i, j) != b(i, j))
        return "mismatch at entry (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) + "): S*AS has " +
               to_string(c(i, j)) + ", expected " + to_string(b(i, j));
  return std::nullopt;
}

bool Certificate::verifies(const PolyMatrix& a) const { return !certificate_failure(a, S, B).has_value(); }

PolyMatrix inverse_unimodular(const PolyMatrix& s) {
  if (!s.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = s.rows();
  PolyMatrix m = s;
  PolyMatrix inv = PolyMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    // Euclid down column k until a single nonzero entry remains.
    for (;;) {
      std::size_t piv = n;
      for (std::size_t i = k; i < n; ++i)
        if (!m(i, k).is_zero() && (piv == n || m(i, k).degree() < m(piv, k).degree())) piv = i;
      if (piv == n) throw DomainError("matrix is not unimodular");
      m.swap_rows(k, piv);
      inv.swap_rows(k, piv);
      bool done = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m(i, k).is_zero()) continue;
        const Poly q = -divmod(m(i, k), m(k, k)).first;
        m.add_row(i, k, q);
        inv.add_row(i, k, q);
        if (!m(i, k).is_zero()) done = false;
      }
      if (done) break;
    }
    if (m(k, k).degree() != 0) throw DomainError("matrix is not unimodular");
    const Poly li(m(k, k).lead().inverse());
    m.scale_row(k, li);
    inv.scale_row(k, li);
  }
  for (std::size_t k = n; k-- > 0;)
    for (std::size_t i = 0; i < k; ++i) {
      if (m(i, k).is_zero()) continue;
      const Poly q = -m(i, k);
      m.add_row(i, k, q);
      inv.add_row(i, k, q);
    }
  return inv;
}

void apply_congruence(Certificate& acc, const PolyMatrix& move) {
  acc.S = acc.S * move;
  acc.B = star_transpose(move) * acc.B * move;
}

void apply_block_congruence(Certificate& acc, std::size_t offset, const PolyMatrix& move) {
  PolyMatrix full = PolyMatrix::identity(acc.S.rows());
  full.set_block(offset, offset, move);
  apply_congruence(acc, full);
}

PolyMatrix unimodular_completion(const Vec& v) {
  const std::size_t n = v.size();
  if (n == 0) throw DomainError("completion of an empty vector");
  PolyMatrix t = PolyMatrix::identity(n);
  Vec u = v;
  for (std::size_t i = 1; i < n; ++i) {
    if (u[i].is_zero()) continue;
    if (u[0].is_zero()) {
      std::swap(u[0], u[i]);
      t.swap_cols(0, i);
      continue;
    }
    const Bezout bz = gcd_bezout(u[0], u[i]);
    const Poly a = exact_div(u[0], bz.g), b = exact_div(u[i], bz.g);
    // T <- T [[a, -v], [b, u]] on columns (0, i).
    for (std::size_t r = 0; r < n; ++r) {
      const Poly c0 = t(r, 0), ci = t(r, i);
      t(r, 0) = c0 * a + ci * b;
      t(r, i) = ci * bz.u - c0 * bz.v;
    }
    u[0] = bz.g;
    u[i] = Poly();
  }
  if (u[0].degree() != 0) throw DomainError("unimodular completion needs a primitive vector");
  t.scale_col(0, u[0]);
  return t;
}

namespace {

long entry_size(const Poly& f) { return f.is_zero() ? 0 : f.degree() + 1; }

long line_size(const PolyMatrix& b, std::size_t j) {
  long s = 0;
  for (std::size_t k = 0; k < b.rows(); ++k) s += entry_size(b(k, j)) + (k == j ? 0 : entry_size(b(j, k)));
  return s;
}

// col j += q col i, then row j += q* row i.
void transvect(PolyMatrix& b, std::size_t i, std::size_t j, const Poly& q) {
  for (std::size_t k = 0; k < b.rows(); ++k) b(k, j) += b(k, i) * q;
  const Poly qs = star(q);
  for (std::size_t k = 0; k < b.cols(); ++k) b(j, k) += qs * b(i, k);
}

}  // namespace

Certificate reduce_degrees(const PolyMatrix& a) {
  Certificate acc = Certificate::identity(a);
  const std::size_t n = a.rows();
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t i = 0; i < n; ++i) {
        if (i == j) continue;
        for (std::size_t k = 0; k < n; ++k) {
          const Poly& piv = acc.B(k, i);
          if (piv.is_zero() || acc.B(k, j).degree() < piv.degree()) continue;
          const Poly q = -divmod(acc.B(k, j), piv).first;
          PolyMatrix b = acc.B;
          transvect(b, i, j, q);
          if (line_size(b, j) >= line_size(acc.B, j)) continue;
          acc.B = std::move(b);
          acc.S.add_col(j, i, q);
          progress = true;
        }
      }
    }
  }
  return acc;
}

Certificate kernel_split(const PolyMatrix& a, FormKind kind) {
  if (!has_kind(a, kind)) throw DomainError("kernel_split: matrix is not of the stated kind");
  const std::size_t n = a.rows();
  if (a.is_zero()) return Certificate::identity(a);
  const SmithForm sf = smith_form(a);
  std::size_t r = 0;
  for (const auto& f : sf.factors)
    if (!f.is_zero()) ++r;
  if (r == n) return Certificate::identity(a);
  // Columns r.. of V span ker A and form a direct summand.
  PolyMatrix s(n, n);
  for (std::size_t j = 0; j < n - r; ++j)
    for (std::size_t i = 0; i < n; ++i) s(i, j) = sf.V(i, r + j);
  for (std::size_t j = 0; j < r; ++j)
    for (std::size_t i = 0; i < n; ++i) s(i, n - r + j) = sf.V(i, j);
  Certificate c{s, star_transpose(s) * a * s};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((i < n - r || j < n - r) && !c.B(i, j).is_zero()) throw InvariantError("kernel split left a nonzero entry");
  return c;
}

}  // namespace hermform
