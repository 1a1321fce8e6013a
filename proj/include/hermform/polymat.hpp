#pragma once

// Matrices over R = F[t]: star-transpose, determinants, Smith normal form,
// congruence certificates and the basis-change helpers used by the
// reductions.

#include "hermform/starpoly.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hermform {

using Vec = std::vector<Poly>;

class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols) {}
  PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Poly> entries);

  static PolyMatrix identity(std::size_t n);
  static PolyMatrix diagonal(const Vec& d);
  static PolyMatrix column(const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Poly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec col(std::size_t j) const;
  PolyMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const PolyMatrix& b);

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row_dst += c * row_src
  void add_row(std::size_t dst, std::size_t src, const Poly& c);
  /// col_dst += col_src * c
  void add_col(std::size_t dst, std::size_t src, const Poly& c);
  void scale_row(std::size_t r, const Poly& c);
  void scale_col(std::size_t c, const Poly& k);

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& c, const PolyMatrix& a);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const PolyMatrix& a, const PolyMatrix& b) { return !(a == b); }

  const std::vector<Poly>& entries() const { return e_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> e_;
};

PolyMatrix direct_sum(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix transpose(const PolyMatrix& a);
/// Entries divided exactly by d.
PolyMatrix divide_entries(const PolyMatrix& a, const Poly& d);
/// Row-major "[[a, b], [c, d]]".
std::string to_string(const PolyMatrix& a);
/// Entry (i, j) becomes a(j, i)*.
PolyMatrix star_transpose(const PolyMatrix& a);

/// The sign epsilon of A* = epsilon A.
enum class FormKind : int { Hermitian = 1, Skew = -1 };

inline int sign_of(FormKind k) { return static_cast<int>(k); }
inline FormKind flip(FormKind k) { return k == FormKind::Hermitian ? FormKind::Skew : FormKind::Hermitian; }
std::string_view to_string(FormKind k);

/// Hermitian if A* = A, Skew if A* = -A, nullopt otherwise. The zero matrix
/// reports Hermitian.
std::optional<FormKind> form_kind(const PolyMatrix& a);
bool has_kind(const PolyMatrix& a, FormKind k);

/// f_A(v, w) = v* A w.
Poly form_value(const PolyMatrix& a, const Vec& v, const Vec& w);

/// Fraction-free (Bareiss) elimination.
Poly determinant(const PolyMatrix& a);
std::size_t rank(const PolyMatrix& a);

struct SmithForm {
  PolyMatrix U, V, D;  ///< U A V = D
  Vec factors;         ///< monic f_1 | f_2 | ..., then zeros
};
SmithForm smith_form(const PolyMatrix& a);
/// Invariant factors only (same algorithm, no transforms kept).
Vec invariant_factors(const PolyMatrix& a);

struct MatrixGcd {
  Poly d;         ///< monic
  Parity parity;  ///< Even or Odd for a nonzero epsilon-form
};
MatrixGcd gcd_of_matrix(const PolyMatrix& a, FormKind kind);
Poly entry_gcd(const PolyMatrix& a);

/// S* A S = B with det S a nonzero constant.
struct Certificate {
  PolyMatrix S, B;

  static Certificate identity(const PolyMatrix& a) { return {PolyMatrix::identity(a.rows()), a}; }
  bool verifies(const PolyMatrix& a) const;
};

/// Reason a certificate fails, or nullopt when S* A S = B and S is
/// unimodular.
std::optional<std::string> certificate_failure(const PolyMatrix& a, const PolyMatrix& s, const PolyMatrix& b);

bool is_unimodular(const PolyMatrix& s);
/// Inverse of a matrix with constant nonzero determinant.
PolyMatrix inverse_unimodular(const PolyMatrix& s);

/// S <- S M, B <- M* B M.
void apply_congruence(Certificate& acc, const PolyMatrix& move);
/// Composes a certificate for the trailing/leading block embedded at offset.
void apply_block_congruence(Certificate& acc, std::size_t offset, const PolyMatrix& move);

/// T unimodular with T e_1 = v, for v primitive (entry gcd 1).
PolyMatrix unimodular_completion(const Vec& v);

/// Greedy congruence by transvections that lowers the total entry degree.
Certificate reduce_degrees(const PolyMatrix& a);

/// B = 0_{n-r} (+) A' with det A' != 0.
Certificate kernel_split(const PolyMatrix& a, FormKind kind);

/// Optional hook that receives one line per elementary move.
using TraceSink = std::function<void(const std::string&)>;

}  // namespace hermform
