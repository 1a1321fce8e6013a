#pragma once

// Exact arithmetic in the algebraic closure of F_p (p odd), realized as an
// append-only tower F_p = L_0 < L_1 < L_2 < ... where every L_k is a simple
// extension of L_{k-1}.
//
// Elements are stored as flat digit vectors over F_p in the tensor basis
// u_1^{i_1} u_2^{i_2} ... u_k^{i_k} (mixed radix, u_1 fastest). An element of
// L_j is therefore a prefix of its image in L_k for any k >= j, so lifting
// between levels is zero padding and equality is plain digit comparison once
// trailing zeros are stripped.
//
// All arithmetic goes through the tower that is active on the calling thread
// (see TowerScope). One tower per thread; elements are plain values.

#include <boost/container/small_vector.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace hermform {

using BigInt = boost::multiprecision::cpp_int;
using Digits = boost::container::small_vector<std::uint32_t, 4>;

class Tower;

/// Raised for mathematically invalid requests (division by zero, impure
/// inputs, parity mismatches, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when an internal invariant is violated. Seeing one is a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class Elem {
 public:
  Elem() = default;
  explicit Elem(Digits digits);

  static Elem from_int(long long value);
  static Elem one() { return from_int(1); }

  bool is_zero() const { return d_.empty(); }
  bool is_one() const { return d_.size() == 1 && d_[0] == 1; }
  /// True when the element lies in the prime field.
  bool is_prime() const { return d_.size() <= 1; }
  std::uint32_t prime_value() const { return d_.empty() ? 0 : d_[0]; }
  const Digits& digits() const { return d_; }

  /// Smallest tower level containing the element.
  std::size_t level() const;

  Elem inverse() const;

  Elem& operator+=(const Elem& o);
  Elem& operator-=(const Elem& o);
  Elem& operator*=(const Elem& o);
  Elem& operator/=(const Elem& o);

  friend Elem operator+(Elem a, const Elem& b) { return a += b; }
  friend Elem operator-(Elem a, const Elem& b) { return a -= b; }
  friend Elem operator*(const Elem& a, const Elem& b);
  friend Elem operator/(const Elem& a, const Elem& b) { return a * b.inverse(); }
  Elem operator-() const;

  friend bool operator==(const Elem& a, const Elem& b) { return a.d_ == b.d_; }
  friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }

 private:
  void strip();
  Digits d_;
};

/// Deterministic total order: level first, then digit vectors compared
/// lexicographically from the lowest digit.
int compare(const Elem& a, const Elem& b);
inline bool elem_less(const Elem& a, const Elem& b) { return compare(a, b) < 0; }

Elem pow(const Elem& a, const BigInt& e);
/// The smaller (in the total order) of the two square roots; grows the
/// tower by one quadratic level when a is not yet a square.
Elem sqrt(const Elem& a);
bool is_square(const Elem& a);

struct Level {
  std::string name;          ///< "u1", "u2", ...; empty for the prime field
  std::vector<Elem> minpoly; ///< monic, low to high, coefficients in the level below
  std::size_t degree = 1;    ///< relative degree over the level below
  std::size_t abs_degree = 1;
  bool quadratic = false;    ///< minpoly is x^2 - c
  bool standard = false;     ///< x^2 - (first non-square of the level below)
  Elem square;               ///< c when quadratic
};

class Tower {
 public:
  static constexpr std::uint64_t kDefaultSeed = 0x5eed'c0de'2718'2818ULL;

  explicit Tower(std::uint32_t p, std::uint64_t seed = kDefaultSeed);

  std::uint32_t p() const { return p_; }
  /// Index of the highest level (0 when only F_p exists).
  std::size_t top() const { return levels_.size() - 1; }
  const Level& level(std::size_t k) const { return levels_.at(k); }
  std::size_t abs_degree(std::size_t k) const { return levels_.at(k).abs_degree; }
  std::size_t level_of(const Elem& a) const;
  /// Cardinality p^{abs_degree(k)}.
  BigInt order(std::size_t k) const;

  /// Appends L_{top+1} = L_top[x]/(minpoly). The polynomial must be monic of
  /// degree >= 2 with coefficients in L_top; irreducibility is the caller's
  /// responsibility (factorization code only passes irreducible factors).
  std::size_t append_level(std::vector<Elem> minpoly);
  /// Appends the canonical quadratic level x^2 - c, c the first non-square
  /// of L_top in enumeration order.
  std::size_t append_standard_level();

  Elem first_nonsquare(std::size_t k);

  /// Element number n of the enumeration order (base-p digits of n).
  Elem nth_element(const BigInt& n) const;

  std::mt19937_64& rng() { return rng_; }
  Elem random_elem(std::size_t k);

  // Raw arithmetic. Elem operators forward here through the active tower.
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  std::uint32_t reduce(long long v) const;

  /// Element as an expression in u1, u2, ... (prime digits symmetric).
  std::string format(const Elem& a) const;

  static Tower& current();
  static Tower* current_or_null();

 private:
  friend class TowerScope;
  void mul_dense(std::size_t k, const std::uint32_t* a, const std::uint32_t* b,
                 std::uint32_t* out) const;
  Elem inv_level(std::size_t k, const Elem& a) const;
  std::string format_level(std::size_t k, const Digits& d, std::size_t offset) const;

  std::uint32_t p_;
  std::vector<Level> levels_;
  std::vector<std::optional<Elem>> nonsquares_;
  std::mt19937_64 rng_;
};

/// Makes a tower the active one for this thread for the lifetime of the
/// scope. Scopes nest.
class TowerScope {
 public:
  explicit TowerScope(Tower& t);
  ~TowerScope();
  TowerScope(const TowerScope&) = delete;
  TowerScope& operator=(const TowerScope&) = delete;

 private:
  Tower* prev_;
};

/// Deterministic unbounded stream 0, 1, ..., p-1, then the elements of
/// L_1 \ L_0, then L_2 \ L_1, ... Extends the tower with standard levels
/// when the existing levels are exhausted.
class ScalarStream {
 public:
  explicit ScalarStream(Tower& t) : tower_(&t) {}
  Elem next();
  const BigInt& emitted() const { return n_; }

 private:
  Tower* tower_;
  BigInt n_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace hermform
