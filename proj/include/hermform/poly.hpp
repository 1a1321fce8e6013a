#pragma once

// Dense univariate polynomials over the active tower. The same type serves
// as the ring R = F[t] (see starpoly.hpp for the involution) and as the
// auxiliary F[x] used by root finding.

#include "hermform/fftower.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace hermform {

class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs);
  Poly(const Elem& c);  // NOLINT: constants convert implicitly

  static Poly from_ints(std::initializer_list<long long> low_to_high);
  static Poly constant(long long c) { return Poly(Elem::from_int(c)); }
  /// c * t^k
  static Poly monomial(const Elem& c, std::size_t k);
  static Poly t() { return monomial(Elem::one(), 1); }

  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_constant() const { return c_.size() <= 1; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::size_t size() const { return c_.size(); }
  const Elem& operator[](std::size_t i) const;
  const Elem& lead() const;
  const std::vector<Elem>& coeffs() const { return c_; }

  Poly monic() const;
  Elem eval(const Elem& x) const;
  Poly derivative() const;
  /// Multiplicity of t as a factor (0 for the zero polynomial).
  std::size_t low_order() const;
  Poly shift_down(std::size_t k) const;  // divide by t^k, dropping low terms
  Poly shift_up(std::size_t k) const;    // multiply by t^k

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Elem& c, const Poly& a);
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Elem> c_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
inline Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
/// Exact quotient; throws InvariantError when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly gcd(const std::vector<Poly>& polys);

struct Bezout {
  Poly g, u, v;  ///< a*u + b*v = g, g monic
};
/// Extended Euclid with u reduced modulo b/g. Throws DomainError for a = b = 0.
Bezout gcd_bezout(const Poly& a, const Poly& b);

Poly powmod(const Poly& base, const BigInt& e, const Poly& mod);

/// Lexicographic comparison by degree, then coefficients from the top.
int compare(const Poly& a, const Poly& b);

std::string to_string(const Poly& a, const std::string& var = "t");

}  // namespace hermform
