#pragma once

// The ring R = F[t] with the involution t -> -t. R splits as R_0 + R_1 with
// R_0 = F[t^2] (even) and R_1 = t R_0 (odd). An element a is pure when
// gcd(a, a*) = 1.

#include "hermform/poly.hpp"

#include <optional>
#include <string_view>

namespace hermform {

enum class Parity { Zero, Even, Odd, Mixed };

std::string_view to_string(Parity p);

/// Coefficient of t^k negated for odd k.
Poly star(const Poly& a);
Parity parity(const Poly& a);
Poly even_part(const Poly& a);
Poly odd_part(const Poly& a);

/// gcd(a, a*) = 1. Throws DomainError for a = 0.
bool is_pure(const Poly& a);

struct PureSplit {
  Poly a0;  ///< monic gcd(a, a*), homogeneous
  Poly a1;  ///< pure, a = a0 * a1
};
PureSplit pure_split(const Poly& a);

/// Highest tower level among the coefficients.
std::size_t coeff_level(const Poly& a);

/// z with z * z* = y for even nonzero y. z = c * t^m * prod(Q_j^{m_j}) where
/// for every irreducible pair {Q, Q*} dividing y away from 0 one side is kept
/// across all multiplicities, so z / t^m is pure. Among the two sides the
/// smaller monic polynomial is taken, which makes the result canonical.
Poly norm_factor(const Poly& y);
/// Upper bound on the tower level norm_factor(y) works in; never grows the
/// tower.
std::size_t norm_level_bound(const Poly& y);

/// z with z * z* = y and a1 * z pure. Requires y even with y(0) != 0 and a1
/// pure.
Poly norm_factor_avoiding(const Poly& y, const Poly& a1);

enum class NormSign { Plus, Minus };

/// x with a x + a* x* = b (Plus, b even) or a x - a* x* = b (Minus, b odd).
Poly solve_norm_equation(const Poly& a, const Poly& b, NormSign sign);

struct EvenBezout {
  Poly x;  ///< even
  Poly y;
};
/// a x + b y = 1 with x even; requires gcd(a, b) = 1 and b pure.
EvenBezout coprime_even_bezout(const Poly& a, const Poly& b);

/// Homogeneous Bezout: a x + b y = 1 with x* = sigma x, y even, for a
/// homogeneous (a* = sigma a) and b even with gcd(a, b) = 1.
EvenBezout homogeneous_bezout(const Poly& a, const Poly& b);

/// Sign sigma with a* = sigma a for homogeneous nonzero a; nullopt otherwise.
std::optional<int> homogeneity(const Poly& a);

}  // namespace hermform
