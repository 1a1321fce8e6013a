#pragma once

// Factorization of univariate polynomials over a level of the tower:
// distinct-degree plus Cantor-Zassenhaus equal-degree splitting, and root
// finding that grows the tower until the polynomial splits.

#include "hermform/poly.hpp"

#include <utility>
#include <vector>

namespace hermform {

struct Factor {
  Poly poly;  ///< monic irreducible over the level it was computed for
  int multiplicity = 1;
};

/// Irreducible factorization of f over L_level (f must have coefficients in
/// L_level). Factors are sorted by compare(Poly). The leading coefficient is
/// not included.
std::vector<Factor> factor_over(const Poly& f, std::size_t level);

/// Splits g, a monic product of distinct irreducibles of degree d over
/// L_level, into those irreducibles (sorted).
std::vector<Poly> equal_degree_split(const Poly& g, std::size_t d, std::size_t level);

/// Roots of f lying in L_level, with multiplicity, sorted.
std::vector<Elem> roots_in_level(const Poly& f, std::size_t level);

/// All deg(f) roots of f with multiplicity, sorted by the field order.
/// Appends tower levels (minimal polynomials taken monic from the
/// factorization) until f splits. Throws DomainError for f = 0.
std::vector<Elem> find_roots(const Poly& f);

}  // namespace hermform
