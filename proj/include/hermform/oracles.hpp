#pragma once

// Brute-force and independently formulated checks used by the selftest and
// acceptance runners. Nothing here calls into the reduction code.

#include "hermform/canonical.hpp"

#include <optional>

namespace hermform {

/// sum_ij a(i, j)* ... computed entry by entry from the coefficient lists.
Poly naive_form_value(const PolyMatrix& a, const Vec& v, const Vec& w);

/// Some primitive v over F_p with deg v_i <= max_deg and f_A(v, v) = 0.
std::optional<Vec> brute_force_isotropic(const PolyMatrix& a, int max_deg);

/// Every monic homogeneous polynomial over F_p of degree <= max_deg.
std::vector<Poly> homogeneous_monics(int max_deg);

/// All sequences f_1 | f_2 | ... | f_n of monic homogeneous polynomials of
/// degree <= max_deg, followed by zeros, for n = 1 .. max_n.
std::vector<FactorSequence> enumerate_sequences(std::size_t max_n, int max_deg, FormKind kind);

/// Realizability by pairing: every entry is either of the right parity or
/// sits in an adjacent pair of wrong-parity entries whose quotient is
/// nonzero at 0. Decided by dynamic programming over positions.
bool realizable_by_pairing(const FactorSequence& fs);

}  // namespace hermform
