#pragma once

// Random epsilon-forms with known invariant factors: A = S* C S where C is a
// direct sum of 1x1 blocks and zero-diagonal 2x2 blocks g [[0, p], [-p*, 0]]
// over F_p, and S is a product of random elementary moves.

#include "hermform/canonical.hpp"

#include <cstdint>

namespace hermform {

struct RandomSpec {
  std::uint64_t seed = 1;
  std::size_t n = 3;
  int max_degree = 6;  ///< bound on the entries of C
  FormKind kind = FormKind::Hermitian;
  int moves = 4;            ///< elementary moves composed into S
  int move_degree = 1;      ///< degree bound of transvection multipliers
  double singular_rate = 0.15;
};

struct RandomInstance {
  PolyMatrix a, c, s;  ///< a = s* c s
  FactorSequence factors;
};

/// Deterministic in the spec; needs an active tower over the intended prime
/// and never grows it.
RandomInstance random_instance(const RandomSpec& spec);

/// Random polynomial of degree <= deg over F_p.
Poly random_poly(std::mt19937_64& rng, int deg);

}  // namespace hermform
