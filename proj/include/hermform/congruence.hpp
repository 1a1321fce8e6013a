#pragma once

// Constructive congruence moves: isotropic vectors, the 2x2 normalizations,
// representing 1 by a hermitian form, splitting off a hyperbolic skew block,
// and the block swap. Every operation returning a Certificate has verified
// it before returning.

#include "hermform/polymat.hpp"

namespace hermform {

/// Primitive v != 0 with f_A(v, v) = 0.
Vec isotropic_vector(const PolyMatrix& a, FormKind kind);

/// A hermitian 2x2, gcd(A) = 1, det A != 0: B = diag(1, det A).
Certificate her2_diagonalize(const PolyMatrix& a, const TraceSink& trace = {});

/// A skew-hermitian 2x2, gcd(A) = 1, det A != 0: B = [[0, r], [-r*, 0]].
Certificate sk2_zero_diagonal(const PolyMatrix& a, const TraceSink& trace = {});

/// A hermitian with gcd(A) = 1: v with f_A(v, v) = 1.
Vec represent_one(const PolyMatrix& a, const TraceSink& trace = {});

/// f_A(v, v) = 1: B = (1) + A''.
Certificate split_one(const PolyMatrix& a, const Vec& v);

struct SkewSplitResult {
  Certificate cert;  ///< B = [[0, f], [-f*, 0]] + D
  Poly f;            ///< pure
  int nu = 0;        ///< deg f
};

/// A skew-hermitian, gcd(A) = 1, det A != 0, n >= 2.
SkewSplitResult sk_split(const PolyMatrix& a, const TraceSink& trace = {});

/// Certificate on [[0, f], [-f*, 0]] with B = [[0, g], [-g*, 0]]. Requires
/// f, g pure and f f* = c g g* for a nonzero constant c.
Certificate block_swap(const Poly& f, const Poly& g);

/// [[0, f], [-f*, 0]]
PolyMatrix hyperbolic_block(const Poly& f);

}  // namespace hermform
