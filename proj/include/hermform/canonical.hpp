#pragma once

// Invariant factor sequences of epsilon-forms, their canonical block
// matrices, the canonicalizer and the congruence decision.

#include "hermform/congruence.hpp"

#include <string>
#include <vector>

namespace hermform {

struct FactorSequence {
  Vec entries;  ///< f_1 | f_2 | ... monic, then zeros
  FormKind kind = FormKind::Hermitian;
};

/// Invariant factors of an epsilon-form.
FactorSequence factor_sequence(const PolyMatrix& a, FormKind kind);

struct SequenceCheck {
  bool valid = false;
  std::string reason;                    ///< empty when valid
  std::vector<std::size_t> pair_starts;  ///< index of g_k for every pair (g_k, h_k)
  Vec witnesses;                         ///< p_k with h_k = g_k p_k p_k*, canonical choice
};

/// Conditions (i) and (ii) of the characterization. Throws DomainError for
/// malformed input (non-monic, non-homogeneous, broken divisibility, zeros
/// before nonzeros).
SequenceCheck validate_sequence(const FactorSequence& fs);

struct CanonicalBlock {
  enum class Shape { One, Two };
  Shape shape = Shape::One;
  Poly f;     ///< One: the entry (zero for the kernel part)
  Poly g, p;  ///< Two: g * [[0, p], [-p*, 0]]
  std::size_t position = 0;

  std::size_t size() const { return shape == Shape::One ? 1 : 2; }
  PolyMatrix matrix() const;
  friend bool operator==(const CanonicalBlock&, const CanonicalBlock&) = default;
};

struct CanonicalBlocks {
  FormKind kind = FormKind::Hermitian;
  std::vector<CanonicalBlock> blocks;

  std::size_t size() const;
  PolyMatrix matrix() const;
  friend bool operator==(const CanonicalBlocks&, const CanonicalBlocks&) = default;
};

/// Throws DomainError when the sequence is invalid.
CanonicalBlocks assemble_canonical(const FactorSequence& fs);

struct Canonicalization {
  Certificate cert;  ///< cert.B == blocks.matrix()
  CanonicalBlocks blocks;
  FactorSequence factors;
};

Canonicalization canonicalize(const PolyMatrix& a, FormKind kind, const TraceSink& trace = {});

struct CongruenceDecision {
  bool congruent = false;
  std::string reason;
  std::optional<Certificate> cert;  ///< S* A S = B when requested
};

/// A must be an epsilon-form of the given kind; B of another kind is
/// reported as not congruent. Size mismatch throws DomainError.
CongruenceDecision are_congruent(const PolyMatrix& a, const PolyMatrix& b, FormKind kind,
                                 bool want_certificate = false);

/// "1x1: f" / "2x2: g | p" lines, one per block.
std::string format_blocks(const CanonicalBlocks& cb);

}  // namespace hermform
