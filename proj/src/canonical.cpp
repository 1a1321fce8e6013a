#include "hermform/canonical.hpp"

namespace hermform {

namespace {

// +1 for even, -1 for odd.
int poly_sign(const Poly& f) { return parity(f) == Parity::Odd ? -1 : 1; }

}  // namespace

FactorSequence factor_sequence(const PolyMatrix& a, FormKind kind) {
  if (!has_kind(a, kind)) throw DomainError("factor_sequence: matrix is not " + std::string(to_string(kind)));
  return {invariant_factors(a), kind};
}

SequenceCheck validate_sequence(const FactorSequence& fs) {
  const Vec& f = fs.entries;
  const std::size_t n = f.size();
  std::size_t r = 0;
  while (r < n && !f[r].is_zero()) ++r;
  for (std::size_t i = r; i < n; ++i)
    if (!f[i].is_zero()) throw DomainError("factor sequence: nonzero entry after a zero");
  for (std::size_t i = 0; i < r; ++i) {
    if (!f[i].lead().is_one()) throw DomainError("factor sequence: entry " + std::to_string(i + 1) + " is not monic");
    const Parity par = parity(f[i]);
    if (par != Parity::Even && par != Parity::Odd)
      throw DomainError("factor sequence: entry " + std::to_string(i + 1) + " is not homogeneous");
    if (i + 1 < r && !divides(f[i], f[i + 1]))
      throw DomainError("factor sequence: entry " + std::to_string(i + 1) + " does not divide the next");
  }
  SequenceCheck out;
  const int eps = sign_of(fs.kind);
  for (std::size_t i = 0; i < r;) {
    if (poly_sign(f[i]) == eps) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < r && poly_sign(f[j]) != eps) ++j;
    if ((j - i) % 2 != 0) {
      out.reason = "run of " + std::string(eps == 1 ? "odd" : "even") + " factors at positions " +
                   std::to_string(i + 1) + ".." + std::to_string(j) + " has odd length";
      out.pair_starts.clear();
      out.witnesses.clear();
      return out;
    }
    for (std::size_t k = i; k < j; k += 2) {
      const Poly q = exact_div(f[k + 1], f[k]);
      if (q[0].is_zero()) {
        out.reason = "f_" + std::to_string(k + 2) + " / f_" + std::to_string(k + 1) +
                     " vanishes at 0, so it is not p p* with p pure";
        out.pair_starts.clear();
        out.witnesses.clear();
        return out;
      }
      out.pair_starts.push_back(k);
      out.witnesses.push_back(norm_factor(q));
    }
    i = j;
  }
  out.valid = true;
  return out;
}

PolyMatrix CanonicalBlock::matrix() const {
  if (shape == Shape::One) return PolyMatrix(1, 1, {f});
  return g * hyperbolic_block(p);
}

std::size_t CanonicalBlocks::size() const {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  return n;
}

PolyMatrix CanonicalBlocks::matrix() const {
  PolyMatrix m(size(), size());
  std::size_t off = 0;
  for (const auto& b : blocks) {
    m.set_block(off, off, b.matrix());
    off += b.size();
  }
  return m;
}

CanonicalBlocks assemble_canonical(const FactorSequence& fs) {
  const SequenceCheck chk = validate_sequence(fs);
  if (!chk.valid) throw DomainError("assemble_canonical: " + chk.reason);
  CanonicalBlocks cb;
  cb.kind = fs.kind;
  std::size_t next_pair = 0;
  for (std::size_t i = 0; i < fs.entries.size();) {
    CanonicalBlock b;
    b.position = i;
    if (next_pair < chk.pair_starts.size() && chk.pair_starts[next_pair] == i) {
      b.shape = CanonicalBlock::Shape::Two;
      b.g = fs.entries[i];
      b.p = chk.witnesses[next_pair++];
      i += 2;
    } else {
      b.f = fs.entries[i];
      ++i;
    }
    cb.blocks.push_back(std::move(b));
  }
  return cb;
}

Canonicalization canonicalize(const PolyMatrix& a, FormKind kind, const TraceSink& trace) {
  if (!has_kind(a, kind)) throw DomainError("canonicalize: matrix is not " + std::string(to_string(kind)));
  Canonicalization out;
  out.factors = factor_sequence(a, kind);
  const SequenceCheck chk = validate_sequence(out.factors);
  if (!chk.valid) throw InvariantError("canonicalize: invariant factors violate the characterization: " + chk.reason);
  out.blocks = assemble_canonical(out.factors);
  const std::size_t n = a.rows();
  std::size_t r = 0;
  for (const auto& f : out.factors.entries)
    if (!f.is_zero()) ++r;

  Certificate acc = kernel_split(a, kind);
  if (r < n) {
    // 0 + A' -> A' + 0
    PolyMatrix perm(n, n);
    for (std::size_t j = 0; j < n; ++j) perm(j, (j + r) % n) = Poly(Elem::one());
    apply_congruence(acc, perm);
    if (trace) trace("canonicalize: kernel of rank " + std::to_string(n - r) + " moved last");
  }

  std::size_t off = 0;
  while (off < r) {
    const std::size_t m = r - off;
    apply_block_congruence(acc, off, reduce_degrees(acc.B.block(off, off, m, m)).S);
    const PolyMatrix sub = acc.B.block(off, off, m, m);
    const Poly d = entry_gcd(sub);
    const PolyMatrix c = divide_entries(sub, d);
    const FormKind ck = parity(d) == Parity::Odd ? flip(kind) : kind;
    if (trace) trace("canonicalize: block at " + std::to_string(off + 1) + " gcd=" + to_string(d) + " reduced kind " +
                     std::string(to_string(ck)));
    if (ck == FormKind::Hermitian) {
      const Vec v = represent_one(c, trace);
      const Certificate s1 = split_one(c, v);
      apply_block_congruence(acc, off, s1.S);
      off += 1;
    } else {
      const SkewSplitResult sk = sk_split(c, trace);
      apply_block_congruence(acc, off, sk.cert.S);
      const Poly target = norm_factor((sk.f * star(sk.f)).monic());
      const Certificate bs = block_swap(sk.f, target);
      apply_block_congruence(acc, off, bs.S);
      off += 2;
    }
  }
  if (acc.B != out.blocks.matrix()) throw InvariantError("canonicalize: reduction did not reach the canonical matrix");
  if (auto why = certificate_failure(a, acc.S, acc.B)) throw InvariantError("canonicalize: " + *why);
  out.cert = std::move(acc);
  return out;
}

CongruenceDecision are_congruent(const PolyMatrix& a, const PolyMatrix& b, FormKind kind, bool want_certificate) {
  if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) throw DomainError("are_congruent: size mismatch");
  if (!has_kind(a, kind)) throw DomainError("are_congruent: first matrix is not " + std::string(to_string(kind)));
  CongruenceDecision out;
  if (!has_kind(b, kind)) {
    out.reason = "kind mismatch: second matrix is not " + std::string(to_string(kind));
    return out;
  }
  if (invariant_factors(a) != invariant_factors(b)) {
    out.reason = "invariant factors differ";
    return out;
  }
  out.congruent = true;
  if (want_certificate) {
    const Canonicalization ca = canonicalize(a, kind);
    const Canonicalization cb = canonicalize(b, kind);
    if (ca.cert.B != cb.cert.B) throw InvariantError("are_congruent: canonical forms of equivalent forms differ");
    Certificate c{ca.cert.S * inverse_unimodular(cb.cert.S), b};
    if (auto why = certificate_failure(a, c.S, c.B)) throw InvariantError("are_congruent: " + *why);
    out.cert = std::move(c);
  }
  return out;
}

std::string format_blocks(const CanonicalBlocks& cb) {
  std::string s;
  for (const auto& b : cb.blocks) {
    if (b.shape == CanonicalBlock::Shape::One)
      s += "1x1: " + to_string(b.f) + "\n";
    else
      s += "2x2: " + to_string(b.g) + " | " + to_string(b.p) + "\n";
  }
  return s;
}

}  // namespace hermform
