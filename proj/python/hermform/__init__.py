"""Congruence classes of hermitian and skew-hermitian matrices over F[t].

Polynomials and matrices are passed as text, e.g. "[[1, t], [-t, t^2 + 1]]".
Every operation runs inside a Field, which owns the tower of extensions of
F_p grown on demand; u1, u2, ... name its generators.
"""

from ._core import DomainError, Field, InvariantError, ParseError

HERMITIAN = 1
SKEW = -1

__all__ = ["DomainError", "Field", "InvariantError", "ParseError", "HERMITIAN", "SKEW"]
