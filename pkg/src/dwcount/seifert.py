"""Seifert invariants, abelianized presentation and homomorphism counts.

A Seifert fibered space over an orientable genus-``g`` surface is written
``MO(g; (a_1, b_1), ..., (a_r, b_r))``.  Its first homology is presented by

    a_j x_j + b_j w = 0   (j = 1..r),      x_1 + ... + x_r = 0,

plus ``2g`` free generators from the base surface.  Homomorphisms into the
cyclic group Z/m are then counted from the Smith normal form.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    InvalidGroupOrder,
    NegativeGenus,
    NonCoprimeWarning,
    NonpositiveMultiplicity,
)


@dataclass(frozen=True)
class SeifertData:
    """Seifert invariants ``MO(genus; pairs)``; pairs keep their given order."""

    genus: int
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(
            self, "pairs", tuple((int(a), int(b)) for a, b in self.pairs)
        )

    @property
    def r(self) -> int:
        return len(self.pairs)

    @property
    def noncoprime_pairs(self) -> tuple[int, ...]:
        """Indices of pairs with gcd(a, b) != 1 (non-fatal warning marker)."""
        return tuple(
            j for j, (a, b) in enumerate(self.pairs) if math.gcd(a, b) != 1
        )

    def render(self) -> str:
        body = ",".join(f"({a},{b})" for a, b in self.pairs)
        return f"MO({self.genus};{body})"

    def __str__(self):
        return self.render()


def validate_seifert(genus: int, pairs: Iterable[Sequence[int]] = ()) -> SeifertData:
    """Build a :class:`SeifertData`, rejecting negative genus or ``a_j <= 0``.

    Non-coprime pairs are accepted; a :class:`NonCoprimeWarning` is issued.
    """
    genus = int(genus)
    if genus < 0:
        raise NegativeGenus(f"genus must be >= 0, got {genus}")
    pairs = tuple((int(a), int(b)) for a, b in pairs)
    for j, (a, _) in enumerate(pairs):
        if a <= 0:
            raise NonpositiveMultiplicity(
                f"multiplicity a_{j + 1} must be >= 1, got {a}"
            )
    M = SeifertData(genus, pairs)
    if M.noncoprime_pairs:
        bad = ", ".join(str(pairs[j]) for j in M.noncoprime_pairs)
        warnings.warn(
            f"non-coprime Seifert pair(s) {bad}; evaluating formally",
            NonCoprimeWarning,
            stacklevel=2,
        )
    return M


@dataclass(frozen=True)
class PresentationMatrix:
    entries: tuple[tuple[int, ...], ...]
    free_rank: int

    @property
    def size(self) -> int:
        return len(self.entries)


def presentation_matrix(M: SeifertData) -> PresentationMatrix:
    r = M.r
    if r == 0:
        return PresentationMatrix(((0,),), 2 * M.genus)
    rows = []
    for j, (a, b) in enumerate(M.pairs):
        row = [0] * (r + 1)
        row[j] = a
        row[r] = b
        rows.append(tuple(row))
    rows.append(tuple([1] * r + [0]))
    return PresentationMatrix(tuple(rows), 2 * M.genus)


@dataclass(frozen=True)
class SnfResult:
    diag: tuple[int, ...]

    @property
    def nonzero(self) -> tuple[int, ...]:
        return tuple(d for d in self.diag if d)


def _min_pivot(A, t):
    best = None
    for i in range(t, len(A)):
        for j in range(t, len(A[0])):
            v = A[i][j]
            if v and (best is None or abs(v) < best[0]):
                best = (abs(v), i, j)
    return best


def smith_normal_form(A: Sequence[Sequence[int]]) -> SnfResult:
    """Invariant factors of an integer matrix.

    Pivots on the entry of least absolute value in the remaining block, which
    keeps intermediate entries small.  Returns ``min(rows, cols)`` factors,
    nonzero ones first in divisibility order, zeros trailing.
    """
    A = [[int(x) for x in row] for row in A]
    if not A or not A[0]:
        return SnfResult(())
    nrows, ncols = len(A), len(A[0])
    n = min(nrows, ncols)
    diag = []
    for t in range(n):
        found = _min_pivot(A, t)
        if found is None:
            break
        while True:
            _, i, j = found
            A[t], A[i] = A[i], A[t]
            for row in A:
                row[t], row[j] = row[j], row[t]
            p = A[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                q = A[i][t] // p
                if q:
                    A[i] = [x - q * y for x, y in zip(A[i], A[t])]
                dirty = dirty or A[i][t] != 0
            for j in range(t + 1, ncols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                dirty = dirty or A[t][j] != 0
            if not dirty:
                # pivot must divide the whole remaining block
                bad = next(
                    (
                        i
                        for i in range(t + 1, nrows)
                        for j in range(t + 1, ncols)
                        if A[i][j] % p
                    ),
                    None,
                )
                if bad is None:
                    break
                A[t] = [x + y for x, y in zip(A[t], A[bad])]
            found = _min_pivot(A, t)
        diag.append(abs(A[t][t]))
    diag.extend([0] * (n - len(diag)))
    return SnfResult(tuple(diag))


def gcd_star(d: int, m: int) -> int:
    """Number of solutions of ``d x = 0`` in Z/m; ``gcd*(0, m) = m``."""
    return m if d == 0 else math.gcd(d, m)


def count_homs(M: SeifertData, m: int) -> int:
    """#hom(pi_1(M), Z/m) in closed form from the Smith normal form."""
    if m <= 0:
        raise InvalidGroupOrder(f"group order must be >= 1, got {m}")
    P = presentation_matrix(M)
    total = m ** P.free_rank
    for d in smith_normal_form(P.entries).diag:
        total *= gcd_star(d, m)
    return total
