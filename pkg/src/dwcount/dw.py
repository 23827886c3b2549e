"""Dijkgraaf-Witten invariants of Seifert manifolds with gauge group Z/m.

For ``M = MO(g; (a_1, b_1), ..., (a_r, b_r))`` and a class ``l`` in Z/m,

    Z^l(M) = m^(2g-2) * sum_{h, s in Z/m} prod_j
             sum_{z in Z/m, a_j z = h} zeta_{m^2}^(l a_j b_j z^2 - (2 l h + m s) b_j z)

where every residue (l, h, s, z) is lifted to 0..m-1 before the integer
arithmetic.  The exponent is not invariant under other lifts of ``z``, so
the lift is part of the definition.  ``a_j`` and ``b_j`` enter as given.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import kernel
from .cyclotomic import CycloValue
from .errors import InvalidGroupOrder, WorkLimitExceeded
from .seifert import SeifertData, gcd_star

DEFAULT_MAX_WORK = 10**8


def _check_order(m):
    if m <= 0:
        raise InvalidGroupOrder(f"group order must be >= 1, got {m}")


@dataclass(frozen=True)
class CongruenceSolutions:
    m: int
    solutions: tuple[int, ...]

    def __iter__(self) -> Iterator[int]:
        return iter(self.solutions)

    def __len__(self):
        return len(self.solutions)


def solve_congruence(a: int, h: int, m: int) -> CongruenceSolutions:
    """All z in 0..m-1 with ``a z = h (mod m)``, in increasing order."""
    _check_order(m)
    a, h = a % m, h % m
    d = gcd_star(a, m)
    if h % d:
        return CongruenceSolutions(m, ())
    step = m // d
    z0 = pow(a // d, -1, step) * (h // d) % step if step > 1 else 0
    return CongruenceSolutions(m, tuple(z0 + t * step for t in range(d)))


def exponent(l: int, h: int, s: int, a: int, b: int, z: int, m: int) -> int:
    """Exponent of zeta_{m^2} for one summand, reduced to 0..m^2-1."""
    l, h, s, z = l % m, h % m, s % m, z % m
    return (l * a * b * z * z - (2 * l * h + m * s) * b * z) % (m * m)


def inner_factor(l: int, h: int, s: int, pair: tuple[int, int], m: int) -> CycloValue:
    a, b = pair
    N = m * m
    coeffs = [0] * N
    for z in solve_congruence(a, h, m):
        coeffs[exponent(l, h, s, a, b, z, m)] += 1
    return CycloValue(N, coeffs)


def work_estimate(M: SeifertData, m: int) -> int:
    """Upper bound on kernel term updates for one class l.

    For each solvable h and each s, factor j touches at most
    min(m^2, prod_{i<=j} #solutions_i) exponent slots.
    """
    N = m * m
    ds = [gcd_star(a % m, m) for a, _ in M.pairs]
    total = 0
    for h in range(m):
        if any(h % d for d in ds):
            continue
        per_s, support = 1, 1
        for d in ds:
            support = min(N, support * d)
            per_s += support
        total += m * per_s
    return total


def _prefactor(value_coeffs, g, m):
    N = m * m
    if g == 0:
        return CycloValue(N, value_coeffs, m * m)
    scale = m ** (2 * g - 2)
    return CycloValue(N, [c * scale for c in value_coeffs])


def dw_invariant(
    M: SeifertData,
    m: int,
    l: int,
    *,
    max_work: int | None = DEFAULT_MAX_WORK,
    backend: str | None = None,
) -> CycloValue:
    """Exact Z^l(M) as an element of (1/m^2) Z[zeta_{m^2}].

    Raises :class:`WorkLimitExceeded` when :func:`work_estimate` is above
    ``max_work`` (``None`` disables the guard).
    """
    _check_order(m)
    if max_work is not None:
        est = work_estimate(M, m)
        if est > max_work:
            raise WorkLimitExceeded(est, max_work)
    coeffs = kernel.accumulate_dw(m, l % m, M.pairs, backend=backend)
    return _prefactor(coeffs, M.genus, m)


@dataclass(frozen=True)
class DwVector:
    """Table ``l -> Z^l(M)`` for l = 0..m-1, all of modulus m^2."""

    m: int
    values: tuple[CycloValue, ...]

    def __post_init__(self):
        if len(self.values) != self.m:
            raise ValueError(f"expected {self.m} values, got {len(self.values)}")
        N = self.m * self.m
        if any(v.N != N for v in self.values):
            raise ValueError(f"all values must have modulus {N}")

    def __getitem__(self, l: int) -> CycloValue:
        return self.values[l % self.m]

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return self.m


def dw_all(
    M: SeifertData,
    m: int,
    *,
    max_work: int | None = DEFAULT_MAX_WORK,
    backend: str | None = None,
) -> DwVector:
    _check_order(m)
    if max_work is not None:
        est = m * work_estimate(M, m)
        if est > max_work:
            raise WorkLimitExceeded(est, max_work)
    return DwVector(
        m,
        tuple(dw_invariant(M, m, l, max_work=None, backend=backend) for l in range(m)),
    )


def dw_invariant_collapsed(M: SeifertData, m: int, l: int) -> CycloValue:
    """Z^l(M) with the s-sum done in closed form.

    The s-dependence of each summand is zeta_m^(-s * sum_j b_j z_j), so the
    s-sum is m when ``sum_j b_j z_j = 0 (mod m)`` and 0 otherwise.  The
    remaining sum over (h, z_1..z_r) runs as a DP over states
    (exponent mod m^2, partial sum of b_j z_j mod m).
    """
    _check_order(m)
    N = m * m
    l %= m
    total = [0] * N
    for h in range(m):
        states = {(0, 0): 1}
        for a, b in M.pairs:
            moves = [
                ((l * a * b * z * z - 2 * l * h * b * z) % N, (b * z) % m)
                for z in solve_congruence(a, h, m)
            ]
            nxt: dict[tuple[int, int], int] = {}
            for (e, B), c in states.items():
                for de, dB in moves:
                    key = ((e + de) % N, (B + dB) % m)
                    nxt[key] = nxt.get(key, 0) + c
            states = nxt
        for (e, B), c in states.items():
            if B == 0:
                total[e] += m * c
    return _prefactor(total, M.genus, m)


def dw_all_collapsed(M: SeifertData, m: int) -> DwVector:
    return DwVector(m, tuple(dw_invariant_collapsed(M, m, l) for l in range(m)))
