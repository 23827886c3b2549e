"""Independent brute-force and floating-point cross-checks.

Nothing here shares code with the exact pipeline: homomorphisms are found by
exhaustive enumeration and DW invariants are summed in double precision.
Per-residue degree counts have no independent oracle; only totals, the
trivial class and numerical agreement are checked.
"""
from __future__ import annotations

import cmath
import itertools
import math

from .counting import ConsistencyReport, verify_consistency
from .cyclotomic import approx_complex
from .dw import dw_all
from .errors import InvalidGroupOrder, WorkLimitExceeded
from .seifert import SeifertData, count_homs

MAX_TUPLES = 10**7
MAX_TERMS = 10**8
FLOAT_TOL = 1e-6


def _check(m):
    if m <= 0:
        raise InvalidGroupOrder(f"group order must be >= 1, got {m}")


def brute_count_homs(M: SeifertData, m: int, *, max_tuples: int = MAX_TUPLES) -> int:
    """m^(2g) times the number of (x_1..x_r, w) in (Z/m)^(r+1) with
    a_j x_j + b_j w = 0 and x_1 + ... + x_r = 0."""
    _check(m)
    r = M.r
    if m ** (r + 1) > max_tuples:
        raise WorkLimitExceeded(m ** (r + 1), max_tuples, "enumerated tuple count")
    found = 0
    for *xs, w in itertools.product(range(m), repeat=r + 1):
        if sum(xs) % m:
            continue
        if all((a * x + b * w) % m == 0 for (a, b), x in zip(M.pairs, xs)):
            found += 1
    return m ** (2 * M.genus) * found


def approx_dw_float(M: SeifertData, m: int, l: int, *, max_terms: int = MAX_TERMS) -> complex:
    """Z^l(M) summed term by term in complex double precision."""
    _check(m)
    est = m * m * m * max(M.r, 1)
    if est > max_terms:
        raise WorkLimitExceeded(est, max_terms, "summed term count")
    N = m * m
    l %= m
    total = 0j
    for h in range(m):
        for s in range(m):
            prod = 1 + 0j
            for a, b in M.pairs:
                f = 0j
                for z in range(m):
                    if (a * z - h) % m == 0:
                        e = l * a * b * z * z - (2 * l * h + m * s) * b * z
                        f += cmath.exp(2j * math.pi * (e % N) / N)
                prod *= f
            total += prod
    return total * float(m) ** (2 * M.genus - 2)


def cross_validate(
    M: SeifertData,
    m: int,
    *,
    dw=None,
    brute: bool = True,
    float_check: bool = True,
    **kw,
) -> ConsistencyReport:
    """:func:`verify_consistency` plus brute #hom and float-vs-exact checks.

    A check whose oracle would exceed its work cap is listed in
    ``report.skipped`` instead of failing.
    """
    if dw is None:
        dw = dw_all(M, m, **kw)
    rep = verify_consistency(M, m, dw=dw)

    if brute:
        closed = count_homs(M, m)
        try:
            found = brute_count_homs(M, m)
        except WorkLimitExceeded as exc:
            rep.skipped.append(f"brute_hom_count: {exc}")
        else:
            rep.extra["brute_hom_count"] = found == closed
            if found != closed:
                rep.fail("brute_hom_count", f"enumeration gives {found}, closed form {closed}")

    if float_check:
        try:
            approx = [approx_dw_float(M, m, l) for l in range(m)]
        except WorkLimitExceeded as exc:
            rep.skipped.append(f"float_agreement: {exc}")
        else:
            bad = []
            for l, a in enumerate(approx):
                err = abs(a - approx_complex(dw[l]))
                if err >= FLOAT_TOL:
                    bad.append(f"l={l} (error {err:.3g})")
            rep.extra["float_agreement"] = not bad
            if bad:
                rep.fail("float_agreement", "float and exact values disagree at " + ", ".join(bad))
    return rep
