"""Homotopy-class counts per degree class, by Fourier inversion over Z/m.

    #deg^-1(k) = sum_{l in Z/m} Z^l(M) * zeta_m^(-k l)
    Z^l(M)     = (1/m) sum_{k in Z/m} #deg^-1(k) * zeta_m^(k l)

The twist zeta_m^(kl) is embedded as zeta_{m^2}^(m k l) so everything lives
in the single ring (1/D) Z[zeta_{m^2}].
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .cyclotomic import (
    CycloValue,
    conjugate,
    cyclo_root_power,
    extract_integer,
)
from . import kernel
from .dw import DEFAULT_MAX_WORK, DwVector, dw_all
from .errors import IntegralityViolation, NegativeCount, NotAnInteger
from .seifert import SeifertData, count_homs


@dataclass(frozen=True)
class DegreeCountTable:
    """``counts[k]`` is #deg^-1(k) for every integer k in the class k mod m."""

    m: int
    counts: tuple[int, ...]

    def __post_init__(self):
        if len(self.counts) != self.m:
            raise ValueError(f"expected {self.m} counts, got {len(self.counts)}")

    def __getitem__(self, k: int) -> int:
        return self.counts[k % self.m]

    def __iter__(self):
        return iter(self.counts)

    def __len__(self):
        return self.m

    @property
    def total(self) -> int:
        return sum(self.counts)


def _twisted_sums(dw: DwVector, ks, backend=None) -> list[CycloValue]:
    """``sum_l Z^l * zeta_m^(-k l)`` for each k in ``ks``."""
    m = dw.m
    N = m * m
    denom = dw.values[0].denom
    if all(v.denom == denom for v in dw.values):
        vecs = kernel.twist_sums([v.coeffs for v in dw.values], m, ks, -1, backend=backend)
        return [CycloValue(N, vec, denom) for vec in vecs]
    out = []
    for k in ks:
        acc = CycloValue.zero(N)
        for l, z in enumerate(dw.values):
            acc = acc + z * cyclo_root_power(N, -m * (k % m) * l)
        out.append(acc)
    return out


def count_from_dw(dw: DwVector, k: int) -> int:
    """#deg^-1(k) from any table of DW invariants."""
    (value,) = _twisted_sums(dw, [k % dw.m])
    return _checked_count(value, k % dw.m)


def _checked_count(value: CycloValue, k: int) -> int:
    try:
        n = extract_integer(value)
    except NotAnInteger as exc:
        raise IntegralityViolation(f"count for k={k} is not an integer: {exc}") from exc
    if n < 0:
        raise NegativeCount(f"count for k={k} is negative: {n}")
    return n


def counts_from_dw(dw: DwVector, *, backend=None) -> DegreeCountTable:
    sums = _twisted_sums(dw, range(dw.m), backend=backend)
    return DegreeCountTable(dw.m, tuple(_checked_count(v, k) for k, v in enumerate(sums)))


def degree_count(M: SeifertData, m: int, k: int, **kw) -> int:
    return count_from_dw(dw_all(M, m, **kw), k)


def degree_count_table(M: SeifertData, m: int, **kw) -> DegreeCountTable:
    return counts_from_dw(dw_all(M, m, **kw))


def fourier_forward(counts: DegreeCountTable) -> DwVector:
    m = counts.m
    N = m * m
    values = []
    for l in range(m):
        coeffs = [0] * N
        for k, c in enumerate(counts.counts):
            coeffs[(m * k * l) % N] += c
        values.append(CycloValue(N, coeffs, m))
    return DwVector(m, tuple(values))


@dataclass
class ConsistencyReport:
    hom_count: int
    sum_of_counts: int | None = None
    trivial_class_check: bool = True
    nonnegativity: bool = True
    roundtrip: bool = True
    conjugation_symmetry: bool = True
    failures: list[str] = field(default_factory=list)
    extra: dict[str, bool] = field(default_factory=dict)
    skipped: list[str] = field(default_factory=list)

    CHECKS = (
        "total_count",
        "trivial_class_check",
        "nonnegativity",
        "roundtrip",
        "conjugation_symmetry",
    )

    @property
    def total_count(self) -> bool:
        return self.sum_of_counts == self.hom_count

    @property
    def ok(self) -> bool:
        return not self.failures

    def checks(self) -> dict[str, bool]:
        out = {name: getattr(self, name) for name in self.CHECKS}
        out.update(self.extra)
        return out

    def fail(self, label: str, detail: str):
        self.failures.append(f"{label}: {detail}")


def verify_consistency(
    M: SeifertData,
    m: int,
    *,
    dw: DwVector | None = None,
    max_work: int | None = DEFAULT_MAX_WORK,
    backend: str | None = None,
) -> ConsistencyReport:
    """Cross-check DW invariants and counts against each other and #hom.

    Failures are collected in the report, never raised.
    """
    hom = count_homs(M, m)
    rep = ConsistencyReport(hom_count=hom)
    if dw is None:
        dw = dw_all(M, m, max_work=max_work, backend=backend)

    try:
        z0 = extract_integer(dw[0] * m)
    except NotAnInteger as exc:
        z0 = None
        rep.fail("trivial_class_check", f"m*Z^0 is not an integer ({exc})")
    if z0 is not None and z0 != hom:
        rep.fail("trivial_class_check", f"m*Z^0 = {z0} but #hom = {hom}")
    rep.trivial_class_check = z0 == hom

    counts = []
    for k, value in enumerate(_twisted_sums(dw, range(m), backend=backend)):
        try:
            counts.append(extract_integer(value))
        except NotAnInteger as exc:
            counts.append(None)
            rep.fail("nonnegativity", f"count for k={k} is not an integer ({exc})")
    if any(c is None for c in counts):
        rep.nonnegativity = False
    else:
        neg = [k for k, c in enumerate(counts) if c < 0]
        if neg:
            rep.nonnegativity = False
            rep.fail("nonnegativity", f"negative counts at k={neg}")

    if rep.nonnegativity:
        rep.sum_of_counts = sum(counts)
        if rep.sum_of_counts != hom:
            rep.fail("total_count", f"sum of counts {rep.sum_of_counts} != #hom {hom}")
        back = fourier_forward(DegreeCountTable(m, tuple(counts)))
        bad = [l for l in range(m) if back[l] != dw[l]]
        if bad:
            rep.roundtrip = False
            rep.fail("roundtrip", f"Fourier round trip differs at l={bad}")
    else:
        rep.roundtrip = False
        rep.fail("total_count", "counts unavailable")

    bad = [l for l in range(1, m) if dw[m - l] != conjugate(dw[l])]
    if bad:
        rep.conjugation_symmetry = False
        rep.fail("conjugation_symmetry", f"Z^(m-l) != conj(Z^l) at l={bad}")
    return rep
