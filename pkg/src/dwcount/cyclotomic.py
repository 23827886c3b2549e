"""Exact arithmetic in (1/D) Z[zeta_N].

Values are kept as unreduced group-ring vectors: ``coeffs[e]`` is the
coefficient of ``zeta_N**e`` and a single positive ``denom`` scales the whole
vector.  Reduction modulo the cyclotomic polynomial only happens when a
canonical form is needed (comparison, integer extraction, rendering).
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from functools import lru_cache, reduce
from typing import Sequence

from .errors import InvalidModulus, ModulusMismatch, NotAnInteger


def _check_modulus(N):
    if N <= 0:
        raise InvalidModulus(f"modulus must be >= 1, got {N}")


def _content(coeffs) -> int:
    return reduce(math.gcd, coeffs, 0)


class CycloValue:
    """An element ``(1/denom) * sum_e coeffs[e] * zeta_N**e``.

    ``==`` is semantic equality (the difference reduces to zero), so two
    different coefficient vectors may compare equal.
    """

    __slots__ = ("N", "coeffs", "denom")

    def __init__(self, N: int, coeffs: Sequence[int] | None = None, denom: int = 1):
        _check_modulus(N)
        if denom <= 0:
            raise ValueError(f"denominator must be positive, got {denom}")
        if coeffs is None:
            coeffs = (0,) * N
        elif len(coeffs) != N:
            raise ValueError(f"expected {N} coefficients, got {len(coeffs)}")
        self.N = N
        self.coeffs = tuple(map(int, coeffs))
        self.denom = int(denom)

    @classmethod
    def zero(cls, N: int) -> "CycloValue":
        return cls(N)

    @classmethod
    def integer(cls, N: int, n: int, denom: int = 1) -> "CycloValue":
        _check_modulus(N)
        return cls(N, (n,) + (0,) * (N - 1), denom)

    @classmethod
    def one(cls, N: int) -> "CycloValue":
        return cls.integer(N, 1)

    def __repr__(self):
        return f"CycloValue(N={self.N}, {render(reduce_canonical(self))!r})"

    def __add__(self, other):
        return cyclo_add(self, _coerce(other, self.N))

    __radd__ = __add__

    def __neg__(self):
        return CycloValue(self.N, [-c for c in self.coeffs], self.denom)

    def __sub__(self, other):
        return cyclo_add(self, -_coerce(other, self.N))

    def __rsub__(self, other):
        return cyclo_add(_coerce(other, self.N), -self)

    def __mul__(self, other):
        if isinstance(other, int):
            return CycloValue(self.N, [c * other for c in self.coeffs], self.denom)
        return cyclo_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, n: int):
        if not isinstance(n, int) or n == 0:
            return NotImplemented
        if n < 0:
            return CycloValue(self.N, [-c for c in self.coeffs], self.denom * -n)
        return CycloValue(self.N, self.coeffs, self.denom * n)

    def __eq__(self, other):
        if isinstance(other, int):
            other = CycloValue.integer(self.N, other)
        if not isinstance(other, CycloValue):
            return NotImplemented
        if other.N != self.N:
            return False
        return reduce_canonical(self) == reduce_canonical(other)

    def __hash__(self):
        return hash(reduce_canonical(self))

    def is_zero(self) -> bool:
        return not any(reduce_canonical(self).basis_coeffs)

    def __complex__(self):
        return approx_complex(self)


def _coerce(x, N):
    if isinstance(x, CycloValue):
        return x
    if isinstance(x, int):
        return CycloValue.integer(N, x)
    raise TypeError(f"cannot combine CycloValue with {type(x).__name__}")


@dataclass(frozen=True)
class ReducedForm:
    """Canonical representative in the power basis of Q(zeta_N)."""

    N: int
    basis_coeffs: tuple[int, ...]
    denom: int

    def to_cyclo(self) -> CycloValue:
        coeffs = list(self.basis_coeffs) + [0] * (self.N - len(self.basis_coeffs))
        return CycloValue(self.N, coeffs, self.denom)


def cyclo_root_power(N: int, e: int) -> CycloValue:
    _check_modulus(N)
    coeffs = [0] * N
    coeffs[e % N] = 1
    return CycloValue(N, coeffs)


def cyclo_add(x: CycloValue, y: CycloValue) -> CycloValue:
    if x.N != y.N:
        raise ModulusMismatch(f"moduli differ: {x.N} vs {y.N}")
    D = x.denom * y.denom // math.gcd(x.denom, y.denom)
    fx, fy = D // x.denom, D // y.denom
    return CycloValue(x.N, [fx * a + fy * b for a, b in zip(x.coeffs, y.coeffs)], D)


def cyclo_mul(x: CycloValue, y: CycloValue) -> CycloValue:
    """Product by cyclic convolution of exponents mod N."""
    if x.N != y.N:
        raise ModulusMismatch(f"moduli differ: {x.N} vs {y.N}")
    N = x.N
    ys = [(j, c) for j, c in enumerate(y.coeffs) if c]
    if len(ys) == 1:
        j, c = ys[0]
        rot = x.coeffs[-j:] + x.coeffs[:-j] if j else x.coeffs
        return CycloValue(N, [a * c for a in rot] if c != 1 else rot, x.denom * y.denom)
    out = [0] * N
    for i, a in enumerate(x.coeffs):
        if a:
            for j, c in ys:
                out[(i + j) % N] += a * c
    return CycloValue(N, out, x.denom * y.denom)


def conjugate(x: CycloValue) -> CycloValue:
    N = x.N
    out = [0] * N
    for e, c in enumerate(x.coeffs):
        out[-e % N] = c
    return CycloValue(N, out, x.denom)


def _poly_divmod(num: list[int], den: Sequence[int]) -> tuple[list[int], list[int]]:
    """Divide integer polynomials (low degree first) by a monic divisor."""
    num = list(num)
    dd = len(den) - 1
    if den[-1] != 1:
        raise ValueError("divisor must be monic")
    if len(num) - 1 < dd:
        return [0], num
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        q = num[i]
        if q:
            quot[i - dd] = q
            for k in range(dd + 1):
                num[i - dd + k] -= q * den[k]
    return quot, num[:dd] if dd else [0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(N: int) -> tuple[int, ...]:
    """Coefficients of Phi_N, constant term first.

    Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d, by exact division.
    """
    _check_modulus(N)
    num = [-1] + [0] * (N - 1) + [1]
    for d in range(1, N):
        if N % d == 0:
            num, rem = _poly_divmod(num, cyclotomic_polynomial(d))
            assert not any(rem), (N, d)
    return tuple(num)


def euler_phi(N: int) -> int:
    return len(cyclotomic_polynomial(N)) - 1


@lru_cache(maxsize=None)
def _sparse_phi(N: int) -> tuple[int, tuple[tuple[int, int], ...]]:
    phi = cyclotomic_polynomial(N)
    deg = len(phi) - 1
    return deg, tuple((i, c) for i, c in enumerate(phi[:-1]) if c)


def _reduce_vector(coeffs: Sequence[int], N: int) -> list[int]:
    """Remainder of sum c_e x^e modulo Phi_N (low-degree coefficients).

    Phi_N is monic and usually sparse, so only its nonzero terms are visited.
    """
    deg, terms = _sparse_phi(N)
    rem = list(coeffs)
    for i in range(len(rem) - 1, deg - 1, -1):
        q = rem[i]
        if q:
            base = i - deg
            for k, c in terms:
                rem[base + k] -= q * c
    return (rem[:deg] + [0] * deg)[:deg]


def reduce_canonical(x: CycloValue) -> ReducedForm:
    rem = _reduce_vector(x.coeffs, x.N)
    if not any(rem):
        return ReducedForm(x.N, tuple(rem), 1)
    g = math.gcd(_content(rem), x.denom)
    return ReducedForm(x.N, tuple(c // g for c in rem), x.denom // g)


def extract_integer(x: CycloValue) -> int:
    red = reduce_canonical(x)
    if any(red.basis_coeffs[1:]):
        raise NotAnInteger(f"value is not rational: {render(red)}")
    c0 = red.basis_coeffs[0]
    if c0 % red.denom:
        raise NotAnInteger(f"value {c0}/{red.denom} is not an integer")
    return c0 // red.denom


def extract_rational(x: CycloValue) -> tuple[int, int]:
    """(numerator, denominator) of a rational value in lowest terms."""
    red = reduce_canonical(x)
    if any(red.basis_coeffs[1:]):
        raise NotAnInteger(f"value is not rational: {render(red)}")
    return red.basis_coeffs[0], red.denom


def approx_complex(x: CycloValue | ReducedForm) -> complex:
    if isinstance(x, ReducedForm):
        x = x.to_cyclo()
    N = x.N
    re = im = 0.0
    for e, c in enumerate(x.coeffs):
        if c:
            # exact values on the axes avoid sin(pi) noise
            k = (4 * e) % (4 * N)
            if k % N == 0:
                w = (1, 1j, -1, -1j)[k // N]
            else:
                w = cmath.exp(2j * math.pi * e / N)
            re += c * w.real
            im += c * w.imag
    return complex(re / x.denom, im / x.denom)


def render(x: CycloValue | ReducedForm) -> str:
    """Canonical text ``(c0 + c1*z + ...)/D``; ``z`` stands for zeta_N."""
    red = x if isinstance(x, ReducedForm) else reduce_canonical(x)
    terms = []
    for e, c in enumerate(red.basis_coeffs):
        if not c:
            continue
        mono = "" if e == 0 else ("z" if e == 1 else f"z^{e}")
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(f"{'+' if c > 0 else '-'} {body}")
    num = " ".join(terms) or "0"
    if red.denom == 1:
        return num
    if len(terms) > 1:
        num = f"({num})"
    return f"{num}/{red.denom}"
