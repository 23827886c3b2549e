"""Backend selection for the Dijkgraaf-Witten accumulation kernel.

The compiled extension ``dwcount._ckernel`` is used when it imports and the
int64 coefficient bound holds; otherwise the pure-Python kernel runs.
Set ``DWCOUNT_PURE_PYTHON=1`` to force the fallback.
"""
import math
import os

from . import _kernel_py

try:
    if os.environ.get("DWCOUNT_PURE_PYTHON"):
        raise ImportError("pure Python forced by DWCOUNT_PURE_PYTHON")
    from . import _ckernel
except ImportError:
    _ckernel = None

BACKEND = "cython" if _ckernel is not None else "python"
_INT64_SAFE = 2**62


def coefficient_bound(m, pairs):
    """Upper bound on any coefficient magnitude produced by the kernel.

    Each (h, s) term contributes prod_j #solutions(a_j z = h) unit monomials.
    """
    bound = 0
    for h in range(m):
        term = m
        for a, _ in pairs:
            d = math.gcd(a % m, m)
            if h % d:
                term = 0
                break
            term *= d
        bound += term
    return bound


def accumulate_dw(m, l, pairs, backend=None):
    """Unreduced coefficient vector of the double sum for one class ``l``.

    ``backend`` is ``"cython"``, ``"python"`` or ``None`` (best available).
    """
    pairs = [(int(a), int(b)) for a, b in pairs]
    if backend is None:
        backend = BACKEND
    if backend == "cython":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not available")
        if coefficient_bound(m, pairs) < _INT64_SAFE and m * m < 2**31:
            return _ckernel.accumulate_dw(m, l, pairs)
        backend = "python"
    if backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _kernel_py.accumulate_dw(m, l, pairs)


def twist_sums(vectors, m, ks, sign=-1, backend=None):
    """``[sum_l zeta_{m^2}^(sign*m*k*l) * vectors[l] for k in ks]`` as vectors."""
    vectors = [list(v) for v in vectors]
    ks = [int(k) % m for k in ks]
    if backend is None:
        backend = BACKEND
    if backend == "cython":
        if _ckernel is None:
            raise RuntimeError("compiled kernel is not available")
        bound = sum(sum(abs(c) for c in v) for v in vectors)
        if bound < _INT64_SAFE and m * m < 2**31:
            return _ckernel.twist_sums(vectors, m, ks, sign)
        backend = "python"
    if backend != "python":
        raise ValueError(f"unknown backend {backend!r}")
    return _kernel_py.twist_sums(vectors, m, ks, sign)
