"""Hot integer kernels with a numba fast path and a pure-numpy fallback.

The two kernels here dominate the character-theoretic sweeps:

* ``freudenthal_table`` fills the weight-multiplicity table of an irreducible
  module by the Freudenthal recursion, and
* ``convolve2d`` multiplies two characters laid out on root-lattice grids.

Both operate on int64 arrays and are exact (magnitudes stay far below 2**63:
multiplicities and masses are bounded by products of module dimensions, which
the call sites cap in the low hundreds of thousands).

Backend selection: ``SL3FUSION_BACKEND=numba`` or ``=numpy`` forces a path;
unset, numba is used when importable.  ``ACTIVE_BACKEND`` reports the choice.
"""

from __future__ import annotations

import os

import numpy as np

__all__ = ["ACTIVE_BACKEND", "freudenthal_table", "convolve2d"]

# Multiplicity tables are indexed by (n1, n2) with the weight lam - n1*alpha1
# - n2*alpha2 at cell (n1, n2); in these coordinates the three positive roots
# step by (1, 0), (0, 1) and (1, 1).
#
# All inner products are taken against the invariant form normalized so that
# roots have square length 2; tripling clears the 1/3 denominators, so the
# recursion below is integer arithmetic throughout:
#
#   gram3((x1,x2),(y1,y2)) = 2*x1*y1 + x1*y2 + x2*y1 + 2*x2*y2


def _freudenthal_py(l1: int, l2: int) -> np.ndarray:
    n = l1 + l2
    m = np.zeros((n + 1, n + 1), dtype=np.int64)
    m[0, 0] = 1
    if n == 0:
        return m
    # 3 * |lam + rho|^2
    top3 = 2 * (l1 + 1) ** 2 + 2 * (l2 + 1) ** 2 + 2 * (l1 + 1) * (l2 + 1)
    for h in range(1, 2 * n + 1):
        for n1 in range(max(0, h - n), min(n, h) + 1):
            n2 = h - n1
            c1 = l1 - 2 * n1 + n2
            c2 = l2 + n1 - 2 * n2
            d3 = top3 - (
                2 * (c1 + 1) ** 2 + 2 * (c2 + 1) ** 2 + 2 * (c1 + 1) * (c2 + 1)
            )
            if d3 <= 0:
                continue
            acc = 0
            if n1:
                j = np.arange(1, n1 + 1)
                acc += int(np.dot(m[n1 - 1 :: -1, n2][:n1], c1 + 2 * j))
            if n2:
                j = np.arange(1, n2 + 1)
                acc += int(np.dot(m[n1, n2 - 1 :: -1][:n2], c2 + 2 * j))
            k = min(n1, n2)
            if k:
                j = np.arange(1, k + 1)
                acc += int(np.dot(m[n1 - j, n2 - j], c1 + c2 + 2 * j))
            m[n1, n2] = 6 * acc // d3
    return m


def _convolve2d_py(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    if a.size > b.size:
        a, b = b, a
    out = np.zeros((a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1), dtype=np.int64)
    rows, cols = np.nonzero(a)
    for i, j in zip(rows.tolist(), cols.tolist()):
        out[i : i + b.shape[0], j : j + b.shape[1]] += a[i, j] * b
    return out


def _make_numba():
    from numba import njit

    @njit(cache=True)
    def freudenthal_nb(l1, l2):  # pragma: no cover - exercised via dispatch
        n = l1 + l2
        m = np.zeros((n + 1, n + 1), dtype=np.int64)
        m[0, 0] = 1
        if n == 0:
            return m
        top3 = 2 * (l1 + 1) ** 2 + 2 * (l2 + 1) ** 2 + 2 * (l1 + 1) * (l2 + 1)
        for h in range(1, 2 * n + 1):
            lo = h - n
            if lo < 0:
                lo = 0
            hi = h if h < n else n
            for n1 in range(lo, hi + 1):
                n2 = h - n1
                c1 = l1 - 2 * n1 + n2
                c2 = l2 + n1 - 2 * n2
                d3 = top3 - (
                    2 * (c1 + 1) ** 2 + 2 * (c2 + 1) ** 2 + 2 * (c1 + 1) * (c2 + 1)
                )
                if d3 <= 0:
                    continue
                acc = 0
                for j in range(1, n1 + 1):
                    v = m[n1 - j, n2]
                    if v:
                        acc += v * (c1 + 2 * j)
                for j in range(1, n2 + 1):
                    v = m[n1, n2 - j]
                    if v:
                        acc += v * (c2 + 2 * j)
                k = n1 if n1 < n2 else n2
                for j in range(1, k + 1):
                    v = m[n1 - j, n2 - j]
                    if v:
                        acc += v * (c1 + c2 + 2 * j)
                m[n1, n2] = 6 * acc // d3
        return m

    @njit(cache=True)
    def convolve2d_nb(a, b):  # pragma: no cover - exercised via dispatch
        out = np.zeros(
            (a.shape[0] + b.shape[0] - 1, a.shape[1] + b.shape[1] - 1), dtype=np.int64
        )
        for i in range(a.shape[0]):
            for j in range(a.shape[1]):
                v = a[i, j]
                if v == 0:
                    continue
                for k in range(b.shape[0]):
                    for l in range(b.shape[1]):
                        w = b[k, l]
                        if w:
                            out[i + k, j + l] += v * w
        return out

    return freudenthal_nb, convolve2d_nb


_requested = os.environ.get("SL3FUSION_BACKEND", "").strip().lower()
if _requested not in ("", "numba", "numpy"):
    raise RuntimeError(
        f"SL3FUSION_BACKEND must be 'numba' or 'numpy', got {_requested!r}"
    )

if _requested == "numpy":
    ACTIVE_BACKEND = "numpy"
    freudenthal_table, convolve2d = _freudenthal_py, _convolve2d_py
else:
    try:
        freudenthal_table, convolve2d = _make_numba()
        ACTIVE_BACKEND = "numba"
    except ImportError:
        if _requested == "numba":
            raise
        ACTIVE_BACKEND = "numpy"
        freudenthal_table, convolve2d = _freudenthal_py, _convolve2d_py
