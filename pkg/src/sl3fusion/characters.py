"""Formal characters: weight multiplicities, products, and decomposition.

A ``FormalCharacter`` is a dict mapping weights (in fundamental-weight
coordinates) to positive integer multiplicities.  Internally characters are
stored on root-lattice grids: a character supported below an origin ``o`` is
an int64 table ``t`` with ``t[n1, n2]`` the multiplicity of
``o - n1*alpha1 - n2*alpha2``.  On these grids character multiplication is a
2-d convolution and decomposition into irreducibles is a peeling pass, both of
which stay in integer arithmetic.
"""

from __future__ import annotations

import functools
from typing import Mapping

import numpy as np

from ._kernels import convolve2d, freudenthal_table
from .qseries import GradedDecomposition
from .weights import Weight, require_dominant, size

FormalCharacter = dict[Weight, int]

__all__ = [
    "FormalCharacter",
    "irrep_character",
    "character_mass",
    "char_product",
    "tensor_decompose",
    "decompose_character",
    "decomposition_census",
    "sorted_character_terms",
]


@functools.lru_cache(maxsize=None)
def _irrep_table(lam: Weight) -> np.ndarray:
    """Multiplicity table of the irreducible with highest weight lam.

    Cell (n1, n2) holds the multiplicity of lam - n1*alpha1 - n2*alpha2.
    Callers must treat the cached array as read-only.
    """
    require_dominant(lam)
    table = freudenthal_table(lam[0], lam[1])
    table.setflags(write=False)
    return table


def _grid_to_char(origin: Weight, table: np.ndarray) -> FormalCharacter:
    o1, o2 = origin
    out: FormalCharacter = {}
    rows, cols = np.nonzero(table)
    for n1, n2 in zip(rows.tolist(), cols.tolist()):
        out[(o1 - 2 * n1 + n2, o2 + n1 - 2 * n2)] = int(table[n1, n2])
    return out


def _grid_from_char(char: Mapping[Weight, int]) -> tuple[Weight, np.ndarray]:
    """Lay a character out on a root-lattice grid below a minimal origin.

    Raises ValueError if the weights do not lie in a single coset of the root
    lattice (no module character mixes cosets).
    """
    if not char:
        raise ValueError("cannot grid the empty character")
    # u = 2*c1 + c2 and v = c1 + 2*c2 drop by 3 and 0 (resp. 0 and 3) along the
    # simple roots, so both are constant mod 3 on a root-lattice coset.
    us = {w: 2 * w[0] + w[1] for w in char}
    vs = {w: w[0] + 2 * w[1] for w in char}
    u_res = next(iter(us.values())) % 3
    v_res = next(iter(vs.values())) % 3
    if any(u % 3 != u_res for u in us.values()) or any(
        v % 3 != v_res for v in vs.values()
    ):
        raise ValueError("weights do not lie in a single root-lattice coset")
    u_top = max(us.values())
    v_top = max(vs.values())
    u_top += (u_res - u_top) % 3
    v_top += (v_res - v_top) % 3
    origin = ((2 * u_top - v_top) // 3, (2 * v_top - u_top) // 3)
    n1s = {w: (u_top - us[w]) // 3 for w in char}
    n2s = {w: (v_top - vs[w]) // 3 for w in char}
    table = np.zeros((max(n1s.values()) + 1, max(n2s.values()) + 1), dtype=np.int64)
    for w, mult in char.items():
        table[n1s[w], n2s[w]] = mult
    return origin, table


def irrep_character(lam: Weight) -> FormalCharacter:
    """Weight multiplicities of the irreducible module V(lam)."""
    return _grid_to_char(lam, _irrep_table(lam))


def character_mass(char: Mapping[Weight, int]) -> int:
    """Total dimension: the sum of all multiplicities."""
    return sum(char.values())


def char_product(a: Mapping[Weight, int], b: Mapping[Weight, int]) -> FormalCharacter:
    """Pointwise product of characters (character of the tensor product)."""
    origin_a, table_a = _grid_from_char(a)
    origin_b, table_b = _grid_from_char(b)
    origin = (origin_a[0] + origin_b[0], origin_a[1] + origin_b[1])
    return _grid_to_char(origin, convolve2d(table_a, table_b))


def _peel(origin: Weight, table: np.ndarray) -> FormalCharacter:
    """Decompose the character on ``table`` into irreducibles, destructively.

    Visits dominant cells from the top of the grid downward (height
    descending, then first coordinate descending); at each, the current cell
    value is the multiplicity of that irreducible, whose full table is then
    subtracted.  A negative cell or a nonzero residue means the input was not
    a nonnegative integer combination of irreducible characters.
    """
    o1, o2 = origin
    rows, cols = table.shape
    out: FormalCharacter = {}
    for h in range(rows + cols - 1):
        for n1 in range(max(0, h - cols + 1), min(rows - 1, h) + 1):
            n2 = h - n1
            c1 = o1 - 2 * n1 + n2
            c2 = o2 + n1 - 2 * n2
            if c1 < 0 or c2 < 0:
                continue
            mult = int(table[n1, n2])
            if mult == 0:
                continue
            if mult < 0:
                raise ValueError(
                    "not a nonnegative integer combination of irreducible "
                    f"characters: multiplicity {mult} at weight {(c1, c2)}"
                )
            sub = _irrep_table((c1, c2))
            if n1 + sub.shape[0] > rows or n2 + sub.shape[1] > cols:
                raise ValueError(
                    "not a nonnegative integer combination of irreducible "
                    f"characters: component {(c1, c2)} overflows the support"
                )
            table[n1 : n1 + sub.shape[0], n2 : n2 + sub.shape[1]] -= mult * sub
            out[(c1, c2)] = mult
    if table.any():
        raise ValueError(
            "not a nonnegative integer combination of irreducible characters: "
            "nonzero residue off the dominant cone"
        )
    return out


def tensor_decompose(lam: Weight, mu: Weight) -> dict[Weight, int]:
    """Multiplicities of the irreducible components of V(lam) (x) V(mu).

    Components are recorded in discovery order: height descending, then first
    coordinate descending.
    """
    require_dominant(lam)
    require_dominant(mu)
    product = convolve2d(_irrep_table(lam), _irrep_table(mu))
    return _peel((lam[0] + mu[0], lam[1] + mu[1]), product)


def decompose_character(char: Mapping[Weight, int]) -> dict[Weight, int]:
    """Decompose an arbitrary formal character into irreducibles.

    Raises ValueError if it is not a nonnegative integer combination.
    """
    out: dict[Weight, int] = {}
    # Weights of one irreducible stay in one coset of the root lattice
    # ((c1 - c2) mod 3 is the invariant), so each coset peels independently.
    by_coset: dict[int, dict[Weight, int]] = {}
    for w, mult in char.items():
        if mult:
            by_coset.setdefault((w[0] - w[1]) % 3, {})[w] = mult
    for piece in by_coset.values():
        origin, table = _grid_from_char(piece)
        out.update(_peel(origin, table))
    return out


def decomposition_census(dec: GradedDecomposition) -> dict[tuple[Weight, int], int]:
    """Expand a graded decomposition into a graded weight census.

    Returns a dict mapping (weight, grade) to the dimension of that weight
    space in that grade, i.e. sums of irreducible weight multiplicities
    weighted by the q-polynomial coefficients.
    """
    census: dict[tuple[Weight, int], int] = {}
    for nu, poly in dec.items():
        char = irrep_character(nu)
        for grade, coeff in enumerate(poly):
            if coeff == 0:
                continue
            for w, mult in char.items():
                key = (w, grade)
                census[key] = census.get(key, 0) + coeff * mult
    return {key: value for key, value in census.items() if value}


def sorted_character_terms(char: Mapping[Weight, int]) -> list[tuple[Weight, int]]:
    """Canonical display order: height descending, then weight descending."""
    return sorted(char.items(), key=lambda item: (-size(item[0]), -item[0][0], -item[0][1]))
