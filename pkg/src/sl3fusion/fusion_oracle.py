"""Brute-force oracle: explicit modules and the evaluation filtration.

Everything here is built from scratch with sparse exact linear algebra, so it
is an independent check on the closed-form decompositions:

* ``realize_irrep`` constructs the irreducible V(lam) concretely, as the
  cyclic span of a highest monomial inside
  Sym^{l1}(C^3) (x) Sym^{l2}(C^3 dual), together with exact action matrices
  for all eight Chevalley generators.

* ``fusion_graded_character`` filters V(lam) (x) V(mu) by current-algebra
  degree: the polynomial current algebra acts through evaluation at two
  distinct points (x (x) t^r acts as z1^r x on the first factor plus z2^r x
  on the second), the cyclic filtration of the highest vector is grown one
  degree at a time, and the census records the dimension each weight space
  gains at each degree.  The graded pieces of that filtration are exactly the
  graded pieces of the fusion product.

* ``graded_decomposition_oracle`` turns the census into graded multiplicity
  polynomials by decomposing each degree's character.

Vectors are integer dicts keyed by exponent tuples; spans are reduced by
fraction-free Gaussian elimination, so no floating point enters anywhere.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Mapping

from .characters import decompose_character, irrep_character
from .qseries import GradedDecomposition, qp_normalize
from .weights import Weight, require_dominant, size, weyl_dim

__all__ = [
    "GENERATOR_NAMES",
    "IrrepRealization",
    "realize_irrep",
    "fusion_graded_character",
    "graded_decomposition_oracle",
]

# Matrix units implementing the Chevalley generators in the monomial model:
# e12/e21 raise/lower along the first simple root, e23/e32 along the second,
# e13/e31 along the highest root; h1/h2 are the Cartan pair.
GENERATOR_NAMES = ("e12", "e21", "e23", "e32", "e13", "e31", "h1", "h2")
_UNITS = {"e12": (1, 2), "e21": (2, 1), "e23": (2, 3), "e32": (3, 2), "e13": (1, 3), "e31": (3, 1)}
_SHIFTS = {
    "e12": (2, -1),
    "e21": (-2, 1),
    "e23": (-1, 2),
    "e32": (1, -2),
    "e13": (1, 1),
    "e31": (-1, -1),
    "h1": (0, 0),
    "h2": (0, 0),
}


def _apply_unit(vec: Mapping[tuple, int], i: int, j: int, offset: int) -> dict[tuple, int]:
    """Apply the matrix unit E_ij to one tensor factor of a monomial vector.

    Keys are exponent tuples; positions offset..offset+2 are the exponents of
    the three coordinates u, positions offset+3..offset+5 those of the dual
    coordinates w.  E_ij acts as u_i d/du_j - w_j d/dw_i.
    """
    uj = offset + j - 1
    ui = offset + i - 1
    wi = offset + 2 + i
    wj = offset + 2 + j
    out: dict[tuple, int] = {}
    for key, c in vec.items():
        e = key[uj]
        if e:
            k = list(key)
            k[uj] -= 1
            k[ui] += 1
            k = tuple(k)
            out[k] = out.get(k, 0) + c * e
        e = key[wi]
        if e:
            k = list(key)
            k[wi] -= 1
            k[wj] += 1
            k = tuple(k)
            out[k] = out.get(k, 0) - c * e
    return {k: v for k, v in out.items() if v}


def _primitive(vec: dict[tuple, int]) -> dict[tuple, int]:
    """Divide out the content and make the leading coefficient positive."""
    g = 0
    for v in vec.values():
        g = gcd(g, v)
    if vec[min(vec)] < 0:
        g = -g
    if g != 1:
        vec = {k: v // g for k, v in vec.items()}
    return vec


class _SpanBuilder:
    """Integer row spans, one echelon per block key.

    Rows are kept with distinct leading monomials (the minimal key); insertion
    reduces fraction-free and reports the reduced row when it enlarges the
    span.
    """

    def __init__(self) -> None:
        self.blocks: dict = {}
        self.total = 0

    def insert(self, block_key, vec: Mapping[tuple, int]) -> dict[tuple, int] | None:
        rows = self.blocks.setdefault(block_key, {})
        work = dict(vec)
        while work:
            pivot = min(work)
            row = rows.get(pivot)
            if row is None:
                work = _primitive(work)
                rows[pivot] = work
                self.total += 1
                return work
            a = work[pivot]
            b = row[pivot]
            merged: dict[tuple, int] = {}
            for k, v in work.items():
                w = b * v - a * row.get(k, 0)
                if w:
                    merged[k] = w
            for k, v in row.items():
                if k not in work:
                    merged[k] = -a * v
            work = merged
        return None

    def solve(self, block_key, vec: Mapping[tuple, int], indices: Mapping[tuple, int]) -> dict[int, Fraction]:
        """Express ``vec`` over the block's rows; ``indices`` maps pivots to ids."""
        rows = self.blocks.get(block_key, {})
        rem: dict[tuple, Fraction] = {k: Fraction(v) for k, v in vec.items()}
        coeffs: dict[int, Fraction] = {}
        while rem:
            pivot = min(rem)
            row = rows.get(pivot)
            if row is None:
                raise RuntimeError(f"vector leaves the span in block {block_key}")
            c = rem[pivot] / row[pivot]
            coeffs[indices[pivot]] = c
            for k, v in row.items():
                w = rem.get(k, Fraction(0)) - c * v
                if w:
                    rem[k] = w
                else:
                    rem.pop(k, None)
        return coeffs


@dataclass(frozen=True)
class IrrepRealization:
    """The irreducible V(lam) with an explicit basis and exact generator action.

    ``action[g][j]`` is the j-th column of generator g: a sparse map from
    basis index to Fraction.  ``basis_weights[j]`` is the weight of basis
    vector j, ``blocks`` groups indices by weight, and ``highest`` is the
    index of the highest weight vector.
    """

    lam: Weight
    dim: int
    basis_weights: tuple[Weight, ...]
    blocks: dict[Weight, tuple[int, ...]]
    action: dict[str, tuple[dict[int, Fraction], ...]]
    highest: int

    def census(self) -> dict[Weight, int]:
        return {w: len(ix) for w, ix in self.blocks.items()}

    def apply(self, gen: str, vec: Mapping[int, Fraction | int]) -> dict[int, Fraction]:
        """Apply a generator to a coefficient vector over the basis."""
        columns = self.action[gen]
        out: dict[int, Fraction] = {}
        for j, c in vec.items():
            if not c:
                continue
            for i, entry in columns[j].items():
                w = out.get(i, Fraction(0)) + c * entry
                if w:
                    out[i] = w
                else:
                    out.pop(i, None)
        return out


@functools.lru_cache(maxsize=None)
def _realize(lam: Weight) -> IrrepRealization:
    l1, l2 = lam
    target = weyl_dim(lam)
    builder = _SpanBuilder()
    seed_key = (l1, 0, 0, 0, 0, l2)
    seed = builder.insert(lam, {seed_key: 1})
    stack = [(lam, seed)]
    while stack:
        w, row = stack.pop()
        for gen in ("e21", "e32"):
            i, j = _UNITS[gen]
            img = _apply_unit(row, i, j, 0)
            if not img:
                continue
            s = _SHIFTS[gen]
            w2 = (w[0] + s[0], w[1] + s[1])
            inserted = builder.insert(w2, img)
            if inserted is not None:
                stack.append((w2, inserted))
    if builder.total != target:
        raise RuntimeError(
            f"cyclic span of the highest vector has dimension {builder.total}, "
            f"expected {target}"
        )
    # Deterministic basis: weights from the top down, then leading monomials.
    block_order = sorted(builder.blocks, key=lambda w: (-size(w), -w[0], -w[1]))
    basis_rows: list[dict[tuple, int]] = []
    basis_weights: list[Weight] = []
    blocks: dict[Weight, tuple[int, ...]] = {}
    pivot_index: dict[Weight, dict[tuple, int]] = {}
    for w in block_order:
        rows = builder.blocks[w]
        ids = []
        pivot_index[w] = {}
        for pivot in sorted(rows):
            idx = len(basis_rows)
            basis_rows.append(rows[pivot])
            basis_weights.append(w)
            pivot_index[w][pivot] = idx
            ids.append(idx)
        blocks[w] = tuple(ids)
    expected = irrep_character(lam)
    found = {w: len(ix) for w, ix in blocks.items()}
    if found != expected:
        raise RuntimeError(f"weight census of the realization of V{lam} is wrong")
    action: dict[str, tuple[dict[int, Fraction], ...]] = {}
    for gen in GENERATOR_NAMES:
        columns: list[dict[int, Fraction]] = []
        for j, row in enumerate(basis_rows):
            w = basis_weights[j]
            if gen == "h1":
                columns.append({j: Fraction(w[0])} if w[0] else {})
                continue
            if gen == "h2":
                columns.append({j: Fraction(w[1])} if w[1] else {})
                continue
            i, k = _UNITS[gen]
            img = _apply_unit(row, i, k, 0)
            if not img:
                columns.append({})
                continue
            s = _SHIFTS[gen]
            w2 = (w[0] + s[0], w[1] + s[1])
            columns.append(builder.solve(w2, img, pivot_index.get(w2, {})))
        action[gen] = tuple(columns)
    return IrrepRealization(
        lam=lam,
        dim=target,
        basis_weights=tuple(basis_weights),
        blocks=blocks,
        action=action,
        highest=blocks[lam][0],
    )


def realize_irrep(lam: Weight, dim_bound: int = 400) -> IrrepRealization:
    """Construct V(lam) explicitly (see IrrepRealization).

    Refuses weights with weyl_dim above ``dim_bound``; the construction is
    cubic-ish in the dimension and meant for oracle duty, not production.
    """
    require_dominant(lam)
    if weyl_dim(lam) > dim_bound:
        raise ValueError(
            f"weyl_dim{lam} = {weyl_dim(lam)} exceeds dim_bound = {dim_bound}"
        )
    return _realize(lam)


def _check_evaluation_points(z) -> tuple[Fraction, Fraction]:
    z1, z2 = Fraction(z[0]), Fraction(z[1])
    if z1 == z2:
        raise ValueError("evaluation points must be distinct")
    return z1, z2


def fusion_graded_character(
    lam: Weight,
    mu: Weight,
    z=(0, 1),
    dim_bound: int = 400,
) -> dict[tuple[Weight, int], int]:
    """Graded weight census of the two-point evaluation filtration.

    Returns a dict mapping (weight, degree) to the number of independent
    vectors of that weight first reached at that current-algebra degree.  The
    filtration starts from the tensor product of the two highest weight
    vectors, closes under the plain (degree-zero) action, then repeatedly
    applies the degree-one operators z1^r-weighted on the first factor and
    z2^r-weighted on the second.  Summing the census over degrees gives the
    full weight character of V(lam) (x) V(mu); the census is independent of
    the choice of distinct evaluation points.

    Raises ValueError for coincident evaluation points or when the product
    dimension exceeds ``dim_bound``, and RuntimeError if the filtration fails
    to exhaust the product within degree |lam| + |mu| (which a correct action
    never does).
    """
    require_dominant(lam)
    require_dominant(mu)
    z1, z2 = _check_evaluation_points(z)
    target = weyl_dim(lam) * weyl_dim(mu)
    if target > dim_bound:
        raise ValueError(
            f"product dimension {target} exceeds dim_bound = {dim_bound}"
        )
    # Integer weights for the degree-one operators: scale (z1, z2) by the
    # common denominator (spans are insensitive to overall scalars).
    scale = lcm(z1.denominator, z2.denominator)
    n1 = int(z1 * scale)
    n2 = int(z2 * scale)
    l1, l2 = lam
    m1, m2 = mu
    seed_key = (l1, 0, 0, 0, 0, l2, m1, 0, 0, 0, 0, m2)
    max_degree = size(lam) + size(mu)
    gens = tuple((_UNITS[g], _SHIFTS[g]) for g in ("e21", "e32", "e12", "e23"))

    builder = _SpanBuilder()
    census: dict[tuple[Weight, int], int] = {}

    def record(w: Weight, degree: int) -> None:
        key = (w, degree)
        census[key] = census.get(key, 0) + 1

    def degree_zero_image(vec, i, j):
        out = _apply_unit(vec, i, j, 0)
        for k, v in _apply_unit(vec, i, j, 6).items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return out

    def degree_one_image(vec, i, j):
        out: dict[tuple, int] = {}
        if n1:
            for k, v in _apply_unit(vec, i, j, 0).items():
                out[k] = n1 * v
        if n2:
            for k, v in _apply_unit(vec, i, j, 6).items():
                w = out.get(k, 0) + n2 * v
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
        return out

    def close(work: list, degree: int, new_rows: list) -> None:
        while work:
            w, row = work.pop()
            for (i, j), s in gens:
                img = degree_zero_image(row, i, j)
                if not img:
                    continue
                w2 = (w[0] + s[0], w[1] + s[1])
                inserted = builder.insert(w2, img)
                if inserted is not None:
                    record(w2, degree)
                    item = (w2, inserted)
                    new_rows.append(item)
                    work.append(item)

    top = (l1 + m1, l2 + m2)
    seed = builder.insert(top, {seed_key: 1})
    record(top, 0)
    frontier = [(top, seed)]
    close(list(frontier), 0, frontier)
    degree = 0
    while builder.total < target:
        degree += 1
        if degree > max_degree:
            raise RuntimeError(
                f"filtration of V{lam} (x) V{mu} not exhausted by degree {max_degree}"
            )
        new_rows: list = []
        work: list = []
        for w, row in frontier:
            for (i, j), s in gens:
                img = degree_one_image(row, i, j)
                if not img:
                    continue
                w2 = (w[0] + s[0], w[1] + s[1])
                inserted = builder.insert(w2, img)
                if inserted is not None:
                    record(w2, degree)
                    item = (w2, inserted)
                    new_rows.append(item)
                    work.append(item)
        close(work, degree, new_rows)
        if not new_rows and builder.total < target:
            raise RuntimeError(
                f"filtration of V{lam} (x) V{mu} stalled at dimension "
                f"{builder.total} of {target}"
            )
        frontier = new_rows
    return census


def graded_decomposition_oracle(
    lam: Weight,
    mu: Weight,
    z=(0, 1),
    dim_bound: int = 400,
) -> GradedDecomposition:
    """Graded multiplicity polynomials read off the evaluation filtration.

    Decomposes each degree of the census into irreducible characters; raises
    ValueError if some degree is not a genuine character (which would signal
    a broken filtration).
    """
    census = fusion_graded_character(lam, mu, z=z, dim_bound=dim_bound)
    by_degree: dict[int, dict[Weight, int]] = {}
    for (w, degree), count in census.items():
        by_degree.setdefault(degree, {})[w] = count
    rows: dict[Weight, list[int]] = {}
    for degree in sorted(by_degree):
        for nu, mult in decompose_character(by_degree[degree]).items():
            row = rows.setdefault(nu, [])
            if len(row) <= degree:
                row.extend([0] * (degree + 1 - len(row)))
            row[degree] += mult
    out: GradedDecomposition = {}
    for nu, row in rows.items():
        poly = qp_normalize(row)
        if poly:
            out[nu] = poly
    return out
