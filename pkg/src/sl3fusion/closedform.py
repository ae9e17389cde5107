"""Closed-form graded decompositions of fusion products for sl3.

The fusion product of two irreducible sl3 modules V(lam) and V(mu) is a
cyclic graded module F over the current algebra whose graded pieces decompose
into irreducibles with multiplicity a polynomial in q.  This module computes
those polynomials exactly by a combinatorial recursion:

* ``reduce_pair`` moves one box between the weights (or flips an inverted
  pair), relating F(lam, mu) to a fusion product of a closer-to-rectangular
  pair;
* ``kernel_summands`` lists the graded irreducible summands that split off at
  each step, indexed by small lattice polytopes
  (``first_kind_index_pairs`` / ``second_kind_index_pairs``);
* ``graded_character`` assembles the full decomposition by memoized recursion,
  and ``direct_decomposition`` re-derives it by a single closed enumeration,
  giving an internal cross-check.

Specializations: ``graded_multiplicity`` (one q-polynomial),
``lr_coefficient`` (its value at q = 1, the classical tensor multiplicity),
and ``fusion_dim`` (total dimension, via a leaner integer recursion).

All arithmetic is exact.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .qseries import (
    GradedDecomposition,
    QP_ZERO,
    QPolynomial,
    involute_decomposition,
    qp_eval_one,
    qp_normalize,
)
from .weights import (
    ALPHA1,
    ALPHA2,
    THETA,
    PairKind,
    Weight,
    normalize_pair,
    pair_kind,
    require_dominant,
    weyl_dim,
)

__all__ = [
    "KernelSummand",
    "KernelDecomposition",
    "reduce_pair",
    "kernel_generators",
    "first_kind_index_pairs",
    "second_kind_index_pairs",
    "kernel_summands",
    "graded_character",
    "graded_multiplicity",
    "graded_multiplicity_direct",
    "direct_decomposition",
    "lr_coefficient",
    "fusion_dim",
]


def _require_normalized(lam: Weight, mu: Weight) -> PairKind:
    kind = pair_kind(lam, mu)
    if kind not in (PairKind.FIRST, PairKind.SECOND):
        raise ValueError(f"pair ({lam}, {mu}) is not normalized (kind {kind.name})")
    return kind


def reduce_pair(lam: Weight, mu: Weight) -> tuple[Weight, Weight]:
    """One reduction step on a normalized pair with mu != 0.

    First kind: move a box from mu to lam (second column first); the result
    is again of the first kind.  Second kind: swap the second coordinates,
    which lands in the first kind.  Iterating therefore terminates at mu = 0.
    """
    kind = _require_normalized(lam, mu)
    if mu == (0, 0):
        raise ValueError("pair with mu = 0 does not reduce")
    if kind is PairKind.FIRST:
        if mu[1] > 0:
            return (lam[0], lam[1] + 1), (mu[0], mu[1] - 1)
        return (lam[0] + 1, lam[1]), (mu[0] - 1, 0)
    return (lam[0], mu[1]), (mu[0], lam[1])


def kernel_generators(lam: Weight, mu: Weight) -> list[tuple[Weight, int]]:
    """Generators (root vector, power) of the annihilator of the cyclic vector
    inside the polynomial current algebra, beyond the ones fixed by lam alone.

    Returned as (root, power) pairs: the root vector times t, raised to the
    given power, kills the cyclic vector and generates the kernel over it.
    """
    _require_normalized(lam, mu)
    m1, m2 = mu
    if m1 == 0 and m2 == 0:
        return []
    if m2 == 0:
        return [(ALPHA1, m1), (THETA, m1)]
    if lam[1] >= m2:
        return [(ALPHA2, m2), (THETA, m1 + m2)]
    return [(THETA, m1 + lam[1] + s) for s in range(1, m2 - lam[1] + 1)]


def first_kind_index_pairs(lam: Weight, mu: Weight) -> list[tuple[int, int]]:
    """Lattice points indexing the top-grade kernel summands, first kind:

        0 <= a2 < mu2,  0 <= a1 <= mu1,  mu2 - lam1 <= a2 - a1 <= lam2 - mu1.
    """
    l1, l2 = lam
    m1, m2 = mu
    return [
        (a1, a2)
        for a1 in range(m1 + 1)
        for a2 in range(m2)
        if m2 - l1 <= a2 - a1 <= l2 - m1
    ]


def second_kind_index_pairs(lam: Weight, mu: Weight, ell: int) -> list[tuple[int, int]]:
    """Lattice points indexing the shell of kernel summands at level ell,
    second kind:

        0 <= a1 <= mu1,  0 <= a2 <= lam2,
        mu1 - mu2 + ell <= a1 - a2 <= lam1 - lam2 - ell.
    """
    l1, l2 = lam
    m1, m2 = mu
    return [
        (a1, a2)
        for a1 in range(m1 + 1)
        for a2 in range(l2 + 1)
        if m1 - m2 + ell <= a1 - a2 <= l1 - l2 - ell
    ]


@dataclass(frozen=True)
class KernelSummand:
    """One graded irreducible summand split off by a reduction step."""

    shift: int
    highest_weight: Weight


@dataclass(frozen=True)
class KernelDecomposition:
    """Everything a reduction step adds on top of the reduced pair.

    ``summands`` are explicit graded irreducibles; ``residual`` (first kind
    with both mu coordinates positive only) is a smaller fusion pair whose
    whole decomposition enters shifted by ``residual_shift``.
    """

    summands: tuple[KernelSummand, ...]
    residual: tuple[Weight, Weight] | None = None
    residual_shift: int | None = None


def kernel_summands(lam: Weight, mu: Weight) -> KernelDecomposition:
    """Graded complement of the reduced fusion product inside F(lam, mu)."""
    kind = _require_normalized(lam, mu)
    l1, l2 = lam
    m1, m2 = mu
    if mu == (0, 0):
        raise ValueError("pair with mu = 0 has no kernel summands")
    summands: list[KernelSummand] = []
    residual: tuple[Weight, Weight] | None = None
    residual_shift: int | None = None
    if kind is PairKind.FIRST:
        if m1 > 0 and m2 > 0:
            for a1, a2 in first_kind_index_pairs(lam, mu):
                nu = (l1 - (m2 + a1 - 2 * a2), l2 - (m1 + a2 - 2 * a1))
                summands.append(KernelSummand(m1 + m2, nu))
            residual = ((l1 + m2, l2 - m2), (m1, 0))
            residual_shift = m2
        elif m1 == 0:
            for j in range(max(0, m2 - l1), m2 + 1):
                summands.append(KernelSummand(m2, (l1 - m2 + 2 * j, l2 - j)))
        else:
            for j in range(max(0, m1 - l2), m1 + 1):
                summands.append(KernelSummand(m1, (l1 - j, l2 - m1 + 2 * j)))
    else:
        zl = (l1, m2)
        for ell in range(1, m2 - l2 + 1):
            for a1, a2 in second_kind_index_pairs(lam, mu, ell):
                nu = (
                    zl[0] - (l2 + a1 - 2 * a2 + ell),
                    zl[1] - (m1 + a2 - 2 * a1 + ell),
                )
                summands.append(KernelSummand(m1 + l2 + ell, nu))
    # Non-dominant candidates are dropped by convention; the index-set
    # inequalities make every candidate above dominant, so this is a no-op.
    kept = tuple(
        s for s in summands if s.highest_weight[0] >= 0 and s.highest_weight[1] >= 0
    )
    return KernelDecomposition(kept, residual, residual_shift)


class _Accumulator(dict):
    """dict[Weight, list[int]] with graded bumps."""

    def bump(self, nu: Weight, grade: int, count: int = 1) -> None:
        row = self.setdefault(nu, [])
        if len(row) <= grade:
            row.extend([0] * (grade + 1 - len(row)))
        row[grade] += count

    def frozen(self) -> GradedDecomposition:
        out = {nu: qp_normalize(row) for nu, row in self.items()}
        return {nu: poly for nu, poly in out.items() if poly}


@functools.lru_cache(maxsize=None)
def _assemble(lam: Weight, mu: Weight) -> GradedDecomposition:
    """Full graded decomposition of a normalized pair (recursive, memoized).

    The returned dict is cached; callers must not mutate it.
    """
    if mu == (0, 0):
        return {lam: (1,)}
    acc = _Accumulator()
    for nu, poly in _assemble(*reduce_pair(lam, mu)).items():
        acc[nu] = list(poly)
    kd = kernel_summands(lam, mu)
    for summand in kd.summands:
        acc.bump(summand.highest_weight, summand.shift)
    if kd.residual is not None:
        for nu, poly in _assemble(*kd.residual).items():
            for grade, coeff in enumerate(poly):
                if coeff:
                    acc.bump(nu, grade + kd.residual_shift, coeff)
    return acc.frozen()


def graded_character(lam: Weight, mu: Weight) -> GradedDecomposition:
    """Graded multiplicity polynomials of every irreducible in F(lam, mu).

    The result maps dominant weights nu to polynomials in q recording in
    which grades V(nu) occurs.  Symmetric in lam and mu.
    """
    require_dominant(lam)
    require_dominant(mu)
    pair = normalize_pair(lam, mu)
    dec = _assemble(pair.lam, pair.mu)
    if pair.involuted:
        return involute_decomposition(dec)
    return dict(dec)


def graded_multiplicity(lam: Weight, mu: Weight, nu: Weight) -> QPolynomial:
    """The polynomial [F(lam, mu) : V(nu)]_q (empty tuple when absent)."""
    require_dominant(nu)
    return graded_character(lam, mu).get(nu, QP_ZERO)


def lr_coefficient(lam: Weight, mu: Weight, nu: Weight) -> int:
    """Multiplicity of V(nu) in V(lam) (x) V(mu): the q = 1 specialization."""
    return qp_eval_one(graded_multiplicity(lam, mu, nu))


@functools.lru_cache(maxsize=None)
def _fusion_dim_normalized(lam: Weight, mu: Weight) -> int:
    if mu == (0, 0):
        return weyl_dim(lam)
    total = _fusion_dim_normalized(*reduce_pair(lam, mu))
    kd = kernel_summands(lam, mu)
    total += sum(weyl_dim(s.highest_weight) for s in kd.summands)
    if kd.residual is not None:
        total += _fusion_dim_normalized(*kd.residual)
    return total


def fusion_dim(lam: Weight, mu: Weight) -> int:
    """Total dimension of F(lam, mu), by a dimension-only recursion.

    Always equals weyl_dim(lam) * weyl_dim(mu); computing it independently of
    the graded assembly makes that identity a meaningful consistency check.
    """
    require_dominant(lam)
    require_dominant(mu)
    pair = normalize_pair(lam, mu)
    return _fusion_dim_normalized(pair.lam, pair.mu)


def _direct_into(acc: _Accumulator, lam: Weight, mu: Weight) -> None:
    """Accumulate the closed (non-recursive) enumeration for a normalized pair."""
    l1, l2 = lam
    m1, m2 = mu
    if mu == (0, 0):
        acc.bump(lam, 0)
        return
    kind = pair_kind(lam, mu)
    if kind is PairKind.SECOND:
        # Shells indexed by ell, then the flipped first-kind pair.
        for ell in range(1, m2 - l2 + 1):
            for a1, a2 in second_kind_index_pairs(lam, mu, ell):
                nu = (l1 - (l2 + a1 - 2 * a2 + ell), m2 - (m1 + a2 - 2 * a1 + ell))
                acc.bump(nu, m1 + l2 + ell)
        _direct_into(acc, (l1, m2), (m1, l2))
        return
    if m2 == 0:
        for p in range(m1 + 1):
            for a in range(max(0, p - l2), p + 1):
                acc.bump((l1 + m1 - p - a, l2 - p + 2 * a), p)
        return
    if m1 == 0:
        for j in range(m2 + 1):
            g = m2 - j
            for b in range(max(0, g - l1), g + 1):
                acc.bump((l1 - g + 2 * b, l2 + j - b), g)
        return
    # First kind, both coordinates positive: a rectangular family ...
    for j in range(m2 + 1):
        for ell in range(m1 + 1):
            for a in range(max(0, m1 + m2 - ell - l2 - 2 * j), m1 - ell + 1):
                nu = (l1 + m2 + ell - a - j, l2 - (m1 + m2) + ell + 2 * (a + j))
                acc.bump(nu, m1 + m2 - ell - j)
    # ... plus the top-grade summands of each partially reduced pair.
    for j in range(m2):
        for a1, a2 in first_kind_index_pairs((l1, l2 + j), (m1, m2 - j)):
            nu = (l1 - (m2 - j + a1 - 2 * a2), l2 + j - (m1 + a2 - 2 * a1))
            acc.bump(nu, m1 + m2 - j)


def direct_decomposition(lam: Weight, mu: Weight) -> GradedDecomposition:
    """Graded decomposition by direct enumeration, no recursion or caching.

    Independent of ``graded_character``'s assembly; the two must agree.
    """
    require_dominant(lam)
    require_dominant(mu)
    pair = normalize_pair(lam, mu)
    acc = _Accumulator()
    _direct_into(acc, pair.lam, pair.mu)
    dec = acc.frozen()
    if pair.involuted:
        return involute_decomposition(dec)
    return dec


def graded_multiplicity_direct(lam: Weight, mu: Weight, nu: Weight) -> QPolynomial:
    """Like graded_multiplicity, but via the direct enumeration."""
    require_dominant(nu)
    return direct_decomposition(lam, mu).get(nu, QP_ZERO)
