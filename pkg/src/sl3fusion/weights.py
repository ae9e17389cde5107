"""sl3 weight-lattice combinatorics.

Weights are written in fundamental-weight coordinates: ``(c1, c2)`` stands for
``c1*w1 + c2*w2``.  A weight is dominant when both coordinates are >= 0.  The
positive roots, in the same coordinates, are

    alpha1 = (2, -1),   alpha2 = (-1, 2),   theta = (1, 1),

and the pairings of a weight ``x`` with the corresponding coroots are
``x(h_alpha1) = c1``, ``x(h_alpha2) = c2`` and ``x(h_theta) = c1 + c2``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

Weight = tuple[int, int]

ZERO: Weight = (0, 0)
ALPHA1: Weight = (2, -1)
ALPHA2: Weight = (-1, 2)
THETA: Weight = (1, 1)
POSITIVE_ROOTS: tuple[Weight, ...] = (ALPHA1, ALPHA2, THETA)

# Names used when reporting kernel generators: each positive root paired with
# the exponent of the corresponding lowering current.
ROOT_NAMES = {ALPHA1: "alpha1", ALPHA2: "alpha2", THETA: "theta"}


def wt_add(x: Weight, y: Weight) -> Weight:
    return (x[0] + y[0], x[1] + y[1])


def wt_sub(x: Weight, y: Weight) -> Weight:
    return (x[0] - y[0], x[1] - y[1])


def wt_scale(n: int, x: Weight) -> Weight:
    return (n * x[0], n * x[1])


def size(x: Weight) -> int:
    """Sum of fundamental-weight coordinates, |x| = c1 + c2."""
    return x[0] + x[1]


def is_dominant(x: Weight) -> bool:
    return x[0] >= 0 and x[1] >= 0


def require_dominant(x: Weight, name: str = "weight") -> None:
    if not (isinstance(x[0], int) and isinstance(x[1], int)) or not is_dominant(x):
        raise ValueError(f"{name} must be a dominant integral weight, got {x!r}")


def involute(x: Weight) -> Weight:
    """Diagram involution: swap the two fundamental coordinates.

    Sends a representation to its dual; an involution on dominant weights.
    """
    return (x[1], x[0])


def pairing(x: Weight, root: Weight) -> int:
    """Evaluate x on the coroot h_root for a positive root."""
    if root == ALPHA1:
        return x[0]
    if root == ALPHA2:
        return x[1]
    if root == THETA:
        return x[0] + x[1]
    raise ValueError(f"not a positive root: {root!r}")


def weyl_dim(x: Weight) -> int:
    """Dimension of the irreducible module with highest weight x."""
    require_dominant(x)
    c1, c2 = x
    return (c1 + 1) * (c2 + 1) * (c1 + c2 + 2) // 2


def dominant_weights_up_to(max_coord: int) -> Iterator[Weight]:
    """Dominant weights with both coordinates <= max_coord, lexicographic."""
    for c1 in range(max_coord + 1):
        for c2 in range(max_coord + 1):
            yield (c1, c2)


class PairKind(enum.Enum):
    """Shape of an ordered dominant pair, used to pick a reduction branch."""

    FIRST = "first"
    SECOND = "second"
    THIRD = "third"
    NOT_NORMALIZED = "not_normalized"


def pair_kind(lam: Weight, mu: Weight) -> PairKind:
    """Classify an ordered pair of dominant weights.

    With |lam| >= |mu| exactly one of the three kinds applies:

    * FIRST:  lam1 >= mu1 and lam2 >= mu2 (componentwise domination);
    * SECOND: lam1 >= mu1 and mu2 > lam2;
    * THIRD:  lam2 >= mu2 and mu1 > lam1.

    Pairs with |lam| < |mu| are NOT_NORMALIZED.
    """
    require_dominant(lam, "lam")
    require_dominant(mu, "mu")
    if size(lam) < size(mu):
        return PairKind.NOT_NORMALIZED
    if lam[0] >= mu[0]:
        return PairKind.FIRST if lam[1] >= mu[1] else PairKind.SECOND
    # lam1 < mu1 together with |lam| >= |mu| forces lam2 >= mu2.
    return PairKind.THIRD


@dataclass(frozen=True)
class NormalizedPair:
    """A pair brought to FIRST or SECOND kind, with the moves recorded.

    ``swapped`` means the two weights were exchanged (because |lam| < |mu|);
    ``involuted`` means the diagram involution was applied to both entries
    (because the pair was THIRD kind after the optional swap).  Undoing the
    recorded moves (involute, then swap) recovers the original pair.
    """

    lam: Weight
    mu: Weight
    swapped: bool
    involuted: bool

    @property
    def kind(self) -> PairKind:
        return pair_kind(self.lam, self.mu)


def normalize_pair(lam: Weight, mu: Weight) -> NormalizedPair:
    """Normalize an ordered dominant pair to FIRST or SECOND kind.

    Swap the entries when |lam| < |mu|; then apply the involution to both when
    the (possibly swapped) pair is THIRD kind.  Equal-size pairs are never
    swapped: classification is already total there.
    """
    swapped = size(lam) < size(mu)
    if swapped:
        lam, mu = mu, lam
    involuted = pair_kind(lam, mu) is PairKind.THIRD
    if involuted:
        lam, mu = involute(lam), involute(mu)
    result = NormalizedPair(lam, mu, swapped, involuted)
    assert result.kind in (PairKind.FIRST, PairKind.SECOND)
    return result


def _tails(values: Sequence[int]) -> list[int]:
    """Tail sums of the non-increasing rearrangement, lengths k-1 .. 1."""
    ordered = sorted(values, reverse=True)
    tails = []
    total = sum(ordered)
    running = total
    for v in ordered[:-1]:
        running -= v
        tails.append(running)
    return tails


def majorizes(parts_a: Sequence[Weight], parts_b: Sequence[Weight]) -> bool:
    """Majorization order on k-tuples of dominant weights with equal sum.

    ``parts_a`` majorizes ``parts_b`` when, for every positive root, every
    proper tail sum of the non-increasing rearrangement of the coroot pairings
    of ``parts_a`` dominates the corresponding tail sum for ``parts_b``.  With
    equal totals this is the reverse dominance order on the pairing
    partitions, so the one-block tuple (x, 0, ..., 0) is the unique minimum.
    """
    if len(parts_a) != len(parts_b):
        raise ValueError("tuples must have the same length")
    for x in parts_a:
        require_dominant(x)
    for x in parts_b:
        require_dominant(x)
    for i in (0, 1):
        if sum(x[i] for x in parts_a) != sum(x[i] for x in parts_b):
            raise ValueError("tuples must sum to the same weight")
    for root in POSITIVE_ROOTS:
        ta = _tails([pairing(x, root) for x in parts_a])
        tb = _tails([pairing(x, root) for x in parts_b])
        if any(a < b for a, b in zip(ta, tb)):
            return False
    return True


def sorted_pairings(parts: Iterable[Weight]) -> tuple[tuple[int, ...], ...]:
    """Non-increasing pairing rearrangements per positive root.

    Two tuples majorize each other exactly when these invariants coincide,
    which is the sense in which the order is antisymmetric.
    """
    parts = list(parts)
    return tuple(
        tuple(sorted((pairing(x, root) for x in parts), reverse=True))
        for root in POSITIVE_ROOTS
    )
