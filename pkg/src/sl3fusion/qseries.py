"""Polynomials in q with nonnegative integer coefficients, as plain tuples.

A ``QPolynomial`` is a tuple of coefficients, lowest degree first, with no
trailing zeros; the zero polynomial is the empty tuple.  Graded multiplicity
data is a ``GradedDecomposition``: a dict mapping dominant highest weights to
nonzero q-polynomials.

Tuples keep the data hashable and immutable, so decompositions can be memoized
and compared directly.
"""

from __future__ import annotations

import json
from typing import Iterable, Mapping

from .weights import Weight, involute

QPolynomial = tuple[int, ...]
GradedDecomposition = dict[Weight, QPolynomial]

QP_ZERO: QPolynomial = ()
QP_ONE: QPolynomial = (1,)

__all__ = [
    "QPolynomial",
    "GradedDecomposition",
    "QP_ZERO",
    "QP_ONE",
    "qp_normalize",
    "qp_add",
    "qp_shift",
    "qp_scale",
    "qp_coefficient",
    "qp_degree",
    "qp_min_degree",
    "qp_eval_one",
    "qp_monomial",
    "qp_format",
    "qp_format_latex",
    "sorted_summands",
    "decomposition_at_q1",
    "involute_decomposition",
    "decomposition_to_json",
    "decomposition_from_json",
    "canonical_json",
]


def qp_normalize(coeffs: Iterable[int]) -> QPolynomial:
    """Strip trailing zeros and return the canonical tuple form."""
    out = list(coeffs)
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


def qp_add(a: QPolynomial, b: QPolynomial) -> QPolynomial:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return qp_normalize(out)


def qp_shift(a: QPolynomial, s: int) -> QPolynomial:
    """Multiply by q**s."""
    if s < 0:
        raise ValueError("shift must be nonnegative")
    return (0,) * s + a if a else a


def qp_scale(a: QPolynomial, c: int) -> QPolynomial:
    if c == 0:
        return QP_ZERO
    return tuple(c * x for x in a)


def qp_monomial(degree: int, coeff: int = 1) -> QPolynomial:
    if coeff == 0:
        return QP_ZERO
    return (0,) * degree + (coeff,)


def qp_coefficient(a: QPolynomial, k: int) -> int:
    return a[k] if 0 <= k < len(a) else 0


def qp_degree(a: QPolynomial) -> int | None:
    """Largest degree with nonzero coefficient, or None for the zero polynomial."""
    return len(a) - 1 if a else None


def qp_min_degree(a: QPolynomial) -> int | None:
    """Smallest degree with nonzero coefficient, or None for the zero polynomial."""
    for i, c in enumerate(a):
        if c:
            return i
    return None


def qp_eval_one(a: QPolynomial) -> int:
    """Evaluate at q = 1."""
    return sum(a)


def _term(coeff: int, degree: int, latex: bool) -> str:
    if degree == 0:
        return str(coeff)
    if degree == 1:
        q = "q"
    elif latex:
        q = f"q^{{{degree}}}"
    else:
        q = f"q^{degree}"
    if coeff == 1:
        return q
    if coeff == -1:
        return f"-{q}"
    return f"{coeff}{q}"


def _join_terms(terms: list[str]) -> str:
    if not terms:
        return "0"
    parts = [terms[0]]
    for term in terms[1:]:
        if term.startswith("-"):
            parts.append(f" - {term[1:]}")
        else:
            parts.append(f" + {term}")
    return "".join(parts)


def qp_format(a: QPolynomial) -> str:
    """Human-readable form, e.g. () -> '0', (0, 1, 1) -> 'q + q^2'."""
    return _join_terms([_term(c, k, latex=False) for k, c in enumerate(a) if c])


def qp_format_latex(a: QPolynomial) -> str:
    return _join_terms([_term(c, k, latex=True) for k, c in enumerate(a) if c])


def sorted_summands(dec: Mapping[Weight, QPolynomial]) -> list[tuple[Weight, QPolynomial]]:
    """Canonical display order: by minimal degree of appearance, then weight."""
    items = [(nu, poly) for nu, poly in dec.items() if poly]
    items.sort(key=lambda item: (qp_min_degree(item[1]), item[0]))
    return items


def decomposition_at_q1(dec: Mapping[Weight, QPolynomial]) -> dict[Weight, int]:
    """Forget the grading: total multiplicity of each summand."""
    out = {nu: qp_eval_one(poly) for nu, poly in dec.items() if poly}
    return out


def involute_decomposition(dec: Mapping[Weight, QPolynomial]) -> GradedDecomposition:
    """Apply the diagram involution (c1, c2) -> (c2, c1) to every summand."""
    return {involute(nu): poly for nu, poly in dec.items()}


def decomposition_to_json(lam: Weight, mu: Weight, dec: Mapping[Weight, QPolynomial]) -> dict:
    """JSON-ready payload with canonically ordered summands."""
    return {
        "lambda": list(lam),
        "mu": list(mu),
        "summands": [
            {"nu": list(nu), "coeffs": list(poly)} for nu, poly in sorted_summands(dec)
        ],
    }


def decomposition_from_json(payload: Mapping) -> tuple[Weight, Weight, GradedDecomposition]:
    lam = tuple(payload["lambda"])
    mu = tuple(payload["mu"])
    dec: GradedDecomposition = {}
    for item in payload["summands"]:
        nu = tuple(item["nu"])
        poly = qp_normalize(item["coeffs"])
        if not poly:
            continue
        if nu in dec:
            raise ValueError(f"duplicate summand {nu}")
        dec[nu] = poly
    return lam, mu, dec


def canonical_json(obj) -> str:
    """Deterministic JSON encoding (sorted keys, no whitespace)."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))
