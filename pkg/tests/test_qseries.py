"""Graded-coefficient polynomials and decomposition serialization."""

import pytest

from sl3fusion.qseries import (
    QP_ONE,
    QP_ZERO,
    canonical_json,
    decomposition_at_q1,
    decomposition_from_json,
    decomposition_to_json,
    involute_decomposition,
    qp_add,
    qp_coefficient,
    qp_degree,
    qp_eval_one,
    qp_format,
    qp_format_latex,
    qp_min_degree,
    qp_monomial,
    qp_normalize,
    qp_scale,
    qp_shift,
    sorted_summands,
)


def test_normalize_and_constants():
    assert QP_ZERO == ()
    assert QP_ONE == (1,)
    assert qp_normalize([0, 1, 0, 0]) == (0, 1)
    assert qp_normalize([]) == ()
    assert qp_normalize([0, 0]) == ()


def test_arithmetic():
    a = (1, 2)          # 1 + 2q
    b = (0, 3, 1)       # 3q + q^2
    assert qp_add(a, b) == (1, 5, 1)
    assert qp_add(a, QP_ZERO) == a
    assert qp_add((1,), (-1,)) == ()
    assert qp_shift(a, 2) == (0, 0, 1, 2)
    assert qp_shift(QP_ZERO, 3) == ()
    with pytest.raises(ValueError):
        qp_shift(a, -1)
    assert qp_scale(a, 3) == (3, 6)
    assert qp_scale(a, 0) == ()
    assert qp_monomial(2) == (0, 0, 1)
    assert qp_monomial(0) == (1,)


def test_queries():
    p = (0, 1, 1)
    assert qp_coefficient(p, 0) == 0
    assert qp_coefficient(p, 2) == 1
    assert qp_coefficient(p, 99) == 0
    assert qp_degree(p) == 2 and qp_min_degree(p) == 1
    assert qp_degree(QP_ZERO) is None and qp_min_degree(QP_ZERO) is None
    assert qp_eval_one(p) == 2
    assert qp_eval_one(QP_ZERO) == 0


def test_formatting():
    cases = {
        (): "0",
        (1,): "1",
        (0, 1): "q",
        (0, 1, 1): "q + q^2",
        (0, 0, 0, 2): "2q^3",
        (2, 1): "2 + q",
        (0, -1): "-q",
        (1, -2, 3): "1 - 2q + 3q^2",
    }
    for poly, text in cases.items():
        assert qp_format(poly) == text
    assert qp_format_latex((0, 1, 1)) == "q + q^{2}"
    assert qp_format_latex((0, 0, 2)) == "2q^{2}"
    assert qp_format_latex(()) == "0"


def test_sorted_summands_order():
    dec = {
        (0, 0): (0, 0, 1),
        (1, 1): (0, 1, 1),
        (3, 0): (0, 1),
        (0, 3): (0, 1),
        (2, 2): (1,),
    }
    order = [nu for nu, _ in sorted_summands(dec)]
    # ascending min degree, ties broken lexicographically on the weight
    assert order == [(2, 2), (0, 3), (1, 1), (3, 0), (0, 0)]


def test_decomposition_helpers():
    dec = {(2, 1): (0, 1), (1, 2): (1, 1)}
    assert decomposition_at_q1(dec) == {(2, 1): 1, (1, 2): 2}
    assert involute_decomposition(dec) == {(1, 2): (0, 1), (2, 1): (1, 1)}
    assert involute_decomposition(involute_decomposition(dec)) == dec


def test_json_round_trip():
    dec = {
        (2, 2): (1,),
        (1, 1): (0, 1, 1),
        (0, 0): (0, 0, 1),
        (3, 0): (0, 1),
        (0, 3): (0, 1),
    }
    obj = decomposition_to_json((1, 1), (1, 1), dec)
    assert obj["lambda"] == [1, 1] and obj["mu"] == [1, 1]
    assert {tuple(s["nu"]): tuple(s["coeffs"]) for s in obj["summands"]} == dec
    lam, mu, back = decomposition_from_json(obj)
    assert (lam, mu, back) == ((1, 1), (1, 1), dec)


def test_json_duplicate_rejected():
    obj = {
        "lambda": [1, 0],
        "mu": [0, 0],
        "summands": [
            {"nu": [1, 0], "coeffs": [1]},
            {"nu": [1, 0], "coeffs": [0, 1]},
        ],
    }
    with pytest.raises(ValueError):
        decomposition_from_json(obj)


def test_canonical_json_stable_bytes():
    obj = decomposition_to_json((1, 0), (1, 0), {(2, 0): (1,), (0, 1): (0, 1)})
    text = canonical_json(obj)
    assert text == (
        '{"lambda":[1,0],"mu":[1,0],"summands":'
        '[{"coeffs":[1],"nu":[2,0]},{"coeffs":[0,1],"nu":[0,1]}]}'
    )
    assert canonical_json(obj) == text
