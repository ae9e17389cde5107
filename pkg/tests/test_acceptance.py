"""Acceptance gate: every release-blocking identity, exact, with time budgets.

Run with ``pytest tests/test_acceptance.py -v`` for one pass/fail line per
criterion (add ``-s`` to see the timing lines).  All comparisons are exact
integer/rational equality; there are no tolerances anywhere.
"""

import time

from sl3fusion.characters import tensor_decompose
from sl3fusion.closedform import fusion_dim, graded_character, lr_coefficient
from sl3fusion.fusion_oracle import (
    fusion_graded_character,
    graded_decomposition_oracle,
    realize_irrep,
)
from sl3fusion.qseries import decomposition_at_q1, qp_eval_one
from sl3fusion.verification import SweepConfig, run_sweep
from sl3fusion.weights import (
    ALPHA1,
    ALPHA2,
    dominant_weights_up_to,
    pairing,
    weyl_dim,
)


def report(number: int, detail: str, started: float, budget: float | None) -> None:
    elapsed = time.perf_counter() - started
    assert budget is None or elapsed < budget, (
        f"criterion {number} exceeded budget: {elapsed:.1f}s >= {budget}s"
    )
    budget_note = f", budget {budget:.0f}s" if budget is not None else ""
    print(f"criterion {number} PASS: {detail} ({elapsed:.2f}s{budget_note})")


def test_criterion_1_dimension_identity():
    started = time.perf_counter()
    grid = list(dominant_weights_up_to(8))
    pairs = 0
    for lam in grid:
        for mu in grid:
            assert fusion_dim(lam, mu) == weyl_dim(lam) * weyl_dim(mu), (lam, mu)
            pairs += 1
    assert pairs == 6561
    report(1, f"fusion dimension identity on {pairs} pairs", started, 10.0)


def test_criterion_2_lr_closed_form_vs_character_oracle():
    started = time.perf_counter()
    grid = list(dominant_weights_up_to(6))
    pairs = 0
    for lam in grid:
        for mu in grid:
            tensor = tensor_decompose(lam, mu)
            closed = decomposition_at_q1(graded_character(lam, mu))
            assert closed == tensor, (lam, mu)
            for eta, mult in tensor.items():
                assert lr_coefficient(lam, mu, eta) == mult, (lam, mu, eta)
            pairs += 1
    assert pairs == 2401
    report(2, f"multiplicity coefficients on {pairs} pairs", started, 60.0)


def test_criterion_3_closed_form_vs_fusion_oracle():
    started = time.perf_counter()
    # weyl_dim is monotone in each coordinate and weyl_dim((24,0)) = 325,
    # so every weight of a pair with product <= 300 has coordinates <= 23.
    grid = [w for w in dominant_weights_up_to(23) if weyl_dim(w) <= 300]
    pairs = 0
    for lam in grid:
        for mu in grid:
            if weyl_dim(lam) * weyl_dim(mu) > 300:
                continue
            oracle = graded_decomposition_oracle(lam, mu, z=(0, 1), dim_bound=300)
            assert oracle == graded_character(lam, mu), (lam, mu)
            pairs += 1
    assert pairs == 626
    report(3, f"graded closed form equals filtration oracle on {pairs} pairs",
           started, 600.0)


def test_criterion_4_evaluation_point_independence():
    started = time.perf_counter()
    pairs = [
        ((1, 0), (1, 0)),
        ((1, 0), (0, 1)),
        ((1, 1), (1, 1)),
        ((2, 1), (1, 1)),
        ((2, 0), (0, 2)),
    ]
    for lam, mu in pairs:
        base = fusion_graded_character(lam, mu, z=(0, 1))
        assert fusion_graded_character(lam, mu, z=(2, 5)) == base, (lam, mu)
        assert graded_decomposition_oracle(lam, mu, z=(2, 5)) == (
            graded_decomposition_oracle(lam, mu, z=(0, 1))
        )
    report(4, f"oracle output independent of evaluation points on {len(pairs)} pairs",
           started, None)


def test_criterion_5_spot_fixtures():
    started = time.perf_counter()
    assert graded_character((1, 0), (1, 0)) == {(2, 0): (1,), (0, 1): (0, 1)}
    assert graded_character((1, 0), (0, 1)) == {(1, 1): (1,), (0, 0): (0, 1)}
    adjoint = graded_character((1, 1), (1, 1))
    assert adjoint == {
        (2, 2): (1,),
        (3, 0): (0, 1),
        (0, 3): (0, 1),
        (1, 1): (0, 1, 1),
        (0, 0): (0, 0, 1),
    }
    assert sum(qp_eval_one(p) * weyl_dim(nu) for nu, p in adjoint.items()) == 64
    report(5, "three spot decompositions and total dimension 64", started, None)


def test_criterion_6_multiplicity_freeness():
    started = time.perf_counter()
    cases = 0
    for lam in dominant_weights_up_to(6):
        for m1 in range(1, lam[0] + 1):
            dec = graded_character(lam, (m1, 0))
            for nu, poly in dec.items():
                assert qp_eval_one(poly) == 1, (lam, m1, nu)
                assert all(c in (0, 1) for c in poly)
            cases += 1
    assert cases > 0
    report(6, f"one-row second factor is multiplicity free on {cases} products",
           started, None)


def test_criterion_7_structural_invariants():
    started = time.perf_counter()
    config = SweepConfig(
        max_coord=5,
        checks=("leading", "grade_bound", "involution", "symmetry"),
    )
    result = run_sweep(config)
    assert result.ok, result.failures[:3]
    assert result.pair_count == 1296
    for check in config.checks:
        assert result.counts[check] == {"pass": 1296, "fail": 0, "skip": 0}
    report(7, "leading term, grade bound, involution, symmetry on 1296 pairs",
           started, None)


def test_criterion_8_oracle_self_certification():
    started = time.perf_counter()
    weights = [w for w in dominant_weights_up_to(12) if weyl_dim(w) <= 100]
    assert len(weights) == 50
    from sl3fusion.characters import irrep_character

    for lam in weights:
        real = realize_irrep(lam, dim_bound=100)
        assert real.census() == irrep_character(lam), lam
        top = {real.highest: 1}
        for gen in ("e12", "e23", "e13"):
            assert real.apply(gen, top) == {}, (lam, gen)
        for h, root in (("h1", ALPHA1), ("h2", ALPHA2)):
            expect = pairing(lam, root)
            got = real.apply(h, top)
            assert got == ({real.highest: expect} if expect else {}), (lam, h)
        for gen, root in (("e21", ALPHA1), ("e32", ALPHA2)):
            vec = top
            for _ in range(pairing(lam, root) + 1):
                vec = real.apply(gen, vec)
            assert vec == {}, (lam, gen)
    report(8, f"explicit construction self-certifies on {len(weights)} irreducibles",
           started, None)
