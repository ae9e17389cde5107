"""Closed-form graded decompositions: reduction steps, kernel data, assembly.

Every frozen decomposition in this file was checked against the independent
evaluation-module oracle (see test_fusion_oracle.py) before being recorded.
"""

import pytest

from sl3fusion.closedform import (
    KernelDecomposition,
    KernelSummand,
    direct_decomposition,
    first_kind_index_pairs,
    fusion_dim,
    graded_character,
    graded_multiplicity,
    graded_multiplicity_direct,
    kernel_generators,
    kernel_summands,
    lr_coefficient,
    reduce_pair,
    second_kind_index_pairs,
)
from sl3fusion.qseries import decomposition_at_q1, involute_decomposition, qp_eval_one
from sl3fusion.characters import tensor_decompose
from sl3fusion.weights import (
    ALPHA1,
    ALPHA2,
    THETA,
    dominant_weights_up_to,
    involute,
    is_dominant,
    normalize_pair,
    size,
    weyl_dim,
)


# ---------------------------------------------------------------- reduction


def test_reduce_pair_first_kind():
    assert reduce_pair((2, 2), (1, 1)) == ((2, 3), (1, 0))
    assert reduce_pair((2, 2), (1, 0)) == ((3, 2), (0, 0))
    assert reduce_pair((3, 1), (2, 1)) == ((3, 2), (2, 0))


def test_reduce_pair_second_kind_swaps_tails():
    assert reduce_pair((2, 0), (0, 2)) == ((2, 2), (0, 0))
    assert reduce_pair((1, 0), (0, 1)) == ((1, 1), (0, 0))
    assert reduce_pair((3, 1), (1, 2)) == ((3, 2), (1, 1))


def test_reduce_pair_errors():
    with pytest.raises(ValueError):
        reduce_pair((2, 0), (0, 0))  # nothing left to reduce
    with pytest.raises(ValueError):
        reduce_pair((0, 1), (1, 0))  # third kind is not normalized
    with pytest.raises(ValueError):
        reduce_pair((1, 0), (1, 1))  # |mu| > |lam|


def test_reduce_pair_terminates():
    # Repeated reduction reaches mu = 0 in finitely many steps.
    for lam in dominant_weights_up_to(3):
        for mu in dominant_weights_up_to(3):
            pair = normalize_pair(lam, mu)
            a, b = pair.lam, pair.mu
            for _ in range(100):
                if b == (0, 0):
                    break
                a, b = reduce_pair(a, b)
                assert size(a) + size(b) == size(lam) + size(mu)
            assert b == (0, 0)


# ----------------------------------------------------------- kernel shape


def test_kernel_generators_fixtures():
    assert kernel_generators((2, 2), (2, 0)) == [(ALPHA1, 2), (THETA, 2)]
    assert kernel_generators((2, 2), (1, 1)) == [(ALPHA2, 1), (THETA, 2)]
    assert kernel_generators((2, 0), (0, 2)) == [(THETA, 1), (THETA, 2)]
    assert kernel_generators((3, 0), (0, 0)) == []


def test_index_pair_fixtures():
    assert first_kind_index_pairs((1, 1), (1, 1)) == [(0, 0)]
    assert first_kind_index_pairs((2, 2), (1, 1)) == [(0, 0), (1, 0)]
    assert second_kind_index_pairs((2, 0), (0, 2), 1) == [(0, 0)]
    assert second_kind_index_pairs((1, 0), (0, 1), 1) == [(0, 0)]


def test_kernel_summands_first_kind_with_residual():
    dec = kernel_summands((1, 1), (1, 1))
    assert dec == KernelDecomposition(
        summands=(KernelSummand(2, (0, 0)),),
        residual=((2, 0), (1, 0)),
        residual_shift=1,
    )


def test_kernel_summands_single_column():
    dec = kernel_summands((2, 2), (0, 1))
    assert set(dec.summands) == {KernelSummand(1, (1, 2)), KernelSummand(1, (3, 1))}
    assert dec.residual is None and dec.residual_shift is None


def test_kernel_summands_single_row():
    dec = kernel_summands((2, 2), (1, 0))
    assert set(dec.summands) == {KernelSummand(1, (2, 1)), KernelSummand(1, (1, 3))}
    assert dec.residual is None


def test_kernel_summands_second_kind():
    dec = kernel_summands((1, 0), (0, 1))
    assert dec == KernelDecomposition(summands=(KernelSummand(1, (0, 0)),))


def test_kernel_summands_all_dominant_no_duplicates():
    for lam in dominant_weights_up_to(4):
        for mu in dominant_weights_up_to(4):
            if size(mu) > size(lam) or mu == (0, 0):
                continue
            try:
                dec = kernel_summands(lam, mu)
            except ValueError:
                continue  # third kind
            seen = set()
            for s in dec.summands:
                assert is_dominant(s.highest_weight)
                assert s.shift > 0
                key = (s.shift, s.highest_weight)
                assert key not in seen
                seen.add(key)


def test_kernel_summands_errors():
    with pytest.raises(ValueError):
        kernel_summands((2, 0), (0, 0))
    with pytest.raises(ValueError):
        kernel_summands((0, 2), (2, 0))


# ------------------------------------------------------ graded characters


FROZEN = {
    ((1, 0), (1, 0)): {(2, 0): (1,), (0, 1): (0, 1)},
    ((1, 0), (0, 1)): {(1, 1): (1,), (0, 0): (0, 1)},
    ((1, 1), (1, 1)): {
        (2, 2): (1,),
        (0, 3): (0, 1),
        (3, 0): (0, 1),
        (1, 1): (0, 1, 1),
        (0, 0): (0, 0, 1),
    },
    ((2, 0), (0, 2)): {(2, 2): (1,), (1, 1): (0, 1), (0, 0): (0, 0, 1)},
    ((2, 2), (1, 1)): {
        (3, 3): (1,),
        (2, 2): (0, 1, 1),
        (1, 4): (0, 1),
        (4, 1): (0, 1),
        (3, 0): (0, 0, 1),
        (1, 1): (0, 0, 1),
        (0, 3): (0, 0, 1),
    },
    ((2, 1), (1, 2)): {
        (3, 3): (1,),
        (2, 2): (0, 1, 1),
        (1, 4): (0, 1),
        (4, 1): (0, 1),
        (3, 0): (0, 0, 1),
        (0, 3): (0, 0, 1),
        (1, 1): (0, 0, 1, 1),
        (0, 0): (0, 0, 0, 1),
    },
}


def test_graded_character_frozen():
    for (lam, mu), expected in FROZEN.items():
        assert graded_character(lam, mu) == expected, (lam, mu)


def test_graded_character_trivial_factor():
    for lam in dominant_weights_up_to(3):
        assert graded_character(lam, (0, 0)) == {lam: (1,)}
        assert graded_character((0, 0), lam) == {lam: (1,)}


def test_graded_multiplicity_values():
    assert graded_multiplicity((1, 1), (1, 1), (1, 1)) == (0, 1, 1)
    assert graded_multiplicity((1, 1), (1, 1), (2, 2)) == (1,)
    assert graded_multiplicity((1, 1), (1, 1), (5, 5)) == ()
    with pytest.raises(ValueError):
        graded_multiplicity((1, 1), (1, 1), (-1, 0))


def test_lr_coefficient_values():
    assert lr_coefficient((1, 1), (1, 1), (1, 1)) == 2
    assert lr_coefficient((2, 2), (1, 1), (2, 2)) == 2
    assert lr_coefficient((1, 0), (0, 1), (0, 0)) == 1
    assert lr_coefficient((1, 0), (1, 0), (1, 1)) == 0


def test_fusion_dim_values():
    assert fusion_dim((1, 1), (1, 1)) == 64
    assert fusion_dim((2, 1), (1, 2)) == 225
    assert fusion_dim((2, 2), (1, 1)) == 216


def test_fusion_dim_is_product_of_dimensions():
    for lam in dominant_weights_up_to(4):
        for mu in dominant_weights_up_to(4):
            assert fusion_dim(lam, mu) == weyl_dim(lam) * weyl_dim(mu)


def test_graded_character_mass_and_positivity():
    for lam in dominant_weights_up_to(3):
        for mu in dominant_weights_up_to(3):
            dec = graded_character(lam, mu)
            total = 0
            for nu, poly in dec.items():
                assert is_dominant(nu)
                assert all(c >= 0 for c in poly) and poly[-1] > 0
                total += qp_eval_one(poly) * weyl_dim(nu)
            assert total == weyl_dim(lam) * weyl_dim(mu)


def test_graded_character_specializes_to_tensor_product():
    for lam in dominant_weights_up_to(3):
        for mu in dominant_weights_up_to(3):
            dec = graded_character(lam, mu)
            assert decomposition_at_q1(dec) == tensor_decompose(lam, mu)


def test_graded_character_symmetry_and_involution():
    for lam in dominant_weights_up_to(3):
        for mu in dominant_weights_up_to(3):
            dec = graded_character(lam, mu)
            assert graded_character(mu, lam) == dec
            assert graded_character(involute(lam), involute(mu)) == (
                involute_decomposition(dec)
            )


def test_direct_enumeration_matches_assembly():
    for lam in dominant_weights_up_to(4):
        for mu in dominant_weights_up_to(4):
            assert direct_decomposition(lam, mu) == graded_character(lam, mu), (
                lam,
                mu,
            )
    assert graded_multiplicity_direct((1, 1), (1, 1), (1, 1)) == (0, 1, 1)
