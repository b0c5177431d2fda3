import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tnnflag.oracle import (
    bruhat_leq_oracle, determinant_cofactor, flag_matroid_check,
    generic_weights, ideal_element_sample, random_flag, reduced_word_oracle,
    support_oracle,
)
from tnnflag.perms import (
    all_perms, bruhat_leq, identity, length, longest_element, perm_from_word,
)
from tnnflag.plucker import check_relation, generate_relations, phi
from tnnflag.wiring import build_diagram

EX_V, EX_W = (1, 3, 2, 4), (4, 2, 1, 3)


@given(st.integers(2, 6).flatmap(
    lambda n: st.permutations(list(range(1, n + 1)))).map(tuple))
def test_reduced_word_oracle(w):
    word = reduced_word_oracle(w)
    assert len(word) == length(w)
    assert perm_from_word(len(w), word) == w


def test_bruhat_oracle_agrees_with_tableau_criterion():
    for n in (3, 4):
        for v in all_perms(n):
            for w in all_perms(n):
                assert bruhat_leq_oracle(v, w) == bruhat_leq(v, w), (v, w)


def test_support_oracle_example_cell():
    assert support_oracle(EX_V, EX_W, 2) == {(1, 3), (2, 3)}
    with pytest.raises(ValueError):
        support_oracle(identity(8), identity(8), 1)
    with pytest.raises(ValueError):
        support_oracle((2, 1, 3), (1, 3, 2), 1)


def test_flag_matroid_check_accepts_cell_supports():
    from tnnflag.extremal import cell_support
    for v in all_perms(3):
        for w in all_perms(3):
            if bruhat_leq(v, w):
                assert flag_matroid_check(cell_support(v, w).sets)


def test_flag_matroid_check_rejections():
    # violated basis exchange
    assert not flag_matroid_check({2: {(1, 4), (2, 3)}})
    # violated containment between sizes
    assert not flag_matroid_check({1: {(2,)}, 2: {(1, 3)}})
    # empty class
    assert not flag_matroid_check({1: set()})
    # wrong basis size
    assert not flag_matroid_check({2: {(1, 2, 3)}})


def test_random_flag_is_deterministic_and_valid():
    p = random_flag(4, seed=42)
    assert p.coords == random_flag(4, seed=42).coords
    for rel in generate_relations(4):
        assert check_relation(rel, p) == 0


def test_generic_weights_positive_with_right_ids():
    a = generic_weights(EX_V, EX_W, seed=0)
    assert set(a) == set(build_diagram(EX_V, EX_W).weight_ids())
    assert all(x > 0 for x in a.values())
    # distinct numerators by construction, so no accidental collisions
    assert len({x.numerator for x in a.values()}) == len(a)


def test_generic_weights_support_is_the_cell_support():
    from tnnflag.extremal import cell_support
    for seed in range(3):
        a = generic_weights(EX_V, EX_W, seed=seed)
        p = phi(EX_V, EX_W, a)
        assert {k: set(v) for k, v in p.support().items()} == \
            {k: set(v) for k, v in cell_support(EX_V, EX_W).sets.items()}


def test_ideal_elements_vanish_on_flags():
    """Every sampled combination stays inside the ideal: it evaluates to 0
    at the coordinates of any flag."""
    polys = ideal_element_sample(3, count=20, seed=5)
    assert len(polys) == 20
    flags = [random_flag(3, seed=s) for s in (1, 2, 3)]
    for poly in polys:
        for p in flags:
            total = Fraction(0)
            for coeff, mono in poly:
                term = Fraction(coeff)
                for I, exp in mono.items():
                    term *= p.coord(I) ** exp
                total += term
            assert total == 0


def test_ideal_element_sample_merges_like_terms():
    for poly in ideal_element_sample(3, count=30, seed=7):
        keys = [frozenset(mono.items()) for _, mono in poly]
        assert len(keys) == len(set(keys))
        assert all(c != 0 for c, _ in poly)
    with pytest.raises(ValueError):
        ideal_element_sample(5, count=1, seed=0)
