import random
from fractions import Fraction

import pytest

from tnnflag.algebra import Trop
from tnnflag.extremal import cell_support, extremal_index_set
from tnnflag.membership import (
    decide_tnn, decide_trop, identify_cell, propagate_three_term, psi,
    psi_monomials, trop_propagate_three_term, trop_psi,
)
from tnnflag.perms import all_perms, bruhat_leq, identity, longest_element
from tnnflag.plucker import PlueckerVector, TropPlueckerVector, phi, trop_phi
from tnnflag.wiring import build_diagram

EX_V, EX_W = (1, 3, 2, 4), (4, 2, 1, 3)
EX_A = {1: Fraction(2), 2: Fraction(3), 4: Fraction(5)}


def _cells(n):
    ps = list(all_perms(n))
    return [(v, w) for v in ps for w in ps if bruhat_leq(v, w)]


def _weights(v, w, rng):
    return {j: Fraction(rng.randint(1, 9), rng.randint(1, 4))
            for j in build_diagram(v, w).weight_ids()}


def test_identify_cell_example_cell():
    p = phi(EX_V, EX_W, EX_A)
    assert identify_cell(p.support(), 4) == (EX_V, EX_W)


def test_identify_cell_rejects_non_nested_chains():
    # Gale extremes exist per size but do not form flags
    support = {1: {(2,)}, 2: {(1, 3)}}
    with pytest.raises(ValueError):
        identify_cell(support, 3)


def test_psi_monomials_top_cell_n3():
    solved = psi_monomials(identity(3), longest_element(3))
    assert {j: m.exponents for j, m in solved.items()} == {
        2: {(1, 3): 1},
        3: {(2, 3): 1, (1, 3): -1},
        1: {(3,): 1, (1, 3): -1},
    }
    assert all(m.coefficient == 1 for m in solved.values())


def test_psi_inverts_phi_example_cell():
    p = phi(EX_V, EX_W, EX_A)
    assert psi(EX_V, EX_W, p) == EX_A


def test_psi_phi_roundtrip_sampled():
    rng = random.Random(1)
    for v, w in rng.sample(_cells(4), 25):
        a = _weights(v, w, rng)
        assert psi(v, w, phi(v, w, a)) == a


def test_psi_requires_positive_generators():
    p = PlueckerVector(4, {(1,): Fraction(1)})
    with pytest.raises(ValueError):
        psi(EX_V, EX_W, p)


def test_trop_psi_inverts_trop_phi():
    x = {j: Trop.of(val) for j, val in EX_A.items()}
    t = trop_phi(EX_V, EX_W, x)
    assert trop_psi(EX_V, EX_W, t) == x


def test_decide_tnn_member():
    cert = decide_tnn(phi(EX_V, EX_W, EX_A))
    assert cert.verdict == "member"
    assert cert.cell == (EX_V, EX_W)
    assert cert.weights == EX_A
    d = cert.to_json_dict()
    assert d["v"] == "1324" and d["w"] == "4213"
    assert d["weights"] == {"1": "2", "2": "3", "4": "5"}


def test_decide_tnn_negative_coordinate():
    p = phi(EX_V, EX_W, EX_A)
    p.coords[(2, 3)] = -p.coords[(2, 3)]
    cert = decide_tnn(p)
    assert cert.verdict == "non-member"
    assert cert.witness["type"] == "negative-coordinate"
    assert cert.witness["index"] == "2,3"


def test_decide_tnn_perturbed_coordinate():
    """Nonnegative but off the cell: flagged with a concrete witness."""
    p = phi(identity(3), longest_element(3),
            {1: Fraction(2), 2: Fraction(3), 3: Fraction(4)})
    p.coords[(2,)] += 1
    cert = decide_tnn(p)
    assert cert.verdict == "non-member"
    assert cert.witness["type"] == "reconstruction-mismatch"
    assert cert.witness["index"] == "2"


def test_decide_tnn_flag_of_positroids_counterexample():
    """Each constituent support is a positroid, yet no single nonnegative
    matrix realizes them all: P_12 > 0 and P_23 > 0 force opposite signs on
    the middle row once the first row is (a 0 b)."""
    p = PlueckerVector(3, {
        (1,): Fraction(1), (3,): Fraction(1),
        (1, 2): Fraction(1), (1, 3): Fraction(1), (2, 3): Fraction(1),
    })
    cert = decide_tnn(p)
    assert cert.verdict == "non-member"


def test_decide_trop_member_and_reject():
    t = trop_phi(EX_V, EX_W, {j: Trop.of(x) for j, x in EX_A.items()})
    cert = decide_trop(t)
    assert cert.verdict == "member" and cert.cell == (EX_V, EX_W)
    t.coords[(2, 3)] = Trop.of(999)
    bad = decide_trop(t)
    assert bad.verdict == "non-member"
    assert bad.witness["type"] in ("violated-tropical-relation",
                                   "reconstruction-mismatch")


def test_certificate_exit_semantics_round_trip():
    cert = decide_tnn(phi(EX_V, EX_W, EX_A))
    d = cert.to_json_dict()
    assert set(d) == {"verdict", "v", "w", "weights"}


def test_propagation_matches_phi_sampled():
    rng = random.Random(2)
    for v, w in rng.sample(_cells(4), 15):
        a = _weights(v, w, rng)
        p = phi(v, w, a)
        ext = extremal_index_set(cell_support(v, w))
        r = propagate_three_term({I: p.coord(I) for I in ext}, (v, w))
        assert r.coords == p.coords, (v, w)


def test_trop_propagation_matches_trop_phi_sampled():
    rng = random.Random(3)
    for v, w in rng.sample(_cells(4), 10):
        x = {j: Trop.of(Fraction(rng.randint(-9, 9), rng.randint(1, 3)))
             for j in build_diagram(v, w).weight_ids()}
        t = trop_phi(v, w, x).canonicalize()
        ext = extremal_index_set(cell_support(v, w))
        r = trop_propagate_three_term({I: t.coord(I) for I in ext}, (v, w))
        assert r.coords == t.coords, (v, w)


def test_propagation_needs_all_extremal_values():
    with pytest.raises(ValueError):
        propagate_three_term({(1,): Fraction(1)}, (EX_V, EX_W))
