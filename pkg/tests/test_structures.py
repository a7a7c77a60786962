"""Unit tests for algebra/coalgebra/bialgebra data and their checks."""

from fractions import Fraction

from altbialg import (AlgebraData, BialgebraData, CoalgebraData, Space,
                      Tensor, associator, check_alternative, check_bialgebra,
                      check_bicomodule, check_bimodule, check_coalternative,
                      nonzero_entries, regular_bicomodule, regular_bimodule)
import oracles
import sample_data


def test_octonions_are_alternative_but_not_associative():
    oct = oracles.octonion_algebra()
    assert check_alternative(oct).passed
    assoc = associator(oct)
    assert not assoc.is_zero()
    # the engine associator agrees entry-for-entry with the loop oracle
    assert dict(nonzero_entries(assoc)) == oracles.associator_entries(oct)


def test_quaternions_are_associative():
    mul, _ = oracles.cayley_dickson_table(2)
    q = Space("Q", 4, tuple(f"e{i}" for i in range(4)))
    alg = AlgebraData(q, Tensor.from_entries((q, q), (q,), mul))
    assert check_alternative(alg).passed
    assert associator(alg).is_zero()


def test_alternative_check_fails_with_witness():
    a = Space("A", 2, ("e1", "e2"))
    # e1*e1 = e1 + e2, e2*e1 = e1: (e1 e1) e1 != e1 (e1 e1)
    alg = AlgebraData(a, Tensor.from_entries(
        (a, a), (a,), {(0, 0, 0): 1, (0, 0, 1): 1, (1, 0, 0): 1}))
    rep = check_alternative(alg)
    assert not rep.passed
    failing = [c for c in rep.conditions if not c.passed]
    assert failing and all(c.witnesses for c in failing)


def test_dim3_bialgebra_passes():
    b = sample_data.dim3_bialgebra()
    rep = check_bialgebra(b)
    assert rep.passed
    assert [c.condition_id for c in rep.conditions] == ["2", "3", "4", "5", "6", "7"]


def test_coalternative_dual_of_alternative():
    b = sample_data.dim3_bialgebra()
    assert check_coalternative(b.coalgebra).passed
    # Delta(e2) = e3 (x) e3 is the only entry
    assert dict(nonzero_entries(b.comul)) == {(1, 2, 2): Fraction(1)}


def test_incompatible_pair_fails_bialgebra():
    alg = sample_data.dim2_base_algebra()
    a = alg.space
    bad = BialgebraData(alg, CoalgebraData(a, Tensor.from_entries(
        (a,), (a, a), {(1, 0, 0): 1})))
    assert not check_bialgebra(bad).passed


def test_regular_bimodule_and_bicomodule():
    b = sample_data.dim3_bialgebra()
    assert check_bimodule(regular_bimodule(b.algebra)).passed
    assert check_bicomodule(regular_bicomodule(b.coalgebra)).passed
