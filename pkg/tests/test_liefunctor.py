"""Unit tests for the commutator Lie functor."""

from fractions import Fraction

import pytest

from altbialg import (LieBialgebraData, Space, Tensor, braided_commutator_lie,
                      braided_self_from_r, check_lie_bialgebra,
                      check_yetter_drinfeld, commutator_bracket,
                      commutator_cobracket, commutator_lie, compose,
                      nonzero_entries, yetter_drinfeld_from_hopf)
import sample_data


def test_commutator_bracket_entries():
    b = sample_data.dim3_bialgebra()
    br = commutator_bracket(b.mul)
    assert dict(nonzero_entries(br)) == {
        (0, 1, 2): Fraction(1), (1, 0, 2): Fraction(-1)}


def test_commutator_cobracket_entries():
    b = sample_data.dim3_bialgebra()
    # Delta(e2) = e3 (x) e3 is symmetric, so the cobracket vanishes
    assert commutator_cobracket(b.comul).is_zero()


def test_commutator_lie_passes():
    b = sample_data.dim3_bialgebra()
    lie, rep = commutator_lie(b)
    assert rep.passed
    s = lie.space
    tau = Tensor.permutation((s, s), (1, 0))
    assert (lie.bracket + compose(lie.bracket, tau)).is_zero()
    assert (lie.cobracket + compose(tau, lie.cobracket)).is_zero()


def test_antisymmetry_enforced_at_construction():
    s = Space("L", 2, ("x", "y"))
    sym = Tensor.from_entries((s, s), (s,), {(0, 1, 0): 1, (1, 0, 0): 1})
    with pytest.raises(ValueError):
        LieBialgebraData(s, sym, Tensor.zero((s,), (s, s)))


def test_yetter_drinfeld_from_hopf():
    bd = braided_self_from_r(sample_data.dim3_rmatrix())
    yd = yetter_drinfeld_from_hopf(bd.hopf)
    rep = check_yetter_drinfeld(yd)
    assert rep.passed
    assert any("identity" in note for note in rep.notes)


def test_braided_commutator_lie_dual_paths_agree():
    bd = braided_self_from_r(sample_data.dim3_rmatrix())
    rep = braided_commutator_lie(bd)
    assert rep.condition("equivalence").passed
    assert "44" in {c.condition_id for c in rep.conditions}
    assert "BLB" in {c.condition_id for c in rep.conditions}
