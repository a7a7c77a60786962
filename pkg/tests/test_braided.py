"""Unit tests for AYBE solutions, Hopf bimodules and braided bialgebras."""

from fractions import Fraction

import pytest

from altbialg import (AlgebraData, PrerequisiteFailed, RMatrix, Space, Tensor,
                      biproduct, braided_self_from_r, check_aybe,
                      check_bialgebra, check_braided_bialgebra,
                      check_hopf_bimodule, check_r_identities, delta_r,
                      hopf_bimodule_from_r, nonzero_entries,
                      quasitriangular_bialgebra, regular_bimodule,
                      split_biproduct)
from altbialg.braided import check_braided_terms
import oracles
import sample_data


def _entry_dict(t):
    return dict(nonzero_entries(t))


def test_skew_aybe_solution_passes():
    rep = check_aybe(sample_data.dim3_rmatrix())
    assert rep.passed
    assert [c.condition_id for c in rep.conditions] == ["skew", "aybe"]


def test_aybe_residual_matches_oracle():
    rm = sample_data.dim3_rmatrix()
    mul = _entry_dict(rm.algebra.mul)
    r = _entry_dict(rm.r)
    assert oracles.aybe_residual_entries(mul, r, 3) == {}
    # a non-solution has a matching nonzero residual in both paths
    a = rm.algebra.space
    bad = RMatrix(rm.algebra, Tensor.from_entries((), (a, a), {(1, 2): 1, (2, 1): -1}))
    rep = check_aybe(bad)
    oracle = oracles.aybe_residual_entries(mul, _entry_dict(bad.r), 3)
    assert rep.passed == (not oracle)


def test_non_skew_r_fails_skew_condition():
    rm = sample_data.dim3_rmatrix()
    a = rm.algebra.space
    bad = RMatrix(rm.algebra, Tensor.from_entries((), (a, a), {(0, 2): 1}))
    rep = check_aybe(bad)
    assert not rep.passed and "skew" in rep.failing_ids()


def test_delta_r_matches_oracle():
    rm = sample_data.dim3_rmatrix()
    co = delta_r(rm)
    oracle = oracles.delta_r_entries(_entry_dict(rm.algebra.mul), _entry_dict(rm.r), 3)
    assert _entry_dict(co.comul) == oracle
    assert oracle == {(1, 2, 2): Fraction(1)}  # Delta_r(e2) = e3 (x) e3


def test_quasitriangular_bialgebra_passes():
    assert check_bialgebra(quasitriangular_bialgebra(sample_data.dim3_rmatrix())).passed


def test_r_identities_hold_exactly():
    rep = check_r_identities(sample_data.dim3_rmatrix())
    assert rep.passed
    assert [c.condition_id for c in rep.conditions] == ["r11", "r12"]


def test_hopf_bimodule_from_r_regular():
    rm = sample_data.dim3_rmatrix()
    d = hopf_bimodule_from_r(rm, regular_bimodule(rm.algebra))
    rep = check_hopf_bimodule(d)
    assert rep.passed
    ids = {c.condition_id for c in rep.conditions}
    assert {"HM1", "HM2", "HM3", "HM4", "HM5", "HM6"} <= ids


def test_hopf_bimodule_from_r_rejects_non_solution():
    rm = sample_data.dim3_rmatrix()
    a = rm.algebra.space
    bad = RMatrix(rm.algebra, Tensor.from_entries((), (a, a), {(0, 2): 1}))
    with pytest.raises(PrerequisiteFailed):
        hopf_bimodule_from_r(bad, regular_bimodule(rm.algebra))


def test_braided_self_from_r_passes_with_zero_correction_blocks():
    bd = braided_self_from_r(sample_data.dim3_rmatrix())
    assert check_braided_bialgebra(bd).passed
    terms = check_braided_terms(bd)
    assert terms.passed
    assert [c.condition_id for c in terms.conditions] == ["BB1b", "BB2b"]


def test_biproduct_roundtrip():
    bd = braided_self_from_r(sample_data.dim3_rmatrix())
    e = biproduct(bd)
    assert e.space.dim == 6
    assert check_bialgebra(e).passed
    back = split_biproduct(e, bd)
    assert back.braided_mul == bd.braided_mul
    assert back.braided_comul == bd.braided_comul
    assert back.hopf.lact == bd.hopf.lact and back.hopf.ract == bd.hopf.ract
    assert back.hopf.phi == bd.hopf.phi and back.hopf.psi == bd.hopf.psi


def test_zero_r_gives_trivial_braiding():
    alg = sample_data.dim3_algebra()
    a = alg.space
    rm = RMatrix(alg, Tensor.zero((), (a, a)))
    bd = braided_self_from_r(rm)
    assert bd.braided_comul.is_zero()
    assert check_braided_bialgebra(bd).passed
