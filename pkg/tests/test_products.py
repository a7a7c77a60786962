"""Unit tests for the two-object product constructions."""

from altbialg import (BialgebraData, CoalgebraData, Tensor, biproduct,
                      bicrossed_coproduct, bicrossed_product, braided_self_from_r,
                      check_bialgebra, cocycle_bicrossproduct,
                      cocycle_cross_product, cycle_cross_coproduct,
                      double_cross_biproduct, from_braided, nonzero_entries)
from altbialg import products as P
import sample_data


def _zero_interaction():
    return P.InteractionData(A=sample_data.dim3_bialgebra(), H=sample_data.dim3_host())


def test_zero_interaction_passes_every_suite():
    d0 = _zero_interaction()
    for check in (P.check_matched_pair_algebras, P.check_matched_pair_coalgebras,
                  P.check_hopf_bimodule_over_A, P.check_braided_over_A,
                  P.check_braided_over_H, P.check_double_matched_pair,
                  P.check_cocycles, P.check_cocycle_structures,
                  P.check_cocycle_cross_system, P.check_cycle_cross_system,
                  P.check_cocycle_double_matched_pair, P.check_cocycle_braided):
        rep = check(d0)
        assert rep.passed, (check.__name__, rep.failing_ids())


def test_zero_interaction_is_direct_sum():
    d0 = _zero_interaction()
    e = double_cross_biproduct(d0)
    assert check_bialgebra(e).passed
    # block-diagonal structure: every nonzero entry stays within one block
    adim = d0.A.space.dim
    for idx, _ in nonzero_entries(e.mul):
        blocks = {i < adim for i in idx}
        assert len(blocks) == 1
    for idx, _ in nonzero_entries(e.comul):
        blocks = {i < adim for i in idx}
        assert len(blocks) == 1


def test_direct_sum_verdict_tracks_components():
    d0 = _zero_interaction()
    assert check_bialgebra(double_cross_biproduct(d0)).passed
    # break the H component: an incompatible comultiplication
    bh = sample_data.dim3_host()
    h = bh.space
    bad_h = BialgebraData(bh.algebra, CoalgebraData(h, Tensor.from_entries(
        (h,), (h, h), {(2, 0, 0): 1})))
    assert not check_bialgebra(bad_h).passed
    d_bad = P.InteractionData(A=sample_data.dim3_bialgebra(), H=bad_h)
    assert not check_bialgebra(double_cross_biproduct(d_bad, require_prereq=False)).passed


def test_degenerate_cocycle_bicrossproduct_equals_double_cross():
    d0 = _zero_interaction()
    e1 = cocycle_bicrossproduct(d0)
    e2 = double_cross_biproduct(d0)
    assert e1.mul == e2.mul and e1.comul == e2.comul


def test_degenerate_cross_products_reduce():
    bd = braided_self_from_r(sample_data.dim3_rmatrix())
    d = from_braided(bd)
    assert cocycle_cross_product(d, require_prereq=False).mul == \
        bicrossed_product(d, require_prereq=False).mul
    assert cycle_cross_coproduct(d, require_prereq=False).comul == \
        bicrossed_coproduct(d, require_prereq=False).comul


def test_from_braided_reproduces_biproduct():
    bd = braided_self_from_r(sample_data.dim3_rmatrix())
    e1 = double_cross_biproduct(from_braided(bd), require_prereq=False)
    e2 = biproduct(bd)
    assert e1.mul == e2.mul and e1.comul == e2.comul


def test_braided_instance_passes_product_suites():
    d = from_braided(braided_self_from_r(sample_data.dim3_rmatrix()))
    assert P.check_matched_pair_algebras(d).passed
    assert P.check_matched_pair_coalgebras(d).passed
    assert P.check_braided_over_H(d).passed
    assert P.check_double_matched_pair(d).passed
    rep = P.check_cocycle_double_matched_pair(d)
    assert rep.passed
    assert any("P(a,b)" in note for note in rep.notes)
