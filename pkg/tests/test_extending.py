"""Unit tests for extending structures: data, unified products, extraction,
morphism pairs, enumeration and classification."""

import itertools

import pytest

from altbialg import (BudgetExceeded, ExtendingDatum, KindMismatch,
                      MorphismPair, Tensor, check_extending_datum,
                      check_morphism_pair, classify_extensions,
                      enumerate_extensions, extract_datum, is_equivalence,
                      to_interaction, unified_product)
from altbialg import extending as X
from altbialg import products as P
import sample_data

ALG = sample_data.dim2_base_algebra()
BIALG = sample_data.dim2_base_bialgebra()
COALG = sample_data.dim3_bialgebra().coalgebra
V = sample_data.line_space()


def _base(kind):
    if kind in X.ALGEBRA_KINDS:
        return ALG
    if kind in X.COALGEBRA_KINDS:
        return COALG
    return BIALG


EXPECT_SIZES = {"A1": 12, "A2": 20, "C1": 20, "C2": 12,
                "TypeI": 12 + 20 + 24, "TypeII": 20 + 12 + 24,
                "SpecialG": 20 + 12 + 24}


def test_zero_datum_passes_every_kind_with_expected_condition_counts():
    for kind in X.KINDS:
        rep = check_extending_datum(ExtendingDatum(kind=kind, base=_base(kind),
                                                   complement=V))
        ids = [c.condition_id for c in rep.conditions]
        assert rep.passed, (kind, rep.failing_ids())
        assert len(ids) == EXPECT_SIZES[kind]
        assert len(set(ids)) == len(ids)


def test_out_of_kind_slot_rejected():
    rharp = Tensor.from_entries((V, ALG.space), (ALG.space,), {(0, 0, 1): 1})
    with pytest.raises(ValueError):
        ExtendingDatum(kind="A1", base=ALG, complement=V, rharp=rharp)


def test_roundtrip_zero_datum_every_kind():
    for kind in X.KINDS:
        d = ExtendingDatum(kind=kind, base=_base(kind), complement=V)
        d2 = extract_datum(unified_product(d), _base(kind), V, kind)
        assert all(getattr(d, n) == getattr(d2, n) for n in X.KIND_SLOTS[kind])


def test_roundtrip_nonzero_datum():
    theta = Tensor.from_entries((ALG.space, ALG.space), (V,), {(0, 0, 0): 1})
    mulV = Tensor.from_entries((V, V), (V,), {(0, 0, 0): 1})
    d = ExtendingDatum(kind="A1", base=ALG, complement=V, theta=theta, mulV=mulV)
    d2 = extract_datum(unified_product(d, require_prereq=False), ALG, V, "A1")
    assert all(getattr(d, n) == getattr(d2, n) for n in X.KIND_SLOTS["A1"])


def test_extraction_gates():
    theta = Tensor.from_entries((ALG.space, ALG.space), (V,), {(0, 0, 0): 1})
    e = unified_product(ExtendingDatum(kind="A1", base=ALG, complement=V,
                                       theta=theta), require_prereq=False)
    with pytest.raises(KindMismatch):
        extract_datum(e, ALG, V, "A2")  # theta block is nonzero
    rharp = Tensor.from_entries((V, ALG.space), (ALG.space,), {(0, 0, 1): 1})
    e2 = unified_product(ExtendingDatum(kind="A2", base=ALG, complement=V,
                                        rharp=rharp), require_prereq=False)
    with pytest.raises(KindMismatch):
        extract_datum(e2, ALG, V, "A1")  # harpoon block is nonzero
    with pytest.raises(KindMismatch):
        extract_datum(e2, ALG, V, "SpecialG")
    with pytest.raises(KindMismatch):
        extract_datum(e2, ALG, V, "C1")  # algebra data, coalgebra kind


def test_bialgebra_kinds_match_cocycle_bicrossproduct():
    for kind in X.BIALGEBRA_KINDS:
        d = ExtendingDatum(kind=kind, base=BIALG, complement=V)
        e = unified_product(d)
        e2 = P.cocycle_bicrossproduct(to_interaction(d), require_prereq=False)
        assert (e.mul.data == e2.mul.data).all()
        assert (e.comul.data == e2.comul.data).all()


def test_braided_complement_carrier():
    d = ExtendingDatum(kind="TypeI", base=BIALG, complement=V)
    assert X.braided_complement(d).carrier == V


def test_identity_morphism_pair_passes():
    for kind in X.KINDS:
        base = _base(kind)
        idm = MorphismPair(Tensor.zero((V,), (base.space,)), Tensor.identity(V))
        d = ExtendingDatum(kind=kind, base=base, complement=V)
        rep = check_morphism_pair(d, d, idm)
        assert rep.passed
        assert is_equivalence(d, d, idm)
        assert any("(r, s)" in note for note in rep.notes)


def test_morphism_verdict_agrees_with_direct_residual():
    theta = Tensor.from_entries((ALG.space, ALG.space), (V,), {(0, 0, 0): 1})
    theta2 = Tensor.from_entries((ALG.space, ALG.space), (V,),
                                 {(0, 0, 0): 1, (0, 1, 0): 1})
    dA = ExtendingDatum(kind="A1", base=ALG, complement=V, theta=theta)
    dB = ExtendingDatum(kind="A1", base=ALG, complement=V, theta=theta2)
    checked = 0
    for fv in itertools.product((-1, 0, 1), repeat=2):
        for gv in (-1, 1, 2):
            f = Tensor.from_entries((V,), (ALG.space,), {(0, i): fv[i] for i in range(2)})
            g = Tensor.from_entries((V,), (V,), {(0, 0): gv})
            m = MorphismPair(f, g)
            for (x, y) in ((dA, dB), (dA, dA), (dB, dB)):
                rep = check_morphism_pair(x, y, m)
                rm, rc = X.homomorphism_residuals(x, y, m)
                direct = (rm is None or rm.is_zero()) and (rc is None or rc.is_zero())
                assert rep.passed == direct
                checked += 1
    assert checked == 81


def test_enumerate_extensions_small_grid():
    found = enumerate_extensions(ALG, V, "A1", grid=(0, 1))
    assert all(check_extending_datum(d).passed for d in found)
    # the zero datum is always among the solutions
    zero = ExtendingDatum(kind="A1", base=ALG, complement=V)
    assert any(all(getattr(d, n) == getattr(zero, n) for n in X.KIND_SLOTS["A1"])
               for d in found)


def test_classification_buckets_are_disjoint_and_cover():
    classes = classify_extensions(ALG, V, "A1", grid=(0, 1))
    members = [m for c in classes for m in c.members]
    found = enumerate_extensions(ALG, V, "A1", grid=(0, 1))
    assert len(members) == len(found)
    for c in classes:
        assert c.representative in c.members


def test_budget_cap():
    with pytest.raises(BudgetExceeded):
        classify_extensions(BIALG, V, "TypeI", max_candidates=100)
