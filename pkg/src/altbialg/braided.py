"""Hopf bimodules, braided bialgebras, biproducts, and r-matrix machinery.

An alternative Hopf bimodule couples actions and coactions of an alternative
bialgebra H on a carrier V through the six compatibility conditions HM1-HM6.
A braided alternative bialgebra is an algebra-and-coalgebra object in that
setting, subject to BB1-BB2; its biproduct with H is an ordinary alternative
bialgebra on E = A (+) H.  Skew-symmetric solutions of the alternative
Yang-Baxter equation induce all of this structure canonically.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .conditions import Context, make_suite
from .directsum import block_sum, direct_sum_space, extract_block
from .errors import PrerequisiteFailed
from .report import CheckReport, merge_reports, residual_result
from .structures import (AlgebraData, BialgebraData, CoalgebraData, ModuleData,
                         _expect, check_alternative, check_bialgebra,
                         check_bicomodule, check_bimodule, check_coalternative,
                         check_comodule_coalgebra, check_module_algebra,
                         regular_bimodule)
from .tensorkit import Binding, Space, Tensor, tensor_product

# ---------------------------------------------------------------------------
# Data types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HopfBimoduleData:
    """Carrier V with actions and coactions of a bialgebra H."""

    host: BialgebraData
    carrier: Space
    lact: Tensor   # H(x)V -> V
    ract: Tensor   # V(x)H -> V
    phi: Tensor    # V -> H(x)V
    psi: Tensor    # V -> V(x)H

    def __post_init__(self):
        h, v = self.host.space, self.carrier
        _expect(self.lact, (h, v), (v,), "lact")
        _expect(self.ract, (v, h), (v,), "ract")
        _expect(self.phi, (v,), (h, v), "phi")
        _expect(self.psi, (v,), (v, h), "psi")

    @staticmethod
    def zero(host: BialgebraData, carrier: Space) -> "HopfBimoduleData":
        h, v = host.space, carrier
        return HopfBimoduleData(host, carrier,
                                Tensor.zero((h, v), (v,)), Tensor.zero((v, h), (v,)),
                                Tensor.zero((v,), (h, v)), Tensor.zero((v,), (v, h)))


@dataclass(frozen=True)
class BraidedBialgebraData:
    """An algebra-and-coalgebra structure on the carrier of a Hopf bimodule."""

    hopf: HopfBimoduleData
    braided_mul: Tensor    # V(x)V -> V
    braided_comul: Tensor  # V -> V(x)V

    def __post_init__(self):
        v = self.hopf.carrier
        _expect(self.braided_mul, (v, v), (v,), "braided_mul")
        _expect(self.braided_comul, (v,), (v, v), "braided_comul")

    @property
    def carrier(self) -> Space:
        return self.hopf.carrier

    @property
    def host(self) -> BialgebraData:
        return self.hopf.host


@dataclass(frozen=True)
class RMatrix:
    """An element r of A(x)A over an algebra, a candidate AYBE solution."""

    algebra: AlgebraData
    r: Tensor  # empty domain, codomain (A, A)

    def __post_init__(self):
        a = self.algebra.space
        _expect(self.r, (), (a, a), "r")


# ---------------------------------------------------------------------------
# Condition suites
# ---------------------------------------------------------------------------

_HM_CTX = Context(
    variables={"x": "H", "y": "H", "v": "V"},
    expansions={("H", "plain", (1, 2)): ("DeltaH", ("H", "H")),
                ("V", "paren", (-1, 0)): ("phi", ("H", "V")),
                ("V", "paren", (0, 1)): ("psi", ("V", "H"))},
    ops={("*", "H", "H"): ("mulH", "H"),
         ("▷", "H", "V"): ("lact", "V"),
         ("◁", "V", "H"): ("ract", "V")},
    funcs={"phi": (("V",), ("H", "V")),
           "psi": (("V",), ("V", "H")),
           "DeltaH": (("H",), ("H", "H"))},
)

HOPF_BIMODULE_SUITE = make_suite("hopf-bimodule", _HM_CTX, [
    ("HM1", "phi(x▷v) = v_(-1) ⊗ (x▷v_(0)) + v_(-1) ⊗ (v_(0)◁x)"
            " - x_2 ⊗ (v◁x_1) - x*v_(-1) ⊗ v_(0)"),
    ("HM2", "psi(v◁x) = (v_(0)◁x) ⊗ v_(1) + (v_(0)◁x) ⊗ v_(-1)"
            " - v_(0) ⊗ x*v_(-1) - (v◁x_1) ⊗ x_2"),
    ("HM3", "psi(x▷v) = (x_1▷v) ⊗ x_2 + (x_2▷v) ⊗ x_1 + v_(0) ⊗ x*v_(1)"
            " + v_(0) ⊗ v_(1)*x - (x▷v_(0)) ⊗ v_(1)"),
    ("HM4", "phi(v◁x) = v_(-1)*x ⊗ v_(0) + v_(1)*x ⊗ v_(0) - v_(1) ⊗ (x▷v_(0))"
            " + x_1 ⊗ (v◁x_2) + x_1 ⊗ (x_2▷v)"),
    ("HM5", "phi(x▷v) + tau(psi(x▷v)) = v_(-1) ⊗ (x▷v_(0))"
            " + x*v_(1) ⊗ v_(0) + x_2 ⊗ (x_1▷v)"),
    ("HM6", "phi(v◁x) + tau(psi(v◁x)) = x_1 ⊗ (v◁x_2)"
            " + v_(-1)*x ⊗ v_(0) + v_(1) ⊗ (v_(0)◁x)"),
])

_BB_CTX = Context(
    variables={"a": "A", "b": "A"},
    expansions={("A", "plain", (1, 2)): ("DeltaA", ("A", "A")),
                ("A", "paren", (-1, 0)): ("phi", ("H", "A")),
                ("A", "paren", (0, 1)): ("psi", ("A", "H"))},
    ops={("*", "A", "A"): ("mulA", "A"),
         ("▷", "H", "A"): ("lact", "A"),
         ("◁", "A", "H"): ("ract", "A")},
    funcs={"DeltaA": (("A",), ("A", "A"))},
)

BRAIDED_BIALGEBRA_SUITE = make_suite("braided-bialgebra", _BB_CTX, [
    ("BB1", "DeltaA(a*b) = a_1*b ⊗ a_2 + a_2*b ⊗ a_1 - a_2 ⊗ b*a_1"
            " + b_1 ⊗ a*b_2 + b_1 ⊗ b_2*a - a*b_1 ⊗ b_2"
            " + (a_(-1)▷b) ⊗ a_(0) + (a_(1)▷b) ⊗ a_(0) - a_(0) ⊗ (b◁a_(-1))"
            " + b_(0) ⊗ (a◁b_(1)) + b_(0) ⊗ (b_(1)▷a) - (a◁b_(-1)) ⊗ b_(0)"),
    ("BB2", "DeltaA(b*a) + tau(DeltaA(b*a)) = a_1 ⊗ b*a_2 + b*a_2 ⊗ a_1"
            " + b_1*a ⊗ b_2 + b_2 ⊗ b_1*a"
            " + a_(0) ⊗ (b◁a_(1)) + (b◁a_(1)) ⊗ a_(0)"
            " + b_(0) ⊗ (b_(-1)▷a) + (b_(-1)▷a) ⊗ b_(0)"),
])

# The action/coaction correction terms of BB1/BB2 in isolation.  For the
# self-braiding induced by a skew AYBE solution these blocks vanish
# identically, so BB1/BB2 collapse to the plain compatibility conditions.
BRAIDED_TERMS_SUITE = make_suite("braided-terms", _BB_CTX, [
    ("BB1b", "(a_(-1)▷b) ⊗ a_(0) + (a_(1)▷b) ⊗ a_(0) - a_(0) ⊗ (b◁a_(-1))"
             " + b_(0) ⊗ (a◁b_(1)) + b_(0) ⊗ (b_(1)▷a) - (a◁b_(-1)) ⊗ b_(0) = 0"),
    ("BB2b", "a_(0) ⊗ (b◁a_(1)) + (b◁a_(1)) ⊗ a_(0)"
             " + b_(0) ⊗ (b_(-1)▷a) + (b_(-1)▷a) ⊗ b_(0) = 0"),
])


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def hopf_bimodule_binding(d: HopfBimoduleData) -> Binding:
    return Binding(
        spaces={"H": d.host.space, "V": d.carrier},
        tensors={"mulH": d.host.mul, "DeltaH": d.host.comul,
                 "lact": d.lact, "ract": d.ract, "phi": d.phi, "psi": d.psi})


def braided_binding(d: BraidedBialgebraData) -> Binding:
    return Binding(
        spaces={"A": d.carrier, "H": d.host.space},
        tensors={"mulA": d.braided_mul, "DeltaA": d.braided_comul,
                 "lact": d.hopf.lact, "ract": d.hopf.ract,
                 "phi": d.hopf.phi, "psi": d.hopf.psi})


def check_hopf_bimodule(d: HopfBimoduleData, witness_limit: int = 10,
                        require_prereq: bool = True) -> CheckReport:
    """Bimodule + bicomodule axioms plus HM1-HM6."""
    host_report = check_bialgebra(d.host, witness_limit)
    if require_prereq and not host_report.passed:
        raise PrerequisiteFailed("host is not an alternative bialgebra", report=host_report)
    bim = ModuleData(d.host.algebra, d.carrier, d.lact, d.ract)
    bicom = ModuleData(d.host.coalgebra, d.carrier, d.phi, d.psi)
    return merge_reports(
        "hopf-bimodule",
        check_bimodule(bim, witness_limit),
        check_bicomodule(bicom, witness_limit),
        HOPF_BIMODULE_SUITE.run(hopf_bimodule_binding(d), witness_limit),
    )


def check_braided_bialgebra(d: BraidedBialgebraData, witness_limit: int = 10,
                            require_prereq: bool = True) -> CheckReport:
    """Full verdict: Hopf-bimodule axioms, the carrier being an alternative
    (co)algebra compatible with the H-(co)actions, and BB1-BB2."""
    hopf_report = check_hopf_bimodule(d.hopf, witness_limit, require_prereq)
    alg = AlgebraData(d.carrier, d.braided_mul)
    co = CoalgebraData(d.carrier, d.braided_comul)
    return merge_reports(
        "braided-bialgebra",
        hopf_report,
        check_alternative(alg, witness_limit),
        check_coalternative(co, witness_limit),
        check_module_algebra(d.host.algebra, alg, d.hopf.lact, d.hopf.ract, witness_limit),
        check_comodule_coalgebra(d.host.coalgebra, co, d.hopf.phi, d.hopf.psi, witness_limit),
        BRAIDED_BIALGEBRA_SUITE.run(braided_binding(d), witness_limit),
    )


def check_braided_terms(d: BraidedBialgebraData, witness_limit: int = 10) -> CheckReport:
    """Do the action/coaction correction blocks of BB1/BB2 vanish on their own?"""
    return BRAIDED_TERMS_SUITE.run(braided_binding(d), witness_limit)


# ---------------------------------------------------------------------------
# Biproduct E = A (+) H
# ---------------------------------------------------------------------------


def biproduct(d: BraidedBialgebraData, name: str = "E") -> BialgebraData:
    """Bialgebra on E = A (+) H with (a+x)(b+y) = ab + x|>b + a<|y + xy and
    Delta_E = Delta_A + phi + psi + Delta_H (construction is total; validity of
    the result is a separate check)."""
    total, blocks = direct_sum_space(name, [("A", d.carrier), ("H", d.host.space)])
    mul = block_sum(total, 2, 1, [
        (("A", "A"), ("A",), d.braided_mul),
        (("H", "A"), ("A",), d.hopf.lact),
        (("A", "H"), ("A",), d.hopf.ract),
        (("H", "H"), ("H",), d.host.mul),
    ], blocks)
    comul = block_sum(total, 1, 2, [
        (("A",), ("A", "A"), d.braided_comul),
        (("A",), ("H", "A"), d.hopf.phi),
        (("A",), ("A", "H"), d.hopf.psi),
        (("H",), ("H", "H"), d.host.comul),
    ], blocks)
    return BialgebraData(AlgebraData(total, mul), CoalgebraData(total, comul))


def biproduct_blocks(d: BraidedBialgebraData, name: str = "E"):
    """The biproduct together with its block coordinate map {tag: (offset, dim)}."""
    e = biproduct(d, name)
    _, blocks = direct_sum_space(name, [("A", d.carrier), ("H", d.host.space)])
    return e, blocks


def split_biproduct(e: BialgebraData, d: BraidedBialgebraData) -> BraidedBialgebraData:
    """Project a biproduct back onto its A- and H-blocks (round-trip helper)."""
    a, h = d.carrier, d.host.space
    _, blocks = direct_sum_space(e.space.name, [("A", a), ("H", h)])
    hopf = HopfBimoduleData(
        host=BialgebraData(
            AlgebraData(h, extract_block(e.mul, ("H", "H"), ("H",), (h, h), (h,), blocks)),
            CoalgebraData(h, extract_block(e.comul, ("H",), ("H", "H"), (h,), (h, h), blocks))),
        carrier=a,
        lact=extract_block(e.mul, ("H", "A"), ("A",), (h, a), (a,), blocks),
        ract=extract_block(e.mul, ("A", "H"), ("A",), (a, h), (a,), blocks),
        phi=extract_block(e.comul, ("A",), ("H", "A"), (a,), (h, a), blocks),
        psi=extract_block(e.comul, ("A",), ("A", "H"), (a,), (a, h), blocks))
    return BraidedBialgebraData(
        hopf,
        braided_mul=extract_block(e.mul, ("A", "A"), ("A",), (a, a), (a,), blocks),
        braided_comul=extract_block(e.comul, ("A",), ("A", "A"), (a,), (a, a), blocks))


# ---------------------------------------------------------------------------
# Quasitriangular machinery
# ---------------------------------------------------------------------------


def delta_r(rm: RMatrix) -> CoalgebraData:
    """Delta_r(a) = sum_i (u_i a (x) v_i - u_i (x) a v_i)."""
    a = rm.algebra.space
    mul, r = rm.algebra.mul.data, rm.r.data
    # term1[i, p, k] = sum_j r[j, k] mul[j, i, p]
    term1 = np.transpose(np.tensordot(r, mul, axes=([0], [0])), (1, 2, 0))
    # term2[i, j, q] = sum_k r[j, k] mul[i, k, q]
    term2 = np.transpose(np.tensordot(r, mul, axes=([1], [1])), (1, 0, 2))
    return CoalgebraData(a, Tensor((a,), (a, a), np.ascontiguousarray(term1 - term2)))


def _r_products(rm: RMatrix):
    """The three pairwise products of r with itself inside A(x)A(x)A."""
    mul, r = rm.algebra.mul.data, rm.r.data
    # r = sum_{a,b} r[a,b] e_a (x) e_b
    # r12 r13 = sum (e_a e_c) (x) e_b (x) e_d
    r12r13 = np.transpose(
        np.tensordot(np.tensordot(r, mul, axes=([0], [0])), r, axes=([1], [0])),
        (1, 0, 2))
    # r23 r12 = sum e_c (x) (e_a e_d) (x) e_b
    r23r12 = np.transpose(
        np.tensordot(r, np.tensordot(r, mul, axes=([1], [1])), axes=([0], [1])),
        (1, 2, 0))
    # r13 r23 = sum e_a (x) e_c (x) (e_b e_d)
    r13r23 = np.tensordot(r, np.tensordot(r, mul, axes=([1], [1])), axes=([1], [1]))
    return r12r13, r23r12, r13r23


def check_aybe(rm: RMatrix, witness_limit: int = 10) -> CheckReport:
    """Skew-symmetry r + tau(r) = 0 and the alternative Yang-Baxter residual
    r23 r12 - r12 r13 - r13 r23 = 0."""
    a = rm.algebra.space
    skew = rm.r + Tensor((), (a, a), np.ascontiguousarray(rm.r.data.T))
    r12r13, r23r12, r13r23 = _r_products(rm)
    aybe = Tensor((), (a, a, a), np.ascontiguousarray(r23r12 - r12r13 - r13r23))
    return CheckReport("aybe", (
        residual_result("skew", skew, witness_limit),
        residual_result("aybe", aybe, witness_limit),
    ))


def check_r_identities(rm: RMatrix, witness_limit: int = 10,
                       require_prereq: bool = True) -> CheckReport:
    """(Delta_r (x) id)(r) = -r13 r23 and (id (x) Delta_r)(r) = r12 r13."""
    aybe = check_aybe(rm, witness_limit)
    if require_prereq and not aybe.passed:
        raise PrerequisiteFailed("r is not a skew AYBE solution", report=aybe)
    a = rm.algebra.space
    r, delta = rm.r.data, delta_r(rm).comul.data
    r12r13, _, r13r23 = _r_products(rm)
    # (Delta (x) id)(r)[p,q,b] = sum_a r[a,b] delta[a,p,q]
    left1 = np.transpose(np.tensordot(r, delta, axes=([0], [0])), (1, 2, 0))
    # (id (x) Delta)(r)[a,p,q] = sum_b r[a,b] delta[b,p,q]
    left2 = np.tensordot(r, delta, axes=([1], [0]))
    return CheckReport("r-identities", (
        residual_result("r11", Tensor((), (a, a, a), np.ascontiguousarray(left1 + r13r23)),
                        witness_limit),
        residual_result("r12", Tensor((), (a, a, a), np.ascontiguousarray(left2 - r12r13)),
                        witness_limit),
    ))


def quasitriangular_bialgebra(rm: RMatrix) -> BialgebraData:
    """The bialgebra (A, mul, Delta_r) induced by a skew AYBE solution."""
    return BialgebraData(rm.algebra, delta_r(rm))


def hopf_bimodule_from_r(rm: RMatrix, m: ModuleData,
                         witness_limit: int = 10) -> HopfBimoduleData:
    """Coactions induced on an A-bimodule M by a skew AYBE solution:
    phi(m) = -sum_i u_i (x) (m <| v_i), psi(m) = sum_i (u_i |> m) (x) v_i."""
    aybe = check_aybe(rm, witness_limit)
    if not aybe.passed:
        raise PrerequisiteFailed("r is not a skew AYBE solution", report=aybe)
    bim = check_bimodule(m, witness_limit)
    if not bim.passed:
        raise PrerequisiteFailed("M is not an A-bimodule", report=bim)
    a, v = rm.algebra.space, m.carrier
    r, lact, ract = rm.r.data, m.left.data, m.right.data
    # phi[m, a, n] = -sum_b r[a, b] ract[m, b, n]
    phi = -np.transpose(np.tensordot(r, ract, axes=([1], [1])), (1, 0, 2))
    # psi[m, n, b] = sum_a r[a, b] lact[a, m, n]
    psi = np.transpose(np.tensordot(r, lact, axes=([0], [0])), (1, 2, 0))
    return HopfBimoduleData(
        quasitriangular_bialgebra(rm), v, m.left, m.right,
        Tensor((v,), (a, v), np.ascontiguousarray(phi)),
        Tensor((v,), (v, a), np.ascontiguousarray(psi)))


def braided_self_from_r(rm: RMatrix, witness_limit: int = 10) -> BraidedBialgebraData:
    """A as a braided bialgebra over itself: M = A with the regular actions,
    the induced coactions, and (mul, Delta_r) as the braided structure."""
    hopf = hopf_bimodule_from_r(rm, regular_bimodule(rm.algebra), witness_limit)
    return BraidedBialgebraData(hopf, rm.algebra.mul, delta_r(rm).comul)
