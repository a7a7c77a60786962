"""The commutator functor: Lie (bi)algebras from alternative (bi)algebras.

An alternative bialgebra (A, mul, Delta) yields a candidate Lie bialgebra via
[a,b] = ab - ba and delta = (id - tau) Delta; the pair is an actual Lie
bialgebra exactly when a single quadratic residual vanishes.  The braided
version lives over a Lie Yetter-Drinfeld structure derived from a Hopf
bimodule by |>_L = |> - <| and phi_L = phi - tau psi, and is again governed by
one residual (the two verdicts are checked against each other).
"""

from __future__ import annotations

from dataclasses import dataclass

from .braided import (BraidedBialgebraData, HopfBimoduleData, _BB_CTX,
                      braided_binding, check_braided_bialgebra)
from .conditions import Context, make_suite
from .errors import PrerequisiteFailed
from .report import CheckReport, ConditionResult, merge_reports
from .structures import BialgebraData, _expect, check_bialgebra
from .tensorkit import Binding, Space, Tensor, compose

# ---------------------------------------------------------------------------
# Data types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LieBialgebraData:
    """A bracket/cobracket pair; antisymmetry is enforced at construction,
    Jacobi and compatibility are checkable properties."""

    space: Space
    bracket: Tensor    # L(x)L -> L
    cobracket: Tensor  # L -> L(x)L

    def __post_init__(self):
        s = self.space
        _expect(self.bracket, (s, s), (s,), "bracket")
        _expect(self.cobracket, (s,), (s, s), "cobracket")
        tau = Tensor.permutation((s, s), (1, 0))
        if not (self.bracket + compose(self.bracket, tau)).is_zero():
            raise ValueError("bracket is not antisymmetric")
        if not (self.cobracket + compose(tau, self.cobracket)).is_zero():
            raise ValueError("cobracket is not co-antisymmetric")


@dataclass(frozen=True)
class YetterDrinfeldData:
    """A carrier with a Lie action and Lie coaction of a Lie (co)algebra."""

    host: LieBialgebraData
    carrier: Space
    lact: Tensor  # H(x)V -> V
    phi: Tensor   # V -> H(x)V

    def __post_init__(self):
        h, v = self.host.space, self.carrier
        _expect(self.lact, (h, v), (v,), "lact")
        _expect(self.phi, (v,), (h, v), "phi")


# ---------------------------------------------------------------------------
# Condition suites
# ---------------------------------------------------------------------------

_LIE_CTX = Context(
    variables={"a": "L", "b": "L", "c": "L"},
    expansions={("L", "bracket", (1, 2)): ("cobr", ("L", "L"))},
    ops={("*", "L", "L"): ("br", "L")},
    funcs={"cobr": (("L",), ("L", "L"))},
)

LIE_BIALGEBRA_SUITE = make_suite("lie-bialgebra", _LIE_CTX, [
    ("jacobi", "(a*b)*c + (b*c)*a + (c*a)*b = 0"),
    ("cojacobi", "cobr(a_[1]) ⊗ a_[2] + tau12(tau23(cobr(a_[1]), a_[2]))"
                 " + tau23(tau12(cobr(a_[1]), a_[2])) = 0"),
    ("cocycle", "cobr(a*b) = a*b_[1] ⊗ b_[2] + b_[1] ⊗ a*b_[2]"
                " + a_[1]*b ⊗ a_[2] + a_[1] ⊗ a_[2]*b"),
])

# The necessary-and-sufficient residual making (mul - tau mul, (id - tau) Delta)
# a Lie bialgebra, stated directly on the bialgebra structure tensors.
_NS_CTX = Context(
    variables={"a": "A", "b": "A"},
    expansions={("A", "plain", (1, 2)): ("DeltaA", ("A", "A"))},
    ops={("*", "A", "A"): ("mulA", "A")},
    funcs={},
)

COMMUTATOR_NS_SUITE = make_suite("commutator-ns", _NS_CTX, [
    ("ns", "- a_2*b ⊗ a_1 + a_2 ⊗ b*a_1 = b_1 ⊗ b_2*a - a*b_1 ⊗ b_2"),
])

_YD_CTX = Context(
    variables={"x": "H", "y": "H", "v": "V"},
    expansions={("H", "plain", (1, 2)): ("cobrH", ("H", "H")),
                ("V", "paren", (-1, 0)): ("phi", ("H", "V"))},
    ops={("*", "H", "H"): ("brH", "H"),
         ("▷", "H", "V"): ("lact", "V")},
    funcs={"cobrH": (("H",), ("H", "H")),
           "phi": (("V",), ("H", "V"))},
)

YETTER_DRINFELD_SUITE = make_suite("yetter-drinfeld", _YD_CTX, [
    # Lie module and Lie comodule axioms (standard; the compatibility below
    # presupposes them).
    ("LM", "(x*y)▷v = x▷(y▷v) - y▷(x▷v)"),
    ("LC", "cobrH(v_(-1)) ⊗ v_(0) = v_(-1) ⊗ phi(v_(0)) - tau12(v_(-1), phi(v_(0)))"),
    # The Yetter-Drinfeld compatibility, with the undefined structure map on H
    # taken to be the identity.
    ("YD", "phi(x▷v) = x*v_(-1) ⊗ v_(0) + v_(-1) ⊗ (x▷v_(0)) + x_1 ⊗ (x_2▷v)"),
])

_BRAIDED_LIE_CTX = Context(
    variables={"a": "A", "b": "A"},
    expansions={("A", "bracket", (1, 2)): ("cobr", ("A", "A")),
                ("A", "bracket", (-1, 0)): ("phiL", ("H", "A"))},
    ops={("*", "A", "A"): ("br", "A"),
         ("▷", "H", "A"): ("lactL", "A")},
    funcs={"cobr": (("A",), ("A", "A"))},
)

BRAIDED_LIE_SUITE = make_suite("braided-lie", _BRAIDED_LIE_CTX, [
    ("BLB", "cobr(a*b) = a*b_[1] ⊗ b_[2] + b_[1] ⊗ a*b_[2]"
            " + a_[1]*b ⊗ a_[2] + a_[1] ⊗ a_[2]*b"
            " + (a_[-1]▷b) ⊗ a_[0] + b_[0] ⊗ (b_[-1]▷a)"
            " - (b_[-1]▷a) ⊗ b_[0] - a_[0] ⊗ (a_[-1]▷b)"),
])

EQ44_SUITE = make_suite("eq44", _BB_CTX, [
    ("44", "- a_2*b ⊗ a_1 + a_2 ⊗ b*a_1 - (a_(1)▷b) ⊗ a_(0) + a_(0) ⊗ (b◁a_(-1))"
           " = b_1 ⊗ b_2*a - a*b_1 ⊗ b_2 + b_(0) ⊗ (b_(1)▷a) - (a◁b_(-1)) ⊗ b_(0)"),
])


# ---------------------------------------------------------------------------
# Constructions and checks
# ---------------------------------------------------------------------------


def commutator_bracket(mul: Tensor) -> Tensor:
    """[a,b] = ab - ba."""
    s = mul.dom[0]
    return mul - compose(mul, Tensor.permutation((s, s), (1, 0)))


def commutator_cobracket(comul: Tensor) -> Tensor:
    """delta = (id - tau) Delta."""
    s = comul.dom[0]
    return comul - compose(Tensor.permutation((s, s), (1, 0)), comul)


def lie_binding(l: LieBialgebraData) -> Binding:
    return Binding(spaces={"L": l.space},
                   tensors={"br": l.bracket, "cobr": l.cobracket})


def check_lie_bialgebra(l: LieBialgebraData, witness_limit: int = 10) -> CheckReport:
    """Jacobi, co-Jacobi and the 1-cocycle compatibility."""
    return LIE_BIALGEBRA_SUITE.run(lie_binding(l), witness_limit)


def commutator_lie(b: BialgebraData, witness_limit: int = 10,
                   require_prereq: bool = True) -> tuple[LieBialgebraData, CheckReport]:
    """Commutator Lie structure of an alternative bialgebra, together with the
    Lie-bialgebra verdict and the single residual that governs it."""
    pre = check_bialgebra(b, witness_limit)
    if require_prereq and not pre.passed:
        raise PrerequisiteFailed("input is not an alternative bialgebra", report=pre)
    lie = LieBialgebraData(b.space, commutator_bracket(b.mul), commutator_cobracket(b.comul))
    report = merge_reports(
        "commutator-lie",
        check_lie_bialgebra(lie, witness_limit),
        COMMUTATOR_NS_SUITE.run(
            Binding(spaces={"A": b.space}, tensors={"mulA": b.mul, "DeltaA": b.comul}),
            witness_limit),
    )
    return lie, report


def check_yetter_drinfeld(d: YetterDrinfeldData, witness_limit: int = 10) -> CheckReport:
    """Lie module, Lie comodule and the Yetter-Drinfeld compatibility."""
    binding = Binding(
        spaces={"H": d.host.space, "V": d.carrier},
        tensors={"brH": d.host.bracket, "cobrH": d.host.cobracket,
                 "lact": d.lact, "phi": d.phi})
    return YETTER_DRINFELD_SUITE.run(
        binding, witness_limit,
        notes=("structure map on H taken to be the identity",))


def lie_action(d: HopfBimoduleData) -> Tensor:
    """x |>_L v = x |> v - v <| x."""
    h, v = d.host.space, d.carrier
    return d.lact - compose(d.ract, Tensor.permutation((h, v), (1, 0)))


def lie_coaction(d: HopfBimoduleData) -> Tensor:
    """phi_L = phi - tau psi."""
    h, v = d.host.space, d.carrier
    return d.phi - compose(Tensor.permutation((v, h), (1, 0)), d.psi)


def yetter_drinfeld_from_hopf(d: HopfBimoduleData) -> YetterDrinfeldData:
    """Derived Lie data of a Hopf bimodule: commutator structure on H with the
    difference action and coaction."""
    host = LieBialgebraData(d.host.space,
                            commutator_bracket(d.host.mul),
                            commutator_cobracket(d.host.comul))
    return YetterDrinfeldData(host, d.carrier, lie_action(d), lie_coaction(d))


def braided_commutator_lie(d: BraidedBialgebraData, witness_limit: int = 10,
                           require_prereq: bool = True) -> CheckReport:
    """Two verdicts on the derived braided Lie structure: the direct residual
    on the braided bialgebra data, and the braided Lie bialgebra condition on
    the commutator structure.  They must agree; the agreement is recorded as
    its own condition."""
    pre = check_braided_bialgebra(d, witness_limit, require_prereq)
    if require_prereq and not pre.passed:
        raise PrerequisiteFailed("input is not a braided alternative bialgebra", report=pre)

    direct = EQ44_SUITE.run(braided_binding(d), witness_limit)

    a, h = d.carrier, d.host.space
    binding = Binding(
        spaces={"A": a, "H": h},
        tensors={"br": commutator_bracket(d.braided_mul),
                 "cobr": commutator_cobracket(d.braided_comul),
                 "lactL": lie_action(d.hopf),
                 "phiL": lie_coaction(d.hopf)})
    derived = BRAIDED_LIE_SUITE.run(binding, witness_limit)

    agree = direct.passed == derived.passed
    return CheckReport(
        "braided-commutator-lie",
        direct.conditions + derived.conditions + (ConditionResult("equivalence", agree),),
        () if agree else ("verdicts disagree between the two evaluation paths",),
    )
