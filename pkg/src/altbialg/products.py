"""Matched pairs, cocycle/cycle cross systems and the four product
constructions on E = A (+) H.

All interaction maps between the two alternative bialgebras A and H live in a
single :class:`InteractionData` record; every map slot left unset defaults to
the zero map, so each degenerate product (direct sum, biproduct, bicrossed
product, double cross biproduct) is literally a special case of the cocycle
bicrossproduct rather than a separate code path.

Slot dictionary (signatures are enforced at construction):

====== ===================== ==========================================
slot   signature             meaning
====== ===================== ==========================================
rharp  H(x)A -> A            left H-action on A   (x -> a)
lharp  A(x)H -> A            right H-action on A  (a <- y)
rtri   A(x)H -> H            left A-action on H   (a |> y)
ltri   H(x)A -> H            right A-action on H  (x <| b)
phi    A -> H(x)A            left H-coaction on A
psi    A -> A(x)H            right H-coaction on A
rho    H -> A(x)H            left A-coaction on H
gamma  H -> H(x)A            right A-coaction on H
sigma  H(x)H -> A            cocycle on H
theta  A(x)A -> H            cocycle on A
p      A -> H(x)H            cycle on A
q      H -> A(x)A            cycle on H
====== ===================== ==========================================
"""

from __future__ import annotations

from dataclasses import dataclass

from .braided import BraidedBialgebraData, HopfBimoduleData, check_braided_bialgebra
from .conditions import Context, make_suite
from .directsum import block_sum, direct_sum_space
from .errors import PrerequisiteFailed
from .report import CheckReport, ConditionResult, merge_reports
from .structures import (AlgebraData, BialgebraData, CoalgebraData, ModuleData,
                         _expect, check_alternative, check_bialgebra,
                         check_bicomodule, check_bimodule, check_coalternative,
                         check_comodule_coalgebra, check_module_algebra)
from .tensorkit import Binding, Tensor

# ---------------------------------------------------------------------------
# Data type
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InteractionData:
    """Two alternative bialgebras plus every interaction map between them.

    Any map left as ``None`` becomes the zero map of the right signature."""

    A: BialgebraData
    H: BialgebraData
    rharp: Tensor | None = None
    lharp: Tensor | None = None
    rtri: Tensor | None = None
    ltri: Tensor | None = None
    phi: Tensor | None = None
    psi: Tensor | None = None
    rho: Tensor | None = None
    gamma: Tensor | None = None
    sigma: Tensor | None = None
    theta: Tensor | None = None
    p: Tensor | None = None
    q: Tensor | None = None

    def __post_init__(self):
        a, h = self.A.space, self.H.space
        shapes = {
            "rharp": ((h, a), (a,)), "lharp": ((a, h), (a,)),
            "rtri": ((a, h), (h,)), "ltri": ((h, a), (h,)),
            "phi": ((a,), (h, a)), "psi": ((a,), (a, h)),
            "rho": ((h,), (a, h)), "gamma": ((h,), (h, a)),
            "sigma": ((h, h), (a,)), "theta": ((a, a), (h,)),
            "p": ((a,), (h, h)), "q": ((h,), (a, a)),
        }
        for name, (dom, cod) in shapes.items():
            t = getattr(self, name)
            if t is None:
                object.__setattr__(self, name, Tensor.zero(dom, cod))
            else:
                _expect(t, dom, cod, name)

    def cocycles_are_zero(self) -> bool:
        return all(t.is_zero() for t in (self.sigma, self.theta, self.p, self.q))


def interaction_binding(d: InteractionData) -> Binding:
    return Binding(
        spaces={"A": d.A.space, "H": d.H.space},
        tensors={"mulA": d.A.mul, "DeltaA": d.A.comul,
                 "mulH": d.H.mul, "DeltaH": d.H.comul,
                 "rharp": d.rharp, "lharp": d.lharp,
                 "rtri": d.rtri, "ltri": d.ltri,
                 "phi": d.phi, "psi": d.psi, "rho": d.rho, "gamma": d.gamma,
                 "sigma": d.sigma, "theta": d.theta, "P": d.p, "Q": d.q})


# ---------------------------------------------------------------------------
# The shared condition language
# ---------------------------------------------------------------------------

_CTX = Context(
    variables={"a": "A", "b": "A", "c": "A", "x": "H", "y": "H", "z": "H"},
    expansions={
        ("A", "plain", (1, 2)): ("DeltaA", ("A", "A")),
        ("A", "paren", (-1, 0)): ("phi", ("H", "A")),
        ("A", "paren", (0, 1)): ("psi", ("A", "H")),
        ("A", "angle", (1, 2)): ("P", ("H", "H")),
        ("H", "plain", (1, 2)): ("DeltaH", ("H", "H")),
        ("H", "bracket", (-1, 0)): ("rho", ("A", "H")),
        ("H", "bracket", (0, 1)): ("gamma", ("H", "A")),
        ("H", "brace", (1, 2)): ("Q", ("A", "A")),
    },
    ops={
        ("*", "A", "A"): ("mulA", "A"),
        ("*", "H", "H"): ("mulH", "H"),
        ("⇀", "H", "A"): ("rharp", "A"),
        ("↼", "A", "H"): ("lharp", "A"),
        ("▷", "A", "H"): ("rtri", "H"),
        ("◁", "H", "A"): ("ltri", "H"),
    },
    funcs={
        "DeltaA": (("A",), ("A", "A")),
        "DeltaH": (("H",), ("H", "H")),
        "phi": (("A",), ("H", "A")),
        "psi": (("A",), ("A", "H")),
        "rho": (("H",), ("A", "H")),
        "gamma": (("H",), ("H", "A")),
        "sigma": (("H", "H"), ("A",)),
        "theta": (("A", "A"), ("H",)),
        "P": (("A",), ("H", "H")),
        "Q": (("H",), ("A", "A")),
    },
)

# ---------------------------------------------------------------------------
# Matched pairs (AM / CM)
# ---------------------------------------------------------------------------

MATCHED_PAIR_ALGEBRAS_SUITE = make_suite("matched-pair-algebras", _CTX, [
    ("AM1", "x⇀(a*b) + a*(x⇀b) + a↼(x◁b)"
            " = (x⇀a)*b + (a↼x)*b + (x◁a)⇀b + (a▷x)⇀b"),
    ("AM2", "x⇀(a*b) + x⇀(b*a)"
            " = (x⇀a)*b + (x◁a)⇀b + (x⇀b)*a + (x◁b)⇀a"),
    ("AM3", "(a*b)↼x + (a↼x)*b + (a▷x)⇀b"
            " = a*(b↼x) + a*(x⇀b) + a↼(b▷x) + a↼(x◁b)"),
    ("AM4", "(a*b)↼x + (b*a)↼x"
            " = a*(b↼x) + a↼(b▷x) + b*(a↼x) + b↼(a▷x)"),
    ("AM5", "a▷(x*y) + x*(a▷y) + x◁(a↼y)"
            " = (x◁a)*y + (a▷x)*y + (x⇀a)▷y + (a↼x)▷y"),
    ("AM6", "a▷(x*y) + a▷(y*x)"
            " = (a▷x)*y + (a↼x)▷y + (a▷y)*x + (a↼y)▷x"),
    ("AM7", "(x*y)◁a + (x◁a)*y + (x⇀a)▷y"
            " = x*(y◁a) + x*(a▷y) + x◁(y⇀a) + x◁(a↼y)"),
    ("AM8", "(x*y)◁a + (y*x)◁a"
            " = x*(y◁a) + x◁(y⇀a) + y*(x◁a) + y◁(x⇀a)"),
])

MATCHED_PAIR_COALGEBRAS_SUITE = make_suite("matched-pair-coalgebras", _CTX, [
    ("CM1", "phi(a_1) ⊗ a_2 + gamma(a_(-1)) ⊗ a_(0) - a_(-1) ⊗ DeltaA(a_(0))"
            " = - tau12(psi(a_1), a_2) - tau12(rho(a_(-1)), a_(0))"
            " + tau12(a_1, phi(a_2)) + tau12(a_(0), gamma(a_(1)))"),
    ("CM2", "DeltaA(a_(0)) ⊗ a_(1) - a_1 ⊗ psi(a_2) - a_(0) ⊗ rho(a_(1))"
            " = - tau12(DeltaA(a_(0)), a_(1)) + tau12(a_1, psi(a_2))"
            " + tau12(a_(0), rho(a_(1)))"),
    ("CM3", "DeltaH(x_[0]) ⊗ x_[1] - x_1 ⊗ gamma(x_2) - x_[0] ⊗ phi(x_[1])"
            " = - tau12(DeltaH(x_[0]), x_[1]) + tau12(x_1, gamma(x_2))"
            " + tau12(x_[0], phi(x_[1]))"),
    ("CM4", "rho(x_1) ⊗ x_2 + psi(x_[-1]) ⊗ x_[0] - x_[-1] ⊗ DeltaH(x_[0])"
            " = - tau12(gamma(x_1), x_2) - tau12(phi(x_[-1]), x_[0])"
            " + tau12(x_1, rho(x_2)) + tau12(x_[0], psi(x_[1]))"),
    ("CM5", "phi(a_1) ⊗ a_2 + gamma(a_(-1)) ⊗ a_(0) - a_(-1) ⊗ DeltaA(a_(0))"
            " = - tau23(phi(a_1), a_2) - tau23(gamma(a_(-1)), a_(0))"
            " + tau23(a_(-1), DeltaA(a_(0)))"),
    ("CM6", "DeltaA(a_(0)) ⊗ a_(1) - a_1 ⊗ psi(a_2) - a_(0) ⊗ rho(a_(1))"
            " = - tau23(psi(a_1), a_2) - tau23(rho(a_(-1)), a_(0))"
            " + tau23(a_1, phi(a_2)) + tau23(a_(0), gamma(a_(1)))"),
    ("CM7", "DeltaH(x_[0]) ⊗ x_[1] - x_1 ⊗ gamma(x_2) - x_[0] ⊗ phi(x_[1])"
            " = - tau23(gamma(x_1), x_2) - tau23(phi(x_[-1]), x_[0])"
            " + tau23(x_1, rho(x_2)) + tau23(x_[0], psi(x_[1]))"),
    ("CM8", "rho(x_1) ⊗ x_2 + psi(x_[-1]) ⊗ x_[0] - x_[-1] ⊗ DeltaH(x_[0])"
            " = - tau23(rho(x_1), x_2) - tau23(psi(x_[-1]), x_[0])"
            " + tau23(x_[-1], DeltaH(x_[0]))"),
])

# ---------------------------------------------------------------------------
# H as a Hopf bimodule / braided bialgebra over A (HM', BB')
# ---------------------------------------------------------------------------

HOPF_BIMODULE_OVER_A_SUITE = make_suite("hopf-bimodule-over-A", _CTX, [
    ("HM1'", "rho(a▷x) = - a_2 ⊗ (x◁a_1) + x_[-1] ⊗ (a▷x_[0])"
             " + x_[-1] ⊗ (x_[0]◁a) - a*x_[-1] ⊗ x_[0]"),
    ("HM2'", "gamma(x◁a) = (x_[0]◁a) ⊗ x_[1] + (x_[0]◁a) ⊗ x_[-1]"
             " - x_[0] ⊗ a*x_[-1] - (x◁a_1) ⊗ a_2"),
    ("HM3'", "rho(x◁a) = x_[-1]*a ⊗ x_[0] + x_[1]*a ⊗ x_[0]"
             " - x_[1] ⊗ (a▷x_[0]) + a_1 ⊗ (x◁a_2) + a_1 ⊗ (a_2▷x)"),
    ("HM4'", "gamma(a▷x) = (a_1▷x) ⊗ a_2 + (a_2▷x) ⊗ a_1"
             " + x_[0] ⊗ a*x_[1] + x_[0] ⊗ x_[1]*a - (a▷x_[0]) ⊗ x_[1]"),
    ("HM5'", "rho(a▷x) + tau(gamma(a▷x)) = x_[-1] ⊗ (a▷x_[0])"
             " + a*x_[1] ⊗ x_[0] + a_2 ⊗ (a_1▷x)"),
    ("HM6'", "rho(x◁a) + tau(gamma(x◁a)) = a_1 ⊗ (x◁a_2)"
             " + x_[-1]*a ⊗ x_[0] + x_[1] ⊗ (x_[0]◁a)"),
])

BRAIDED_OVER_A_SUITE = make_suite("braided-over-A", _CTX, [
    ("BB3", "DeltaH(x*y) = x_1*y ⊗ x_2 + x_2*y ⊗ x_1 - x_2 ⊗ y*x_1"
            " + y_1 ⊗ x*y_2 + y_1 ⊗ y_2*x - x*y_1 ⊗ y_2"
            " + (x_[-1]▷y) ⊗ x_[0] + (x_[1]▷y) ⊗ x_[0] - x_[0] ⊗ (y◁x_[-1])"
            " + y_[0] ⊗ (x◁y_[1]) + y_[0] ⊗ (y_[1]▷x) - (x◁y_[-1]) ⊗ y_[0]"),
    ("BB4", "DeltaH(y*x) + tau(DeltaH(y*x)) = x_1 ⊗ y*x_2 + y*x_2 ⊗ x_1"
            " + y_1*x ⊗ y_2 + y_2 ⊗ y_1*x"
            " + x_[0] ⊗ (y◁x_[1]) + (y◁x_[1]) ⊗ x_[0]"
            " + y_[0] ⊗ (y_[-1]▷x) + (y_[-1]▷x) ⊗ y_[0]"),
])

# ---------------------------------------------------------------------------
# Double matched pair (DM)
# ---------------------------------------------------------------------------

DOUBLE_MATCHED_PAIR_SUITE = make_suite("double-matched-pair", _CTX, [
    ("DM1", "phi(a*b) = - a_(1) ⊗ b*a_(0) + b_(-1) ⊗ a*b_(0) + b_(-1) ⊗ b_(0)*a"
            " + (a_(-1)◁b) ⊗ a_(0) + (a_(1)◁b) ⊗ a_(0) - (a▷b_(-1)) ⊗ b_(0)"),
    ("DM2", "psi(a*b) = a_(0)*b ⊗ a_(1) + a_(0)*b ⊗ a_(-1) - a*b_(0) ⊗ b_(1)"
            " - a_(0) ⊗ (b▷a_(-1)) + b_(0) ⊗ (a▷b_(1)) + b_(0) ⊗ (b_(1)◁a)"),
    ("DM3", "rho(x*y) = (x_[1]↼y) ⊗ x_[0] + (x_[-1]↼y) ⊗ x_[0] - x_[1] ⊗ y*x_[0]"
            " - (x⇀y_[-1]) ⊗ y_[0] + y_[-1] ⊗ x*y_[0] + y_[-1] ⊗ y_[0]*x"),
    ("DM4", "gamma(x*y) = x_[0]*y ⊗ x_[1] + x_[0]*y ⊗ x_[-1] - x_[0] ⊗ (y⇀x_[-1])"
            " - x*y_[0] ⊗ y_[1] + y_[0] ⊗ (x⇀y_[1]) + y_[0] ⊗ (y_[1]↼x)"),
    ("DM5", "DeltaA(x⇀b) = (x_[0]⇀b) ⊗ x_[1] + (x_[0]⇀b) ⊗ x_[-1]"
            " - x_[1] ⊗ (b↼x_[0]) - (x⇀b_1) ⊗ b_2"
            " + b_1 ⊗ (x⇀b_2) + b_1 ⊗ (b_2↼x)"),
    ("DM6", "DeltaA(a↼y) = (a_1↼y) ⊗ a_2 + (a_2↼y) ⊗ a_1 - a_2 ⊗ (y⇀a_1)"
            " - (a↼y_[0]) ⊗ y_[1] + y_[-1] ⊗ (a↼y_[0]) + y_[-1] ⊗ (y_[0]⇀a)"),
    ("DM7", "DeltaH(a▷y) = (a_(0)▷y) ⊗ a_(1) + (a_(0)▷y) ⊗ a_(-1)"
            " - a_(1) ⊗ (y◁a_(0)) + y_1 ⊗ (a▷y_2) + y_1 ⊗ (y_2◁a)"
            " - (a▷y_1) ⊗ y_2"),
    ("DM8", "DeltaH(x◁b) = (x_1◁b) ⊗ x_2 + (x_2◁b) ⊗ x_1 - x_2 ⊗ (b▷x_1)"
            " + b_(-1) ⊗ (x◁b_(0)) + b_(-1) ⊗ (b_(0)▷x) - (x◁b_(0)) ⊗ b_(1)"),
    ("DM9", "phi(x⇀b) + gamma(x◁b) = (x_[0]◁b) ⊗ x_[1] + (x_[0]◁b) ⊗ x_[-1]"
            " - x_2 ⊗ (b↼x_1) - x_[0] ⊗ b*x_[-1] + b_(-1) ⊗ (x⇀b_(0))"
            " - (x◁b_1) ⊗ b_2 + b_(-1) ⊗ (b_(0)↼x) - x*b_(-1) ⊗ b_(0)"),
    ("DM10", "psi(a↼y) + rho(a▷y) = (a_(0)↼y) ⊗ a_(1) + (a_(0)↼y) ⊗ a_(-1)"
             " - a_2 ⊗ (y◁a_1) - a_(0) ⊗ y*a_(-1) + y_[-1] ⊗ (a▷y_[0])"
             " - (a↼y_1) ⊗ y_2 + y_[-1] ⊗ (y_[0]◁a) - a*y_[-1] ⊗ y_[0]"),
    ("DM11", "psi(x⇀b) + rho(x◁b) = (x_1⇀b) ⊗ x_2 + x_[-1]*b ⊗ x_[0]"
             " + (x_2⇀b) ⊗ x_1 + x_[1]*b ⊗ x_[0] - x_[1] ⊗ (b▷x_[0])"
             " + b_1 ⊗ (x◁b_2) + b_(0) ⊗ x*b_(1) + b_1 ⊗ (b_2▷x)"
             " + b_(0) ⊗ b_(1)*x - (x⇀b_(0)) ⊗ b_(1)"),
    ("DM12", "phi(a↼y) + gamma(a▷y) = (a_1▷y) ⊗ a_2 + a_(-1)*y ⊗ a_(0)"
             " + (a_2▷y) ⊗ a_1 + a_(1)*y ⊗ a_(0) - a_(1) ⊗ (y⇀a_(0))"
             " + y_1 ⊗ (a↼y_2) + y_[0] ⊗ a*y_[1] + y_1 ⊗ (y_2⇀a)"
             " + y_[0] ⊗ y_[1]*a - (a▷y_[0]) ⊗ y_[1]"),
    ("DM13", "phi(b*a) + tau(psi(b*a)) = a_(-1) ⊗ b*a_(0) + (b▷a_(1)) ⊗ a_(0)"
             " + (b_(-1)◁a) ⊗ b_(0) + b_(1) ⊗ b_(0)*a"),
    ("DM14", "psi(b*a) + tau(phi(b*a)) = a_(0) ⊗ (b▷a_(1)) + b*a_(0) ⊗ a_(-1)"
             " + b_(0)*a ⊗ b_(1) + b_(0) ⊗ (b_(-1)◁a)"),
    ("DM15", "rho(y*x) + tau(gamma(y*x)) = x_[-1] ⊗ y*x_[0] + (y⇀x_[1]) ⊗ x_[0]"
             " + (y_[-1]↼x) ⊗ y_[0] + y_[1] ⊗ y_[0]*x"),
    ("DM16", "gamma(y*x) + tau(rho(y*x)) = y*x_[0] ⊗ x_[-1] + y_[0]*x ⊗ y_[1]"
             " + y_[0] ⊗ (y_[-1]↼x) + x_[0] ⊗ (y⇀x_[1])"),
    ("DM17", "DeltaA(b↼x) + tau(DeltaA(b↼x)) = x_[-1] ⊗ (b↼x_[0])"
             " + (b↼x_[0]) ⊗ x_[-1] + (b_1↼x) ⊗ b_2 + b_2 ⊗ (b_1↼x)"),
    ("DM18", "DeltaA(y⇀a) + tau(DeltaA(y⇀a)) = a_1 ⊗ (y⇀a_2) + (y⇀a_2) ⊗ a_1"
             " + (y_[0]⇀a) ⊗ y_[1] + y_[1] ⊗ (y_[0]⇀a)"),
    ("DM19", "DeltaH(y◁a) + tau(DeltaH(y◁a)) = a_(-1) ⊗ (y◁a_(0))"
             " + (y◁a_(0)) ⊗ a_(-1) + (y_1◁a) ⊗ y_2 + y_2 ⊗ (y_1◁a)"),
    ("DM20", "DeltaH(b▷x) + tau(DeltaH(b▷x)) = x_1 ⊗ (b▷x_2) + (b▷x_2) ⊗ x_1"
             " + (b_(0)▷x) ⊗ b_(1) + b_(1) ⊗ (b_(0)▷x)"),
    ("DM21", "phi(y⇀a) + tau(psi(y⇀a)) + gamma(y◁a) + tau(rho(y◁a))"
             " = a_(-1) ⊗ (y⇀a_(0)) + (y◁a_2) ⊗ a_1 + y*a_(1) ⊗ a_(0)"
             " + (y_[0]◁a) ⊗ y_[1] + y_2 ⊗ (y_1⇀a) + y_[0] ⊗ y_[-1]*a"),
    ("DM22", "phi(b↼x) + tau(psi(b↼x)) + gamma(b▷x) + tau(rho(b▷x))"
             " = x_1 ⊗ (b↼x_2) + x_[0] ⊗ b*x_[1] + (b▷x_[0]) ⊗ x_[-1]"
             " + (b_1▷x) ⊗ b_2 + b_(-1)*x ⊗ b_(0) + b_(1) ⊗ (b_(0)↼x)"),
    ("DM23", "psi(y⇀a) + tau(phi(y⇀a)) + rho(y◁a) + tau(gamma(y◁a))"
             " = a_1 ⊗ (y◁a_2) + a_(0) ⊗ y*a_(1) + (y⇀a_(0)) ⊗ a_(-1)"
             " + (y_1⇀a) ⊗ y_2 + y_[-1]*a ⊗ y_[0] + y_[1] ⊗ (y_[0]◁a)"),
    ("DM24", "psi(b↼x) + tau(phi(b↼x)) + rho(b▷x) + tau(gamma(b▷x))"
             " = x_[-1] ⊗ (b▷x_[0]) + (b↼x_2) ⊗ x_1 + b*x_[1] ⊗ x_[0]"
             " + (b_(0)↼x) ⊗ b_(1) + b_2 ⊗ (b_1▷x) + b_(0) ⊗ b_(-1)*x"),
])

# ---------------------------------------------------------------------------
# Cocycles and cycles (CC)
# ---------------------------------------------------------------------------

COCYCLE_SIGMA_SUITE = make_suite("cocycle-sigma", _CTX, [
    ("CC1", "sigma(x*y, z) + sigma(x, y)↼z - x⇀sigma(y, z) - sigma(x, y*z)"
            " = - sigma(y, x)↼z - sigma(y*x, z) + y⇀sigma(x, z) + sigma(y, x*z)"),
    ("CC2", "sigma(x*y, z) + sigma(x, y)↼z - x⇀sigma(y, z) - sigma(x, y*z)"
            " = - sigma(x, z)↼y - sigma(x*z, y) + x⇀sigma(z, y) + sigma(x, z*y)"),
])

COCYCLE_THETA_SUITE = make_suite("cocycle-theta", _CTX, [
    ("CC3", "theta(a*b, c) + theta(a, b)◁c - a▷theta(b, c) - theta(a, b*c)"
            " = - theta(b*a, c) - theta(b, a)◁c + b▷theta(a, c) + theta(b, a*c)"),
    ("CC4", "theta(a*b, c) + theta(a, b)◁c - a▷theta(b, c) - theta(a, b*c)"
            " = - theta(a*c, b) - theta(a, c)◁b + a▷theta(c, b) + theta(a, c*b)"),
])

CYCLE_P_SUITE = make_suite("cycle-P", _CTX, [
    ("CC5", "DeltaH(a_<1>) ⊗ a_<2> + P(a_(0)) ⊗ a_(1) - a_(-1) ⊗ P(a_(0))"
            " - a_<1> ⊗ DeltaH(a_<2>)"
            " = - tau12(DeltaH(a_<1>), a_<2>) - tau12(P(a_(0)), a_(1))"
            " + tau12(a_(-1), P(a_(0))) + tau12(a_<1>, DeltaH(a_<2>))"),
    ("CC6", "DeltaH(a_<1>) ⊗ a_<2> + P(a_(0)) ⊗ a_(1) - a_(-1) ⊗ P(a_(0))"
            " - a_<1> ⊗ DeltaH(a_<2>)"
            " = - tau23(DeltaH(a_<1>), a_<2>) - tau23(P(a_(0)), a_(1))"
            " + tau23(a_(-1), P(a_(0))) + tau23(a_<1>, DeltaH(a_<2>))"),
])

CYCLE_Q_SUITE = make_suite("cycle-Q", _CTX, [
    ("CC7", "DeltaA(x_{1}) ⊗ x_{2} + Q(x_[0]) ⊗ x_[1] - x_{1} ⊗ DeltaA(x_{2})"
            " - x_[-1] ⊗ Q(x_[0])"
            " = - tau12(DeltaA(x_{1}), x_{2}) - tau12(Q(x_[0]), x_[1])"
            " + tau12(x_{1}, DeltaA(x_{2})) + tau12(x_[-1], Q(x_[0]))"),
    ("CC8", "DeltaA(x_{1}) ⊗ x_{2} + Q(x_[0]) ⊗ x_[1] - x_{1} ⊗ DeltaA(x_{2})"
            " - x_[-1] ⊗ Q(x_[0])"
            " = - tau23(DeltaA(x_{1}), x_{2}) - tau23(Q(x_[0]), x_[1])"
            " + tau23(x_{1}, DeltaA(x_{2})) + tau23(x_[-1], Q(x_[0]))"),
])

COCYCLE_ALGEBRA_SUITE = make_suite("cocycle-algebras", _CTX, [
    ("CC9", "(x*y)*z + sigma(x, y)▷z - x*(y*z) - x◁sigma(y, z)"
            " = - (y*x)*z - sigma(y, x)▷z + y*(x*z) + y◁sigma(x, z)"),
    ("CC10", "(x*y)*z + sigma(x, y)▷z - x*(y*z) - x◁sigma(y, z)"
             " = - (x*z)*y - sigma(x, z)▷y + x*(z*y) + x◁sigma(z, y)"),
    ("CC11", "(a*b)*c + theta(a, b)⇀c - a*(b*c) - a↼theta(b, c)"
             " = - (b*a)*c - theta(b, a)⇀c + b*(a*c) + b↼theta(a, c)"),
    ("CC12", "(a*b)*c + theta(a, b)⇀c - a*(b*c) - a↼theta(b, c)"
             " = - (a*c)*b - theta(a, c)⇀b + a*(c*b) + a↼theta(c, b)"),
])

CYCLE_COALGEBRA_SUITE = make_suite("cycle-coalgebras", _CTX, [
    ("CC13", "DeltaH(x_1) ⊗ x_2 + P(x_[-1]) ⊗ x_[0] - x_1 ⊗ DeltaH(x_2)"
             " - x_[0] ⊗ P(x_[1])"
             " = - tau12(DeltaH(x_1), x_2) - tau12(P(x_[-1]), x_[0])"
             " + tau12(x_1, DeltaH(x_2)) + tau12(x_[0], P(x_[1]))"),
    ("CC14", "DeltaH(x_1) ⊗ x_2 + P(x_[-1]) ⊗ x_[0] - x_1 ⊗ DeltaH(x_2)"
             " - x_[0] ⊗ P(x_[1])"
             " = - tau23(DeltaH(x_1), x_2) - tau23(P(x_[-1]), x_[0])"
             " + tau23(x_1, DeltaH(x_2)) + tau23(x_[0], P(x_[1]))"),
    ("CC15", "DeltaA(a_1) ⊗ a_2 + Q(a_(-1)) ⊗ a_(0) - a_1 ⊗ DeltaA(a_2)"
             " - a_(0) ⊗ Q(a_(1))"
             " = - tau12(DeltaA(a_1), a_2) - tau12(Q(a_(-1)), a_(0))"
             " + tau12(a_1, DeltaA(a_2)) + tau12(a_(0), Q(a_(1)))"),
    ("CC16", "DeltaA(a_1) ⊗ a_2 + Q(a_(-1)) ⊗ a_(0) - a_1 ⊗ DeltaA(a_2)"
             " - a_(0) ⊗ Q(a_(1))"
             " = - tau23(DeltaA(a_1), a_2) - tau23(Q(a_(-1)), a_(0))"
             " + tau23(a_1, DeltaA(a_2)) + tau23(a_(0), Q(a_(1)))"),
])

# ---------------------------------------------------------------------------
# Cocycle cross product system (CP)
# ---------------------------------------------------------------------------

COCYCLE_CROSS_SUITE = make_suite("cocycle-cross-system", _CTX, [
    ("CP1", "(a*b)↼x + (b*a)↼x + sigma(theta(a, b), x) + sigma(theta(b, a), x)"
            " = a*(b↼x) + a↼(b▷x) + b*(a↼x) + b↼(a▷x)"),
    ("CP2", "x⇀(a*b) + a*(x⇀b) + a↼(x◁b) + sigma(x, theta(a, b))"
            " = (x⇀a)*b + (a↼x)*b + (x◁a)⇀b + (a▷x)⇀b"),
    ("CP3", "a↼(x*y) + a*sigma(x, y) + x⇀(a↼y) + sigma(x, a▷y)"
            " = (a↼x)↼y + (x⇀a)↼y + sigma(a▷x, y) + sigma(x◁a, y)"),
    ("CP4", "(x*y)⇀a + (y*x)⇀a + sigma(x, y)*a + sigma(y, x)*a"
            " = x⇀(y⇀a) + sigma(x, y◁a) + y⇀(x⇀a) + sigma(y, x◁a)"),
    ("CP5", "(a*b)▷x + (b*a)▷x + theta(a, b)*x + theta(b, a)*x"
            " = a▷(b▷x) + theta(a, b↼x) + b▷(a▷x) + theta(b, a↼x)"),
    ("CP6", "x◁(a*b) + a▷(x◁b) + theta(a, x⇀b) + x*theta(a, b)"
            " = (x◁a)◁b + (a▷x)◁b + theta(x⇀a, b) + theta(a↼x, b)"),
    ("CP7", "a▷(x*y) + x*(a▷y) + x◁(a↼y) + theta(a, sigma(x, y))"
            " = (a▷x)*y + (x◁a)*y + (a↼x)▷y + (x⇀a)▷y"),
    ("CP8", "(x*y)◁a + (y*x)◁a + theta(sigma(x, y), a) + theta(sigma(y, x), a)"
            " = x◁(y⇀a) + x*(y◁a) + y◁(x⇀a) + y*(x◁a)"),
    ("CP9", "x⇀(a*b) + x⇀(b*a) + sigma(x, theta(a, b)) + sigma(x, theta(b, a))"
            " = (x⇀a)*b + (x◁a)⇀b + (x⇀b)*a + (x◁b)⇀a"),
    ("CP10", "(a*b)↼x + (a↼x)*b + (a▷x)⇀b + sigma(theta(a, b), x)"
             " = a*(b↼x) + a*(x⇀b) + a↼(b▷x) + a↼(x◁b)"),
    ("CP11", "(x*y)⇀a + (x⇀a)↼y + sigma(x◁a, y) + sigma(x, y)*a"
             " = x⇀(y⇀a) + x⇀(a↼y) + sigma(x, y◁a) + sigma(x, a▷y)"),
    ("CP12", "a↼(x*y) + a↼(y*x) + a*sigma(x, y) + a*sigma(y, x)"
             " = (a↼x)↼y + sigma(a▷x, y) + (a↼y)↼x + sigma(a▷y, x)"),
    ("CP13", "x◁(a*b) + x◁(b*a) + x*theta(a, b) + x*theta(b, a)"
             " = (x◁a)◁b + theta(x⇀a, b) + (x◁b)◁a + theta(x⇀b, a)"),
    ("CP14", "(a*b)▷x + theta(a, b)*x + (a▷x)◁b + theta(a↼x, b)"
             " = a▷(b▷x) + a▷(x◁b) + theta(a, b↼x) + theta(a, x⇀b)"),
    ("CP15", "(x*y)◁a + (x◁a)*y + (x⇀a)▷y + theta(sigma(x, y), a)"
             " = x*(y◁a) + x*(a▷y) + x◁(y⇀a) + x◁(a↼y)"),
    ("CP16", "a▷(x*y) + a▷(y*x) + theta(a, sigma(x, y)) + theta(a, sigma(y, x))"
             " = (a▷x)*y + (a↼x)▷y + (a▷y)*x + (a↼y)▷x"),
])

# ---------------------------------------------------------------------------
# Cycle cross coproduct system (CCP)
# ---------------------------------------------------------------------------

CYCLE_CROSS_SUITE = make_suite("cycle-cross-system", _CTX, [
    ("CCP1", "phi(a_1) ⊗ a_2 + gamma(a_(-1)) ⊗ a_(0) - a_(-1) ⊗ DeltaA(a_(0))"
             " - a_<1> ⊗ Q(a_<2>)"
             " = - tau12(psi(a_1), a_2) - tau12(rho(a_(-1)), a_(0))"
             " + tau12(a_1, phi(a_2)) + tau12(a_(0), gamma(a_(1)))"),
    ("CCP2", "P(a_1) ⊗ a_2 + DeltaH(a_(-1)) ⊗ a_(0) - a_(-1) ⊗ phi(a_(0))"
             " - a_<1> ⊗ gamma(a_<2>)"
             " = - tau12(P(a_1), a_2) - tau12(DeltaH(a_(-1)), a_(0))"
             " + tau12(a_(-1), phi(a_(0))) + tau12(a_<1>, gamma(a_<2>))"),
    ("CCP3", "DeltaA(a_(0)) ⊗ a_(1) + Q(a_<1>) ⊗ a_<2> - a_1 ⊗ psi(a_2)"
             " - a_(0) ⊗ rho(a_(1))"
             " = - tau12(DeltaA(a_(0)), a_(1)) - tau12(Q(a_<1>), a_<2>)"
             " + tau12(a_1, psi(a_2)) + tau12(a_(0), rho(a_(1)))"),
    ("CCP4", "psi(a_(0)) ⊗ a_(1) + rho(a_<1>) ⊗ a_<2> - a_1 ⊗ P(a_2)"
             " - a_(0) ⊗ DeltaH(a_(1))"
             " = - tau12(phi(a_(0)), a_(1)) - tau12(gamma(a_<1>), a_<2>)"
             " + tau12(a_(-1), psi(a_(0))) + tau12(a_<1>, rho(a_<2>))"),
    ("CCP5", "gamma(x_[0]) ⊗ x_[1] + phi(x_{1}) ⊗ x_{2} - x_1 ⊗ Q(x_2)"
             " - x_[0] ⊗ DeltaA(x_[1])"
             " = - tau12(rho(x_[0]), x_[1]) - tau12(psi(x_{1}), x_{2})"
             " + tau12(x_[-1], gamma(x_[0])) + tau12(x_{1}, phi(x_{2}))"),
    ("CCP6", "DeltaH(x_[0]) ⊗ x_[1] + P(x_{1}) ⊗ x_{2} - x_1 ⊗ gamma(x_2)"
             " - x_[0] ⊗ phi(x_[1])"
             " = - tau12(DeltaH(x_[0]), x_[1]) - tau12(P(x_{1}), x_{2})"
             " + tau12(x_1, gamma(x_2)) + tau12(x_[0], phi(x_[1]))"),
    ("CCP7", "Q(x_1) ⊗ x_2 + DeltaA(x_[-1]) ⊗ x_[0] - x_[-1] ⊗ rho(x_[0])"
             " - x_{1} ⊗ psi(x_{2})"
             " = - tau12(Q(x_1), x_2) - tau12(DeltaA(x_[-1]), x_[0])"
             " + tau12(x_[-1], rho(x_[0])) + tau12(x_{1}, psi(x_{2}))"),
    ("CCP8", "rho(x_1) ⊗ x_2 + psi(x_[-1]) ⊗ x_[0] - x_[-1] ⊗ DeltaH(x_[0])"
             " - x_{1} ⊗ P(x_{2})"
             " = - tau12(gamma(x_1), x_2) - tau12(phi(x_[-1]), x_[0])"
             " + tau12(x_1, rho(x_2)) + tau12(x_[0], psi(x_[1]))"),
    ("CCP9", "phi(a_1) ⊗ a_2 + gamma(a_(-1)) ⊗ a_(0) - a_(-1) ⊗ DeltaA(a_(0))"
             " - a_<1> ⊗ Q(a_<2>)"
             " = - tau23(phi(a_1), a_2) - tau23(gamma(a_(-1)), a_(0))"
             " + tau23(a_(-1), DeltaA(a_(0))) + tau23(a_<1>, Q(a_<2>))"),
    ("CCP10", "P(a_1) ⊗ a_2 + DeltaH(a_(-1)) ⊗ a_(0) - a_(-1) ⊗ phi(a_(0))"
              " - a_<1> ⊗ gamma(a_<2>)"
              " = - tau23(phi(a_(0)), a_(1)) - tau23(gamma(a_<1>), a_<2>)"
              " + tau23(a_(-1), psi(a_(0))) + tau23(a_<1>, rho(a_<2>))"),
    ("CCP11", "DeltaA(a_(0)) ⊗ a_(1) + Q(a_<1>) ⊗ a_<2> - a_1 ⊗ psi(a_2)"
              " - a_(0) ⊗ rho(a_(1))"
              " = - tau23(psi(a_1), a_2) - tau23(rho(a_(-1)), a_(0))"
              " + tau23(a_1, phi(a_2)) + tau23(a_(0), gamma(a_(1)))"),
    ("CCP12", "psi(a_(0)) ⊗ a_(1) + rho(a_<1>) ⊗ a_<2> - a_1 ⊗ P(a_2)"
              " - a_(0) ⊗ DeltaH(a_(1))"
              " = - tau23(psi(a_(0)), a_(1)) - tau23(rho(a_<1>), a_<2>)"
              " + tau23(a_1, P(a_2)) + tau23(a_(0), DeltaH(a_(1)))"),
    ("CCP13", "gamma(x_[0]) ⊗ x_[1] + phi(x_{1}) ⊗ x_{2} - x_1 ⊗ Q(x_2)"
              " - x_[0] ⊗ DeltaA(x_[1])"
              " = - tau23(gamma(x_[0]), x_[1]) - tau23(phi(x_{1}), x_{2})"
              " + tau23(x_1, Q(x_2)) + tau23(x_[0], DeltaA(x_[1]))"),
    ("CCP14", "DeltaH(x_[0]) ⊗ x_[1] + P(x_{1}) ⊗ x_{2} - x_1 ⊗ gamma(x_2)"
              " - x_[0] ⊗ phi(x_[1])"
              " = - tau23(phi(x_[-1]), x_[0]) - tau23(gamma(x_1), x_2)"
              " + tau23(x_1, rho(x_2)) + tau23(x_[0], psi(x_[1]))"),
    ("CCP15", "Q(x_1) ⊗ x_2 + DeltaA(x_[-1]) ⊗ x_[0] - x_[-1] ⊗ rho(x_[0])"
              " - x_{1} ⊗ psi(x_{2})"
              " = - tau23(rho(x_[0]), x_[1]) - tau23(psi(x_{1}), x_{2})"
              " + tau23(x_[-1], gamma(x_[0])) + tau23(x_{1}, phi(x_{2}))"),
    ("CCP16", "rho(x_1) ⊗ x_2 + psi(x_[-1]) ⊗ x_[0] - x_[-1] ⊗ DeltaH(x_[0])"
              " - x_{1} ⊗ P(x_{2})"
              " = - tau23(rho(x_1), x_2) - tau23(psi(x_[-1]), x_[0])"
              " + tau23(x_[-1], DeltaH(x_[0])) + tau23(x_{1}, P(x_{2}))"),
])

# ---------------------------------------------------------------------------
# Cocycle double matched pair (CDM)
# ---------------------------------------------------------------------------

# In CDM9/CDM10/CDM27/CDM28 the shorthand "P(a, b)" / "Q(x, y)" denotes the
# cycle applied to the product, P(a*b) and Q(x*y): these are the only readings
# with the declared signatures P: A -> H(x)H and Q: H -> A(x)A, and they match
# the expansion of Delta_E of a product into components.
CDM_NOTE = "P(a,b) and Q(x,y) read as P(a*b) and Q(x*y)"

COCYCLE_DOUBLE_MATCHED_PAIR_SUITE = make_suite("cocycle-double-matched-pair", _CTX, [
    ("CDM1", "phi(a*b) + gamma(theta(a, b))"
             " = - a_(1) ⊗ b*a_(0) + b_(-1) ⊗ a*b_(0) + b_(-1) ⊗ b_(0)*a"
             " + (a_(-1)◁b) ⊗ a_(0) + (a_(1)◁b) ⊗ a_(0) - (a▷b_(-1)) ⊗ b_(0)"
             " + b_<1> ⊗ (a↼b_<2>) + b_<1> ⊗ (b_<2>⇀a) - a_<2> ⊗ (b↼a_<1>)"
             " + theta(a_1, b) ⊗ a_2 + theta(a_2, b) ⊗ a_1 - theta(a, b_1) ⊗ b_2"),
    ("CDM2", "psi(a*b) + rho(theta(a, b))"
             " = a_(0)*b ⊗ a_(1) + a_(0)*b ⊗ a_(-1) - a*b_(0) ⊗ b_(1)"
             " - a_(0) ⊗ (b▷a_(-1)) + b_(0) ⊗ (a▷b_(1)) + b_(0) ⊗ (b_(1)◁a)"
             " + (a_<1>⇀b) ⊗ a_<2> + (a_<2>⇀b) ⊗ a_<1> - (a↼b_<1>) ⊗ b_<2>"
             " + b_1 ⊗ theta(a, b_2) + b_1 ⊗ theta(b_2, a) - a_2 ⊗ theta(b, a_1)"),
    ("CDM3", "rho(x*y) + psi(sigma(x, y))"
             " = (x_[1]↼y) ⊗ x_[0] + (x_[-1]↼y) ⊗ x_[0] - x_[1] ⊗ y*x_[0]"
             " - (x⇀y_[-1]) ⊗ y_[0] + y_[-1] ⊗ x*y_[0] + y_[-1] ⊗ y_[0]*x"
             " + sigma(x_1, y) ⊗ x_2 + sigma(x_2, y) ⊗ x_1 - sigma(x, y_1) ⊗ y_2"
             " + y_{1} ⊗ (y_{2}▷x) + y_{1} ⊗ (x◁y_{2}) - x_{2} ⊗ (y◁x_{1})"),
    ("CDM4", "gamma(x*y) + phi(sigma(x, y))"
             " = x_[0]*y ⊗ x_[1] + x_[0]*y ⊗ x_[-1] - x_[0] ⊗ (y⇀x_[-1])"
             " - x*y_[0] ⊗ y_[1] + y_[0] ⊗ (x⇀y_[1]) + y_[0] ⊗ (y_[1]↼x)"
             " + (x_{1}▷y) ⊗ x_{2} + (x_{2}▷y) ⊗ x_{1} - x_2 ⊗ sigma(y, x_1)"
             " + y_1 ⊗ sigma(x, y_2) + y_1 ⊗ sigma(y_2, x) - (x◁y_{1}) ⊗ y_{2}"),
    ("CDM5", "DeltaA(x⇀b) + Q(x◁b)"
             " = (x_[0]⇀b) ⊗ x_[1] + (x_[0]⇀b) ⊗ x_[-1] - x_[1] ⊗ (b↼x_[0])"
             " - (x⇀b_1) ⊗ b_2 + b_1 ⊗ (x⇀b_2) + b_1 ⊗ (b_2↼x)"
             " + b_(0) ⊗ sigma(x, b_(1)) + b_(0) ⊗ sigma(b_(1), x)"
             " - sigma(x, b_(-1)) ⊗ b_(0)"
             " + x_{1}*b ⊗ x_{2} + x_{2}*b ⊗ x_{1} - x_{2} ⊗ b*x_{1}"),
    ("CDM6", "DeltaA(a↼y) + Q(a▷y)"
             " = (a_1↼y) ⊗ a_2 + (a_2↼y) ⊗ a_1 - a_2 ⊗ (y⇀a_1)"
             " - (a↼y_[0]) ⊗ y_[1] + y_[-1] ⊗ (a↼y_[0]) + y_[-1] ⊗ (y_[0]⇀a)"
             " + sigma(a_(-1), y) ⊗ a_(0) + sigma(a_(1), y) ⊗ a_(0)"
             " - a_(0) ⊗ sigma(y, a_(-1))"
             " + y_{1} ⊗ a*y_{2} + y_{1} ⊗ y_{2}*a - a*y_{1} ⊗ y_{2}"),
    ("CDM7", "DeltaH(a▷y) + P(a↼y)"
             " = (a_(0)▷y) ⊗ a_(1) + (a_(0)▷y) ⊗ a_(-1) - a_(1) ⊗ (y◁a_(0))"
             " + y_1 ⊗ (a▷y_2) + y_1 ⊗ (y_2◁a) - (a▷y_1) ⊗ y_2"
             " + y_[0] ⊗ theta(a, y_[1]) + y_[0] ⊗ theta(y_[1], a)"
             " - theta(a, y_[-1]) ⊗ y_[0]"
             " + a_<1>*y ⊗ a_<2> + a_<2>*y ⊗ a_<1> - a_<2> ⊗ y*a_<1>"),
    ("CDM8", "DeltaH(x◁b) + P(x⇀b)"
             " = (x_1◁b) ⊗ x_2 + (x_2◁b) ⊗ x_1 - x_2 ⊗ (b▷x_1)"
             " + b_(-1) ⊗ (x◁b_(0)) + b_(-1) ⊗ (b_(0)▷x) - (x◁b_(0)) ⊗ b_(1)"
             " + theta(x_[-1], b) ⊗ x_[0] + theta(x_[1], b) ⊗ x_[0]"
             " - x_[0] ⊗ theta(b, x_[-1])"
             " + b_<1> ⊗ x*b_<2> + b_<1> ⊗ b_<2>*x - x*b_<1> ⊗ b_<2>"),
    ("CDM9", "DeltaH(theta(a, b)) + P(a*b)"
             " = theta(a_(0), b) ⊗ a_(1) + theta(a_(0), b) ⊗ a_(-1)"
             " - theta(a, b_(0)) ⊗ b_(1) + b_(-1) ⊗ theta(a, b_(0))"
             " + b_(-1) ⊗ theta(b_(0), a) - a_(1) ⊗ theta(b, a_(0))"
             " + (a_<1>◁b) ⊗ a_<2> + (a_<2>◁b) ⊗ a_<1> - (a▷b_<1>) ⊗ b_<2>"
             " + b_<1> ⊗ (a▷b_<2>) + b_<1> ⊗ (b_<2>◁a) - a_<2> ⊗ (b▷a_<1>)"),
    ("CDM10", "DeltaA(sigma(x, y)) + Q(x*y)"
              " = sigma(x_[0], y) ⊗ x_[1] + sigma(x_[0], y) ⊗ x_[-1]"
              " - sigma(x, y_[0]) ⊗ y_[1] + y_[-1] ⊗ sigma(x, y_[0])"
              " + y_[-1] ⊗ sigma(y_[0], x) - x_[1] ⊗ sigma(y, x_[0])"
              " + (x_{1}↼y) ⊗ x_{2} + (x_{2}↼y) ⊗ x_{1} - x_{2} ⊗ (y⇀x_{1})"
              " + y_{1} ⊗ (x⇀y_{2}) + y_{1} ⊗ (y_{2}↼x) - (x⇀y_{1}) ⊗ y_{2}"),
    ("CDM11", "phi(x⇀b) + gamma(x◁b)"
              " = (x_[0]◁b) ⊗ x_[1] + (x_[0]◁b) ⊗ x_[-1] - x_2 ⊗ (b↼x_1)"
              " - x_[0] ⊗ b*x_[-1] + b_(-1) ⊗ (x⇀b_(0)) - (x◁b_1) ⊗ b_2"
              " + b_(-1) ⊗ (b_(0)↼x) - x*b_(-1) ⊗ b_(0)"
              " + theta(x_{1}, b) ⊗ x_{2} + theta(x_{2}, b) ⊗ x_{1}"
              " + b_<1> ⊗ sigma(x, b_<2>) + b_<1> ⊗ sigma(b_<2>, x)"),
    ("CDM12", "psi(a↼y) + rho(a▷y)"
              " = (a_(0)↼y) ⊗ a_(1) + (a_(0)↼y) ⊗ a_(-1) - a_2 ⊗ (y◁a_1)"
              " - a_(0) ⊗ y*a_(-1) + y_[-1] ⊗ (a▷y_[0]) - (a↼y_1) ⊗ y_2"
              " + y_[-1] ⊗ (y_[0]◁a) - a*y_[-1] ⊗ y_[0]"
              " + sigma(a_<1>, y) ⊗ a_<2> + sigma(a_<2>, y) ⊗ a_<1>"
              " + y_{1} ⊗ theta(a, y_{2}) + y_{1} ⊗ theta(y_{2}, a)"),
    ("CDM13", "psi(x⇀b) + rho(x◁b)"
              " = (x_1⇀b) ⊗ x_2 + x_[-1]*b ⊗ x_[0] + (x_2⇀b) ⊗ x_1"
              " + x_[1]*b ⊗ x_[0] - x_[1] ⊗ (b▷x_[0]) + b_1 ⊗ (x◁b_2)"
              " + b_(0) ⊗ x*b_(1) + b_1 ⊗ (b_2▷x) + b_(0) ⊗ b_(1)*x"
              " - (x⇀b_(0)) ⊗ b_(1)"
              " - x_{2} ⊗ theta(b, x_{1}) - sigma(x, b_<1>) ⊗ b_<2>"),
    ("CDM14", "phi(a↼y) + gamma(a▷y)"
              " = (a_1▷y) ⊗ a_2 + a_(-1)*y ⊗ a_(0) + (a_2▷y) ⊗ a_1"
              " + a_(1)*y ⊗ a_(0) - a_(1) ⊗ (y⇀a_(0)) + y_1 ⊗ (a↼y_2)"
              " + y_[0] ⊗ a*y_[1] + y_1 ⊗ (y_2⇀a) + y_[0] ⊗ y_[1]*a"
              " - (a▷y_[0]) ⊗ y_[1]"
              " - theta(a, y_{1}) ⊗ y_{2} - a_<2> ⊗ sigma(y, a_<1>)"),
    ("CDM15", "phi(b*a) + gamma(theta(b, a)) + tau(psi(b*a)) + tau(rho(theta(b, a)))"
              " = a_(-1) ⊗ b*a_(0) + (b▷a_(1)) ⊗ a_(0) + (b_(-1)◁a) ⊗ b_(0)"
              " + b_(1) ⊗ b_(0)*a + a_<1> ⊗ (b↼a_<2>) + b_<2> ⊗ (b_<1>⇀a)"
              " + theta(b, a_2) ⊗ a_1 + theta(b_1, a) ⊗ b_2"),
    ("CDM16", "psi(b*a) + rho(theta(b, a)) + tau(phi(b*a)) + tau(gamma(theta(b, a)))"
              " = a_(0) ⊗ (b▷a_(1)) + b*a_(0) ⊗ a_(-1) + b_(0)*a ⊗ b_(1)"
              " + b_(0) ⊗ (b_(-1)◁a) + a_1 ⊗ theta(b, a_2) + b_2 ⊗ theta(b_1, a)"
              " + (b↼a_<2>) ⊗ a_<1> + (b_<1>⇀a) ⊗ b_<2>"),
    ("CDM17", "rho(y*x) + psi(sigma(y, x)) + tau(gamma(y*x)) + tau(phi(sigma(y, x)))"
              " = x_[-1] ⊗ y*x_[0] + (y⇀x_[1]) ⊗ x_[0] + (y_[-1]↼x) ⊗ y_[0]"
              " + y_[1] ⊗ y_[0]*x + x_{1} ⊗ (y◁x_{2}) + y_{2} ⊗ (y_{1}▷x)"
              " + sigma(y, x_2) ⊗ x_1 + sigma(y_1, x) ⊗ y_2"),
    ("CDM18", "gamma(y*x) + phi(sigma(y, x)) + tau(rho(y*x)) + tau(psi(sigma(y, x)))"
              " = y*x_[0] ⊗ x_[-1] + y_[0]*x ⊗ y_[1] + y_[0] ⊗ (y_[-1]↼x)"
              " + x_[0] ⊗ (y⇀x_[1]) + x_1 ⊗ sigma(y, x_2) + y_2 ⊗ sigma(y_1, x)"
              " + (y◁x_{2}) ⊗ x_{1} + (y_{1}▷x) ⊗ y_{2}"),
    ("CDM19", "DeltaA(b↼x) + Q(b▷x) + tau(DeltaA(b↼x)) + tau(Q(b▷x))"
              " = x_[-1] ⊗ (b↼x_[0]) + (b↼x_[0]) ⊗ x_[-1] + (b_1↼x) ⊗ b_2"
              " + b_2 ⊗ (b_1↼x) + x_{1} ⊗ b*x_{2} + b*x_{2} ⊗ x_{1}"
              " + sigma(b_(-1), x) ⊗ b_(0) + b_(0) ⊗ sigma(b_(-1), x)"),
    ("CDM20", "DeltaA(y⇀a) + Q(y◁a) + tau(DeltaA(y⇀a)) + tau(Q(y◁a))"
              " = a_1 ⊗ (y⇀a_2) + (y⇀a_2) ⊗ a_1 + (y_[0]⇀a) ⊗ y_[1]"
              " + y_[1] ⊗ (y_[0]⇀a) + a_(0) ⊗ sigma(y, a_(1))"
              " + sigma(y, a_(1)) ⊗ a_(0) + y_{1}*a ⊗ y_{2} + y_{2} ⊗ y_{1}*a"),
    ("CDM21", "DeltaH(y◁a) + P(y⇀a) + tau(DeltaH(y◁a)) + tau(P(y⇀a))"
              " = a_(-1) ⊗ (y◁a_(0)) + (y◁a_(0)) ⊗ a_(-1) + (y_1◁a) ⊗ y_2"
              " + y_2 ⊗ (y_1◁a) + a_<1> ⊗ y*a_<2> + y*a_<2> ⊗ a_<1>"
              " + theta(y_[-1], a) ⊗ y_[0] + y_[0] ⊗ theta(y_[-1], a)"),
    ("CDM22", "DeltaH(b▷x) + P(b↼x) + tau(DeltaH(b▷x)) + tau(P(b↼x))"
              " = x_1 ⊗ (b▷x_2) + (b▷x_2) ⊗ x_1 + (b_(0)▷x) ⊗ b_(1)"
              " + b_(1) ⊗ (b_(0)▷x) + x_[0] ⊗ theta(b, x_[1])"
              " + theta(b, x_[1]) ⊗ x_[0] + b_<1>*x ⊗ b_<2> + b_<2> ⊗ b_<1>*x"),
    ("CDM23", "phi(y⇀a) + tau(psi(y⇀a)) + gamma(y◁a) + tau(rho(y◁a))"
              " = a_(-1) ⊗ (y⇀a_(0)) + (y◁a_2) ⊗ a_1 + y*a_(1) ⊗ a_(0)"
              " + (y_[0]◁a) ⊗ y_[1] + y_2 ⊗ (y_1⇀a) + y_[0] ⊗ y_[-1]*a"
              " + a_<1> ⊗ sigma(y, a_<2>) + theta(y_{1}, a) ⊗ y_{2}"),
    ("CDM24", "phi(b↼x) + tau(psi(b↼x)) + gamma(b▷x) + tau(rho(b▷x))"
              " = x_1 ⊗ (b↼x_2) + x_[0] ⊗ b*x_[1] + (b▷x_[0]) ⊗ x_[-1]"
              " + (b_1▷x) ⊗ b_2 + b_(-1)*x ⊗ b_(0) + b_(1) ⊗ (b_(0)↼x)"
              " + theta(b, x_{2}) ⊗ x_{1} + b_<2> ⊗ sigma(b_<1>, x)"),
    ("CDM25", "psi(y⇀a) + tau(phi(y⇀a)) + rho(y◁a) + tau(gamma(y◁a))"
              " = a_1 ⊗ (y◁a_2) + a_(0) ⊗ y*a_(1) + (y⇀a_(0)) ⊗ a_(-1)"
              " + (y_1⇀a) ⊗ y_2 + y_[-1]*a ⊗ y_[0] + y_[1] ⊗ (y_[0]◁a)"
              " + sigma(y, a_<2>) ⊗ a_<1> + y_{2} ⊗ theta(y_{1}, a)"),
    ("CDM26", "psi(b↼x) + tau(phi(b↼x)) + rho(b▷x) + tau(gamma(b▷x))"
              " = x_[-1] ⊗ (b▷x_[0]) + (b↼x_2) ⊗ x_1 + b*x_[1] ⊗ x_[0]"
              " + (b_(0)↼x) ⊗ b_(1) + b_2 ⊗ (b_1▷x) + b_(0) ⊗ b_(-1)*x"
              " + x_{1} ⊗ theta(b, x_{2}) + sigma(b_<1>, x) ⊗ b_<2>"),
    ("CDM27", "DeltaA(sigma(y, x)) + Q(y*x) + tau(DeltaA(sigma(y, x))) + tau(Q(y*x))"
              " = x_[-1] ⊗ sigma(y, x_[0]) + sigma(y, x_[0]) ⊗ x_[-1]"
              " + x_{1} ⊗ (y⇀x_{2}) + (y⇀x_{2}) ⊗ x_{1}"
              " + sigma(y_[0], x) ⊗ y_[1] + y_[1] ⊗ sigma(y_[0], x)"
              " + (y_{1}↼x) ⊗ y_{2} + y_{2} ⊗ (y_{1}↼x)"),
    ("CDM28", "P(b*a) + DeltaH(theta(b, a)) + tau(P(b*a)) + tau(DeltaH(theta(b, a)))"
              " = a_(-1) ⊗ theta(b, a_(0)) + theta(b, a_(0)) ⊗ a_(-1)"
              " + a_<1> ⊗ (b▷a_<2>) + (b▷a_<2>) ⊗ a_<1>"
              " + theta(b_(0), a) ⊗ b_(1) + b_(1) ⊗ theta(b_(0), a)"
              " + (b_<1>◁a) ⊗ b_<2> + b_<2> ⊗ (b_<1>◁a)"),
])

# ---------------------------------------------------------------------------
# Cocycle braided conditions (CBB)
# ---------------------------------------------------------------------------

COCYCLE_BRAIDED_SUITE = make_suite("cocycle-braided", _CTX, [
    ("CBB1", "DeltaA(a*b) + Q(theta(a, b))"
             " = a_1*b ⊗ a_2 + a_2*b ⊗ a_1 - a_2 ⊗ b*a_1 + b_1 ⊗ a*b_2"
             " + b_1 ⊗ b_2*a - a*b_1 ⊗ b_2"
             " + (a_(-1)⇀b) ⊗ a_(0) + (a_(1)⇀b) ⊗ a_(0) - a_(0) ⊗ (b↼a_(-1))"
             " + b_(0) ⊗ (a↼b_(1)) + b_(0) ⊗ (b_(1)⇀a) - (a↼b_(-1)) ⊗ b_(0)"),
    ("CBB2", "DeltaA(b*a) + Q(theta(b, a)) + tau(DeltaA(b*a)) + tau(Q(theta(b, a)))"
             " = a_1 ⊗ b*a_2 + b*a_2 ⊗ a_1 + b_1*a ⊗ b_2 + b_2 ⊗ b_1*a"
             " + a_(0) ⊗ (b↼a_(1)) + (b↼a_(1)) ⊗ a_(0)"
             " + (b_(-1)⇀a) ⊗ b_(0) + b_(0) ⊗ (b_(-1)⇀a)"),
    ("CBB3", "DeltaH(x*y) + P(sigma(x, y))"
             " = x_1*y ⊗ x_2 + x_2*y ⊗ x_1 - x_2 ⊗ y*x_1 + y_1 ⊗ x*y_2"
             " + y_1 ⊗ y_2*x - x*y_1 ⊗ y_2"
             " + (x_[-1]▷y) ⊗ x_[0] + (x_[1]▷y) ⊗ x_[0] - x_[0] ⊗ (y◁x_[-1])"
             " + y_[0] ⊗ (x◁y_[1]) + y_[0] ⊗ (y_[1]▷x) - (x◁y_[-1]) ⊗ y_[0]"),
    ("CBB4", "DeltaH(y*x) + P(sigma(y, x)) + tau(DeltaH(y*x)) + tau(P(sigma(y, x)))"
             " = x_1 ⊗ y*x_2 + y*x_2 ⊗ x_1 + y_1*x ⊗ y_2 + y_2 ⊗ y_1*x"
             " + x_[0] ⊗ (y◁x_[1]) + (y◁x_[1]) ⊗ x_[0]"
             " + y_[0] ⊗ (y_[-1]▷x) + (y_[-1]▷x) ⊗ y_[0]"),
])

# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def _relabel(report: CheckReport, prefix: str) -> CheckReport:
    """Prefix condition ids so merged sub-reports stay distinguishable."""
    return CheckReport(
        report.suite,
        tuple(ConditionResult(f"{prefix}/{c.condition_id}", c.passed, c.witnesses)
              for c in report.conditions),
        report.notes)


def _require(name: str, report: CheckReport, require_prereq: bool):
    if require_prereq and not report.passed:
        raise PrerequisiteFailed(name, report=report)


def check_matched_pair_algebras(d: InteractionData, witness_limit: int = 10,
                                require_prereq: bool = True) -> CheckReport:
    """Alternativity of both parts, the two bimodule structures, and AM1-AM8."""
    alt = merge_reports("alternativity",
                        _relabel(check_alternative(d.A.algebra, witness_limit), "A"),
                        _relabel(check_alternative(d.H.algebra, witness_limit), "H"))
    _require("A or H is not an alternative algebra", alt, require_prereq)
    bim_h = check_bimodule(ModuleData(d.A.algebra, d.H.space, d.rtri, d.ltri), witness_limit)
    bim_a = check_bimodule(ModuleData(d.H.algebra, d.A.space, d.rharp, d.lharp), witness_limit)
    return merge_reports(
        "matched-pair-algebras",
        alt,
        _relabel(bim_h, "H-over-A"),
        _relabel(bim_a, "A-over-H"),
        MATCHED_PAIR_ALGEBRAS_SUITE.run(interaction_binding(d), witness_limit),
    )


def check_matched_pair_coalgebras(d: InteractionData, witness_limit: int = 10,
                                  require_prereq: bool = True) -> CheckReport:
    """Coalternativity of both parts, the two bicomodule structures, CM1-CM8."""
    coalt = merge_reports("coalternativity",
                          _relabel(check_coalternative(d.A.coalgebra, witness_limit), "A"),
                          _relabel(check_coalternative(d.H.coalgebra, witness_limit), "H"))
    _require("A or H is not an alternative coalgebra", coalt, require_prereq)
    bicom_h = check_bicomodule(ModuleData(d.A.coalgebra, d.H.space, d.rho, d.gamma), witness_limit)
    bicom_a = check_bicomodule(ModuleData(d.H.coalgebra, d.A.space, d.phi, d.psi), witness_limit)
    return merge_reports(
        "matched-pair-coalgebras",
        coalt,
        _relabel(bicom_h, "H-over-A"),
        _relabel(bicom_a, "A-over-H"),
        MATCHED_PAIR_COALGEBRAS_SUITE.run(interaction_binding(d), witness_limit),
    )


def check_hopf_bimodule_over_A(d: InteractionData, witness_limit: int = 10,
                               require_prereq: bool = True) -> CheckReport:
    """H as an A-bimodule and A-bicomodule satisfying HM1'-HM6'."""
    host = check_bialgebra(d.A, witness_limit)
    _require("A is not an alternative bialgebra", host, require_prereq)
    bim = check_bimodule(ModuleData(d.A.algebra, d.H.space, d.rtri, d.ltri), witness_limit)
    bicom = check_bicomodule(ModuleData(d.A.coalgebra, d.H.space, d.rho, d.gamma), witness_limit)
    return merge_reports(
        "hopf-bimodule-over-A",
        bim, bicom,
        HOPF_BIMODULE_OVER_A_SUITE.run(interaction_binding(d), witness_limit),
    )


def check_braided_over_A(d: InteractionData, witness_limit: int = 10,
                         require_prereq: bool = True) -> CheckReport:
    """H as a braided alternative bialgebra over A: Hopf-bimodule axioms, the
    (co)multiplication of H being compatible with the A-(co)actions, BB3-BB4."""
    hopf = check_hopf_bimodule_over_A(d, witness_limit, require_prereq)
    return merge_reports(
        "braided-over-A",
        hopf,
        check_alternative(d.H.algebra, witness_limit),
        check_coalternative(d.H.coalgebra, witness_limit),
        check_module_algebra(d.A.algebra, d.H.algebra, d.rtri, d.ltri, witness_limit),
        check_comodule_coalgebra(d.A.coalgebra, d.H.coalgebra, d.rho, d.gamma, witness_limit),
        BRAIDED_OVER_A_SUITE.run(interaction_binding(d), witness_limit),
    )


def braided_over_H(d: InteractionData) -> BraidedBialgebraData:
    """View A as a braided bialgebra over H (the mirror image of the H-side
    checks, sharing the encodings of the single-host braided module)."""
    hopf = HopfBimoduleData(d.H, d.A.space, d.rharp, d.lharp, d.phi, d.psi)
    return BraidedBialgebraData(hopf, d.A.mul, d.A.comul)


def check_braided_over_H(d: InteractionData, witness_limit: int = 10,
                         require_prereq: bool = True) -> CheckReport:
    return check_braided_bialgebra(braided_over_H(d), witness_limit, require_prereq)


def check_double_matched_pair(d: InteractionData, witness_limit: int = 10) -> CheckReport:
    """DM1-DM24 (the cocycle slots play no role here)."""
    return DOUBLE_MATCHED_PAIR_SUITE.run(interaction_binding(d), witness_limit)


def check_cocycles(d: InteractionData, witness_limit: int = 10) -> CheckReport:
    """CC1-CC8: sigma/theta are cocycles, P/Q are cycles."""
    binding = interaction_binding(d)
    return merge_reports(
        "cocycles",
        COCYCLE_SIGMA_SUITE.run(binding, witness_limit),
        COCYCLE_THETA_SUITE.run(binding, witness_limit),
        CYCLE_P_SUITE.run(binding, witness_limit),
        CYCLE_Q_SUITE.run(binding, witness_limit),
    )


def check_cocycle_structures(d: InteractionData, witness_limit: int = 10) -> CheckReport:
    """CC9-CC16: validity of the generalized (non-alternative) cocycle
    algebras and cycle coalgebras."""
    binding = interaction_binding(d)
    return merge_reports(
        "cocycle-structures",
        COCYCLE_ALGEBRA_SUITE.run(binding, witness_limit),
        CYCLE_COALGEBRA_SUITE.run(binding, witness_limit),
    )


def check_cocycle_cross_system(d: InteractionData, witness_limit: int = 10) -> CheckReport:
    """CP1-CP16."""
    return COCYCLE_CROSS_SUITE.run(interaction_binding(d), witness_limit)


def check_cycle_cross_system(d: InteractionData, witness_limit: int = 10) -> CheckReport:
    """CCP1-CCP16."""
    return CYCLE_CROSS_SUITE.run(interaction_binding(d), witness_limit)


def check_cocycle_double_matched_pair(d: InteractionData, witness_limit: int = 10) -> CheckReport:
    """CDM1-CDM28."""
    report = COCYCLE_DOUBLE_MATCHED_PAIR_SUITE.run(interaction_binding(d), witness_limit)
    return CheckReport(report.suite, report.conditions, report.notes + (CDM_NOTE,))


def check_cocycle_braided(d: InteractionData, witness_limit: int = 10) -> CheckReport:
    """CBB1-CBB4."""
    return COCYCLE_BRAIDED_SUITE.run(interaction_binding(d), witness_limit)


# ---------------------------------------------------------------------------
# Product constructions on E = A (+) H
# ---------------------------------------------------------------------------


def _sum_space(d: InteractionData, name: str):
    return direct_sum_space(name, [("A", d.A.space), ("H", d.H.space)])


def _product_mul(d: InteractionData, total, blocks, with_cocycles: bool) -> Tensor:
    pieces = [
        (("A", "A"), ("A",), d.A.mul),
        (("H", "A"), ("A",), d.rharp),
        (("A", "H"), ("A",), d.lharp),
        (("H", "H"), ("H",), d.H.mul),
        (("H", "A"), ("H",), d.ltri),
        (("A", "H"), ("H",), d.rtri),
    ]
    if with_cocycles:
        pieces += [(("H", "H"), ("A",), d.sigma), (("A", "A"), ("H",), d.theta)]
    return block_sum(total, 2, 1, pieces, blocks)


def _product_comul(d: InteractionData, total, blocks, with_cycles: bool) -> Tensor:
    pieces = [
        (("A",), ("A", "A"), d.A.comul),
        (("A",), ("H", "A"), d.phi),
        (("A",), ("A", "H"), d.psi),
        (("H",), ("H", "H"), d.H.comul),
        (("H",), ("A", "H"), d.rho),
        (("H",), ("H", "A"), d.gamma),
    ]
    if with_cycles:
        pieces += [(("A",), ("H", "H"), d.p), (("H",), ("A", "A"), d.q)]
    return block_sum(total, 1, 2, pieces, blocks)


def bicrossed_product(d: InteractionData, name: str = "E",
                      require_prereq: bool = True) -> AlgebraData:
    """Multiplication (a+x)(b+y) = (ab + x>b + a<y) + (xy + x<|b + a|>y) on
    A (+) H.  Requires zero cocycles (use cocycle_cross_product otherwise)."""
    if not (d.sigma.is_zero() and d.theta.is_zero()):
        raise ValueError("bicrossed_product needs sigma = theta = 0; "
                         "use cocycle_cross_product")
    _require("not a matched pair of alternative algebras",
             check_matched_pair_algebras(d, require_prereq=require_prereq),
             require_prereq)
    total, blocks = _sum_space(d, name)
    return AlgebraData(total, _product_mul(d, total, blocks, with_cocycles=False))


def bicrossed_coproduct(d: InteractionData, name: str = "E",
                        require_prereq: bool = True) -> CoalgebraData:
    """Comultiplication Delta_E = Delta_A + phi + psi on A and
    Delta_H + rho + gamma on H.  Requires zero cycles."""
    if not (d.p.is_zero() and d.q.is_zero()):
        raise ValueError("bicrossed_coproduct needs P = Q = 0; "
                         "use cycle_cross_coproduct")
    _require("not a matched pair of alternative coalgebras",
             check_matched_pair_coalgebras(d, require_prereq=require_prereq),
             require_prereq)
    total, blocks = _sum_space(d, name)
    return CoalgebraData(total, _product_comul(d, total, blocks, with_cycles=False))


def double_cross_biproduct(d: InteractionData, name: str = "E",
                           require_prereq: bool = True) -> BialgebraData:
    """Bicrossed product multiplication with bicrossed coproduct
    comultiplication; a bialgebra exactly when DM1-DM24 hold."""
    if not d.cocycles_are_zero():
        raise ValueError("double_cross_biproduct needs zero cocycle slots; "
                         "use cocycle_bicrossproduct")
    if require_prereq:
        pre = merge_reports(
            "double-cross-prerequisites",
            check_matched_pair_algebras(d),
            check_matched_pair_coalgebras(d),
            check_braided_over_A(d),
            check_braided_over_H(d),
        )
        _require("matched pair / braided prerequisites fail", pre, True)
    total, blocks = _sum_space(d, name)
    return BialgebraData(
        AlgebraData(total, _product_mul(d, total, blocks, with_cocycles=False)),
        CoalgebraData(total, _product_comul(d, total, blocks, with_cycles=False)))


def cocycle_cross_product(d: InteractionData, name: str = "E",
                          require_prereq: bool = True) -> AlgebraData:
    """Multiplication with the sigma/theta correction terms; alternative
    exactly when CP1-CP16 hold."""
    if require_prereq:
        pre = merge_reports(
            "cocycle-cross-prerequisites",
            COCYCLE_SIGMA_SUITE.run(interaction_binding(d)),
            COCYCLE_THETA_SUITE.run(interaction_binding(d)),
            COCYCLE_ALGEBRA_SUITE.run(interaction_binding(d)),
            check_cocycle_cross_system(d),
        )
        _require("not a cocycle cross product system", pre, True)
    total, blocks = _sum_space(d, name)
    return AlgebraData(total, _product_mul(d, total, blocks, with_cocycles=True))


def cycle_cross_coproduct(d: InteractionData, name: str = "E",
                          require_prereq: bool = True) -> CoalgebraData:
    """Comultiplication with the P/Q correction terms; coalternative exactly
    when CCP1-CCP16 hold."""
    if require_prereq:
        pre = merge_reports(
            "cycle-cross-prerequisites",
            CYCLE_P_SUITE.run(interaction_binding(d)),
            CYCLE_Q_SUITE.run(interaction_binding(d)),
            CYCLE_COALGEBRA_SUITE.run(interaction_binding(d)),
            check_cycle_cross_system(d),
        )
        _require("not a cycle cross coproduct system", pre, True)
    total, blocks = _sum_space(d, name)
    return CoalgebraData(total, _product_comul(d, total, blocks, with_cycles=True))


def cocycle_bicrossproduct(d: InteractionData, name: str = "E",
                           require_prereq: bool = True) -> BialgebraData:
    """The most general product: cocycle cross multiplication with cycle cross
    comultiplication; a bialgebra exactly when CDM1-CDM28 hold."""
    if require_prereq:
        pre = merge_reports(
            "cocycle-bicross-prerequisites",
            check_cocycles(d),
            check_cocycle_structures(d),
            check_cocycle_cross_system(d),
            check_cycle_cross_system(d),
            check_cocycle_braided(d),
        )
        _require("cocycle cross system / braided prerequisites fail", pre, True)
    total, blocks = _sum_space(d, name)
    return BialgebraData(
        AlgebraData(total, _product_mul(d, total, blocks, with_cocycles=True)),
        CoalgebraData(total, _product_comul(d, total, blocks, with_cycles=True)))


def from_braided(b: BraidedBialgebraData, host_comul_side: str = "H") -> InteractionData:
    """Repackage a braided bialgebra over its host H as interaction data:
    A = carrier with its braided structure, actions/coactions on the A side,
    everything else zero.  The biproduct of Thm 3.3 is then the double cross
    biproduct of this data."""
    del host_comul_side  # single layout; kept for signature clarity
    carrier = BialgebraData(AlgebraData(b.carrier, b.braided_mul),
                            CoalgebraData(b.carrier, b.braided_comul))
    return InteractionData(A=carrier, H=b.host,
                           rharp=b.hopf.lact, lharp=b.hopf.ract,
                           phi=b.hopf.phi, psi=b.hopf.psi)
