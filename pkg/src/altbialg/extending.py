"""Extending structures: unified products on E = A (+) V and their
classification by bounded search.

A structure on a space E containing A with complement V decomposes into an
*extending datum*: the base structure on A plus interaction maps between A and
V.  Seven kinds are supported, three layers deep:

========  ==========  =====================================================
kind      base        slots (everything else is forbidden)
========  ==========  =====================================================
A1        algebra     rtri, ltri, theta, mulV
A2        algebra     rtri, ltri, rharp, lharp, sigma, mulV
C1        coalgebra   phi, psi, rho, gamma, p, comulV
C2        coalgebra   rho, gamma, q, comulV
TypeI     bialgebra   A1 slots + C1 slots
TypeII    bialgebra   A2 slots + C2 slots
SpecialG  bialgebra   TypeII slots without rharp / lharp
========  ==========  =====================================================

Slot signatures (A is the base space, V the complement):

======  ================  ========================================
slot    signature         meaning
======  ================  ========================================
rtri    A(x)V -> V        left A-action on V   (a |> y)
ltri    V(x)A -> V        right A-action on V  (x <| b)
rharp   V(x)A -> A        left V-action on A   (x -> b)
lharp   A(x)V -> A        right V-action on A  (a <- y)
theta   A(x)A -> V        cocycle on A
sigma   V(x)V -> A        cocycle on V
mulV    V(x)V -> V        multiplication on V
phi     A -> V(x)A        left V-coaction on A
psi     A -> A(x)V        right V-coaction on A
rho     V -> A(x)V        left A-coaction on V
gamma   V -> V(x)A        right A-coaction on V
p       A -> V(x)V        cycle on A
q       V -> A(x)A        cycle on V
comulV  V -> V(x)V        comultiplication on V
======  ================  ========================================

Each kind has a declarative condition suite (A1-A12, B1-B20, C1-C20, D1-D12
and, for bialgebra kinds, additionally E1-E24 / F1-F24 / G1-G24), a
``unified_product`` constructor, an ``extract_datum`` inverse guarded by
:class:`~altbialg.errors.KindMismatch`, morphism-pair checks and a bounded
grid classification with explicit budgets.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .braided import BraidedBialgebraData, HopfBimoduleData
from .conditions import Context, Suite, make_suite
from .directsum import block_sum, direct_sum_space, embed_block, extract_block
from .errors import BudgetExceeded, KindMismatch, PrerequisiteFailed
from .products import InteractionData
from .report import CheckReport, merge_reports, residual_result
from .structures import (AlgebraData, BialgebraData, CoalgebraData, _expect,
                         check_alternative, check_bialgebra,
                         check_coalternative)
from .tensorkit import Binding, Space, Tensor, compose, tensor_product

# ---------------------------------------------------------------------------
# Kinds and the datum record
# ---------------------------------------------------------------------------

ALGEBRA_KINDS = ("A1", "A2")
COALGEBRA_KINDS = ("C1", "C2")
BIALGEBRA_KINDS = ("TypeI", "TypeII", "SpecialG")
KINDS = ALGEBRA_KINDS + COALGEBRA_KINDS + BIALGEBRA_KINDS

_A1_SLOTS = ("rtri", "ltri", "theta", "mulV")
_A2_SLOTS = ("rtri", "ltri", "rharp", "lharp", "sigma", "mulV")
_C1_SLOTS = ("phi", "psi", "rho", "gamma", "p", "comulV")
_C2_SLOTS = ("rho", "gamma", "q", "comulV")

KIND_SLOTS: dict[str, tuple[str, ...]] = {
    "A1": _A1_SLOTS,
    "A2": _A2_SLOTS,
    "C1": _C1_SLOTS,
    "C2": _C2_SLOTS,
    "TypeI": _A1_SLOTS + _C1_SLOTS,
    "TypeII": _A2_SLOTS + _C2_SLOTS,
    "SpecialG": ("rtri", "ltri", "sigma", "mulV") + _C2_SLOTS,
}

_ALL_SLOTS = ("rtri", "ltri", "rharp", "lharp", "theta", "sigma", "mulV",
              "phi", "psi", "rho", "gamma", "p", "q", "comulV")

_BASE_TYPE = {**{k: AlgebraData for k in ALGEBRA_KINDS},
              **{k: CoalgebraData for k in COALGEBRA_KINDS},
              **{k: BialgebraData for k in BIALGEBRA_KINDS}}


def slot_shapes(a: Space, v: Space) -> dict[str, tuple[tuple, tuple]]:
    """(dom, cod) signature of every interaction slot."""
    return {
        "rtri": ((a, v), (v,)), "ltri": ((v, a), (v,)),
        "rharp": ((v, a), (a,)), "lharp": ((a, v), (a,)),
        "theta": ((a, a), (v,)), "sigma": ((v, v), (a,)),
        "mulV": ((v, v), (v,)),
        "phi": ((a,), (v, a)), "psi": ((a,), (a, v)),
        "rho": ((v,), (a, v)), "gamma": ((v,), (v, a)),
        "p": ((a,), (v, v)), "q": ((v,), (a, a)),
        "comulV": ((v,), (v, v)),
    }


@dataclass(frozen=True)
class ExtendingDatum:
    """A base structure on A plus exactly the interaction slots of one kind.

    Slots belonging to the kind default to the zero map; passing a slot the
    kind does not have raises ``ValueError``."""

    kind: str
    base: AlgebraData | CoalgebraData | BialgebraData
    complement: Space
    rtri: Tensor | None = None
    ltri: Tensor | None = None
    rharp: Tensor | None = None
    lharp: Tensor | None = None
    theta: Tensor | None = None
    sigma: Tensor | None = None
    mulV: Tensor | None = None
    phi: Tensor | None = None
    psi: Tensor | None = None
    rho: Tensor | None = None
    gamma: Tensor | None = None
    p: Tensor | None = None
    q: Tensor | None = None
    comulV: Tensor | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown kind {self.kind!r}; expected one of {KINDS}")
        want = _BASE_TYPE[self.kind]
        if not isinstance(self.base, want):
            raise ValueError(f"kind {self.kind} needs a {want.__name__} base, "
                             f"got {type(self.base).__name__}")
        shapes = slot_shapes(self.base.space, self.complement)
        allowed = set(KIND_SLOTS[self.kind])
        for name in _ALL_SLOTS:
            t = getattr(self, name)
            if name not in allowed:
                if t is not None:
                    raise ValueError(f"kind {self.kind} has no slot {name!r}")
                continue
            dom, cod = shapes[name]
            if t is None:
                object.__setattr__(self, name, Tensor.zero(dom, cod))
            else:
                _expect(t, dom, cod, name)

    @property
    def space(self) -> Space:
        return self.base.space

    def slots(self) -> dict[str, Tensor]:
        """The populated slots of this datum's kind, by name."""
        return {name: getattr(self, name) for name in KIND_SLOTS[self.kind]}


def extending_binding(d: ExtendingDatum) -> Binding:
    a, v = d.base.space, d.complement
    shapes = slot_shapes(a, v)
    tensors = {name: getattr(d, name) if getattr(d, name) is not None
               else Tensor.zero(*shapes[name]) for name in _ALL_SLOTS}
    binding = {"rtri": tensors["rtri"], "ltri": tensors["ltri"],
               "rharp": tensors["rharp"], "lharp": tensors["lharp"],
               "theta": tensors["theta"], "sigma": tensors["sigma"],
               "mulV": tensors["mulV"], "DeltaV": tensors["comulV"],
               "phi": tensors["phi"], "psi": tensors["psi"],
               "rho": tensors["rho"], "gamma": tensors["gamma"],
               "P": tensors["p"], "Q": tensors["q"]}
    if isinstance(d.base, (AlgebraData, BialgebraData)):
        binding["mulA"] = d.base.mul
    else:
        binding["mulA"] = Tensor.zero((a, a), (a,))
    if isinstance(d.base, (CoalgebraData, BialgebraData)):
        binding["DeltaA"] = d.base.comul
    else:
        binding["DeltaA"] = Tensor.zero((a,), (a, a))
    return Binding(spaces={"A": a, "V": v}, tensors=binding)


# ---------------------------------------------------------------------------
# The condition language (A and V roles)
# ---------------------------------------------------------------------------

_CTX = Context(
    variables={"a": "A", "b": "A", "c": "A", "x": "V", "y": "V", "z": "V"},
    expansions={
        ("A", "plain", (1, 2)): ("DeltaA", ("A", "A")),
        ("A", "paren", (-1, 0)): ("phi", ("V", "A")),
        ("A", "paren", (0, 1)): ("psi", ("A", "V")),
        ("A", "angle", (1, 2)): ("P", ("V", "V")),
        ("V", "plain", (1, 2)): ("DeltaV", ("V", "V")),
        ("V", "bracket", (-1, 0)): ("rho", ("A", "V")),
        ("V", "bracket", (0, 1)): ("gamma", ("V", "A")),
        ("V", "brace", (1, 2)): ("Q", ("A", "A")),
    },
    ops={
        ("*", "A", "A"): ("mulA", "A"),
        ("*", "V", "V"): ("mulV", "V"),
        ("⇀", "V", "A"): ("rharp", "A"),
        ("↼", "A", "V"): ("lharp", "A"),
        ("▷", "A", "V"): ("rtri", "V"),
        ("◁", "V", "A"): ("ltri", "V"),
    },
    funcs={
        "DeltaA": (("A",), ("A", "A")),
        "DeltaV": (("V",), ("V", "V")),
        "phi": (("A",), ("V", "A")),
        "psi": (("A",), ("A", "V")),
        "rho": (("V",), ("A", "V")),
        "gamma": (("V",), ("V", "A")),
        "sigma": (("V", "V"), ("A",)),
        "theta": (("A", "A"), ("V",)),
        "P": (("A",), ("V", "V")),
        "Q": (("V",), ("A", "A")),
    },
)

# ---------------------------------------------------------------------------
# Kind A1: algebra datum (rtri, ltri, theta, mulV)
# ---------------------------------------------------------------------------

A1_SUITE = make_suite("extending-a1", _CTX, [
    ("A1", "(a*b)▷x + (b*a)▷x + theta(a, b)*x + theta(b, a)*x"
           " = a▷(b▷x) + b▷(a▷x)"),
    ("A2", "(a*b)▷x + theta(a, b)*x + (a▷x)◁b = a▷(b▷x) + a▷(x◁b)"),
    ("A3", "x◁(a*b) + x*theta(a, b) + a▷(x◁b) = (a▷x)◁b + (x◁a)◁b"),
    ("A4", "x◁(a*b) + x◁(b*a) + x*theta(b, a) + x*theta(a, b)"
           " = (x◁a)◁b + (x◁b)◁a"),
    ("A5", "a▷(x*y) + x*(a▷y) = (a▷x)*y + (x◁a)*y"),
    ("A6", "a▷(x*y) + a▷(y*x) = (a▷x)*y + (a▷y)*x"),
    ("A7", "(x*y)◁a + (y*x)◁a = x*(y◁a) + y*(x◁a)"),
    ("A8", "(x*y)◁a + (x◁a)*y = x*(y◁a) + x*(a▷y)"),
    ("A9", "theta(a*b, c) + theta(b*a, c) + theta(a, b)◁c + theta(b, a)◁c"
           " = theta(a, b*c) + theta(b, a*c) + b▷theta(a, c) + a▷theta(b, c)"),
    ("A10", "theta(a*b, c) + theta(a*c, b) + theta(a, b)◁c + theta(a, c)◁b"
            " = theta(a, b*c) + theta(a, c*b) + a▷theta(c, b) + a▷theta(b, c)"),
    ("A11", "(x*y)*z - x*(y*z) = - (y*x)*z + y*(x*z)"),
    ("A12", "(x*y)*z - x*(y*z) = - (x*z)*y + x*(z*y)"),
])

# ---------------------------------------------------------------------------
# Kind A2: algebra datum (rtri, ltri, rharp, lharp, sigma, mulV)
# ---------------------------------------------------------------------------

A2_SUITE = make_suite("extending-a2", _CTX, [
    ("B1", "x⇀(a*b) + a*(x⇀b) + a↼(x◁b)"
           " = (x⇀a)*b + (a↼x)*b + (x◁a)⇀b + (a▷x)⇀b"),
    ("B2", "x⇀(a*b) + x⇀(b*a)"
           " = (x⇀a)*b + (x◁a)⇀b + (x⇀b)*a + (x◁b)⇀a"),
    ("B3", "(a*b)↼x + (a↼x)*b + (a▷x)⇀b"
           " = a*(b↼x) + a*(x⇀b) + a↼(b▷x) + a↼(x◁b)"),
    ("B4", "(a*b)↼x + (b*a)↼x"
           " = a*(b↼x) + a↼(b▷x) + b*(a↼x) + b↼(a▷x)"),
    ("B5", "(x*y)⇀a + (x⇀a)↼y + sigma(x◁a, y) + sigma(x, y)*a"
           " = x⇀(y⇀a) + x⇀(a↼y) + sigma(x, y◁a) + sigma(x, a▷y)"),
    ("B6", "(x*y)⇀a + (y*x)⇀a + sigma(x, y)*a + sigma(y, x)*a"
           " = x⇀(y⇀a) + sigma(x, y◁a) + y⇀(x⇀a) + sigma(y, x◁a)"),
    ("B7", "a↼(x*y) + x⇀(a↼y) + sigma(x, a▷y) + a*sigma(x, y)"
           " = (a↼x)↼y + (x⇀a)↼y + sigma(a▷x, y) + sigma(x◁a, y)"),
    ("B8", "a↼(x*y) + a↼(y*x) + a*sigma(x, y) + a*sigma(y, x)"
           " = (a↼x)↼y + sigma(a▷x, y) + (a↼y)↼x + sigma(a▷y, x)"),
    ("B9", "x◁(a*b) + a▷(x◁b) = (x◁a)◁b + (a▷x)◁b"),
    ("B10", "x◁(a*b) + x◁(b*a) = (x◁a)◁b + (x◁b)◁a"),
    ("B11", "(a*b)▷x + (a▷x)◁b = a▷(b▷x) + a▷(x◁b)"),
    ("B12", "(a*b)▷x + (b*a)▷x = a▷(b▷x) + b▷(a▷x)"),
    ("B13", "(x*y)◁a + (x◁a)*y + (x⇀a)▷y"
            " = x*(y◁a) + x*(a▷y) + x◁(y⇀a) + x◁(a↼y)"),
    ("B14", "(x*y)◁a + (y*x)◁a = x*(y◁a) + x◁(y⇀a) + y*(x◁a) + y◁(x⇀a)"),
    ("B15", "a▷(x*y) + x*(a▷y) + x◁(a↼y)"
            " = (a↼x)▷y + (x⇀a)▷y + (a▷x)*y + (x◁a)*y"),
    ("B16", "a▷(x*y) + a▷(y*x) = (a↼x)▷y + (a▷x)*y + (a↼y)▷x + (a▷y)*x"),
    ("B17", "sigma(x*y, z) + sigma(y, x)↼z + sigma(x, y)↼z + sigma(y*x, z)"
            " = sigma(y, x*z) + sigma(x, y*z) + y⇀sigma(x, z) + x⇀sigma(y, z)"),
    ("B18", "sigma(x*y, z) + sigma(x*z, y) + sigma(x, y)↼z + sigma(x, z)↼y"
            " = sigma(x, z*y) + sigma(x, y*z) + x⇀sigma(z, y) + x⇀sigma(y, z)"),
    ("B19", "(x*y)*z + (y*x)*z + sigma(x, y)▷z + sigma(y, x)▷z"
            " = x*(y*z) + y*(x*z) + y◁sigma(x, z) + x◁sigma(y, z)"),
    ("B20", "(x*y)*z + (x*z)*y + sigma(x, y)▷z + sigma(x, z)▷y"
            " = x*(y*z) + x*(z*y) + x◁sigma(z, y) + x◁sigma(y, z)"),
])

# ---------------------------------------------------------------------------
# Kind C1: coalgebra datum (phi, psi, rho, gamma, p, comulV)
# ---------------------------------------------------------------------------

C1_SUITE = make_suite("extending-c1", _CTX, [
    ("C1", "phi(a_1) ⊗ a_2 + gamma(a_(-1)) ⊗ a_(0) - a_(-1) ⊗ DeltaA(a_(0))"
           " = - tau12(psi(a_1), a_2) - tau12(rho(a_(-1)), a_(0))"
           " + tau12(a_1, phi(a_2)) + tau12(a_(0), gamma(a_(1)))"),
    ("C2", "P(a_1) ⊗ a_2 + DeltaV(a_(-1)) ⊗ a_(0) - a_(-1) ⊗ phi(a_(0))"
           " - a_<1> ⊗ gamma(a_<2>)"
           " = - tau12(P(a_1), a_2) - tau12(DeltaV(a_(-1)), a_(0))"
           " + tau12(a_(-1), phi(a_(0))) + tau12(a_<1>, gamma(a_<2>))"),
    ("C3", "DeltaA(a_(0)) ⊗ a_(1) - a_1 ⊗ psi(a_2) - a_(0) ⊗ rho(a_(1))"
           " = - tau12(DeltaA(a_(0)), a_(1)) + tau12(a_1, psi(a_2))"
           " + tau12(a_(0), rho(a_(1)))"),
    ("C4", "psi(a_(0)) ⊗ a_(1) + rho(a_<1>) ⊗ a_<2> - a_1 ⊗ P(a_2)"
           " - a_(0) ⊗ DeltaV(a_(1))"
           " = - tau12(phi(a_(0)), a_(1)) - tau12(gamma(a_<1>), a_<2>)"
           " + tau12(a_(-1), psi(a_(0))) + tau12(a_<1>, rho(a_<2>))"),
    ("C5", "gamma(x_[0]) ⊗ x_[1] - x_[0] ⊗ DeltaA(x_[1])"
           " = - tau12(rho(x_[0]), x_[1]) + tau12(x_[-1], gamma(x_[0]))"),
    ("C6", "DeltaV(x_[0]) ⊗ x_[1] - x_1 ⊗ gamma(x_2) - x_[0] ⊗ phi(x_[1])"
           " = - tau12(DeltaV(x_[0]), x_[1]) + tau12(x_1, gamma(x_2))"
           " + tau12(x_[0], phi(x_[1]))"),
    ("C7", "DeltaA(x_[-1]) ⊗ x_[0] - x_[-1] ⊗ rho(x_[0])"
           " = - tau12(DeltaA(x_[-1]), x_[0]) + tau12(x_[-1], rho(x_[0]))"),
    ("C8", "rho(x_1) ⊗ x_2 + psi(x_[-1]) ⊗ x_[0] - x_[-1] ⊗ DeltaV(x_[0])"
           " = - tau12(gamma(x_1), x_2) - tau12(phi(x_[-1]), x_[0])"
           " + tau12(x_1, rho(x_2)) + tau12(x_[0], psi(x_[1]))"),
    ("C9", "phi(a_1) ⊗ a_2 + gamma(a_(-1)) ⊗ a_(0) - a_(-1) ⊗ DeltaA(a_(0))"
           " = - tau23(phi(a_1), a_2) - tau23(gamma(a_(-1)), a_(0))"
           " + tau23(a_(-1), DeltaA(a_(0)))"),
    ("C10", "P(a_1) ⊗ a_2 + DeltaV(a_(-1)) ⊗ a_(0) - a_(-1) ⊗ phi(a_(0))"
            " - a_<1> ⊗ gamma(a_<2>)"
            " = - tau23(phi(a_(0)), a_(1)) - tau23(gamma(a_<1>), a_<2>)"
            " + tau23(a_(-1), psi(a_(0))) + tau23(a_<1>, rho(a_<2>))"),
    ("C11", "DeltaA(a_(0)) ⊗ a_(1) - a_1 ⊗ psi(a_2) - a_(0) ⊗ rho(a_(1))"
            " = - tau23(psi(a_1), a_2) - tau23(rho(a_(-1)), a_(0))"
            " + tau23(a_1, phi(a_2)) + tau23(a_(0), gamma(a_(1)))"),
    ("C12", "psi(a_(0)) ⊗ a_(1) + rho(a_<1>) ⊗ a_<2> - a_1 ⊗ P(a_2)"
            " - a_(0) ⊗ DeltaV(a_(1))"
            " = - tau23(psi(a_(0)), a_(1)) - tau23(rho(a_<1>), a_<2>)"
            " + tau23(a_1, P(a_2)) + tau23(a_(0), DeltaV(a_(1)))"),
    ("C13", "gamma(x_[0]) ⊗ x_[1] - x_[0] ⊗ DeltaA(x_[1])"
            " = - tau23(gamma(x_[0]), x_[1]) + tau23(x_[0], DeltaA(x_[1]))"),
    ("C14", "DeltaV(x_[0]) ⊗ x_[1] - x_1 ⊗ gamma(x_2) - x_[0] ⊗ phi(x_[1])"
            " = - tau23(phi(x_[-1]), x_[0]) - tau23(gamma(x_1), x_2)"
            " + tau23(x_1, rho(x_2)) + tau23(x_[0], psi(x_[1]))"),
    ("C15", "DeltaA(x_[-1]) ⊗ x_[0] - x_[-1] ⊗ rho(x_[0])"
            " = - tau23(rho(x_[0]), x_[1]) + tau23(x_[-1], gamma(x_[0]))"),
    ("C16", "rho(x_1) ⊗ x_2 + psi(x_[-1]) ⊗ x_[0] - x_[-1] ⊗ DeltaV(x_[0])"
            " = - tau23(rho(x_1), x_2) - tau23(psi(x_[-1]), x_[0])"
            " + tau23(x_[-1], DeltaV(x_[0]))"),
    ("C17", "DeltaV(a_<1>) ⊗ a_<2> + P(a_(0)) ⊗ a_(1) - a_(-1) ⊗ P(a_(0))"
            " - a_<1> ⊗ DeltaV(a_<2>)"
            " = - tau12(DeltaV(a_<1>), a_<2>) - tau12(P(a_(0)), a_(1))"
            " + tau12(a_(-1), P(a_(0))) + tau12(a_<1>, DeltaV(a_<2>))"),
    ("C18", "DeltaV(a_<1>) ⊗ a_<2> + P(a_(0)) ⊗ a_(1) - a_(-1) ⊗ P(a_(0))"
            " - a_<1> ⊗ DeltaV(a_<2>)"
            " = - tau23(DeltaV(a_<1>), a_<2>) - tau23(P(a_(0)), a_(1))"
            " + tau23(a_(-1), P(a_(0))) + tau23(a_<1>, DeltaV(a_<2>))"),
    ("C19", "DeltaV(x_1) ⊗ x_2 + P(x_[-1]) ⊗ x_[0] - x_1 ⊗ DeltaV(x_2)"
            " - x_[0] ⊗ P(x_[1])"
            " = - tau12(DeltaV(x_1), x_2) - tau12(P(x_[-1]), x_[0])"
            " + tau12(x_1, DeltaV(x_2)) + tau12(x_[0], P(x_[1]))"),
    ("C20", "DeltaV(x_1) ⊗ x_2 + P(x_[-1]) ⊗ x_[0] - x_1 ⊗ DeltaV(x_2)"
            " - x_[0] ⊗ P(x_[1])"
            " = - tau23(DeltaV(x_1), x_2) - tau23(P(x_[-1]), x_[0])"
            " + tau23(x_1, DeltaV(x_2)) + tau23(x_[0], P(x_[1]))"),
])

# ---------------------------------------------------------------------------
# Kind C2: coalgebra datum (rho, gamma, q, comulV)
# ---------------------------------------------------------------------------

C2_SUITE = make_suite("extending-c2", _CTX, [
    ("D1", "gamma(x_[0]) ⊗ x_[1] - x_1 ⊗ Q(x_2) - x_[0] ⊗ DeltaA(x_[1])"
           " = - tau12(rho(x_[0]), x_[1]) + tau12(x_[-1], gamma(x_[0]))"),
    ("D2", "DeltaV(x_[0]) ⊗ x_[1] - x_1 ⊗ gamma(x_2)"
           " = - tau12(DeltaV(x_[0]), x_[1]) + tau12(x_1, gamma(x_2))"),
    ("D3", "Q(x_1) ⊗ x_2 + DeltaA(x_[-1]) ⊗ x_[0] - x_[-1] ⊗ rho(x_[0])"
           " = - tau12(Q(x_1), x_2) - tau12(DeltaA(x_[-1]), x_[0])"
           " + tau12(x_[-1], rho(x_[0]))"),
    ("D4", "rho(x_1) ⊗ x_2 - x_[-1] ⊗ DeltaV(x_[0])"
           " = - tau12(gamma(x_1), x_2) + tau12(x_1, rho(x_2))"),
    ("D5", "gamma(x_[0]) ⊗ x_[1] - x_1 ⊗ Q(x_2) - x_[0] ⊗ DeltaA(x_[1])"
           " = - tau23(gamma(x_[0]), x_[1]) + tau23(x_1, Q(x_2))"
           " + tau23(x_[0], DeltaA(x_[1]))"),
    ("D6", "DeltaV(x_[0]) ⊗ x_[1] - x_1 ⊗ gamma(x_2)"
           " = - tau23(gamma(x_1), x_2) + tau23(x_1, rho(x_2))"),
    ("D7", "Q(x_1) ⊗ x_2 + DeltaA(x_[-1]) ⊗ x_[0] - x_[-1] ⊗ rho(x_[0])"
           " = - tau23(rho(x_[0]), x_[1]) + tau23(x_[-1], gamma(x_[0]))"),
    ("D8", "rho(x_1) ⊗ x_2 - x_[-1] ⊗ DeltaV(x_[0])"
           " = - tau23(rho(x_1), x_2) + tau23(x_[-1], DeltaV(x_[0]))"),
    ("D9", "DeltaA(x_{1}) ⊗ x_{2} + Q(x_[0]) ⊗ x_[1] - x_{1} ⊗ DeltaA(x_{2})"
           " - x_[-1] ⊗ Q(x_[0])"
           " = - tau12(DeltaA(x_{1}), x_{2}) - tau12(Q(x_[0]), x_[1])"
           " + tau12(x_{1}, DeltaA(x_{2})) + tau12(x_[-1], Q(x_[0]))"),
    ("D10", "DeltaA(x_{1}) ⊗ x_{2} + Q(x_[0]) ⊗ x_[1] - x_{1} ⊗ DeltaA(x_{2})"
            " - x_[-1] ⊗ Q(x_[0])"
            " = - tau23(DeltaA(x_{1}), x_{2}) - tau23(Q(x_[0]), x_[1])"
            " + tau23(x_{1}, DeltaA(x_{2})) + tau23(x_[-1], Q(x_[0]))"),
    ("D11", "DeltaV(x_1) ⊗ x_2 - x_1 ⊗ DeltaV(x_2)"
            " = - tau12(DeltaV(x_1), x_2) + tau12(x_1, DeltaV(x_2))"),
    ("D12", "DeltaV(x_1) ⊗ x_2 - x_1 ⊗ DeltaV(x_2)"
            " = - tau23(DeltaV(x_1), x_2) + tau23(x_1, DeltaV(x_2))"),
])

# ---------------------------------------------------------------------------
# Kind TypeI: bialgebra compatibility E1-E24
# ---------------------------------------------------------------------------

# In E7/E22 (and F7/F22, G7/G22 below) the shorthand "P(a, b)" / "Q(x, y)"
# denotes the cycle applied to the product, P(a*b) and Q(x*y): the only
# reading with the declared signatures P: A -> V(x)V and Q: V -> A(x)A, and
# the one matching the expansion of Delta_E of a product into components.
EFG_NOTE = "P(a,b) and Q(x,y) read as P(a*b) and Q(x*y)"

TYPE_I_SUITE = make_suite("extending-type-I", _CTX, [
    ("E1", "phi(a*b) + gamma(theta(a, b))"
           " = - a_(1) ⊗ b*a_(0) + b_(-1) ⊗ a*b_(0) + b_(-1) ⊗ b_(0)*a"
           " + (a_(-1)◁b) ⊗ a_(0) + (a_(1)◁b) ⊗ a_(0) - (a▷b_(-1)) ⊗ b_(0)"
           " + theta(a_1, b) ⊗ a_2 + theta(a_2, b) ⊗ a_1 - theta(a, b_1) ⊗ b_2"),
    ("E2", "psi(a*b) + rho(theta(a, b))"
           " = a_(0)*b ⊗ a_(1) + a_(0)*b ⊗ a_(-1) - a*b_(0) ⊗ b_(1)"
           " - a_(0) ⊗ (b▷a_(-1)) + b_(0) ⊗ (a▷b_(1)) + b_(0) ⊗ (b_(1)◁a)"
           " + b_1 ⊗ theta(a, b_2) + b_1 ⊗ theta(b_2, a) - a_2 ⊗ theta(b, a_1)"),
    ("E3", "rho(x*y) = - x_[1] ⊗ y*x_[0] + y_[-1] ⊗ x*y_[0] + y_[-1] ⊗ y_[0]*x"),
    ("E4", "gamma(x*y) = x_[0]*y ⊗ x_[1] + x_[0]*y ⊗ x_[-1] - x*y_[0] ⊗ y_[1]"),
    ("E5", "DeltaV(a▷y)"
           " = (a_(0)▷y) ⊗ a_(1) + (a_(0)▷y) ⊗ a_(-1) - a_(1) ⊗ (y◁a_(0))"
           " + y_1 ⊗ (a▷y_2) + y_1 ⊗ (y_2◁a) - (a▷y_1) ⊗ y_2"
           " + y_[0] ⊗ theta(a, y_[1]) + y_[0] ⊗ theta(y_[1], a)"
           " - theta(a, y_[-1]) ⊗ y_[0]"
           " + a_<1>*y ⊗ a_<2> + a_<2>*y ⊗ a_<1> - a_<2> ⊗ y*a_<1>"),
    ("E6", "DeltaV(x◁b)"
           " = (x_1◁b) ⊗ x_2 + (x_2◁b) ⊗ x_1 - x_2 ⊗ (b▷x_1)"
           " + b_(-1) ⊗ (x◁b_(0)) + b_(-1) ⊗ (b_(0)▷x) - (x◁b_(0)) ⊗ b_(1)"
           " + theta(x_[-1], b) ⊗ x_[0] + theta(x_[1], b) ⊗ x_[0]"
           " - x_[0] ⊗ theta(b, x_[-1])"
           " + b_<1> ⊗ x*b_<2> + b_<1> ⊗ b_<2>*x - x*b_<1> ⊗ b_<2>"),
    ("E7", "DeltaV(theta(a, b)) + P(a*b)"
           " = theta(a_(0), b) ⊗ a_(1) + theta(a_(0), b) ⊗ a_(-1)"
           " - theta(a, b_(0)) ⊗ b_(1) + b_(-1) ⊗ theta(a, b_(0))"
           " + b_(-1) ⊗ theta(b_(0), a) - a_(1) ⊗ theta(b, a_(0))"
           " + (a_<1>◁b) ⊗ a_<2> + (a_<2>◁b) ⊗ a_<1> - (a▷b_<1>) ⊗ b_<2>"
           " + b_<1> ⊗ (a▷b_<2>) + b_<1> ⊗ (b_<2>◁a) - a_<2> ⊗ (b▷a_<1>)"),
    ("E8", "gamma(x◁b) = (x_[0]◁b) ⊗ x_[1] + (x_[0]◁b) ⊗ x_[-1]"
           " - x_[0] ⊗ b*x_[-1] - (x◁b_1) ⊗ b_2 - x*b_(-1) ⊗ b_(0)"),
    ("E9", "rho(a▷y) = - a_2 ⊗ (y◁a_1) - a_(0) ⊗ y*a_(-1)"
           " + y_[-1] ⊗ (a▷y_[0]) + y_[-1] ⊗ (y_[0]◁a) - a*y_[-1] ⊗ y_[0]"),
    ("E10", "rho(x◁b) = x_[-1]*b ⊗ x_[0] + x_[1]*b ⊗ x_[0] - x_[1] ⊗ (b▷x_[0])"
            " + b_1 ⊗ (x◁b_2) + b_(0) ⊗ x*b_(1) + b_1 ⊗ (b_2▷x)"
            " + b_(0) ⊗ b_(1)*x"),
    ("E11", "gamma(a▷y) = (a_1▷y) ⊗ a_2 + a_(-1)*y ⊗ a_(0) + (a_2▷y) ⊗ a_1"
            " + a_(1)*y ⊗ a_(0) + y_[0] ⊗ a*y_[1] + y_[0] ⊗ y_[1]*a"
            " - (a▷y_[0]) ⊗ y_[1]"),
    ("E12", "phi(b*a) + gamma(theta(b, a)) + tau(psi(b*a)) + tau(rho(theta(b, a)))"
            " = a_(-1) ⊗ b*a_(0) + (b▷a_(1)) ⊗ a_(0) + (b_(-1)◁a) ⊗ b_(0)"
            " + b_(1) ⊗ b_(0)*a + theta(b, a_2) ⊗ a_1 + theta(b_1, a) ⊗ b_2"),
    ("E13", "psi(b*a) + rho(theta(b, a)) + tau(phi(b*a)) + tau(gamma(theta(b, a)))"
            " = a_(0) ⊗ (b▷a_(1)) + b*a_(0) ⊗ a_(-1) + b_(0)*a ⊗ b_(1)"
            " + b_(0) ⊗ (b_(-1)◁a) + a_1 ⊗ theta(b, a_2) + b_2 ⊗ theta(b_1, a)"),
    ("E14", "rho(y*x) + tau(gamma(y*x)) = x_[-1] ⊗ y*x_[0] + y_[1] ⊗ y_[0]*x"),
    ("E15", "gamma(y*x) + tau(rho(y*x)) = y*x_[0] ⊗ x_[-1] + y_[0]*x ⊗ y_[1]"),
    ("E16", "DeltaV(y◁a) + tau(DeltaV(y◁a))"
            " = a_(-1) ⊗ (y◁a_(0)) + (y◁a_(0)) ⊗ a_(-1)"
            " + (y_1◁a) ⊗ y_2 + y_2 ⊗ (y_1◁a)"
            " + a_<1> ⊗ y*a_<2> + y*a_<2> ⊗ a_<1>"
            " + theta(y_[-1], a) ⊗ y_[0] + y_[0] ⊗ theta(y_[-1], a)"),
    ("E17", "DeltaV(b▷x) + tau(DeltaV(b▷x))"
            " = x_1 ⊗ (b▷x_2) + (b▷x_2) ⊗ x_1"
            " + (b_(0)▷x) ⊗ b_(1) + b_(1) ⊗ (b_(0)▷x)"
            " + x_[0] ⊗ theta(b, x_[1]) + theta(b, x_[1]) ⊗ x_[0]"
            " + b_<1>*x ⊗ b_<2> + b_<2> ⊗ b_<1>*x"),
    ("E18", "gamma(y◁a) + tau(rho(y◁a)) = (y◁a_2) ⊗ a_1 + y*a_(1) ⊗ a_(0)"
            " + y_[0] ⊗ y_[-1]*a + (y_[0]◁a) ⊗ y_[1]"),
    ("E19", "gamma(b▷x) + tau(rho(b▷x)) = x_[0] ⊗ b*x_[1] + (b▷x_[0]) ⊗ x_[-1]"
            " + (b_1▷x) ⊗ b_2 + b_(-1)*x ⊗ b_(0)"),
    ("E20", "rho(y◁a) + tau(gamma(y◁a)) = a_1 ⊗ (y◁a_2) + a_(0) ⊗ y*a_(1)"
            " + y_[-1]*a ⊗ y_[0] + y_[1] ⊗ (y_[0]◁a)"),
    ("E21", "rho(b▷x) + tau(gamma(b▷x)) = x_[-1] ⊗ (b▷x_[0]) + b*x_[1] ⊗ x_[0]"
            " + b_2 ⊗ (b_1▷x) + b_(0) ⊗ b_(-1)*x"),
    ("E22", "P(b*a) + DeltaV(theta(b, a)) + tau(P(b*a)) + tau(DeltaV(theta(b, a)))"
            " = a_(-1) ⊗ theta(b, a_(0)) + theta(b, a_(0)) ⊗ a_(-1)"
            " + a_<1> ⊗ (b▷a_<2>) + (b▷a_<2>) ⊗ a_<1>"
            " + theta(b_(0), a) ⊗ b_(1) + b_(1) ⊗ theta(b_(0), a)"
            " + (b_<1>◁a) ⊗ b_<2> + b_<2> ⊗ (b_<1>◁a)"),
    ("E23", "DeltaV(x*y)"
            " = x_1*y ⊗ x_2 + x_2*y ⊗ x_1 - x_2 ⊗ y*x_1"
            " + y_1 ⊗ x*y_2 + y_1 ⊗ y_2*x - x*y_1 ⊗ y_2"
            " + (x_[-1]▷y) ⊗ x_[0] + (x_[1]▷y) ⊗ x_[0] - x_[0] ⊗ (y◁x_[-1])"
            " + y_[0] ⊗ (x◁y_[1]) + y_[0] ⊗ (y_[1]▷x) - (x◁y_[-1]) ⊗ y_[0]"),
    ("E24", "DeltaV(y*x) + tau(DeltaV(y*x))"
            " = x_1 ⊗ y*x_2 + y*x_2 ⊗ x_1 + y_1*x ⊗ y_2 + y_2 ⊗ y_1*x"
            " + x_[0] ⊗ (y◁x_[1]) + (y◁x_[1]) ⊗ x_[0]"
            " + (y_[-1]▷x) ⊗ y_[0] + y_[0] ⊗ (y_[-1]▷x)"),
])

# ---------------------------------------------------------------------------
# Kind TypeII: bialgebra compatibility F1-F24
# ---------------------------------------------------------------------------

TYPE_II_SUITE = make_suite("extending-type-II", _CTX, [
    ("F1", "rho(x*y)"
           " = (x_[1]↼y) ⊗ x_[0] + (x_[-1]↼y) ⊗ x_[0] - x_[1] ⊗ y*x_[0]"
           " - (x⇀y_[-1]) ⊗ y_[0] + y_[-1] ⊗ x*y_[0] + y_[-1] ⊗ y_[0]*x"
           " + sigma(x_1, y) ⊗ x_2 + sigma(x_2, y) ⊗ x_1 - sigma(x, y_1) ⊗ y_2"
           " + y_{1} ⊗ (y_{2}▷x) + y_{1} ⊗ (x◁y_{2}) - x_{2} ⊗ (y◁x_{1})"),
    ("F2", "gamma(x*y)"
           " = x_[0]*y ⊗ x_[1] + x_[0]*y ⊗ x_[-1] - x_[0] ⊗ (y⇀x_[-1])"
           " - x*y_[0] ⊗ y_[1] + y_[0] ⊗ (x⇀y_[1]) + y_[0] ⊗ (y_[1]↼x)"
           " + (x_{1}▷y) ⊗ x_{2} + (x_{2}▷y) ⊗ x_{1} - x_2 ⊗ sigma(y, x_1)"
           " + y_1 ⊗ sigma(x, y_2) + y_1 ⊗ sigma(y_2, x) - (x◁y_{1}) ⊗ y_{2}"),
    ("F3", "DeltaA(x⇀b) + Q(x◁b)"
           " = (x_[0]⇀b) ⊗ x_[1] + (x_[0]⇀b) ⊗ x_[-1] - x_[1] ⊗ (b↼x_[0])"
           " - (x⇀b_1) ⊗ b_2 + b_1 ⊗ (x⇀b_2) + b_1 ⊗ (b_2↼x)"
           " + x_{1}*b ⊗ x_{2} + x_{2}*b ⊗ x_{1} - x_{2} ⊗ b*x_{1}"),
    ("F4", "DeltaA(a↼y) + Q(a▷y)"
           " = (a_1↼y) ⊗ a_2 + (a_2↼y) ⊗ a_1 - a_2 ⊗ (y⇀a_1)"
           " - (a↼y_[0]) ⊗ y_[1] + y_[-1] ⊗ (a↼y_[0]) + y_[-1] ⊗ (y_[0]⇀a)"
           " + y_{1} ⊗ a*y_{2} + y_{1} ⊗ y_{2}*a - a*y_{1} ⊗ y_{2}"),
    ("F5", "DeltaV(a▷y) = y_1 ⊗ (a▷y_2) + y_1 ⊗ (y_2◁a) - (a▷y_1) ⊗ y_2"),
    ("F6", "DeltaV(x◁b) = (x_1◁b) ⊗ x_2 + (x_2◁b) ⊗ x_1 - x_2 ⊗ (b▷x_1)"),
    ("F7", "DeltaA(sigma(x, y)) + Q(x*y)"
           " = sigma(x_[0], y) ⊗ x_[1] + sigma(x_[0], y) ⊗ x_[-1]"
           " - sigma(x, y_[0]) ⊗ y_[1] + y_[-1] ⊗ sigma(x, y_[0])"
           " + y_[-1] ⊗ sigma(y_[0], x) - x_[1] ⊗ sigma(y, x_[0])"
           " + (x_{1}↼y) ⊗ x_{2} + (x_{2}↼y) ⊗ x_{1} - x_{2} ⊗ (y⇀x_{1})"
           " + y_{1} ⊗ (x⇀y_{2}) + y_{1} ⊗ (y_{2}↼x) - (x⇀y_{1}) ⊗ y_{2}"),
    ("F8", "gamma(x◁b) = (x_[0]◁b) ⊗ x_[1] + (x_[0]◁b) ⊗ x_[-1]"
           " - x_2 ⊗ (b↼x_1) - x_[0] ⊗ b*x_[-1] - (x◁b_1) ⊗ b_2"),
    ("F9", "gamma(a▷y) = (a_1▷y) ⊗ a_2 + (a_2▷y) ⊗ a_1 + y_1 ⊗ (a↼y_2)"
           " + y_[0] ⊗ a*y_[1] + y_1 ⊗ (y_2⇀a) + y_[0] ⊗ y_[1]*a"
           " - (a▷y_[0]) ⊗ y_[1]"),
    ("F10", "rho(a▷y) = - a_2 ⊗ (y◁a_1) + y_[-1] ⊗ (a▷y_[0]) - (a↼y_1) ⊗ y_2"
            " + y_[-1] ⊗ (y_[0]◁a) - a*y_[-1] ⊗ y_[0]"),
    ("F11", "rho(x◁b) = (x_1⇀b) ⊗ x_2 + x_[-1]*b ⊗ x_[0] + (x_2⇀b) ⊗ x_1"
            " + x_[1]*b ⊗ x_[0] - x_[1] ⊗ (b▷x_[0]) + b_1 ⊗ (x◁b_2)"
            " + b_1 ⊗ (b_2▷x)"),
    ("F12", "rho(y*x) + tau(gamma(y*x))"
            " = x_[-1] ⊗ y*x_[0] + (y⇀x_[1]) ⊗ x_[0] + (y_[-1]↼x) ⊗ y_[0]"
            " + y_[1] ⊗ y_[0]*x + x_{1} ⊗ (y◁x_{2}) + y_{2} ⊗ (y_{1}▷x)"
            " + sigma(y, x_2) ⊗ x_1 + sigma(y_1, x) ⊗ y_2"),
    ("F13", "gamma(y*x) + tau(rho(y*x))"
            " = y*x_[0] ⊗ x_[-1] + y_[0]*x ⊗ y_[1] + y_[0] ⊗ (y_[-1]↼x)"
            " + x_[0] ⊗ (y⇀x_[1]) + x_1 ⊗ sigma(y, x_2) + y_2 ⊗ sigma(y_1, x)"
            " + (y◁x_{2}) ⊗ x_{1} + (y_{1}▷x) ⊗ y_{2}"),
    ("F14", "DeltaA(b↼x) + Q(b▷x) + tau(DeltaA(b↼x)) + tau(Q(b▷x))"
            " = x_[-1] ⊗ (b↼x_[0]) + (b↼x_[0]) ⊗ x_[-1]"
            " + (b_1↼x) ⊗ b_2 + b_2 ⊗ (b_1↼x)"
            " + x_{1} ⊗ b*x_{2} + b*x_{2} ⊗ x_{1}"),
    ("F15", "DeltaA(y⇀a) + Q(y◁a) + tau(DeltaA(y⇀a)) + tau(Q(y◁a))"
            " = a_1 ⊗ (y⇀a_2) + (y⇀a_2) ⊗ a_1"
            " + (y_[0]⇀a) ⊗ y_[1] + y_[1] ⊗ (y_[0]⇀a)"
            " + y_{1}*a ⊗ y_{2} + y_{2} ⊗ y_{1}*a"),
    ("F16", "DeltaV(y◁a) + tau(DeltaV(y◁a)) = (y_1◁a) ⊗ y_2 + y_2 ⊗ (y_1◁a)"),
    ("F17", "DeltaV(b▷x) + tau(DeltaV(b▷x)) = x_1 ⊗ (b▷x_2) + (b▷x_2) ⊗ x_1"),
    ("F18", "gamma(y◁a) + tau(rho(y◁a)) = (y◁a_2) ⊗ a_1 + (y_[0]◁a) ⊗ y_[1]"
            " + y_2 ⊗ (y_1⇀a) + y_[0] ⊗ y_[-1]*a"),
    ("F19", "gamma(b▷x) + tau(rho(b▷x)) = x_1 ⊗ (b↼x_2) + x_[0] ⊗ b*x_[1]"
            " + (b▷x_[0]) ⊗ x_[-1] + (b_1▷x) ⊗ b_2"),
    ("F20", "rho(y◁a) + tau(gamma(y◁a)) = a_1 ⊗ (y◁a_2) + (y_1⇀a) ⊗ y_2"
            " + y_[-1]*a ⊗ y_[0] + y_[1] ⊗ (y_[0]◁a)"),
    ("F21", "rho(b▷x) + tau(gamma(b▷x)) = x_[-1] ⊗ (b▷x_[0]) + (b↼x_2) ⊗ x_1"
            " + b*x_[1] ⊗ x_[0] + b_2 ⊗ (b_1▷x)"),
    ("F22", "DeltaA(sigma(y, x)) + Q(y*x) + tau(DeltaA(sigma(y, x))) + tau(Q(y*x))"
            " = x_[-1] ⊗ sigma(y, x_[0]) + sigma(y, x_[0]) ⊗ x_[-1]"
            " + x_{1} ⊗ (y⇀x_{2}) + (y⇀x_{2}) ⊗ x_{1}"
            " + sigma(y_[0], x) ⊗ y_[1] + y_[1] ⊗ sigma(y_[0], x)"
            " + (y_{1}↼x) ⊗ y_{2} + y_{2} ⊗ (y_{1}↼x)"),
    ("F23", "DeltaV(x*y)"
            " = x_1*y ⊗ x_2 + x_2*y ⊗ x_1 - x_2 ⊗ y*x_1"
            " + y_1 ⊗ x*y_2 + y_1 ⊗ y_2*x - x*y_1 ⊗ y_2"
            " + (x_[-1]▷y) ⊗ x_[0] + (x_[1]▷y) ⊗ x_[0] - x_[0] ⊗ (y◁x_[-1])"
            " + y_[0] ⊗ (x◁y_[1]) + y_[0] ⊗ (y_[1]▷x) - (x◁y_[-1]) ⊗ y_[0]"),
    ("F24", "DeltaV(y*x) + tau(DeltaV(y*x))"
            " = x_1 ⊗ y*x_2 + y*x_2 ⊗ x_1 + y_1*x ⊗ y_2 + y_2 ⊗ y_1*x"
            " + x_[0] ⊗ (y◁x_[1]) + (y◁x_[1]) ⊗ x_[0]"
            " + (y_[-1]▷x) ⊗ y_[0] + y_[0] ⊗ (y_[-1]▷x)"),
])

# ---------------------------------------------------------------------------
# Kind SpecialG: TypeII with trivial harpoons, compatibility G1-G24
# ---------------------------------------------------------------------------

SPECIAL_G_SUITE = make_suite("extending-special-G", _CTX, [
    ("G1", "rho(x*y)"
           " = - x_[1] ⊗ y*x_[0] + y_[-1] ⊗ x*y_[0] + y_[-1] ⊗ y_[0]*x"
           " + sigma(x_1, y) ⊗ x_2 + sigma(x_2, y) ⊗ x_1 - sigma(x, y_1) ⊗ y_2"
           " + y_{1} ⊗ (y_{2}▷x) + y_{1} ⊗ (x◁y_{2}) - x_{2} ⊗ (y◁x_{1})"),
    ("G2", "gamma(x*y)"
           " = x_[0]*y ⊗ x_[1] + x_[0]*y ⊗ x_[-1] - x*y_[0] ⊗ y_[1]"
           " + (x_{1}▷y) ⊗ x_{2} + (x_{2}▷y) ⊗ x_{1} - x_2 ⊗ sigma(y, x_1)"
           " + y_1 ⊗ sigma(x, y_2) + y_1 ⊗ sigma(y_2, x) - (x◁y_{1}) ⊗ y_{2}"),
    ("G3", "Q(x◁b) = x_{1}*b ⊗ x_{2} + x_{2}*b ⊗ x_{1} - x_{2} ⊗ b*x_{1}"),
    ("G4", "Q(a▷y) = y_{1} ⊗ a*y_{2} + y_{1} ⊗ y_{2}*a - a*y_{1} ⊗ y_{2}"),
    ("G5", "DeltaV(a▷y) = y_1 ⊗ (a▷y_2) + y_1 ⊗ (y_2◁a) - (a▷y_1) ⊗ y_2"),
    ("G6", "DeltaV(x◁b) = (x_1◁b) ⊗ x_2 + (x_2◁b) ⊗ x_1 - x_2 ⊗ (b▷x_1)"),
    ("G7", "DeltaA(sigma(x, y)) + Q(x*y)"
           " = sigma(x_[0], y) ⊗ x_[1] + sigma(x_[0], y) ⊗ x_[-1]"
           " - sigma(x, y_[0]) ⊗ y_[1] + y_[-1] ⊗ sigma(x, y_[0])"
           " + y_[-1] ⊗ sigma(y_[0], x) - x_[1] ⊗ sigma(y, x_[0])"),
    ("G8", "gamma(x◁b) = (x_[0]◁b) ⊗ x_[1] + (x_[0]◁b) ⊗ x_[-1]"
           " - x_[0] ⊗ b*x_[-1] - (x◁b_1) ⊗ b_2"),
    ("G9", "rho(a▷y) = - a_2 ⊗ (y◁a_1) + y_[-1] ⊗ (a▷y_[0])"
           " + y_[-1] ⊗ (y_[0]◁a) - a*y_[-1] ⊗ y_[0]"),
    ("G10", "rho(x◁b) = x_[-1]*b ⊗ x_[0] + x_[1]*b ⊗ x_[0] - x_[1] ⊗ (b▷x_[0])"
            " + b_1 ⊗ (x◁b_2) + b_1 ⊗ (b_2▷x)"),
    ("G11", "gamma(a▷y) = (a_1▷y) ⊗ a_2 + (a_2▷y) ⊗ a_1 + y_[0] ⊗ a*y_[1]"
            " + y_[0] ⊗ y_[1]*a - (a▷y_[0]) ⊗ y_[1]"),
    ("G12", "rho(y*x) + tau(gamma(y*x))"
            " = x_[-1] ⊗ y*x_[0] + y_[1] ⊗ y_[0]*x + x_{1} ⊗ (y◁x_{2})"
            " + y_{2} ⊗ (y_{1}▷x) + sigma(y, x_2) ⊗ x_1 + sigma(y_1, x) ⊗ y_2"),
    ("G13", "gamma(y*x) + tau(rho(y*x))"
            " = y*x_[0] ⊗ x_[-1] + y_[0]*x ⊗ y_[1] + x_1 ⊗ sigma(y, x_2)"
            " + y_2 ⊗ sigma(y_1, x) + (y◁x_{2}) ⊗ x_{1} + (y_{1}▷x) ⊗ y_{2}"),
    ("G14", "Q(b▷x) + tau(Q(b▷x)) = x_{1} ⊗ b*x_{2} + b*x_{2} ⊗ x_{1}"),
    ("G15", "Q(y◁a) + tau(Q(y◁a)) = y_{1}*a ⊗ y_{2} + y_{2} ⊗ y_{1}*a"),
    ("G16", "DeltaV(y◁a) + tau(DeltaV(y◁a)) = (y_1◁a) ⊗ y_2 + y_2 ⊗ (y_1◁a)"),
    ("G17", "DeltaV(b▷x) + tau(DeltaV(b▷x)) = x_1 ⊗ (b▷x_2) + (b▷x_2) ⊗ x_1"),
    ("G18", "gamma(y◁a) + tau(rho(y◁a)) = (y◁a_2) ⊗ a_1 + (y_[0]◁a) ⊗ y_[1]"
            " + y_[0] ⊗ y_[-1]*a"),
    ("G19", "gamma(b▷x) + tau(rho(b▷x)) = x_[0] ⊗ b*x_[1]"
            " + (b▷x_[0]) ⊗ x_[-1] + (b_1▷x) ⊗ b_2"),
    ("G20", "rho(y◁a) + tau(gamma(y◁a)) = a_1 ⊗ (y◁a_2) + y_[-1]*a ⊗ y_[0]"
            " + y_[1] ⊗ (y_[0]◁a)"),
    ("G21", "rho(b▷x) + tau(gamma(b▷x)) = x_[-1] ⊗ (b▷x_[0])"
            " + b*x_[1] ⊗ x_[0] + b_2 ⊗ (b_1▷x)"),
    ("G22", "DeltaA(sigma(y, x)) + Q(y*x) + tau(DeltaA(sigma(y, x))) + tau(Q(y*x))"
            " = x_[-1] ⊗ sigma(y, x_[0]) + sigma(y, x_[0]) ⊗ x_[-1]"
            " + sigma(y_[0], x) ⊗ y_[1] + y_[1] ⊗ sigma(y_[0], x)"),
    ("G23", "DeltaV(x*y)"
            " = x_1*y ⊗ x_2 + x_2*y ⊗ x_1 - x_2 ⊗ y*x_1"
            " + y_1 ⊗ x*y_2 + y_1 ⊗ y_2*x - x*y_1 ⊗ y_2"
            " + (x_[-1]▷y) ⊗ x_[0] + (x_[1]▷y) ⊗ x_[0] - x_[0] ⊗ (y◁x_[-1])"
            " + y_[0] ⊗ (x◁y_[1]) + y_[0] ⊗ (y_[1]▷x) - (x◁y_[-1]) ⊗ y_[0]"),
    ("G24", "DeltaV(y*x) + tau(DeltaV(y*x))"
            " = x_1 ⊗ y*x_2 + y*x_2 ⊗ x_1 + y_1*x ⊗ y_2 + y_2 ⊗ y_1*x"
            " + x_[0] ⊗ (y◁x_[1]) + (y◁x_[1]) ⊗ x_[0]"
            " + (y_[-1]▷x) ⊗ y_[0] + y_[0] ⊗ (y_[-1]▷x)"),
])

_KIND_SUITES: dict[str, tuple[Suite, ...]] = {
    "A1": (A1_SUITE,),
    "A2": (A2_SUITE,),
    "C1": (C1_SUITE,),
    "C2": (C2_SUITE,),
    "TypeI": (A1_SUITE, C1_SUITE, TYPE_I_SUITE),
    "TypeII": (A2_SUITE, C2_SUITE, TYPE_II_SUITE),
    "SpecialG": (A2_SUITE, C2_SUITE, SPECIAL_G_SUITE),
}


# ---------------------------------------------------------------------------
# Checks
# ---------------------------------------------------------------------------


def _require(name: str, report: CheckReport, require_prereq: bool):
    if require_prereq and not report.passed:
        raise PrerequisiteFailed(name, report=report)


def check_base(d: ExtendingDatum, witness_limit: int = 10) -> CheckReport:
    """The base structure must itself be alternative (as algebra, coalgebra
    or bialgebra, depending on the kind)."""
    if d.kind in ALGEBRA_KINDS:
        return check_alternative(d.base, witness_limit)
    if d.kind in COALGEBRA_KINDS:
        return check_coalternative(d.base, witness_limit)
    return check_bialgebra(d.base, witness_limit)


def check_extending_datum(d: ExtendingDatum, witness_limit: int = 10,
                          require_prereq: bool = True,
                          stop_on_fail: bool = False) -> CheckReport:
    """All compatibility conditions of the datum's kind.

    The base structure is a prerequisite: if it fails and ``require_prereq``
    is set, :class:`PrerequisiteFailed` is raised with the base report."""
    _require("base structure is not alternative",
             check_base(d, witness_limit), require_prereq)
    binding = extending_binding(d)
    notes = (EFG_NOTE,) if d.kind in BIALGEBRA_KINDS else ()
    reports = []
    for suite in _KIND_SUITES[d.kind]:
        rep = suite.run(binding, witness_limit, stop_on_fail=stop_on_fail)
        reports.append(rep)
        if stop_on_fail and not rep.passed:
            break
    return merge_reports(f"extending-{d.kind}", *reports, notes=notes)


# ---------------------------------------------------------------------------
# Unified products on E = A (+) V
# ---------------------------------------------------------------------------


def _sum_space(d: ExtendingDatum, name: str):
    return direct_sum_space(name, [("A", d.base.space), ("V", d.complement)])


def _shaped(d: ExtendingDatum, name: str) -> Tensor:
    t = getattr(d, name)
    if t is not None:
        return t
    dom, cod = slot_shapes(d.base.space, d.complement)[name]
    return Tensor.zero(dom, cod)


def _unified_mul(d: ExtendingDatum, total, blocks) -> Tensor:
    pieces = [
        (("A", "A"), ("A",), d.base.mul),
        (("V", "A"), ("A",), _shaped(d, "rharp")),
        (("A", "V"), ("A",), _shaped(d, "lharp")),
        (("V", "V"), ("A",), _shaped(d, "sigma")),
        (("A", "A"), ("V",), _shaped(d, "theta")),
        (("V", "A"), ("V",), _shaped(d, "ltri")),
        (("A", "V"), ("V",), _shaped(d, "rtri")),
        (("V", "V"), ("V",), _shaped(d, "mulV")),
    ]
    return block_sum(total, 2, 1, pieces, blocks)


def _unified_comul(d: ExtendingDatum, total, blocks) -> Tensor:
    pieces = [
        (("A",), ("A", "A"), d.base.comul),
        (("A",), ("V", "A"), _shaped(d, "phi")),
        (("A",), ("A", "V"), _shaped(d, "psi")),
        (("A",), ("V", "V"), _shaped(d, "p")),
        (("V",), ("V", "V"), _shaped(d, "comulV")),
        (("V",), ("A", "V"), _shaped(d, "rho")),
        (("V",), ("V", "A"), _shaped(d, "gamma")),
        (("V",), ("A", "A"), _shaped(d, "q")),
    ]
    return block_sum(total, 1, 2, pieces, blocks)


def unified_product(d: ExtendingDatum, name: str = "E",
                    require_prereq: bool = True):
    """The structure on E = A (+) V encoded by the datum: an
    :class:`AlgebraData` for algebra kinds, a :class:`CoalgebraData` for
    coalgebra kinds, a :class:`BialgebraData` for bialgebra kinds.  With
    ``require_prereq`` the datum's condition suite is enforced first."""
    if require_prereq:
        _require(f"extending datum of kind {d.kind} fails its conditions",
                 check_extending_datum(d, require_prereq=require_prereq), True)
    total, blocks = _sum_space(d, name)
    if d.kind in ALGEBRA_KINDS:
        return AlgebraData(total, _unified_mul(d, total, blocks))
    if d.kind in COALGEBRA_KINDS:
        return CoalgebraData(total, _unified_comul(d, total, blocks))
    return BialgebraData(AlgebraData(total, _unified_mul(d, total, blocks)),
                         CoalgebraData(total, _unified_comul(d, total, blocks)))


def to_interaction(d: ExtendingDatum) -> InteractionData:
    """Repackage a bialgebra-kind datum as two-sided interaction data with V
    in the second slot; the unified product then coincides with the cocycle
    bicrossproduct of this data block by block."""
    if d.kind not in BIALGEBRA_KINDS:
        raise ValueError("to_interaction needs a bialgebra kind")
    v_bialg = BialgebraData(AlgebraData(d.complement, _shaped(d, "mulV")),
                            CoalgebraData(d.complement, _shaped(d, "comulV")))
    return InteractionData(
        A=d.base, H=v_bialg,
        rharp=_shaped(d, "rharp"), lharp=_shaped(d, "lharp"),
        rtri=_shaped(d, "rtri"), ltri=_shaped(d, "ltri"),
        phi=_shaped(d, "phi"), psi=_shaped(d, "psi"),
        rho=_shaped(d, "rho"), gamma=_shaped(d, "gamma"),
        sigma=_shaped(d, "sigma"), theta=_shaped(d, "theta"),
        p=_shaped(d, "p"), q=_shaped(d, "q"))


def braided_complement(d: ExtendingDatum) -> BraidedBialgebraData:
    """(V, mulV, comulV) as a braided bialgebra over the base, with the
    triangle actions and the rho/gamma coactions."""
    if d.kind not in BIALGEBRA_KINDS:
        raise ValueError("braided_complement needs a bialgebra kind")
    hopf = HopfBimoduleData(d.base, d.complement,
                            _shaped(d, "rtri"), _shaped(d, "ltri"),
                            _shaped(d, "rho"), _shaped(d, "gamma"))
    return BraidedBialgebraData(hopf, _shaped(d, "mulV"), _shaped(d, "comulV"))


# ---------------------------------------------------------------------------
# Extraction: E = A (+) V  ->  datum of a given kind
# ---------------------------------------------------------------------------


def _blocks_of(e, base, complement: Space):
    total, blocks = direct_sum_space(e.space.name,
                                     [("A", base.space), ("V", complement)])
    if total != e.space:
        raise KindMismatch("total space is not the direct sum A (+) V "
                           f"(expected basis {total.basis_labels})")
    return blocks


def _mul_block(mul: Tensor, dom_tags, cod_tag, spaces, blocks) -> Tensor:
    return extract_block(mul, dom_tags, (cod_tag,),
                         tuple(spaces[t] for t in dom_tags),
                         (spaces[cod_tag],), blocks)


def _comul_block(comul: Tensor, dom_tag, cod_tags, spaces, blocks) -> Tensor:
    return extract_block(comul, (dom_tag,), cod_tags,
                         (spaces[dom_tag],),
                         tuple(spaces[t] for t in cod_tags), blocks)


def _gate(ok: bool, message: str):
    if not ok:
        raise KindMismatch(message)


def extract_datum(e, base, complement: Space, kind: str) -> ExtendingDatum:
    """Decompose a structure on E = A (+) V into an extending datum of the
    requested kind.

    The kind determines a shape gate, raised as :class:`KindMismatch` when it
    fails:

    * A1 / C1: the projection E -> A is an algebra / coalgebra homomorphism
      (the A-output blocks outside A x A vanish and the A x A block is the
      base structure);
    * A2 / C2: A is a subalgebra / subcoalgebra (the base row of the
      structure stays inside A and equals the base structure);
    * bialgebra kinds combine both gates, and SpecialG additionally requires
      the harpoon blocks to vanish.
    """
    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    if not isinstance(e, _BASE_TYPE[kind]):
        raise KindMismatch(f"kind {kind} extracts from a "
                           f"{_BASE_TYPE[kind].__name__}, got {type(e).__name__}")
    blocks = _blocks_of(e, base, complement)
    spaces = {"A": base.space, "V": complement}
    slots: dict[str, Tensor] = {}

    if kind in ("A1", "A2", "TypeI", "TypeII", "SpecialG"):
        mul = e.mul
        mb = {(dt, ct): _mul_block(mul, dt, ct, spaces, blocks)
              for dt in (("A", "A"), ("V", "A"), ("A", "V"), ("V", "V"))
              for ct in ("A", "V")}
        _gate(mb[("A", "A"), "A"] == base.mul,
              "the A x A -> A block differs from the base multiplication")
        if kind in ("A1", "TypeI"):
            for dt in (("V", "A"), ("A", "V"), ("V", "V")):
                _gate(mb[dt, "A"].is_zero(),
                      "projection onto A is not an algebra homomorphism: "
                      f"the {dt} -> A block is nonzero")
            slots["theta"] = mb[("A", "A"), "V"]
        else:
            _gate(mb[("A", "A"), "V"].is_zero(),
                  "A is not a subalgebra: the A x A -> V block is nonzero")
            if kind == "SpecialG":
                _gate(mb[("V", "A"), "A"].is_zero() and mb[("A", "V"), "A"].is_zero(),
                      "the harpoon blocks are nonzero; extract as TypeII instead")
            else:
                slots["rharp"] = mb[("V", "A"), "A"]
                slots["lharp"] = mb[("A", "V"), "A"]
            slots["sigma"] = mb[("V", "V"), "A"]
        slots["ltri"] = mb[("V", "A"), "V"]
        slots["rtri"] = mb[("A", "V"), "V"]
        slots["mulV"] = mb[("V", "V"), "V"]

    if kind in ("C1", "C2", "TypeI", "TypeII", "SpecialG"):
        comul = e.comul
        cb = {(dt, ct): _comul_block(comul, dt, ct, spaces, blocks)
              for dt in ("A", "V")
              for ct in (("A", "A"), ("V", "A"), ("A", "V"), ("V", "V"))}
        _gate(cb["A", ("A", "A")] == base.comul,
              "the A -> A x A block differs from the base comultiplication")
        if kind in ("C1", "TypeI"):
            _gate(cb["V", ("A", "A")].is_zero(),
                  "projection onto A is not a coalgebra homomorphism: "
                  "the V -> A x A block is nonzero")
            slots["phi"] = cb["A", ("V", "A")]
            slots["psi"] = cb["A", ("A", "V")]
            slots["p"] = cb["A", ("V", "V")]
        else:
            for ct in (("V", "A"), ("A", "V"), ("V", "V")):
                _gate(cb["A", ct].is_zero(),
                      "A is not a subcoalgebra: the A -> "
                      f"{ct} block is nonzero")
            slots["q"] = cb["V", ("A", "A")]
        slots["rho"] = cb["V", ("A", "V")]
        slots["gamma"] = cb["V", ("V", "A")]
        slots["comulV"] = cb["V", ("V", "V")]

    return ExtendingDatum(kind=kind, base=base, complement=complement, **slots)


# ---------------------------------------------------------------------------
# Morphism pairs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MorphismPair:
    """The data of a structure map E -> E' fixing A: f: V -> A and g: V -> V,
    giving m(a + x) = (a + f(x)) + g(x).  This is the pair traditionally
    written (r, s)."""

    f: Tensor  # V -> A
    g: Tensor  # V -> V


def is_invertible(g: Tensor) -> bool:
    """Exact invertibility of a square map by fraction-free elimination."""
    if len(g.dom) != 1 or len(g.cod) != 1 or g.dom[0].dim != g.cod[0].dim:
        return False
    n = g.dom[0].dim
    m = [[Fraction(g.data[i, j]) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if m[r][col] != 0), None)
        if pivot is None:
            return False
        m[col], m[pivot] = m[pivot], m[col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            factor = m[r][col] * inv
            if factor:
                m[r] = [m[r][j] - factor * m[col][j] for j in range(n)]
    return True


def morphism_map(d: ExtendingDatum, m: MorphismPair, name: str = "E") -> Tensor:
    """The map E -> E, identity on A, f + g on V, as a single tensor."""
    a, v = d.base.space, d.complement
    _expect(m.f, (v,), (a,), "f")
    _expect(m.g, (v,), (v,), "g")
    total, blocks = _sum_space(d, name)
    return (embed_block(Tensor.identity(a), ("A",), ("A",), total, blocks)
            + embed_block(m.f, ("V",), ("A",), total, blocks)
            + embed_block(m.g, ("V",), ("V",), total, blocks))


def homomorphism_residuals(d: ExtendingDatum, d2: ExtendingDatum,
                           m: MorphismPair, name: str = "E"):
    """Direct composed-tensor residuals of the homomorphism property of
    phi = id_A + f + g between the two unified products:

    * multiplicative: phi o mul_E - mul_E' o (phi (x) phi)  (algebra and
      bialgebra kinds, else None);
    * comultiplicative: Delta_E' o phi - (phi (x) phi) o Delta_E
      (coalgebra and bialgebra kinds, else None).
    """
    phi = morphism_map(d, m, name)
    e, e2 = (unified_product(x, name, require_prereq=False) for x in (d, d2))
    r_mul = r_comul = None
    if d.kind not in COALGEBRA_KINDS:
        r_mul = compose(phi, e.mul) - compose(e2.mul, tensor_product(phi, phi))
    if d.kind not in ALGEBRA_KINDS:
        r_comul = (compose(e2.comul, phi)
                   - compose(tensor_product(phi, phi), e.comul))
    return r_mul, r_comul


# Component labels of the homomorphism residual, in the traditional print
# order.  For the multiplication the blocks are (domain pair) -> codomain; for
# the comultiplication they are domain -> (codomain pair).  Instantiating the
# literal published equations on a shared base structure reduces each of them
# to exactly one of these blocks.
_MUL_IDS = {
    "A1": (("m1", ("V", "A"), "A"), ("m2", ("A", "V"), "A"),
           ("m3", ("A", "A"), "A"), ("m4", ("V", "V"), "A"),
           ("m5", ("V", "A"), "V"), ("m6", ("A", "V"), "V"),
           ("m7", ("A", "A"), "V"), ("m8", ("V", "V"), "V")),
    "A2": (("M1", ("V", "V"), "A"), ("M2", ("V", "V"), "V"),
           ("M3", ("V", "A"), "A"), ("M5", ("A", "V"), "A"),
           ("M4", ("V", "A"), "V"), ("M6", ("A", "V"), "V")),
}
_COMUL_IDS = {
    "C1": (("comorph11", "A", ("V", "V")), ("comorph121", "A", ("V", "A")),
           ("comorph122", "A", ("A", "V")), ("comorph13", "A", ("A", "A")),
           ("comorph21", "V", ("V", "V")), ("comorph221", "V", ("A", "V")),
           ("comorph222", "V", ("V", "A")), ("comorph23", "V", ("A", "A"))),
    "C2": (("comorph1", "V", ("A", "V")), ("comorph2", "V", ("V", "A")),
           ("comorph3", "V", ("V", "V")), ("comorph4", "V", ("A", "A"))),
}
_MUL_KEY = {"A1": "A1", "A2": "A2", "TypeI": "A1",
            "TypeII": "A2", "SpecialG": "A2"}
_COMUL_KEY = {"C1": "C1", "C2": "C2", "TypeI": "C1",
              "TypeII": "C2", "SpecialG": "C2"}

_RS_NOTE = "(f, g) is the morphism pair traditionally written (r, s)"


def check_morphism_pair(d: ExtendingDatum, d2: ExtendingDatum, m: MorphismPair,
                        witness_limit: int = 10) -> CheckReport:
    """Blockwise residuals of the homomorphism property of
    phi(a + x) = (a + f(x)) + g(x) between the unified products of two data of
    the same kind over the same base.  One condition per block, labelled with
    the id of the corresponding published morphism equation.  A note records
    whether g is invertible (a passing pair with non-invertible g is a
    homomorphism but does not establish equivalence)."""
    if d.kind != d2.kind:
        raise ValueError(f"kinds differ: {d.kind} vs {d2.kind}")
    if d.base.space != d2.base.space or d.complement != d2.complement:
        raise ValueError("the two data live on different spaces")
    r_mul, r_comul = homomorphism_residuals(d, d2, m)
    spaces = {"A": d.base.space, "V": d.complement}
    total, blocks = _sum_space(d, "E")
    results = []
    if r_mul is not None:
        for cid, dom_tags, cod_tag in _MUL_IDS[_MUL_KEY[d.kind]]:
            block = _mul_block(r_mul, dom_tags, cod_tag, spaces, blocks)
            results.append(residual_result(cid, block, witness_limit))
    if r_comul is not None:
        for cid, dom_tag, cod_tags in _COMUL_IDS[_COMUL_KEY[d.kind]]:
            block = _comul_block(r_comul, dom_tag, cod_tags, spaces, blocks)
            results.append(residual_result(cid, block, witness_limit))
    inv = is_invertible(m.g)
    notes = (_RS_NOTE,
             "g is invertible: a passing pair is an isomorphism"
             if inv else
             "g is not invertible: a passing pair is a homomorphism only; "
             "equivalence not proven")
    return CheckReport(f"morphism-{d.kind}", tuple(results), notes)


def is_equivalence(d: ExtendingDatum, d2: ExtendingDatum, m: MorphismPair) -> bool:
    """True when the pair is a homomorphism with invertible g."""
    if not is_invertible(m.g):
        return False
    r_mul, r_comul = homomorphism_residuals(d, d2, m)
    return ((r_mul is None or r_mul.is_zero())
            and (r_comul is None or r_comul.is_zero()))


# ---------------------------------------------------------------------------
# Bounded classification
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtensionClass:
    """One bucket of the classification: a representative datum plus every
    grid datum proven equivalent to it by some invertible morphism pair.
    Data in different buckets are *not proven equivalent* (the search for a
    connecting pair is restricted to the same grid)."""

    representative: ExtendingDatum
    members: tuple[ExtendingDatum, ...]


def _grid_tensors(shapes, names, values):
    out = {}
    pos = 0
    for name in names:
        dom, cod = shapes[name]
        dims = [s.dim for s in dom + cod]
        size = 1
        for n in dims:
            size *= n
        entries = {}
        for i, idx in enumerate(itertools.product(*(range(n) for n in dims))):
            if values[pos + i]:
                entries[idx] = Fraction(values[pos + i])
        pos += size
        out[name] = Tensor.from_entries(dom, cod, entries)
    return out


def _residual_entries(base, complement, kind, shapes, names, suites, values):
    """Every condition residual of the kind, flattened into one Fraction list."""
    slots = _grid_tensors(shapes, names, values)
    d = ExtendingDatum(kind=kind, base=base, complement=complement, **slots)
    binding = extending_binding(d)
    out: list[Fraction] = []
    for suite in suites:
        for cond in suite.conditions:
            out.extend(Fraction(x) for x in cond.residual(binding).data.reshape(-1))
    return out


def enumerate_extensions(base, complement: Space, kind: str,
                         grid=(-1, 0, 1), max_candidates: int = 25000,
                         require_prereq: bool = True) -> tuple[ExtendingDatum, ...]:
    """Every extending datum of the given kind whose slot entries lie on the
    grid and which passes the kind's conditions.

    The enumeration is deterministic (slots in kind order, entries in
    row-major order, grid values in the given order); the all-zero datum is
    the direct sum and always passes, so it is always found.
    :class:`BudgetExceeded` is raised before any work when the grid would
    produce more than ``max_candidates`` candidates.

    Every condition residual is a polynomial of degree at most two in the
    slot entries (each term composes at most two interaction maps), so the
    sweep fits exact integer coefficient matrices from O(n^2) evaluations and
    scans the whole grid with integer matrix products instead of re-running
    the suites per candidate."""
    import math

    import numpy as np

    if kind not in KINDS:
        raise ValueError(f"unknown kind {kind!r}")
    probe = ExtendingDatum(kind=kind, base=base, complement=complement)
    _require("base structure is not alternative", check_base(probe), require_prereq)

    shapes = slot_shapes(base.space, complement)
    names = KIND_SLOTS[kind]
    n = 0
    for name in names:
        dom, cod = shapes[name]
        size = 1
        for s in dom + cod:
            size *= s.dim
        n += size
    n_candidates = len(grid) ** n
    if n_candidates > max_candidates:
        raise BudgetExceeded(
            f"grid of {len(grid)} values over {n} entries gives "
            f"{n_candidates} candidates > max_candidates={max_candidates}")

    suites = _KIND_SUITES[kind]

    def residual(values):
        return _residual_entries(base, complement, kind, shapes, names,
                                 suites, values)

    # Fit residual(v) = C + L v + v^T Q v exactly from probe evaluations.
    def unit(i, scale=1):
        return tuple(scale if j == i else 0 for j in range(n))

    r0 = residual((0,) * n)
    m = len(r0)
    lin = [[Fraction(0)] * m for _ in range(n)]
    quad: dict[tuple[int, int], list[Fraction]] = {}
    r1 = []
    for i in range(n):
        ri = residual(unit(i))
        si = residual(unit(i, 2))
        qii = [(si[k] - 2 * ri[k] + r0[k]) / 2 for k in range(m)]
        lin[i] = [ri[k] - r0[k] - qii[k] for k in range(m)]
        quad[(i, i)] = qii
        r1.append(ri)
    for i in range(n):
        for j in range(i + 1, n):
            vals = tuple((1 if k in (i, j) else 0) for k in range(n))
            rij = residual(vals)
            qij = [rij[k] - r1[i][k] - r1[j][k] + r0[k] for k in range(m)]
            if any(qij):
                quad[(i, j)] = qij

    # Clear denominators: exact integer arithmetic for the whole scan.
    fr_grid = [Fraction(g) for g in grid]
    gden = math.lcm(*(g.denominator for g in fr_grid)) if grid else 1
    den = gden * gden
    for coeffs in ([r0] + lin + list(quad.values())):
        for c in coeffs:
            den = math.lcm(den, c.denominator)
    scale = den * gden * gden

    c_int = np.array([int(c * scale) for c in r0], dtype=np.int64)
    l_int = np.array([[int(c * scale / gden) for c in row] for row in lin],
                     dtype=np.int64)
    q_keys = sorted(k for k, v in quad.items() if any(v))
    q_int = np.array([[int(c * scale // (gden * gden)) for c in quad[k]]
                      for k in q_keys], dtype=np.int64).reshape(len(q_keys), m)

    vs = np.array(list(itertools.product([int(g * gden) for g in fr_grid],
                                         repeat=n)), dtype=np.int64)
    r_all = c_int[None, :] + vs @ l_int
    if q_keys:
        w = np.stack([vs[:, i] * vs[:, j] for (i, j) in q_keys], axis=1)
        r_all = r_all + w @ q_int
    pass_mask = np.all(r_all == 0, axis=1)

    passing: list[ExtendingDatum] = []
    for row, values in zip(pass_mask, itertools.product(grid, repeat=n)):
        if row:
            slots = _grid_tensors(shapes, names, values)
            passing.append(ExtendingDatum(kind=kind, base=base,
                                          complement=complement, **slots))

    # Sanity: the fitted model must agree with direct evaluation.
    for d in passing[:3]:
        if not check_extending_datum(d, witness_limit=0,
                                     require_prereq=False).passed:
            raise AssertionError("polynomial scan disagrees with the suites")
    return tuple(passing)


def classify_extensions(base, complement: Space, kind: str,
                        grid=(-1, 0, 1), max_candidates: int = 25000,
                        require_prereq: bool = True) -> tuple[ExtensionClass, ...]:
    """Bucket the grid data of :func:`enumerate_extensions` into classes by
    grid-searched equivalences: two data land in one bucket when some
    morphism pair with grid entries and invertible g is a homomorphism
    between their unified products in either direction.  Data in different
    buckets are *not proven equivalent* (the connecting-pair search is
    restricted to the same grid)."""
    passing = list(enumerate_extensions(base, complement, kind, grid,
                                        max_candidates, require_prereq))
    probe = ExtendingDatum(kind=kind, base=base, complement=complement)

    # Morphism pairs on the same grid, with g invertible; the E-level maps
    # phi = id_A + f + g and phi (x) phi depend only on the pair, so they are
    # built once.
    a_dim, v_dim = base.space.dim, complement.dim
    f_shape = ((complement,), (base.space,))
    g_shape = ((complement,), (complement,))
    maps = []
    for f_vals in itertools.product(grid, repeat=v_dim * a_dim):
        f = _grid_tensors({"f": f_shape}, ("f",), f_vals)["f"]
        for g_vals in itertools.product(grid, repeat=v_dim * v_dim):
            g = _grid_tensors({"g": g_shape}, ("g",), g_vals)["g"]
            if is_invertible(g):
                phi = morphism_map(probe, MorphismPair(f, g))
                maps.append((phi, tensor_product(phi, phi)))

    prods = [unified_product(d, require_prereq=False) for d in passing]
    check_mul = kind not in COALGEBRA_KINDS
    check_comul = kind not in ALGEBRA_KINDS

    def connected(i: int, j: int) -> bool:
        """Some grid pair is a homomorphism E_i -> E_j or E_j -> E_i."""
        for src, dst in ((i, j), (j, i)):
            e, e2 = prods[src], prods[dst]
            for phi, phiphi in maps:
                if check_mul and not (compose(phi, e.mul)
                                      - compose(e2.mul, phiphi)).is_zero():
                    continue
                if check_comul and not (compose(e2.comul, phi)
                                        - compose(phiphi, e.comul)).is_zero():
                    continue
                return True
        return False

    classes: list[list[int]] = []
    for idx in range(len(passing)):
        placed = False
        for bucket in classes:
            if connected(bucket[0], idx):
                bucket.append(idx)
                placed = True
                break
        if not placed:
            classes.append([idx])
    return tuple(ExtensionClass(passing[bucket[0]],
                                tuple(passing[i] for i in bucket))
                 for bucket in classes)
