"""Alternative algebras, coalgebras, bialgebras and their (co)module axioms.

Data types carry raw structure tensors; nothing is assumed — alternativity and
every compatibility axiom are checkable properties returning a
:class:`~altbialg.report.CheckReport`.
"""

from __future__ import annotations

from dataclasses import dataclass

from .conditions import Context, Suite, make_suite
from .report import CheckReport, merge_reports
from .tensorkit import Binding, Space, Tensor, compose, tensor_product

# ---------------------------------------------------------------------------
# Data types
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class AlgebraData:
    """A space with a multiplication A(x)A -> A (alternativity not assumed)."""

    space: Space
    mul: Tensor

    def __post_init__(self):
        _expect(self.mul, (self.space, self.space), (self.space,), "mul")


@dataclass(frozen=True)
class CoalgebraData:
    """A space with a comultiplication A -> A(x)A."""

    space: Space
    comul: Tensor

    def __post_init__(self):
        _expect(self.comul, (self.space,), (self.space, self.space), "comul")


@dataclass(frozen=True)
class BialgebraData:
    """An algebra and a coalgebra sharing one space."""

    algebra: AlgebraData
    coalgebra: CoalgebraData

    def __post_init__(self):
        if self.algebra.space != self.coalgebra.space:
            raise ValueError("bialgebra parts live on different spaces")

    @property
    def space(self) -> Space:
        return self.algebra.space

    @property
    def mul(self) -> Tensor:
        return self.algebra.mul

    @property
    def comul(self) -> Tensor:
        return self.coalgebra.comul


@dataclass(frozen=True)
class ModuleData:
    """A carrier with a left and right action of an algebra, or a left and
    right coaction of a coalgebra (`host` decides which reading applies)."""

    host: object  # AlgebraData or CoalgebraData
    carrier: Space
    left: Tensor
    right: Tensor

    def __post_init__(self):
        hs, v = self.host.space, self.carrier
        if isinstance(self.host, AlgebraData):
            _expect(self.left, (hs, v), (v,), "left action")
            _expect(self.right, (v, hs), (v,), "right action")
        elif isinstance(self.host, CoalgebraData):
            _expect(self.left, (v,), (hs, v), "left coaction")
            _expect(self.right, (v,), (v, hs), "right coaction")
        else:
            raise TypeError("host must be AlgebraData or CoalgebraData")


def _expect(t: Tensor, dom, cod, what: str):
    if t.dom != tuple(dom) or t.cod != tuple(cod):
        raise ValueError(f"{what}: bad signature {t.dom}->{t.cod}, expected {dom}->{cod}")


def regular_bimodule(alg: AlgebraData) -> ModuleData:
    """V = H with both actions given by the multiplication."""
    return ModuleData(alg, alg.space, alg.mul, alg.mul)


def regular_bicomodule(co: CoalgebraData) -> ModuleData:
    """V = H with both coactions given by the comultiplication."""
    return ModuleData(co, co.space, co.comul, co.comul)


# ---------------------------------------------------------------------------
# Condition suites
# ---------------------------------------------------------------------------

_ALG_CTX = Context(
    variables={"a": "A", "b": "A", "c": "A"},
    expansions={("A", "plain", (1, 2)): ("DeltaA", ("A", "A"))},
    ops={("*", "A", "A"): ("mulA", "A")},
    funcs={"DeltaA": (("A",), ("A", "A"))},
)

ALTERNATIVE_SUITE = make_suite("alternative", _ALG_CTX, [
    ("2", "(a*b)*c - a*(b*c) + (b*a)*c - b*(a*c) = 0"),
    ("3", "(a*b)*c - a*(b*c) + (a*c)*b - a*(c*b) = 0"),
])

COALTERNATIVE_SUITE = make_suite("coalternative", _ALG_CTX, [
    ("4", "DeltaA(a_1) ⊗ a_2 - a_1 ⊗ DeltaA(a_2)"
          " = - tau12(DeltaA(a_1), a_2) + tau12(a_1, DeltaA(a_2))"),
    ("5", "DeltaA(a_1) ⊗ a_2 - a_1 ⊗ DeltaA(a_2)"
          " = - tau23(DeltaA(a_1), a_2) + tau23(a_1, DeltaA(a_2))"),
])

BIALGEBRA_SUITE = make_suite("bialgebra-compatibility", _ALG_CTX, [
    ("6", "DeltaA(a*b) = a_1*b ⊗ a_2 + a_2*b ⊗ a_1 - a_2 ⊗ b*a_1"
          " + b_1 ⊗ a*b_2 + b_1 ⊗ b_2*a - a*b_1 ⊗ b_2"),
    ("7", "DeltaA(b*a) + tau(DeltaA(b*a)) = a_1 ⊗ b*a_2 + b*a_2 ⊗ a_1"
          " + b_1*a ⊗ b_2 + b_2 ⊗ b_1*a"),
])

_BIMOD_CTX = Context(
    variables={"x": "H", "y": "H", "v": "V"},
    expansions={},
    ops={("*", "H", "H"): ("mulH", "H"),
         ("▷", "H", "V"): ("lact", "V"),
         ("◁", "V", "H"): ("ract", "V")},
    funcs={},
)

BIMODULE_SUITE = make_suite("bimodule", _BIMOD_CTX, [
    ("10", "(x*y)▷v - x▷(y▷v) + (y*x)▷v - y▷(x▷v) = 0"),
    ("11", "v◁(x*y) - (v◁x)◁y + x▷(v◁y) - (x▷v)◁y = 0"),
    ("12", "(x*y)▷v - x▷(y▷v) + (x▷v)◁y - x▷(v◁y) = 0"),
    ("13", "(v◁x)◁y - v◁(x*y) + (v◁y)◁x - v◁(y*x) = 0"),
])

_BICOMOD_CTX = Context(
    variables={"v": "V"},
    expansions={("V", "paren", (-1, 0)): ("phi", ("H", "V")),
                ("V", "paren", (0, 1)): ("psi", ("V", "H"))},
    ops={},
    funcs={"DeltaH": (("H",), ("H", "H")),
           "phi": (("V",), ("H", "V")),
           "psi": (("V",), ("V", "H"))},
)

BICOMODULE_SUITE = make_suite("bicomodule", _BICOMOD_CTX, [
    ("14", "DeltaH(v_(-1)) ⊗ v_(0) - v_(-1) ⊗ phi(v_(0))"
           " = - tau12(DeltaH(v_(-1)), v_(0)) + tau12(v_(-1), phi(v_(0)))"),
    ("15", "psi(v_(0)) ⊗ v_(1) - v_(0) ⊗ DeltaH(v_(1))"
           " = - tau12(phi(v_(0)), v_(1)) + tau12(v_(-1), psi(v_(0)))"),
    ("16", "DeltaH(v_(-1)) ⊗ v_(0) - v_(-1) ⊗ phi(v_(0))"
           " = - tau23(phi(v_(0)), v_(1)) + tau23(v_(-1), psi(v_(0)))"),
    ("17", "psi(v_(0)) ⊗ v_(1) - v_(0) ⊗ DeltaH(v_(1))"
           " = - tau23(psi(v_(0)), v_(1)) + tau23(v_(0), DeltaH(v_(1)))"),
])

_MODALG_CTX = Context(
    variables={"a": "A", "b": "A", "x": "H"},
    expansions={},
    ops={("*", "A", "A"): ("mulA", "A"),
         ("▷", "H", "A"): ("lact", "A"),
         ("◁", "A", "H"): ("ract", "A")},
    funcs={},
)

MODULE_ALGEBRA_SUITE = make_suite("module-algebra", _MODALG_CTX, [
    ("MA1", "(a◁x)*b - a*(x▷b) + (x▷a)*b - x▷(a*b) = 0"),
    ("MA2", "(a*b)◁x - a*(b◁x) + (b*a)◁x - b*(a◁x) = 0"),
    ("MA3", "(x▷a)*b - x▷(a*b) + (x▷b)*a - x▷(b*a) = 0"),
    ("MA4", "(a◁x)*b - a*(x▷b) + (a*b)◁x - a*(b◁x) = 0"),
])

_COMODCO_CTX = Context(
    variables={"a": "A"},
    expansions={("A", "plain", (1, 2)): ("DeltaA", ("A", "A")),
                ("A", "paren", (-1, 0)): ("phi", ("H", "A")),
                ("A", "paren", (0, 1)): ("psi", ("A", "H"))},
    ops={},
    funcs={"DeltaA": (("A",), ("A", "A")),
           "phi": (("A",), ("H", "A")),
           "psi": (("A",), ("A", "H"))},
)

COMODULE_COALGEBRA_SUITE = make_suite("comodule-coalgebra", _COMODCO_CTX, [
    ("CA1", "phi(a_1) ⊗ a_2 - a_(-1) ⊗ DeltaA(a_(0))"
            " = - tau12(psi(a_1), a_2) + tau12(a_1, phi(a_2))"),
    ("CA2", "DeltaA(a_(0)) ⊗ a_(1) - a_1 ⊗ psi(a_2)"
            " = - tau12(DeltaA(a_(0)), a_(1)) + tau12(a_1, psi(a_2))"),
    ("CA3", "phi(a_1) ⊗ a_2 - a_(-1) ⊗ DeltaA(a_(0))"
            " = - tau23(phi(a_1), a_2) + tau23(a_(-1), DeltaA(a_(0)))"),
    ("CA4", "DeltaA(a_(0)) ⊗ a_(1) - a_1 ⊗ psi(a_2)"
            " = - tau23(psi(a_1), a_2) + tau23(a_1, phi(a_2))"),
])


# ---------------------------------------------------------------------------
# Bindings and checks
# ---------------------------------------------------------------------------


def algebra_binding(alg: AlgebraData) -> Binding:
    return Binding(spaces={"A": alg.space}, tensors={"mulA": alg.mul})


def coalgebra_binding(co: CoalgebraData) -> Binding:
    return Binding(spaces={"A": co.space}, tensors={"DeltaA": co.comul})


def bialgebra_binding(b: BialgebraData) -> Binding:
    return Binding(spaces={"A": b.space}, tensors={"mulA": b.mul, "DeltaA": b.comul})


def associator(alg: AlgebraData) -> Tensor:
    """(a, b, c) = (ab)c - a(bc) as a trilinear tensor A(x)A(x)A -> A."""
    mul = alg.mul
    ident = Tensor.identity(alg.space)
    return compose(mul, tensor_product(mul, ident)) - compose(mul, tensor_product(ident, mul))


def check_alternative(alg: AlgebraData, witness_limit: int = 10) -> CheckReport:
    return ALTERNATIVE_SUITE.run(algebra_binding(alg), witness_limit)


def check_coalternative(co: CoalgebraData, witness_limit: int = 10) -> CheckReport:
    return COALTERNATIVE_SUITE.run(coalgebra_binding(co), witness_limit)


def check_bialgebra(b: BialgebraData, witness_limit: int = 10) -> CheckReport:
    """Alternativity, coalternativity and the two compatibility conditions."""
    binding = bialgebra_binding(b)
    return merge_reports(
        "bialgebra",
        ALTERNATIVE_SUITE.run(binding, witness_limit),
        COALTERNATIVE_SUITE.run(binding, witness_limit),
        BIALGEBRA_SUITE.run(binding, witness_limit),
    )


def bimodule_binding(m: ModuleData) -> Binding:
    return Binding(spaces={"H": m.host.space, "V": m.carrier},
                   tensors={"mulH": m.host.mul, "lact": m.left, "ract": m.right})


def bicomodule_binding(m: ModuleData) -> Binding:
    return Binding(spaces={"H": m.host.space, "V": m.carrier},
                   tensors={"DeltaH": m.host.comul, "phi": m.left, "psi": m.right})


def check_bimodule(m: ModuleData, witness_limit: int = 10) -> CheckReport:
    if not isinstance(m.host, AlgebraData):
        raise TypeError("check_bimodule needs an algebra host")
    return BIMODULE_SUITE.run(bimodule_binding(m), witness_limit)


def check_bicomodule(m: ModuleData, witness_limit: int = 10) -> CheckReport:
    if not isinstance(m.host, CoalgebraData):
        raise TypeError("check_bicomodule needs a coalgebra host")
    return BICOMODULE_SUITE.run(bicomodule_binding(m), witness_limit)


def check_module_algebra(host: AlgebraData, target: AlgebraData,
                         lact: Tensor, ract: Tensor, witness_limit: int = 10) -> CheckReport:
    """H-bimodule alternative algebra: bimodule axioms plus the four action
    compatibilities with the multiplication of A."""
    _expect(lact, (host.space, target.space), (target.space,), "lact")
    _expect(ract, (target.space, host.space), (target.space,), "ract")
    bim = ModuleData(host, target.space, lact, ract)
    binding = Binding(
        spaces={"A": target.space, "H": host.space},
        tensors={"mulA": target.mul, "mulH": host.mul, "lact": lact, "ract": ract})
    return merge_reports(
        "module-algebra",
        check_bimodule(bim, witness_limit),
        MODULE_ALGEBRA_SUITE.run(binding, witness_limit),
    )


def check_comodule_coalgebra(host: CoalgebraData, target: CoalgebraData,
                             phi: Tensor, psi: Tensor, witness_limit: int = 10) -> CheckReport:
    """H-bicomodule alternative coalgebra: bicomodule axioms plus the four
    coaction compatibilities with the comultiplication of A."""
    _expect(phi, (target.space,), (host.space, target.space), "phi")
    _expect(psi, (target.space,), (target.space, host.space), "psi")
    bicom = ModuleData(host, target.space, phi, psi)
    binding = Binding(
        spaces={"A": target.space, "H": host.space},
        tensors={"DeltaA": target.comul, "DeltaH": host.comul, "phi": phi, "psi": psi})
    return merge_reports(
        "comodule-coalgebra",
        check_bicomodule(bicom, witness_limit),
        COMODULE_COALGEBRA_SUITE.run(binding, witness_limit),
    )
