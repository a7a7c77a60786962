"""Shared example structures used across the test suite."""

from altbialg import (AlgebraData, BialgebraData, CoalgebraData, RMatrix,
                      Space, Tensor, delta_r)


def dim3_algebra() -> AlgebraData:
    """dim-3 algebra with e1*e2 = e3 and all other products zero."""
    a = Space("A", 3, ("e1", "e2", "e3"))
    return AlgebraData(a, Tensor.from_entries((a, a), (a,), {(0, 1, 2): 1}))


def dim3_rmatrix() -> RMatrix:
    """r = e1 (x) e3 - e3 (x) e1 over the dim-3 algebra."""
    alg = dim3_algebra()
    a = alg.space
    return RMatrix(alg, Tensor.from_entries((), (a, a), {(0, 2): 1, (2, 0): -1}))


def dim3_bialgebra() -> BialgebraData:
    """The dim-3 algebra with the comultiplication induced by its r-matrix."""
    rm = dim3_rmatrix()
    return BialgebraData(rm.algebra, delta_r(rm))


def dim3_host() -> BialgebraData:
    """A host copy of the dim-3 bialgebra on a space named H."""
    h = Space("H", 3, ("e1", "e2", "e3"))
    return BialgebraData(
        AlgebraData(h, Tensor.from_entries((h, h), (h,), {(0, 1, 2): 1})),
        CoalgebraData(h, Tensor.from_entries((h,), (h, h), {(1, 2, 2): 1})))


def dim2_base_algebra() -> AlgebraData:
    """dim-2 algebra with e1*e1 = e2 (extension-theory base)."""
    a = Space("A", 2, ("e1", "e2"))
    return AlgebraData(a, Tensor.from_entries((a, a), (a,), {(0, 0, 1): 1}))


def dim2_base_coalgebra() -> CoalgebraData:
    """dim-2 coalgebra with Delta(e2) = e1 (x) e1 (dual of the dim-2 base)."""
    a = Space("A", 2, ("e1", "e2"))
    return CoalgebraData(a, Tensor.from_entries((a,), (a, a), {(1, 0, 0): 1}))


def dim2_base_bialgebra() -> BialgebraData:
    """The dim-2 base with the zero comultiplication."""
    alg = dim2_base_algebra()
    return BialgebraData(alg, CoalgebraData(alg.space, Tensor.zero((alg.space,), (alg.space, alg.space))))


def line_space() -> Space:
    return Space("V", 1, ("v",))
