"""Exact-rational dense tensors over named spaces, plus a tensor-expression IR.

A :class:`Tensor` is a multilinear map from the tensor product of its domain
spaces to the tensor product of its codomain spaces, stored as a dense
object-dtype array of :class:`fractions.Fraction` entries.  A tensor with an
empty domain is an element of the codomain product (this is how r-matrices in
A(x)A are carried); a tensor with an empty codomain is a functional.

Every identity checked by this package is expressed as an :class:`Expr` tree
(:class:`Primitive` slots composed with identities, flips and tensor products)
and evaluated against a :class:`Binding` of slot names to tensors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import SignatureMismatch, UnboundSlot

Scalar = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def as_scalar(value) -> Fraction:
    """Coerce ints / strings / Fractions to an exact scalar."""
    return value if isinstance(value, Fraction) else Fraction(value)


@dataclass(frozen=True)
class Space:
    """A named finite-dimensional vector space with labelled basis."""

    name: str
    dim: int
    basis_labels: tuple[str, ...] = ()

    def __post_init__(self):
        labels = tuple(self.basis_labels) or tuple(f"{self.name.lower()}{i + 1}" for i in range(self.dim))
        object.__setattr__(self, "basis_labels", labels)
        if self.dim < 1:
            raise ValueError(f"space {self.name}: dim must be >= 1")
        if len(labels) != self.dim:
            raise ValueError(f"space {self.name}: {len(labels)} labels for dim {self.dim}")
        if len(set(labels)) != self.dim:
            raise ValueError(f"space {self.name}: basis labels must be distinct")


def _dims(spaces: Sequence[Space]) -> tuple[int, ...]:
    return tuple(s.dim for s in spaces)


def _zeros(shape: tuple[int, ...]) -> np.ndarray:
    arr = np.empty(shape, dtype=object)
    arr[...] = ZERO
    return arr


@dataclass(frozen=True)
class Tensor:
    """Dense multilinear map between tensor products of spaces."""

    dom: tuple[Space, ...]
    cod: tuple[Space, ...]
    data: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "dom", tuple(self.dom))
        object.__setattr__(self, "cod", tuple(self.cod))
        expected = _dims(self.dom) + _dims(self.cod)
        if tuple(self.data.shape) != expected:
            raise SignatureMismatch(f"tensor data shape {self.data.shape} != expected {expected}")
        self.data.flags.writeable = False

    # -- constructors -------------------------------------------------
    @staticmethod
    def zero(dom: Sequence[Space], cod: Sequence[Space]) -> "Tensor":
        return Tensor(tuple(dom), tuple(cod), _zeros(_dims(dom) + _dims(cod)))

    @staticmethod
    def from_entries(dom: Sequence[Space], cod: Sequence[Space], entries: Mapping[tuple, object]) -> "Tensor":
        """Build a tensor from a {(dom indices..., cod indices...): scalar} map."""
        arr = _zeros(_dims(dom) + _dims(cod))
        for idx, val in entries.items():
            arr[tuple(idx)] = arr[tuple(idx)] + as_scalar(val)
        return Tensor(tuple(dom), tuple(cod), arr)

    @staticmethod
    def identity(spaces: Sequence[Space] | Space) -> "Tensor":
        spaces = (spaces,) if isinstance(spaces, Space) else tuple(spaces)
        dims = _dims(spaces)
        total = int(np.prod(dims, dtype=int)) if dims else 1
        arr = _zeros(dims + dims)
        flat = arr.reshape(total, total)
        for i in range(total):
            flat[i, i] = ONE
        return Tensor(spaces, spaces, arr.reshape(dims + dims))

    @staticmethod
    def permutation(spaces: Sequence[Space], perm: Sequence[int]) -> "Tensor":
        """Map sending u_0 (x) ... (x) u_{k-1} to u_{perm[0]} (x) ... (x) u_{perm[k-1]}."""
        spaces = tuple(spaces)
        k = len(spaces)
        if sorted(perm) != list(range(k)):
            raise SignatureMismatch(f"not a permutation of {k} factors: {perm}")
        ident = Tensor.identity(spaces)
        axes = list(range(k)) + [k + perm[t] for t in range(k)]
        data = np.ascontiguousarray(np.transpose(ident.data, axes))
        return Tensor(spaces, tuple(spaces[perm[t]] for t in range(k)), data)

    # -- linear structure ---------------------------------------------
    def _check_same_signature(self, other: "Tensor"):
        if self.dom != other.dom or self.cod != other.cod:
            raise SignatureMismatch(
                f"signature mismatch: {_sig(self)} vs {_sig(other)}")

    def __add__(self, other: "Tensor") -> "Tensor":
        self._check_same_signature(other)
        return Tensor(self.dom, self.cod, self.data + other.data)

    def __sub__(self, other: "Tensor") -> "Tensor":
        self._check_same_signature(other)
        return Tensor(self.dom, self.cod, self.data - other.data)

    def __neg__(self) -> "Tensor":
        return self.scale(-1)

    def scale(self, c) -> "Tensor":
        c = as_scalar(c)
        return Tensor(self.dom, self.cod, self.data * c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.dom == other.dom and self.cod == other.cod and bool(np.array_equal(self.data, other.data))

    def __hash__(self):
        return hash((self.dom, self.cod, tuple(self.data.flat)))

    # -- structure ------------------------------------------------------
    def entry(self, *idx) -> Fraction:
        return self.data[tuple(idx)]

    def is_zero(self) -> bool:
        return first_nonzero(self) is None

    def __repr__(self):
        nz = sum(1 for _ in nonzero_entries(self))
        return f"Tensor({_sig(self)}, {nz} nonzero)"


def _sig(t: Tensor) -> str:
    dom = "(x)".join(s.name for s in t.dom) or "k"
    cod = "(x)".join(s.name for s in t.cod) or "k"
    return f"{dom}->{cod}"


def add(*tensors: Tensor) -> Tensor:
    return reduce(lambda a, b: a + b, tensors)


def scale(c, t: Tensor) -> Tensor:
    return t.scale(c)


def tensor_product(*tensors: Tensor) -> Tensor:
    """Tensor product of maps: (f (x) g)(u (x) v) = f(u) (x) g(v)."""

    def pair(a: Tensor, b: Tensor) -> Tensor:
        data = np.multiply.outer(a.data, b.data)
        # axes are (a.dom, a.cod, b.dom, b.cod); interleave to (doms, cods)
        na_d, na_c, nb_d = len(a.dom), len(a.cod), len(b.dom)
        axes = (list(range(na_d))
                + list(range(na_d + na_c, na_d + na_c + nb_d))
                + list(range(na_d, na_d + na_c))
                + list(range(na_d + na_c + nb_d, data.ndim)))
        data = np.ascontiguousarray(np.transpose(data, axes))
        return Tensor(a.dom + b.dom, a.cod + b.cod, data)

    return reduce(pair, tensors)


def compose(*tensors: Tensor) -> Tensor:
    """Composition in mathematical order: compose(f, g) = f after g."""

    def pair(f: Tensor, g: Tensor) -> Tensor:  # f \circ g
        if g.cod != f.dom:
            raise SignatureMismatch(f"cannot compose {_sig(f)} after {_sig(g)}")
        k = len(g.cod)
        if k == 0:
            data = np.multiply.outer(g.data, f.data) if g.data.ndim or f.data.ndim else g.data * f.data
            if g.data.ndim == 0 and f.data.ndim == 0:
                data = np.array(g.data.item() * f.data.item(), dtype=object)
            return Tensor(g.dom, f.cod, np.asarray(data, dtype=object))
        data = np.tensordot(g.data, f.data, axes=(tuple(range(len(g.dom), g.data.ndim)), tuple(range(k))))
        return Tensor(g.dom, f.cod, np.asarray(data, dtype=object))

    ts = list(tensors)
    result = ts[-1]
    for f in reversed(ts[:-1]):
        result = pair(f, result)
    return result


def nonzero_entries(t: Tensor) -> Iterable[tuple[tuple[int, ...], Fraction]]:
    """Nonzero entries in lexicographic index order."""
    if t.data.ndim == 0:
        if t.data.item() != 0:
            yield (), t.data.item()
        return
    for idx in np.argwhere(t.data != ZERO):
        key = tuple(int(i) for i in idx)
        yield key, t.data[key]


def first_nonzero(t: Tensor):
    """Lexicographically-first nonzero multi-index, or None if t == 0."""
    for idx, _ in nonzero_entries(t):
        return idx
    return None


def is_zero(t: Tensor):
    """Return (True, None) for the zero tensor, else (False, first nonzero index)."""
    w = first_nonzero(t)
    return (w is None), w


# ---------------------------------------------------------------------------
# Expression IR
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Expr:
    """Base class for expression nodes."""


@dataclass(frozen=True)
class Primitive(Expr):
    """A named tensor slot, resolved through the binding."""

    name: str


@dataclass(frozen=True)
class Identity(Expr):
    """Identity map on the space bound to `role`."""

    role: str


@dataclass(frozen=True)
class Flip(Expr):
    """Permutation of tensor factors; `roles` name the input factors, and the
    output factor at position t is the input factor perm[t]."""

    roles: tuple[str, ...]
    perm: tuple[int, ...]


def Tau12(roles: tuple[str, str, str]) -> Flip:
    """tau12(a(x)b(x)c) = b(x)a(x)c."""
    return Flip(tuple(roles), (1, 0, 2))


def Tau23(roles: tuple[str, str, str]) -> Flip:
    """tau23(a(x)b(x)c) = a(x)c(x)b."""
    return Flip(tuple(roles), (0, 2, 1))


@dataclass(frozen=True)
class Compose(Expr):
    """Compose(parts) = parts[0] after parts[1] after ... (rightmost applied first)."""

    parts: tuple[Expr, ...]

    def __init__(self, parts):
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class TensorProduct(Expr):
    parts: tuple[Expr, ...]

    def __init__(self, parts):
        object.__setattr__(self, "parts", tuple(parts))


@dataclass(frozen=True)
class Sum(Expr):
    """Linear combination of expressions with exact coefficients."""

    terms: tuple[tuple[Fraction, Expr], ...]

    def __init__(self, terms):
        object.__setattr__(self, "terms", tuple((as_scalar(c), e) for c, e in terms))


@dataclass(frozen=True)
class Binding:
    """Resolution environment: space roles -> Spaces, slot names -> Tensors."""

    spaces: Mapping[str, Space] = field(default_factory=dict)
    tensors: Mapping[str, Tensor] = field(default_factory=dict)

    def space(self, role: str) -> Space:
        try:
            return self.spaces[role]
        except KeyError:
            raise UnboundSlot(f"no space bound to role {role!r}") from None

    def tensor(self, name: str) -> Tensor:
        try:
            return self.tensors[name]
        except KeyError:
            raise UnboundSlot(f"no tensor bound to slot {name!r}") from None


def _evaluate_exact(expr: Expr, binding: Binding) -> Tensor:
    """Object-dtype evaluation; always exact, never overflows."""
    if isinstance(expr, Primitive):
        return binding.tensor(expr.name)
    if isinstance(expr, Identity):
        return Tensor.identity(binding.space(expr.role))
    if isinstance(expr, Flip):
        return Tensor.permutation(tuple(binding.space(r) for r in expr.roles), expr.perm)
    if isinstance(expr, Compose):
        return compose(*(_evaluate_exact(p, binding) for p in expr.parts))
    if isinstance(expr, TensorProduct):
        return tensor_product(*(_evaluate_exact(p, binding) for p in expr.parts))
    if isinstance(expr, Sum):
        parts = [_evaluate_exact(e, binding).scale(c) for c, e in expr.terms]
        return add(*parts)
    raise TypeError(f"not an Expr node: {expr!r}")


# ---------------------------------------------------------------------------
# Fast evaluation: scaled int64 arithmetic
#
# Fraction tensordot is the hot spot of condition checking.  Every tensor is
# (value * den) with den the lcm of its denominators, giving an int64 array;
# compositions, tensor products and sums then run in C integer arithmetic,
# with a proven upper bound on entry magnitudes carried along.  If the bound
# could reach the int64 range the evaluation falls back to the exact
# object-dtype path, so results are always exact.
# ---------------------------------------------------------------------------

_INT_LIMIT = 1 << 62


class _Overflow(Exception):
    pass


@dataclass(frozen=True)
class _IntTensor:
    dom: tuple[Space, ...]
    cod: tuple[Space, ...]
    arr: np.ndarray  # int64; true values are arr / den
    den: int
    bound: int       # proven upper bound on |arr| entries


def _int_view(t: Tensor) -> _IntTensor:
    cached = getattr(t, "_int_view", None)
    if cached is not None:
        return cached
    den = 1
    for v in t.data.flat:
        if v:
            den = den * v.denominator // gcd(den, v.denominator)
    arr = np.empty(t.data.shape, dtype=np.int64)
    flat_in, flat_out = t.data.reshape(-1), arr.reshape(-1)
    bound = 0
    for i, v in enumerate(flat_in):
        n = int(v * den) if v else 0
        if abs(n) >= _INT_LIMIT:
            raise _Overflow
        flat_out[i] = n
        if abs(n) > bound:
            bound = abs(n)
    view = _IntTensor(t.dom, t.cod, arr, den, bound)
    object.__setattr__(t, "_int_view", view)
    return view


def _int_identity(spaces: tuple[Space, ...]) -> _IntTensor:
    dims = _dims(spaces)
    total = int(np.prod(dims, dtype=int)) if dims else 1
    arr = np.eye(total, dtype=np.int64).reshape(dims + dims)
    return _IntTensor(spaces, spaces, arr, 1, 1)


def _int_flip(spaces: tuple[Space, ...], perm: tuple[int, ...]) -> _IntTensor:
    ident = _int_identity(spaces)
    k = len(spaces)
    axes = list(range(k)) + [k + perm[t] for t in range(k)]
    arr = np.ascontiguousarray(np.transpose(ident.arr, axes))
    return _IntTensor(spaces, tuple(spaces[perm[t]] for t in range(k)), arr, 1, 1)


def _int_compose(f: _IntTensor, g: _IntTensor) -> _IntTensor:  # f \circ g
    if g.cod != f.dom:
        raise SignatureMismatch(
            f"cannot compose {'(x)'.join(s.name for s in f.dom) or 'k'}"
            f" after {'(x)'.join(s.name for s in g.cod) or 'k'}")
    k = len(g.cod)
    contraction = int(np.prod(_dims(g.cod), dtype=int)) if k else 1
    bound = f.bound * g.bound * contraction
    if bound >= _INT_LIMIT:
        raise _Overflow
    if k == 0:
        arr = np.multiply.outer(g.arr, f.arr)
    else:
        arr = np.tensordot(g.arr, f.arr,
                           axes=(tuple(range(len(g.dom), g.arr.ndim)),
                                 tuple(range(k))))
    return _IntTensor(g.dom, f.cod, arr, f.den * g.den, bound)


def _int_product(a: _IntTensor, b: _IntTensor) -> _IntTensor:
    bound = a.bound * b.bound
    if bound >= _INT_LIMIT:
        raise _Overflow
    arr = np.multiply.outer(a.arr, b.arr)
    na_d, na_c, nb_d = len(a.dom), len(a.cod), len(b.dom)
    axes = (list(range(na_d))
            + list(range(na_d + na_c, na_d + na_c + nb_d))
            + list(range(na_d, na_d + na_c))
            + list(range(na_d + na_c + nb_d, arr.ndim)))
    arr = np.ascontiguousarray(np.transpose(arr, axes))
    return _IntTensor(a.dom + b.dom, a.cod + b.cod, arr, a.den * b.den, bound)


def _int_sum(terms: list[tuple[Fraction, _IntTensor]]) -> _IntTensor:
    first = terms[0][1]
    den = 1
    for c, t in terms:
        d = t.den * c.denominator
        den = den * d // gcd(den, d)
    arr = np.zeros(first.arr.shape, dtype=np.int64)
    bound = 0
    for c, t in terms:
        if t.dom != first.dom or t.cod != first.cod:
            raise SignatureMismatch("sum of tensors with different signatures")
        factor = c.numerator * (den // (t.den * c.denominator))
        bound += t.bound * abs(factor)
        if bound >= _INT_LIMIT:
            raise _Overflow
        arr += t.arr * factor
    return _IntTensor(first.dom, first.cod, arr, den, bound)


def _int_evaluate(expr: Expr, binding: Binding) -> _IntTensor:
    if isinstance(expr, Primitive):
        return _int_view(binding.tensor(expr.name))
    if isinstance(expr, Identity):
        return _int_identity((binding.space(expr.role),))
    if isinstance(expr, Flip):
        return _int_flip(tuple(binding.space(r) for r in expr.roles), expr.perm)
    if isinstance(expr, Compose):
        parts = [_int_evaluate(p, binding) for p in expr.parts]
        result = parts[-1]
        for f in reversed(parts[:-1]):
            result = _int_compose(f, result)
        return result
    if isinstance(expr, TensorProduct):
        parts = [_int_evaluate(p, binding) for p in expr.parts]
        return reduce(_int_product, parts)
    if isinstance(expr, Sum):
        return _int_sum([(c, _int_evaluate(e, binding)) for c, e in expr.terms])
    raise TypeError(f"not an Expr node: {expr!r}")


def _int_to_tensor(v: _IntTensor) -> Tensor:
    out = np.empty(v.arr.shape, dtype=object)
    flat_in, flat_out = v.arr.reshape(-1), out.reshape(-1)
    den = v.den
    for i in range(flat_in.size):
        n = int(flat_in[i])
        flat_out[i] = Fraction(n, den) if n else ZERO
    return Tensor(v.dom, v.cod, out.reshape(v.arr.shape))


def evaluate(expr: Expr, binding: Binding) -> Tensor:
    """Evaluate an expression tree to a dense tensor (always exact)."""
    try:
        return _int_to_tensor(_int_evaluate(expr, binding))
    except _Overflow:
        return _evaluate_exact(expr, binding)
