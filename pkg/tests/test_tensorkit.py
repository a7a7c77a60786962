"""Unit tests for the exact tensor engine."""

from fractions import Fraction

import pytest

from altbialg import (Binding, ShapeError, SignatureMismatch, Space, Tensor,
                      UnboundSlot, compose, evaluate, nonzero_entries,
                      tensor_product)
from altbialg.tensorkit import (Compose, Identity, Primitive, Sum,
                                TensorProduct, _evaluate_exact)

A = Space("A", 2, ("e1", "e2"))
B = Space("B", 3, ("f1", "f2", "f3"))


def test_entries_are_fractions():
    t = Tensor.from_entries((A,), (A,), {(0, 1): "1/2", (1, 0): 2})
    entries = dict(nonzero_entries(t))
    assert entries == {(0, 1): Fraction(1, 2), (1, 0): Fraction(2)}
    assert all(isinstance(v, Fraction) for v in entries.values())


def test_nonzero_entries_lexicographic():
    t = Tensor.from_entries((A, A), (A,), {(1, 1, 0): 1, (0, 1, 1): 1, (1, 0, 0): 1})
    assert [idx for idx, _ in nonzero_entries(t)] == [(0, 1, 1), (1, 0, 0), (1, 1, 0)]


def test_tensor_data_is_frozen():
    t = Tensor.from_entries((A,), (A,), {(0, 0): 1})
    with pytest.raises(ValueError):
        t.data[0, 0] = Fraction(2)


def test_compose_applies_rightmost_first():
    # f swaps basis vectors, g doubles e1; f(g(e1)) = 2 e2.
    f = Tensor.from_entries((A,), (A,), {(0, 1): 1, (1, 0): 1})
    g = Tensor.from_entries((A,), (A,), {(0, 0): 2})
    assert dict(nonzero_entries(compose(f, g))) == {(0, 1): Fraction(2)}
    assert dict(nonzero_entries(compose(g, f))) == {(1, 0): Fraction(2)}


def test_compose_shape_check():
    mul = Tensor.from_entries((A, A), (A,), {(0, 0, 1): 1})
    f = Tensor.from_entries((B,), (B,), {(0, 0): 1})
    with pytest.raises(SignatureMismatch):
        compose(f, mul)


def test_tensor_product_entries():
    f = Tensor.from_entries((A,), (A,), {(0, 1): 1})
    g = Tensor.from_entries((B,), (B,), {(2, 0): "1/3"})
    fg = tensor_product(f, g)
    assert fg.dom == (A, B) and fg.cod == (A, B)
    assert dict(nonzero_entries(fg)) == {(0, 2, 1, 0): Fraction(1, 3)}


def test_permutation_flip():
    tau = Tensor.permutation((A, B), (1, 0))
    x = Tensor.from_entries((), (A, B), {(0, 2): 1, (1, 0): "1/2"})
    assert dict(nonzero_entries(compose(tau, x))) == {
        (2, 0): Fraction(1), (0, 1): Fraction(1, 2)}


def test_add_scale_negate():
    t = Tensor.from_entries((A,), (A,), {(0, 0): 1})
    u = Tensor.from_entries((A,), (A,), {(0, 0): "1/2", (1, 1): 1})
    assert dict(nonzero_entries(t + u)) == {(0, 0): Fraction(3, 2), (1, 1): Fraction(1)}
    assert (t - t).is_zero()
    assert dict(nonzero_entries((-u).scale("2"))) == {
        (0, 0): Fraction(-1), (1, 1): Fraction(-2)}


def test_evaluate_fast_path_matches_exact_path():
    mul = Tensor.from_entries((A, A), (A,), {(0, 0, 1): "2/3", (0, 1, 0): "-1/7"})
    binding = Binding(spaces={"A": A}, tensors={"m": mul})
    expr = Compose((Primitive("m"),
                    TensorProduct((Primitive("m"),
                                   Identity("A")))))
    fast = evaluate(expr, binding)
    slow = _evaluate_exact(expr, binding)
    assert fast == slow
    assert fast.dom == (A, A, A) and fast.cod == (A,)


def test_evaluate_overflow_falls_back_to_exact():
    big = Fraction(1 << 40)
    mul = Tensor.from_entries((A, A), (A,), {(0, 0, 0): big, (0, 0, 1): 1})
    binding = Binding(spaces={"A": A}, tensors={"m": mul})
    m = Primitive("m")
    # ((a a) a) a -> degree-3 composition with entries ~ 2^120: must overflow
    # int64 and still come out exact.
    expr = Compose((m, TensorProduct((Compose((m, TensorProduct((m, Identity("A"))))),
                                      Identity("A")))))
    fast = evaluate(expr, binding)
    slow = _evaluate_exact(expr, binding)
    assert fast == slow
    assert dict(nonzero_entries(fast))[(0, 0, 0, 0, 0)] == big ** 3


def test_evaluate_sum_with_coefficients():
    t = Tensor.from_entries((A,), (A,), {(0, 0): "1/2"})
    binding = Binding(spaces={"A": A}, tensors={"t": t})
    p = Primitive("t")
    s = Sum(((Fraction(1, 3), p), (Fraction(-2), p)))
    out = evaluate(s, binding)
    assert dict(nonzero_entries(out)) == {(0, 0): Fraction(1, 2) * Fraction(-5, 3)}


def test_unbound_slot():
    binding = Binding(spaces={"A": A}, tensors={})
    with pytest.raises(UnboundSlot):
        evaluate(Primitive("missing"), binding)


def test_from_entries_rejects_out_of_range():
    with pytest.raises((ShapeError, IndexError, ValueError)):
        Tensor.from_entries((A,), (A,), {(5, 0): 1})
