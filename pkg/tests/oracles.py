"""Independent oracles for the test suite.

Everything in here is computed with plain Python loops over dictionaries of
Fractions -- deliberately avoiding the package's tensor engine -- so that the
tests can cross-check the engine against a second, independent evaluation
path.
"""

from fractions import Fraction
from altbialg import AlgebraData, Space, Tensor


# ---------------------------------------------------------------------------
# Cayley-Dickson doubling
# ---------------------------------------------------------------------------


def cayley_dickson_table(levels: int):
    """Structure constants and conjugation signs after `levels` doublings of
    the reals.  Returns (mul, conj) with mul[(i, j, k)] the coefficient of
    e_k in e_i * e_j and conj[i] the sign of the conjugate of e_i.

    Doubling rule on pairs: (a, b)(c, d) = (ac - conj(d)b, da + b conj(c)),
    conj(a, b) = (conj(a), -b).
    """
    mul = {(0, 0, 0): Fraction(1)}
    conj = [Fraction(1)]
    for _ in range(levels):
        n = len(conj)
        new = {}

        def bump(key, value, new=new):
            new[key] = new.get(key, 0) + value

        for (i, j, k), c in mul.items():
            # (e_i, 0)(e_j, 0) = (e_i e_j, 0)
            bump((i, j, k), c)
            # (e_j, 0)(0, e_i): a=e_j, d=e_i -> (0, d a) = (0, e_i e_j)
            bump((j, n + i, n + k), c)
            # (0, e_i)(e_j, 0): b=e_i, c=e_j -> (0, b conj(c))
            bump((n + i, j, n + k), c * conj[j])
            # (0, e_j)(0, e_i): b=e_j, d=e_i -> (-conj(d) b, 0) = (-conj(e_i) e_i e_j, 0)
            bump((n + j, n + i, k), -c * conj[i])
        mul = {key: c for key, c in new.items() if c}
        conj = conj + [Fraction(-1)] * n
    return mul, conj


def octonion_algebra() -> AlgebraData:
    """The octonions over Q via three Cayley-Dickson doublings."""
    mul, _ = cayley_dickson_table(3)
    space = Space("O", 8, tuple(f"e{i}" for i in range(8)))
    return AlgebraData(space, Tensor.from_entries((space, space), (space,), mul))


# ---------------------------------------------------------------------------
# Direct residual oracles (dict-of-Fractions arithmetic)
# ---------------------------------------------------------------------------


def _mul_entries(alg: AlgebraData) -> dict:
    return {idx: val for idx, val in _tensor_entries(alg.mul)}


def _tensor_entries(t: Tensor):
    from altbialg import nonzero_entries
    yield from nonzero_entries(t)


def associator_entries(alg: AlgebraData) -> dict:
    """(i, j, k, l) -> coefficient of e_l in (e_i e_j) e_k - e_i (e_j e_k)."""
    mul = _mul_entries(alg)
    n = alg.space.dim
    out = {}
    for (i, j, p), c1 in mul.items():
        for k in range(n):
            for l in range(n):
                c2 = mul.get((p, k, l))
                if c2:
                    key = (i, j, k, l)
                    out[key] = out.get(key, 0) + c1 * c2
    for (j, k, q), c1 in mul.items():
        for i in range(n):
            for l in range(n):
                c2 = mul.get((i, q, l))
                if c2:
                    key = (i, j, k, l)
                    out[key] = out.get(key, 0) - c1 * c2
    return {key: c for key, c in out.items() if c}


def delta_r_entries(mul: dict, r: dict, dim: int) -> dict:
    """(i, p, q) -> coefficient of e_p (x) e_q in Delta_r(e_i), computed from
    Delta_r(a) = sum_{u,v} r[u,v] (e_u a (x) e_v  -  e_u (x) a e_v)."""
    out = {}
    for (u, v), c in r.items():
        for i in range(dim):
            for p in range(dim):
                c1 = mul.get((u, i, p))
                if c1:
                    key = (i, p, v)
                    out[key] = out.get(key, 0) + c * c1
            for q in range(dim):
                c2 = mul.get((i, v, q))
                if c2:
                    key = (i, u, q)
                    out[key] = out.get(key, 0) - c * c2
    return {key: c for key, c in out.items() if c}


def aybe_residual_entries(mul: dict, r: dict, dim: int) -> dict:
    """(p, q, s) -> coefficient of r23 r12 - r12 r13 - r13 r23 in A(x)A(x)A."""
    out = {}
    for (a, b), c1 in r.items():
        for (cc, d), c2 in r.items():
            # r23 r12 = sum e_c (x) (e_a e_d) (x) e_b  (r12 = a(x)b, r23 = c(x)d)
            for q in range(dim):
                m = mul.get((a, d, q))
                if m:
                    key = (cc, q, b)
                    out[key] = out.get(key, 0) + c1 * c2 * m
            # r12 r13 = sum (e_a e_c) (x) e_b (x) e_d  (r12 = a(x)b, r13 = c(x)d)
            for p in range(dim):
                m = mul.get((a, cc, p))
                if m:
                    key = (p, b, d)
                    out[key] = out.get(key, 0) - c1 * c2 * m
            # r13 r23 = sum e_a (x) e_c (x) (e_b e_d)  (r13 = a(x)b, r23 = c(x)d)
            for s in range(dim):
                m = mul.get((b, d, s))
                if m:
                    key = (a, cc, s)
                    out[key] = out.get(key, 0) - c1 * c2 * m
    return {key: c for key, c in out.items() if c}
