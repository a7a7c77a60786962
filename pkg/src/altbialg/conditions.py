"""Compiler from Sweedler-style condition strings to tensor expressions.

Identity suites are written as ``(id, "LHS = RHS")`` tables in a mini-notation
that mirrors standard Hopf-algebra typography:

* variables are single names with a declared space role (``a``, ``b`` in A;
  ``x``, ``y`` in H, ...);
* comultiplication-like maps are written through Sweedler markers on a
  variable: ``a_1 (x) a_2`` (comultiplication), ``a_(-1) (x) a_(0)`` /
  ``a_(0) (x) a_(1)`` (left / right coaction), ``a_<1> (x) a_<2>`` and
  ``x_{1} (x) x_{2}`` (cycle maps), ``x_[-1] (x) x_[0]`` / ``x_[0] (x) x_[1]``
  (coactions on the second space) — the pair of indices present in a term
  selects the map;
* binary operations are explicit infix symbols (``*``, ``▷``, ``◁``, ``⇀``,
  ``↼``) resolved through the suite context by operand roles, with parentheses
  required for nesting (the algebras are nonassociative);
* named maps use call syntax (``theta(a, b)``, ``phi(a*b)``, ``P(a)``), and
  ``tau(...)`` flips the two output legs of its argument;
* ``⊗`` separates output tensor factors; each side is a signed sum of terms.

Compilation produces one :class:`~altbialg.tensorkit.Expr` per side: a sum of
``Compose([combiner, Flip, expander])`` terms, where the expander applies the
Sweedler maps to the input variables, the flip reorders legs into consumption
order, and the combiner applies the products/calls factor by factor.  No
identity is ever hand-expanded into index loops in host code.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .report import CheckReport, ConditionResult, residual_result
from .tensorkit import (Binding, Compose, Expr, Flip, Identity, Primitive, Sum,
                        Tensor, TensorProduct, evaluate)

# ---------------------------------------------------------------------------
# Suite contexts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Context:
    """Typing environment for one family of condition tables."""

    variables: dict[str, str]
    # (role, marker_kind, (low_leg, high_leg)) -> (slot, (low_role, high_role))
    expansions: dict[tuple[str, str, tuple[int, int]], tuple[str, tuple[str, str]]]
    # (symbol, left_role, right_role) -> (slot, cod_role)
    ops: dict[tuple[str, str, str], tuple[str, str]]
    # name -> (arg roles, cod roles)
    funcs: dict[str, tuple[tuple[str, ...], tuple[str, ...]]]

    def var_order(self) -> tuple[str, ...]:
        return tuple(self.variables)


# ---------------------------------------------------------------------------
# Tokenizer / parser
# ---------------------------------------------------------------------------

_TOKEN_RE = re.compile(r"""
    (?P<marker>_(?:\(-?\d\)|\[-?\d\]|<\d>|\{\d\}|\d))
  | (?P<name>[A-Za-z][A-Za-z0-9]*)
  | (?P<num>\d+)
  | (?P<op>[▷◁⇀↼*])
  | (?P<tensor>⊗)
  | (?P<sym>[()+\-,=])
  | (?P<ws>\s+)
""", re.VERBOSE)

_MARKER_KIND = {"(": "paren", "[": "bracket", "<": "angle", "{": "brace"}


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            raise ValueError(f"cannot tokenize condition at ...{text[pos:pos + 20]!r}")
        pos = m.end()
        kind = m.lastgroup
        if kind == "ws":
            continue
        value = m.group()
        if kind == "marker":
            body = value[1:]
            if body[0] in _MARKER_KIND:
                tokens.append(("marker", (_MARKER_KIND[body[0]], int(body[1:-1]))))
            else:
                tokens.append(("marker", ("plain", int(body))))
        else:
            tokens.append((kind, value))
    return tokens


@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Marker:
    name: str
    kind: str
    leg: int


@dataclass(frozen=True)
class Call:
    func: str
    args: tuple


@dataclass(frozen=True)
class BinOp:
    sym: str
    left: object
    right: object


class _Parser:
    def __init__(self, tokens, text):
        self.tokens = tokens
        self.pos = 0
        self.text = text

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else (None, None)

    def next(self):
        tok = self.peek()
        self.pos += 1
        return tok

    def expect(self, kind, value=None):
        k, v = self.next()
        if k != kind or (value is not None and v != value):
            raise ValueError(f"in {self.text!r}: expected {value or kind}, got {v!r}")
        return v

    def parse_equation(self):
        lhs = self.parse_sum()
        self.expect("sym", "=")
        rhs = self.parse_sum()
        if self.pos != len(self.tokens):
            raise ValueError(f"in {self.text!r}: trailing tokens")
        return lhs, rhs

    def parse_sum(self):
        # "0" denotes the empty sum
        if self.peek() == ("num", "0"):
            self.next()
            return []
        terms = []
        sign = Fraction(1)
        if self.peek()[1] in {"+", "-"} and self.peek()[0] == "sym":
            sign = Fraction(-1) if self.next()[1] == "-" else Fraction(1)
        terms.append(self.parse_term(sign))
        while self.peek() == ("sym", "+") or self.peek() == ("sym", "-"):
            sign = Fraction(-1) if self.next()[1] == "-" else Fraction(1)
            terms.append(self.parse_term(sign))
        return terms

    def parse_term(self, sign):
        coef = sign
        if self.peek()[0] == "num":
            coef *= int(self.next()[1])
        factors = [self.parse_factor()]
        while self.peek() == ("tensor", "⊗"):
            self.next()
            factors.append(self.parse_factor())
        return coef, factors

    def parse_factor(self):
        node = self.parse_operand()
        if self.peek()[0] == "op":
            sym = self.next()[1]
            right = self.parse_operand()
            node = BinOp(sym, node, right)
            if self.peek()[0] == "op":
                raise ValueError(f"in {self.text!r}: chained products need parentheses")
        return node

    def parse_operand(self):
        kind, value = self.peek()
        if (kind, value) == ("sym", "("):
            self.next()
            node = self.parse_factor()
            self.expect("sym", ")")
            return node
        if kind == "name":
            self.next()
            k2, v2 = self.peek()
            if k2 == "marker":
                self.next()
                return Marker(value, v2[0], v2[1])
            if (k2, v2) == ("sym", "("):
                self.next()
                args = [self.parse_factor()]
                while self.peek() == ("sym", ","):
                    self.next()
                    args.append(self.parse_factor())
                self.expect("sym", ")")
                return Call(value, tuple(args))
            return Var(value)
        raise ValueError(f"in {self.text!r}: unexpected token {value!r}")


# ---------------------------------------------------------------------------
# Compilation
# ---------------------------------------------------------------------------


def _leaves(node):
    if isinstance(node, (Var, Marker)):
        yield node
    elif isinstance(node, BinOp):
        yield from _leaves(node.left)
        yield from _leaves(node.right)
    elif isinstance(node, Call):
        for a in node.args:
            yield from _leaves(a)
    else:  # pragma: no cover
        raise TypeError(node)


def _marker_pairs(ctx: Context, leaves, text):
    """Validate marker usage and resolve each (var, kind) pair to its map."""
    pairs: dict[tuple[str, str], list[int]] = {}
    plain_uses: dict[str, int] = {}
    for leaf in leaves:
        if isinstance(leaf, Marker):
            pairs.setdefault((leaf.name, leaf.kind), []).append(leaf.leg)
        else:
            plain_uses[leaf.name] = plain_uses.get(leaf.name, 0) + 1
    resolved = {}
    for (var, kind), legs in pairs.items():
        if var in plain_uses:
            raise ValueError(f"in {text!r}: {var} used both plain and expanded")
        if len(legs) != 2 or len(set(legs)) != 2:
            raise ValueError(f"in {text!r}: {var} marker legs {legs} are not a pair")
        role = ctx.variables[var]
        key = (role, kind, tuple(sorted(legs)))
        if key not in ctx.expansions:
            raise ValueError(f"in {text!r}: no expansion for {var}:{role} {kind} {sorted(legs)}")
        resolved[(var, kind)] = ctx.expansions[key]
    for var, n in plain_uses.items():
        if n != 1:
            raise ValueError(f"in {text!r}: {var} appears {n} times (conditions are multilinear)")
        if var not in ctx.variables:
            raise ValueError(f"in {text!r}: unknown variable {var}")
    seen_vars = {}
    for leaf in leaves:
        seen_vars.setdefault(leaf.name, set())
        if isinstance(leaf, Marker):
            seen_vars[leaf.name].add(leaf.kind)
    for var, kinds in seen_vars.items():
        if len(kinds) > 1:
            raise ValueError(f"in {text!r}: {var} expanded by two different maps")
    return resolved


@dataclass
class _Combined:
    expr: Expr
    out_roles: tuple[str, ...]


def _compile_tree(node, ctx: Context, leg_roles: dict, consume, text) -> _Combined:
    """Compile one factor tree; `consume` pops the next leg index for a leaf."""
    if isinstance(node, (Var, Marker)):
        role = leg_roles[consume(node)]
        return _Combined(Identity(role), (role,))
    if isinstance(node, BinOp):
        left = _compile_tree(node.left, ctx, leg_roles, consume, text)
        right = _compile_tree(node.right, ctx, leg_roles, consume, text)
        if len(left.out_roles) != 1 or len(right.out_roles) != 1:
            raise ValueError(f"in {text!r}: operands of {node.sym} must be single legs")
        key = (node.sym, left.out_roles[0], right.out_roles[0])
        if key not in ctx.ops:
            raise ValueError(f"in {text!r}: no operation {key}")
        slot, cod = ctx.ops[key]
        return _Combined(Compose([Primitive(slot), TensorProduct([left.expr, right.expr])]), (cod,))
    if isinstance(node, Call):
        args = [_compile_tree(a, ctx, leg_roles, consume, text) for a in node.args]
        in_roles = tuple(r for a in args for r in a.out_roles)
        inner = args[0].expr if len(args) == 1 else TensorProduct([a.expr for a in args])
        builtin_perms = {"tau": (1, 0), "tau12": (1, 0, 2), "tau23": (0, 2, 1)}
        if node.func in builtin_perms:
            perm = builtin_perms[node.func]
            if len(in_roles) != len(perm):
                raise ValueError(f"in {text!r}: {node.func} needs a {len(perm)}-leg argument")
            return _Combined(Compose([Flip(in_roles, perm), inner]),
                             tuple(in_roles[p] for p in perm))
        if node.func not in ctx.funcs:
            raise ValueError(f"in {text!r}: unknown map {node.func}")
        sig_args, sig_cod = ctx.funcs[node.func]
        if in_roles != sig_args:
            raise ValueError(f"in {text!r}: {node.func} applied to {in_roles}, expects {sig_args}")
        return _Combined(Compose([Primitive(node.func), inner]), sig_cod)
    raise TypeError(node)  # pragma: no cover


def _compile_term(coef, factors, ctx: Context, dom_vars, text):
    leaves = [leaf for f in factors for leaf in _leaves(f)]
    resolved = _marker_pairs(ctx, leaves, text)

    produced = []          # (var, leg-or-None) tags in expander output order
    leg_roles_list = []
    expander_parts = []
    for var in dom_vars:
        role = ctx.variables[var]
        keys = [k for k in resolved if k[0] == var]
        if keys:
            slot, (lo_role, hi_role) = resolved[keys[0]]
            legs = sorted(l.leg for l in leaves if isinstance(l, Marker) and l.name == var)
            expander_parts.append(Primitive(slot))
            produced += [(var, legs[0]), (var, legs[1])]
            leg_roles_list += [lo_role, hi_role]
        else:
            expander_parts.append(Identity(role))
            produced.append((var, None))
            leg_roles_list.append(role)

    term_vars = {leaf.name for leaf in leaves}
    if term_vars != set(dom_vars):
        raise ValueError(f"in {text!r}: term uses {sorted(term_vars)}, condition domain is {dom_vars}")

    consumed_tags = [(l.name, l.leg if isinstance(l, Marker) else None) for l in leaves]
    perm = tuple(produced.index(tag) for tag in consumed_tags)

    leg_roles = dict(enumerate(leg_roles_list))
    counter = {"i": 0}

    def consume(leaf):
        i = counter["i"]
        counter["i"] += 1
        return perm[i]

    combined = [_compile_tree(f, ctx, leg_roles, consume, text) for f in factors]
    out_roles = tuple(r for c in combined for r in c.out_roles)
    combiner = combined[0].expr if len(combined) == 1 else TensorProduct([c.expr for c in combined])

    stages = [combiner]
    if perm != tuple(range(len(perm))):
        stages.append(Flip(tuple(leg_roles_list), perm))
    expander = expander_parts[0] if len(expander_parts) == 1 else TensorProduct(expander_parts)
    stages.append(expander)
    return coef, Compose(stages), out_roles


def _compile_side(terms, ctx: Context, dom_vars, text):
    if not terms:
        return None, None
    compiled = [_compile_term(coef, factors, ctx, dom_vars, text) for coef, factors in terms]
    out_roles = compiled[0][2]
    for _, _, roles in compiled[1:]:
        if roles != out_roles:
            raise ValueError(f"in {text!r}: terms have mixed output signatures {roles} vs {out_roles}")
    return Sum([(coef, expr) for coef, expr, _ in compiled]), out_roles


@dataclass(frozen=True)
class Condition:
    """One identity: a pair of expression trees over a shared variable domain."""

    cid: str
    dom_roles: tuple[str, ...]
    lhs: Optional[Expr]
    rhs: Optional[Expr]
    source: str = ""

    def residual(self, binding: Binding) -> Tensor:
        left = evaluate(self.lhs, binding) if self.lhs is not None else None
        right = evaluate(self.rhs, binding) if self.rhs is not None else None
        if left is None and right is None:
            raise ValueError(f"{self.cid}: both sides empty")
        if left is None:
            return -right
        if right is None:
            return left
        return left - right


def compile_condition(cid: str, text: str, ctx: Context) -> Condition:
    tokens = _tokenize(text)
    lhs_terms, rhs_terms = _Parser(tokens, text).parse_equation()
    used = [v for v in ctx.var_order()
            if any(leaf.name == v for _, factors in lhs_terms + rhs_terms
                   for f in factors for leaf in _leaves(f))]
    dom_vars = tuple(used)
    lhs, lroles = _compile_side(lhs_terms, ctx, dom_vars, text)
    rhs, rroles = _compile_side(rhs_terms, ctx, dom_vars, text)
    if lhs is not None and rhs is not None and lroles != rroles:
        raise ValueError(f"in {text!r}: sides have different signatures {lroles} vs {rroles}")
    dom_roles = tuple(ctx.variables[v] for v in dom_vars)
    return Condition(cid, dom_roles, lhs, rhs, source=text)


@dataclass(frozen=True)
class Suite:
    """A named list of conditions sharing one context."""

    name: str
    conditions: tuple[Condition, ...]

    def ids(self) -> tuple[str, ...]:
        return tuple(c.cid for c in self.conditions)

    def run(self, binding: Binding, witness_limit: int = 10,
            notes: Sequence[str] = (), stop_on_fail: bool = False) -> CheckReport:
        results = []
        for cond in self.conditions:
            res = residual_result(cond.cid, cond.residual(binding), witness_limit)
            results.append(res)
            if stop_on_fail and not res.passed:
                break
        return CheckReport(self.name, tuple(results), tuple(notes))


def make_suite(name: str, ctx: Context, table: Sequence, extra: Sequence[Condition] = ()) -> Suite:
    """Build a suite from (id, "lhs = rhs") rows plus optional prebuilt conditions."""
    conds = [compile_condition(cid, text, ctx) for cid, text in table]
    conds += list(extra)
    ids = [c.cid for c in conds]
    if len(set(ids)) != len(ids):
        raise ValueError(f"suite {name}: duplicate condition ids")
    return Suite(name, tuple(conds))
