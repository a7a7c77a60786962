"""Text front end: a line-oriented document format for spaces, tensors and
jobs, plus the ``altbialg`` command.

Document syntax (one statement per line; ``#`` starts a comment)::

    space A dim 3 basis e1 e2 e3
    mul A: e1 * e2 = e3                  # entry of the map named A.mul
    comul A: e2 = e3 (x) e3              # entry of the map named A.comul
    map theta dom A A cod V              # declare a named map
    theta: e1 * e1 = v                   # entry; lhs labels joined by *
    map r cod A A                        # no dom: an element of A (x) A
    r: = e1 (x) e3 - e3 (x) e1
    check alternative A
    construct biproduct A r=r as E
    check bialgebra E

Right-hand sides are sums of ``coef label (x) label`` terms with rational
coefficients written ``p/q``; ``0`` is the empty sum.  Jobs are
``verb target [key=value ...]`` lines executed in order.  The subcommand
(check / construct / search / classify) is a mode gate: the document must
contain at least one job with that verb, and every job is run regardless.

Exit codes: 0 all checks passed, 1 some check failed, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, field
from fractions import Fraction

from . import extending as ext
from .braided import RMatrix, biproduct, braided_self_from_r, check_aybe, \
    check_r_identities, delta_r
from .errors import AltBialgError, DslError, DslSyntaxError, \
    PrerequisiteFailed, ShapeError, UnknownSpace
from .report import CheckReport, residual_result
from .structures import AlgebraData, BialgebraData, CoalgebraData, \
    associator, check_alternative, check_bialgebra, check_coalternative
from .tensorkit import Space, Tensor, nonzero_entries

# ---------------------------------------------------------------------------
# Document model
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SpaceDecl:
    name: str
    dim: int
    basis: tuple[str, ...]
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class MapDecl:
    """A named multilinear map given by entries.  ``dom``/``cod`` are space
    names; each entry is (domain index tuple, codomain index tuple, coefficient)
    and the tuple is sorted and coefficient-merged (normal form)."""

    name: str
    dom: tuple[str, ...]
    cod: tuple[str, ...]
    entries: tuple[tuple[tuple[int, ...], tuple[int, ...], Fraction], ...] = ()
    line: int = field(default=0, compare=False)


@dataclass(frozen=True)
class Job:
    verb: str
    words: tuple[str, ...]
    line: int = field(default=0, compare=False)

    def target(self) -> str:
        positional = [w for w in self.words if "=" not in w]
        if len(positional) < 2:
            raise DslError(f"job needs a target: {self.verb} "
                           + " ".join(self.words), self.line)
        return positional[1]

    def kwargs(self) -> dict[str, str]:
        out = {}
        for w in self.words:
            if "=" in w:
                k, _, v = w.partition("=")
                out[k] = v
        return out


@dataclass(frozen=True)
class SpecDocument:
    spaces: tuple[SpaceDecl, ...]
    maps: tuple[MapDecl, ...]
    jobs: tuple[Job, ...]


JOB_VERBS = ("check", "construct", "search", "classify")


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------

_SYMBOLS = (":", "=", "+", "-", "*")


def _tokenize_entry(text: str, line: int):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
        elif text.startswith("(x)", i):
            tokens.append(("(x)", i))
            i += 3
        elif ch in _SYMBOLS:
            tokens.append((ch, i))
            i += 1
        elif ch.isalnum() or ch in "_./":
            j = i
            while j < n and (text[j].isalnum() or text[j] in "_./"):
                j += 1
            tokens.append((text[i:j], i))
            i = j
        else:
            raise DslSyntaxError(f"unexpected character {ch!r}", line, i + 1)
    return tokens


def _is_number(tok: str) -> bool:
    return tok[0].isdigit()


def _parse_fraction(tok: str, line: int, col: int) -> Fraction:
    try:
        return Fraction(tok)
    except (ValueError, ZeroDivisionError) as exc:
        raise DslSyntaxError(f"bad coefficient {tok!r}: {exc}", line, col + 1)


class _EntryParser:
    """lhs '=' rhs on one line; lhs is labels joined by '*', rhs is a signed
    sum of 'coef label (x) label' terms or '0'."""

    def __init__(self, text, line):
        self.tokens = _tokenize_entry(text, line)
        self.pos = 0
        self.line = line
        self.text = text

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def next(self):
        if self.pos >= len(self.tokens):
            raise DslSyntaxError("unexpected end of line", self.line,
                                 len(self.text) + 1)
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, want):
        tok, col = self.next()
        if tok != want:
            raise DslSyntaxError(f"expected {want!r}, got {tok!r}",
                                 self.line, col + 1)

    def parse(self):
        lhs = []
        while self.peek() not in ("=", None):
            tok, col = self.next()
            if lhs:
                if tok != "*":
                    raise DslSyntaxError("expected '*' between domain labels",
                                         self.line, col + 1)
                tok, col = self.next()
            if tok in _SYMBOLS or tok == "(x)":
                raise DslSyntaxError(f"expected a basis label, got {tok!r}",
                                     self.line, col + 1)
            lhs.append(tok)
        self.expect("=")
        rhs = self.parse_sum()
        if self.peek() is not None:
            tok, col = self.next()
            raise DslSyntaxError(f"trailing input {tok!r}", self.line, col + 1)
        return tuple(lhs), rhs

    def parse_sum(self):
        if self.peek() is None:
            raise DslSyntaxError("missing right-hand side", self.line,
                                 len(self.text) + 1)
        if self.peek() == "0" and self.pos + 1 == len(self.tokens):
            self.next()
            return []
        terms = []
        sign = Fraction(1)
        if self.peek() == "-":
            self.next()
            sign = Fraction(-1)
        terms.append(self.parse_term(sign))
        while self.peek() in ("+", "-"):
            op, _ = self.next()
            terms.append(self.parse_term(Fraction(1 if op == "+" else -1)))
        return terms

    def parse_term(self, sign: Fraction):
        coef = sign
        tok, col = self.next()
        if _is_number(tok):
            coef *= _parse_fraction(tok, self.line, col)
            tok, col = self.next()
        labels = [tok]
        while self.peek() == "(x)":
            self.next()
            tok, col = self.next()
            if tok in _SYMBOLS or tok == "(x)" or _is_number(tok):
                raise DslSyntaxError(f"expected a basis label, got {tok!r}",
                                     self.line, col + 1)
            labels.append(tok)
        if labels[0] in _SYMBOLS or _is_number(labels[0]):
            raise DslSyntaxError(f"expected a basis label, got {labels[0]!r}",
                                 self.line, col + 1)
        return coef, tuple(labels)


class _DocBuilder:
    def __init__(self):
        self.spaces: dict[str, SpaceDecl] = {}
        self.sigs: dict[str, tuple[tuple[str, ...], tuple[str, ...], int]] = {}
        self.raw_entries: dict[str, list] = {}
        self.jobs: list[Job] = []

    def space(self, name: str, line: int) -> SpaceDecl:
        if name not in self.spaces:
            raise UnknownSpace(f"unknown space {name!r}", line)
        return self.spaces[name]

    def declare_map(self, name, dom, cod, line):
        if name in self.sigs or name in self.spaces:
            raise DslError(f"duplicate name {name!r}", line)
        for s in dom + cod:
            self.space(s, line)
        self.sigs[name] = (tuple(dom), tuple(cod), line)
        self.raw_entries[name] = []

    def add_entry(self, name, lhs_labels, terms, line):
        if name not in self.sigs:
            raise DslError(f"entry for undeclared map {name!r}", line)
        dom, cod, _ = self.sigs[name]
        if len(lhs_labels) != len(dom):
            raise ShapeError(f"map {name!r} expects {len(dom)} domain labels, "
                             f"got {len(lhs_labels)}", line)
        dom_idx = tuple(self._label_index(s, lbl, line)
                        for s, lbl in zip(dom, lhs_labels))
        for coef, labels in terms:
            if len(labels) != len(cod):
                raise ShapeError(f"map {name!r} expects {len(cod)} codomain "
                                 f"factors, got {len(labels)}", line)
            cod_idx = tuple(self._label_index(s, lbl, line)
                            for s, lbl in zip(cod, labels))
            self.raw_entries[name].append((dom_idx, cod_idx, coef))

    def _label_index(self, space_name, label, line):
        decl = self.space(space_name, line)
        try:
            return decl.basis.index(label)
        except ValueError:
            raise ShapeError(f"{label!r} is not a basis label of space "
                             f"{space_name}", line)

    def build(self) -> SpecDocument:
        maps = []
        for name, (dom, cod, line) in self.sigs.items():
            merged: dict[tuple, Fraction] = {}
            for dom_idx, cod_idx, coef in self.raw_entries[name]:
                key = (dom_idx, cod_idx)
                merged[key] = merged.get(key, Fraction(0)) + coef
            entries = tuple((d, c, v) for (d, c), v in sorted(merged.items())
                            if v != 0)
            maps.append(MapDecl(name, dom, cod, entries, line))
        return SpecDocument(tuple(self.spaces.values()), tuple(maps),
                            tuple(self.jobs))


def parse(text: str) -> SpecDocument:
    """Parse a document; every error carries the 1-based line number."""
    b = _DocBuilder()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        words = line.split()
        head = words[0]
        if head == "space":
            _parse_space(b, words, lineno)
        elif head in ("mul", "comul"):
            _parse_structure_entry(b, head, line, lineno)
        elif head == "map":
            _parse_map_decl(b, words, lineno)
        elif head in JOB_VERBS:
            b.jobs.append(Job(head, tuple(words), lineno))
        elif ":" in line:
            name, _, rest = line.partition(":")
            name = name.strip()
            lhs, terms = _EntryParser(rest, lineno).parse()
            b.add_entry(name, lhs, terms, lineno)
        else:
            raise DslSyntaxError(f"unrecognized statement {head!r}", lineno, 1)
    return b.build()


def _parse_space(b: _DocBuilder, words, lineno):
    if len(words) < 5 or words[2] != "dim" or words[4] != "basis":
        raise DslSyntaxError(
            "expected: space NAME dim N basis L1 L2 ...", lineno, 1)
    name = words[1]
    if name in b.spaces or name in b.sigs:
        raise DslError(f"duplicate name {name!r}", lineno)
    try:
        dim = int(words[3])
    except ValueError:
        raise DslSyntaxError(f"bad dimension {words[3]!r}", lineno, 1)
    basis = tuple(words[5:])
    if len(basis) != dim or len(set(basis)) != dim:
        raise ShapeError(f"space {name}: need {dim} distinct basis labels, "
                         f"got {len(basis)}", lineno)
    b.spaces[name] = SpaceDecl(name, dim, basis, lineno)


def _parse_structure_entry(b: _DocBuilder, head, line, lineno):
    rest = line[len(head):].strip()
    space_name, sep, entry = rest.partition(":")
    space_name = space_name.strip()
    if not sep:
        raise DslSyntaxError(f"expected: {head} SPACE: entry", lineno, 1)
    b.space(space_name, lineno)
    name = f"{space_name}.{head}"
    if name not in b.sigs:
        if head == "mul":
            b.declare_map(name, (space_name, space_name), (space_name,), lineno)
        else:
            b.declare_map(name, (space_name,), (space_name, space_name), lineno)
    lhs, terms = _EntryParser(entry, lineno).parse()
    b.add_entry(name, lhs, terms, lineno)


def _parse_map_decl(b: _DocBuilder, words, lineno):
    # map NAME [dom S1 S2 ...] cod S1 S2 ...
    if len(words) < 3:
        raise DslSyntaxError("expected: map NAME [dom ...] cod ...", lineno, 1)
    name = words[1]
    rest = words[2:]
    dom: list[str] = []
    cod: list[str] = []
    bucket = None
    for w in rest:
        if w == "dom":
            bucket = dom
        elif w == "cod":
            bucket = cod
        elif bucket is None:
            raise DslSyntaxError("expected 'dom' or 'cod'", lineno, 1)
        else:
            bucket.append(w)
    if not cod:
        raise DslSyntaxError(f"map {name!r} needs a codomain", lineno, 1)
    b.declare_map(name, tuple(dom), tuple(cod), lineno)


# ---------------------------------------------------------------------------
# Printing (normal form)
# ---------------------------------------------------------------------------


def _format_terms(cod_basis, entries):
    if not entries:
        return "0"
    parts = []
    for first, (cod_idx, coef) in enumerate(entries):
        labels = " (x) ".join(basis[i] for basis, i in zip(cod_basis, cod_idx))
        mag = -coef if coef < 0 else coef
        body = labels if mag == 1 else f"{mag} {labels}"
        if first == 0:
            parts.append(f"- {body}" if coef < 0 else body)
        else:
            parts.append(f"{'-' if coef < 0 else '+'} {body}")
    return " ".join(parts)


def print_document(doc: SpecDocument) -> str:
    """Normalized text; ``parse(print_document(doc)) == doc``."""
    spaces = {s.name: s for s in doc.spaces}
    out = []
    for s in doc.spaces:
        out.append(f"space {s.name} dim {s.dim} basis " + " ".join(s.basis))
    for m in doc.maps:
        base, dot, suffix = m.name.rpartition(".")
        sugar = dot and suffix in ("mul", "comul") and base in spaces
        if not sugar:
            head = f"map {m.name}"
            if m.dom:
                head += " dom " + " ".join(m.dom)
            head += " cod " + " ".join(m.cod)
            out.append(head)
        dom_basis = [spaces[n].basis for n in m.dom]
        cod_basis = [spaces[n].basis for n in m.cod]
        grouped: dict[tuple, list] = {}
        for dom_idx, cod_idx, coef in m.entries:
            grouped.setdefault(dom_idx, []).append((cod_idx, coef))
        for dom_idx in sorted(grouped):
            lhs = " * ".join(b[i] for b, i in zip(dom_basis, dom_idx))
            rhs = _format_terms(cod_basis, grouped[dom_idx])
            prefix = f"{suffix} {base}" if sugar else m.name
            out.append(f"{prefix}: {lhs} = {rhs}".replace(":  =", ": ="))
    for j in doc.jobs:
        out.append(" ".join(j.words))
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# Execution
# ---------------------------------------------------------------------------


class _Env:
    """Spaces and tensors visible to jobs: document declarations plus
    anything produced by construct jobs."""

    def __init__(self, doc: SpecDocument):
        self.spaces: dict[str, Space] = {
            s.name: Space(s.name, s.dim, s.basis) for s in doc.spaces}
        self.tensors: dict[str, Tensor] = {}
        self.map_sigs: dict[str, tuple[tuple[str, ...], tuple[str, ...]]] = {}
        for m in doc.maps:
            dom = tuple(self.spaces[n] for n in m.dom)
            cod = tuple(self.spaces[n] for n in m.cod)
            entries = {d + c: v for d, c, v in m.entries}
            self.tensors[m.name] = Tensor.from_entries(dom, cod, entries)
            self.map_sigs[m.name] = (m.dom, m.cod)

    def space(self, name: str, line: int) -> Space:
        if name not in self.spaces:
            raise UnknownSpace(f"unknown space {name!r}", line)
        return self.spaces[name]

    def tensor(self, name: str, line: int) -> Tensor:
        if name not in self.tensors:
            raise DslError(f"unknown map {name!r}", line)
        return self.tensors[name]

    def algebra(self, name: str, line: int) -> AlgebraData:
        return AlgebraData(self.space(name, line),
                           self.tensor(f"{name}.mul", line))

    def coalgebra(self, name: str, line: int) -> CoalgebraData:
        return CoalgebraData(self.space(name, line),
                             self.tensor(f"{name}.comul", line))

    def bialgebra(self, name: str, line: int) -> BialgebraData:
        return BialgebraData(self.algebra(name, line),
                             self.coalgebra(name, line))

    def define(self, name: str, t: Tensor, line: int):
        if name in self.tensors:
            raise DslError(f"construct would overwrite map {name!r}", line)
        self.tensors[name] = t

    def define_space(self, s: Space, line: int):
        if s.name in self.spaces:
            raise DslError(f"construct would overwrite space {s.name!r}", line)
        self.spaces[s.name] = s


def _tensor_lines(name: str, t: Tensor) -> list[str]:
    """Entry lines of a tensor in document syntax (for construct output)."""
    spaces = t.dom + t.cod
    grouped: dict[tuple, list] = {}
    for idx, val in nonzero_entries(t):
        dom_idx, cod_idx = idx[:len(t.dom)], idx[len(t.dom):]
        grouped.setdefault(dom_idx, []).append((cod_idx, val))
    if not grouped:
        return [f"{name}: zero map"]
    cod_basis = [s.basis_labels for s in t.cod]
    out = []
    for dom_idx in sorted(grouped):
        lhs = " * ".join(spaces[p].basis_labels[i]
                         for p, i in enumerate(dom_idx))
        out.append(f"{name}: {lhs} = {_format_terms(cod_basis, grouped[dom_idx])}"
                   .replace(":  =", ": ="))
    return out


def _datum_lines(d: ext.ExtendingDatum) -> list[str]:
    out = []
    for slot, t in d.slots().items():
        for line in _tensor_lines(slot, t):
            if not line.endswith("zero map"):
                out.append(line)
    return out or ["(all slots zero)"]


def _rmatrix(env: _Env, job: Job) -> RMatrix:
    kwargs = job.kwargs()
    if "r" not in kwargs:
        raise DslError(f"{job.verb} {job.words[1]} needs r=MAP", job.line)
    r = env.tensor(kwargs["r"], job.line)
    return RMatrix(env.algebra(job.target(), job.line), r)


def _extending_datum(env: _Env, job: Job) -> ext.ExtendingDatum:
    kwargs = job.kwargs()
    kind = kwargs.get("kind")
    if kind not in ext.KINDS:
        raise DslError(f"need kind=one of {', '.join(ext.KINDS)}", job.line)
    if "complement" not in kwargs:
        raise DslError("need complement=SPACE", job.line)
    target = job.target()
    if kind in ext.ALGEBRA_KINDS:
        base = env.algebra(target, job.line)
    elif kind in ext.COALGEBRA_KINDS:
        base = env.coalgebra(target, job.line)
    else:
        base = env.bialgebra(target, job.line)
    complement = env.space(kwargs["complement"], job.line)
    slots = {}
    for slot in ext.KIND_SLOTS[kind]:
        if slot in kwargs:
            slots[slot] = env.tensor(kwargs[slot], job.line)
    extra = set(kwargs) - set(ext.KIND_SLOTS[kind]) - {"kind", "complement"}
    if extra:
        raise DslError(f"unknown job arguments: {', '.join(sorted(extra))}",
                       job.line)
    try:
        return ext.ExtendingDatum(kind=kind, base=base, complement=complement,
                                  **slots)
    except (ValueError, AltBialgError) as exc:
        raise DslError(str(exc), job.line)


@dataclass
class _JobOutcome:
    lines: list[str]
    records: list[str]
    failed: bool = False


def _render_report(jobno: int, rep: CheckReport, out: _JobOutcome):
    out.lines.append(str(rep))
    for c in rep.conditions:
        rec = (f"record job={jobno} suite={rep.suite} "
               f"condition={c.condition_id} "
               f"status={'pass' if c.passed else 'fail'}")
        if c.witnesses:
            rec += " witness=" + str(c.witnesses[0]).replace(" ", "")
        out.records.append(rec)
    for n in rep.notes:
        out.records.append(f"record job={jobno} suite={rep.suite} note={n!r}")
    if not rep.passed:
        out.failed = True


def _render_map(jobno: int, env: _Env, name: str, t: Tensor, out: _JobOutcome,
                line: int):
    env.define(name, t, line)
    out.lines.append(f"defined {name}")
    for ln in _tensor_lines(name, t):
        out.lines.append("  " + ln)
    out.records.append(f"record job={jobno} defined={name} "
                       f"entries={sum(1 for _ in nonzero_entries(t))}")


def _run_check(jobno: int, env: _Env, job: Job, what: str,
               witness_limit: int, out: _JobOutcome):
    target = job.target()
    if what == "alternative":
        rep = check_alternative(env.algebra(target, job.line), witness_limit)
    elif what == "associative":
        rep = CheckReport("associative", (residual_result(
            "assoc", associator(env.algebra(target, job.line)),
            witness_limit),))
    elif what == "coalternative":
        rep = check_coalternative(env.coalgebra(target, job.line),
                                  witness_limit)
    elif what == "bialgebra":
        rep = check_bialgebra(env.bialgebra(target, job.line), witness_limit)
    elif what == "aybe":
        rep = check_aybe(_rmatrix(env, job), witness_limit)
    elif what == "rmatrix":
        rep = check_r_identities(_rmatrix(env, job), witness_limit)
    elif what == "extending":
        d = _extending_datum(env, job)
        rep = ext.check_extending_datum(d, witness_limit)
    else:
        raise DslError(f"unknown check {what!r}", job.line)
    _render_report(jobno, rep, out)


def _run_construct(jobno: int, env: _Env, job: Job, what: str,
                   out: _JobOutcome):
    kwargs = job.kwargs()
    target = job.target()
    positional = [w for w in job.words if "=" not in w]
    as_name = None
    if "as" in positional:
        at = positional.index("as")
        if at + 1 >= len(positional):
            raise DslError("'as' needs a name", job.line)
        as_name = positional[at + 1]
    if what == "deltar":
        co = delta_r(_rmatrix(env, job))
        _render_map(jobno, env, as_name or f"{target}.comul", co.comul, out,
                    job.line)
    elif what == "biproduct":
        name = as_name or "E"
        bd = braided_self_from_r(_rmatrix(env, job))
        e = biproduct(bd, name)
        env.define_space(e.space, job.line)
        _render_map(jobno, env, f"{name}.mul", e.mul, out, job.line)
        _render_map(jobno, env, f"{name}.comul", e.comul, out, job.line)
    elif what == "unified":
        name = as_name or "E"
        d = _extending_datum(env, job)
        e = ext.unified_product(d, name)
        env.define_space(e.space, job.line)
        if d.kind in ext.ALGEBRA_KINDS:
            _render_map(jobno, env, f"{name}.mul", e.mul, out, job.line)
        elif d.kind in ext.COALGEBRA_KINDS:
            _render_map(jobno, env, f"{name}.comul", e.comul, out, job.line)
        else:
            _render_map(jobno, env, f"{name}.mul", e.mul, out, job.line)
            _render_map(jobno, env, f"{name}.comul", e.comul, out, job.line)
    else:
        raise DslError(f"unknown construct {what!r}", job.line)
    del kwargs


def _run_search(jobno: int, env: _Env, job: Job, what: str, grid,
                max_candidates: int, out: _JobOutcome, bucketed: bool):
    if what != "extensions":
        raise DslError(f"unknown {'classify' if bucketed else 'search'} "
                       f"{what!r}", job.line)
    d = _extending_datum(env, job)
    if bucketed:
        classes = ext.classify_extensions(d.base, d.complement, d.kind,
                                          grid, max_candidates)
        out.lines.append(f"classes: {len(classes)}")
        out.records.append(f"record job={jobno} classes={len(classes)}")
        for i, cls in enumerate(classes, start=1):
            out.lines.append(f"class {i}: size {len(cls.members)}")
            for ln in _datum_lines(cls.representative):
                out.lines.append("  " + ln)
            out.records.append(f"record job={jobno} class={i} "
                               f"size={len(cls.members)}")
    else:
        found = ext.enumerate_extensions(d.base, d.complement, d.kind,
                                         grid, max_candidates)
        out.lines.append(f"passing data: {len(found)}")
        out.records.append(f"record job={jobno} passing={len(found)}")
        for i, datum in enumerate(found, start=1):
            out.lines.append(f"datum {i}:")
            for ln in _datum_lines(datum):
                out.lines.append("  " + ln)


def run(doc: SpecDocument, witness_limit: int = 10, grid=(-1, 0, 1),
        max_candidates: int = 25000):
    """Execute the document's jobs in order.

    Returns (text report, structured records, exit code): 0 when every check
    passed, 1 when some check or construction prerequisite failed."""
    env = _Env(doc)
    lines: list[str] = []
    records: list[str] = []
    failed = False
    for jobno, job in enumerate(doc.jobs, start=1):
        lines.append(f"== job {jobno}: " + " ".join(job.words) + " ==")
        out = _JobOutcome([], [])
        what = job.words[1] if len(job.words) > 1 else ""
        try:
            if job.verb == "check":
                # check WHAT TARGET ...: the operation name precedes the target
                op, rest = what, Job(job.verb, (job.verb,) + job.words[2:],
                                     job.line)
                _run_check(jobno, env, rest, op, witness_limit, out)
            elif job.verb == "construct":
                op, rest = what, Job(job.verb, (job.verb,) + job.words[2:],
                                     job.line)
                _run_construct(jobno, env, rest, op, out)
            elif job.verb in ("search", "classify"):
                op, rest = what, Job(job.verb, (job.verb,) + job.words[2:],
                                     job.line)
                _run_search(jobno, env, rest, op, grid, max_candidates, out,
                            bucketed=(job.verb == "classify"))
            else:
                raise DslError(f"unknown job verb {job.verb!r}", job.line)
        except PrerequisiteFailed as exc:
            out.lines.append(f"prerequisite failed: {exc}")
            if exc.report is not None:
                _render_report(jobno, exc.report, out)
            out.failed = True
        lines.extend(out.lines)
        records.extend(out.records)
        failed = failed or out.failed
    return "\n".join(lines) + ("\n" if lines else ""), \
        "\n".join(records) + ("\n" if records else ""), (1 if failed else 0)


# ---------------------------------------------------------------------------
# Command line
# ---------------------------------------------------------------------------


def _parse_grid(text: str):
    try:
        return tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError):
        raise DslError(f"bad grid {text!r}")


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="altbialg",
        description="Exact checks and constructions for alternative "
                    "(co/bi)algebra documents.")
    sub = parser.add_subparsers(dest="command", required=True)
    for verb in JOB_VERBS:
        p = sub.add_parser(verb, help=f"run a document containing {verb} jobs")
        p.add_argument("file")
        p.add_argument("--format", choices=("text", "structured"),
                       default="text")
        p.add_argument("--witness-limit", type=int, default=10)
        p.add_argument("--grid", default="-1,0,1")
        p.add_argument("--max-candidates", type=int, default=25000)
    args = parser.parse_args(argv)

    try:
        with open(args.file, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    try:
        doc = parse(text)
        if not any(j.verb == args.command for j in doc.jobs):
            raise DslError(f"document contains no {args.command!r} job")
        grid = _parse_grid(args.grid)
        report, records, code = run(doc, args.witness_limit, grid,
                                    args.max_candidates)
    except DslError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AltBialgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2

    sys.stdout.write(report if args.format == "text" else records)
    return code


if __name__ == "__main__":
    sys.exit(main())
