"""Check reports: per-condition residuals with deterministic witnesses."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import islice

from .tensorkit import Tensor, nonzero_entries

DEFAULT_WITNESS_LIMIT = 10


@dataclass(frozen=True)
class Witness:
    """One nonzero residual entry, with basis labels for readability."""

    index: tuple[int, ...]
    labels: tuple[str, ...]
    value: Fraction

    def __str__(self):
        where = ",".join(self.labels) if self.labels else "()"
        return f"({where}) -> {self.value}"


@dataclass(frozen=True)
class ConditionResult:
    condition_id: str
    passed: bool
    witnesses: tuple[Witness, ...] = ()

    def __str__(self):
        if self.passed:
            return f"[{self.condition_id}] ok"
        shown = "; ".join(str(w) for w in self.witnesses)
        return f"[{self.condition_id}] FAIL {shown}"


@dataclass(frozen=True)
class CheckReport:
    """Outcome of one identity suite: a verdict per condition id."""

    suite: str
    conditions: tuple[ConditionResult, ...]
    notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.conditions)

    def failing_ids(self) -> tuple[str, ...]:
        return tuple(c.condition_id for c in self.conditions if not c.passed)

    def condition(self, condition_id: str) -> ConditionResult:
        for c in self.conditions:
            if c.condition_id == condition_id:
                return c
        raise KeyError(condition_id)

    def __str__(self):
        head = f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"
        lines = [head] + [f"  {c}" for c in self.conditions] + [f"  note: {n}" for n in self.notes]
        return "\n".join(lines)


def residual_result(condition_id: str, residual: Tensor,
                    witness_limit: int = DEFAULT_WITNESS_LIMIT) -> ConditionResult:
    """Turn a residual tensor into a pass/fail record with the lexicographically
    first nonzero entries as witnesses."""
    spaces = residual.dom + residual.cod
    witnesses = []
    for idx, val in islice(nonzero_entries(residual), witness_limit):
        labels = tuple(spaces[pos].basis_labels[i] for pos, i in enumerate(idx))
        witnesses.append(Witness(idx, labels, val))
    return ConditionResult(condition_id, not witnesses, tuple(witnesses))


def merge_reports(suite: str, *reports: CheckReport, notes: tuple[str, ...] = ()) -> CheckReport:
    """Concatenate the conditions of several reports under one suite name."""
    conds = tuple(c for r in reports for c in r.conditions)
    all_notes = tuple(n for r in reports for n in r.notes) + tuple(notes)
    return CheckReport(suite, conds, all_notes)
