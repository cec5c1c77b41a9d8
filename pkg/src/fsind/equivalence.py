"""I-equivalence classes and the zero audit.

Two induced characters are I-equivalent when their indicator rows agree; rows
over the divisors of the exponent already decide every m.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .engine import IndicatorMatrix, Label
from .perm import class_reps


@dataclass(frozen=True)
class IEquivalenceClass:
    members: tuple[Label, ...]
    row: tuple[int, ...]

    @property
    def centralizers(self) -> frozenset[int]:
        return frozenset(lab.i for lab in self.members)

    @property
    def homogeneous(self) -> bool:
        return len(self.centralizers) == 1

    @property
    def trivially_induced(self) -> bool:
        return any(lab.i == 1 for lab in self.members)

    def latex(self) -> str:
        return "[\\ " + ", ".join(lab.latex for lab in self.members) + "\\ ]"


@dataclass(frozen=True)
class ZeroRecord:
    label: Label
    m: int
    reason: str  # "m = 1", "trivially induced", "odd-u-odd-m", or "none"

    @property
    def classification(self) -> str:
        return "unexpected" if self.reason == "none" else "expected"


@dataclass(frozen=True)
class ZeroSummary:
    n: int
    unexpected: int            # (I-class, m) pairs with an unexpected zero
    nontrivial_classes: int    # I-classes with no trivially induced member
    nontrivial_values: int     # nontrivial_classes * (#divisors - 2)

    @property
    def percent(self) -> float:
        return 100.0 * self.unexpected / self.nontrivial_values if self.nontrivial_values else 0.0


@dataclass(frozen=True)
class ZeroRow:
    u: str
    ms: tuple[int, ...]
    count: int
    all_classes: bool


def reduce(labels: Sequence[Label], rows: Sequence[Sequence[int]]) -> list[IEquivalenceClass]:
    """Group identical rows, keeping first-seen order of classes and members."""
    groups: dict[tuple[int, ...], list[Label]] = {}
    for lab, row in zip(labels, rows):
        groups.setdefault(tuple(row), []).append(lab)
    return [IEquivalenceClass(tuple(m), r) for r, m in groups.items()]


def reduce_matrix(matrix: IndicatorMatrix) -> list[IEquivalenceClass]:
    return reduce(matrix.labels(), matrix.rows())


def _reason(label: Label, m: int, n: int) -> str:
    if m == 1:
        return "m = 1"
    if label.i == 1:
        return "trivially induced"
    u = class_reps(n).rep(label.i)
    if u.parity() == -1 and m % 2:
        return "odd-u-odd-m"
    return "none"


def zero_audit(matrix: IndicatorMatrix) -> tuple[list[ZeroRecord], ZeroSummary]:
    """Classify every zero entry; count unexpected zeros per (I-class, m)."""
    records = []
    for lab, row in matrix.labelled_rows():
        for m, v in zip(matrix.divisors, row):
            if v == 0:
                records.append(ZeroRecord(lab, m, _reason(lab, m, matrix.n)))
    classes = reduce_matrix(matrix)
    nontrivial = [c for c in classes if not c.trivially_induced]
    unexpected = 0
    for c in nontrivial:
        for m, v in zip(matrix.divisors, c.row):
            if v == 0 and any(_reason(lab, m, matrix.n) == "none" for lab in c.members):
                unexpected += 1
    summary = ZeroSummary(matrix.n, unexpected, len(nontrivial),
                          len(nontrivial) * max(len(matrix.divisors) - 2, 0))
    return records, summary


def zero_table(matrix: IndicatorMatrix) -> list[ZeroRow]:
    """Unexpected zeros grouped by the u of each class's first member and by the set of zero m."""
    ctx = class_reps(matrix.n)
    classes = [c for c in reduce_matrix(matrix) if not c.trivially_induced]
    out = []
    for i in range(2, len(ctx.class_reps) + 1):
        own = [c for c in classes if c.members[0].i == i]
        by_ms: dict[tuple[int, ...], int] = {}
        for c in own:
            ms = tuple(m for m, v in zip(matrix.divisors, c.row)
                       if v == 0 and _reason(c.members[0], m, matrix.n) == "none")
            if ms:
                by_ms[ms] = by_ms.get(ms, 0) + 1
        u = "".join("(" + "".join(map(str, cyc)) + ")" for cyc in ctx.rep(i).cycles())
        for ms, count in by_ms.items():
            out.append(ZeroRow(u, ms, count, count == len(own)))
    return out

