"""Three-way agreement between the engine, chi(Lambda^[m]) and the z_m formula."""

from __future__ import annotations

from dataclasses import dataclass, field

from .engine import get_engine
from .hopf import InducedCharacter, lambda_power, oracle_indicator, zm_formula_indicator
from .perm import Permutation


@dataclass(frozen=True)
class Disagreement:
    i: int
    u: str
    j: int
    m: int
    engine: int
    oracle: object
    zm: object

    def __str__(self) -> str:
        return (f"u_{self.i}={self.u}, eta row {self.j}, m={self.m}: "
                f"engine {self.engine}, Lambda {self.oracle}, z_m {self.zm}")


@dataclass
class VerifyReport:
    n: int
    characters: int = 0
    compared: int = 0
    disagreements: list[Disagreement] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.disagreements and self.compared > 0


def run_verification(n: int, inject: tuple[int, int, int] | None = None) -> VerifyReport:
    """Compare all characters and divisors; ``inject=(i, j, m)`` perturbs one engine value."""
    if n not in (3, 4):
        raise ValueError("verification runs for n = 3 or 4")
    eng = get_engine(n)
    ctx = eng.ctx
    group = eng.centralizer(Permutation.identity(n))
    lams = {m: lambda_power(group, m) for m in ctx.divisors}
    rep = VerifyReport(n)
    for i in range(1, len(ctx.class_reps) + 1):
        u = ctx.rep(i)
        tab = eng.table(u)
        rows = eng.indicators_for_class(i)
        for j in range(len(tab)):
            rep.characters += 1
            ind = InducedCharacter(group, u, tab, j)
            for k, m in enumerate(ctx.divisors):
                value = rows[j][k]
                if inject == (i, j + 1, m):
                    value += 1
                a = oracle_indicator(ind, m, lams[m])
                b = zm_formula_indicator(group, u, tab, j, m)
                rep.compared += 1
                if not (a == b == value):
                    rep.disagreements.append(Disagreement(i, str(u), j + 1, m, value, a, b))
    return rep
