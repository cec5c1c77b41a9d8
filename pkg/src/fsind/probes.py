"""Exploratory statistics for two open regularities. Reported, never asserted."""

from __future__ import annotations

from dataclasses import dataclass

from .engine import Engine, get_engine
from .perm import Permutation


@dataclass(frozen=True)
class ProbeHit:
    u: Permutation
    m: int | None
    note: str


def _identity_class(eng: Engine, u: Permutation) -> int:
    sub = eng.centralizer(u)
    return int(sub.classes.class_of[sub.index_of(Permutation.identity(eng.n))])


def identity_membership(n: int) -> list[ProbeHit]:
    """(u, odd m) where the summation set is non-empty but no h has h^m = 1."""
    eng = get_engine(n)
    hits = []
    for u in eng.ctx.class_reps[1:]:
        ident = _identity_class(eng, u)
        for m in eng.ctx.divisors:
            if m % 2 == 0:
                continue
            gs = eng.gamma_set(u, m)
            if gs.entries and ident not in {c for _, c in gs.entries}:
                hits.append(ProbeHit(u, m, "non-empty without the identity"))
    return hits


def singleton_sets_vs_abelian(n: int) -> list[ProbeHit]:
    """u whose every summation set is empty or only the identity class, tagged by whether C(u) is abelian."""
    eng = get_engine(n)
    out = []
    for u in eng.ctx.class_reps[1:]:
        ident = _identity_class(eng, u)
        sets = [eng.gamma_set(u, m) for m in eng.ctx.divisors]
        if all(all(c == ident for _, c in gs.entries) for gs in sets):
            kind = "abelian" if eng.centralizer(u).is_abelian() else "non-abelian"
            out.append(ProbeHit(u, None, kind))
    return out
