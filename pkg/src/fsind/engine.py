"""Higher Frobenius-Schur indicators of D(S_n) via the reduced summation set.

For a class representative u and an irreducible character eta of C(u),

    nu_m(chi) = 1/|C(u)| * sum_y Gamma_m(u, y) * eta(y),

where Gamma_m(u, y) counts the h in S_n with (uh)^m = h^m and h^m conjugate
to y inside C(u). Only divisors m of the exponent are computed; any other m
reduces to gcd(m, e).

The scan works on ranks: S_n is held as its lexicographic array, so the rank
of h^m and the rank of u*h are two integer arrays and the membership test is
a single vectorised comparison.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple, Sequence

import numpy as np

from .chartab import CharacterTable, character_table, group_indicator
from .cyclo import Cyclotomic
from .perm import (GroupContext, Permutation, Subgroup, centralizer, class_reps,
                   partition_rep, power_cycle_type, power_rows, rank_rows, symmetric_array)


class LawViolation(UserWarning):
    """An observed regularity (such as nu_2 = 1) failed."""


class Label(NamedTuple):
    i: int
    j: int

    def __str__(self) -> str:
        return f"chi_{self.i}.{self.j}"

    @property
    def latex(self) -> str:
        return f"\\chi_{{{self.i}.{self.j}}}"


@dataclass(frozen=True)
class GammaSet:
    u: Permutation
    m: int
    entries: tuple[tuple[int, int], ...]   # (Gamma count, class index in C(u)), ascending class index
    reps: tuple[Permutation, ...]          # a representative for each listed class

    @property
    def total(self) -> int:
        return sum(c for c, _ in self.entries)

    def is_empty(self) -> bool:
        return not self.entries

    def pairs(self) -> list[tuple[int, str]]:
        return [(c, str(r)) for (c, _), r in zip(self.entries, self.reps)]


@dataclass(frozen=True)
class ClassBlock:
    i: int
    u: Permutation
    rows: tuple[tuple[int, ...], ...]
    signature: str

    @property
    def labels(self) -> list[Label]:
        return [Label(self.i, j) for j in range(1, len(self.rows) + 1)]


@dataclass(frozen=True)
class IndicatorMatrix:
    n: int
    exponent: int
    divisors: tuple[int, ...]
    blocks: tuple[ClassBlock, ...]

    def labels(self) -> list[Label]:
        return [lab for b in self.blocks for lab in b.labels]

    def rows(self) -> list[tuple[int, ...]]:
        return [r for b in self.blocks for r in b.rows]

    def labelled_rows(self) -> list[tuple[Label, tuple[int, ...]]]:
        return list(zip(self.labels(), self.rows()))

    def value(self, label: Label, m: int) -> int:
        row = self.blocks[label.i - 1].rows[label.j - 1]
        return extend_to_all_m(row, self.exponent, m, self.divisors)


def extend_to_all_m(row: Sequence[int], e: int, m: int, divisors: Sequence[int] | None = None) -> int:
    """nu_m from the divisor row, using nu_m = nu_gcd(m, e)."""
    if m < 1:
        raise ValueError("m must be positive")
    divs = list(divisors) if divisors is not None else [d for d in range(1, e + 1) if e % d == 0]
    return row[divs.index(math.gcd(m, e))]


def parity_skip(u: Permutation, m: int) -> bool:
    return u.parity() == -1 and m % 2 == 1


class Engine:
    """Caches for one degree n: rank arrays of m-th powers and of left translates."""

    def __init__(self, n: int, table_ceiling: int | None = None, cache_size: int | None = None):
        self.ctx: GroupContext = class_reps(n)
        self.n = n
        self.table_ceiling = table_ceiling
        self._cache_size = cache_size if cache_size is not None else (64 if n <= 8 else 2)
        self._power_ranks: dict[int, np.ndarray] = {}
        self._left_ranks: dict[Permutation, np.ndarray] = {}
        self._centralizers: dict[Permutation, Subgroup] = {}
        self._tables: dict[Permutation, CharacterTable] = {}

    # -- cached pieces

    def _remember(self, cache: dict, key, value):
        if len(cache) >= self._cache_size:
            cache.pop(next(iter(cache)))
        cache[key] = value
        return value

    def power_ranks(self, m: int) -> np.ndarray:
        if m not in self._power_ranks:
            h = symmetric_array(self.n)
            r = np.concatenate([rank_rows(power_rows(h[s:s + 2 ** 18], m))
                                for s in range(0, len(h), 2 ** 18)])
            self._remember(self._power_ranks, m, r)
        return self._power_ranks[m]

    def left_ranks(self, u: Permutation) -> np.ndarray:
        if u not in self._left_ranks:
            h = symmetric_array(self.n)
            ua = u.array
            r = np.concatenate([rank_rows(ua[h[s:s + 2 ** 18]]) for s in range(0, len(h), 2 ** 18)])
            self._remember(self._left_ranks, u, r)
        return self._left_ranks[u]

    def centralizer(self, u: Permutation) -> Subgroup:
        if u not in self._centralizers:
            self._centralizers[u] = centralizer(self.ctx, u)
        return self._centralizers[u]

    def table(self, u: Permutation) -> CharacterTable:
        if u not in self._tables:
            c = self.centralizer(u)
            ceiling = self.table_ceiling
            if u.is_identity() and ceiling is not None:
                ceiling = max(ceiling, c.order)
            self._tables[u] = character_table(c, ceiling=ceiling)
        return self._tables[u]

    # -- the reduced summation set

    def count_scan(self, u: Permutation, m: int) -> int:
        """|{h : (uh)^m = h^m}| by direct scan; independent of bucketing."""
        rm = self.power_ranks(m)
        return int((rm[self.left_ranks(u)] == rm).sum())

    def gamma_set(self, u: Permutation, m: int, force_scan: bool = False) -> GammaSet:
        if m < 1:
            raise ValueError("m must be positive")
        sub = self.centralizer(u)
        cs = sub.classes
        if u.is_identity() and not force_scan:
            buckets: dict[int, int] = {}
            for shape, size in zip(self.ctx.class_types, self.ctx.class_sizes):
                y = partition_rep(power_cycle_type(shape, m), self.n)
                c = int(cs.class_of[sub.index_of(y)])
                buckets[c] = buckets.get(c, 0) + size
        elif parity_skip(u, m) and not force_scan:
            buckets = {}
        else:
            rm = self.power_ranks(m)
            hits = rm[self.left_ranks(u)] == rm
            ys, counts = np.unique(rm[hits], return_counts=True)
            pos = np.searchsorted(sub.ranks, ys)
            pos = np.minimum(pos, sub.order - 1)
            if len(ys) and (sub.ranks[pos] != ys).any():
                raise AssertionError("an m-th power fell outside the centralizer")
            cls = cs.class_of[pos]
            tally = np.bincount(cls, weights=counts, minlength=len(cs.sizes)).astype(np.int64)
            buckets = {int(c): int(t) for c, t in enumerate(tally) if t}
        entries = tuple((buckets[c], c) for c in sorted(buckets))
        reps = tuple(sub.element(cs.rep_index[c]) for _, c in entries)
        return GammaSet(u, m, entries, reps)

    # -- indicators

    def indicators_for_class(self, i: int, divisors: Sequence[int] | None = None,
                             optimize: bool = True) -> list[list[int]]:
        u = self.ctx.rep(i)
        divs = list(divisors) if divisors is not None else self.ctx.divisors
        tab = self.table(u)
        k = len(tab)
        cols: list[list[int]] = []
        if u.is_identity():
            for m in divs:
                cols.append([group_indicator(tab, j, m).as_integer() for j in range(k)])
        else:
            sets = [self.gamma_set(u, m) for m in divs]
            replicate = optimize and abelian_singleton_predictor(self, u, sets)
            for gs in sets:
                if replicate:
                    cols.append([indicator(gs, tab, 0)] * k)
                else:
                    cols.append([indicator(gs, tab, j) for j in range(k)])
        rows = [list(r) for r in zip(*cols)]
        if 2 in divs:
            at = divs.index(2)
            bad = [j + 1 for j, r in enumerate(rows) if r[at] != 1]
            if bad:
                warnings.warn(f"nu_2 != 1 for u_{i}, rows {bad}", LawViolation, stacklevel=2)
        return rows

    def column(self, i: int, m: int) -> list[int]:
        """nu_m for every character induced from C(u_i); one (i, m) task."""
        u = self.ctx.rep(i)
        tab = self.table(u)
        if u.is_identity():
            return [group_indicator(tab, j, m).as_integer() for j in range(len(tab))]
        gs = self.gamma_set(u, m)
        return [indicator(gs, tab, j) for j in range(len(tab))]

    def block(self, i: int, divisors: Sequence[int] | None = None) -> ClassBlock:
        u = self.ctx.rep(i)
        rows = self.indicators_for_class(i, divisors)
        return ClassBlock(i, u, tuple(tuple(r) for r in rows), self.table(u).signature)

    def matrix(self, jobs: int = 1) -> IndicatorMatrix:
        k = len(self.ctx.class_reps)
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                blocks = list(pool.map(_block_task, [(self.n, i, self.table_ceiling) for i in range(1, k + 1)]))
        else:
            blocks = [self.block(i) for i in range(1, k + 1)]
        return IndicatorMatrix(self.n, self.ctx.exponent, tuple(self.ctx.divisors), tuple(blocks))


def _block_task(args) -> ClassBlock:
    n, i, ceiling = args
    return get_engine(n, ceiling).block(i)


@lru_cache(maxsize=None)
def get_engine(n: int, table_ceiling: int | None = None) -> Engine:
    return Engine(n, table_ceiling)


def indicator(gs: GammaSet, tab: CharacterTable, j: int) -> int:
    """Exact nu_m of the character induced from row j of tab (0-based)."""
    if gs.is_empty():
        return 0
    total = Cyclotomic.zero()
    row = tab.values[j]
    for count, c in gs.entries:
        total = total + row[c] * count
    return (total / tab.order).as_integer()


def abelian_singleton_predictor(engine: Engine, u: Permutation, gamma_sets: Sequence[GammaSet]) -> bool:
    """True when C(u) is abelian and every summation set is empty or just the identity class."""
    sub = engine.centralizer(u)
    if not sub.is_abelian():
        return False
    ident = int(sub.classes.class_of[sub.index_of(Permutation.identity(u.degree))])
    return all(all(c == ident for _, c in gs.entries) for gs in gamma_sets)


# -- functional entry points


def gamma_set(ctx: GroupContext | int, u: Permutation, m: int) -> GammaSet:
    n = ctx.n if isinstance(ctx, GroupContext) else ctx
    return get_engine(n).gamma_set(u, m)


def indicators_for_class(ctx: GroupContext | int, i: int, divisors: Sequence[int] | None = None) -> list[list[int]]:
    n = ctx.n if isinstance(ctx, GroupContext) else ctx
    return get_engine(n).indicators_for_class(i, divisors)


def compute_matrix(n: int, jobs: int = 1) -> IndicatorMatrix:
    return get_engine(n).matrix(jobs)
