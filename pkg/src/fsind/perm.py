"""Permutations, the symmetric-group context, and subgroups held as numpy arrays.

Composition follows ``(p*q)(i) = p(q(i))``: the right factor acts first.
Internally images are 0-based; everything public (text, ``images``) is 1-based.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

CycleType = tuple[int, ...]


class Permutation:
    """An element of S_n, immutable and hashable."""

    __slots__ = ("_a", "_hash")

    def __init__(self, images: Sequence[int]):
        a = tuple(int(x) - 1 for x in images)
        if sorted(a) != list(range(len(a))):
            raise ValueError(f"not a permutation of 1..{len(a)}: {list(images)}")
        self._a = a
        self._hash = hash(a)

    @classmethod
    def _raw(cls, a: tuple[int, ...]) -> "Permutation":
        p = object.__new__(cls)
        p._a = a
        p._hash = hash(a)
        return p

    @classmethod
    def from_array(cls, row) -> "Permutation":
        return cls._raw(tuple(int(x) for x in row))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls._raw(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int) -> "Permutation":
        a = list(range(n))
        seen: set[int] = set()
        for cyc in cycles:
            cyc = [int(x) for x in cyc]
            if any(x < 1 or x > n for x in cyc):
                raise ValueError(f"cycle {cyc} leaves 1..{n}")
            if seen.intersection(cyc) or len(set(cyc)) != len(cyc):
                raise ValueError(f"cycles are not disjoint: {cyc}")
            seen.update(cyc)
            for x, y in zip(cyc, cyc[1:] + cyc[:1]):
                a[x - 1] = y - 1
        return cls._raw(tuple(a))

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> "Permutation":
        """Read disjoint-cycle text such as ``(1,2,3)(4,5)``; ``()`` is the identity.

        Spaces may replace commas, as in ``(1 3 7 6 2 4 5)``.
        """
        body = text.strip()
        if not re.fullmatch(r"(\(\s*[\d,\s]*\)\s*)+", body):
            raise ValueError(f"bad cycle text: {text!r}")
        cycles = [[int(x) for x in re.split(r"[,\s]+", c.strip()) if x]
                  for c in re.findall(r"\(([^)]*)\)", body)]
        cycles = [c for c in cycles if c]
        top = max((x for c in cycles for x in c), default=1)
        if n is None:
            n = top
        elif top > n:
            raise ValueError(f"point {top} exceeds degree {n}")
        return cls.from_cycles(cycles, n)

    @property
    def degree(self) -> int:
        return len(self._a)

    @property
    def images(self) -> tuple[int, ...]:
        return tuple(x + 1 for x in self._a)

    @property
    def array(self) -> np.ndarray:
        return np.array(self._a, dtype=np.int8)

    def __call__(self, i: int) -> int:
        return self._a[i - 1] + 1

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __pow__(self, m: int) -> "Permutation":
        return power(self, m)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self._a)
        for i, x in enumerate(self._a):
            inv[x] = i
        return Permutation._raw(tuple(inv))

    def conjugate(self, by: "Permutation") -> "Permutation":
        """``by * self * by^-1``."""
        return by * self * by.inverse()

    def cycles(self, include_fixed: bool = False) -> list[tuple[int, ...]]:
        out, seen = [], [False] * len(self._a)
        for s in range(len(self._a)):
            if seen[s]:
                continue
            cyc, x = [], s
            while not seen[x]:
                seen[x] = True
                cyc.append(x + 1)
                x = self._a[x]
            if len(cyc) > 1 or include_fixed:
                out.append(tuple(cyc))
        return out

    def cycle_type(self) -> CycleType:
        return tuple(sorted((len(c) for c in self.cycles(True)), reverse=True))

    def parity(self) -> int:
        return -1 if (len(self._a) - len(self.cycles(True))) % 2 else 1

    def order(self) -> int:
        return math.lcm(*self.cycle_type()) if self._a else 1

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self._a))

    def __eq__(self, other) -> bool:
        return isinstance(other, Permutation) and self._a == other._a

    def __lt__(self, other: "Permutation") -> bool:
        return self._a < other._a

    def __hash__(self) -> int:
        return self._hash

    def __str__(self) -> str:
        cyc = self.cycles()
        return "".join("(" + ",".join(map(str, c)) + ")" for c in cyc) if cyc else "()"

    def __repr__(self) -> str:
        return f"Permutation.parse({str(self)!r}, {self.degree})"


def _check_degree(p: Permutation, q: Permutation) -> None:
    if p.degree != q.degree:
        raise ValueError(f"degree mismatch: {p.degree} vs {q.degree}")


def compose(p: Permutation, q: Permutation) -> Permutation:
    """``(p*q)(i) = p(q(i))``."""
    _check_degree(p, q)
    a = p._a
    return Permutation._raw(tuple(a[x] for x in q._a))


def power(p: Permutation, m: int) -> Permutation:
    if m < 0:
        return power(p.inverse(), -m)
    result, base = Permutation.identity(p.degree), p
    while m:
        if m & 1:
            result = result * base
        base = base * base
        m >>= 1
    return result


def cycle_type(p: Permutation) -> CycleType:
    return p.cycle_type()


def parity(p: Permutation) -> int:
    return p.parity()


# ---------------------------------------------------------------- row kernels


def compose_rows(p: np.ndarray, q: np.ndarray) -> np.ndarray:
    """Row-wise ``p[r] * q[r]``; either side may be a single row."""
    if p.ndim == 1:
        return p[q]
    if q.ndim == 1:
        return p[:, q]
    return np.take_along_axis(p, q.astype(np.intp), axis=1)


def power_rows(a: np.ndarray, m: int) -> np.ndarray:
    n = a.shape[-1]
    result = np.broadcast_to(np.arange(n, dtype=a.dtype), a.shape).copy()
    base = a
    while m:
        if m & 1:
            result = compose_rows(result, base)
        m >>= 1
        if m:
            base = compose_rows(base, base)
    return result


def inverse_rows(a: np.ndarray) -> np.ndarray:
    return np.argsort(a, axis=-1).astype(a.dtype)


@lru_cache(maxsize=None)
def _rank_weights(n: int) -> np.ndarray:
    return np.array([math.factorial(n - 1 - i) for i in range(n)], dtype=np.int64)


def rank_rows(a: np.ndarray) -> np.ndarray:
    """Lexicographic rank of each row among all permutations of its degree."""
    a = np.atleast_2d(a)
    n = a.shape[1]
    w = _rank_weights(n)
    r = np.zeros(a.shape[0], dtype=np.int64)
    for i in range(n - 1):
        smaller = (a[:, i + 1:] < a[:, i:i + 1]).sum(axis=1)
        r += smaller * w[i]
    return r


@lru_cache(maxsize=4)
def symmetric_array(n: int) -> np.ndarray:
    """All of S_n as an (n!, n) int8 array in lexicographic order; row r has rank r."""
    rows = np.zeros((1, 0), dtype=np.int8)
    for k in range(1, n + 1):
        # permutations of 0..k-1 from those of 0..k-2, lexicographic by first entry
        blocks = []
        for first in range(k):
            others = np.array([x for x in range(k) if x != first], dtype=np.int8)
            tail = others[rows] if rows.shape[1] else np.zeros((1, 0), dtype=np.int8)
            blocks.append(np.hstack([np.full((tail.shape[0], 1), first, dtype=np.int8), tail]))
        rows = np.vstack(blocks)
    rows.setflags(write=False)
    return rows


def order_rows(a: np.ndarray) -> np.ndarray:
    n = a.shape[1]
    ident = np.arange(n, dtype=a.dtype)
    out = np.zeros(a.shape[0], dtype=np.int64)
    cur = a.copy()
    for k in range(1, math.lcm(*range(1, n + 1)) + 1):
        hit = (out == 0) & (cur == ident).all(axis=1)
        out[hit] = k
        if (out > 0).all():
            break
        cur = compose_rows(cur, a)
    return out


# ---------------------------------------------------------------- S_n context


def partitions(n: int) -> list[CycleType]:
    """Partitions of n as weakly decreasing tuples, in ascending lexicographic order."""
    def gen(rest: int, cap: int) -> Iterator[tuple[int, ...]]:
        if rest == 0:
            yield ()
            return
        for part in range(min(rest, cap), 0, -1):
            for tail in gen(rest - part, part):
                yield (part,) + tail
    return sorted(gen(n, n))


def partition_rep(shape: Sequence[int], n: int) -> Permutation:
    cycles, start = [], 1
    for part in shape:
        cycles.append(list(range(start, start + part)))
        start += part
    return Permutation.from_cycles([c for c in cycles if len(c) > 1], n)


def partition_class_size(shape: Sequence[int]) -> int:
    n = sum(shape)
    denom = 1
    for length in set(shape):
        k = list(shape).count(length)
        denom *= length ** k * math.factorial(k)
    return math.factorial(n) // denom


def power_cycle_type(shape: Sequence[int], m: int) -> CycleType:
    parts: list[int] = []
    for length in shape:
        g = math.gcd(length, m)
        parts += [length // g] * g
    return tuple(sorted(parts, reverse=True))


def divisors(e: int) -> list[int]:
    return [d for d in range(1, e + 1) if e % d == 0]


@dataclass(frozen=True)
class GroupContext:
    n: int
    exponent: int
    class_types: tuple[CycleType, ...]
    class_reps: tuple[Permutation, ...]
    class_sizes: tuple[int, ...]

    @property
    def order(self) -> int:
        return math.factorial(self.n)

    @property
    def divisors(self) -> list[int]:
        return divisors(self.exponent)

    def element_array(self) -> np.ndarray:
        return symmetric_array(self.n)

    def elements(self) -> Iterator[Permutation]:
        for row in symmetric_array(self.n):
            yield Permutation.from_array(row)

    def class_index(self, p: Permutation) -> int:
        """1-based index i of the class of p, matching the labels u_i."""
        return self.class_types.index(p.cycle_type()) + 1

    def rep(self, i: int) -> Permutation:
        return self.class_reps[i - 1]


@lru_cache(maxsize=None)
def class_reps(n: int) -> GroupContext:
    if n < 1:
        raise ValueError("degree must be positive")
    types = tuple(partitions(n))
    return GroupContext(
        n=n,
        exponent=math.lcm(*range(1, n + 1)),
        class_types=types,
        class_reps=tuple(partition_rep(t, n) for t in types),
        class_sizes=tuple(partition_class_size(t) for t in types),
    )


# ---------------------------------------------------------------- subgroups


@dataclass(frozen=True, eq=False)
class ClassStructure:
    """Conjugacy classes of a subgroup, by element index."""

    class_of: np.ndarray      # element index -> class index
    rep_index: tuple[int, ...]  # minimal element of each class
    sizes: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class Subgroup:
    """A subgroup of S_n stored as a lexicographically sorted (k, n) int8 array."""

    degree: int
    array: np.ndarray
    generators: tuple[Permutation, ...] = ()
    ranks: np.ndarray = field(init=False, repr=False)

    def __post_init__(self):
        arr = np.ascontiguousarray(self.array, dtype=np.int8)
        r = rank_rows(arr)
        order = np.argsort(r, kind="stable")
        arr, r = arr[order], r[order]
        if len(r) > 1 and (np.diff(r) == 0).any():
            raise ValueError("duplicate elements")
        arr.setflags(write=False)
        r.setflags(write=False)
        object.__setattr__(self, "array", arr)
        object.__setattr__(self, "ranks", r)

    @classmethod
    def from_elements(cls, elements: Iterable[Permutation], generators=()) -> "Subgroup":
        els = list(elements)
        n = els[0].degree
        sub = cls(n, np.array([e._a for e in els], dtype=np.int8).reshape(len(els), n),
                  tuple(generators))
        return sub

    @classmethod
    def generated_by(cls, gens: Sequence[Permutation], n: int | None = None) -> "Subgroup":
        n = gens[0].degree if gens else n
        if n is None:
            raise ValueError("degree needed for an empty generating set")
        ident = np.arange(n, dtype=np.int8)[None, :]
        g_arr = [g.array for g in gens]
        known = ident
        known_r = rank_rows(ident)
        frontier = ident
        while len(frontier):
            new = np.vstack([compose_rows(frontier, g) for g in g_arr]) if g_arr else frontier[:0]
            if not len(new):
                break
            nr = rank_rows(new)
            nr, idx = np.unique(nr, return_index=True)
            fresh = ~np.isin(nr, known_r)
            frontier = new[idx[fresh]]
            known = np.vstack([known, frontier])
            known_r = np.concatenate([known_r, nr[fresh]])
        return cls(n, known, tuple(gens))

    @property
    def order(self) -> int:
        return self.array.shape[0]

    def __len__(self) -> int:
        return self.order

    def element(self, k: int) -> Permutation:
        return Permutation.from_array(self.array[k])

    def elements(self) -> list[Permutation]:
        return [Permutation.from_array(r) for r in self.array]

    def index_rows(self, rows: np.ndarray) -> np.ndarray:
        """Element indices of the given rows; -1 where a row is not in the subgroup."""
        r = rank_rows(rows)
        pos = np.searchsorted(self.ranks, r)
        pos = np.minimum(pos, self.order - 1)
        return np.where(self.ranks[pos] == r, pos, -1)

    def index_of(self, p: Permutation) -> int:
        return int(self.index_rows(p.array[None, :])[0])

    def __contains__(self, p: Permutation) -> bool:
        return self.index_of(p) >= 0

    @cached_property
    def inverse_index(self) -> np.ndarray:
        return self.index_rows(inverse_rows(self.array))

    def is_closed(self) -> bool:
        if self.index_of(Permutation.identity(self.degree)) < 0:
            return False
        if (self.inverse_index < 0).any():
            return False
        gens = self.generators or tuple(self.elements())
        return all((self.index_rows(compose_rows(self.array, g.array)) >= 0).all() for g in gens)

    def is_abelian(self) -> bool:
        gens = self.generators or tuple(self.elements())
        return all(a * b == b * a for a in gens for b in gens)

    @cached_property
    def element_orders(self) -> np.ndarray:
        return order_rows(self.array)

    @property
    def exponent(self) -> int:
        return math.lcm(*(int(x) for x in np.unique(self.element_orders)))

    @cached_property
    def classes(self) -> ClassStructure:
        k = self.order
        gens = self.generators or tuple(self.elements())
        src, dst = [np.arange(k)], [np.arange(k)]
        for g in gens:
            ga, gi = g.array, g.inverse().array
            conj = compose_rows(ga, compose_rows(self.array, gi))  # g x g^-1
            img = self.index_rows(conj)
            if (img < 0).any():
                raise ValueError("generator does not normalize the element list")
            src.append(np.arange(k))
            dst.append(img)
        s, d = np.concatenate(src), np.concatenate(dst)
        graph = coo_matrix((np.ones(len(s), dtype=np.int8), (s, d)), shape=(k, k))
        _, labels = connected_components(graph, directed=True, connection="weak")
        # relabel so classes are numbered by their minimal element
        first = np.full(labels.max() + 1, k, dtype=np.int64)
        np.minimum.at(first, labels, np.arange(k))
        order = np.argsort(first)
        relabel = np.empty_like(order)
        relabel[order] = np.arange(len(order))
        class_of = relabel[labels]
        class_of.setflags(write=False)
        sizes = np.bincount(class_of)
        return ClassStructure(class_of, tuple(int(x) for x in first[order]),
                              tuple(int(x) for x in sizes))


def _structural_generators(u: Permutation) -> list[Permutation]:
    n = u.degree
    cyc = u.cycles(include_fixed=True)
    gens = [Permutation.from_cycles([c], n) for c in cyc if len(c) > 1]
    by_len: dict[int, list[tuple[int, ...]]] = {}
    for c in cyc:
        by_len.setdefault(len(c), []).append(c)
    for group in by_len.values():
        for a, b in zip(group, group[1:]):
            gens.append(Permutation.from_cycles([[x, y] for x, y in zip(a, b)], n))
    return gens


def centralizer(ctx: GroupContext | int, u: Permutation) -> Subgroup:
    """C(u) in S_n. Filters S_n for n <= 8, otherwise closes the structural generators."""
    n = ctx.n if isinstance(ctx, GroupContext) else ctx
    if u.degree != n:
        raise ValueError("degree mismatch")
    gens = _structural_generators(u)
    if u.is_identity() and n > 1:
        gens = [Permutation.from_cycles([[1, 2]], n),
                Permutation.from_cycles([list(range(1, n + 1))], n)]
    if n <= 8:
        h = symmetric_array(n)
        ua = u.array
        mask = (ua[h] == h[:, ua]).all(axis=1)
        return Subgroup(n, h[mask], tuple(gens))
    return Subgroup.generated_by(gens, n)


def conjugacy_classes_of(sub: Subgroup) -> list[tuple[Permutation, list[Permutation]]]:
    if not sub.is_closed():
        raise ValueError("element list is not closed under products and inverses")
    cs = sub.classes
    members: list[list[Permutation]] = [[] for _ in cs.sizes]
    for k, c in enumerate(cs.class_of):
        members[c].append(sub.element(k))
    return [(sub.element(r), m) for r, m in zip(cs.rep_index, members)]
