"""Explicit elements h with (uh)^m = h^m = 1, certifying non-empty summation sets."""

from __future__ import annotations

from dataclasses import dataclass

from .perm import Permutation


class WitnessError(AssertionError):
    """A construction produced an element that fails its defining property."""


@dataclass(frozen=True)
class Witness:
    u: Permutation
    m: int
    h: Permutation
    kind: str  # even-m | m3-case1 | m3-case2 | m3-case3

    def check(self) -> bool:
        hm = self.h ** self.m
        return hm.is_identity() and (self.u * self.h) ** self.m == hm


def _validated(w: Witness) -> Witness:
    if not w.check():
        raise WitnessError(f"{w.kind} construction failed for u={w.u}, m={w.m}: h={w.h}")
    return w


def even_m_witness(u: Permutation, m: int) -> Witness:
    """Reverse each cycle of u with transpositions (a_1 a_k)(a_2 a_{k-1})...; uh and h are involutions."""
    if m % 2:
        raise ValueError("m must be even")
    swaps = []
    for cyc in u.cycles():
        k = len(cyc)
        swaps += [[cyc[i], cyc[k - 1 - i]] for i in range(k // 2)]
    h = Permutation.from_cycles(swaps, u.degree)
    return _validated(Witness(u, m, h, "even-m"))


def _case1(a: tuple[int, ...]) -> list[list[int]]:
    k = len(a)
    at = lambda i: a[i - 1]  # noqa: E731  (1-based access)
    blocks = [[at(k), at(k - 1), at(k - 2)]]
    i = 1
    while 4 * i < k - 2:
        blocks.append([at(3 * i - 1), at(k - 2 - i), at(3 * i)])
        i += 1
    return blocks


def _case2(t: tuple[int, ...], c: tuple[int, ...]) -> list[list[int]]:
    a = t + c
    two_r = len(a)
    at = lambda i: a[i - 1]  # noqa: E731
    blocks = [[at(1), at(2), at(3)]]
    j = 1
    while 4 * j < two_r - 1:
        blocks.append([at(3 * j + 1), at(two_r + 1 - j), at(3 * j + 2)])
        j += 1
    return blocks


def _case3(f: tuple[int, ...], c: tuple[int, ...]) -> list[list[int]]:
    a = f + c
    two_r = len(a)
    at = lambda i: a[i - 1]  # noqa: E731
    blocks = [[at(2), at(1), at(5)], [at(7), at(4), at(3)]]
    j = 0
    while 4 * j < two_r - 9:
        blocks.append([at(8 + 2 * j), at(two_r - 2 * j), at(9 + 2 * j)])
        j += 1
    return blocks


def m3_witness(u: Permutation) -> Witness | None:
    """Witness for m = 3 in the three covered shapes; None when u is not covered."""
    if u.parity() != 1:
        return None
    cyc = u.cycles()
    shape = sorted(len(c) for c in cyc)
    blocks = None
    kind = ""
    if len(cyc) == 1 and shape[0] % 2 == 1 and shape[0] >= 3:
        blocks, kind = _case1(cyc[0]), "m3-case1"
    elif len(cyc) == 2 and shape[0] == 2 and shape[1] % 2 == 0:
        t, c = sorted(cyc, key=len)
        blocks, kind = _case2(t, c), "m3-case2"
    elif len(cyc) == 2 and shape[0] == 4 and shape[1] % 2 == 0 and shape[1] >= 4:
        f, c = sorted(cyc, key=len)
        blocks, kind = _case3(f, c), "m3-case3"
    if blocks is None:
        return None
    h = Permutation.from_cycles(blocks, u.degree)
    return _validated(Witness(u, 3, h, kind))


def parity_emptiness(u: Permutation, m: int) -> bool:
    """An odd u and an odd m leave no h with (uh)^m = h^m."""
    return u.parity() == -1 and m % 2 == 1
