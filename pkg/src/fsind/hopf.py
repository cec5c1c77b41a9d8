"""The Drinfel'd double D(G) of a small permutation group, built from its structure maps.

Basis elements ``p_g # x`` are keyed by pairs of Permutations ``(g, x)``.
This module is the slow reference: indicators come from the integral and its
m-fold Sweedler power, with no shortcut shared with the engine.
"""

from __future__ import annotations

import random
from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Mapping

from .chartab import CharacterTable
from .cyclo import Cyclotomic
from .perm import Permutation, Subgroup

ORACLE_LIMIT = 120

Basis = tuple[Permutation, Permutation]


class DGElement:
    """Sparse vector of D(G): ``{(g, x): coefficient}``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Basis, Fraction] | None = None):
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    @classmethod
    def basis(cls, g: Permutation, x: Permutation, c=1) -> "DGElement":
        return cls({(g, x): c})

    def __add__(self, other: "DGElement") -> "DGElement":
        t = dict(self.terms)
        for k, v in other.terms.items():
            t[k] = t.get(k, 0) + v
        return DGElement(t)

    def __sub__(self, other: "DGElement") -> "DGElement":
        return self + other.scale(-1)

    def scale(self, c) -> "DGElement":
        return DGElement({k: v * c for k, v in self.terms.items()})

    def __mul__(self, other: "DGElement") -> "DGElement":
        return multiply(self, other)

    def __eq__(self, other) -> bool:
        return isinstance(other, DGElement) and self.terms == other.terms

    def __repr__(self) -> str:
        body = " + ".join(f"{v}*p[{g}]#{x}" for (g, x), v in sorted(self.terms.items(), key=lambda kv: (kv[0][0], kv[0][1])))
        return f"DGElement({body or '0'})"


Tensor = dict[tuple[Basis, Basis], Fraction]


def _check_size(group: Subgroup) -> None:
    if group.order > ORACLE_LIMIT:
        raise ValueError(f"oracle is limited to groups of order <= {ORACLE_LIMIT}")


def multiply(a: DGElement, b: DGElement) -> DGElement:
    """(p_k # z)(p_h # y) = [k = z h z^-1] p_k # zy."""
    out: dict[Basis, Fraction] = {}
    for (k, z), c1 in a.terms.items():
        zi = z.inverse()
        for (h, y), c2 in b.terms.items():
            if k == z * h * zi:
                key = (k, z * y)
                out[key] = out.get(key, 0) + c1 * c2
    return DGElement(out)


def one(group: Subgroup) -> DGElement:
    e = Permutation.identity(group.degree)
    return DGElement({(g, e): 1 for g in group.elements()})


def comultiply(a: DGElement, group: Subgroup) -> Tensor:
    """Delta(p_g # x) = sum_h (p_h # x) (x) (p_{h^-1 g} # x)."""
    els = group.elements()
    out: Tensor = {}
    for (g, x), c in a.terms.items():
        for h in els:
            key = ((h, x), (h.inverse() * g, x))
            out[key] = out.get(key, 0) + c
    return out


def tensor_multiply(s: Tensor, t: Tensor) -> Tensor:
    out: Tensor = {}
    for (a1, a2), c in s.items():
        for (b1, b2), d in t.items():
            l = multiply(DGElement.basis(*a1), DGElement.basis(*b1))
            if not l.terms:
                continue
            r = multiply(DGElement.basis(*a2), DGElement.basis(*b2))
            for k1, v1 in l.terms.items():
                for k2, v2 in r.terms.items():
                    out[(k1, k2)] = out.get((k1, k2), 0) + c * d * v1 * v2
    return {k: v for k, v in out.items() if v}


def counit(a: DGElement) -> Fraction:
    return sum((c for (g, _), c in a.terms.items() if g.is_identity()), Fraction(0))


def antipode(a: DGElement) -> DGElement:
    """S(p_g # x) = p_{x^-1 g^-1 x} # x^-1."""
    out: dict[Basis, Fraction] = {}
    for (g, x), c in a.terms.items():
        xi = x.inverse()
        key = (xi * g.inverse() * x, xi)
        out[key] = out.get(key, 0) + c
    return DGElement(out)


def integral(group: Subgroup) -> DGElement:
    """Lambda = p_1 # (1/|G|) sum_g g."""
    _check_size(group)
    e = Permutation.identity(group.degree)
    w = Fraction(1, group.order)
    return DGElement({(e, g): w for g in group.elements()})


def lambda_power_iterated(group: Subgroup, m: int) -> DGElement:
    """Lambda^[m] = sum Lambda_1 ... Lambda_m from repeated coproducts and products.

    Uses F_1(b) = b and F_j(p_g # x) = sum_h F_{j-1}(p_h # x) (p_{h^-1 g} # x),
    which is m o Delta^(j-1) applied to a basis element, by coassociativity.
    """
    _check_size(group)
    lam = integral(group)
    total = DGElement()

    @lru_cache(maxsize=None)
    def f(j: int, g: Permutation, x: Permutation) -> DGElement:
        if j == 1:
            return DGElement.basis(g, x)
        acc = DGElement()
        split = comultiply(DGElement.basis(g, x), group)
        for ((h, x1), right), c in split.items():
            acc = acc + multiply(f(j - 1, h, x1), DGElement.basis(*right)).scale(c)
        return acc

    for (g, x), c in lam.terms.items():
        total = total + f(m, g, x).scale(c)
    return total


def z_count(group: Subgroup, g: Permutation, y: Permutation, m: int) -> int:
    """|{x : prod_{j<m} x^-j g x^j = 1 and x^m = y}|."""
    count = 0
    for x in group.elements():
        if x ** m != y:
            continue
        xi = x.inverse()
        prod, conj = Permutation.identity(group.degree), g
        for _ in range(m):
            prod = prod * conj
            conj = xi * conj * x
        if prod.is_identity():
            count += 1
    return count


def lambda_power_closed(group: Subgroup, m: int) -> DGElement:
    """(1/|G|) sum_{g, y} z_m(g, y) p_g # y."""
    _check_size(group)
    els = group.elements()
    out: dict[Basis, Fraction] = {}
    w = Fraction(1, group.order)
    for g in els:
        for x in els:
            xi = x.inverse()
            prod, conj = Permutation.identity(group.degree), g
            for _ in range(m):
                prod = prod * conj
                conj = xi * conj * x
            if prod.is_identity():
                key = (g, x ** m)
                out[key] = out.get(key, 0) + w
    return DGElement(out)


def lambda_power(group: Subgroup, m: int) -> DGElement:
    """Both constructions of Lambda^[m]; they must agree."""
    a = lambda_power_iterated(group, m)
    b = lambda_power_closed(group, m)
    if a != b:
        raise AssertionError(f"Lambda^[{m}] constructions disagree")
    return a


# ---------------------------------------------------------------- induced characters


@dataclass(frozen=True, eq=False)
class InducedCharacter:
    """The D(G)-character induced from row j of the character table of C_G(u)."""

    group: Subgroup
    u: Permutation
    table: CharacterTable
    j: int

    def transversal(self) -> dict[Permutation, Permutation]:
        """t_h with t_h u t_h^-1 = h for every h in the G-class of u."""
        out: dict[Permutation, Permutation] = {}
        for t in self.group.elements():
            h = t * self.u * t.inverse()
            if h not in out:
                out[h] = t
        return out

    def __call__(self, g: Permutation, x: Permutation) -> Cyclotomic:
        """Trace of p_g # x on the induced module."""
        t = self._transversal.get(g)
        if t is None:
            return Cyclotomic.zero()
        y = t.inverse() * x * t
        c = self.table.subgroup.index_of(y)
        if c < 0:
            return Cyclotomic.zero()
        return self.table.values[self.j][int(self.table.subgroup.classes.class_of[c])]

    @property
    def _transversal(self) -> dict[Permutation, Permutation]:
        cache = self.__dict__.get("_tv")
        if cache is None:
            cache = self.transversal()
            object.__setattr__(self, "_tv", cache)
        return cache

    def evaluate(self, a: DGElement) -> Cyclotomic:
        total = Cyclotomic.zero()
        for (g, x), c in a.terms.items():
            total = total + self(g, x) * c
        return total

    @property
    def degree(self) -> int:
        return len(self._transversal) * self.table.degrees[self.j]


def oracle_indicator(ind: InducedCharacter, m: int, lam: DGElement | None = None) -> Fraction:
    """chi(Lambda^[m]) from the iterated construction."""
    if lam is None:
        lam = lambda_power_iterated(ind.group, m)
    v = ind.evaluate(lam).as_rational()
    if v is None:
        raise ArithmeticError("indicator is not rational")
    return v


def zm_formula_indicator(group: Subgroup, u: Permutation, table: CharacterTable, j: int, m: int) -> Fraction:
    """(1/|C(u)|) sum_{y in C(u)} z_m(u, y) eta_j(y)."""
    cu = table.subgroup
    total = Cyclotomic.zero()
    for k in range(cu.order):
        y = cu.element(k)
        z = z_count(group, u, y, m)
        if z:
            total = total + table.values[j][int(cu.classes.class_of[k])] * z
    v = (total / cu.order).as_rational()
    if v is None:
        raise ArithmeticError("indicator is not rational")
    return v


# ---------------------------------------------------------------- automorphisms


class Automorphism:
    """A group automorphism given as a full lookup table."""

    def __init__(self, images: Mapping[Permutation, Permutation]):
        self.images = dict(images)
        self._inverse = {v: k for k, v in self.images.items()}
        if len(self._inverse) != len(self.images):
            raise ValueError("map is not injective")

    def __call__(self, g: Permutation) -> Permutation:
        return self.images[g]

    def inverse(self, g: Permutation) -> Permutation:
        return self._inverse[g]

    def check_homomorphism(self, gens: Iterable[Permutation]) -> None:
        gens = list(gens)
        for g in self.images:
            for s in gens:
                if self(g * s) != self(g) * self(s):
                    raise ValueError(f"not a homomorphism at {g}, {s}")

    @classmethod
    def inner(cls, group: Subgroup, a: Permutation) -> "Automorphism":
        ai = a.inverse()
        return cls({g: a * g * ai for g in group.elements()})

    @classmethod
    def from_generators(cls, gens: Mapping[Permutation, Permutation]) -> "Automorphism":
        """Extend generator images along breadth-first words."""
        items = list(gens.items())
        n = items[0][0].degree
        e = Permutation.identity(n)
        images = {e: e}
        queue = deque([e])
        while queue:
            g = queue.popleft()
            for s, t in items:
                h = g * s
                img = images[g] * t
                if h in images:
                    if images[h] != img:
                        raise ValueError(f"inconsistent extension at {h}")
                    continue
                images[h] = img
                queue.append(h)
        auto = cls(images)
        auto.check_homomorphism(gens)
        return auto


def gamma_automorphism(sigma: Automorphism | Callable, a: DGElement) -> DGElement:
    """gamma_sigma(p_x # g) = p_{sigma^-1(x)} # sigma^-1(g)."""
    inv = sigma.inverse if isinstance(sigma, Automorphism) else sigma
    out: dict[Basis, Fraction] = {}
    for (x, g), c in a.terms.items():
        key = (inv(x), inv(g))
        out[key] = out.get(key, 0) + c
    return DGElement(out)


S6_GENERATOR_IMAGES = {
    "(1,2)": "(1,5)(2,3)(4,6)",
    "(1,3)": "(1,4)(2,6)(3,5)",
    "(1,4)": "(1,3)(2,4)(5,6)",
    "(1,5)": "(1,2)(3,6)(4,5)",
    "(1,6)": "(1,6)(2,5)(3,4)",
}


@lru_cache(maxsize=1)
def s6_outer_automorphism() -> Automorphism:
    gens = {Permutation.parse(k, 6): Permutation.parse(v, 6) for k, v in S6_GENERATOR_IMAGES.items()}
    auto = Automorphism.from_generators(gens)
    if len(auto.images) != 720:
        raise ValueError("generator images do not reach all of S_6")
    return auto


def random_element(group: Subgroup, rng: random.Random, terms: int = 4) -> DGElement:
    els = group.elements()
    return DGElement({(rng.choice(els), rng.choice(els)): Fraction(rng.randint(-5, 5), rng.randint(1, 3))
                      for _ in range(terms)})
