"""Irreducible character tables of permutation subgroups.

Non-abelian groups go through Dixon-Schneider: the class-multiplication
matrices are diagonalised simultaneously over F_p, then each character value
is lifted to an exact cyclotomic from its eigenvalue multiplicities. Abelian
groups get their dual group directly.
"""

from __future__ import annotations

import hashlib
import json
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

import numpy as np
from sympy import GF, isprime, primitive_root
from sympy.polys.matrices import DomainMatrix

from .cyclo import Cyclotomic, root_of_unity, to_text
from .perm import Permutation, Subgroup, compose_rows, inverse_rows

DEFAULT_CEILING = 10 ** 4


class TableTooLarge(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class CharacterTable:
    subgroup: Subgroup
    reps: tuple[Permutation, ...]
    sizes: tuple[int, ...]
    orders: tuple[int, ...]
    powers: tuple[tuple[int, ...], ...]  # powers[c][t] = class of rep_c^t, 0 <= t < orders[c]
    values: tuple[tuple[Cyclotomic, ...], ...]

    @property
    def order(self) -> int:
        return self.subgroup.order

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row[0].as_integer() for row in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def power_map(self, m: int) -> tuple[int, ...]:
        return tuple(p[m % o] for p, o in zip(self.powers, self.orders))

    def class_index(self, p: Permutation) -> int:
        k = self.subgroup.index_of(p)
        if k < 0:
            raise ValueError(f"{p} is not in the subgroup")
        return int(self.subgroup.classes.class_of[k])

    def value(self, j: int, c: int) -> Cyclotomic:
        return self.values[j][c]

    @cached_property
    def signature(self) -> str:
        """Stable hash of the row order and values; binds stored indicator rows to this table."""
        payload = json.dumps([[str(r) for r in self.reps], [[to_text(v) for v in row] for row in self.values]])
        return hashlib.sha256(payload.encode()).hexdigest()[:16]

    def check_orthogonality(self) -> None:
        """Exact row and column orthogonality; raises AssertionError on failure."""
        k, g = len(self.values), self.order
        conj = [[v.conj() for v in row] for row in self.values]
        for a in range(k):
            for b in range(a, k):
                s = Cyclotomic.zero()
                for c in range(k):
                    s = s + self.values[a][c] * conj[b][c] * self.sizes[c]
                if s != (g if a == b else 0):
                    raise AssertionError(f"rows {a},{b}: inner product {s}")
        for c in range(k):
            for d in range(c, k):
                s = Cyclotomic.zero()
                for a in range(k):
                    s = s + self.values[a][c] * conj[a][d]
                want = Fraction(g, self.sizes[c]) if c == d else 0
                if s != want:
                    raise AssertionError(f"columns {c},{d}: {s}")

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "classes": [{"rep": str(r), "size": s} for r, s in zip(self.reps, self.sizes)],
            "values": [[to_text(v) for v in row] for row in self.values],
        }

    def to_latex(self, label: str = "\\eta") -> str:
        cols = "c" * len(self.reps)
        lines = [f"\\begin{{array}}{{r|{cols}}} \\hline",
                 " & " + " & ".join(str(r) for r in self.reps) + " \\\\ \\hline"]
        for j, row in enumerate(self.values, 1):
            lines.append(f"{label}_{{{j}}} & " + " & ".join(to_text(v) for v in row) + " \\\\")
        lines.append("\\hline\n\\end{array}")
        return "\n".join(lines)


def _power_classes(sub: Subgroup) -> tuple[tuple[int, ...], tuple[tuple[int, ...], ...]]:
    cs = sub.classes
    reps = sub.array[list(cs.rep_index)]
    orders = [int(sub.element_orders[r]) for r in cs.rep_index]
    top = max(orders)
    cur = np.broadcast_to(np.arange(sub.degree, dtype=np.int8), reps.shape).copy()
    table = []
    for _ in range(top):
        table.append(cs.class_of[sub.index_rows(cur)])
        cur = compose_rows(cur, reps)
    table = np.array(table).T
    return tuple(orders), tuple(tuple(int(x) for x in table[c][:o]) for c, o in enumerate(orders))


def power_map(sub: Subgroup, m: int) -> tuple[int, ...]:
    orders, powers = _power_classes(sub)
    return tuple(p[m % o] for p, o in zip(powers, orders))


# ---------------------------------------------------------------- abelian path


def _abelian_values(sub: Subgroup, e: int) -> list[dict[int, int]]:
    """Each character as a map element index -> exponent v, meaning value zeta_e^v."""
    ident = sub.index_of(Permutation.identity(sub.degree))
    members = [ident]          # elements of the subgroup built so far
    chars = [{ident: 0}]
    in_h = {ident}
    for g in sorted(sub.generators or sub.elements()):
        gk = sub.index_of(g)
        if gk in in_h:
            continue
        # smallest t with g^t in the current subgroup H
        t, cur = 1, g
        while sub.index_of(cur) not in in_h:
            cur = cur * g
            t += 1
        gt = sub.index_of(cur)
        prod_index = {}
        for h in members:
            hp = sub.element(h)
            for s in range(t):
                prod_index[(h, s)] = sub.index_of(hp * (g ** s))
        new_chars = []
        for lam in chars:
            a = lam[gt]
            # solutions v of t*v = a (mod e); there are exactly t of them
            base = next(v for v in range(e) if (t * v - a) % e == 0)
            for j in range(t):
                v = (base + j * (e // t)) % e
                chi = {prod_index[(h, s)]: (lam[h] + s * v) % e for h in members for s in range(t)}
                new_chars.append(chi)
        chars = new_chars
        members = [prod_index[(h, s)] for h in members for s in range(t)]
        in_h = set(members)
    if len(members) != sub.order:
        raise RuntimeError("generators do not span the subgroup")
    return chars


def _abelian_table(sub: Subgroup) -> list[list[Cyclotomic]]:
    e = sub.exponent
    cs = sub.classes
    rows = []
    for chi in _abelian_values(sub, e):
        row = []
        for r in cs.rep_index:
            v = chi[r]
            g = math.gcd(v, e)
            row.append(root_of_unity(e // g, v // g) if v else Cyclotomic.one())
        rows.append(row)
    return rows


# ---------------------------------------------------------------- Dixon-Schneider


def _choose_prime(e: int, order: int) -> int:
    p = e + 1
    while p <= 2 * order or not isprime(p):
        p += e
    return p


def _class_constants(sub: Subgroup) -> np.ndarray:
    """a[j, k, l] = #{x in C_j : x^-1 z_l in C_k}."""
    cs = sub.classes
    k = len(cs.sizes)
    inv = inverse_rows(sub.array)
    a = np.zeros((k, k, k), dtype=np.int64)
    for l, zl in enumerate(cs.rep_index):
        y = compose_rows(inv, sub.array[zl])
        cy = cs.class_of[sub.index_rows(y)]
        hist = np.bincount(cs.class_of * k + cy, minlength=k * k)
        a[:, :, l] = hist.reshape(k, k)
    return a


class _Fp:
    def __init__(self, p: int):
        self.p = p
        self.K = GF(p)

    def mat(self, rows) -> DomainMatrix:
        K = self.K
        return DomainMatrix([[K(int(x) % self.p) for x in r] for r in rows], (len(rows), len(rows[0])), K)

    def ints(self, m: DomainMatrix) -> list[list[int]]:
        return [[int(x) % self.p for x in r] for r in m.to_list()]

    def roots(self, poly: list[int]) -> list[int]:
        """All roots in F_p of a polynomial given highest degree first (brute force, vectorised)."""
        p = self.p
        xs = np.arange(p, dtype=np.int64)
        acc = np.zeros(p, dtype=np.int64)
        for c in poly:
            acc = (acc * xs + (int(c) % p)) % p
        return [int(x) for x in np.nonzero(acc == 0)[0]]


def _split(fp: _Fp, mats: list[list[list[int]]], rng: random.Random) -> list[list[int]]:
    """Common eigenvectors (as lists over F_p) of commuting matrices acting on column vectors."""
    p = fp.p
    k = len(mats[0])
    spaces = [[[int(i == j) for j in range(k)] for i in range(k)]]  # basis vectors as rows
    done = []
    attempts = 0
    while spaces:
        basis = spaces.pop()
        d = len(basis)
        if d == 1:
            done.append(basis[0])
            continue
        attempts += 1
        if attempts > 200 * k:
            raise RuntimeError("eigenspace splitting did not converge")
        coef = [rng.randrange(p) for _ in mats]
        a = [[sum(c * m[r][s] for c, m in zip(coef, mats)) % p for s in range(k)] for r in range(k)]
        w = fp.mat(basis).transpose()                     # k x d, columns span the space
        aw = fp.mat(a) * w                                # k x d
        # pick d independent rows of w to solve w r = a w for the restricted d x d matrix r
        _, pivots = fp.mat(basis).rref()
        piv = list(pivots)
        w_sq = fp.mat([[basis[c][r] for c in range(d)] for r in piv])
        aw_l = fp.ints(aw)
        aw_sq = fp.mat([aw_l[r] for r in piv])
        restricted = w_sq.inv() * aw_sq
        cp = [int(x) % p for x in restricted.charpoly()]
        roots = fp.roots(cp)
        if len(roots) == 1:
            spaces.append(basis)
            continue
        eye = [[int(i == j) for j in range(d)] for i in range(d)]
        r_l = fp.ints(restricted)
        for lam in roots:
            shifted = fp.mat([[(r_l[i][j] - lam * eye[i][j]) % p for j in range(d)] for i in range(d)])
            ns = fp.ints(shifted.nullspace())
            sub_basis = []
            for vec in ns:
                full = [sum(vec[c] * basis[c][s] for c in range(d)) % p for s in range(k)]
                sub_basis.append(full)
            if sub_basis:
                spaces.append(sub_basis)
    return done


def _dixon_table(sub: Subgroup, rng: random.Random) -> list[list[Cyclotomic]]:
    cs = sub.classes
    k = len(cs.sizes)
    g = sub.order
    e = sub.exponent
    p = _choose_prime(e, g)
    fp = _Fp(p)
    a = _class_constants(sub)
    mats = [a[j].tolist() for j in range(k)]
    vecs = _split(fp, mats, rng)
    if len(vecs) != k:
        raise RuntimeError(f"found {len(vecs)} characters, expected {k}")
    ident = int(cs.class_of[sub.index_of(Permutation.identity(sub.degree))])
    inv_class = [int(cs.class_of[sub.inverse_index[r]]) for r in cs.rep_index]
    orders, powers = _power_classes(sub)
    w = pow(primitive_root(p), (p - 1) // e, p)
    rows = []
    for v in vecs:
        s = pow(v[ident], -1, p)
        om = [(x * s) % p for x in v]
        tot = sum(om[j] * om[inv_class[j]] * pow(cs.sizes[j], -1, p) for j in range(k)) % p
        d2 = (g * pow(tot, -1, p)) % p
        d = math.isqrt(d2)
        if d * d != d2:
            raise RuntimeError("degree is not a perfect square modulo p")
        chi_p = [(om[j] * d * pow(cs.sizes[j], -1, p)) % p for j in range(k)]
        row = []
        for c in range(k):
            o = orders[c]
            wo = pow(w, e // o, p)
            inv_o = pow(o, -1, p)
            terms = {}
            for kk in range(o):
                acc = 0
                for t in range(o):
                    acc += chi_p[powers[c][t]] * pow(wo, (-kk * t) % o, p)
                mult = (acc * inv_o) % p
                if mult > d:
                    raise RuntimeError("eigenvalue multiplicity failed to lift")
                if mult:
                    terms[kk] = mult
            if sum(terms.values()) != d:
                raise RuntimeError("lifted multiplicities do not sum to the degree")
            row.append(Cyclotomic.from_exponents(o, terms))
        rows.append(row)
    return rows


def character_table(sub: Subgroup, ceiling: int | None = DEFAULT_CEILING, seed: int = 0) -> CharacterTable:
    if ceiling is not None and sub.order > ceiling:
        raise TableTooLarge(f"subgroup of order {sub.order} exceeds the ceiling {ceiling}")
    cs = sub.classes
    if sub.is_abelian():
        rows = _abelian_table(sub)
    else:
        rows = _dixon_table(sub, random.Random(seed))
    e = sub.exponent
    rows.sort(key=lambda r: (r[0].as_integer(), tuple(v.key(e) for v in r)))
    orders, powers = _power_classes(sub)
    table = CharacterTable(
        subgroup=sub,
        reps=tuple(sub.element(r) for r in cs.rep_index),
        sizes=cs.sizes,
        orders=orders,
        powers=powers,
        values=tuple(tuple(r) for r in rows),
    )
    if sum(d * d for d in table.degrees) != sub.order:
        raise RuntimeError("degrees do not account for the group order")
    return table


def group_indicator(tab: CharacterTable, j: int, m: int) -> Cyclotomic:
    """(1/|G|) sum over g of eta_j(g^m)."""
    pm = tab.power_map(m)
    total = Cyclotomic.zero()
    for c, size in enumerate(tab.sizes):
        total = total + tab.values[j][pm[c]] * size
    return total / tab.order
