"""Finite groups as multiplication tables.

Element subsets (subgroups, centralizers) are handled as Python int
bitmasks, so intersection is ``&`` and cardinality is ``bit_count()``.
"""

from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, reduce
from itertools import permutations
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .arith import is_prime, prime_power_log
from .errors import BudgetExceeded, GroupAxiomError
from .expoly import ExpoPoly, IntValuedPoly

MAX_ORDER = 200
EXHAUSTIVE_ASSOCIATIVITY = 128
DEFAULT_BUDGET = 10**7


def default_budget() -> int:
    return int(os.environ.get("CC_BUDGET", DEFAULT_BUDGET))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteGroup:
    """A finite group given by its multiplication table ``table[a][b] = a*b``.

    The group axioms are checked on construction: Latin square, identity,
    inverses, and associativity (every triple up to order 128, a seeded
    random sample of triples above that).
    """

    def __init__(self, table: Sequence[Sequence[int]], name: str = ""):
        self.table = tuple(tuple(int(x) for x in row) for row in table)
        self.order = len(self.table)
        self.name = name
        self._arr = np.asarray(self.table, dtype=np.int64).reshape(self.order, self.order)
        self._validate()
        self._hash = hash(self.table)

    def _validate(self):
        n = self.order
        if n == 0:
            raise GroupAxiomError("empty table")
        T = self._arr
        if any(len(row) != n for row in self.table) or T.min() < 0 or T.max() >= n:
            raise GroupAxiomError("table must be square with entries in range(order)")
        full = np.arange(n)
        for a in range(n):
            if not np.array_equal(np.sort(T[a]), full):
                raise GroupAxiomError(f"row {a} is not a permutation", (a,))
            if not np.array_equal(np.sort(T[:, a]), full):
                raise GroupAxiomError(f"column {a} is not a permutation", (a,))
        ids = [e for e in range(n) if np.array_equal(T[e], full) and np.array_equal(T[:, e], full)]
        if not ids:
            raise GroupAxiomError("no identity element")
        self.identity = ids[0]
        inv = [int(np.nonzero(T[a] == self.identity)[0][0]) for a in range(n)]
        for a in range(n):
            if T[inv[a], a] != self.identity:
                raise GroupAxiomError(f"element {a} has no two-sided inverse", (a, inv[a]))
        self.inverse = tuple(inv)
        if n <= EXHAUSTIVE_ASSOCIATIVITY:
            lhs = T[T][:, :, :]  # lhs[a, b, c] = (a*b)*c
            rhs = T[:, T]  # rhs[a, b, c] = a*(b*c)
            bad = np.argwhere(lhs != rhs)
        else:
            rng = np.random.default_rng(0)
            a, b, c = rng.integers(0, n, size=(3, 20000))
            mism = T[T[a, b], c] != T[a, T[b, c]]
            bad = np.stack([a[mism], b[mism], c[mism]], axis=1)
        if len(bad):
            a, b, c = (int(v) for v in bad[0])
            raise GroupAxiomError(f"associativity fails at ({a}, {b}, {c})", (a, b, c))

    def __eq__(self, other):
        return isinstance(other, FiniteGroup) and self.table == other.table

    def __hash__(self):
        return self._hash

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.name or '?'}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for g in range(self.order):
            k, x = 1, g
            while x != self.identity:
                x = self.table[x][g]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def commute_matrix(self) -> np.ndarray:
        return (self._arr == self._arr.T).astype(np.uint8)

    @cached_property
    def conj_table(self) -> np.ndarray:
        """conj[g, x] = g x g^-1."""
        inv = np.asarray(self.inverse)
        return self._arr[self._arr, inv[:, None]].astype(np.int32)

    @cached_property
    def centralizer_masks(self) -> tuple[int, ...]:
        masks = []
        for row in self.commute_matrix:
            masks.append(sum(1 << int(h) for h in np.nonzero(row)[0]))
        return tuple(masks)

    @cached_property
    def is_abelian(self) -> bool:
        return bool(self.commute_matrix.all())

    def centralizer(self, mask: int) -> int:
        full = (1 << self.order) - 1
        return reduce(lambda acc, g: acc & self.centralizer_masks[g], _bits(mask), full)

    def cyclic_mask(self, g: int) -> int:
        mask, x = 1 << self.identity, g
        while x != self.identity:
            mask |= 1 << x
            x = self.table[x][g]
        return mask

    def product_mask(self, a: int, b: int) -> int:
        """The product set {xy : x in a, y in b} of two bitmasks."""
        out = 0
        bl = list(_bits(b))
        for x in _bits(a):
            row = self.table[x]
            for y in bl:
                out |= 1 << row[y]
        return out

    def to_json(self) -> dict:
        return {"order": self.order, "table": [list(r) for r in self.table], "name": self.name}


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    mask: int

    @property
    def elements(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    @property
    def order(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, g: int) -> bool:
        return bool(self.mask >> g & 1)

    def __repr__(self):
        return f"Subgroup(order={self.order}, elements={list(self.elements)})"


# constructors


def cyclic(m: int) -> FiniteGroup:
    return FiniteGroup([[(i + j) % m for j in range(m)] for i in range(m)], f"C{m}")


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    h = H.order
    table = [
        [G.table[a // h][b // h] * h + H.table[a % h][b % h] for b in range(G.order * h)]
        for a in range(G.order * h)
    ]
    return FiniteGroup(table, f"{G.name}x{H.name}")


def dihedral(m: int) -> FiniteGroup:
    """Symmetries of the regular m-gon (order 2m); element r^i s^j has index i + m*j."""

    def mul(x, y):
        a, b = x % m, x // m
        c, d = y % m, y // m
        return (a + (c if b == 0 else -c)) % m + m * ((b + d) % 2)

    n = 2 * m
    return FiniteGroup([[mul(x, y) for y in range(n)] for x in range(n)], f"D{m}")


def quaternion() -> FiniteGroup:
    """Q8 = <a, x | a^4, x^2 = a^2, x a x^-1 = a^-1>; a^i x^j has index i + 4*j."""

    def mul(u, v):
        i, j = u % 4, u // 4
        k, l = v % 4, v // 4
        if j:
            k = -k
        e = j + l
        a = i + k + (2 if e == 2 else 0)
        return a % 4 + 4 * (e % 2)

    return FiniteGroup([[mul(x, y) for y in range(8)] for x in range(8)], "Q8")


def symmetric(m: int) -> FiniteGroup:
    perms = list(permutations(range(m)))
    index = {p: i for i, p in enumerate(perms)}
    # (s*t)(x) = s(t(x))
    table = [[index[tuple(s[t[x]] for x in range(m))] for t in perms] for s in perms]
    return FiniteGroup(table, f"S{m}")


def heisenberg(p: int) -> FiniteGroup:
    """Unitriangular 3x3 matrices over F_p: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')."""
    elems = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    index = {e: i for i, e in enumerate(elems)}
    table = [
        [index[((a + x) % p, (b + y) % p, (c + z + a * y) % p)] for (x, y, z) in elems]
        for (a, b, c) in elems
    ]
    return FiniteGroup(table, f"He{p}")


_PRESET = re.compile(r"^(C|D|S|He)(\d+)$|^(Q8)$")


def parse_group(spec) -> FiniteGroup:
    """Build a group from a preset name ("C8", "D4", "Q8", "S4", "He3",
    products like "C2xC4") or a JSON dict {"order", "table", "name"}."""
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, dict):
        g = FiniteGroup(spec["table"], spec.get("name", ""))
        if "order" in spec and spec["order"] != g.order:
            raise GroupAxiomError(f"declared order {spec['order']} != table size {g.order}")
        return g
    parts = str(spec).replace(" ", "").split("x")
    groups = []
    for part in parts:
        mt = _PRESET.match(part)
        if not mt:
            raise ValueError(f"unknown group preset {part!r}")
        if mt.group(3):
            groups.append(quaternion())
            continue
        kind, m = mt.group(1), int(mt.group(2))
        if m < 1:
            raise ValueError(f"bad group size in {part!r}")
        if kind == "C":
            groups.append(cyclic(m))
        elif kind == "D":
            groups.append(dihedral(m))
        elif kind == "S":
            groups.append(symmetric(m))
        else:
            if not is_prime(m):
                raise ValueError("He<p> needs a prime p")
            groups.append(heisenberg(m))
    return reduce(direct_product, groups)


# counting


def _check_size(G: FiniteGroup, max_order: int | None):
    limit = MAX_ORDER if max_order is None else max_order
    if G.order > limit:
        raise BudgetExceeded(f"group of order {G.order} exceeds max_order={limit}")


def _is_power_of(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1


def p_power_mask(G: FiniteGroup, p: int) -> int:
    mask = 0
    for g, k in enumerate(G.element_orders):
        if _is_power_of(k, p):
            mask |= 1 << g
    return mask


def p_power_order_elements(G: FiniteGroup, p: int) -> list[int]:
    """Elements whose order is a power of p (the identity included)."""
    return list(_bits(p_power_mask(G, p)))


def chi_bg(G: FiniteGroup, p: int, n: int, max_order: int | None = None) -> int:
    """Number of conjugation orbits of commuting n-tuples of p-power-order elements.

    Burnside turns the orbit count into |G|^-1 times the number of commuting
    (n+1)-tuples (g_1..g_n, h) with the g_i of p-power order; that number is
    computed by recursing into centralizers, memoized on the centralizer.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    _check_size(G, max_order)
    S = p_power_mask(G, p)
    cent = G.centralizer_masks
    memo: dict[tuple[int, int], int] = {}

    def extensions(C: int, k: int) -> int:
        if k == 0:
            return C.bit_count()
        key = (C, k)
        if key not in memo:
            memo[key] = sum(extensions(C & cent[g], k - 1) for g in _bits(C & S))
        return memo[key]

    total = extensions((1 << G.order) - 1, n)
    q, r = divmod(total, G.order)
    assert r == 0, "Burnside count not divisible by |G|"
    return q


def brute_force_commuting_tuples(
    G: FiniteGroup, p: int, n: int, budget: int | None = None
) -> int:
    """Oracle for :func:`chi_bg`: explicit orbit partition of commuting tuples."""
    if budget is None:
        budget = default_budget()
    elems = p_power_order_elements(G, p)
    return int(kernels.commuting_orbits(G.conj_table, G.commute_matrix, elems, n, budget))


def abelian_subgroups(G: FiniteGroup, max_order: int | None = None) -> list[Subgroup]:
    """Every abelian subgroup exactly once, smallest first.

    Grown from the trivial subgroup by adjoining one centralizing element at a
    time; each abelian subgroup is reached since it has a chain of abelian
    subgroups each generated over the previous one by a single element.
    """
    _check_size(G, max_order)
    cyc = [G.cyclic_mask(g) for g in range(G.order)]
    start = 1 << G.identity
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for A in frontier:
            C = G.centralizer(A)
            done = A
            for g in _bits(C & ~A):
                if done >> g & 1:
                    continue
                B = G.product_mask(A, cyc[g])
                done |= G.product_mask(1 << g, A)  # the coset gA gives the same B
                if B not in seen:
                    seen.add(B)
                    nxt.append(B)
        frontier = nxt
    return [Subgroup(G, m) for m in sorted(seen, key=lambda m: (m.bit_count(), m))]


def moebius_coefficients(G: FiniteGroup, max_order: int | None = None) -> dict[Subgroup, int]:
    """Integers c_A with sum_{B abelian, B >= A} c_B = 1 for every abelian A.

    The sum runs over abelian overgroups of A; solved from the maximal
    abelian subgroups downwards.
    """
    subs = abelian_subgroups(G, max_order)
    coeff: dict[Subgroup, int] = {}
    nonzero: list[tuple[int, int]] = []
    for A in reversed(subs):
        above = sum(c for B, c in nonzero if B != A.mask and A.mask & ~B == 0)
        c = 1 - above
        coeff[A] = c
        if c:
            nonzero.append((A.mask, c))
    return {A: coeff[A] for A in subs}


def hkr_chi(G: FiniteGroup, p: int, max_order: int | None = None) -> ExpoPoly:
    """chi_n(BG) = |G|^-1 sum_A c_A [A : A_p] |A_p|^(n+1) as an expolynomial in n."""
    S = p_power_mask(G, p)
    terms = []
    for A, c in moebius_coefficients(G, max_order).items():
        if not c:
            continue
        ap = (A.mask & S).bit_count()
        a = 0 if ap == 1 else prime_power_log(ap)[1]
        index = A.order // ap
        terms.append((Fraction(c * index, G.order), IntValuedPoly((a, a))))
    return ExpoPoly(p, tuple(terms))


def p_typical_cardinality(G: FiniteGroup, p: int, max_order: int | None = None) -> Fraction:
    """|BG|_p via the Moebius sum, checked against the fraction of elements
    of order prime to p."""
    S = p_power_mask(G, p)
    total = 0
    for A, c in moebius_coefficients(G, max_order).items():
        if c:
            total += c * (A.order // (A.mask & S).bit_count())
    via_moebius = Fraction(total, G.order)
    direct = Fraction(sum(1 for k in G.element_orders if math.gcd(k, p) == 1), G.order)
    if via_moebius != direct:
        raise ArithmeticError(f"Moebius sum {via_moebius} != direct count {direct}")
    return direct


def is_p_group(G: FiniteGroup, p: int) -> bool:
    return _is_power_of(G.order, p)
