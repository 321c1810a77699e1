"""Brute-force reference computations that share no code with ``commprob``.

Groups are given by hashable elements, an identity and a multiplication
function; everything is computed by naive closure and orbit loops.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from typing import Callable, Hashable

from sympy import factorint
from sympy.utilities.iterables import partitions


class Oracle:
    def __init__(self, gens, identity, mul: Callable):
        self.mul = mul
        self.e = identity
        elems = [identity]
        seen = {identity}
        i = 0
        while i < len(elems):
            x = elems[i]
            i += 1
            for g in gens:
                y = mul(x, g)
                if y not in seen:
                    seen.add(y)
                    elems.append(y)
        self.elems = elems
        self.inv = {x: next(y for y in elems if mul(x, y) == identity) for x in elems}

    @property
    def order(self) -> int:
        return len(self.elems)

    def comm(self, x, y):
        m, i = self.mul, self.inv
        return m(m(m(x, y), i[x]), i[y])

    def classes(self) -> list[frozenset]:
        left = set(self.elems)
        out = []
        while left:
            x = next(iter(left))
            cl = frozenset(self.mul(self.mul(g, x), self.inv[g]) for g in self.elems)
            out.append(cl)
            left -= cl
        return out

    def class_sizes(self) -> list[int]:
        return sorted(len(c) for c in self.classes())

    def pr(self) -> Fraction:
        pairs = sum(self.mul(x, y) == self.mul(y, x) for x in self.elems for y in self.elems)
        return Fraction(pairs, self.order ** 2)

    def center(self) -> set:
        return {z for z in self.elems if all(self.mul(z, x) == self.mul(x, z) for x in self.elems)}

    def closure(self, s) -> set:
        out = {self.e} | set(s)
        frontier = list(out)
        while frontier:
            nxt = []
            for a in frontier:
                for b in list(out):
                    for c in (self.mul(a, b), self.mul(b, a)):
                        if c not in out:
                            out.add(c)
                            nxt.append(c)
            frontier = nxt
        return out

    def derived(self) -> set:
        return self.closure({self.comm(x, y) for x in self.elems for y in self.elems})

    def element_order(self, x) -> int:
        k, y = 1, x
        while y != self.e:
            y = self.mul(y, x)
            k += 1
        return k

    def exponent(self) -> int:
        from math import lcm
        out = 1
        for x in self.elems:
            out = lcm(out, self.element_order(x))
        return out

    def nilpotency_class(self) -> int | None:
        cur = set(self.elems)
        k = 0
        while len(cur) > 1:
            nxt = self.closure({self.comm(x, g) for x in cur for g in self.elems})
            if nxt == cur:
                return None
            cur = nxt
            k += 1
        return k


def perm_mul(p, q):
    """Apply q, then p."""
    return tuple(p[i] for i in q)


def perms(degree: int, *cycles: str) -> Oracle:
    gens = []
    for text in cycles:
        img = list(range(degree))
        for body in text.strip("()").split(")("):
            pts = [int(t) for t in body.split()]
            for a, b in zip(pts, pts[1:] + pts[:1]):
                img[a] = b
        gens.append(tuple(img))
    return Oracle(gens, tuple(range(degree)), perm_mul)


def metacyclic(n: int, m: int, r: int) -> Oracle:
    """C_n x| C_m with the generator acting by x -> x^r."""
    def mul(a, b):
        return ((a[0] + pow(r, a[1], n) * b[0]) % n, (a[1] + b[1]) % m)
    return Oracle([(1, 0), (0, 1)], (0, 0), mul)


def heisenberg(p: int) -> Oracle:
    def mul(a, b):
        return ((a[0] + b[0]) % p, (a[1] + b[1]) % p, (a[2] + b[2] + a[0] * b[1]) % p)
    return Oracle([(1, 0, 0), (0, 1, 0)], (0, 0, 0), mul)


def c5sq_by_c3() -> Oracle:
    """(C5 x C5) x| C3 with (a, b) -> (b, -a - b)."""
    def act(v, k):
        for _ in range(k):
            v = (v[1], (-v[0] - v[1]) % 5)
        return v

    def mul(x, y):
        w = act(y[:2], x[2])
        return ((x[0] + w[0]) % 5, (x[1] + w[1]) % 5, (x[2] + y[2]) % 3)
    return Oracle([(1, 0, 0), (0, 0, 1)], (0, 0, 0), mul)


def direct(a: Oracle, b: Oracle) -> Oracle:
    gens = [(x, b.e) for x in a.elems] + [(a.e, y) for y in b.elems]
    return Oracle(gens, (a.e, b.e), lambda x, y: (a.mul(x[0], y[0]), b.mul(x[1], y[1])))


def count_abelian(bound: int) -> int:
    """Abelian groups of order 2..bound up to isomorphism."""
    total = 0
    for n in range(2, bound + 1):
        k = 1
        for e in factorint(n).values():
            k *= sum(1 for _ in partitions(e))
        total += k
    return total


def _quotient_by_center(o: Oracle) -> tuple[int, bool]:
    z = o.center()
    cosets = {frozenset(o.mul(x, c) for c in z) for x in o.elems}
    reps = [next(iter(c)) for c in cosets]
    abelian = all(o.comm(x, y) in z for x, y in product(reps, reps))
    return len(cosets), abelian
