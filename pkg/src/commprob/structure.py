"""Subgroups, centralizers, conjugacy classes and series.

Subgroups are boolean masks over the parent's element indices.  Heavy
per-group data (commuting matrix, commutator table, classes, G') is memoized
on the parent group.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as iproduct
from typing import Iterable

import numpy as np
from sympy import factorint, isprime, primefactors, totient

from .errors import NotNilpotentError, NotNormal, Unsupported
from .group import FiniteGroup, _extend_mask, _small_generating_set, element_orders, powers, quotient


class Subgroup:
    """A subgroup of ``parent`` stored as a membership mask."""

    def __init__(self, parent: FiniteGroup, mask: np.ndarray, gens: Iterable[int] | None = None):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (parent.order,) or not mask[0]:
            raise ValueError("subgroup mask must cover the parent and contain the identity")
        mask = mask.copy()
        mask.flags.writeable = False
        self.parent = parent
        self.mask = mask
        self.order = int(mask.sum())
        assert parent.order % self.order == 0, "Lagrange violated"
        self._gens = tuple(gens) if gens is not None else None
        self._group: FiniteGroup | None = None

    @cached_property
    def members(self) -> np.ndarray:
        m = np.flatnonzero(self.mask)
        m.flags.writeable = False
        return m

    @property
    def gens(self) -> tuple[int, ...]:
        if self._gens is None:
            self._gens = tuple(int(self.members[i]) for i in _small_generating_set(self.as_group()))
        return self._gens

    @cached_property
    def key(self) -> bytes:
        return np.packbits(self.mask).tobytes()

    def __contains__(self, x: int) -> bool:
        return bool(self.mask[x])

    def __len__(self) -> int:
        return self.order

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and self.key == other.key)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.key))

    def __le__(self, other: "Subgroup") -> bool:
        return not (self.mask & ~other.mask).any()

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.order < other.order

    def __and__(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.mask & other.mask)

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.order})"

    @property
    def is_trivial(self) -> bool:
        return self.order == 1

    @property
    def is_whole(self) -> bool:
        return self.order == self.parent.order

    def is_closed(self) -> bool:
        m = self.members
        t = self.parent.table
        return bool(self.mask[t[np.ix_(m, m)]].all() and self.mask[self.parent.inverse[m]].all())

    def as_group(self) -> FiniteGroup:
        """The subgroup as a standalone group (elements renumbered in index order)."""
        if self._group is None:
            m = self.members
            relabel = np.full(self.parent.order, -1, dtype=np.int64)
            relabel[m] = np.arange(m.size)
            labels = None
            if self.parent.labels is not None:
                labels = [self.parent.labels[i] for i in m]
            self._group = FiniteGroup(relabel[self.parent.table[np.ix_(m, m)]], labels=labels,
                                      check="skip")
        return self._group


def whole(g: FiniteGroup) -> Subgroup:
    return g.cached("whole", lambda: Subgroup(g, np.ones(g.order, dtype=bool)))


def trivial(g: FiniteGroup) -> Subgroup:
    def build():
        mask = np.zeros(g.order, dtype=bool)
        mask[0] = True
        return Subgroup(g, mask, gens=())
    return g.cached("trivial", build)


def commuting_matrix(g: FiniteGroup) -> np.ndarray:
    """Boolean matrix with entry (x, y) true iff xy = yx."""
    def compute():
        m = g.table == g.table.T
        m.flags.writeable = False
        return m
    return g.cached("commuting", compute)


def commutator_table(g: FiniteGroup) -> np.ndarray:
    """Entry (x, y) is [x, y] = x y x^-1 y^-1."""
    def compute():
        t, inv = g.table, g.inverse
        c = t[t[t, inv[:, None]], inv[None, :]]
        c.flags.writeable = False
        return c
    return g.cached("commutators", compute)


def subgroup_generated(g: FiniteGroup, s: Iterable[int]) -> Subgroup:
    mask = np.zeros(g.order, dtype=bool)
    mask[0] = True
    gens: list[int] = []
    for x in s:
        x = int(x)
        if not mask[x]:
            gens.append(x)
            _extend_mask(g.table, mask, x)
    return Subgroup(g, mask, gens=gens)


def join(h: Subgroup, k: Subgroup) -> Subgroup:
    g = h.parent
    mask = h.mask.copy()
    gens = list(h.gens)
    for x in k.gens:
        if not mask[x]:
            gens.append(x)
            _extend_mask(g.table, mask, x)
    return Subgroup(g, mask, gens=gens)


def normal_product(h: Subgroup, k: Subgroup) -> Subgroup:
    """HK, a subgroup whenever one factor is normal (not checked)."""
    mask = np.zeros(h.parent.order, dtype=bool)
    mask[h.parent.table[h.members[:, None], k.members[None, :]]] = True
    return Subgroup(h.parent, mask)


def center(g: FiniteGroup) -> Subgroup:
    def compute():
        return Subgroup(g, commuting_matrix(g).all(axis=1))
    return g.cached("center", compute)


def centralizer(g: FiniteGroup, x: int) -> Subgroup:
    return Subgroup(g, commuting_matrix(g)[x])


def centralizer_set(g: FiniteGroup, s) -> Subgroup:
    """Elements commuting with every member of ``s`` (a Subgroup or index list)."""
    if isinstance(s, Subgroup):
        idx = list(s.gens)
    else:
        idx = [int(x) for x in s]
    if not idx:
        return whole(g)
    return Subgroup(g, commuting_matrix(g)[idx].all(axis=0))


def commutator_subgroup(g: FiniteGroup) -> Subgroup:
    return g.cached("derived", lambda: subgroup_generated(g, np.unique(commutator_table(g))))


def commutator_set(g: FiniteGroup, x: int) -> np.ndarray:
    """[G, x] = {[y, x] : y in G} as a sorted index array (not always a subgroup)."""
    return np.unique(commutator_table(g)[:, x])


def commutator_of(h: Subgroup, k: Subgroup) -> Subgroup:
    """[H, K], the subgroup generated by all [x, y] with x in H, y in K."""
    c = commutator_table(h.parent)
    return subgroup_generated(h.parent, np.unique(c[np.ix_(h.members, k.members)]))


def derived_subgroup(h: Subgroup) -> Subgroup:
    return commutator_of(h, h)


def is_normal(g: FiniteGroup, h: Subgroup) -> bool:
    # conjugating by generators of G suffices
    t, inv = g.table, g.inverse
    m = h.members
    return all(h.mask[t[t[x, m], inv[x]]].all() for x in _small_generating_set(g))


def normal_closure(g: FiniteGroup, s: Iterable[int]) -> Subgroup:
    t, inv = g.table, g.inverse
    gens_g = _small_generating_set(g)
    h = subgroup_generated(g, s)
    while True:
        hg = np.array(h.gens, dtype=np.int64)
        if hg.size == 0:
            return h
        conj = np.unique(np.concatenate([t[t[x, hg], inv[x]] for x in gens_g]))
        outside = conj[~h.mask[conj]]
        if outside.size == 0:
            return h
        h = subgroup_generated(g, list(h.gens) + outside.tolist())


def normal_subgroups(g: FiniteGroup, cap: int = 4096) -> tuple[list[Subgroup], bool]:
    """All normal subgroups, as joins of normal closures of single elements.

    Returns ``(subgroups, complete)``; enumeration stops once ``cap``
    subgroups have been found, in which case ``complete`` is False.
    Subgroups are sorted by (order, members).
    """
    def compute():
        found: dict[bytes, Subgroup] = {}
        classes = conjugacy_classes(g)
        for cls in classes.classes:
            h = normal_closure(g, [int(cls[0])])
            found.setdefault(h.key, h)
        complete = True
        frontier = list(found.values())
        base = list(found.values())
        while frontier and complete:
            nxt = []
            for a in frontier:
                for b in base:
                    if b <= a or a <= b:
                        continue
                    j = normal_product(a, b)
                    if j.key not in found:
                        found[j.key] = j
                        nxt.append(j)
                        if len(found) >= cap:
                            complete = False
                            break
                if not complete:
                    break
            frontier = nxt
        subs = sorted(found.values(), key=lambda h: (h.order, h.members.tolist()))
        return subs, complete
    return g.cached(("normal_subgroups", cap), compute)


def star(g: FiniteGroup, h: Subgroup) -> Subgroup:
    """H* = {x in G : [G, x] is contained in H}, for normal H."""
    if not is_normal(g, h):
        raise NotNormal("star operator needs a normal subgroup")
    c = commutator_table(g)
    gens = _small_generating_set(g)
    # [y, x] in H for all y iff it holds for y in a generating set, H normal:
    # [y1 y2, x] = y1 [y2, x] y1^-1 [y1, x]
    res = Subgroup(g, h.mask[c[gens]].all(axis=0))
    assert h <= res and is_normal(g, res)
    return res


@dataclass(frozen=True)
class ConjClasses:
    classes: tuple[np.ndarray, ...]
    class_index: np.ndarray

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def __len__(self) -> int:
        return len(self.classes)

    def size_of(self, x: int) -> int:
        return len(self.classes[self.class_index[x]])

    def element_sizes(self) -> np.ndarray:
        sizes = np.array(self.sizes, dtype=np.int64)
        return sizes[self.class_index]

    def masks(self) -> list[np.ndarray]:
        out = []
        n = self.class_index.size
        for c in self.classes:
            m = np.zeros(n, dtype=bool)
            m[c] = True
            out.append(m)
        return out


def conjugacy_classes(g: FiniteGroup) -> ConjClasses:
    """Classes ordered by (size, minimal member)."""
    def compute():
        t, inv = g.table, g.inverse
        n = g.order
        seen = np.zeros(n, dtype=bool)
        found = []
        for x in range(n):
            if seen[x]:
                continue
            cls = np.unique(t[t[:, x], inv])
            seen[cls] = True
            found.append(cls)
        found.sort(key=lambda c: (len(c), int(c[0])))
        index = np.empty(n, dtype=np.int64)
        for k, c in enumerate(found):
            c.flags.writeable = False
            index[c] = k
        index.flags.writeable = False
        return ConjClasses(tuple(found), index)
    return g.cached("classes", compute)


@dataclass(frozen=True)
class CentralSeries:
    terms: tuple[Subgroup, ...]

    @property
    def nilpotent(self) -> bool:
        return self.terms[-1].is_trivial

    @property
    def nilpotency_class(self) -> int | None:
        return len(self.terms) - 1 if self.nilpotent else None


def lower_central_series(g: FiniteGroup) -> CentralSeries:
    def compute():
        c = commutator_table(g)
        terms = [whole(g)]
        while True:
            cur = terms[-1]
            nxt = subgroup_generated(g, np.unique(c[cur.members]))
            if nxt.order == cur.order:
                break
            terms.append(nxt)
        return CentralSeries(tuple(terms))
    return g.cached("lcs", compute)


def nilpotency_class(g: FiniteGroup) -> int | None:
    """Nilpotency class, or None when G is not nilpotent (trivial group: 0)."""
    return lower_central_series(g).nilpotency_class


def derived_series(g: FiniteGroup) -> tuple[Subgroup, ...]:
    def compute():
        terms = [whole(g)]
        while True:
            nxt = derived_subgroup(terms[-1])
            if nxt.order == terms[-1].order:
                return tuple(terms)
            terms.append(nxt)
    return g.cached("derived_series", compute)


def sylow_decomposition(g: FiniteGroup) -> list[tuple[int, Subgroup]]:
    """Sylow subgroups of a nilpotent group, verified to form a direct product."""
    if nilpotency_class(g) is None:
        raise NotNilpotentError("Sylow decomposition needs a nilpotent group")
    orders = element_orders(g)
    t = g.table
    comm = commuting_matrix(g)
    parts = []
    for p in primefactors(g.order):
        mask = np.array([_is_power_of(int(o), p) for o in orders])
        sub = Subgroup(g, mask)
        assert sub.is_closed(), f"{p}-elements do not form a subgroup"
        assert sub.order == p ** factorint(g.order)[p]
        parts.append((p, sub))
    total = 1
    for i, (_, a) in enumerate(parts):
        total *= a.order
        for _, b in parts[i + 1:]:
            assert comm[np.ix_(a.members, b.members)].all()
    assert total == g.order
    return parts


def prime_index_normal_subgroups(g: FiniteGroup) -> list[Subgroup]:
    """Every normal subgroup of prime index.

    Such a subgroup contains G' G^p, so these are the preimages of the
    hyperplanes of the elementary abelian quotient G / G' G^p.
    """
    result = []
    derived = commutator_subgroup(g)
    for p in primefactors(g.order):
        base = subgroup_generated(g, list(derived.gens) + np.unique(powers(g, p)).tolist())
        if base.is_whole:
            continue
        v, proj = quotient(g, base)
        basis = _small_generating_set(v)
        d = len(basis)
        vt = v.table
        coords = np.zeros((v.order, d), dtype=np.int64)
        for c in iproduct(range(p), repeat=d):
            x = 0
            for b, e in zip(basis, c):
                for _ in range(e):
                    x = vt[x, b]
            coords[x] = c
        for f in iproduct(range(p), repeat=d):
            nz = [e for e in f if e]
            if not nz or nz[0] != 1:
                continue
            kernel = (coords @ np.array(f)) % p == 0
            result.append(Subgroup(g, kernel[proj]))
    return result


def aut_order(invariants: Iterable[int]) -> int:
    """|Aut(A)| for A cyclic or A = C_p x C_p (invariant-factor list)."""
    invs = [int(d) for d in invariants if int(d) > 1]
    if not invs:
        return 1
    if len(invs) == 1:
        return int(totient(invs[0]))
    if len(invs) == 2 and invs[0] == invs[1] and isprime(invs[0]):
        p = invs[0]
        return p * (p + 1) * (p - 1) ** 2
    raise Unsupported(f"aut_order not implemented for invariants {invs}")


def smallest_prime_divisor(n: int) -> int:
    if n < 2:
        raise ValueError("trivial order has no prime divisor")
    return min(primefactors(n))


def is_prime_power(n: int) -> bool:
    return n > 1 and len(factorint(n)) == 1


def _is_power_of(k: int, p: int) -> bool:
    while k % p == 0:
        k //= p
    return k == 1
