"""Isomorphism testing and naming of the small groups in the tables.

Labels serialize to a compact grammar::

    A[3,9]              abelian, invariant factors
    N:SDC(7,3)          named type (D, Dic, ES, SDC)
    P[A[3],N:SDC(7,3)]  direct product
    U:63:1a2b3c4d5e     unrecognized (order and fingerprint digest)
"""

from __future__ import annotations

import hashlib
import re
from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Union

import numpy as np
from sympy import factorint, integer_nthroot, isprime, primefactors

from .errors import NotAbelian, SearchBudgetExceeded
from .group import (
    FiniteGroup,
    _extend_mask,
    cp2_semidirect,
    cp_semidirect,
    dicyclic,
    dihedral,
    element_orders,
    exponent,
    extraspecial,
)
from .structure import (
    center,
    commuting_matrix,
    commutator_subgroup,
    conjugacy_classes,
    derived_series,
    normal_subgroups,
)

DEFAULT_BUDGET = 10 ** 7


@dataclass(frozen=True)
class Fingerprint:
    order: int
    element_orders: tuple[tuple[int, int], ...]
    class_sizes: tuple[tuple[int, int], ...]
    center_order: int
    derived_order: int
    derived_series: tuple[int, ...]
    exponent: int

    def digest(self) -> str:
        return hashlib.sha1(repr(self).encode()).hexdigest()[:10]


@dataclass(frozen=True)
class Abelian:
    invariants: tuple[int, ...]

    def __str__(self) -> str:
        return "A[" + ",".join(map(str, self.invariants)) + "]"


@dataclass(frozen=True)
class Named:
    tag: str
    params: tuple

    def __str__(self) -> str:
        if self.tag == "SDC":
            p, e, q = self.params
            base = str(p) if e == 1 else f"{p}^{e}"
            return f"N:SDC({base},{q})"
        return f"N:{self.tag}(" + ",".join(map(str, self.params)) + ")"


@dataclass(frozen=True)
class Product:
    factors: tuple

    def __str__(self) -> str:
        return "P[" + ",".join(map(str, self.factors)) + "]"


@dataclass(frozen=True)
class Unrecognized:
    fingerprint: Fingerprint

    def __str__(self) -> str:
        return f"U:{self.fingerprint.order}:{self.fingerprint.digest()}"


IsoLabel = Union[Abelian, Named, Product, Unrecognized]


def dihedral_label(n: int) -> Named:
    return Named("D", (n,))


def dicyclic_label(n: int) -> Named:
    return Named("Dic", (n,))


def extraspecial_label(p: int, kind: str) -> Named:
    return Named("ES", (p, kind))


def sdc_label(p: int, q: int, e: int = 1) -> Named:
    return Named("SDC", (p, e, q))



def parse_label(text: str) -> IsoLabel:
    """Inverse of ``str`` for A, N and P labels."""
    label, rest = _parse(text.strip())
    if rest:
        raise ValueError(f"trailing text in label: {rest!r}")
    return label


def _parse(s: str):
    if s.startswith("A["):
        body, rest = s[2:].split("]", 1)
        invs = tuple(int(x) for x in body.split(",")) if body else ()
        return Abelian(invs), rest
    if s.startswith("N:"):
        m = re.match(r"N:(\w+)\(([^)]*)\)", s)
        if not m:
            raise ValueError(f"bad named label {s!r}")
        tag, args = m.group(1), m.group(2).split(",")
        rest = s[m.end():]
        if tag == "SDC":
            base, q = args
            p, _, e = base.partition("^")
            return sdc_label(int(p), int(q), int(e or 1)), rest
        if tag == "ES":
            return extraspecial_label(int(args[0]), args[1]), rest
        return Named(tag, tuple(int(a) for a in args)), rest
    if s.startswith("P["):
        factors = []
        rest = s[2:]
        while True:
            f, rest = _parse(rest)
            factors.append(f)
            if rest.startswith(","):
                rest = rest[1:]
            elif rest.startswith("]"):
                return Product(tuple(factors)), rest[1:]
            else:
                raise ValueError(f"bad product label near {rest!r}")
    raise ValueError(f"cannot parse label {s!r}")


# ---------------------------------------------------------------------------
# invariants


def fingerprint(g: FiniteGroup) -> Fingerprint:
    def compute():
        orders = Counter(int(o) for o in element_orders(g))
        sizes = Counter(conjugacy_classes(g).sizes)
        return Fingerprint(
            order=g.order,
            element_orders=tuple(sorted(orders.items())),
            class_sizes=tuple(sorted(sizes.items())),
            center_order=center(g).order,
            derived_order=commutator_subgroup(g).order,
            derived_series=tuple(h.order for h in derived_series(g)),
            exponent=exponent(g),
        )
    return g.cached("fingerprint", compute)


def abelian_invariants(g: FiniteGroup) -> Abelian:
    """Invariant factors of an abelian group from the sizes of its p^k-torsion."""
    if not g.is_abelian:
        raise NotAbelian("abelian_invariants needs an abelian group")
    orders = element_orders(g)
    elementary = []
    for p, a in factorint(g.order).items():
        counts = [int(np.sum((p ** k) % orders == 0)) for k in range(a + 1)]
        # rank of the p^k layer = log_p |Omega_k / Omega_{k-1}|
        ranks = [_log(counts[k] // counts[k - 1], p) for k in range(1, a + 1)] + [0]
        for k in range(1, a + 1):
            elementary += [p ** k] * (ranks[k - 1] - ranks[k])
    return Abelian(invariant_factors(elementary))


def invariant_factors(elementary: list[int]) -> tuple[int, ...]:
    """Invariant factors d1 | d2 | ... from prime-power elementary divisors."""
    by_prime: dict[int, list[int]] = {}
    for q in elementary:
        if q > 1:
            (p, _), = factorint(q).items()
            by_prime.setdefault(p, []).append(q)
    width = max((len(v) for v in by_prime.values()), default=0)
    factors = [1] * width
    for qs in by_prime.values():
        qs.sort(reverse=True)
        for i, q in enumerate(qs):
            factors[width - 1 - i] *= q
    return tuple(factors)


def combine_invariants(*lists) -> tuple[int, ...]:
    elementary = []
    for invs in lists:
        for d in invs:
            elementary += [p ** e for p, e in factorint(d).items()]
    return invariant_factors(elementary)


def _log(x: int, p: int) -> int:
    k = 0
    while x > 1:
        x //= p
        k += 1
    return k


# ---------------------------------------------------------------------------
# isomorphism search


def generating_sequence(g: FiniteGroup) -> list[int]:
    """Greedy generators: maximal order, then largest new closure, then least index."""
    def compute():
        orders = element_orders(g)
        reached = np.zeros(g.order, dtype=bool)
        reached[0] = True
        gens: list[int] = []
        while not reached.all():
            cand = np.flatnonzero(~reached)
            top = orders[cand].max()
            best, best_mask = -1, None
            for x in cand[orders[cand] == top]:
                m = reached.copy()
                _extend_mask(g.table, m, int(x))
                if best_mask is None or m.sum() > best_mask.sum():
                    best, best_mask = int(x), m
                    if m.all():
                        break
            gens.append(best)
            reached = best_mask
        return gens
    return g.cached("generating_sequence", compute)


@dataclass
class _Level:
    layers: list[tuple[np.ndarray, np.ndarray, np.ndarray]]
    closure: np.ndarray
    edge_src: np.ndarray
    edge_gen: np.ndarray
    edge_dst: np.ndarray


def _plan(g: FiniteGroup, gens: list[int]) -> list[_Level]:
    t = g.table
    levels = []
    for d in range(len(gens)):
        use = gens[: d + 1]
        seen = np.zeros(g.order, dtype=bool)
        seen[0] = True
        frontier = np.array([0])
        layers = []
        while frontier.size:
            src = np.repeat(frontier, len(use))
            gi = np.tile(np.arange(len(use)), frontier.size)
            dst = t[src, np.array(use)[gi]]
            new = ~seen[dst]
            dst, src, gi = dst[new], src[new], gi[new]
            dst, first = np.unique(dst, return_index=True)
            src, gi = src[first], gi[first]
            seen[dst] = True
            if dst.size:
                layers.append((dst, src, gi))
            frontier = dst
        closure = np.flatnonzero(seen)
        es = np.repeat(closure, len(use))
        eg = np.tile(np.arange(len(use)), closure.size)
        levels.append(_Level(layers, closure, es, eg, t[es, np.array(use)[eg]]))
    return levels


def find_isomorphism(g: FiniteGroup, h: FiniteGroup, budget: int = DEFAULT_BUDGET) -> np.ndarray | None:
    """An isomorphism G -> H as an index array, or None when none exists.

    Raises SearchBudgetExceeded rather than answering when the backtracking
    search visits more than ``budget`` nodes.
    """
    if g.order != h.order or fingerprint(g) != fingerprint(h):
        return None
    if g.order == 1:
        return np.zeros(1, dtype=np.int64)
    gens = generating_sequence(g)
    levels = _plan(g, gens)
    og, oh = element_orders(g), element_orders(h)
    cg = conjugacy_classes(g).element_sizes()
    chs = conjugacy_classes(h).element_sizes()
    cands = [np.flatnonzero((oh == og[x]) & (chs == cg[x])) for x in gens]
    th = h.table
    imgs = np.zeros(len(gens), dtype=np.int64)
    nodes = 0

    def mapping(d: int) -> np.ndarray | None:
        lev = levels[d]
        phi = np.full(g.order, -1, dtype=np.int64)
        phi[0] = 0
        for dst, src, gi in lev.layers:
            phi[dst] = th[phi[src], imgs[gi]]
        if not np.array_equal(th[phi[lev.edge_src], imgs[lev.edge_gen]], phi[lev.edge_dst]):
            return None
        if np.unique(phi[lev.closure]).size != lev.closure.size:
            return None
        return phi

    def search(d: int, prev: np.ndarray | None) -> np.ndarray | None:
        nonlocal nodes
        used = np.zeros(h.order, dtype=bool)
        if prev is not None:
            used[prev[levels[d - 1].closure]] = True
        for y in cands[d]:
            if used[y]:
                continue
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(budget)
            imgs[d] = y
            phi = mapping(d)
            if phi is None:
                continue
            if d + 1 == len(gens):
                if np.array_equal(th[phi[:, None], phi[None, :]], phi[g.table]):
                    return phi
                continue
            found = search(d + 1, phi)
            if found is not None:
                return found
        return None

    return search(0, None)


def are_isomorphic(g: FiniteGroup, h: FiniteGroup, budget: int = DEFAULT_BUDGET) -> bool:
    return find_isomorphism(g, h, budget) is not None


# ---------------------------------------------------------------------------
# recognition


def _named_candidates(n: int) -> Iterator[tuple[Named, callable]]:
    if n % 2 == 0 and n // 2 >= 3:
        yield dihedral_label(n // 2), lambda: dihedral(n // 2)
    if n % 4 == 0 and n // 4 >= 2:
        yield dicyclic_label(n // 4), lambda: dicyclic(n // 4)
    p, exact = integer_nthroot(n, 3)
    if exact and isprime(p) and p > 2:
        yield extraspecial_label(p, "p"), lambda: extraspecial(p, "p")
        yield extraspecial_label(p, "p2"), lambda: extraspecial(p, "p2")
    for p in primefactors(n):
        q = n // p
        if q > 1 and (p - 1) % q == 0:
            yield sdc_label(p, q), (lambda p=p, q=q: cp_semidirect(p, q))
    for p in primefactors(n):
        q = n // (p * p)
        if n % (p * p) == 0 and isprime(q) and q != p and (p + 1) % q == 0 and (p - 1) % q:
            yield sdc_label(p, q, 2), (lambda p=p, q=q: cp2_semidirect(p, q))


def direct_decomposition(g: FiniteGroup):
    """A pair (H, K) of normal subgroups with G = H x K, smallest H first, or None."""
    subs, _ = normal_subgroups(g)
    n = g.order
    by_order: dict[int, list] = {}
    for s in subs:
        by_order.setdefault(s.order, []).append(s)
    comm = commuting_matrix(g)
    for h in subs:
        if h.order in (1, n):
            continue
        for k in by_order.get(n // h.order, []):
            if (h.mask & k.mask).sum() == 1 and comm[np.ix_(h.gens, k.gens)].all():
                return h, k
    return None


def recognize(g: FiniteGroup) -> IsoLabel:
    """Name G: abelian invariants, a named family, a direct product, or Unrecognized."""
    def compute():
        if g.is_abelian:
            return abelian_invariants(g)
        fp = fingerprint(g)
        for label, build in _named_candidates(g.order):
            cand = build()
            if fingerprint(cand) == fp and are_isomorphic(g, cand):
                return label
        split = direct_decomposition(g)
        if split is not None:
            factors = []
            for part in split:
                lab = recognize(part.as_group())
                if isinstance(lab, Unrecognized):
                    return Unrecognized(fp)
                factors.extend(lab.factors if isinstance(lab, Product) else [lab])
            return _canonical_product(factors)
        return Unrecognized(fp)
    return g.cached("label", compute)


def _canonical_product(factors: list) -> IsoLabel:
    abel = [f for f in factors if isinstance(f, Abelian)]
    rest = sorted((f for f in factors if not isinstance(f, Abelian)), key=str)
    merged = combine_invariants(*(a.invariants for a in abel))
    out = ([Abelian(merged)] if merged else []) + rest
    if len(out) == 1:
        return out[0]
    return Product(tuple(out))


def label_order(label: IsoLabel) -> int:
    if isinstance(label, Abelian):
        return int(np.prod(label.invariants, dtype=object)) if label.invariants else 1
    if isinstance(label, Product):
        return int(np.prod([label_order(f) for f in label.factors], dtype=object))
    if isinstance(label, Unrecognized):
        return label.fingerprint.order
    tag, ps = label.tag, label.params
    if tag == "D":
        return 2 * ps[0]
    if tag == "Dic":
        return 4 * ps[0]
    if tag == "ES":
        return ps[0] ** 3
    p, e, q = ps
    return p ** e * q
