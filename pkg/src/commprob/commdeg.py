"""Exact commutativity degree and its closed forms.

All values are ``fractions.Fraction``; nothing here touches floating point.
Each closed-form evaluator that takes a group verifies its own hypotheses
and raises ``HypothesesNotMet`` instead of returning a meaningless number.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

import numpy as np
from sympy import factorint, isprime

from .errors import (
    BadParameter,
    HypothesesNotMet,
    NotClass2PGroup,
    NotNormal,
    NotPrimeIndex,
    TrivialGroup,
)
from .group import FiniteGroup, direct_product, element_orders, quotient
from .iso import abelian_invariants
from .structure import (
    Subgroup,
    center,
    centralizer_set,
    commuting_matrix,
    commutator_subgroup,
    conjugacy_classes,
    is_normal,
    smallest_prime_divisor,
    star,
    subgroup_generated,
)

THRESHOLD = Fraction(11, 75)


def format_rational(x: Fraction) -> str:
    """``num/den`` in lowest terms, ``1`` for unity."""
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def commuting_pairs(g: FiniteGroup) -> int:
    return int(commuting_matrix(g).sum())


def pr_exact(g: FiniteGroup) -> Fraction:
    """|{(x, y) : xy = yx}| / |G|^2, cross-checked against k(G)/|G|."""
    def compute():
        pairs = commuting_pairs(g)
        k = len(conjugacy_classes(g))
        assert pairs == k * g.order, "class equation cross-check failed"
        return Fraction(pairs, g.order ** 2)
    return g.cached("pr", compute)


def pr_bound_prgp(g: FiniteGroup) -> Fraction:
    """(1/|G'|)(1 + (|G'| - 1)/p^2), p the smallest prime divisor of |G|."""
    if g.order == 1:
        raise TrivialGroup("bound needs a non-trivial group")
    p = smallest_prime_divisor(g.order)
    d = commutator_subgroup(g).order
    return Fraction(1, d) * (1 + Fraction(d - 1, p * p))


def _prime_of_power(n: int) -> int | None:
    f = factorint(n)
    return next(iter(f)) if len(f) == 1 else None


def cyclic_quotient_subgroups(g: FiniteGroup, h: Subgroup) -> list[Subgroup]:
    """Proper subgroups K of the abelian subgroup H with H/K cyclic."""
    hg = h.as_group()
    members = h.members
    found: dict[bytes, Subgroup] = {}
    for k in _all_subgroups_abelian(hg):
        if k.order == hg.order:
            continue
        idx = hg.order // k.order
        if _quotient_is_cyclic(hg, k, idx):
            mask = np.zeros(g.order, dtype=bool)
            mask[members[k.members]] = True
            sub = Subgroup(g, mask)
            found.setdefault(sub.key, sub)
    return sorted(found.values(), key=lambda s: (s.order, s.members.tolist()))


def _all_subgroups_abelian(a: FiniteGroup) -> list[Subgroup]:
    found: dict[bytes, Subgroup] = {}
    cyclic_subs = {}
    for x in range(a.order):
        s = subgroup_generated(a, [x])
        cyclic_subs.setdefault(s.key, s)
    frontier = list(cyclic_subs.values())
    found.update(cyclic_subs)
    base = list(cyclic_subs.values())
    while frontier:
        nxt = []
        for s in frontier:
            for c in base:
                if c <= s:
                    continue
                j = subgroup_generated(a, list(s.gens) + list(c.gens))
                if j.key not in found:
                    found[j.key] = j
                    nxt.append(j)
        frontier = nxt
    return list(found.values())


def _quotient_is_cyclic(a: FiniteGroup, k: Subgroup, index: int) -> bool:
    q, _ = quotient(a, k)
    return int(element_orders(q).max()) == index


def pr_formula_class2(g: FiniteGroup) -> Fraction:
    """Closed form for a p-group with G' central.

    Sums (p-1)|G':K| / (p |G:K*|) over proper K < G' with G'/K cyclic, and
    asserts the shape of each G/K* (square order, paired invariants, largest
    factor |G':K|).
    """
    p = _prime_of_power(g.order)
    derived = commutator_subgroup(g)
    z = center(g)
    failed = []
    if p is None:
        failed.append("G is not a p-group")
    if not derived <= z:
        failed.append("G' is not central")
    if failed:
        raise NotClass2PGroup(failed)
    total = Fraction(1)
    for k in cyclic_quotient_subgroups(g, derived):
        ks = star(g, k)
        index = g.order // ks.order
        idx_k = derived.order // k.order
        root = isqrt(index)
        assert root * root == index, "G/K* must have square order"
        q, _ = quotient(g, ks)
        assert int(element_orders(q).max()) == idx_k, "exponent of G/K* must be |G':K|"
        if q.is_abelian:
            invs = abelian_invariants(q).invariants
            assert all(invs.count(d) % 2 == 0 for d in set(invs)), f"G/K* not of paired shape: {invs}"
        total += Fraction((p - 1) * idx_k, p * index)
    return total / derived.order


def pr_formula_rusin(p: int, n: int) -> Fraction:
    """(n^2 + p - 1) / (p n^2) for prime p and a divisor n > 1 of p - 1."""
    if not isprime(p) or n <= 1 or (p - 1) % n:
        raise BadParameter(f"need prime p and divisor n > 1 of p-1, got ({p}, {n})")
    return Fraction(n * n + p - 1, p * n * n)


def rusin_parameters(g: FiniteGroup) -> tuple[int, int]:
    """(p, n) for G with |G'| = p prime and G' meeting Z(G) trivially."""
    derived = commutator_subgroup(g)
    z = center(g)
    failed = []
    if not isprime(derived.order):
        failed.append("|G'| is not prime")
    if (derived & z).order != 1:
        failed.append("G' meets Z(G) non-trivially")
    if failed:
        raise HypothesesNotMet(failed)
    p = derived.order
    central_quotient = g.order // z.order
    assert central_quotient % p == 0
    return p, central_quotient // p


def pr_indexp_recursion(g: FiniteGroup, h: Subgroup) -> Fraction:
    """Pr(H)/p^2 + (p+1)/(p|G|^2) * sum over x outside H of |C_G(x)|.

    For abelian H also checks |C_G(x)| = |G:G'| off H and the specialised
    value 1/p^2 + (p^2-1)/(p^2 |G'|).
    """
    if not is_normal(g, h):
        raise NotNormal("H must be normal in G")
    index = g.order // h.order
    if not isprime(index):
        raise NotPrimeIndex([f"|G:H| = {index} is not prime"])
    if g.is_abelian:
        raise HypothesesNotMet(["G is abelian"])
    p = index
    cent_sizes = commuting_matrix(g).sum(axis=1)
    outside = ~h.mask
    general = (pr_exact(h.as_group()) / (p * p)
               + Fraction(p + 1, p * g.order ** 2) * int(cent_sizes[outside].sum()))
    if h.as_group().is_abelian:
        d = commutator_subgroup(g).order
        assert (cent_sizes[outside] == g.order // d).all(), "|C_G(x)| != |G:G'| off H"
        special = Fraction(1, p * p) + Fraction(p * p - 1, p * p * d)
        assert special == general
    assert general == pr_exact(g)
    return general


def pr_formula_main(p: int, s: int | None = None, cg_abelian: bool = True) -> Fraction:
    if cg_abelian:
        return Fraction(2 * p * p - 1, p ** 4)
    if s is None or s < 1:
        raise BadParameter("s >= 1 required when C_G(G') is non-abelian")
    return Fraction(1, p ** 4) * (Fraction(p - 1, p ** (2 * s - 1)) + p * p + p - 1)


def pr_formula_centralizer(p: int, s: int) -> Fraction:
    """Pr of a non-abelian C_G(G') with central quotient (C_p x C_p)^s."""
    return Fraction(1, p) * (1 + Fraction(p - 1, p ** (2 * s)))


@dataclass(frozen=True)
class MainCheck:
    p: int
    s: int | None
    cg_abelian: bool
    pr: Fraction
    formula: Fraction
    central_quotient_order: int
    allowed_central_quotient_orders: tuple[int, ...]
    index_mod_derived_center: int
    index_mod_center: int

    @property
    def ok(self) -> bool:
        return (self.pr == self.formula
                and self.central_quotient_order in self.allowed_central_quotient_orders
                and self.index_mod_derived_center == self.p ** 2
                and self.index_mod_center == self.p ** 2)


def main_hypotheses(g: FiniteGroup) -> list[str]:
    """Failed hypotheses of the |G'| = p^2, |G' n Z| = p theorem (empty if all hold)."""
    d = commutator_subgroup(g)
    dz = d & center(g)
    p = _prime_of_power(d.order) if d.order > 1 else None
    failed = []
    if p is None or d.order != p * p:
        failed.append("|G'| is not p^2")
    else:
        if gcd(p - 1, g.order) != 1:
            failed.append("gcd(p-1, |G|) != 1")
        if dz.order != p:
            failed.append("|G' n Z(G)| != p")
    return failed


def _center_index(q: FiniteGroup) -> int:
    return q.order // center(q).order


def check_main(g: FiniteGroup) -> MainCheck:
    failed = main_hypotheses(g)
    if failed:
        raise HypothesesNotMet(failed)
    d = commutator_subgroup(g)
    z = center(g)
    p = _prime_of_power(d.order)
    cg = centralizer_set(g, d)
    cgg = cg.as_group()
    abelian = cgg.is_abelian
    s = None
    if abelian:
        allowed = (p ** 3,)
    else:
        idx = cg.order // center(cgg).order
        e = factorint(idx).get(p, 0)
        assert p ** e == idx and e % 2 == 0, "|C : Z(C)| must be an even power of p"
        s = e // 2
        allowed = (p ** (2 * s + 2), p ** (2 * s + 3))
    formula = pr_formula_main(p, s, abelian)
    q1, _ = quotient(g, d & z)
    q2, _ = quotient(g, z)
    return MainCheck(
        p=p, s=s, cg_abelian=abelian, pr=pr_exact(g), formula=formula,
        central_quotient_order=g.order // z.order,
        allowed_central_quotient_orders=allowed,
        index_mod_derived_center=_center_index(q1),
        index_mod_center=_center_index(q2),
    )


def pr_product_check(g: FiniteGroup, h: FiniteGroup) -> bool:
    return pr_exact(direct_product(g, h)) == pr_exact(g) * pr_exact(h)


def pr_from_class_sizes(g: FiniteGroup) -> Fraction:
    """Sum of |C_G(x)| / |G|^2 with |C_G(x)| taken from the class sizes."""
    sizes = conjugacy_classes(g).element_sizes()
    return Fraction(int((g.order // sizes).sum()), g.order ** 2)


__all__ = [
    "THRESHOLD", "format_rational", "pr_exact", "pr_bound_prgp", "pr_formula_class2",
    "pr_formula_rusin", "rusin_parameters", "pr_indexp_recursion", "pr_formula_main",
    "pr_formula_centralizer", "check_main", "main_hypotheses", "MainCheck",
    "pr_product_check", "pr_from_class_sizes",
]
