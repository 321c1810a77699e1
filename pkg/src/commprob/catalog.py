"""Witness groups, small-group families and group-file ingestion."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Callable, Iterator

import numpy as np
from sympy import divisors, factorint, primerange
from sympy.utilities.iterables import partitions

from .errors import BadParameter, UnknownRow
from .group import (
    DEFAULT_CAP,
    AutAction,
    FiniteGroup,
    Permutation,
    abelian,
    cp2_semidirect,
    cp_semidirect,
    cyclic,
    dicyclic,
    dihedral,
    direct_product,
    extraspecial,
    from_permutations,
    power_map,
    quotient,
    semidirect_product,
)
from .groupfile import read_group, write_group
from .structure import center, subgroup_generated


# ---------------------------------------------------------------------------
# constructions used by the witnesses


def central_product(g: FiniteGroup, h: FiniteGroup, zg: int, zh: int) -> FiniteGroup:
    """G x H modulo <(zg, zh^-1)>, for central elements of equal order."""
    if zg not in center(g) or zh not in center(h):
        raise BadParameter("central product needs central elements")
    prod = direct_product(g, h)
    gen = zg * h.order + int(h.inverse[zh])
    sub = subgroup_generated(prod, [gen])
    if sub.order * sub.order != (
            subgroup_generated(g, [zg]).order * subgroup_generated(h, [zh]).order):
        raise BadParameter("identified central elements must have equal order")
    q, _ = quotient(prod, sub)
    return q


def bilinear_extension(p: int, forms) -> FiniteGroup:
    """Class-2 group on F_p^n x F_p^m with (v, w)(v', w') = (v + v', w + w' + B(v, v')).

    ``forms`` is a list of m integer n x n matrices; component k of B is
    v^T forms[k] v'. Index is (v as base-p digits) * p^m + (w as digits).
    """
    bs = [np.asarray(b, dtype=np.int64) % p for b in forms]
    if not bs:
        raise BadParameter("need at least one form")
    n, m = bs[0].shape[0], len(bs)
    nv, nw = p ** n, p ** m
    v = np.array(np.unravel_index(np.arange(nv), (p,) * n)).T        # nv x n
    w = np.array(np.unravel_index(np.arange(nw), (p,) * m)).T        # nw x m
    vsum = np.ravel_multi_index(((v[:, None, :] + v[None, :, :]) % p).transpose(2, 0, 1), (p,) * n)
    beta = np.stack([(v @ b @ v.T) % p for b in bs], axis=-1)        # nv x nv x m
    wsum = (w[:, None, :] + w[None, :, :])                           # nw x nw x m
    size = nv * nw
    vi, wi = np.divmod(np.arange(size), nw)
    coords = (wsum[wi[:, None], wi[None, :], :] + beta[vi[:, None], vi[None, :], :]) % p
    wout = np.ravel_multi_index(np.moveaxis(coords, -1, 0), (p,) * m)
    table = vsum[vi[:, None], vi[None, :]] * nw + wout
    return FiniteGroup(table, check="skip")


def wreath_c3_c3() -> FiniteGroup:
    gens = [Permutation.from_cycles(9, "(0 1 2)"),
            Permutation.from_cycles(9, "(0 3 6)(1 4 7)(2 5 8)")]
    return from_permutations(gens, name="C3wrC3")


def _es3_squared_central() -> FiniteGroup:
    es = extraspecial(3)
    return central_product(es, es, 1, 1)


def _c7_by_es3() -> FiniteGroup:
    # x = (1,0,0) and y = (0,1,0) generate ES(3); the kernel of the action is
    # <G', y>, so x acts on C7 by squaring.
    c7, es = cyclic(7), extraspecial(3)
    x, y = 9, 3
    return semidirect_product(c7, es, AutAction([x, y], [power_map(c7, 2), Permutation.identity(7)]))


# ---------------------------------------------------------------------------
# witnesses


@dataclass(frozen=True)
class Expected:
    pr: Fraction
    derived: str
    derived_center: str
    central_quotient: str


@dataclass(frozen=True)
class WitnessSpec:
    row_id: str
    recipe: str
    build: Callable[[], FiniteGroup]
    expected: Expected
    table_row: str | None     # None for the remark witnesses

    @property
    def is_remark(self) -> bool:
        return self.table_row is None


def _e(pr: str, d: str, dz: str, gz: str) -> Expected:
    return Expected(Fraction(pr), d, dz, gz)


WITNESSES: dict[str, WitnessSpec] = {w.row_id: w for w in [
    WitnessSpec("1", "cyclic(1)", lambda: cyclic(1),
                _e("1", "A[]", "A[]", "A[]"), "1"),
    WitnessSpec("11/27", "extraspecial(3)", lambda: extraspecial(3),
                _e("11/27", "A[3]", "A[3]", "A[3,3]"), "s3"),
    WitnessSpec("83/243", "extraspecial(3) o extraspecial(3)", _es3_squared_central,
                _e("83/243", "A[3]", "A[3]", "A[3,3,3,3]"), "s3"),
    WitnessSpec("29/125", "extraspecial(5)", lambda: extraspecial(5),
                _e("29/125", "A[5]", "A[5]", "A[5,5]"), "s5"),
    WitnessSpec("5/21", "C7 x| C3, x -> x^2", lambda: cp_semidirect(7, 3, 2),
                _e("5/21", "A[7]", "A[]", "N:SDC(7,3)"), "5/21"),
    WitnessSpec("55/343", "extraspecial(7)", lambda: extraspecial(7),
                _e("55/343", "A[7]", "A[7]", "A[7,7]"), "55/343"),
    WitnessSpec("17/81", "C3 wr C3 (permutations of degree 9)", wreath_c3_c3,
                _e("17/81", "A[3,3]", "A[3]", "N:ES(3,p)"), "17/81a"),
    WitnessSpec("121/729", "extraspecial(3) x extraspecial(3)",
                lambda: direct_product(extraspecial(3), extraspecial(3)),
                _e("121/729", "A[3,3]", "A[3,3]", "A[3,3,3,3]"), "121/729"),
    WitnessSpec("7/39", "C13 x| C3, x -> x^3", lambda: cp_semidirect(13, 3, 3),
                _e("7/39", "A[13]", "A[]", "N:SDC(13,3)"), "7/39"),
    WitnessSpec("3/19", "C19 x| C3, x -> x^7", lambda: cp_semidirect(19, 3, 7),
                _e("3/19", "A[19]", "A[]", "N:SDC(19,3)"), "3/19"),
    WitnessSpec("29/189", "C7 x| extraspecial(3), kernel <G', y>, x -> x^2", _c7_by_es3,
                _e("29/189", "A[21]", "A[3]", "P[A[3],N:SDC(7,3)]"), "29/189"),
    WitnessSpec("11/75", "(C5 x C5) x| C3, matrix [[0,1],[-1,-1]]",
                lambda: cp2_semidirect(5, 3, [[0, 1], [-1, -1]]),
                _e("11/75", "A[5,5]", "A[]", "N:SDC(5^2,3)"), "11/75"),
    WitnessSpec("rem-5/14", "dihedral(7)", lambda: dihedral(7),
                _e("5/14", "A[7]", "A[]", "N:D(7)"), None),
    WitnessSpec("rem-7/16-d16", "dihedral(8)", lambda: dihedral(8),
                _e("7/16", "A[4]", "A[2]", "N:D(4)"), None),
    WitnessSpec("rem-25/64", "dihedral(4) x dihedral(4)",
                lambda: direct_product(dihedral(4), dihedral(4)),
                _e("25/64", "A[2,2]", "A[2,2]", "A[2,2,2,2]"), None),
    WitnessSpec("rem-T", "dicyclic(3)", lambda: dicyclic(3),
                _e("1/2", "A[3]", "A[]", "N:D(3)"), None),
]}


def witness_spec(row_id: str) -> WitnessSpec:
    try:
        return WITNESSES[row_id]
    except KeyError:
        raise UnknownRow(row_id) from None


@lru_cache(maxsize=None)
def witness(row_id: str) -> FiniteGroup:
    spec = witness_spec(row_id)
    return spec.build().renamed(f"witness:{row_id}")


# ---------------------------------------------------------------------------
# classification table rows


Signature = tuple[Fraction, str, str, str]


@dataclass(frozen=True)
class TableRow:
    row_id: str
    description: str
    match: Callable[[Signature], bool]


def _elementary_rank(label: str, p: int) -> int | None:
    if not label.startswith("A[") or not label.endswith("]"):
        return None
    body = label[2:-1]
    parts = [int(x) for x in body.split(",")] if body else []
    return len(parts) if parts and all(x == p for x in parts) else None


def _s_row(p: int) -> Callable[[Signature], bool]:
    def match(sig: Signature) -> bool:
        pr, d, dz, gz = sig
        rank = _elementary_rank(gz, p)
        if d != f"A[{p}]" or dz != f"A[{p}]" or rank is None or rank % 2:
            return False
        s = rank // 2
        return pr == (1 + Fraction(p - 1, p ** (2 * s))) / p
    return match


def _fixed(pr: str, ds: tuple[str, ...], dz: str, gz: str) -> Callable[[Signature], bool]:
    want = Fraction(pr)
    return lambda sig: sig[0] == want and sig[1] in ds and sig[2] == dz and sig[3] == gz


TABLE_ROWS: tuple[TableRow, ...] = (
    TableRow("1", "1 | 1 | 1 | 1", _fixed("1", ("A[]",), "A[]", "A[]")),
    TableRow("s3", "(1+2/3^2s)/3 | C3 | C3 | (C3xC3)^s", _s_row(3)),
    TableRow("s5", "(1+4/5^2s)/5 | C5 | C5 | (C5xC5)^s", _s_row(5)),
    TableRow("5/21", "5/21 | C7 | 1 | C7:C3", _fixed("5/21", ("A[7]",), "A[]", "N:SDC(7,3)")),
    TableRow("55/343", "55/343 | C7 | C7 | C7xC7", _fixed("55/343", ("A[7]",), "A[7]", "A[7,7]")),
    TableRow("17/81a", "17/81 | C9 or C3xC3 | C3 | (C3xC3):C3",
             _fixed("17/81", ("A[9]", "A[3,3]"), "A[3]", "N:ES(3,p)")),
    TableRow("17/81b", "17/81 | C3xC3 | C3xC3 | C3^3",
             _fixed("17/81", ("A[3,3]",), "A[3,3]", "A[3,3,3]")),
    TableRow("121/729", "121/729 | C3xC3 | C3xC3 | C3^4",
             _fixed("121/729", ("A[3,3]",), "A[3,3]", "A[3,3,3,3]")),
    TableRow("7/39", "7/39 | C13 | 1 | C13:C3", _fixed("7/39", ("A[13]",), "A[]", "N:SDC(13,3)")),
    TableRow("3/19", "3/19 | C19 | 1 | C19:C3", _fixed("3/19", ("A[19]",), "A[]", "N:SDC(19,3)")),
    TableRow("29/189", "29/189 | C21 | C3 | C3x(C7:C3)",
             _fixed("29/189", ("A[21]",), "A[3]", "P[A[3],N:SDC(7,3)]")),
    TableRow("11/75", "11/75 | C5xC5 | 1 | (C5xC5):C3",
             _fixed("11/75", ("A[5,5]",), "A[]", "N:SDC(5^2,3)")),
)


def match_table_row(sig: Signature) -> TableRow | None:
    return next((row for row in TABLE_ROWS if row.match(sig)), None)


# ---------------------------------------------------------------------------
# families


FAMILIES = ("abelian", "cpq", "extraspecial", "dihedral", "dicyclic", "products", "corpus")
_BASE_FAMILIES = FAMILIES[:5]


@dataclass(frozen=True)
class Recipe:
    """A lazily built catalog group; ``key`` fixes the enumeration order."""
    name: str
    order: int
    key: tuple
    build: Callable[[], FiniteGroup]
    abelian: bool = False

    def group(self) -> FiniteGroup:
        return self.build().renamed(self.name)


def abelian_invariant_lists(n: int) -> list[tuple[int, ...]]:
    """Invariant factors of every abelian group of order n (C4 before C2 x C2)."""
    per_prime = []
    for p, e in sorted(factorint(n).items()):
        parts = []
        for part in partitions(e):
            exps = sorted((k for k, c in part.items() for _ in range(c)), reverse=True)
            parts.append(tuple(exps))
        parts.sort(reverse=True)
        per_prime.append([(p, exps) for exps in parts])
    out = []
    for combo in itertools.product(*per_prime):
        width = max((len(exps) for _, exps in combo), default=0)
        factors = [1] * width
        for p, exps in combo:
            for i, k in enumerate(exps):
                factors[i] *= p ** k
        out.append(tuple(sorted(factors)))
    return out


def _abelian_recipes(bound: int) -> Iterator[Recipe]:
    for n in range(2, bound + 1):
        for rank, invs in enumerate(abelian_invariant_lists(n)):
            name = "A[" + ",".join(map(str, invs)) + "]"
            yield Recipe(name, n, (n, 0, rank), lambda invs=invs: abelian(invs), abelian=True)


def _cpq_recipes(bound: int) -> Iterator[Recipe]:
    for p in primerange(3, bound // 2 + 1):
        for q in divisors(p - 1):
            if q > 1 and p * q <= bound:
                yield Recipe(f"SDC({p},{q})", p * q, (p * q, 1, p, q),
                             lambda p=p, q=q: cp_semidirect(p, q))


def _extraspecial_recipes(bound: int) -> Iterator[Recipe]:
    for p in primerange(2, bound + 1):
        if p ** 3 > bound:
            break
        kinds = ("p2",) if p == 2 else ("p", "p2")
        for i, kind in enumerate(kinds):
            yield Recipe(f"ES({p},{kind})", p ** 3, (p ** 3, 2, p, i),
                         lambda p=p, kind=kind: extraspecial(p, kind))


def _dihedral_recipes(bound: int) -> Iterator[Recipe]:
    for n in range(3, bound // 2 + 1):
        yield Recipe(f"D({n})", 2 * n, (2 * n, 3, n), lambda n=n: dihedral(n))


def _dicyclic_recipes(bound: int) -> Iterator[Recipe]:
    for n in range(2, bound // 4 + 1):
        yield Recipe(f"Dic({n})", 4 * n, (4 * n, 4, n), lambda n=n: dicyclic(n))


_BUILDERS = {
    "abelian": _abelian_recipes,
    "cpq": _cpq_recipes,
    "extraspecial": _extraspecial_recipes,
    "dihedral": _dihedral_recipes,
    "dicyclic": _dicyclic_recipes,
}


def _product_recipes(bound: int) -> Iterator[Recipe]:
    base = sorted((r for fam in _BASE_FAMILIES for r in _BUILDERS[fam](bound // 2)),
                  key=lambda r: r.key)
    for i, a in enumerate(base):
        for b in base[i:]:
            if a.order * b.order > bound or (a.abelian and b.abelian):
                continue
            yield Recipe(f"{a.name}x{b.name}", a.order * b.order, (a.order * b.order, 5) + a.key + b.key,
                         lambda a=a, b=b: direct_product(a.build(), b.build()))


def family_recipes(family: str, bound: int) -> list[Recipe]:
    if bound > DEFAULT_CAP:
        raise BadParameter(f"bound {bound} exceeds the order cap {DEFAULT_CAP}")
    if family in _BUILDERS:
        recipes = list(_BUILDERS[family](bound))
    elif family == "products":
        recipes = list(_product_recipes(bound))
    elif family == "corpus":
        recipes = [r for fam in _BASE_FAMILIES for r in _BUILDERS[fam](bound)]
        recipes += list(_product_recipes(bound))
    else:
        raise BadParameter(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    return sorted(recipes, key=lambda r: r.key)


def enumerate_family(family: str, bound: int) -> Iterator[FiniteGroup]:
    """Groups of the family with order <= bound, by order then recipe."""
    for r in family_recipes(family, bound):
        yield r.group()


# ---------------------------------------------------------------------------
# auxiliary groups that make narrow hypotheses non-vacuous


def class2_17_81() -> FiniteGroup:
    """Order 243, G' = Z = C3 x C3, G/Z = C3^3: the second 17/81 sub-row."""
    # generators e1, e2, e3 with [e1, e3] and [e2, e3] spanning G'
    b1 = [[0, 0, 1], [0, 0, 0], [0, 0, 0]]
    b2 = [[0, 0, 0], [0, 0, 1], [0, 0, 0]]
    return bilinear_extension(3, [b1, b2])


def d16_q8_central() -> FiniteGroup:
    """D16 o Q8 (order 64): |G'| = 4, |G' n Z| = 2, C_G(G') non-abelian."""
    return central_product(dihedral(8), dicyclic(2), 4, 2)


def es3_es5() -> FiniteGroup:
    """extraspecial(3) x extraspecial(5): odd order with G' cyclic of order 15."""
    return direct_product(extraspecial(3), extraspecial(5))


AUXILIARY: dict[str, Callable[[], FiniteGroup]] = {
    "class2-17/81": class2_17_81,
    "D(8)oDic(2)": d16_q8_central,
    "ES(3,p)xES(5,p)": es3_es5,
}


@lru_cache(maxsize=None)
def auxiliary(name: str) -> FiniteGroup:
    return AUXILIARY[name]().renamed(name)


# ---------------------------------------------------------------------------
# files


def ingest(path: str | Path, *, strict: bool = False) -> FiniteGroup:
    g = read_group(path, strict=strict)
    return g if g.name else g.renamed(Path(path).name)


def export(g: FiniteGroup, path: str | Path) -> None:
    write_group(g, path)


def ingest_dir(path: str | Path, *, strict: bool = False) -> list[FiniteGroup]:
    files = sorted(p for p in Path(path).iterdir() if p.is_file() and p.suffix in (".grp", ".txt"))
    return [ingest(f, strict=strict) for f in files]
