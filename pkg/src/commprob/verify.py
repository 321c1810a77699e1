"""Group analysis and the verification harness behind ``commprob verify``."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from math import gcd
from typing import Callable, Iterable, Sequence

import numpy as np
from sympy import factorint, isprime

from . import catalog
from .commdeg import (
    THRESHOLD,
    check_main,
    format_rational,
    main_hypotheses,
    pr_bound_prgp,
    pr_exact,
    pr_formula_centralizer,
    pr_formula_class2,
    pr_formula_main,
    pr_formula_rusin,
    pr_from_class_sizes,
    pr_indexp_recursion,
    rusin_parameters,
)
from .errors import GroupError, Unsupported
from .group import FiniteGroup, dicyclic, element_orders, quotient
from .iso import Abelian, abelian_invariants, are_isomorphic, recognize
from .structure import (
    Subgroup,
    aut_order,
    center,
    centralizer_set,
    commutator_subgroup,
    commutator_table,
    commuting_matrix,
    conjugacy_classes,
    derived_subgroup,
    is_normal,
    nilpotency_class,
    normal_product,
    normal_subgroups,
    prime_index_normal_subgroups,
    smallest_prime_divisor,
    star,
    subgroup_generated,
    sylow_decomposition,
    trivial,
    whole,
)

PASS, FAIL, SKIPPED, VACUOUS = "pass", "fail", "skipped", "vacuous"

HEAVY_LIMIT = 1000          # groups above this order only get the cheap checks
FULL_IDENTITY_LIMIT = 100   # commutator identities on all triples up to this order
IDENTITY_SAMPLES = 20_000
STAR_SAMPLE = 8             # normal subgroups used by the star-operator laws
REMARK_SCAN_BOUND = 512
MIN_FORMULA_INSTANCES = 3


# ---------------------------------------------------------------------------
# analysis


@dataclass(frozen=True)
class AnalysisReport:
    name: str
    order: int
    center_order: int
    derived_order: int
    derived_center_order: int
    pr: Fraction
    class_sizes: tuple[tuple[int, int], ...]
    nilpotency_class: int | None
    derived: str
    derived_center: str
    central_quotient: str
    smallest_prime: int | None
    derived_central: bool
    cg_abelian: bool

    @property
    def signature(self) -> catalog.Signature:
        return (self.pr, self.derived, self.derived_center, self.central_quotient)

    def fields(self) -> list[tuple[str, str]]:
        return [
            ("name", self.name),
            ("order", str(self.order)),
            ("center_order", str(self.center_order)),
            ("derived_order", str(self.derived_order)),
            ("derived_center_order", str(self.derived_center_order)),
            ("pr", format_rational(self.pr)),
            ("class_sizes", " ".join(f"{s}^{c}" for s, c in self.class_sizes)),
            ("nilpotency_class", "not nilpotent" if self.nilpotency_class is None
             else str(self.nilpotency_class)),
            ("derived", self.derived),
            ("derived_center", self.derived_center),
            ("central_quotient", self.central_quotient),
            ("smallest_prime", "-" if self.smallest_prime is None else str(self.smallest_prime)),
            ("derived_central", str(self.derived_central).lower()),
            ("cg_abelian", str(self.cg_abelian).lower()),
        ]

    def to_tsv(self) -> str:
        return "".join(f"{k}\t{v}\n" for k, v in self.fields())

    def to_json(self) -> str:
        d = asdict(self)
        d["pr"] = format_rational(self.pr)
        d["class_sizes"] = [list(x) for x in self.class_sizes]
        return json.dumps(d, indent=2) + "\n"


def analyze(g: FiniteGroup) -> AnalysisReport:
    z = center(g)
    d = commutator_subgroup(g)
    dz = d & z
    classes = conjugacy_classes(g)
    pr = pr_exact(g)
    assert pr == pr_from_class_sizes(g), "centralizer-sum cross-check failed"
    assert pr * g.order == len(classes)
    assert z.order % dz.order == 0 and d.order % dz.order == 0
    q, _ = quotient(g, z)
    cg = centralizer_set(g, d)
    return AnalysisReport(
        name=g.name or "",
        order=g.order,
        center_order=z.order,
        derived_order=d.order,
        derived_center_order=dz.order,
        pr=pr,
        class_sizes=tuple(sorted(Counter(classes.sizes).items())),
        nilpotency_class=nilpotency_class(g),
        derived=str(recognize(d.as_group())),
        derived_center=str(recognize(dz.as_group())),
        central_quotient=str(recognize(q)),
        smallest_prime=smallest_prime_divisor(g.order) if g.order > 1 else None,
        derived_central=d <= z,
        cg_abelian=cg.as_group().is_abelian,
    )


def _analysis(g: FiniteGroup) -> AnalysisReport:
    return g.cached("analysis", lambda: analyze(g))


def format_signature(sig: catalog.Signature) -> str:
    pr, d, dz, gz = sig
    return f"{format_rational(pr)} | {d} | {dz} | {gz}"


# ---------------------------------------------------------------------------
# reports


@dataclass(frozen=True)
class Check:
    check_id: str
    status: str
    group_id: str
    expected: str
    computed: str


COLUMNS = ("check_id", "status", "group_id", "expected", "computed")


@dataclass
class VerificationReport:
    checks: list[Check] = field(default_factory=list)
    allow_vacuous: bool = False

    def add(self, check_id: str, status: str, group_id: str = "-", expected: str = "",
            computed: str = "") -> Check:
        c = Check(check_id, status, group_id, expected, computed)
        self.checks.append(c)
        return c

    def extend(self, other: "VerificationReport") -> None:
        self.checks.extend(other.checks)

    def count(self, status: str) -> int:
        return sum(c.status == status for c in self.checks)

    @property
    def ok(self) -> bool:
        if self.count(FAIL):
            return False
        return self.allow_vacuous or not self.count(VACUOUS)

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_tsv(self) -> str:
        lines = ["\t".join(COLUMNS)]
        for c in self.checks:
            lines.append("\t".join(_clean(getattr(c, k)) for k in COLUMNS))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "checks": [asdict(c) for c in self.checks],
            "summary": {s: self.count(s) for s in (PASS, FAIL, SKIPPED, VACUOUS)},
            "exit_code": self.exit_code,
        }
        return json.dumps(payload, indent=2) + "\n"


def _clean(s: str) -> str:
    return str(s).replace("\t", " ").replace("\n", " ")


def _gid(g: FiniteGroup) -> str:
    return g.name or f"order-{g.order}"


# ---------------------------------------------------------------------------
# classification table


REMARK_TYPES = {
    21: "N:SDC(7,3)",
    27: "N:ES(3,p)",
    39: "N:SDC(13,3)",
    57: "N:SDC(19,3)",
    63: "P[A[3],N:SDC(7,3)]",
    75: "N:SDC(5^2,3)",
}


def _expected_signature(spec: catalog.WitnessSpec) -> catalog.Signature:
    e = spec.expected
    return (e.pr, e.derived, e.derived_center, e.central_quotient)


def verify_semidir_remark(groups: Iterable[FiniteGroup]) -> VerificationReport:
    """G/Z has the listed type for odd G with G' not central and |G/Z| in the list."""
    report = VerificationReport()
    for g in groups:
        if g.order % 2 == 0:
            continue
        a = _analysis(g)
        if a.derived_central or a.pr < THRESHOLD:
            continue
        quotient_order = g.order // a.center_order
        want = REMARK_TYPES.get(quotient_order)
        if want is None:
            continue
        status = PASS if a.central_quotient == want else FAIL
        report.add("semidirect-remark", status, _gid(g), f"|G/Z|={quotient_order}: {want}",
                   a.central_quotient)
    return report


def verify_char_table(groups: Iterable[FiniteGroup] = ()) -> VerificationReport:
    """Witness direction over the internal witnesses, completeness over ``groups``."""
    groups = list(groups)
    report = VerificationReport()
    covered: dict[str, list[str]] = {row.row_id: [] for row in catalog.TABLE_ROWS}

    for row_id, spec in catalog.WITNESSES.items():
        g = catalog.witness(row_id)
        a = _analysis(g)
        want = _expected_signature(spec)
        report.add("witness", PASS if a.signature == want else FAIL, _gid(g),
                   format_signature(want), format_signature(a.signature))
        if spec.is_remark:
            continue
        row = catalog.match_table_row(a.signature)
        got = row.row_id if row else "none"
        report.add("witness-row", PASS if got == spec.table_row else FAIL, _gid(g),
                   spec.table_row, got)
        if row is not None:
            covered[row.row_id].append(_gid(g))
        report.add("threshold", PASS if a.pr >= THRESHOLD else FAIL, _gid(g),
                   f">= {format_rational(THRESHOLD)}", format_rational(a.pr))

    rusin = pr_formula_rusin(19, 9)
    report.add("threshold-excluded", PASS if rusin < THRESHOLD else FAIL, "rusin(19,9)",
               f"< {format_rational(THRESHOLD)}", format_rational(rusin))
    main5 = pr_formula_main(5, None, True)
    report.add("threshold-excluded", PASS if main5 < THRESHOLD else FAIL, "main(5,abelian)",
               f"< {format_rational(THRESHOLD)}", format_rational(main5))

    c9_supplied = []
    for g in groups:
        gid = _gid(g)
        if g.order % 2 == 0:
            report.add("completeness", SKIPPED, gid, "odd order", "even order")
            continue
        a = _analysis(g)
        if a.pr < THRESHOLD:
            report.add("completeness", SKIPPED, gid, f"Pr >= {format_rational(THRESHOLD)}",
                       f"Pr {format_rational(a.pr)} below threshold")
            continue
        row = catalog.match_table_row(a.signature)
        if row is None:
            report.add("completeness", FAIL, gid, "some table row", format_signature(a.signature))
            continue
        report.add("completeness", PASS, gid, "some table row",
                   f"row {row.row_id}: {format_signature(a.signature)}")
        if gid not in covered[row.row_id]:
            covered[row.row_id].append(gid)
        if row.row_id == "17/81a" and a.derived == "A[9]":
            c9_supplied.append(gid)

    for row in catalog.TABLE_ROWS:
        who = covered[row.row_id]
        if who:
            report.add("row-coverage", PASS, ",".join(who[:3]), row.description,
                       f"{len(who)} group(s)")
        else:
            report.add("row-coverage", SKIPPED, "-", row.description, "no witness supplied")
    if c9_supplied:
        report.add("row-coverage-c9", PASS, ",".join(c9_supplied[:3]), "17/81 with G' = C9",
                   f"{len(c9_supplied)} group(s)")
    else:
        report.add("row-coverage-c9", SKIPPED, "-", "17/81 with G' = C9",
                   "row witnessed for C3xC3 variant only")

    witnesses = [catalog.witness(r) for r, s in catalog.WITNESSES.items() if not s.is_remark]
    report.extend(verify_semidir_remark(witnesses + [g for g in groups if g.order % 2]))
    return report


# ---------------------------------------------------------------------------
# property suites

Outcome = tuple[bool, str, str] | None


@dataclass(frozen=True)
class PropertyCheck:
    check_id: str
    run: Callable[[FiniteGroup], Outcome]
    heavy: bool = True
    min_instances: int = 1


def _sizes(g: FiniteGroup) -> np.ndarray:
    return conjugacy_classes(g).element_sizes()


def _p(g: FiniteGroup) -> int:
    return smallest_prime_divisor(g.order)


def _cg(g: FiniteGroup) -> Subgroup:
    return g.cached("cg", lambda: centralizer_set(g, commutator_subgroup(g)))


def _invariants(h: Subgroup) -> tuple[int, ...] | None:
    hg = h.as_group()
    return abelian_invariants(hg).invariants if hg.is_abelian else None


def check_class_equation(g):
    n = g.order
    cent = commuting_matrix(g).sum(axis=1)
    sizes = _sizes(g)
    c = np.sort(commutator_table(g), axis=0)
    distinct = (np.diff(c, axis=0) != 0).sum(axis=0) + 1
    bad = int(((n // cent != sizes) | (n % cent != 0) | (distinct != sizes)).sum())
    return bad == 0, "|G:C(x)| = |Cl(x)| = |[G,x]| for all x", f"{bad} mismatches over {n} elements"


def check_class_size_range(g):
    if g.order == 1:
        return None
    p, d = _p(g), commutator_subgroup(g).order
    sizes = _sizes(g)
    inside = (sizes >= p) & (sizes <= d)
    bad = int((inside != ~center(g).mask).sum())
    return bad == 0, f"{p} <= |Cl(x)| <= {d} iff x not central", f"{bad} mismatches"


def check_class_size_outside_cg(g):
    outside = ~_cg(g).mask
    if not outside.any():
        return None
    p = _p(g)
    low = int(_sizes(g)[outside].min())
    return low > p, f"|Cl(x)| > {p} off C_G(G')", f"min {low}"


def check_commutator_identities(g):
    n = g.order
    t, inv, c = (a.astype(np.intp) for a in (g.table, g.inverse, commutator_table(g)))
    bad = 0
    if n <= FULL_IDENTITY_LIMIT:
        # one x at a time, (y, z) ranging over G x G
        for x in range(n):
            tx, cx, ix = t[x], c[x], inv[x]
            first = c[tx] == t[t[tx[c], ix], cx[None, :]]
            # [x, yz] against [x, y] y [x, z] y^-1
            second = cx[t] == t[t[t[cx, np.arange(n)][:, None], cx[None, :]], inv[:, None]]
            bad += int((~first).sum() + (~second).sum())
        scope = f"all {n ** 3} triples"
    else:
        rng = np.random.default_rng(0)
        x, y, z = rng.integers(0, n, size=(3, IDENTITY_SAMPLES))
        first = c[t[x, y], z] == t[t[t[x, c[y, z]], inv[x]], c[x, z]]
        second = c[x, t[y, z]] == t[t[t[c[x, y], y], c[x, z]], inv[y]]
        bad = int((~first).sum() + (~second).sum())
        scope = f"{IDENTITY_SAMPLES} sampled triples"
    return bad == 0, "[xy,z] = x[y,z]x^-1[x,z] and [x,yz] = [x,y]y[x,z]y^-1", f"{bad} failures in {scope}"


def check_centralizer_inclusions(g):
    cg = _cg(g)
    z = center(g)
    zc = centralizer_set(g, cg) & cg
    ok = derived_subgroup(cg) <= z and z <= zc
    return ok, "C' <= Z(G) <= Z(C), C = C_G(G')", f"|C'|={derived_subgroup(cg).order} |Z|={z.order} |Z(C)|={zc.order}"


def check_aut_divisibility(g):
    d = commutator_subgroup(g)
    invs = _invariants(d)
    if d.order == 1 or invs is None:
        return None
    try:
        a = aut_order(invs)
    except Unsupported:
        return None
    index = g.order // _cg(g).order
    sizes = set(_sizes(g)[d.mask].tolist())
    ok = a % index == 0 and all(index % s == 0 for s in sizes)
    return ok, f"|G:C_G(G')| and class sizes in G' divide {a}", f"index {index}, sizes {sorted(sizes)}"


def check_prime_quotient_centralizer(g):
    cg = _cg(g)
    index = g.order // cg.order
    if not isprime(index):
        return None
    d = commutator_subgroup(g).order
    c = commutator_table(g)
    sizes = _sizes(g)
    outside = np.flatnonzero(~cg.mask)
    gen_ok = subgroup_generated(g, list(cg.gens) + [int(outside[0])]).is_whole
    same = all(np.array_equal(np.unique(c[:, x]), np.unique(c[cg.members, x])) for x in outside)
    divides = bool((d % sizes[outside] == 0).all())
    return (gen_ok and same and divides, "<x,C> = G, [G,x] = [C,x], |Cl(x)| divides |G'|",
            f"generates={gen_ok} same={same} divides={divides}")


def check_nilpotent_class3(g):
    if main_hypotheses(g):
        return None
    cls = nilpotency_class(g)
    d = commutator_subgroup(g)
    (p, _), = factorint(d.order).items()
    parts = sylow_decomposition(g) if cls is not None else []
    ok = cls == 3
    for q, part in parts:
        pg = part.as_group()
        if q == p:
            pd = commutator_subgroup(pg)
            ok &= pd.order == p * p and (pd & center(pg)).order == p
        else:
            ok &= pg.is_abelian
    return ok, "class 3, G = P x A", f"class {cls}, parts {[(q, s.order) for q, s in parts]}"


def _star_sample(g: FiniteGroup) -> list[Subgroup]:
    subs, _ = normal_subgroups(g, cap=64)
    if len(subs) <= STAR_SAMPLE:
        return subs
    picks = np.linspace(0, len(subs) - 1, STAR_SAMPLE).round().astype(int)
    return [subs[i] for i in sorted(set(picks.tolist()))]


def check_star_laws(g):
    z, d, w = center(g), commutator_subgroup(g), whole(g)
    memo: dict[bytes, Subgroup] = {}

    def st(h: Subgroup) -> Subgroup:
        if h.key not in memo:
            memo[h.key] = star(g, h)
        return memo[h.key]

    failures = []
    if st(trivial(g)) != z:
        failures.append("{1}* != Z")
    if st(d) != w:
        failures.append("(G')* != G")
    subs = _star_sample(g)
    for h in subs:
        hs = st(h)
        if st(d & h) != hs:
            failures.append("(G' n H)* != H*")
        if not (h <= hs and is_normal(g, hs)):
            failures.append("H <= H* normal")
        q, proj = quotient(g, h)
        if not np.array_equal(np.unique(proj[hs.members]), center(q).members):
            failures.append("Z(G/H) != H*/H")
        q2, _ = quotient(g, hs)
        if q2.order > 1 and int(element_orders(q2).max()) == q2.order:
            failures.append("G/H* cyclic")
        for k in subs:
            ks = st(k)
            if st(h & k) != (hs & ks):
                failures.append("(H1 n H2)* != H1* n H2*")
            if not normal_product(hs, ks) <= st(normal_product(h, k)):
                failures.append("H1*H2* not in (H1H2)*")
            if h <= k and not hs <= ks:
                failures.append("not monotone")
    uniq = sorted(set(failures))
    return not uniq, "star-operator laws", f"{len(subs)} normal subgroups; " + ("; ".join(uniq) or "ok")


def check_pr_bound(g):
    if g.order == 1:
        return None
    pr, bound = pr_exact(g), pr_bound_prgp(g)
    return pr <= bound, f"<= {format_rational(bound)}", format_rational(pr)


def check_pr_range(g):
    pr = pr_exact(g)
    ok = (pr == 1) == g.is_abelian and (g.is_abelian or pr <= Fraction(5, 8))
    return ok, "1 iff abelian, else <= 5/8", format_rational(pr)


def check_class2_formula(g):
    f = factorint(g.order)
    if len(f) != 1 or g.is_abelian or not commutator_subgroup(g) <= center(g):
        return None
    val = pr_formula_class2(g)
    return val == pr_exact(g), format_rational(pr_exact(g)), format_rational(val)


def check_rusin_formula(g):
    d, z = commutator_subgroup(g), center(g)
    if not isprime(d.order) or (d & z).order != 1:
        return None
    p, n = rusin_parameters(g)
    q, _ = quotient(g, z)
    shape = n > 1 and (p - 1) % n == 0 and not q.is_abelian
    val = pr_formula_rusin(p, n) if shape else None
    ok = shape and val == pr_exact(g)
    return ok, format_rational(pr_exact(g)), f"p={p} n={n} value={format_rational(val) if val else '-'}"


def check_indexp_recursion(g):
    if g.is_abelian:
        return None
    subs = prime_index_normal_subgroups(g)[:2]
    if not subs:
        return None
    vals = []
    ok = True
    for h in subs:
        vals.append(pr_indexp_recursion(g, h))
        if h.as_group().is_abelian:
            ok &= g.order // center(g).order == (g.order // h.order) * commutator_subgroup(g).order
    ok &= all(v == pr_exact(g) for v in vals)
    return ok, format_rational(pr_exact(g)), ",".join(format_rational(v) for v in vals)


def check_main_formula(g):
    if main_hypotheses(g):
        return None
    m = check_main(g)
    return (m.ok, f"{format_rational(m.pr)}, |G/Z| in {list(m.allowed_central_quotient_orders)}, indices p^2",
            f"{format_rational(m.formula)}, |G/Z|={m.central_quotient_order}, "
            f"indices {m.index_mod_derived_center},{m.index_mod_center}")


def check_centralizer_class2(g):
    dz = commutator_subgroup(g) & center(g)
    cg = _cg(g)
    cgg = cg.as_group()
    if not isprime(dz.order) or cgg.is_abelian:
        return None
    p = dz.order
    q, _ = quotient(cgg, center(cgg))
    invs = abelian_invariants(q).invariants if q.is_abelian else None
    ok = invs is not None and len(invs) % 2 == 0 and all(x == p for x in invs)
    s = len(invs) // 2 if ok else 0
    ok = ok and s >= 1 and pr_exact(cgg) == pr_formula_centralizer(p, s)
    return ok, f"C/Z(C) = (C{p}xC{p})^s and Pr(C) by formula", f"invariants {invs}, Pr(C) {format_rational(pr_exact(cgg))}"


def check_derived_noncentral(g):
    d, z = commutator_subgroup(g), center(g)
    if d <= z:
        return None
    invs = _invariants(d)
    if invs is None:
        return None
    f = factorint(d.order)
    if len(f) != 1:
        return None
    (p, e), = f.items()
    n = g.order
    if not ((invs == (p * p,) and gcd(p - 1, n) == 1)
            or (invs == (p, p) and gcd(p * p - 1, n) == 1)):
        return None
    index = n // _cg(g).order
    off = d.mask & ~z.mask
    sizes = set(_sizes(g)[off].tolist())
    ok = index == p and (d & z).order == p and sizes == {p}
    return ok, f"|G:C|=|G' n Z|=|Cl(x)|={p}", f"{index},{(d & z).order},{sorted(sizes)}"


def check_star_center(g):
    d, z = commutator_subgroup(g), center(g)
    if d <= z or g.order == 1:
        return None
    p = _p(g)
    cg = _cg(g)
    dz = d & z
    if g.order // cg.order != p or dz.order != p:
        return None
    zs = star(g, z)
    target = d.order // dz.order
    ok = zs < cg and target % (cg.order // zs.order) == 0
    if ok:
        q, _ = quotient(cg.as_group(), _relative(cg, zs))
        ok = q.is_abelian and target % int(element_orders(q).max()) == 0
    return ok, f"Z* < C_G(G'), |C:Z*| divides {target}", f"|Z*|={zs.order} |C|={cg.order}"


def _relative(parent: Subgroup, sub: Subgroup) -> np.ndarray:
    """Positions of ``sub``'s members inside ``parent.as_group()``."""
    return np.flatnonzero(sub.mask[parent.members])


def check_c15_central(g):
    if g.order % 2 == 0:
        return None
    d = commutator_subgroup(g)
    if _invariants(d) != (15,):
        return None
    return d <= center(g), "G' central", f"|G' n Z| = {(d & center(g)).order}"


def check_c21_classes(g):
    d, z = commutator_subgroup(g), center(g)
    if g.order % 2 == 0 or d <= z or _invariants(d) != (21,):
        return None
    cg = _cg(g)
    outside = ~cg.mask
    sizes = _sizes(g)
    found = set(sizes[outside].tolist())
    ok = g.order // cg.order == 3 and (d & z).order == 3 and found <= {7, 21}
    x_set = np.flatnonzero(outside & (sizes == 7))
    zc = centralizer_set(g, cg) & cg
    if x_set.size:
        x0 = int(x_set[0])
        t = g.table
        want = np.union1d(t[x0, zc.members], t[int(g.inverse[x0]), zc.members])
        ok &= x_set.size == 2 * zc.order and np.array_equal(np.sort(x_set), want)
        alt = f"alternative (ii): |X|={x_set.size}, |Z(C)|={zc.order}"
    else:
        alt = "alternative (i): all 21"
    return ok, "|G:C|=|G' n Z|=3, sizes 7/21 as described", f"sizes {sorted(found)}; {alt}"


def check_c25_classes(g):
    d, z = commutator_subgroup(g), center(g)
    if g.order % 6 != 3 or _invariants(d) != (5, 5) or (d & z).order != 1:
        return None
    sizes = set(_sizes(g)[d.mask & ~z.mask].tolist())
    index = g.order // _cg(g).order
    return sizes == {3} and index == 3, "|Cl(x)| = 3 on G' - Z, |G:C| = 3", f"sizes {sorted(sizes)}, index {index}"


PROPERTY_CHECKS: tuple[PropertyCheck, ...] = (
    PropertyCheck("class-equation", check_class_equation),
    PropertyCheck("class-size-range", check_class_size_range),
    PropertyCheck("class-size-off-centralizer", check_class_size_outside_cg),
    PropertyCheck("commutator-identities", check_commutator_identities),
    PropertyCheck("centralizer-inclusions", check_centralizer_inclusions),
    PropertyCheck("aut-divisibility", check_aut_divisibility),
    PropertyCheck("prime-quotient-centralizer", check_prime_quotient_centralizer),
    PropertyCheck("nilpotent-class-3", check_nilpotent_class3),
    PropertyCheck("star-laws", check_star_laws),
    PropertyCheck("pr-bound", check_pr_bound),
    PropertyCheck("pr-range", check_pr_range),
    PropertyCheck("class2-formula", check_class2_formula, min_instances=MIN_FORMULA_INSTANCES),
    PropertyCheck("rusin-formula", check_rusin_formula, min_instances=MIN_FORMULA_INSTANCES),
    PropertyCheck("indexp-recursion", check_indexp_recursion, min_instances=MIN_FORMULA_INSTANCES),
    PropertyCheck("main-formula", check_main_formula, min_instances=MIN_FORMULA_INSTANCES),
    PropertyCheck("centralizer-class2", check_centralizer_class2),
    PropertyCheck("derived-noncentral", check_derived_noncentral),
    PropertyCheck("star-center", check_star_center),
    PropertyCheck("c15-central", check_c15_central, heavy=False),
    PropertyCheck("c21-classes", check_c21_classes),
    PropertyCheck("c25-classes", check_c25_classes),
)


def _run(check: PropertyCheck, g: FiniteGroup) -> tuple[str, str, str] | None:
    try:
        out = check.run(g)
    except (AssertionError, GroupError) as exc:
        return FAIL, "", f"error: {type(exc).__name__}: {exc}"
    if out is None:
        return None
    ok, expected, computed = out
    return (PASS if ok else FAIL), expected, computed


def verify_properties(groups: Iterable[FiniteGroup], *, allow_vacuous: bool = False,
                      checks: Sequence[PropertyCheck] = PROPERTY_CHECKS) -> VerificationReport:
    report = VerificationReport(allow_vacuous=allow_vacuous)
    instances = Counter()
    for g in groups:
        gid = _gid(g)
        for chk in checks:
            if chk.heavy and g.order > HEAVY_LIMIT:
                continue
            res = _run(chk, g)
            if res is None:
                continue
            status, expected, computed = res
            instances[chk.check_id] += 1
            report.add(chk.check_id, status, gid, expected, computed)
    for chk in checks:
        n = instances[chk.check_id]
        failed = sum(c.status == FAIL for c in report.checks if c.check_id == chk.check_id)
        if n == 0:
            status = VACUOUS
        elif failed or n < chk.min_instances:
            status = FAIL
        else:
            status = PASS
        report.add(f"summary:{chk.check_id}", status, "-", f">= {chk.min_instances} instances, 0 failures",
                   f"{n} instances, {failed} failures")
    return report


# ---------------------------------------------------------------------------
# corrections


def verify_rusin_corrections(scan_bound: int = REMARK_SCAN_BOUND) -> VerificationReport:
    report = VerificationReport()

    g = catalog.witness("rem-5/14")
    a = _analysis(g)
    ok = (a.pr == Fraction(5, 14) and a.derived == "A[7]" and a.derived_center == "A[]"
          and a.central_quotient == "N:D(7)")
    report.add("remark-missed-5/14", PASS if ok else FAIL, _gid(g),
               "5/14 | A[7] | A[] | N:D(7)", format_signature(a.signature))

    g = catalog.witness("rem-7/16-d16")
    a = _analysis(g)
    d, z = commutator_subgroup(g), center(g)
    q, _ = quotient(g, d & z)
    t_index = q.order // center(q).order
    ok = (a.derived_order == 4 and a.derived_center_order == 2 and a.pr == Fraction(7, 16)
          and a.pr == pr_formula_main(2, None, True) and t_index == 4)
    report.add("remark-t-equals-1", PASS if ok else FAIL, _gid(g),
               "|G'|=4 |G' n Z|=2 Pr=7/16 index 4",
               f"|G'|={a.derived_order} |G' n Z|={a.derived_center_order} "
               f"Pr={format_rational(a.pr)} index {t_index}")

    g = catalog.witness("rem-25/64")
    a = _analysis(g)
    ok = (a.derived == "A[2,2]" and a.derived_central and a.pr == Fraction(25, 64)
          and a.central_quotient == "A[2,2,2,2]")
    report.add("remark-25/64", PASS if ok else FAIL, _gid(g),
               "G' = A[2,2] central, Pr 25/64, G/Z = A[2,2,2,2]",
               f"G' = {a.derived} central={str(a.derived_central).lower()}, "
               f"Pr {format_rational(a.pr)}, G/Z = {a.central_quotient}")

    t = dicyclic(3)
    scanned, hits = 0, []
    for recipe in catalog.family_recipes("corpus", scan_bound):
        h = recipe.group()
        scanned += 1
        zh = center(h)
        if h.order // zh.order != t.order:
            continue
        qh, _ = quotient(h, zh)
        if are_isomorphic(qh, t):
            hits.append(recipe.name)
    report.add("remark-T-not-central-quotient", PASS if not hits else FAIL,
               f"corpus<={scan_bound}", "G/Z never Dic(3)",
               f"bounded check: {scanned} groups of order <= {scan_bound}, "
               + (f"counterexamples {hits[:5]}" if hits else "no counterexample"))
    return report


# ---------------------------------------------------------------------------
# default group sets


def witness_groups(include_remarks: bool = True) -> list[FiniteGroup]:
    return [catalog.witness(r) for r, s in catalog.WITNESSES.items() if include_remarks or not s.is_remark]


def property_groups(max_order: int = 100) -> list[FiniteGroup]:
    aux = [catalog.auxiliary(name) for name in catalog.AUXILIARY]
    corpus = list(catalog.enumerate_family("corpus", max_order))
    return witness_groups() + aux + corpus


def table_groups(max_order: int = 100, extra: Iterable[FiniteGroup] = ()) -> list[FiniteGroup]:
    aux = [catalog.auxiliary("class2-17/81")]
    corpus = list(catalog.enumerate_family("corpus", max_order))
    return witness_groups() + aux + corpus + list(extra)
