"""Concrete finite groups as dense multiplication tables.

Elements are the indices ``0..n-1`` with the identity pinned at index 0.
Every other module works only with this representation.
"""

from __future__ import annotations

import math
import re
import threading
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from .errors import (
    BadParameter,
    CapExceeded,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotAutomorphism,
    NotNormal,
    RelationViolated,
)

DEFAULT_CAP = 5000
FULL_CHECK_LIMIT = 512

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


class FiniteGroup:
    """Immutable finite group given by its Cayley table.

    ``check`` selects associativity validation: ``"auto"`` runs the full
    O(n^3) check up to order 512 and samples ``10 n^2`` random triples above
    that, ``"strict"`` runs an exact generator-based (Light's) test at any
    order, ``"skip"`` trusts the caller.  Identity and inverses are always
    verified.
    """

    def __init__(
        self,
        table: np.ndarray,
        *,
        labels: Sequence[str] | None = None,
        name: str | None = None,
        check: str = "auto",
    ):
        table = np.array(table, dtype=np.int32, copy=True)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise BadParameter("Cayley table must be a non-empty square matrix")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise BadParameter("Cayley table entries out of range")
        ar = np.arange(n)
        if not (np.array_equal(table[0], ar) and np.array_equal(table[:, 0], ar)):
            raise NoIdentity("index 0 is not a two-sided identity")
        inverse = _inverses(table)
        table.flags.writeable = False
        inverse.flags.writeable = False
        self.table = table
        self.inverse = inverse
        self.order = n
        self.labels = tuple(labels) if labels is not None else None
        if self.labels is not None and len(self.labels) != n:
            raise BadParameter("need exactly one label per element")
        self.name = name
        self._memo: dict = {}
        self._lock = threading.Lock()
        if check != "skip":
            check_associative(table, inverse, strict=(check == "strict"))

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup(order={self.order}, name={self.name!r})"

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def cached(self, key, compute: Callable):
        """Memoize ``compute()`` on this group under ``key``."""
        try:
            return self._memo[key]
        except KeyError:
            pass
        value = compute()
        with self._lock:
            return self._memo.setdefault(key, value)

    @property
    def is_abelian(self) -> bool:
        return self.cached("abelian", lambda: bool(np.array_equal(self.table, self.table.T)))

    def same_table(self, other: "FiniteGroup") -> bool:
        return self.order == other.order and np.array_equal(self.table, other.table)

    def renamed(self, name: str) -> "FiniteGroup":
        g = FiniteGroup(self.table, labels=self.labels, name=name, check="skip")
        g._memo = self._memo
        return g


def _inverses(table: np.ndarray) -> np.ndarray:
    n = table.shape[0]
    is_id = table == 0
    inverse = np.argmax(is_id, axis=1)
    ar = np.arange(n)
    bad = ~(is_id[ar, inverse] & (table[inverse, ar] == 0))
    if bad.any():
        raise NoInverse(int(np.flatnonzero(bad)[0]))
    return inverse.astype(np.int32)


def check_associative(table: np.ndarray, inverse: np.ndarray, *, strict: bool = False) -> None:
    n = table.shape[0]
    _check_latin(table, inverse)
    if strict:
        _light_test(table)
    elif n <= FULL_CHECK_LIMIT:
        for a in range(n):
            left = table[table[a]]          # (a*b)*c
            right = table[a][table]         # a*(b*c)
            diff = left != right
            if diff.any():
                b, c = np.argwhere(diff)[0]
                raise NotAssociative((a, int(b), int(c)))
    else:
        rng = np.random.default_rng(0)
        remaining = 10 * n * n
        while remaining > 0:
            k = min(remaining, 1 << 20)
            a, b, c = rng.integers(0, n, size=(3, k))
            diff = table[table[a, b], c] != table[a, table[b, c]]
            if diff.any():
                i = int(np.flatnonzero(diff)[0])
                raise NotAssociative((int(a[i]), int(b[i]), int(c[i])))
            remaining -= k


def _check_latin(table: np.ndarray, inverse: np.ndarray) -> None:
    # a repeated entry in a row forces a failure of associativity at (a^-1, a, x)
    n = table.shape[0]
    srt = np.sort(table, axis=1)
    bad_rows = np.flatnonzero((srt != np.arange(n)).any(axis=1))
    if bad_rows.size == 0:
        srt = np.sort(table, axis=0)
        bad_cols = np.flatnonzero((srt != np.arange(n)[:, None]).any(axis=0))
        if bad_cols.size == 0:
            return
        # repeated entry in a column: mirror argument with (x, a, a^-1)
        a = int(bad_cols[0])
        col = table[:, a]
        vals, first = np.unique(col, return_index=True)
        dup = next(i for i in range(n) if i not in set(first.tolist()))
        other = int(first[np.searchsorted(vals, col[dup])])
        ia = int(inverse[a])
        for x in (dup, other):
            if table[table[x, a], ia] != x:
                raise NotAssociative((x, a, ia))
        raise AssertionError("unreachable")
    a = int(bad_rows[0])
    row = table[a]
    vals, first = np.unique(row, return_index=True)
    seen = set(first.tolist())
    dup = next(i for i in range(n) if i not in seen)
    other = int(first[np.searchsorted(vals, row[dup])])
    ia = int(inverse[a])
    for x in (dup, other):
        if table[table[ia, a], x] != table[ia, table[a, x]]:
            raise NotAssociative((ia, a, x))
    raise AssertionError("unreachable")


def _light_test(table: np.ndarray) -> None:
    """Exact associativity test: (xg)y = x(gy) for g in a generating set."""
    n = table.shape[0]
    reached = np.zeros(n, dtype=bool)
    reached[0] = True
    gens: list[int] = []
    while not reached.all():
        gens.append(int(np.argmin(reached)))
        frontier = np.flatnonzero(reached)
        while frontier.size:
            new = np.unique(table[np.ix_(frontier, gens)])
            new = new[~reached[new]]
            reached[new] = True
            frontier = new
    for g in gens:
        left = table[table[:, g]]           # (x*g)*y
        right = table[:, table[g]]          # x*(g*y)
        diff = left != right
        if diff.any():
            x, y = np.argwhere(diff)[0]
            raise NotAssociative((int(x), g, int(y)))


# ---------------------------------------------------------------------------
# constructors


def from_cayley_table(table, *, labels: Sequence[str] | None = None, strict: bool = False,
                      name: str | None = None) -> FiniteGroup:
    """Validate an arbitrary table, relocating the identity to index 0."""
    t = np.asarray(table)
    if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
        raise BadParameter("Cayley table must be a non-empty square matrix")
    n = t.shape[0]
    if not np.issubdtype(t.dtype, np.integer) or t.min() < 0 or t.max() >= n:
        raise BadParameter("Cayley table entries must be indices in 0..n-1")
    ar = np.arange(n)
    ids = np.flatnonzero((t == ar).all(axis=1) & (t.T == ar).all(axis=1))
    if ids.size == 0:
        raise NoIdentity()
    e = int(ids[0])
    if e != 0:
        perm = ar.copy()
        perm[0], perm[e] = e, 0          # new index -> old index (a transposition)
        t = perm[t[np.ix_(perm, perm)]]  # perm is its own inverse
        if labels is not None:
            labels = [labels[int(i)] for i in perm]
    return FiniteGroup(t, labels=labels, name=name, check="strict" if strict else "auto")


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(i) for i in self.images)
        if sorted(imgs) != list(range(len(imgs))):
            raise BadParameter(f"not a bijection on 0..{len(imgs) - 1}: {imgs}")
        object.__setattr__(self, "images", imgs)

    @property
    def degree(self) -> int:
        return len(self.images)

    @classmethod
    def identity(cls, degree: int) -> "Permutation":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, degree: int, text: str) -> "Permutation":
        images = list(range(degree))
        stripped = _CYCLE_RE.sub("", text).strip()
        if stripped:
            raise BadParameter(f"bad cycle notation {text!r}")
        for body in _CYCLE_RE.findall(text):
            pts = [int(tok) for tok in body.replace(",", " ").split()]
            if len(set(pts)) != len(pts) or any(not 0 <= p < degree for p in pts):
                raise BadParameter(f"bad cycle ({body})")
            for a, b in zip(pts, pts[1:] + pts[:1]):
                images[a] = b
        return cls(tuple(images))

    def cycles(self) -> str:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start] or self.images[start] == start:
                continue
            cyc = []
            x = start
            while not seen[x]:
                seen[x] = True
                cyc.append(x)
                x = self.images[x]
            out.append("(" + " ".join(map(str, cyc)) + ")")
        return "".join(out) or "()"

    def __str__(self) -> str:
        return self.cycles()


def from_permutations(gens: Sequence[Permutation], *, cap: int = DEFAULT_CAP,
                      name: str | None = None) -> FiniteGroup:
    """Breadth-first closure of a list of permutations.

    Elements are numbered in discovery order; the product of elements ``i``
    and ``j`` is the composition "apply j, then i".
    """
    if not gens:
        return FiniteGroup(np.zeros((1, 1), dtype=np.int32), labels=["()"], name=name, check="skip")
    degrees = {g.degree for g in gens}
    if len(degrees) != 1:
        raise BadParameter("generators must share one degree")
    gen_arrays = [np.array(g.images, dtype=np.int64) for g in gens]
    ident = np.arange(gens[0].degree)
    elems = [ident]
    index = {ident.tobytes(): 0}
    parent = [0]
    via = [-1]
    right: list[list[int]] = [[] for _ in gens]
    queue = deque([0])
    while queue:
        i = queue.popleft()
        for k, g in enumerate(gen_arrays):
            prod = elems[i][g]
            key = prod.tobytes()
            j = index.get(key)
            if j is None:
                j = len(elems)
                if j >= cap:
                    raise CapExceeded(j + 1, cap)
                index[key] = j
                elems.append(prod)
                parent.append(i)
                via.append(k)
                queue.append(j)
            right[k].append(j)
    # right[k][i] is the index of elems[i] o gens[k]; columns follow the BFS tree
    n = len(elems)
    rmaps = [np.array(r, dtype=np.int32) for r in right]
    table = np.empty((n, n), dtype=np.int32)
    table[:, 0] = np.arange(n)
    for j in range(1, n):
        table[:, j] = rmaps[via[j]][table[:, parent[j]]]
    labels = [Permutation(tuple(e.tolist())).cycles() for e in elems]
    return FiniteGroup(table, labels=labels, name=name, check="skip")


def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise BadParameter("cyclic order must be >= 1")
    ar = np.arange(n)
    return FiniteGroup((ar[:, None] + ar[None, :]) % n, name=f"C{n}", check="skip")


def abelian(invariants: Iterable[int]) -> FiniteGroup:
    invs = [int(d) for d in invariants]
    if any(d < 1 for d in invs):
        raise BadParameter("abelian factors must be >= 1")
    g = cyclic(1)
    for d in invs:
        g = direct_product(g, cyclic(d))
    return g.renamed("A[" + ",".join(map(str, invs)) + "]")


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; index ``j*n + i`` stands for r^i s^j."""
    if n < 1:
        raise BadParameter("dihedral parameter must be >= 1")
    ra, sa = np.tile(np.arange(n), 2), np.repeat([0, 1], n)
    rot = (ra[:, None] + np.where(sa[:, None] == 1, -ra[None, :], ra[None, :])) % n
    ref = sa[:, None] ^ sa[None, :]
    return FiniteGroup(ref * n + rot, name=f"D({n})", check="skip")


def dicyclic(n: int) -> FiniteGroup:
    """Dicyclic group of order 4n: <a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>."""
    if n < 1:
        raise BadParameter("dicyclic parameter must be >= 1")
    m = 2 * n
    a = np.tile(np.arange(m), 2)
    j = np.repeat([0, 1], m)
    sign = np.where(j[:, None] == 1, -1, 1)
    rot = a[:, None] + sign * a[None, :] + np.where((j[:, None] == 1) & (j[None, :] == 1), n, 0)
    ref = j[:, None] ^ j[None, :]
    return FiniteGroup(ref * m + rot % m, name=f"Dic({n})", check="skip")


def extraspecial(p: int, kind: str = "p") -> FiniteGroup:
    """Extraspecial group of order p^3.

    ``kind="p"``: Heisenberg group of exponent p (odd p only), triples
    (a, b, c) with (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
    ``kind="p2"``: C_{p^2} x| C_p with y x y^-1 = x^(1+p).
    """
    if not _is_prime(p):
        raise BadParameter(f"{p} is not prime")
    if kind == "p":
        if p == 2:
            raise BadParameter("exponent-p extraspecial group needs an odd prime")
        coords = np.array(np.unravel_index(np.arange(p ** 3), (p, p, p)))
        a1, b1, c1 = coords[0][:, None], coords[1][:, None], coords[2][:, None]
        a2, b2, c2 = coords[0][None, :], coords[1][None, :], coords[2][None, :]
        t = (((a1 + a2) % p) * p + (b1 + b2) % p) * p + (c1 + c2 + a1 * b2) % p
    elif kind == "p2":
        q = p * p
        i = np.tile(np.arange(q), p)
        j = np.repeat(np.arange(p), q)
        mult = np.array([pow(1 + p, int(k), q) for k in range(p)])
        t = ((j[:, None] + j[None, :]) % p) * q + (i[:, None] + mult[j][:, None] * i[None, :]) % q
    else:
        raise BadParameter(f"unknown extraspecial kind {kind!r}")
    return FiniteGroup(t, name=f"ES({p},{kind})", check="skip")


def standard(kind: str, *params) -> FiniteGroup:
    builders = {
        "cyclic": cyclic,
        "abelian": abelian,
        "dihedral": dihedral,
        "dicyclic": dicyclic,
        "extraspecial": extraspecial,
    }
    try:
        build = builders[kind]
    except KeyError:
        raise BadParameter(f"unknown standard group kind {kind!r}") from None
    try:
        return build(*params)
    except TypeError as exc:
        raise BadParameter(str(exc)) from None


def direct_product(g: FiniteGroup, h: FiniteGroup, *, cap: int = DEFAULT_CAP) -> FiniteGroup:
    """G x H with (g, h) stored at index g*|H| + h."""
    n = g.order * h.order
    if n > cap:
        raise CapExceeded(n, cap)
    m = h.order
    t = (g.table[:, None, :, None] * m + h.table[None, :, None, :]).reshape(n, n)
    name = f"{g.name}x{h.name}" if g.name and h.name else None
    return FiniteGroup(t, name=name, check="skip")


@dataclass(frozen=True)
class AutAction:
    """Images of the generators of H, as automorphisms of N.

    ``generators[k]`` is an element index of H and ``images[k]`` the
    permutation of N's element indices it acts by.
    """

    generators: tuple[int, ...]
    images: tuple[Permutation, ...]

    def __init__(self, generators: Sequence[int], images: Sequence[Permutation | Sequence[int]]):
        object.__setattr__(self, "generators", tuple(int(g) for g in generators))
        object.__setattr__(self, "images", tuple(
            im if isinstance(im, Permutation) else Permutation(tuple(im)) for im in images))
        if len(self.generators) != len(self.images):
            raise BadParameter("one image per generator required")

    def full_table(self, n_grp: FiniteGroup, h_grp: FiniteGroup) -> np.ndarray:
        """Extend to every h in H; returns an |H| x |N| array of images.

        Each generator image is checked to be an automorphism of N and the
        extension is checked along every edge of H's Cayley graph, which
        verifies all relations of H.
        """
        nt = n_grp.table
        imgs = []
        for g, perm in zip(self.generators, self.images):
            if perm.degree != n_grp.order:
                raise NotAutomorphism(g)
            a = np.array(perm.images)
            if a[0] != 0 or not np.array_equal(a[nt], nt[np.ix_(a, a)]):
                raise NotAutomorphism(g)
            imgs.append(a)
        act = np.full((h_grp.order, n_grp.order), -1, dtype=np.int64)
        act[0] = np.arange(n_grp.order)
        queue = deque([0])
        ht = h_grp.table
        while queue:
            x = queue.popleft()
            for g, a in zip(self.generators, imgs):
                y = int(ht[x, g])
                comp = act[x][a]      # action(x g) = action(x) o action(g)
                if act[y, 0] < 0:
                    act[y] = comp
                    queue.append(y)
                elif not np.array_equal(act[y], comp):
                    raise RelationViolated(y)
        if (act[:, 0] < 0).any():
            raise BadParameter("action generators do not generate H")
        return act


def semidirect_product(n_grp: FiniteGroup, h_grp: FiniteGroup, action: AutAction, *,
                       cap: int = DEFAULT_CAP) -> FiniteGroup:
    """N x| H with (n1,h1)(n2,h2) = (n1 . h1(n2), h1 h2); index n*|H| + h."""
    size = n_grp.order * h_grp.order
    if size > cap:
        raise CapExceeded(size, cap)
    act = action.full_table(n_grp, h_grp)
    m = h_grp.order
    x1 = np.arange(n_grp.order)[:, None, None, None]
    twisted = act[None, :, :, None]
    first = n_grp.table[x1, twisted]
    t = (first * m + h_grp.table[None, :, None, :]).reshape(size, size)
    return FiniteGroup(t, check="skip")


def power_map(g: FiniteGroup, k: int) -> Permutation:
    """x -> x^k as a permutation of element indices."""
    return Permutation(tuple(int(v) for v in powers(g, k)))


def powers(g: FiniteGroup, k: int) -> np.ndarray:
    """Array whose entry x is x^k (k >= 0)."""
    result = np.zeros(g.order, dtype=np.int64)
    base = np.arange(g.order)
    t = g.table
    while k:
        if k & 1:
            result = t[result, base]
        base = t[base, base]
        k >>= 1
    return result


def matrix_automorphism(p: int, matrix) -> Permutation:
    """Linear map on abelian([p, p]) (index a*p + b for the vector (a, b))."""
    m = np.asarray(matrix, dtype=np.int64) % p
    a, b = np.divmod(np.arange(p * p), p)
    na = (m[0, 0] * a + m[0, 1] * b) % p
    nb = (m[1, 0] * a + m[1, 1] * b) % p
    return Permutation(tuple((na * p + nb).tolist()))


def quotient(g: FiniteGroup, members) -> tuple[FiniteGroup, np.ndarray]:
    """G/N on cosets ordered by their minimal element.

    ``members`` is a Subgroup or a boolean mask / index array of a normal
    subgroup.  Returns the quotient group and the projection index -> coset.
    """
    mask = _as_mask(g, members)
    idx = np.flatnonzero(mask)
    gens = _small_generating_set(g)
    t = g.table
    inv = g.inverse
    for x in gens:
        if not mask[t[t[x, idx], inv[x]]].all():
            raise NotNormal(f"subgroup is not normalized by element {x}")
    n = g.order
    coset = np.full(n, -1, dtype=np.int64)
    reps = []
    for x in range(n):
        if coset[x] < 0:
            coset[t[x, idx]] = len(reps)
            reps.append(x)
    reps = np.array(reps)
    qt = coset[t[np.ix_(reps, reps)]]
    return FiniteGroup(qt, check="skip"), coset


def _as_mask(g: FiniteGroup, members) -> np.ndarray:
    mask = getattr(members, "mask", None)
    if mask is not None:
        return mask
    arr = np.asarray(members)
    if arr.dtype == bool:
        return arr
    mask = np.zeros(g.order, dtype=bool)
    mask[arr.astype(np.int64)] = True
    return mask


def _extend_mask(table: np.ndarray, mask: np.ndarray, new: int) -> None:
    """Grow the closed set ``mask`` to the subgroup it generates with ``new``, in place.

    Each round multiplies the newest elements by everything found so far on
    both sides, so the number of rounds is logarithmic in the result.
    """
    if mask[new]:
        return
    mask[new] = True
    frontier = np.array([new])
    while frontier.size:
        members = np.flatnonzero(mask)
        cand = np.concatenate((table[frontier[:, None], members].ravel(),
                               table[members[:, None], frontier].ravel()))
        cand = cand[~mask[cand]]
        if not cand.size:
            break
        frontier = np.unique(cand)
        mask[frontier] = True


def _small_generating_set(g: FiniteGroup) -> list[int]:
    def compute():
        reached = np.zeros(g.order, dtype=bool)
        reached[0] = True
        order = element_orders(g)
        gens: list[int] = []
        for x in sorted(range(g.order), key=lambda x: (-order[x], x)):
            if reached.all():
                break
            if not reached[x]:
                gens.append(x)
                _extend_mask(g.table, reached, x)
        return gens
    return g.cached("gens", compute)


# ---------------------------------------------------------------------------
# element arithmetic


def element_orders(g: FiniteGroup) -> np.ndarray:
    def compute():
        n = g.order
        orders = np.zeros(n, dtype=np.int64)
        cur = np.arange(n)
        ar = np.arange(n)
        k = 1
        while (orders == 0).any():
            done = (cur == 0) & (orders == 0)
            orders[done] = k
            cur = g.table[cur, ar]
            k += 1
        orders.flags.writeable = False
        return orders
    return g.cached("orders", compute)


def element_order(g: FiniteGroup, i: int) -> int:
    return int(element_orders(g)[i])


def exponent(g: FiniteGroup) -> int:
    return math.lcm(*(int(o) for o in np.unique(element_orders(g))))


def commutator(g: FiniteGroup, i: int, j: int) -> int:
    """[i, j] = i j i^-1 j^-1."""
    t, inv = g.table, g.inverse
    return int(t[t[t[i, j], inv[i]], inv[j]])


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def cp_semidirect(p: int, q: int, k: int | None = None) -> FiniteGroup:
    """C_p x| C_q with the generator of C_q acting faithfully by x -> x^k.

    ``k`` defaults to r^((p-1)/q) for the least primitive root r mod p.
    """
    if not _is_prime(p) or q < 2 or (p - 1) % q:
        raise BadParameter(f"need a prime p and a divisor q > 1 of p-1, got ({p}, {q})")
    if k is None:
        from sympy import primitive_root
        k = pow(primitive_root(p), (p - 1) // q, p)
    if pow(k, q, p) != 1 or any(pow(k, d, p) == 1 for d in range(1, q)):
        raise BadParameter(f"{k} does not have multiplicative order {q} mod {p}")
    cp, cq = cyclic(p), cyclic(q)
    g = semidirect_product(cp, cq, AutAction([1], [power_map(cp, k)]))
    return g.renamed(f"SDC({p},{q})")


def cp2_semidirect(p: int, q: int, matrix=None) -> FiniteGroup:
    """(C_p x C_p) x| C_q with C_q acting irreducibly (q prime, q | p+1, q does not divide p-1).

    Without an explicit matrix the first element of order q in GL(2, p),
    in lexicographic order of entries, is used; all choices are conjugate.
    """
    if not (_is_prime(p) and _is_prime(q)) or (p + 1) % q or (p - 1) % q == 0:
        raise BadParameter(f"need primes with q | p+1 and q not dividing p-1, got ({p}, {q})")
    if matrix is None:
        matrix = next(m for m in _matrices(p) if _matrix_order(m, p) == q)
    m = np.asarray(matrix, dtype=np.int64) % p
    if _matrix_order(m, p) != q:
        raise BadParameter(f"matrix does not have order {q} mod {p}")
    g = semidirect_product(abelian([p, p]), cyclic(q), AutAction([1], [matrix_automorphism(p, m)]))
    return g.renamed(f"SDC({p}^2,{q})")


def _matrices(p: int):
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p:
                        yield np.array([[a, b], [c, d]], dtype=np.int64)


def _matrix_order(m: np.ndarray, p: int, limit: int = 10_000) -> int:
    ident = np.eye(2, dtype=np.int64)
    cur = m % p
    for k in range(1, limit):
        if np.array_equal(cur, ident):
            return k
        cur = (cur @ m) % p
    return 0
