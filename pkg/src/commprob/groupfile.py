"""Plain-text group files.

Two forms are accepted::

    cayley <n>            perm <degree> <k>
    <n rows of n ints>    <k lines of cycles, e.g. (0 1 2)(3 4)>

Lines starting with ``#`` are comments; ``# key: value`` comments are kept
as metadata. Blank lines are ignored. Export always writes the cayley form.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .errors import GroupError, ParseError
from .group import FiniteGroup, Permutation, from_cayley_table, from_permutations

_META = re.compile(r"^#\s*([A-Za-z_][\w-]*)\s*:\s*(.*?)\s*$")


@dataclass
class GroupFile:
    kind: str
    size: int
    rows: list[list[int]] = field(default_factory=list)
    generators: list[Permutation] = field(default_factory=list)
    metadata: dict[str, str] = field(default_factory=dict)
    metadata_lines: dict[str, int] = field(default_factory=dict)


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise ParseError(lineno, f"non-integer token in {' '.join(tokens)!r}") from None


def parse_group_text(text: str) -> GroupFile:
    metadata: dict[str, str] = {}
    meta_lines: dict[str, int] = {}
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = _META.match(line)
            if m:
                metadata[m.group(1).lower()] = m.group(2)
                meta_lines[m.group(1).lower()] = lineno
            continue
        body.append((lineno, line))
    if not body:
        raise ParseError(1, "empty file: expected a 'cayley' or 'perm' header")

    lineno, header = body[0]
    head = header.split()
    if head[0] == "cayley":
        if len(head) != 2:
            raise ParseError(lineno, "header must be 'cayley <n>'")
        (n,) = _ints(head[1:], lineno)
        if n < 1:
            raise ParseError(lineno, "order must be positive")
        rows = []
        for ln, line in body[1:]:
            row = _ints(line.split(), ln)
            if len(row) != n:
                raise ParseError(ln, f"expected {n} entries, got {len(row)}")
            if len(rows) == n:
                raise ParseError(ln, f"more than {n} rows")
            rows.append(row)
        if len(rows) != n:
            last = body[-1][0]
            raise ParseError(last + 1, f"expected {n} rows, got {len(rows)}")
        gf = GroupFile("cayley", n, rows=rows, metadata=metadata)
    elif head[0] == "perm":
        if len(head) != 3:
            raise ParseError(lineno, "header must be 'perm <degree> <k>'")
        degree, k = _ints(head[1:], lineno)
        if degree < 1 or k < 0:
            raise ParseError(lineno, "degree must be positive and k non-negative")
        gens = []
        for ln, line in body[1:]:
            if len(gens) == k:
                raise ParseError(ln, f"more than {k} generator lines")
            try:
                gens.append(Permutation.from_cycles(degree, line))
            except (ValueError, GroupError) as exc:
                raise ParseError(ln, str(exc)) from None
        if len(gens) != k:
            raise ParseError(body[-1][0] + 1, f"expected {k} generator lines, got {len(gens)}")
        gf = GroupFile("perm", degree, generators=gens, metadata=metadata)
    else:
        raise ParseError(lineno, f"unknown header {head[0]!r}")
    gf.metadata_lines = meta_lines
    return gf


def build_group(gf: GroupFile, *, strict: bool = False) -> FiniteGroup:
    name = gf.metadata.get("name")
    if gf.kind == "cayley":
        g = from_cayley_table(np.array(gf.rows, dtype=np.int64), strict=strict, name=name)
    else:
        g = from_permutations(gf.generators or [Permutation.identity(gf.size)], name=name)
    claimed = gf.metadata.get("order")
    if claimed is not None and claimed.isdigit() and int(claimed) != g.order:
        raise ParseError(gf.metadata_lines["order"], f"metadata claims order {claimed}, group has order {g.order}")
    return g


def format_group(g: FiniteGroup, metadata: dict[str, str] | None = None) -> str:
    meta = dict(metadata or {})
    if g.name and "name" not in meta:
        meta["name"] = g.name
    lines = [f"# {k}: {v}" for k, v in meta.items()]
    lines.append(f"cayley {g.order}")
    lines.extend(" ".join(map(str, row)) for row in g.table.tolist())
    return "\n".join(lines) + "\n"


def read_group(path: str | Path, *, strict: bool = False) -> FiniteGroup:
    return build_group(parse_group_text(Path(path).read_text()), strict=strict)


def write_group(g: FiniteGroup, path: str | Path, metadata: dict[str, str] | None = None) -> None:
    Path(path).write_text(format_group(g, metadata))
