"""G-families of biquandles and the family associated to a finite biquandle."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ._text import content_lines, format_rows, parse_int, read_rows
from .biquandle import (AxiomReport, FiniteBiquandle, FiniteGroup, _as_table, _check_range,
                        _Collector, _collisions, _Stop, _expect_end, _header, cyclic_group)
from .errors import MalformedTable, ParseError
from .parallel import parallel_tables, type_index


@dataclass(frozen=True)
class GFamily:
    """A group G and, for each g in G, a pair of operation tables on X.

    ``under[g][a][b]`` is ``a ▷̲^g b``; ``over`` likewise.
    """

    xsize: int
    group: FiniteGroup
    under: tuple
    over: tuple

    def __post_init__(self):
        m = self.group.m
        for name in ("under", "over"):
            blocks = getattr(self, name)
            if len(blocks) != m:
                raise MalformedTable(f"{name}: expected {m} tables, got {len(blocks)}")
            object.__setattr__(self, name, tuple(
                _as_table(t, self.xsize, f"{name}^{g}") for g, t in enumerate(blocks)))

    def member(self, g: int) -> FiniteBiquandle:
        """The pair of g-tables as a (not necessarily valid) biquandle."""
        return FiniteBiquandle(self.xsize, self.under[g], self.over[g])


def check_gfamily_axioms(F: GFamily, fail_fast: bool = False) -> AxiomReport:
    """Exhaustive check of the four G-family axioms.

    Labels and witnesses: ``i`` (g a); ``ii:under``/``ii:over`` (g x1 x2 a);
    ``ii:S`` (g h x1 y1 x2 y2); ``iii:1``..``iii:3`` (g h a b c);
    ``iv:under``/``iv:over`` (g h a b).  Group exponents are reduced with the
    group's own tables, so nonabelian groups are handled.
    """
    n, G = F.xsize, F.group
    for g in G.elements:
        _check_range(F.under[g], n, f"under^{g}")
        _check_range(F.over[g], n, f"over^{g}")
    U, O = F.under, F.over
    X = range(n)
    col = _Collector(fail_fast)
    try:
        for g in G.elements:
            for a in X:
                if U[g][a][a] != O[g][a][a]:
                    col.add("i", (g, a))
        for g in G.elements:
            for a in X:
                _collisions(((x, U[g][x][a]) for x in X),
                            lambda x1, x2: col.add("ii:under", (g, x1, x2, a)))
                _collisions(((x, O[g][x][a]) for x in X),
                            lambda x1, x2: col.add("ii:over", (g, x1, x2, a)))
        for g, h in itertools.product(G.elements, repeat=2):
            _collisions((((x, y), (O[g][y][x], U[h][x][y])) for x in X for y in X),
                        lambda p, q: col.add("ii:S", (g, h) + p + q))
        for g, h in itertools.product(G.elements, repeat=2):
            k = G.conj(g, h)
            Ug, Og, Uh, Oh, Uk, Ok = U[g], O[g], U[h], O[h], U[k], O[k]
            for a, b, c in itertools.product(X, repeat=3):
                cb, ac_u, bc_u = Og[c][b], Uh[a][c], Uh[b][c]
                if Uh[Ug[a][b]][cb] != Uk[ac_u][bc_u]:
                    col.add("iii:1", (g, h, a, b, c))
                if Uh[Og[a][b]][cb] != Ok[ac_u][bc_u]:
                    col.add("iii:2", (g, h, a, b, c))
                if Oh[Og[a][b]][cb] != Ok[Oh[a][c]][bc_u]:
                    col.add("iii:3", (g, h, a, b, c))
        for g, h in itertools.product(G.elements, repeat=2):
            gh = G.mul[g][h]
            for a, b in itertools.product(X, repeat=2):
                if U[gh][a][b] != U[h][U[g][a][b]][U[g][b][b]]:
                    col.add("iv:under", (g, h, a, b))
                if O[gh][a][b] != O[h][O[g][a][b]][O[g][b][b]]:
                    col.add("iv:over", (g, h, a, b))
    except _Stop:
        pass
    return col.report


def associated_gfamily(B: FiniteBiquandle) -> GFamily:
    """The Z_type family whose g-tables are the g-parallel operations of B."""
    k = type_index(B)
    under = tuple(parallel_tables(B, g, "under") for g in range(k))
    over = tuple(parallel_tables(B, g, "over") for g in range(k))
    return GFamily(B.n, cyclic_group(k), under, over)


def parse_gfamily(text: str) -> GFamily:
    lines = content_lines(text)
    lineno, (n, m) = _header(lines, "gfamily", 2)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("expected 'group'", lineno) from None
    if tokens != ["group"]:
        raise ParseError("expected 'group'", lineno)
    mul = read_rows(lines, m, m, lineno)
    blocks = {"under": {}, "over": {}}
    for lineno, tokens in lines:
        if len(tokens) != 2 or tokens[0] not in blocks:
            raise ParseError(f"expected 'under <g>' or 'over <g>', got {' '.join(tokens)!r}",
                             lineno)
        g = parse_int(tokens[1], lineno)
        if not 0 <= g < m:
            raise ParseError(f"group element {g} outside [0, {m})", lineno)
        if g in blocks[tokens[0]]:
            raise ParseError(f"duplicate block '{tokens[0]} {g}'", lineno)
        blocks[tokens[0]][g] = read_rows(lines, n, n, lineno)
    for name, found in blocks.items():
        if len(found) != m:
            missing = sorted(set(range(m)) - set(found))
            raise ParseError(f"group has order {m} but '{name}' blocks are missing for {missing}",
                             lineno)
    _expect_end(lines)
    return GFamily(n, FiniteGroup(m, mul),
                   tuple(blocks["under"][g] for g in range(m)),
                   tuple(blocks["over"][g] for g in range(m)))


def serialize_gfamily(F: GFamily) -> str:
    parts = [f"gfamily {F.xsize} {F.group.m}", "group", format_rows(F.group.mul)]
    for g in F.group.elements:
        parts += [f"under {g}", format_rows(F.under[g]), f"over {g}", format_rows(F.over[g])]
    return "\n".join(parts) + "\n"
