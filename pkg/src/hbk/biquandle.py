"""Finite biquandles and finite groups stored as operation tables.

Elements are the integers ``0..n-1``.  Tables are indexed ``[left][right]``, so
``under[a][b]`` is ``a ▷̲ b`` and ``over[a][b]`` is ``a ▷̄ b``.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict
from dataclasses import dataclass, field
from functools import cached_property

from ._text import content_lines, format_rows, parse_int, read_rows
from .errors import MalformedTable, NonUnitParameter, NotABijection, ParseError

Table = tuple[tuple[int, ...], ...]


def _as_table(rows, n, name):
    try:
        table = tuple(tuple(int(v) for v in row) for row in rows)
    except (TypeError, ValueError):
        raise MalformedTable(f"{name}: rows must be sequences of integers") from None
    if len(table) != n or any(len(row) != n for row in table):
        raise MalformedTable(f"{name}: expected a {n}x{n} table")
    for a, row in enumerate(table):
        for b, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedTable(f"{name}[{a}][{b}] = {v} is outside [0, {n})")
    return table


@dataclass
class AxiomReport:
    """Result of an exhaustive axiom check.

    Each violation is ``(label, witness)`` where the witness is the tuple of
    elements that makes the labelled identity fail.
    """

    violations: list[tuple[str, tuple]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.passed

    def labels(self):
        return {label for label, _ in self.violations}

    def format(self):
        if self.passed:
            return "PASS"
        return "\n".join(f"{label} {' '.join(map(str, w))}".rstrip()
                         for label, w in self.violations)


class _Stop(Exception):
    pass


class _Collector:
    """Appends violations; raises _Stop after the first one when fail_fast is set."""

    def __init__(self, fail_fast=False):
        self.report = AxiomReport()
        self.fail_fast = fail_fast

    def add(self, label, witness):
        self.report.violations.append((label, tuple(witness)))
        if self.fail_fast:
            raise _Stop


@dataclass(frozen=True)
class FiniteBiquandle:
    n: int
    under: Table
    over: Table

    def __post_init__(self):
        if self.n < 1:
            raise MalformedTable("order must be positive")
        object.__setattr__(self, "under", _as_table(self.under, self.n, "under"))
        object.__setattr__(self, "over", _as_table(self.over, self.n, "over"))

    @classmethod
    def from_tables(cls, under, over):
        return cls(len(under), under, over)

    @property
    def elements(self):
        return range(self.n)

    def is_quandle(self):
        return all(self.over[a][b] == a for a in self.elements for b in self.elements)

    @cached_property
    def under_column_inverse(self):
        """``inv[b][v]`` is the x with ``x ▷̲ b == v`` (assumes bijective columns)."""
        return _column_inverse(self.under, self.n)

    @cached_property
    def over_column_inverse(self):
        return _column_inverse(self.over, self.n)

    @cached_property
    def _s_inverse(self):
        inv = {}
        for x in self.elements:
            for y in self.elements:
                inv[s_map(self, x, y)] = (x, y)
        return inv


def _column_inverse(table, n):
    inv = [[-1] * n for _ in range(n)]
    for x in range(n):
        for b in range(n):
            inv[b][table[x][b]] = x
    return tuple(tuple(row) for row in inv)


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group given by its Cayley table; identity and inverses are derived.

    For a table that is not a group, ``identity`` is ``None`` and missing
    inverses are ``None``; :func:`check_group_axioms` reports the problem.
    """

    m: int
    mul: Table
    identity: int | None = field(init=False)
    inv: tuple = field(init=False)

    def __post_init__(self):
        if self.m < 1:
            raise MalformedTable("group order must be positive")
        mul = _as_table(self.mul, self.m, "mul")
        object.__setattr__(self, "mul", mul)
        e = next((x for x in range(self.m)
                  if all(mul[x][g] == g == mul[g][x] for g in range(self.m))), None)
        object.__setattr__(self, "identity", e)
        inv = []
        for g in range(self.m):
            inv.append(None if e is None else next(
                (h for h in range(self.m) if mul[g][h] == e == mul[h][g]), None))
        object.__setattr__(self, "inv", tuple(inv))

    @classmethod
    def from_table(cls, mul):
        return cls(len(mul), mul)

    @property
    def elements(self):
        return range(self.m)

    def conj(self, g, h):
        """``h⁻¹ g h``."""
        return self.mul[self.mul[self.inv[h]][g]][h]


# -- constructors ----------------------------------------------------------

def make_alexander(n: int, t: int, s: int) -> FiniteBiquandle:
    """Alexander biquandle on Z_n: ``a ▷̲ b = t·a + (s−t)·b``, ``a ▷̄ b = s·a``."""
    if n < 1:
        raise ValueError("n must be positive")
    for name, v in (("t", t), ("s", s)):
        if math.gcd(v % n, n) != 1 and n > 1:
            raise NonUnitParameter(f"{name}={v} is not a unit mod {n}")
    under = [[(t * a + (s - t) * b) % n for b in range(n)] for a in range(n)]
    over = [[(s * a) % n for _ in range(n)] for a in range(n)]
    return FiniteBiquandle(n, under, over)


def make_constant_action(perm) -> FiniteBiquandle:
    perm = tuple(int(v) for v in perm)
    n = len(perm)
    if sorted(perm) != list(range(n)):
        raise NotABijection(f"{perm} is not a permutation of 0..{n - 1}")
    table = [[perm[a]] * n for a in range(n)]
    return FiniteBiquandle(n, table, table)


def make_conjugation(G: FiniteGroup) -> FiniteBiquandle:
    """Conjugation quandle: ``a ▷̲ b = b⁻¹ a b`` and trivial over operation."""
    n = G.m
    under = [[G.conj(a, b) for b in range(n)] for a in range(n)]
    over = [[a] * n for a in range(n)]
    return FiniteBiquandle(n, under, over)


def trivial_biquandle(n: int) -> FiniteBiquandle:
    return make_constant_action(range(n))


def cyclic_group(m: int) -> FiniteGroup:
    return FiniteGroup(m, [[(g + h) % m for h in range(m)] for g in range(m)])


def symmetric_group_elements(k: int):
    return list(itertools.permutations(range(k)))


def symmetric_group(k: int) -> FiniteGroup:
    """S_k on permutations in lexicographic order; ``p·q`` applies q first."""
    perms = symmetric_group_elements(k)
    index = {p: i for i, p in enumerate(perms)}
    mul = [[index[tuple(p[q[i]] for i in range(k))] for q in perms] for p in perms]
    return FiniteGroup(len(perms), mul)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Elements ``(g, h)`` are encoded as ``g·|H| + h``."""
    m = G.m * H.m
    mul = [[G.mul[x // H.m][y // H.m] * H.m + H.mul[x % H.m][y % H.m]
            for y in range(m)] for x in range(m)]
    return FiniteGroup(m, mul)


# -- checks ----------------------------------------------------------------

def _check_range(table, n, name):
    for a, row in enumerate(table):
        if len(row) != n:
            raise MalformedTable(f"{name} row {a} has length {len(row)}, expected {n}")
        for b, v in enumerate(row):
            if not 0 <= v < n:
                raise MalformedTable(f"{name}[{a}][{b}] = {v} is outside [0, {n})")


def _collisions(images, out):
    """Yield pairs of keys sharing an image, adjacent within each collision bucket."""
    buckets = defaultdict(list)
    for key, img in images:
        buckets[img].append(key)
    for img in sorted(buckets):
        keys = buckets[img]
        for k1, k2 in zip(keys, keys[1:]):
            out(k1, k2)


def check_biquandle_axioms(B: FiniteBiquandle, fail_fast: bool = False) -> AxiomReport:
    """Exhaustively check the three biquandle axioms.

    Violation labels: ``i`` (witness ``x``), ``ii:under``/``ii:over`` (two
    elements with equal image under the column map of ``y``: ``x1 x2 y``),
    ``ii:S`` (two pairs with the same S-image: ``x1 y1 x2 y2``) and
    ``iii:1``..``iii:3`` for the exchange laws (witness ``x y z``).
    """
    n, U, O = B.n, B.under, B.over
    _check_range(U, n, "under")
    _check_range(O, n, "over")
    col = _Collector(fail_fast)
    X = range(n)
    try:
        for x in X:
            if U[x][x] != O[x][x]:
                col.add("i", (x,))
        for y in X:
            _collisions(((x, U[x][y]) for x in X), lambda a, b: col.add("ii:under", (a, b, y)))
            _collisions(((x, O[x][y]) for x in X), lambda a, b: col.add("ii:over", (a, b, y)))
        _collisions((((x, y), (O[y][x], U[x][y])) for x in X for y in X),
                    lambda p, q: col.add("ii:S", p + q))
        for x, y, z in itertools.product(X, repeat=3):
            zy_u, yz_o, yz_u, zy_o = U[z][y], O[y][z], U[y][z], O[z][y]
            if U[U[x][y]][zy_u] != U[U[x][z]][yz_o]:
                col.add("iii:1", (x, y, z))
            if O[U[x][y]][zy_u] != U[O[x][z]][yz_o]:
                col.add("iii:2", (x, y, z))
            if O[O[x][y]][zy_o] != O[O[x][z]][yz_u]:
                col.add("iii:3", (x, y, z))
    except _Stop:
        pass
    return col.report


def check_group_axioms(G: FiniteGroup, fail_fast: bool = False) -> AxiomReport:
    """Labels: ``assoc`` (``a b c``), ``identity`` (empty witness), ``inverse`` (``g``)."""
    m, M = G.m, G.mul
    _check_range(M, m, "mul")
    col = _Collector(fail_fast)
    try:
        for a, b, c in itertools.product(range(m), repeat=3):
            if M[M[a][b]][c] != M[a][M[b][c]]:
                col.add("assoc", (a, b, c))
        if G.identity is None:
            col.add("identity", ())
        else:
            for g in range(m):
                if G.inv[g] is None:
                    col.add("inverse", (g,))
    except _Stop:
        pass
    return col.report


# -- the S map -------------------------------------------------------------

def s_map(B: FiniteBiquandle, x: int, y: int) -> tuple[int, int]:
    """``S(x, y) = (y ▷̄ x, x ▷̲ y)``."""
    return B.over[y][x], B.under[x][y]


def s_map_inverse(B: FiniteBiquandle, u: int, v: int) -> tuple[int, int]:
    return B._s_inverse[(u, v)]


# -- text format -----------------------------------------------------------

def _expect(lines, keyword, lineno_hint):
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError(f"expected {keyword!r}, file ended", lineno_hint) from None
    if tokens != [keyword]:
        raise ParseError(f"expected {keyword!r}, got {' '.join(tokens)!r}", lineno)
    return lineno


def _header(lines, keyword, nargs):
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("empty input", 1) from None
    if tokens[0] != keyword or len(tokens) != nargs + 1:
        raise ParseError(f"expected header '{keyword}' with {nargs} argument(s)", lineno)
    values = [parse_int(t, lineno) for t in tokens[1:]]
    if any(v < 1 for v in values):
        raise ParseError("sizes must be positive", lineno)
    return lineno, values


def _expect_end(lines):
    for lineno, tokens in lines:
        raise ParseError(f"unexpected trailing content {' '.join(tokens)!r}", lineno)


def _read_biquandle_body(lines, n, lineno):
    lineno = _expect(lines, "under", lineno)
    under = read_rows(lines, n, n, lineno)
    lineno = _expect(lines, "over", lineno + n)
    over = read_rows(lines, n, n, lineno)
    return under, over, lineno + n


def parse_biquandle(text: str) -> FiniteBiquandle:
    lines = content_lines(text)
    lineno, (n,) = _header(lines, "biquandle", 1)
    under, over, _ = _read_biquandle_body(lines, n, lineno)
    _expect_end(lines)
    return FiniteBiquandle(n, under, over)


def serialize_biquandle(B: FiniteBiquandle) -> str:
    return (f"biquandle {B.n}\nunder\n{format_rows(B.under)}\n"
            f"over\n{format_rows(B.over)}\n")


def parse_group(text: str) -> FiniteGroup:
    lines = content_lines(text)
    lineno, (m,) = _header(lines, "group", 1)
    mul = read_rows(lines, m, m, lineno)
    _expect_end(lines)
    return FiniteGroup(m, mul)


def serialize_group(G: FiniteGroup) -> str:
    return f"group {G.m}\n{format_rows(G.mul)}\n"
