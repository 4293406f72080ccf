"""Partially multiplicative biquandles (PMBs).

A PMB is a biquandle ``Q`` together with a partial product defined on a
subset ``D`` of ``Q × Q``.  The PMB associated to a G-family lives on
``X × G``; the pair ``(a, g)`` is flattened to ``a·|G| + g`` so that the carrier
is an ordinary :class:`FiniteBiquandle`.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from functools import cached_property

from ._text import content_lines, format_rows, parse_int
from .biquandle import (AxiomReport, FiniteBiquandle, _Collector, _Stop, _header,
                        _read_biquandle_body, make_conjugation)
from .errors import DomainProductMismatch, MalformedTable, ParseError
from .gfamily import GFamily, check_gfamily_axioms


@dataclass(frozen=True)
class PartialMultBiquandle:
    base: FiniteBiquandle
    prod: dict  # (a, b) -> a·b, keys are exactly D

    def __post_init__(self):
        n = self.base.n
        clean = {}
        for (a, b), c in self.prod.items():
            if not (0 <= a < n and 0 <= b < n):
                raise DomainProductMismatch(f"product defined at ({a}, {b}), outside Q x Q")
            if not 0 <= c < n:
                raise MalformedTable(f"product {a}·{b} = {c} is outside [0, {n})")
            clean[(int(a), int(b))] = int(c)
        object.__setattr__(self, "prod", dict(sorted(clean.items())))

    def __hash__(self):
        return hash((self.base, tuple(self.prod.items())))

    @property
    def n(self):
        return self.base.n

    @property
    def under(self):
        return self.base.under

    @property
    def over(self):
        return self.base.over

    @property
    def domain(self):
        """D as a sorted list of pairs."""
        return list(self.prod)

    def defined(self, a, b):
        return (a, b) in self.prod

    @cached_property
    def left_quotient(self):
        """``{(a, c): b}`` with ``a·b == c``; unique when left multiplication is injective."""
        return {(a, c): b for (a, b), c in self.prod.items()}

    @cached_property
    def right_quotient(self):
        return {(b, c): a for (a, b), c in self.prod.items()}

    @cached_property
    def right_factors(self):
        """``{a: [b, ...]}`` listing every b with ``(a, b)`` in D."""
        out = defaultdict(list)
        for a, b in self.prod:
            out[a].append(b)
        return dict(out)

    @cached_property
    def _by_product(self):
        out = defaultdict(list)
        for pair, c in self.prod.items():
            out[c].append(pair)
        return dict(out)


def encode_pair(a: int, g: int, gsize: int) -> int:
    return a * gsize + g


def decode_pair(q: int, gsize: int) -> tuple[int, int]:
    return divmod(q, gsize)


def pmb_from_gfamily(F: GFamily, check: bool = True) -> PartialMultBiquandle:
    """The PMB on ``X × G`` associated to a G-family.

    ``(a,g) ▷̲ (b,h) = (a ▷̲^h b, h⁻¹gh)``, ``(a,g) ▷̄ (b,h) = (a ▷̄^h b, g)`` and
    ``(a,g)·(a ▷̲^g a, h) = (a, gh)``.
    """
    if check:
        report = check_gfamily_axioms(F, fail_fast=True)
        if not report.passed:
            label, witness = report.violations[0]
            raise ValueError(f"not a G-family: axiom {label} fails at {witness}")
    G, m, n = F.group, F.group.m, F.xsize
    size = n * m
    under = [[0] * size for _ in range(size)]
    over = [[0] * size for _ in range(size)]
    for a, g, b, h in itertools.product(range(n), range(m), range(n), range(m)):
        p, q = a * m + g, b * m + h
        under[p][q] = F.under[h][a][b] * m + G.conj(g, h)
        over[p][q] = F.over[h][a][b] * m + g
    prod = {}
    for a, g, h in itertools.product(range(n), range(m), range(m)):
        prod[(a * m + g, F.under[g][a][a] * m + h)] = a * m + G.mul[g][h]
    return PartialMultBiquandle(FiniteBiquandle(size, under, over), prod)


def group_pmb(G) -> PartialMultBiquandle:
    """The conjugation quandle of G with the full group product (D = G × G).

    Colorings by this structure are exactly the group colorings of a diagram.
    """
    prod = {(g, h): G.mul[g][h] for g in G.elements for h in G.elements}
    return PartialMultBiquandle(make_conjugation(G), prod)


def check_pmb_axioms(P: PartialMultBiquandle, fail_fast: bool = False) -> AxiomReport:
    """Exhaustive check of the five PMB axioms (the base biquandle is not re-checked).

    Labels and witnesses:
      ``i:left`` (a x1 x2): a·x1 == a·x2 with x1 != x2; ``i:right`` (b x1 x2).
      ``ii:membership`` / ``ii:product`` (a b).
      ``iii:membership`` (a b x); ``iii:1``..``iii:4`` (a b x) for the four
      distributivity equations.
      ``iv:membership`` / ``iv:assoc`` (a b c).
      ``v`` (a b c d): the two sides of the exchanger condition disagree.
    """
    n, U, O, prod = P.n, P.under, P.over, P.prod
    for (a, b), c in prod.items():
        if not (0 <= a < n and 0 <= b < n and 0 <= c < n):
            raise DomainProductMismatch(f"product defined at ({a}, {b}) outside the carrier")
    Q = range(n)
    col = _Collector(fail_fast)
    try:
        left, right = defaultdict(dict), defaultdict(dict)
        for (a, x), c in prod.items():
            if c in left[a]:
                col.add("i:left", (a, left[a][c], x))
            left[a][c] = x
        for (x, b), c in prod.items():
            if c in right[b]:
                col.add("i:right", (b, right[b][c], x))
            right[b][c] = x

        for a, b in itertools.product(Q, repeat=2):
            p1, p2 = (a, U[b][a]), (b, O[a][b])
            if (p1 in prod) != (p2 in prod):
                col.add("ii:membership", (a, b))
            elif p1 in prod and prod[p1] != prod[p2]:
                col.add("ii:product", (a, b))

        for a, b, x in itertools.product(Q, repeat=3):
            p1 = (U[a][x], U[b][O[x][a]])
            p2 = (O[a][x], O[b][U[x][a]])
            m0, m1, m2 = (a, b) in prod, p1 in prod, p2 in prod
            if not (m0 == m1 == m2):
                col.add("iii:membership", (a, b, x))
            elif m0:
                ab = prod[(a, b)]
                if U[x][ab] != U[U[x][a]][b]:
                    col.add("iii:1", (a, b, x))
                if U[ab][x] != prod[p1]:
                    col.add("iii:2", (a, b, x))
                if O[x][ab] != O[O[x][a]][b]:
                    col.add("iii:3", (a, b, x))
                if O[ab][x] != prod[p2]:
                    col.add("iii:4", (a, b, x))

        for a, b, c in itertools.product(Q, repeat=3):
            ab, bc = prod.get((a, b)), prod.get((b, c))
            lhs = ab is not None and (ab, c) in prod
            rhs = bc is not None and (a, bc) in prod
            if lhs != rhs:
                col.add("iv:membership", (a, b, c))
            elif lhs and prod[(ab, c)] != prod[(a, bc)]:
                col.add("iv:assoc", (a, b, c))

        # (v): {(a,b,c,d) : ab = cd} must equal {(a,b,c,d) : ∃e, (a,e),(e,d) ∈ D, ae=c, ed=b}
        equal_products = set()
        for pairs in P._by_product.values():
            for (a, b), (c, d) in itertools.product(pairs, repeat=2):
                equal_products.add((a, b, c, d))
        exchangers = set()
        for (a, e), c in prod.items():
            for d in P.right_factors.get(e, ()):
                exchangers.add((a, prod[(e, d)], c, d))
        for quad in sorted(equal_products ^ exchangers):
            col.add("v", quad)
    except _Stop:
        pass
    return col.report


def find_exchanger(P: PartialMultBiquandle, a, b, c, d):
    """An e with ``(a,e),(e,d) ∈ D``, ``a·e == c`` and ``e·d == b``, or None."""
    for e in P.right_factors.get(a, ()):
        if P.prod[(a, e)] == c and P.prod.get((e, d)) == b:
            return e
    return None


def factorizations(P: PartialMultBiquandle, c: int) -> list[tuple[int, int]]:
    """All ``(a, b)`` in D with ``a·b == c``, ascending."""
    return sorted(P._by_product.get(c, ()))


def _is_group(block, prod):
    block = sorted(block)
    bs = set(block)
    for a, b in itertools.product(block, repeat=2):
        if prod.get((a, b)) not in bs:
            return False
    for a, b, c in itertools.product(block, repeat=3):
        if prod[(prod[(a, b)], c)] != prod[(a, prod[(b, c)])]:
            return False
    ident = [e for e in block if all(prod[(e, x)] == x == prod[(x, e)] for x in block)]
    if not ident:
        return False
    e = ident[0]
    return all(any(prod[(x, y)] == e == prod[(y, x)] for y in block) for x in block)


def is_group_decomposable(P: PartialMultBiquandle):
    """Decide whether D is a union of squares of groups, via the blocks ``R(a)``.

    ``R(a) = {b : (a, b) ∈ D}``.  Returns ``(True, blocks)`` with the distinct
    blocks sorted, or ``(False, [])``.
    """
    prod = P.prod
    R = {a: frozenset(bs) for a, bs in P.right_factors.items()}
    blocks = set()
    for a, block in R.items():
        if a not in block:
            return False, []
        if any(R.get(b) != block for b in block):
            return False, []
        blocks.add(block)
    covered = {(a, b) for block in blocks for a in block for b in block}
    if covered != set(prod):
        return False, []
    if not all(_is_group(block, prod) for block in blocks):
        return False, []
    return True, sorted(sorted(block) for block in blocks)


def parse_pmb(text: str) -> PartialMultBiquandle:
    lines = content_lines(text)
    lineno, (n,) = _header(lines, "pmb", 1)
    under, over, lineno = _read_biquandle_body(lines, n, lineno)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("expected 'prod'", lineno) from None
    if tokens != ["prod"]:
        raise ParseError(f"expected 'prod', got {' '.join(tokens)!r}", lineno)
    prod = {}
    for lineno, tokens in lines:
        if len(tokens) != 3:
            raise ParseError("product lines are 'a b c'", lineno)
        a, b, c = (parse_int(t, lineno) for t in tokens)
        if not all(0 <= v < n for v in (a, b, c)):
            raise ParseError(f"product entry outside [0, {n})", lineno)
        if (a, b) in prod:
            raise ParseError(f"product of {a} and {b} given twice", lineno)
        prod[(a, b)] = c
    return PartialMultBiquandle(FiniteBiquandle(n, under, over), prod)


def serialize_pmb(P: PartialMultBiquandle) -> str:
    lines = [f"pmb {P.n}", "under", format_rows(P.under), "over", format_rows(P.over), "prod"]
    lines += [f"{a} {b} {c}" for (a, b), c in P.prod.items()]
    return "\n".join(lines) + "\n"
