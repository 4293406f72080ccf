"""n-parallel operations, the n-parallel biquandle, and the idem/type indices."""

from __future__ import annotations

import math

from .biquandle import FiniteBiquandle
from .errors import IterationCapExceeded

UNDER = "under"
OVER = "over"


def _table(B, kind):
    if kind == UNDER:
        return B.under
    if kind == OVER:
        return B.over
    raise ValueError(f"kind must be 'under' or 'over', not {kind!r}")


def parallel_op(B: FiniteBiquandle, n: int, a: int, b: int, kind: str = UNDER) -> int:
    """``a ▷^[n] b`` for the chosen operation.

    Iterates the pair ``(a ▷^[k] b, b ▷^[k] b)``; each step costs two lookups.
    """
    if n < 0:
        raise ValueError("parallel index must be non-negative")
    T = _table(B, kind)
    x, y = a, b
    for _ in range(n):
        x, y = T[x][y], T[y][y]
    return x


def parallel_tables(B: FiniteBiquandle, n: int, kind: str = UNDER):
    """Full table of ``a ▷^[n] b`` (rows ``a``, columns ``b``)."""
    T = _table(B, kind)
    X = range(B.n)
    cols = []
    for b in X:
        col = list(X)
        d = b
        for _ in range(n):
            col = [T[x][d] for x in col]
            d = T[d][d]
        cols.append(col)
    return tuple(tuple(cols[b][a] for b in X) for a in X)


def parallel_biquandle(B: FiniteBiquandle, n: int) -> FiniteBiquandle:
    return FiniteBiquandle(B.n, parallel_tables(B, n, UNDER), parallel_tables(B, n, OVER))


def _orbit_length(f, start, limit):
    """Smallest k > 0 with f^k(start) == start, or None within ``limit`` steps."""
    x = f(start)
    for k in range(1, limit + 1):
        if x == start:
            return k
        x = f(x)
    return None


def _lcm(values):
    return math.lcm(*values) if values else 1


def _diagonal_periods(B):
    """Per-element period ``n_a`` of ``a ↦ a ▷̲ a``; the sequence ``a ▷̲^[k] a`` iterates it."""
    U = B.under
    periods = []
    for a in range(B.n):
        k = _orbit_length(lambda x: U[x][x], a, B.n)
        if k is None:
            raise IterationCapExceeded(f"element {a} never returns under x -> x under x")
        periods.append(k)
    return periods


def idem_index(B: FiniteBiquandle) -> int:
    """Smallest n > 0 with ``a ▷̲^[n] a == a`` for every a."""
    cap = _lcm(_diagonal_periods(B))
    U = B.under
    diag = list(range(B.n))
    for n in range(1, cap + 1):
        diag = [U[d][d] for d in diag]
        if all(d == a for a, d in enumerate(diag)):
            return n
    raise IterationCapExceeded(f"idem index exceeds the bound {cap}")


def _map_order(perm):
    """Order of a permutation given as a tuple; None if it is not a bijection."""
    if sorted(perm) != list(range(len(perm))):
        return None
    order = 1
    seen = set()
    for s in range(len(perm)):
        if s in seen:
            continue
        k, x = 0, s
        while True:
            seen.add(x)
            x = perm[x]
            k += 1
            if x == s:
                break
        order = math.lcm(order, k)
    return order


def type_bound(B: FiniteBiquandle) -> int:
    """``lcm{n̲_b·n_b, n̄_b·n_b}``, the finiteness bound for the type."""
    periods = _diagonal_periods(B)
    bound = 1
    for b, nb in enumerate(periods):
        for kind in (UNDER, OVER):
            col = tuple(parallel_op(B, nb, a, b, kind) for a in range(B.n))
            order = _map_order(col)
            if order is None:
                raise IterationCapExceeded(
                    f"x -> x {kind}^[{nb}] {b} is not a bijection; structure is not a biquandle")
            bound = math.lcm(bound, order * nb)
    return bound


def type_index(B: FiniteBiquandle) -> int:
    """Smallest n > 0 making both n-parallel operations trivial."""
    cap = type_bound(B)
    X = range(B.n)
    U, O = B.under, B.over
    # per column b: current images of every a, plus b ▷^[k] b
    ucols = [list(X) for _ in X]
    ocols = [list(X) for _ in X]
    udiag = list(X)
    odiag = list(X)
    for n in range(1, cap + 1):
        for b in X:
            du, do = udiag[b], odiag[b]
            ucols[b] = [U[x][du] for x in ucols[b]]
            ocols[b] = [O[x][do] for x in ocols[b]]
        udiag = [U[d][d] for d in udiag]
        odiag = [O[d][d] for d in odiag]
        if all(ucols[b][a] == a == ocols[b][a] for b in X for a in X):
            return n
    raise IterationCapExceeded(f"type exceeds the bound {cap}")
