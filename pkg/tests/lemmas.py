"""Executable forms of the n-parallel lemmas, returning lists of violations.

Small carriers are checked exhaustively; larger ones by seeded random sampling.
"""

import itertools
import random

from hbk import idem_index, type_index
from hbk.parallel import parallel_tables

EXHAUSTIVE_MAX = 5


class ParallelTables:
    def __init__(self, B, upto):
        self.B = B
        self.U = [parallel_tables(B, k, "under") for k in range(upto + 1)]
        self.O = [parallel_tables(B, k, "over") for k in range(upto + 1)]


def _points(n, arity, rng, samples):
    if rng is None:
        return itertools.product(range(n), repeat=arity)
    return (tuple(rng.randrange(n) for _ in range(arity)) for _ in range(samples))


def _indices(top, rng, samples, arity=2):
    if rng is None:
        return itertools.product(range(top + 1), repeat=arity)
    return (tuple(rng.randrange(top + 1) for _ in range(arity)) for _ in range(samples))


def lemma_violations(B, samples=1000, seed=0):
    """Check the composition, diagonal, exchange, bijectivity and divisibility lemmas.

    Returns ``(violations, mode)`` where mode is "exhaustive" or "sampled".
    """
    k = type_index(B)
    idem = idem_index(B)
    T = ParallelTables(B, 4 * k)
    U, O, n = T.U, T.O, B.n
    rng = None if n <= EXHAUSTIVE_MAX else random.Random(seed)
    bad = []

    # composition: indices up to 2·type
    if rng is None:
        cases = ((a, b, m, j) for a, b in _points(n, 2, None, 0)
                 for m, j in _indices(2 * k, None, 0))
    else:
        cases = (tuple(rng.randrange(n) for _ in range(2)) + tuple(
            rng.randrange(2 * k + 1) for _ in range(2)) for _ in range(samples))
    for a, b, m, j in cases:
        if U[j][U[m][a][b]][U[m][b][b]] != U[m + j][a][b]:
            bad.append(("3.3:under", (a, b, m, j)))
        if O[j][O[m][a][b]][O[m][b][b]] != O[m + j][a][b]:
            bad.append(("3.3:over", (a, b, m, j)))

    for j in range(2 * k + 1):
        for a in range(n):
            if U[j][a][a] != O[j][a][a]:
                bad.append(("3.4", (a, j)))

    if rng is None:
        cases = ((a, b, c, m, j) for a, b, c in _points(n, 3, None, 0)
                 for m, j in _indices(k, None, 0))
    else:
        cases = (tuple(rng.randrange(n) for _ in range(3)) + tuple(
            rng.randrange(k + 1) for _ in range(2)) for _ in range(samples))
    for a, b, c, m, j in cases:
        cb = O[m][c][b]
        ac, bc = U[j][a][c], U[j][b][c]
        if U[j][U[m][a][b]][cb] != U[m][ac][bc]:
            bad.append(("3.5:1", (a, b, c, m, j)))
        if U[j][O[m][a][b]][cb] != O[m][ac][bc]:
            bad.append(("3.5:2", (a, b, c, m, j)))
        if O[j][O[m][a][b]][cb] != O[m][O[j][a][c]][bc]:
            bad.append(("3.5:3", (a, b, c, m, j)))

    for j in range(k + 1):
        for a in range(n):
            if len({U[j][x][a] for x in range(n)}) != n:
                bad.append(("3.6:under", (a, j)))
            if len({O[j][x][a] for x in range(n)}) != n:
                bad.append(("3.6:over", (a, j)))
    pairs = list(_indices(k, None, 0)) if rng is None else list(
        {tuple(rng.randrange(k + 1) for _ in range(2)) for _ in range(min(samples, 64))})
    for m, j in pairs:
        images = {(O[m][y][x], U[j][x][y]) for x in range(n) for y in range(n)}
        if len(images) != n * n:
            bad.append(("3.6:S", (m, j)))

    # divisibility: indices up to 3·type
    for m, j in itertools.product(range(3 * k + 1), repeat=2):
        diff = abs(m - j)
        if diff % idem == 0 and any(U[m][a][a] != U[j][a][a] or O[m][a][a] != O[j][a][a]
                                    for a in range(n)):
            bad.append(("div:i", (m, j)))
        if diff % k == 0 and (U[m] != U[j] or O[m] != O[j]):
            bad.append(("div:ii", (m, j)))
    if k % idem:
        bad.append(("div:iii", (idem, k)))
    return bad, ("exhaustive" if rng is None else "sampled")
