"""Coloring enumeration and the counting and G-enhanced invariants."""

from __future__ import annotations

import itertools
import re
from collections import Counter
from dataclasses import dataclass, field

from .biquandle import FiniteBiquandle, FiniteGroup
from .diagram import Diagram, validate_diagram
from .errors import InconsistentProjection, StructureDiagramMismatch, ValidationError
from .gfamily import GFamily
from .pmb import PartialMultBiquandle, factorizations, group_pmb, pmb_from_gfamily

SOLVER = "solver"
ORACLE = "oracle"


def _split_structure(S):
    if isinstance(S, PartialMultBiquandle):
        return S.base, S
    if isinstance(S, FiniteBiquandle):
        return S, None
    raise TypeError(f"cannot color by {type(S).__name__}")


def _require_valid(D):
    report = validate_diagram(D)
    if not report.passed:
        label, (sid,) = report.violations[0]
        raise ValidationError(f"semiarc {sid}: {label.replace('-', ' ')}", semiarc=sid)


class _ColoringSystem:
    """Crossing and vertex relations of a diagram, compiled for propagation."""

    def __init__(self, S, D: Diagram):
        _require_valid(D)
        self.base, self.pmb = _split_structure(S)
        if D.vertices and self.pmb is None:
            raise StructureDiagramMismatch(
                "diagram has trivalent vertices; color it by a partially multiplicative biquandle")
        self.n = self.base.n
        self.size = D.num_semiarcs
        # ("x", B, C, A, D) for A = B▷̲C, D = C▷̄B;  ("v", p, q, r) for r = p·q
        self.relations = [("x",) + c.actors() for c in D.crossings]
        self.relations += [("v",) + v.factors() for v in D.vertices]
        self.touching = [[] for _ in range(self.size)]
        for i, rel in enumerate(self.relations):
            for var in set(rel[1:]):
                self.touching[var].append(i)
        U = self.base
        self.U, self.O = U.under, U.over
        self.Uinv, self.Oinv = U.under_column_inverse, U.over_column_inverse
        self.Sinv = U._s_inverse

    # each _apply returns False on contradiction; newly fixed variables go onto ``queue``

    def _set(self, vals, var, value, queue):
        cur = vals[var]
        if cur is None:
            vals[var] = value
            queue.extend(self.touching[var])
            return True
        return cur == value

    def _apply_crossing(self, vals, rel, queue):
        _, B, C, A, D = rel
        vb, vc, va, vd = vals[B], vals[C], vals[A], vals[D]
        if vb is None or vc is None:
            if vb is not None and vd is not None:
                vc = self.Oinv[vb][vd]
            elif vc is not None and va is not None:
                vb = self.Uinv[vc][va]
            elif va is not None and vd is not None:
                vb, vc = self.Sinv.get((vd, va), (-1, -1))
            else:
                return True
            if vb < 0 or vc < 0:
                return False
        return (self._set(vals, B, vb, queue) and self._set(vals, C, vc, queue)
                and self._set(vals, A, self.U[vb][vc], queue)
                and self._set(vals, D, self.O[vc][vb], queue))

    def _apply_vertex(self, vals, rel, queue):
        _, p, q, r = rel
        vp, vq, vr = vals[p], vals[q], vals[r]
        P = self.pmb
        if vp is not None and vq is not None:
            prod = P.prod.get((vp, vq))
            return prod is not None and self._set(vals, r, prod, queue)
        if vr is None:
            return True
        if vp is not None:
            vq = P.left_quotient.get((vp, vr))
            return vq is not None and self._set(vals, q, vq, queue)
        if vq is not None:
            vp = P.right_quotient.get((vq, vr))
            return vp is not None and self._set(vals, p, vp, queue)
        return True

    def propagate(self, vals, queue):
        while queue:
            rel = self.relations[queue.pop()]
            ok = (self._apply_crossing if rel[0] == "x" else self._apply_vertex)(vals, rel, queue)
            if not ok:
                return False
        return True

    def _choose(self, vals):
        """Pick the next branching move: split a known vertex product, else fix a semiarc."""
        for rel in self.relations:
            if rel[0] == "v" and vals[rel[3]] is not None and vals[rel[1]] is None \
                    and vals[rel[2]] is None:
                return "factor", rel
        best, best_score = None, -1
        for var in range(self.size):
            if vals[var] is not None:
                continue
            score = sum(1 for i in self.touching[var]
                        if any(vals[v] is not None for v in self.relations[i][1:]))
            if score > best_score:
                best, best_score = var, score
        return "value", best

    def solutions(self):
        start = [None] * self.size
        if not self.propagate(start, []):
            return
        stack = [start]
        while stack:
            vals = stack.pop()
            if all(v is not None for v in vals):
                yield tuple(vals)
                continue
            kind, what = self._choose(vals)
            if kind == "factor":
                _, p, q, r = what
                options = [((p, a), (q, b)) for a, b in factorizations(self.pmb, vals[r])]
            else:
                options = [((what, x),) for x in range(self.n)]
            for assignment in reversed(options):
                child = list(vals)
                queue = []
                if all(self._set(child, var, x, queue) for var, x in assignment) \
                        and self.propagate(child, queue):
                    stack.append(child)


def _is_coloring(base, pmb, D, vals):
    U, O = base.under, base.over
    for c in D.crossings:
        if c.sign > 0:
            if vals[c.u_out] != U[vals[c.u_in]][vals[c.o_out]] \
                    or vals[c.o_in] != O[vals[c.o_out]][vals[c.u_in]]:
                return False
        else:
            if vals[c.u_in] != U[vals[c.u_out]][vals[c.o_in]] \
                    or vals[c.o_out] != O[vals[c.o_in]][vals[c.u_out]]:
                return False
    for v in D.vertices:
        if v.kind == "merge":
            a, b, c = v.slots
        else:
            c, a, b = v.slots
        if pmb.prod.get((vals[a], vals[b])) != vals[c]:
            return False
    return True


def oracle_colorings(S, D: Diagram):
    """Brute force: test every one of ``|carrier| ** num_semiarcs`` assignments."""
    _require_valid(D)
    base, pmb = _split_structure(S)
    if D.vertices and pmb is None:
        raise StructureDiagramMismatch("diagram has trivalent vertices")
    for vals in itertools.product(range(base.n), repeat=D.num_semiarcs):
        if _is_coloring(base, pmb, D, vals):
            yield vals


def colorings(S, D: Diagram, mode: str = SOLVER):
    """All colorings of D by S in lexicographic order."""
    if mode == ORACLE:
        return list(oracle_colorings(S, D))
    if mode != SOLVER:
        raise ValueError(f"mode must be {SOLVER!r} or {ORACLE!r}")
    return sorted(_ColoringSystem(S, D).solutions())


def counting_invariant(S, D: Diagram, mode: str = SOLVER) -> int:
    """Number of colorings of D by a biquandle or PMB."""
    if mode == ORACLE:
        return sum(1 for _ in oracle_colorings(S, D))
    if mode != SOLVER:
        raise ValueError(f"mode must be {SOLVER!r} or {ORACLE!r}")
    return sum(1 for _ in _ColoringSystem(S, D).solutions())


def enumerate_g_colorings(G: FiniteGroup, D: Diagram) -> list[tuple[int, ...]]:
    """Group colorings, in lexicographic order.

    Over labels pass unchanged; the under label ``g`` becomes ``h⁻¹gh`` at a
    positive crossing and ``hgh⁻¹`` at a negative one (``h`` the over label);
    vertices multiply.  These are colorings by the conjugation quandle of G with
    the full group product.
    """
    return sorted(_ColoringSystem(group_pmb(G), D).solutions())


def g_coloring_fibers(F: GFamily, D: Diagram) -> dict[tuple[int, ...], int]:
    """Map each group coloring to the number of PMB colorings projecting onto it."""
    P = pmb_from_gfamily(F)
    m = F.group.m
    fibers = {psi: 0 for psi in enumerate_g_colorings(F.group, D)}
    for coloring in _ColoringSystem(P, D).solutions():
        psi = tuple(q % m for q in coloring)
        if psi not in fibers:
            raise InconsistentProjection(f"coloring {coloring} projects to {psi}, "
                                         "which is not a group coloring")
        fibers[psi] += 1
    return fibers


@dataclass(frozen=True)
class InvariantPolynomial:
    """A polynomial in u with non-negative integer coefficients, stored sparsely."""

    coeffs: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "coeffs",
                           {int(e): int(c) for e, c in sorted(self.coeffs.items()) if c})

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def evaluate(self, u):
        return sum(c * u ** e for e, c in self.coeffs.items())

    def derivative_at_one(self):
        """``Σ e·c``, the number of liftable colorings."""
        return sum(e * c for e, c in self.coeffs.items())

    def __str__(self):
        return format_polynomial(self)


def enhanced_invariant(F: GFamily, D: Diagram) -> InvariantPolynomial:
    """``Σ_ψ u^|fiber(ψ)|`` over all group colorings ψ, empty fibers included."""
    return InvariantPolynomial(Counter(g_coloring_fibers(F, D).values()))


def format_polynomial(p: InvariantPolynomial) -> str:
    terms = []
    for e, c in sorted(p.coeffs.items(), reverse=True):
        if e == 0:
            terms.append(str(c))
            continue
        coeff = "" if c == 1 else str(c)
        terms.append(f"{coeff}u" if e == 1 else f"{coeff}u^{e}")
    return " + ".join(terms) if terms else "0"


_TERM = re.compile(r"^(\d*)(u(?:\^(\d+))?)?$")


def parse_polynomial(text: str) -> InvariantPolynomial:
    """Inverse of :func:`format_polynomial`."""
    text = text.strip()
    if text == "0":
        return InvariantPolynomial({})
    coeffs = Counter()
    for term in text.split(" + "):
        m = _TERM.match(term)
        if not m or not term:
            raise ValueError(f"bad polynomial term {term!r}")
        coeff_s, has_u, exp_s = m.groups()
        if has_u is None:
            coeffs[0] += int(coeff_s)
        else:
            coeffs[int(exp_s) if exp_s else 1] += int(coeff_s) if coeff_s else 1
    return InvariantPolynomial(dict(coeffs))
