"""Y-oriented spatial trivalent graph diagrams.

A diagram is semiarc incidence data: signed crossings, merge/split vertices
and crossing-free loops.  Semiarc ids are 1-based in files and 0-based in
memory.

Crossing slots are ``(u_in, o_in, u_out, o_out)``: the incoming and outgoing
semiarcs of the under strand and of the over strand.  The coloring rule is
read sideways, with the pair ``(under-in, over-out)`` acting at a positive
crossing and ``(under-out, over-in)`` at a negative one::

    positive:  u_out = u_in ▷̲ o_out    o_in  = o_out ▷̄ u_in
    negative:  u_in  = u_out ▷̲ o_in    o_out = o_in ▷̄ u_out

Vertices: ``merge (in1, in2, out)`` colors ``out = in1·in2`` and
``split (in, out1, out2)`` colors ``in = out1·out2``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from ._text import content_lines, parse_int
from .biquandle import AxiomReport
from .errors import ParseError, UnknownFixture, ValidationError

MERGE = "merge"
SPLIT = "split"


@dataclass(frozen=True)
class Crossing:
    sign: int
    u_in: int
    o_in: int
    u_out: int
    o_out: int

    @property
    def inputs(self):
        return (self.u_in, self.o_in)

    @property
    def outputs(self):
        return (self.u_out, self.o_out)

    def actors(self):
        """``(B, C, A, D)`` with ``A = B ▷̲ C`` and ``D = C ▷̄ B``."""
        if self.sign > 0:
            return self.u_in, self.o_out, self.u_out, self.o_in
        return self.u_out, self.o_in, self.u_in, self.o_out


@dataclass(frozen=True)
class Vertex:
    kind: str
    slots: tuple[int, int, int]

    @property
    def inputs(self):
        return self.slots[:2] if self.kind == MERGE else self.slots[:1]

    @property
    def outputs(self):
        return self.slots[2:] if self.kind == MERGE else self.slots[1:]

    def factors(self):
        """``(p, q, r)`` with the rule ``r = p·q``."""
        if self.kind == MERGE:
            return self.slots
        inp, out1, out2 = self.slots
        return out1, out2, inp


@dataclass(frozen=True)
class Diagram:
    num_semiarcs: int
    crossings: tuple[Crossing, ...] = ()
    vertices: tuple[Vertex, ...] = ()
    loops: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "loops", tuple(self.loops))

    def input_slots(self):
        slots = [s for c in self.crossings for s in c.inputs]
        slots += [s for v in self.vertices for s in v.inputs]
        return slots + list(self.loops)

    def output_slots(self):
        slots = [s for c in self.crossings for s in c.outputs]
        slots += [s for v in self.vertices for s in v.outputs]
        return slots + list(self.loops)


def validate_diagram(D: Diagram) -> AxiomReport:
    """Check ids are in range and each semiarc is used once as input and once as output.

    Witnesses are 1-based semiarc ids.  Labels: ``range``, ``vertex-kind``,
    ``sign``, ``input-missing``, ``input-repeated``, ``output-missing``,
    ``output-repeated``.
    """
    report = AxiomReport()
    N = D.num_semiarcs
    for c in D.crossings:
        if c.sign not in (1, -1):
            report.violations.append(("sign", (c.sign,)))
    for v in D.vertices:
        if v.kind not in (MERGE, SPLIT):
            report.violations.append(("vertex-kind", (v.kind,)))
    for slots, what in ((D.input_slots(), "input"), (D.output_slots(), "output")):
        counts = Counter(slots)
        for s in sorted(counts):
            if not 0 <= s < N:
                report.violations.append(("range", (s + 1,)))
            elif counts[s] > 1:
                report.violations.append((f"{what}-repeated", (s + 1,)))
        for s in range(N):
            if counts[s] == 0:
                report.violations.append((f"{what}-missing", (s + 1,)))
    return report


def _ids(tokens, lineno):
    return [parse_int(t, lineno) - 1 for t in tokens]


def parse_diagram(text: str) -> Diagram:
    lines = content_lines(text)
    try:
        lineno, tokens = next(lines)
    except StopIteration:
        raise ParseError("empty input", 1) from None
    if tokens[0] != "semiarcs" or len(tokens) != 2:
        raise ParseError("expected 'semiarcs <N>'", lineno)
    N = parse_int(tokens[1], lineno)
    if N < 0:
        raise ParseError("semiarc count must be non-negative", lineno)
    crossings, vertices, loops = [], [], []
    for lineno, tokens in lines:
        head = tokens[0]
        if head == "crossing":
            if len(tokens) != 6 or tokens[1] not in "+-" or len(tokens[1]) != 1:
                raise ParseError("expected 'crossing <+|-> u_in o_in u_out o_out'", lineno)
            crossings.append(Crossing(1 if tokens[1] == "+" else -1, *_ids(tokens[2:], lineno)))
        elif head == "vertex":
            if len(tokens) != 5 or tokens[1] not in (MERGE, SPLIT):
                raise ParseError("expected 'vertex merge|split a b c'", lineno)
            vertices.append(Vertex(tokens[1], tuple(_ids(tokens[2:], lineno))))
        elif head == "loop":
            if len(tokens) != 2:
                raise ParseError("expected 'loop <id>'", lineno)
            loops.append(_ids(tokens[1:], lineno)[0])
        else:
            raise ParseError(f"unknown record {head!r}", lineno)
    D = Diagram(N, crossings, vertices, loops)
    report = validate_diagram(D)
    if not report.passed:
        label, (sid,) = report.violations[0]
        raise ValidationError(f"semiarc {sid}: {label.replace('-', ' ')}", semiarc=sid)
    return D


def serialize_diagram(D: Diagram) -> str:
    lines = [f"semiarcs {D.num_semiarcs}"]
    for c in D.crossings:
        ids = " ".join(str(s + 1) for s in (c.u_in, c.o_in, c.u_out, c.o_out))
        lines.append(f"crossing {'+' if c.sign > 0 else '-'} {ids}")
    for v in D.vertices:
        lines.append(f"vertex {v.kind} " + " ".join(str(s + 1) for s in v.slots))
    lines += [f"loop {s + 1}" for s in D.loops]
    return "\n".join(lines) + "\n"


_FIXTURES = {
    # two positive crossings; colorings satisfy x▷̲y = z, y▷̄x = w, y▷̲x = w, x▷̄y = z
    "hopf": """
        semiarcs 4
        crossing + 1 4 3 2
        crossing + 2 3 4 1
    """,
    "unlink2": """
        semiarcs 2
        loop 1
        loop 2
    """,
    "theta": """
        semiarcs 3
        vertex split 3 1 2
        vertex merge 1 2 3
    """,
    # incidence and crossing types recovered from the 14-relation coloring system
    "kinoshita": """
        semiarcs 13
        vertex merge 1 2 5
        vertex split 6 3 4
        crossing + 5 3 8 7
        crossing - 4 10 11 12
        crossing - 12 13 2 6
        crossing + 7 8 10 9
        crossing + 9 11 13 1
    """,
    # closure of the 2-braid s^3; strand pairs (left, right) per level
    "trefoil": """
        semiarcs 6
        crossing + 1 2 4 3
        crossing + 3 4 6 5
        crossing + 5 6 2 1
    """,
    # closure of s^4 s^-1: the trefoil with a Reidemeister II pair appended
    "trefoil_r2": """
        semiarcs 10
        crossing + 1 2 4 3
        crossing + 3 4 6 5
        crossing + 5 6 8 7
        crossing + 7 8 10 9
        crossing - 10 9 1 2
    """,
    # theta with a Reidemeister I curl (over first) on the merge-to-split edge
    "theta_kinked": """
        semiarcs 5
        vertex merge 1 2 3
        crossing + 4 3 5 4
        vertex split 5 1 2
    """,
    "empty": """
        semiarcs 0
    """,
}

BUILTIN_NAMES = tuple(_FIXTURES)


def builtin_diagram(name: str) -> Diagram:
    try:
        text = _FIXTURES[name]
    except KeyError:
        raise UnknownFixture(f"no builtin diagram named {name!r}; "
                             f"choose from {', '.join(BUILTIN_NAMES)}") from None
    return parse_diagram(text)
