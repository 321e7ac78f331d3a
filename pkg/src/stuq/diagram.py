"""Combinatorial stuck link diagrams: crossings wired by semiarc identifiers.

Every strand is broken at every crossing, including the over-strand of a
classical crossing, so a diagram with c crossings has exactly 2c semiarcs
(ids 0..2c-1); crossing-free unknot components are tracked separately in
``free_loops``.  Each semiarc id appears exactly once as an output endpoint
and once as an input endpoint.

Crossing slot conventions (fixed globally; the catalog oracles pin them):

========  =======================  =========================  ==================
kind      slots (in1 in2 out1 out2) color rules               strand pairing
========  =======================  =========================  ==================
X+        under-in over-in          out1 = in1 * in2           in1->out1
          under-out over-out        out2 = in2                 in2->out2
X-        same slots                out1 = in1 bar* in2        in1->out1
                                    out2 = in2                 in2->out2
S+        two in, two out           out1 = R1(in1, in2)        in1->out2
                                    out2 = R2(in1, in2)        in2->out1
S-        two in, two out           out1 = R3(in1, in2)        in1->out1
                                    out2 = R4(in1, in2)        in2->out2
========  =======================  =========================  ==================

The crossed strand pairing for S+ and the uncrossed one for S- reflect which
input slot feeds the first argument of the R-maps; both reproduce the
published coloring equations for the catalog diagrams.
"""

from __future__ import annotations

from dataclasses import dataclass, field

CLASSICAL_POS = "X+"
CLASSICAL_NEG = "X-"
STUCK_POS = "S+"
STUCK_NEG = "S-"
KINDS = (CLASSICAL_POS, CLASSICAL_NEG, STUCK_POS, STUCK_NEG)


@dataclass(frozen=True)
class Crossing:
    kind: str
    in1: int
    in2: int
    out1: int
    out2: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown crossing kind {self.kind!r}")

    @property
    def classical(self) -> bool:
        return self.kind in (CLASSICAL_POS, CLASSICAL_NEG)

    @property
    def stuck(self) -> bool:
        return not self.classical

    def continuation(self, in_slot: int) -> int:
        """Out-slot (1 or 2) that continues the strand entering at in_slot."""
        if self.kind == STUCK_POS:
            return 2 if in_slot == 1 else 1
        return in_slot


class DiagramError(ValueError):
    pass


@dataclass(frozen=True)
class StuckDiagram:
    crossings: tuple
    free_loops: int = 0

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        problems = validate_diagram(self)
        if problems:
            raise DiagramError("; ".join(problems))

    @property
    def semiarc_count(self) -> int:
        return 2 * len(self.crossings)

    @property
    def slots(self) -> int:
        """Color slots: one per semiarc plus one per free loop."""
        return self.semiarc_count + self.free_loops

    def successor(self) -> dict:
        """Map semiarc -> next semiarc along the oriented strand."""
        by_in = {}
        for c in self.crossings:
            by_in[c.in1] = (c, 1)
            by_in[c.in2] = (c, 2)
        succ = {}
        for a, (c, in_slot) in by_in.items():
            succ[a] = c.out1 if c.continuation(in_slot) == 1 else c.out2
        return succ

    def component_map(self) -> dict:
        """Map semiarc -> component index (free loops are not included)."""
        succ = self.successor()
        comp = {}
        idx = 0
        for a in range(self.semiarc_count):
            if a in comp:
                continue
            b = a
            while b not in comp:
                comp[b] = idx
                b = succ[b]
            idx += 1
        return comp

    def components(self) -> int:
        if not self.crossings:
            return self.free_loops
        return max(self.component_map().values()) + 1 + self.free_loops

    def stuck_count(self) -> int:
        return sum(1 for c in self.crossings if c.stuck)


def validate_diagram(d) -> list:
    """Structural problems as human-readable strings; empty means valid."""
    problems = []
    if d.free_loops < 0:
        problems.append("free loop count must be non-negative")
    s = 2 * len(d.crossings)
    outs, ins = {}, {}
    for i, c in enumerate(d.crossings):
        for a in (c.out1, c.out2):
            if not (0 <= a < s):
                problems.append(f"crossing {i}: semiarc {a} out of range 0..{s - 1}")
            elif a in outs:
                problems.append(f"semiarc {a} is an output of crossings {outs[a]} and {i}")
            else:
                outs[a] = i
        for a in (c.in1, c.in2):
            if not (0 <= a < s):
                problems.append(f"crossing {i}: semiarc {a} out of range 0..{s - 1}")
            elif a in ins:
                problems.append(f"semiarc {a} is an input of crossings {ins[a]} and {i}")
            else:
                ins[a] = i
    if not problems:
        missing_out = [a for a in range(s) if a not in outs]
        missing_in = [a for a in range(s) if a not in ins]
        if missing_out:
            problems.append(f"semiarcs never used as outputs: {missing_out}")
        if missing_in:
            problems.append(f"semiarcs never used as inputs: {missing_in}")
    return problems


def components(d: StuckDiagram) -> int:
    return d.components()


def unknot(loops: int = 1) -> StuckDiagram:
    return StuckDiagram((), free_loops=loops)


# -- text format ----------------------------------------------------------------
#
# One crossing per line: "X+ a b c d" with slots in1 in2 out1 out2 (for the
# classical kinds: under-in, over-in, under-out, over-out).  Optional header
# "loops k" adds k crossing-free components.  "#" starts a comment.

def from_code(text: str) -> StuckDiagram:
    crossings = []
    loops = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "loops":
            if len(parts) != 2 or not parts[1].isdigit():
                raise DiagramError(f"line {lineno}: expected 'loops <count>'")
            loops += int(parts[1])
            continue
        if parts[0] not in KINDS:
            raise DiagramError(f"line {lineno}: unknown crossing kind {parts[0]!r}")
        if len(parts) != 5:
            raise DiagramError(f"line {lineno}: expected 4 semiarc ids, got {len(parts) - 1}")
        try:
            a, b, c, dd = (int(p) for p in parts[1:])
        except ValueError:
            raise DiagramError(f"line {lineno}: semiarc ids must be integers") from None
        crossings.append(Crossing(parts[0], a, b, c, dd))
    try:
        return StuckDiagram(tuple(crossings), free_loops=loops)
    except DiagramError as err:
        raise DiagramError(f"invalid diagram: {err}") from None


def to_code(d: StuckDiagram) -> str:
    lines = []
    if d.free_loops:
        lines.append(f"loops {d.free_loops}")
    lines.extend(f"{c.kind} {c.in1} {c.in2} {c.out1} {c.out2}" for c in d.crossings)
    return "\n".join(lines) + ("\n" if lines else "")
