"""Enumerating stuquandle colorings of stuck diagrams.

A coloring assigns an element of the stuquandle to every semiarc (and one to
each crossing-free loop) so that all crossing rules hold.  Enumeration is
propagation-driven: whenever both inputs of a crossing are colored its outputs
are forced, and classical crossings also propagate backwards through the
invertible operations, so only genuinely free semiarcs branch.
"""

from __future__ import annotations

import math

from .algebra import Stuquandle
from .diagram import (CLASSICAL_NEG, CLASSICAL_POS, STUCK_NEG, STUCK_POS,
                      StuckDiagram)


def _crossing_rules(s: Stuquandle, kind: str):
    if kind == CLASSICAL_POS:
        return s.star, lambda x, y: y
    if kind == CLASSICAL_NEG:
        return s.starbar, lambda x, y: y
    if kind == STUCK_POS:
        return s.r1, s.r2
    return s.r3, s.r4


def enumerate_colorings(d: StuckDiagram, s: Stuquandle) -> list:
    """All valid colorings as tuples of length d.slots, lexicographically sorted.

    Free-loop slots come after the semiarc slots and each ranges over the
    whole carrier.
    """
    n = d.slots
    base = sorted(_enumerate_crossing_colorings(d, s))
    if d.free_loops == 0:
        return [tuple(c) for c in base]
    out = []
    loops = d.free_loops
    from itertools import product
    for c in base:
        for extra in product(range(s.n), repeat=loops):
            out.append(tuple(c) + extra)
    assert all(len(c) == n for c in out)
    return out


def _enumerate_crossing_colorings(d: StuckDiagram, s: Stuquandle):
    count = d.semiarc_count
    if count == 0:
        return [()]
    rules = [( c, *_crossing_rules(s, c.kind)) for c in d.crossings]

    # For propagation: semiarc -> crossings it participates in.
    watchers = [[] for _ in range(count)]
    for idx, (c, _, _) in enumerate(rules):
        for a in (c.in1, c.in2, c.out1, c.out2):
            watchers[a].append(idx)

    color = [None] * count
    results = []

    def propagate(queue):
        """Apply forced assignments; returns trail of set semiarcs or None on clash."""
        trail = []

        def assign(a, v):
            if color[a] is None:
                color[a] = v
                trail.append(a)
                queue.append(a)
                return True
            return color[a] == v

        while queue:
            a = queue.pop()
            for idx in watchers[a]:
                c, f1, f2 = rules[idx]
                i1, i2 = color[c.in1], color[c.in2]
                o1, o2 = color[c.out1], color[c.out2]
                ok = True
                if i1 is not None and i2 is not None:
                    ok = assign(c.out1, f1(i1, i2)) and assign(c.out2, f2(i1, i2))
                elif c.kind in (CLASSICAL_POS, CLASSICAL_NEG):
                    # over-strand color equality propagates both ways, and the
                    # under-out determines the under-in through the inverse op.
                    if i2 is not None:
                        ok = assign(c.out2, i2)
                    elif o2 is not None:
                        ok = assign(c.in2, o2)
                    i2 = color[c.in2]
                    if ok and i2 is not None and o1 is not None and color[c.in1] is None:
                        inverse = s.starbar if c.kind == CLASSICAL_POS else s.star
                        ok = assign(c.in1, inverse(o1, i2))
                if not ok:
                    for b in trail:
                        color[b] = None
                    return None
        return trail

    def undo(trail):
        for b in trail:
            color[b] = None

    def search(start):
        a = start
        while a < count and color[a] is not None:
            a += 1
        if a == count:
            results.append(tuple(color))
            return
        for v in range(s.n):
            color[a] = v
            trail = propagate([a])
            if trail is not None:
                search(a + 1)
                undo(trail)
            color[a] = None

    search(0)
    return results


def counting_invariant(d: StuckDiagram, s: Stuquandle) -> int:
    """The number of colorings of d by s."""
    return len(enumerate_colorings(d, s))


# -- independent oracle for affine stuquandles -----------------------------------
#
# Over the affine family every crossing rule is Z_n-linear, so the coloring
# count is the number of solutions of a homogeneous linear system mod n.
# Solved here by Smith normal form over the integers, fully independently of
# the propagation enumerator.

def _affine_coefficients(n, a, b, e, kind):
    ai = pow(a, -1, n)
    if kind == CLASSICAL_POS:
        return (a, 1 - a), (0, 1)
    if kind == CLASSICAL_NEG:
        return (ai, 1 - ai), (0, 1)
    if kind == STUCK_POS:
        return (b, 1 - b), (a * (1 - b), 1 - a * (1 - b))
    return (1 - e, e), (1 - a * (1 - e), a * (1 - e))


def _smith_diagonal(rows):
    """Diagonal of the Smith normal form of an integer matrix (list of lists)."""
    mat = [list(r) for r in rows]
    diag = []
    r = 0
    while mat and any(any(v for v in row) for row in mat):
        # find pivot with smallest non-zero magnitude
        pr, pc, best = None, None, None
        for i, row in enumerate(mat):
            for j, v in enumerate(row):
                if v and (best is None or abs(v) < best):
                    pr, pc, best = i, j, abs(v)
        mat[0], mat[pr] = mat[pr], mat[0]
        for row in mat:
            row[0], row[pc] = row[pc], row[0]
        again = True
        while again:
            again = False
            p = mat[0][0]
            for i in range(1, len(mat)):
                if mat[i][0]:
                    q = mat[i][0] // p
                    mat[i] = [x - q * y for x, y in zip(mat[i], mat[0])]
                    if mat[i][0]:
                        mat[0], mat[i] = mat[i], mat[0]
                        again = True
            p = mat[0][0]
            for j in range(1, len(mat[0])):
                if mat[0][j]:
                    q = mat[0][j] // p
                    for row in mat:
                        row[j] -= q * row[0]
                    if mat[0][j]:
                        for row in mat:
                            row[0], row[j] = row[j], row[0]
                        again = True
        diag.append(abs(mat[0][0]))
        mat = [row[1:] for row in mat[1:]]
        r += 1
    return diag


def affine_coloring_count(d: StuckDiagram, n: int, a: int, b: int, e: int) -> int:
    """Solution count of the affine coloring system mod n via Smith normal form."""
    if math.gcd(a % n, n) != 1:
        raise ValueError("a must be invertible mod n")
    vars_ = d.semiarc_count
    if vars_ == 0:
        return n ** d.free_loops
    rows = []
    for c in d.crossings:
        (c1a, c1b), (c2a, c2b) = _affine_coefficients(n, a % n, b % n, e % n, c.kind)
        row = [0] * vars_
        row[c.in1] += c1a
        row[c.in2] += c1b
        row[c.out1] -= 1
        rows.append(row)
        row = [0] * vars_
        row[c.in1] += c2a
        row[c.in2] += c2b
        row[c.out2] -= 1
        rows.append(row)
    diag = _smith_diagonal(rows)
    count = 1
    for dv in diag:
        count *= math.gcd(dv, n)
    count *= n ** (vars_ - len(diag))
    return count * n ** d.free_loops
