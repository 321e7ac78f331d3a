"""Dev scratch: full sweep for the 16 two-bouquet table entries."""
import itertools
import sys

sys.path.insert(0, "src")

from scratch_search import (braid2_closure, invariants, s71, s72, w71, w72,
                            LETTERS)
from stuq.diagram import Crossing, StuckDiagram
from stuq.coloring import enumerate_colorings
from stuq.statesum import state_sum, poly_to_string

TARGETS = {
    "0k+": (0, "+", 1, 4, "2u^3+2"),
    "0k-": (0, "-", 1, 16, "8u^2+8"),
    "1l+": (1, "+", 2, 8, "2u^3+2u+4"),
    "1l-": (1, "-", 2, 4, "4"),
    "2k+": (2, "+", 1, 4, "2u^3+2"),
    "2k-": (2, "-", 1, 16, "8u^3+8"),
    "3k+": (3, "+", 1, 4, "2u^3+2"),
    "3k-": (3, "-", 1, 16, "8u^3+8"),
    "3l+": (3, "+", 2, 8, "2u^3+2u+4"),
    "3l-": (3, "-", 2, 4, "4"),
    "4k+": (4, "+", 1, 4, "2u^3+2"),
    "4k-": (4, "-", 1, 16, "16"),
    "4l+": (4, "+", 2, 8, "2u^3+2u+4"),
    "4l-": (4, "-", 2, 4, "4"),
    "5l+": (5, "+", 2, 8, "2u^3+2u+4"),
    "5l-": (5, "-", 2, 4, "4"),
}

classical = ["X+L", "X+R", "X-L", "X-R"]
stuck = {"+": ["S+A", "S+B"], "-": ["S-A", "S-B"]}

found = {}
for name, (n, sign, comps, col, phi) in sorted(TARGETS.items()):
    hits = []
    for stuck_pos in range(n + 1):
        for sletter in stuck[sign]:
            for cls in itertools.product(classical, repeat=n):
                word = list(cls[:stuck_pos]) + [sletter] + list(cls[stuck_pos:])
                d = braid2_closure(word)
                if d is None or d.components() != comps:
                    continue
                c72, p72 = invariants(d, s72, w72)
                if (c72, p72) == (col, phi):
                    hits.append(word)
                    break
            if hits:
                break
        if hits:
            break
    found[name] = hits[0] if hits else None
    print(name, "->", found[name])

# hand-coded 3k-_1 (stuck figure-8) against the 7.2 table values
d3km = StuckDiagram((
    Crossing("S-", 7, 2, 0, 3),
    Crossing("X-", 0, 5, 1, 6),
    Crossing("X-", 4, 1, 5, 2),
    Crossing("X+", 6, 3, 7, 4),
))
print("hand 3k-_1 over 7.2:", invariants(d3km, s72, w72))

# 3k+ from the figure-8 shadow: swap the stuck sign, two slot options
for opts in ((7, 2, 3, 0), (2, 7, 0, 3)):
    try:
        d = StuckDiagram((Crossing("S+", *opts),
                          Crossing("X-", 0, 5, 1, 6),
                          Crossing("X-", 4, 1, 5, 2),
                          Crossing("X+", 6, 3, 7, 4)))
    except Exception as exc:
        print("3k+ variant", opts, "invalid:", exc)
        continue
    print("3k+ variant", opts, "comps", d.components(), "->", invariants(d, s72, w72))
