"""Dev scratch: 3-braid closures for 4l entries + the trefoil-derived 7.3 family."""
import itertools
import sys

sys.path.insert(0, "src")

from scratch_search import (braid2_closure, invariants, make_table_stuquandle,
                            s71, s72, w71, w72, LETTERS)
from stuq.diagram import Crossing, StuckDiagram
from stuq.coloring import enumerate_colorings
from stuq.statesum import state_sum, poly_to_string
from stuq.weights import (WeightTriple, weight_from_polynomial,
                          verify_boltzmann_weight, check_strong_compatibility)


def braid3_closure(word):
    """word = list of (pos, letter) with pos in {0,1}; trace closure on 3 strands."""
    strands = ["b0", "b1", "b2"]
    crossings = []
    for i, (pos, name) in enumerate(word):
        kind, first, swap = LETTERS[name]
        l, r = strands[pos], strands[pos + 1]
        o1, o2 = f"o{i}a", f"o{i}b"
        i1, i2 = (l, r) if first == "l" else (r, l)
        crossings.append((kind, i1, i2, o1, o2))
        nl, nr = (o2, o1) if swap else (o1, o2)
        strands[pos], strands[pos + 1] = nl, nr
    rename = {strands[0]: "b0", strands[1]: "b1", strands[2]: "b2"}
    if len(set(rename.values())) != 3 or len(rename) != 3:
        return None
    ids = {}

    def get(v):
        v = rename.get(v, v)
        if v not in ids:
            ids[v] = len(ids)
        return ids[v]

    try:
        return StuckDiagram(tuple(Crossing(k, get(a), get(b), get(c), get(d))
                                  for k, a, b, c, d in crossings))
    except Exception:
        return None


classical = ["X+L", "X+R", "X-L", "X-R"]
stuck = {"+": ["S+A", "S+B"], "-": ["S-A", "S-B"]}

print("-- 4l search over 3-braids --")
targets = {"4l+": ("+", 8, "2u^3+2u+4"), "4l-": ("-", 4, "4")}
for name, (sign, col, phi) in targets.items():
    hit = None
    for stuck_slot in range(5):
        for sletter in stuck[sign]:
            for spos in (0, 1):
                for cls in itertools.product([(p, c) for p in (0, 1) for c in classical], repeat=4):
                    word = list(cls[:stuck_slot]) + [(spos, sletter)] + list(cls[stuck_slot:])
                    d = braid3_closure(word)
                    if d is None or d.components() != 2:
                        continue
                    if invariants(d, s72, w72) == (col, phi):
                        hit = word
                        break
                if hit:
                    break
            if hit:
                break
        if hit:
            break
    print(name, "->", hit)

print("\n-- 7.3 trefoil-derived sweep --")
s73 = make_table_stuquandle(
    8,
    lambda x, y: 5 * x + 4 * y,
    lambda x, y: 5 * x + 4 * y,
    lambda x, y: y,
    lambda x, y: 5 * x + 4 * y,
    lambda x, y: x,
    lambda x, y: 4 * x + 5 * y,
)
w73 = WeightTriple(
    4,
    weight_from_polynomial(8, 4, [0, 2, 2]),          # 2x+2y
    weight_from_polynomial(8, 4, [0, 3, 3]),          # 3x+3y
    weight_from_polynomial(8, 4, [0, 1, 1, 1]),       # xy+x+y
)
from stuq.algebra import verify_stuquandle
print("7.3 verify:", verify_stuquandle(s73).passed,
      "weights:", verify_boltzmann_weight(s73, w73).passed,
      "compat:", check_strong_compatibility(s73, w73))

WANT = {"4", "2v+2", "2v^2+2", "2v^3+2", "2v^2w^3+2", "2v^3w^2+2",
        "2v^3w^3+2", "2w+2", "2w^2+2"}
results = {}
for base in ("X-L", "X-R", "X+L", "X+R"):
    letters = [base, "S+A", "S+B", "S-A", "S-B"]
    vals = {}
    for word in itertools.product(letters, repeat=3):
        if all(x == base for x in word):
            continue
        d = braid2_closure(list(word))
        if d is None or d.components() != 1:
            continue
        col = len(enumerate_colorings(d, s73))
        p = poly_to_string(state_sum(d, s73, w73, "three"))
        vals.setdefault((col, p), []).append(word)
    strs = {p for (c, p) in vals if c == 4}
    print(base, "covers:", sorted(strs), "missing:", sorted(WANT - strs))
    results[base] = vals

import json
best = results.get("X-L", {})
for (c, p), words in sorted(best.items(), key=lambda kv: kv[0][1]):
    print((c, p), "x", len(words), "e.g.", words[0])
