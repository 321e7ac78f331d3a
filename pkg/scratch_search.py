"""Dev scratch: reconstruct two-bouquet / trefoil-derived diagrams from table values."""
import itertools
import sys

sys.path.insert(0, "src")

from stuq.algebra import FiniteBinOp, Stuquandle, table_from_fn, verify_stuquandle
from stuq.diagram import Crossing, StuckDiagram
from stuq.coloring import enumerate_colorings
from stuq.statesum import state_sum, poly_to_string
from stuq.weights import WeightTriple, weight_from_polynomial, verify_boltzmann_weight


def make_table_stuquandle(n, star, starbar, r1, r2, r3, r4):
    mk = lambda fn: FiniteBinOp(n, table_from_fn(n, fn))
    return Stuquandle(n, mk(star), mk(starbar), mk(r1), mk(r2), mk(r3), mk(r4))


s71 = make_table_stuquandle(
    4,
    lambda x, y: 3 * x + 2 * y,
    lambda x, y: 3 * x + 2 * y,
    lambda x, y: x + 2 * y * y,
    lambda x, y: 2 * x * x + y,
    lambda x, y: 3 * x,
    lambda x, y: 2 * x + y,
)
w71 = WeightTriple(
    4,
    weight_from_polynomial(4, 4, [0, 0, 2, 2]),
    weight_from_polynomial(4, 4, [0, 2, 2]),
    weight_from_polynomial(4, 4, [0, 2]),
)
print("7.1 verify_stuquandle:", verify_stuquandle(s71).passed)
print("7.1 verify_weights:", verify_boltzmann_weight(s71, w71).passed)

s72 = make_table_stuquandle(
    4,
    lambda x, y: x,
    lambda x, y: x,
    lambda x, y: 2 * x + 3 * y,
    lambda x, y: 3 * x + 2 * y,
    lambda x, y: y,
    lambda x, y: x,
)
w72 = WeightTriple(
    4,
    weight_from_polynomial(4, 4, [0, 2, 0, 1, 0, 1]),
    weight_from_polynomial(4, 4, [0, 0, 2, 0, 1, 0]),
    weight_from_polynomial(4, 4, [0, 2, 2]),
)
print("7.2 verify_stuquandle:", verify_stuquandle(s72).passed)
print("7.2 verify_weights:", verify_boltzmann_weight(s72, w72).passed)


LETTERS = {
    "X+L": ("X+", "l", True),
    "X+R": ("X+", "r", False),
    "X-L": ("X-", "l", True),
    "X-R": ("X-", "r", False),
    "S+A": ("S+", "l", False),
    "S+B": ("S+", "r", True),
    "S-A": ("S-", "r", False),
    "S-B": ("S-", "l", True),
}


def braid2_closure(word):
    """Trace closure of a 2-strand word; returns StuckDiagram or None."""
    if not word:
        return None
    crossings = []
    l, r = "b0", "b1"
    for i, name in enumerate(word):
        kind, first, swap = LETTERS[name]
        o1, o2 = f"o{i}a", f"o{i}b"
        i1, i2 = (l, r) if first == "l" else (r, l)
        crossings.append((kind, i1, i2, o1, o2))
        l, r = (o2, o1) if swap else (o1, o2)
    rename = {l: "b0", r: "b1"}
    ids = {}

    def get(v):
        v = rename.get(v, v)
        if v not in ids:
            ids[v] = len(ids)
        return ids[v]

    fixed = [Crossing(kind, get(i1), get(i2), get(o1), get(o2))
             for kind, i1, i2, o1, o2 in crossings]
    try:
        return StuckDiagram(tuple(fixed))
    except Exception:
        return None


def invariants(d, s, w, mode="single"):
    cols = enumerate_colorings(d, s)
    try:
        phi = poly_to_string(state_sum(d, s, w, mode))
    except ValueError as e:
        phi = f"<error>"
    return len(cols), phi


print("\n-- single stuck letter closures --")
for name in ("S+A", "S+B", "S-A", "S-B"):
    d = braid2_closure([name])
    if d is None:
        print(name, "-> invalid")
        continue
    cols = enumerate_colorings(d, s71)
    print(name, "comps", d.components(), "cols71", sorted(cols),
          "phi71", invariants(d, s71, w71), "72:", invariants(d, s72, w72))

print("\n-- three letter closures with one stuck letter (2k- candidates) --")
target_cols = {(0, 0, 0, 0), (1, 3, 3, 1), (2, 2, 2, 2), (3, 1, 1, 3)}
classical = ["X+L", "X+R", "X-L", "X-R"]
stuck_neg = ["S-A", "S-B"]
hits = []
for word in itertools.product(classical + stuck_neg, repeat=3):
    if sum(1 for x in word if x.startswith("S")) != 1:
        continue
    d = braid2_closure(list(word))
    if d is None or d.components() != 1:
        continue
    col71, phi71 = invariants(d, s71, w71)
    if col71 != 4:
        continue
    col72, phi72 = invariants(d, s72, w72)
    cols = enumerate_colorings(d, s71)
    # projections: which 4-subsets of semiarcs give the paper's tuples?
    proj_ok = False
    import itertools as it
    for perm in it.permutations(range(6), 4):
        if {tuple(c[i] for i in perm) for c in cols} == target_cols:
            proj_ok = True
            break
    hits.append((word, phi71, col72, phi72, proj_ok))
for h in hits:
    print(h)
