"""Dev scratch: wide sweep for the 7.3 trefoil-derived diagrams (Col=4 over Z8)."""
import itertools
import sys
from collections import defaultdict

sys.path.insert(0, "src")

from scratch_search import braid2_closure, make_table_stuquandle, LETTERS
from scratch_search3 import braid3_closure, s73, w73
from stuq.coloring import enumerate_colorings, affine_coloring_count
from stuq.statesum import state_sum, poly_to_string

WANT = {"4", "2v+2", "2v^2+2", "2v^3+2", "2v^2w^3+2", "2v^3w^2+2",
        "2v^3w^3+2", "2w+2", "2w^2+2"}

letters = list(LETTERS)
coverage = defaultdict(list)
for length in (1, 2, 3, 4, 5):
    for word in itertools.product(letters, repeat=length):
        if not any(x.startswith("S") for x in word):
            continue
        d = braid2_closure(list(word))
        if d is None or d.components() != 1:
            continue
        if affine_coloring_count(d, 8, 5, 0, 0) != 4:
            continue
        p = poly_to_string(state_sum(d, s73, w73, "three"))
        if p in WANT and len(coverage[p]) < 3:
            coverage[p].append(word)
    got = {k for k in coverage}
    print(f"after length {length}: covered {sorted(got)} missing {sorted(WANT - got)}")
for k in sorted(coverage):
    print(k, "->", coverage[k][:2])
