"""Boltzmann weights of colorings and the state-sum polynomial invariants.

Contribution rules (exponents live in Z_m):

* classical positive:  +phi(under-in, over-in)
* classical negative:  -phi(under-out, over-in)   (an R2 pair cancels exactly)
* stuck positive:      +phi1(in1, in2)
* stuck negative:      +phi2(in1, in2)

The single-variable invariant sums u^(total weight); the two-variable forms
additionally track the phi1 (variable v) or phi2 (variable w) partial sums;
the three-variable form splits the exponent into (phi, phi1, phi2) parts.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .algebra import Stuquandle
from .coloring import enumerate_colorings, _crossing_rules
from .diagram import (CLASSICAL_NEG, CLASSICAL_POS, STUCK_NEG, STUCK_POS,
                      StuckDiagram)
from .weights import WeightTriple, check_strong_compatibility, compatibility_failures

MODES = ("single", "two_v", "two_w", "three")


@dataclass(frozen=True)
class BWVector:
    """Per-coloring weight, split by contribution type; all values mod m."""

    bw_phi: int
    bw_phi1: int
    bw_phi2: int
    m: int

    @property
    def bw_total(self) -> int:
        return (self.bw_phi + self.bw_phi1 + self.bw_phi2) % self.m


def _check_coloring(d: StuckDiagram, s: Stuquandle, coloring) -> None:
    if len(coloring) != d.slots:
        raise ValueError(f"coloring has {len(coloring)} entries, diagram needs {d.slots}")
    for c in d.crossings:
        f1, f2 = _crossing_rules(s, c.kind)
        if (coloring[c.out1] != f1(coloring[c.in1], coloring[c.in2])
                or coloring[c.out2] != f2(coloring[c.in1], coloring[c.in2])):
            raise ValueError(f"assignment violates the rules at crossing {c}")


def boltzmann_weight(d: StuckDiagram, s: Stuquandle, coloring,
                     w: WeightTriple) -> BWVector:
    """Sum the crossing contributions of a valid coloring."""
    _check_coloring(d, s, coloring)
    m = w.m
    bw_phi = bw_phi1 = bw_phi2 = 0
    for c in d.crossings:
        if c.kind == CLASSICAL_POS:
            bw_phi += w.phi[coloring[c.in1]][coloring[c.in2]]
        elif c.kind == CLASSICAL_NEG:
            bw_phi -= w.phi[coloring[c.out1]][coloring[c.in2]]
        elif c.kind == STUCK_POS:
            bw_phi1 += w.phi1[coloring[c.in1]][coloring[c.in2]]
        else:
            bw_phi2 += w.phi2[coloring[c.in1]][coloring[c.in2]]
    return BWVector(bw_phi % m, bw_phi1 % m, bw_phi2 % m, m)


@dataclass(frozen=True)
class StateSumPolynomial:
    """Finitely supported map from exponent tuples (in Z_m^k) to multiplicities."""

    variables: tuple
    terms: tuple  # sorted ((exponents), coefficient) pairs
    m: int

    @property
    def arity(self) -> int:
        return len(self.variables)

    def coefficient_sum(self) -> int:
        return sum(coeff for _, coeff in self.terms)

    def as_dict(self) -> dict:
        return dict(self.terms)


def _mode_exponent(mode: str, bw: BWVector):
    if mode == "single":
        return (bw.bw_total,)
    if mode == "two_v":
        return (bw.bw_total, bw.bw_phi1)
    if mode == "two_w":
        return (bw.bw_total, bw.bw_phi2)
    return (bw.bw_phi, bw.bw_phi1, bw.bw_phi2)


_MODE_VARS = {
    "single": ("u",),
    "two_v": ("u", "v"),
    "two_w": ("u", "w"),
    "three": ("u", "v", "w"),
}


def state_sum(d: StuckDiagram, s: Stuquandle, w: WeightTriple,
              mode: str = "single") -> StateSumPolynomial:
    """State-sum polynomial over all colorings of d.

    Modes using v require phi1 to be strongly compatible with phi, and modes
    using w require the same of phi2; violations raise with the failing
    equation named.
    """
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}")
    if mode != "single":
        ok1, ok2 = check_strong_compatibility(s, w)
        need1 = mode in ("two_v", "three")
        need2 = mode in ("two_w", "three")
        if (need1 and not ok1) or (need2 and not ok2):
            failures = compatibility_failures(s, w)
            relevant = [f for f in failures
                        if (need1 and f.startswith("phi1")) or (need2 and f.startswith("phi2"))]
            raise ValueError(f"mode {mode!r} needs strong compatibility; failed: "
                             + "; ".join(relevant))
    counter = Counter()
    for coloring in enumerate_colorings(d, s):
        bw = boltzmann_weight(d, s, coloring, w)
        counter[_mode_exponent(mode, bw)] += 1
    terms = tuple(sorted(counter.items()))
    return StateSumPolynomial(_MODE_VARS[mode], terms, w.m)


def poly_to_string(p: StateSumPolynomial) -> str:
    """Canonical string: terms sorted by descending exponent tuple.

    Zero exponents drop their variable, exponent one drops the caret, and a
    bare constant term keeps its coefficient (e.g. "2u^2+2", "w+2", "4").
    """
    if not p.terms:
        return "0"
    pieces = []
    for exps, coeff in sorted(p.terms, reverse=True):
        factors = "".join(
            v if e == 1 else f"{v}^{e}"
            for v, e in zip(p.variables, exps) if e != 0
        )
        if factors:
            pieces.append(factors if coeff == 1 else f"{coeff}{factors}")
        else:
            pieces.append(str(coeff))
    return "+".join(pieces)


def state_sum_string(d, s, w, mode="single") -> str:
    return poly_to_string(state_sum(d, s, w, mode))


def collapse_to_single(p: StateSumPolynomial) -> StateSumPolynomial:
    """Map each three-variable term (a,b,c) to u^(a+b+c); matches mode "single"."""
    if p.variables != ("u", "v", "w"):
        raise ValueError("collapse applies to three-variable polynomials")
    counter = Counter()
    for (a, b, c), coeff in p.terms:
        counter[((a + b + c) % p.m,)] += coeff
    return StateSumPolynomial(("u",), tuple(sorted(counter.items())), p.m)


# -- independent classical cocycle sum -------------------------------------------
#
# Used as an oracle: on diagrams without stuck crossings and with phi a
# quandle 2-cocycle, the state sum must agree with the textbook cocycle
# invariant computed from scratch (its own coloring loop included).

def cjkls_state_sum(d: StuckDiagram, s: Stuquandle, m: int, phi) -> Counter:
    """Multiset of total phi-weights over all colorings of a classical diagram."""
    if any(c.stuck for c in d.crossings):
        raise ValueError("the classical cocycle sum only applies to classical diagrams")
    from itertools import product as iproduct
    n = s.n
    counter = Counter()
    count = d.semiarc_count

    def consistent(assign):
        for c in d.crossings:
            x, y = assign[c.in1], assign[c.in2]
            if assign[c.out2] != y:
                return False
            expected = s.star(x, y) if c.kind == CLASSICAL_POS else s.starbar(x, y)
            if assign[c.out1] != expected:
                return False
        return True

    for assign in iproduct(range(n), repeat=count):
        if not consistent(assign):
            continue
        total = 0
        for c in d.crossings:
            if c.kind == CLASSICAL_POS:
                total += phi[assign[c.in1]][assign[c.in2]]
            else:
                total -= phi[assign[c.out1]][assign[c.in2]]
        counter[total % m] += 1
    if d.free_loops:
        scaled = Counter()
        for k, v in counter.items():
            scaled[k] = v * n ** d.free_loops
        counter = scaled
    return counter
