"""Finite quandles, singquandles and stuquandles as dense operation tables.

A stuquandle is a set X with six binary operations (*, *bar, R1, R2, R3, R4).
The carrier is always {0..n-1} and every operation is stored as an n x n
table, so all axiom checks are exhaustive loops over pairs/triples.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from itertools import product

Table = tuple  # tuple of n row-tuples with entries in {0..n-1}


class MalformedTableError(ValueError):
    """An operation table has the wrong shape or an out-of-range entry."""


@dataclass(frozen=True)
class FiniteBinOp:
    """A binary operation on {0..n-1} given by a dense table."""

    n: int
    table: Table

    def __post_init__(self):
        if self.n <= 0:
            raise MalformedTableError("carrier size must be positive")
        if len(self.table) != self.n:
            raise MalformedTableError(f"expected {self.n} rows, got {len(self.table)}")
        for row in self.table:
            if len(row) != self.n:
                raise MalformedTableError("rows must all have length n")
            for v in row:
                if not (0 <= v < self.n):
                    raise MalformedTableError(f"table entry {v} out of range 0..{self.n - 1}")

    def __call__(self, x, y):
        return self.table[x][y]


def table_from_fn(n, fn) -> Table:
    return tuple(tuple(fn(x, y) % n for y in range(n)) for x in range(n))


@dataclass(frozen=True)
class Stuquandle:
    """Six-operation structure (star, starbar, r1, r2, r3, r4) on {0..n-1}.

    Construction does not verify the axioms; run :func:`verify_stuquandle`
    (constructors in this module do so where the family guarantees it).
    """

    n: int
    star: FiniteBinOp
    starbar: FiniteBinOp
    r1: FiniteBinOp
    r2: FiniteBinOp
    r3: FiniteBinOp
    r4: FiniteBinOp

    def __post_init__(self):
        for op in (self.star, self.starbar, self.r1, self.r2, self.r3, self.r4):
            if op.n != self.n:
                raise MalformedTableError("all operation tables must share the carrier size")

    def ops(self):
        return {
            "star": self.star, "starbar": self.starbar,
            "r1": self.r1, "r2": self.r2, "r3": self.r3, "r4": self.r4,
        }


@dataclass
class AxiomReport:
    """Outcome of an exhaustive axiom check.

    ``violations`` holds (axiom_id, witness) pairs, where the witness is the
    tuple of carrier elements at which the axiom fails.  ``passed`` is true
    exactly when the list is empty.
    """

    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, axiom_id, witness):
        self.violations.append((axiom_id, tuple(witness)))

    def __bool__(self):
        return self.passed


def verify_quandle(op: FiniteBinOp, fast_fail: bool = False) -> AxiomReport:
    """Check the three quandle axioms for a single operation table.

    (i) idempotence, (ii) right invertibility (each column is a permutation),
    (iii) right self-distributivity.
    """
    n, t = op.n, op.table
    report = AxiomReport()
    for x in range(n):
        if t[x][x] != x:
            report.add("i", (x,))
            if fast_fail:
                return report
    for y in range(n):
        seen = {}
        for x in range(n):
            z = t[x][y]
            if z in seen:
                report.add("ii", (seen[z], x, y))
                if fast_fail:
                    return report
            else:
                seen[z] = x
    for x, y, z in product(range(n), repeat=3):
        if t[t[x][y]][z] != t[t[x][z]][t[y][z]]:
            report.add("iii", (x, y, z))
            if fast_fail:
                return report
    return report


def verify_inverse_pair(star: FiniteBinOp, starbar: FiniteBinOp,
                        fast_fail: bool = False) -> AxiomReport:
    """Check that star and starbar are mutually inverse in the right slot."""
    n = star.n
    report = AxiomReport()
    for x, y in product(range(n), repeat=2):
        if starbar(star(x, y), y) != x:
            report.add("inv", (x, y))
            if fast_fail:
                return report
        if star(starbar(x, y), y) != x:
            report.add("inv", (x, y))
            if fast_fail:
                return report
    return report


def _check_singquandle_eqs(star, starbar, r1, r2, report, fast_fail):
    n = star.n
    for x, y in product(range(n), repeat=2):
        # (4)  R2(x,y) = R1(y, x*y)
        if r2(x, y) != r1(y, star(x, y)):
            report.add("4", (x, y))
            if fast_fail:
                return
        # (5)  R1(x,y)*R2(x,y) = R2(y, x*y)
        if star(r1(x, y), r2(x, y)) != r2(y, star(x, y)):
            report.add("5", (x, y))
            if fast_fail:
                return
    for x, y, z in product(range(n), repeat=3):
        # (1)  R1(x bar* y, z)*y = R1(x, z*y)
        if star(r1(starbar(x, y), z), y) != r1(x, star(z, y)):
            report.add("1", (x, y, z))
            if fast_fail:
                return
        # (2)  R2(x bar* y, z) = R2(x, z*y) bar* y
        if r2(starbar(x, y), z) != starbar(r2(x, star(z, y)), y):
            report.add("2", (x, y, z))
            if fast_fail:
                return
        # (3)  (y bar* R1(x,z))*x = (y*R2(x,z)) bar* z
        if star(starbar(y, r1(x, z)), x) != starbar(star(y, r2(x, z)), z):
            report.add("3", (x, y, z))
            if fast_fail:
                return


def _check_stuquandle_eqs(star, starbar, r3, r4, report, fast_fail):
    n = star.n
    for x, y in product(range(n), repeat=2):
        # (6)  R3(y,x)*R4(y,x) = R4(x*y, y)
        if star(r3(y, x), r4(y, x)) != r4(star(x, y), y):
            report.add("6", (x, y))
            if fast_fail:
                return
        # (7)  R4(y,x) = R3(x*y, y)
        if r4(y, x) != r3(star(x, y), y):
            report.add("7", (x, y))
            if fast_fail:
                return
    for x, y, z in product(range(n), repeat=3):
        # (8)  R3(y*x, z) = R3(y, z bar* x)*x
        if r3(star(y, x), z) != star(r3(y, starbar(z, x)), x):
            report.add("8", (x, y, z))
            if fast_fail:
                return
        # (9)  R4(y, z bar* x) = R4(y*x, z) bar* x
        if r4(y, starbar(z, x)) != starbar(r4(star(y, x), z), x):
            report.add("9", (x, y, z))
            if fast_fail:
                return
        # (10) (x*R4(y,z)) bar* y = (x bar* R3(y,z))*z
        if starbar(star(x, r4(y, z)), y) != star(starbar(x, r3(y, z)), z):
            report.add("10", (x, y, z))
            if fast_fail:
                return


def verify_singquandle(star: FiniteBinOp, starbar: FiniteBinOp,
                       r1: FiniteBinOp, r2: FiniteBinOp,
                       fast_fail: bool = False) -> AxiomReport:
    """Check the five singquandle equations on top of the quandle axioms.

    Raises ValueError when star is not a quandle (the singquandle equations
    are not meaningful in that case).
    """
    base = verify_quandle(star, fast_fail=fast_fail)
    if not base.passed:
        raise ValueError(f"star operation fails quandle axioms: {base.violations[:3]}")
    report = verify_inverse_pair(star, starbar, fast_fail=fast_fail)
    if fast_fail and not report.passed:
        return report
    _check_singquandle_eqs(star, starbar, r1, r2, report, fast_fail)
    return report


def verify_stuquandle(s: Stuquandle, fast_fail: bool = False) -> AxiomReport:
    """Run every layer of checks: quandle, inverse pair, eqs (1)-(5), eqs (6)-(10).

    Violations are tagged with the axiom/equation identifier ("i".."iii",
    "inv", "1".."10") and a witness tuple.
    """
    report = AxiomReport()
    quandle = verify_quandle(s.star, fast_fail=fast_fail)
    report.violations.extend(quandle.violations)
    if fast_fail and report.violations:
        return report
    inv = verify_inverse_pair(s.star, s.starbar, fast_fail=fast_fail)
    report.violations.extend(inv.violations)
    if fast_fail and report.violations:
        return report
    _check_singquandle_eqs(s.star, s.starbar, s.r1, s.r2, report, fast_fail)
    if fast_fail and report.violations:
        return report
    _check_stuquandle_eqs(s.star, s.starbar, s.r3, s.r4, report, fast_fail)
    return report


def make_affine_stuquandle(n: int, a: int, b: int, e: int) -> Stuquandle:
    """Affine stuquandle on Z_n: x*y = ax+(1-a)y with R-maps driven by b and e.

    Requires gcd(a, n) = 1.  Parameters are reduced mod n.  The family always
    satisfies the axioms, which the test suite confirms exhaustively.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    a, b, e = a % n, b % n, e % n
    if math.gcd(a, n) != 1:
        raise ValueError(f"a={a} is not invertible mod {n}")
    ai = pow(a, -1, n)
    mk = lambda fn: FiniteBinOp(n, table_from_fn(n, fn))
    return Stuquandle(
        n=n,
        star=mk(lambda x, y: a * x + (1 - a) * y),
        starbar=mk(lambda x, y: ai * x + (1 - ai) * y),
        r1=mk(lambda x, y: b * x + (1 - b) * y),
        r2=mk(lambda x, y: a * (1 - b) * x + (1 - a * (1 - b)) * y),
        r3=mk(lambda x, y: (1 - e) * x + e * y),
        r4=mk(lambda x, y: (1 - a * (1 - e)) * x + a * (1 - e) * y),
    )


def make_alexander_stuquandle(n: int, t: int, v: int,
                              a: int, b: int, c: int,
                              d: int, e: int, f: int) -> Stuquandle:
    """Alexander-style stuquandle on Z_n with concrete unit t and element v.

    R1/R2 are driven by alpha1 = at+bv+ctv and R3/R4 by alpha2 = dt+fv+etv.
    Unlike the affine family this one is not guaranteed to satisfy the axioms
    for every parameter choice (v may be a zero divisor), so the result is
    re-verified and a ValueError raised when a violation exists.
    """
    if n < 1:
        raise ValueError("modulus must be positive")
    t, v = t % n, v % n
    if math.gcd(t, n) != 1:
        raise ValueError(f"t={t} is not invertible mod {n}")
    ti = pow(t, -1, n)
    alpha1 = (a * t + b * v + c * t * v) % n
    alpha2 = (d * t + f * v + e * t * v) % n
    mk = lambda fn: FiniteBinOp(n, table_from_fn(n, fn))
    s = Stuquandle(
        n=n,
        star=mk(lambda x, y: t * x + (1 - t) * y),
        starbar=mk(lambda x, y: ti * x + (1 - ti) * y),
        r1=mk(lambda x, y: alpha1 * x + (1 - alpha1) * y),
        r2=mk(lambda x, y: t * (1 - alpha1) * x + (1 - t * (1 - alpha1)) * y),
        r3=mk(lambda x, y: (1 - alpha2) * x + alpha2 * y),
        r4=mk(lambda x, y: (1 - t * (1 - alpha2)) * x + t * (1 - alpha2) * y),
    )
    report = verify_stuquandle(s, fast_fail=True)
    if not report.passed:
        raise ValueError(f"parameters do not yield a stuquandle: {report.violations[0]}")
    return s


def enumerate_affine_stuquandles(n: int):
    """All (a, b, e) with a invertible mod n, in lexicographic order."""
    if n < 2:
        raise ValueError("need n >= 2")
    units = [a for a in range(n) if math.gcd(a, n) == 1]
    return [(a, b, e) for a in units for b in range(n) for e in range(n)]


# -- conjugation singquandles on finite groups --------------------------------

@dataclass(frozen=True)
class FiniteGroup:
    """Multiplication table of a finite group; element 0 need not be the identity.

    ``labels`` documents the element ordering used to build the table.
    """

    n: int
    mult: Table
    labels: tuple = ()

    def __post_init__(self):
        FiniteBinOp(self.n, self.mult)  # shape/range check

    @property
    def identity(self) -> int:
        for e in range(self.n):
            if all(self.mult[e][x] == x and self.mult[x][e] == x for x in range(self.n)):
                return e
        raise ValueError("multiplication table has no identity")

    def inv(self, x: int) -> int:
        e = self.identity
        for y in range(self.n):
            if self.mult[x][y] == e:
                return y
        raise ValueError(f"element {x} has no inverse")

    def mul(self, *xs: int) -> int:
        acc = self.identity
        for x in xs:
            acc = self.mult[acc][x]
        return acc

    def power(self, x: int, k: int) -> int:
        acc = self.identity
        for _ in range(k):
            acc = self.mult[acc][x]
        return acc


def cyclic_group(n: int) -> FiniteGroup:
    return FiniteGroup(n, table_from_fn(n, lambda x, y: x + y),
                       labels=tuple(range(n)))


def symmetric_group(n: int) -> FiniteGroup:
    """S_n with elements ordered lexicographically as permutation tuples.

    Product pq acts as "apply q, then p" on positions.
    """
    from itertools import permutations
    perms = sorted(permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    size = len(perms)
    mult = tuple(
        tuple(index[tuple(p[q[i]] for i in range(n))] for q in perms)
        for p in perms
    )
    return FiniteGroup(size, mult, labels=tuple(perms))


def dihedral_group(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; element i<n is rotation r^i, n+i is r^i s."""
    size = 2 * n

    def mul(x, y):
        rx, sx = x % n, x >= n
        ry, sy = y % n, y >= n
        # (r^a s^e)(r^b s^f): s r^b = r^-b s
        if not sx:
            r, s = (rx + ry) % n, sy
        else:
            r, s = (rx - ry) % n, not sy
        return r + (n if s else 0)

    return FiniteGroup(size, tuple(tuple(mul(x, y) for y in range(size)) for x in range(size)),
                       labels=tuple(range(size)))


CONJUGATION_VARIANTS = (1, 2, 3, 4, 5)


def make_conjugation_singquandle(group: FiniteGroup, variant: int, exponent: int = 1):
    """Conjugation singquandle on a group: x*y = y^-1 x y plus one of five (R1,R2) pairs.

    Variant 5 additionally takes the exponent parameter (>= 1).  Returns
    (star, starbar, r1, r2) as FiniteBinOp tables.
    """
    if variant not in CONJUGATION_VARIANTS:
        raise ValueError(f"variant must be one of {CONJUGATION_VARIANTS}")
    if variant == 5 and exponent < 1:
        raise ValueError("variant 5 needs exponent >= 1")
    g = group
    n = g.n
    star = lambda x, y: g.mul(g.inv(y), x, y)
    starbar = lambda x, y: g.mul(y, x, g.inv(y))
    if variant == 1:
        r1 = lambda x, y: x
        r2 = lambda x, y: y
    elif variant == 2:
        r1 = lambda x, y: g.mul(x, y, x, g.inv(y), g.inv(x))
        r2 = lambda x, y: g.mul(x, y, g.inv(x))
    elif variant == 3:
        r1 = lambda x, y: g.mul(g.inv(y), x, y)
        r2 = lambda x, y: g.mul(g.inv(y), g.inv(x), y, x, y)
    elif variant == 4:
        r1 = lambda x, y: g.mul(x, g.inv(y), g.inv(x), y, x)
        r2 = lambda x, y: g.mul(g.inv(x), g.inv(y), x, y, y)
    else:
        r1 = lambda x, y: g.mul(y, g.power(g.mul(g.inv(x), y), exponent))
        r2 = lambda x, y: g.mul(g.power(g.mul(g.inv(y), x), exponent + 1), y)
    tab = lambda fn: FiniteBinOp(n, tuple(tuple(fn(x, y) for y in range(n)) for x in range(n)))
    return tab(star), tab(starbar), tab(r1), tab(r2)


# -- stuquandle file format ----------------------------------------------------

def stuquandle_to_json(s: Stuquandle) -> str:
    payload = {"n": s.n}
    payload.update({name: [list(row) for row in op.table] for name, op in s.ops().items()})
    return json.dumps(payload)


def stuquandle_from_dict(data: dict) -> Stuquandle:
    """Accepts either the six-table form or the affine shorthand."""
    if "affine" in data:
        aff = data["affine"]
        return make_affine_stuquandle(aff["n"], aff["a"], aff["b"], aff["e"])
    n = data["n"]
    ops = {}
    for name in ("star", "starbar", "r1", "r2", "r3", "r4"):
        if name not in data:
            raise MalformedTableError(f"missing operation table {name!r}")
        ops[name] = FiniteBinOp(n, tuple(tuple(row) for row in data[name]))
    return Stuquandle(n=n, **ops)


def stuquandle_from_json(text: str) -> Stuquandle:
    return stuquandle_from_dict(json.loads(text))
