"""Boltzmann weight triples (phi, phi1, phi2) valued in Z_m, and their checks.

phi contributes at classical crossings, phi1 at positive stuck crossings and
phi2 at negative stuck crossings.  A triple is a valid Boltzmann weight when
it satisfies the eight conditions checked by :func:`verify_boltzmann_weight`;
the strong-compatibility equations gate the two- and three-variable state
sums.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .algebra import Stuquandle

WEIGHT_CONDITIONS = ("1", "2i", "2ii", "3i", "3ii", "3iii", "3iv", "3v")


@dataclass(frozen=True)
class WeightTriple:
    """Three maps X x X -> Z_m stored as n x n tables of residues."""

    m: int
    phi: tuple
    phi1: tuple
    phi2: tuple

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("coefficient modulus must be positive")
        rows = len(self.phi)
        for t in (self.phi, self.phi1, self.phi2):
            if len(t) != rows or any(len(row) != rows for row in t):
                raise ValueError("weight tables must be square and equally sized")
            if any(not (0 <= v < self.m) for row in t for v in row):
                raise ValueError("weight entries must be reduced mod m")

    @property
    def n(self) -> int:
        return len(self.phi)


@dataclass
class WeightReport:
    """Violations are (condition_id, witness) with ids from WEIGHT_CONDITIONS."""

    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def add(self, cond, witness):
        self.violations.append((cond, tuple(witness)))

    def __bool__(self):
        return self.passed


def weight_from_polynomial(n: int, m: int, coeffs) -> tuple:
    """Table for c0 + c1*x + c2*y + c3*x*y + c4*x^2 + c5*y^2 evaluated mod m.

    Shorter coefficient lists are padded with zeros.
    """
    c = list(coeffs) + [0] * (6 - len(coeffs))
    if len(c) != 6:
        raise ValueError("at most six coefficients: 1, x, y, xy, x^2, y^2")
    return tuple(
        tuple((c[0] + c[1] * x + c[2] * y + c[3] * x * y + c[4] * x * x + c[5] * y * y) % m
              for y in range(n))
        for x in range(n)
    )


def zero_weight(n: int, m: int) -> WeightTriple:
    z = weight_from_polynomial(n, m, [0])
    return WeightTriple(m, z, z, z)


def verify_boltzmann_weight(s: Stuquandle, w: WeightTriple,
                            fast_fail: bool = False) -> WeightReport:
    """Exhaustively check conditions 1, 2(i)-(ii) and 3(i)-(v) over Z_m."""
    if w.n != s.n:
        raise ValueError(f"weight tables are {w.n}x{w.n} but the stuquandle has n={s.n}")
    n, m = s.n, w.m
    st, sb = s.star, s.starbar
    r1, r2, r3, r4 = s.r1, s.r2, s.r3, s.r4
    phi, phi1, phi2 = w.phi, w.phi1, w.phi2
    report = WeightReport()

    for x in range(n):
        if phi[x][x] % m != 0:
            report.add("1", (x,))
            if fast_fail:
                return report

    for x, y in product(range(n), repeat=2):
        # 2(i): phi2(y,x) + phi(R3(y,x), R4(y,x)) = phi(x,y) + phi2(x*y, y)
        lhs = phi2[y][x] + phi[r3(y, x)][r4(y, x)]
        rhs = phi[x][y] + phi2[st(x, y)][y]
        if (lhs - rhs) % m:
            report.add("2i", (x, y))
            if fast_fail:
                return report
        # 2(ii): phi1(x,y) + phi(R1(x,y), R2(x,y)) = phi(x,y) + phi1(y, x*y)
        lhs = phi1[x][y] + phi[r1(x, y)][r2(x, y)]
        rhs = phi[x][y] + phi1[y][st(x, y)]
        if (lhs - rhs) % m:
            report.add("2ii", (x, y))
            if fast_fail:
                return report

    for x, y, z in product(range(n), repeat=3):
        # 3(i): 2-cocycle condition for phi
        lhs = phi[x][y] + phi[st(x, y)][z]
        rhs = phi[x][z] + phi[st(x, z)][st(y, z)]
        if (lhs - rhs) % m:
            report.add("3i", (x, y, z))
            if fast_fail:
                return report
        zbx = sb(z, x)
        # 3(ii)
        lhs = phi2[y][zbx] + phi[r3(y, zbx)][x] - phi[zbx][x]
        rhs = phi[y][x] + phi2[st(y, x)][z] - phi[sb(r4(st(y, x), z), x)][x]
        if (lhs - rhs) % m:
            report.add("3ii", (x, y, z))
            if fast_fail:
                return report
        # 3(iii)
        lhs = phi1[zbx][y] + phi[r1(zbx, y)][x] - phi[zbx][x]
        rhs = phi[y][x] + phi1[z][st(y, x)] - phi[sb(r2(z, st(y, x)), x)][x]
        if (lhs - rhs) % m:
            report.add("3iii", (x, y, z))
            if fast_fail:
                return report
        # 3(iv)
        a = r3(y, z)
        lhs = phi[sb(x, a)][z] - phi[sb(x, a)][a]
        rhs = phi[x][r4(y, z)] - phi[sb(st(x, r4(y, z)), y)][y]
        if (lhs - rhs) % m:
            report.add("3iv", (x, y, z))
            if fast_fail:
                return report
        # 3(v)
        a = r1(z, y)
        lhs = phi[sb(x, a)][z] - phi[sb(x, a)][a]
        rhs = phi[x][r2(z, y)] - phi[sb(st(x, r2(z, y)), y)][y]
        if (lhs - rhs) % m:
            report.add("3v", (x, y, z))
            if fast_fail:
                return report
    return report


def is_quandle_2cocycle(star, m: int, phi) -> bool:
    """Independent check of the classical 2-cocycle conditions for phi alone."""
    n = star.n
    if any(phi[x][x] % m for x in range(n)):
        return False
    for x, y, z in product(range(n), repeat=3):
        if (phi[x][y] + phi[star(x, y)][z] - phi[x][z] - phi[star(x, z)][star(y, z)]) % m:
            return False
    return True


def check_strong_compatibility(s: Stuquandle, w: WeightTriple):
    """Return (phi1_compatible, phi2_compatible) per the four compatibility equations."""
    n, m = s.n, w.m
    st, sb = s.star, s.starbar
    phi1, phi2 = w.phi1, w.phi2
    ok1 = all((phi1[x][y] - phi1[y][st(x, y)]) % m == 0
              for x, y in product(range(n), repeat=2))
    if ok1:
        ok1 = all((phi1[sb(z, x)][y] - phi1[z][st(y, x)]) % m == 0
                  for x, y, z in product(range(n), repeat=3))
    ok2 = all((phi2[y][x] - phi2[st(x, y)][y]) % m == 0
              for x, y in product(range(n), repeat=2))
    if ok2:
        ok2 = all((phi2[y][sb(z, x)] - phi2[st(y, x)][z]) % m == 0
                  for x, y, z in product(range(n), repeat=3))
    return ok1, ok2


def compatibility_failures(s: Stuquandle, w: WeightTriple):
    """Names of the failed compatibility equations, for error messages."""
    n, m = s.n, w.m
    st, sb = s.star, s.starbar
    failed = []
    if any((w.phi1[x][y] - w.phi1[y][st(x, y)]) % m
           for x, y in product(range(n), repeat=2)):
        failed.append("phi1: phi1(x,y) = phi1(y, x*y)")
    elif any((w.phi1[sb(z, x)][y] - w.phi1[z][st(y, x)]) % m
             for x, y, z in product(range(n), repeat=3)):
        failed.append("phi1: phi1(z bar* x, y) = phi1(z, y*x)")
    if any((w.phi2[y][x] - w.phi2[st(x, y)][y]) % m
           for x, y in product(range(n), repeat=2)):
        failed.append("phi2: phi2(y,x) = phi2(x*y, y)")
    elif any((w.phi2[y][sb(z, x)] - w.phi2[st(y, x)][z]) % m
             for x, y, z in product(range(n), repeat=3)):
        failed.append("phi2: phi2(y, z bar* x) = phi2(y*x, z)")
    return failed


def _poly_space(m: int, degree: int):
    """Coefficient tuples (c0..c5) with the quadratic part zeroed below degree 2."""
    if degree >= 2:
        return product(range(m), repeat=6)
    if degree == 1:
        return (c + (0, 0, 0) for c in product(range(m), repeat=3))
    return ((c, 0, 0, 0, 0, 0) for c in range(m))


def _phi_alone_ok(s, m, phi) -> bool:
    return is_quandle_2cocycle(s.star, m, phi)


def _phi1_conditions_ok(s, m, phi, phi1) -> bool:
    n = s.n
    st, sb, r1, r2 = s.star, s.starbar, s.r1, s.r2
    for x, y in product(range(n), repeat=2):
        if (phi1[x][y] + phi[r1(x, y)][r2(x, y)] - phi[x][y] - phi1[y][st(x, y)]) % m:
            return False
    for x, y, z in product(range(n), repeat=3):
        zbx = sb(z, x)
        if (phi1[zbx][y] + phi[r1(zbx, y)][x] - phi[zbx][x]
                - phi[y][x] - phi1[z][st(y, x)] + phi[sb(r2(z, st(y, x)), x)][x]) % m:
            return False
        a = r1(z, y)
        if (phi[sb(x, a)][z] - phi[sb(x, a)][a]
                - phi[x][r2(z, y)] + phi[sb(st(x, r2(z, y)), y)][y]) % m:
            return False
    return True


def _phi2_conditions_ok(s, m, phi, phi2) -> bool:
    n = s.n
    st, sb, r3, r4 = s.star, s.starbar, s.r3, s.r4
    for x, y in product(range(n), repeat=2):
        if (phi2[y][x] + phi[r3(y, x)][r4(y, x)] - phi[x][y] - phi2[st(x, y)][y]) % m:
            return False
    for x, y, z in product(range(n), repeat=3):
        zbx = sb(z, x)
        if (phi2[y][zbx] + phi[r3(y, zbx)][x] - phi[zbx][x]
                - phi[y][x] - phi2[st(y, x)][z] + phi[sb(r4(st(y, x), z), x)][x]) % m:
            return False
        a = r3(y, z)
        if (phi[sb(x, a)][z] - phi[sb(x, a)][a]
                - phi[x][r4(y, z)] + phi[sb(st(x, r4(y, z)), y)][y]) % m:
            return False
    return True


def search_boltzmann_weights(s: Stuquandle, m: int, degree: int = 2,
                             full_tables: bool = False) -> list[WeightTriple]:
    """Brute-force valid weight triples over polynomial specs up to the degree bound.

    The Def-6.1 conditions never couple phi1 with phi2, so the search factors:
    candidate phis are filtered by the cocycle conditions, then phi1 and phi2
    are filtered independently against each surviving phi.  Results come back
    in lexicographic order of the (phi, phi1, phi2) coefficient tuples.

    ``full_tables`` searches all m^(n^2) tables per map instead; only allowed
    for n*n <= 9.
    """
    n = s.n
    if full_tables:
        if n * n > 9:
            raise ValueError("full table search is limited to n*n <= 9")
        space = [tuple(tuple(row) for row in t)
                 for t in _all_tables(n, m)]
        phis = [t for t in space if _phi_alone_ok(s, m, t)]
        out = []
        for phi in phis:
            p1s = [t for t in space if _phi1_conditions_ok(s, m, phi, t)]
            p2s = [t for t in space if _phi2_conditions_ok(s, m, phi, t)]
            out.extend(WeightTriple(m, phi, p1, p2) for p1 in p1s for p2 in p2s)
        return out

    specs = list(_poly_space(m, degree))
    tables = {c: weight_from_polynomial(n, m, c) for c in specs}
    phis = [c for c in specs if _phi_alone_ok(s, m, tables[c])]
    out = []
    for cphi in phis:
        phi = tables[cphi]
        p1s = [c for c in specs if _phi1_conditions_ok(s, m, phi, tables[c])]
        if not p1s:
            continue
        p2s = [c for c in specs if _phi2_conditions_ok(s, m, phi, tables[c])]
        out.extend(WeightTriple(m, phi, tables[c1], tables[c2])
                   for c1 in p1s for c2 in p2s)
    return out


def _all_tables(n, m):
    for flat in product(range(m), repeat=n * n):
        yield tuple(flat[i * n:(i + 1) * n] for i in range(n))


# -- weight file format --------------------------------------------------------

def weight_from_dict(data: dict, n: int) -> WeightTriple:
    """Parse the weight file form: each map is {"poly": [..]} or {"table": [[..]]}."""
    m = data["m"]
    tables = {}
    for name in ("phi", "phi1", "phi2"):
        entry = data[name]
        if "poly" in entry:
            tables[name] = weight_from_polynomial(n, m, entry["poly"])
        elif "table" in entry:
            tables[name] = tuple(tuple(v % m for v in row) for row in entry["table"])
        else:
            raise ValueError(f"{name}: expected a 'poly' or 'table' entry")
    return WeightTriple(m, tables["phi"], tables["phi1"], tables["phi2"])
