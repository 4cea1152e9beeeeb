"""Exact Dirichlet-series coefficients and the identities between them.

For a lattice L and sign +-, the coefficient at index n is

    a_n = sum over SL2(Z)-orbits in L with index n of 1 / |stabilizer|,

an element of (1/3) Z.  The index is |P| for odd-numbered lattices and
|P| / 27 for even-numbered ones.  Identities mixing the two signs live in the
quadratic ring Z[sqrt(3)], implemented exactly as pairs of Fractions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .enumeration import (
    EVEN_LATTICES,
    ClassRecord,
    MasterClasses,
    _signed_selection,
    master_classes,
)
from .forms import discriminant, lattice_member
from .golden import GoldenTable, golden_table

ALL_PAIRS = tuple((lat, sign) for lat in range(1, 11) for sign in ("+", "-"))


# ---------------------------------------------------------------------------
# exact arithmetic in Z[sqrt(3)] (for the sqrt(3)-weighted combinations)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Qrt3:
    """Exact element a + b*sqrt(3) of Q(sqrt(3))."""

    a: Fraction = Fraction(0)
    b: Fraction = Fraction(0)

    def __add__(self, other: "Qrt3") -> "Qrt3":
        return Qrt3(self.a + other.a, self.b + other.b)

    def __sub__(self, other: "Qrt3") -> "Qrt3":
        return Qrt3(self.a - other.a, self.b - other.b)

    def __neg__(self) -> "Qrt3":
        return Qrt3(-self.a, -self.b)

    def __mul__(self, other: "Qrt3") -> "Qrt3":
        return Qrt3(
            self.a * other.a + 3 * self.b * other.b,
            self.a * other.b + self.b * other.a,
        )

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __str__(self) -> str:
        return f"{self.a} + {self.b}*sqrt(3)"


SQRT3 = Qrt3(Fraction(0), Fraction(1))


# ---------------------------------------------------------------------------
# coefficient series
# ---------------------------------------------------------------------------


@dataclass
class CoefficientSeries:
    """Exact coefficients a_n, n = 1..max_n, of one (lattice, sign) series."""

    lattice: int
    sign: str
    max_n: int
    coeffs: dict = field(default_factory=dict)       # n -> Fraction (weighted)
    counts: dict = field(default_factory=dict)       # n -> int (orbit count)
    ird_coeffs: dict = field(default_factory=dict)   # irreducible part
    rd_coeffs: dict = field(default_factory=dict)    # reducible part

    def coeff(self, n: int) -> Fraction:
        if not 1 <= n <= self.max_n:
            raise ValueError(f"n = {n} outside computed range 1..{self.max_n}")
        return self.coeffs.get(n, Fraction(0))

    def count(self, n: int) -> int:
        if not 1 <= n <= self.max_n:
            raise ValueError(f"n = {n} outside computed range 1..{self.max_n}")
        return self.counts.get(n, 0)


def build_series(records: list, max_n: int) -> CoefficientSeries:
    """Aggregate ClassRecords (all one lattice and sign) into a series."""
    if not records:
        raise ValueError("cannot build a series from an empty record list")
    lattice = records[0].lattice
    sign = records[0].sign
    seen = set()
    out = CoefficientSeries(lattice, sign, max_n)
    for r in records:
        if r.lattice != lattice or r.sign != sign:
            raise ValueError("records mix lattices or signs")
        if r.n > max_n:
            continue
        key = (r.n, tuple(r.rep))
        if key in seen:
            raise AssertionError(f"duplicate class record {key} for (L{lattice}, {sign})")
        seen.add(key)
        w = Fraction(1, r.stab_order)
        out.coeffs[r.n] = out.coeffs.get(r.n, Fraction(0)) + w
        out.counts[r.n] = out.counts.get(r.n, 0) + 1
        bucket = out.ird_coeffs if r.irreducible else out.rd_coeffs
        bucket[r.n] = bucket.get(r.n, Fraction(0)) + w
    return out


def _series_from_master(
    master: MasterClasses, lattice: int, sign: str, max_n: int
) -> CoefficientSeries:
    mask, n = _signed_selection(master, lattice, sign, max_n)
    out = CoefficientSeries(lattice, sign, max_n)
    sel = np.where(mask)[0]
    ns = n[sel]
    stab = master.stab[sel]
    ird = master.irred[sel]
    for subset, weight in ((stab == 1, Fraction(1)), (stab == 3, Fraction(1, 3))):
        for irdval, bucket in ((True, out.ird_coeffs), (False, out.rd_coeffs)):
            pick = subset & (ird == irdval)
            if not pick.any():
                continue
            cnt = np.bincount(ns[pick], minlength=max_n + 1)
            for nv in np.nonzero(cnt)[0]:
                k = int(cnt[nv])
                nv = int(nv)
                bucket[nv] = bucket.get(nv, Fraction(0)) + weight * k
                out.coeffs[nv] = out.coeffs.get(nv, Fraction(0)) + weight * k
                out.counts[nv] = out.counts.get(nv, 0) + k
    return out


def build_all_series(max_n: int, workers: int = 1) -> dict:
    """All twenty series (lattice 1..10, both signs) up to index max_n."""
    master = master_classes(27 * max_n, workers=workers)
    return {
        (lat, sign): _series_from_master(master, lat, sign, max_n)
        for lat, sign in ALL_PAIRS
    }


# ---------------------------------------------------------------------------
# check reporting
# ---------------------------------------------------------------------------


@dataclass
class CheckReport:
    name: str
    passed: bool
    details: list = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"[{status}] {self.name}"

    def __str__(self) -> str:
        out = [self.line()]
        out.extend(f"    {d}" for d in self.details)
        return "\n".join(out)


def _report(name: str, failures: list, extra: list | None = None) -> CheckReport:
    details = list(extra or [])
    details.extend(failures[:20])
    if len(failures) > 20:
        details.append(f"... and {len(failures) - 20} more failures")
    return CheckReport(name, not failures, details)


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


def table_multiplier(lattice: int, sign: str) -> int:
    """Printed table entries are 3 * a_n except in even-lattice minus columns."""
    return 1 if (lattice in EVEN_LATTICES and sign == "-") else 3


def render_table(side: str, series: dict) -> list:
    """Rows (n, (entry_1, ..., entry_10)) as exact Fractions, golden layout."""
    gold = golden_table(side)
    rows = []
    for n, _ in gold.rows:
        entries = []
        for lat, sign in gold.columns:
            s = series[(lat, sign)]
            entries.append(table_multiplier(lat, sign) * s.coeff(n))
        rows.append((n, tuple(entries)))
    return rows


def verify_tables(series: dict | None = None, workers: int = 1) -> CheckReport:
    """Every entry of both reference tables, exactly."""
    if series is None:
        series = build_all_series(51, workers=workers)
    failures = []
    checked = 0
    for side in ("left", "right"):
        gold = golden_table(side)
        computed = {n: vals for n, vals in render_table(side, series)}
        for n, expected in gold.rows:
            for j, ((lat, sign), want) in enumerate(zip(gold.columns, expected)):
                got = computed[n][j]
                checked += 1
                if got != Fraction(want):
                    failures.append(
                        f"{side} table, n={n}, (L{lat}, {sign}): expected {want}, got {got}"
                    )
    return _report("golden tables", failures, [f"{checked} entries checked"])


# ---------------------------------------------------------------------------
# relation identities
# ---------------------------------------------------------------------------

RELATION_PAIRS = (
    # (name, left (lattice, sign), right (lattice, sign), scalar on left)
    ("xi-(L1) = xi+(L2)", (1, "-"), (2, "+"), 1),
    ("3 xi+(L1) = xi-(L2)", (1, "+"), (2, "-"), 3),
    ("xi-(L7) = xi+(L8)", (7, "-"), (8, "+"), 1),
    ("3 xi+(L7) = xi-(L8)", (7, "+"), (8, "-"), 3),
    ("xi-(L9) = xi+(L10)", (9, "-"), (10, "+"), 1),
    ("3 xi+(L9) = xi-(L10)", (9, "+"), (10, "-"), 3),
)


def verify_relations(max_n: int = 300, series: dict | None = None, workers: int = 1) -> CheckReport:
    """The six coefficientwise identities between odd and even lattices."""
    if series is None:
        series = build_all_series(max_n, workers=workers)
    failures = []
    for name, left, right, scalar in RELATION_PAIRS:
        sl, sr = series[left], series[right]
        for n in range(1, max_n + 1):
            lhs = scalar * sl.coeff(n)
            rhs = sr.coeff(n)
            if lhs != rhs:
                failures.append(f"{name} fails at n={n}: {lhs} != {rhs}")
    return _report(
        f"relation identities (n <= {max_n})",
        failures,
        [f"6 identities x {max_n} coefficients"],
    )


def verify_non_relation(series: dict | None = None, workers: int = 1) -> CheckReport:
    """Witness that xi-(L3) and xi+(L4) do not satisfy the analogous identity."""
    if series is None:
        series = build_all_series(7, workers=workers)
    a = series[(3, "-")].coeff(7)
    b = series[(4, "+")].coeff(7)
    ok = a == Fraction(1) and b == Fraction(0)
    details = [f"xi-(L3) coefficient at n=7 is {a} (want 1)",
               f"xi+(L4) coefficient at n=7 is {b} (want 0)"]
    return CheckReport("non-relation witness at n=7", ok, details)


# ---------------------------------------------------------------------------
# lattice decompositions L7, L9 (and L8, L10) by discriminant residue mod 8
# ---------------------------------------------------------------------------

# (lattice, doubled sublattice base, residue of P mod 8 on the complement)
_DECOMPOSITIONS = (
    (7, 1, 1),   # L7 = 2*L1  U  {x in L1 : P(x) = 1 mod 8}
    (9, 1, 5),   # L9 = 2*L1  U  {x in L1 : P(x) = 5 mod 8}
    (8, 2, 5),   # L8 = 2*L2  U  {x in L2 : Q(x) = 7 mod 8}; Q = 3P mod 8 => P = 5
    (10, 2, 1),  # L10 = 2*L2 U  {x in L2 : Q(x) = 3 mod 8}; Q = 3P mod 8 => P = 1
)


def _decomposition_sides(lattice: int, base: int, p_res: int, a, b, c, d):
    """(x in lattice, x in 2*base, P(x) = p_res mod 8) for given coordinates."""
    if base == 1:
        x = (a, b, c, d)
    else:
        x = (a, 3 * b, 3 * c, d)
    in_lat = lattice_member(x, lattice)
    doubled = all(t % 2 == 0 for t in (a, b, c, d))
    p_mod8 = discriminant(x) % 8
    return in_lat, doubled, p_mod8 == p_res


def verify_decompositions(box: int = 20) -> CheckReport:
    """Each of L7..L10 is the disjoint union of a doubled lattice and a
    discriminant-residue slice; checked exhaustively mod 8 and on a box."""
    failures = []
    for lattice, base, p_res in _DECOMPOSITIONS:
        for a in range(8):
            for b in range(8):
                for c in range(8):
                    for d in range(8):
                        in_lat, doubled, res = _decomposition_sides(
                            lattice, base, p_res, a, b, c, d
                        )
                        if in_lat != (doubled or res) or (doubled and res):
                            failures.append(
                                f"L{lattice} mod-8 failure at residues {(a, b, c, d)}: "
                                f"member={in_lat}, doubled={doubled}, residue-slice={res}"
                            )
    # set-level check on an integer box
    rng = range(-box, box + 1)
    side = np.array(rng, dtype=np.int64)
    cg, dg = np.meshgrid(side, side, indexing="ij")
    cg, dg = cg.ravel(), dg.ravel()
    for lattice, base, p_res in _DECOMPOSITIONS:
        bad = 0
        for a in rng:
            for b in rng:
                if base == 1:
                    xa, xb, xc, xd = a, b, cg, dg
                else:
                    xa, xb, xc, xd = a, 3 * b, 3 * cg, 3 * dg
                # membership, vectorized over (c, d)
                if base == 1:
                    m = _member_cols(lattice, xa, xb, xc, xd)
                else:
                    m = _member_cols(lattice, xa, xb, xc, xd)
                doubled = (a % 2 == 0) and (b % 2 == 0)
                dbl = doubled & ((cg % 2 == 0) & (dg % 2 == 0))
                p = (
                    xb * xb * xc * xc
                    - 4 * xa * xc ** 3
                    - 4 * xb ** 3 * xd
                    + 18 * xa * xb * xc * xd
                    - 27 * xa * xa * xd * xd
                )
                res = p % 8 == p_res
                bad += int((m != (dbl | res)).sum()) + int((dbl & res).sum())
        if bad:
            failures.append(f"L{lattice} box decomposition: {bad} mismatching points")
    return _report(
        f"lattice decompositions (mod 8 exhaustive + box {box})", failures
    )


def _member_cols(lattice, a, b, c, d):
    """Vectorized odd/even lattice membership on raw coordinates."""
    if lattice in EVEN_LATTICES:
        in2 = (b % 3 == 0) & (c % 3 == 0)
        bd, cd = b // 3, c // 3
        if lattice == 8:
            return in2 & ((a + bd + d) % 2 == 0) & ((a + cd + d) % 2 == 0)
        if lattice == 10:
            return in2 & ((a + bd + cd) % 2 == 0) & ((bd + cd + d) % 2 == 0)
        raise ValueError(lattice)
    if lattice == 7:
        return ((a + b + c) % 2 == 0) & ((b + c + d) % 2 == 0)
    if lattice == 9:
        return ((a + b + d) % 2 == 0) & ((a + c + d) % 2 == 0)
    raise ValueError(lattice)


def verify_congruence_lemma() -> CheckReport:
    """Characterize P = 1 and P = 5 mod 8 by coefficient parities, exhaustively."""
    failures = []
    for a in range(8):
        for b in range(8):
            for c in range(8):
                for d in range(8):
                    p = discriminant((a, b, c, d)) % 8
                    even = lambda *t: all(x % 2 == 0 for x in t)
                    odd = lambda *t: all(x % 2 == 1 for x in t)
                    cond1 = (even(a, d) and odd(b, c)) or (
                        odd(a, d) and (b + c) % 2 == 1
                    )
                    cond5 = (even(b, c) and odd(a, d)) or (
                        odd(b, c) and (a + d) % 2 == 1
                    )
                    if (p == 1) != cond1:
                        failures.append(
                            f"P=1 mod 8 criterion fails at {(a, b, c, d)}: P%8={p}"
                        )
                    if (p == 5) != cond5:
                        failures.append(
                            f"P=5 mod 8 criterion fails at {(a, b, c, d)}: P%8={p}"
                        )
    return _report("discriminant congruence criteria mod 8 (4096 tuples)", failures)


# ---------------------------------------------------------------------------
# linear span of the twenty series
# ---------------------------------------------------------------------------


def span_rank(max_n: int = 200, series: dict | None = None, workers: int = 1) -> int:
    """Rank of the 20 x max_n matrix of exact coefficients, by exact elimination."""
    if series is None:
        series = build_all_series(max_n, workers=workers)
    rows = [
        [series[pair].coeff(n) for n in range(1, max_n + 1)]
        for pair in ALL_PAIRS
    ]
    rank = 0
    col = 0
    ncols = max_n
    while rank < len(rows) and col < ncols:
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            col += 1
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        pv = rows[rank][col]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                fac = rows[i][col] / pv
                rows[i] = [x - fac * y for x, y in zip(rows[i], rows[rank])]
        rank += 1
        col += 1
    return rank


# ---------------------------------------------------------------------------
# Euler-product obstruction and the sqrt(3)-twisted identity
# ---------------------------------------------------------------------------


def _combo_coeff(series: dict, lattice: int, branch: int, n: int) -> Qrt3:
    """Coefficient of sqrt(3)*xi+(L) + branch*xi-(L) at n, branch = +-1."""
    plus = series[(lattice, "+")].coeff(n)
    minus = series[(lattice, "-")].coeff(n)
    return Qrt3(branch * minus, plus)


def euler_product_check(series: dict | None = None, workers: int = 1) -> CheckReport:
    """c_1 * c_15 != c_3 * c_5 in Z[sqrt(3)] for each of the twenty combinations
    sqrt(3)*xi+ +- xi-, ruling out an Euler product with multiplicative c_n."""
    if series is None:
        series = build_all_series(15, workers=workers)
    failures = []
    lines = []
    for lattice in range(1, 11):
        for branch in (1, -1):
            c1 = _combo_coeff(series, lattice, branch, 1)
            c3 = _combo_coeff(series, lattice, branch, 3)
            c5 = _combo_coeff(series, lattice, branch, 5)
            c15 = _combo_coeff(series, lattice, branch, 15)
            lhs = c1 * c15
            rhs = c3 * c5
            tag = f"L{lattice}, sqrt(3)*xi+ {'+' if branch == 1 else '-'} xi-"
            if lhs == rhs:
                failures.append(f"{tag}: c1*c15 = c3*c5 = {lhs} (multiplicative!)")
            else:
                lines.append(f"{tag}: c1*c15 = {lhs} vs c3*c5 = {rhs}")
    return _report("no Euler product (c1*c15 != c3*c5, all 20 combos)", failures)


LAMBDA_BASE_LATTICES = (1, 7, 9)


def lambda_coefficient_identity(
    max_n: int = 300, series: dict | None = None, workers: int = 1
) -> CheckReport:
    """sqrt(3)*xi+(L_{i+1}) +- xi-(L_{i+1}) = +-sqrt(3)*(sqrt(3)*xi+(L_i) +- xi-(L_i))
    coefficientwise, for i in {1, 7, 9}."""
    if series is None:
        series = build_all_series(max_n, workers=workers)
    failures = []
    for i in LAMBDA_BASE_LATTICES:
        for branch in (1, -1):
            scal = Qrt3(Fraction(0), Fraction(branch))  # +- sqrt(3)
            for n in range(1, max_n + 1):
                lhs = _combo_coeff(series, i + 1, branch, n)
                rhs = scal * _combo_coeff(series, i, branch, n)
                if lhs != rhs:
                    failures.append(
                        f"i={i}, branch={branch:+d}, n={n}: {lhs} != {rhs}"
                    )
    return _report(
        f"sqrt(3)-twisted coefficient identity (i in 1,7,9; n <= {max_n})", failures
    )
