"""Complete orbit enumeration for bounded discriminant, plus a brute-force oracle.

The fast path enumerates one representative per SL2(Z)-orbit of integral
binary cubic forms with 1 <= |P| <= Y in three provably complete strata:

* P > 0: forms whose Hessian (A, B, C) is weakly reduced (|B| <= A <= C).
  The syzygy (2*b*A - 3*a*B)^2 + 27*P*a^2 = 4*A^3 bounds the coefficient
  loops: A <= sqrt(P), |a| <= (2/sqrt(27)) P^(1/4), |b| <= sqrt(A) + 1.5|a|.
  Every orbit contains a weakly reduced form with a >= 1, or with a = 0 and
  b >= 1 (negating a form stays in its orbit), so scanning those two strata
  hits every orbit; canonicalization plus dedup yields one row per orbit.

* P < 0, irreducible: unique representative with x1 > 0 whose complex root
  lies strictly inside the fundamental domain |Re z| <= 1/2, |z| >= 1.
  Writing the real root rho and s2 = |theta|^2, reducedness forces
  s2 <= (16|P| / (27 a^4))^(1/3), |rho + b/a| <= 1, giving finite windows
  for (a, b, c) and a short interval of valid d per triple.

* P < 0, reducible: unique presentation (p, q, r, 0) with r >= 1 and
  0 <= q < 2r; then P = -r^2 (4pr - q^2), enumerated directly.

All candidate generation over-covers with float windows and is then cut back
by exact integer tests, so float error can only cost speed, never classes.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from math import isqrt

import numpy as np

from .forms import (
    CubicForm,
    action_matrix,
    discriminant,
    is_irreducible,
    lattice_member,
)
from .reduction import SMALL_MATRICES, orbit_bfs, stabilizer_order

EVEN_LATTICES = (2, 4, 6, 8, 10)


@dataclass(frozen=True)
class ClassRecord:
    """One SL2(Z)-orbit: lattice, sign of P, index n, canonical representative."""

    lattice: int
    sign: str  # '+' or '-'
    n: int
    rep: CubicForm
    stab_order: int
    irreducible: bool

    def to_json_dict(self) -> dict:
        return {
            "lattice": self.lattice,
            "sign": self.sign,
            "n": self.n,
            "rep": list(self.rep),
            "stab": self.stab_order,
            "irreducible": self.irreducible,
        }

    def sort_key(self):
        return (self.n, tuple(self.rep))


@dataclass
class EnumerationParams:
    max_index: int
    oracle_box: int = 40
    stab_search_bound: int = 0  # 0 = automatic
    workers: int = 1


# ---------------------------------------------------------------------------
# shared integer helpers
# ---------------------------------------------------------------------------


def _ceil_div(x, y):
    """Ceiling division for positive y (works on ints and numpy arrays)."""
    return -((-x) // y)


def _ranges_to_rows(parts: list) -> np.ndarray:
    good = [p for p in parts if len(p)]
    if not good:
        return np.empty((0, 4), dtype=np.int64)
    return np.concatenate(good, axis=0)


def _expand_windows(lo: np.ndarray, hi: np.ndarray):
    """Flatten integer windows [lo_i, hi_i] into (row index, value) arrays."""
    cnt = np.maximum(hi - lo + 1, 0)
    total = int(cnt.sum())
    if total == 0:
        return np.empty(0, dtype=np.int64), np.empty(0, dtype=np.int64)
    idx = np.repeat(np.arange(len(lo)), cnt)
    starts = np.concatenate(([0], np.cumsum(cnt)[:-1]))
    vals = lo.repeat(cnt) + (np.arange(total, dtype=np.int64) - starts.repeat(cnt))
    return idx, vals


def _disc_cols(a, b, c, d):
    return (
        b * b * c * c
        - 4 * a * c ** 3
        - 4 * b ** 3 * d
        + 18 * a * b * c * d
        - 27 * a * a * d * d
    )


def _value_at(a, b, c, d, p, q):
    """Homogeneous value f(p, q) columnwise."""
    return a * p ** 3 + b * p * p * q + c * p * q * q + d * q ** 3


# ---------------------------------------------------------------------------
# positive-discriminant stratum
# ---------------------------------------------------------------------------

_SMALL_MATS = [np.array(action_matrix(g), dtype=np.int64) for g in SMALL_MATRICES]
_STAB3_MATS = [
    np.array(action_matrix(g), dtype=np.int64)
    for g in SMALL_MATRICES
    if g.p + g.s == -1
]


def _pos_candidates_for_a(a: int, limit: int) -> np.ndarray:
    """Weakly Hessian-reduced candidates with leading coefficient a (a >= 0)."""
    sqrt_limit = isqrt(limit)
    if a == 0:
        rows = []
        bmax = isqrt(sqrt_limit)
        for b in range(1, bmax + 1):
            A = b * b
            cs = np.arange(-b, b + 1, dtype=np.int64)
            cmax_val = (3 * limit + A * A) // (4 * A)
            lo = _ceil_div(cs * cs - cmax_val, 3 * b)
            hi = (cs * cs - A) // (3 * b)
            idx, ds = _expand_windows(lo, hi)
            if len(ds) == 0:
                continue
            c_col = cs[idx]
            rows.append(
                np.stack(
                    [
                        np.zeros(len(ds), dtype=np.int64),
                        np.full(len(ds), b, dtype=np.int64),
                        c_col,
                        ds,
                    ],
                    axis=1,
                )
            )
        return _ranges_to_rows(rows)

    rows = []
    bmax = isqrt(sqrt_limit) + (3 * a + 1) // 2 + 1
    for b in range(-bmax, bmax + 1):
        c_lo = _ceil_div(b * b - sqrt_limit, 3 * a)
        c_hi = (b * b - 1) // (3 * a)
        if c_hi < c_lo:
            continue
        cs = np.arange(c_lo, c_hi + 1, dtype=np.int64)
        A = b * b - 3 * a * cs
        bc = b * cs
        lo = _ceil_div(bc - A, 9 * a)
        hi = (bc + A) // (9 * a)
        idx, ds = _expand_windows(lo, hi)
        if len(ds) == 0:
            continue
        c_col = cs[idx]
        rows.append(
            np.stack(
                [
                    np.full(len(ds), a, dtype=np.int64),
                    np.full(len(ds), b, dtype=np.int64),
                    c_col,
                    ds,
                ],
                axis=1,
            )
        )
    return _ranges_to_rows(rows)


def _hessian_cols(rows: np.ndarray):
    a, b, c, d = rows[:, 0], rows[:, 1], rows[:, 2], rows[:, 3]
    return b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d


def _weakly_reduced_mask(rows: np.ndarray) -> np.ndarray:
    A, B, C = _hessian_cols(rows)
    return (A > 0) & (np.abs(B) <= A) & (C >= A)


def _lex_less(y: np.ndarray, b: np.ndarray) -> np.ndarray:
    l0, e0 = y[:, 0] < b[:, 0], y[:, 0] == b[:, 0]
    l1, e1 = y[:, 1] < b[:, 1], y[:, 1] == b[:, 1]
    l2, e2 = y[:, 2] < b[:, 2], y[:, 2] == b[:, 2]
    l3 = y[:, 3] < b[:, 3]
    return l0 | (e0 & (l1 | (e1 & (l2 | (e2 & l3)))))


def _canonicalize_pos_rows(rows: np.ndarray) -> np.ndarray:
    """Lex-min weakly reduced small-matrix image, rowwise (rows already reduced)."""
    best = rows.copy()
    for mat in _SMALL_MATS:
        imgs = rows @ mat.T
        ok = _weakly_reduced_mask(imgs) & _lex_less(imgs, best)
        best[ok] = imgs[ok]
    return best


def _pos_stratum(a: int, limit: int) -> np.ndarray:
    cand = _pos_candidates_for_a(a, limit)
    if len(cand) == 0:
        return cand
    A, B, C = _hessian_cols(cand)
    disc3 = 4 * A * C - B * B
    keep = (C >= A) & (disc3 >= 3) & (disc3 <= 3 * limit)
    cand = cand[keep]
    if len(cand) == 0:
        return cand
    out = []
    for chunk in np.array_split(cand, max(1, len(cand) // 500_000)):
        out.append(_canonicalize_pos_rows(chunk))
    return np.concatenate(out, axis=0)


# ---------------------------------------------------------------------------
# negative-discriminant, irreducible stratum (fundamental-domain root)
# ---------------------------------------------------------------------------


def _neg_ird_windows(a: int, limit: int) -> np.ndarray:
    """Candidate rows for given leading coefficient a >= 1 (float windows)."""
    s2max = (16.0 * limit / (27.0 * a ** 4)) ** (1.0 / 3.0) + 1e-9
    if s2max < 1.0:
        return np.empty((0, 4), dtype=np.int64)
    rho_max = 0.5 + (limit / (3.0 * a ** 4)) ** 0.25
    bmax = int(1.5 * a + a * rho_max - a + 2) + 1  # |b| <= a(1 + |rho|)
    bmax = max(bmax, int(a * (1 + rho_max)) + 2)
    cmax = int(a * (rho_max + s2max)) + 2
    eps = 1e-9
    out = []
    app = out.append
    for b in range(-bmax, bmax + 1):
        ba = b / a
        mid = -ba
        i0_lo, i0_hi = mid - 1.0 - eps, mid + 1.0 + eps
        for c in range(-cmax, cmax + 1):
            ca = c / a
            # q(t) = t^2 + ba*t + ca must lie in [1, s2max] for t = rho
            rad2 = ba * ba - 4.0 * (ca - s2max)
            if rad2 <= 0:
                continue
            sq2 = rad2 ** 0.5
            r1, r2 = (-ba - sq2) / 2.0, (-ba + sq2) / 2.0
            lo, hi = max(i0_lo, r1 - eps), min(i0_hi, r2 + eps)
            if hi <= lo:
                continue
            rad1 = ba * ba - 4.0 * (ca - 1.0)
            pieces = []
            if rad1 <= 0:
                pieces.append((lo, hi))
            else:
                sq1 = rad1 ** 0.5
                g1, g2 = (-ba - sq1) / 2.0, (-ba + sq1) / 2.0
                if lo < g1:
                    pieces.append((lo, min(hi, g1 + eps)))
                if hi > g2:
                    pieces.append((max(lo, g2 - eps), hi))
            for plo, phi in pieces:
                if phi <= plo:
                    continue
                ts = [plo, phi]
                # critical points of d(t) = -(a t^3 + b t^2 + c t)
                radc = 4.0 * b * b - 12.0 * a * c
                if radc >= 0:
                    sqc = radc ** 0.5
                    for tc in ((-2.0 * b - sqc) / (6.0 * a), (-2.0 * b + sqc) / (6.0 * a)):
                        if plo < tc < phi:
                            ts.append(tc)
                dv = [-(a * t ** 3 + b * t * t + c * t) for t in ts]
                dlo_f, dhi_f = min(dv), max(dv)
                pad = 1e-6 * (1.0 + abs(dlo_f) + abs(dhi_f))
                dlo = int(np.ceil(dlo_f - pad))
                dhi = int(np.floor(dhi_f + pad))
                if dhi >= dlo:
                    app((b, c, dlo, dhi))
    if not out:
        return np.empty((0, 4), dtype=np.int64)
    arr = np.array(out, dtype=np.int64)
    idx, ds = _expand_windows(arr[:, 2], arr[:, 3])
    rows = np.stack(
        [
            np.full(len(ds), a, dtype=np.int64),
            arr[idx, 0],
            arr[idx, 1],
            ds,
        ],
        axis=1,
    )
    return rows


def _in_open_domain_mask(rows: np.ndarray) -> np.ndarray:
    """Vectorized exact fundamental-domain test (see reduction._in_open_domain)."""
    a, b, c, d = rows[:, 0], rows[:, 1], rows[:, 2], rows[:, 3]
    ok = (a > 0) & (d != 0)
    t1 = _value_at(a, b, c, d, -b - a, a) < 0
    t2 = _value_at(a, b, c, d, a - b, a) > 0
    v3 = _value_at(a, b, c, d, -d, a)
    t3 = np.where(d < 0, v3 > 0, v3 < 0)
    return ok & t1 & t2 & t3


def _real_root(rows: np.ndarray) -> np.ndarray:
    """Real root of the dehomogenized cubic (exactly one; P < 0), by Cardano."""
    a = rows[:, 0].astype(np.float64)
    b = rows[:, 1].astype(np.float64)
    c = rows[:, 2].astype(np.float64)
    d = rows[:, 3].astype(np.float64)
    p = c / a - b * b / (3 * a * a)
    q = 2 * b ** 3 / (27 * a ** 3) - b * c / (3 * a * a) + d / a
    disc = (q / 2) ** 2 + (p / 3) ** 3
    sq = np.sqrt(np.maximum(disc, 0.0))
    y = np.cbrt(-q / 2 + sq) + np.cbrt(-q / 2 - sq)
    return y - b / (3 * a)


def _divisors_int(n: int) -> list:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return sorted(out)


def _reducible_mask_single_a(rows: np.ndarray, a: int) -> np.ndarray:
    """Rows (all leading coefficient a) with a rational root; P < 0 case only."""
    red = np.zeros(len(rows), dtype=bool)
    if len(rows) == 0:
        return red
    rho = _real_root(rows)
    b, c, d = rows[:, 1], rows[:, 2], rows[:, 3]
    aa = rows[:, 0]
    for q0 in _divisors_int(a):
        p0 = np.rint(rho * q0).astype(np.int64)
        for off in (-1, 0, 1):
            red |= _value_at(aa, b, c, d, p0 + off, q0) == 0
    return red


def _neg_ird_stratum(a: int, limit: int) -> np.ndarray:
    rows = _neg_ird_windows(a, limit)
    if len(rows) == 0:
        return rows
    disc = _disc_cols(rows[:, 0], rows[:, 1], rows[:, 2], rows[:, 3])
    rows = rows[(disc < 0) & (disc >= -limit)]
    if len(rows) == 0:
        return rows
    rows = rows[_in_open_domain_mask(rows)]
    if len(rows) == 0:
        return rows
    rows = rows[~_reducible_mask_single_a(rows, a)]
    return rows


# ---------------------------------------------------------------------------
# negative-discriminant, reducible stratum (parabolic presentation)
# ---------------------------------------------------------------------------


def _neg_rd_stratum(r_lo: int, r_hi: int, limit: int) -> np.ndarray:
    """Rows (p, q, r, 0), r in [r_lo, r_hi], 0 <= q < 2r, 1 <= -P <= limit."""
    rows = []
    for r in range(r_lo, r_hi + 1):
        dmax = limit // (r * r)
        if dmax < 3:
            continue
        qs = np.arange(0, 2 * r, dtype=np.int64)
        lo = _ceil_div(qs * qs + 1, 4 * r)
        hi = (qs * qs * r * r + limit) // (4 * r ** 3)
        idx, ps = _expand_windows(lo, hi)
        if len(ps) == 0:
            continue
        q_col = qs[idx]
        rows.append(
            np.stack(
                [
                    ps,
                    q_col,
                    np.full(len(ps), r, dtype=np.int64),
                    np.zeros(len(ps), dtype=np.int64),
                ],
                axis=1,
            )
        )
    return _ranges_to_rows(rows)


# ---------------------------------------------------------------------------
# master enumeration (all orbits with 1 <= |P| <= Y)
# ---------------------------------------------------------------------------


@dataclass
class MasterClasses:
    """One row per orbit with 1 <= |P(rep)| <= limit, as parallel numpy arrays."""

    limit: int
    reps: np.ndarray  # (N, 4) int64, canonical representatives
    disc: np.ndarray  # (N,) int64, signed P
    stab: np.ndarray  # (N,) int64, 1 or 3
    irred: np.ndarray  # (N,) bool
    member: np.ndarray  # (N, 10) bool, membership in L1..L10

    def __len__(self):
        return len(self.disc)


def _membership_matrix(rows: np.ndarray) -> np.ndarray:
    a, b, c, d = rows[:, 0], rows[:, 1], rows[:, 2], rows[:, 3]
    m = np.empty((len(rows), 10), dtype=bool)
    b3, c3 = b % 3 == 0, c % 3 == 0
    in_l2 = b3 & c3
    bd, cd = b // 3, c // 3
    pa, pd = a % 2 == 0, d % 2 == 0
    m[:, 0] = True
    m[:, 2] = (b + c) % 2 == 0
    m[:, 4] = pa & pd & m[:, 2]
    m[:, 6] = ((a + b + c) % 2 == 0) & ((b + c + d) % 2 == 0)
    m[:, 8] = ((a + b + d) % 2 == 0) & ((a + c + d) % 2 == 0)
    m[:, 1] = in_l2
    m[:, 3] = in_l2 & pa & pd & ((bd + cd) % 2 == 0)
    m[:, 5] = in_l2 & ((bd + cd) % 2 == 0)
    m[:, 7] = in_l2 & ((a + bd + d) % 2 == 0) & ((a + cd + d) % 2 == 0)
    m[:, 9] = in_l2 & ((a + bd + cd) % 2 == 0) & ((bd + cd + d) % 2 == 0)
    return m


def _pos_irreducible_mask(rows: np.ndarray) -> np.ndarray:
    """Irreducibility for P > 0 rows (up to three real roots, trig Cardano)."""
    irred = np.ones(len(rows), dtype=bool)
    a = rows[:, 0]
    irred[(a == 0) | (rows[:, 3] == 0)] = False
    live = irred.copy()
    for av in np.unique(np.abs(a[live])):
        if av == 0:
            continue
        sel = np.where(live & (np.abs(a) == av))[0]
        sub = rows[sel]
        af = sub[:, 0].astype(np.float64)
        bf = sub[:, 1].astype(np.float64)
        cf = sub[:, 2].astype(np.float64)
        df = sub[:, 3].astype(np.float64)
        p = cf / af - bf * bf / (3 * af * af)
        q = 2 * bf ** 3 / (27 * af ** 3) - bf * cf / (3 * af * af) + df / af
        # P > 0 => three distinct real roots => (q/2)^2 + (p/3)^3 < 0, p < 0
        m = np.sqrt(np.maximum(-p / 3.0, 1e-300))
        arg = np.clip(3.0 * q / (2.0 * p * m), -1.0, 1.0)
        phi = np.arccos(arg)
        red = np.zeros(len(sub), dtype=bool)
        for k in range(3):
            t = 2.0 * m * np.cos((phi - 2.0 * np.pi * k) / 3.0) - bf / (3 * af)
            for q0 in _divisors_int(int(av)):
                p0 = np.rint(t * q0).astype(np.int64)
                for off in (-1, 0, 1):
                    red |= (
                        _value_at(sub[:, 0], sub[:, 1], sub[:, 2], sub[:, 3], p0 + off, q0)
                        == 0
                    )
        irred[sel[red]] = False
    return irred


def _pos_stab_column(rows: np.ndarray) -> np.ndarray:
    stab = np.ones(len(rows), dtype=np.int64)
    fixed = np.zeros(len(rows), dtype=bool)
    for mat in _STAB3_MATS:
        fixed |= (rows @ mat.T == rows).all(axis=1)
    stab[fixed] = 3
    return stab


def _stratum_tasks(limit: int) -> list:
    amax_pos = int((4.0 / 27.0) ** 0.5 * limit ** 0.25) + 2
    amax_neg = int((16.0 * limit / 27.0) ** 0.25) + 2
    rmax = isqrt(limit // 3) if limit >= 3 else 0
    tasks = [("pos", a, limit) for a in range(0, amax_pos + 1)]
    tasks += [("negird", a, limit) for a in range(1, amax_neg + 1)]
    step = max(1, rmax // 16)
    r = 1
    while r <= rmax:
        tasks.append(("negrd", (r, min(r + step - 1, rmax)), limit))
        r += step
    return tasks


def _run_task(task) -> tuple:
    kind, arg, limit = task
    if kind == "pos":
        return kind, _pos_stratum(arg, limit)
    if kind == "negird":
        return kind, _neg_ird_stratum(arg, limit)
    r_lo, r_hi = arg
    return kind, _neg_rd_stratum(r_lo, r_hi, limit)


_MASTER_CACHE: dict = {}


def master_classes(limit: int, workers: int = 1, use_cache: bool = True) -> MasterClasses:
    """All orbits with 1 <= |P| <= limit, across the full integer lattice L1."""
    if limit < 1:
        raise ValueError("limit must be >= 1")
    if use_cache:
        for cached_limit, master in sorted(_MASTER_CACHE.items()):
            if cached_limit >= limit:
                if cached_limit == limit:
                    return master
                keep = np.abs(master.disc) <= limit
                return MasterClasses(
                    limit,
                    master.reps[keep],
                    master.disc[keep],
                    master.stab[keep],
                    master.irred[keep],
                    master.member[keep],
                )
    tasks = _stratum_tasks(limit)
    if workers > 1:
        import multiprocessing as mp

        with mp.get_context("fork").Pool(workers) as pool:
            results = pool.map(_run_task, tasks)
    else:
        results = [_run_task(t) for t in tasks]

    pos_rows = _ranges_to_rows([r for k, r in results if k == "pos"])
    ird_rows = _ranges_to_rows([r for k, r in results if k == "negird"])
    rd_rows = _ranges_to_rows([r for k, r in results if k == "negrd"])

    if len(pos_rows):
        pos_rows = np.unique(pos_rows, axis=0)
    # The negative strata produce exactly one row per orbit by construction;
    # verify rather than assume.
    for name, rows in (("neg-irreducible", ird_rows), ("neg-reducible", rd_rows)):
        if len(rows) and len(np.unique(rows, axis=0)) != len(rows):
            raise AssertionError(f"duplicate representatives in {name} stratum")

    reps = np.concatenate([pos_rows, ird_rows, rd_rows], axis=0)
    disc = _disc_cols(reps[:, 0], reps[:, 1], reps[:, 2], reps[:, 3])
    stab = np.ones(len(reps), dtype=np.int64)
    if len(pos_rows):
        stab[: len(pos_rows)] = _pos_stab_column(pos_rows)
    irred = np.zeros(len(reps), dtype=bool)
    if len(pos_rows):
        irred[: len(pos_rows)] = _pos_irreducible_mask(pos_rows)
    irred[len(pos_rows): len(pos_rows) + len(ird_rows)] = True

    if not ((disc != 0).all() and (np.abs(disc) <= limit).all()):
        raise AssertionError("enumeration produced out-of-range discriminants")

    master = MasterClasses(limit, reps, disc, stab, irred, _membership_matrix(reps))
    if use_cache:
        _MASTER_CACHE[limit] = master
        for k in [k for k in _MASTER_CACHE if k < limit]:
            del _MASTER_CACHE[k]
    return master


# ---------------------------------------------------------------------------
# public record-level interfaces
# ---------------------------------------------------------------------------


def _signed_selection(master: MasterClasses, lattice: int, sign: str, max_index: int):
    if sign not in ("+", "-"):
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    scale = 27 if lattice in EVEN_LATTICES else 1
    n = np.abs(master.disc) // scale
    mask = master.member[:, lattice - 1] & (n >= 1) & (n <= max_index)
    mask &= (master.disc > 0) if sign == "+" else (master.disc < 0)
    return mask, n


def enumerate_classes(
    lattice: int,
    sign: str,
    max_index: int,
    workers: int = 1,
) -> list:
    """One ClassRecord per orbit in the lattice with 1 <= index <= max_index.

    The index is |P| for odd lattices and |Q| = |P|/27 for even lattices.
    Sorted by (index, representative).
    """
    if max_index < 1:
        raise ValueError("max_index must be >= 1")
    scale = 27 if lattice in EVEN_LATTICES else 1
    master = master_classes(max_index * scale, workers=workers)
    mask, n = _signed_selection(master, lattice, sign, max_index)
    idx = np.where(mask)[0]
    records = [
        ClassRecord(
            lattice,
            sign,
            int(n[i]),
            CubicForm(*(int(t) for t in master.reps[i])),
            int(master.stab[i]),
            bool(master.irred[i]),
        )
        for i in idx
    ]
    records.sort(key=ClassRecord.sort_key)
    return records


# ---------------------------------------------------------------------------
# brute-force oracle: box scan + BFS grouping
# ---------------------------------------------------------------------------

_ORACLE_CACHE: dict = {}


def _box_survivors(box: int, p_limit: int, family: int) -> np.ndarray:
    """Forms in [-box, box]^4 with 1 <= |P| <= p_limit; family 2 keeps L2 only.

    For fixed (a, b, c), P is a downward parabola (a != 0) or linear (a = 0,
    b != 0) in d, so |P| <= p_limit confines d to at most two short windows.
    Windows are computed in floats with padding and cut back by the exact test.
    """
    side = np.arange(-box, box + 1, dtype=np.int64)
    bc_side = side[side % 3 == 0] if family == 2 else side
    b_grid, c_grid = np.meshgrid(bc_side, bc_side, indexing="ij")
    b = b_grid.ravel()
    c = c_grid.ravel()
    bf, cf = b.astype(np.float64), c.astype(np.float64)
    chunks = []

    def emit(a, lo, hi):
        lo = np.maximum(lo, -box)
        hi = np.minimum(hi, box)
        idx, ds = _expand_windows(lo, hi)
        if len(ds) == 0:
            return
        rows = np.stack(
            [np.full(len(ds), a, dtype=np.int64), b[idx], c[idx], ds], axis=1
        )
        p = _disc_cols(rows[:, 0], rows[:, 1], rows[:, 2], rows[:, 3])
        keep = (p != 0) & (np.abs(p) <= p_limit)
        if keep.any():
            chunks.append(rows[keep])

    for a in side:
        if a == 0:
            nz = b != 0
            # P = b^2 c^2 - 4 b^3 d: window of length p_limit / (2 |b|^3)
            center = cf[nz] * cf[nz] / (4.0 * bf[nz])
            half = p_limit / (4.0 * np.abs(bf[nz]) ** 3)
            lo = np.floor(center - half).astype(np.int64) - 1
            hi = np.ceil(center + half).astype(np.int64) + 1
            bsave, csave = b, c
            bnz, cnz = b[nz], c[nz]
            idx, ds = _expand_windows(np.maximum(lo, -box), np.minimum(hi, box))
            if len(ds):
                rows = np.stack(
                    [np.zeros(len(ds), dtype=np.int64), bnz[idx], cnz[idx], ds],
                    axis=1,
                )
                p = _disc_cols(rows[:, 0], rows[:, 1], rows[:, 2], rows[:, 3])
                keep = (p != 0) & (np.abs(p) <= p_limit)
                if keep.any():
                    chunks.append(rows[keep])
            b, c = bsave, csave
            continue
        af = float(a)
        # P(d) = A2 d^2 + B2 d + C2 with A2 = -27 a^2 < 0
        A2 = -27.0 * af * af
        B2 = 18.0 * af * bf * cf - 4.0 * bf ** 3
        C2 = bf * bf * cf * cf - 4.0 * af * cf ** 3
        # P >= -p_limit between the roots of P = -p_limit; the limit is padded
        # so tangent windows (discriminant exactly 0) survive float rounding
        disc_out = B2 * B2 - 4.0 * A2 * (C2 + p_limit + 0.5)
        has = disc_out > 0
        if not has.any():
            continue
        sq_out = np.sqrt(np.where(has, disc_out, 0.0))
        r1 = (-B2 - sq_out) / (2.0 * A2)
        r2 = (-B2 + sq_out) / (2.0 * A2)
        dlo = np.floor(np.minimum(r1, r2)).astype(np.int64) - 1
        dhi = np.ceil(np.maximum(r1, r2)).astype(np.int64) + 1
        dlo[~has] = 1
        dhi[~has] = 0
        # exclude the middle stretch where P > p_limit (if the peak exceeds it);
        # padding here shrinks the gap, which only adds candidates
        disc_in = B2 * B2 - 4.0 * A2 * (C2 - p_limit - 0.5)
        gap = disc_in > 0
        sq_in = np.sqrt(np.where(gap, disc_in, 0.0))
        g1 = (-B2 - sq_in) / (2.0 * A2)
        g2 = (-B2 + sq_in) / (2.0 * A2)
        glo = np.ceil(np.minimum(g1, g2)).astype(np.int64) + 1
        ghi = np.floor(np.maximum(g1, g2)).astype(np.int64) - 1
        # window 1: [dlo, min(dhi, glo - 1)]; window 2: [max(dlo, ghi + 1), dhi]
        hi1 = np.where(gap, np.minimum(dhi, glo - 1), dhi)
        lo2 = np.where(gap, np.maximum(dlo, ghi + 1), dhi + 1)
        emit(a, dlo, hi1)
        emit(a, lo2, dhi)
    return _ranges_to_rows(chunks)


def _group_box_orbits(box: int, p_limit: int, cap: int, family: int) -> list:
    """Group box survivors into orbits; returns list of lexmin in-box reps."""
    key = (box, p_limit, cap, family)
    if key in _ORACLE_CACHE:
        return _ORACLE_CACHE[key]
    survivors = _box_survivors(box, p_limit, family)
    todo = set(map(tuple, survivors.tolist()))
    reps = []
    visited = set()
    while todo:
        seed = todo.pop()
        if seed in visited:
            continue
        orbit = orbit_bfs(seed, cap)
        visited |= orbit
        in_box = [
            x for x in orbit if all(abs(t) <= box for t in x)
        ]
        todo -= orbit
        reps.append(min(in_box))
    reps.sort()
    _ORACLE_CACHE[key] = reps
    return reps


def brute_force_classes(
    lattice: int,
    sign: str,
    max_index: int,
    box: int,
    cap: int | None = None,
    check_stability: bool = False,
) -> list:
    """Independent oracle: box enumeration + BFS orbit grouping.

    Correct only when every orbit with index <= max_index has a member in
    [-box, box]^4 and box members are BFS-connected within the cap (default
    4 * box).  With check_stability=True the run is repeated at 1.5 * box and
    a warning is raised if the class multiset changes.
    """
    if cap is None:
        cap = 4 * box
    scale = 27 if lattice in EVEN_LATTICES else 1
    p_limit = max_index * scale
    records = _oracle_records(lattice, sign, max_index, box, p_limit, cap)
    if check_stability:
        bigger = _oracle_records(
            lattice, sign, max_index, (3 * box + 1) // 2, p_limit, cap * 3 // 2
        )
        a = sorted((r.n, r.stab_order, r.irreducible) for r in records)
        b = sorted((r.n, r.stab_order, r.irreducible) for r in bigger)
        if a != b:
            warnings.warn(
                f"brute_force_classes unstable under box growth "
                f"({box} -> {(3 * box + 1) // 2}) for (L{lattice}, {sign}); "
                f"results may be incomplete",
                stacklevel=2,
            )
    return records


def _oracle_records(lattice, sign, max_index, box, p_limit, cap) -> list:
    family = 2 if lattice in EVEN_LATTICES else 1
    reps = _group_box_orbits(box, p_limit, cap, family)
    scale = 27 if lattice in EVEN_LATTICES else 1
    want_pos = sign == "+"
    records = []
    for rep in reps:
        if not lattice_member(rep, lattice):
            continue
        p = discriminant(rep)
        if (p > 0) != want_pos:
            continue
        if abs(p) % scale:
            continue
        n = abs(p) // scale
        if not 1 <= n <= max_index:
            continue
        f = CubicForm(*rep)
        records.append(
            ClassRecord(
                lattice,
                sign,
                n,
                f,
                stabilizer_order(f),
                is_irreducible(f),
            )
        )
    records.sort(key=ClassRecord.sort_key)
    return records
