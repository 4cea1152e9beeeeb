"""Classification of the SL2(Z)-invariant lattices between N*Z^4 and Z^4.

The action of SL2(Z) on coefficient vectors reduces mod p to an action of the
matrices u(1) = (1 1; 0 1) and w = (0 1; -1 0), which generate.  Invariant
sublattices of Z^4 containing N*Z^4 correspond to invariant subspaces of
F_p^4 for the primes p | N; enumerating those exhaustively and gluing by CRT
recovers exactly the ten lattices L1..L10.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from .forms import U1, W, action_matrix, lattice_member, pairing
from .series import CheckReport, _report

_DIM = 4


# ---------------------------------------------------------------------------
# subspaces of F_p^4
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ModpSubspace:
    """Subspace of F_p^4 in reduced row echelon form."""

    p: int
    basis: tuple  # tuple of 4-tuples, RREF rows; empty for the zero space

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, v) -> bool:
        return _reduce_against(self.p, self.basis, v) is None

    def elements(self) -> set:
        p = self.p
        out = set()
        for coeffs in itertools.product(range(p), repeat=self.dim):
            v = [0] * _DIM
            for c, row in zip(coeffs, self.basis):
                for i in range(_DIM):
                    v[i] = (v[i] + c * row[i]) % p
            out.add(tuple(v))
        return out


def _reduce_against(p: int, basis, v):
    """Reduce v against RREF rows; None if v lies in the span, else remainder."""
    v = [x % p for x in v]
    for row in basis:
        lead = next(i for i in range(_DIM) if row[i] % p)
        if v[lead] % p:
            inv = pow(row[lead], p - 2, p) if p > 2 else row[lead]
            fac = (v[lead] * inv) % p
            v = [(x - fac * y) % p for x, y in zip(v, row)]
    return None if all(x % p == 0 for x in v) else tuple(v)


def _all_subspaces(p: int):
    """All subspaces of F_p^4 as RREF bases (including 0 and the full space)."""
    yield ModpSubspace(p, ())
    for d in range(1, _DIM + 1):
        for pivots in itertools.combinations(range(_DIM), d):
            free_positions = [
                (i, j)
                for i in range(d)
                for j in range(_DIM)
                if j > pivots[i] and j not in pivots
            ]
            for fill in itertools.product(range(p), repeat=len(free_positions)):
                rows = [[0] * _DIM for _ in range(d)]
                for i in range(d):
                    rows[i][pivots[i]] = 1
                for (i, j), val in zip(free_positions, fill):
                    rows[i][j] = val
                yield ModpSubspace(p, tuple(tuple(r) for r in rows))


def _action_mats_mod_p(p: int):
    return [
        [[x % p for x in row] for row in action_matrix(g)] for g in (U1, W)
    ]


def _apply(mat, v, p):
    return tuple(sum(mat[i][j] * v[j] for j in range(_DIM)) % p for i in range(_DIM))


def invariant_subspaces_mod_p(p: int) -> list:
    """All subspaces of F_p^4 invariant under the reduced SL2(Z)-action,
    ordered by (dimension, basis)."""
    mats = _action_mats_mod_p(p)
    out = []
    for sub in _all_subspaces(p):
        if all(
            sub.contains(_apply(m, row, p)) for m in mats for row in sub.basis
        ):
            out.append(sub)
    out.sort(key=lambda s: (s.dim, s.basis))
    return out


# ---------------------------------------------------------------------------
# classification: gluing invariant subspaces into the ten lattices
# ---------------------------------------------------------------------------

_EXPECTED_COUNTS = {2: 6, 3: 3, 5: 2, 7: 2}


def _lattice_residues_mod(lattice: int, mod: int) -> frozenset:
    return frozenset(
        v
        for v in itertools.product(range(mod), repeat=_DIM)
        if lattice_member(v, lattice)
    )


def verify_classification() -> CheckReport:
    """Counts of invariant subspaces per prime, and the CRT gluing: proper
    invariant subspaces mod 2 (times the two choices mod 3) give exactly the
    ten lattices."""
    failures = []
    details = []
    subs = {}
    for p, want in _EXPECTED_COUNTS.items():
        subs[p] = invariant_subspaces_mod_p(p)
        got = len(subs[p])
        details.append(f"p={p}: {got} invariant subspaces")
        if got != want:
            failures.append(f"p={p}: expected {want} invariant subspaces, got {got}")

    # mod 3 the proper invariant subspace must be the residue set of L2
    l2_mod3 = _lattice_residues_mod(2, 3)
    proper3 = [s for s in subs.get(3, []) if 0 < s.dim < _DIM]
    if len(proper3) != 1 or proper3[0].elements() != l2_mod3:
        failures.append("mod-3 proper invariant subspace does not match L2")

    # glue: 5 invariant subspaces mod 2 excluding the zero space (which would
    # rescale the lattice at 2), times {full, L2-slice} mod 3 -> ten lattices
    if not failures:
        choices2 = [s for s in subs[2] if s.dim > 0]
        choices3 = [s for s in subs[3] if s.dim in (2, _DIM)]
        lattice_res6 = {
            lat: _lattice_residues_mod(lat, 6) for lat in range(1, 11)
        }
        found = {}
        for s2 in choices2:
            e2 = s2.elements()
            for s3 in choices3:
                e3 = s3.elements()
                res6 = frozenset(
                    v
                    for v in itertools.product(range(6), repeat=_DIM)
                    if tuple(x % 2 for x in v) in e2
                    and tuple(x % 3 for x in v) in e3
                )
                matches = [lat for lat, r in lattice_res6.items() if r == res6]
                if len(matches) != 1:
                    failures.append(
                        f"glued subspace (dim2={s2.dim}, dim3={s3.dim}) matches "
                        f"lattices {matches}"
                    )
                else:
                    found[matches[0]] = (s2, s3)
        missing = sorted(set(range(1, 11)) - set(found))
        if missing:
            failures.append(f"lattices not produced by gluing: {missing}")
        else:
            details.append("CRT gluing produces each of L1..L10 exactly once")
    return _report("invariant-subspace classification", failures, details)


# ---------------------------------------------------------------------------
# indices and duality
# ---------------------------------------------------------------------------

# Z-bases of the odd lattices; the even ones are images of odd partners under
# (x1, x2, x3, x4) -> (x1, 3 x2, 3 x3, x4), with the parity condition carried
# on the divided middle coordinates: L2 = phi(L1), L4 = phi(L5), L6 = phi(L3),
# L8 = phi(L9), L10 = phi(L7).
_ODD_BASES = {
    1: ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    3: ((1, 0, 0, 0), (0, 0, 0, 1), (0, 1, 1, 0), (0, 2, 0, 0)),
    5: ((2, 0, 0, 0), (0, 0, 0, 2), (0, 1, 1, 0), (0, 2, 0, 0)),
    7: ((1, 1, 0, 1), (1, 0, 1, 1), (2, 0, 0, 0), (0, 0, 0, 2)),
    9: ((1, 1, 1, 0), (0, 1, 1, 1), (2, 0, 0, 0), (0, 2, 0, 0)),
}

_EVEN_PARTNER = {2: 1, 4: 5, 6: 3, 8: 9, 10: 7}


def lattice_basis(lattice: int) -> tuple:
    if lattice % 2 == 1:
        return _ODD_BASES[lattice]
    odd = _ODD_BASES[_EVEN_PARTNER[lattice]]
    return tuple((v[0], 3 * v[1], 3 * v[2], v[3]) for v in odd)


def _det4(rows) -> Fraction:
    m = [[Fraction(x) for x in row] for row in rows]
    det = Fraction(1)
    for col in range(4):
        piv = next((r for r in range(col, 4) if m[r][col]), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, 4):
            fac = m[r][col] * inv
            m[r] = [x - fac * y for x, y in zip(m[r], m[col])]
    return det


def _solve4(rows, rhs) -> list:
    """Solve the 4x4 system rows^T * x = rhs over Q (rows are basis vectors)."""
    m = [[Fraction(rows[j][i]) for j in range(4)] + [Fraction(rhs[i])] for i in range(4)]
    for col in range(4):
        piv = next(r for r in range(col, 4) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(4):
            if r != col and m[r][col]:
                fac = m[r][col]
                m[r] = [x - fac * y for x, y in zip(m[r], m[col])]
    return [m[i][4] for i in range(4)]


def _index_in(sup: int, sub: int) -> Fraction:
    """[sup : sub] for nested lattices given by bases (ratio of determinants)."""
    return abs(_det4(lattice_basis(sub))) / abs(_det4(lattice_basis(sup)))


def _coords_in_basis(basis, v) -> list:
    return _solve4(basis, v)


def _is_member_by_basis(lattice: int, v) -> bool:
    return all(c.denominator == 1 for c in _coords_in_basis(lattice_basis(lattice), v))


def dual_basis(lattice: int) -> tuple:
    """Basis of the dual lattice under the alternating pairing."""
    basis = lattice_basis(lattice)
    duals = []
    for i in range(4):
        rhs = [Fraction(1) if j == i else Fraction(0) for j in range(4)]
        # solve <basis[j], y> = delta_ij; pairing is linear in y
        # pairing(x, y) = x1 y4 - x2 y3/3 + x3 y2/3 - x4 y1
        rows = []
        for x in basis:
            rows.append(
                [
                    Fraction(-x[3]),
                    Fraction(x[2], 3),
                    Fraction(-x[1], 3),
                    Fraction(x[0]),
                ]
            )
        duals.append(_solve_general(rows, rhs))
    return tuple(tuple(d) for d in duals)


def _solve_general(rows, rhs) -> list:
    m = [list(rows[i]) + [rhs[i]] for i in range(4)]
    for col in range(4):
        piv = next(r for r in range(col, 4) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(4):
            if r != col and m[r][col]:
                fac = m[r][col]
                m[r] = [x - fac * y for x, y in zip(m[r], m[col])]
    return [m[i][4] for i in range(4)]


def _same_lattice(basis_a, basis_b) -> bool:
    """Whether two rational bases span the same lattice."""
    coords = [_solve4(basis_b, v) for v in basis_a]
    if any(c.denominator != 1 for row in coords for c in row):
        return False
    return abs(_det4(coords)) == 1


def verify_indices_and_duality() -> CheckReport:
    failures = []
    details = []

    # basis membership agrees with the congruence definitions on a box
    for lattice in range(1, 11):
        for v in itertools.product(range(-3, 4), repeat=4):
            if _is_member_by_basis(lattice, v) != lattice_member(v, lattice):
                failures.append(
                    f"L{lattice}: basis and congruence membership disagree at {v}"
                )
                break

    # indices in L1: 2^(0,1,3,2,2) for i=1,3,5,7,9; even ones are 9x larger
    want_b = {1: 0, 3: 1, 5: 3, 7: 2, 9: 2}
    for i, b in want_b.items():
        got = _index_in(1, i)
        if got != 2 ** b:
            failures.append(f"[L1:L{i}] = {got}, expected {2 ** b}")
    for even, odd in _EVEN_PARTNER.items():
        got_even = _index_in(1, even)
        want = 9 * 2 ** want_b[odd]
        if got_even != want:
            failures.append(f"[L1:L{even}] = {got_even}, expected {want}")
    details.append("[L1:L_i] = 2^b_i with b = (0,1,3,2,2) for i = 1,3,5,7,9")

    # chain indices
    chain_checks = (
        ((1, 3), 2),
        ((3, 9), 2),
        ((7, 5), 2),
        ((1, 7), 4),
        ((3, 5), 4),
        ((1, 9), 4),
    )
    for (sup, sub), want in chain_checks:
        got = _index_in(sup, sub)
        if got != want:
            failures.append(f"[L{sup}:L{sub}] = {got}, expected {want}")
    # [L5 : 2 L1] = 2 and [L9 : 2 L1] = 4: det(2 L1) = 16
    for lat, want in ((5, 2), (9, 4)):
        got = 16 / abs(_det4(lattice_basis(lat)))
        if got != want:
            failures.append(f"[L{lat}:2L1] = {got}, expected {want}")
    if abs(_det4(lattice_basis(9))) * 4 != 16:
        failures.append("[L1:L9] * [L9:2L1] != 16")

    # duality: dual of L_i is (1/2) L_{i+1} for i = 3, 5, 7, 9
    for i in (3, 5, 7, 9):
        dual = dual_basis(i)
        half_even = tuple(
            tuple(Fraction(x, 2) for x in v) for v in lattice_basis(i + 1)
        )
        if not _same_lattice(dual, half_even):
            failures.append(f"dual of L{i} is not (1/2) L{i + 1}")
        # integrality of the pairing between L_i and (1/2) L_{i+1}
        for x in lattice_basis(i):
            for y in half_even:
                if pairing(x, y).denominator != 1:
                    failures.append(
                        f"pairing of L{i} with (1/2)L{i + 1} non-integral at {x}, {y}"
                    )
    details.append("dual(L_i) = (1/2) L_{i+1} for i = 3, 5, 7, 9")

    # duality of the base pair: dual of L1 is L2 (no halving)
    if not _same_lattice(dual_basis(1), lattice_basis(2)):
        failures.append("dual of L1 is not L2")
    if not _same_lattice(dual_basis(2), lattice_basis(1)):
        failures.append("dual of L2 is not L1")
    details.append("dual(L1) = L2 and dual(L2) = L1")

    return _report("lattice indices and duality", failures, details)
