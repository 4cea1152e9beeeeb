"""Exact arithmetic on integral binary cubic forms.

Forms are 4-tuples (x1, x2, x3, x4) of Python integers (arbitrary precision,
so arithmetic can never wrap).  The group GL2(Z) acts by substitution twisted
by 1/det; the discriminant P is a degree-4 invariant with P(g.f) = det(g)^2 P(f).
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple


class CubicForm(NamedTuple):
    """x1*u^3 + x2*u^2*v + x3*u*v^2 + x4*v^3 with integer coefficients."""

    x1: int
    x2: int
    x3: int
    x4: int

    def __neg__(self) -> "CubicForm":
        return CubicForm(-self.x1, -self.x2, -self.x3, -self.x4)

    def to_json(self) -> list:
        return [self.x1, self.x2, self.x3, self.x4]

    @staticmethod
    def from_json(data: Iterable[int]) -> "CubicForm":
        x1, x2, x3, x4 = (int(t) for t in data)
        return CubicForm(x1, x2, x3, x4)


class UnimodularMatrix(NamedTuple):
    """2x2 integer matrix (p q; r s) with determinant +-1."""

    p: int
    q: int
    r: int
    s: int

    @property
    def det(self) -> int:
        return self.p * self.s - self.q * self.r

    def __matmul__(self, other: "UnimodularMatrix") -> "UnimodularMatrix":
        return UnimodularMatrix(
            self.p * other.p + self.q * other.r,
            self.p * other.q + self.q * other.s,
            self.r * other.p + self.s * other.r,
            self.r * other.q + self.s * other.s,
        )

    def to_json(self) -> list:
        return [[self.p, self.q], [self.r, self.s]]

    @staticmethod
    def from_json(data) -> "UnimodularMatrix":
        (p, q), (r, s) = data
        return UnimodularMatrix(int(p), int(q), int(r), int(s))


class QuadraticForm(NamedTuple):
    """A*u^2 + B*u*v + C*v^2; helper covariant for reduction."""

    A: int
    B: int
    C: int

    @property
    def disc(self) -> int:
        return self.B * self.B - 4 * self.A * self.C


IDENTITY = UnimodularMatrix(1, 0, 0, 1)
U1 = UnimodularMatrix(1, 1, 0, 1)        # u(1)
U1_INV = UnimodularMatrix(1, -1, 0, 1)   # u(-1)
W = UnimodularMatrix(0, 1, -1, 0)        # w


def u_of(alpha: int) -> UnimodularMatrix:
    """The unipotent element u(alpha) = (1 alpha; 0 1)."""
    return UnimodularMatrix(1, alpha, 0, 1)


def discriminant(f) -> int:
    """P(f) = x2^2 x3^2 - 4 x1 x3^3 - 4 x2^3 x4 + 18 x1 x2 x3 x4 - 27 x1^2 x4^2."""
    a, b, c, d = f
    return (
        b * b * c * c
        - 4 * a * c ** 3
        - 4 * b ** 3 * d
        + 18 * a * b * c * d
        - 27 * a * a * d * d
    )


def q_discriminant(f) -> int:
    """P(f)/27 for forms in L2 (where P is always divisible by 27)."""
    if not lattice_member(f, 2):
        raise ValueError(f"form {tuple(f)} is not in L2; q_discriminant undefined")
    p = discriminant(f)
    q, rem = divmod(p, 27)
    if rem:
        raise AssertionError(f"P({tuple(f)}) = {p} not divisible by 27 despite L2 membership")
    return q


def act(g, f) -> CubicForm:
    """Substitute (u,v) -> (p*u + r*v, q*u + s*v) and divide by det(g).

    Satisfies P(act(g, f)) = det(g)^2 * P(f) and act(g, act(h, f)) = act(g@h, f).
    """
    p, q, r, s = g
    det = p * s - q * r
    if det not in (1, -1):
        raise ValueError(f"matrix {tuple(g)} has determinant {det}, not +-1")
    a, b, c, d = f
    na = a * p ** 3 + b * p * p * q + c * p * q * q + d * q ** 3
    nb = (
        3 * a * p * p * r
        + b * (p * p * s + 2 * p * q * r)
        + c * (q * q * r + 2 * p * q * s)
        + 3 * d * q * q * s
    )
    nc = (
        3 * a * p * r * r
        + b * (q * r * r + 2 * p * r * s)
        + c * (p * s * s + 2 * q * r * s)
        + 3 * d * q * s * s
    )
    nd = a * r ** 3 + b * r * r * s + c * r * s * s + d * s ** 3
    return CubicForm(na * det, nb * det, nc * det, nd * det)


def action_matrix(g) -> list:
    """4x4 integer matrix M with act(g, f) = M @ f (forms as column vectors)."""
    cols = [act(g, e) for e in ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))]
    return [[cols[j][i] for j in range(4)] for i in range(4)]


def psi(f) -> CubicForm:
    """u(1).f - f = (x2+x3+x4, 2*x3+3*x4, 3*x4, 0)."""
    _, b, c, d = f
    return CubicForm(b + c + d, 2 * c + 3 * d, 3 * d, 0)


def pairing(x, y) -> Fraction:
    """Alternating form <x,y> = x1*y4 - x2*y3/3 + x3*y2/3 - x4*y1.

    Accepts integer or rational coordinates; returns an exact Fraction.
    """
    x1, x2, x3, x4 = x
    y1, y2, y3, y4 = y
    return (
        Fraction(x1) * y4
        - Fraction(x2, 1) * y3 / 3
        + Fraction(x3, 1) * y2 / 3
        - Fraction(x4) * y1
    )


def hessian(f) -> QuadraticForm:
    """Hessian covariant (x2^2-3x1x3, x2x3-9x1x4, x3^2-3x2x4); disc = -3*P(f)."""
    a, b, c, d = f
    return QuadraticForm(b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d)


def delta(f) -> int:
    """Delta = a*c^3 + b^3*d - a^2*d^2, so P = (bc+ad)^2 - 4*Delta + 16(abcd - 2a^2d^2)."""
    a, b, c, d = f
    return a * c ** 3 + b ** 3 * d - a * a * d * d


def lattice_member(f, lattice: int) -> bool:
    """Membership of f in L1..L10.

    Odd-indexed lattices are congruence sublattices of Z^4; even-indexed ones
    additionally require x2, x3 divisible by 3, with the parity conditions
    evaluated on the divided values b = x2/3, c = x3/3.
    """
    a, b, c, d = f
    if lattice == 1:
        return True
    if lattice in (2, 4, 6, 8, 10):
        if b % 3 or c % 3:
            return False
        b //= 3
        c //= 3
        if lattice == 2:
            return True
        if lattice == 4:
            return a % 2 == 0 and d % 2 == 0 and (b + c) % 2 == 0
        if lattice == 6:
            return (b + c) % 2 == 0
        if lattice == 8:
            return (a + b + d) % 2 == 0 and (a + c + d) % 2 == 0
        # lattice == 10
        return (a + b + c) % 2 == 0 and (b + c + d) % 2 == 0
    if lattice == 3:
        return (b + c) % 2 == 0
    if lattice == 5:
        return a % 2 == 0 and d % 2 == 0 and (b + c) % 2 == 0
    if lattice == 7:
        return (a + b + c) % 2 == 0 and (b + c + d) % 2 == 0
    if lattice == 9:
        return (a + b + d) % 2 == 0 and (a + c + d) % 2 == 0
    raise ValueError(f"lattice index must be 1..10, got {lattice}")


def _divisors(n: int) -> list:
    n = abs(n)
    out = []
    i = 1
    while i * i <= n:
        if n % i == 0:
            out.append(i)
            if i != n // i:
                out.append(n // i)
        i += 1
    return out


def is_irreducible(f) -> bool:
    """True iff f has no linear factor over Q (rational-root test).

    Requires P(f) != 0; forms with repeated factors are outside the domain.
    """
    if discriminant(f) == 0:
        raise ValueError(f"form {tuple(f)} has zero discriminant")
    a, b, c, d = f
    if a == 0 or d == 0:
        return False  # v | f, resp. root t = 0
    for q in _divisors(a):
        for p in _divisors(d):
            if gcd(p, q) != 1:
                continue
            for p_ in (p, -p):
                if a * p_ ** 3 + b * p_ * p_ * q + c * p_ * q * q + d * q ** 3 == 0:
                    return False
    return True


def rational_roots(f) -> list:
    """All rational roots of f as primitive pairs (p, q), q >= 0, f(p, q) = 0.

    The pair (1, 0) encodes the root at infinity (x1 = 0).  Roots are of the
    dehomogenized polynomial x1 t^3 + x2 t^2 + x3 t + x4 at t = p/q.
    """
    a, b, c, d = f
    roots = []
    if a == 0:
        roots.append((1, 0))
    if d == 0:
        roots.append((0, 1))
    den = a if a != 0 else (b if b != 0 else c)
    num = d if d != 0 else (c if c != 0 else b)
    if den == 0 or num == 0:
        return roots
    for q in _divisors(den):
        for p in _divisors(num):
            if gcd(p, q) != 1:
                continue
            for p_ in (p, -p):
                if a * p_ ** 3 + b * p_ * p_ * q + c * p_ * q * q + d * q ** 3 == 0:
                    roots.append((p_, q))
    return roots
