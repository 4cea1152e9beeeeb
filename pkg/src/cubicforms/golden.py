"""Reference coefficient tables, compiled in as data.

Column order, left side (indices n = 3, 4 mod 4):
    L1-, L2+, L3-, L4+, L5-, L6+, L7-, L8+, L9-, L10+
Column order, right side (indices n = 0, 1 mod 4):
    L1+, L2-, L3+, L4-, L5+, L6-, L7+, L8-, L9+, L10-

Entries are 3 times the exact Dirichlet coefficient, except in the
even-lattice minus columns (L2-, L4-, L6-, L8-, L10-) where the entry is the
exact coefficient itself.
"""

from dataclasses import dataclass

LEFT_COLUMNS = (
    (1, "-"), (2, "+"), (3, "-"), (4, "+"), (5, "-"),
    (6, "+"), (7, "-"), (8, "+"), (9, "-"), (10, "+"),
)
RIGHT_COLUMNS = (
    (1, "+"), (2, "-"), (3, "+"), (4, "-"), (5, "+"),
    (6, "-"), (7, "+"), (8, "-"), (9, "+"), (10, "-"),
)

LEFT_ROWS = (
    (3, (3, 3, 3, 1, 0, 1, 0, 0, 3, 3)),
    (4, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (7, (3, 3, 3, 0, 3, 3, 3, 3, 0, 0)),
    (8, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (11, (3, 3, 3, 3, 0, 3, 0, 0, 3, 3)),
    (12, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (15, (3, 3, 3, 0, 3, 3, 3, 3, 0, 0)),
    (16, (6, 6, 3, 0, 0, 3, 0, 0, 0, 0)),
    (19, (3, 3, 3, 3, 0, 3, 0, 0, 3, 3)),
    (20, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (23, (9, 9, 3, 0, 3, 9, 9, 9, 0, 0)),
    (24, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (27, (6, 6, 6, 4, 0, 4, 0, 0, 6, 6)),
    (28, (9, 9, 0, 0, 0, 6, 0, 0, 0, 0)),
    (31, (9, 9, 3, 0, 3, 9, 9, 9, 0, 0)),
    (32, (6, 6, 3, 0, 0, 3, 0, 0, 0, 0)),
    (35, (3, 3, 3, 3, 0, 3, 0, 0, 3, 3)),
    (36, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (39, (3, 3, 3, 0, 3, 3, 3, 3, 0, 0)),
    (40, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (43, (3, 3, 3, 3, 0, 3, 0, 0, 3, 3)),
    (44, (9, 9, 6, 0, 0, 0, 0, 0, 0, 0)),
    (47, (3, 3, 3, 0, 3, 3, 3, 3, 0, 0)),
    (48, (6, 6, 3, 3, 3, 3, 3, 3, 3, 3)),
    (51, (3, 3, 3, 3, 0, 3, 0, 0, 3, 3)),
)

RIGHT_ROWS = (
    (1, (1, 1, 1, 0, 1, 1, 1, 1, 0, 0)),
    (4, (3, 3, 0, 0, 0, 2, 0, 0, 0, 0)),
    (5, (3, 3, 3, 1, 0, 1, 0, 0, 3, 3)),
    (8, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (9, (3, 3, 3, 0, 3, 3, 3, 3, 0, 0)),
    (12, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (13, (3, 3, 3, 1, 0, 1, 0, 0, 3, 3)),
    (16, (4, 4, 1, 1, 1, 3, 1, 1, 1, 1)),
    (17, (3, 3, 3, 0, 3, 3, 3, 3, 0, 0)),
    (20, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (21, (3, 3, 3, 1, 0, 1, 0, 0, 3, 3)),
    (24, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (25, (3, 3, 3, 0, 3, 3, 3, 3, 0, 0)),
    (28, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (29, (3, 3, 3, 1, 0, 1, 0, 0, 3, 3)),
    (32, (6, 6, 3, 0, 0, 3, 0, 0, 0, 0)),
    (33, (3, 3, 3, 0, 3, 3, 3, 3, 0, 0)),
    (36, (9, 9, 0, 0, 0, 6, 0, 0, 0, 0)),
    (37, (3, 3, 3, 3, 0, 3, 0, 0, 3, 3)),
    (40, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (41, (3, 3, 3, 0, 3, 3, 3, 3, 0, 0)),
    (44, (3, 3, 0, 0, 0, 0, 0, 0, 0, 0)),
    (45, (3, 3, 3, 1, 0, 1, 0, 0, 3, 3)),
    (48, (6, 6, 3, 0, 0, 3, 0, 0, 0, 0)),
    (49, (5, 5, 3, 0, 3, 5, 5, 5, 0, 0)),
)


@dataclass(frozen=True)
class GoldenTable:
    side: str  # 'left' or 'right'
    rows: tuple  # ((n, (v1..v10)), ...)

    @property
    def columns(self):
        return LEFT_COLUMNS if self.side == "left" else RIGHT_COLUMNS


GOLDEN_LEFT = GoldenTable("left", LEFT_ROWS)
GOLDEN_RIGHT = GoldenTable("right", RIGHT_ROWS)


def golden_table(side: str) -> GoldenTable:
    if side == "left":
        return GOLDEN_LEFT
    if side == "right":
        return GOLDEN_RIGHT
    raise ValueError(f"side must be 'left' or 'right', got {side!r}")
