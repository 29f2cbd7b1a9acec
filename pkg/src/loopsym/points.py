"""The m-by-n array of variable values that every evaluation runs over.

A :class:`VarMatrix` holds entries ``x_i^j`` (row ``i`` in ``[1, m]``,
column ``j`` in ``[1, n]``) in one of the three value domains.  Colored
accessors translate between the natural entry grid and the color
superscript convention used by the loop symmetric functions:

* ``xc(i, r)`` is the row variable of color ``r`` (mod n): the entry
  ``x_i^j`` with ``j = r - i + 1`` mod n;
* ``xbar(c, j)`` is the column variable of color ``c`` (mod m): the entry
  ``x_i^j`` with ``i = c - j + 1`` mod m.
"""

from __future__ import annotations

import random

from loopsym.semifield import (
    POLYNOMIAL,
    RATIONAL,
    TROPICAL,
    PolyFraction,
    Ring,
    TropNumber,
    random_rational,
)


class VarMatrix:
    """Rectangular array of semifield values with colored accessors."""

    __slots__ = ("m", "n", "rows", "ring")

    def __init__(self, rows, ring: Ring):
        self.rows = tuple(tuple(r) for r in rows)
        self.m = len(self.rows)
        self.n = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.n for r in self.rows):
            raise ValueError("ragged variable matrix")
        self.ring = ring

    # -- constructors ------------------------------------------------------

    @classmethod
    def rationals(cls, rows) -> "VarMatrix":
        return cls(rows, RATIONAL)

    @classmethod
    def tropical(cls, rows) -> "VarMatrix":
        return cls([[TropNumber(v) for v in r] for r in rows], TROPICAL)

    @classmethod
    def symbolic(cls, m: int, n: int) -> "VarMatrix":
        return cls(
            [[PolyFraction.variable(i, j) for j in range(1, n + 1)] for i in range(1, m + 1)],
            POLYNOMIAL,
        )

    @classmethod
    def random(cls, m: int, n: int, rng: random.Random) -> "VarMatrix":
        return cls([[random_rational(rng) for _ in range(n)] for _ in range(m)], RATIONAL)

    # -- accessors ----------------------------------------------------------

    def x(self, i: int, j: int):
        """Entry x_i^j, 1-based."""
        return self.rows[i - 1][j - 1]

    def xc(self, i: int, r: int):
        """Row variable of row i and color r (superscript mod n)."""
        return self.rows[i - 1][(r - i) % self.n]

    def xbar(self, c: int, j: int):
        """Column variable of column j and color c (subscript mod m)."""
        return self.rows[(c - j) % self.m][j - 1]

    def pi(self, i: int):
        """Product of all entries in row i."""
        v = self.ring.one
        for e in self.rows[i - 1]:
            v = v * e
        return v

    def row(self, i: int) -> tuple:
        return self.rows[i - 1]

    def col(self, j: int) -> tuple:
        return tuple(r[j - 1] for r in self.rows)

    def transpose(self) -> "VarMatrix":
        return VarMatrix(tuple(zip(*self.rows)), self.ring)

    def with_rows(self, updates: dict) -> "VarMatrix":
        """Copy with rows replaced; ``updates`` maps 1-based row index to a row."""
        rows = [list(r) for r in self.rows]
        for i, r in updates.items():
            rows[i - 1] = list(r)
        return VarMatrix(rows, self.ring)

    def with_cols(self, updates: dict) -> "VarMatrix":
        rows = [list(r) for r in self.rows]
        for j, c in updates.items():
            for i in range(self.m):
                rows[i][j - 1] = c[i]
        return VarMatrix(rows, self.ring)

    # -- misc ----------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VarMatrix)
            and self.m == other.m
            and self.n == other.n
            and all(
                self.rows[i][j] == other.rows[i][j]
                for i in range(self.m)
                for j in range(self.n)
            )
        )

    def __repr__(self) -> str:
        return f"VarMatrix({self.m}x{self.n}, {self.ring.name})"
