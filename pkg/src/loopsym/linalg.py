"""Dense matrices over a semifield, exact determinants and minors, and the
n-periodic / folded matrix machinery.

Determinants use fraction-free Bareiss elimination for sizes above four and
cofactor (Laplace) expansion with column-subset memoization below; both are
exact.  Minors of matrices over the min-plus domain raise
:class:`NeedsSubtraction`.
"""

from __future__ import annotations

from functools import lru_cache

from loopsym.semifield import (
    DegeneratePoint,
    Ring,
    SemifieldError,
    VerificationFailure,
)


class MinorShapeError(SemifieldError):
    """Row and column index sets of a minor have different sizes."""

    def __init__(self):
        super().__init__("minor-shape: |I| != |J|")


class BandOverflow(SemifieldError):
    """A periodic-matrix access fell outside the stored block band."""

    def __init__(self):
        super().__init__("increase-D: entry outside the stored band")


class Matrix:
    """Immutable rectangular matrix over a ring of semifield values."""

    __slots__ = ("rows", "nrows", "ncols", "ring")

    def __init__(self, rows, ring: Ring):
        self.rows = tuple(tuple(r) for r in rows)
        self.nrows = len(self.rows)
        self.ncols = len(self.rows[0]) if self.rows else 0
        if any(len(r) != self.ncols for r in self.rows):
            raise ValueError("ragged matrix")
        self.ring = ring

    @classmethod
    def identity(cls, k: int, ring: Ring) -> "Matrix":
        return cls(
            [[ring.one if i == j else ring.zero for j in range(k)] for i in range(k)], ring
        )

    @classmethod
    def elementary(cls, k: int, i: int, a, ring: Ring) -> "Matrix":
        """I + a*E_{i,i+1} (1-based i)."""
        rows = [[ring.one if r == c else ring.zero for c in range(k)] for r in range(k)]
        rows[i - 1][i] = a
        return cls(rows, ring)

    def entry(self, i: int, j: int):
        return self.rows[i - 1][j - 1]

    def __mul__(self, other: "Matrix") -> "Matrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch in matrix product")
        zero = self.ring.zero
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = zero
                for k in range(self.ncols):
                    acc = acc + self.rows[i][k] * other.rows[k][j]
                row.append(acc)
            out.append(row)
        return Matrix(out, self.ring)

    def transpose(self) -> "Matrix":
        return Matrix(tuple(zip(*self.rows)), self.ring)

    def submatrix(self, I, J) -> "Matrix":
        return Matrix([[self.rows[i - 1][j - 1] for j in J] for i in I], self.ring)

    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def det(self):
        if not self.is_square():
            raise ValueError("determinant of a non-square matrix")
        self.ring.require_subtraction()
        if self.nrows == 0:
            return self.ring.one
        if self.nrows <= 4:
            return _det_laplace(self.rows, self.ring)
        return _det_bareiss(self.rows, self.ring)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Matrix)
            and self.nrows == other.nrows
            and self.ncols == other.ncols
            and all(
                self.rows[i][j] == other.rows[i][j]
                for i in range(self.nrows)
                for j in range(self.ncols)
            )
        )

    def __repr__(self) -> str:
        return f"Matrix({self.nrows}x{self.ncols}, {self.ring.name})"


def _det_laplace(rows, ring: Ring):
    """Cofactor expansion along first rows, memoized on the column subset."""
    n = len(rows)
    cache: dict = {}

    def rec(r: int, cols: tuple):
        if r == n:
            return ring.one
        key = cols
        if key in cache:
            return cache[key]
        acc = ring.zero
        sign = 1
        for idx, c in enumerate(cols):
            e = rows[r][c]
            if e == ring.zero:
                sign = -sign
                continue
            sub = rec(r + 1, cols[:idx] + cols[idx + 1 :])
            term = e * sub
            acc = acc + term if sign > 0 else acc - term
            sign = -sign
        cache[key] = acc
        return acc

    return rec(0, tuple(range(n)))


def _det_bareiss(rows, ring: Ring):
    """Fraction-free Bareiss elimination; divisions are exact."""
    a = [list(r) for r in rows]
    n = len(a)
    zero, one = ring.zero, ring.one
    sign = 1
    prev = one
    for k in range(n - 1):
        if a[k][k] == zero:
            for r in range(k + 1, n):
                if a[r][k] != zero:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return zero
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev
            a[i][k] = zero
        prev = a[k][k]
    d = a[n - 1][n - 1]
    return d if sign > 0 else zero - d


def minor(A: Matrix, I, J):
    """Determinant of the submatrix with rows I and columns J (1-based)."""
    I, J = tuple(I), tuple(J)
    if len(I) != len(J):
        raise MinorShapeError()
    if not I:
        return A.ring.one
    if max(I) > A.nrows or max(J) > A.ncols or min(I) < 1 or min(J) < 1:
        raise IndexError("minor indices out of bounds")
    return A.submatrix(sorted(I), sorted(J)).det()


def flag_minor(A: Matrix, I):
    """Minor with rows I and the first |I| columns."""
    return minor(A, I, range(1, len(tuple(I)) + 1))


# ---------------------------------------------------------------------------
# polynomials in t and the folded matrix


class TPoly:
    """Dense polynomial in the folding parameter t, over any ring with -."""

    __slots__ = ("coeffs", "ring")

    def __init__(self, coeffs, ring: Ring):
        cs = list(coeffs)
        while cs and cs[-1] == ring.zero:
            cs.pop()
        self.coeffs = tuple(cs)
        self.ring = ring

    @classmethod
    def const(cls, v, ring: Ring) -> "TPoly":
        return cls([v], ring)

    def coeff(self, d: int):
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else self.ring.zero

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other: "TPoly") -> "TPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly([self.coeff(d) + other.coeff(d) for d in range(n)], self.ring)

    def __sub__(self, other: "TPoly") -> "TPoly":
        n = max(len(self.coeffs), len(other.coeffs))
        return TPoly([self.coeff(d) - other.coeff(d) for d in range(n)], self.ring)

    def __mul__(self, other: "TPoly") -> "TPoly":
        if not self.coeffs or not other.coeffs:
            return TPoly([], self.ring)
        zero = self.ring.zero
        out = [zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == zero:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return TPoly(out, self.ring)

    def __truediv__(self, other: "TPoly") -> "TPoly":
        """Exact polynomial division (used only inside Bareiss pivoting)."""
        if not other.coeffs:
            raise ZeroDivisionError("division by zero t-polynomial")
        zero = self.ring.zero
        rem = list(self.coeffs)
        lead = other.coeffs[-1]
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            if all(c == zero for c in rem):
                return TPoly([], self.ring)
            raise ValueError("inexact t-polynomial division")
        q = [zero] * (dq + 1)
        for k in range(dq, -1, -1):
            c = rem[k + len(other.coeffs) - 1] / lead
            q[k] = c
            if c != zero:
                for j, b in enumerate(other.coeffs):
                    rem[k + j] = rem[k + j] - c * b
        if any(c != zero for c in rem):
            raise ValueError("inexact t-polynomial division")
        return TPoly(q, self.ring)

    def __eq__(self, other) -> bool:
        return isinstance(other, TPoly) and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        return f"TPoly({list(self.coeffs)!r})"


def tpoly_ring(base: Ring) -> Ring:
    """Ring descriptor for polynomials in t over ``base``."""
    zero = TPoly([], base)
    one = TPoly([base.one], base)
    return Ring(f"t-poly/{base.name}", zero, one, lambda k: TPoly([base.from_int(k)], base), base.has_subtraction)


# ---------------------------------------------------------------------------
# n-periodic matrices


class PeriodicMatrix:
    """An n-periodic Z x Z matrix stored as its list of n x n block diagonals.

    ``blocks[d]`` holds the entries ``A[i + d*n, j]`` for ``i, j`` in
    ``[1, n]``; periodicity supplies every other entry.  Entries above the
    main block diagonal are zero.  When ``band_complete`` is false, access
    below the stored band raises :class:`BandOverflow` instead of assuming
    zeros.
    """

    __slots__ = ("n", "blocks", "band_complete", "ring")

    def __init__(self, n: int, blocks, band_complete: bool = True):
        self.n = n
        self.blocks = tuple(blocks)
        if not self.blocks:
            raise ValueError("need at least one block")
        for b in self.blocks:
            if b.nrows != n or b.ncols != n:
                raise ValueError("blocks must be n x n")
        self.band_complete = band_complete
        self.ring = self.blocks[0].ring

    def entry(self, i: int, j: int):
        s = (j - 1) // self.n
        j0 = j - s * self.n
        i0 = i - s * self.n
        d = (i0 - 1) // self.n
        if d < 0:
            return self.ring.zero
        if d >= len(self.blocks):
            if self.band_complete:
                return self.ring.zero
            raise BandOverflow()
        return self.blocks[d].entry(i0 - d * self.n, j0)

    def window(self, I, J) -> Matrix:
        return Matrix([[self.entry(i, j) for j in J] for i in I], self.ring)

    def minor(self, I, J):
        I, J = tuple(I), tuple(J)
        if len(I) != len(J):
            raise MinorShapeError()
        if not I:
            return self.ring.one
        return self.window(sorted(I), sorted(J)).det()


def build_periodic(n: int, blocks, band_complete: bool = True) -> PeriodicMatrix:
    return PeriodicMatrix(n, blocks, band_complete)


def fold(P: PeriodicMatrix) -> Matrix:
    """Fold an n-periodic matrix into the n x n matrix of polynomials in t."""
    tring = tpoly_ring(P.ring)
    n = P.n
    rows = [
        [TPoly([b.entry(i, j) for b in P.blocks], P.ring) for j in range(1, n + 1)]
        for i in range(1, n + 1)
    ]
    return Matrix(rows, tring)


def unfold(F: Matrix, depth: int) -> PeriodicMatrix:
    """Inverse of :func:`fold` up to the requested number of blocks."""
    n = F.nrows
    base = F.entry(1, 1).ring
    blocks = []
    for d in range(depth + 1):
        blocks.append(
            Matrix([[F.entry(i, j).coeff(d) for j in range(1, n + 1)] for i in range(1, n + 1)], base)
        )
    return PeriodicMatrix(n, blocks)


def tpoly_minor(F: Matrix, I, J) -> TPoly:
    """The full t-polynomial minor of a folded matrix."""
    I, J = tuple(I), tuple(J)
    if len(I) != len(J):
        raise MinorShapeError()
    if not I:
        return F.ring.one
    return F.submatrix(sorted(I), sorted(J)).det()


def tpoly_minor_coeff(F: Matrix, I, J, d: int):
    """Coefficient of t^d in the minor of a folded matrix."""
    return tpoly_minor(F, I, J).coeff(d)


# ---------------------------------------------------------------------------
# block-determinant expansion and the anti-diagonalizing pair U, V


def block_det_expand(A: Matrix, B: Matrix, C: Matrix, p: int, q: int):
    """Expansion of det [[B, 0], [C, A]] through the connecting block C.

    A is (p+1) x p, B is q x (q+1), C is (p+1) x (q+1); the value returned
    is  sum_{a,b} (-1)^(q+a+b) C_ab det(A with row a removed)
    det(B with column b removed),  and it is checked against the direct
    determinant of the assembled (p+q+1) x (p+q+1) matrix.
    """
    ring = C.ring
    if A.nrows != p + 1 or A.ncols != p:
        raise ValueError("block dimension mismatch")
    if q and (B.nrows != q or B.ncols != q + 1):
        raise ValueError("block dimension mismatch")
    if C.nrows != p + 1 or C.ncols != q + 1:
        raise ValueError("block dimension mismatch")
    total = ring.zero
    rowsA = list(range(1, p + 2))
    colsB = list(range(1, q + 2))
    for a in range(1, p + 2):
        detA = minor(A, [r for r in rowsA if r != a], range(1, p + 1))
        if detA == ring.zero:
            continue
        for b in range(1, q + 2):
            cab = C.entry(a, b)
            if cab == ring.zero:
                continue
            detB = minor(B, range(1, q + 1), [c for c in colsB if c != b])
            term = cab * detA * detB
            total = total + term if (q + a + b) % 2 == 0 else total - term
    size = p + q + 1
    assembled = [
        [B.entry(i, j) if j <= q + 1 else ring.zero for j in range(1, size + 1)]
        for i in range(1, q + 1)
    ]
    for i in range(1, p + 2):
        assembled.append(
            [C.entry(i, j) for j in range(1, q + 2)] + [A.entry(i, j) for j in range(1, p + 1)]
        )
    direct = Matrix(assembled, ring).det()
    if direct != total:
        raise VerificationFailure("block determinant expansion mismatch", (total, direct))
    return total


def _uv_entry_u(N: Matrix, i: int, j: int, n: int):
    num = minor(N, [r for r in range(i, n + 1) if r != j], range(1, n - i + 1))
    den = minor(N, range(i + 1, n + 1), range(1, n - i + 1))
    if den == N.ring.zero:
        raise DegeneratePoint("degenerate-point: vanishing anti-diagonal minor")
    val = num / den
    return val if (i + j) % 2 == 0 else N.ring.zero - val


def _uv_entry_v(N: Matrix, i: int, j: int, n: int):
    num = minor(N, range(n - j + 2, n + 1), [c for c in range(1, j + 1) if c != i])
    den = minor(N, range(n - j + 2, n + 1), range(1, j))
    if den == N.ring.zero:
        raise DegeneratePoint("degenerate-point: vanishing anti-diagonal minor")
    val = num / den
    return val if (i + j) % 2 == 0 else N.ring.zero - val


def _inverse_upper_unitriangular(T: Matrix) -> Matrix:
    k = T.nrows
    ring = T.ring
    inv = [[ring.one if i == j else ring.zero for j in range(k)] for i in range(k)]
    for col in range(k):
        for i in range(col - 1, -1, -1):
            acc = ring.zero
            for r in range(i + 1, col + 1):
                acc = acc + T.entry(i + 1, r + 1) * inv[r][col]
            inv[i][col] = ring.zero - acc
    return Matrix(inv, ring)


def build_UV(N: Matrix, m: int) -> tuple[Matrix, Matrix]:
    """Upper uni-triangular U, V with U*N*V anti-diagonal (or its m < n block form).

    The anti-diagonal of U*N*V carries ``(-1)^(n-i) D_i/D_{i+1}`` where
    ``D_i`` is the bottom-left justified minor of N of size n-i+1; those
    minors must be nonzero, otherwise :class:`DegeneratePoint` is raised.
    When ``m < n`` the bottom-left (n-m) x (n-m) block of N must be upper
    uni-triangular and U*N*V has the block form with an identity in the
    lower-left corner.
    """
    n = N.nrows
    ring = N.ring
    if not N.is_square():
        raise ValueError("build_UV wants a square matrix")
    if m >= n:
        U = [[_uv_entry_u(N, i, j, n) if i <= j else ring.zero for j in range(1, n + 1)] for i in range(1, n + 1)]
        V = [[_uv_entry_v(N, i, j, n) if i <= j else ring.zero for j in range(1, n + 1)] for i in range(1, n + 1)]
        return Matrix(U, ring), Matrix(V, ring)

    N3 = N.submatrix(range(m + 1, n + 1), range(1, n - m + 1))
    for i in range(1, n - m + 1):
        for j in range(1, n - m + 1):
            want = ring.one if i == j else (N3.entry(i, j) if i < j else ring.zero)
            if N3.entry(i, j) != want:
                raise ValueError("lower-left block is not upper uni-triangular")
    N3inv = _inverse_upper_unitriangular(N3)
    U = []
    for i in range(1, m + 1):
        U.append([_uv_entry_u(N, i, j, n) if i <= j else ring.zero for j in range(1, n + 1)])
    for i in range(1, n - m + 1):
        U.append([ring.zero] * m + [N3inv.entry(i, j) for j in range(1, n - m + 1)])
    V = []
    for i in range(1, n + 1):
        row = [ring.one if i == j else ring.zero for j in range(1, n - m + 1)]
        row += [
            _uv_entry_v(N, i, j, n) if i <= j else ring.zero
            for j in range(n - m + 1, n + 1)
        ]
        V.append(row)
    return Matrix(U, ring), Matrix(V, ring)
