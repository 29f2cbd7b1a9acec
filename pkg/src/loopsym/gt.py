"""Trapezoidal patterns, the bidiagonal factorization map and its inverse,
pattern-level crystal operators, geometric RSK, and decorations.

A pattern of width m and height n stores entries ``z[i, j]`` for
``1 <= i <= min(m, n)`` and ``i <= j <= n``; its shape is the last row
``(z[1, n], ..., z[p, n])`` with ``p = min(m, n)``.
"""

from __future__ import annotations

from loopsym.crystal import whirl_product
from loopsym.linalg import Matrix, flag_minor, minor
from loopsym.points import VarMatrix
from loopsym.semifield import DegeneratePoint, Ring, format_rational, parse_rational


class GTPattern:
    """Trapezoidal array of semifield values."""

    __slots__ = ("m", "n", "entries", "ring")

    def __init__(self, m: int, n: int, entries: dict, ring: Ring):
        self.m = m
        self.n = n
        self.ring = ring
        dom = set(self.domain(m, n))
        got = set(entries)
        if got != dom:
            raise ValueError(f"pattern domain mismatch: missing {dom - got}, extra {got - dom}")
        self.entries = dict(entries)

    @staticmethod
    def domain(m: int, n: int):
        p = min(m, n)
        return [(i, j) for i in range(1, p + 1) for j in range(i, n + 1)]

    @property
    def width(self) -> int:
        return min(self.m, self.n)

    def z(self, i: int, j: int):
        return self.entries[(i, j)]

    def shape(self) -> tuple:
        return tuple(self.z(i, self.n) for i in range(1, self.width + 1))

    def row_ratios(self, i: int) -> list:
        """(z[i,i], z[i,i+1]/z[i,i], ..., z[i,n]/z[i,n-1])."""
        out = [self.z(i, i)]
        for j in range(i + 1, self.n + 1):
            out.append(self.z(i, j) / self.z(i, j - 1))
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GTPattern)
            and (self.m, self.n) == (other.m, other.n)
            and all(self.entries[k] == other.entries[k] for k in self.entries)
        )

    def __repr__(self) -> str:
        return f"GTPattern(m={self.m}, n={self.n})"

    # -- JSON ------------------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "entries": {f"{i},{j}": format_rational(v) for (i, j), v in sorted(self.entries.items())},
        }

    @classmethod
    def from_json(cls, data: dict, ring: Ring) -> "GTPattern":
        entries = {}
        for key, val in data["entries"].items():
            i, j = (int(t) for t in key.split(","))
            entries[(i, j)] = parse_rational(val) if ring.name == "rational" else ring.from_int(int(val))
        return cls(int(data["m"]), int(data["n"]), entries, ring)


# ---------------------------------------------------------------------------
# the factorization map and its inverse


def phi_matrix(z: GTPattern) -> Matrix:
    """The n x n product of row-ratio bidiagonal factors, widest row first."""
    n, ring = z.n, z.ring
    factors = []
    for i in range(z.width, 0, -1):
        ratios = z.row_ratios(i)
        rows = [[ring.zero] * n for _ in range(n)]
        for k in range(1, n + 1):
            rows[k - 1][k - 1] = ring.one if k < i else ratios[k - i]
            if i <= k < n:
                rows[k][k - 1] = ring.one
        factors.append(Matrix(rows, ring))
    M = factors[0]
    for F in factors[1:]:
        M = M * F
    return M


def psi_pattern(A: Matrix, m: int, n: int, ring: Ring) -> GTPattern:
    """Inverse of the factorization map: ratios of flag minors of A."""
    entries = {}
    for i, j in GTPattern.domain(m, n):
        den = flag_minor(A, range(i + 1, j + 1))
        if den == ring.zero:
            raise DegeneratePoint("degenerate-point: vanishing flag minor")
        entries[(i, j)] = flag_minor(A, range(i, j + 1)) / den
    return GTPattern(m, n, entries, ring)


def gt_readout(z: GTPattern, j: int):
    """gamma / epsilon_j / phi_j of the pattern, through its matrix."""
    M = phi_matrix(z)
    gamma = tuple(M.entry(k, k) for k in range(1, z.n + 1))
    sub = M.entry(j + 1, j)
    if sub == z.ring.zero:
        raise DegeneratePoint("degenerate-point: vanishing subdiagonal entry")
    return gamma, M.entry(j + 1, j + 1) / sub, M.entry(j, j) / sub


def gt_apply_e(z: GTPattern, j: int, c) -> GTPattern:
    """Pattern-level crystal operator: conjugate the matrix and pull back."""
    if not 1 <= j <= z.n - 1:
        raise ValueError(f"pattern operator index {j} out of range")
    ring = z.ring
    _, eps, phi = gt_readout(z, j)
    M = phi_matrix(z)
    left = Matrix.elementary(z.n, j, (c - ring.one) * phi, ring)
    right = Matrix.elementary(z.n, j, (ring.one / c - ring.one) * eps, ring)
    return psi_pattern(left * M * right, z.m, z.n, ring)


# ---------------------------------------------------------------------------
# geometric RSK


def grsk(x: VarMatrix) -> tuple[GTPattern, GTPattern]:
    """Insertion and recording patterns from row-product flag minors.

    The insertion pattern uses the full row-whirl product; the k-th diagonal
    of the recording pattern is the shape of the pattern of the first k rows.
    """
    ring = x.ring
    m, n = x.m, x.n
    prefixes = [None]
    M = None
    for i in range(1, m + 1):
        W = whirl_product([x.row(i)], ring)
        M = W if M is None else prefixes[-1] * W
        prefixes.append(M)
    p_entries = {}
    for i, j in GTPattern.domain(m, n):
        den = flag_minor(prefixes[m], range(i + 1, j + 1))
        if den == ring.zero:
            raise DegeneratePoint("degenerate-point in insertion pattern")
        p_entries[(i, j)] = flag_minor(prefixes[m], range(i, j + 1)) / den
    P = GTPattern(m, n, p_entries, ring)
    q_entries = {}
    for jp, ip in GTPattern.domain(n, m):
        A = prefixes[ip]
        den = flag_minor(A, range(jp + 1, n + 1))
        if den == ring.zero:
            raise DegeneratePoint("degenerate-point in recording pattern")
        q_entries[(jp, ip)] = flag_minor(A, range(jp, n + 1)) / den
    Q = GTPattern(n, m, q_entries, ring)
    return P, Q


def grsk_transposed(x: VarMatrix) -> tuple[GTPattern, GTPattern]:
    """The same pair computed from column-product flag minors."""
    Q, P = grsk(x.transpose())
    return P, Q


def glue(P: GTPattern, Q: GTPattern) -> Matrix:
    """Output matrix with P bottom-left and the transpose of Q top-right.

    P has width m, height n; Q has width n, height m; they share the shape
    diagonal.  Entry targets: z[i, j] -> (m+1-i, j-i+1) and
    z'[j, i] -> (i-j+1, n+1-j).
    """
    m, n = P.m, P.n
    if (Q.m, Q.n) != (n, m):
        raise ValueError("incompatible pattern pair")
    rows = [[None] * n for _ in range(m)]
    for (i, j), v in P.entries.items():
        rows[m - i][j - i] = v
    for (j, i), v in Q.entries.items():
        rows[i - j][n - j] = v
    if any(v is None for row in rows for v in row):
        raise ValueError("glued matrix has holes")
    return Matrix(rows, P.ring)


# ---------------------------------------------------------------------------
# decorations


def decoration_gt(z: GTPattern):
    """Sum of the two families of consecutive-entry ratios (plus the tail
    entry when the pattern is wider than it is tall)."""
    ring = z.ring
    total = ring.zero
    p = z.width
    for i in range(1, p + 1):
        for j in range(i, z.n):
            total = total + z.z(i, j + 1) / z.z(i, j)
    for i in range(1, min(z.m - 1, p) + 1):
        for j in range(i, z.n):
            if (i + 1, j + 1) in z.entries:
                total = total + z.z(i, j) / z.z(i + 1, j + 1)
    if z.m < z.n:
        total = total + z.z(z.m, z.m)
    return total


def decoration_gt_minors(z: GTPattern):
    """The same decoration as ratios of minors of the pattern's matrix."""
    ring = z.ring
    M = phi_matrix(z)
    m, n = z.m, z.n
    total = ring.zero
    for k in range(1, min(m - 1, n - 1) + 1):
        num1 = minor(M, [k] + list(range(k + 2, n + 1)), range(1, n - k + 1))
        num2 = minor(M, range(k + 1, n + 1), list(range(1, n - k)) + [n - k + 1])
        den = minor(M, range(k + 1, n + 1), range(1, n - k + 1))
        total = total + (num1 + num2) / den
    if m < n:
        num = minor(M, [m] + list(range(m + 2, n + 1)), range(1, n - m + 1))
        den = minor(M, range(m + 1, n + 1), range(1, n - m + 1))
        total = total + num / den
        for j in range(1, n - m + 1):
            num = minor(M, range(m + 1, m + j + 1), list(range(1, j)) + [j + 1])
            den = minor(M, range(m + 1, m + j + 1), range(1, j + 1))
            total = total + num / den
    return total


def decoration_mat(x: VarMatrix):
    """Sum of all matrix entries."""
    total = x.ring.zero
    for i in range(1, x.m + 1):
        for j in range(1, x.n + 1):
            total = total + x.x(i, j)
    return total
