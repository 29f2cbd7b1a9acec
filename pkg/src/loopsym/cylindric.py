"""Cylindric partitions and tableaux, cylindric Schur sums, border-strip
removal, the folded Jacobi-Trudi identity, and the folded pseudo-energy
identities.

A k-cylindric partition fits in width k and has conjugate spread at most
n - k; its infinite extension tiles the plane by translates through
(-(n-k), k).  Cylindricity of a filling is checked across one translate
boundary, which periodicity makes sufficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from loopsym.linalg import tpoly_minor
from loopsym.partitions import ColoredSkewShape, conjugate, contains, partition
from loopsym.paths import underway_minor
from loopsym.points import VarMatrix
from loopsym.schur import folded_matrix, maya_sets, reduced_folded_matrix
from loopsym.semifield import VerificationFailure


def is_k_cylindric(lam, k: int, n: int) -> bool:
    lam = partition(lam)
    if lam and lam[0] > k:
        return False
    lamc = conjugate(lam) + (0,) * k
    return lamc[0] - lamc[k - 1] <= n - k


@dataclass(frozen=True)
class CylShape:
    """k-cylindric skew shape with an anchor color mod n."""

    k: int
    lam: tuple
    mu: tuple
    r: int
    n: int

    def __init__(self, k, lam, mu, r, n):
        lam, mu = partition(lam), partition(mu)
        if not is_k_cylindric(lam, k, n) or not is_k_cylindric(mu, k, n):
            raise ValueError(f"not {k}-cylindric inside modulus {n}: {lam}, {mu}")
        if not contains(lam, mu):
            raise ValueError(f"{mu} not contained in {lam}")
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "lam", lam)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "r", ((r - 1) % n) + 1)
        object.__setattr__(self, "n", n)

    def cells(self):
        mu = self.mu + (0,) * (len(self.lam) - len(self.mu))
        return [
            (i + 1, j + 1)
            for i, l in enumerate(self.lam)
            for j in range(mu[i], l)
        ]

    @property
    def size(self) -> int:
        return sum(self.lam) - sum(self.mu)

    def color(self, i: int, j: int) -> int:
        return ((self.r + i - j - 1) % self.n) + 1

    def translate_cell(self, cell, steps: int = 1):
        """Image of a cell under the generating translation, applied steps times."""
        i, j = cell
        return (i - steps * (self.n - self.k), j + steps * self.k)

    def __repr__(self) -> str:
        return f"CylShape({list(self.lam)}/{list(self.mu)}; k={self.k}, r={self.r} mod {self.n})"


# ---------------------------------------------------------------------------
# cylindric tableaux


@lru_cache(maxsize=None)
def _cyl_fillings(k: int, lam: tuple, mu: tuple, n: int, max_entry: int):
    """Fillings of the fundamental domain whose periodic extension is
    semistandard; returned as dicts cell -> value."""
    from loopsym.partitions import ssyt_columns

    shape = CylShape(k, lam, mu, 1, n)
    cells = shape.cells()
    muc = conjugate(mu) + (0,) * (len(conjugate(lam)) - len(conjugate(mu)))
    out = []
    for filling in ssyt_columns(lam, mu, max_entry):
        values = {}
        for c, column in enumerate(filling):
            for idx, v in enumerate(column):
                values[(muc[c] + 1 + idx, c + 1)] = v
        if _extension_semistandard(shape, values):
            out.append(values)
    return tuple(out)


def _extension_semistandard(shape: CylShape, values: dict) -> bool:
    """Check row-weak / column-strict constraints across one translate."""
    shifted = {shape.translate_cell(cell): v for cell, v in values.items()}
    union = dict(values)
    union.update(shifted)
    for (i, j), v in shifted.items():
        left = union.get((i, j - 1))
        if left is not None and left > v:
            return False
        right = values.get((i, j + 1))
        if right is not None and v > right:
            return False
        above = union.get((i - 1, j))
        if above is not None and above >= v:
            return False
        below = values.get((i + 1, j))
        if below is not None and v >= below:
            return False
    return True


def cyl_schur(shape: CylShape, x: VarMatrix):
    """Generating function of cylindric tableaux with entries at most m."""
    if shape.n != x.n:
        raise ValueError("color modulus of shape and point disagree")
    total = x.ring.zero
    for values in _cyl_fillings(shape.k, shape.lam, shape.mu, shape.n, x.m):
        term = x.ring.one
        for (i, j), v in values.items():
            term = term * x.xc(v, shape.color(i, j))
        total = total + term
    return total


# ---------------------------------------------------------------------------
# border strips and the shape ladder


def border_strip_removed(lam, k: int, n: int):
    """The partition left after removing the length-n border strip through
    the bottom row, or None when no such strip exists."""
    lam = partition(lam)
    lamc = conjugate(lam) + (0,) * (k - len(conjugate(lam)))
    lamc = lamc[:k]
    if lamc[0] < n - k + 1:
        return None
    new_conj = [lamc[a] - 1 for a in range(1, k)] + [lamc[0] - n + k - 1]
    if any(c < 0 for c in new_conj):
        return None
    if any(new_conj[i] < new_conj[i + 1] for i in range(len(new_conj) - 1)):
        return None
    return conjugate(tuple(c for c in new_conj if c > 0))


def shape_after_strip(shape: CylShape):
    """R(shape): remove a border strip from lam; None when undefined."""
    flat = border_strip_removed(shape.lam, shape.k, shape.n)
    if flat is None or not contains(flat, shape.mu):
        return None
    return CylShape(shape.k, flat, shape.mu, shape.r, shape.n)


def d_max(shape: CylShape) -> int:
    """Largest iterate of strip removal that stays defined (-1 when the
    shape itself is not a shape)."""
    if not contains(shape.lam, shape.mu):
        return -1
    d = 0
    cur = shape
    while True:
        nxt = shape_after_strip(cur)
        if nxt is None:
            return d
        cur = nxt
        d += 1


def shortest_diagonal_length(shape: CylShape) -> int:
    """Shortest diagonal of the infinite extension (diagonals repeat mod n)."""
    base = shape.cells()
    if not base:
        return 0
    diag = [j - i for i, j in base]
    lo, hi = min(diag), max(diag)
    t_lo = (0 - hi) // shape.n - 1
    t_hi = (shape.n - lo) // shape.n + 1
    cells = set()
    for t in range(t_lo, t_hi + 1):
        for cell in base:
            cells.add(shape.translate_cell(cell, t))
    return min(sum(1 for (i, j) in cells if j - i == c0) for c0 in range(shape.n))


def detached_component(shape: CylShape):
    """When the infinite extension is disconnected, one component as an
    ordinary colored skew shape; None when connected."""
    cells = set()
    reps = range(-shape.n - 1, shape.n + 2)
    for t in reps:
        for cell in shape.cells():
            cells.add(shape.translate_cell(cell, t))
    if not cells:
        return ColoredSkewShape((), (), shape.r, shape.n)
    base = sorted(c for c in cells if 1 <= c[0])
    if not base:
        return None
    start = base[0]
    comp = {start}
    frontier = [start]
    while frontier:
        i, j = frontier.pop()
        for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
            if nb in cells and nb not in comp:
                comp.add(nb)
                frontier.append(nb)
    if len(comp) >= len(cells) or len(comp) != shape.size:
        return None
    min_i = min(i for i, _ in comp)
    min_j = min(j for _, j in comp)
    moved = {(i - min_i + 1, j - min_j + 1) for i, j in comp}
    color_shift = (min_i - 1) - (min_j - 1)
    heights = {}
    for i, j in moved:
        heights.setdefault(j, []).append(i)
    ncols = max(heights)
    lamc, muc = [], []
    for j in range(1, ncols + 1):
        rows = sorted(heights.get(j, []))
        if not rows or rows != list(range(rows[0], rows[0] + len(rows))):
            return None
        muc.append(rows[0])
        lamc.append(rows[-1])
    try:
        lam = conjugate(partition(lamc))
        mu = conjugate(partition([h - 1 for h in muc] + [0]))
    except ValueError:
        return None
    return ColoredSkewShape(lam, mu, shape.r + color_shift, shape.n)


# ---------------------------------------------------------------------------
# index sets on the cylinder


def cyl_maya(lam, mu, r: int, k: int, m: int, n: int):
    """Reduced index sets and the winding degree of a cylindric shape.

    Returns (I_hat, J_hat, d_star) where the unreduced shifted supports are
    taken with conjugates padded to length k; d_star is the total shift of
    the sink set minus that of the source set.
    """
    I, J = maya_sets(lam, mu, r, m, n, ell=k)
    return _reduce_mod(I, n), _reduce_mod(J, n), _d_star(J, n) - _d_star(I, n)


def _reduce_mod(S, n: int):
    return tuple(sorted(((s - 1) % n) + 1 for s in S))


def _d_star(S, n: int) -> int:
    return sum((((s - 1) % n) + 1 - s) // n for s in S)


def partition_from_sinks(J, k: int, m: int, n: int):
    """The widest k-cylindric partition whose sink set inside [n] is J."""
    J = sorted(J, reverse=True)
    conj = tuple(m + J[a - 1] - k + a - 1 for a in range(1, k + 1))
    return conjugate(tuple(c for c in conj if c > 0))


def partition_from_sources(I, k: int, n: int):
    """The k-cylindric partition whose source set inside [n] is I."""
    I = sorted(I, reverse=True)
    conj = tuple(I[a - 1] - k + a - 1 for a in range(1, k + 1))
    if any(c < 0 for c in conj):
        raise ValueError("source set does not come from a partition")
    return conjugate(tuple(c for c in conj if c > 0))


# ---------------------------------------------------------------------------
# identity checks


def cyl_jt_check(shape: CylShape, x: VarMatrix) -> None:
    """Both directions of the folded determinant identity for the shape.

    Part 1: the tableau sum equals the signed t-coefficient of the reduced
    index minor.  Part 2: the full t-expansion of that minor lists the
    border-strip ladder of the widest shape with the same index data.
    """
    k, n = shape.k, shape.n
    Ihat, Jhat, dstar = cyl_maya(shape.lam, shape.mu, shape.r, k, x.m, n)
    F = folded_matrix(x)
    poly = tpoly_minor(F, Ihat, Jhat)
    sign = 1 if ((k - 1) * dstar) % 2 == 0 else -1
    coeff = poly.coeff(dstar)
    want = coeff if sign > 0 else x.ring.zero - coeff
    direct = cyl_schur(shape, x)
    if direct != want:
        raise VerificationFailure(
            "cylindric tableau sum disagrees with folded minor coefficient",
            {"shape": shape, "tableaux": direct, "coeff": want, "d": dstar},
        )
    _expansion_check(Ihat, Jhat, k, x, poly)


def _expansion_check(I, J, k: int, x: VarMatrix, poly) -> None:
    lam = partition_from_sinks(J, k, x.m, x.n)
    mu = partition_from_sources(I, k, x.n)
    if contains(lam, mu):
        ladder = CylShape(k, lam, mu, k, x.n)
        dm = d_max(ladder)
    else:
        ladder, dm = None, -1
    for d in range(max(dm, poly.degree) + 1):
        if d <= dm:
            cur = ladder
            for _ in range(d):
                cur = shape_after_strip(cur)
            term = cyl_schur(cur, x)
        else:
            term = x.ring.zero
        sign = 1 if ((k - 1) * d) % 2 == 0 else -1
        got = poly.coeff(d) if sign > 0 else x.ring.zero - poly.coeff(d)
        if got != term:
            raise VerificationFailure(
                "folded minor expansion disagrees with strip ladder",
                {"I": I, "J": J, "d": d, "coeff": got, "tableaux": term},
            )


def bottom_left_ladder_check(x: VarMatrix, i: int, reduced: bool = False) -> None:
    """The bottom-left folded minor lists the rectangle strip ladder; with
    ``reduced`` the reduced folded matrix replaces the plain one."""
    m, n = x.m, x.n
    if not 1 <= i <= min(m, n) + 1:
        raise ValueError(f"index {i} out of range")
    k = n - i + 1
    F = reduced_folded_matrix(x) if reduced else folded_matrix(x)
    poly = tpoly_minor(F, range(i, n + 1), range(1, n - i + 2))
    if k == 0:
        if poly != F.ring.one:
            raise VerificationFailure("empty bottom-left minor is not 1", {"i": i})
        return
    top = max(0, m - 2 * i + 2)
    lam = partition([k] * (m - n + k)) if m - n + k >= 0 else None
    for d in range(max(top, poly.degree) + 1):
        if lam is not None and d <= top:
            shape = CylShape(k, lam, (), n, n)
            cur, ok = shape, True
            for _ in range(d):
                cur = shape_after_strip(cur)
                if cur is None:
                    ok = False
                    break
            term = cyl_schur(cur, x) if ok else x.ring.zero
        else:
            term = x.ring.zero
        sign = 1 if ((n - i) * d) % 2 == 0 else -1
        got = poly.coeff(d) if sign > 0 else x.ring.zero - poly.coeff(d)
        if got != term:
            raise VerificationFailure(
                "bottom-left folded ladder mismatch",
                {"i": i, "d": d, "reduced": reduced, "coeff": got, "tableaux": term},
            )


def folded_minor_sum_check(x: VarMatrix, i: int, a: int | None = None, b: int | None = None) -> None:
    """Each rung of the rectangle ladder equals a sum of barred-window
    minors over sliding index sets (general [a, b] variable range)."""
    m, n = x.m, x.n
    if a is None and b is None:
        a, b = 1, m
    if not (1 <= a <= b <= m and 1 <= i <= min(b - a + 1, n)):
        raise ValueError("folded sum-of-minors parameters out of range")
    k = n - i + 1
    span = b - a + 1
    for d in range(0, span - 2 * i + 3):
        lam = partition([k] * (span - i + 1))
        shape = CylShape(k, lam, (), n + a - 1, n)
        cur, defined = shape, True
        for _ in range(d):
            cur = shape_after_strip(cur)
            if cur is None:
                defined = False
                break
        lhs = _restricted_cyl_schur(cur, x, a, b) if defined else x.ring.zero
        total = x.ring.zero
        for X in combinations(range(a + i - 1, b - i + 2), span - 2 * i + 2 - d):
            A = sorted(set(X) | set(range(b - i + 2, b + 1)))
            B = sorted(set(range(a, a + i - 1)) | set(X))
            total = total + underway_minor(x, A, B)
        if lhs != total:
            raise VerificationFailure(
                "folded sum of minors mismatch",
                {"i": i, "a": a, "b": b, "d": d, "lhs": lhs, "rhs": total},
            )


def _restricted_cyl_schur(shape: CylShape, x: VarMatrix, a: int, b: int):
    """Cylindric tableau sum with entries restricted to rows a..b of x."""
    total = x.ring.zero
    span = b - a + 1
    for values in _cyl_fillings(shape.k, shape.lam, shape.mu, shape.n, span):
        term = x.ring.one
        for (i, j), v in values.items():
            term = term * x.xc(v + a - 1, shape.color(i, j))
        total = total + term
    return total
