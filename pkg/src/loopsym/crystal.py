"""Basic and product geometric crystals on matrices, and geometric R-matrices.

A point of the basic crystal is a vector of positive values; an m x n
variable matrix is simultaneously a product of its n columns (operators
``apply_e`` acting on row pairs) and of its m rows (operators
``apply_e_bar`` acting on column pairs).  The barred structure is the
unbarred structure of the transpose throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

from loopsym.linalg import Matrix
from loopsym.points import VarMatrix
from loopsym.semifield import Ring


@dataclass(frozen=True)
class CrystalReadout:
    """The torus-valued map gamma and the pair (epsilon_i, phi_i)."""

    gamma: tuple
    eps: object
    phi: object


def whirl(vec, ring: Ring) -> Matrix:
    """Lower bidiagonal matrix with the vector on the diagonal and 1s below."""
    k = len(vec)
    rows = [[ring.zero] * k for _ in range(k)]
    for i in range(k):
        rows[i][i] = vec[i]
        if i + 1 < k:
            rows[i + 1][i] = ring.one
    return Matrix(rows, ring)


def whirl_product(vectors, ring: Ring) -> Matrix:
    """Product of the whirls of the given vectors, left to right."""
    vectors = list(vectors)
    M = whirl(vectors[0], ring)
    for v in vectors[1:]:
        M = M * whirl(v, ring)
    return M


def row_whirl_matrix(x: VarMatrix) -> Matrix:
    """The n x n product of the whirls of the rows of x (prefix of all m rows)."""
    return whirl_product([x.row(i) for i in range(1, x.m + 1)], x.ring)


def col_whirl_matrix(x: VarMatrix) -> Matrix:
    """The m x m product of the whirls of the columns of x."""
    return whirl_product([x.col(j) for j in range(1, x.n + 1)], x.ring)


# ---------------------------------------------------------------------------
# basic crystal on vectors


def basic_readout(vec, i: int) -> CrystalReadout:
    """gamma = vec, epsilon_i = vec[i+1], phi_i = vec[i] (1-based i < len)."""
    return CrystalReadout(tuple(vec), vec[i], vec[i - 1])


def basic_e(vec, i: int, c) -> tuple:
    """Scale slot i by c and slot i+1 by 1/c."""
    out = list(vec)
    out[i - 1] = c * out[i - 1]
    out[i] = out[i] / c
    return tuple(out)


# ---------------------------------------------------------------------------
# product crystal on matrices (rows acted on by e_i, columns by e-bar_j)


def product_readout(x: VarMatrix, i: int) -> CrystalReadout:
    """Readout of the row structure: from the m x m column-whirl product."""
    M = col_whirl_matrix(x)
    gamma = tuple(M.entry(k, k) for k in range(1, x.m + 1))
    sub = M.entry(i + 1, i)
    return CrystalReadout(gamma, M.entry(i + 1, i + 1) / sub, M.entry(i, i) / sub)


def bar_readout(x: VarMatrix, j: int) -> CrystalReadout:
    """Readout of the column structure (the row structure of the transpose)."""
    return product_readout(x.transpose(), j)


def _apply_e_columns(cols, prefix, i: int, c, ring: Ring):
    """Fold the two-factor rule over the column factors, right to left.

    ``prefix[k]`` is the whirl product of the first k columns; the last
    factor absorbs c/c+, the rest recurse with c+, where
    c+ = (c*phi(last) + eps(rest)) / (phi(last) + eps(rest)).
    """
    if len(cols) == 1:
        return [basic_e(cols[0], i, c)]
    last = cols[-1]
    M = prefix[len(cols) - 1]
    eps_rest = M.entry(i + 1, i + 1) / M.entry(i + 1, i)
    phi_last = last[i - 1]
    cplus = (c * phi_last + eps_rest) / (phi_last + eps_rest)
    return _apply_e_columns(cols[:-1], prefix, i, cplus, ring) + [basic_e(last, i, c / cplus)]


def apply_e(x: VarMatrix, i: int, c) -> VarMatrix:
    """Geometric crystal operator on rows i, i+1 of the matrix."""
    if not 1 <= i <= x.m - 1:
        raise ValueError(f"row operator index {i} out of range")
    cols = [x.col(j) for j in range(1, x.n + 1)]
    prefix = [None] * (x.n + 1)
    M = whirl(cols[0], x.ring)
    prefix[1] = M
    for k in range(2, x.n + 1):
        M = M * whirl(cols[k - 1], x.ring)
        prefix[k] = M
    new_cols = _apply_e_columns(cols, prefix, i, c, x.ring)
    return VarMatrix(list(zip(*new_cols)), x.ring)


def apply_e_bar(x: VarMatrix, j: int, c) -> VarMatrix:
    """Geometric crystal operator on columns j, j+1 of the matrix."""
    return apply_e(x.transpose(), j, c).transpose()


# ---------------------------------------------------------------------------
# geometric R-matrix


def geometric_r(xvec, yvec, ring: Ring) -> tuple[tuple, tuple]:
    """The birational R-matrix on a pair of same-length vectors.

    Returns (y', x') with y'_j = y_j k_{j+1}/k_j and x'_j = x_j k_j/k_{j+1},
    where k_r sums the products of a prefix of y's and the complementary
    suffix of x's around the cycle.
    """
    n = len(xvec)
    if n != len(yvec):
        raise ValueError("R-matrix needs equal lengths")

    def kappa(r0: int):
        total = ring.zero
        for k in range(n):
            term = ring.one
            for t in range(k):
                term = term * yvec[(r0 + t) % n]
            for t in range(k + 1, n):
                term = term * xvec[(r0 + t) % n]
            total = total + term
        return total

    kap = [kappa(r) for r in range(n)]
    yp = tuple(yvec[j] * kap[(j + 1) % n] / kap[j] for j in range(n))
    xp = tuple(xvec[j] * kap[j] / kap[(j + 1) % n] for j in range(n))
    return yp, xp


def row_r(x: VarMatrix, i: int) -> VarMatrix:
    """Swap-with-dressing of rows i, i+1 by the R-matrix."""
    if not 1 <= i <= x.m - 1:
        raise ValueError(f"row R index {i} out of range")
    first, second = geometric_r(x.row(i), x.row(i + 1), x.ring)
    return x.with_rows({i: first, i + 1: second})


def col_r(x: VarMatrix, j: int) -> VarMatrix:
    """Swap-with-dressing of columns j, j+1 by the R-matrix."""
    return row_r(x.transpose(), j).transpose()


def weyl_reflection(x: VarMatrix, i: int) -> VarMatrix:
    """The reflection e_i^(eps_i/phi_i); coincides with row_r."""
    ro = product_readout(x, i)
    return apply_e(x, i, ro.eps / ro.phi)
