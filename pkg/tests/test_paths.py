"""Path-family sums against determinant oracles, and complementation."""

import math
from fractions import Fraction

from loopsym.gt import GTPattern, grsk, phi_matrix
from loopsym.linalg import minor, tpoly_minor
from loopsym.paths import (
    HighwayFamily,
    UnderwayComplement,
    _highway_families,
    cyl_family_sum,
    gamma_minor,
    highway_minor,
    underway_minor,
)
from loopsym.points import VarMatrix
from loopsym.schur import (
    barred_matrix,
    barred_skew_schur,
    folded_matrix,
    loop_e,
    unfolded_matrix,
)
from loopsym.semifield import RATIONAL, random_rational, trial_rng


def test_single_path_counts_are_binomial():
    """Paths from one source to one sink are column fillings, counted by a
    binomial coefficient."""
    m, n = 4, 3
    for i in range(1, 3 * n):
        for j in range(1, 3 * n):
            fams = _highway_families(n, tuple(range(1, m + 1)), (i,), (j,))
            k = m + j - i
            want = math.comb(m, k) if 0 <= k <= m else 0
            assert len(fams) == want


def test_ten_paths_example():
    rng = trial_rng(5, 0)
    x = VarMatrix.random(5, 3, rng)
    fams = _highway_families(3, tuple(range(1, 6)), (5,), (2,))
    assert len(fams) == 10
    assert highway_minor(x, [5], [2]) == loop_e(x, 2, 2)


def test_highway_matches_periodic_minor():
    rng = trial_rng(5, 1)
    for m, n in [(3, 2), (2, 3), (4, 3), (3, 4)]:
        x = VarMatrix.random(m, n, rng)
        Mt = unfolded_matrix(x)
        for _ in range(25):
            k = rng.randint(1, 3)
            I = sorted(rng.sample(range(1, 3 * n + 1), k))
            J = sorted(rng.sample(range(1, 3 * n + 1), k))
            assert highway_minor(x, I, J) == Mt.minor(I, J)


def test_underway_matches_barred_minor():
    rng = trial_rng(5, 2)
    for m, n in [(3, 3), (4, 3), (3, 4)]:
        x = VarMatrix.random(m, n, rng)
        Mb = barred_matrix(x)
        for i in range(1, m + 1):
            assert underway_minor(x, [i], [i]) == x.pi(i)
        for _ in range(25):
            k = rng.randint(1, m)
            A = sorted(rng.sample(range(1, m + 1), k))
            B = sorted(rng.sample(range(1, m + 1), k))
            assert underway_minor(x, A, B) == minor(Mb, A, B)


def test_underway_rectangle_is_barred_schur():
    rng = trial_rng(5, 3)
    x = VarMatrix.random(3, 3, rng)
    assert underway_minor(x, [2, 3], [1, 2]) == barred_skew_schur((2, 2), (), 3, x)


def test_gamma_flag_minors_give_laurent_identity():
    rng = trial_rng(5, 4)
    x = VarMatrix.random(3, 3, rng)
    _, Q = grsk(x)
    z = Q.z
    lhs = gamma_minor(Q, [1, 3], [1, 2]) / gamma_minor(Q, [2, 3], [1, 2]) + gamma_minor(
        Q, [3], [2]
    ) / gamma_minor(Q, [3], [1])
    rhs = z(1, 2) / z(2, 3) + z(1, 1) / z(2, 2) + z(1, 2) / z(1, 1) + z(2, 3) / z(2, 2)
    assert lhs == rhs


def test_gamma_triangular_and_random():
    rng = trial_rng(5, 5)
    for m, n in [(3, 3), (2, 4), (4, 4)]:
        z = GTPattern(
            m, n, {k: random_rational(rng) for k in GTPattern.domain(m, n)}, RATIONAL
        )
        Phi = phi_matrix(z)
        for k in range(1, min(m, n) + 1):
            prod = Fraction(1)
            for i in range(1, k + 1):
                for t in range(1, min(i, z.width) + 1):
                    prod *= z.z(t, i) / (z.z(t, i - 1) if i > t else Fraction(1))
            assert gamma_minor(z, range(1, k + 1), range(1, k + 1)) == prod
        for _ in range(30):
            k = rng.randint(1, n)
            I = sorted(rng.sample(range(1, n + 1), k))
            J = sorted(rng.sample(range(1, n + 1), k))
            assert gamma_minor(z, I, J) == minor(Phi, I, J)


def test_cylinder_zero_winding_is_one_band():
    rng = trial_rng(5, 6)
    x = VarMatrix.random(3, 3, rng)
    for _ in range(10):
        k = rng.randint(1, 3)
        I = sorted(rng.sample(range(1, 4), k))
        J = sorted(rng.sample(range(1, 4), k))
        assert cyl_family_sum(x, I, J, 0) == highway_minor(x, I, J)


def test_cylinder_matches_signed_coefficients():
    rng = trial_rng(5, 7)
    for m, n in [(3, 2), (4, 3), (5, 3)]:
        x = VarMatrix.random(m, n, rng)
        F = folded_matrix(x)
        for _ in range(20):
            k = rng.randint(1, n)
            I = sorted(rng.sample(range(1, n + 1), k))
            J = sorted(rng.sample(range(1, n + 1), k))
            poly = tpoly_minor(F, I, J)
            for d in range(3):
                want = poly.coeff(d)
                if ((k - 1) * d) % 2 == 1:
                    want = -want
                assert cyl_family_sum(x, I, J, d) == want


def test_complement_of_empty_family_covers_window():
    fam = HighwayFamily(sources=(), rises=(), m=3, n=2)
    comp = UnderwayComplement(fam, row_lo=1, row_hi=4)
    from loopsym.paths import window_edges

    assert comp.edges == window_edges(3, 1, 4)
    rng = trial_rng(5, 8)
    x = VarMatrix.random(3, 2, rng)
    assert comp.weight(x) == Fraction(1) == fam.weight(x)


def test_complement_reconstructs_figure_crossings():
    fam = HighwayFamily(
        sources=(6, 7, 8, 10, 11, 12),
        rises=(
            {1, 2, 4, 5, 6},
            {1, 3, 4, 5, 6},
            {2, 3, 4, 5, 7},
            {1, 3, 4, 5, 7},
            {2, 5},
            {4, 7},
        ),
        m=7,
        n=4,
    )
    comp = UnderwayComplement(fam, row_lo=-3, row_hi=16)
    rng = trial_rng(5, 9)
    x = VarMatrix.random(7, 4, rng)
    assert fam.weight(x) == comp.weight(x)
    a_par, b_par = (0, 3, 3), (3, 1, 2)
    for k, boundary, want in ((1, 4, (3, 6)), (2, 8, (2, 4))):
        cr = set(comp.crossings(boundary))
        X = (
            cr
            - set(range(1, 4 - a_par[k] + 1))
            - set(range(7 - (4 - b_par[k - 1]) + 1, 8))
        )
        assert tuple(sorted(X)) == want


def test_complement_weight_preserved_on_random_families():
    import random

    def random_family(rng, m, n):
        while True:
            k = rng.randint(1, 3)
            sources = sorted(rng.sample(range(1, 3 * n + 1), k))
            try:
                rises = [
                    set(rng.sample(range(1, m + 1), rng.randint(0, m))) for _ in sources
                ]
                return HighwayFamily(sources, rises, m, n)
            except ValueError:
                continue

    ok = 0
    for t in range(200):
        rng = random.Random(5000 + t)
        m, n = rng.randint(2, 5), rng.randint(2, 4)
        fam = random_family(rng, m, n)
        x = VarMatrix.random(m, n, rng)
        comp = UnderwayComplement(fam, min(fam.sinks) - n, max(fam.sources) + n)
        assert fam.weight(x) == comp.weight(x)
        ok += 1
    assert ok == 200


def test_tropical_modes_are_minima():
    x = VarMatrix.tropical([[1, 2], [0, 3], [2, 1]])
    v = highway_minor(x, [2], [1])
    # E_2^{(2)} in min-plus: min over products of two entries
    assert v == loop_e(x, 2, 2)
    assert underway_minor(x, [1], [1]) == x.pi(1)
