"""Cylindric shapes, tableaux, the folded determinant identities."""

import pytest

from loopsym.cylindric import (
    CylShape,
    border_strip_removed,
    bottom_left_ladder_check,
    cyl_jt_check,
    cyl_maya,
    cyl_schur,
    d_max,
    detached_component,
    folded_minor_sum_check,
    is_k_cylindric,
    partition_from_sinks,
    partition_from_sources,
    shape_after_strip,
    shortest_diagonal_length,
)
from loopsym.partitions import contains, partitions_in_box
from loopsym.points import VarMatrix
from loopsym.schur import loop_e, ssyt_sum
from loopsym.semifield import trial_rng


def test_cylindric_predicate():
    assert is_k_cylindric((3, 3, 2), 3, 5)
    assert not is_k_cylindric((4,), 3, 5)
    assert not is_k_cylindric((2, 1, 1, 1), 2, 3)  # conjugate spread 3 > 1


def test_special_cases():
    rng = trial_rng(6, 0)
    x = VarMatrix.random(4, 3, rng)
    # one column
    assert cyl_schur(CylShape(1, (1, 1), (), 2, 3), x) == loop_e(x, 2, 2)
    # width n - 1: capped weakly increasing sequences
    from loopsym.energy import tau_lp

    assert cyl_schur(CylShape(2, (2, 2, 1), (), 1, 3), x) == tau_lp(x, 5, 1)
    # width n: elementary symmetric functions of the row products
    from itertools import combinations

    pis = [x.pi(i) for i in range(1, 5)]
    want = x.ring.zero
    for sub in combinations(pis, 2):
        term = x.ring.one
        for p in sub:
            term = term * p
        want = want + term
    assert cyl_schur(CylShape(3, (3, 3), (), 3, 3), x) == want


def test_strip_ladder_example():
    sh = CylShape(5, (5, 5, 5, 5, 2, 1), (2,), 5, 7)
    r1 = shape_after_strip(sh)
    r2 = shape_after_strip(r1)
    assert r1.lam == (5, 5, 5, 1)
    assert r2.lam == (5, 4)
    assert shape_after_strip(r2) is None
    assert d_max(sh) == 2


def test_strip_undefined_for_empty_shape():
    sh = CylShape(2, (2, 1), (2, 1), 1, 3)
    assert shape_after_strip(sh) is None or shape_after_strip(sh).size >= 0
    assert d_max(sh) == shortest_diagonal_length(sh)


def test_dmax_equals_shortest_diagonal_on_random_shapes():
    import random

    count = 0
    for t in range(100):
        rng = random.Random(6000 + t)
        n = rng.randint(1, 5)
        k = rng.randint(1, n)
        lams = [l for l in partitions_in_box(6, k) if is_k_cylindric(l, k, n)]
        lam = lams[rng.randrange(len(lams))]
        mus = [mu for mu in lams if contains(lam, mu)]
        mu = mus[rng.randrange(len(mus))]
        sh = CylShape(k, lam, mu, rng.randint(1, n), n)
        assert d_max(sh) == shortest_diagonal_length(sh)
        count += 1
    assert count == 100


def test_cyl_maya_worked_example_and_roundtrip():
    Ih, Jh, ds = cyl_maya((3, 3, 3, 3, 2, 1), (2,), 4, 3, 7, 5)
    assert (Ih, Jh, ds) == ((2, 4, 5), (1, 3, 4), 1)
    # full-window index data
    for m, n, k in [(4, 5, 2), (3, 4, 3)]:
        mu = partition_from_sources(tuple(range(n - k + 1, n + 1)), k, n)
        lam = partition_from_sinks(tuple(range(1, k + 1)), k, m, n)
        assert mu == tuple([k] * (n - k))
        assert lam == tuple([k] * m)
    # source/sink set roundtrips
    import random

    from loopsym.schur import maya_sets

    for t in range(50):
        rng = random.Random(6100 + t)
        n = rng.randint(2, 5)
        k = rng.randint(1, n)
        m = rng.randint(1, 5)
        I = tuple(sorted(rng.sample(range(1, n + 1), k)))
        J = tuple(sorted(rng.sample(range(1, n + 1), k)))
        mu = partition_from_sources(I, k, n)
        lam = partition_from_sinks(J, k, m, n)
        Iw, _ = maya_sets(mu, mu, k, m, n, ell=k)
        _, Jw = maya_sets(lam, (), k, m, n, ell=k)
        assert tuple(sorted(Iw)) == I
        assert tuple(sorted(Jw)) == J


def test_strip_removal_shifts_sink_data():
    """Removing a strip keeps the reduced sink set and bumps the winding."""
    from loopsym.schur import maya_sets

    sh = CylShape(5, (5, 5, 5, 5, 2, 1), (2,), 5, 7)
    lam_flat = border_strip_removed(sh.lam, 5, 7)
    _, J1 = maya_sets(sh.lam, (), sh.r, 4, 7, ell=5)
    _, J2 = maya_sets(lam_flat, (), sh.r, 4, 7, ell=5)
    red = lambda S: tuple(sorted(((j - 1) % 7) + 1 for j in S))
    dstar = lambda S: sum((((j - 1) % 7) + 1 - j) // 7 for j in S)
    assert red(J1) == red(J2)
    assert dstar(J2) == dstar(J1) + 1


def test_cyl_jt_small_sweep():
    rng = trial_rng(6, 1)
    for m, n in [(2, 2), (3, 2), (2, 3), (3, 3)]:
        x = VarMatrix.random(m, n, rng)
        for k in range(1, n + 1):
            lams = [
                l
                for l in partitions_in_box(6, k)
                if is_k_cylindric(l, k, n) and sum(l) <= 6
            ]
            for lam in lams[:5]:
                for mu in [mu for mu in lams if contains(lam, mu)][:3]:
                    for r in (1, n):
                        cyl_jt_check(CylShape(k, lam, mu, r, n), x)


def test_folded_ladders_and_sums():
    rng = trial_rng(6, 2)
    for m, n in [(3, 2), (3, 3), (4, 3), (4, 5)]:
        x = VarMatrix.random(m, n, rng)
        for i in range(1, min(m, n) + 2):
            bottom_left_ladder_check(x, i, reduced=False)
            bottom_left_ladder_check(x, i, reduced=True)
        for a in range(1, m + 1):
            for b in range(a, m + 1):
                for i in range(1, min(b - a + 1, n) + 1):
                    folded_minor_sum_check(x, i, a, b)


def test_detached_component_matches_plain_schur():
    rng = trial_rng(6, 3)
    x = VarMatrix.random(3, 3, rng)
    # two cells on one diagonal but in separate translates
    sh = CylShape(1, (1,), (), 3, 3)
    comp = detached_component(sh)
    assert comp is not None
    assert cyl_schur(sh, x) == ssyt_sum(comp, x)
    count = 0
    import random

    for t in range(150):
        rng2 = random.Random(6200 + t)
        n = rng2.randint(2, 4)
        k = rng2.randint(1, n)
        lams = [
            l for l in partitions_in_box(5, k) if is_k_cylindric(l, k, n) and sum(l) <= 8
        ]
        lam = lams[rng2.randrange(len(lams))]
        mus = [mu for mu in lams if contains(lam, mu)]
        mu = mus[rng2.randrange(len(mus))]
        sh = CylShape(k, lam, mu, rng2.randint(1, n), n)
        comp = detached_component(sh)
        if comp is None:
            continue
        y = VarMatrix.random(3, n, rng2)
        assert cyl_schur(sh, y) == ssyt_sum(comp, y)
        count += 1
    assert count > 5


def test_bad_parameters_rejected():
    rng = trial_rng(6, 4)
    x = VarMatrix.random(3, 3, rng)
    with pytest.raises(ValueError):
        bottom_left_ladder_check(x, 9)
    with pytest.raises(ValueError):
        folded_minor_sum_check(x, 2, 3, 2)
