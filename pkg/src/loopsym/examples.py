"""Frozen worked-example regression corpus.

Each check replays one concrete computation with explicitly stated
expected values (small matrices of rational-function entries, index sets,
weight tables, insertion outputs).  All comparisons are exact; random
points, where used, come from the given seed.
"""

from __future__ import annotations

from fractions import Fraction

from loopsym import comb, cylindric, energy, gt, paths, schur
from loopsym.linalg import Matrix, minor, tpoly_minor
from loopsym.partitions import ColoredSkewShape
from loopsym.points import VarMatrix
from loopsym.semifield import (
    RATIONAL,
    PolyFraction,
    SparseLoopPoly,
    TropNumber,
    random_rational,
    trial_rng,
)


def run_paper_examples(seed: int) -> list:
    failures = []

    def expect(ok: bool, label: str, **info):
        if not ok:
            failures.append({"check": label, **{k: repr(v) for k, v in info.items()}})

    rng = trial_rng(seed, 424242)

    # -- the 4 x 4 factorization matrix of a width-2 pattern ------------------
    z = gt.GTPattern(
        2, 4, {k: random_rational(rng) for k in gt.GTPattern.domain(2, 4)}, RATIONAL
    )
    Phi = gt.phi_matrix(z)
    zz = z.z
    one, zero = Fraction(1), Fraction(0)
    expected = [
        [zz(1, 1), zero, zero, zero],
        [zz(2, 2), zz(1, 2) * zz(2, 2) / zz(1, 1), zero, zero],
        [one, zz(1, 2) / zz(1, 1) + zz(2, 3) / zz(2, 2), zz(1, 3) * zz(2, 3) / (zz(1, 2) * zz(2, 2)), zero],
        [zero, one, zz(1, 3) / zz(1, 2) + zz(2, 4) / zz(2, 3), zz(1, 4) * zz(2, 4) / (zz(1, 3) * zz(2, 3))],
    ]
    expect(Phi == Matrix(expected, RATIONAL), "width-2-factorization-matrix")
    expect(
        minor(Phi, [3], [2]) == zz(1, 2) / zz(1, 1) + zz(2, 3) / zz(2, 2),
        "flag-minor-entry",
    )
    expect(gt.psi_pattern(Phi, 2, 4, RATIONAL) == z, "psi-inverts-phi")

    # -- symbolic 3 x 2 insertion output --------------------------------------
    xs = VarMatrix.symbolic(3, 2)
    P, Q = gt.grsk(xs)
    G = gt.glue(P, Q)
    v = PolyFraction.variable
    e21 = v(1, 2) * v(2, 2) + v(1, 2) * v(3, 1) + v(2, 1) * v(3, 1)
    want = [
        [v(1, 2) + v(2, 1), v(1, 1) * v(1, 2)],
        [e21, v(1, 1) * v(2, 1) * v(1, 2) * v(2, 2) / (v(1, 2) + v(2, 1))],
        [v(1, 1) * v(2, 1) * v(3, 1), v(1, 1) * v(2, 1) * v(3, 1) * v(1, 2) * v(2, 2) * v(3, 2) / e21],
    ]
    expect(
        all(G.entry(i, j) == want[i - 1][j - 1] for i in (1, 2, 3) for j in (1, 2)),
        "symbolic-insertion-matrix",
    )
    ones = VarMatrix.rationals([[1, 1], [1, 1], [1, 1]])
    Go = gt.glue(*gt.grsk(ones))
    expect(
        [[Go.entry(i, j) for j in (1, 2)] for i in (1, 2, 3)]
        == [[Fraction(2), Fraction(1)], [Fraction(3), Fraction(1, 2)], [Fraction(1), Fraction(1, 3)]],
        "all-ones-insertion",
    )

    # -- the (4,2) Schur sum with two variables and four colors ---------------
    x24 = VarMatrix.symbolic(2, 4)
    sh = ColoredSkewShape((4, 2), (), 1, 4)
    val = schur.ssyt_sum(sh, x24)

    def mono(pairs):
        term = PolyFraction.const(1)
        for i, r in pairs:
            term = term * PolyFraction(SparseLoopPoly.variable(i, ((r - i) % 4) + 1))
        return term

    man = (
        mono([(1, 1), (1, 2), (1, 3), (1, 4), (2, 1), (2, 2)])
        + mono([(1, 1), (1, 3), (1, 4), (2, 1), (2, 2), (2, 2)])
        + mono([(1, 1), (1, 4), (2, 1), (2, 2), (2, 2), (2, 3)])
    )
    expect(val == man, "three-monomial-schur")
    E = lambda k, r: schur.loop_e(x24, k, r)
    jt4 = Matrix(
        [
            [E(2, 1), x24.ring.zero, x24.ring.zero, x24.ring.zero],
            [E(1, 1), E(2, 4), x24.ring.zero, x24.ring.zero],
            [x24.ring.zero, x24.ring.one, E(1, 3), E(2, 2)],
            [x24.ring.zero, x24.ring.zero, x24.ring.one, E(1, 2)],
        ],
        x24.ring,
    ).det()
    expect(jt4 == val, "displayed-jacobi-trudi")
    expect(schur.jacobi_trudi(sh, x24) == val, "jacobi-trudi-route")

    # -- generators with three rows and two colors ----------------------------
    x32 = VarMatrix.symbolic(3, 2)
    e22 = schur.loop_e(x32, 2, 2)
    expect(
        e22 == v(1, 2) * v(2, 2) + v(1, 2) * v(3, 1) + v(2, 1) * v(3, 1),
        "generator-three-terms",
    )
    expect(schur.barred_h(x32, 2, 3) == e22, "barred-homogeneous-matches")

    # -- periodic matrix of generators, three rows, two colors ----------------
    Mt = schur.unfolded_matrix(x32)
    E32 = lambda k, r: schur.loop_e(x32, k, r)
    expect(
        Mt.entry(1, 1) == E32(3, 1)
        and Mt.entry(2, 1) == E32(2, 2)
        and Mt.entry(3, 1) == E32(1, 1)
        and Mt.entry(4, 1) == x32.ring.one
        and Mt.entry(4, 2) == E32(1, 2)
        and Mt.entry(5, 1) == x32.ring.zero,
        "periodic-entries",
    )
    F32 = schur.folded_matrix(x32)
    expect(
        F32.entry(1, 2).coeff(1) == E32(2, 1) and F32.entry(1, 2).coeff(2) == x32.ring.one
        and F32.entry(2, 1).coeff(0) == E32(2, 2) and F32.entry(2, 1).coeff(1) == x32.ring.one,
        "folded-entries",
    )

    # -- index sets of the sandwich shape -------------------------------------
    expect(
        schur.maya_sets((4, 4, 4, 1), (2, 2), 6, 5, 4) == ((3, 4, 7, 8), (1, 2, 3, 5)),
        "sandwich-index-sets",
    )
    lam, mu, color, K = schur.q_shape(5, 4, 1, 3)
    expect(
        (lam, mu, color, K) == ((4, 4, 4, 1), (2, 2), 2, 2), "sandwich-shape-data"
    )
    sh54 = ColoredSkewShape(lam, mu, color, 4)
    expect(
        all(sh54.color(i, j) == 4 for i, j in sh54.nw_corners())
        and all(sh54.color(i, j) == 1 for i, j in sh54.se_corners())
        and schur.corner_color_ok(sh54, 5),
        "sandwich-corner-colors",
    )

    # -- ten highway paths -----------------------------------------------------
    x53 = VarMatrix.random(5, 3, rng)
    fams = paths._highway_families(3, tuple(range(1, 6)), (5,), (2,))
    expect(len(fams) == 10, "ten-highway-paths", count=len(fams))
    expect(
        paths.highway_minor(x53, [5], [2]) == schur.loop_e(x53, 2, 2),
        "highway-entry-value",
    )

    # -- the square Q-invariants through barred minors -------------------------
    x33 = VarMatrix.random(3, 3, rng)
    Mb = schur.barred_matrix(x33)
    dm = lambda I, J: minor(Mb, I, J)
    expect(
        schur.q_invariant(x33, 1, 1)
        == dm([3], [1]) * dm([1, 3], [1, 2]) + dm([3], [2]) * dm([2, 3], [1, 2]),
        "square-q11-minors",
    )
    expect(
        paths.underway_minor(x33, [2, 3], [1, 2])
        == schur.barred_skew_schur((2, 2), (), 3, x33),
        "underway-rectangle",
    )

    # -- recording-pattern Laurent expressions ---------------------------------
    _, Q33 = gt.grsk(x33)
    zq = Q33.z
    rq11 = schur.reduced_q_invariant(x33, 1, 1)
    expect(
        rq11
        == zq(1, 2) / zq(2, 3) + zq(1, 1) / zq(2, 2) + zq(1, 2) / zq(1, 1) + zq(2, 3) / zq(2, 2),
        "laurent-rq11",
    )
    rq12 = schur.reduced_q_invariant(x33, 1, 2)
    expect(rq12 == zq(2, 2) / zq(3, 3) + zq(1, 3) / zq(1, 2), "laurent-rq12")
    rq21 = schur.reduced_q_invariant(x33, 2, 1)
    expect(
        rq21
        == zq(1, 2) * zq(2, 2) / (zq(2, 3) * zq(3, 3))
        + zq(1, 3) / zq(2, 3)
        + zq(1, 1) * zq(1, 3) / (zq(1, 2) * zq(2, 2))
        + zq(1, 3) / zq(1, 1),
        "laurent-rq21",
    )

    # -- central charge on a square point ---------------------------------------
    cc = energy.central_charge(x33, check=True)
    expect(
        cc
        == zq(1, 2) / zq(1, 1) + zq(1, 3) / zq(1, 2) + zq(2, 3) / zq(2, 2)
        + zq(1, 1) / zq(2, 2) + zq(1, 2) / zq(2, 3) + zq(2, 2) / zq(3, 3) + zq(3, 3),
        "central-charge-laurent",
    )
    expect(
        cc == rq11 + rq12 + schur.loop_e(x33, 1, 3), "central-charge-invariants"
    )

    # -- worked reduced determinant (five rows, three colors) -------------------
    x53b = VarMatrix.random(5, 3, rng)
    shape53 = ColoredSkewShape((4, 3, 3, 1), (2,), 2, 3)
    val53 = schur.theorem_det_formula(shape53, x53b, check=True)
    rq12b = schur.reduced_q_invariant(x53b, 1, 2)
    rq22b = schur.reduced_q_invariant(x53b, 2, 2)
    s2, s3 = schur.shape_invariant(x53b, 2), schur.shape_invariant(x53b, 3)
    expect(val53 == rq12b * rq22b * s3 * s3 - rq12b * s2, "worked-reduced-determinant")

    # -- full folded determinant lists elementary symmetric functions -----------
    F53 = schur.folded_matrix(x53b)
    poly = tpoly_minor(F53, [1, 2, 3], [1, 2, 3])
    pis = [x53b.pi(i) for i in range(1, 6)]

    def esym(k):
        from itertools import combinations as _c

        total = x53b.ring.zero
        for sub in _c(range(5), k):
            term = x53b.ring.one
            for t in sub:
                term = term * pis[t]
            total = total + term
        return total

    expect(
        all(poly.coeff(d) == esym(5 - d) for d in range(0, 6)),
        "folded-determinant-elementary",
    )
    e4 = esym(4)
    s1 = schur.shape_invariant(x53b, 1)
    rq41 = schur.reduced_q_invariant(x53b, 4, 1)
    rq22c = schur.reduced_q_invariant(x53b, 2, 2)
    expect(
        e4 == s2 * rq41 - (s1 * s3 / s2) * rq22c + s1 / s3, "elementary-from-invariants"
    )

    # -- cylindric ladder and index data ----------------------------------------
    lad = cylindric.CylShape(5, (5, 5, 5, 5, 2, 1), (2,), 5, 7)
    r1 = cylindric.shape_after_strip(lad)
    r2 = cylindric.shape_after_strip(r1)
    expect(
        r1.lam == (5, 5, 5, 1) and r2.lam == (5, 4)
        and cylindric.shape_after_strip(r2) is None
        and cylindric.d_max(lad) == 2,
        "strip-ladder",
    )
    Ih, Jh, ds = cylindric.cyl_maya((3, 3, 3, 3, 2, 1), (2,), 4, 3, 7, 5)
    expect((Ih, Jh, ds) == ((2, 4, 5), (1, 3, 4), 1), "cylinder-index-data")
    x75 = VarMatrix.random(7, 5, rng)
    cylindric.cyl_jt_check(cylindric.CylShape(3, (3, 3, 3, 3, 2, 1), (2,), 4, 5), x75)

    # expansion with no constant term (wide case)
    x47 = VarMatrix.random(4, 7, rng)
    F47 = schur.folded_matrix(x47)
    poly47 = tpoly_minor(F47, [1, 2, 3, 5, 6], [1, 2, 3, 5, 7])
    lamJ = cylindric.partition_from_sinks((1, 2, 3, 5, 7), 5, 4, 7)
    muI = cylindric.partition_from_sources((1, 2, 3, 5, 6), 5, 7)
    expect(
        (lamJ, muI) == ((5, 5, 5, 5, 2, 1), (2,)), "wide-ladder-partitions"
    )
    sh47 = cylindric.CylShape(5, lamJ, muI, 5, 7)
    expect(
        poly47.coeff(0) == x47.ring.zero
        and cylindric.cyl_schur(sh47, x47) == x47.ring.zero,
        "no-constant-term",
    )
    lad1 = cylindric.shape_after_strip(sh47)
    lad2 = cylindric.shape_after_strip(lad1)
    expect(
        poly47.coeff(1) == cylindric.cyl_schur(lad1, x47)
        and poly47.coeff(2) == cylindric.cyl_schur(lad2, x47),
        "wide-expansion-terms",
    )

    # -- folded sum of minors display (four rows, five colors) -------------------
    x45 = VarMatrix.random(4, 5, rng)
    Mb45 = schur.barred_matrix(x45)
    d45 = lambda I, J: minor(Mb45, I, J)
    nu = cylindric.CylShape(4, (4, 4, 4), (), 5, 5)
    expect(cylindric.cyl_schur(nu, x45) == d45([2, 3, 4], [1, 2, 3]), "rect-ladder-0")
    nu1 = cylindric.shape_after_strip(nu)
    expect(
        cylindric.cyl_schur(nu1, x45) == d45([2, 4], [1, 2]) + d45([3, 4], [1, 3]),
        "rect-ladder-1",
    )
    nu2 = cylindric.shape_after_strip(nu1)
    expect(cylindric.cyl_schur(nu2, x45) == d45([4], [1]), "rect-ladder-2")
    expect(
        (nu1.lam, nu2.lam) == ((4, 3), (2,)), "rect-ladder-shapes"
    )

    # -- energy product display ---------------------------------------------------
    D = energy.energy(x45, check=True)
    D1 = (
        d45([2, 3, 4], [1, 2, 3])
        + x45.pi(1) * (d45([2, 4], [1, 2]) + d45([3, 4], [1, 3]))
        + x45.pi(1) ** 2 * d45([4], [1])
    )
    D2 = d45([3, 4], [2, 3]) + x45.pi(2) * d45([4], [2])
    D3 = d45([4], [3])
    expect(D == D1 * D2 * D3, "energy-three-factors")

    # six-row, two-color energy through the reduced determinant
    x62 = VarMatrix.random(6, 2, rng)
    stair = ColoredSkewShape((5, 4, 3, 2, 1), (), 2, 2)
    expect(
        schur.theorem_det_formula(stair, x62, check=True) == energy.energy(x62, check=True),
        "staircase-reduced-determinant",
    )

    # -- cocharge factor displays --------------------------------------------------
    z4 = gt.GTPattern(
        4, 4, {k: random_rational(rng) for k in gt.GTPattern.domain(4, 4)}, RATIONAL
    )
    zf = z4.z
    expect(energy.sigma_k(z4, 2) == zf(2, 2), "factor-two")
    expect(
        energy.sigma_k(z4, 3)
        == (zf(2, 3) * zf(3, 3) ** 2 / zf(2, 2)) * (zf(2, 2) / zf(3, 3) + zf(1, 3) / zf(1, 2)),
        "factor-three",
    )
    pref = zf(2, 4) * zf(3, 4) ** 2 * zf(4, 4) ** 3 / (zf(2, 3) * zf(3, 3) ** 2)
    inner = (
        zf(2, 3) * zf(3, 3) ** 2 / (zf(3, 4) * zf(4, 4) ** 2)
        + zf(1, 4) * zf(2, 3) * zf(3, 3) / (zf(1, 3) * zf(3, 4) * zf(4, 4))
        + zf(1, 4) * zf(2, 2) / (zf(1, 3) * zf(4, 4))
        + zf(1, 4) * zf(3, 3) / (zf(1, 2) * zf(4, 4))
        + zf(1, 4) * zf(2, 4) * zf(3, 3) / (zf(1, 3) * zf(2, 3) * zf(4, 4))
        + zf(1, 4) ** 2 * zf(2, 4) / (zf(1, 3) ** 2 * zf(2, 3))
    )
    expect(energy.sigma_k(z4, 4) == pref * inner, "factor-four")

    # triangular-array weight table (k = 4); the fifth value matches the
    # factor-four display rather than the misprinted table entry
    weights = sorted((energy.kb_weight(z4, p) for p in energy.kb_patterns(4)), key=str)
    table = sorted(
        [
            Fraction(1),
            zf(1, 3) * zf(3, 3) / (zf(1, 4) * zf(4, 4)),
            zf(1, 3) ** 2 * zf(2, 3) * zf(3, 3) / (zf(1, 2) * zf(1, 4) * zf(2, 4) * zf(4, 4)),
            zf(1, 3) * zf(2, 2) * zf(2, 3) / (zf(1, 4) * zf(2, 4) * zf(4, 4)),
            zf(1, 3) * zf(2, 3) ** 2 * zf(3, 3) / (zf(1, 4) * zf(2, 4) * zf(3, 4) * zf(4, 4)),
            zf(1, 3) ** 2 * zf(2, 3) ** 2 * zf(3, 3) ** 2
            / (zf(1, 4) ** 2 * zf(2, 4) * zf(3, 4) * zf(4, 4) ** 2),
        ],
        key=str,
    )
    expect(weights == table, "triangular-weight-table")

    # -- worked insertion example ----------------------------------------------------
    a = [[1, 4], [2, 1], [1, 0]]
    P, Q = comb.rsk(a)
    expect(
        P == ((1, 1, 1, 1, 2, 2), (2, 2, 2)) and Q == ((1, 1, 1, 1, 1, 2), (2, 2, 3)),
        "worked-insertion",
    )
    G = gt.glue(comb.gt_of_tableau(P, 2, 3), comb.gt_of_tableau(Q, 3, 2))
    expect(
        [[G.entry(i, j).value for j in (1, 2)] for i in (1, 2, 3)]
        == [[2, 5], [3, 6], [4, 6]],
        "worked-glued-matrix",
    )
    tP, tQ = comb.trop_grsk(a)
    expect(
        tP == comb.gt_of_tableau(P, 2, 3) and tQ == comb.gt_of_tableau(Q, 3, 2),
        "worked-minplus-insertion",
    )

    # -- pattern/tableau dictionary ----------------------------------------------------
    pat = {(1, 1): 3, (1, 2): 6, (2, 2): 1, (1, 3): 6, (2, 3): 4, (3, 3): 1,
           (1, 4): 8, (2, 4): 5, (3, 4): 3, (4, 4): 0}
    from loopsym.semifield import TROPICAL

    z44 = gt.GTPattern(4, 4, {k: TropNumber(vv) for k, vv in pat.items()}, TROPICAL)
    T = comb.tableau_of_gt(z44)
    expect(
        T == ((1, 1, 1, 2, 2, 2, 4, 4), (2, 3, 3, 3, 4), (3, 4, 4)),
        "dictionary-tableau",
    )
    expect(comb.gt_of_tableau(T, 4, 4) == z44, "dictionary-roundtrip")

    # -- complementary families figure ---------------------------------------------------
    fam = paths.HighwayFamily(
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
    comp = paths.UnderwayComplement(fam, row_lo=-3, row_hi=16)
    x74 = VarMatrix.random(7, 4, rng)
    expect(fam.weight(x74) == comp.weight(x74), "complement-weight")
    a_par, b_par = (0, 3, 3), (3, 1, 2)
    got = []
    for k, boundary in ((1, 4), (2, 8)):
        cr = set(comp.crossings(boundary))
        X = cr - set(range(1, 4 - a_par[k] + 1)) - set(range(7 - (4 - b_par[k - 1]) + 1, 8))
        got.append(tuple(sorted(X)))
    expect(got == [(3, 6), (2, 4)], "complement-crossings", got=got)

    # -- special cylindric families --------------------------------------------------------
    x43 = VarMatrix.random(4, 3, rng)
    col = cylindric.CylShape(1, (1, 1), (), 2, 3)
    expect(cylindric.cyl_schur(col, x43) == schur.loop_e(x43, 2, 2), "one-column-cylindric")
    tau = cylindric.CylShape(2, (2, 2, 1), (), 1, 3)
    expect(
        cylindric.cyl_schur(tau, x43) == energy.tau_lp(x43, 5, 1), "capped-sequence-cylindric"
    )
    full = cylindric.CylShape(3, (3, 3), (), 3, 3)

    def esym2(k, pis):
        from itertools import combinations as _c

        total = x43.ring.zero
        for sub in _c(range(len(pis)), k):
            term = x43.ring.one
            for tt in sub:
                term = term * pis[tt]
            total = total + term
        return total

    expect(
        cylindric.cyl_schur(full, x43) == esym2(2, [x43.pi(i) for i in (1, 2, 3, 4)]),
        "constant-rows-cylindric",
    )
    mu_I = cylindric.partition_from_sources((2, 3), 2, 3)
    lam_J = cylindric.partition_from_sinks((1, 2), 2, 4, 3)
    expect(mu_I == (2,) and lam_J == (2, 2, 2, 2), "window-partitions")

    return failures
