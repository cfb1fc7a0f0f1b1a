import random
from fractions import Fraction

import pytest

from src.arith import QuadNum, quad_ceil
from src.asymptotics import (
    BettiTable,
    SplitBundle,
    SurfaceData,
    betti_term,
    boundary_slope,
    chern_resolution,
    chi_rr,
    cotangent_c2,
    finite_pd_hk,
    h1_limit,
    h1_sum_oracle,
    h1_z_limit,
    h1_z_sum_oracle,
    irrationality_witness,
    limit_surface,
    limit_top,
    normalize_orthogonal,
    oracle_convergence,
    parameter_hk,
    splitting_hk,
    sum_oracle,
    surface_splitting_hk,
    vanishing_window,
)
from src.exceptions import LatticeError, MalformedBettiTableError, ThresholdMismatchError
from src.lattice import DivClass, GramLattice, antiample_threshold

QUARTIC_B = QuadNum(Fraction(3, 2), Fraction(-1, 2), 5)
QUARTIC_LIMIT = QuadNum(Fraction(-3, 2), Fraction(5, 6), 5)


def _quadric_table() -> BettiTable:
    return BettiTable(((0,), (1, 1, 1, 1), (2, 2, 2, 2, 2)))


def _quadric_bundle() -> SplitBundle:
    return SplitBundle.on_surface(SurfaceData.p1xp1(), [DivClass.of(-4, -2), DivClass.of(-2, -4)])


def _orthogonal_d() -> DivClass:
    return DivClass.of(-1, 2)


# MARK: - Closed forms


def test_limit_surface_examples() -> None:
    assert limit_surface(2, 2, -6, 16) == Fraction(20, 3)
    assert limit_surface(QUARTIC_B, 4, -6, 4) == QUARTIC_LIMIT
    assert limit_surface(0, 4, -6, 4) == 0


def test_limit_top_specializes_to_surface_formula() -> None:
    assert limit_top(2, 2, [16, -6, 2]) == Fraction(20, 3)
    assert limit_top(2, QUARTIC_B, [4, -6, 4]) == limit_surface(QUARTIC_B, 4, -6, 4)
    assert limit_top(2, 0, [4, -6, 4]) == 0


def test_limit_top_curve_case() -> None:
    # d = 1: b (L + (b/2) H)
    assert limit_top(1, 3, [-6, 2]) == -9


def test_limit_top_length_mismatch() -> None:
    with pytest.raises(ValueError):
        limit_top(2, 2, [16, -6])


def test_irrationality_witness() -> None:
    assert irrationality_witness(QUARTIC_B, 4, -6, 4)
    assert QUARTIC_LIMIT.b != 0
    assert not irrationality_witness(QuadNum.rational(2), 2, -6, 16)


# MARK: - Riemann-Roch


def test_chi_examples() -> None:
    k3 = SurfaceData.k3_quartic()
    p1 = SurfaceData.p1xp1()

    assert chi_rr(k3, DivClass.of(0, 1)) == 0
    assert chi_rr(k3, DivClass.of(0, 0)) == 2
    assert chi_rr(p1, DivClass.of(1, 1)) == 4


def test_vanishing_window_on_quartic() -> None:
    rows = vanishing_window(SurfaceData.k3_quartic(), DivClass.of(1, 0), DivClass.of(0, 1))

    assert [(r.m, r.self_intersection, r.chi) for r in rows] == [(-1, -4, 0), (0, -4, 0)]


def test_surface_needs_positive_polarization() -> None:
    with pytest.raises(LatticeError):
        SurfaceData(GramLattice.p1xp1(), DivClass.of(1, 0), DivClass.of(0, 0), 1)


# MARK: - Betti tables


def test_betti_term_of_quadric_resolution() -> None:
    assert betti_term(2, 2, _quadric_table()) == -12
    assert betti_term(2, 2, BettiTable.empty(2)) == 0


def test_betti_term_rejects_long_table() -> None:
    with pytest.raises(MalformedBettiTableError):
        betti_term(2, 2, BettiTable.koszul((1, 1, 1)))


def test_betti_table_validation() -> None:
    table = BettiTable.from_rows([(1, [1, 1]), (0, [0])])

    assert table.levels == ((0,), (1, 1))
    assert BettiTable.from_mapping({"0": [0], "1": [2]}).levels == ((0,), (2,))
    with pytest.raises(MalformedBettiTableError):
        BettiTable.from_rows([(0, [0]), (0, [1])])
    with pytest.raises(MalformedBettiTableError):
        BettiTable.from_rows([(0, [0]), (2, [1])])
    with pytest.raises(MalformedBettiTableError):
        BettiTable(((0,), (-1,)))


def test_finite_pd_koszul_matches_parameter_formula() -> None:
    assert finite_pd_hk(2, 2, BettiTable.koszul((1, 1, 1))) == 2
    assert parameter_hk(2, 1, 1, 1) == 2
    assert parameter_hk(4, 1, 1, 1) == 4

    rng = random.Random(7)
    for _ in range(5):
        degrees = tuple(rng.randint(1, 6) for _ in range(3))
        assert finite_pd_hk(2, 1, BettiTable.koszul(degrees)) == parameter_hk(1, *degrees)


def test_finite_pd_of_zero_module() -> None:
    assert finite_pd_hk(2, 2, BettiTable.empty(3)) == 0
    with pytest.raises(MalformedBettiTableError):
        finite_pd_hk(2, 2, _quadric_table())


# MARK: - Split bundles


def test_quadric_splitting_gives_four_thirds() -> None:
    bundle = _quadric_bundle()

    assert bundle.thresholds == (QuadNum.rational(2), QuadNum.rational(2))
    assert surface_splitting_hk(SurfaceData.p1xp1(), bundle, _quadric_table()) == Fraction(4, 3)
    assert splitting_hk(2, 2, bundle, [[16, -6, 2], [16, -6, 2]], _quadric_table()) == Fraction(4, 3)


def test_single_bundle_without_table() -> None:
    bundle = SplitBundle((DivClass.of(-4, -2),), (QuadNum.rational(2),))

    assert splitting_hk(2, 2, bundle, [[16, -6, 2]], BettiTable.empty(2)) == Fraction(20, 3)


def test_quartic_hypothetical_split_is_irrational() -> None:
    k3 = SurfaceData.k3_quartic()
    bundle = SplitBundle.on_surface(k3, [DivClass.of(-2, 1)])

    value = surface_splitting_hk(k3, bundle, _quadric_table())

    assert value == QUARTIC_LIMIT + betti_term(2, 4, _quadric_table())
    assert not value.is_rational()


def test_bundle_with_wrong_threshold() -> None:
    bundle = SplitBundle((DivClass.of(-4, -2),), (QuadNum.rational(3),))

    with pytest.raises(ThresholdMismatchError):
        surface_splitting_hk(SurfaceData.p1xp1(), bundle, _quadric_table())


# MARK: - Orthogonal classes and h^1


def test_normalize_orthogonal() -> None:
    lat = GramLattice.quartic_plane()
    H = DivClass.of(1, 0)

    assert normalize_orthogonal(lat, H, DivClass.of(0, 1)) == _orthogonal_d()
    assert normalize_orthogonal(lat, H, DivClass.of(-2, 4)) == _orthogonal_d()
    with pytest.raises(LatticeError):
        normalize_orthogonal(lat, H, DivClass.of(3, 0))


def test_h1_limit_on_quartic() -> None:
    lat = GramLattice.quartic_plane()
    H = DivClass.of(1, 0)

    assert boundary_slope(lat, H, _orthogonal_d()) == QuadNum(0, 1, 5)
    assert h1_limit(lat, H, _orthogonal_d()) == QuadNum(0, Fraction(20, 3), 5)
    assert h1_z_limit(lat, H, _orthogonal_d()) == QuadNum(0, Fraction(40, 3), 5)
    assert h1_limit(lat, H, DivClass.of(0, 0)) == 0


def test_h1_limit_scales_cubically() -> None:
    lat = GramLattice.quartic_plane()
    H = DivClass.of(1, 0)
    base = h1_limit(lat, H, _orthogonal_d())

    for k in (2, 3):
        assert h1_limit(lat, H, k * _orthogonal_d()) == base * k ** 3


def test_h1_limit_input_errors() -> None:
    with pytest.raises(LatticeError):
        h1_limit(GramLattice.quartic_plane(), DivClass.of(1, 0), DivClass.of(0, 1))
    with pytest.raises(LatticeError):
        h1_limit(GramLattice(((1, 0), (0, 1))), DivClass.of(1, 0), DivClass.of(0, 1))


# MARK: - Oracles


def test_quadric_oracle_exact_values() -> None:
    p1 = SurfaceData.p1xp1()
    L = DivClass.of(-4, -2)

    for n in (1, 2, 5, 100):
        expected = Fraction(20, 3) - Fraction(4, n) + Fraction(1, 3 * n * n)
        assert sum_oracle(p1, L, QuadNum.rational(2), n) == expected
    assert abs(sum_oracle(p1, L, QuadNum.rational(2), 100) - Fraction(20, 3)) < Fraction(20, 3) / 20


def test_degenerate_oracle_is_riemann_sum_of_square() -> None:
    lat = GramLattice.quartic_plane()
    surface = SurfaceData(lat, DivClass.of(1, 0), DivClass.of(0, 0), 0)
    L = DivClass.of(-1, 0)

    for n in (1, 4, 50):
        assert sum_oracle(surface, L, 1, n) == Fraction(n * (n + 1) * (2 * n + 1), 3 * n ** 3)
    assert abs(sum_oracle(surface, L, 1, 400) - Fraction(4, 6)) < Fraction(1, 100)


def test_oracle_rejects_wrong_threshold() -> None:
    with pytest.raises(ThresholdMismatchError):
        sum_oracle(SurfaceData.p1xp1(), DivClass.of(-4, -2), QuadNum.rational(3), 10)
    with pytest.raises(ValueError):
        sum_oracle(SurfaceData.p1xp1(), DivClass.of(-4, -2), QuadNum.rational(2), 0)


def test_quartic_oracle_converges_to_irrational_limit() -> None:
    k3 = SurfaceData.k3_quartic()
    L = DivClass.of(-2, 1)
    b = antiample_threshold(k3.lattice, k3.H, L)

    report = oracle_convergence(k3, L, b, [16, 32, 64, 128])

    assert report.limit == QUARTIC_LIMIT
    assert report.within(3)
    assert report.rows[-1].gap < report.rows[0].gap


def test_oracle_fan_out_matches_sequential_run() -> None:
    p1 = SurfaceData.p1xp1()
    L = DivClass.of(-4, -2)
    b = QuadNum.rational(2)

    assert oracle_convergence(p1, L, b, [8, 16, 32], jobs=2) == oracle_convergence(p1, L, b, [8, 16, 32], jobs=1)


def test_h1_oracle_approaches_limit() -> None:
    k3 = SurfaceData.k3_quartic()
    u = boundary_slope(k3.lattice, k3.H, _orthogonal_d())
    limit = h1_limit(k3.lattice, k3.H, _orthogonal_d())

    for n in (16, 32, 64, 128):
        assert abs(limit - h1_sum_oracle(k3, _orthogonal_d(), u, n)) * n <= 8


def test_z_sum_is_twice_n_sum_up_to_middle_term() -> None:
    k3 = SurfaceData.k3_quartic()
    D = _orthogonal_d()
    u = boundary_slope(k3.lattice, k3.H, D)

    for n in (3, 7, 10):
        top = quad_ceil(u * n)
        terms = {m: chi_rr(k3, m * k3.H + n * D) for m in range(-top, top + 1)}
        through_top = -sum(terms[m] for m in range(top + 1)) / n ** 3
        middle = -terms[0] / n ** 3

        assert h1_z_sum_oracle(k3, D, u, n) == 2 * through_top - middle
        assert h1_sum_oracle(k3, D, u, n) == through_top + terms[top] / n ** 3


def test_orthogonal_z_limit_from_oracle() -> None:
    k3 = SurfaceData.k3_quartic()
    D = _orthogonal_d()
    u = boundary_slope(k3.lattice, k3.H, D)

    value = h1_z_sum_oracle(k3, D, u, 256)

    assert abs(h1_z_limit(k3.lattice, k3.H, D) - value) * 256 <= 20


# MARK: - Chern classes


def test_chern_resolution_values() -> None:
    assert chern_resolution(2) == (-6, -12, 10)
    assert chern_resolution(4) == (-8, -32, 18)
    assert cotangent_c2(2) == 2


def test_chern_identity_holds_over_range() -> None:
    for delta in range(1, 11):
        c1, degree, c2 = chern_resolution(delta)
        assert (c1, degree, c2) == (-4 - delta, (-4 - delta) * delta, 2 + 4 * delta)


def test_chern_rejects_nonpositive_delta() -> None:
    with pytest.raises(ValueError):
        chern_resolution(0)


# MARK: - Long runs


@pytest.mark.slow
def test_oracles_bounded_to_4096() -> None:
    ns = [2 ** k for k in range(4, 13)]
    k3 = SurfaceData.k3_quartic()
    L = DivClass.of(-2, 1)

    quartic = oracle_convergence(k3, L, antiample_threshold(k3.lattice, k3.H, L), ns)
    quadric = oracle_convergence(SurfaceData.p1xp1(), DivClass.of(-4, -2), QuadNum.rational(2), ns)

    assert quartic.within(3)
    assert quadric.within(4)


@pytest.mark.slow
def test_splitting_formula_matches_measured_quadric_series() -> None:
    from src.hilbert_kunz import RingPresentation, hkf_ideal

    ring = RingPresentation.quadric(2)
    sample = hkf_ideal(ring, ring.parse(["X", "Y", "Z", "W"]), 5)
    predicted = surface_splitting_hk(SurfaceData.p1xp1(), _quadric_bundle(), _quadric_table())

    measured = Fraction(sample.length, sample.q ** 3)
    assert abs(measured - predicted) < predicted / 50
