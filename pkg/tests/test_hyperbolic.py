"""Hyperbolic solver: trichotomy, three constructions, defect-function root."""

import math
import warnings

import numpy as np
import pytest

from cyclicpoly import euclidean, hyperbolic
from cyclicpoly.errors import (
    DomainError,
    HorocycleDriftWarning,
    InvariantViolation,
    NoPolygonError,
)

from oracles import phi_root_bisect

# third side making sinh(l3/2) = 2 sinh(1/2) exactly: the horocycle threshold
HOROCYCLE_L3 = 2 * math.asinh(2 * math.sinh(0.5))

# circle case (1,1,1): r = arsinh(chord / sqrt(3)), frozen
HYP_R_111 = 0.5702898271141295


def hyp_dot(u, v):
    return u[..., 0] * v[..., 0] + u[..., 1] * v[..., 1] - u[..., 2] * v[..., 2]


def recovered_sides(vertices):
    d = np.roll(vertices, -1, axis=0) - vertices
    return 2.0 * np.arcsinh(np.sqrt(hyp_dot(d, d)) / 2.0)


def make_horocycle_lengths(rng, n):
    base = rng.uniform(0.3, 1.2, n - 1)
    dom = 2 * math.asinh(math.fsum(np.sinh(base / 2).tolist()))
    return np.concatenate([base, [dom]])


def make_hypercycle_lengths(rng, n):
    while True:
        base = rng.uniform(1.0, 3.0, n - 1)
        q = rng.uniform(1.05, 1.8)
        dom = 2 * math.asinh(q * math.fsum(np.sinh(base / 2).tolist()))
        l = np.concatenate([base, [dom]])
        if dom < math.fsum(base.tolist()):
            if hyperbolic.classify(l).kind == hyperbolic.HYPERCYCLE:
                return l


class TestChordMap:
    def test_inverse_pair(self):
        assert hyperbolic.hyp_chord(2 * math.asinh(1.0)) == pytest.approx(2.0, abs=1e-15)

    def test_unit(self):
        assert hyperbolic.hyp_chord(1.0) == pytest.approx(2 * math.sinh(0.5), abs=1e-15)

    def test_small_argument_limit(self):
        for ell in (1e-3, 1e-6, 1e-9):
            assert hyperbolic.hyp_chord(ell) / ell == pytest.approx(1.0, abs=1e-6)

    def test_domain(self):
        for bad in (0.0, -1.0, math.inf, math.nan):
            with pytest.raises(DomainError):
                hyperbolic.hyp_chord(bad)


class TestClassify:
    def test_equilateral_circle(self):
        cls = hyperbolic.classify([1, 1, 1])
        assert cls.kind == hyperbolic.CIRCLE
        assert cls.margin < 0

    def test_horocycle_threshold(self):
        cls = hyperbolic.classify([1, 1, HOROCYCLE_L3])
        assert cls.kind == hyperbolic.HOROCYCLE
        assert cls.index == 2
        assert abs(cls.margin) <= 1e-12

    def test_hypercycle(self):
        cls = hyperbolic.classify([1, 1, 1.9])
        assert cls.kind == hyperbolic.HYPERCYCLE
        assert cls.index == 2
        assert cls.margin == pytest.approx(
            2 * math.sinh(0.95) - 4 * math.sinh(0.5), abs=1e-14
        )

    def test_polygon_inequality_enforced(self):
        # 3 >= 1 + 1: no hyperbolic polygon of any kind exists
        with pytest.raises(NoPolygonError):
            hyperbolic.classify([1, 1, 3])

    def test_perturbation_flips(self):
        plus = hyperbolic.classify([1, 1, HOROCYCLE_L3 + 1e-6])
        minus = hyperbolic.classify([1, 1, HOROCYCLE_L3 - 1e-6])
        assert plus.kind == hyperbolic.HYPERCYCLE
        assert minus.kind == hyperbolic.CIRCLE

    def test_band_knob(self):
        assert hyperbolic.classify([1, 1, 1.9], horocycle_band=0.0).kind == hyperbolic.HYPERCYCLE
        # an absurdly wide band swallows everything into the horocycle tag
        assert hyperbolic.classify([1, 1, 1], horocycle_band=0.5).kind == hyperbolic.HOROCYCLE
        with pytest.raises(DomainError):
            hyperbolic.classify([1, 1, 1], horocycle_band=-1e-3)


class TestCircleCase:
    def test_equilateral(self):
        sol = hyperbolic.solve_hyperbolic([1, 1, 1])
        assert sol.curve_class.kind == hyperbolic.CIRCLE
        assert sol.circumradius == pytest.approx(HYP_R_111, abs=1e-12)
        assert np.max(np.abs(hyp_dot(sol.vertices, sol.vertices) + 1.0)) <= 1e-12
        assert np.allclose(recovered_sides(sol.vertices), [1, 1, 1], atol=1e-12)

    def test_congruent_to_chordal_euclidean_polygon(self):
        rng = np.random.default_rng(51)
        for _ in range(25):
            n = int(rng.integers(3, 9))
            l = rng.uniform(0.1, 0.9, n)
            if not euclidean.check_polygon_inequalities(l).is_strict:
                continue
            if hyperbolic.classify(l).kind != hyperbolic.CIRCLE:
                continue
            sol = hyperbolic.solve_hyperbolic(l)
            chords = 2 * np.sinh(l / 2)
            planar = euclidean.solve_euclidean(chords)
            assert math.sinh(sol.circumradius) == pytest.approx(planar.radius, rel=1e-9)
            d = np.roll(sol.vertices, -1, axis=0) - sol.vertices
            chordal = np.sqrt(hyp_dot(d, d))
            assert np.max(np.abs(chordal - chords) / chords) <= 1e-9


class TestHorocycleCase:
    def test_threshold_construction(self):
        sol = hyperbolic.solve_hyperbolic([1, 1, HOROCYCLE_L3])
        assert sol.curve_class.kind == hyperbolic.HOROCYCLE
        c = 2 * math.sinh(0.5)
        assert np.allclose(sol.offsets, [0.0, c, 2 * c], atol=1e-12)
        assert np.allclose(sol.vertices[0], [0.0, 0.0, 1.0], atol=1e-15)
        # every vertex on the horocycle x3 - x1 = 1
        assert np.max(np.abs(sol.vertices[:, 2] - sol.vertices[:, 0] - 1.0)) <= 1e-12
        assert np.allclose(recovered_sides(sol.vertices), [1, 1, HOROCYCLE_L3], atol=1e-12)

    def test_chord_equals_arc_length(self):
        # the unit-speed horocycle parameter is both the arc length and the
        # ambient chordal length, so consecutive parameter gaps equal chords
        rng = np.random.default_rng(52)
        for _ in range(20):
            n = int(rng.integers(3, 8))
            l = make_horocycle_lengths(rng, n)
            sol = hyperbolic.solve_hyperbolic(l)
            assert sol.curve_class.kind == hyperbolic.HOROCYCLE
            gaps = np.diff(sol.offsets)
            chords = 2 * np.sinh(l[: n - 1] / 2)
            assert np.allclose(gaps, chords, atol=1e-12)
            d = sol.vertices[1:] - sol.vertices[:-1]
            assert np.allclose(np.sqrt(hyp_dot(d, d)), gaps, atol=1e-9)


class TestHypercycleCase:
    def test_simple_instance(self):
        sol = hyperbolic.solve_hyperbolic([1, 1, 1.9])
        assert sol.curve_class.kind == hyperbolic.HYPERCYCLE
        r = sol.axis_distance
        assert r > 0
        a = sol.foot_distances.values
        assert abs(a[2] - a[0] - a[1]) <= 1e-10
        # chord relation: chord_k = 2 cosh(R) sinh(a_k / 2)
        chords = 2 * np.sinh(np.asarray([1, 1, 1.9]) / 2)
        assert np.max(np.abs(chords - 2 * math.cosh(r) * np.sinh(a / 2)) / chords) <= 1e-10
        assert np.max(np.abs(hyp_dot(sol.vertices, sol.vertices) + 1.0)) <= 1e-12
        assert np.allclose(recovered_sides(sol.vertices), [1, 1, 1.9], atol=1e-10)
        # constant distance from the axis: x2 = sinh(R) on all vertices
        x2 = sol.vertices[:, 1]
        assert x2.max() - x2.min() <= 1e-12
        assert x2[0] == pytest.approx(math.sinh(r), rel=1e-12)

    def test_dominant_side_not_last(self):
        sol = hyperbolic.solve_hyperbolic([1.9, 1.0, 1.0])
        assert sol.curve_class.index == 0
        assert np.allclose(recovered_sides(sol.vertices), [1.9, 1.0, 1.0], atol=1e-10)
        a = sol.foot_distances.values
        assert abs(a[0] - a[1] - a[2]) <= 1e-10


class TestPhi:
    def test_phi_at_one_is_half_length_deficit(self):
        l = np.array([1.0, 1.0, 1.9])
        chords = 2 * np.sinh(l / 2)
        expected = 0.5 * (l[-1] - l[0] - l[1])
        assert hyperbolic.phi(1.0, chords) == pytest.approx(expected, abs=1e-12)

    def test_direct_arithmetic(self):
        val = hyperbolic.phi(1.5, [1.0, 1.0, 2.1])
        expected = math.asinh(2.1 / 3.0) - 2 * math.asinh(1.0 / 3.0)
        assert val == pytest.approx(expected, abs=1e-15)

    def test_large_x_sign_matches_chord_margin(self):
        chords = [1.0, 1.0, 2.5]  # margin +0.5
        assert hyperbolic.phi(1e6, chords) > 0
        chords = [1.0, 1.0, 1.5]  # margin -0.5
        assert hyperbolic.phi(1e6, chords) < 0

    def test_domain(self):
        with pytest.raises(DomainError):
            hyperbolic.phi(0.0, [1, 1, 2.5])
        with pytest.raises(DomainError):
            hyperbolic.phi(-2.0, [1, 1, 2.5])
        with pytest.raises(DomainError):
            hyperbolic.phi_prime(0.0, [1, 1, 2.5])

    def test_phi_prime_matches_finite_differences(self):
        rng = np.random.default_rng(53)
        chords = [0.8, 1.3, 0.9, 3.4]
        for _ in range(20):
            x = float(rng.uniform(0.3, 5.0))
            h = 1e-6 * x
            fd = (hyperbolic.phi(x + h, chords) - hyperbolic.phi(x - h, chords)) / (2 * h)
            assert hyperbolic.phi_prime(x, chords) == pytest.approx(fd, abs=1e-7)

    def test_tanh_subadditivity_witness(self):
        assert math.tanh(0.7) < math.tanh(0.3) + math.tanh(0.4)


class TestHypercycleRadius:
    def test_root_properties(self):
        l = np.array([1.0, 1.0, 1.9])
        chords = 2 * np.sinh(l / 2)
        rbar = hyperbolic.solve_hypercycle_radius(chords)
        assert rbar > 1.0
        assert abs(hyperbolic.phi(rbar, chords)) <= 1e-12
        assert hyperbolic.phi_prime(rbar, chords) > 0
        assert rbar == pytest.approx(phi_root_bisect(chords, 1.0, 8.0), rel=1e-11)

    def test_scaling_covariance(self):
        chords = 2 * np.sinh(np.array([1.0, 1.0, 1.9]) / 2)
        r1 = hyperbolic.solve_hypercycle_radius(chords)
        r2 = hyperbolic.solve_hypercycle_radius(chords * 37.0)
        assert r2 == pytest.approx(37.0 * r1, rel=1e-13)

    def test_near_horocycle_margin_sweep(self):
        # as the chord margin shrinks by decades, the root grows monotonically
        # and the solver keeps terminating
        base = 2 * math.sinh(0.5)
        roots = []
        for k in range(1, 8):
            margin = 10.0 ** -k
            chords = np.array([base, base, 2 * base + margin])
            roots.append(hyperbolic.solve_hypercycle_radius(chords))
        assert all(b > a for a, b in zip(roots, roots[1:]))

    def test_non_dominant_chords_rejected(self):
        with pytest.raises(InvariantViolation):
            hyperbolic.solve_hypercycle_radius([1.0, 1.0, 1.9])  # margin -0.1

    def test_chords_without_underlying_polygon_rejected(self):
        # dominance holds but phi(1) > 0: the geodesic lengths behind these
        # chords violate the polygon inequalities
        with pytest.raises(InvariantViolation):
            hyperbolic.solve_hypercycle_radius([1.0, 1.0, 3.0])


class TestDriftFallback:
    def test_huge_near_horocycle_input(self):
        base = 1e10
        chords = np.array([base, base, 2 * base + 1e-3])
        lengths = 2 * np.arcsinh(chords / 2)
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            sol = hyperbolic.solve_hyperbolic(lengths, horocycle_band=0.0)
        assert sol.curve_class.kind == hyperbolic.HOROCYCLE
        assert any(w.category is HorocycleDriftWarning for w in caught)


class TestFootDistances:
    def test_validation(self):
        with pytest.raises(DomainError):
            hyperbolic.FootDistances([1.0, -2.0])
        with pytest.raises(DomainError):
            hyperbolic.FootDistances([[1.0, 2.0]])

    def test_sinh_superadditivity(self):
        # sinh(x + y) > sinh(x) + sinh(y) for positive x, y
        rng = np.random.default_rng(54)
        for _ in range(500):
            x, y = rng.uniform(1e-3, 5.0, 2)
            assert math.sinh(x + y) > math.sinh(x) + math.sinh(y)
