import itertools
import math

import numpy as np
import pytest

from extremal_cech import construct
from extremal_cech.construct import (
    DELTA_FLOOR,
    build_3d,
    build_even,
    build_odd,
    build_suspended,
    delta_candidates,
    half_edge,
    load_points,
    min_n,
    save_points,
)


def pairwise_distances(ps):
    return sorted(
        float(np.linalg.norm(a - b))
        for a, b in itertools.combinations(ps.points, 2))


class TestMinN:
    def test_known_values(self):
        assert min_n(1) == 3
        assert min_n(2) == 5

    def test_k3_by_definition(self):
        # scan the defining inequality directly
        bound = 1.0 / math.sqrt(3.0)
        assert not math.sin(math.pi / 5) < bound
        assert math.sin(math.pi / 6) < bound
        assert min_n(3) == 6

    def test_inscribed_square_is_excluded(self):
        # at k=2, n=4 the edge length equals the bound exactly
        assert min_n(2) > 4

    def test_bad_k(self):
        with pytest.raises(ValueError):
            min_n(0)


class TestBuildEven:
    def test_counts_and_norms(self):
        ps = build_even(2, 5)
        assert len(ps) == 10
        assert ps.dim == 4
        assert np.allclose(np.linalg.norm(ps.points, axis=1), math.sqrt(2) / 2)

    def test_coordinate_planes(self):
        ps = build_even(3, 5)
        for i in range(len(ps)):
            ell = ps.circle_of(i)
            off_plane = [c for j, c in enumerate(ps.points[i]) if j not in (2 * ell, 2 * ell + 1)]
            assert np.allclose(off_plane, 0.0)

    def test_two_distance_values(self):
        ps = build_even(2, 5)
        s = half_edge(ps)
        for i, j in itertools.combinations(range(len(ps)), 2):
            d = float(np.linalg.norm(ps.points[i] - ps.points[j]))
            if ps.circle_of(i) != ps.circle_of(j):
                assert d == pytest.approx(1.0, rel=1e-12)
            elif ps.consecutive(i, j):
                assert d == pytest.approx(2 * s, rel=1e-12)
            else:
                assert d > 2 * s + 1e-9

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            build_even(0, 5)
        with pytest.raises(ValueError):
            build_even(2, 2)


class TestBuild3d:
    def test_first_point_coordinates(self):
        ps = build_3d(2, 0.01)
        a0 = ps.points[0]
        assert a0[0] == pytest.approx(-0.5 + math.sqrt(1 - 1e-4), rel=1e-15)
        assert a0[1] == pytest.approx(-0.01, rel=1e-15)
        assert a0[2] == 0.0

    def test_counts_and_band(self):
        ps = build_3d(4, 0.02)
        assert len(ps) == 10
        # a-points stay in the y-band, b-points in the z-band
        assert np.all(np.abs(ps.points[:5, 1]) <= 0.02 + 1e-15)
        assert np.all(np.abs(ps.points[5:, 2]) <= 0.02 + 1e-15)

    def test_points_on_unit_circles(self):
        ps = build_3d(3, 0.05)
        vz = np.array([-0.5, 0.0, 0.0])
        vy = np.array([0.5, 0.0, 0.0])
        # each circle passes through the center of the other
        assert np.allclose(np.linalg.norm(ps.points[:4] - vz, axis=1), 1.0)
        assert np.allclose(np.linalg.norm(ps.points[4:] - vy, axis=1), 1.0)

    def test_half_edge_bounds(self):
        for n, delta in ((2, 0.01), (5, 0.003), (8, 0.05)):
            eps = half_edge(build_3d(n, delta))
            assert delta / n < eps < math.pi / 2 * delta / n

    def test_half_edge_limit(self):
        # eps * n / delta -> 1 as delta -> 0
        ratios = [half_edge(build_3d(3, d)) * 3 / d for d in (1e-2, 1e-4, 1e-6)]
        assert abs(ratios[-1] - 1.0) < 1e-9
        assert abs(ratios[-1] - 1.0) < abs(ratios[0] - 1.0)

    def test_long_edge_squared_lengths(self):
        delta = 0.01
        ps = build_3d(3, delta)
        for i in range(4):
            for j in range(4, 8):
                d2 = float(np.dot(ps.points[i] - ps.points[j], ps.points[i] - ps.points[j]))
                assert 1.0 - 1e-12 <= d2 <= 1.0 + 2.0 * delta**4 + 1e-12

    def test_delta_range(self):
        with pytest.raises(ValueError):
            build_3d(3, 0.0)
        with pytest.raises(ValueError):
            build_3d(3, 1.0)


class TestBuildOdd:
    def test_counts(self):
        ps = build_odd(2, 2, 0.005)
        assert len(ps) == 9
        assert ps.dim == 5

    def test_circle_radius(self):
        # circles pass through the simplex vertex at distance H_k from the
        # opposite facet's barycenter
        for k in (1, 2, 3):
            ps = build_odd(k, 2, 0.005)
            hk2 = (k + 1) / (2.0 * k)
            verts = construct.simplex_vertices(k)
            for ell in range(k + 1):
                center = np.zeros(ps.dim)
                center[:k] = -verts[ell] / k
                for t in range(3):
                    p = ps.points[ell * 3 + t]
                    assert np.dot(p - center, p - center) == pytest.approx(hk2, rel=1e-12)

    def test_long_edges(self):
        delta = 0.008
        ps = build_odd(2, 3, delta)
        for i, j in itertools.combinations(range(len(ps)), 2):
            if ps.circle_of(i) != ps.circle_of(j):
                d2 = float(np.dot(ps.points[i] - ps.points[j], ps.points[i] - ps.points[j]))
                assert 1.0 - 1e-12 <= d2 <= 1.0 + 2.0 * delta**4 + 1e-12

    def test_equal_spacing(self):
        ps = build_odd(2, 4, 0.01)
        for ell in range(3):
            base = ell * 5
            gaps = [float(np.linalg.norm(ps.points[base + t + 1] - ps.points[base + t]))
                    for t in range(4)]
            assert np.allclose(gaps, gaps[0], rtol=1e-12)

    def test_band_endpoints_inclusive(self):
        delta = 0.01
        ps = build_odd(2, 2, delta)
        for ell in range(3):
            last = ps.points[ell * 3:(ell + 1) * 3, 2 + ell]
            assert last[0] == pytest.approx(-delta, rel=1e-12)
            assert last[-1] == pytest.approx(delta, rel=1e-12)

    def test_k1_matches_3d_up_to_rigid_motion(self):
        for n in (2, 3):
            d_odd = pairwise_distances(build_odd(1, n, 0.01))
            d_3d = pairwise_distances(build_3d(n, 0.01))
            assert np.allclose(d_odd, d_3d, rtol=1e-9)

    def test_delta_range(self):
        with pytest.raises(ValueError):
            build_odd(2, 2, 0.9)  # >= H_2


class TestBuildSuspended:
    def test_counts_and_apexes(self):
        ps = build_suspended(2, 2, 0.005, 0.5)
        assert len(ps) == 8  # k(n+1) + 2
        assert ps.dim == 4
        top, bot = ps.apex_ids
        assert np.allclose(ps.points[top], [0, 0, 0, 0.5])
        assert np.allclose(ps.points[bot], -ps.points[top])
        # hyperplane points have trailing zero
        assert np.allclose(ps.points[:6, 3], 0.0)

    def test_parameter_validation(self):
        with pytest.raises(ValueError):
            build_suspended(1, 2, 0.005, 0.5)
        with pytest.raises(ValueError):
            build_suspended(2, 2, 0.005, 0.0)


def test_labels_are_bijective():
    for ps in (build_even(3, 6), build_3d(4, 0.01), build_odd(2, 3, 0.005)):
        seen = {tuple(lbl) for lbl in ps.labels}
        assert len(seen) == len(ps)
        per_circle = ps.points_per_circle
        assert seen == {(c, t) for c in range(ps.n_circles) for t in range(per_circle)}


def test_even_half_edge_closed_form():
    assert half_edge(build_even(2, 5)) == pytest.approx(
        math.sqrt(2) / 2 * math.sin(math.pi / 5), rel=1e-15)


def test_delta_candidates_policy():
    cands = delta_candidates(2)
    assert cands[0] == 0.01
    assert all(b == a / 2 for a, b in zip(cands, cands[1:]))
    assert min(cands) >= DELTA_FLOOR
    assert len(cands) <= 13
    assert delta_candidates(2, 0.25) == [0.25]


class TestPointFile:
    @pytest.mark.parametrize("ps", [
        build_even(2, 5),
        build_3d(3, 0.01),
        build_odd(2, 2, 0.005),
        build_suspended(2, 2, 0.005, 0.5),
    ], ids=["even", "3d", "odd", "suspended"])
    def test_roundtrip_bit_exact(self, ps, tmp_path):
        path = tmp_path / "pts.csv"
        save_points(ps, path)
        back = load_points(path)
        assert back.kind == ps.kind
        assert (back.dim, back.k, back.n) == (ps.dim, ps.k, ps.n)
        assert back.delta == ps.delta and back.h == ps.h
        assert np.array_equal(back.points, ps.points)
        assert np.array_equal(back.labels, ps.labels)
        assert back.apex_ids == ps.apex_ids
        # writing again is byte-identical
        path2 = tmp_path / "pts2.csv"
        save_points(back, path2)
        assert path.read_bytes() == path2.read_bytes()

    def test_missing_header(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("0,0,1.0,2.0\n")
        with pytest.raises(ValueError):
            load_points(bad)


def test_builders_are_deterministic():
    # labels plus parameters reconstruct coordinates exactly
    for build in (lambda: build_even(3, 7), lambda: build_3d(4, 0.01),
                  lambda: build_odd(2, 3, 0.005),
                  lambda: build_suspended(2, 2, 0.005, 0.5)):
        a, b = build(), build()
        assert np.array_equal(a.points, b.points)
        assert np.array_equal(a.labels, b.labels)


def test_scales_invariants():
    ps = build_odd(2, 3, 0.006)
    sc = construct.scales(ps)
    assert 0.006 / 3 < sc.half_short_edge < math.pi / 2 * 0.006 / 3
    assert sc.circumradius_sq == pytest.approx(2 / 6)       # k/(2k+2)
    assert sc.height_sq == pytest.approx(3 / 4)             # (k+1)/(2k)
    assert sc.center_gap_sq == pytest.approx(1 / 12)        # 1/(2k(k+1))
    assert construct.scales(build_even(2, 5)).half_short_edge == pytest.approx(
        math.sqrt(2) / 2 * math.sin(math.pi / 5))
    # 3d and suspended report the scales of their underlying circle count
    assert construct.scales(build_3d(3, 0.01)).height_sq == pytest.approx(1.0)
    assert construct.scales(build_suspended(2, 2, 0.005, 0.5)).height_sq == pytest.approx(1.0)
