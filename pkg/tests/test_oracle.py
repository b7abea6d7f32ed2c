import itertools

import numpy as np
import pytest

from extremal_cech import complexgen, oracle
from extremal_cech.construct import PointSet, build_3d, build_even
from extremal_cech.oracle import (
    BudgetExceededError,
    cech,
    cech_betti,
    cech_equals_alpha_betti,
    delaunay_face_test,
    enumeration_matches_oracle,
)


def rigid_copy(ps, seed):
    rng = np.random.default_rng(seed)
    q, _ = np.linalg.qr(rng.normal(size=(ps.dim, ps.dim)))
    moved = ps.points @ q.T + rng.normal(size=ps.dim) * 0.5
    return PointSet(ps.kind, ps.dim, ps.k, ps.n, ps.delta, moved, ps.labels.copy())


class TestCech:
    def test_radius_zero_vertices_only(self, threed_n2):
        ps, _, _, _ = threed_n2
        cx = cech(ps, 0.0, 2)
        assert all(len(v) == 1 for v, _ in cx.simplices)
        assert len(cx) == len(ps)

    def test_monotone_in_radius(self, threed_n2):
        ps, _, thresholds, _ = threed_n2
        rhos = sorted(t.rho for t in thresholds)
        prev = set()
        for rho in rhos:
            cur = {v for v, _ in cech(ps, rho, 3).simplices}
            assert prev <= cur
            prev = cur

    def test_face_closed_and_value_monotone(self, threed_n2):
        ps, _, thresholds, _ = threed_n2
        cx = cech(ps, thresholds[-1].rho, 3)
        values = dict(cx.simplices)
        for verts, value in cx.simplices:
            for facet in itertools.combinations(verts, len(verts) - 1):
                if facet:
                    assert facet in values
                    assert values[facet] <= value

    def test_budget_guard(self, threed_n2):
        ps, _, _, _ = threed_n2
        with pytest.raises(BudgetExceededError):
            cech(ps, 1.0, 3, budget=10)

    def test_3d_betti_at_thresholds(self, threed_n2):
        ps, _, thresholds, _ = threed_n2
        rho1 = complexgen.threshold_after(thresholds, (1, -1))
        assert cech_betti(ps, rho1, 1)[1] == 8

    def test_even_betti_at_half(self, even_2_5):
        ps, _, _, _ = even_2_5
        assert cech_betti(ps, 0.5, 1)[1] == 26


class TestCechEqualsAlpha:
    def test_3d_rho2(self, threed_n2):
        ps, fc, thresholds, _ = threed_n2
        rho2 = complexgen.threshold_after(thresholds, (1, 0))
        report = cech_equals_alpha_betti(ps, rho2, 2, fc=fc)
        assert report.ok
        assert report.cech_vector == [0, 0, 4]

    def test_radius_zero(self, threed_n2):
        ps, fc, _, _ = threed_n2
        report = cech_equals_alpha_betti(ps, 0.0, 2, fc=fc)
        assert report.ok
        assert report.cech_vector[0] == len(ps) - 1

    def test_even_top_radius_rejected(self, even_2_5):
        ps, fc, _, _ = even_2_5
        with pytest.raises(ValueError):
            cech_equals_alpha_betti(ps, 0.71, 2, fc=fc)

    def test_all_thresholds_agree(self, odd_2_2):
        ps, fc, thresholds, _ = odd_2_2
        for th in thresholds:
            assert cech_equals_alpha_betti(ps, th.rho, 4, fc=fc).ok


class TestDelaunayFaceTest:
    def test_single_vertex(self, threed_n2):
        ps, _, _, _ = threed_n2
        assert delaunay_face_test(ps, (0,))

    def test_long_edge(self, threed_n2):
        ps, _, _, _ = threed_n2
        assert delaunay_face_test(ps, (0, 3))

    def test_non_consecutive_pair_rejected(self):
        ps = build_3d(3, 0.01)
        assert not delaunay_face_test(ps, (0, 2))

    def test_non_consecutive_even_pair_rejected(self, even_2_5):
        ps, _, _, _ = even_2_5
        assert not delaunay_face_test(ps, (0, 2))

    def test_relabel_and_rigid_invariance(self, threed_n2):
        ps, _, _, _ = threed_n2
        moved = rigid_copy(ps, 3)
        for verts in [(0,), (0, 1), (0, 3), (0, 2), (0, 1, 3, 4)]:
            assert delaunay_face_test(ps, verts) == delaunay_face_test(moved, verts)

    def test_full_set_trivially_true(self):
        tiny = PointSet("3d", 3, 1, 0, 0.1,
                        np.array([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0]]),
                        np.array([[0, 0], [1, 0]]))
        assert delaunay_face_test(tiny, (0, 1))


class TestEnumerationMatch:
    @pytest.mark.parametrize("n", [2, 3])
    def test_3d(self, pipeline, n):
        ps, _, _, _ = pipeline("3d", 1, n)
        report = enumeration_matches_oracle(ps, 3)
        assert report.ok, (report.missing, report.extra)

    def test_even_2_5(self, even_2_5):
        ps, _, _, _ = even_2_5
        report = enumeration_matches_oracle(ps, 3)
        assert report.ok
        assert report.n_enumerated == 120

    def test_odd_2_2(self, odd_2_2):
        ps, _, _, _ = odd_2_2
        report = enumeration_matches_oracle(ps, 5)
        assert report.ok
        assert report.n_enumerated == 215

    def test_budget_guard(self, even_2_5):
        ps, _, _, _ = even_2_5
        with pytest.raises(BudgetExceededError):
            enumeration_matches_oracle(ps, 3, budget=5)
