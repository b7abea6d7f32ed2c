import numpy as np
import pytest
from scipy.optimize import linprog

from extremal_cech.lp import INFEASIBLE, OPTIMAL, UNBOUNDED, solve_lp_max


def scipy_max(c, A, b):
    res = linprog(-np.asarray(c), A_ub=A, b_ub=b, bounds=[(None, None)] * len(c),
                  method="highs")
    return res


def test_simple_box():
    # maximize x + y on the unit box
    status, x, val = solve_lp_max([1.0, 1.0],
                                  np.array([[1.0, 0.0], [0.0, 1.0],
                                            [-1.0, 0.0], [0.0, -1.0]]),
                                  np.array([1.0, 1.0, 0.0, 0.0]))
    assert status == OPTIMAL
    assert val == pytest.approx(2.0)


def test_negative_rhs_feasible():
    # x >= 2 encoded as -x <= -2, maximize -x
    status, x, val = solve_lp_max([-1.0], np.array([[-1.0], [1.0]]),
                                  np.array([-2.0, 10.0]))
    assert status == OPTIMAL
    assert val == pytest.approx(-2.0)
    assert x[0] == pytest.approx(2.0)


def test_infeasible():
    # x <= 0 and x >= 1
    status, _, _ = solve_lp_max([1.0], np.array([[1.0], [-1.0]]),
                                np.array([0.0, -1.0]))
    assert status == INFEASIBLE


def test_unbounded():
    status, _, _ = solve_lp_max([1.0], np.array([[-1.0]]), np.array([0.0]))
    assert status == UNBOUNDED


def test_degenerate_ties():
    # multiple constraints active at the optimum
    A = np.array([[1.0, 1.0], [1.0, 1.0], [1.0, 0.0], [0.0, 1.0]])
    b = np.array([1.0, 1.0, 1.0, 1.0])
    status, _, val = solve_lp_max([1.0, 1.0], A, b)
    assert status == OPTIMAL
    assert val == pytest.approx(1.0)


@pytest.mark.parametrize("seed", range(40))
def test_random_against_scipy(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 6))
    m = int(rng.integers(1, 12))
    A = rng.normal(size=(m, n))
    b = rng.normal(size=m)
    c = rng.normal(size=n)
    # box the problem so it is always bounded, usually feasible
    A = np.vstack([A, np.eye(n), -np.eye(n)])
    b = np.concatenate([b, np.full(2 * n, 10.0)])

    status, x, val = solve_lp_max(c, A, b)
    ref = scipy_max(c, A, b)
    if ref.status == 2:
        assert status == INFEASIBLE
    else:
        assert status == OPTIMAL
        assert val == pytest.approx(-ref.fun, rel=1e-7, abs=1e-7)
        assert np.all(A @ x <= b + 1e-7)


@pytest.mark.parametrize("seed", range(10))
def test_margin_shape_against_scipy(seed):
    # the empty-sphere feasibility shape: maximize m s.t. m <= f_i(y), y boxed
    rng = np.random.default_rng(100 + seed)
    q = int(rng.integers(1, 4))
    rows = []
    rhs = []
    for _ in range(int(rng.integers(2, 10))):
        w = rng.normal(size=q)
        row = np.concatenate([-w, [1.0]])
        rows.append(row)
        rhs.append(float(rng.normal()))
    for i in range(q):
        e = np.zeros(q + 1)
        e[i] = 1.0
        rows.extend([e, -e])
        rhs.extend([10.0, 10.0])
    A = np.array(rows)
    b = np.array(rhs)
    c = np.zeros(q + 1)
    c[q] = 1.0
    status, _, val = solve_lp_max(c, A, b)
    ref = scipy_max(c, A, b)
    assert status == OPTIMAL and ref.status == 0
    assert val == pytest.approx(-ref.fun, rel=1e-8, abs=1e-8)
