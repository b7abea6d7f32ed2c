"""Brute-force ground truth, independent of the combinatorial enumeration.

Two oracles:

* the Cech complex from miniballs over all vertex subsets up to a size
  budget, whose Betti numbers must agree with the alpha sublevel complex at
  equal radius;
* a Delaunay-membership test by empty-sphere feasibility: a vertex set spans
  a mosaic face iff some sphere through it keeps every other point outside
  with positive margin, which is a small linear program in the sphere center.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

import numpy as np

from . import complexgen, homology
from .construct import PointSet, KIND_EVEN
from .geometry import Tolerance, DEFAULT_TOL, min_enclosing_ball
from .lp import OPTIMAL, solve_lp_max

__all__ = [
    "BudgetExceededError",
    "CechComplex",
    "EqualityReport",
    "MatchReport",
    "cech",
    "cech_betti",
    "cech_equals_alpha_betti",
    "delaunay_face_test",
    "enumeration_matches_oracle",
]

DEFAULT_BUDGET = 10_000_000
_LP_BOX = 10.0  # all constructions live well inside this box


class BudgetExceededError(RuntimeError):
    """Subset enumeration would exceed the configured budget."""


@dataclass
class CechComplex:
    """All vertex subsets of size <= maxdim+1 with miniball radius <= r,
    sorted by (radius, size, vertices)."""

    maxdim: int
    radius: float
    simplices: list[tuple[tuple[int, ...], float]]

    def __len__(self) -> int:
        return len(self.simplices)

    def as_filtration(self):
        return [(value, verts) for verts, value in self.simplices]


def _check_budget(n_points: int, maxdim: int, budget: int) -> None:
    total = sum(math.comb(n_points, m) for m in range(1, maxdim + 2))
    if total > budget:
        raise BudgetExceededError(
            f"{total} subsets exceed the budget of {budget}")


def _miniball_radii(points: np.ndarray, maxdim: int, tol: Tolerance):
    """Miniball radius per subset, made exactly monotone under face
    inclusion (a face's value may exceed its coface's by floating-point
    noise when both determine the same ball)."""
    values: dict[tuple[int, ...], float] = {}
    ids = range(len(points))
    for size in range(1, maxdim + 2):
        for verts in itertools.combinations(ids, size):
            r = min_enclosing_ball(points[list(verts)], tol).radius
            if size > 1:
                r = max(r, max(values[f] for f in itertools.combinations(verts, size - 1)))
            values[verts] = r
    return values


def cech(ps: PointSet, r: float, maxdim: int, budget: int = DEFAULT_BUDGET,
         tol: Tolerance = DEFAULT_TOL) -> CechComplex:
    """Cech complex of the point set at radius r, up to dimension maxdim."""
    if maxdim > ps.dim:
        raise ValueError("maxdim cannot exceed the ambient dimension")
    _check_budget(len(ps), maxdim, budget)
    values = _miniball_radii(ps.points, maxdim, tol)
    kept = [(verts, value) for verts, value in values.items() if value <= r + tol.abs_eps]
    kept.sort(key=lambda sv: (sv[1], len(sv[0]), sv[0]))
    return CechComplex(maxdim, r, kept)


def cech_betti(ps: PointSet, r: float, pmax: int, budget: int = DEFAULT_BUDGET,
               tol: Tolerance = DEFAULT_TOL, reduced: bool = True) -> list[int]:
    """Betti numbers beta_0..beta_pmax of the Cech complex at radius r.
    Needs simplices one dimension above pmax to witness deaths."""
    cx = cech(ps, r, min(pmax + 1, ps.dim), budget, tol)
    pd = homology.reduce(cx, reduced=reduced)
    return [homology.betti_at(pd, p, r, tol.abs_eps) for p in range(pmax + 1)]


@dataclass
class EqualityReport:
    radius: float
    cech_vector: list[int]
    alpha_vector: list[int]

    @property
    def ok(self) -> bool:
        return self.cech_vector == self.alpha_vector


def cech_equals_alpha_betti(ps: PointSet, r: float, pmax: int,
                            fc: complexgen.FilteredComplex | None = None,
                            budget: int = DEFAULT_BUDGET,
                            tol: Tolerance = DEFAULT_TOL) -> EqualityReport:
    """Compare Betti vectors of the Cech complex and the alpha sublevel
    complex at the same radius (both share the homotopy type of the union of
    balls, so the vectors must agree)."""
    if ps.kind == KIND_EVEN:
        top = math.sqrt(2.0) / 2.0
        if r >= top - tol.abs_eps:
            raise ValueError("radius must stay below the even top-cell value")
    cvec = cech_betti(ps, r, pmax, budget, tol)
    if fc is None:
        fc = complexgen.build_filtration(ps, tol=tol)
    avec = homology.betti_of_subcomplex(fc, r, pmax=pmax, eps=tol.abs_eps)
    return EqualityReport(r, cvec, avec)


def delaunay_face_test(ps: PointSet, vertices, tol: Tolerance = DEFAULT_TOL,
                       strict: bool = True) -> bool:
    """True iff some sphere passes through the given vertices with every
    other point strictly farther out.

    With g_i(z) = |a_i|^2 - 2 <z, a_i> (the power of z minus |z|^2), the
    sphere center z must satisfy g_i(z) = g_j(z) on vertices and
    g_b(z) >= g_i(z) + m elsewhere; the margin m is exactly the squared
    clearance outside the sphere, so the strictness threshold shares
    abs_eps with the geometry module's emptiness predicate.
    """
    verts = tuple(sorted(int(v) for v in vertices))
    pts = ps.points
    d = ps.dim
    a0 = pts[verts[0]]
    others = [i for i in range(len(ps)) if i not in set(verts)]

    # equalities 2 <z, a0 - a_i> = |a0|^2 - |a_i|^2 solved as z = z0 + V y
    if len(verts) > 1:
        eq_lhs = 2.0 * (a0 - pts[list(verts[1:])])
        eq_rhs = np.array([float(a0 @ a0 - pts[i] @ pts[i]) for i in verts[1:]])
        z0, *_ = np.linalg.lstsq(eq_lhs, eq_rhs, rcond=None)
        if np.linalg.norm(eq_lhs @ z0 - eq_rhs) > tol.rel_eps * (1.0 + np.linalg.norm(eq_rhs)):
            return False  # no equidistant center at all
        _, sv, vt = np.linalg.svd(eq_lhs)
        rank = int(np.sum(sv > tol.rel_eps * sv[0]))
        null = vt[rank:].T  # (d, q)
    else:
        z0 = np.zeros(d)
        null = np.eye(d)

    q = null.shape[1]
    if not others:
        return True

    # maximize m subject to, per non-vertex b:
    #   2 <z, a0 - a_b> - m >= |a0|^2 - |a_b|^2, plus |z|_inf <= box
    n_var = q + 1  # y then m
    rows, rhs = [], []
    for b in others:
        w = 2.0 * (a0 - pts[b])
        row = np.zeros(n_var)
        row[:q] = -(w @ null)
        row[q] = 1.0
        rows.append(row)
        rhs.append(float(w @ z0) - float(a0 @ a0 - pts[b] @ pts[b]))
    for i in range(d):
        for sign in (1.0, -1.0):
            row = np.zeros(n_var)
            row[:q] = sign * null[i]
            rows.append(row)
            rhs.append(_LP_BOX - sign * z0[i])

    c = np.zeros(n_var)
    c[q] = 1.0
    status, _, margin = solve_lp_max(c, np.array(rows), np.array(rhs))
    if status != OPTIMAL:
        return False
    return margin > (tol.abs_eps if strict else -tol.abs_eps)


@dataclass
class MatchReport:
    """Symmetric difference between the combinatorial enumeration and the
    empty-sphere oracle."""

    n_enumerated: int
    n_oracle: int
    missing: list[tuple[int, ...]]  # oracle says face, enumeration lacks it
    extra: list[tuple[int, ...]]    # enumeration emits it, oracle denies it

    @property
    def ok(self) -> bool:
        return not self.missing and not self.extra


def enumeration_matches_oracle(ps: PointSet, maxdim: int,
                               budget: int = DEFAULT_BUDGET,
                               tol: Tolerance = DEFAULT_TOL,
                               strict: bool = True) -> MatchReport:
    """Compare the enumerated mosaic (up to maxdim) against all subsets
    passing the empty-sphere feasibility test."""
    _check_budget(len(ps), maxdim, budget)
    enumerated = {cs.vertices for cs in complexgen.enumerate_mosaic(ps)
                  if cs.dim <= maxdim}
    oracle_faces = set()
    ids = range(len(ps))
    for size in range(1, maxdim + 2):
        for verts in itertools.combinations(ids, size):
            if delaunay_face_test(ps, verts, tol, strict=strict):
                oracle_faces.add(verts)
    missing = sorted(oracle_faces - enumerated)
    extra = sorted(enumerated - oracle_faces)
    return MatchReport(len(enumerated), len(oracle_faces), missing, extra)
