from __future__ import annotations
import itertools, math
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import numpy as np
import sympy as sp
from scipy.optimize import linprog
from loguru import logger

from ..core.errors import DomainError
from .exact_lp import cone_margin, as_vector, UNBOUNDED, OPTIMAL

CHART_DENOMINATOR = 10 ** 6


class PolyhedralBody:
    """properly convex cone spanned by finitely many exact generators"""

    def __init__(self, generators: Sequence) -> None:
        self.generators = [as_vector(g) for g in generators]
        if not self.generators: raise DomainError("a polyhedral body needs at least one generator")
        self.d = len(self.generators[0])
        self.chart = self._chart()

    def _chart(self) -> Tuple[sp.Rational, ...]:
        """a rational functional positive on every generator, found in floats and verified exactly"""
        G = np.array([[float(x) for x in g] for g in self.generators], dtype=float)
        res = linprog(np.zeros(self.d), A_ub=-G, b_ub=-np.ones(len(G)), bounds=(None, None), method="highs")
        if res.status != 0: raise DomainError("body is not properly convex: no functional is positive on all generators")
        phi = tuple(sp.Rational(x).limit_denominator(CHART_DENOMINATOR) for x in res.x)
        if any(self._height(g, phi) <= 0 for g in self.generators):
            raise DomainError("rounded chart functional is not positive on every generator")
        return phi

    @staticmethod
    def _height(p, phi) -> sp.Rational:
        return sum((a * b for a, b in zip(phi, p)), sp.Integer(0))

    def normalize(self, p) -> Tuple[sp.Rational, ...]:
        """representative of [p] in the chart where the positive functional equals 1"""
        p = as_vector(p)
        h = self._height(p, self.chart)
        if h <= 0: raise DomainError("point outside the body")
        return tuple(x / h for x in p)

    def image(self, g) -> PolyhedralBody:
        g = sp.Matrix(g)
        return PolyhedralBody([tuple(g * sp.Matrix(v)) for v in self.generators])

    def center(self) -> Tuple[sp.Rational, ...]:
        return tuple(sum((g[i] for g in self.generators), sp.Integer(0)) for i in range(self.d))

    def chord(self, x, y) -> Tuple[sp.Expr, sp.Expr]:
        """s_min, s_max with (1-s)x + sy on the boundary, ±oo when the chord never leaves the cone"""
        forward = cone_margin(self.generators, x, tuple(a - b for a, b in zip(x, y)))
        backward = cone_margin(self.generators, x, tuple(b - a for a, b in zip(x, y)))
        if forward.status not in (OPTIMAL, UNBOUNDED) or backward.status not in (OPTIMAL, UNBOUNDED):
            raise DomainError("point outside the body")
        s_max = sp.oo if forward.status == UNBOUNDED else forward.value
        s_min = -sp.oo if backward.status == UNBOUNDED else -backward.value
        return s_min, s_max

    def strictly_contains(self, p) -> bool:
        res = cone_margin(self.generators, as_vector(p), self.center())
        return res.status == UNBOUNDED or (res.status == OPTIMAL and res.value > 0)

    def sample_points(self) -> List[Tuple[sp.Rational, ...]]:
        return list(self.generators)


@dataclass
class BallBody:
    """cone over the unit ball of the chart x_d = 1, optionally moved by a linear map"""
    d: int
    transform: Optional[np.ndarray] = None

    def _matrix(self) -> np.ndarray:
        return np.eye(self.d) if self.transform is None else self.transform

    def _inverse(self) -> np.ndarray:
        return np.linalg.inv(self._matrix())

    def _form(self) -> np.ndarray:
        J = -np.eye(self.d)
        J[-1, -1] = 1.0
        Ginv = self._inverse()
        return Ginv.T @ J @ Ginv

    def image(self, g) -> BallBody:
        g = np.array(g, dtype=float)
        return BallBody(self.d, g @ self._matrix())

    def normalize(self, p) -> np.ndarray:
        p = np.asarray(p, dtype=float)
        h = (self._inverse() @ p)[-1]
        if h == 0: raise DomainError("point outside the ball")
        return p / h

    def chord(self, x, y) -> Tuple[float, float]:
        Q = self._form()
        u = y - x
        # x and y share the chart, so the quadratic opens downwards
        a, b, c = u @ Q @ u, 2 * (x @ Q @ u), x @ Q @ x
        if c <= 0 or a >= 0: raise DomainError("point outside the ball")
        disc = math.sqrt(b * b - 4 * a * c)
        return tuple(sorted(((-b - disc) / (2 * a), (-b + disc) / (2 * a))))

    def strictly_contains(self, p) -> bool:
        p = np.asarray(p, dtype=float)
        return float(p @ self._form() @ p) > 0

    def sample_points(self) -> List[np.ndarray]:
        """images of the boundary points ±e_i + e_d"""
        G = self._matrix()
        points = []
        for i in range(self.d - 1):
            for sgn in (1.0, -1.0):
                p = np.zeros(self.d)
                p[i], p[-1] = sgn, 1.0
                points.append(G @ p)
        return points


def _log_cross_ratio(s_min, s_max) -> float:
    ratio = 1.0
    if s_min not in (-math.inf, -sp.oo): ratio *= float((1 - s_min) / (-s_min))
    if s_max not in (math.inf, sp.oo): ratio *= float(s_max / (s_max - 1))
    return 0.5 * math.log(ratio)


def hilbert_distance(body, x, y) -> float:
    """½ log of the cross-ratio of x, y and the endpoints of the chord through them"""
    x, y = body.normalize(x), body.normalize(y)
    if np.array_equal(np.asarray(x, dtype=object), np.asarray(y, dtype=object)): return 0.0
    s_min, s_max = body.chord(x, y)
    if not (s_min < 0 and s_max > 1): raise DomainError("points are not interior to the body")
    return _log_cross_ratio(s_min, s_max)


def hilbert_diameter(body, points: Sequence) -> float:
    """largest pairwise Hilbert distance among points"""
    return max((hilbert_distance(body, p, q) for p, q in itertools.combinations(points, 2)), default=0.0)


def hilbert_gap_bound_check(omega1, omega2, g, d_allowed: float = math.log(2)) -> dict:
    """
    for g mapping the closure of omega1 into omega2, compares μ₁,₂(g) with
    -log diam_{omega2}(g·omega1); d_needed is the smallest constant for which the bound holds
    """
    exact = isinstance(omega1, PolyhedralBody)
    M = np.array(sp.Matrix(g).evalf(), dtype=float) if exact else np.asarray(g, dtype=float)
    image = [tuple(sp.Matrix(g) * sp.Matrix(v)) for v in omega1.generators] if exact else [M @ p for p in omega1.sample_points()]
    if not all(omega2.strictly_contains(p) for p in image):
        raise DomainError("g does not map the closure of omega1 into the interior of omega2")
    diameter = hilbert_diameter(omega2, image)
    sigma = np.linalg.svd(M, compute_uv=False)
    mu12 = float(np.log(sigma[0]) - np.log(sigma[1]))
    d_needed = -math.log(diameter) - mu12 if diameter > 0 else -math.inf
    logger.debug(f"diameter {diameter:.6g}, mu12 {mu12:.6g}, constant needed {d_needed:.6g}")
    return {
        "contained": True,
        "diameter": diameter,
        "mu12": mu12,
        "d_needed": d_needed,
        "d_allowed": d_allowed,
        "holds": d_needed <= d_allowed,
    }
