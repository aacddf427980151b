from __future__ import annotations
import itertools, math
from dataclasses import dataclass
from typing import Iterable, List, Tuple
import sympy as sp
from loguru import logger

from ..racg import NormalForm, enumerate_ball, is_finite, is_irreducible
from ..vinberg import SimplicialRep
from ..core.errors import DomainError, LimitExceeded
from .wall_geometry import Point, projective_point, column

DEFAULT_ENUMERATION_CAP = 200_000


@dataclass
class SigmaPolytope:
    """{x = Σ λ_t v_t : λ >= 0, α_s(x) <= 0 for all s}, described by its extreme rays"""
    subset: Tuple[int, ...]
    weights: List[Tuple[sp.Rational, ...]]
    vertices: List[Point]

    def to_dict(self, names=None) -> dict:
        return {
            "subset": list(names) if names else list(self.subset),
            "vertices": [[str(x) for x in v] for v in self.vertices],
            "weights": [[str(x) for x in w] for w in self.weights],
        }


def _check_preconditions(rep: SimplicialRep) -> None:
    sys = rep.system
    if sys.n <= 2: raise DomainError("Σ polytopes need more than two generators")
    if is_finite(sys) or not is_irreducible(sys): raise DomainError("Σ polytopes need an infinite irreducible system")
    if rep.cartan.det() == 0: raise DomainError("Σ polytopes need a nonsingular Cartan matrix")


def sigma_polytope(rep: SimplicialRep, subset: Iterable[int], cap: int = DEFAULT_ENUMERATION_CAP) -> SigmaPolytope:
    """
    extreme rays of the cone {λ >= 0, A_{S,S'} λ <= 0}: every choice of m-1 tight constraints
    with a one-dimensional kernel, kept when the kernel direction satisfies all constraints
    """
    _check_preconditions(rep)
    T = tuple(sorted(set(subset)))
    m = len(T)
    if m == 0: return SigmaPolytope(T, [], [])
    A = rep.cartan
    # every constraint reads r·λ <= 0
    rows = [tuple(sp.Integer(-1) if k == i else sp.Integer(0) for k in range(m)) for i in range(m)]
    rows += [tuple(A[s, t] for t in T) for s in range(rep.n)]
    rows = [r for r in dict.fromkeys(rows) if any(x != 0 for x in r)]
    combos = math.comb(len(rows), m - 1)
    if combos > cap: raise LimitExceeded(f"{combos} constraint subsets exceed the enumeration cap {cap}")
    weights, seen = [], set()
    for chosen in itertools.combinations(rows, m - 1):
        kernel = sp.Matrix(list(chosen)).nullspace() if chosen else [sp.Matrix([1])]
        if len(kernel) != 1: continue
        k = kernel[0]
        for direction in (k, -k):
            values = [sum((r[i] * direction[i] for i in range(m)), sp.Integer(0)) for r in rows]
            if all(v <= 0 for v in values):
                ray = projective_point(direction)
                if ray not in seen:
                    seen.add(ray)
                    weights.append(ray)
    vertices = []
    for w in weights:
        x = sum((rep.vectors[t] * w[i] for i, t in enumerate(T)), sp.zeros(rep.d, 1))
        vertices.append(projective_point(x))
    logger.debug(f"Σ of {rep.system.names(T)}: {len(vertices)} vertices")
    return SigmaPolytope(T, weights, vertices)


def satisfies_sigma_inequalities(rep: SimplicialRep, polytope: SigmaPolytope) -> bool:
    F = rep.functional_matrix()
    return all(w_i >= 0 for w in polytope.weights for w_i in w) and all(x <= 0 for v in polytope.vertices for x in F * column(v))


@dataclass
class MinDomainApprox:
    depth: int
    chambers: List[NormalForm]
    vertices: List[Point]

    def to_dict(self) -> dict:
        return {"depth": self.depth, "chambers": len(self.chambers), "vertices": [[str(x) for x in v] for v in self.vertices]}


def min_domain_approx(rep: SimplicialRep, depth: int) -> MinDomainApprox:
    """orbit of the vertices of Σ_S over the ball of radius depth"""
    sigma = sigma_polytope(rep, range(rep.n))
    chambers = list(enumerate_ball(rep.system, depth))
    vertices, seen = [], set()
    for g in chambers:
        M = rep.evaluate(g)
        for v in sigma.vertices:
            p = projective_point(M * column(v))
            if p not in seen:
                seen.add(p)
                vertices.append(p)
    return MinDomainApprox(depth, chambers, vertices)
