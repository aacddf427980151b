from __future__ import annotations
import math
from typing import List, Optional, Sequence, Union
import numpy as np
import sympy as sp
from scipy.optimize import nnls
from loguru import logger

from ..racg import NormalForm, normalize, support
from ..walls import Itinerary, walls_of
from ..vinberg import SimplicialRep, restrict
from ..core.errors import DomainError
from ..projgeom import halfcone_approx
from .singular import GAP_THRESHOLD
from .gaps import GapTrace, _scaled

DEFAULT_CONVERGENCE_TOL = 1e-6
DEFAULT_LOCALITY_EPS = 1e-3
DEFAULT_LOCALITY_DEPTH = 4
UNDEFINED = "UNDEFINED"
DEFINED = "DEFINED"


def projective_angle(x: np.ndarray, y: np.ndarray) -> float:
    """angle metric on P(R^d): the angle in [0, π/2] between the lines through x and y"""
    c = abs(float(x @ y)) / (np.linalg.norm(x) * np.linalg.norm(y))
    return math.acos(min(1.0, c))


def _decay_rate(steps: List[float]) -> Optional[float]:
    """-slope of a least-squares line through log(step), inf when every step vanishes"""
    points = [(i, math.log(s)) for i, s in enumerate(steps) if s > 0]
    if not points: return math.inf
    if len(points) < 2: return None
    slope = np.polyfit([p[0] for p in points], [p[1] for p in points], 1)[0]
    return float(-slope)


def convergence_check(trace: GapTrace, tol: float = DEFAULT_CONVERGENCE_TOL) -> dict:
    """
    distances between consecutive unstable lines E⁺₁(γ_n) and between consecutive hyperplanes
    E⁻_{d-1}(γ_n⁻¹) (angle between their normals), with a fitted exponential decay rate
    """
    unstable, normals = trace.unstable[1:], trace.hyperplanes[1:]
    if len(unstable) < 2: raise DomainError("convergence needs a trace with at least two non-trivial prefixes")
    if any(v is None for v in unstable): raise DomainError(f"unstable subspaces undefined along {trace.word}")
    if any(v is None for v in normals): raise DomainError(f"stable hyperplanes undefined along {trace.word}")
    gaps = trace.gaps[1:]
    if any(b < a for a, b in zip(gaps, gaps[1:])): logger.warning(f"gaps along {trace.word} are not increasing")
    u_steps = [projective_angle(a, b) for a, b in zip(unstable, unstable[1:])]
    s_steps = [projective_angle(a, b) for a, b in zip(normals, normals[1:])]
    u_rate, s_rate = _decay_rate(u_steps), _decay_rate(s_steps)
    certified = u_steps[-1] < tol and s_steps[-1] < tol and u_rate is not None and u_rate > 0
    if not certified: logger.warning(f"no decay certificate along {trace.word}: last step {u_steps[-1]:.3g}, rate {u_rate}")
    return {
        "word": trace.word,
        "tol": tol,
        "unstable_steps": u_steps,
        "stable_steps": s_steps,
        "unstable_rate": u_rate,
        "stable_rate": s_rate,
        "final_unstable": u_steps[-1],
        "final_stable": s_steps[-1],
        "certified": certified,
    }


def _orthonormal(B: sp.MatrixBase) -> np.ndarray:
    if B.cols == 0: return np.zeros((B.rows, 0))
    Q, _ = np.linalg.qr(np.array(B.evalf(), dtype=float))
    return Q


def subspace_distance(Q: np.ndarray, x: np.ndarray) -> float:
    """sine of the angle between the line through x and the span of the orthonormal columns of Q"""
    x = x / np.linalg.norm(x)
    return float(np.linalg.norm(x - Q @ (Q.T @ x))) if Q.shape[1] else 1.0


def cone_distance(generators: Sequence, x: np.ndarray) -> float:
    """sine of the angle between the line through x and the closest ray of the cone, ±x both tried"""
    G = np.array([[float(c) for c in g] for g in generators], dtype=float).T
    G = G / np.linalg.norm(G, axis=0)
    x = x / np.linalg.norm(x)
    return float(min(nnls(G, sign * x)[1] for sign in (1.0, -1.0)))


def halfcone_subspace_check(rep: SimplicialRep, itinerary: Union[Itinerary, NormalForm, Sequence[int]], k: int = 1,
                            eps: float = DEFAULT_LOCALITY_EPS, depth: int = DEFAULT_LOCALITY_DEPTH, threshold: float = GAP_THRESHOLD) -> dict:
    """
    where E⁺₁(ρ(γ)) sits for the element γ traversed by an itinerary departing from the identity:
    its distance to the depth-N inner approximation of Hc₊(W_k), and when supp(γ) = T is proper,
    its distances to V_T and V_T^⊥ next to the exact minimal angle ε₀ between those subspaces
    """
    sys = rep.system
    if isinstance(itinerary, Itinerary):
        if itinerary.departure.length: raise DomainError("the itinerary must depart from the identity chamber")
        gamma, walls = itinerary.traversed(), list(itinerary.walls)
    else:
        gamma = itinerary if isinstance(itinerary, NormalForm) else normalize(sys, itinerary)
        walls = walls_of(sys, gamma)[0]
    if not 1 <= k <= len(walls): raise DomainError(f"wall index {k} outside 1..{len(walls)}")
    report = {"word": str(gamma), "k": k, "wall": str(walls[k - 1]), "eps": eps, "depth": depth}
    log_scale, S = _scaled(rep.evaluate(gamma))
    U, s, _ = np.linalg.svd(S)
    gap = math.log(s[0] / s[1])
    report["mu12"] = gap
    if gap <= threshold:
        logger.warning(f"μ₁,₂ of {gamma} is below {threshold}, E⁺₁ undefined")
        return {**report, "status": UNDEFINED}
    x = U[:, 0]
    hc = halfcone_approx(rep, walls[k - 1], 1, depth)
    distance = cone_distance(hc.generators, x)
    report.update({"status": DEFINED, "unstable": x.tolist(), "distance_halfcone": distance, "localized": distance <= eps})
    T = support(gamma)
    if T and len(T) < sys.n and rep.cartan.principal(sorted(T)).det() != 0:
        R = restrict(rep, T)
        Q_t, Q_perp = _orthonormal(R.basis_vt), _orthonormal(R.basis_perp)
        # sine of the smallest principal angle between V_T and V_T^⊥
        cos_max = float(np.linalg.svd(Q_t.T @ Q_perp, compute_uv=False).max()) if Q_perp.shape[1] else 0.0
        eps0 = math.sqrt(max(0.0, 1.0 - cos_max ** 2))
        d_t, d_perp = subspace_distance(Q_t, x), subspace_distance(Q_perp, x)
        report.update({"support": sys.names(sorted(T)), "distance_vt": d_t, "distance_perp": d_perp, "eps0": eps0,
                       "repelled": d_perp >= eps0 - d_t})
    return report
