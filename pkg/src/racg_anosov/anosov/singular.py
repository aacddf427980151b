from __future__ import annotations
import math
from itertools import combinations
from dataclasses import dataclass
from typing import List, Optional, Sequence
import numpy as np
import sympy as sp
from loguru import logger

from ..racg import random_geodesic
from ..vinberg import SimplicialRep
from ..core.context import RunContext
from ..core.errors import DomainError
from ..utils.misc import parallel_map

GAP_THRESHOLD = 1e-8
CONDITION_LIMIT = 1e15
DEFAULT_SWEEP_LENGTH = 6


def as_float_matrix(g) -> np.ndarray:
    if isinstance(g, sp.MatrixBase): return np.array(g.evalf(), dtype=float)
    return np.asarray(g, dtype=float)


def _orient(v: np.ndarray) -> np.ndarray:
    # largest entry positive, so reported subspaces are reproducible
    k = int(np.argmax(np.abs(v)))
    return v if v[k] >= 0 else -v


@dataclass
class SingularReport:
    mu: np.ndarray
    unstable: Optional[np.ndarray] = None
    stable_normal: Optional[np.ndarray] = None

    @property
    def gaps(self) -> np.ndarray: return self.mu[:-1] - self.mu[1:]

    @property
    def mu12(self) -> float: return float(self.mu[0] - self.mu[1]) if len(self.mu) > 1 else 0.0

    @property
    def mu1d(self) -> float: return float(self.mu[0] - self.mu[-1])

    @property
    def defined(self) -> bool: return self.unstable is not None

    def to_dict(self) -> dict:
        return {
            "mu": self.mu.tolist(),
            "gaps": self.gaps.tolist(),
            "unstable": None if self.unstable is None else self.unstable.tolist(),
            "stable_normal": None if self.stable_normal is None else self.stable_normal.tolist(),
            "subspaces": "defined" if self.defined else "UNDEFINED",
        }


def singular_report(g, threshold: float = GAP_THRESHOLD, log_scale: float = 0.0) -> SingularReport:
    """
    μ_i = log σ_i (plus log_scale when g was divided by e^log_scale beforehand);
    E⁺₁ is the top left singular vector, E⁻_{d-1} the hyperplane normal to the top right one
    """
    M = as_float_matrix(g)
    U, s, Vt = np.linalg.svd(M)
    if s[-1] <= 0 or s[0] / s[-1] > CONDITION_LIMIT: raise DomainError(f"numerically singular matrix (condition {s[0] / s[-1] if s[-1] > 0 else math.inf:.3g})")
    mu = np.log(s) + log_scale
    if len(s) > 1 and mu[0] - mu[1] > threshold:
        return SingularReport(mu, _orient(U[:, 0]), _orient(Vt[0]))
    return SingularReport(mu)


def mu_vector(g) -> np.ndarray:
    return singular_report(g).mu


def second_compound(M) -> np.ndarray:
    """matrix of 2×2 minors on index pairs i < j, exact when M holds rationals"""
    A = np.array(M.tolist(), dtype=object) if isinstance(M, sp.MatrixBase) else np.asarray(M)
    pairs = [(i, j) for i in range(A.shape[0]) for j in range(i + 1, A.shape[0])]
    C = np.empty((len(pairs), len(pairs)), dtype=A.dtype)
    for r, rows in enumerate(pairs):
        for c, cols in enumerate(pairs):
            block = A[np.ix_(rows, cols)]
            C[r, c] = block[0, 0] * block[1, 1] - block[0, 1] * block[1, 0]
    return C


def compound(M, k: int) -> np.ndarray:
    """floating point matrix of k×k minors on increasing index tuples, Λ⁰ being [[1]]"""
    A = as_float_matrix(M)
    if k == 0: return np.ones((1, 1))
    tuples = list(combinations(range(A.shape[0]), k))
    return np.array([[np.linalg.det(A[np.ix_(rows, cols)]) for cols in tuples] for rows in tuples])


def check_additivity(g, h1, h2, tol: float = 1e-9) -> dict:
    """‖μ(h1 g h2) - μ(g)‖ <= ‖μ(h1)‖ + ‖μ(h2)‖ in the Euclidean norm"""
    g, h1, h2 = as_float_matrix(g), as_float_matrix(h1), as_float_matrix(h2)
    deviation = float(np.linalg.norm(mu_vector(h1 @ g @ h2) - mu_vector(g)))
    bound = float(np.linalg.norm(mu_vector(h1)) + np.linalg.norm(mu_vector(h2)))
    return {"deviation": deviation, "bound": bound, "violation": deviation > bound + tol * max(1.0, bound)}


def check_transversality(g, h, tol: float = 1e-8, threshold: float = GAP_THRESHOLD) -> dict:
    """μ₁,₂(gh) >= μ₁,₂(g) + μ₁,₂(h) + 2 log sin θ, θ the angle between E⁻_{d-1}(g) and E⁺₁(h)"""
    g, h = as_float_matrix(g), as_float_matrix(h)
    rg, rh = singular_report(g, threshold), singular_report(h, threshold)
    if not (rg.defined and rh.defined): raise DomainError("transversality needs μ₁,₂ > 0 for both matrices")
    sin_theta = float(abs(rg.stable_normal @ rh.unstable))
    lhs = singular_report(g @ h).mu12
    if sin_theta == 0.0:
        return {"sin_theta": 0.0, "lhs": lhs, "rhs": -math.inf, "vacuous": True, "holds": True}
    rhs = rg.mu12 + rh.mu12 + 2 * math.log(sin_theta)
    return {"sin_theta": sin_theta, "lhs": lhs, "rhs": rhs, "vacuous": False, "holds": lhs >= rhs - tol * max(1.0, abs(rhs))}


def float_product(generators: Sequence[np.ndarray], letters: Sequence[int]) -> np.ndarray:
    M = np.eye(generators[0].shape[0]) if generators else np.eye(0)
    for s in letters: M = M @ generators[s]
    return M


def _random_words(rep: SimplicialRep, seed: int, count: int, per_sample: int, max_length: int) -> List[tuple]:
    rng = np.random.default_rng(seed)
    return [tuple(random_geodesic(rep.system, int(rng.integers(0, max_length + 1)), rng) for _ in range(per_sample)) for _ in range(count)]


def additivity_sweep(rep: SimplicialRep, seed: int, samples: int = 1000, max_length: int = DEFAULT_SWEEP_LENGTH) -> dict:
    """check_additivity on random triples of geodesic words"""
    RunContext.record_seed("additivity", seed)
    gens = rep.float_generators()
    triples = _random_words(rep, seed, samples, 3, max_length)
    results = parallel_map(lambda t: check_additivity(*(float_product(gens, w) for w in (t[1], t[0], t[2]))), triples, RunContext.get_threads())
    violations = [i for i, r in enumerate(results) if r["violation"]]
    worst = max((r["deviation"] - r["bound"] for r in results), default=0.0)
    if violations: logger.warning(f"additivity violated on {len(violations)} of {samples} triples")
    return {"seed": seed, "samples": samples, "max_length": max_length, "violations": len(violations), "worst_excess": worst}


def transversality_sweep(rep: SimplicialRep, seed: int, samples: int = 1000, max_length: int = DEFAULT_SWEEP_LENGTH, min_gap: float = 0.1) -> dict:
    """check_transversality on random pairs whose gaps exceed min_gap"""
    RunContext.record_seed("transversality", seed)
    gens = rep.float_generators()
    pairs = []
    for g, h in _random_words(rep, seed, samples, 2, max_length):
        G, H = float_product(gens, g), float_product(gens, h)
        if singular_report(G).mu12 > min_gap and singular_report(H).mu12 > min_gap: pairs.append((G, H))
    results = parallel_map(lambda p: check_transversality(*p), pairs, RunContext.get_threads())
    failures = sum(1 for r in results if not r["holds"])
    if failures: logger.warning(f"transversality violated on {failures} of {len(pairs)} pairs")
    return {"seed": seed, "samples": samples, "checked": len(pairs), "vacuous": sum(1 for r in results if r["vacuous"]), "violations": failures}
