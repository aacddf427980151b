"""
Singular value gaps along geodesic words: per-prefix traces of μ₁,₂(ρ(γ_n)), optional pairwise
data μ₁,₂(ρ(γ_n⁻¹γ_m)), linear lower-bound fits and seeded random scans.
"""
from __future__ import annotations
import csv, math
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence, Tuple
import numpy as np
import sympy as sp
from dataclasses_json import dataclass_json
from loguru import logger

from ..racg import normalize, format_word, random_geodesic
from ..vinberg import SimplicialRep
from ..vinberg.representation import Word, _letters
from ..core.context import RunContext
from ..core.errors import CertificationFailure, DomainError
from ..utils.misc import parallel_map
from .singular import GAP_THRESHOLD, as_float_matrix, compound, second_compound, _orient

DEFAULT_B_CAP = 1.0
DEFAULT_SAMPLES = 200
DEFAULT_MAX_LENGTH = 40
PAIRWISE_TOL = 1e-9
CSV_HEADER = ("n", "length", "mu1", "mu2", "gap12")


def _log_abs(r) -> float:
    r = abs(sp.Rational(r))
    return math.log(r.p) - math.log(r.q)


def _scaled(M) -> Tuple[float, np.ndarray]:
    """log of the largest absolute entry, and the float matrix divided by that entry"""
    A = np.array(M.tolist(), dtype=object) if isinstance(M, sp.MatrixBase) else np.asarray(M, dtype=object)
    m = max(abs(x) for x in A.flat)
    if m == 0: raise DomainError("cannot scale the zero matrix")
    return _log_abs(m), np.array([[float(x / m) for x in row] for row in A], dtype=float)


@dataclass
class _Point:
    mu1: float
    mu2: float
    mud: float
    unstable: Optional[np.ndarray]
    # normal of E⁻_{d-1}(γ_n⁻¹), the span of the top d-1 left singular vectors of γ_n
    hyperplane: Optional[np.ndarray]


def _exact_point(P, P_inv, threshold: float) -> _Point:
    """
    μ₁ from the scaled product, μ₁ + μ₂ from its scaled second compound, μ_d and the hyperplane
    from the scaled inverse; only top singular values are read so long products stay accurate
    """
    l1, S1 = _scaled(P)
    U, s, _ = np.linalg.svd(S1)
    mu1 = l1 + math.log(s[0])
    l2, S2 = _scaled(second_compound(P))
    mu2 = l2 + math.log(np.linalg.svd(S2, compute_uv=False)[0]) - mu1
    li, Si = _scaled(P_inv)
    _, si, Vti = np.linalg.svd(Si)
    mud = -(li + math.log(si[0]))
    unstable = _orient(U[:, 0]) if mu1 - mu2 > threshold else None
    # μ_{d-1,d}(γ) = μ₁,₂(γ⁻¹)
    hyperplane = _orient(Vti[0]) if math.log(si[0] / si[1]) > threshold else None
    return _Point(mu1, mu2, mud, unstable, hyperplane)


def _float_point(M: np.ndarray, log_scale: float, threshold: float) -> _Point:
    U, s, _ = np.linalg.svd(M)
    mu = np.log(s) + log_scale
    unstable = _orient(U[:, 0]) if mu[0] - mu[1] > threshold else None
    hyperplane = _orient(U[:, -1]) if mu[-2] - mu[-1] > threshold else None
    return _Point(mu[0], mu[1], mu[-1], unstable, hyperplane)


@dataclass
class GapTrace:
    """μ₁,₂ of every prefix γ_0 = 1, γ_1, ..., γ_L of a geodesic word"""
    word: str
    lengths: List[int]
    mu1: List[float]
    mu2: List[float]
    mud: List[float] = field(default_factory=list)
    unstable: List[Optional[np.ndarray]] = field(default_factory=list)
    hyperplanes: List[Optional[np.ndarray]] = field(default_factory=list)
    # [n, m] holds μ₁,₂(γ_n⁻¹γ_m), resp. μ₁,d(γ_n⁻¹γ_m)
    pairwise: Optional[np.ndarray] = None
    pairwise_mu1d: Optional[np.ndarray] = None
    pairwise_deviation: Optional[float] = None

    @property
    def gaps(self) -> List[float]: return [a - b for a, b in zip(self.mu1, self.mu2)]

    def __len__(self) -> int: return len(self.lengths)

    def rows(self) -> List[list]:
        return [[n, ell, a, b, a - b] for n, (ell, a, b) in enumerate(zip(self.lengths, self.mu1, self.mu2))]

    def samples(self) -> List[Tuple[int, float]]:
        """(length, μ₁,₂) pairs: every ordered pair when pairwise data exists, else the prefixes"""
        if self.pairwise is None: return list(zip(self.lengths, self.gaps))
        L = len(self.lengths)
        return [(abs(m - n), float(self.pairwise[n, m])) for n in range(L) for m in range(L)]

    def to_dict(self) -> dict:
        out = {
            "word": self.word,
            "header": list(CSV_HEADER),
            "rows": self.rows(),
            "subspaces_defined": [v is not None for v in self.unstable],
        }
        if self.pairwise is not None:
            out["pairwise"] = self.pairwise.tolist()
            out["pairwise_mu1d"] = self.pairwise_mu1d.tolist()
            out["pairwise_deviation"] = self.pairwise_deviation
        return out


def _check_geodesic(rep: SimplicialRep, word: Word) -> Tuple[int, ...]:
    letters = _letters(word)
    if rep.d < 2: raise DomainError("singular value gaps need dimension at least 2")
    if normalize(rep.system, letters).length != len(letters): raise DomainError(f"word {format_word(rep.system, letters)} is not geodesic")
    return letters


def _pairwise(rep: SimplicialRep, letters: Sequence[int]) -> Tuple[np.ndarray, np.ndarray, float]:
    """
    balanced float products for every window: γ_n⁻¹γ_m is letters[n:m] for n < m and the
    reversed letters[m:n] for n > m. μ₁ and μ₁ + μ₂ are read off the window product g and its
    second compound. The check rebuilds them from g⁻¹, accumulated from the inverse generators
    in reverse order, through σ₁(g) = |det g|·σ₁(Λ^{d-1}g⁻¹) and σ₁σ₂(g) = |det g|·σ₁(Λ^{d-2}g⁻¹).
    """
    d = rep.d
    factors = []
    for g in rep.float_generators():
        h = np.linalg.inv(g)
        factors.append(([g, compound(g, 2)], [compound(h, d - 1), compound(h, d - 2)], math.log(abs(np.linalg.det(g)))))
    L = len(letters) + 1

    def sweep(n: int):
        top, gap, check = np.zeros(L), np.zeros(L), np.zeros(L)
        for window, targets in ((letters[n:], range(n + 1, L)), (letters[:n][::-1], range(n - 1, -1, -1))):
            forward, backward = [np.eye(len(F)) for F in factors[0][0]], [np.eye(len(F)) for F in factors[0][1]]
            scales, log_det = np.zeros(4), 0.0
            for letter, m in zip(window, targets):
                right, left, ld = factors[letter]
                forward = [P @ F for P, F in zip(forward, right)]
                backward = [F @ P for P, F in zip(backward, left)]
                log_det += ld
                sigma = []
                for i, P in enumerate(forward + backward):
                    k = np.abs(P).max()
                    P /= k
                    scales[i] += math.log(k)
                    sigma.append(scales[i] + math.log(np.linalg.norm(P, 2)))
                top[m] = sigma[0]
                gap[m] = max(0.0, 2 * sigma[0] - sigma[1])
                check[m] = max(0.0, log_det + 2 * sigma[2] - sigma[3])
        return top, gap, check

    rows = parallel_map(sweep, range(L), RunContext.get_threads())
    top, gap, check = (np.array([r[i] for r in rows]) for i in range(3))
    # μ₁,d(h) = μ₁(h) + μ₁(h⁻¹)
    return gap, top + top.T, float(np.abs(gap - check).max())


def gap_trace(rep: SimplicialRep, word: Word, pairwise: bool = False, threshold: float = GAP_THRESHOLD) -> GapTrace:
    """
    prefix products are carried exactly, converted to floating point once per prefix after
    factoring out their largest entry
    """
    letters = _check_geodesic(rep, word)
    P, P_inv = sp.eye(rep.d), sp.eye(rep.d)
    points = [_Point(0.0, 0.0, 0.0, None, None)]
    for s in letters:
        G = rep.generator(s)
        P, P_inv = P * G, G * P_inv
        points.append(_exact_point(P, P_inv, threshold))
    trace = GapTrace(
        format_word(rep.system, letters),
        list(range(len(letters) + 1)),
        [p.mu1 for p in points],
        [p.mu2 for p in points],
        [p.mud for p in points],
        [p.unstable for p in points],
        [p.hyperplane for p in points],
    )
    if pairwise:
        trace.pairwise, trace.pairwise_mu1d, trace.pairwise_deviation = _pairwise(rep, letters)
        if trace.pairwise_deviation > PAIRWISE_TOL * max(1.0, float(trace.pairwise.max())):
            raise CertificationFailure(f"pairwise gaps of {trace.word} disagree with the inverse computation by {trace.pairwise_deviation:.3g}", trace.to_dict())
    logger.debug(f"gap trace of {trace.word}: final μ₁,₂ {trace.gaps[-1]:.6g}")
    return trace


def trace_from_matrices(matrices: Sequence, word: str = "", threshold: float = GAP_THRESHOLD) -> GapTrace:
    """trace of an explicit sequence of matrices, entry n standing for γ_n"""
    points = []
    for M in matrices:
        M = as_float_matrix(M)
        k = np.abs(M).max()
        points.append(_float_point(M / k, math.log(k), threshold))
    return GapTrace(word, list(range(len(points))), [p.mu1 for p in points], [p.mu2 for p in points], [p.mud for p in points],
                    [p.unstable for p in points], [p.hyperplane for p in points])


def trace_from_rows(rows: Iterable[Sequence], word: str = "") -> GapTrace:
    rows = [[float(x) for x in r] for r in rows]
    if any(int(r[1]) != i for i, r in enumerate(rows)): raise DomainError("trace lengths must be 0, 1, 2, ... in order")
    return GapTrace(word, [int(r[1]) for r in rows], [r[2] for r in rows], [r[3] for r in rows])


def load_trace(path: str) -> GapTrace:
    """reads a CSV gap trace with the n,length,mu1,mu2,gap12 header, skipping '#' comment lines"""
    try:
        with open(path, newline="") as f:
            reader = csv.reader(line for line in f if not line.startswith("#"))
            header = next(reader, None)
            if header is None or tuple(h.strip() for h in header) != CSV_HEADER: raise DomainError(f"{path} does not start with the header {','.join(CSV_HEADER)}")
            return trace_from_rows((r for r in reader if r), word=path)
    except OSError as e:
        raise DomainError(f"cannot read gap trace {path}: {e}") from e


@dataclass_json
@dataclass
class GapFit:
    """μ ≥ A·ℓ - B on every sample, B the least offset covering negative μ (at most b_cap), A maximal for it"""
    A: Optional[float]
    B: float
    b_cap: float
    samples: int
    min_slack: float
    binding_length: Optional[float] = None
    kind: str = "gaps"


def _fit(samples: List[Tuple[float, float]], b_cap: float, kind: str) -> GapFit:
    if b_cap < 0: raise DomainError(f"B cap must be non-negative, got {b_cap}")
    # the offset only absorbs negative values, the slope then takes the smallest ratio
    B = max([0.0] + [-mu for _, mu in samples])
    if B > b_cap: raise DomainError(f"samples reach μ = {-B:.6g}, below the B cap -{b_cap:.6g}")
    slopes = [((mu + B) / ell, ell) for ell, mu in samples if ell > 0]
    if not slopes:
        A, binding = None, None
    else:
        A, binding = min(slopes)
        A = max(0.0, A)
        B = max([0.0] + [A * ell - mu for ell, mu in samples])
    slack = min((mu - ((A or 0.0) * ell - B) for ell, mu in samples), default=0.0)
    assert slack >= -1e-9 * max(1.0, B), f"fitted constants A={A}, B={B} are infeasible on their own samples"
    return GapFit(A, B, b_cap, len(samples), slack, binding, kind)


def fit_gaps(traces: Sequence[GapTrace], b_cap: float = DEFAULT_B_CAP) -> GapFit:
    if not traces: raise DomainError("fit_gaps needs at least one trace")
    fit = _fit([s for t in traces for s in t.samples()], b_cap, "gaps")
    logger.info(f"gap fit over {fit.samples} samples: A = {fit.A}, B = {fit.B:.6g}")
    return fit


def _require_pairwise(traces: Sequence[GapTrace]) -> None:
    if not traces: raise DomainError("regularity checks need at least one trace")
    if any(t.pairwise is None for t in traces): raise DomainError("regularity checks need pairwise trace data")


def _regularity_samples(traces: Sequence[GapTrace]) -> List[Tuple[float, float]]:
    return [(float(t.pairwise_mu1d[n, m]), float(t.pairwise[n, m])) for t in traces for n in range(len(t)) for m in range(len(t))]


def fit_regularity(traces: Sequence[GapTrace], b_cap: float = DEFAULT_B_CAP) -> GapFit:
    """largest A with μ₁,₂ ≥ A·μ₁,d - B on every pair, B <= b_cap; A is None when μ₁,d vanishes everywhere"""
    _require_pairwise(traces)
    return _fit([(ell if ell > 1e-12 else 0.0, mu) for ell, mu in _regularity_samples(traces)], b_cap, "regularity")


def uniform_regularity_check(traces: Sequence[GapTrace], A: float, B: float, tol: float = 1e-9) -> dict:
    _require_pairwise(traces)
    worst, where = math.inf, None
    for i, t in enumerate(traces):
        slack = t.pairwise - (A * t.pairwise_mu1d - B)
        n, m = np.unravel_index(int(np.argmin(slack)), slack.shape)
        if slack[n, m] < worst: worst, where = float(slack[n, m]), {"trace": i, "n": int(n), "m": int(m)}
    holds = worst >= -tol * max(1.0, abs(B))
    if not holds: logger.warning(f"uniform regularity fails for A={A}, B={B}: worst slack {worst:.6g} at {where}")
    return {"A": A, "B": B, "tol": tol, "worst_slack": worst, "worst_pair": where, "holds": holds}


@dataclass
class GapScan:
    seed: int
    samples: int
    max_length: int
    traces: List[GapTrace]
    fit: GapFit
    regularity_fit: Optional[GapFit] = None
    regularity: Optional[dict] = None

    def to_dict(self) -> dict:
        return {
            "seed": self.seed,
            "samples": self.samples,
            "max_length": self.max_length,
            "words": [t.word for t in self.traces],
            "final_gaps": [t.gaps[-1] for t in self.traces],
            "fit": self.fit.to_dict(),
            "regularity_fit": self.regularity_fit.to_dict() if self.regularity_fit else None,
            "regularity": self.regularity,
        }

    def rows(self) -> List[list]:
        return [[i, len(t) - 1, t.mu1[-1], t.mu2[-1], t.gaps[-1]] for i, t in enumerate(self.traces)]


def gap_scan(rep: SimplicialRep, seed: int, samples: int = DEFAULT_SAMPLES, max_length: int = DEFAULT_MAX_LENGTH,
             pairwise: bool = False, b_cap: float = DEFAULT_B_CAP) -> GapScan:
    """gap traces of seeded random geodesics of length 1..max_length, fitted together"""
    if samples < 1 or max_length < 1: raise DomainError("gap scans need positive sample count and length")
    RunContext.record_seed("gap_scan", seed)
    rng = np.random.default_rng(seed)
    words = [random_geodesic(rep.system, int(rng.integers(1, max_length + 1)), rng) for _ in range(samples)]
    traces = [gap_trace(rep, w, pairwise=pairwise) for w in words]
    scan = GapScan(seed, samples, max_length, traces, fit_gaps(traces, b_cap))
    if pairwise:
        scan.regularity_fit = fit_regularity(traces, b_cap)
        A = scan.regularity_fit.A if scan.regularity_fit.A is not None else 1.0
        scan.regularity = uniform_regularity_check(traces, A, scan.regularity_fit.B)
    logger.success(f"gap scan of {samples} geodesics (seed {seed}): A = {scan.fit.A}")
    return scan
