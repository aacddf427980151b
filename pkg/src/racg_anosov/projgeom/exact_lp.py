from __future__ import annotations
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple
import numpy as np
import sympy as sp
from scipy.optimize import linprog
from loguru import logger

OPTIMAL, INFEASIBLE, UNBOUNDED = "optimal", "infeasible", "unbounded"
Vector = Tuple[sp.Rational, ...]


@dataclass(frozen=True)
class LPResult:
    status: str
    value: Optional[sp.Rational] = None
    x: Optional[Vector] = None
    basis: Optional[Tuple[int, ...]] = None

    @property
    def optimal(self) -> bool: return self.status == OPTIMAL

    def to_dict(self) -> dict:
        return {"status": self.status, "value": None if self.value is None else str(self.value)}


def as_vector(v) -> Vector:
    return tuple(sp.Rational(x) for x in v)


def _independent_rows(A: List[List[sp.Rational]], b: List[sp.Rational]) -> Optional[Tuple[List[List[sp.Rational]], List[sp.Rational]]]:
    """gaussian elimination on [A|b]; drops redundant rows, None if the system is inconsistent"""
    rows = [list(r) + [bi] for r, bi in zip(A, b)]
    ncols = len(rows[0]) - 1 if rows else 0
    r = 0
    for col in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None: continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        for i in range(r + 1, len(rows)):
            if rows[i][col] != 0:
                f = rows[i][col] / rows[r][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    if any(row[-1] != 0 for row in rows[r:]): return None
    return [row[:-1] for row in rows[:r]], [row[-1] for row in rows[:r]]


class _Tableau:
    """dense exact tableau B⁻¹[A|b] with Bland's rule"""

    def __init__(self, rows: List[List[sp.Rational]], rhs: List[sp.Rational]) -> None:
        self.T = [list(r) + [v] for r, v in zip(rows, rhs)]
        self.m, self.N = len(rows), len(rows[0]) if rows else 0
        self.basis: List[int] = [-1] * self.m

    def pivot(self, row: int, col: int) -> None:
        T = self.T
        p = T[row][col]
        T[row] = [x / p for x in T[row]]
        for i in range(self.m):
            if i != row and T[i][col] != 0:
                f = T[i][col]
                T[i] = [x - f * y for x, y in zip(T[i], T[row])]
        self.basis[row] = col

    def install(self, basis: Sequence[int]) -> bool:
        """pivots the given columns in; False if they are not a basis"""
        free = set(range(self.m))
        for col in basis:
            row = next((i for i in sorted(free) if self.T[i][col] != 0), None)
            if row is None: return False
            self.pivot(row, col)
            free.discard(row)
        return not free

    def feasible(self) -> bool:
        return all(r[-1] >= 0 for r in self.T)

    def reduced_costs(self, c: Sequence[sp.Rational]) -> List[sp.Rational]:
        return [c[j] - sum((c[self.basis[i]] * self.T[i][j] for i in range(self.m)), sp.Integer(0)) for j in range(self.N)]

    def run(self, c: Sequence[sp.Rational], allowed: Optional[set] = None, max_pivots: int = 100_000) -> str:
        """maximize c·x from the current feasible basis"""
        for _ in range(max_pivots):
            in_basis = set(self.basis)
            red = self.reduced_costs(c)
            col = next((j for j in range(self.N) if red[j] > 0 and j not in in_basis and (allowed is None or j in allowed)), None)
            if col is None: return OPTIMAL
            ratios = [(self.T[i][-1] / self.T[i][col], self.basis[i], i) for i in range(self.m) if self.T[i][col] > 0]
            if not ratios: return UNBOUNDED
            self.pivot(min(ratios)[2], col)
        raise RuntimeError(f"simplex did not terminate in {max_pivots} pivots")

    def solution(self) -> List[sp.Rational]:
        x = [sp.Integer(0)] * self.N
        for i, j in enumerate(self.basis): x[j] = self.T[i][-1]
        return x


def _float_basis(rows, rhs, c) -> Optional[List[int]]:
    """basis suggested by a HiGHS solve: support of the float optimum completed to full rank"""
    A = np.array([[float(x) for x in r] for r in rows], dtype=float)
    b = np.array([float(x) for x in rhs], dtype=float)
    res = linprog(-np.array([float(x) for x in c], dtype=float), A_eq=A, b_eq=b, bounds=(0, None), method="highs")
    if res.status != 0: return None
    m, N = A.shape
    order = sorted(range(N), key=lambda j: (-res.x[j], j))
    chosen: List[int] = []
    for j in order:
        if np.linalg.matrix_rank(A[:, chosen + [j]]) == len(chosen) + 1: chosen.append(j)
        if len(chosen) == m: return chosen
    return None


def exact_lp(A: Sequence[Sequence], b: Sequence, c: Sequence, warm_start: bool = True) -> LPResult:
    """
    maximize c·x subject to Ax = b, x >= 0 over the rationals. A float solve proposes a basis
    that is then verified (and if needed improved) exactly; otherwise two-phase simplex
    """
    A = [as_vector(r) for r in A]
    b, c = as_vector(b), as_vector(c)
    N = len(c)
    reduced = _independent_rows(A, list(b))
    if reduced is None: return LPResult(INFEASIBLE)
    rows, rhs = reduced
    if not rows:
        # no constraints left: x = 0 is feasible
        if any(cj > 0 for cj in c): return LPResult(UNBOUNDED)
        return LPResult(OPTIMAL, sp.Integer(0), tuple([sp.Integer(0)] * N), ())

    if warm_start:
        basis = _float_basis(rows, rhs, c)
        if basis is not None:
            tab = _Tableau(rows, rhs)
            if tab.install(basis) and tab.feasible():
                status = tab.run(c)
                if status == UNBOUNDED: return LPResult(UNBOUNDED)
                x = tab.solution()
                return LPResult(OPTIMAL, sum((ci * xi for ci, xi in zip(c, x)), sp.Integer(0)), tuple(x), tuple(tab.basis))
            logger.debug("float basis rejected by exact check, falling back to two-phase simplex")
    return _two_phase(rows, rhs, c)


def _two_phase(rows, rhs, c) -> LPResult:
    m, N = len(rows), len(c)
    signs = [-1 if v < 0 else 1 for v in rhs]
    aug = [[s * x for x in r] + [sp.Integer(1 if k == i else 0) for k in range(m)] for i, (r, s) in enumerate(zip(rows, signs))]
    tab = _Tableau(aug, [s * v for s, v in zip(signs, rhs)])
    tab.basis = list(range(N, N + m))
    phase1 = [sp.Integer(0)] * N + [sp.Integer(-1)] * m
    tab.run(phase1)
    if any(tab.T[i][-1] != 0 for i, j in enumerate(tab.basis) if j >= N): return LPResult(INFEASIBLE)
    for i, j in enumerate(tab.basis):
        if j >= N:
            col = next((k for k in range(N) if tab.T[i][k] != 0), None)
            # rows are independent, so an original column always exists
            if col is not None: tab.pivot(i, col)
    status = tab.run(list(c) + [sp.Integer(0)] * m, allowed=set(range(N)))
    if status == UNBOUNDED: return LPResult(UNBOUNDED)
    x = tab.solution()[:N]
    return LPResult(OPTIMAL, sum((ci * xi for ci, xi in zip(c, x)), sp.Integer(0)), tuple(x), tuple(tab.basis))


def cone_margin(generators: Sequence, q, direction) -> LPResult:
    """
    max t such that q - t·direction lies in the closed cone spanned by the generators;
    the value is the certified margin of q along direction
    """
    gens = [as_vector(g) for g in generators]
    q, direction = as_vector(q), as_vector(direction)
    d = len(q)
    A = [[g[i] for g in gens] + [direction[i], -direction[i]] for i in range(d)]
    c = [sp.Integer(0)] * len(gens) + [sp.Integer(1), sp.Integer(-1)]
    return exact_lp(A, q, c)


def in_cone(generators: Sequence, q) -> bool:
    gens = [as_vector(g) for g in generators]
    q = as_vector(q)
    if not gens: return all(x == 0 for x in q)
    A = [[g[i] for g in gens] for i in range(len(q))]
    return exact_lp(A, q, [sp.Integer(0)] * len(gens)).optimal
