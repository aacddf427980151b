from __future__ import annotations
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple, Union
import numpy as np
import sympy as sp
from loguru import logger

from ..racg import CoxeterSystem, NormalForm
from ..core.errors import DomainError
from .cartan import CartanMatrix, validate_cartan, geometric_cartan

Word = Union[NormalForm, Sequence[int]]
_CACHE_LIMIT = 50_000


def _letters(gamma: Word) -> Tuple[int, ...]:
    return gamma.letters if isinstance(gamma, NormalForm) else tuple(gamma)


@dataclass(frozen=True, eq=False)
class SimplicialRep:
    """
    ρ(s) = id - v_s ⊗ α_s on a d-dimensional space over the rationals, vectors are d×1
    columns and functionals 1×d rows; products are memoized per word prefix
    """
    system: CoxeterSystem
    vectors: Tuple[sp.ImmutableMatrix, ...]
    functionals: Tuple[sp.ImmutableMatrix, ...]
    _cache: Dict[Tuple[int, ...], sp.ImmutableMatrix] = field(default_factory=dict, repr=False)

    @property
    def d(self) -> int: return self.vectors[0].rows if self.vectors else 0

    @property
    def n(self) -> int: return self.system.n

    @property
    def cartan(self) -> CartanMatrix:
        return CartanMatrix(sp.ImmutableMatrix(self.n, self.n, lambda i, j: (self.functionals[i] * self.vectors[j])[0, 0]), self.system)

    def generator(self, i: int) -> sp.ImmutableMatrix:
        key = (i,)
        if key not in self._cache:
            self._cache[key] = sp.ImmutableMatrix(sp.eye(self.d) - self.vectors[i] * self.functionals[i])
        return self._cache[key]

    def evaluate(self, gamma: Word) -> sp.ImmutableMatrix:
        letters = _letters(gamma)
        if not letters: return sp.ImmutableMatrix(sp.eye(self.d))
        if letters in self._cache: return self._cache[letters]
        if len(self._cache) > _CACHE_LIMIT:
            logger.debug(f"representation product cache over {_CACHE_LIMIT} entries, clearing it")
            self._cache.clear()
        k = len(letters) - 1
        while k > 0 and letters[:k] not in self._cache: k -= 1
        M = self._cache[letters[:k]] if k else sp.ImmutableMatrix(sp.eye(self.d))
        for j in range(k, len(letters)):
            M = sp.ImmutableMatrix(M * self.generator(letters[j]))
            self._cache[letters[:j + 1]] = M
        return M

    def evaluate_inverse(self, gamma: Word) -> sp.ImmutableMatrix:
        # each generator is an involution
        return self.evaluate(tuple(reversed(_letters(gamma))))

    def functional_matrix(self) -> sp.ImmutableMatrix:
        return sp.ImmutableMatrix(sp.Matrix.vstack(*self.functionals))

    def vector_matrix(self) -> sp.ImmutableMatrix:
        return sp.ImmutableMatrix(sp.Matrix.hstack(*self.vectors))

    def simplex_vertices(self) -> List[sp.ImmutableMatrix]:
        """vertex k of the fundamental simplex Δ = {α_i <= 0} is where every α_i with i != k vanishes"""
        F = self.functional_matrix()
        if F.rows != F.cols or F.det() == 0: raise DomainError("the fundamental simplex needs n = d independent functionals")
        Finv = -F.inv()
        return [sp.ImmutableMatrix(Finv[:, k]) for k in range(self.n)]

    def interior_point(self) -> sp.ImmutableMatrix:
        """the point where every α_i equals -1"""
        F = self.functional_matrix()
        if F.rows != F.cols or F.det() == 0: raise DomainError("the fundamental simplex needs n = d independent functionals")
        return sp.ImmutableMatrix(F.LUsolve(-sp.ones(self.n, 1)))

    def float_generators(self) -> List[np.ndarray]:
        return [np.array(self.generator(i).evalf(), dtype=float) for i in range(self.n)]

    def check_relations(self) -> None:
        I = sp.eye(self.d)
        for i in range(self.n):
            M = self.generator(i)
            if M * M != I: raise DomainError(f"ρ({self.system.name(i)}) is not an involution")
            for j in range(i + 1, self.n):
                if self.system.commute(i, j) and M * self.generator(j) != self.generator(j) * M:
                    raise DomainError(f"ρ({self.system.name(i)}) and ρ({self.system.name(j)}) do not commute")

    def to_dict(self) -> dict:
        return {
            "generators": list(self.system.generators),
            "dimension": self.d,
            "vectors": [[str(x) for x in v] for v in self.vectors],
            "functionals": [[str(x) for x in a] for a in self.functionals],
            "cartan": self.cartan.to_rows(),
        }


def build_rep(A: CartanMatrix) -> SimplicialRep:
    """α_i = e_i and v_i = i-th column of A"""
    ok, reason = validate_cartan(A)
    if not ok: raise DomainError(f"invalid Cartan matrix: {reason}")
    n = A.n
    vectors = tuple(sp.ImmutableMatrix(A.entries[:, i]) for i in range(n))
    functionals = tuple(sp.ImmutableMatrix(1, n, lambda _, j: 1 if j == i else 0) for i in range(n))
    rep = SimplicialRep(A.system, vectors, functionals)
    rep.check_relations()
    if rep.cartan.entries != A.entries: raise DomainError("α_i(v_j) does not reproduce the Cartan matrix")
    return rep


def geometric_rep(sys: CoxeterSystem) -> SimplicialRep:
    return build_rep(geometric_cartan(sys))


def evaluate(rep: SimplicialRep, gamma: Word) -> sp.ImmutableMatrix:
    return rep.evaluate(gamma)


def dual_rep(rep: SimplicialRep) -> SimplicialRep:
    """
    vectors and functionals swap roles, ρ*(s) = ρ(s)ᵀ so that ρ*(γ) = ρ(γ)^{-T}
    and the Cartan matrix is transposed
    """
    if rep.cartan.det() == 0: raise DomainError("dual representation needs a nonsingular Cartan matrix")
    vectors = tuple(sp.ImmutableMatrix(a.T) for a in rep.functionals)
    functionals = tuple(sp.ImmutableMatrix(v.T) for v in rep.vectors)
    dual = SimplicialRep(rep.system, vectors, functionals)
    dual.check_relations()
    return dual
