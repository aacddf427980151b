from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, Tuple
import sympy as sp

from ..racg import induced_subsystem
from ..core.errors import DomainError
from .representation import SimplicialRep, Word, _letters


@dataclass(frozen=True, eq=False)
class RestrictedRep:
    """
    V = V_T ⊕ V_T^⊥ for a standard subgroup C(T): V_T spanned by the v_t, V_T^⊥ the common
    kernel of the α_t. C(T) acts on V_T by `inner` (in the basis v_t) and trivially on V_T^⊥
    """
    rep: SimplicialRep
    subset: Tuple[int, ...]
    basis_vt: sp.ImmutableMatrix
    basis_perp: sp.ImmutableMatrix
    inner: SimplicialRep
    members: Tuple[int, ...]

    @property
    def k(self) -> int: return len(self.subset)

    @property
    def change(self) -> sp.ImmutableMatrix:
        return sp.ImmutableMatrix(self.basis_vt.row_join(self.basis_perp))

    def local_letters(self, gamma: Word) -> Tuple[int, ...]:
        letters = _letters(gamma)
        position = {g: i for i, g in enumerate(self.members)}
        if any(x not in position for x in letters): raise DomainError(f"word is not in the standard subgroup of {self.rep.system.names(self.subset)}")
        return tuple(position[x] for x in letters)

    def block(self, gamma: Word) -> sp.ImmutableMatrix:
        """P⁻¹ ρ(γ) P in the adapted basis P = [v_T | V_T^⊥]"""
        self.local_letters(gamma)
        P = self.change
        return sp.ImmutableMatrix(P.inv() * self.rep.evaluate(gamma) * P)

    def check_block(self, gamma: Word) -> sp.ImmutableMatrix:
        """block diag(ρ_T(γ), id) exactly, raising DomainError otherwise"""
        B, k, d = self.block(gamma), self.k, self.rep.d
        if any(B[i, j] != 0 for i in range(k) for j in range(k, d)) or any(B[i, j] != 0 for i in range(k, d) for j in range(k)):
            raise DomainError("off-diagonal blocks of the restricted action are not zero")
        if B[k:, k:] != sp.eye(d - k): raise DomainError("C(T) does not act trivially on V_T^⊥")
        if B[:k, :k] != self.inner.evaluate(self.local_letters(gamma)): raise DomainError("V_T block differs from ρ_T")
        return B

    def to_dict(self) -> dict:
        return {
            "subset": self.rep.system.names(self.subset),
            "dim_vt": self.basis_vt.cols,
            "dim_perp": self.basis_perp.cols,
            "cartan": self.inner.cartan.to_rows(),
        }


def restrict(rep: SimplicialRep, subset: Iterable[int]) -> RestrictedRep:
    T = tuple(sorted(set(subset)))
    d = rep.d
    sub, members = induced_subsystem(rep.system, T)
    A_T = rep.cartan.principal(T)
    if T and A_T.det() == 0: raise DomainError(f"principal minor of {rep.system.names(T)} vanishes, V_T and V_T^⊥ are not transverse")
    basis_vt = sp.ImmutableMatrix(sp.Matrix.hstack(*(rep.vectors[t] for t in T))) if T else sp.ImmutableMatrix(sp.zeros(d, 0))
    if T:
        kernel = sp.Matrix.vstack(*(rep.functionals[t] for t in T)).nullspace()
        basis_perp = sp.ImmutableMatrix(sp.Matrix.hstack(*kernel)) if kernel else sp.ImmutableMatrix(sp.zeros(d, 0))
    else:
        basis_perp = sp.ImmutableMatrix(sp.eye(d))
    if basis_vt.cols + basis_perp.cols != d: raise DomainError("restriction bases do not span the whole space")
    # ρ(s)v_t = v_t - A_st v_s: in the basis v_T, v_s becomes e_s and α_s the row s of A_T
    k = len(T)
    vectors = tuple(sp.ImmutableMatrix(k, 1, lambda i, _: 1 if i == s else 0) for s in range(k))
    functionals = tuple(sp.ImmutableMatrix(A_T[s, :]) for s in range(k))
    inner = SimplicialRep(sub, vectors, functionals)
    if k: inner.check_relations()
    return RestrictedRep(rep, T, basis_vt, basis_perp, inner, members)
