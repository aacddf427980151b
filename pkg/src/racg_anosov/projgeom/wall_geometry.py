from __future__ import annotations
from dataclasses import dataclass
from typing import Sequence, Tuple
import sympy as sp

from ..vinberg import SimplicialRep, dual_rep
from ..walls import Wall
from .exact_lp import as_vector

Point = Tuple[sp.Rational, ...]


def projective_point(v) -> Point:
    """exact homogeneous coordinates scaled so the first nonzero entry is ±1, sign kept"""
    v = as_vector(v)
    lead = next((x for x in v if x != 0), None)
    if lead is None: return v
    scale = abs(lead)
    return tuple(x / scale for x in v)


def column(p: Sequence) -> sp.ImmutableMatrix:
    return sp.ImmutableMatrix(len(p), 1, list(p))


@dataclass(frozen=True)
class WallGeometry:
    """α_W <= 0 on the fundamental cone and α_W(v_W) = 2; ρ(r_W) = id - v_W ⊗ α_W"""
    wall: Wall
    functional: sp.ImmutableMatrix
    polar: sp.ImmutableMatrix
    flipped: bool = False

    def reflection_matrix(self) -> sp.ImmutableMatrix:
        return sp.ImmutableMatrix(sp.eye(self.polar.rows) - self.polar * self.functional)

    def evaluate(self, x) -> sp.Rational:
        return (self.functional * column(as_vector(x)))[0, 0]

    def to_dict(self) -> dict:
        return {
            "wall": str(self.wall),
            "functional": [str(x) for x in self.functional],
            "polar": [str(x) for x in self.polar],
            "flipped": self.flipped,
        }


def wall_geometry(rep: SimplicialRep, W: Wall) -> WallGeometry:
    """α_W = α_s ρ(u)⁻¹ and v_W = ρ(u)v_s for W = u·W(s), both negated if α_W is positive on Δ"""
    u, s = W.prefix, W.type
    alpha = sp.ImmutableMatrix(rep.functionals[s] * rep.evaluate_inverse(u))
    polar = sp.ImmutableMatrix(rep.evaluate(u) * rep.vectors[s])
    flipped = (alpha * rep.interior_point())[0, 0] > 0
    if flipped: alpha, polar = -alpha, -polar
    geom = WallGeometry(W, alpha, polar, flipped)
    assert geom.reflection_matrix() == rep.evaluate(W.reflection), f"reflection of {W} does not match id - v_W ⊗ α_W"
    return geom


def halfspace_side(geom: WallGeometry, x) -> int:
    """exact sign of α_W(x): +1 on the polar's side"""
    value = geom.evaluate(x)
    return 1 if value > 0 else (-1 if value < 0 else 0)


def dual_wall(rep: SimplicialRep, W: Wall) -> WallGeometry:
    """the same wall in the dual representation, functional and polar swap roles"""
    return wall_geometry(dual_rep(rep), W)
