from __future__ import annotations
from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple
import sympy as sp
from loguru import logger

from ..racg import CoxeterSystem, enumerate_ball, induced_subsystem
from ..walls import Wall, walls_cross, separates
from ..vinberg import SimplicialRep, dual_rep
from ..core.context import RunContext
from ..core.errors import DomainError
from ..utils.misc import parallel_map
from .exact_lp import cone_margin, in_cone, as_vector, UNBOUNDED
from .wall_geometry import Point, WallGeometry, wall_geometry, halfspace_side, projective_point, column
from .domain import DomainApprox, tile_domain

CROSSING = "CROSSING"
NESTED = "NESTED"
STRONGLY_NESTED_AT_DEPTH = "STRONGLY_NESTED_AT_DEPTH"
MARGIN_DECAY = "MARGIN_DECAY"
INCONCLUSIVE = "INCONCLUSIVE"

DEFAULT_STRONG_TOL = 1e-6
DEFAULT_DECAY_TOL = 1e-3


@dataclass
class HalfConeApprox:
    """sign·v_W together with the wall-face vertices of the tiles u·c, c in the depth ball of C(lk s)"""
    wall: Wall
    sign: int
    depth: int
    geometry: WallGeometry
    generators: List[Point]

    def to_dict(self) -> dict:
        return {
            "wall": str(self.wall),
            "sign": "+" if self.sign > 0 else "-",
            "depth": self.depth,
            "generators": [[str(x) for x in g] for g in self.generators],
        }


def halfcone_approx(rep: SimplicialRep, W: Wall, sign: int, depth: int) -> HalfConeApprox:
    if sign not in (1, -1): raise DomainError(f"half-cone sign must be +1 or -1, got {sign}")
    sys, s = rep.system, W.type
    geom = wall_geometry(rep, W)
    link, members = induced_subsystem(sys, sys.link(s))
    corners = rep.simplex_vertices()
    generators, seen = [], set()

    def add(p):
        if p not in seen:
            seen.add(p)
            generators.append(p)

    add(projective_point(geom.polar * sign))
    base = rep.evaluate(W.prefix)
    for c in enumerate_ball(link, depth):
        M = base * rep.evaluate(tuple(members[x] for x in c.letters))
        for k, corner in enumerate(corners):
            if k != s: add(projective_point(M * corner))
    return HalfConeApprox(W, sign, depth, geom, generators)


def halfcone_containment_check(rep: SimplicialRep, W: Wall, depth: int, domain: Optional[DomainApprox] = None) -> dict:
    """every tile vertex strictly on the + side of W must lie in the hull of the Hc₊(W) generators"""
    domain = domain or tile_domain(rep, depth)
    hc = halfcone_approx(rep, W, 1, depth)
    plus = [v for v in domain.vertices if halfspace_side(hc.geometry, v) > 0]
    inside = parallel_map(lambda v: in_cone(hc.generators, v), plus, RunContext.get_threads())
    failures = [v for v, ok in zip(plus, inside) if not ok]
    if failures: logger.warning(f"{len(failures)} vertices on the + side of {W} are outside the depth {depth} half-cone")
    return {
        "wall": str(W),
        "depth": depth,
        "checked": len(plus),
        "contained": len(plus) - len(failures),
        "failures": [[str(x) for x in v] for v in failures[:20]],
    }


def halfspaces_nest(sys: CoxeterSystem, W1: Wall, W2: Wall) -> bool:
    """Hs₊(W2) ⊂ Hs₊(W1): the walls are disjoint and W1 separates the identity from W2"""
    if W1 == W2 or walls_cross(sys, W1, W2): return False
    return separates(sys, W1, W2.prefix)


def _chart(rep: SimplicialRep, W: Wall) -> Tuple[sp.ImmutableMatrix, Point]:
    """functional equal to 1 on the depth-0 generators of Hc₊(W), and their sum as the center direction"""
    base = halfcone_approx(rep, W, 1, 0).generators
    G = sp.Matrix.hstack(*(column(g) for g in base))
    if G.rows != G.cols or G.det() == 0: raise DomainError(f"depth-0 half-cone of {W} is not a simplicial cone")
    phi = sp.ImmutableMatrix(sp.ones(1, G.cols) * G.inv())
    center = tuple(sum((g[i] for g in base), sp.Integer(0)) for i in range(G.rows))
    return phi, center


def point_margins(rep: SimplicialRep, W: Wall, depth: int, points: Sequence) -> List[Optional[sp.Rational]]:
    """
    exact margin of each point inside the depth-N hull of Hc₊(W), in the chart of the depth-0 cone;
    None for points the chart sends to infinity
    """
    outer = halfcone_approx(rep, W, 1, depth).generators
    phi, center = _chart(rep, W)

    def margin(p):
        p = as_vector(p)
        height = (phi * column(p))[0, 0]
        if height <= 0: return None
        res = cone_margin(outer, [x / height for x in p], center)
        if res.status == UNBOUNDED: return sp.oo
        return res.value

    return parallel_map(margin, list(points), RunContext.get_threads())


@dataclass
class DepthRecord:
    depth: int
    min_margin: Optional[sp.Rational]
    certified: int
    total: int
    at_infinity: int = 0

    @property
    def full(self) -> bool: return self.total > 0 and self.at_infinity == 0 and self.certified == self.total

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "min_margin": None if self.min_margin is None else float(self.min_margin),
            "min_margin_exact": None if self.min_margin is None else str(self.min_margin),
            "certified": self.certified,
            "total": self.total,
            "at_infinity": self.at_infinity,
        }


@dataclass
class NestingProbeReport:
    relation: str
    outer: Wall
    inner: Wall
    records: List[DepthRecord] = field(default_factory=list)
    claim_depth: Optional[int] = None
    witnesses: bool = False

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "claim_depth": self.claim_depth,
            "outer": self.outer.to_dict(),
            "inner": self.inner.to_dict(),
            "witnesses": self.witnesses,
            "margins": [r.to_dict() for r in self.records],
        }

    def rows(self) -> List[list]:
        return [[r.depth, None if r.min_margin is None else float(r.min_margin)] for r in self.records]


def classify(records: List[DepthRecord], strong_tol: float = DEFAULT_STRONG_TOL, decay_tol: float = DEFAULT_DECAY_TOL) -> Tuple[str, Optional[int]]:
    if not records or not any(r.full for r in records): return INCONCLUSIVE, None
    floor_from = None
    for r in reversed(records):
        if not (r.full and r.min_margin > strong_tol): break
        floor_from = r.depth
    if floor_from is not None: return STRONGLY_NESTED_AT_DEPTH, floor_from
    last = records[-1]
    if not last.full: return INCONCLUSIVE, None
    full = [r.min_margin for r in records if r.full]
    if all(b <= a for a, b in zip(full, full[1:])) and last.min_margin < decay_tol: return MARGIN_DECAY, last.depth
    return NESTED, last.depth


def nesting_probe(rep: SimplicialRep, W1: Wall, W2: Wall, max_depth: int, witnesses: Optional[Sequence] = None,
                  strong_tol: float = DEFAULT_STRONG_TOL, decay_tol: float = DEFAULT_DECAY_TOL) -> NestingProbeReport:
    """
    margins of the Hc₊(W2) generators (or of the given witness points) inside the depth-N
    hull of Hc₊(W1), for N = 0..max_depth, classified into a depth-qualified relation
    """
    sys = rep.system
    if W1 == W2: raise DomainError(f"nesting probe needs two distinct walls, got {W1} twice")
    if walls_cross(sys, W1, W2): return NestingProbeReport(CROSSING, W1, W2)
    if not halfspaces_nest(sys, W1, W2): raise DomainError(f"{W1} does not separate the identity chamber from {W2}")
    records = []
    for depth in range(max_depth + 1):
        points = witnesses if witnesses is not None else halfcone_approx(rep, W2, 1, depth).generators
        margins = point_margins(rep, W1, depth, points)
        finite = [m for m in margins if m is not None]
        at_infinity = len(margins) - len(finite)
        if at_infinity: logger.warning(f"{at_infinity} point(s) of {W2} fall at infinity in the chart of {W1} at depth {depth}")
        record = DepthRecord(depth, min(finite) if finite else None, sum(1 for m in finite if m >= 0), len(margins), at_infinity)
        logger.debug(f"nesting probe {W1} ⊃ {W2} depth {depth}: min margin {record.min_margin}, {record.certified}/{record.total} certified")
        records.append(record)
    relation, claim_depth = classify(records, strong_tol, decay_tol)
    return NestingProbeReport(relation, W1, W2, records, claim_depth, witnesses is not None)


def halfcone_duality_check(rep: SimplicialRep, W: Wall, depth: int) -> dict:
    """pairs every Hc₋(W*) generator functional with every Hc₊(W) generator point, all pairings should be <= 0"""
    dual = dual_rep(rep)
    functionals = halfcone_approx(dual, W, -1, depth).generators
    points = halfcone_approx(rep, W, 1, depth).generators
    pairings = [sum((f * x for f, x in zip(fn, p)), sp.Integer(0)) for fn in functionals for p in points]
    violations = sum(1 for v in pairings if v > 0)
    return {
        "wall": str(W),
        "depth": depth,
        "pairings": len(pairings),
        "violations": violations,
        "max_pairing": float(max(pairings)) if pairings else None,
        "nonpositive": violations == 0,
    }


def shared_face_vertices(rep: SimplicialRep, W1: Wall, W2: Wall, depth: int, domain: Optional[DomainApprox] = None) -> List[Point]:
    """tile vertices lying on both walls at the given depth"""
    domain = domain or tile_domain(rep, depth)
    second = set(domain.faces.get(W2, []))
    return [p for p in domain.faces.get(W1, []) if p in second]
