from __future__ import annotations
from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from loguru import logger

from ..racg import NormalForm, enumerate_ball
from ..walls import Wall, make_wall
from ..vinberg import SimplicialRep
from ..core.errors import LimitExceeded
from .wall_geometry import Point, projective_point

DEFAULT_DEPTH_CAP = 8


@dataclass
class DomainApprox:
    """finite piece of the tiling: the chambers of the depth ball and their simplex vertices"""
    depth: int
    chambers: List[NormalForm]
    vertices: List[Point]
    faces: Dict[Wall, List[Point]] = field(default_factory=dict)
    tiles: Dict[Tuple[int, ...], List[Point]] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "depth": self.depth,
            "chambers": len(self.chambers),
            "vertices": [[str(x) for x in v] for v in self.vertices],
            "walls": len(self.faces),
        }


def _add(points: List[Point], seen: set, p: Point) -> None:
    if p not in seen:
        seen.add(p)
        points.append(p)


def tile_domain(rep: SimplicialRep, depth: int, cap: int = DEFAULT_DEPTH_CAP) -> DomainApprox:
    """orbit of the fundamental simplex vertices over the ball of radius depth"""
    if depth > cap: raise LimitExceeded(f"tiling depth {depth} exceeds the cap {cap}")
    sys = rep.system
    chambers = list(enumerate_ball(sys, depth, cap=cap))
    corners = rep.simplex_vertices()
    vertices, seen = [], set()
    faces: Dict[Wall, List[Point]] = {}
    face_seen: Dict[Wall, set] = {}
    tiles: Dict[Tuple[int, ...], List[Point]] = {}
    for g in chambers:
        M = rep.evaluate(g)
        tile = [projective_point(M * c) for c in corners]
        tiles[g.letters] = tile
        for p in tile: _add(vertices, seen, p)
        for s in range(sys.n):
            wall = make_wall(sys, g, s)
            bucket = faces.setdefault(wall, [])
            marks = face_seen.setdefault(wall, set())
            for k, p in enumerate(tile):
                # vertex k lies on every wall of the chamber except the k-th
                if k != s: _add(bucket, marks, p)
    logger.debug(f"tiled depth {depth}: {len(chambers)} chambers, {len(vertices)} vertices, {len(faces)} walls")
    return DomainApprox(depth, chambers, vertices, faces, tiles)
