from __future__ import annotations
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple
import numpy as np
import networkx as nx

from .wall import Wall, make_wall
from ..racg import CoxeterSystem, NormalForm, normalize
from ..core.errors import LimitExceeded

DEFAULT_EXTENSION_LIMIT = 10000


@dataclass(frozen=True, eq=False)
class WallPoset:
    """
    the walls crossed along a geodesic word, indexed by position, with the dependence order:
    less[i, j] iff a chain i = k0 < ... < km = j of positions exists with consecutive letters not commuting
    """
    walls: Tuple[Wall, ...]
    letters: Tuple[int, ...]
    less: np.ndarray

    @property
    def size(self) -> int: return len(self.walls)

    def comparable(self, i: int, j: int) -> bool:
        return bool(self.less[i, j] or self.less[j, i])

    def incomparable(self, i: int, j: int) -> bool:
        return i != j and not self.comparable(i, j)

    def index_of(self, wall: Wall) -> int:
        return self.walls.index(wall)

    def minimal(self, indices: Optional[Iterable[int]] = None) -> List[int]:
        """positions with no predecessor inside indices (all positions by default)"""
        idx = sorted(range(self.size) if indices is None else indices)
        return [j for j in idx if not any(self.less[i, j] for i in idx)]

    def crossings(self, i: int, indices: Optional[Iterable[int]] = None) -> List[int]:
        idx = range(self.size) if indices is None else indices
        return sorted(j for j in idx if self.incomparable(i, j))

    def incomparability_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.size))
        g.add_edges_from((i, j) for i in range(self.size) for j in range(i + 1, self.size) if self.incomparable(i, j))
        return g

    def to_dict(self) -> dict:
        return {
            "walls": [w.to_dict() for w in self.walls],
            "less": [[int(j) for j in np.flatnonzero(self.less[i])] for i in range(self.size)],
        }


def poset_of_word(sys: CoxeterSystem, letters: Tuple[int, ...], departure: Tuple[int, ...] = ()) -> WallPoset:
    """walls crossed by the reduced word letters read from the chamber departure"""
    m = len(letters)
    walls = tuple(make_wall(sys, normalize(sys, departure + letters[:k]), letters[k]) for k in range(m))
    less = np.zeros((m, m), dtype=bool)
    for j in range(m):
        for i in range(j):
            if letters[i] == letters[j] or not sys.commute(letters[i], letters[j]):
                less[i, j] = True
                less[:, j] |= less[:, i]
    return WallPoset(walls, tuple(letters), less)


def walls_of(sys: CoxeterSystem, gamma: NormalForm) -> Tuple[List[Wall], WallPoset]:
    """the |γ| walls s1…s(k-1)·W(sk) separating the identity from γ, with their dependence order"""
    poset = poset_of_word(sys, gamma.letters)
    assert len(set(poset.walls)) == poset.size, f"walls of {gamma} are not distinct, is it a normal form?"
    return list(poset.walls), poset


def linear_extensions(p: WallPoset, limit: int = DEFAULT_EXTENSION_LIMIT) -> List[Tuple[int, ...]]:
    """
    every geodesic word with the same wall poset, one per compatible total order,
    listed in lexicographic order of letters
    """
    m = p.size
    predecessors = [frozenset(int(i) for i in np.flatnonzero(p.less[:, j])) for j in range(m)]
    found = []
    placed, used = [], set()

    def extend():
        if len(placed) == m:
            found.append(tuple(p.letters[i] for i in placed))
            if len(found) > limit: raise LimitExceeded(f"more than {limit} linear extensions")
            return
        available = sorted((i for i in range(m) if i not in used and predecessors[i] <= used), key=lambda i: (p.letters[i], i))
        for i in available:
            placed.append(i)
            used.add(i)
            extend()
            placed.pop()
            used.discard(i)

    extend()
    return found
