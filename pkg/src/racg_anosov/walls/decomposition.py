from __future__ import annotations
from collections import Counter
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Sequence, Tuple, Union
import networkx as nx
from loguru import logger

from .wall import Wall, walls_cross
from .poset import WallPoset, walls_of
from .itinerary import Itinerary, gamma_of
from ..racg import CoxeterSystem, NormalForm, identity, normalize
from ..core.errors import CertificationFailure, DomainError, LimitExceeded

OVER_CAP = "OVER_CAP"
DEFAULT_BPP_CAP = 16
DEFAULT_COMPONENT_LIMIT = 64


def low_crossing_bound(D: int) -> int:
    """(2D+1)·4^D"""
    return (2 * D + 1) * 4 ** D


def decomposition_bound(D: int) -> int:
    """R = R'D + D with R' the low crossing bound"""
    return low_crossing_bound(D) * D + D


def _balanced_biclique(g: nx.Graph, nodes: List[int], best: int, cap: int) -> int:
    """largest k with disjoint A, B of size >= k, every a in A adjacent to every b in B"""
    neighbours = {v: frozenset(g.neighbors(v)) for v in nodes}

    def grow(chosen: int, start: int, common: FrozenSet[int]) -> None:
        nonlocal best
        if best > cap: return
        value = min(chosen, len(common))
        if value > best: best = value
        for k in range(start, len(nodes)):
            # A only grows along nodes, B only shrinks
            if len(common) <= best or chosen + len(nodes) - k <= best: return
            v = nodes[k]
            grow(chosen + 1, k + 1, (common & neighbours[v]) if chosen else neighbours[v])

    grow(0, 0, frozenset(nodes))
    return best


def bpp_constant(sys: CoxeterSystem, gamma: NormalForm, cap: int = DEFAULT_BPP_CAP, component_limit: int = DEFAULT_COMPONENT_LIMIT) -> Union[int, str]:
    """
    smallest D such that γ has D-bounded product projections: the largest min(|A|, |B|) over
    disjoint, completely incomparable wall sets A and B; OVER_CAP once the value exceeds cap
    """
    _, poset = walls_of(sys, gamma)
    graph = poset.incomparability_graph()
    best = 0
    for component in sorted(nx.connected_components(graph), key=min):
        if len(component) < 2: continue
        if len(component) > component_limit: raise LimitExceeded(f"incomparability component of {len(component)} walls exceeds {component_limit}")
        best = _balanced_biclique(graph, sorted(component), best, cap)
        if best > cap: return OVER_CAP
    return best


def _intersection_type(poset: WallPoset, i: int, minimal: Sequence[int]) -> FrozenSet[int]:
    return frozenset(v for v in minimal if v == i or poset.incomparable(i, v))


def _low_crossing_index(poset: WallPoset, remaining: Sequence[int], D: int) -> int:
    """
    a minimal wall of remaining crossing at most (2D+1)·4^D of them:
    discard every intersection type U shared by more than 2D+1 walls, any minimal wall outside all of them works
    """
    bound = low_crossing_bound(D)
    minimal = poset.minimal(remaining)
    types = Counter(_intersection_type(poset, i, minimal) for i in remaining)
    crowded = [U for U, count in types.items() if count > 2 * D + 1]
    candidates = [v for v in minimal if not any(v in U for U in crowded)]
    for v in candidates:
        if len(poset.crossings(v, remaining)) <= bound: return v
    logger.warning(f"no uncrowded minimal wall meets the bound {bound}, scanning all {len(minimal)} minimal walls")
    for v in minimal:
        if len(poset.crossings(v, remaining)) <= bound: return v
    raise CertificationFailure(f"no minimal wall crosses at most {bound} walls with {D=}, the input does not have {D}-bounded product projections")


def minimal_wall_low_crossings(sys: CoxeterSystem, gamma: NormalForm, D: int) -> Wall:
    """minimal wall of W(γ) crossing at most (2D+1)·4^D walls of W(γ)"""
    walls, poset = walls_of(sys, gamma)
    if not walls: raise DomainError("the identity has no walls")
    return walls[_low_crossing_index(poset, range(poset.size), D)]


@dataclass(frozen=True)
class Window:
    """γ_U(W_i, W_j) = head · core · tail with core = γ(W_i, W_j)"""
    head: NormalForm
    core: NormalForm
    tail: NormalForm


@dataclass(frozen=True)
class DisjointDecomposition:
    """
    reordering W1, V1, W2, V2, ... of the walls of γ where the chain walls are pairwise disjoint
    and each spacer Vi only holds walls crossing Wi
    """
    gamma: NormalForm
    chain: Tuple[Wall, ...]
    spacers: Tuple[Itinerary, ...]
    bound: int
    chain_positions: Tuple[int, ...] = field(repr=False)
    spacer_positions: Tuple[Tuple[int, ...], ...] = field(repr=False)
    poset: WallPoset = field(repr=False, compare=False)

    def order(self) -> List[int]:
        return [p for c, vs in zip(self.chain_positions, self.spacer_positions) for p in (c, *vs)]

    def itinerary(self) -> Itinerary:
        return Itinerary(tuple(self.poset.walls[p] for p in self.order()), identity(self.gamma.system))

    def window(self, i: int, j: int) -> Window:
        """
        factorization of the sub-itinerary from chain wall i to chain wall j: walls crossing W_i first,
        then W_i, the walls between, W_j, and finally the walls crossing W_j
        """
        if not 0 <= i < j < len(self.chain): raise DomainError(f"window needs chain indices 0 <= i < j < {len(self.chain)}, got {i}, {j}")
        sys = self.gamma.system
        order = self.order()
        start, stop = order.index(self.chain_positions[i]), order.index(self.chain_positions[j])
        inner = order[start + 1:stop]
        pi, pj = self.chain_positions[i], self.chain_positions[j]
        head = [q for q in inner if self.poset.incomparable(pi, q)]
        tail = [q for q in inner if q not in head and self.poset.incomparable(pj, q)]
        between = [q for q in inner if q not in head and q not in tail]

        departure = normalize(sys, [self.poset.letters[p] for p in sorted(order[:start])])
        reordered = head + [pi] + between + [pj] + tail
        letters = Itinerary(tuple(self.poset.walls[p] for p in reordered), departure).letters()
        cut1, cut2 = len(head), len(head) + len(between) + 2
        window = Window(normalize(sys, letters[:cut1]), normalize(sys, letters[cut1:cut2]), normalize(sys, letters[cut2:]))

        expected = gamma_of(sys, self.chain[i], self.chain[j])
        if window.core != expected: raise CertificationFailure(f"window core {window.core} differs from γ(W_i, W_j) = {expected}")
        if max(window.head.length, window.tail.length) > self.bound:
            raise CertificationFailure(f"window ({i}, {j}) has an outer factor longer than R = {self.bound}")
        return window

    def to_dict(self) -> dict:
        return {
            "gamma": str(self.gamma),
            "R": self.bound,
            "chain": [w.to_dict() for w in self.chain],
            "spacers": [s.to_dict() for s in self.spacers],
        }


def _check_decomposition(sys: CoxeterSystem, d: DisjointDecomposition) -> None:
    poset, R = d.poset, d.bound
    for k, (c, spacer) in enumerate(zip(d.chain_positions, d.spacer_positions)):
        if len(spacer) > R: raise CertificationFailure(f"spacer {k} has {len(spacer)} walls, more than R = {R}")
        if any(not poset.incomparable(c, q) for q in spacer): raise CertificationFailure(f"spacer {k} holds a wall not crossing chain wall {k}")
        if len(poset.crossings(c)) > R: raise CertificationFailure(f"chain wall {k} crosses {len(poset.crossings(c))} walls, more than R = {R}")
    for a in range(len(d.chain)):
        for b in range(a + 1, len(d.chain)):
            if walls_cross(sys, d.chain[a], d.chain[b]): raise CertificationFailure(f"chain walls {a} and {b} cross")
    assert d.itinerary().traversed() == d.gamma, "decomposition does not traverse γ"


def disjoint_decomposition(sys: CoxeterSystem, gamma: NormalForm, D: int, bpp_cap: int = DEFAULT_BPP_CAP) -> DisjointDecomposition:
    """
    peel loop: take a minimal low-crossing wall of what is left as the next chain wall,
    the remaining walls crossing it form its spacer
    """
    if D < 0: raise DomainError(f"D must be non-negative, got {D}")
    measured = bpp_constant(sys, gamma, cap=max(D, bpp_cap))
    if measured == OVER_CAP or measured > D: raise DomainError(f"{gamma} has product projection constant {measured}, more than {D=}")

    walls, poset = walls_of(sys, gamma)
    remaining = list(range(poset.size))
    chain_positions, spacer_positions = [], []
    while remaining:
        c = _low_crossing_index(poset, remaining, D)
        spacer = tuple(poset.crossings(c, remaining))
        chain_positions.append(c)
        spacer_positions.append(spacer)
        remaining = [q for q in remaining if q != c and q not in spacer]
        logger.debug(f"chain wall {walls[c]} with a spacer of {len(spacer)} walls, {len(remaining)} left")

    order = []
    spacers = []
    for c, spacer in zip(chain_positions, spacer_positions):
        order.append(c)
        departure = normalize(sys, [poset.letters[p] for p in order])
        spacers.append(Itinerary(tuple(walls[q] for q in spacer), departure))
        order.extend(spacer)

    decomposition = DisjointDecomposition(
        gamma, tuple(walls[c] for c in chain_positions), tuple(spacers), decomposition_bound(D),
        tuple(chain_positions), tuple(spacer_positions), poset)
    _check_decomposition(sys, decomposition)
    return decomposition
