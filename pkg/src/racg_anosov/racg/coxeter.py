from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Tuple
import networkx as nx

from ..core.errors import DomainError


@dataclass(frozen=True)
class CoxeterSystem:
    """
    Right-angled Coxeter system given by its nerve.
    Generators are indexed by their declaration order, names only matter at I/O boundaries;
    edges are unordered index pairs of commuting generators.
    """
    generators: Tuple[str, ...]
    edges: FrozenSet[FrozenSet[int]] = frozenset()

    def __post_init__(self):
        assert len(set(self.generators)) == len(self.generators), f"generator names must be unique: {self.generators}"
        for e in self.edges:
            assert len(e) == 2 and all(0 <= i < self.n for i in e), f"invalid edge {sorted(e)}"

    @property
    def n(self) -> int: return len(self.generators)

    @cached_property
    def _links(self) -> Tuple[FrozenSet[int], ...]:
        links = [set() for _ in range(self.n)]
        for e in self.edges:
            i, j = tuple(e)
            links[i].add(j)
            links[j].add(i)
        return tuple(frozenset(l) for l in links)

    def commute(self, i: int, j: int) -> bool:
        """true iff s_i and s_j are distinct commuting generators"""
        return j in self._links[i]

    def link(self, i: int) -> FrozenSet[int]:
        return self._links[i]

    def star(self, i: int) -> FrozenSet[int]:
        return self._links[i] | {i}

    def index(self, name: str) -> int:
        try: return self.generators.index(name)
        except ValueError: raise DomainError(f"unknown generator '{name}', expected one of {list(self.generators)}")

    def name(self, i: int) -> str:
        return self.generators[i]

    def subset(self, names: Iterable[str]) -> FrozenSet[int]:
        return frozenset(self.index(n) for n in names)

    def names(self, subset: Iterable[int]) -> List[str]:
        return [self.generators[i] for i in sorted(subset)]

    @cached_property
    def graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(tuple(e) for e in self.edges)
        return g

    def to_dict(self) -> dict:
        edges = sorted(sorted(e) for e in self.edges)
        return {"generators": list(self.generators), "edges": [[self.generators[i], self.generators[j]] for i, j in edges]}


def parse_nerve(doc: dict) -> CoxeterSystem:
    """
    builds a system from a nerve document {"generators": [...], "edges": [[s, t], ...]},
    generator order is kept as declared
    """
    if not isinstance(doc, dict) or not isinstance(doc.get("generators"), list):
        raise DomainError("nerve document must be a mapping with a 'generators' list")
    generators = [str(g) for g in doc["generators"]]
    seen = set()
    for g in generators:
        if g in seen: raise DomainError(f"duplicate generator '{g}' in nerve")
        if not g or any(c.isspace() or c == "," for c in g): raise DomainError(f"invalid generator name '{g}'")
        seen.add(g)

    edges = set()
    for edge in doc.get("edges") or []:
        if not isinstance(edge, (list, tuple)) or len(edge) != 2:
            raise DomainError(f"edge {edge} must be a pair of generator names")
        s, t = str(edge[0]), str(edge[1])
        for g in (s, t):
            if g not in seen: raise DomainError(f"unknown generator '{g}' in edge {[s, t]}")
        if s == t: raise DomainError(f"self-loop on '{s}' is not allowed")
        edges.add(frozenset((generators.index(s), generators.index(t))))
    return CoxeterSystem(tuple(generators), frozenset(edges))


def is_irreducible(sys: CoxeterSystem) -> bool:
    """true iff the complement of the nerve is connected"""
    if sys.n <= 1: return True
    return nx.is_connected(nx.complement(sys.graph))


def is_finite(sys: CoxeterSystem) -> bool:
    # a RACG is finite iff every pair of generators commutes
    return all(sys.commute(i, j) for i in range(sys.n) for j in range(i + 1, sys.n))


def induced_subsystem(sys: CoxeterSystem, subset: Iterable[int]) -> Tuple[CoxeterSystem, Tuple[int, ...]]:
    """
    the standard subgroup C(T) as a system of its own, plus the map from its indices to the ambient ones
    """
    members = tuple(sorted(set(subset)))
    for i in members:
        if not 0 <= i < sys.n: raise DomainError(f"generator index {i} out of range")
    position = {g: k for k, g in enumerate(members)}
    edges = frozenset(frozenset((position[i], position[j])) for e in sys.edges for i, j in [tuple(e)] if i in position and j in position)
    return CoxeterSystem(tuple(sys.generators[i] for i in members), edges), members
