import os
import yaml

from .coxeter import CoxeterSystem, parse_nerve
from ..core.errors import DomainError

BUILTIN_NERVES = {
    # two squares b-a-d and b-c-d glued into a 4-cycle plus an isolated vertex e
    "fig-a1": {
        "generators": ["a", "b", "c", "d", "e"],
        "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "a"]],
    },
    # complete bipartite {t1,t2,t3} x {d1,d2} plus e joined to t1 and t3
    "fig-a2": {
        "generators": ["t1", "t2", "t3", "d1", "d2", "e"],
        "edges": [["t1", "d1"], ["t1", "d2"], ["t2", "d1"], ["t2", "d2"], ["t3", "d1"], ["t3", "d2"], ["e", "t1"], ["e", "t3"]],
    },
    "pentagon": {
        "generators": ["a", "b", "c", "d", "e"],
        "edges": [["a", "b"], ["b", "c"], ["c", "d"], ["d", "e"], ["e", "a"]],
    },
    "dihedral": {"generators": ["s", "t"], "edges": []},
    "free3": {"generators": ["a", "b", "c"], "edges": []},
}


def builtin_system(name: str) -> CoxeterSystem:
    if name not in BUILTIN_NERVES:
        raise DomainError(f"unknown built-in nerve '{name}', available: {sorted(BUILTIN_NERVES)}")
    return parse_nerve(BUILTIN_NERVES[name])


def load_system(name_or_path: str) -> CoxeterSystem:
    """
    resolves a built-in nerve by name, otherwise reads a nerve file (JSON or YAML)
    """
    if name_or_path in BUILTIN_NERVES: return builtin_system(name_or_path)
    if not os.path.isfile(name_or_path):
        raise DomainError(f"nerve '{name_or_path}' is neither a built-in ({sorted(BUILTIN_NERVES)}) nor an existing file")
    with open(name_or_path, "r", encoding="utf-8") as inf:
        try: doc = yaml.safe_load(inf)
        except yaml.YAMLError as e: raise DomainError(f"cannot parse nerve file {name_or_path}: {e}")
    return parse_nerve(doc)
