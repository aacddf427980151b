from __future__ import annotations
import itertools, os, re
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple
import networkx as nx
import numpy as np
import sympy as sp
import yaml
from loguru import logger

from ..racg import CoxeterSystem, is_irreducible
from ..core.errors import DomainError, LimitExceeded

DEFAULT_MINOR_CAP = 16
DEFAULT_MINOR_SAMPLES = 4096
DEFAULT_RANGE = (2, 6)
DEFAULT_MAX_ATTEMPTS = 1000

_RATIONAL = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")
_DECIMAL = re.compile(r"^\s*[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?\s*$")


@dataclass(frozen=True)
class CartanMatrix:
    entries: sp.ImmutableMatrix
    system: CoxeterSystem

    @property
    def n(self) -> int: return self.entries.rows

    def __getitem__(self, key): return self.entries[key]

    def principal(self, subset: Iterable[int]) -> sp.ImmutableMatrix:
        idx = sorted(subset)
        return sp.ImmutableMatrix(self.entries.extract(idx, idx))

    def transpose(self) -> CartanMatrix:
        return CartanMatrix(sp.ImmutableMatrix(self.entries.T), self.system)

    def det(self) -> sp.Rational:
        return self.entries.det()

    def is_symmetric(self) -> bool:
        return self.entries == self.entries.T

    def to_rows(self) -> list:
        return [[str(self.entries[i, j]) for j in range(self.n)] for i in range(self.n)]


def parse_rational(text, field: str = "value") -> sp.Rational:
    """exact rational from "p/q", an integer or a finite decimal; the field name is quoted in errors"""
    if isinstance(text, bool): raise DomainError(f"malformed rational {text!r} in {field}")
    if isinstance(text, int): return sp.Integer(text)
    raw = str(text).replace("−", "-")
    if (m := _RATIONAL.match(raw)):
        p, q = int(m.group(1)), int(m.group(2) or 1)
        if q == 0: raise DomainError(f"malformed rational {text!r} in {field}: zero denominator")
        return sp.Rational(p, q)
    if _DECIMAL.match(raw): return sp.Rational(raw.strip())
    raise DomainError(f"malformed rational {text!r} in {field}")


def cartan_from_rows(sys: CoxeterSystem, rows: Sequence[Sequence], field: str = "cartan") -> CartanMatrix:
    if not isinstance(rows, (list, tuple)) or any(not isinstance(r, (list, tuple)) for r in rows):
        raise DomainError(f"{field} must be a list of rows")
    if len(rows) != sys.n or any(len(r) != sys.n for r in rows):
        raise DomainError(f"{field} must be a {sys.n}x{sys.n} matrix for generators {list(sys.generators)}")
    entries = [[parse_rational(x, f"{field}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(rows)]
    return CartanMatrix(sp.ImmutableMatrix(entries), sys)


def load_cartan(path: str, sys: CoxeterSystem) -> CartanMatrix:
    """JSON (or YAML) matrix of rational strings, either a bare list of rows or {"entries": rows}"""
    if not os.path.isfile(path): raise DomainError(f"Cartan matrix file not found: {path}")
    with open(path, "r", encoding="utf-8") as inf:
        try: doc = yaml.safe_load(inf)
        except yaml.YAMLError as e: raise DomainError(f"cannot parse Cartan matrix file {path}: {e}")
    rows = doc.get("entries") if isinstance(doc, dict) else doc
    return cartan_from_rows(sys, rows, field=os.path.basename(path))


def geometric_cartan(sys: CoxeterSystem) -> CartanMatrix:
    """A_ii = 2, 0 on commuting pairs and -2 elsewhere"""
    entries = [[2 if i == j else (0 if sys.commute(i, j) else -2) for j in range(sys.n)] for i in range(sys.n)]
    return CartanMatrix(sp.ImmutableMatrix(entries), sys)


def validate_cartan(A: CartanMatrix, sys: Optional[CoxeterSystem] = None) -> Tuple[bool, str]:
    """checks A_ii = 2, A_ij = 0 exactly on commuting pairs, A_ij < 0 with A_ij·A_ji >= 4 otherwise"""
    sys = sys or A.system
    M = A.entries
    if M.rows != sys.n or M.cols != sys.n:
        raise DomainError(f"Cartan matrix is {M.rows}x{M.cols} but the system has {sys.n} generators")
    for i in range(sys.n):
        if M[i, i] != 2: return False, f"diagonal entry A[{sys.name(i)},{sys.name(i)}] = {M[i, i]} is not 2"
        for j in range(sys.n):
            if i == j: continue
            pair = f"({sys.name(i)},{sys.name(j)})"
            if sys.commute(i, j):
                if M[i, j] != 0: return False, f"commuting pair {pair} has nonzero entry {M[i, j]}"
            else:
                if M[i, j] >= 0: return False, f"non-commuting pair {pair} has non-negative entry {M[i, j]}"
                if M[i, j] * M[j, i] < 4: return False, f"non-commuting pair {pair} has product {M[i, j] * M[j, i]} < 4"
    return True, "valid"


def principal_subsets(n: int):
    for k in range(1, n + 1):
        yield from itertools.combinations(range(n), k)


def is_fully_nondegenerate(A: CartanMatrix, cap: int = DEFAULT_MINOR_CAP, allow_sampling: bool = False, samples: int = DEFAULT_MINOR_SAMPLES, seed: int = 0) -> bool:
    """
    exact evaluation of all 2^n - 1 principal minors; above the cap either refuse or,
    with allow_sampling, evaluate a seeded random sample of them
    """
    n = A.n
    if n > cap:
        if not allow_sampling: raise LimitExceeded(f"{n} generators exceed the principal minor cap {cap}")
        logger.warning(f"{n} generators exceed the principal minor cap {cap}, sampling {samples} random principal minors")
        samples = min(samples, 2 ** n - 1)
        rng = np.random.default_rng(seed)
        subsets = set()
        while len(subsets) < samples:
            mask = rng.integers(0, 2, size=n).astype(bool)
            if mask.any(): subsets.add(tuple(int(i) for i in np.flatnonzero(mask)))
        return all(A.principal(s).det() != 0 for s in sorted(subsets))
    return all(A.principal(s).det() != 0 for s in principal_subsets(n))


def is_symmetrizable(A: CartanMatrix) -> Tuple[bool, Optional[Tuple[sp.Rational, ...]]]:
    """
    looks for a positive diagonal D with DA symmetric: fix d along a spanning forest of the
    nonzero pattern, then check every nonzero pair
    """
    n, M = A.n, A.entries
    pattern = nx.Graph()
    pattern.add_nodes_from(range(n))
    for i in range(n):
        for j in range(i + 1, n):
            if (M[i, j] == 0) != (M[j, i] == 0): return False, None
            if M[i, j] != 0: pattern.add_edge(i, j)
    d = [None] * n
    for component in nx.connected_components(pattern):
        root = min(component)
        d[root] = sp.Integer(1)
        for i, j in nx.bfs_edges(pattern, root):
            d[j] = d[i] * M[i, j] / M[j, i]
    for i, j in pattern.edges:
        if d[i] * M[i, j] != d[j] * M[j, i]: return False, None
    return True, tuple(d)


def _charpoly(A: CartanMatrix) -> sp.Poly:
    x = sp.Symbol("x")
    return sp.Poly(A.entries.charpoly(x).as_expr(), x)


def cartan_signature(A: CartanMatrix) -> dict:
    """exact counts of positive, negative and zero real eigenvalues (plus non-real ones, if any)"""
    counts = {"positive": 0, "negative": 0, "zero": 0}
    # count_roots counts distinct roots only
    _, factors = _charpoly(A).sqf_list()
    for factor, multiplicity in factors:
        x = factor.gens[0]
        while factor.degree() > 0 and factor.eval(0) == 0:
            factor = sp.Poly(sp.quo(factor.as_expr(), x), x)
            counts["zero"] += multiplicity
        if factor.degree() <= 0: continue
        counts["negative"] += int(factor.count_roots(None, 0)) * multiplicity
        counts["positive"] += int(factor.count_roots(0, None)) * multiplicity
    counts["nonreal"] = A.n - sum(counts.values())
    return counts


def is_negative_type(A: CartanMatrix) -> bool:
    """true iff A has a negative eigenvalue, decided by exact real root counting of its characteristic polynomial"""
    if not is_irreducible(A.system): raise DomainError("negative type is only defined here for irreducible systems")
    if A.det() == 0: raise DomainError("negative type test needs a nonsingular Cartan matrix")
    return _charpoly(A).count_roots(None, 0) > 0


def random_fully_nondegenerate(sys: CoxeterSystem, seed: int, magnitudes: Tuple = DEFAULT_RANGE, symmetric: bool = False, integer: bool = False, max_attempts: int = DEFAULT_MAX_ATTEMPTS, minor_cap: int = DEFAULT_MINOR_CAP) -> CartanMatrix:
    """
    rejection sampling of Cartan matrices with |A_ij| within magnitudes and A_ij·A_ji > 4 on
    non-commuting pairs, halves are allowed unless integer; reproducible per seed
    """
    lo, hi = (parse_rational(r, "range") for r in magnitudes)
    if not 0 < lo <= hi: raise DomainError(f"invalid magnitude range {list(magnitudes)}")
    scale = 1 if integer else 2
    ticks = [sp.Rational(k, scale) for k in range(int(sp.ceiling(lo * scale)), int(sp.floor(hi * scale)) + 1)]
    if not ticks or max(ticks) ** 2 <= 4: raise DomainError(f"magnitude range {list(magnitudes)} cannot produce products above 4")
    rng = np.random.default_rng(seed)
    pairs = [(i, j) for i in range(sys.n) for j in range(i + 1, sys.n) if not sys.commute(i, j)]

    def draw():
        return ticks[int(rng.integers(len(ticks)))]

    for attempt in range(1, max_attempts + 1):
        M = sp.eye(sys.n) * 2
        for i, j in pairs:
            while True:
                a = draw()
                b = a if symmetric else draw()
                if a * b > 4: break
            M[i, j], M[j, i] = -a, -b
        A = CartanMatrix(sp.ImmutableMatrix(M), sys)
        if is_fully_nondegenerate(A, cap=minor_cap, allow_sampling=True, seed=seed):
            logger.debug(f"fully nondegenerate Cartan matrix found after {attempt} attempt(s) with {seed=}")
            return A
    raise DomainError(f"no fully nondegenerate Cartan matrix found in {max_attempts} attempts with {seed=}")
