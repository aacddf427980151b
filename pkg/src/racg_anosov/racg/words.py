from __future__ import annotations
import heapq, re
from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, List, Sequence, Tuple

from .coxeter import CoxeterSystem
from ..core.errors import DomainError

EMPTY_WORD = "ε"


@dataclass(frozen=True)
class NormalForm:
    """
    canonical geodesic word of a group element: the lexicographically least
    linear extension of its heap, comparisons ignore the system reference
    """
    letters: Tuple[int, ...]
    system: CoxeterSystem = field(compare=False, hash=False, repr=False)

    @property
    def length(self) -> int: return len(self.letters)

    def __len__(self) -> int: return len(self.letters)

    def __str__(self) -> str: return format_word(self.system, self.letters)


def identity(sys: CoxeterSystem) -> NormalForm:
    return NormalForm((), sys)


def format_word(sys: CoxeterSystem, letters: Sequence[int]) -> str:
    if len(letters) == 0: return EMPTY_WORD
    sep = "" if all(len(g) == 1 for g in sys.generators) else " "
    return sep.join(sys.generators[i] for i in letters)


def parse_word(sys: CoxeterSystem, text: str) -> Tuple[int, ...]:
    """
    generator names separated by whitespace or commas; a chunk without separators
    is split greedily by longest matching generator name, eg "t1t3t2ed1d2"
    """
    names = sorted(sys.generators, key=len, reverse=True)
    letters = []
    for chunk in re.split(r"[\s,]+", text.strip()):
        if chunk in ("", EMPTY_WORD): continue
        pos = 0
        while pos < len(chunk):
            match = next((n for n in names if chunk.startswith(n, pos)), None)
            if match is None: raise DomainError(f"cannot read '{chunk[pos:]}' in word '{text}' as generators {list(sys.generators)}")
            letters.append(sys.index(match))
            pos += len(match)
    return tuple(letters)


def _validate(sys: CoxeterSystem, w: Iterable[int]) -> Tuple[int, ...]:
    w = tuple(int(s) for s in w)
    for s in w:
        if not 0 <= s < sys.n: raise DomainError(f"letter index {s} is not a generator of a {sys.n}-generator system")
    return w


def _reduce(sys: CoxeterSystem, w: Sequence[int]) -> List[int]:
    # appending s either cancels the last s that commutes with everything after it, or extends the geodesic
    out: List[int] = []
    for s in w:
        for j in range(len(out) - 1, -1, -1):
            t = out[j]
            if t == s:
                del out[j]
                break
            if not sys.commute(s, t):
                out.append(s)
                break
        else:
            out.append(s)
    return out


def _lex_least_extension(sys: CoxeterSystem, w: Sequence[int]) -> Tuple[int, ...]:
    m = len(w)
    successors = [[] for _ in range(m)]
    indegree = [0] * m
    for i in range(m):
        for j in range(i + 1, m):
            if w[i] == w[j] or not sys.commute(w[i], w[j]):
                successors[i].append(j)
                indegree[j] += 1
    available = [(w[i], i) for i in range(m) if indegree[i] == 0]
    heapq.heapify(available)
    out = []
    while available:
        s, i = heapq.heappop(available)
        out.append(s)
        for j in successors[i]:
            indegree[j] -= 1
            if indegree[j] == 0: heapq.heappush(available, (w[j], j))
    return tuple(out)


def normalize(sys: CoxeterSystem, w: Iterable[int]) -> NormalForm:
    """canonical geodesic representative of the element spelled by w"""
    return NormalForm(_lex_least_extension(sys, _reduce(sys, _validate(sys, w))), sys)


def _same_system(x: NormalForm, y: NormalForm) -> CoxeterSystem:
    if x.system != y.system: raise DomainError("cannot combine elements of different Coxeter systems")
    return x.system


def multiply(sys: CoxeterSystem, x: NormalForm, *others: NormalForm) -> NormalForm:
    letters = list(x.letters)
    for y in others:
        _same_system(x, y)
        letters.extend(y.letters)
    if x.system != sys: raise DomainError("element does not belong to the given system")
    return normalize(sys, letters)


def invert(sys: CoxeterSystem, x: NormalForm) -> NormalForm:
    # generators are involutions
    return normalize(sys, reversed(x.letters))


def conjugate(sys: CoxeterSystem, u: NormalForm, x: NormalForm) -> NormalForm:
    """u x u⁻¹"""
    return normalize(sys, u.letters + x.letters + tuple(reversed(u.letters)))


def support(x: NormalForm) -> FrozenSet[int]:
    return frozenset(x.letters)


def in_standard_subgroup(x: NormalForm, subset: Iterable[int]) -> bool:
    return support(x) <= frozenset(subset)


def right_descents(sys: CoxeterSystem, w: Sequence[int]) -> FrozenSet[int]:
    """letters s with |ws| < |w|, w must be reduced"""
    return frozenset(s for i, s in enumerate(w) if all(sys.commute(s, t) for t in w[i + 1:]))


def left_descents(sys: CoxeterSystem, w: Sequence[int]) -> FrozenSet[int]:
    return frozenset(s for i, s in enumerate(w) if all(sys.commute(s, t) for t in w[:i]))
