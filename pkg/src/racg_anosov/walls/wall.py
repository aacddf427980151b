from __future__ import annotations
from dataclasses import dataclass
from functools import cached_property

from ..racg import CoxeterSystem, NormalForm, normalize, multiply, conjugate, right_descents, format_word
from ..core.errors import DomainError


@dataclass(frozen=True, eq=False)
class Wall:
    """
    wall u·W(s) of the Davis complex, identified with the reflection u s u⁻¹;
    two walls are equal iff their reflections are, whatever prefix was stored
    """
    prefix: NormalForm
    type: int
    canonical: bool = True

    @property
    def system(self) -> CoxeterSystem: return self.prefix.system

    @cached_property
    def reflection(self) -> NormalForm:
        return conjugate(self.system, self.prefix, NormalForm((self.type,), self.system))

    def __eq__(self, other) -> bool:
        return isinstance(other, Wall) and self.reflection == other.reflection

    def __hash__(self) -> int:
        return hash(self.reflection.letters)

    def __str__(self) -> str:
        name = self.system.name(self.type)
        if self.prefix.length == 0: return f"W({name})"
        return f"{format_word(self.system, self.prefix.letters)}·W({name})"

    def to_dict(self) -> dict:
        return {"prefix": str(self.prefix), "type": self.system.name(self.type)}


def canonical_prefix(sys: CoxeterSystem, prefix: NormalForm, s: int) -> NormalForm:
    """shortest u' with u'·W(s) = u·W(s): strip right descents lying in star(s)"""
    star = sys.star(s)
    u = prefix
    while (strip := sorted(right_descents(sys, u.letters) & star)):
        u = normalize(sys, u.letters + (strip[0],))
    return u


def make_wall(sys: CoxeterSystem, prefix, s: int, canonicalize: bool = True) -> Wall:
    if not isinstance(prefix, NormalForm): prefix = normalize(sys, prefix)
    if not 0 <= s < sys.n: raise DomainError(f"wall type {s} is not a generator")
    canon = canonical_prefix(sys, prefix, s)
    if canonicalize: return Wall(canon, s, True)
    return Wall(prefix, s, prefix == canon)


def translate(sys: CoxeterSystem, g: NormalForm, wall: Wall, canonicalize: bool = True) -> Wall:
    """g·W, keeping the prefix g·u as given when canonicalize is False"""
    return make_wall(sys, multiply(sys, g, wall.prefix), wall.type, canonicalize)


def walls_cross(sys: CoxeterSystem, w1: Wall, w2: Wall) -> bool:
    """walls cross iff their reflections commute"""
    if w1 == w2: raise DomainError(f"cannot test crossing of a wall with itself: {w1}")
    r1, r2 = w1.reflection, w2.reflection
    return multiply(sys, r1, r2) == multiply(sys, r2, r1)


def separates(sys: CoxeterSystem, wall: Wall, g: NormalForm) -> bool:
    """true iff the wall separates the identity chamber from chamber g"""
    return multiply(sys, wall.reflection, g).length < g.length
