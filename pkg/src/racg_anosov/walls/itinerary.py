from __future__ import annotations
from dataclasses import dataclass
from typing import Tuple

from .wall import Wall, canonical_prefix, make_wall
from .poset import poset_of_word
from ..racg import CoxeterSystem, NormalForm, identity, normalize, multiply, invert, left_descents
from ..core.errors import DomainError


@dataclass(frozen=True)
class Itinerary:
    """ordered walls crossed one after the other starting from the departure chamber"""
    walls: Tuple[Wall, ...]
    departure: NormalForm

    def __len__(self) -> int: return len(self.walls)

    def letters(self) -> Tuple[int, ...]:
        """
        generator labels of the edges crossed, raises DomainError if a wall is not adjacent
        to the current chamber or if the resulting edge path is not geodesic
        """
        sys = self.departure.system
        chamber = self.departure
        out = []
        for wall in self.walls:
            step = multiply(sys, invert(sys, chamber), wall.reflection, chamber)
            if step.length != 1: raise DomainError(f"wall {wall} is not adjacent to chamber {chamber}")
            out.append(step.letters[0])
            chamber = multiply(sys, chamber, step)
        if normalize(sys, out).length != len(out): raise DomainError(f"itinerary {self} is not a geodesic edge path")
        return tuple(out)

    def traversed(self) -> NormalForm:
        return normalize(self.departure.system, self.letters())

    def arrival(self) -> NormalForm:
        return multiply(self.departure.system, self.departure, self.traversed())

    def __str__(self) -> str:
        return f"from {self.departure}: " + ", ".join(str(w) for w in self.walls)

    def to_dict(self) -> dict:
        return {"departure": str(self.departure), "walls": [w.to_dict() for w in self.walls]}


def efficient_itinerary(sys: CoxeterSystem, w1: Wall, w2: Wall) -> Itinerary:
    """
    itinerary starting at w1 and ending at w2 whose interior walls are exactly the walls separating them
    1. translate by u1⁻¹ so that w1 = W(s) and w2 = w·W(t), w canonical
    2. pick α ∈ {1, s} on the side of W(s) away from w2 and β = wt beyond w2
    3. keep, in the poset of α⁻¹β, the walls strictly between the two end walls
    4. depart after crossing everything incomparable to the first wall
    """
    if w1 == w2: raise DomainError(f"an efficient itinerary needs two distinct walls, got {w1} twice")
    s, t = w1.type, w2.type
    u1 = canonical_prefix(sys, w1.prefix, s)
    w = canonical_prefix(sys, multiply(sys, invert(sys, u1), w2.prefix), t)
    alpha = identity(sys) if s in left_descents(sys, w.letters) else normalize(sys, (s,))
    x = multiply(sys, invert(sys, alpha), w, normalize(sys, (t,)))
    poset = poset_of_word(sys, x.letters)

    first = make_wall(sys, (), s)
    last = make_wall(sys, multiply(sys, invert(sys, alpha), w), t)
    p1, p2 = poset.index_of(first), poset.index_of(last)
    middle = [q for q in range(poset.size) if poset.less[p1, q] and poset.less[q, p2]]
    before = [q for q in range(poset.size) if q not in (p1, p2) and poset.incomparable(p1, q)]

    shift = multiply(sys, u1, alpha)
    walls = tuple(make_wall(sys, multiply(sys, shift, normalize(sys, x.letters[:k])), x.letters[k]) for k in [p1] + middle + [p2])
    departure = multiply(sys, shift, normalize(sys, [x.letters[q] for q in before]))
    assert walls[0] == w1 and walls[-1] == w2, f"efficient itinerary from {w1} to {w2} lost its end walls"
    return Itinerary(walls, departure)


def gamma_of(sys: CoxeterSystem, w1: Wall, w2: Wall) -> NormalForm:
    """γ(W1, W2): the element traversed by any efficient itinerary from W1 to W2"""
    return efficient_itinerary(sys, w1, w2).traversed()
