from typing import Tuple
import numpy as np
from loguru import logger

from .coxeter import CoxeterSystem
from .words import NormalForm, normalize, right_descents
from ..core.errors import DomainError, LimitExceeded

DEFAULT_RADIUS_CAP = 12


def enumerate_ball(sys: CoxeterSystem, radius: int, cap: int = DEFAULT_RADIUS_CAP) -> Tuple[NormalForm, ...]:
    """
    every element of word length <= radius exactly once, ordered by length then lexicographically
    """
    if radius < 0: raise DomainError(f"ball radius must be non-negative, got {radius}")
    if radius > cap: raise LimitExceeded(f"ball radius {radius} exceeds the configured cap {cap}")
    level = {()}
    ball = [()]
    for r in range(radius):
        sphere = set()
        for w in level:
            descents = right_descents(sys, w)
            for s in range(sys.n):
                if s not in descents: sphere.add(normalize(sys, w + (s,)).letters)
        if not sphere: break
        level = sphere
        ball.extend(sorted(sphere))
        logger.debug(f"ball of radius {r + 1}: {len(ball)} elements")
    return tuple(NormalForm(w, sys) for w in ball)


def random_geodesic(sys: CoxeterSystem, length: int, rng: np.random.Generator) -> Tuple[int, ...]:
    """
    a reduced word of the given length (shorter only if the group is finite) built letter by letter,
    each letter drawn uniformly among those that do not shorten the prefix
    """
    w = []
    for _ in range(length):
        descents = right_descents(sys, w)
        choices = [s for s in range(sys.n) if s not in descents]
        if not choices: break
        w.append(choices[int(rng.integers(len(choices)))])
    return tuple(w)
