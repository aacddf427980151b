from __future__ import annotations
from dataclasses import dataclass
from typing import Type
from abc import ABC

from .errors import UsageError


@dataclass
class Step(ABC):
    name: str = None

    def __init__(self, config: dict) -> None:
        # reads the configs into object properties
        for k, v in config.get(self.name, {}).items():
            self.__setattr__(k, v)

    @staticmethod
    def configs() -> dict: return {}

    def init(name: str, config: dict, child: Type[Step]) -> Step:
        """
        looks into direct subclasses of child for name and returns such an object
        """
        for sub in child.__subclasses__():
            if sub.name == name:
                return sub(config)
        raise UsageError(f"unknown {child.name} '{name}', available: {sorted(s.name for s in child.__subclasses__())}")

    def assert_positive(self, prop: str, allow_zero: bool = False) -> None:
        """
        receives a property name and ensures it holds a positive (or non-negative) number, raises UsageError if not
        """
        v = getattr(self, prop, None)
        ok = isinstance(v, (int, float)) and not isinstance(v, bool) and (v >= 0 if allow_zero else v > 0)
        if not ok: raise UsageError(f"invalid {self.name}.{prop} value '{v}', it should be a {'non-negative' if allow_zero else 'positive'} number")
