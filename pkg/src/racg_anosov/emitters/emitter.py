from __future__ import annotations
import os, sys
from dataclasses import dataclass
from abc import abstractmethod
from typing import Optional

from ..core import Step, Report, DomainError
from ..utils import mkdir_if_not_exists


@dataclass
class Emitter(Step):
    name = "emitter"

    def __init__(self, config: dict) -> None:
        # without this STEP.__init__ is not called
        super().__init__(config)

    def init(name: str, config: dict) -> Emitter:
        # only for code typing
        return Step.init(name, config, Emitter)

    @abstractmethod
    def render(self, report: Report) -> str: pass

    def emit(self, report: Report, path: Optional[str] = None) -> None:
        """writes the rendered report to path, or to standard output when path is None"""
        text = self.render(report)
        if path is None:
            sys.stdout.write(text)
            sys.stdout.flush()
            return
        try:
            mkdir_if_not_exists(os.path.dirname(path))
            with open(path, "w", encoding="utf-8", newline="") as outf: outf.write(text)
        except OSError as e:
            raise DomainError(f"cannot write {self.name} output to {path}: {e}") from e
