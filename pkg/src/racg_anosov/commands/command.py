from __future__ import annotations
from dataclasses import dataclass
from typing import Tuple
from loguru import logger

from ..core import Step, Report, RunContext, UsageError
from ..racg import CoxeterSystem, NormalForm, load_system, normalize, parse_word
from ..vinberg import CartanMatrix, SimplicialRep, build_rep, geometric_cartan, load_cartan, random_fully_nondegenerate


@dataclass
class Command(Step):
    name = "command"
    actions: Tuple[str, ...] = ()
    default_action: str = None

    def __init__(self, config: dict) -> None:
        # without this STEP.__init__ is not called
        super().__init__(config)

    def init(name: str, config: dict) -> Command:
        # only for code typing
        return Step.init(name, config, Command)

    def run(self, action: str, run) -> Report:
        """calls the do_<action> method, which returns the Report to emit"""
        if action not in self.actions: raise UsageError(f"unknown action '{action}' for {self.name}, expected one of {list(self.actions)}")
        logger.info(f"running {self.name} {action}")
        return getattr(self, f"do_{action}")(run)

    def report(self, action: str, payload: dict, rows=None, header=None) -> Report:
        return Report(self.name, action, payload, rows=rows, header=header)


def require(run, prop: str):
    v = getattr(run, prop)
    if v is None: raise UsageError(f"missing required option --{prop.replace('_', '-')}")
    return v


def system_of(run) -> CoxeterSystem:
    return load_system(require(run, "nerve"))


def word_of(run, sys: CoxeterSystem, prop: str = "word") -> NormalForm:
    return normalize(sys, parse_word(sys, require(run, prop)))


def cartan_of(run, sys: CoxeterSystem) -> CartanMatrix:
    """--cartan: omitted or 'geometric', 'random' (seeded by --seed within --range) or a matrix file"""
    if run.cartan in (None, "geometric"): return geometric_cartan(sys)
    if run.cartan == "random":
        RunContext.record_seed("cartan", run.seed)
        return random_fully_nondegenerate(sys, run.seed, magnitudes=tuple(run.range), symmetric=run.symmetric, integer=run.integer)
    return load_cartan(run.cartan, sys)


def rep_of(run, sys: CoxeterSystem) -> SimplicialRep:
    return build_rep(cartan_of(run, sys))
