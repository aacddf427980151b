from . import Command
from .command import rep_of
from ..core import Report
from ..racg import builtin_system
from ..projgeom import appendix_certify

NERVES = {"a1": "fig-a1", "a2": "fig-a2"}


class AppendixCommand(Command):
    """
        Exact certification of the two wall pairs that never strongly nest, on the built-in
        nerves; --cartan chooses the representation, a seeded fully nondegenerate one by default
    """
    name = "appendix"
    actions = ("a1", "a2")
    default_action = "a1"

    def __init__(self, config: dict) -> None:
        # without this STEP.__init__ is not called
        super().__init__(config)

    def certify(self, case: str, run) -> Report:
        rep = rep_of(run, builtin_system(NERVES[case])) if run.cartan is not None else None
        result = appendix_certify(case, k=run.k, depth=run.depth, rep=rep, seed=run.seed)
        return self.report(case, result.to_dict(), result.rows(), ["depth", "min_margin"])

    def do_a1(self, run) -> Report: return self.certify("a1", run)

    def do_a2(self, run) -> Report: return self.certify("a2", run)
