from . import Command
from .command import system_of, rep_of, word_of
from ..core import Report, DomainError
from ..walls import walls_of
from ..projgeom import nesting_probe, halfcone_containment_check, halfcone_duality_check

DEFAULT_PROBE_DEPTH = 3


class HalfconeCommand(Command):
    """
        Half-cones of the walls crossed by --word: the probe compares the first and the last wall,
        containment and duality look at the first one
    """
    name = "halfcone"
    actions = ("probe", "containment", "duality")
    default_action = "probe"

    def __init__(self, config: dict) -> None:
        # without this STEP.__init__ is not called
        super().__init__(config)
        self.assert_positive("strong_tol")
        self.assert_positive("decay_tol")

    @staticmethod
    def configs() -> dict:
        return {
            "strong_tol": {"default": 1e-6, "help": "margin floor reported as strong nesting", "cli_set": lambda cli_val, cur_val: float(cli_val)},
            "decay_tol": {"default": 1e-3, "help": "last margin below which a decreasing trace is reported as decay", "cli_set": lambda cli_val, cur_val: float(cli_val)},
        }

    def _setup(self, run):
        sys = system_of(run)
        w = word_of(run, sys)
        if w.length == 0: raise DomainError("the word crosses no wall")
        walls, _ = walls_of(sys, w)
        return rep_of(run, sys), walls, DEFAULT_PROBE_DEPTH if run.depth is None else run.depth

    def do_probe(self, run) -> Report:
        rep, walls, depth = self._setup(run)
        probe = nesting_probe(rep, walls[0], walls[-1], depth, strong_tol=self.strong_tol, decay_tol=self.decay_tol)
        return self.report("probe", probe.to_dict(), probe.rows(), ["depth", "min_margin"])

    def do_containment(self, run) -> Report:
        rep, walls, depth = self._setup(run)
        return self.report("containment", halfcone_containment_check(rep, walls[0], depth))

    def do_duality(self, run) -> Report:
        rep, walls, depth = self._setup(run)
        return self.report("duality", halfcone_duality_check(rep, walls[0], depth))
