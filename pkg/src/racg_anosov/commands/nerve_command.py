from . import Command
from .command import system_of
from ..core import Report
from ..racg import is_finite, is_irreducible


class NerveCommand(Command):
    name = "nerve"
    actions = ("validate",)
    default_action = "validate"

    def __init__(self, config: dict) -> None:
        # without this STEP.__init__ is not called
        super().__init__(config)

    def do_validate(self, run) -> Report:
        sys = system_of(run)
        payload = {
            **sys.to_dict(),
            "n": sys.n,
            "irreducible": is_irreducible(sys),
            "finite": is_finite(sys),
            "links": {sys.name(i): sys.names(sorted(sys.link(i))) for i in range(sys.n)},
        }
        rows = [[sys.name(i), " ".join(sys.names(sorted(sys.link(i))))] for i in range(sys.n)]
        return self.report("validate", payload, rows, ["generator", "link"])
