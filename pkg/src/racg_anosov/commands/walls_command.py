from . import Command
from .command import system_of, word_of
from ..core import Report
from ..racg import format_word
from ..walls import (walls_of, linear_extensions, bpp_constant, disjoint_decomposition, low_crossing_bound, decomposition_bound,
                     DEFAULT_EXTENSION_LIMIT, DEFAULT_BPP_CAP)


class WallsCommand(Command):
    name = "walls"
    actions = ("show", "poset", "extensions", "bpp", "decompose")
    default_action = "show"

    def __init__(self, config: dict) -> None:
        # without this STEP.__init__ is not called
        super().__init__(config)
        self.assert_positive("extension_limit")
        self.assert_positive("bpp_cap")
        self.assert_positive("D", allow_zero=True)

    @staticmethod
    def configs() -> dict:
        return {
            "D": {"default": 1, "help": "product projection constant used by decompose", "cli_set": lambda cli_val, cur_val: int(cli_val)},
            "extension_limit": {"default": DEFAULT_EXTENSION_LIMIT, "help": "largest number of linear extensions to list", "cli_set": lambda cli_val, cur_val: int(cli_val)},
            "bpp_cap": {"default": DEFAULT_BPP_CAP, "help": "largest product projection constant searched exhaustively", "cli_set": lambda cli_val, cur_val: int(cli_val)},
        }

    def do_show(self, run) -> Report:
        sys = system_of(run)
        w = word_of(run, sys)
        walls, _ = walls_of(sys, w)
        rows = [[i, str(x.prefix), sys.name(x.type), str(x)] for i, x in enumerate(walls)]
        return self.report("show", {"word": str(w), "walls": [x.to_dict() for x in walls]}, rows, ["index", "prefix", "type", "wall"])

    def do_poset(self, run) -> Report:
        sys = system_of(run)
        w = word_of(run, sys)
        _, poset = walls_of(sys, w)
        rows = [[i, j] for i in range(poset.size) for j in range(poset.size) if poset.less[i, j]]
        return self.report("poset", {"word": str(w), **poset.to_dict()}, rows, ["below", "above"])

    def do_extensions(self, run) -> Report:
        sys = system_of(run)
        w = word_of(run, sys)
        _, poset = walls_of(sys, w)
        words = [format_word(sys, [poset.letters[p] for p in order]) for order in linear_extensions(poset, self.extension_limit)]
        return self.report("extensions", {"word": str(w), "count": len(words), "words": words}, [[i, x] for i, x in enumerate(words)], ["index", "word"])

    def do_bpp(self, run) -> Report:
        sys = system_of(run)
        w = word_of(run, sys)
        value = bpp_constant(sys, w, cap=self.bpp_cap)
        return self.report("bpp", {"word": str(w), "bpp": value, "cap": self.bpp_cap}, [[str(w), value]], ["word", "bpp"])

    def do_decompose(self, run) -> Report:
        sys = system_of(run)
        w = word_of(run, sys)
        d = disjoint_decomposition(sys, w, self.D, bpp_cap=self.bpp_cap)
        windows = [{"i": i, "j": i + 1, **{k: str(v) for k, v in vars(d.window(i, i + 1)).items()}} for i in range(len(d.chain) - 1)]
        payload = {**d.to_dict(), "D": self.D, "low_crossing_bound": low_crossing_bound(self.D), "decomposition_bound": decomposition_bound(self.D), "windows": windows}
        rows = [[i, str(c), len(s)] for i, (c, s) in enumerate(zip(d.chain, d.spacers))]
        return self.report("decompose", payload, rows, ["index", "chain_wall", "spacer_size"])
