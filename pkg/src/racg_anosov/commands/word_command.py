from collections import Counter

from . import Command
from .command import system_of, word_of, require
from ..core import Report
from ..racg import enumerate_ball, multiply, parse_word


class WordCommand(Command):
    name = "word"
    actions = ("normalize", "mul", "ball")
    default_action = "normalize"

    def __init__(self, config: dict) -> None:
        # without this STEP.__init__ is not called
        super().__init__(config)

    def do_normalize(self, run) -> Report:
        sys = system_of(run)
        w = word_of(run, sys)
        payload = {"input": run.word, "normal_form": str(w), "length": w.length, "input_length": len(parse_word(sys, run.word))}
        return self.report("normalize", payload, [[run.word, str(w), w.length]], ["input", "normal_form", "length"])

    def do_mul(self, run) -> Report:
        sys = system_of(run)
        x, y = word_of(run, sys), word_of(run, sys, "word2")
        xy = multiply(sys, x, y)
        payload = {"left": str(x), "right": str(y), "product": str(xy), "length": xy.length}
        return self.report("mul", payload, [[str(x), str(y), str(xy), xy.length]], ["left", "right", "product", "length"])

    def do_ball(self, run) -> Report:
        sys = system_of(run)
        ball = enumerate_ball(sys, require(run, "radius"), cap=run.radius_cap)
        spheres = Counter(w.length for w in ball)
        payload = {"radius": run.radius, "size": len(ball), "spheres": [spheres[r] for r in range(run.radius + 1)]}
        return self.report("ball", payload, [[i, w.length, str(w)] for i, w in enumerate(ball)], ["index", "length", "word"])
