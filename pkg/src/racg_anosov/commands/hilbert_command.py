from . import Command
from .command import system_of, rep_of, word_of
from ..core import Report
from ..projgeom import PolyhedralBody, tile_domain, hilbert_distance

DEFAULT_BODY_DEPTH = 1


class HilbertCommand(Command):
    name = "hilbert"
    actions = ("dist",)
    default_action = "dist"

    def __init__(self, config: dict) -> None:
        # without this STEP.__init__ is not called
        super().__init__(config)

    def do_dist(self, run) -> Report:
        """
        Hilbert distance between the barycentre p of the fundamental simplex and ρ(word)·p,
        measured in the hull of the tiles up to --depth (an inner approximation of the Vinberg domain)
        """
        sys = system_of(run)
        rep = rep_of(run, sys)
        w = word_of(run, sys)
        depth = DEFAULT_BODY_DEPTH if run.depth is None else run.depth
        body = PolyhedralBody(tile_domain(rep, depth).vertices)
        p = rep.interior_point()
        q = rep.evaluate(w) * p
        distance = hilbert_distance(body, tuple(p), tuple(q))
        payload = {"word": str(w), "depth": depth, "generators": len(body.generators), "p": list(p), "q": list(q), "distance": distance}
        return self.report("dist", payload, [[str(w), depth, distance]], ["word", "depth", "distance"])
