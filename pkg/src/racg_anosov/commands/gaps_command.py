from . import Command
from .command import system_of, rep_of, word_of
from ..core import Report, UsageError
from ..anosov import (gap_trace, load_trace, fit_gaps, gap_scan, convergence_check, additivity_sweep, transversality_sweep,
                      halfcone_subspace_check, CSV_HEADER)

to_bool = lambda cli_val, cur_val: str(cli_val).lower() in ("1", "true", "yes")


class GapsCommand(Command):
    name = "gaps"
    actions = ("trace", "pairwise", "fit", "scan", "convergence", "sweep", "locality")
    default_action = "trace"

    def __init__(self, config: dict) -> None:
        # without this STEP.__init__ is not called
        super().__init__(config)
        self.assert_positive("convergence_tol")
        self.assert_positive("sweep_length", allow_zero=True)
        self.assert_positive("eps")
        self.assert_positive("wall_index")

    @staticmethod
    def configs() -> dict:
        return {
            "pairwise": {"default": False, "help": "scan: collect pairwise gaps and fit uniform regularity too", "cli_set": to_bool},
            "convergence_tol": {"default": 1e-6, "help": "convergence: last step below which decay is certified", "cli_set": lambda cli_val, cur_val: float(cli_val)},
            "sweep_length": {"default": 6, "help": "sweep: largest length of the random words", "cli_set": lambda cli_val, cur_val: int(cli_val)},
            "eps": {"default": 1e-3, "help": "locality: distance to the half-cone accepted as localized", "cli_set": lambda cli_val, cur_val: float(cli_val)},
            "wall_index": {"default": 1, "help": "locality: position k of the wall W_k along the word", "cli_set": lambda cli_val, cur_val: int(cli_val)},
        }

    def do_trace(self, run) -> Report:
        sys = system_of(run)
        trace = gap_trace(rep_of(run, sys), word_of(run, sys))
        return self.report("trace", trace.to_dict(), trace.rows(), list(CSV_HEADER))

    def do_pairwise(self, run) -> Report:
        sys = system_of(run)
        trace = gap_trace(rep_of(run, sys), word_of(run, sys), pairwise=True)
        rows = [[n, *row] for n, row in enumerate(trace.pairwise.tolist())]
        return self.report("pairwise", trace.to_dict(), rows, ["n"] + [str(m) for m in range(len(trace))])

    def do_fit(self, run) -> Report:
        """fits the traces of --trace (comma separated CSV files) or of --word"""
        if run.trace: traces = [load_trace(p.strip()) for p in run.trace.split(",")]
        elif run.word:
            sys = system_of(run)
            traces = [gap_trace(rep_of(run, sys), word_of(run, sys))]
        else: raise UsageError("gaps fit needs --trace or --word")
        fit = fit_gaps(traces, run.b_cap)
        return self.report("fit", {"traces": [t.word for t in traces], **fit.to_dict()}, [[fit.A, fit.B, fit.b_cap, fit.samples]], ["A", "B", "b_cap", "samples"])

    def do_scan(self, run) -> Report:
        sys = system_of(run)
        scan = gap_scan(rep_of(run, sys), run.seed, run.samples, run.max_length, pairwise=self.pairwise, b_cap=run.b_cap)
        return self.report("scan", scan.to_dict(), scan.rows(), list(CSV_HEADER))

    def do_convergence(self, run) -> Report:
        sys = system_of(run)
        result = convergence_check(gap_trace(rep_of(run, sys), word_of(run, sys)), tol=self.convergence_tol)
        rows = [[n + 1, u, s] for n, (u, s) in enumerate(zip(result["unstable_steps"], result["stable_steps"]))]
        return self.report("convergence", result, rows, ["n", "unstable_step", "stable_step"])

    def do_sweep(self, run) -> Report:
        sys = system_of(run)
        rep = rep_of(run, sys)
        payload = {
            "additivity": additivity_sweep(rep, run.seed, run.samples, self.sweep_length),
            "transversality": transversality_sweep(rep, run.seed, run.samples, self.sweep_length),
        }
        return self.report("sweep", payload)

    def do_locality(self, run) -> Report:
        sys = system_of(run)
        depth = 4 if run.depth is None else run.depth
        return self.report("locality", halfcone_subspace_check(rep_of(run, sys), word_of(run, sys), self.wall_index, self.eps, depth))
