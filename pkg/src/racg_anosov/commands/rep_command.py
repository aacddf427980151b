from loguru import logger

from . import Command
from .command import system_of, cartan_of, word_of
from ..core import Report, RunContext, DomainError, LimitExceeded
from ..racg import support
from ..vinberg import (CartanMatrix, build_rep, dual_rep, restrict, random_fully_nondegenerate, is_fully_nondegenerate,
                       is_symmetrizable, cartan_signature, is_negative_type, DEFAULT_MINOR_CAP)


class RepCommand(Command):
    name = "rep"
    actions = ("build", "random", "check")
    default_action = "build"

    def __init__(self, config: dict) -> None:
        # without this STEP.__init__ is not called
        super().__init__(config)
        self.assert_positive("minor_cap")

    @staticmethod
    def configs() -> dict:
        return {
            "minor_cap": {"default": DEFAULT_MINOR_CAP, "help": "largest n for the exhaustive principal minor test", "cli_set": lambda cli_val, cur_val: int(cli_val)},
        }

    def describe(self, A: CartanMatrix) -> dict:
        rep = build_rep(A)
        symmetrizable, d = is_symmetrizable(A)
        out = {**rep.to_dict(), "determinant": A.det(), "symmetrizable": symmetrizable, "symmetrizer": list(d) if d else None}
        try: out["fully_nondegenerate"] = is_fully_nondegenerate(A, cap=self.minor_cap)
        except LimitExceeded as e:
            logger.warning(str(e))
            out["fully_nondegenerate"] = None
        if symmetrizable: out["signature"] = cartan_signature(A)
        try: out["negative_type"] = is_negative_type(A)
        except DomainError as e:
            logger.info(f"negative type not reported: {e}")
            out["negative_type"] = None
        return out

    def do_build(self, run) -> Report:
        sys = system_of(run)
        A = cartan_of(run, sys)
        return self.report("build", self.describe(A), A.to_rows(), list(sys.generators))

    def do_random(self, run) -> Report:
        sys = system_of(run)
        RunContext.record_seed("cartan", run.seed)
        A = random_fully_nondegenerate(sys, run.seed, magnitudes=tuple(run.range), symmetric=run.symmetric, integer=run.integer, minor_cap=self.minor_cap)
        return self.report("random", self.describe(A), A.to_rows(), list(sys.generators))

    def do_check(self, run) -> Report:
        """relations, the dual representation and, with --word, the block form on V_T ⊕ V_T^⊥ for T = supp(word)"""
        sys = system_of(run)
        rep = build_rep(cartan_of(run, sys))
        payload = {"relations": True, "cartan": rep.cartan.to_rows()}
        if rep.cartan.det() != 0:
            dual = dual_rep(rep)
            payload["dual_cartan"] = dual.cartan.to_rows()
        if run.word is not None:
            w = word_of(run, sys)
            R = restrict(rep, support(w))
            B = R.check_block(w)
            payload["restriction"] = {**R.to_dict(), "word": str(w), "block": [[str(x) for x in B.row(i)] for i in range(B.rows)]}
        return self.report("check", payload)
