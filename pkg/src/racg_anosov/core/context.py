class RunContext:
    """
    Process-wide state of one run: the worker thread count, kept across runs, and the
    seeds consumed by randomized operations, which every report echoes.

    RunContext.reset() clears the seeds only, RunContext.reset(full_reset=True) also
    restores the single-threaded default.
    """
    _instance = None

    def __init__(self):
        self.threads = 1
        self.seeds = {}

    @staticmethod
    def get_instance() -> "RunContext":
        if RunContext._instance is None:
            RunContext._instance = RunContext()
        return RunContext._instance

    @staticmethod
    def reset(full_reset: bool = False):
        rc = RunContext.get_instance()
        rc.seeds = {}
        if full_reset: rc.threads = 1

    @staticmethod
    def set_threads(threads: int):
        RunContext.get_instance().threads = max(1, int(threads))

    @staticmethod
    def get_threads() -> int:
        return RunContext.get_instance().threads

    @staticmethod
    def record_seed(name: str, seed: int):
        # a later draw under the same name replaces the earlier seed
        RunContext.get_instance().seeds[name] = seed

    @staticmethod
    def get_seeds() -> dict:
        return dict(RunContext.get_instance().seeds)
