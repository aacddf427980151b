import argparse, os, yaml
from dataclasses import dataclass, field, asdict
from typing import List, Optional, Sequence, Tuple
from collections import defaultdict
from dataclasses_json import dataclass_json
from loguru import logger

from ..commands import Command
from ..emitters import Emitter
from ..vinberg import parse_rational, DEFAULT_RANGE
from ..racg import DEFAULT_RADIUS_CAP
from ..utils import update_nested_dict, default_threads
from .context import RunContext
from .errors import DomainError, UsageError
from . import Step

FORMATS = ("json", "csv")
LOG_LEVELS = ("TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL")


@dataclass_json
@dataclass
class RunConfig:
    """resolved global options, echoed into every report"""
    nerve: Optional[str] = None
    cartan: Optional[str] = None
    word: Optional[str] = None
    word2: Optional[str] = None
    trace: Optional[str] = None
    radius: int = 3
    radius_cap: int = DEFAULT_RADIUS_CAP
    depth: Optional[int] = None
    k: int = 1
    seed: int = 1
    threads: int = 1
    samples: int = 200
    max_length: int = 40
    range: List[str] = field(default_factory=lambda: [str(x) for x in DEFAULT_RANGE])
    symmetric: bool = False
    integer: bool = False
    b_cap: float = 1.0
    tol: float = 1e-9
    format: str = "json"
    out: Optional[str] = None
    log_level: str = "INFO"

    def validate(self) -> None:
        for prop in ("radius_cap", "k", "threads", "samples", "max_length"):
            if getattr(self, prop) < 1: raise UsageError(f"--{prop.replace('_', '-')} must be positive, got {getattr(self, prop)}")
        for prop in ("radius", "depth"):
            v = getattr(self, prop)
            if v is not None and v < 0: raise UsageError(f"--{prop} must be non-negative, got {v}")
        if self.radius > self.radius_cap: raise UsageError(f"--radius {self.radius} exceeds --radius-cap {self.radius_cap}")
        if self.b_cap < 0: raise UsageError(f"--b-cap must be non-negative, got {self.b_cap}")
        if self.tol <= 0: raise UsageError(f"--tol must be positive, got {self.tol}")
        if self.format not in FORMATS: raise UsageError(f"--format must be one of {list(FORMATS)}, got {self.format!r}")
        if self.log_level.upper() not in LOG_LEVELS: raise UsageError(f"--log-level must be one of {list(LOG_LEVELS)}")
        self.magnitudes()

    def magnitudes(self) -> Tuple:
        """the --range pair as exact rationals"""
        if len(self.range) != 2: raise UsageError(f"--range needs two values lo,hi, got {self.range}")
        try: lo, hi = (parse_rational(x, "range") for x in self.range)
        except DomainError as e: raise UsageError(str(e)) from e
        if not 0 < lo <= hi: raise UsageError(f"--range needs 0 < lo <= hi, got {self.range}")
        return lo, hi


# (flag, type, help); bools are store_true flags
GLOBAL_FLAGS = [
    ("nerve", str, "built-in nerve name (fig-a1, fig-a2, pentagon, dihedral, free3) or nerve file"),
    ("cartan", str, "Cartan matrix file, 'geometric' or 'random' (seeded)"),
    ("word", str, "word in the generators, e.g. 'b d e a c'"),
    ("word2", str, "second word, for word mul"),
    ("trace", str, "CSV gap trace file, for gaps fit"),
    ("radius", int, "ball radius"),
    ("radius_cap", int, "largest allowed ball radius"),
    ("depth", int, "approximation depth (command default when omitted)"),
    ("k", int, "power k of the appendix a1 word"),
    ("seed", int, "seed of every randomized operation"),
    ("threads", int, "worker threads (defaults to RACG_ANOSOV_THREADS or the CPU count)"),
    ("samples", int, "number of random samples"),
    ("max_length", int, "largest random geodesic length"),
    ("range", str, "magnitude range lo,hi of random Cartan entries"),
    ("symmetric", bool, "random Cartan matrices are symmetric"),
    ("integer", bool, "random Cartan matrices have integer entries"),
    ("b_cap", float, "largest offset B accepted by gap fits"),
    ("tol", float, "numerical tolerance"),
    ("format", str, "output format, json or csv"),
    ("out", str, "output file, standard output when omitted"),
    ("log_level", str, "loguru level of the standard error sink"),
]


@dataclass
class Config:
    configurable_parents = [
        Command,
        Emitter,
    ]
    command: Command
    emitter: Emitter
    action: str
    run: RunConfig

    def __init__(self) -> None:
        self.defaults = {}
        self.cli_ops = {}
        self.config = {}
        self.run = RunConfig(threads=default_threads())

    def _parser(self) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(
            prog="racg-anosov",
            description="Walls, Vinberg representations, half-cone nesting and singular value gaps for right-angled Coxeter groups.",
        )
        parser.add_argument("command", choices=sorted(c.name for c in Command.__subclasses__()), help="command group")
        parser.add_argument("action", nargs="?", default=None, help="action of the command group")
        parser.add_argument("--config", action="store", dest="config", help="YAML file with 'run' and 'configurations' sections", default=None)
        for flag, kind, help in GLOBAL_FLAGS:
            name = f"--{flag.replace('_', '-')}"
            if kind is bool: parser.add_argument(name, action="store_true", dest=flag, default=None, help=help)
            else: parser.add_argument(name, action="store", dest=flag, type=kind, default=None, help=help)
        return parser

    def parse(self, argv: Optional[Sequence[str]] = None, use_cli: bool = True, yaml_config_filename: str = None, overwrite_configs: dict = {}, command: str = None, action: str = None):
        """
        if yaml_config_filename is provided, the --config argument is ignored,
        useful for library usage when the config values are preloaded
        overwrite_configs is a dict that overwrites the yaml file contents
        """
        # 1. parse CLI values
        if use_cli: parser = self._parser()

        for configurable in self.configurable_parents:
            child: Step
            for child in configurable.__subclasses__():
                assert child.configs() is not None and type(child.configs()) == dict, f"class '{child.name}' should have a configs method returning a dict."
                for config, details in child.configs().items():
                    assert "." not in child.name, f"class prop name cannot contain dots('.'): {child.name}"
                    assert "." not in config, f"config property cannot contain dots('.'): {config}"
                    config_path = f"{child.name}.{config}"
                    if use_cli:
                        parser.add_argument(f'--{config_path}', action='store', dest=config_path, help=f"{details['help']} (defaults to {details['default']})", choices=details.get("choices", None))
                    self.defaults[config_path] = details["default"]
                    if "cli_set" in details:
                        self.cli_ops[config_path] = details["cli_set"]

        if use_cli:
            args = parser.parse_args(argv)
            yaml_config_filename = yaml_config_filename or args.config
            command, action = args.command, args.action
        else: args = argparse.Namespace()

        # 2. read YAML config file (or use provided value)
        self.yaml_config = self.read_yaml(yaml_config_filename) if yaml_config_filename else {}
        update_nested_dict(self.yaml_config, overwrite_configs)

        # 3. RUN: global values with priority CLI >> config.yaml >> default
        file_run = self.yaml_config.get("run", {}) or {}
        unknown = set(file_run) - set(RunConfig.__dataclass_fields__)
        if unknown: raise UsageError(f"unknown keys in the run section of {yaml_config_filename}: {sorted(unknown)}")
        resolved = asdict(self.run)
        for key in resolved:
            cli_val, file_val = getattr(args, key, None), file_run.get(key)
            if cli_val is not None and file_val is not None and cli_val != file_val:
                logger.info(f"{key}: command line value {cli_val!r} overrides {file_val!r} from {yaml_config_filename}")
            if cli_val is not None: resolved[key] = cli_val
            elif file_val is not None: resolved[key] = file_val
        if isinstance(resolved["range"], str): resolved["range"] = [x.strip() for x in resolved["range"].split(",")]
        resolved["range"] = [str(x) for x in resolved["range"]]
        self.run = RunConfig(**resolved)
        self.run.validate()
        RunContext.set_threads(self.run.threads)

        # 4. CONFIGS: per-step values with priority CLI >> config.yaml >> default
        self.config = defaultdict(dict)
        for config_path, default in self.defaults.items():
            child, config = tuple(config_path.split("."))
            val = getattr(args, config_path, None)
            if val is not None and config_path in self.cli_ops:
                val = self.cli_ops[config_path](val, default)
            if val is None:
                val = (self.yaml_config.get("configurations", {}) or {}).get(child, {}).get(config, default)
            self.config[child][config] = val
        self.config = dict(self.config)

        # 5. STEPS: the command group and the emitter
        if command is None: raise UsageError("missing command")
        self.command = Command.init(command, self.config)
        self.action = action or self.command.default_action
        if self.action not in self.command.actions:
            raise UsageError(f"unknown action '{self.action}' for {command}, expected one of {list(self.command.actions)}")
        self.emitter = Emitter.init(self.run.format, self.config)

        logger.info(f"COMMAND: {self.command.name} {self.action}")
        logger.info(f"EMITTER: {self.emitter.name}")
        logger.debug(f"RUN: {self.run.to_dict()}")

    def echo(self) -> dict:
        """resolved configuration as written into reports"""
        run = self.run.to_dict()
        # the thread count never changes results
        run.pop("threads", None)
        return {"run": run, "configurations": {self.command.name: self.config.get(self.command.name, {})}}

    def read_yaml(self, yaml_filename: str) -> dict:
        if not os.path.isfile(yaml_filename): raise UsageError(f"configuration file not found: {yaml_filename}")
        with open(yaml_filename, "r", encoding="utf-8") as inf:
            try: return yaml.safe_load(inf) or {}
            except yaml.YAMLError as e: raise UsageError(f"cannot parse configuration file {yaml_filename}: {e}")
