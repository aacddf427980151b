from . import racg, walls, vinberg, projgeom, anosov, commands, emitters, utils, core

# need to manually specify due to cyclical deps
from .core.orchestrator import RunOrchestrator
from .core.config import Config, RunConfig
# making accessible directly
from .core.report import Report
from .version import __version__
