import sys
from typing import Optional, Sequence
from loguru import logger

from . import Config
from . import RunOrchestrator
from .core import UsageError
from .core.orchestrator import EXIT_USAGE


def main(argv: Optional[Sequence[str]] = None) -> int:
    config = Config()
    try:
        config.parse(argv)
    except SystemExit as e:
        # argparse already printed the usage line
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    except UsageError as e:
        logger.error(f"usage error: {e}")
        return EXIT_USAGE
    logger.remove()
    logger.add(sys.stderr, level=config.run.log_level.upper())
    return RunOrchestrator(config).run()


if __name__ == "__main__":
    sys.exit(main())
