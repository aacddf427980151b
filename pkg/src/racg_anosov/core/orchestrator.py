from __future__ import annotations
import traceback
from loguru import logger

from .config import Config
from .context import RunContext
from .errors import CertificationFailure, DomainError, UsageError
from .report import Report

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


class RunOrchestrator:
    def __init__(self, config: Config) -> None:
        self.config = config
        self.command = config.command
        self.emitter = config.emitter
        self.action = config.action

    def run(self) -> int:
        """
        Runs one command and emits its report, returning the process exit code
            1. reset the context, keeping the thread count
            2. run the command action into a Report
            3. embed the config echo and the consumed seeds
            4. emit; certification failures still emit their partial report
        """
        RunContext.reset()
        try:
            report = self.command.run(self.action, self.config.run)
            self.finish(report)
            return EXIT_OK
        except CertificationFailure as e:
            logger.error(f"{self.command.name} {self.action} failed: {e}\n{traceback.format_exc()}")
            if e.report is not None:
                self.finish(Report(self.command.name, self.action, e.report.to_dict(), rows=e.report.rows(), status="failed"))
            return EXIT_DOMAIN
        except DomainError as e:
            logger.error(f"{self.command.name} {self.action} failed: {e}\n{traceback.format_exc()}")
            return EXIT_DOMAIN
        except UsageError as e:
            logger.error(f"usage error: {e}")
            return EXIT_USAGE

    def finish(self, report: Report) -> None:
        report.config = self.config.echo()
        report.seeds = RunContext.get_seeds()
        self.emitter.emit(report, self.config.run.out)
        logger.success(f"{self.command.name} {self.action} done")
