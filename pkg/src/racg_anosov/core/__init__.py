from .errors import RacgError, DomainError, LimitExceeded, CertificationFailure, UsageError
from .context import RunContext
from .step import Step
from .report import Report

# cannot import RunOrchestrator/Config to avoid circular dep
# from .orchestrator import RunOrchestrator
# from .config import Config
