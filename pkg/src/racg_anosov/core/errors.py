class RacgError(Exception):
    """base class for every error raised on purpose by this package"""


class DomainError(RacgError):
    """invalid mathematical input or a violated precondition"""


class LimitExceeded(DomainError):
    """a configured cap (radius, depth, enumeration size...) would be exceeded"""


class CertificationFailure(DomainError):
    """
    a lemma-level check or an appendix incidence failed,
    the partially built report (if any) is kept in .report
    """

    def __init__(self, message: str, report=None) -> None:
        super().__init__(message)
        self.report = report


class UsageError(RacgError):
    """bad command line usage: unknown action, missing option"""
