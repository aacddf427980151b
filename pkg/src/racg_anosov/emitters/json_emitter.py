from . import Emitter
from ..core import Report


class JsonEmitter(Emitter):
    name = "json"

    def __init__(self, config: dict) -> None:
        # without this STEP.__init__ is not called
        super().__init__(config)

    def render(self, report: Report) -> str: return report.json()
