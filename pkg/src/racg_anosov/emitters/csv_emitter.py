import csv, io
from loguru import logger

from . import Emitter
from ..core import Report


class CsvEmitter(Emitter):
    """
        Writes the tabular part of a report (gap traces, margin traces, pairwise matrices),
        metadata goes into leading '#' comment lines
    """
    name = "csv"

    def __init__(self, config: dict) -> None:
        # without this STEP.__init__ is not called
        super().__init__(config)

    @staticmethod
    def configs() -> dict:
        return {
            "comments": {
                "default": True,
                "help": "prefix the table with '#' lines carrying versions and seeds",
                "cli_set": lambda cli_val, cur_val: str(cli_val).lower() in ("1", "true", "yes"),
            },
        }

    def render(self, report: Report) -> str:
        if report.rows is None:
            logger.warning(f"{report.command} {report.action} has no tabular output, writing the header only")
        out = io.StringIO()
        if self.comments:
            out.write(f"# schema_version={report.schema_version} tool_version={report.tool_version} command={report.command} action={report.action}\n")
            if report.seeds: out.write("# seeds=" + ",".join(f"{k}:{v}" for k, v in report.seeds.items()) + "\n")
        writer = csv.writer(out, lineterminator="\n")
        if report.header: writer.writerow(report.header)
        for row in report.rows or []: writer.writerow([report.csv_cell(v) for v in row])
        return out.getvalue()
