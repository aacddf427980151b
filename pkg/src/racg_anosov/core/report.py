from __future__ import annotations
import json, math, re
from dataclasses import dataclass, field
from typing import Any, List, Optional
import numpy as np
import sympy as sp
from dataclasses_json import dataclass_json

from ..version import __version__, SCHEMA_VERSION

_FLOAT = re.compile(r'"__float__([^"]*)__"')


def _float_text(x: float) -> Optional[str]:
    if not math.isfinite(x): return None
    text = format(x, ".17g")
    return text if any(c in text for c in ".e") else text + ".0"


def plain(o: Any) -> Any:
    """
    JSON-ready copy: exact rationals as "p/q" strings, numpy containers as lists and floats
    replaced by markers that to_json turns into 17 significant digits (non-finite floats become null)
    """
    if isinstance(o, (bool, np.bool_)): return bool(o)
    if isinstance(o, (int, np.integer)): return int(o)
    if isinstance(o, (float, np.floating)):
        text = _float_text(float(o))
        return None if text is None else f"__float__{text}__"
    if isinstance(o, sp.Basic): return str(o)
    if isinstance(o, dict): return {str(k): plain(v) for k, v in o.items()}
    if isinstance(o, (list, tuple)): return [plain(v) for v in o]
    if isinstance(o, np.ndarray): return plain(o.tolist())
    if hasattr(o, "to_dict"): return plain(o.to_dict())
    return o


def to_json(document: Any) -> str:
    return _FLOAT.sub(lambda m: m.group(1), json.dumps(plain(document), ensure_ascii=False, indent=2)) + "\n"


@dataclass_json  # annotation order matters
@dataclass
class Report:
    command: str
    action: str
    payload: dict = field(default_factory=dict)
    config: dict = field(default_factory=dict)
    seeds: dict = field(default_factory=dict)
    rows: Optional[List[list]] = None
    header: Optional[List[str]] = None
    status: str = "ok"
    schema_version: str = SCHEMA_VERSION
    tool_version: str = __version__

    def document(self) -> dict:
        # fixed key order: metadata first, then the payload
        return {
            "schema_version": self.schema_version,
            "tool_version": self.tool_version,
            "command": self.command,
            "action": self.action,
            "status": self.status,
            "config": self.config,
            "seeds": self.seeds,
            "payload": self.payload,
        }

    def json(self) -> str: return to_json(self.document())

    def csv_cell(self, v: Any) -> str:
        if isinstance(v, (float, np.floating)): return _float_text(float(v)) or ""
        v = plain(v)
        return "" if v is None else str(v)
