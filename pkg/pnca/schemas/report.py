from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from .. import __version__
from ..config import settings


@dataclass
class ReportDocument:
    command: str
    inputs: Dict[str, Any] = field(default_factory=dict)
    outputs: Any = None
    artifact_version: str = __version__

    def to_dict(self) -> Dict[str, Any]:
        # key 順序固定；不放時間戳，同樣輸入輸出的 JSON 逐 byte 相同
        return {
            "command": self.command,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "artifact_version": self.artifact_version,
        }

    def to_json(self, indent: Optional[int] = None) -> str:
        return dump_json(self.to_dict(), indent=settings.OUTPUT_INDENT if indent is None else indent)


def dump_json(payload: Any, indent: Optional[int] = None) -> str:
    """indent=None 時輸出單行 compact JSON。"""
    if indent is None:
        return json.dumps(payload, ensure_ascii=False, separators=(",", ":"))
    return json.dumps(payload, ensure_ascii=False, indent=indent)
