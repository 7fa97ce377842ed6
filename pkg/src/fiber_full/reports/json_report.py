"""
Deterministic JSON output.

Reports keep the key order their builders chose; nothing is sorted or reformatted here, so two runs
on the same input produce byte-identical text.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Optional, Union

from ..errors import InputError
from ..settings import SCHEMA_VERSION

logger = logging.getLogger(__name__)


def envelope(command: str, payload: Dict[str, Any]) -> Dict[str, Any]:
    """Prefix a command result with the schema version and the command name."""
    report: Dict[str, Any] = {"schema": SCHEMA_VERSION, "command": command}
    report.update({k: v for k, v in payload.items() if k != "schema"})
    return report


def dumps(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, ensure_ascii=False) + "\n"


def emit(text: str, out: Optional[Union[str, Path]] = None) -> None:
    """Print to stdout or write to ``out``."""
    if out is None:
        print(text, end="" if text.endswith("\n") else "\n")
        return
    try:
        Path(out).write_text(text if text.endswith("\n") else text + "\n", encoding="utf-8")
    except OSError as e:
        raise InputError(f"{out}: cannot write report ({e.strerror})") from e
    logger.info(f"Report written to {out}")
