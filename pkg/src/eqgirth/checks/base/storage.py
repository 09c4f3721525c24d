"""Report storage for verification runs.

This module provides the ReportStorage writer, which persists a report as JSON
and the named tables of a check as CSV files in the output directory.
"""

import json
import logging
import math
from pathlib import Path
from typing import Any

import pandas as pd

from eqgirth.checks.base.schema import Report
from eqgirth.conf import settings

logger = logging.getLogger(__name__)

FLOAT_FORMAT = ".17g"
INDENT = "  "


def format_float(value: float) -> str:
    """JSON number with 17 significant digits; non-finite values become null.

    Examples:
        >>> format_float(1 / 3)
        '0.33333333333333331'
        >>> format_float(2.0)
        '2.0'
    """
    if not math.isfinite(value):
        return "null"
    text = format(value, FLOAT_FORMAT)
    return text if any(c in text for c in ".e") else f"{text}.0"


def encode_json(value: Any, level: int = 0) -> str:
    """Indented JSON text of a dumped report, writing every float with `format_float`."""
    pad, inner = INDENT * level, INDENT * (level + 1)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = ",\n".join(f"{inner}{json.dumps(key, ensure_ascii=False)}: {encode_json(item, level + 1)}" for key, item in value.items())
        return f"{{\n{items}\n{pad}}}"
    if isinstance(value, list | tuple):
        if not value:
            return "[]"
        items = ",\n".join(f"{inner}{encode_json(item, level + 1)}" for item in value)
        return f"[\n{items}\n{pad}]"
    if isinstance(value, float):
        return format_float(value)
    return json.dumps(value, ensure_ascii=False)


class ReportStorage:
    """Writer for JSON reports and CSV dumps.

    Attributes:
        _out_dir: Directory the files are written to.
    """

    def __init__(self, out_dir: Path | None = None) -> None:
        """Initialize the storage.

        Args:
            out_dir: Output directory (defaults to ``settings.OUT_DIR``).
        """
        self._out_dir = out_dir or settings.OUT_DIR

    @property
    def out_dir(self) -> Path:
        return self._out_dir

    def write_report(self, report: Report) -> Path:
        """Write the report as ``<subcommand>.json``.

        Returns:
            The path of the JSON file.
        """
        self._out_dir.mkdir(parents=True, exist_ok=True)
        path = self._out_dir / f"{report.subcommand}.json"
        path.write_text(encode_json(report.model_dump(mode="json", by_alias=True)) + "\n")
        logger.info("report written to %s", path)
        return path

    def write_tables(self, tables: dict[str, pd.DataFrame]) -> list[Path]:
        """Write every table as ``<name>.csv`` with a header row and no index.

        Returns:
            The paths of the CSV files.
        """
        self._out_dir.mkdir(parents=True, exist_ok=True)
        paths = []
        for name, df in tables.items():
            path = self._out_dir / f"{name}.csv"
            df.to_csv(path, index=False)
            paths.append(path)
        return paths
