#!/usr/bin/env python3
"""
Reports
The single output document of a command, rendered as JSON or as a rich table.
Field order is fixed so identical inputs give byte-identical reports.
"""

import json
import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from rich.console import Console
from rich.table import Table

from core.exceptions import ConfigurationError, DualityError, RegexSyntaxError, SchemaError

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2

# Errors in what the user supplied, as opposed to failed checks.
INPUT_ERRORS = (SchemaError, ConfigurationError, RegexSyntaxError)


@dataclass
class Report:
    command: str
    source: Optional[str] = None
    kind: Optional[str] = None
    result: Dict[str, Any] = field(default_factory=dict)
    error: Optional[Dict[str, Any]] = None
    exit_code: int = EXIT_OK

    @property
    def status(self) -> str:
        return {EXIT_OK: "ok", EXIT_FAILED: "failed"}.get(self.exit_code, "input-error")

    def fail(self, error: DualityError) -> "Report":
        self.error = error.to_dict()
        self.exit_code = EXIT_INPUT if isinstance(error, INPUT_ERRORS) else EXIT_FAILED
        return self

    def to_dict(self) -> Dict[str, Any]:
        out: Dict[str, Any] = {"command": self.command}
        if self.source is not None:
            out["input"] = self.source
        if self.kind is not None:
            out["kind"] = self.kind
        out["status"] = self.status
        out["exit_code"] = self.exit_code
        if self.result:
            out["result"] = self.result
        if self.error is not None:
            out["error"] = self.error
        return out


def render_json(report: Report) -> str:
    return json.dumps(report.to_dict(), indent=2, ensure_ascii=False) + "\n"


def _cell(value: Any) -> str:
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False, separators=(",", ":"))
    return str(value)


def render_table(report: Report, console: Console) -> None:
    status_style = "green" if report.exit_code == EXIT_OK else "red"
    table = Table(title=f"finite-duality {report.command}")
    table.add_column("Field", style="cyan")
    table.add_column("Value", overflow="fold")
    for key, value in report.to_dict().items():
        if key == "result":
            for name, item in value.items():
                table.add_row(f"result.{name}", _cell(item))
        elif key == "status":
            table.add_row(key, f"[{status_style}]{value}[/{status_style}]")
        else:
            table.add_row(key, _cell(value))
    console.print(table)


def emit(
    report: Report,
    fmt: str = "json",
    quiet: bool = False,
    out: Optional[str] = None,
    console: Optional[Console] = None,
) -> None:
    """Write the report to out, or to stdout through the console."""
    console = console or Console()
    if quiet:
        text = report.status + "\n"
    elif fmt == "json" or out is not None:
        text = render_json(report)
    else:
        render_table(report, console)
        return
    if out is not None:
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
        logger.info(f"Report written to {out}")
    else:
        console.file.write(text)
