from __future__ import annotations

from typing import TYPE_CHECKING

from rich.console import Console
from rich.table import Table

from schemas.enums import OutputFormat
from schemas.models import (
    CountermodelCertificate,
    CountervaluationCertificate,
    EvalReport,
    ModelDocument,
    SmtReport,
    VerdictReport,
)

if TYPE_CHECKING:
    from pydantic import BaseModel


def _model_table(doc: ModelDocument, title: str) -> Table:
    names = sorted({name for values in doc.valuation.values() for name in values})
    table = Table(title=title)
    table.add_column("world")
    table.add_column("successors")
    for name in names:
        table.add_column(name, justify="right")

    for world in doc.worlds:
        successors = ", ".join(v for u, v in doc.relation if u == world)
        values = doc.valuation.get(world, {})
        table.add_row(world, successors or "-", *(values.get(name, "0") for name in names))
    return table


class Renderer:
    """Prints reports: indented JSON for `--json`, rich tables otherwise. Logs never go to stdout."""

    def __init__(self, output: OutputFormat, console: Console | None = None) -> None:
        self._output = output
        self._console = console or Console(highlight=False)

    def show(self, report: BaseModel) -> None:
        if self._output == OutputFormat.JSON:
            self._console.out(report.model_dump_json(indent=4), highlight=False)
            return

        match report:
            case VerdictReport():
                self._show_verdict(report)
            case EvalReport(world=world, formula=formula, value=value):
                self._console.out(f"e({world}, {formula}) = {value}")
            case SmtReport(script=str(script)):
                self._console.out(script, end="")
            case _:
                self._show_fields(report)

    def _show_verdict(self, report: VerdictReport) -> None:
        line = report.verdict.value if report.bound is None else f"{report.verdict.value} ({report.bound})"
        self._console.out(line)
        if isinstance(report.countermodel, CountermodelCertificate):
            cert = report.countermodel
            self._console.print(_model_table(cert.model, f"countermodel at {cert.world}"))
            self._console.out(f"premises: {', '.join(cert.premise_values) or '-'}")
            self._console.out(f"conclusion: {cert.conclusion_value}")
        if isinstance(report.countervaluation, CountervaluationCertificate):
            table = Table(title=f"countervaluation, gap {report.countervaluation.gap}")
            table.add_column("variable")
            table.add_column("value", justify="right")
            for name, value in report.countervaluation.valuation.items():
                table.add_row(name, value)
            self._console.print(table)

    def _show_fields(self, report: BaseModel) -> None:
        table = Table(show_header=False)
        table.add_column("field", style="bold")
        table.add_column("value")
        for name, value in report.model_dump(mode="json").items():
            table.add_row(name, str(value))
        self._console.print(table)
