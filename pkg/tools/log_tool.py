"""Ingestion of timestamped activity logs.

A log is a CSV file with header ``event_id,label,begin,end,open_left,
open_right``; each row is the activity interval of one event. Open ends mark
events already running when the log starts (source interface) or still
running when it stops (target interface).
"""

import csv
from decimal import Decimal
from pathlib import Path
from typing import Literal

from pydantic import BaseModel, ValidationError

from context import CommandContext
from errors import MalformedInterval, ParseError
from ipomsets.core import Ipomset
from ipomsets.formats import to_block, to_document, to_expression
from ipomsets.intervals import EventInterval, IntervalRep, from_intervals
from tools.registry import arg, command

COLUMNS = ("event_id", "label", "begin", "end", "open_left", "open_right")


class LogRecord(BaseModel):
    event_id: str
    label: str
    begin: Decimal
    end: Decimal
    open_left: bool = False
    open_right: bool = False


def ingest_log(records: list[LogRecord], tie_break: Literal["begin", "input"] = "begin") -> Ipomset:
    """Interval precedence from the timestamps; event order between
    overlapping events by ascending begin then input order, or by input
    order alone."""
    if tie_break == "begin":
        order = sorted(range(len(records)), key=lambda i: (records[i].begin, i))
    else:
        order = list(range(len(records)))
    rank = {i: r for r, i in enumerate(order)}
    for record in records:
        if record.begin > record.end:
            raise MalformedInterval(record.event_id, record.begin, record.end)
    rep = IntervalRep(
        events=tuple(
            EventInterval(
                label=record.label,
                begin=record.begin,
                end=record.end,
                open_left=record.open_left,
                open_right=record.open_right,
                rank=rank[i],
            )
            for i, record in enumerate(records)
        )
    )
    return from_intervals(rep)


def read_log(path: str | Path) -> list[LogRecord]:
    path = Path(path)
    records = []
    with path.open(newline="", encoding="utf-8") as f:
        reader = csv.DictReader(f)
        if tuple(reader.fieldnames or ()) != COLUMNS:
            raise ParseError(str(path), 1, f"expected columns {','.join(COLUMNS)}")
        for row in reader:
            try:
                records.append(LogRecord(**row))
            except ValidationError as exc:
                raise ParseError(str(path), reader.line_num, exc.errors()[0]["msg"]) from exc
    return records


@command(
    "log", "ingest",
    "Turn a CSV activity log into its canonical ipomset.",
    (
        arg("file"),
        arg("--tie-break", choices=("begin", "input"), help="event order between overlapping events"),
    ),
)
async def IngestTool(ctx: CommandContext, args) -> int:
    """Turn a CSV activity log into its canonical ipomset."""
    P = ingest_log(read_log(args.file), args.tie_break or ctx.tie_break)
    if ctx.json_output:
        ctx.emit_json(to_document(P))
    else:
        expression = to_expression(P)
        ctx.emit(expression if expression is not None else to_block(P, Path(args.file).stem))
    return 0
