"""CSV/JSON serialization shared by the CLI and scripts."""

from __future__ import annotations

import csv
import dataclasses
import io
import json
import math
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence, TextIO

from .errors import DomainError


class EventFileError(DomainError):
    """Malformed events file; carries the offending 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


@dataclass(frozen=True)
class EventRecord:
    mu: float
    label: str = ""


def write_rows(rows: Iterable[dict], columns: Sequence[str], out: TextIO) -> None:
    writer = csv.DictWriter(out, fieldnames=list(columns), lineterminator="\n", extrasaction="raise")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: row.get(c, "") for c in columns})


def read_rows(source: str | Path | TextIO) -> list[dict]:
    """Parse a CSV emitted by this package back into dicts of strings.

    ``source`` is a path, an open file, or CSV text (any string holding a
    newline). Reading stops at the first blank line, so trailing status text after a
    table is ignored.
    """
    if isinstance(source, Path) or (isinstance(source, str) and "\n" not in source):
        text = Path(source).read_text()
    elif isinstance(source, str):
        text = source
    else:
        text = source.read()
    body = text.split("\n\n", 1)[0]
    return list(csv.DictReader(io.StringIO(body)))


def read_events(source: str | Path | TextIO, t_cap: float | None = None) -> list[EventRecord]:
    """Read an events CSV with header ``mu,label`` (label optional).

    mu must be finite, positive, strictly increasing and at most ``t_cap``.
    """
    if isinstance(source, (str, Path)):
        text = Path(source).read_text()
    else:
        text = source.read()
    lines = text.splitlines()
    if not lines or not lines[0].strip():
        return []
    header = [h.strip() for h in next(csv.reader([lines[0]]))]
    if "mu" not in header:
        raise EventFileError(1, f"header must contain 'mu', got {header}")
    i_mu = header.index("mu")
    i_label = header.index("label") if "label" in header else None
    out: list[EventRecord] = []
    for lineno, fields in enumerate(csv.reader(lines[1:]), start=2):
        if not fields or all(not f.strip() for f in fields):
            continue
        try:
            mu = float(fields[i_mu])
        except (IndexError, ValueError):
            raise EventFileError(lineno, f"cannot parse mu from {fields!r}") from None
        if not math.isfinite(mu) or mu <= 0:
            raise EventFileError(lineno, f"mu must be positive and finite, got {mu}")
        if out and mu <= out[-1].mu:
            raise EventFileError(lineno, f"mu {mu} does not increase past {out[-1].mu}")
        if t_cap is not None and mu > t_cap:
            raise EventFileError(lineno, f"mu {mu} exceeds surveillance length {t_cap}")
        label = fields[i_label].strip() if i_label is not None and i_label < len(fields) else ""
        out.append(EventRecord(mu, label))
    return out


def _enc(obj) -> str:
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        obj = {f.name: getattr(obj, f.name) for f in dataclasses.fields(obj) if f.repr}
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, float):
        if not math.isfinite(obj):
            return "null"
        text = format(obj, ".17g")
        return text if any(ch in text for ch in ".e") else text + ".0"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_enc(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_enc(v) for v in obj) + "]"
    if hasattr(obj, "item"):
        return _enc(obj.item())
    raise TypeError(f"cannot encode {type(obj).__name__}")


def to_json(obj) -> str:
    """JSON text with every float written to 17 significant digits."""
    return _enc(obj)
