"""Exceptions shared across the pipeline."""

from __future__ import annotations


class Rejected(Exception):
    """The input is not optimal 2-planar; ``stage`` and ``reason`` are stable codes."""

    def __init__(self, stage: str, reason: str, witness: object = None):
        super().__init__(f"{stage} {reason}" + ("" if witness is None else f" {witness}"))
        self.stage = stage
        self.reason = reason
        self.witness = witness

    def line(self) -> str:
        parts = ["reject", self.stage, self.reason]
        if self.witness is not None:
            parts.append(format_witness(self.witness))
        return " ".join(parts)


def format_witness(witness: object) -> str:
    if isinstance(witness, (tuple, list)):
        return ",".join(str(x) for x in witness)
    return str(witness)


class ParseError(ValueError):
    """A document could not be parsed; the message names the line or field."""

    def __init__(self, message: str, line: int | None = None, field: str | None = None):
        where = []
        if line is not None:
            where.append(f"line {line}")
        if field is not None:
            where.append(f"field {field}")
        super().__init__(f"{', '.join(where)}: {message}" if where else message)
        self.line = line
        self.field = field
