"""Reading networks from either text format."""
from __future__ import annotations

import re
from pathlib import Path

from ..core import BooleanNetwork, ParseError, parse_truth_table
from .parser import parse_network

_TABLE_ROW = re.compile(r"^[01]+\s+[01]+$")


def detect_format(text: str) -> str:
    """'table' when the first line after the header is a bit-string row, else 'expression'."""
    seen_header = False
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if not seen_header:
            seen_header = True
            continue
        return "table" if _TABLE_ROW.match(line) else "expression"
    return "expression"


def loads_network(text: str) -> BooleanNetwork:
    if detect_format(text) == "table":
        return parse_truth_table(text)
    return parse_network(text)


def load_network(path: str | Path) -> BooleanNetwork:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None
    return loads_network(text)
