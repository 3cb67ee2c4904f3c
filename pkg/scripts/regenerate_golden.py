#!/usr/bin/env python3
"""Recompute the n <= 2 golden census values with the naive oracle.

The oracle (tests/naive_oracle.py) shares no code with the package.  Its
output is what tests/test_search.py freezes; run this after touching the
definitions to see whether the frozen numbers still hold.
"""
import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "tests"))

import naive_oracle  # noqa: E402

for n in (1, 2):
    total, counts, theorems = naive_oracle.census(n)
    print(json.dumps({"n": n, "total": total, "counts": counts, "theorems": theorems}, sort_keys=True, indent=1))
