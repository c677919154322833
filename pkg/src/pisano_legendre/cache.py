"""Append-only JSON-lines memo of prime classifications.

One line per ``(a, b, p)``::

    {"a": 0, "b": 1, "p": 11, "period": 10, "l_minus": 4, "l_zero": 1, "l_plus": 5, "k": 0}

The cache never changes results: a record that fails its consistency check
is ignored and recomputed.
"""

from __future__ import annotations

import json
import logging
import os
import threading
from pathlib import Path

from .numtheory import InitialPair, PLRecord

log = logging.getLogger(__name__)

CACHE_ENV = "PISANO_LEGENDRE_CACHE"

FIELDS = ("a", "b", "p", "period", "l_minus", "l_zero", "l_plus", "k")


def record_to_line(rec: PLRecord) -> str:
    row = {
        "a": rec.pair.a,
        "b": rec.pair.b,
        "p": rec.p,
        "period": rec.period,
        "l_minus": rec.l_minus,
        "l_zero": rec.l_zero,
        "l_plus": rec.l_plus,
        "k": rec.k,
    }
    return json.dumps(row, separators=(", ", ": "))


def record_from_line(line: str) -> PLRecord:
    row = json.loads(line)
    rec = PLRecord(
        p=int(row["p"]),
        pair=InitialPair(int(row["a"]), int(row["b"])),
        period=int(row["period"]),
        l_minus=int(row["l_minus"]),
        l_zero=int(row["l_zero"]),
        l_plus=int(row["l_plus"]),
    )
    rec.check()
    if rec.k != int(row["k"]):
        raise ValueError("stored k disagrees with the counts")
    return rec


class ClassificationCache:
    """In-memory view of a cache file plus the records added since loading."""

    def __init__(self, path=None):
        self.path = Path(path) if path is not None else None
        self._records: dict[tuple[int, int, int], PLRecord] = {}
        self._pending: list[PLRecord] = []
        self._lock = threading.Lock()
        if self.path is not None and self.path.exists():
            self._load()

    @classmethod
    def from_env(cls):
        path = os.environ.get(CACHE_ENV)
        return cls(path) if path else None

    def _load(self):
        with open(self.path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, 1):
                line = line.strip()
                if not line:
                    continue
                try:
                    rec = record_from_line(line)
                except (ValueError, KeyError, TypeError) as exc:
                    log.warning("%s:%d: skipping bad cache line (%s)", self.path, lineno, exc)
                    continue
                self._records[(rec.pair.a, rec.pair.b, rec.p)] = rec

    def __len__(self):
        return len(self._records)

    def get(self, pair: InitialPair, p: int):
        return self._records.get((pair.a, pair.b, p))

    def put(self, rec: PLRecord) -> None:
        key = (rec.pair.a, rec.pair.b, rec.p)
        with self._lock:
            if key not in self._records:
                self._records[key] = rec
                self._pending.append(rec)

    def flush(self) -> int:
        """Append pending records to the file; returns how many were written."""
        with self._lock:
            pending, self._pending = self._pending, []
            if self.path is None or not pending:
                return 0
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with open(self.path, "a", encoding="utf-8") as fh:
                for rec in pending:
                    fh.write(record_to_line(rec) + "\n")
            return len(pending)
