"""Leaderboard persistence: one JSON object per line, append-only.

The file format is the interface: {"player", "score", "mode", "timestamp",
"sessionId"} in that key order, UTF-8, one entry per line. Serialization is
a pure function of the entry, so reload followed by rewrite reproduces the
file byte for byte.
"""

from __future__ import annotations

import json
import threading
from pathlib import Path

from .engine import ScoreEntry, SessionMode


def _line(entry: ScoreEntry) -> str:
    return json.dumps(entry.to_json(), ensure_ascii=False)


class RankingStore:
    """Append-only score log with a stable total order for display.

    Appends are serialized behind one lock and flushed line-atomically, so
    concurrent finishes land as whole lines and the line count equals the
    number of successful appends.
    """

    def __init__(self, path: str | Path):
        self.path = Path(path)
        self._lock = threading.Lock()
        self._entries: list[ScoreEntry] = []
        self.reload()

    def reload(self) -> list[ScoreEntry]:
        """Re-read the backing file, replacing in-memory state."""
        with self._lock:
            self._entries = []
            if self.path.exists():
                for line in self.path.read_text(encoding="utf-8").splitlines():
                    if line.strip():
                        self._entries.append(ScoreEntry.from_json(json.loads(line)))
            return list(self._entries)

    def append(self, entry: ScoreEntry) -> None:
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            with self.path.open("a", encoding="utf-8") as fh:
                fh.write(_line(entry) + "\n")
                fh.flush()
            self._entries.append(entry)

    def rewrite(self) -> None:
        """Serialize in-memory entries back out; a reload-rewrite is a no-op."""
        with self._lock:
            self.path.parent.mkdir(parents=True, exist_ok=True)
            text = "".join(_line(e) + "\n" for e in self._entries)
            self.path.write_text(text, encoding="utf-8")

    def entries(self) -> list[ScoreEntry]:
        with self._lock:
            return list(self._entries)

    def top(
        self, limit: int | None = None, mode: SessionMode | None = None
    ) -> list[ScoreEntry]:
        """Best scores first; ties go to the earlier timestamp (stable)."""
        pool = self.entries()
        if mode is not None:
            pool = [e for e in pool if e.mode is mode]
        pool.sort(key=lambda e: (-e.score, e.timestamp))
        return pool if limit is None else pool[:limit]

    def rank_of(self, entry: ScoreEntry) -> int:
        """1-based position of ``entry`` within its mode's ordering."""
        ordered = self.top(mode=entry.mode)
        for i, e in enumerate(ordered, start=1):
            if e.session_id == entry.session_id and e.timestamp == entry.timestamp:
                return i
        return len(ordered) + 1
