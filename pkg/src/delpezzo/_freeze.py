"""Frozen regression values: a key=value store with compare-or-record modes.

The CLI freezes every scalar it derives (counts, line totals, grid maxima)
under a stable key.  ``--freeze`` records; normal runs compare against keys
already present and fail loudly on drift.  Values are decimal strings
(integers, or Fractions as ``p/q``) so the file is diff-friendly and carries
no float noise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

__all__ = ["DEFAULT_FROZEN_PATH", "FrozenStore"]

DEFAULT_FROZEN_PATH = Path(__file__).parent / "data" / "frozen.txt"

_HEADER = (
    "# delpezzo frozen regression values (decimal; Fractions as p/q)\n"
    "# written by `delpezzo <cmd> --freeze`; normal runs compare and fail on drift\n"
)


@dataclass
class FrozenStore:
    """In-memory view of a frozen-values file.

    ``check`` either records (freeze mode) or compares (normal mode); keys
    absent from the file are never an error, so new commands can run before
    their constants have been frozen.
    """

    path: Path
    freeze: bool = False
    entries: dict[str, str] = field(default_factory=dict)
    mismatches: list[str] = field(default_factory=list)
    dirty: bool = False

    @classmethod
    def load(cls, path: str | Path, *, freeze: bool = False) -> "FrozenStore":
        path = Path(path)
        entries: dict[str, str] = {}
        if path.exists():
            for line in path.read_text(encoding="utf-8").splitlines():
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                key, _, value = line.partition("=")
                entries[key.strip()] = value.strip()
        return cls(path=path, freeze=freeze, entries=entries)

    def check(self, key: str, value: object) -> None:
        text = str(value)
        if self.freeze:
            if self.entries.get(key) != text:
                self.entries[key] = text
                self.dirty = True
        elif key in self.entries and self.entries[key] != text:
            self.mismatches.append(
                f"{key}: frozen={self.entries[key]} computed={text}"
            )

    def flush(self) -> None:
        if not (self.freeze and self.dirty):
            return
        body = "".join(f"{k}={self.entries[k]}\n" for k in sorted(self.entries))
        self.path.parent.mkdir(parents=True, exist_ok=True)
        self.path.write_text(_HEADER + body, encoding="utf-8")
