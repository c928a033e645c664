"""Tiny shared result types for symbolic verification passes."""

from __future__ import annotations

from dataclasses import dataclass, field

__all__ = ["CheckEntry", "CheckReport"]


@dataclass
class CheckEntry:
    name: str
    ok: bool
    detail: str = ""


@dataclass
class CheckReport:
    """An ordered list of named pass/fail entries from one verification run."""

    entries: list[CheckEntry] = field(default_factory=list)

    def add(self, name: str, ok: bool, detail: str = "") -> None:
        self.entries.append(CheckEntry(name, bool(ok), detail))

    @property
    def ok(self) -> bool:
        return all(entry.ok for entry in self.entries)

    def failures(self) -> list[CheckEntry]:
        return [entry for entry in self.entries if not entry.ok]

    def __bool__(self) -> bool:
        return self.ok
