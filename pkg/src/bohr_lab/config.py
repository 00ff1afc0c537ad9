"""Run settings, optionally read from a ``key = value`` file."""
from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass
from pathlib import Path

from .powerseries import DEFAULT_ORDER


@dataclass
class Settings:
    order: int = DEFAULT_ORDER
    scan_tol: float = 1e-12
    margin: float = 1e-9
    seed: int = 0
    samples: int = 50
    grid: int = 201
    threads: int = 1

    @classmethod
    def from_file(cls, path: str | Path | None) -> "Settings":
        s = cls()
        if path is not None:
            s.update(parse_kv(Path(path).read_text()))
        env = os.environ.get("BOHR_LAB_THREADS")
        if env:
            s.threads = max(1, int(env))
        return s

    def update(self, values: dict) -> None:
        types = {f.name: f.type for f in dataclasses.fields(self)}
        for key, raw in values.items():
            if key not in types:
                raise ValueError(f"unknown setting {key!r}; known: {sorted(types)}")
            cast = int if types[key] in (int, "int") else float
            setattr(self, key, cast(raw))


def parse_kv(text: str) -> dict[str, str]:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    out = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"line {lineno}: expected key = value, got {line!r}")
        key, value = (part.strip() for part in line.split("=", 1))
        out[key.replace("-", "_")] = value
    return out
