from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

MAX_SIZE_LIMIT = 8


@dataclass(frozen=True)
class RunConfig:
    max_enumeration_size: int = 5
    worker_count: int = 1
    output_format: str = "text"
    corpus_dir: Path | None = None

    def __post_init__(self):
        if not 1 <= self.max_enumeration_size <= MAX_SIZE_LIMIT:
            raise ValueError(f"max_enumeration_size must be in 1..{MAX_SIZE_LIMIT}")
        if self.worker_count < 1:
            raise ValueError("worker_count must be at least 1")
        if self.output_format not in ("text", "json"):
            raise ValueError("output_format must be 'text' or 'json'")
