"""Shared result records used by all pipelines and the CLI."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class HHReport:
    """One computed Hochschild cohomology dimension.

    method is "ginzburg" (small complex on the dg algebra), "trace"
    (preprojective trace space), or "zigzag" (reduced bar complex).
    Representatives, when present, are printable basis-word names whose
    classes span the group.
    """

    p: int
    q: int
    method: str
    dimension: int
    representatives: Optional[tuple[str, ...]] = None

    def __post_init__(self):
        if self.dimension < 0:
            raise ValueError("negative dimension")
