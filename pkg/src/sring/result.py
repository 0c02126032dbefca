"""Tiny result record shared by the check operations."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    """Outcome of a single verification.

    ``ok`` is the verdict, ``detail`` a human-readable note (first violation,
    or why the check did not apply). ``applicable`` is False when the check's
    hypothesis was not met; such results count as vacuously ok.
    """

    ok: bool
    detail: str = ""
    applicable: bool = True

    def __bool__(self) -> bool:
        return self.ok
