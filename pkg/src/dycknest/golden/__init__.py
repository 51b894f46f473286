"""Plain-text expectation files for the printed reference tables and sequences."""

from __future__ import annotations

from importlib import resources


def lines(name: str) -> list[str]:
    """Non-comment, non-blank lines of a golden file."""
    text = resources.files(__package__).joinpath(name).read_text()
    return [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]


def rows(name: str) -> list[list[str]]:
    return [ln.split() for ln in lines(name)]
