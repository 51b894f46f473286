"""Acceptance criteria 1 to 13, one test each.

Each test prints a PASS or FAIL line; the lines are collected in the
terminal summary.  Run as a script to print the lines without pytest.
"""

import time

import pytest

from dycknest import checks

import conftest


def evaluate(number: int) -> tuple[bool, str]:
    check = checks.CRITERIA[number]
    start = time.perf_counter()
    try:
        outcome = check.fn(None, checks.DEFAULT_SEED)
        ok, witness = outcome.ok, outcome.witness
    except Exception as exc:  # a crash is a failure with the exception as witness
        ok, witness = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    verdict = "PASS" if ok else "FAIL"
    line = f"{verdict} criterion {check.name} ({elapsed:.2f} s)"
    if witness:
        line += f" - {witness}"
    return ok, line


@pytest.mark.parametrize("number", sorted(checks.CRITERIA))
def test_criterion(number):
    ok, line = evaluate(number)
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


if __name__ == "__main__":
    lines = [evaluate(n)[1] for n in sorted(checks.CRITERIA)]
    print("\n".join(lines))
    raise SystemExit(0 if all(ln.startswith("PASS") for ln in lines) else 1)
