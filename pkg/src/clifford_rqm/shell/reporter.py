"""Markdown verification report generation."""

from __future__ import annotations

from collections import Counter
from pathlib import Path

from .models import CheckKind, CheckResult, SuiteRun


def generate_report(run: SuiteRun, output_dir: str | Path) -> Path:
    """Generate a markdown report for a completed suite run.

    Args:
        run: Completed SuiteRun with results.
        output_dir: Directory to write the report file.

    Returns:
        Path to the generated report file.
    """
    lines: list[str] = []
    _write_header(lines, run)
    _write_summary(lines, run)
    _write_results_table(lines, run)
    _write_errata(lines, run)
    _write_notes(lines, run)

    directory = Path(output_dir)
    directory.mkdir(parents=True, exist_ok=True)
    timestamp = run.timestamp.strftime("%Y-%m-%d-%H%M%S")
    filepath = directory / f"verification-{timestamp}.md"
    filepath.write_text("\n".join(lines), encoding="utf-8")
    return filepath


def _write_header(lines: list[str], run: SuiteRun) -> None:
    lines.append(f"# Verification Report: {run.suite}")
    lines.append("")
    lines.append(f"**Date**: {run.timestamp.strftime('%Y-%m-%d %H:%M:%S')}")
    lines.append(f"**Run**: {run.id}")
    lines.append(f"**Tolerance**: {run.tolerance:g}")
    lines.append(f"**Status**: {'PASS' if run.passed else 'FAIL'}")
    lines.append("")


def _write_summary(lines: list[str], run: SuiteRun) -> None:
    """Pass counts per check kind."""
    totals: Counter[CheckKind] = Counter(r.kind for r in run.results)
    passed: Counter[CheckKind] = Counter(r.kind for r in run.results if r.passed)

    lines.append("## Summary")
    lines.append("")
    lines.append("| Check | Passed | Total |")
    lines.append("|-------|--------|-------|")
    for kind in CheckKind:
        if totals[kind]:
            lines.append(f"| {kind.value} | {passed[kind]} | {totals[kind]} |")
    lines.append(f"| **all** | {sum(passed.values())} | {len(run.results)} |")
    lines.append("")


def _write_results_table(lines: list[str], run: SuiteRun) -> None:
    lines.append("## Checks")
    lines.append("")
    lines.append("| Check | Kind | Result | Detail | Time |")
    lines.append("|-------|------|--------|--------|------|")
    for result in run.results:
        status = "pass" if result.passed else "**FAIL**"
        lines.append(
            f"| {result.name} | {result.kind.value} | {status} | {result.detail} | {result.elapsed:.2f}s |"
        )
    lines.append("")


def _write_errata(lines: list[str], run: SuiteRun) -> None:
    """List every recorded mismatch, expected or not."""
    with_errata = [r for r in run.results if r.errata]
    if not with_errata:
        return
    lines.append("## Errata")
    lines.append("")
    for result in with_errata:
        _write_result_errata(lines, result)


def _write_result_errata(lines: list[str], result: CheckResult) -> None:
    expected = "expected" if result.passed else "unexpected"
    lines.append(f"### {result.name} ({expected})")
    lines.append("")
    for erratum in result.errata:
        lines.append(f"- {erratum}")
    lines.append("")


def _write_notes(lines: list[str], run: SuiteRun) -> None:
    notes = [(r.name, note) for r in run.results for note in r.notes]
    if not notes:
        return
    lines.append("## Presentation Notes")
    lines.append("")
    for name, note in notes:
        lines.append(f"- {name}: {note}")
    lines.append("")
