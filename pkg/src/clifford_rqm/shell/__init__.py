"""Golden documents, verification suites, serialization and the CLI."""

from .documents import (
    dumps,
    pauli_document,
    pauli_latex,
    present_system,
    schrodinger_document,
    schrodinger_latex,
    system_document,
    system_latex,
)
from .golden import GoldenFile, dump_golden, dump_rep, golden_from_rep, load_golden, parse_golden, rep_document
from .loader import ValidationError, load_suite
from .models import CheckKind, CheckResult, SuiteRun, VerificationSuite
from .reporter import generate_report
from .runner import SYSTEM_BUILDERS, named_system, run_suite
from .verify import (
    Erratum,
    ErrataReport,
    PresentationNote,
    computed_rep,
    resolve_golden_paths,
    verify_against_golden,
    verify_golden_file,
)

__all__ = [
    "SYSTEM_BUILDERS",
    "CheckKind",
    "CheckResult",
    "ErrataReport",
    "Erratum",
    "GoldenFile",
    "PresentationNote",
    "SuiteRun",
    "ValidationError",
    "VerificationSuite",
    "computed_rep",
    "dump_golden",
    "dump_rep",
    "dumps",
    "generate_report",
    "golden_from_rep",
    "load_golden",
    "load_suite",
    "named_system",
    "parse_golden",
    "pauli_document",
    "pauli_latex",
    "present_system",
    "rep_document",
    "resolve_golden_paths",
    "run_suite",
    "schrodinger_document",
    "schrodinger_latex",
    "system_document",
    "system_latex",
    "verify_against_golden",
    "verify_golden_file",
]
