"""Command-line entry point.

Usage:
    clifford-rqm classify --n 4 --sig +++-
    clifford-rqm rep --algebra c4 --kind conjugate --form quaternion
    clifford-rqm verify --golden c3_direct.golden
    clifford-rqm equations --case free --generation 2 --emit latex
    clifford-rqm dispersion --mass 1 --p 0,0,0
    clifford-rqm suite
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from dotenv import load_dotenv

from clifford_rqm.algebra.blades import Signature
from clifford_rqm.algebra.clifford import classify, preset, structure_identity_defect
from clifford_rqm.dispersion.spectrum import DispersionRelation, Momentum, check_dispersion
from clifford_rqm.equations.lepton import antilepton_assemble, assemble_free_lepton, generation_permute
from clifford_rqm.equations.reductions import reduce_dirac, reduce_pauli, reduce_schrodinger
from clifford_rqm.equations.types import PhysicalParams
from clifford_rqm.exceptions import CliffordError, ConfigurationError
from clifford_rqm.representations.approximate import approx_rep, correspondence_map
from clifford_rqm.representations.regular import (
    RepForm,
    RepKind,
    regular_rep_conjugate,
    regular_rep_direct,
)
from clifford_rqm.utils.config import SUITE_DIR, Settings

from . import documents
from .golden import dump_rep
from .verify import computed_rep, resolve_golden_paths, verify_golden_file

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_ERROR = 2

# generation -> basic direction used to display it
GENERATION_BASIC = {1: "21", 2: "13", 3: "32"}


def _get_default_suite_path() -> Path:
    return SUITE_DIR / "reference.yaml"


def cmd_classify(args: argparse.Namespace, settings: Settings) -> int:
    print(classify(args.n, Signature.parse(args.sig)))
    return EXIT_OK


def cmd_build(args: argparse.Namespace, settings: Settings) -> int:
    """Print the basis, squares and Cayley table of a preset algebra as JSON."""
    algebra = preset(args.preset)
    products = []
    for left in algebra.labels:
        row = []
        for right in algebra.labels:
            sign, label = algebra.product(left, right)
            row.append(f"{'+' if sign > 0 else '-'}{label}")
        products.append(row)
    document = {
        "algebra": algebra.name,
        "n": algebra.n,
        "signature": str(algebra.signature),
        "classification": str(classify(algebra.n, algebra.signature)),
        "labels": list(algebra.labels),
        "squares": {label: algebra.square(label) for label in algebra.labels},
        "products": products,
        "structure_identity_defect": structure_identity_defect(algebra),
    }
    print(documents.dumps(document), end="")
    return EXIT_OK


def cmd_rep(args: argparse.Namespace, settings: Settings) -> int:
    rep = computed_rep(args.algebra, RepKind.parse(args.kind), RepForm.parse(args.form), args.basic)
    print(dump_rep(rep, args.format), end="")
    return EXIT_OK


def cmd_approx(args: argparse.Namespace, settings: Settings) -> int:
    algebra = preset("c4")
    base = regular_rep_conjugate(algebra) if args.conjugate else regular_rep_direct(algebra)
    rep = approx_rep(base, correspondence_map(args.map))
    print(dump_rep(rep, args.format), end="")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace, settings: Settings) -> int:
    """Compare golden files with the computation; exit 1 when any erratum remains."""
    status = EXIT_OK
    for path in resolve_golden_paths(args.golden, settings.golden_dir):
        report = verify_golden_file(path, basic=args.basic)
        verdict = "ok" if report.is_empty else f"{len(report)} errata"
        print(f"{path.name}: {verdict}")
        for erratum in report.errata:
            print(f"  {erratum}")
        for note in report.notes:
            print(f"  note: {note}")
        if not report.is_empty:
            status = EXIT_FAILED
    return status


def _equation_document(args: argparse.Namespace) -> tuple[dict[str, object], str]:
    params = PhysicalParams.natural(args.mass) if args.mass is not None else PhysicalParams()
    if args.generation != 1 and args.case not in ("free", "antilepton"):
        raise ConfigurationError("--generation applies to the free and antilepton cases")
    basic = GENERATION_BASIC[args.generation]
    if args.case == "pauli":
        pauli = reduce_pauli(assemble_free_lepton(params))
        return documents.pauli_document(pauli), documents.pauli_latex(pauli)
    if args.case == "schrodinger":
        schrodinger = reduce_schrodinger(assemble_free_lepton(params))
        return documents.schrodinger_document(schrodinger), documents.schrodinger_latex(schrodinger)
    if args.case == "dirac":
        system = reduce_dirac(assemble_free_lepton(params))
        form = RepForm.REAL
    elif args.case == "antilepton":
        system = generation_permute(antilepton_assemble(params), args.generation)
        form = RepForm.QUATERNION
    else:
        system = generation_permute(assemble_free_lepton(params), args.generation)
        form = RepForm.QUATERNION
    document = documents.system_document(system, form, basic)
    if args.case == "dirac":
        document["gammas"] = documents.gamma_document(system)
    if params.is_numeric:
        document["coupling_value"] = system.coupling_value(params)
    return document, documents.system_latex(system, form, basic)


def cmd_equations(args: argparse.Namespace, settings: Settings) -> int:
    document, latex = _equation_document(args)
    print(documents.dumps(document) if args.emit == "json" else latex, end="")
    return EXIT_OK


def cmd_dispersion(args: argparse.Namespace, settings: Settings) -> int:
    """Print the plane-wave energies of a named system and check the relation."""
    from .runner import named_system

    tolerance = args.tol if args.tol is not None else settings.tolerance
    relation = DispersionRelation.parse(args.relation)
    report = check_dispersion(
        named_system(args.system), [Momentum.parse(args.p)], [args.mass], relation, tolerance
    )
    point = report.points[0]
    energies = [e.real if abs(e.imag) < tolerance else e for e in point.energies]
    print(
        json.dumps(
            {
                "system": args.system,
                "relation": relation.value,
                "mass": point.mass,
                "momentum": list(point.momentum.components),
                "energies": [round(e, 12) if isinstance(e, float) else str(e) for e in energies],
                "defect": point.defect,
                "residual": point.residual,
                "passed": point.passed,
            },
            indent=2,
        )
    )
    return EXIT_OK if report.passed else EXIT_FAILED


def cmd_suite(args: argparse.Namespace, settings: Settings) -> int:
    from .loader import load_suite
    from .reporter import generate_report
    from .runner import run_suite

    suite = load_suite(args.suite or _get_default_suite_path())
    print(f"Running suite: {suite.name} ({suite.check_count} checks)")
    run = run_suite(suite, settings)
    for result in run.results:
        print(f"  [{'pass' if result.passed else 'FAIL'}] {result.kind.value:<13} {result.name}: {result.detail}")
    report_path = generate_report(run, args.output_dir or settings.report_dir)
    print(f"{len(run.results) - len(run.failures)}/{len(run.results)} checks passed")
    print(f"Full report: {report_path}")
    return EXIT_OK if run.passed else EXIT_FAILED


COMMANDS = {
    "classify": cmd_classify,
    "build": cmd_build,
    "rep": cmd_rep,
    "approx": cmd_approx,
    "verify": cmd_verify,
    "equations": cmd_equations,
    "dispersion": cmd_dispersion,
    "suite": cmd_suite,
}


def create_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="clifford-rqm",
        description="Clifford-algebra representations and relativistic wave equations",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Enable debug logging")

    subparsers = parser.add_subparsers(dest="command", required=True)

    classify_parser = subparsers.add_parser("classify", help="Blade squares grouped by grade")
    classify_parser.add_argument("--n", type=int, required=True, help="Number of generators")
    classify_parser.add_argument("--sig", type=str, required=True, help="Signature, e.g. +++-")

    build_parser = subparsers.add_parser("build", help="Basis and Cayley table of a preset algebra")
    build_parser.add_argument("--preset", choices=["c3", "c4"], required=True)

    rep_parser = subparsers.add_parser("rep", help="Regular representation")
    rep_parser.add_argument("--algebra", choices=["c3", "c4"], default="c4")
    rep_parser.add_argument("--kind", choices=["direct", "conjugate"], required=True)
    rep_parser.add_argument("--form", choices=["real", "complex", "quaternion"], default="real")
    rep_parser.add_argument("--basic", choices=["21", "13", "32"], default="21")
    rep_parser.add_argument("--format", choices=["golden", "json"], default="golden")

    approx_parser = subparsers.add_parser("approx", help="Approximate representation of C_4")
    approx_parser.add_argument("--map", choices=["r1", "r2", "r3"], required=True)
    approx_parser.add_argument("--conjugate", action="store_true", help="Fold the conjugate rep")
    approx_parser.add_argument("--format", choices=["golden", "json"], default="golden")

    verify_parser = subparsers.add_parser("verify", help="Compare golden tables with the computation")
    verify_parser.add_argument(
        "--golden", type=str, required=True, help="Golden file, or c3_direct.golden for all forms"
    )
    verify_parser.add_argument("--basic", choices=["21", "13", "32"], default="21")

    equations_parser = subparsers.add_parser("equations", help="Emit an equation system")
    equations_parser.add_argument(
        "--case", choices=["free", "dirac", "pauli", "schrodinger", "antilepton"], default="free"
    )
    equations_parser.add_argument("--generation", type=int, choices=[1, 2, 3], default=1)
    equations_parser.add_argument("--mass", type=float, help="Mass in natural units (symbolic when omitted)")
    equations_parser.add_argument("--emit", choices=["json", "latex"], default="json")

    dispersion_parser = subparsers.add_parser("dispersion", help="Plane-wave energies at one (p, m)")
    dispersion_parser.add_argument("--mass", type=float, required=True)
    dispersion_parser.add_argument("--p", type=str, required=True, help="Momentum x,y,z")
    dispersion_parser.add_argument("--tol", type=float, help="Tolerance (default: CLIFFORD_RQM_TOLERANCE)")
    dispersion_parser.add_argument("--system", type=str, default="massive", help="Named system (default: massive)")
    dispersion_parser.add_argument("--relation", choices=["massive", "massless"], default="massive")

    suite_parser = subparsers.add_parser("suite", help="Run a YAML verification suite")
    suite_parser.add_argument("--suite", type=str, help="Path to suite YAML (default: packaged reference suite)")
    suite_parser.add_argument("--output-dir", type=str, help="Report directory (default: CLIFFORD_RQM_REPORT_DIR)")

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """Main CLI entry point; returns the process exit status."""
    load_dotenv(dotenv_path=".env.local")
    load_dotenv()

    try:
        args = create_parser().parse_args(argv)
    except SystemExit as e:
        # argparse has already printed usage or help
        return e.code if isinstance(e.code, int) else EXIT_ERROR

    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, format="%(levelname)s: %(name)s: %(message)s")

    try:
        settings = Settings.from_env()
        return COMMANDS[args.command](args, settings)
    except (CliffordError, FileNotFoundError) as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
