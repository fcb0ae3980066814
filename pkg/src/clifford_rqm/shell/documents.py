"""JSON and LaTeX documents for equation systems and their reductions."""

from __future__ import annotations

import json
from collections.abc import Mapping

import numpy as np
import sympy

from clifford_rqm.algebra.clifford import c4
from clifford_rqm.equations.reductions import DERIVATIVE_SYMBOLS, PauliReduction, SchrodingerReduction
from clifford_rqm.equations.types import LinearPDESystem, PresentedSystem
from clifford_rqm.exceptions import ConfigurationError, DecompositionError, SystemShapeError
from clifford_rqm.representations.approximate import R1, approx_rep, gamma_set
from clifford_rqm.representations.blocks import display_labels
from clifford_rqm.representations.matrices import UnitEntry, UnitMatrix
from clifford_rqm.representations.regular import RepForm, regular_rep_conjugate
from clifford_rqm.utils.logging import get_logger

logger = get_logger(__name__)

FALLBACK_FORMS = (RepForm.QUATERNION, RepForm.COMPLEX, RepForm.REAL)

UNIT_TEX = {"1": "", "i": "i", "j": "j", "k": "k", "a": "a", "b": "b", "I": "I"}

PARTIALS = {symbol: rf"\partial_{{{k}}}" for k, symbol in enumerate(DERIVATIVE_SYMBOLS, start=1)}


def present_system(
    system: LinearPDESystem, form: RepForm | str = RepForm.QUATERNION, basic: str = "21"
) -> PresentedSystem:
    """Present ``system`` in ``form``, falling back to complex and then real form."""
    form = RepForm.parse(form) if isinstance(form, str) else form
    candidates = FALLBACK_FORMS[FALLBACK_FORMS.index(form) :]
    for candidate in candidates:
        try:
            return system.presented(candidate, basic)
        except (DecompositionError, ConfigurationError) as e:
            logger.debug("%s has no %s form (%s)", system.name, candidate.value, e)
    raise DecompositionError(system.name, 0, 0, "has no presentation in any form")


def _matrix_document(matrix: UnitMatrix, alias: Mapping[str, str]) -> dict[str, object]:
    return {
        "unit_algebra": matrix.algebra.name,
        "prefactor": matrix.prefactor.token(alias),
        "entries": matrix.rows(alias),
    }


def system_document(
    system: LinearPDESystem, form: RepForm | str = RepForm.QUATERNION, basic: str = "21"
) -> dict[str, object]:
    """JSON-ready description: ``labels``, ``unit_algebra``, ``deriv_matrices``, ``mass_matrix``."""
    presented = present_system(system, form, basic)
    first = next(iter(presented.derivatives.values()))
    return {
        "name": system.name,
        "form": presented.form.value,
        "unit_algebra": first.algebra.name,
        "labels": list(display_labels(presented.order, presented.form)),
        "order": list(presented.order),
        "coupling": str(presented.coupling),
        "deriv_matrices": {
            str(m): _matrix_document(matrix, presented.alias) for m, matrix in presented.derivatives.items()
        },
        "mass_matrix": _matrix_document(presented.mass, presented.alias),
    }


PHASES = ("1", "-1", "i", "-i")


def gamma_document(system: LinearPDESystem) -> dict[str, object]:
    """γ matrices of the R̃1 image and, per derivative matrix, the phase p with A^m = p·γ_m.

    ``i`` stands for the complex structure J of the real 8×8 image.

    Raises:
        SystemShapeError: if the system is not over the R̃1 labels or some A^m
            is not a unit phase times γ_m.
    """
    gammas = gamma_set(approx_rep(regular_rep_conjugate(c4()), R1))
    if system.labels != gammas.source.order:
        raise SystemShapeError(f"{system.name}: γ matrices act on the components {', '.join(gammas.source.order)}")
    phases = {}
    for m, matrix in sorted(system.derivatives.items()):
        phase = next(
            (p for p in PHASES if np.array_equal(gammas.phase_matrix(p) @ gammas.gammas[m], matrix)), None
        )
        if phase is None:
            raise SystemShapeError(f"{system.name}: A^{m} is not a unit phase times γ{m}")
        phases[str(m)] = phase
    return {
        "eta": {str(k): v for k, v in sorted(gammas.eta.items())},
        "derivative_phases": phases,
        "matrices": {str(k): g.tolist() for k, g in sorted(gammas.gammas.items())},
        "dictionary_defects": [identity.target for identity in gammas.dictionary_defects()],
    }


def _unit_tex(unit: str, alias: Mapping[str, str]) -> str:
    unit = alias.get(unit, unit)
    if unit.startswith("s") and unit[1:].isdigit():
        return rf"\sigma_{unit[1:]}"
    return UNIT_TEX.get(unit, unit)


def _term(entry: UnitEntry, prefactor: UnitEntry, factor: str, alias: Mapping[str, str]) -> tuple[int, str]:
    units = " ".join(t for t in (_unit_tex(prefactor.unit, alias), _unit_tex(entry.unit, alias)) if t)
    body = f"{units} {factor}" if units else factor
    return entry.coefficient * prefactor.coefficient, body


def _join(terms: list[tuple[int, str]]) -> str:
    if not terms:
        return "0"
    text = ""
    for k, (sign, body) in enumerate(terms):
        if k == 0:
            text = body if sign > 0 else f"-{body}"
        else:
            text += f" {'+' if sign > 0 else '-'} {body}"
    return text


def system_latex(
    system: LinearPDESystem, form: RepForm | str = RepForm.QUATERNION, basic: str = "21"
) -> str:
    """One aligned row per equation, coupling on the right."""
    presented = present_system(system, form, basic)
    names = display_labels(presented.order, presented.form)
    psi = r"\psi" if presented.form is RepForm.REAL else r"\Psi"
    alias = presented.alias
    coupling = sympy.latex(presented.coupling)
    rows = []
    for r in range(len(names)):
        lhs = []
        for m, matrix in presented.derivatives.items():
            for c, name in enumerate(names):
                entry = matrix.entries.get((r, c))
                if entry is not None:
                    lhs.append(_term(entry, matrix.prefactor, rf"\partial_{{{m}}} {psi}^{{{name}}}", alias))
        rhs = []
        for c, name in enumerate(names):
            entry = presented.mass.entries.get((r, c))
            if entry is not None:
                rhs.append(_term(entry, presented.mass.prefactor, f"{psi}^{{{name}}}", alias))
        right = rf"{coupling}\left({_join(rhs)}\right)" if rhs else "0"
        rows.append(f"  {_join(lhs)} &= {right}")
    return "\\begin{aligned}\n" + " \\\\\n".join(rows) + "\n\\end{aligned}\n"


def pauli_document(reduction: PauliReduction) -> dict[str, object]:
    return {
        "name": "pauli",
        "coupling": str(reduction.coupling),
        "signs": {str(m): list(pair) for m, pair in reduction.signs.items()},
        "images": {str(m): image.tolist() for m, image in reduction.images.items()},
        "upper": [[str(v) for v in reduction.upper.row(r)] for r in range(reduction.upper.rows)],
        "lower": [[str(v) for v in reduction.lower.row(r)] for r in range(reduction.lower.rows)],
        "wave_operator": str(reduction.wave_operator),
        "unpacking": {k: list(v) for k, v in reduction.unpacking.items()},
    }


def pauli_latex(reduction: PauliReduction) -> str:
    coupling = sympy.latex(reduction.coupling)
    upper = sympy.latex(reduction.upper, symbol_names=PARTIALS)
    lower = sympy.latex(reduction.lower, symbol_names=PARTIALS)
    wave = sympy.latex(reduction.wave_operator, symbol_names=PARTIALS)
    return (
        "\\begin{aligned}\n"
        f"  {upper} \\Psi^{{123}} &= {coupling} \\Psi^{{0}} \\\\\n"
        f"  {lower} \\Psi^{{0}} &= {coupling} \\Psi^{{123}} \\\\\n"
        f"  \\left({wave}\\right) \\Psi^{{0}} &= \\left({coupling}\\right)^{{2}} \\Psi^{{0}}\n"
        "\\end{aligned}\n"
    )


def schrodinger_document(reduction: SchrodingerReduction) -> dict[str, object]:
    return {
        "name": "schrodinger",
        "labels": list(reduction.names),
        "units": {str(m): str(u) for m, u in reduction.units.items()},
        "signs": {str(m): s.tolist() for m, s in reduction.signs.items()},
        "first_order": [
            [str(v) for v in reduction.first_order.row(r)] for r in range(reduction.first_order.rows)
        ],
        "operator": str(reduction.operator),
        "coefficients": {str(m): str(v) for m, v in reduction.coefficients.items()},
        "pattern": {str(m): v for m, v in reduction.pattern.items()},
        "system": system_document(reduction.system, RepForm.COMPLEX),
    }


def schrodinger_latex(reduction: SchrodingerReduction) -> str:
    coupling = sympy.latex(reduction.system.coupling)
    rows = []
    for r, name in enumerate(reduction.names):
        terms = []
        for c, other in enumerate(reduction.names):
            value = sympy.expand(reduction.first_order[r, c])
            if value != 0:
                terms.append(rf"\left({sympy.latex(value, symbol_names=PARTIALS)}\right) \psi^{{{other}}}")
        rows.append(f"  {' + '.join(terms) or '0'} &= {coupling} \\psi^{{{name}}}")
    operator = sympy.latex(reduction.operator, symbol_names=PARTIALS)
    rows.append(f"  \\left({operator}\\right) \\psi^{{0}} &= \\left({coupling}\\right)^{{2}} \\psi^{{0}}")
    return "\\begin{aligned}\n" + " \\\\\n".join(rows) + "\n\\end{aligned}\n"


def dumps(document: Mapping[str, object]) -> str:
    """Deterministic JSON text."""
    return json.dumps(document, indent=2, ensure_ascii=False) + "\n"
