"""Unit tests for the suite runner and its individual checks."""

import numpy as np
import pytest

from clifford_rqm.exceptions import ConfigurationError, DomainError
from clifford_rqm.representations import PAULI, RepKind
from clifford_rqm.shell import runner
from clifford_rqm.shell.models import (
    AgreementCheck,
    ApproximationCheck,
    CheckKind,
    DispersionCheck,
    GammaCheck,
    GoldenCheck,
    VerificationSuite,
)
from clifford_rqm.shell.runner import (
    named_system,
    parse_image,
    run_agreement_check,
    run_approximation_check,
    run_dispersion_check,
    run_gamma_check,
    run_golden_check,
    run_suite,
)
from clifford_rqm.utils.config import Settings

R3_CONJUGATE = {
    "0": "+1", "1": "-i", "2": "+1", "3": "-i", "4": "+i", "21": "+i", "13": "-1", "32": "+i",
    "14": "+1", "42": "-i", "34": "+1", "123": "-1", "124": "+1", "134": "-i", "234": "+1", "1324": "+i",
}


@pytest.fixture
def settings():
    return Settings()


@pytest.mark.tier_a
class TestNamedSystem:
    def test_known_names(self):
        assert named_system("massive").dim == 8
        assert named_system("free-lepton").dim == 16
        assert named_system("dirac").name == "dirac"

    def test_antilepton_names(self):
        assert named_system("antilepton").name == "antilepton-literal"
        assert named_system("antilepton-mirror").name == "antilepton-mirror"
        assert named_system("antilepton-massless").is_massless
        assert named_system("antilepton-mirror-massive").dim == 8

    def test_cached(self):
        assert named_system("massless") is named_system("massless")

    def test_unknown_name(self):
        with pytest.raises(ConfigurationError, match="unknown system"):
            named_system("tachyon")


@pytest.mark.tier_a
class TestParseImage:
    def test_pauli_with_prefactor(self):
        assert np.array_equal(parse_image("+i -s1", 4, RepKind.CONJUGATE), PAULI.entry_image(-1, "s1", "i"))

    def test_bare_complex_entry(self):
        assert np.array_equal(parse_image("-i", 2, RepKind.DIRECT), np.array([[0, -1], [1, 0]]))

    def test_real_entry(self):
        assert np.array_equal(parse_image("-1", 1, RepKind.DIRECT), -np.ones((1, 1)))

    def test_zero_rejected(self):
        with pytest.raises(ConfigurationError):
            parse_image(".", 2, RepKind.DIRECT)

    def test_too_many_tokens(self):
        with pytest.raises(ConfigurationError):
            parse_image("+i +a +b", 2, RepKind.DIRECT)

    def test_unsupported_size(self):
        with pytest.raises(ConfigurationError):
            parse_image("+1", 8, RepKind.DIRECT)

    def test_unit_outside_algebra(self):
        with pytest.raises(DomainError):
            parse_image("+s1", 2, RepKind.CONJUGATE)


@pytest.mark.tier_a
class TestChecks:
    def test_golden_check(self, settings):
        result = run_golden_check(GoldenCheck(file="c3_direct_real.golden"), settings)
        assert result.passed
        assert result.kind is CheckKind.GOLDEN
        assert result.errata == []

    def test_golden_check_with_unexpected_errata_list(self, settings):
        result = run_golden_check(GoldenCheck(file="c3_direct_real.golden", expected_errata=["3"]), settings)
        assert not result.passed

    def test_approximation_check(self, settings):
        check = ApproximationCheck(map="r3", kind="conjugate", table=R3_CONJUGATE)
        result = run_approximation_check(check, settings)
        assert result.passed
        assert result.name == "r3-conjugate"

    def test_approximation_check_reports_wrong_image(self, settings):
        table = dict(R3_CONJUGATE, **{"1": "+i"})
        result = run_approximation_check(ApproximationCheck(map="r3", kind="conjugate", table=table), settings)
        assert not result.passed
        assert result.errata == ["1"]

    def test_gamma_check(self, settings):
        result = run_gamma_check(GammaCheck(map="r1"), settings)
        assert result.passed
        assert result.detail == "η = 1:-1, 2:-1, 3:-1, 4:+1"

    def test_dispersion_check(self, settings):
        check = DispersionCheck(system="massive", relation="massive", masses=[1.0], momenta=["1,0,0"])
        assert run_dispersion_check(check, settings).passed

    def test_expected_dispersion_failure(self, settings):
        check = DispersionCheck(
            system="massless", relation="massive", masses=[1.0], momenta=["0,0,0"], expect_failure=True
        )
        result = run_dispersion_check(check, settings)
        assert result.passed
        assert len(result.errata) == 1
        assert "(failure expected)" in result.detail

    def test_agreement_check(self, settings):
        check = AgreementCheck(reference="massive", systems=["dirac"], masses=[1.0], momenta=["0.3,-1.2,2"])
        assert run_agreement_check(check, settings).passed

    def test_agreement_detects_size_mismatch(self, settings):
        check = AgreementCheck(reference="massive", systems=["free-lepton"], masses=[1.0], momenta=["0,0,0"])
        result = run_agreement_check(check, settings)
        assert not result.passed
        assert "16 energies" in result.errata[0]


@pytest.mark.tier_a
class TestRunSuite:
    def test_runs_every_check(self, settings):
        suite = VerificationSuite(
            name="small",
            golden=[GoldenCheck(file="c3_conjugate_complex.golden")],
            gammas=[GammaCheck(map="r1")],
        )
        run = run_suite(suite, settings)
        assert run.suite == "small"
        assert [r.kind for r in run.results] == [CheckKind.GOLDEN, CheckKind.GAMMAS]
        assert run.passed
        assert all(r.elapsed >= 0 for r in run.results)

    def test_error_becomes_failed_result(self, settings):
        suite = VerificationSuite(
            name="broken",
            dispersion=[DispersionCheck(system="tachyon", relation="massive", masses=[1.0], momenta=["0,0,0"])],
        )
        run = run_suite(suite, settings)
        assert not run.passed
        assert "unknown system" in run.failures[0].detail

    def test_settings_default_from_env(self, monkeypatch, mocker):
        monkeypatch.setenv("CLIFFORD_RQM_TOLERANCE", "1e-8")
        spy = mocker.spy(runner, "run_gamma_check")
        run = run_suite(VerificationSuite(name="env", gammas=[GammaCheck()]))
        assert run.tolerance == 1e-8
        assert spy.call_args.args[1].tolerance == 1e-8
