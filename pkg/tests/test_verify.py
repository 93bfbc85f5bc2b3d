"""Tests for the verification suite."""

import logging

import pytest

from spinwig.verify import (
    REFERENCE_VERTICES,
    CheckResult,
    VerificationReport,
    check_kernel_identities,
    check_reference_vertices,
    run_verification,
)


class TestChecks:
    def test_kernel_identities(self):
        result = check_kernel_identities(12)
        assert result.passed, result.detail

    def test_reference_vertices(self):
        result = check_reference_vertices()
        assert result.passed, result.detail

    def test_reference_table_shape(self):
        for twice_j, vertices in REFERENCE_VERTICES.items():
            assert len(vertices) == twice_j
            assert all(len(v) == twice_j + 1 for v in vertices)


class TestRunVerification:
    def test_small_run_passes(self, caplog):
        with caplog.at_level(logging.INFO, logger="spinwig.verify"):
            report = run_verification(max_twice_j=4, seed=1)
        failed = [c.to_dict() for c in report.checks if not c.passed]
        assert report.passed, failed
        assert len(report.checks) == 8
        assert "PASS" in caplog.text

    def test_rejects_empty_range(self):
        with pytest.raises(ValueError):
            run_verification(max_twice_j=0)

    @pytest.mark.slow
    def test_default_range_passes(self):
        assert run_verification().passed


class TestReport:
    def test_passed_requires_every_check(self):
        report = VerificationReport(max_twice_j=2, seed=0)
        report.checks.append(CheckResult("a", True))
        assert report.passed
        report.checks.append(CheckResult("b", False, "broken"))
        assert not report.passed

    def test_to_dict(self):
        report = VerificationReport(max_twice_j=2, seed=5, checks=[CheckResult("a", True, "ok")])
        assert report.to_dict() == {
            "max_twice_j": 2,
            "seed": 5,
            "passed": True,
            "checks": [{"name": "a", "passed": True, "detail": "ok"}],
        }
