"""Tests for quartic_basis.reports module."""
from __future__ import annotations

import json

import pytest

from quartic_basis.globalize import integral_basis
from quartic_basis.oracle import p_maximal_order
from quartic_basis.reports import (
    DiscReport,
    GlobalBasisReport,
    JobSpecError,
    PBasisReport,
    parse_job,
)
from quartic_basis.trinomial import TrinomialField, local_basis


class TestParseJob:
    """Tests for parse_job and JobSpec validation."""

    def test_decimal_strings(self):
        job = parse_job(a="-17", b="+5")
        assert (job.a, job.b, job.p, job.verify) == (-17, 5, None, False)

    def test_large_integer(self):
        digits = "123456789012345678901234567890123456789"
        assert parse_job(a=digits, b="1").a == int(digits)

    @pytest.mark.parametrize("value", ["1.5", "12x", "", "--3"])
    def test_rejects_non_integers(self, value):
        with pytest.raises(JobSpecError, match="^a: "):
            parse_job(a=value, b="1")

    def test_rejects_bool(self):
        with pytest.raises(JobSpecError):
            parse_job(a=True, b="1")

    def test_prime_required(self):
        assert parse_job(a="1", b="1", p="7").p == 7
        with pytest.raises(JobSpecError, match="not prime"):
            parse_job(a="1", b="1", p="9")


class TestReports:
    """Tests for the JSON report models."""

    def test_pbasis_report(self):
        basis = local_basis(TrinomialField(125, 125), 5)
        document = json.loads(PBasisReport.from_basis(basis, verified=True).model_dump_json())
        assert document["p"] == "5"
        assert document["case"] == "A1"
        assert (document["vp_disc"], document["vp_index"], document["vp_dK"]) == (9, 3, 3)
        assert document["basis"][3] == {"numerator": ["0", "0", "0", "1"], "denom_exp": 2}
        assert document["shift"] is None

    def test_pbasis_report_from_order(self):
        order, _ = p_maximal_order(TrinomialField(125, 125).polynomial, 5)
        report = PBasisReport.from_order(order, 9)
        assert report.case == "oracle"
        assert report.vp_index == 3
        assert [e.denom_exp for e in report.basis] == [0, 0, 1, 2]

    def test_global_report(self):
        report = GlobalBasisReport.from_basis(integral_basis(125, 125))
        assert (report.d1, report.d2, report.d3) == ("1", "5", "25")
        assert report.ind == "125"
        assert report.dK == "-389875"
        assert report.cofactor is None

    def test_disc_report(self):
        report = DiscReport.build(-1616, {2: 4, 101: 1}, 1)
        assert report.complete
        assert [(f.prime, f.exponent) for f in report.factorization] == [("2", 4), ("101", 1)]
