import json
import math

import jsonschema
import pytest

from rofrft import SingularAngle, make_angle
from rofrft.verification import (
    CHECK_NAMES, REPORT_SCHEMA, all_passed, dumps_report, erratum_checks, format_table, run_suite,
    shift_argument_checks,
)


@pytest.fixture(scope="module")
def small_report():
    return run_suite([0.9, 2.1], ["TimeShift", "MixedProduct", "ConvolutionTheorem", "ModulationConvolution",
                                  "E2", "E4", "D1"])


def test_report_validates(small_report):
    jsonschema.validate(small_report, REPORT_SCHEMA)
    jsonschema.validate(json.loads(dumps_report(small_report)), REPORT_SCHEMA)
    assert all_passed(small_report)


def test_record_counts(small_report):
    by_kind = {}
    for r in small_report:
        by_kind[r["kind"]] = by_kind.get(r["kind"], 0) + 1
    # two bases per rule, two operand sides per property, four D1 variants
    assert by_kind == {"rule": 8, "convolution": 6, "erratum": 4, "shift_argument": 8}


def test_records_are_sorted(small_report):
    kinds = [r["kind"] for r in small_report]
    assert kinds == sorted(kinds, key=["rule", "convolution", "erratum", "shift_argument"].index)


def test_rerun_is_byte_identical(small_report):
    again = run_suite([0.9, 2.1], ["TimeShift", "MixedProduct", "ConvolutionTheorem", "ModulationConvolution",
                                   "E2", "E4", "D1"])
    assert dumps_report(again) == dumps_report(small_report)


def test_schema_rejects_bad_record(small_report):
    bad = dict(small_report[0], status="maybe")
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate([bad], REPORT_SCHEMA)
    extra = dict(small_report[0], note="x")
    with pytest.raises(jsonschema.ValidationError):
        jsonschema.validate([extra], REPORT_SCHEMA)


def test_table_summary(small_report):
    table = format_table(small_report)
    assert table.splitlines()[-1] == f"{len(small_report)} checks, 0 failed"


def test_errata_skip_at_right_angle():
    recs = erratum_checks(make_angle(math.pi / 2), ["E1", "E2", "E3"])
    status = {r["check"]: r["status"] for r in recs}
    assert status["E1"] == "skipped" and status["E2"] == "skipped"
    assert status["E3"] == "pass"
    jsonschema.validate(recs, REPORT_SCHEMA)


def test_shift_argument_non_discriminating_at_right_angle():
    recs = shift_argument_checks(make_angle(math.pi / 2))
    assert {r["status"] for r in recs} == {"non_discriminating"}
    assert all(r["pass"] for r in recs)


def test_erratum_details_record_both_forms():
    (rec,) = erratum_checks(make_angle(math.pi / 3), ["E3"])
    assert rec["details"]["corrected_passes"] and rec["details"]["printed_fails"]
    assert rec["details"]["printed_relative_residual"] > rec["gate"]


def test_selection_errors():
    with pytest.raises(ValueError, match="unknown checks"):
        run_suite([1.0], ["Bogus"])
    with pytest.raises(SingularAngle):
        run_suite([1.0, math.pi], ["TimeShift"])


def test_check_names_cover_everything():
    assert len(CHECK_NAMES) == 12 + 4 + 4 + 1
    assert run_suite([1.0], ["all"])[0]["kind"] == "rule"
