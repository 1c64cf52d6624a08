"""The full verification suite behind ``rofrft verify``.

Every check produces one flat record (see :data:`REPORT_SCHEMA`). Records
are ordered deterministically and carry no timestamps, so two runs with the
same arguments serialise to identical bytes.
"""

from __future__ import annotations

import json
import math
from typing import Iterable, Optional, Sequence

import numpy as np

from .catalog import (
    Constant, Gaussian, ShiftedTTimesGaussian, TTimesExp, TTimesGaussian,
    analytic_rofrft, eval_time, family_name, uncorrected_rofrft,
)
from .core import FractionalAngle, SampledSignal, grid_from_range, make_angle
from .exceptions import FamilySingularAngle
from .fracconv import ConvolutionPair, operated_convolution_lhs, verify_convolution_property, \
    verify_convolution_theorem
from .oracles import regularized_rofrft
from .rules import PropertyReport, RuleId, RuleParams, verify_rule
from .transform import rofrft_at

STANDARD_ANGLES = (math.pi / 6, math.pi / 4, math.pi / 3, 2 * math.pi / 5, 3 * math.pi / 4)

RULE_PARAMS = RuleParams(tau=1.5, q=2.0, ell=2.0)
RULE_BASES = (Gaussian(), ShiftedTTimesGaussian(0.5))
RULE_GATE = 1e-5
RULE_GATE_FD = 1e-4

CONV_GATE = 1e-4
CONV_D = 1.0
CONV_Q = 2.0
CONV_PROPERTIES = {"ShiftConvolution": "shift", "ModulationConvolution": "modulation",
                   "TFShiftConvolution": "tf_shift"}

INTEGRABLE_GATE = 1e-6
REGULARIZED_GATE = 1e-3
ERRATA_FAMILIES = {
    "E1": Constant(),
    "E2": TTimesExp(2.0),
    "E3": TTimesGaussian(),
    "E4": ShiftedTTimesGaussian(1.5),
}
# below this |cos(phi) - cot(phi)| * d the two shift arguments are numerically the same
D1_MIN_SEPARATION = 1e-3

CHECK_NAMES = tuple(r.value for r in RuleId) + ("ConvolutionTheorem",) + tuple(CONV_PROPERTIES) \
    + tuple(ERRATA_FAMILIES) + ("D1",)

_KIND_RANK = {"rule": 0, "convolution": 1, "erratum": 2, "shift_argument": 3}

REPORT_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "array",
    "items": {
        "type": "object",
        "required": ["check", "kind", "rule", "phi", "base", "max_abs_residual", "mean_abs_residual",
                     "relative_residual", "derivative_mode", "metric", "gate", "status", "pass"],
        "properties": {
            "check": {"type": "string"},
            "kind": {"enum": list(_KIND_RANK)},
            "rule": {"type": "string"},
            "phi": {"type": "number"},
            "base": {"type": "string"},
            "max_abs_residual": {"type": ["number", "null"], "minimum": 0},
            "mean_abs_residual": {"type": ["number", "null"], "minimum": 0},
            "relative_residual": {"type": ["number", "null"], "minimum": 0},
            "derivative_mode": {"enum": ["analytic", "finite_difference"]},
            "metric": {"enum": ["absolute", "relative"]},
            "gate": {"type": "number", "exclusiveMinimum": 0},
            "status": {"enum": ["pass", "fail", "skipped", "non_discriminating"]},
            "pass": {"type": "boolean"},
            "details": {"type": "object"},
        },
        "additionalProperties": False,
    },
}


def _record(check, kind, rule, phi, base, max_abs, mean_abs, rel, metric, gate, status,
            derivative_mode="analytic", details=None) -> dict:
    rec = {
        "check": check, "kind": kind, "rule": rule, "phi": float(phi), "base": base,
        "max_abs_residual": None if max_abs is None else float(max_abs),
        "mean_abs_residual": None if mean_abs is None else float(mean_abs),
        "relative_residual": None if rel is None else float(rel),
        "derivative_mode": derivative_mode, "metric": metric, "gate": float(gate),
        "status": status, "pass": status != "fail",
    }
    if details:
        rec["details"] = details
    return rec


def _from_report(rep: PropertyReport, kind: str, check: str, metric: str, gate: float, details=None) -> dict:
    value = rep.max_abs_residual if metric == "absolute" else rep.relative_residual
    status = "pass" if value <= gate else "fail"
    return _record(check, kind, rep.rule, rep.phi, rep.base, rep.max_abs_residual, rep.mean_abs_residual,
                   rep.relative_residual, metric, gate, status, rep.derivative_mode, details)


def rule_checks(angle: FractionalAngle, rules: Sequence[RuleId], u_count: int = 161) -> list:
    """Every selected operational rule on each base, gated on the max absolute residual."""
    u_grid = grid_from_range(-4.0, 4.0, u_count)
    out = []
    for base in RULE_BASES:
        for rule in rules:
            rep = verify_rule(rule, base, angle, RULE_PARAMS, u_grid)
            gate = RULE_GATE if rep.derivative_mode == "analytic" else RULE_GATE_FD
            out.append(_from_report(rep, "rule", f"{rule.value}[{rep.base}]", "absolute", gate))
    return out


def convolution_grid():
    # odd count keeps t = 0 on a sample, which the discrete operator needs
    return grid_from_range(-25.0, 25.0, 4097)


def _gauss(t):
    return np.exp(-0.5 * t * t)


def _shifted_gauss(t):
    return np.exp(-0.5 * (t - 1.0) ** 2)


def convolution_checks(angle: FractionalAngle, names: Iterable[str], u_count: int = 161) -> list:
    """Convolution theorem and the shift/modulation/time-frequency-shift properties."""
    grid = convolution_grid()
    u_grid = grid_from_range(-4.0, 4.0, u_count)
    names = set(names)
    out = []
    if "ConvolutionTheorem" in names:
        pair = ConvolutionPair(SampledSignal.from_function(_gauss, grid),
                               SampledSignal.from_function(_shifted_gauss, grid), angle)
        rep = verify_convolution_theorem(pair, u_grid)
        rep = PropertyReport(**{**rep.__dict__, "base": "gauss|gauss(t-1)"})
        out.append(_from_report(rep, "convolution", "ConvolutionTheorem", "relative", CONV_GATE))
    for name, kind in CONV_PROPERTIES.items():
        if name not in names:
            continue
        for which in ("left", "right"):
            rep = verify_convolution_property(kind, which, _gauss, _shifted_gauss, angle, grid, u_grid,
                                              d=CONV_D, q=CONV_Q)
            rep = PropertyReport(**{**rep.__dict__, "base": "gauss|gauss(t-1)"})
            out.append(_from_report(rep, "convolution", f"{name}[{which}]", "relative", CONV_GATE,
                                    details={"which": which, "d": CONV_D, "q": CONV_Q}))
    return out


def _relative(value, reference) -> float:
    return float(np.max(np.abs(value - reference)) / np.max(np.abs(reference)))


def erratum_oracle(family, angle: FractionalAngle, u):
    """Independent reference values and the gate that applies to them."""
    if isinstance(family, (Constant, TTimesExp)):
        ref, _ = regularized_rofrft(family, angle, u)
        return ref, REGULARIZED_GATE, "regularized_quadrature"
    reach = 20.0 + abs(getattr(family, "tau", 0.0))
    grid = grid_from_range(-reach, reach, 4096)
    x = SampledSignal.from_function(lambda t: eval_time(family, t), grid)
    return rofrft_at(x, angle, u), INTEGRABLE_GATE, "quadrature"


def erratum_checks(angle: FractionalAngle, ids: Iterable[str], u_count: int = 33) -> list:
    """Corrected closed forms must pass the oracle gate and the printed ones must fail it."""
    u = grid_from_range(-4.0, 4.0, u_count).points
    out = []
    for eid in ids:
        family = ERRATA_FAMILIES[eid]
        base = family_name(family)
        try:
            corrected = analytic_rofrft(family, angle, u).value
            printed = uncorrected_rofrft(family, angle, u)
        except FamilySingularAngle as exc:
            gate = REGULARIZED_GATE if isinstance(family, (Constant, TTimesExp)) else INTEGRABLE_GATE
            out.append(_record(eid, "erratum", eid, angle.phi, base, None, None, None, "relative", gate,
                               "skipped", details={"reason": str(exc)}))
            continue
        ref, gate, oracle = erratum_oracle(family, angle, u)
        resid = np.abs(corrected - ref)
        rel_c = _relative(corrected, ref)
        rel_p = _relative(printed, ref)
        ok = rel_c <= gate and rel_p > gate
        out.append(_record(eid, "erratum", eid, angle.phi, base, resid.max(), resid.mean(), rel_c,
                           "relative", gate, "pass" if ok else "fail",
                           details={"oracle": oracle, "printed_relative_residual": rel_p,
                                    "corrected_passes": rel_c <= gate, "printed_fails": rel_p > gate}))
    return out


def shift_argument_checks(angle: FractionalAngle, u_count: int = 161) -> list:
    """Adjudicate ``u - d cos(phi)`` against the printed ``u - d cot(phi)``."""
    grid = convolution_grid()
    u_grid = grid_from_range(-4.0, 4.0, u_count)
    separation = abs(angle.cos_phi - angle.cot_phi) * CONV_D
    out = []
    for name, kind in (("ShiftConvolution", "shift"), ("TFShiftConvolution", "tf_shift")):
        for which in ("left", "right"):
            lhs = operated_convolution_lhs(kind, which, _gauss, _shifted_gauss, angle, grid, u_grid.points,
                                           CONV_D, CONV_Q)
            reps = {f: verify_convolution_property(kind, which, _gauss, _shifted_gauss, angle, grid, u_grid,
                                                   d=CONV_D, q=CONV_Q, shift_factor=f, lhs=lhs)
                    for f in ("cos", "cot")}
            rel_cos, rel_cot = reps["cos"].relative_residual, reps["cot"].relative_residual
            if rel_cos > CONV_GATE:
                status = "fail"
            elif separation < D1_MIN_SEPARATION:
                status = "non_discriminating"
            else:
                status = "pass" if rel_cot > CONV_GATE else "fail"
            rep = reps["cos"]
            out.append(_record(f"D1:{name}[{which}]", "shift_argument", "D1", angle.phi, "gauss|gauss(t-1)",
                               rep.max_abs_residual, rep.mean_abs_residual, rel_cos, "relative", CONV_GATE,
                               status, details={"printed_relative_residual": rel_cot,
                                                "argument_separation": separation}))
    return out


def _select(names: Optional[Sequence[str]]):
    if not names or list(names) == ["all"]:
        return list(CHECK_NAMES)
    unknown = [n for n in names if n not in CHECK_NAMES]
    if unknown:
        raise ValueError(f"unknown checks {unknown}; choose from {', '.join(CHECK_NAMES)} or 'all'")
    return list(names)


def run_suite(angles: Sequence[float] = STANDARD_ANGLES, checks: Optional[Sequence[str]] = None) -> list:
    """Run the selected checks at each angle and return the sorted records.

    Raises :class:`~rofrft.exceptions.SingularAngle` before any work if an
    angle is singular.
    """
    selected = _select(checks)
    parsed = [make_angle(phi) for phi in angles]
    rules = [RuleId(n) for n in selected if n in RuleId.__members__]
    conv = [n for n in selected if n == "ConvolutionTheorem" or n in CONV_PROPERTIES]
    errata = [n for n in selected if n in ERRATA_FAMILIES]
    records = []
    for angle in parsed:
        if rules:
            records += rule_checks(angle, rules)
        if conv:
            records += convolution_checks(angle, conv)
        if errata:
            records += erratum_checks(angle, errata)
        if "D1" in selected:
            records += shift_argument_checks(angle)
    records.sort(key=lambda r: (_KIND_RANK[r["kind"]], r["rule"], r["check"], r["phi"]))
    return records


def all_passed(records) -> bool:
    return all(r["pass"] for r in records)


def dumps_report(records) -> str:
    return json.dumps(records, indent=2, sort_keys=True, allow_nan=False) + "\n"


def format_table(records) -> str:
    lines = [f"{'check':<44} {'phi':>9} {'residual':>10} {'gate':>8}  status"]
    for r in records:
        value = r["max_abs_residual"] if r["metric"] == "absolute" else r["relative_residual"]
        shown = "-" if value is None else f"{value:.2e}"
        lines.append(f"{r['check']:<44} {r['phi']:>9.6f} {shown:>10} {r['gate']:>8.0e}  {r['status']}")
    n_fail = sum(not r["pass"] for r in records)
    lines.append(f"{len(records)} checks, {n_fail} failed")
    return "\n".join(lines)
