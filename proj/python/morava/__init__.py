"""Power-operation relation calculator: p-adic helpers, E-theory presentations,
power operations and relation saturation."""

import json as _json

from ._core import (
    CoeffElem,
    CoeffRingSpec,
    Ideal,
    PAdicInt,
    Presentation,
    SaturationReport,
    SigmaElem,
    TraceEntry,
    WindowMatrix,
    check_presentation,
    find_derivation,
    hensel_unit_root,
    load_presentation,
    parse_relation,
    pbar_coeffs,
    power,
    reduce_z_power,
    rezk_log,
    rezk_log_series,
    run_cli,
    saturate,
    syzygies,
    theta,
    transfer,
    unit_root_power,
    valuation,
    verify_fixpoint,
    verify_trace,
    window_matrix,
    window_shift_for_loop_level,
)


def report_dict(report):
    """SaturationReport as a plain dict (same fields as the CLI's JSON)."""
    return _json.loads(report.to_json())


__all__ = [name for name in dir() if not name.startswith("_")]
