"""Bounded verification and geometric replay of human-robot collaboration scenarios."""

from ._core import (
    ClassifiedHazard,
    HrcvError,
    Scenario,
    Trace,
    VerifyResult,
    Violation,
    aabb_max_distance,
    aabb_min_distance,
    check,
    classify,
    contact_probability,
    evaluate,
    extract_motions,
    load_scenario,
    read_trace,
    solve,
    verify,
    verify_exhaustive,
)

__all__ = [
    "ClassifiedHazard",
    "HrcvError",
    "Scenario",
    "Trace",
    "VerifyResult",
    "Violation",
    "aabb_max_distance",
    "aabb_min_distance",
    "check",
    "classify",
    "contact_probability",
    "evaluate",
    "extract_motions",
    "load_scenario",
    "read_trace",
    "solve",
    "verify",
    "verify_exhaustive",
]
