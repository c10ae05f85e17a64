"""Discrete-average dynamics on cyclic rhythms.

Difference vectors are plain lists of ints; rhythms are OnsetRhythm objects.
Contract errors raise ValueError, failed internal cross-checks raise
InvariantViolation.
"""

from ._core import (
    AscendingCycle,
    InvariantViolation,
    OnsetRhythm,
    av_cf,
    av_fc,
    av_z,
    classify,
    corpus,
    cycle_to_rhythm,
    dav_A,
    dav_cf,
    dav_fc,
    diff,
    distance_to_cycle,
    hamming_distance,
    orbit,
    parse_rhythm,
    rhythm_step,
    rhythm_to_cycle,
    rotation_period,
    trace_json,
    verify_identities,
    width,
)

__all__ = [
    "AscendingCycle",
    "InvariantViolation",
    "OnsetRhythm",
    "av_cf",
    "av_fc",
    "av_z",
    "classify",
    "corpus",
    "cycle_to_rhythm",
    "dav_A",
    "dav_cf",
    "dav_fc",
    "diff",
    "distance_to_cycle",
    "hamming_distance",
    "orbit",
    "parse_rhythm",
    "rhythm_step",
    "rhythm_to_cycle",
    "rotation_period",
    "trace_json",
    "verify_identities",
    "width",
]
