"""Solid codes over signature partitions, with channel error-detection checks."""

from ._solidcode import (
    CapExceeded,
    Channel,
    Code,
    Error,
    Lengths,
    LiftedCode,
    NotSolid,
    Partition,
    all_messages,
    binary,
    canonical_size_table,
    canonical_solid_code,
    utf8,
    verify_detection,
)

__all__ = [
    "CapExceeded",
    "Channel",
    "Code",
    "Error",
    "Lengths",
    "LiftedCode",
    "NotSolid",
    "Partition",
    "all_messages",
    "binary",
    "canonical_size_table",
    "canonical_solid_code",
    "utf8",
    "verify_detection",
]
