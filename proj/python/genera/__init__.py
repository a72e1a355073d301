"""Characteristic classes, genera, and rational bordism of model varieties."""

from genera._core import (
    Variety,
    ahat_series,
    bordism_quotient,
    decompose,
    generators,
    l_series,
    parse_print,
    partitions,
    run,
    todd_series,
    todd_values,
    verify_invariance,
)

__version__ = "0.1.0"

__all__ = [
    "Variety",
    "ahat_series",
    "bordism_quotient",
    "decompose",
    "generators",
    "l_series",
    "parse_print",
    "partitions",
    "run",
    "todd_series",
    "todd_values",
    "verify_invariance",
]
