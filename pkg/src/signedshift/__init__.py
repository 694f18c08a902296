"""Allowed patterns of signed shifts.

>>> from signedshift import Signature, is_allowed
>>> is_allowed((6, 1, 5, 4, 2, 3), Signature("--"))
False
"""

from .enumeration import (
    CountTable, a, b_negative, b_positive, collapsed_pairs, cornered_pairs,
    entropy_estimate, mobius, p_count, psi, psi_bar, tent_bounds,
)
from .intervals import AllowedInterval, allowed_intervals, contains, interval_count, witness
from .oracle import OracleReport, oracle_map_sampling, oracle_word_scan
from .patterns import (
    complement_transport, inverse_marked_cycle, marked_cycle, parse_permutation,
    pat, star_ascents, star_descents,
)
from .segmentations import (
    Classification, Segmentation, allowed_patterns, canonical_segmentation,
    classify, enumerate_segmentations, is_allowed, n_negative, n_positive,
    smallest_forbidden,
)
from .words import (
    PeriodicWord, Signature, canonicalize, compare, extremal_words,
    is_primitive, shift, sign_norm,
)

__version__ = "0.1.0"

__all__ = [
    "AllowedInterval", "Classification", "CountTable", "OracleReport",
    "PeriodicWord", "Segmentation", "Signature", "a", "allowed_intervals",
    "allowed_patterns", "b_negative", "b_positive", "canonical_segmentation",
    "canonicalize", "classify", "collapsed_pairs", "compare",
    "complement_transport", "contains", "cornered_pairs", "entropy_estimate",
    "enumerate_segmentations", "extremal_words", "interval_count",
    "inverse_marked_cycle", "is_allowed", "is_primitive", "marked_cycle",
    "mobius", "n_negative", "n_positive", "oracle_map_sampling",
    "oracle_word_scan", "p_count", "parse_permutation", "pat", "psi",
    "psi_bar", "shift", "sign_norm", "smallest_forbidden", "star_ascents",
    "star_descents", "tent_bounds", "witness",
]
