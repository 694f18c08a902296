"""Brute-force sources of allowed patterns, independent of segmentations.

``word-scan`` evaluates :func:`pat` on every word ``zeta d^(2m)`` followed by
the smallest or the largest word; this family is complete.  ``map-sampling``
iterates the sawtooth map on a grid of rationals and is only sound.
"""

from __future__ import annotations

import itertools
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .patterns import Permutation, format_permutation, pat, pattern_of
from .words import Signature, canonicalize, extremal_words

__all__ = [
    "OracleReport", "oracle_word_scan", "oracle_map_sampling",
    "word_scan_size", "word_scan_report", "map_sampling_report", "orbit_pattern",
]


@dataclass(frozen=True)
class OracleReport:
    sigma: Signature
    n: int
    method: str
    candidates: int
    patterns: frozenset

    def sorted_patterns(self) -> list[str]:
        return sorted(format_permutation(pi) for pi in self.patterns)

    def as_record(self) -> dict:
        return {
            "signature": str(self.sigma),
            "n": self.n,
            "method": self.method,
            "candidates": self.candidates,
            "count": len(self.patterns),
            "patterns": self.sorted_patterns(),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_record(), indent=2)


def word_scan_size(k: int, n: int) -> int:
    """Number of pat evaluations before deduplication."""
    return 2 * k ** (n - 1) * sum(k ** c for c in range(1, n))


def _periods(k, n):
    for length in range(1, n):
        yield from itertools.product(range(k), repeat=length)


def _scan_prefixes(args):
    signs, n, first = args
    sigma = Signature(signs)
    k = sigma.k
    tails = extremal_words(sigma)
    reps = 2 * (-(-n // 2))
    found = set()
    seen = set()
    for rest in itertools.product(range(k), repeat=n - 2):
        zeta = (first,) + rest
        for d in _periods(k, n):
            body = zeta + d * reps
            for tail in tails:
                w = canonicalize(tail.prepend(body))
                if w in seen:
                    continue
                seen.add(w)
                pi = pat(w, sigma, n)
                if pi is not None:
                    found.add(pi)
    return found, len(seen)


def word_scan_report(sigma: Signature, n: int, jobs: int = 1) -> OracleReport:
    if n < 1:
        raise ValueError("n must be positive")
    k = sigma.k
    if n == 1:
        smallest, _ = extremal_words(sigma)
        return OracleReport(sigma, 1, "word-scan", 1, frozenset({pat(smallest, sigma, 1)}))
    tasks = [(sigma.signs, n, first) for first in range(k)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_scan_prefixes, tasks))
    else:
        parts = [_scan_prefixes(task) for task in tasks]
    patterns = frozenset().union(*(found for found, _ in parts))
    return OracleReport(sigma, n, "word-scan", sum(c for _, c in parts), patterns)


def oracle_word_scan(sigma: Signature, n: int, jobs: int = 1) -> set[Permutation]:
    """Every allowed pattern of length n, found by scanning candidate words."""
    return set(word_scan_report(sigma, n, jobs).patterns)


def map_sampling_report(sigma: Signature, n: int, denominator_bound: int) -> OracleReport:
    """Patterns of orbits of j/D, 0 <= j < D <= bound, under the sawtooth map.

    Numerators over a fixed D are exact int64 integers: the branch of ``a/D``
    is ``t = min(k a // D, k - 1)``; a ``+`` branch sends ``a`` to
    ``k a - t D`` and a ``-`` branch to ``(t + 1) D - k a``.
    """
    if n < 1:
        raise ValueError("n must be positive")
    k = sigma.k
    if denominator_bound < 1 or k * denominator_bound >= 2 ** 62:
        raise ValueError("denominator bound out of range")
    negative = np.array([s == "-" for s in sigma.signs])
    found: set[Permutation] = set()
    candidates = 0
    for D in range(1, denominator_bound + 1):
        orbit = np.empty((n, D), dtype=np.int64)
        orbit[0] = np.arange(D, dtype=np.int64)
        for i in range(1, n):
            x = orbit[i - 1]
            t = np.minimum(k * x // D, k - 1)
            orbit[i] = np.where(negative[t], (t + 1) * D - k * x, k * x - t * D)
        candidates += D
        # orbits with a repeated value do not define a pattern
        ranks = np.argsort(np.argsort(orbit, axis=0, kind="stable"), axis=0, kind="stable")
        ordered = np.sort(orbit, axis=0)
        distinct = np.all(np.diff(ordered, axis=0) != 0, axis=0) if n > 1 else np.ones(D, bool)
        for col in np.unique(ranks[:, distinct] + 1, axis=1).T:
            found.add(tuple(int(v) for v in col))
    return OracleReport(sigma, n, "map-sampling", candidates, frozenset(found))


def oracle_map_sampling(sigma: Signature, n: int, denominator_bound: int) -> set[Permutation]:
    return set(map_sampling_report(sigma, n, denominator_bound).patterns)


def orbit_pattern(sigma: Signature, x, n: int):
    """Pattern of the orbit of a single rational ``x`` (a Fraction), or None."""
    k = sigma.k
    x = Fraction(x)
    values = [x]
    for _ in range(n - 1):
        t = min(int(k * x), k - 1)
        x = k * x - t if sigma.signs[t] == "+" else t + 1 - k * x
        values.append(x)
    return pattern_of(values)
