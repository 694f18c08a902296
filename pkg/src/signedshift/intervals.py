"""Allowed intervals, witness words and the interval count I_n.

The words inducing a pattern form a finite disjoint union of order intervals,
one for each valid segmentation.  Endpoints are eventually periodic, so
membership is decided exactly with :func:`signedshift.words.compare`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from .enumeration import a as a_count
from .patterns import Permutation, check_permutation, pat
from .segmentations import Segmentation, iter_segmentations
from .words import PeriodicWord, Signature, canonicalize, compare, extremal_words, sign_norm

__all__ = ["AllowedInterval", "allowed_intervals", "contains", "witness", "interval_count"]


@dataclass(frozen=True)
class AllowedInterval:
    lower: PeriodicWord
    upper: PeriodicWord
    lower_closed: bool
    upper_closed: bool
    perm: Permutation
    indices: tuple[int, ...]
    prefix: tuple[int, ...]

    def __str__(self):
        left = "[" if self.lower_closed else "("
        right = "]" if self.upper_closed else ")"
        return f"{left}{self.lower}, {self.upper}{right}"

    def as_record(self) -> dict:
        return {
            "perm": list(self.perm),
            "indices": list(self.indices),
            "prefix": "".join(map(str, self.prefix)),
            "lower": str(self.lower),
            "upper": str(self.upper),
            "lower_closed": self.lower_closed,
            "upper_closed": self.upper_closed,
        }


def _interval(seg: Segmentation) -> AllowedInterval:
    sigma = seg.sigma
    k = sigma.k
    smallest, largest = extremal_words(sigma)
    n = len(seg.perm)
    zeta = seg.prefix
    if n == 1:
        return AllowedInterval(smallest, largest, True, True, seg.perm, seg.indices, zeta)
    last = seg.perm[-1]
    # bounds on the tail w_[n, inf)
    if last == 1:
        lo, lo_closed = smallest, True
    else:
        lo, lo_closed = PeriodicWord.periodic(seg.q, k), False
    if last == n:
        hi, hi_closed = largest, True
    else:
        hi, hi_closed = PeriodicWord.periodic(seg.p, k), False
    lo, hi = canonicalize(lo.prepend(zeta)), canonicalize(hi.prepend(zeta))
    if sign_norm(zeta, sigma) % 2:
        lo, hi = hi, lo
        lo_closed, hi_closed = hi_closed, lo_closed
    return AllowedInterval(lo, hi, lo_closed, hi_closed, seg.perm, seg.indices, zeta)


def allowed_intervals(pi: Sequence[int], sigma: Signature) -> list[AllowedInterval]:
    """One interval per valid segmentation; empty iff ``pi`` is forbidden."""
    pi = check_permutation(pi)
    return [_interval(seg) for seg in iter_segmentations(pi, sigma, require_valid=True)]


def contains(interval: AllowedInterval, w: PeriodicWord, sigma: Signature) -> bool:
    low = compare(interval.lower, w, sigma)
    if low > 0 or (low == 0 and not interval.lower_closed):
        return False
    high = compare(w, interval.upper, sigma)
    return high < 0 or (high == 0 and interval.upper_closed)


def witness(pi: Sequence[int], sigma: Signature) -> Optional[PeriodicWord]:
    """A word inducing ``pi``, or None when ``pi`` is forbidden.

    Uses the valid segmentation with the lexicographically smallest prefix and
    the tail ``p^(2m)`` then the smallest word (``q^(2m)`` then the largest
    word when ``pi`` ends in n), with ``m = ceil(n/2)``.
    """
    pi = check_permutation(pi)
    n = len(pi)
    smallest, largest = extremal_words(sigma)
    if n == 1:
        return smallest
    segs = list(iter_segmentations(pi, sigma, require_valid=True))
    if not segs:
        return None
    seg = min(segs, key=lambda s: s.prefix)
    m = -(-n // 2)
    if pi[-1] != n:
        w = smallest.prepend(seg.prefix + seg.p * (2 * m))
    else:
        w = largest.prepend(seg.prefix + seg.q * (2 * m))
    w = canonicalize(w)
    induced = pat(w, sigma, n)
    if induced != pi:
        raise AssertionError(f"witness {w} induces {induced}, expected {pi}")
    return w


def interval_count(n: int, sigma: Signature) -> int:
    """Closed form for the number of allowed intervals of length-n patterns."""
    if n < 1:
        raise ValueError("n must be positive")
    k = sigma.k
    if n == 1:
        return 1
    first, last = sigma.signs[0], sigma.signs[-1]
    base = a_count(n, k)
    if first == last == "+":
        return base + (k - 2) * k ** (n - 2)
    if first != last:
        return base + (k - 1) * k ** (n - 2)
    if n == 2:
        # the general term (k^2 - 2) k^(n-3) is not an integer here
        return 2 * k
    return base + (k * k - 2) * k ** (n - 3)
