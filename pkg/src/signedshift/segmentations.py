"""Segmentations of marked cycles and the allowed-pattern characterization.

A sigma-segmentation of the marked cycle of ``pi`` is a nondecreasing index
sequence ``0 = e_0 <= ... <= e_k = n`` cutting the cycle into blocks that are
increasing under ``+`` and decreasing under ``-`` (the star is ignored),
subject to the boundary conditions implemented in :func:`check_segmentation`.
Each segmentation defines a prefix word; ``pi`` is allowed for the signed
shift iff some segmentation is valid.
"""

from __future__ import annotations

import enum
import itertools
from bisect import bisect_left
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .patterns import (
    STAR, Permutation, check_permutation, marked_cycle, star_ascents,
    star_descents,
)
from .words import Signature, Word

__all__ = [
    "Segmentation", "Classification",
    "enumerate_segmentations", "iter_segmentations", "check_segmentation",
    "make_segmentation", "is_allowed", "allowed_patterns", "n_positive",
    "n_negative", "classify", "collapsed_by_alternation",
    "minimal_negative_indices", "minimal_negative_segmentations",
    "canonical_segmentation", "contains_canonical", "smallest_forbidden",
    "format_bars",
]


def _prefix_data(pi: Permutation, indices: Sequence[int]):
    n = len(pi)
    prefix = tuple(bisect_left(indices, pi[i]) - 1 for i in range(n - 1))
    last = pi[-1]
    x = y = None
    p = q = None
    if last != n:
        x = pi.index(last + 1) + 1
        p = prefix[x - 1:]
    if last != 1:
        y = pi.index(last - 1) + 1
        q = prefix[y - 1:]
    return prefix, x, y, p, q


@dataclass(frozen=True)
class Segmentation:
    """A segmentation together with its prefix and the words p and q.

    ``x``/``y`` are the 1-based positions holding ``pi_n + 1``/``pi_n - 1``;
    ``p``/``q`` are the prefix suffixes starting there (None when undefined).
    """

    perm: Permutation
    sigma: Signature
    indices: tuple[int, ...]
    prefix: Word
    x: Optional[int]
    y: Optional[int]
    p: Optional[Word]
    q: Optional[Word]

    @property
    def valid(self) -> bool:
        if self.p is None or self.q is None:
            return True
        return not (self.p == self.q + self.q or self.q == self.p + self.p)

    def bars(self) -> str:
        return format_bars(self.perm, self.indices)

    def as_record(self) -> dict:
        def word(w):
            return None if w is None else "".join(map(str, w))
        return {
            "indices": list(self.indices),
            "bars": self.bars(),
            "prefix": word(self.prefix),
            "p": word(self.p),
            "q": word(self.q),
            "valid": self.valid,
        }


def format_bars(pi: Permutation, indices: Sequence[int]) -> str:
    """Bar notation, e.g. ``|245|*61|``; repeated indices give repeated bars."""
    m = marked_cycle(pi)
    counts = Counter(indices)
    out = []
    for pos in range(len(m) + 1):
        out.append("|" * counts.get(pos, 0))
        if pos < len(m):
            out.append("*" if m[pos] is STAR else str(m[pos]))
    sep = "" if len(m) <= 9 else " "
    return sep.join(part for part in out if part)


def _reach(m, increasing: bool) -> list[int]:
    """reach[a] = largest b with m[a..b] monotone, 1-based; reach[n+1] = n."""
    n = len(m)
    reach = [0] * (n + 2)
    reach[n + 1] = n
    for a in range(n, 0, -1):
        if m[a - 1] is STAR:
            reach[a] = reach[a + 1]
            continue
        c = a + 1
        if c <= n and m[c - 1] is STAR:
            c += 1
        if c > n:
            reach[a] = n
        elif (m[a - 1] < m[c - 1]) == increasing:
            reach[a] = reach[c]
        else:
            reach[a] = c - 1
    return reach


def _boundary_rules(pi: Permutation, sigma: Signature):
    n = len(pi)
    first, last = sigma.signs[0], sigma.signs[-1]
    force_first_zero = first == "+" and n >= 2 and pi[-2:] == (2, 1)
    force_last_cut = last == "+" and n >= 2 and pi[-2:] == (n - 1, n)
    vee = first == last == "-" and n >= 3 and pi[-3:] == (n - 1, 1, n)
    wedge = first == last == "-" and n >= 3 and pi[-3:] == (2, n, 1)
    return force_first_zero, force_last_cut, vee, wedge


def _index_sequences(pi: Permutation, sigma: Signature) -> Iterator[tuple[int, ...]]:
    n = len(pi)
    k = sigma.k
    m = marked_cycle(pi)
    reach = {"+": _reach(m, True), "-": _reach(m, False)}
    star_pos = pi[-1]
    force_first_zero, force_last_cut, vee, wedge = _boundary_rules(pi, sigma)
    signs = sigma.signs
    indices = [0]

    def extend(t):
        start = indices[-1]
        hi = reach[signs[t]][start + 1] if start < n else n
        if t == k - 1:
            if hi >= n:
                yield tuple(indices) + (n,)
            return
        for e in range(start, hi + 1):
            if e == star_pos:
                continue
            if t == 0 and force_first_zero and e != 0:
                continue
            if t == k - 2 and force_last_cut and e != n - 1:
                continue
            indices.append(e)
            yield from extend(t + 1)
            indices.pop()

    for seq in extend(0):
        if vee and not (seq[1] == 0 or seq[k - 1] == n - 1):
            continue
        if wedge and not (seq[1] == 0 or seq[k - 1] == n):
            continue
        yield seq


def iter_segmentations(pi: Sequence[int], sigma: Signature,
                       require_valid: bool = False) -> Iterator[Segmentation]:
    pi = tuple(pi)
    for indices in _index_sequences(pi, sigma):
        seg = Segmentation(pi, sigma, indices, *_prefix_data(pi, indices))
        if require_valid and not seg.valid:
            continue
        yield seg


def enumerate_segmentations(pi: Sequence[int], sigma: Signature,
                            require_valid: bool = False) -> list[Segmentation]:
    """All sigma-segmentations of the marked cycle of ``pi``, in index order."""
    return list(iter_segmentations(check_permutation(pi), sigma, require_valid))


def _monotone(values, increasing):
    return all((a < b) == increasing for a, b in zip(values, values[1:]))


def check_segmentation(pi: Sequence[int], sigma: Signature,
                       indices: Sequence[int]) -> Optional[str]:
    """Check every defining condition directly; return the first failure or None.

    Deliberately written against the definition, independent of the search in
    :func:`enumerate_segmentations`.
    """
    pi = tuple(pi)
    n, k = len(pi), sigma.k
    e = tuple(indices)
    if len(e) != k + 1 or e[0] != 0 or e[-1] != n:
        return "shape"
    if any(a > b for a, b in zip(e, e[1:])):
        return "nondecreasing"
    m = marked_cycle(pi)
    for t in range(k):
        block = [a for a in m[e[t]:e[t + 1]] if a is not STAR]
        if not _monotone(block, sigma.signs[t] == "+"):
            return "(a)"
    first, last = sigma.signs[0], sigma.signs[-1]
    if first == "+" and n >= 2 and m[0] is STAR and m[1] == 1 and e[1] != 0:
        return "(b)"
    if last == "+" and n >= 2 and m[n - 2] == n and m[n - 1] is STAR and e[k - 1] != n - 1:
        return "(c)"
    if first == last == "-" and n >= 3:
        if m[0] == n and m[n - 2] == 1 and m[n - 1] is STAR:
            if not (e[1] == 0 or e[k - 1] == n - 1):
                return "(d)"
        if m[0] is STAR and m[1] == n and m[n - 1] == 1:
            if not (e[1] == 0 or e[k - 1] == n):
                return "(e)"
    if any(e[t] == pi[-1] for t in range(1, k)):
        return "(f)"
    return None


def make_segmentation(pi: Sequence[int], sigma: Signature,
                      indices: Sequence[int]) -> Segmentation:
    pi = check_permutation(pi)
    indices = tuple(indices)
    failure = check_segmentation(pi, sigma, indices)
    if failure is not None:
        raise ValueError(f"{indices} is not a {sigma}-segmentation of {pi}: condition {failure}")
    return Segmentation(pi, sigma, indices, *_prefix_data(pi, indices))


def is_allowed(pi: Sequence[int], sigma: Signature) -> bool:
    """True iff some valid sigma-segmentation exists."""
    return any(True for _ in iter_segmentations(tuple(pi), sigma, require_valid=True))


def _allowed_with_first(args):
    first, n, signs = args
    sigma = Signature(signs)
    rest = [v for v in range(1, n + 1) if v != first]
    return [(first,) + tail for tail in itertools.permutations(rest)
            if is_allowed((first,) + tail, sigma)]


def allowed_patterns(sigma: Signature, n: int, jobs: int = 1) -> set[Permutation]:
    """The set of allowed patterns of length n, by exhaustive scan of S_n."""
    if n < 1:
        raise ValueError("n must be positive")
    tasks = [(first, n, sigma.signs) for first in range(1, n + 1)]
    if jobs > 1 and n >= 6:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(_allowed_with_first, tasks))
    else:
        chunks = [_allowed_with_first(task) for task in tasks]
    return {pi for chunk in chunks for pi in chunk}


def n_positive(pi: Sequence[int]) -> int:
    """Least k >= 2 such that pi is allowed for the k-shift."""
    pi = check_permutation(pi)
    n = len(pi)
    if n <= 2:
        return 2
    eps = 1 if pi[-2:] in ((2, 1), (n - 1, n)) else 0
    return max(2, 1 + len(star_descents(marked_cycle(pi))) + eps)


class Classification(enum.Enum):
    REGULAR = "regular"
    VEE_CORNERED = "vee-cornered"
    WEDGE_CORNERED = "wedge-cornered"
    COLLAPSED = "collapsed"

    @property
    def cornered(self) -> bool:
        return self in (Classification.VEE_CORNERED, Classification.WEDGE_CORNERED)


def minimal_negative_indices(pi: Sequence[int]) -> tuple[int, ...]:
    """Indices (0, ascents of the marked cycle..., n)."""
    pi = tuple(pi)
    return (0, *sorted(star_ascents(marked_cycle(pi))), len(pi))


def collapsed_by_alternation(pi: Sequence[int]) -> bool:
    """Collapsed test through the alternating-difference criterion.

    With c = min(n - x, n - y): the longer of p, q has length 2c, c is odd, and
    pi_{x+j} - pi_{y+j} = (-1)^j for 1 <= j <= c.
    """
    pi = tuple(pi)
    n = len(pi)
    last = pi[-1]
    if n < 3 or last in (1, n):
        return False
    x = pi.index(last + 1) + 1
    y = pi.index(last - 1) + 1
    c = min(n - x, n - y)
    if max(n - x, n - y) != 2 * c or c % 2 == 0:
        return False
    return all(pi[x + j - 1] - pi[y + j - 1] == (-1) ** j for j in range(1, c + 1))


def classify(pi: Sequence[int]) -> Classification:
    pi = check_permutation(pi)
    n = len(pi)
    if n < 3:
        raise ValueError("classification needs n >= 3")
    if pi[-3:] == (n - 1, 1, n):
        return Classification.VEE_CORNERED
    if pi[-3:] == (2, n, 1):
        return Classification.WEDGE_CORNERED
    _, _, _, p, q = _prefix_data(pi, minimal_negative_indices(pi))
    collapsed = p is not None and q is not None and (p == q + q or q == p + p)
    if collapsed != collapsed_by_alternation(pi):
        raise RuntimeError(f"collapsed criteria disagree on {pi}")
    return Classification.COLLAPSED if collapsed else Classification.REGULAR


def n_negative(pi: Sequence[int]) -> int:
    """Least k >= 2 such that pi is allowed for the negative k-shift."""
    pi = check_permutation(pi)
    if len(pi) <= 2:
        return 2
    eps = 0 if classify(pi) is Classification.REGULAR else 1
    return max(2, 1 + len(star_ascents(marked_cycle(pi))) + eps)


def minimal_negative_segmentations(pi: Sequence[int]) -> list[Segmentation]:
    """Valid segmentations for the negative shift with exactly n_negative(pi) signs."""
    return enumerate_segmentations(pi, Signature.negative(n_negative(pi)), require_valid=True)


def canonical_segmentation(pi: Sequence[int]) -> Segmentation:
    pi = check_permutation(pi)
    kind = classify(pi)
    base = list(minimal_negative_indices(pi))
    if kind.cornered:
        base.insert(1, 0)
    elif kind is Classification.COLLAPSED:
        base.append(pi[-1] - 1)
    indices = tuple(sorted(base))
    return make_segmentation(pi, Signature.negative(len(indices) - 1), indices)


def contains_canonical(seg: Segmentation) -> bool:
    """Multiset inclusion of the canonical indices in ``seg.indices``."""
    canon = Counter(canonical_segmentation(seg.perm).indices)
    have = Counter(seg.indices)
    return all(have[i] >= c for i, c in canon.items())


def smallest_forbidden(family: str, k: int) -> list[Permutation]:
    """Forbidden patterns of minimal length for the k-shift or the negative k-shift."""
    if k < 2:
        raise ValueError("k must be at least 2")
    if family == "positive":
        sigma = Signature.positive(k)
    elif family == "negative":
        sigma = Signature.negative(k)
    else:
        raise ValueError(f"family must be 'positive' or 'negative', not {family!r}")
    n = 1
    while True:
        forbidden = [pi for pi in itertools.permutations(range(1, n + 1))
                     if not is_allowed(pi, sigma)]
        if forbidden:
            return sorted(forbidden)
        n += 1
