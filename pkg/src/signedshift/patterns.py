"""Permutations, marked cycles and the patterns induced by words.

Permutations are tuples of the values 1..n in one-line notation.  A marked
cycle stores ``None`` at the distinguished position, so numeric comparisons
can never touch it by accident.

>>> format_marked_cycle(marked_cycle((5, 2, 4, 1, 3)))
'34*12'
"""

from __future__ import annotations

from typing import Optional, Sequence

from .words import PeriodicWord, Signature, signed_key

__all__ = [
    "Permutation", "MarkedCycle", "STAR",
    "parse_permutation", "format_permutation", "check_permutation",
    "marked_cycle", "inverse_marked_cycle", "parse_marked_cycle",
    "format_marked_cycle", "star_ascents", "star_descents",
    "pattern_of", "pat", "complement", "complement_transport",
]

Permutation = tuple[int, ...]
MarkedCycle = tuple[Optional[int], ...]

STAR = None


def check_permutation(pi: Sequence[int]) -> Permutation:
    pi = tuple(int(a) for a in pi)
    if not pi or sorted(pi) != list(range(1, len(pi) + 1)):
        raise ValueError(f"not a permutation of 1..n: {pi}")
    return pi


def parse_permutation(text: str) -> Permutation:
    """Accept ``5,2,4,1,3`` or, for n <= 9, the compact ``52413``."""
    text = text.strip()
    if "," in text:
        values = [int(part) for part in text.split(",") if part.strip()]
    elif text.isdigit():
        values = [int(ch) for ch in text]
    else:
        raise ValueError(f"cannot parse permutation {text!r}")
    return check_permutation(values)


def format_permutation(pi: Sequence[int]) -> str:
    if len(pi) <= 9:
        return "".join(map(str, pi))
    return ",".join(map(str, pi))


def marked_cycle(pi: Sequence[int]) -> MarkedCycle:
    """One-line form of the cycle (*, pi_2, ..., pi_n)."""
    pi = tuple(pi)
    n = len(pi)
    out: list[Optional[int]] = [0] * n
    for i in range(n - 1):
        out[pi[i] - 1] = pi[i + 1]
    out[pi[-1] - 1] = STAR
    return tuple(out)


def inverse_marked_cycle(m: Sequence[Optional[int]]) -> Permutation:
    n = len(m)
    if sum(1 for a in m if a is STAR) != 1:
        raise ValueError("a marked cycle has exactly one star")
    present = {a for a in m if a is not STAR}
    missing = set(range(1, n + 1)) - present
    if len(present) != n - 1 or len(missing) != 1:
        raise ValueError(f"not a marked cycle: {m}")
    pi = [missing.pop()]
    for _ in range(n - 1):
        nxt = m[pi[-1] - 1]
        if nxt is STAR:
            raise ValueError(f"not a marked cycle (cycle closes early): {m}")
        pi.append(nxt)
    if m[pi[-1] - 1] is not STAR:
        raise ValueError(f"not a marked cycle: {m}")
    return tuple(pi)


def parse_marked_cycle(text: str) -> MarkedCycle:
    text = text.strip()
    parts = text.split(",") if "," in text else list(text)
    return tuple(STAR if part.strip() in ("*", "⋆") else int(part) for part in parts)


def format_marked_cycle(m: Sequence[Optional[int]]) -> str:
    parts = ["*" if a is STAR else str(a) for a in m]
    return ("" if len(m) <= 9 else ",").join(parts)


def _star_comparisons(m):
    # (position, left, right) for every position whose comparison is defined;
    # a star on the right is skipped, a star on the left voids the position
    n = len(m)
    for j in range(1, n):
        left = m[j - 1]
        if left is STAR:
            continue
        right = m[j]
        if right is STAR:
            if j + 1 >= n:
                continue
            right = m[j + 1]
        yield j, left, right


def star_ascents(m: Sequence[Optional[int]]) -> frozenset[int]:
    """1-based ascent positions of a marked cycle, skipping over the star."""
    return frozenset(j for j, a, b in _star_comparisons(m) if a < b)


def star_descents(m: Sequence[Optional[int]]) -> frozenset[int]:
    return frozenset(j for j, a, b in _star_comparisons(m) if a > b)


def pattern_of(values: Sequence) -> Optional[Permutation]:
    """Relative order of distinct values as a permutation, None on a tie."""
    order = sorted(range(len(values)), key=values.__getitem__)
    ranks = [0] * len(values)
    for rank, i in enumerate(order):
        ranks[i] = rank + 1
    for a, b in zip(order, order[1:]):
        if values[a] == values[b]:
            return None
    return tuple(ranks)


def pat(w: PeriodicWord, sigma: Signature, n: int) -> Optional[Permutation]:
    """Pattern of the first n shifts of ``w`` under the signed order.

    Returns None when two of the shifts are equal.
    """
    if n < 1:
        raise ValueError("pattern length must be positive")
    if w.k != sigma.k:
        raise ValueError(f"alphabet size mismatch: {w.k} vs {sigma.k}")
    # shifts have preperiod <= |u| and period |v|: |u|+|v| letters decide them
    span = len(w.prefix) + len(w.period)
    letters = w.take(n - 1 + span)
    keys = [signed_key(letters[i:i + span], sigma) for i in range(n)]
    return pattern_of(keys)


def complement(pi: Sequence[int]) -> Permutation:
    n = len(pi)
    return tuple(n + 1 - a for a in pi)


def complement_transport(pi: Sequence[int], sigma: Signature) -> tuple[Permutation, Signature]:
    """Send (pi, sigma) to (pi^c, reversed sigma); allowed-ness is preserved."""
    return complement(pi), sigma.reversed()
