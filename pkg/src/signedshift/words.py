"""Eventually periodic words over {0, ..., k-1} and the signed order on them.

A signature is a string over ``+-`` of length k >= 2.  Letters whose sign is
``-`` reverse the order of everything that follows them, so two infinite words
are compared letter by letter while tracking the parity of negative letters in
their common prefix.

Words are written ``u(v)`` for the infinite word ``u v v v ...``:

>>> w = PeriodicWord.parse("110(1)", k=2)
>>> str(shift(w))
'10(1)'
>>> compare(PeriodicWord.parse("(01)", 2), w, Signature("+-"))
-1
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Sequence

__all__ = [
    "Word", "Signature", "PeriodicWord",
    "compare", "shift", "extremal_words", "sign_norm", "is_primitive",
    "primitive_root", "canonicalize", "signed_key", "parse_word",
    "format_word",
]

# a finite word, letters are ints in range(k)
Word = tuple[int, ...]

_WORD_RE = re.compile(r"^\s*([0-9]*)\(([0-9]+)\)\s*$")


@dataclass(frozen=True)
class Signature:
    """Sign sequence sigma_0 ... sigma_{k-1}; ``signs`` is a string over ``+-``."""

    signs: str

    def __post_init__(self):
        signs = self.signs.replace("−", "-")
        object.__setattr__(self, "signs", signs)
        if len(signs) < 2:
            raise ValueError(f"signature needs k >= 2 signs, got {signs!r}")
        if set(signs) - {"+", "-"}:
            raise ValueError(f"signature may only contain '+' and '-': {signs!r}")

    @classmethod
    def parse(cls, text: str) -> Signature:
        return cls(text.strip())

    @classmethod
    def positive(cls, k: int) -> Signature:
        return cls("+" * k)

    @classmethod
    def negative(cls, k: int) -> Signature:
        return cls("-" * k)

    @property
    def k(self) -> int:
        return len(self.signs)

    def __len__(self):
        return len(self.signs)

    def __getitem__(self, t):
        return self.signs[t]

    def __str__(self):
        return self.signs

    def is_negative(self, letter: int) -> bool:
        return self.signs[letter] == "-"

    @property
    def negative_letters(self) -> frozenset[int]:
        return frozenset(t for t, s in enumerate(self.signs) if s == "-")

    @property
    def positive_letters(self) -> frozenset[int]:
        return frozenset(t for t, s in enumerate(self.signs) if s == "+")

    def reversed(self) -> Signature:
        return Signature(self.signs[::-1])


def _check_letters(letters: Iterable[int], k: int) -> Word:
    word = tuple(int(a) for a in letters)
    for a in word:
        if not 0 <= a < k:
            raise ValueError(f"letter {a} outside alphabet of size {k}")
    return word


@dataclass(frozen=True)
class PeriodicWord:
    """The infinite word ``prefix period period ...`` over an alphabet of size k.

    Construction does not normalise; use :func:`canonicalize` for a unique form.
    """

    prefix: Word
    period: Word
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("alphabet size must be positive")
        object.__setattr__(self, "prefix", _check_letters(self.prefix, self.k))
        object.__setattr__(self, "period", _check_letters(self.period, self.k))
        if not self.period:
            raise ValueError("period must be nonempty")

    @classmethod
    def parse(cls, text: str, k: int) -> PeriodicWord:
        return parse_word(text, k)

    @classmethod
    def periodic(cls, period: Sequence[int], k: int) -> PeriodicWord:
        return cls((), tuple(period), k)

    def __str__(self):
        return format_word(self)

    def letter(self, i: int) -> int:
        """Letter at 0-based position ``i``."""
        if i < len(self.prefix):
            return self.prefix[i]
        return self.period[(i - len(self.prefix)) % len(self.period)]

    def take(self, length: int) -> Word:
        """The first ``length`` letters."""
        u, v = self.prefix, self.period
        if length <= len(u):
            return u[:length]
        rest = length - len(u)
        reps = -(-rest // len(v))
        return u + (v * reps)[:rest]

    def prepend(self, u: Sequence[int]) -> PeriodicWord:
        return PeriodicWord(tuple(u) + self.prefix, self.period, self.k)


def parse_word(text: str, k: int) -> PeriodicWord:
    """Parse ``u(v)`` with digit letters, e.g. ``1101(1)`` or ``(01)``."""
    match = _WORD_RE.match(text)
    if match is None:
        raise ValueError(f"cannot parse word {text!r}; expected u(v), e.g. 10(0)")
    u, v = match.groups()
    return PeriodicWord(tuple(map(int, u)), tuple(map(int, v)), k)


def format_word(w: PeriodicWord) -> str:
    if w.k <= 10:
        def join(letters):
            return "".join(map(str, letters))
    else:
        def join(letters):
            return ",".join(map(str, letters))
    return f"{join(w.prefix)}({join(w.period)})"


def _same_alphabet(*items) -> int:
    sizes = {item.k for item in items}
    if len(sizes) != 1:
        raise ValueError(f"alphabet size mismatch: {sorted(sizes)}")
    return sizes.pop()


def compare(w: PeriodicWord, v: PeriodicWord, sigma: Signature) -> int:
    """Three-way comparison under the signed order: -1, 0 or 1.

    Two eventually periodic words that agree on
    ``|u_w| + |u_v| + lcm(|v_w|, |v_v|)`` letters agree forever, so the scan
    is finite and ``0`` means the words are identical.
    """
    _same_alphabet(w, v, sigma)
    bound = len(w.prefix) + len(v.prefix) + lcm(len(w.period), len(v.period))
    flipped = False
    for a, b in zip(w.take(bound), v.take(bound)):
        if a != b:
            less = a < b
            if flipped:
                less = not less
            return -1 if less else 1
        if sigma.signs[a] == "-":
            flipped = not flipped
    return 0


def signed_key(letters: Sequence[int], sigma: Signature) -> Word:
    """Recode a finite word so that lexicographic order matches the signed order.

    Letter ``a`` is kept when an even number of negative letters precede it and
    replaced by ``k - 1 - a`` otherwise.  Prefixes of equal length compare
    under ``<`` exactly as the infinite words they begin, up to the first
    difference.
    """
    top = sigma.k - 1
    signs = sigma.signs
    out = []
    flipped = False
    for a in letters:
        out.append(top - a if flipped else a)
        if signs[a] == "-":
            flipped = not flipped
    return tuple(out)


def shift(w: PeriodicWord) -> PeriodicWord:
    """Drop the first letter, rotating the period when the prefix is empty."""
    if w.prefix:
        return PeriodicWord(w.prefix[1:], w.period, w.k)
    return PeriodicWord((), w.period[1:] + w.period[:1], w.k)


def extremal_words(sigma: Signature) -> tuple[PeriodicWord, PeriodicWord]:
    """Return ``(smallest, largest)`` words of W_k under the signed order."""
    k = sigma.k
    top = k - 1
    first, last = sigma.signs[0], sigma.signs[-1]
    if last == "+":
        largest = PeriodicWord((), (top,), k)
    elif first == "+":
        largest = PeriodicWord((top,), (0,), k)
    else:
        largest = PeriodicWord((), (top, 0), k)
    if first == "+":
        smallest = PeriodicWord((), (0,), k)
    elif last == "+":
        smallest = PeriodicWord((0,), (top,), k)
    else:
        smallest = PeriodicWord((), (0, top), k)
    return smallest, largest


def sign_norm(d: Sequence[int], sigma: Signature) -> int:
    """Number of letters of ``d`` whose sign is negative."""
    signs = sigma.signs
    for a in d:
        if not 0 <= a < sigma.k:
            raise ValueError(f"letter {a} outside alphabet of size {sigma.k}")
    return sum(1 for a in d if signs[a] == "-")


def is_primitive(d: Sequence[int]) -> bool:
    """True iff ``d`` is not ``a^m`` for a shorter word ``a`` and ``m > 1``."""
    d = tuple(d)
    if not d:
        raise ValueError("primitivity is undefined for the empty word")
    # d is a proper power iff it occurs inside (d d) away from the ends
    doubled = d + d
    n = len(d)
    return not any(doubled[i:i + n] == d for i in range(1, n))


def primitive_root(d: Sequence[int]) -> Word:
    d = tuple(d)
    n = len(d)
    for size in range(1, n + 1):
        if n % size == 0 and d[:size] * (n // size) == d:
            return d[:size]
    raise ValueError("empty word has no primitive root")


def canonicalize(w: PeriodicWord) -> PeriodicWord:
    """Normal form: primitive period and shortest possible prefix."""
    period = primitive_root(w.period)
    prefix = w.prefix
    while prefix and prefix[-1] == period[-1]:
        prefix = prefix[:-1]
        period = period[-1:] + period[:-1]
    return PeriodicWord(prefix, period, w.k)
