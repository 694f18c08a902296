"""Exact counting formulas for allowed patterns of signed shifts.

Everything here is integer arithmetic (``Fraction`` where halves appear), so
values are exact at any size.

>>> psi(2, 6)
54
>>> b_negative(8, 4), b_positive(8, 4)
(19580, 19476)
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

__all__ = [
    "mobius", "divisors", "psi", "psi_bar", "a", "cornered_pairs",
    "collapsed_pairs", "p_count", "b_negative", "b_positive", "tent_bounds",
    "entropy_estimate", "CountTable", "b_table", "interval_table",
]


def mobius(m: int) -> int:
    if m < 1:
        raise ValueError("mobius needs a positive integer")
    result = 1
    d = 2
    while d * d <= m:
        if m % d == 0:
            m //= d
            if m % d == 0:
                return 0
            result = -result
        d += 1
    if m > 1:
        result = -result
    return result


def divisors(m: int) -> list[int]:
    return [d for d in range(1, m + 1) if m % d == 0]


def psi(k: int, t: int) -> int:
    """Number of primitive words of length t over k letters."""
    if k < 1 or t < 1:
        raise ValueError("psi needs k >= 1 and t >= 1")
    return sum(mobius(d) * k ** (t // d) for d in divisors(t))


def psi_bar(m: int) -> int:
    """Primitive binary words of length m with an odd number of ones."""
    if m < 1:
        raise ValueError("psi_bar needs m >= 1")
    total = sum(mobius(d) * 2 ** (m // d) for d in divisors(m) if d % 2)
    return total // 2


def a(n: int, k: int) -> int:
    if n < 2:
        raise ValueError("a(n, k) needs n >= 2")
    return sum(k ** (n - i - 1) * psi(k, i) for i in range(1, n))


def _interval_count_negative(n: int, k: int) -> int:
    from .intervals import interval_count
    from .words import Signature
    return interval_count(n, Signature.negative(k))


def cornered_pairs(n: int, k: int) -> int:
    """Pairs (pi, E) with pi cornered whose E misses the canonical indices."""
    _check_nk(n, k)
    return 2 * sum(j ** (n - 3) for j in range(1, k))


def collapsed_pairs(n: int, k: int) -> int:
    """Pairs (pi, E) with pi collapsed whose E misses the canonical indices."""
    _check_nk(n, k)
    total = 0
    for c in range(1, (n - 1) // 2 + 1, 2):
        for j in range(1, k):
            total += comb(c + k - j - 2, k - j) * j ** (n - 2 * c - 1) * psi(j, c)
    return 2 * total


def _check_nk(n, k):
    if n < 3 or k < 2:
        raise ValueError(f"needs n >= 3 and k >= 2, got n={n}, k={k}")


def p_count(n: int, k: int) -> int:
    """Pairs (pi, E), E a valid negative k-segmentation containing E_pi."""
    _check_nk(n, k)
    return _interval_count_negative(n, k) - cornered_pairs(n, k) - collapsed_pairs(n, k)


def b_negative(n: int, k: int) -> int:
    """Patterns of length n with N-bar(pi) = k."""
    _check_nk(n, k)
    return sum((-1) ** (k - j) * comb(n, k - j) * p_count(n, j) for j in range(2, k + 1))


def b_positive(n: int, k: int) -> int:
    """Patterns of length n with N(pi) = k."""
    _check_nk(n, k)
    from .intervals import interval_count
    from .words import Signature
    return sum((-1) ** (k - j) * comb(n, k - j) * interval_count(n, Signature.positive(j))
               for j in range(2, k + 1))


def tent_bounds(n: int) -> tuple[Fraction, Fraction]:
    """Lower and upper bounds on the number of tent-map patterns of length n."""
    if n < 3:
        raise ValueError("tent bounds need n >= 3")
    from .intervals import interval_count
    from .words import Signature
    lower = Fraction(interval_count(n, Signature("+-")), 2)
    extra = sum(2 ** (n - 2 * c - 1) * psi_bar(c) for c in range(1, (n - 1) // 2 + 1))
    return lower, lower + extra


def entropy_estimate(sigma, n_max: int) -> list[dict]:
    """Per n: I_n, the growth estimate log(I_n)/(n-1) and I_n/(n k^(n-1)).

    The ratio is exact; it tends to 1, consistent with entropy log(k).
    """
    from .intervals import interval_count
    if n_max < 3:
        raise ValueError("n_max must be at least 3")
    k = sigma.k
    rows = []
    for n in range(2, n_max + 1):
        count = interval_count(n, sigma)
        rows.append({
            "n": n,
            "intervals": count,
            "growth": math.log(count) / (n - 1),
            "ratio": Fraction(count, n * k ** (n - 1)),
        })
    return rows


@dataclass
class CountTable:
    """Integer cells indexed by (n, k); missing cells read as 0."""

    family: str
    n_values: list[int]
    k_values: list[int]
    cells: dict[tuple[int, int], int] = field(default_factory=dict)

    def __getitem__(self, key):
        return self.cells.get(key, 0)

    def rows(self):
        for n in self.n_values:
            yield n, [self[n, k] for k in self.k_values]

    def to_csv(self) -> str:
        out = io.StringIO()
        writer = csv.writer(out, lineterminator="\n")
        writer.writerow(["n"] + [f"k={k}" for k in self.k_values])
        for n, values in self.rows():
            writer.writerow([n] + [v if v else "" for v in values])
        return out.getvalue()

    def records(self) -> list[dict]:
        return [{"n": n, "k": k, "value": self[n, k], "family": self.family}
                for n in self.n_values for k in self.k_values]

    def to_json(self) -> str:
        return json.dumps(self.records(), indent=2)

    def to_text(self) -> str:
        header = ["n"] + [f"k={k}" for k in self.k_values]
        body = [[str(n)] + [str(v) if v else "" for v in values] for n, values in self.rows()]
        widths = [max(len(r[i]) for r in [header] + body) for i in range(len(header))]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths))
                         for r in [header] + body)


def b_table(family: str, n_max: int, k_max: int, n_min: int = 3) -> CountTable:
    """Table of b(n,k) (``family='b'``) or b'(n,k) (``family='b_pos'``)."""
    funcs = {"b": b_negative, "b_pos": b_positive}
    if family not in funcs:
        raise ValueError(f"unknown table family {family!r}")
    table = CountTable(family, list(range(n_min, n_max + 1)), list(range(2, k_max + 1)))
    for n in table.n_values:
        for k in table.k_values:
            table.cells[n, k] = funcs[family](n, k)
    return table


def interval_table(n_max: int, k_max: int, shift: str = "negative", n_min: int = 2) -> CountTable:
    """I_n for the k-shift or the negative k-shift."""
    from .intervals import interval_count
    from .words import Signature
    make = {"positive": Signature.positive, "negative": Signature.negative}[shift]
    table = CountTable(f"intervals-{shift}", list(range(n_min, n_max + 1)),
                       list(range(2, k_max + 1)))
    for n in table.n_values:
        for k in table.k_values:
            table.cells[n, k] = interval_count(n, make(k))
    return table
