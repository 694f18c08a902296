import itertools
import random

import pytest

from helpers import all_signatures
from signedshift.intervals import allowed_intervals, contains, interval_count, witness
from signedshift.patterns import pat
from signedshift.segmentations import enumerate_segmentations, is_allowed
from signedshift.words import PeriodicWord, Signature, compare, parse_word

TENT = Signature("+-")

TENT_LENGTH3_INTERVALS = {
    (1, 2, 3): {"((0), 001(0)]", "[011(0), 0(1))"},
    (1, 3, 2): {"(0(1), (01))"},
    (2, 3, 1): {"((01), 01(0)]", "[11(0), (1))"},
    (2, 1, 3): {"((1), 111(0)]", "[101(0), (10))"},
    (3, 1, 2): {"((10), 1(0))"},
    (3, 2, 1): set(),
}


def test_tent_length_three_intervals():
    total = 0
    for pi, expected in TENT_LENGTH3_INTERVALS.items():
        found = {str(iv) for iv in allowed_intervals(pi, TENT)}
        assert found == expected
        total += len(found)
    assert total == interval_count(3, TENT) == 8


def test_forbidden_pattern_has_no_intervals():
    assert allowed_intervals((6, 1, 5, 4, 2, 3), Signature("--")) == []
    assert witness((6, 1, 5, 4, 2, 3), Signature("--")) is None


def test_single_letter_interval():
    (iv,) = allowed_intervals((1,), Signature("-+"))
    assert str(iv) == "[0(1), (1)]"


def test_contains_example():
    w = parse_word("1101(1)", 2)
    assert pat(w, TENT, 4) == (2, 4, 1, 3)
    hits = [iv for iv in allowed_intervals((2, 4, 1, 3), TENT) if contains(iv, w, TENT)]
    assert len(hits) == 1


def test_open_endpoint_excluded():
    (iv,) = allowed_intervals((3, 1, 2), TENT)
    assert not iv.lower_closed
    assert not contains(iv, iv.lower, TENT)
    closed = [iv for iv in allowed_intervals((2, 3, 1), TENT) if iv.upper_closed][0]
    assert contains(closed, closed.upper, TENT)


def _random_word(rng, k):
    return PeriodicWord(tuple(rng.randrange(k) for _ in range(rng.randrange(6))),
                        tuple(rng.randrange(k) for _ in range(1 + rng.randrange(5))), k)


@pytest.mark.parametrize("signs,n", [("+-", 3), ("--", 4), ("+-+", 4), ("-+", 5)])
def test_words_fall_in_exactly_one_interval(signs, n):
    sigma = Signature(signs)
    everything = [iv for pi in itertools.permutations(range(1, n + 1))
                  for iv in allowed_intervals(pi, sigma)]
    rng = random.Random(3)
    seen = 0
    while seen < 500:
        w = _random_word(rng, sigma.k)
        pi = pat(w, sigma, n)
        if pi is None:
            continue
        hits = [iv for iv in everything if contains(iv, w, sigma)]
        assert len(hits) == 1 and hits[0].perm == pi
        seen += 1


@pytest.mark.parametrize("k", [2, 3])
@pytest.mark.parametrize("n", range(2, 6))
def test_intervals_are_disjoint(n, k):
    for sigma in all_signatures(k):
        ivs = [iv for pi in itertools.permutations(range(1, n + 1))
               for iv in allowed_intervals(pi, sigma)]
        for iv in ivs:
            assert compare(iv.lower, iv.upper, sigma) < 0
        ivs.sort(key=lambda iv: _Key(iv.lower, sigma))
        for a, b in zip(ivs, ivs[1:]):
            c = compare(a.upper, b.lower, sigma)
            assert c < 0 or (c == 0 and not (a.upper_closed and b.lower_closed))


class _Key:
    def __init__(self, w, sigma):
        self.w, self.sigma = w, sigma

    def __lt__(self, other):
        return compare(self.w, other.w, self.sigma) < 0


def test_interval_count_examples():
    assert interval_count(3, TENT) == 8
    assert interval_count(5, TENT) == 56
    assert interval_count(3, Signature("++")) == 6
    assert interval_count(2, Signature("---")) == 6


@pytest.mark.parametrize("k", [2, 3])
def test_interval_count_matches_direct(k):
    for sigma in all_signatures(k):
        for n in range(1, 7):
            direct = sum(len(enumerate_segmentations(pi, sigma, require_valid=True))
                         for pi in itertools.permutations(range(1, n + 1)))
            assert interval_count(n, sigma) == direct


def test_witness_examples():
    w = witness((3, 5, 6, 1, 2, 4), TENT)
    assert pat(w, TENT, 6) == (3, 5, 6, 1, 2, 4)
    # the word built from the other valid prefix works as well
    zeta, p = (0, 1, 1, 0, 0), (1, 1, 0, 0)
    s = PeriodicWord(zeta + p * 6, (0,), 2)
    assert pat(s, TENT, 6) == (3, 5, 6, 1, 2, 4)
    assert str(witness((1,), Signature("++"))) == "(0)"


@pytest.mark.parametrize("n", range(1, 6))
def test_witness_for_every_allowed_pattern(n):
    for sigma in all_signatures(2):
        for pi in itertools.permutations(range(1, n + 1)):
            w = witness(pi, sigma)
            assert (w is not None) == is_allowed(pi, sigma)
            if w is None:
                continue
            assert pat(w, sigma, n) == pi
            assert bool(allowed_intervals(pi, sigma))
            if n > 1:
                prefixes = {s.prefix for s in enumerate_segmentations(pi, sigma, True)}
                assert w.take(n - 1) in prefixes


def test_interval_record():
    (iv,) = allowed_intervals((3, 1, 2), TENT)
    record = iv.as_record()
    assert record["lower"] == "(10)" and record["upper"] == "1(0)"
    assert record["lower_closed"] is False
