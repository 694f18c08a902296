"""Reference implementations and strategies shared by the tests."""

import functools
import itertools

from hypothesis import strategies as st

from signedshift.words import PeriodicWord, Signature, compare


EXPANSION = 200


def expand_compare(w, v, sigma, length=EXPANSION):
    """Reference comparator: expand both words to a fixed length and scan."""
    a, b = w.take(length), v.take(length)
    parity = 0
    for x, y in zip(a, b):
        if x != y:
            less = (x < y) != bool(parity)
            return -1 if less else 1
        parity ^= sigma.signs[x] == "-"
    return 0


def sorted_shifts_pattern(w, sigma, n):
    """Reference for pat: sort explicit shifts with the comparator."""
    shifts = []
    cur = w
    for _ in range(n):
        shifts.append(cur)
        cur = PeriodicWord(cur.prefix[1:], cur.period, cur.k) if cur.prefix else \
            PeriodicWord((), cur.period[1:] + cur.period[:1], cur.k)
    for i, j in itertools.combinations(range(n), 2):
        if compare(shifts[i], shifts[j], sigma) == 0:
            return None
    order = sorted(range(n), key=functools.cmp_to_key(
        lambda i, j: compare(shifts[i], shifts[j], sigma)))
    ranks = [0] * n
    for r, i in enumerate(order):
        ranks[i] = r + 1
    return tuple(ranks)


def all_signatures(k):
    return [Signature("".join(s)) for s in itertools.product("+-", repeat=k)]


@st.composite
def signatures(draw, k_min=2, k_max=4):
    k = draw(st.integers(k_min, k_max))
    return Signature("".join(draw(st.lists(st.sampled_from("+-"), min_size=k, max_size=k))))


@st.composite
def words(draw, k, max_prefix=5, max_period=5):
    letters = st.integers(0, k - 1)
    prefix = draw(st.lists(letters, max_size=max_prefix))
    period = draw(st.lists(letters, min_size=1, max_size=max_period))
    return PeriodicWord(tuple(prefix), tuple(period), k)


@st.composite
def signed_words(draw, count=1, k_min=2, k_max=4):
    sigma = draw(signatures(k_min, k_max))
    return (sigma, *[draw(words(sigma.k)) for _ in range(count)])


def direct_pair_counts(n, k):
    """Scan (pi, E) pairs for the negative k-shift.

    Returns (cornered, collapsed, containing): pairs whose E misses the
    canonical indices of a cornered / collapsed pi, and pairs whose E contains
    them (as multisets).
    """
    from collections import Counter
    from signedshift.segmentations import canonical_segmentation, classify, iter_segmentations
    sigma = Signature.negative(k)
    cornered = collapsed = containing = 0
    for pi in itertools.permutations(range(1, n + 1)):
        canon = Counter(canonical_segmentation(pi).indices)
        kind = classify(pi)
        for seg in iter_segmentations(pi, sigma, require_valid=True):
            have = Counter(seg.indices)
            if all(have[i] >= c for i, c in canon.items()):
                containing += 1
            elif kind.cornered:
                cornered += 1
            elif kind.value == "collapsed":
                collapsed += 1
            else:
                raise AssertionError(f"regular {pi} with {seg.indices} misses {canon}")
    return cornered, collapsed, containing


def allowed_count(sigma, n):
    from signedshift.segmentations import is_allowed
    return sum(is_allowed(pi, sigma) for pi in itertools.permutations(range(1, n + 1)))
