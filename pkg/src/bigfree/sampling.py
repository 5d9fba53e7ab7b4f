"""Seeded sample generators shared by the property suites and the tests."""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from random import Random
from typing import List, Optional, Tuple

from .cayley import GraphPoint, cayley_point
from .ordered_abelian import LexVector, ZERO
from .tree import TreePoint
from .triples import EdgeTriple
from .words import Cancellation, Word, length_vector


def random_word(rng: Random, max_len: int, max_index: int) -> Word:
    """Uniform letters, cancellations allowed."""
    n = rng.randint(0, max_len)
    return Word((rng.randint(1, max_index), rng.choice((1, -1))) for _ in range(n))


def random_reduced_word(rng: Random, max_len: int, max_index: int) -> Word:
    """Non-backtracking walk of uniform length."""
    n = rng.randint(0, max_len)
    letters: List[tuple] = []
    for _ in range(n):
        while True:
            lt = (rng.randint(1, max_index), rng.choice((1, -1)))
            if not letters or letters[-1] != (lt[0], -lt[1]):
                break
        letters.append(lt)
    return Word._make(tuple(letters), True)


def random_cancellation(rng: Random, w: Word) -> Optional[Cancellation]:
    """A random valid cancellation of w, or None when w is reduced.

    Builds disjoint nested blocks: each starts from an adjacent cancelling
    pair and optionally grows outward while the flanking letters cancel.
    Always nonempty when any adjacent pair cancels.
    """
    letters = w.letters
    n = len(letters)
    used = [False] * n
    pairs: List[Tuple[int, int]] = []
    first = True
    i = 0
    while i < n - 1:
        a, b = letters[i], letters[i + 1]
        if not used[i] and not used[i + 1] and b == (a[0], -a[1]) and (first or rng.random() < 0.7):
            first = False
            lo, hi = i, i + 1
            used[lo] = used[hi] = True
            pairs.append((lo + 1, hi + 1))
            while (
                lo > 0 and hi < n - 1 and not used[lo - 1] and not used[hi + 1]
                and letters[hi + 1] == (letters[lo - 1][0], -letters[lo - 1][1])
                and rng.random() < 0.5
            ):
                lo -= 1
                hi += 1
                used[lo] = used[hi] = True
                pairs.append((lo + 1, hi + 1))
            i = hi + 1
        else:
            i += 1
    if not pairs:
        return None
    return Cancellation(pairs)


def random_offset_inside(rng: Random, index: int, spread: int = 4) -> LexVector:
    """A vector strictly between 0 and the unit at index."""
    j = index + rng.randint(1, spread)
    c = rng.randint(1, 5)
    if rng.random() < 0.5:
        return LexVector.unit(j, c)
    return LexVector.unit(index) - LexVector.unit(j, c)


def random_tree_point(rng: Random, max_len: int = 12, max_index: int = 5) -> TreePoint:
    """A point on a random edge of the interval toward a random word."""
    g = random_reduced_word(rng, max_len, max_index)
    if not g.letters:
        return TreePoint(ZERO, g)
    cut = rng.randint(0, len(g.letters))
    base = length_vector(Word._make(g.letters[:cut], True))
    if cut == len(g.letters) or rng.random() < 0.3:
        return TreePoint(base, g)
    return TreePoint(base + random_offset_inside(rng, g.letters[cut][0]), g)


def random_edge_triple(rng: Random, max_len: int = 10, max_index: int = 5) -> EdgeTriple:
    w = random_reduced_word(rng, max_len, max_index)
    sign = rng.choice((1, -1))
    while True:
        index = rng.randint(1, max_index)
        if not w.letters or w.letters[-1] != (index, -sign):
            break
    return EdgeTriple(w, index, sign, random_offset_inside(rng, index))


def random_cayley_point(rng: Random, max_len: int = 10, max_index: int = 5) -> GraphPoint:
    w = random_reduced_word(rng, max_len, max_index)
    if rng.random() < 0.25:
        return w
    sign = rng.choice((1, -1))
    while True:
        index = rng.randint(1, max_index)
        if not w.letters or w.letters[-1] != (index, -sign):
            break
    den = rng.randint(2, 12)
    return cayley_point(w, index, sign, Fraction(rng.randint(1, den - 1), den))


def random_small_vector(rng: Random, max_index: int = 4, bound: int = 2) -> LexVector:
    support = rng.sample(range(1, max_index + 1), rng.randint(0, min(3, max_index)))
    return LexVector((i, rng.randint(-bound, bound)) for i in support)


def enumerate_reduced_words(max_len: int, max_index: int) -> List[Word]:
    """Every reduced word up to a length over the first max_index generators.

    Deterministic order: by length, then by the positional letter sequence.
    """
    alphabet = [(k, s) for k in range(1, max_index + 1) for s in (1, -1)]
    out = [Word._make((), True)]
    layer: List[tuple] = [()]
    for _ in range(max_len):
        next_layer = []
        for letters in layer:
            for lt in alphabet:
                if letters and letters[-1] == (lt[0], -lt[1]):
                    continue
                next_layer.append(letters + (lt,))
        out.extend(Word._make(ls, True) for ls in next_layer)
        layer = next_layer
    return out


def enumerate_small_vectors(indices: Tuple, bound: int = 2) -> List[LexVector]:
    """Every vector supported on the given indices with entries in [-bound, bound]."""
    values = range(-bound, bound + 1)
    return [
        LexVector(zip(indices, combo))
        for combo in product(values, repeat=len(indices))
    ]
