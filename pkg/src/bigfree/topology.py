"""Two neighborhood bases on the group and the predicates that compare them.

A letter ball around w keeps every element reachable from w by a tail using
only letters strictly above a threshold index; a metric ball keeps every
element strictly closer than a positive vector.  Both predicates factor
through the difference word reduce(w^-1 v), which callers doing bulk sweeps
can precompute.
"""

from __future__ import annotations

from .ordered_abelian import AlphabetIndex, BigFreeError, LexVector, ZERO, check_index
from .words import Word, inverse, length_vector, multiply


def difference_word(w: Word, v: Word) -> Word:
    """reduce(w^-1 v) for reduced w, v."""
    if not (w.reduced and v.reduced):
        raise BigFreeError("ball membership is defined for reduced words")
    return multiply(inverse(w), v)


def uses_only_letters_above(u: Word, threshold: AlphabetIndex) -> bool:
    check_index(threshold)
    return all(idx > threshold for idx, _ in u.letters)


def in_letter_ball(w: Word, threshold: AlphabetIndex, v: Word) -> bool:
    """True iff v = w u where every letter of u has index > threshold."""
    return uses_only_letters_above(difference_word(w, v), threshold)


def in_metric_ball(w: Word, eps: LexVector, v: Word) -> bool:
    """True iff the distance from w to v is strictly below eps (eps > 0)."""
    if not eps > ZERO:
        raise BigFreeError("metric ball radius must be positive")
    return length_vector(difference_word(w, v)) < eps
