"""Pattern containment for unsigned and signed permutations.

A subsequence is an occurrence of an unsigned pattern when it is
order-isomorphic to it, and of a signed pattern when the signs match
entrywise and the absolute values are order-isomorphic to the pattern's.
The three fixed forbidden lists characterizing the arc families are built
from their structural descriptions (the literal transcriptions live in the
test suite as double-entry bookkeeping).
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import NamedTuple, Sequence

from .arcsets import CircleOn, generate_hyperoctahedral, generate_symmetric
from .perms import Permutation, SignedPermutation


def _standardize(values: Sequence[int]) -> tuple[int, ...]:
    """Replace distinct values by their ranks 1..k."""
    rank = {v: r for r, v in enumerate(sorted(values), 1)}
    return tuple(rank[v] for v in values)


def _standardize_signed(values: Sequence[int]) -> tuple[int, ...]:
    """Ranks of the absolute values, carrying each entry's sign."""
    rank = {v: r for r, v in enumerate(sorted(abs(x) for x in values), 1)}
    return tuple(rank[abs(v)] if v > 0 else -rank[abs(v)] for v in values)


def _std_for(p):
    if isinstance(p, SignedPermutation):
        return _standardize_signed
    if isinstance(p, Permutation):
        return _standardize
    raise TypeError(f"expected a permutation, got {type(p).__name__}")


def contains(p, pattern) -> bool:
    """True iff some subsequence of p is an occurrence of the pattern.

    Both arguments must be Permutation, or both SignedPermutation.
    """
    if type(p) is not type(pattern):
        raise TypeError("permutation and pattern must be both unsigned or both signed")
    k = len(pattern)
    if k > len(p):
        return False
    std = _std_for(p)
    target = pattern.word
    return any(std(sub) == target for sub in itertools.combinations(p.word, k))


class Occurrence(NamedTuple):
    """A witness: 1-based positions, the matched pattern, and the values there."""

    positions: tuple[int, ...]
    pattern: Permutation | SignedPermutation
    values: tuple[int, ...]


def find_occurrence(p, patterns) -> Occurrence | None:
    """First occurrence of any listed pattern, or None.

    The search scans pattern lengths in increasing order and, within a
    length, index tuples lexicographically, so the reported witness is the
    lexicographically first occurrence by position tuple.
    """
    patterns = list(patterns)
    for pat in patterns:
        if type(pat) is not type(p):
            raise TypeError("permutation and patterns must be both unsigned or both signed")
    std = _std_for(p)
    by_length: dict[int, dict[tuple, object]] = {}
    for pat in patterns:
        by_length.setdefault(len(pat), {})[pat.word] = pat
    w = p.word
    for k in sorted(by_length):
        if k > len(w):
            continue
        table = by_length[k]
        for positions in itertools.combinations(range(len(w)), k):
            values = tuple(w[i] for i in positions)
            pat = table.get(std(values))
            if pat is not None:
                return Occurrence(tuple(i + 1 for i in positions), pat, values)
    return None


def avoids_all(p, patterns) -> bool:
    """True iff p contains none of the listed patterns."""
    return find_occurrence(p, patterns) is None


def triple_orientation(a: int, b: int, c: int) -> str:
    """"clockwise" iff a<b<c, b<c<a or c<a<b; "counterclockwise" otherwise.

    Clockwise means the triple runs in the direction of 1,2,...,n written
    clockwise on a circle.
    """
    if len({a, b, c}) != 3:
        raise ValueError(f"triple ({a},{b},{c}) has repeated entries")
    if a < b < c or b < c < a or c < a < b:
        return "clockwise"
    return "counterclockwise"


@lru_cache(maxsize=None)
def arc_forbidden() -> tuple[Permutation, ...]:
    """The 8 size-4 patterns whose avoidance characterizes arc permutations:
    those with |first - second| = 2."""
    pats = [p for p in generate_symmetric(4) if abs(p.word[0] - p.word[1]) == 2]
    assert len(pats) == 8
    return tuple(sorted(pats, key=lambda p: p.word))


@lru_cache(maxsize=None)
def signed_arc_forbidden() -> tuple[SignedPermutation, ...]:
    """The 24 signed size-3 patterns characterizing signed arc permutations:
    [±a,-b,±c] for clockwise triples (a,b,c) and [±a,b,±c] for
    counterclockwise ones."""
    pats = []
    for a, b, c in itertools.permutations((1, 2, 3)):
        mid = -b if triple_orientation(a, b, c) == "clockwise" else b
        for s_first in (1, -1):
            for s_last in (1, -1):
                pats.append(SignedPermutation((s_first * a, mid, s_last * c)))
    assert len(pats) == 24
    return tuple(sorted(pats, key=lambda p: p.word))


@lru_cache(maxsize=None)
def b_arc_forbidden() -> tuple[SignedPermutation, ...]:
    """The 24 signed size-3 patterns characterizing B-arc permutations:
    [a,b,c] whose last two entries sit at circle distance >= 2."""
    circle = CircleOn(3)
    pats = [
        p
        for p in generate_hyperoctahedral(3)
        if circle.distance(p.word[1], p.word[2]) >= 2
    ]
    assert len(pats) == 24
    return tuple(sorted(pats, key=lambda p: p.word))
