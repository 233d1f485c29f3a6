"""Independent reference implementations used only by the test suite.

Everything here is deliberately slow and definitional: reachability
closures instead of rank matrices, brute subsequence scans instead of
linear passes, full factorial enumeration instead of backtracking. The
library must agree with these on every domain small enough to sweep.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


# ------------------------------------------------------- permutations

def brute_length(w: tuple[int, ...]) -> int:
    n = len(w)
    return sum(
        1 for a in range(n) for b in range(a + 1, n) if w[a] > w[b]
    )


def swap_positions(w: tuple[int, ...], a: int, b: int) -> tuple[int, ...]:
    # 1-based a < b
    out = list(w)
    out[a - 1], out[b - 1] = out[b - 1], out[a - 1]
    return tuple(out)


def all_transp(n: int) -> list[tuple[int, int]]:
    return [(a, b) for a in range(1, n) for b in range(a + 1, n + 1)]


# ------------------------------------------------- Bruhat order, type A

@lru_cache(maxsize=None)
def bruhat_downsets(n: int) -> dict[tuple[int, ...], frozenset]:
    """Downset of every w in S_n under the definitional order.

    x <= w iff x is reachable from w by repeatedly multiplying by any
    transposition that decreases length (by any amount). No rank
    matrices, no cover lemma.
    """
    elements = sorted(
        (tuple(p) for p in itertools.permutations(range(1, n + 1))),
        key=brute_length,
    )
    down: dict[tuple[int, ...], frozenset] = {}
    for w in elements:
        acc = {w}
        lw = brute_length(w)
        for (a, b) in all_transp(n):
            x = swap_positions(w, a, b)
            if brute_length(x) < lw:
                acc |= down[x]
        down[w] = frozenset(acc)
    return down


def bruhat_leq_oracle(x: tuple[int, ...], y: tuple[int, ...]) -> bool:
    return x in bruhat_downsets(len(y))[y]


def cover_pairs_oracle(n: int) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    down = bruhat_downsets(n)
    pairs = set()
    for y, ds in down.items():
        ly = brute_length(y)
        for x in ds:
            if brute_length(x) == ly - 1:
                pairs.add((x, y))
    return pairs


# ------------------------------------------------------------ patterns

def contains_pattern_brute(w: tuple[int, ...], p: tuple[int, ...]) -> bool:
    k = len(p)
    rank = sorted(range(k), key=lambda i: p[i])
    for combo in itertools.combinations(w, k):
        # order-isomorphic iff sorting positions by value matches p's
        if sorted(range(k), key=lambda i: combo[i]) == rank:
            return True
    return False


# ---------------------------------------------- order enumeration brute

def compatible_orders_brute(admissible_set, is_compatible) -> list[tuple]:
    """All arrangements of the reflection part that pass the predicate.

    Checks every factorial arrangement; only usable for small sets.
    """
    refls = sorted(admissible_set.reflections)
    out = []
    for arrangement in itertools.permutations(refls):
        if is_compatible(arrangement, admissible_set):
            out.append(arrangement)
    return sorted(out)


# ------------------------------------------------------------- type D

def d_negative_count_even(window: tuple[int, ...]) -> bool:
    return sum(1 for v in window if v < 0) % 2 == 0


def d_downsets(group) -> dict[tuple[int, ...], frozenset]:
    """Definitional Bruhat downsets for a type-D Weyl group.

    Same recursion as the type-A oracle: walk down along any reflection
    multiplication that decreases the roots-sent-negative count.
    Independent of the group's graded cover construction.
    """
    from smoothchains.type_d import (
        length_by_roots,
        positive_roots,
        reflection_window,
        sp_compose,
    )

    n = group.rank
    refl = [reflection_window(a, n) for a in positive_roots(n)]
    elements = sorted(group.windows, key=length_by_roots)
    down: dict[tuple[int, ...], frozenset] = {}
    for w in elements:
        acc = {w}
        lw = length_by_roots(w)
        for t in refl:
            x = sp_compose(w, t)
            if length_by_roots(x) < lw:
                acc |= down[x]
        down[w] = frozenset(acc)
    return down


def d_cover_pairs_oracle(group) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
    from smoothchains.type_d import length_by_roots

    down = d_downsets(group)
    pairs = set()
    for y, ds in down.items():
        ly = length_by_roots(y)
        for x in ds:
            if length_by_roots(x) == ly - 1:
                pairs.add((x, y))
    return pairs


def root_reflection_image(alpha, beta):
    """Reflect beta in the hyperplane of alpha via the inner-product formula."""
    dot_ab = sum(a * b for a, b in zip(alpha, beta))
    dot_aa = sum(a * a for a in alpha)
    coeff = 2 * dot_ab // dot_aa
    return tuple(b - coeff * a for a, b in zip(alpha, beta))
