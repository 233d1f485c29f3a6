"""Reflections, 3-cycles, and admissible sets below a permutation.

The ground set of degree n collects the transpositions T(i, j) together
with the two families of 3-cycles on indices i < j < k:

    R(i, j, k) = T(i, j) * T(j, k)   (sends i -> j -> k -> i)
    L(i, j, k) = T(j, k) * T(i, j)   (sends i -> k -> j -> i)

An element is stored as a label tuple ("T", i, j), ("R", i, j, k) or
("L", i, j, k).  A set A of such labels is admissible when

  (a) it is downward closed under Bruhat order inside the ground set,
  (b) R(i, j, l) in A and L(i, k, l) in A force T(i, l) in A, and
  (c) T(i, j) in A and T(j, k) in A force R(i, j, k) or L(i, j, k) in A.

For smooth w the set of ground elements below w is admissible; the wedge
and restriction machinery here drives the recursive construction of a
compatible reflection order in the orders module.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from . import bruhat
from .permutations import (
    Transposition,
    Window,
    contains_pattern,
    inverse,
    length,
    mu,
    pattern_witness,
    transposition_window,
)

Element = tuple  # ("T", i, j) | ("R", i, j, k) | ("L", i, j, k)

_KINDS = ("T", "R", "L")


def refl(i: int, j: int) -> Element:
    if not 1 <= i < j:
        raise ValueError(f"T needs 1 <= i < j, got ({i}, {j})")
    return ("T", i, j)


def rcycle(i: int, j: int, k: int) -> Element:
    if not 1 <= i < j < k:
        raise ValueError(f"R needs 1 <= i < j < k, got ({i}, {j}, {k})")
    return ("R", i, j, k)


def lcycle(i: int, j: int, k: int) -> Element:
    if not 1 <= i < j < k:
        raise ValueError(f"L needs 1 <= i < j < k, got ({i}, {j}, {k})")
    return ("L", i, j, k)


def validate_element(elem: Element, degree: int | None = None) -> Element:
    """Check label shape and index bounds; return the element."""
    if not isinstance(elem, tuple) or not elem or elem[0] not in _KINDS:
        raise ValueError(f"bad element label: {elem!r}")
    kind, *idx = elem
    want = 2 if kind == "T" else 3
    if len(idx) != want or any(not isinstance(v, int) for v in idx):
        raise ValueError(f"bad element label: {elem!r}")
    if not all(a < b for a, b in zip(idx, idx[1:])) or idx[0] < 1:
        raise ValueError(f"element indices must increase: {elem!r}")
    if degree is not None and idx[-1] > degree:
        raise ValueError(f"element {elem!r} does not fit in degree {degree}")
    return elem


def element_sort_key(elem: Element):
    """Reflections first by indices, then cycles by indices with R before L."""
    kind, *idx = elem
    if kind == "T":
        return (0, tuple(idx), 0)
    return (1, tuple(idx), 0 if kind == "R" else 1)


def format_element(elem: Element) -> str:
    """Text form, e.g. "T(1,3)" or "R(1,2,4)".

    >>> format_element(("R", 1, 2, 4))
    'R(1,2,4)'
    """
    kind, *idx = validate_element(elem)
    return f"{kind}({','.join(str(v) for v in idx)})"


def parse_element(text: str) -> Element:
    """Inverse of format_element.

    >>> parse_element("T(1,3)")
    ('T', 1, 3)
    """
    text = text.strip()
    if len(text) < 4 or text[0] not in _KINDS or text[1] != "(" or text[-1] != ")":
        raise ValueError(f"bad element text: {text!r}")
    try:
        idx = [int(part) for part in text[2:-1].split(",")]
    except ValueError:
        raise ValueError(f"bad element text: {text!r}") from None
    return validate_element((text[0], *idx))


def invert_element(elem: Element) -> Element:
    """Label of the inverse permutation: fixes T, swaps R and L."""
    kind, *idx = validate_element(elem)
    if kind == "T":
        return elem
    return ("L" if kind == "R" else "R", *idx)


@lru_cache(maxsize=None)
def realize(elem: Element, n: int) -> Window:
    """The element as a window of degree n."""
    validate_element(elem, n)
    kind, *idx = elem
    if kind == "T":
        return transposition_window(n, *idx)
    i, j, k = idx
    out = list(range(1, n + 1))
    if kind == "R":
        out[i - 1], out[j - 1], out[k - 1] = j, k, i
    else:
        out[i - 1], out[j - 1], out[k - 1] = k, i, j
    return tuple(out)


@lru_cache(maxsize=None)
def all_elements23(n: int) -> tuple[Element, ...]:
    """The degree-n ground set, in display order."""
    elems: list[Element] = [("T", i, j) for i, j in itertools.combinations(range(1, n + 1), 2)]
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        elems.append(("R", i, j, k))
        elems.append(("L", i, j, k))
    return tuple(sorted(elems, key=element_sort_key))


@lru_cache(maxsize=None)
def _below_within_ground(n: int) -> dict[Element, frozenset[Element]]:
    # For each ground element, the ground elements weakly below it.
    ground = all_elements23(n)
    windows = {e: realize(e, n) for e in ground}
    out = {}
    for e in ground:
        we = windows[e]
        out[e] = frozenset(
            f for f in ground
            if length(windows[f]) <= length(we) and bruhat.leq(windows[f], we)
        )
    return out


def element23_leq(elem: Element, w: Window) -> bool:
    """Is the realized element below w in Bruhat order?"""
    return bruhat.leq(realize(elem, len(w)), w)


@dataclass(frozen=True)
class AdmissibleSet:
    """A set of ground elements of a fixed degree (admissibility not implied)."""

    degree: int
    members: frozenset

    def __contains__(self, elem: Element) -> bool:
        return elem in self.members

    def __len__(self) -> int:
        return len(self.members)

    @property
    def reflections(self) -> frozenset[Transposition]:
        """Index pairs (i, j) with T(i, j) a member."""
        return frozenset((e[1], e[2]) for e in self.members if e[0] == "T")

    def sorted_members(self) -> list[Element]:
        return sorted(self.members, key=element_sort_key)

    def member_texts(self) -> list[str]:
        return [format_element(e) for e in self.sorted_members()]


def make_set(degree: int, members: Iterable[Element]) -> AdmissibleSet:
    """Build an AdmissibleSet after validating every label against the degree."""
    mem = frozenset(members)
    for e in mem:
        validate_element(e, degree)
    return AdmissibleSet(degree=degree, members=mem)


def invert_set(A: AdmissibleSet) -> AdmissibleSet:
    """Member-wise inverse; the ground set below w^{-1} when A is the one below w."""
    return AdmissibleSet(A.degree, frozenset(invert_element(e) for e in A.members))


def c_t(w: Window) -> frozenset[Transposition]:
    """Transpositions below w in Bruhat order."""
    n = len(w)
    mw = mu(w)
    mwi = mu(inverse(w))
    return frozenset(
        (i, j)
        for i in range(1, n + 1)
        for j in range(i + 1, n + 1)
        if mw[i - 1] >= j and mwi[i - 1] >= j
    )


def c23(w: Window) -> AdmissibleSet:
    """All ground elements below w in Bruhat order."""
    n = len(w)
    lw = length(w)
    members = [("T", i, j) for i, j in c_t(w)]
    for i, j, k in itertools.combinations(range(1, n + 1), 3):
        for kind in ("R", "L"):
            elem = (kind, i, j, k)
            win = realize(elem, n)
            if length(win) <= lw and bruhat.leq(win, w):
                members.append(elem)
    return AdmissibleSet(n, frozenset(members))


def is_smooth_pattern(w: Window) -> bool:
    """Smoothness by pattern avoidance of 3412 and 4231."""
    return not contains_pattern(w, (3, 4, 1, 2)) and not contains_pattern(
        w, (4, 2, 3, 1)
    )


def is_smooth_length(w: Window) -> bool:
    """Smoothness by the count criterion: #reflections below w equals length."""
    return len(c_t(w)) == length(w)


def smoothness_witness(w: Window) -> tuple[str, tuple[int, ...]] | None:
    """A forbidden pattern occurrence for non-smooth w, else None.

    Returns ("3412" | "4231", positions), preferring a 3412 occurrence.
    """
    for name, pat in (("3412", (3, 4, 1, 2)), ("4231", (4, 2, 3, 1))):
        hit = pattern_witness(w, pat)
        if hit is not None:
            return (name, hit)
    return None


@dataclass(frozen=True)
class AdmissibilityViolation:
    axiom: str  # "closure" | "cycle-pair" | "reflection-pair"
    witness: tuple

    def describe(self) -> str:
        parts = ", ".join(format_element(e) for e in self.witness)
        return f"axiom {self.axiom} fails at {parts}"


def admissibility_violation(A: AdmissibleSet) -> AdmissibilityViolation | None:
    """First failed admissibility axiom, or None when A is admissible."""
    below = _below_within_ground(A.degree)
    for e in A.sorted_members():
        missing = below[e] - A.members
        if missing:
            culprit = min(missing, key=element_sort_key)
            return AdmissibilityViolation("closure", (e, culprit))
    # (b): an R and an L sharing outer indices force the long reflection.
    r_outer = {}
    l_outer = {}
    for e in A.members:
        if e[0] == "R":
            r_outer.setdefault((e[1], e[3]), e)
        elif e[0] == "L":
            l_outer.setdefault((e[1], e[3]), e)
    for (i, l), r_elem in sorted(r_outer.items()):
        if (i, l) in l_outer and ("T", i, l) not in A.members:
            return AdmissibilityViolation(
                "cycle-pair", (r_elem, l_outer[(i, l)], ("T", i, l))
            )
    # (c): chained reflections force one of the two 3-cycles.
    refls = A.reflections
    for (i, j) in sorted(refls):
        for k in range(j + 1, A.degree + 1):
            if (j, k) in refls:
                if ("R", i, j, k) not in A.members and ("L", i, j, k) not in A.members:
                    return AdmissibilityViolation(
                        "reflection-pair", (("T", i, j), ("T", j, k))
                    )
    return None


def is_admissible(A: AdmissibleSet) -> bool:
    return admissibility_violation(A) is None


def find_wedges(A: AdmissibleSet) -> tuple[Transposition, ...]:
    """Index pairs (i, j) that are wedges of A, lexicographically.

    (i, j) is a wedge when T(i, j) is a member, T(i-1, i) is not (vacuous
    for i = 1), and R(i, j, j+1) is not (vacuous for j = degree).
    """
    out = []
    for (i, j) in sorted(A.reflections):
        if i > 1 and ("T", i - 1, i) in A.members:
            continue
        if j < A.degree and ("R", i, j, j + 1) in A.members:
            continue
        out.append((i, j))
    return tuple(out)


def restrict(A: AdmissibleSet, wedge: Transposition) -> AdmissibleSet:
    """Drop every member whose first index is the wedge's lower index.

    This is the recursion step of the order construction: with wedge
    (i, j), all of T(i, r), R(i, r, l), L(i, r, l) leave the set.
    """
    if wedge not in find_wedges(A):
        raise ValueError(f"{wedge} is not a wedge of the set")
    i = wedge[0]
    kept = frozenset(e for e in A.members if e[1] != i)
    return AdmissibleSet(A.degree, kept)


def wedge_window_test(w: Window, i: int, j: int) -> bool:
    """Window-level wedge test for the full set below w.

    (i, j) is a wedge of c23(w) iff w maps {1..i-1} onto itself,
    w(i) >= j, and w^{-1}(i) = j.
    """
    n = len(w)
    if not 1 <= i < j <= n:
        raise ValueError(f"bad wedge indices ({i}, {j}) for degree {n}")
    if set(w[: i - 1]) != set(range(1, i)):
        return False
    return w[i - 1] >= j and inverse(w)[i - 1] == j
