"""Compatible reflection orders and saturated-chain verification.

A reflection order for a set A of ground elements is an arrangement of
the transposition members of A.  It is compatible with A when, for every
i < j < k with T(i, j) and T(j, k) both members:

  * if T(i, k) is a member, it sits strictly between T(i, j) and
    T(j, k) in the arrangement (either orientation);
  * otherwise R(i, j, k) is a member iff T(i, j) precedes T(j, k).

For smooth w, multiplying the arrangement of the full set below w gives
w back, and both the prefix products and the reversed-word prefix
products walk saturated chains in Bruhat order.  This module constructs
such an arrangement wedge by wedge, verifies arbitrary arrangements,
enumerates all compatible arrangements, and explores the elementary-move
graph on them.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import bruhat
from .admissible import (
    AdmissibleSet,
    c23,
    c_t,
    find_wedges,
    invert_set,
    is_admissible,
    is_smooth_pattern,
    restrict,
    smoothness_witness,
)
from .ordering_engine import constrained_orders
from .permutations import (
    Transposition,
    Window,
    format_window,
    identity,
    inverse,
    length,
    times_transposition,
)

ReflectionOrder = tuple[Transposition, ...]

DEFAULT_MAX_REFLECTIONS = 10


class NotSmoothError(ValueError):
    """Raised when an operation requires a smooth permutation."""


def order_text(order: ReflectionOrder) -> str:
    return " ".join(f"T({i},{j})" for i, j in order)


def is_compatible(order: ReflectionOrder, A: AdmissibleSet) -> bool:
    """Check the two compatibility conditions against A.

    The arrangement must use exactly the reflection members of A.
    """
    refls = A.reflections
    if frozenset(order) != refls or len(order) != len(refls):
        raise ValueError("arrangement does not match the reflection members")
    pos = {t: p for p, t in enumerate(order)}
    n = A.degree
    for (i, j) in refls:
        for k in range(j + 1, n + 1):
            if (j, k) not in refls:
                continue
            p_ij, p_jk = pos[(i, j)], pos[(j, k)]
            if (i, k) in refls:
                p_ik = pos[(i, k)]
                if not (min(p_ij, p_jk) < p_ik < max(p_ij, p_jk)):
                    return False
            else:
                if (("R", i, j, k) in A.members) != (p_ij < p_jk):
                    return False
    return True


def compile_constraints(
    A: AdmissibleSet,
) -> tuple[list[tuple[Transposition, Transposition]], list[tuple[Transposition, Transposition, Transposition]]]:
    """Precedence and betweenness constraints equivalent to is_compatible."""
    refls = A.reflections
    precedence = []
    betweenness = []
    for (i, j) in sorted(refls):
        for k in range(j + 1, A.degree + 1):
            if (j, k) not in refls:
                continue
            if (i, k) in refls:
                betweenness.append(((i, j), (i, k), (j, k)))
            elif ("R", i, j, k) in A.members:
                precedence.append(((i, j), (j, k)))
            else:
                precedence.append(((j, k), (i, j)))
    return precedence, betweenness


def enumerate_compatible_orders(
    A: AdmissibleSet, max_reflections: int | None = DEFAULT_MAX_REFLECTIONS
) -> list[ReflectionOrder]:
    """All compatible arrangements, in the engine's deterministic order.

    Refuses sets with more reflections than max_reflections (pass None
    to lift the cap) since the search space grows factorially.
    """
    refls = sorted(A.reflections)
    if max_reflections is not None and len(refls) > max_reflections:
        raise ValueError(
            f"{len(refls)} reflections exceed the enumeration cap "
            f"{max_reflections}; raise max_reflections to proceed"
        )
    precedence, betweenness = compile_constraints(A)
    return list(constrained_orders(refls, precedence, betweenness))


def construction_steps(A: AdmissibleSet):
    """Yield (set, wedge) for each wedge step of the recursive build.

    Follows the same wedge choices as construct_for_set, including the
    switch to the inverse set when no wedge exists on the given side.
    """
    while A.members:
        if not A.reflections:
            raise ValueError("set has cycles but no reflections")
        wedges = find_wedges(A)
        if not wedges:
            A = invert_set(A)
            wedges = find_wedges(A)
            if not wedges:
                raise ValueError("no wedge on either side; set is not admissible")
        yield A, wedges[0]
        A = restrict(A, wedges[0])


def construct_for_set(A: AdmissibleSet) -> ReflectionOrder:
    """A compatible arrangement for an admissible set, built wedge by wedge.

    With wedge (i, j) the block T(i, j), T(i, j-1), ..., T(i, i+1) is
    appended after an arrangement for the restricted set.  When A has no
    wedge, the inverse set does; its arrangement is built and reversed.
    """
    if not A.members:
        return ()
    wedges = find_wedges(A)
    if wedges:
        i, j = wedges[0]
        inner = construct_for_set(restrict(A, (i, j)))
        return inner + tuple((i, r) for r in range(j, i, -1))
    inverted = invert_set(A)
    if not find_wedges(inverted):
        raise ValueError("no wedge on either side; set is not admissible")
    return tuple(reversed(construct_for_set(inverted)))


def construct_compatible_order(w: Window) -> ReflectionOrder:
    """A compatible arrangement of the reflections below smooth w."""
    if not is_smooth_pattern(w):
        witness = smoothness_witness(w)
        raise NotSmoothError(
            f"{format_window(w)} is not smooth (contains {witness[0]} at "
            f"positions {witness[1]}); no compatible arrangement exists"
        )
    return construct_for_set(c23(w))


@dataclass(frozen=True)
class VerificationReport:
    """Product and chain checks for one arrangement against one window."""

    window: Window
    order: ReflectionOrder
    product: Window
    prefix_chain: tuple[Window, ...]
    suffix_chain: tuple[Window, ...]
    product_ok: bool
    prefix_saturated: bool
    suffix_saturated: bool
    prefix_first_break: int | None
    suffix_first_break: int | None

    @property
    def all_ok(self) -> bool:
        return self.product_ok and self.prefix_saturated and self.suffix_saturated

    def to_dict(self) -> dict:
        return {
            "window": format_window(self.window),
            "order": [f"T({i},{j})" for i, j in self.order],
            "product": format_window(self.product),
            "prefix_chain": [format_window(x) for x in self.prefix_chain],
            "suffix_chain": [format_window(x) for x in self.suffix_chain],
            "product_ok": self.product_ok,
            "prefix_saturated": self.prefix_saturated,
            "suffix_saturated": self.suffix_saturated,
            "prefix_first_break": self.prefix_first_break,
            "suffix_first_break": self.suffix_first_break,
        }


def verify_order(w: Window, order: ReflectionOrder) -> VerificationReport:
    """Check the product identity and both saturated chains.

    The arrangement must use exactly the reflections below w.  The
    prefix chain multiplies the arrangement left to right from the
    identity; the suffix chain does the same on the reversed word, so it
    ends at w^{-1} whenever the product comes out to w.
    """
    if frozenset(order) != c_t(w) or len(order) != len(set(order)):
        raise ValueError("arrangement does not match the reflections below w")
    prefix = [identity(len(w))]
    for t in order:
        prefix.append(times_transposition(prefix[-1], t))
    suffix = [identity(len(w))]
    for t in reversed(order):
        suffix.append(times_transposition(suffix[-1], t))
    product = prefix[-1]
    return VerificationReport(
        window=w,
        order=tuple(order),
        product=product,
        prefix_chain=tuple(prefix),
        suffix_chain=tuple(suffix),
        product_ok=product == w,
        prefix_saturated=bruhat.is_saturated_chain(prefix),
        suffix_saturated=bruhat.is_saturated_chain(suffix),
        prefix_first_break=bruhat.first_noncover(prefix),
        suffix_first_break=bruhat.first_noncover(suffix),
    )


def _disjoint(a: Transposition, b: Transposition) -> bool:
    return not set(a) & set(b)


def _triangle_middle(a: Transposition, m: Transposition, b: Transposition) -> bool:
    # True when {a, m, b} are the three reflections on three indices and
    # m is the one joining the smallest and largest.
    support = set(a) | set(m) | set(b)
    if len(support) != 3 or len({a, m, b}) != 3:
        return False
    return m == (min(support), max(support))


def elementary_neighbors(
    order: ReflectionOrder, A: AdmissibleSet
) -> list[ReflectionOrder]:
    """Arrangements one elementary move away that stay compatible.

    Moves: swap two adjacent disjoint reflections; reverse three
    consecutive reflections forming a triangle with the long one in the
    middle.
    """
    out = []
    k = len(order)
    for p in range(k - 1):
        if _disjoint(order[p], order[p + 1]):
            cand = order[:p] + (order[p + 1], order[p]) + order[p + 2 :]
            if is_compatible(cand, A):
                out.append(cand)
    for p in range(k - 2):
        a, m, b = order[p : p + 3]
        if _triangle_middle(a, m, b):
            cand = order[:p] + (b, m, a) + order[p + 3 :]
            if is_compatible(cand, A):
                out.append(cand)
    return list(dict.fromkeys(out))


def order_graph(
    A: AdmissibleSet, max_reflections: int | None = DEFAULT_MAX_REFLECTIONS
) -> tuple[list[ReflectionOrder], list[tuple[int, int]]]:
    """Vertices (all compatible arrangements) and elementary-move edges."""
    vertices = enumerate_compatible_orders(A, max_reflections)
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    for i, v in enumerate(vertices):
        for u in elementary_neighbors(v, A):
            j = index[u]
            if i < j:
                edges.append((i, j))
    return vertices, edges


def order_graph_dot(
    A: AdmissibleSet, max_reflections: int | None = DEFAULT_MAX_REFLECTIONS
) -> str:
    """DOT source for the elementary-move graph with arrangements as labels."""
    vertices, edges = order_graph(A, max_reflections)
    lines = ["graph orders {"]
    for v in vertices:
        lines.append(f'  "{order_text(v)}";')
    for i, j in edges:
        lines.append(f'  "{order_text(vertices[i])}" -- "{order_text(vertices[j])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_connected(
    A: AdmissibleSet, max_reflections: int | None = DEFAULT_MAX_REFLECTIONS
) -> bool:
    """Is the elementary-move graph on compatible arrangements connected?

    Breadth-first search from the first enumerated arrangement, compared
    against the full enumeration.
    """
    vertices = enumerate_compatible_orders(A, max_reflections)
    if len(vertices) <= 1:
        return True
    seen = {vertices[0]}
    frontier = [vertices[0]]
    while frontier:
        nxt = []
        for v in frontier:
            for u in elementary_neighbors(v, A):
                if u not in seen:
                    seen.add(u)
                    nxt.append(u)
        frontier = nxt
    return len(seen) == len(vertices)


@dataclass(frozen=True)
class SmoothnessReport:
    """Smoothness verdict for one window with a certificate either way."""

    window: Window
    smooth: bool
    length: int
    reflections_below: int
    pattern_name: str | None
    pattern_positions: tuple[int, ...] | None
    order: ReflectionOrder | None
    verification: VerificationReport | None

    def to_dict(self) -> dict:
        return {
            "window": format_window(self.window),
            "smooth": self.smooth,
            "length": self.length,
            "reflections_below": self.reflections_below,
            "pattern_name": self.pattern_name,
            "pattern_positions": (
                list(self.pattern_positions) if self.pattern_positions else None
            ),
            "order": [f"T({i},{j})" for i, j in self.order] if self.order else None,
            "verification": self.verification.to_dict() if self.verification else None,
        }


def smoothness_report(w: Window) -> SmoothnessReport:
    """Decide smoothness and attach the certificate.

    Smooth windows get a constructed arrangement plus its verification;
    non-smooth ones get a forbidden-pattern occurrence and the strict
    excess of reflections below w over the length.
    """
    smooth = is_smooth_pattern(w)
    refl_count = len(c_t(w))
    lw = length(w)
    if smooth:
        order = construct_compatible_order(w)
        return SmoothnessReport(
            window=w,
            smooth=True,
            length=lw,
            reflections_below=refl_count,
            pattern_name=None,
            pattern_positions=None,
            order=order,
            verification=verify_order(w, order),
        )
    name, positions = smoothness_witness(w)
    return SmoothnessReport(
        window=w,
        smooth=False,
        length=lw,
        reflections_below=refl_count,
        pattern_name=name,
        pattern_positions=positions,
        order=None,
        verification=None,
    )
