"""Root system, signed permutations, and the order conjecture in type D.

Roots live in Z^n as coefficient tuples over e_1..e_n.  The positive
roots are e_j - e_i and e_j + e_i for j > i; the simple roots are the
consecutive differences together with e_2 + e_1.  Group elements are
signed windows: w = (w(1), ..., w(n)) with w(i) = +-k meaning that w
sends e_i to sign * e_k; an even number of entries are negative.

The conjecture under test: for smooth w (palindromic lower interval,
which in this simply laced type is smoothness), the set of reflections
and ordered two-reflection products below w is admissible, admits a
compatible arrangement of its reflections, and every compatible
arrangement multiplies back to w.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

from .ordering_engine import constrained_orders

Root = tuple[int, ...]
SignedWindow = tuple[int, ...]
Label = tuple  # ("t", alpha) | ("tt", alpha, beta)

DEFAULT_RANK_LIMIT = 5
CONJECTURE_MAX_REFLECTIONS = 12


# ---------------------------------------------------------------- roots

def _basis(n: int, idx: int, sign: int = 1) -> Root:
    out = [0] * n
    out[idx - 1] = sign
    return tuple(out)


def _check_rank(n: int) -> None:
    if n < 2:
        raise ValueError(f"type D needs rank >= 2, got {n}")


@lru_cache(maxsize=None)
def positive_roots(n: int) -> tuple[Root, ...]:
    """e_j - e_i and e_j + e_i for j > i, sorted as coefficient tuples."""
    _check_rank(n)
    roots = []
    for i, j in itertools.combinations(range(1, n + 1), 2):
        minus = [0] * n
        minus[j - 1], minus[i - 1] = 1, -1
        plus = [0] * n
        plus[j - 1], plus[i - 1] = 1, 1
        roots.append(tuple(minus))
        roots.append(tuple(plus))
    return tuple(sorted(roots))


@lru_cache(maxsize=None)
def simple_roots(n: int) -> tuple[Root, ...]:
    """Consecutive differences plus e_2 + e_1, in that listing order."""
    _check_rank(n)
    simples = [
        tuple_sub(_basis(n, i + 1), _basis(n, i)) for i in range(1, n)
    ]
    simples.append(tuple_add(_basis(n, 2), _basis(n, 1)))
    return tuple(simples)


def all_roots(n: int) -> tuple[Root, ...]:
    pos = positive_roots(n)
    return tuple(sorted(pos + tuple(tuple(-c for c in a) for a in pos)))


def tuple_add(a: Root, b: Root) -> Root:
    return tuple(x + y for x, y in zip(a, b))


def tuple_sub(a: Root, b: Root) -> Root:
    return tuple(x - y for x, y in zip(a, b))


def is_positive_root(alpha: Root) -> bool:
    return alpha in set(positive_roots(len(alpha)))


def root_text(alpha: Root) -> str:
    """Symbolic form, e.g. "e3-e1" or "e2+e1".

    >>> root_text((-1, 0, 1))
    'e3-e1'
    """
    support = [(i + 1, c) for i, c in enumerate(alpha) if c]
    if len(support) != 2 or {abs(c) for _, c in support} != {1}:
        raise ValueError(f"not a type D root: {alpha}")
    (i, ci), (j, cj) = support
    if cj != 1:
        raise ValueError(f"not a positive type D root: {alpha}")
    return f"e{j}{'+' if ci == 1 else '-'}e{i}"


def parse_root(text: str, n: int) -> Root:
    """Inverse of root_text for degree n."""
    text = text.strip().replace(" ", "")
    for sep, sign in (("+", 1), ("-", -1)):
        if sep in text[1:]:
            left, right = text.split(sep, 1)
            if left.startswith("e") and right.startswith("e"):
                j, i = int(left[1:]), int(right[1:])
                if not 1 <= i < j <= n:
                    raise ValueError(f"bad root text: {text!r}")
                out = [0] * n
                out[j - 1], out[i - 1] = 1, sign
                return tuple(out)
    raise ValueError(f"bad root text: {text!r}")


def root_poset_covers(n: int) -> tuple[tuple[Root, Root], ...]:
    """Pairs (alpha, beta) with beta - alpha simple, sorted."""
    pos = set(positive_roots(n))
    simples = set(simple_roots(n))
    out = [
        (a, b)
        for a in pos
        for b in pos
        if tuple_sub(b, a) in simples
    ]
    return tuple(sorted(out))


def leading_simple(alpha: Root) -> Root:
    """The simple root attached to a positive root by its top coordinate.

    e_j - e_i and e_j + e_i both map to e_j - e_{j-1}, except that
    e_2 + e_1 maps to itself.
    """
    n = len(alpha)
    support = sorted(i + 1 for i, c in enumerate(alpha) if c)
    if len(support) != 2 or not is_positive_root(alpha):
        raise ValueError(f"not a positive type D root: {alpha}")
    i, j = support
    if alpha[i - 1] == 1 and (j, i) == (2, 1):
        return tuple_add(_basis(n, 2), _basis(n, 1))
    return tuple_sub(_basis(n, j), _basis(n, j - 1))


def simple_rank(alpha: Root) -> int:
    """Comparison rank of a simple root: j for e_j - e_{j-1}, 2 for e_2 + e_1."""
    support = [i + 1 for i, c in enumerate(alpha) if c]
    if len(support) != 2:
        raise ValueError(f"not a type D simple root: {alpha}")
    return max(support)


def simple_precedes(a: Root, b: Root) -> bool:
    """Strict comparison of simple roots by rank.

    Distinct simples of equal rank (e_2 - e_1 versus e_2 + e_1) are
    incomparable by design; asking about them raises, and the structure
    of the root system keeps such comparisons from ever being needed:
    summable positive roots have distinct leading simples.
    """
    ra, rb = simple_rank(a), simple_rank(b)
    if a != b and ra == rb:
        raise ValueError(
            f"incomparable simple roots {root_text(a)} and {root_text(b)}"
        )
    return ra < rb


# --------------------------------------------- signed window arithmetic

def sp_identity(n: int) -> SignedWindow:
    return tuple(range(1, n + 1))


def validate_signed_window(w) -> SignedWindow:
    """Check the window is a signed permutation with evenly many sign flips."""
    win = tuple(int(v) for v in w)
    n = len(win)
    if sorted(abs(v) for v in win) != list(range(1, n + 1)) or 0 in win:
        raise ValueError(f"not a signed window: {win}")
    if sum(1 for v in win if v < 0) % 2:
        raise ValueError(f"odd number of sign flips: {win}")
    return win


def sp_parse(text: str) -> SignedWindow:
    """Comma-separated signed integers, e.g. "-2,-1,3"."""
    try:
        values = [int(part) for part in text.strip().split(",")]
    except ValueError:
        raise ValueError(f"bad signed window text: {text!r}") from None
    return validate_signed_window(values)


def sp_text(w: SignedWindow) -> str:
    return ",".join(str(v) for v in w)


def sp_compose(u: SignedWindow, v: SignedWindow) -> SignedWindow:
    """(u * v)(x) = u(v(x)), signs multiplying through."""
    if len(u) != len(v):
        raise ValueError("degree mismatch in composition")
    out = []
    for x in range(len(u)):
        val = v[x]
        img = u[abs(val) - 1]
        out.append(img if val > 0 else -img)
    return tuple(out)


def sp_inverse(w: SignedWindow) -> SignedWindow:
    out = [0] * len(w)
    for pos, val in enumerate(w):
        out[abs(val) - 1] = (pos + 1) if val > 0 else -(pos + 1)
    return tuple(out)


def act_on_root(w: SignedWindow, alpha: Root) -> Root:
    """Image of a root: w sends e_a to sign(w(a)) * e_{|w(a)|}."""
    out = [0] * len(w)
    for a, c in enumerate(alpha, start=1):
        if c:
            img = w[a - 1]
            out[abs(img) - 1] += c * (1 if img > 0 else -1)
    return tuple(out)


def length_by_roots(w: SignedWindow) -> int:
    """Number of positive roots sent negative; the Coxeter length."""
    n = len(w)
    return sum(
        1
        for alpha in positive_roots(n)
        if not is_positive_root(act_on_root(w, alpha))
    )


def reflection_window(alpha: Root, n: int) -> SignedWindow:
    """t_alpha as a signed window.

    For e_j - e_i this swaps coordinates i and j; for e_j + e_i it swaps
    them and flips both signs.
    """
    support = [(idx + 1, c) for idx, c in enumerate(alpha) if c]
    if len(support) != 2 or not is_positive_root(alpha):
        raise ValueError(f"not a positive type D root: {alpha}")
    (i, ci), (j, _) = support
    out = list(range(1, n + 1))
    if ci == -1:
        out[i - 1], out[j - 1] = j, i
    else:
        out[i - 1], out[j - 1] = -j, -i
    return tuple(out)


# ------------------------------------------------------- the Weyl group

class WeylGroupD:
    """The full type D Weyl group with Bruhat order bitsets.

    Elements are listed sorted by (length, window); ids index that
    listing.  Cover edges go through a reflection with length increasing
    by exactly one, which in a length-graded order pins the covers.
    Downset bitmasks are accumulated along cover edges in length order.
    """

    def __init__(self, rank: int, limit: int = DEFAULT_RANK_LIMIT):
        _check_rank(rank)
        if rank > limit:
            raise ValueError(
                f"rank {rank} exceeds the group-size limit {limit}; "
                f"pass a higher limit explicitly to proceed"
            )
        self.rank = rank
        gens = [reflection_window(a, rank) for a in simple_roots(rank)]
        lengths_by_window: dict[SignedWindow, int] = {sp_identity(rank): 0}
        frontier = [sp_identity(rank)]
        while frontier:
            nxt = []
            for w in frontier:
                for g in gens:
                    y = sp_compose(w, g)
                    if y not in lengths_by_window:
                        lengths_by_window[y] = lengths_by_window[w] + 1
                        nxt.append(y)
            frontier = nxt
        self.windows: tuple[SignedWindow, ...] = tuple(
            sorted(lengths_by_window, key=lambda w: (lengths_by_window[w], w))
        )
        self.index: dict[SignedWindow, int] = {
            w: i for i, w in enumerate(self.windows)
        }
        self.lengths: tuple[int, ...] = tuple(
            lengths_by_window[w] for w in self.windows
        )
        self.max_length = max(self.lengths)

        refls = [reflection_window(a, rank) for a in positive_roots(rank)]
        covers_down: list[list[int]] = [[] for _ in self.windows]
        for i, w in enumerate(self.windows):
            lw = self.lengths[i]
            for t in refls:
                y = sp_compose(w, t)
                j = self.index[y]
                if self.lengths[j] == lw + 1:
                    covers_down[j].append(i)
        self.covers_down: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(c)) for c in covers_down
        )
        below = [0] * len(self.windows)
        for j in range(len(self.windows)):  # ids ascend with length
            mask = 1 << j
            for i in self.covers_down[j]:
                mask |= below[i]
            below[j] = mask
        self.below: tuple[int, ...] = tuple(below)
        self._level_masks: tuple[int, ...] = tuple(
            sum(1 << i for i in range(len(self.windows)) if self.lengths[i] == d)
            for d in range(self.max_length + 1)
        )

    def __len__(self) -> int:
        return len(self.windows)

    def length_of(self, w: SignedWindow) -> int:
        return self.lengths[self.index[w]]

    def leq(self, x: SignedWindow, y: SignedWindow) -> bool:
        """x <= y in Bruhat order."""
        return bool(self.below[self.index[y]] >> self.index[x] & 1)

    def cover_pairs(self) -> list[tuple[SignedWindow, SignedWindow]]:
        return [
            (self.windows[i], self.windows[j])
            for j, preds in enumerate(self.covers_down)
            for i in preds
        ]

    def interval_rank_counts(self, w: SignedWindow) -> tuple[int, ...]:
        """Sizes of the length-graded pieces of [e, w]."""
        mask = self.below[self.index[w]]
        top = self.length_of(w)
        return tuple(
            (mask & self._level_masks[d]).bit_count() for d in range(top + 1)
        )

    def is_smooth(self, w: SignedWindow) -> bool:
        """Palindromic lower interval; smoothness in this simply laced type."""
        counts = self.interval_rank_counts(w)
        return counts == counts[::-1]


@lru_cache(maxsize=None)
def weyl_group(rank: int, limit: int = DEFAULT_RANK_LIMIT) -> WeylGroupD:
    return WeylGroupD(rank, limit)


# ------------------------------------------- ground set and admissibility

@lru_cache(maxsize=None)
def c23_labels(n: int) -> tuple[Label, ...]:
    """Reflections and ordered summable reflection products, sorted.

    Labels are ("t", alpha) and ("tt", alpha, beta) with alpha + beta a
    positive root.  Realization is checked injective: distinct labels
    give distinct group elements, so ordered products are honest set
    members, not aliases.
    """
    pos = positive_roots(n)
    pos_set = set(pos)
    labels: list[Label] = [("t", a) for a in pos]
    for a in pos:
        for b in pos:
            if a != b and tuple_add(a, b) in pos_set:
                labels.append(("tt", a, b))
    windows = {}
    for lab in labels:
        win = realize_label(lab, n)
        if win in windows:
            raise AssertionError(
                f"realization collision between {windows[win]} and {lab}"
            )
        windows[win] = lab
    return tuple(sorted(labels))


@lru_cache(maxsize=None)
def realize_label(label: Label, n: int) -> SignedWindow:
    kind = label[0]
    if kind == "t":
        return reflection_window(label[1], n)
    if kind == "tt":
        return sp_compose(
            reflection_window(label[1], n), reflection_window(label[2], n)
        )
    raise ValueError(f"bad label: {label!r}")


def label_text(label: Label) -> str:
    if label[0] == "t":
        return f"t[{root_text(label[1])}]"
    return f"t[{root_text(label[1])}]t[{root_text(label[2])}]"


def c23_below(group: WeylGroupD, w: SignedWindow) -> frozenset[Label]:
    """Labels whose realization lies below w in Bruhat order."""
    n = group.rank
    return frozenset(
        lab for lab in c23_labels(n) if group.leq(realize_label(lab, n), w)
    )


def _label_below_map(group: WeylGroupD) -> dict[Label, frozenset[Label]]:
    cache = getattr(group, "_label_below", None)
    if cache is None:
        labels = c23_labels(group.rank)
        cache = {
            lab: c23_below(group, realize_label(lab, group.rank))
            for lab in labels
        }
        group._label_below = cache
    return cache


@dataclass(frozen=True)
class AdmissibilityViolationD:
    axiom: str  # "closure" | "product-pair" | "reflection-pair"
    witness: tuple

    def describe(self) -> str:
        parts = ", ".join(label_text(lab) for lab in self.witness)
        return f"axiom {self.axiom} fails at {parts}"


def admissibility_violation_d(
    group: WeylGroupD, A: frozenset[Label], cross_pair_products: bool = False
) -> AdmissibilityViolationD | None:
    """First failed axiom of the conjectured admissibility, or None.

    The product axiom forces the sum's reflection into A when A holds
    both orientations t_a t_b and t_b t_a of one summable pair.  With
    cross_pair_products=True the stronger variant is checked instead:
    two products with the same sum whose left factors sit on opposite
    sides of the leading-simple comparison force the sum's reflection
    even when they decompose the sum differently.  The exhaustive rank 4
    run refutes that variant on smooth lower sets (see the tests), so
    the single-pair form is the default.
    """
    below = _label_below_map(group)
    for lab in sorted(A):
        missing = below[lab] - A
        if missing:
            return AdmissibilityViolationD("closure", (lab, min(missing)))
    if cross_pair_products:
        desc: dict[Root, Label] = {}
        asc: dict[Root, Label] = {}
        for lab in sorted(A):
            if lab[0] != "tt":
                continue
            _, a, b = lab
            gamma = tuple_add(a, b)
            if simple_precedes(leading_simple(b), leading_simple(a)):
                desc.setdefault(gamma, lab)
            else:
                asc.setdefault(gamma, lab)
        for gamma in sorted(set(desc) & set(asc)):
            if ("t", gamma) not in A:
                return AdmissibilityViolationD(
                    "product-pair", (desc[gamma], asc[gamma], ("t", gamma))
                )
    else:
        for lab in sorted(A):
            if lab[0] != "tt":
                continue
            _, a, b = lab
            if a < b and ("tt", b, a) in A:
                gamma = tuple_add(a, b)
                if ("t", gamma) not in A:
                    return AdmissibilityViolationD(
                        "product-pair", (lab, ("tt", b, a), ("t", gamma))
                    )
    refl_roots = sorted(lab[1] for lab in A if lab[0] == "t")
    pos_set = set(positive_roots(group.rank))
    for a, b in itertools.combinations(refl_roots, 2):
        if tuple_add(a, b) in pos_set:
            if ("tt", a, b) not in A and ("tt", b, a) not in A:
                return AdmissibilityViolationD(
                    "reflection-pair", (("t", a), ("t", b))
                )
    return None


def is_admissible_d(
    group: WeylGroupD, A: frozenset[Label], cross_pair_products: bool = False
) -> bool:
    return admissibility_violation_d(group, A, cross_pair_products) is None


# ------------------------------------------------- compatible arrangements

def reflection_roots(A: frozenset[Label]) -> tuple[Root, ...]:
    return tuple(sorted(lab[1] for lab in A if lab[0] == "t"))


def is_compatible_d(order: tuple[Root, ...], A: frozenset[Label], n: int) -> bool:
    """Check the conjectured compatibility conditions against A."""
    roots = reflection_roots(A)
    if tuple(sorted(order)) != roots or len(order) != len(roots):
        raise ValueError("arrangement does not match the reflection members")
    pos_set = set(positive_roots(n))
    position = {a: p for p, a in enumerate(order)}
    for a, b in itertools.combinations(roots, 2):
        gamma = tuple_add(a, b)
        if gamma not in pos_set:
            continue
        pa, pb = position[a], position[b]
        if ("t", gamma) in A:
            pg = position[gamma]
            if not (min(pa, pb) < pg < max(pa, pb)):
                return False
        else:
            if (("tt", a, b) in A) != (pa < pb):
                return False
            if (("tt", b, a) in A) != (pb < pa):
                return False
    return True


def compile_constraints_d(A: frozenset[Label], n: int):
    """Precedence and betweenness constraints matching is_compatible_d."""
    roots = reflection_roots(A)
    root_set = set(roots)
    pos_set = set(positive_roots(n))
    precedence = []
    betweenness = []
    for a, b in itertools.combinations(roots, 2):
        gamma = tuple_add(a, b)
        if gamma not in pos_set:
            continue
        if ("t", gamma) in A:
            if gamma not in root_set:
                # The sum's reflection is a member but cannot appear in
                # an arrangement of the reflections of A; downward
                # closure makes this unreachable for admissible A.
                precedence.append((a, b))
                precedence.append((b, a))
                continue
            betweenness.append((a, gamma, b))
            continue
        ab = ("tt", a, b) in A
        ba = ("tt", b, a) in A
        if ab:
            precedence.append((a, b))
        if ba:
            precedence.append((b, a))
        if not ab and not ba:
            # Neither product allowed: both orientations violate the
            # iff, so the constraints are unsatisfiable on purpose.
            precedence.append((a, b))
            precedence.append((b, a))
    return precedence, betweenness


def enumerate_compatible_orders_d(
    A: frozenset[Label],
    n: int,
    max_reflections: int | None = CONJECTURE_MAX_REFLECTIONS,
) -> list[tuple[Root, ...]]:
    roots = reflection_roots(A)
    if max_reflections is not None and len(roots) > max_reflections:
        raise ValueError(
            f"{len(roots)} reflections exceed the enumeration cap "
            f"{max_reflections}; raise max_reflections to proceed"
        )
    precedence, betweenness = compile_constraints_d(A, n)
    return list(constrained_orders(roots, precedence, betweenness))


def product_of_root_order(order: tuple[Root, ...], n: int) -> SignedWindow:
    out = sp_identity(n)
    for alpha in order:
        out = sp_compose(out, reflection_window(alpha, n))
    return out


# ------------------------------------------------------- conjecture runs

@dataclass(frozen=True)
class ConjectureElementReport:
    window: SignedWindow
    length: int
    reflections: int
    admissible: bool
    admissibility_note: str | None
    orders_found: int
    products_ok: bool

    @property
    def ok(self) -> bool:
        return self.admissible and self.orders_found > 0 and self.products_ok

    def to_dict(self) -> dict:
        return {
            "window": sp_text(self.window),
            "length": self.length,
            "reflections": self.reflections,
            "admissible": self.admissible,
            "admissibility_note": self.admissibility_note,
            "orders_found": self.orders_found,
            "products_ok": self.products_ok,
            "ok": self.ok,
        }


@dataclass(frozen=True)
class ConjectureReport:
    rank: int
    group_size: int
    smooth_count: int
    checked: int
    simple_order: tuple[str, ...]
    product_pair_rule: str
    elements: tuple[ConjectureElementReport, ...]
    counterexamples: tuple[SignedWindow, ...]

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "group_size": self.group_size,
            "smooth_count": self.smooth_count,
            "checked": self.checked,
            "simple_order": list(self.simple_order),
            "product_pair_rule": self.product_pair_rule,
            "elements": [e.to_dict() for e in self.elements],
            "counterexamples": [sp_text(w) for w in self.counterexamples],
            "ok": self.ok,
        }


def simple_order_config(n: int) -> tuple[str, ...]:
    """Human-readable listing of the simple-root comparison ranks."""
    return tuple(
        f"{root_text(a)} rank {simple_rank(a)}" for a in simple_roots(n)
    )


def check_element(
    group: WeylGroupD,
    w: SignedWindow,
    max_reflections: int | None = CONJECTURE_MAX_REFLECTIONS,
    cross_pair_products: bool = False,
) -> ConjectureElementReport:
    """Run the three conjecture checks for one smooth element."""
    n = group.rank
    A = c23_below(group, w)
    violation = admissibility_violation_d(group, A, cross_pair_products)
    admissible = violation is None
    orders = enumerate_compatible_orders_d(A, n, max_reflections)
    products_ok = all(
        product_of_root_order(order, n) == w for order in orders
    )
    return ConjectureElementReport(
        window=w,
        length=group.length_of(w),
        reflections=len(reflection_roots(A)),
        admissible=admissible,
        admissibility_note=None if admissible else violation.describe(),
        orders_found=len(orders),
        products_ok=products_ok,
    )


def verify_conjecture_d(
    rank: int,
    max_reflections: int | None = CONJECTURE_MAX_REFLECTIONS,
    limit: int = DEFAULT_RANK_LIMIT,
    cross_pair_products: bool = False,
) -> ConjectureReport:
    """Check the conjecture on every smooth element of the rank-n group."""
    group = weyl_group(rank, limit)
    smooth = [w for w in group.windows if group.is_smooth(w)]
    elements = [
        check_element(group, w, max_reflections, cross_pair_products)
        for w in smooth
    ]
    counterexamples = tuple(e.window for e in elements if not e.ok)
    return ConjectureReport(
        rank=rank,
        group_size=len(group),
        smooth_count=len(smooth),
        checked=len(elements),
        simple_order=simple_order_config(rank),
        product_pair_rule=(
            "cross-decomposition" if cross_pair_products
            else "same-decomposition orientations"
        ),
        elements=tuple(elements),
        counterexamples=counterexamples,
    )


# ------------------------------------------------------ type A embedding

def embed_window(w: tuple[int, ...]) -> SignedWindow:
    """A permutation window as a signed window with no sign flips."""
    return validate_signed_window(w)
