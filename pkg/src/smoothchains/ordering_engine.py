"""Enumeration of linear arrangements under precedence and betweenness.

The engine takes a finite item set together with two constraint families:

  * precedence (u, v): u must appear before v;
  * betweenness (a, m, b): m must appear strictly between a and b, in
    either orientation.

It yields every arrangement satisfying all constraints, depth first over
items in sorted order, so the output sequence is deterministic.  Both the
type A and the type D compatible-order searches compile to this form.

Placement feasibility is arranged so that every prefix of a partial
arrangement extends the constraints consistently:

  * an item with an unplaced predecessor cannot be placed;
  * the middle item of a betweenness triple can be placed only when
    exactly one endpoint is already placed;
  * an endpoint can be placed while the opposite endpoint is already
    down only if the middle item is down too.

A completed arrangement then satisfies every constraint, so no final
filtering pass is needed.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Iterator, Sequence

Item = Hashable


def constrained_orders(
    items: Iterable[Item],
    precedence: Iterable[tuple[Item, Item]] = (),
    betweenness: Iterable[tuple[Item, Item, Item]] = (),
) -> Iterator[tuple[Item, ...]]:
    """Yield all valid arrangements of items as tuples.

    Contradictory constraints simply yield nothing.  Constraints naming
    unknown items are rejected.
    """
    ordered = sorted(set(items))
    k = len(ordered)
    pos = {item: p for p, item in enumerate(ordered)}

    need_before = [0] * k  # bitmask of items that must precede item p
    for u, v in precedence:
        if u not in pos or v not in pos:
            raise ValueError(f"precedence ({u!r}, {v!r}) names unknown items")
        if u == v:
            raise ValueError(f"precedence pair repeats item {u!r}")
        need_before[pos[v]] |= 1 << pos[u]

    # For each item, the betweenness roles it plays: ("mid", a, b) or
    # ("end", other_end, mid), all as indices.
    roles: list[list[tuple[str, int, int]]] = [[] for _ in range(k)]
    for a, m, b in betweenness:
        if a not in pos or m not in pos or b not in pos:
            raise ValueError(f"betweenness ({a!r}, {m!r}, {b!r}) names unknown items")
        ia, im, ib = pos[a], pos[m], pos[b]
        if len({ia, im, ib}) != 3:
            raise ValueError(f"betweenness ({a!r}, {m!r}, {b!r}) repeats an item")
        roles[im].append(("mid", ia, ib))
        roles[ia].append(("end", ib, im))
        roles[ib].append(("end", ia, im))

    prefix: list[Item] = []

    def placeable(p: int, placed: int) -> bool:
        if need_before[p] & ~placed:
            return False
        for role, x, y in roles[p]:
            if role == "mid":
                if ((placed >> x) & 1) == ((placed >> y) & 1):
                    return False
            else:  # end: x is the other end, y the middle
                if (placed >> x) & 1 and not (placed >> y) & 1:
                    return False
        return True

    def search(placed: int) -> Iterator[tuple[Item, ...]]:
        if len(prefix) == k:
            yield tuple(prefix)
            return
        for p in range(k):
            if (placed >> p) & 1 or not placeable(p, placed):
                continue
            prefix.append(ordered[p])
            yield from search(placed | (1 << p))
            prefix.pop()

    return search(0)


def count_orders(
    items: Iterable[Item],
    precedence: Iterable[tuple[Item, Item]] = (),
    betweenness: Iterable[tuple[Item, Item, Item]] = (),
) -> int:
    """Number of valid arrangements (enumerates; intended for small sets)."""
    return sum(1 for _ in constrained_orders(items, precedence, betweenness))
