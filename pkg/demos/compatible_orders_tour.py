"""
Arrangements of reflections and saturated chains
================================================

For a smooth window, the reflections below it can be arranged so that
multiplying left to right walks a saturated chain up to the window,
and right to left walks one up to its inverse.
"""

from smoothchains.admissible import c23, find_wedges
from smoothchains.bruhat import chain_text
from smoothchains.orders import (
    construct_compatible_order,
    elementary_neighbors,
    enumerate_compatible_orders,
    order_text,
    verify_order,
)
from smoothchains.permutations import format_window, parse

# the longest window of degree 5 has every reflection below it
w = parse("54321")
order = construct_compatible_order(w)
print("window", format_window(w))
print("arrangement:", order_text(order))
report = verify_order(w, order)
print("product ok:", report.product_ok)
print("prefix chain saturated:", report.prefix_saturated)
print(chain_text(report.prefix_chain))

# 2413 has no wedge of its own; the constructor works through the
# inverse and reverses the result
w = parse("2413")
A = c23(w)
print("window 2413 wedges:", find_wedges(A))
order = construct_compatible_order(w)
print("arrangement:", order_text(order))

# every compatible arrangement works, not just the constructed one
orders = enumerate_compatible_orders(A)
print("compatible arrangements for 2413:")
for o in orders:
    r = verify_order(w, o)
    print(" ", order_text(o), "->", "ok" if r.all_ok else "FAILS")

# two local moves connect all arrangements: swapping adjacent disjoint
# reflections, and reversing a triangle with the long reflection in
# the middle
w = parse("321")
A = c23(w)
start = construct_compatible_order(w)
print("moves from", order_text(start))
for nb in elementary_neighbors(start, A):
    print("  ->", order_text(nb))
