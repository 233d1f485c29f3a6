"""
Smoothness verdicts for permutation windows
===========================================

Two criteria decide smoothness and always agree: avoidance of the
patterns 3412 and 4231, and the count of reflections lying below the
window matching its inversion number.
"""

from smoothchains.admissible import c_t, is_smooth_length, is_smooth_pattern
from smoothchains.orders import smoothness_report
from smoothchains.permutations import all_windows, format_window, length, parse

# a smooth window: both criteria say yes
w = parse("34521")
print("window", format_window(w))
print("  avoids 3412 and 4231:", is_smooth_pattern(w))
print("  reflections below == length:", is_smooth_length(w))
print("  length", length(w), "reflections below", len(c_t(w)))

# a non-smooth one, with the certificate spelled out
bad = parse("35142")
report = smoothness_report(bad)
print("window", format_window(bad))
print("  smooth:", report.smooth)
print("  pattern", report.pattern_name, "at positions", report.pattern_positions)
print("  reflections below", report.reflections_below, "> length", report.length)

# the reflections below 35142, as (i, j) position pairs
print("  below:", " ".join(f"T({i},{j})" for i, j in sorted(c_t(bad))))

# smooth counts per degree; the two criteria are checked against each
# other on every window
for n in range(1, 7):
    windows = [tuple(x) for x in all_windows(n)]
    smooth = [x for x in windows if is_smooth_pattern(x)]
    assert all(is_smooth_pattern(x) == is_smooth_length(x) for x in windows)
    print(f"degree {n}: {len(smooth)} smooth of {len(windows)}")
