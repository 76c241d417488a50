"""Bounded paths: dynamic programming, closed forms, and negative lengths.

Run with: python3 demos/paths_and_reciprocity.py
"""

from reciprocity import paths as pth
from reciprocity.exact import ratfunc_series

k = 3
print(f"paths in the strip 0..{k} from level 0 back to level 0")
print("  by DP:     ", [pth.count_paths(n, k, 0, 0) for n in range(11)])

f = pth.path_gf_unweighted(k, 0, 0)
print("  closed GF: ", f)
print("  its series:", [int(c) for c in ratfunc_series(f, 10)])

# the rational GF defines a linear recurrence, which runs backwards too
print("\ncontinuing the same sequence to negative lengths")
print("  n = -1..-8:", [int(pth.path_value(-n, k, 0, 0)) for n in range(1, 9)])

print("\nweighted version: each down step from level i carries B_i")
print("  ", pth.path_gf_closed(2, 0, 0, "B"))
print("  weight polynomial at length 4:", pth.weighted_path_poly(4, 2, 0, 0, "B"))
