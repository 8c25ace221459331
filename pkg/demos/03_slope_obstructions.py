"""
Ruling out surgeries that would return the same manifold
========================================================

Suppose M is p/q surgery on a knot Ky in S^3 and a knot in M has an n/m
surgery giving back M.  Then we have a two-component link whose surgery is M
and the linking number l and new slope m/n must satisfy three arithmetic
conditions.  obstruct_slope checks them and reports which ones fail.
"""
# %%
import json

from cwsurgery import obstruct_slope, theorem_main_scan

print(json.dumps(obstruct_slope(9, 2, 1, 3).to_dict(), indent=2))

# %%
# A slope that fails already at the level of homology.
print(obstruct_slope(6, 1, 1, 2).verdict.value)

# %%
# l = 0 (null-homologous) is never ruled out by these rules.
rep = obstruct_slope(5, 1, 1, 0)
print(rep.verdict.value, rep.surviving)

# %%
# Every non-null-homologous class at distance one, for a few torsion shapes.
for p, q in [(9, 2), (12, 5), (18, 5), (36, 7)]:
    scan = theorem_main_scan(p, q)
    kinds = sorted({v.value for _, v in scan.entries})
    print(f"p/q = {p}/{q}: all obstructed = {scan.all_obstructed}  via {kinds}")
