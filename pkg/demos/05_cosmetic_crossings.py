"""
Cosmetic crossings in the ten-crossing table
============================================

A knot whose double branched cover is an L-space with determinant 9p'
(p' square-free and prime to 3) has no cosmetic crossing, provided the cover
is known to be surgery on a knot or the knot has (H(2)-)unknotting number one.
The facts about each knot live in a bundled CSV table.
"""
# %%
from cwsurgery.cosmetic import cosmetic_verdict, load_bundled_table, reproduce_cor_ten

table = load_bundled_table()
for rec in table:
    v = cosmetic_verdict(rec)
    cond = " ".join(f"{k}={c.value}" for k, c in v.conditions.items())
    print(f"{rec.name:>7}  det={rec.determinant:3d}  {cond:50s} {v.verdict.value}")

# %%
print(reproduce_cor_ten(table))

# %%
# The reasons spell out why a knot is settled.
for line in cosmetic_verdict(table[0]).reasons:
    print(" ", line)
