"""
Casson-Walker invariants of surgeries
=====================================

lambda_w of p/q surgery on a knot needs only the knot's Conway a2 and a
Dedekind symbol.  For a two-component link the formula also needs the
linking number, a3 and both framings.
"""
# %%
from fractions import Fraction

from cwsurgery import TwoComponentLinkData, lambda_knot, lambda_link, lambda_link_breakdown
from cwsurgery.casson_walker import torus_knot_a2

# +1 surgery on the trefoil is the Poincare sphere (with one orientation).
print("lambda_w(S^3_{+1}(T(2,3))) =", lambda_knot(torus_knot_a2(2, 3), Fraction(1)))

# %%
# Surgery on the unknot gives lens spaces, and L(p, q) = L(p, q*) when q q* = 1 mod p.
print(lambda_knot(0, Fraction(7, 2)), lambda_knot(0, Fraction(7, 4)))

# %%
# Split link: the invariant adds.
unlink = TwoComponentLinkData(0, 0, 0, 0, "3/1", "5/1")
print(lambda_link(unlink), "=", lambda_knot(0, 3) + lambda_knot(0, 5))

# %%
# Hopf link with framings 2 and 3: slam-dunk gives 2 - 1/3 = 5/3 on the unknot.
hopf = TwoComponentLinkData(0, 0, 0, 1, "2/1", "3/1")
bd = lambda_link_breakdown(hopf)
for name, value in bd.terms.items():
    print(f"  {name:>20}  {value}")
print("D =", bd.det, " signature =", bd.signature, " rhs =", bd.rhs)
print("lambda_w =", bd.value, " L(5,3) gives", lambda_knot(0, Fraction(5, 3)))
