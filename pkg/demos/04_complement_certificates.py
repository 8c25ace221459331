"""
Certificates that knots are determined by their complements
===========================================================

For a manifold M = S^3_{p/q}(K) of a known geometric type the distance of a
hypothetical cosmetic slope from the meridian is bounded.  certify_complement
goes through every distance n up to that bound and tries to eliminate it.
"""
# %%
import json

from cwsurgery import certify_complement, eliminate_case
from cwsurgery.obstruction import HypothesisError

print(json.dumps(certify_complement(12, 1, "lens").to_dict(), indent=2))

# %%
cert = certify_complement(143, 1, "ssfs")
print("issued:", cert.issued)
for case in cert.cases:
    print(f"  n = {case.n}  c = {case.c}  {case.status.value}  {case.reason}")

# %%
# When 2 divides p the distances 4 and 8 are not handled, and the certificate is refused.
cert = certify_complement(22, 1, "ssfs")
print("issued:", cert.issued, " open:", [(c.c, c.n) for c in cert.open_cases])

# %%
# Hypotheses are checked before anything runs.
try:
    certify_complement(30, 1, "ssfs")
except HypothesisError as e:
    print("refused:", e)

# %%
print(eliminate_case(3, 3, 15).to_dict())
