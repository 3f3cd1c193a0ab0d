"""Why the semigroup at an O2 point of the GF(64) curve is <7, 8, 9, 13>.

Three frame functions have poles 9, 8 and 7 at the base point.  A fourth
function beta has pole order 13, read off from one intersection number with
the plane curve C1: N = m (qbar^3 + 1) - M.  An exhaustive search over a
four-dimensional linear system finds no other option.
"""

from __future__ import annotations

from gkcodes.curve import O2, get_curve
from gkcodes.funcfield import base_point
from gkcodes.intersect import certify_function, search_nongaps
from gkcodes.semigroup import gk_semigroup

curve = get_curve(2)
base = base_point(2, O2, curve=curve)
P = base.point
print("base point (encodings):", (P.x, P.y, P.z))

for gen in base.generators:
    rep = certify_function(curve, P, gen.expansion)
    print(f"  {gen.name:5s} = {gen.expansion}")
    print(f"        M = {rep.M}, m = {rep.m}  ->  pole order N = {rep.N}")

print("search over Z, Z^2, Y^2, YZ (about 266k combinations) ...")
for N, witness in search_nongaps(curve, P, [(0, 1), (0, 2), (2, 0), (1, 1)]).items():
    print(f"  N = {N}: first witness {witness}")

S = gk_semigroup(2, O2)
print(f"semigroup {S.generators}: genus {S.genus}, gaps {S.gaps}")
