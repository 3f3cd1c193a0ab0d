"""Parameters of one-point codes and improved codes on the GF(64) curve.

C_l(P) is cut out by the first l parity checks; its designed distance is the
order bound.  The improved code keeps only the checks whose nu value is below
the target distance and so has a larger dimension at the same distance.
"""

from __future__ import annotations

from gkcodes import reference
from gkcodes.codes import code_table, improved_table, parity_matrix_Cl
from gkcodes.curve import O1, O2

for orbit in (O1, O2):
    print(f"C_l at an {orbit} point")
    print("   l    k  rho  nu  d_ord")
    for row in code_table(2, orbit)[:12]:
        print(f"  {row['ell']:2d}  {row['k']:3d}  {row['rho']:3d}  {row['nu']:2d}  {row['d_ord']:3d}")

print("improved codes, k >= n - r_d")
print("   d   O1   O2")
t1 = improved_table(2, O1, range(10, 21))
t2 = improved_table(2, O2, range(10, 21))
for a, b in zip(t1, t2):
    mark = "  <- O2 better" if b["k_lb"] > a["k_lb"] else ""
    print(f"  {a['d']:2d}  {a['k_lb']:3d}  {b['k_lb']:3d}{mark}")

# the dimension column is backed by an actual rank computation
mat = parity_matrix_Cl(2, O2, 29)
print(f"rank of the 29 x 224 parity matrix at an O2 point: {mat.rank()}")
print("Table I k-column misprint (rho, listed, computed):",
      [(r["rho"], t[0], r["k"]) for r, t in zip(code_table(2, O1), reference.TABLE_I)
       if r["k"] != t[0]])
