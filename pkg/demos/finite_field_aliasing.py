"""The F_p oracle only sees residues.

μ2,2(0) and μ2,2(2), truncated to dimension 5, agree mod 2 and so the
search over F_2 finds an isomorphism.  Over F_3 the parameters differ and
the exhaustive search reports none.  A "found" over F_p is evidence about
the reductions, never about the rational algebras.

Run: python demos/finite_field_aliasing.py
"""

from cexkit.catalog import family_table
from cexkit.orbitlab import ff_iso_search

a, b = family_table("mu2_2", 5, 0), family_table("mu2_2", 5, 2)
for p in (2, 3):
    res = ff_iso_search(a, b, p)
    print(f"p={p}:")
    print("\n".join("  " + line for line in res.lines()))
