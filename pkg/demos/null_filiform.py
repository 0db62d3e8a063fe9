"""Extend the null-filiform algebra by its only H^2 class and recover the next one.

Run: python demos/null_filiform.py
"""

from cexkit.acceptance import null_filiform_witness
from cexkit.algebra import algebra_to_text, is_iso_witness
from cexkit.catalog import catalog_algebra
from cexkit.cohomology import cohomology_dims

for n in range(3, 8):
    z, b, h = cohomology_dims(catalog_algebra("mu0", n))
    ext, target, p = null_filiform_witness(n)
    print(f"n={n}: Z2={z} B2={b} H2={h}, witness verifies: {is_iso_witness(target, ext, p)}")

# the extension at n = 4, written out
ext, _, p = null_filiform_witness(4)
print(algebra_to_text(ext))
print("witness (columns are images of e1..e5):")
for i in range(p.rows):
    print("  " + " ".join(str(p[i, j]) for j in range(p.cols)))
