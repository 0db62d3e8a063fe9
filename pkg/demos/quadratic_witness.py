"""Some extensions only become isomorphic after adjoining a square root.

The 1-dim extension of μ1,3^5 by ∇1+∇3 is μ2,6^6, but the automorphism of
the base that moves one class onto the other needs x^2 = -1.  The rational
grid finds nothing; the Q(i) grid finds a witness, which is checked again
by splitting it into real and imaginary rational parts.

Run: python demos/quadratic_witness.py
"""

from fractions import Fraction as F

from cexkit.catalog import catalog_algebra, nabla_basis
from cexkit.cohomology import Cocycle
from cexkit.extension import central_extend
from cexkit.orbitlab import extension_from_coords, field_is_iso, find_witness

n1, n2, n3 = nabla_basis("mu1_3", 5)
e = central_extend(catalog_algebra("mu1_3", 5), Cocycle.of(n1 + n3))
x = catalog_algebra("mu2_6", 6)

w, note = find_witness(e, x, quadratic=False)
print("rational search:", "found" if w else note)

w, note = find_witness(e, x)
print("with quadratic fields:", w.field)
for line in w.lines():
    print("  " + line)
print("verified:", field_is_iso(x, e, w.rows))

# at n = 6 the same equation reads x^3 = -1, so x = -1 works over Q
n1, n2, n3 = nabla_basis("mu1_3", 6)
e6 = central_extend(catalog_algebra("mu1_3", 6), Cocycle.of(n1 + n3))
w6, _ = find_witness(e6, catalog_algebra("mu2_6", 7))
print("n=6 witness field:", w6.field if w6 else None)

# the case list and the theorem list disagree on a 2-dim μ1,3 orbit; the two
# spans give extensions that are isomorphic, again only over Q(i)
one = extension_from_coords("mu1_3", 5, [[F(1), F(1), F(0)], [F(0), F(1), F(1)]])
two = extension_from_coords("mu1_3", 5, [[F(1), F(1), F(0)], [F(1), F(0), F(1)]])
w2, note = find_witness(one, two)
print("⟨∇1+∇2, ∇2+∇3⟩ vs ⟨∇1+∇2, ∇1+∇3⟩:", w2.field if w2 else note)
