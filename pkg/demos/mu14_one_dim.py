"""The 1-dim extensions of μ1,4^5, checked against the named list.

The entry ⟨t∇1+∇3⟩ lands on μ2,7 at t = 0, on μ2,4 at t = 1 and on μ2,6
otherwise.  Neither μ2,4 nor μ2,6 is among the names, and μ2,2(1) is never
reached.  μ2,2(1) is commutative, μ1,4 is not, and a commutative algebra
has only commutative quotients, so no central extension of μ1,4 can be
μ2,2(1).

Run: python demos/mu14_one_dim.py   (about a minute)
"""

from fractions import Fraction as F

from cexkit.algebra import commutator_rank
from cexkit.catalog import catalog_algebra
from cexkit.orbitlab import verify_t_list

rep = verify_t_list("mu1_4", 5, 1)
print("\n".join(rep.lines(verbose=True)))

print()
print("commutator rank of μ2,2(1)^6:", commutator_rank(catalog_algebra("mu2_2", 6, F(1))))
print("commutator rank of μ1,4^5:", commutator_rank(catalog_algebra("mu1_4", 5)))
