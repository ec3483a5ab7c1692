#!/usr/bin/env python3
"""Imbedding triple systems into Z2-graded Lie algebras.

Every system T sits inside two canonical graded algebras: the standard
imbedding (inner derivations + T) and the universal imbedding, whose even
part is the pair algebra <T,T>, a central extension of the inner
derivations.  The surjection upsilon between them is graded with even
central kernel, and the odd part of the universal imbedding recovers T on
the nose.
"""

from lietrip import kernel_basis, odd_part_lts
from lietrip.corpus import abl, odd2, sl2lts
from lietrip.embed import standard_imbedding, universal_imbedding
from lietrip.grlie import center, is_generated_by_odd

for name, T in [("abl(2)", abl(2)), ("abl(3)", abl(3)),
                ("odd2", odd2()), ("sl2lts", sl2lts())]:
    ste = standard_imbedding(T)
    env = universal_imbedding(T)
    ker = env.upsilon.kernel()
    print(f"== {name} ==")
    print(f"  Ste(T) dims (even, odd) = ({ste.algebra.dim0}, {ste.algebra.dim1})")
    print(f"  A(T)   dims (even, odd) = ({env.algebra.dim0}, {env.algebra.dim1})")
    print(f"  upsilon: A(T) -> Ste(T) surjective, kernel dim = {ker.dim}")
    print(f"  kernel inside even part and center:",
          env.algebra.even_subspace().contains_subspace(ker)
          and center(env.algebra).contains_subspace(ker))
    print(f"  generated by the odd part: {is_generated_by_odd(env.algebra)}")
    print(f"  odd part recovers T exactly: {odd_part_lts(env.algebra).triple == T.triple}")
    print()

print("For abelian T the pair algebra is the whole exterior square: the")
print("envelope of abl(2) is the graded Heisenberg algebra, and upsilon")
print("collapses its one-dimensional center.")
env = universal_imbedding(abl(2))
print("A(abl(2)) bracket of the two odd generators:",
      env.algebra.bracket[1][2])
