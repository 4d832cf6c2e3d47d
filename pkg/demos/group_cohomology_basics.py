"""Group and Tate cohomology of small Galois lattices.

Walks through the classical identities: H^1 of the sign lattice,
H^2 of cyclic groups with trivial coefficients, vanishing of H^1 on
permutation lattices, and the induced-lattice comparison.
"""

from galmod.cohomology import (group_cohomology, shapiro_compare,
                               tate_cohomology)
from galmod.groups import (cyclic_group, enumerate_subgroups,
                           symmetric_group_3)
from galmod.lattice import (induce, make_permutation_lattice, sign_lattice,
                            trivial_lattice)

z2 = cyclic_group(2)
sign = sign_lattice(z2, [-1])
print("H^1(Z/2, sign) =", group_cohomology(z2, sign, 1).invariant_factors)
print("Tate H^-1(Z/2, sign) =",
      tate_cohomology(z2, sign, -1).invariant_factors)

for n in (2, 3, 4):
    g = cyclic_group(n)
    cg = group_cohomology(g, trivial_lattice(g), 2)
    print(f"H^2(Z/{n}, Z) =", cg.invariant_factors)

# permutation lattices have vanishing H^1 over every subgroup
s3 = symmetric_group_3()
subs, reps = enumerate_subgroups(s3)
print(f"S3 has {len(subs)} subgroups in {len(reps)} conjugacy classes")
for h in reps:
    lat = make_permutation_lattice(s3, [h])
    factors = [group_cohomology(k, lat, 1).invariant_factors for k in reps]
    print(f"  H^1(-, Z[S3/{list(h.members)}]):", factors)

# cohomology of an induced lattice matches cohomology over the subgroup
a3 = next(h for h in subs if h.order == 3)
lat = trivial_lattice(a3.as_group())
for n in (1, 2):
    verdict = shapiro_compare(s3, a3, lat, n)
    print(f"degree {n}: induced {verdict.induced_side.invariant_factors} "
          f"vs subgroup {verdict.subgroup_side.invariant_factors} "
          f"-> {verdict.isomorphic}")
print("rank of the induced lattice:", induce(lat, a3).rank)
