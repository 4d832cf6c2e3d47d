"""Flasque and coflasque resolutions of two-term lattice complexes.

A two-term complex [L1 -> L2] is replaced by a quasi-isomorphic
complex [C -> Q] with C coflasque and Q a permutation lattice, or
dually by [P -> F] with F flasque.  Every construction step is logged
in a certificate that can be replayed later.
"""

from galmod import fixtures
from galmod.cohomology import hypercohomology
from galmod.complexes import (classify, coflasque_resolution,
                              flasque_resolution, r_equivalence_invariant,
                              replay_certificate)
from galmod.groups import enumerate_subgroups

t = fixtures.complex_catalog()["s3-coset-aug"]
print("input complex:", t)

resolved, cert = coflasque_resolution(t)
print("coflasque resolution:", resolved)
print("kernel side coflasque:", classify(resolved.l1, "coflasque").ok)
print("cover side permutation certified:",
      resolved.l2.is_permutation_certified)
print("certificate moves:", [m.kind for m in cert.moves])
print("replay passes:", replay_certificate(cert))

# the resolution does not change hypercohomology in any degree
_, reps = enumerate_subgroups(t.group)
for h in reps:
    row = [hypercohomology(h, resolved, n).invariant_factors
           for n in (-1, 0, 1)]
    base = [hypercohomology(h, t, n).invariant_factors for n in (-1, 0, 1)]
    print(f"  subgroup {list(h.members)}: {base} == {row}: {base == row}")

fla, _ = flasque_resolution(t)
print("flasque resolution:", fla)
print("flasque side verdict:", classify(fla.l2, "flasque").ok)

# the flasque lattice carries the R-equivalence invariant
data = r_equivalence_invariant(t)
print("R-equivalence table (subgroup, Tate^-1, H^1):")
for members, tate, h1 in data.table:
    print("  ", list(members), list(tate), list(h1))
