"""Mayer-Vietoris patching diagnostics over a subgroup graph.

Vertices carry subgroups of a finite Galois group, edges carry common
subgroups.  The library builds restriction and difference maps between
global and local cohomology, computes the sha kernel, and reports which
exactness statements it could verify.
"""

from galmod import fixtures
from galmod import patching as pa
from galmod.complexes import TwoTermComplex
from galmod.groups import cyclic_group, enumerate_subgroups, subgroup
from galmod.lattice import LatticeMap, sign_lattice, trivial_lattice

# a vertex whose subgroup is trivial sees no cohomology at all, so the
# kernel of the joint restriction is everything
g = fixtures.graph_catalog()["single-trivial-vertex"]
sgn = fixtures.lattice_catalog()["sign"]
print("sha over the trivial-vertex model:",
      pa.sha(g, sgn, 1).invariant_factors)

g2 = fixtures.graph_catalog()["two-vertex-whole"]
cols = pa.mv_columns(g2, sgn, 1)
print("two-vertex model difference matrix:", cols.difference_matrix)
print("sha with whole-group vertices:",
      pa.sha(g2, sgn, 1).invariant_factors)

# the nine-term exactness report for a complex coefficient
z2 = cyclic_group(2)
triv = trivial_lattice(z2)
sgn2 = sign_lattice(z2, [-1])
t = TwoTermComplex(sgn2, triv, LatticeMap(sgn2, triv, ((0,),)))
rep = pa.nine_term_report(g2, t)
for i, r in enumerate(rep.degrees):
    print(f"degree {r}: composition zero {rep.composition_zero[i]}, "
          f"exact at middle {rep.exact_at_middle[i][0]}, "
          f"sha {rep.sha_groups[i].invariant_factors}")
print("junctions left unevaluated:", list(rep.not_evaluated))

# compare sha of the complex with sha^2 of its flasque resolution
rc = pa.remark_compare(g2, t)
print("sha^1(complex):", rc.sha1_complex.invariant_factors)
print("sha^2(flasque):", rc.sha2_flasque.invariant_factors)
print("cokernel of the degree-0 difference:", rc.cokernel_factors)
print("all three agree:", rc.all_agree)

# refinement replaces every subgroup by its trace on a smaller field
s3 = fixtures.lookup("group", "S3")
a3 = next(h for h in enumerate_subgroups(s3)[0] if h.order == 3)
base = pa.build_patching_graph(s3, [subgroup(s3, (0, 1))], [])
refined = pa.refine_graph(base, a3)
print("refined vertex subgroups:",
      [list(v.members) for v in refined.vertices])
print("orbit bookkeeping:", refined.refinement.vertex_orbits)
