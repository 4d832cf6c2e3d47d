"""Exact integer linear algebra: Smith normal form and subquotients.

Everything here is computed over Z with arbitrary precision, no floats
anywhere.  The Smith normal form comes with unimodular transformation
matrices that replay the diagonalization exactly.
"""

from galmod import intlinalg as la

a = la.freeze([[2, 4, 4], [-6, 6, 12], [10, 4, 16]])
res = la.smith_normal_form(a)
print("matrix:")
for row in a:
    print("  ", row)
print("diagonal:", res.diagonal)
print("invariant factors:", res.invariant_factors)

check = la.mat_mul(la.mat_mul(res.U, a), res.V)
print("U * A * V == D:", check == res.D)
print("U unimodular:", la.is_unimodular(res.U))
print("V unimodular:", la.is_unimodular(res.V))

# kernels over Z are saturated: 2x = 0 has no integer solutions besides 0
print("kernel of [[2]]:", la.kernel_basis(la.freeze([[2]])))
print("kernel of [[2, 2]]:", la.kernel_basis(la.freeze([[2, 2]])))

# presentation of a subquotient: Z^2 / <(2,0),(0,3)>
pres = la.abgroup_from_subquotient(
    la.columns(la.identity(2)), [[2, 0], [0, 3]], 2)
print("Z^2 / <(2,0),(0,3)> has factors", pres.factors)
