"""Level 1: the classical Rogers-Ramanujan recursion and both identities.

Solves the two-member q-difference system, checks the classical recursion
F(x,q) - F(xq,q) = xq F(xq^2,q), and specializes x to recover the sum
sides of both identities, matching them against the congruence products.
"""

from qgordon import (
    GordonCondition,
    check_rr_recursion,
    gordon_product,
    solve,
    specialize_x,
)

R, N = 8, 24

fam = solve(1, R, N)
f0, f1 = fam.members

print("Level 1 family solved on the window x<=%d, q<=%d." % (R, N))
print()
print("F_1 starts:", str(f1.restrict(2, 6)))
print("F_0 starts:", str(f0.restrict(2, 6)))
print()

residual = check_rr_recursion(f1)
print("Rogers-Ramanujan recursion residual for F_1 is zero:", residual.is_zero())
print()

x1, _ = specialize_x(f1, "x=1")
xq, _ = specialize_x(f1, "x=q")
prod1 = gordon_product(GordonCondition(2, 2), N)  # parts = +-1 mod 5
prod2 = gordon_product(GordonCondition(2, 1), N)  # parts = +-2 mod 5

upto = N - R  # both specializations are lossless this far
print("First identity, q-coefficients up to q^%d:" % upto)
print("  x=1 of F_1:      ", list(x1.row(0))[: upto + 1])
print("  parts=+-1 mod 5: ", list(prod1.row(0))[: upto + 1])
print("  equal:", list(x1.row(0))[: upto + 1] == list(prod1.row(0))[: upto + 1])
print()
print("Second identity, q-coefficients up to q^%d:" % upto)
print("  x=q of F_1:      ", list(xq.row(0))[: upto + 1])
print("  parts=+-2 mod 5: ", list(prod2.row(0))[: upto + 1])
print("  equal:", list(xq.row(0))[: upto + 1] == list(prod2.row(0))[: upto + 1])
