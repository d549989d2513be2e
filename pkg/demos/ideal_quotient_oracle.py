"""Recomputing graded dimensions from ideal generators alone.

The quotient of C[y_1, y_2, ...] by the ideal generated by the ordered-sum
polynomials r_w (charge k+1) and a power y_1^e has a bigraded Hilbert
table computable by exact integer linear algebra: list the spanning
products in each bidegree, take the rank, subtract from the monomial
count. No recursion system, no multisum. The table still reproduces the
same series, which is the whole point of using it as an oracle.
"""

from qgordon import (
    andrews_gordon_multisum,
    generator_set,
    hilbert_table,
    ideal_span_dimension,
    quotient_dimension,
    r_polynomial,
    solve,
)

k, e = 1, 2
print(f"Generators for level k={k}: r_w for w >= {k + 1}, plus y_1^{e}.")
for w in range(2, 6):
    terms = " + ".join(
        (f"{mult}*" if mult > 1 else "") + "y" + "*y".join(f"_{j}" for j in mono.parts)
        for mono, mult in r_polynomial(k, w)
    )
    print(f"  r_{w} = {terms}")
print()

gens = generator_set(k, e, 10)
print("One bidegree worked out, charge m=2 and weight w=4:")
print("  monomial basis: y_3*y_1, y_2*y_2 (partitions of 4 into 2 parts)")
print("  ideal piece spanned by r_4 = 2*y_3*y_1 + y_2*y_2, rank",
      ideal_span_dimension(gens, 2, 4))
print("  quotient dimension:", quotient_dimension(gens, 2, 4),
      "(the surviving class corresponds to the difference-2 partition [3,1])")
print()

mm, wm = 4, 10
table = hilbert_table(k, e, mm, wm)
print(f"Full table for k={k}, e={e} on m<={mm}, w<={wm}:")
for m in range(mm + 1):
    print(f"  m={m}:", list(table.entries[m]))
print()

series = table.to_biseries()
print("Against the other two routes:")
print("  equals the multisum:", series == andrews_gordon_multisum(k, e - 1, mm, wm))
print("  equals the solved recursion member:",
      series == solve(k, mm, wm).members[e - 1])
