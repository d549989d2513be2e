"""Gordon's identities by exhaustive counting, moduli 5, 7, and 9.

For each l and each 1 <= t <= l, the number of partitions of n with
difference at least 2 at distance l-1 and at most t-1 ones equals the
number of partitions of n into parts not congruent to 0, +-t mod 2l+1.
Both sides are counted by brute-force enumeration.
"""

from qgordon import (
    GordonCondition,
    count_congruence_partitions,
    count_gordon_partitions,
    iter_gordon_partitions,
)

N_MAX = 24

for l in (2, 3, 4):
    for t in range(1, l + 1):
        cond = GordonCondition(l, t)
        gordon = [count_gordon_partitions(cond, n) for n in range(N_MAX + 1)]
        congruence = [count_congruence_partitions(cond, n) for n in range(N_MAX + 1)]
        status = "match" if gordon == congruence else "MISMATCH"
        print(f"l={l} t={t} (mod {cond.modulus}, excluded residues "
              f"{sorted(cond.excluded_residues)}): {status}")
        print("   counts:", gordon)

print()
print("The partitions behind one entry: n=9, l=2, t=2 (difference >= 2, at most one 1):")
for p in iter_gordon_partitions(GordonCondition(2, 2), 9):
    print("   ", list(p.parts))
