"""
Radical series and Loewy length
===============================

In a commutative F_p-algebra the Frobenius map x -> x^p is linear and its
iterates kill exactly the nilpotent elements.  Powers of the radical are
spans of products; the Loewy length is the first power that vanishes.
"""

from charring import build_algebra, load_fixture, loewy_report, nilradical, principal_block
from charring.loewy import oracle_loewy_length, oracle_nilpotent_set

# F_3 Irr(C3) is F_3[x]/(x^3 - 1) = F_3[y]/(y^3) with y = x - 1
A = build_algebra(load_fixture("C3"), 3)
print("C3 at p=3:", loewy_report(A).radical_dims)

# Same algebra, now by brute force over all 27 elements
nil = oracle_nilpotent_set(A)
print("nilpotent elements:", len(nil), " oracle Loewy length:", oracle_loewy_length(A, nil))

# Principal blocks of a few groups
for name, p in [("S3", 3), ("A4", 2), ("S4", 2), ("D8", 2), ("C5", 5)]:
    B = principal_block(load_fixture(name), p)
    r = loewy_report(B)
    print(f"{name:4s} p={p}: dim {B.dim}, J dim {nilradical(B).shape[0]}, "
          f"radical dims {r.radical_dims}, Loewy length {r.loewy_length}")
