"""
p'-sections and blocks
======================

Classes are grouped by the class of their p'-part.  The indicator function
of a section is an idempotent of the character ring with p-integral
coefficients; its reduction cuts out a block.
"""

from charring import block_decomposition, load_fixture, section_idempotent_exact, section_partition

S3 = load_fixture("S3")

for p in (2, 3):
    part = section_partition(S3, p)
    print(f"p = {p}: sections", part.fibers)
    print("   exact idempotent of the p-elements:",
          [str(x.coeffs[0]) for x in section_idempotent_exact(S3, part.principal)])
    for b in block_decomposition(S3, p):
        print(f"   block {b.label()}: dim {b.dim}, idempotent {b.idempotent.tolist()}")

# Over F_2 the two squaring orbits of nontrivial classes of C7 are fused
# into blocks; each orbit sum has coefficients in Q(sqrt(-7)), which still
# reduce into F_2 because -7 is a square 2-adically.
for b in block_decomposition(load_fixture("C7"), 2):
    print("C7 mod 2:", b.label(), "dim", b.dim)
