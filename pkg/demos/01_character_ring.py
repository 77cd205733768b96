"""
The character ring of S3 as a structure-constant algebra
=========================================================

Products of irreducible characters decompose into irreducibles; the
multiplicities are nonnegative integers, and reducing them modulo p gives
the algebra F_p Irr(G).
"""

from charring import build_algebra, load_fixture, scalar_product_triple, validate_table
from charring.modring import exact_structure_constants

# Tables are plain JSON files; validation checks both orthogonality relations.
S3 = load_fixture("S3")
print(S3.name, "order", S3.order, "degrees", [int(d.coeffs[0]) for d in S3.degrees])
print("validation:", validate_table(S3))

# Basis order is (trivial, sign, standard).  std * std = triv + sgn + std:
print("[std*std, triv], [std*std, sgn], [std*std, std] =",
      [scalar_product_triple(S3, 2, 2, l) for l in range(3)])

# The full exact tensor n[i, j, l]
print(exact_structure_constants(S3))

# Modulo 3, std * std is still (1, 1, 1)
A = build_algebra(S3, 3)
print("mod 3: std*std =", A.multiply([0, 0, 1], [0, 0, 1]))
