"""
A group whose principal block is shorter than its normalizer's
==============================================================

G = SmallGroup(768, 1085354) = (C8 x C8) : (C3 : C4) at p = 2.  Its Sylow
2-subgroup P is self-normalizing and non-abelian, and the principal blocks
of F_2 Irr(G) and F_2 Irr(N_G(P)) have different Loewy lengths.
"""

import time

from charring.cli import cmd_compare
from charring.fixtures import fixture_path

start = time.perf_counter()
report = cmd_compare(fixture_path("g768"), fixture_path("n768"), 2)
print(report)
print(f"({time.perf_counter() - start:.2f} s)")

# For comparison, groups with abelian Sylow subgroups give equal lengths
for g, n, p in [("S3", "C2", 2), ("A4", "C3", 3)]:
    r = cmd_compare(fixture_path(g), fixture_path(n), p)
    print(f"{g} vs {n} at p={p}: {r.ll_group} and {r.ll_normalizer}, equal={r.equal}")
