"""p'-parts of classes and the partition of classes into p'-sections."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .chartab import CharacterTable
from .errors import InconsistentTableError
from .exactnum import cyclo_normalize, multiplicative_order, split_off


@dataclass(frozen=True)
class SectionPartition:
    p: int
    regular_classes: tuple[int, ...]
    section_of: tuple[int, ...]

    def fiber(self, r: int) -> list[int]:
        return [c for c, s in enumerate(self.section_of) if s == r]

    @property
    def fibers(self) -> dict[int, list[int]]:
        """Sections keyed by their p-regular class, in table order."""
        return {r: self.fiber(r) for r in self.regular_classes}

    @property
    def principal(self) -> list[int]:
        """Classes of p-elements (the section of the identity)."""
        return self.fiber(0)


def _power_class(table: CharacterTable, c: int, p: int) -> int:
    try:
        return table.classes[c].power_maps[p]
    except KeyError:
        raise InconsistentTableError(f"table has no {p}-power map for class {c}") from None


def p_power_exponent(m: int, p: int) -> int:
    """Exponent K such that g -> g**(p**K) sends an element of order m to its p'-part.

    With m = p**a * m', K is the least multiple of ord_{m'}(p) with p**K >= p**a.
    """
    pa, mp = split_off(m, p)
    if pa == 1 and mp == 1:
        return 1
    step = multiplicative_order(p, mp)
    K = step
    while p**K < pa:
        K += step
    return K


def p_prime_part_class(table: CharacterTable, c: int, p: int) -> int:
    """Class of the p'-part of an element of class c."""
    m = table.classes[c].element_order
    if m % p:
        return c
    K = p_power_exponent(m, p)
    d = c
    for _ in range(K):
        d = _power_class(table, d, p)
    want = split_off(m, p)[1]
    if table.classes[d].element_order != want:
        raise InconsistentTableError(
            f"p'-part of class {c} has element order {table.classes[d].element_order}, expected {want}")
    return d


def section_partition(table: CharacterTable, p: int) -> SectionPartition:
    regular = tuple(c for c, cl in enumerate(table.classes) if gcd(cl.element_order, p) == 1)
    section_of = tuple(p_prime_part_class(table, c, p) for c in range(table.class_number))
    return SectionPartition(p, regular, section_of)


def p_power_orbits(table: CharacterTable, p: int) -> list[tuple[int, ...]]:
    """Orbits of the p-power map on p-regular classes, each sorted, ordered by least member."""
    part = section_partition(table, p)
    seen: set[int] = set()
    orbits = []
    for r in part.regular_classes:
        if r in seen:
            continue
        orbit = []
        c = r
        while c not in orbit:
            orbit.append(c)
            if table.order % p == 0:
                c = _power_class(table, c, p)
            else:
                c = _galois_power(table, c, p)
        seen.update(orbit)
        orbits.append(tuple(sorted(orbit)))
    return orbits


def _galois_power(table: CharacterTable, c: int, p: int) -> int:
    """Class of g**p when p does not divide |G| (no p-power map is stored).

    chi(g**p) is the image of chi(g) under zeta -> zeta**p; columns separate classes.
    """
    cols = [tuple(row[d] for row in table.irreducibles) for d in range(table.class_number)]
    target = tuple(
        cyclo_normalize(v.conductor, {e * p: x for e, x in enumerate(v.coeffs) if x})
        for v in cols[c]
    )
    hits = [d for d in range(table.class_number) if cols[d] == target]
    if len(hits) != 1:
        raise InconsistentTableError(f"cannot identify the class of {p}-th powers of class {c}")
    return hits[0]
