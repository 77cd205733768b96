from math import gcd

import pytest

from charring.exactnum import split_off
from charring.sections import p_power_orbits, p_prime_part_class, section_partition

from conftest import ALL_FIXTURES, table

PRIMES = [2, 3, 5, 7]


def class_with_order(t, m):
    return [c for c, cl in enumerate(t.classes) if cl.element_order == m]


def test_c6_generator_at_2():
    t = table("C6")
    for c in class_with_order(t, 6):
        sq = t.classes[c].power_maps[2]
        expected = t.classes[sq].power_maps[2]
        assert p_prime_part_class(t, c, 2) == expected
        assert t.classes[expected].element_order == 3


def test_identity_fixed():
    for name in ALL_FIXTURES:
        for p in PRIMES:
            assert p_prime_part_class(table(name), 0, p) == 0


def test_s3_transposition_at_3():
    t = table("S3")
    assert p_prime_part_class(t, 1, 3) == 1


def test_s3_partitions():
    t = table("S3")
    assert section_partition(t, 2).fibers == {0: [0, 1], 2: [2]}
    assert section_partition(t, 3).fibers == {0: [0, 2], 1: [1]}


def test_c2_single_section():
    assert section_partition(table("C2"), 2).fibers == {0: [0, 1]}


def test_c7_squaring_cycles():
    t = table("C7")
    orbits = p_power_orbits(t, 7)
    assert orbits == [(0,)]
    assert [len(o) for o in p_power_orbits(t, 2)] == [1, 3, 3]


@pytest.mark.parametrize("name", ALL_FIXTURES)
@pytest.mark.parametrize("p", PRIMES)
def test_partition_properties(name, p):
    t = table(name)
    part = section_partition(t, p)
    regular = [c for c, cl in enumerate(t.classes) if gcd(cl.element_order, p) == 1]
    assert list(part.regular_classes) == regular
    fibers = part.fibers
    assert len(fibers) == len(regular)
    assert sorted(c for f in fibers.values() for c in f) == list(range(t.class_number))
    for r in regular:
        assert part.section_of[r] == r
    assert part.principal == [c for c, cl in enumerate(t.classes)
                              if split_off(cl.element_order, p)[1] == 1]
    for c, cl in enumerate(t.classes):
        s = part.section_of[c]
        assert t.classes[s].element_order == split_off(cl.element_order, p)[1]
        assert p_prime_part_class(t, s, p) == s
    if t.order % p:
        assert list(part.section_of) == list(range(t.class_number))


@pytest.mark.parametrize("name", ALL_FIXTURES)
@pytest.mark.parametrize("p", PRIMES)
def test_orbits_partition_regular_classes(name, p):
    t = table(name)
    orbits = p_power_orbits(t, p)
    flat = sorted(c for o in orbits for c in o)
    assert flat == list(section_partition(t, p).regular_classes)
    assert orbits[0] == (0,)
