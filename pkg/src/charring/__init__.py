"""Mod-p character rings of finite groups: blocks, radicals and Loewy lengths."""

from .blocks import (
    BlockAlgebra,
    block_decomposition,
    block_subalgebra,
    principal_block,
    principal_idempotent_mod_p,
    section_idempotent_exact,
)
from .chartab import CharacterTable, ConjClass, emit_table, inverse_class_map, load_table, parse_table, validate_table
from .exactnum import Cyclotomic, cyclo_mod_p, zeta
from .fixtures import fixture_path, load_fixture
from .loewy import LoewyReport, loewy_report, loewy_series, nilradical
from .modring import ModAlgebra, build_algebra, scalar_product_triple
from .sections import SectionPartition, p_power_orbits, p_prime_part_class, section_partition

__version__ = "0.1.0"
