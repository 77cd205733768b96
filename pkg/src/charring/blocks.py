"""Section idempotents and the block decomposition of F_p Irr(G).

Over F_p a single section idempotent need not have coefficients in F_p, so
sections are fused along orbits of the p-power map on p-regular classes.
The section of the identity is always a singleton orbit, which makes the
principal block the same as over an algebraically closed field.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import gfp
from .chartab import CharacterTable, inverse_class_map
from .errors import (
    InconsistentTableError,
    InvariantViolation,
    NotInPrimeFieldError,
    NotPIntegralError,
    OracleCapExceeded,
)
from .exactnum import Cyclotomic, cyclo_as_rational, cyclo_mod_p, rational_mod_p
from .modring import ModAlgebra, build_algebra
from .sections import p_power_orbits, section_partition

__all__ = [
    "BlockAlgebra",
    "section_idempotent_exact",
    "class_function_values",
    "principal_idempotent_mod_p",
    "block_decomposition",
    "block_subalgebra",
    "principal_block",
    "count_idempotents",
]

IDEMPOTENT_ENUM_CAP = {2: 12, 3: 8}


@dataclass(frozen=True, eq=False, kw_only=True)
class BlockAlgebra(ModAlgebra):
    """The ideal A*e, with its own basis and induced structure constants.

    ``basis`` rows are elements of the parent algebra (Irr coordinates);
    ``idempotent`` is e in the same coordinates, ``one`` is e in block
    coordinates.
    """

    parent: ModAlgebra
    idempotent: np.ndarray
    sections: tuple[int, ...] = ()
    basis_vectors: np.ndarray = field(default=None)

    @property
    def is_principal(self) -> bool:
        return 0 in self.sections

    def to_parent(self, x) -> np.ndarray:
        return np.asarray(x, dtype=np.int64) @ self.basis_vectors % self.p

    def label(self) -> str:
        return "{" + ",".join(map(str, self.sections)) + "}"


def section_idempotent_exact(table: CharacterTable, section) -> list[Cyclotomic]:
    """Coefficients of the indicator function of a union of classes in the Irr basis.

    The coefficient of chi is (1/|G|) * sum_{C in section} |C| chi(C^{-1}).
    """
    inv = inverse_class_map(table)
    out = []
    for row in table.irreducibles:
        total = Cyclotomic.rational(0)
        for c in section:
            total = total + row[inv[c]] * table.classes[c].size
        out.append(total / table.order)
    return out


def class_function_values(table: CharacterTable, coeffs) -> list[Cyclotomic]:
    """Evaluate sum_chi coeffs[chi] * chi at every class."""
    k = table.class_number
    vals = []
    for c in range(k):
        total = Cyclotomic.rational(0)
        for a in range(k):
            if not coeffs[a].is_zero():
                total = total + coeffs[a] * table.irreducibles[a][c]
        vals.append(total)
    return vals


def principal_idempotent_mod_p(table: CharacterTable, p: int) -> np.ndarray:
    """The indicator of the p-elements, reduced into F_p Irr(G)."""
    part = section_partition(table, p)
    out = []
    for a, x in enumerate(section_idempotent_exact(table, part.principal)):
        r = cyclo_as_rational(x)
        if r is None:
            raise InconsistentTableError(f"inconsistent table: coefficient of chi_{a} is irrational")
        try:
            out.append(rational_mod_p(r, p))
        except NotPIntegralError:
            raise InconsistentTableError(
                f"inconsistent table: coefficient {r} of chi_{a} is not {p}-integral") from None
    return np.array(out, dtype=np.int64)


def block_subalgebra(A: ModAlgebra, e, sections=()) -> BlockAlgebra:
    e = np.asarray(e, dtype=np.int64) % A.p
    if not e.any():
        raise ValueError("idempotent is zero")
    if not np.array_equal(A.multiply(e, e), e):
        raise ValueError("vector is not idempotent")
    images = A.multiply(A.basis(), e)
    basis = images[gfp.independent_rows(images, A.p)]
    coords = gfp.coordinate_map(basis, A.p)
    d = basis.shape[0]
    prods = A.multiply(basis[:, None, :], basis[None, :, :])  # (d, d, k)
    constants = coords(prods.reshape(d * d, -1)).reshape(d, d, d)
    constants.setflags(write=False)
    return BlockAlgebra(
        A.p,
        constants,
        coords(e),
        parent=A,
        idempotent=e,
        sections=tuple(sections),
        basis_vectors=basis,
    )


def _fused_idempotent(table: CharacterTable, part, orbit, p: int) -> np.ndarray:
    members = [c for r in orbit for c in part.fiber(r)]
    out = []
    for x in section_idempotent_exact(table, members):
        try:
            out.append(cyclo_mod_p(x, p))
        except (NotPIntegralError, NotInPrimeFieldError) as exc:
            raise InvariantViolation(f"orbit fusion incomplete for sections {orbit}: {exc}") from None
    return np.array(out, dtype=np.int64)


def block_decomposition(table: CharacterTable, p: int, algebra: ModAlgebra | None = None) -> list[BlockAlgebra]:
    """Blocks of F_p Irr(G), one per p-power orbit of p-regular classes.

    The principal block comes first; the rest follow their least p-regular class.
    """
    A = algebra if algebra is not None else build_algebra(table, p)
    part = section_partition(table, p)
    blocks = []
    for orbit in p_power_orbits(table, p):
        e = _fused_idempotent(table, part, orbit, p)
        try:
            blocks.append(block_subalgebra(A, e, orbit))
        except ValueError as exc:
            raise InvariantViolation(f"bad idempotent for sections {orbit}: {exc}") from None
    _check_decomposition(A, blocks)
    return blocks


def _check_decomposition(A: ModAlgebra, blocks: list[BlockAlgebra]) -> None:
    total = sum(b.idempotent for b in blocks) % A.p
    if not np.array_equal(total, A.one):
        raise InvariantViolation("block idempotents do not sum to the identity")
    for i, b in enumerate(blocks):
        for c in blocks[i + 1:]:
            if A.multiply(b.idempotent, c.idempotent).any():
                raise InvariantViolation(f"blocks {b.label()} and {c.label()} are not orthogonal")
    if sum(b.dim for b in blocks) != A.dim:
        raise InvariantViolation("block dimensions do not add up to the class number")


def principal_block(table: CharacterTable, p: int, algebra: ModAlgebra | None = None) -> BlockAlgebra:
    A = algebra if algebra is not None else build_algebra(table, p)
    e = principal_idempotent_mod_p(table, p)
    try:
        return block_subalgebra(A, e, (0,))
    except ValueError as exc:
        raise InvariantViolation(f"principal idempotent: {exc}") from None


def count_idempotents(B: ModAlgebra, cap: int | None = None) -> int:
    """Number of idempotents in B, by exhaustive enumeration."""
    if cap is None:
        cap = IDEMPOTENT_ENUM_CAP.get(B.p, 0)
    if B.dim > cap:
        raise OracleCapExceeded(f"dimension {B.dim} exceeds enumeration cap {cap} over F_{B.p}")
    X = gfp.all_vectors(B.p, B.dim)
    return int(np.all(B.multiply(X, X) == X, axis=1).sum())
