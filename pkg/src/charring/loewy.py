"""Radical, radical powers and Loewy length of commutative F_p-algebras.

For a commutative algebra over F_p the Frobenius map x -> x**p is
F_p-linear, and the nilradical (= Jacobson radical) is the kernel of its
m-th iterate once p**m >= dim.  Radical powers are iterated product spans.

The ``oracle_*`` functions recompute the same objects by enumerating every
element of the algebra; they use only ``multiply``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import gfp
from .errors import InvariantViolation, OracleCapExceeded
from .modring import ModAlgebra

__all__ = [
    "LoewyReport",
    "frobenius_matrix",
    "nilradical",
    "loewy_series",
    "loewy_report",
    "oracle_nilpotent_set",
    "oracle_loewy_length",
    "ORACLE_CAP",
]

ORACLE_CAP = {2: 14, 3: 8, 5: 6}


@dataclass(frozen=True)
class LoewyReport:
    block: str
    radical_dims: tuple[int, ...]

    @property
    def loewy_length(self) -> int:
        return len(self.radical_dims) - 1

    def as_dict(self) -> dict:
        return {"block": self.block, "radical_dims": list(self.radical_dims),
                "loewy_length": self.loewy_length}


def frobenius_matrix(B: ModAlgebra) -> np.ndarray:
    """Rows are the coordinates of b**p for the basis vectors b."""
    return B.power(B.basis(), B.p)


def _frobenius_depth(p: int, d: int) -> int:
    m, q = 0, 1
    while q < d:
        q *= p
        m += 1
    return max(m, 1)


def nilradical(B: ModAlgebra) -> np.ndarray:
    """Echelon basis of the nilradical, as rows in B's coordinates."""
    if not B.is_commutative():
        raise ValueError("radical via Frobenius kernels needs a commutative algebra")
    if not np.array_equal(B.multiply(B.one, B.one), B.one % B.p):
        raise InvariantViolation("identity coordinates are not idempotent")
    M = gfp.matpow(frobenius_matrix(B), _frobenius_depth(B.p, B.dim), B.p)
    return gfp.left_kernel(M, B.p)


def _product_span(B: ModAlgebra, U: np.ndarray, V: np.ndarray) -> np.ndarray:
    if U.shape[0] == 0 or V.shape[0] == 0:
        return np.zeros((0, B.dim), dtype=np.int64)
    prods = B.multiply(U[:, None, :], V[None, :, :]).reshape(-1, B.dim)
    return gfp.span_basis(prods, B.p, B.dim)


def loewy_series(B: ModAlgebra, J: np.ndarray | None = None, label: str = "") -> LoewyReport:
    """Dimensions of B = J^0 > J^1 > ... > J^l = 0; the Loewy length is l."""
    if J is None:
        J = nilradical(B)
    dims = [B.dim]
    power = J
    while power.shape[0]:
        dims.append(power.shape[0])
        nxt = _product_span(B, power, J)
        if nxt.shape[0] >= power.shape[0]:
            raise InvariantViolation("radical powers stopped decreasing; J is not nilpotent")
        power = nxt
    dims.append(0)
    return LoewyReport(label, tuple(dims))


def loewy_report(B: ModAlgebra) -> LoewyReport:
    label = B.label() if hasattr(B, "label") else "A"
    return loewy_series(B, nilradical(B), label)


def _check_cap(B: ModAlgebra, cap: int | None) -> None:
    if cap is None:
        cap = ORACLE_CAP.get(B.p, 0)
    if B.dim > cap:
        raise OracleCapExceeded(f"dimension {B.dim} exceeds oracle cap {cap} over F_{B.p}")


def oracle_nilpotent_set(B: ModAlgebra, cap: int | None = None) -> np.ndarray:
    """All nilpotent elements of B, found by raising every element to the power dim B."""
    _check_cap(B, cap)
    X = gfp.all_vectors(B.p, B.dim)
    # nilpotency index of any element is at most dim B
    Y = B.power(X, max(B.dim, 1))
    return X[~Y.any(axis=1)]


def oracle_loewy_length(B: ModAlgebra, nilpotents: np.ndarray | None = None, cap: int | None = None) -> int:
    """Least n such that every product of n nilpotent elements vanishes.

    Products are built one nilpotent factor at a time; the running set is
    replaced by a spanning set of its span to keep it small.
    """
    if nilpotents is None:
        nilpotents = oracle_nilpotent_set(B, cap)
    N = nilpotents[nilpotents.any(axis=1)]
    if N.shape[0] == 0:
        return 1
    n = 1
    current = gfp.span_basis(N, B.p, B.dim)
    while current.shape[0]:
        prods = B.multiply(current[:, None, :], N[None, :, :]).reshape(-1, B.dim)
        current = gfp.span_basis(prods, B.p, B.dim)
        n += 1
    return n
