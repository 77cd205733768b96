"""The character ring as a structure-constant algebra, exactly and modulo p."""

from __future__ import annotations

import weakref
from dataclasses import dataclass, field

import numpy as np

from .chartab import CharacterTable, inverse_class_map
from .errors import InconsistentTableError
from .exactnum import Cyclotomic, cyclo_as_rational, multiplication_tensor

__all__ = [
    "ModAlgebra",
    "scalar_product_triple",
    "exact_structure_constants",
    "build_algebra",
    "multiply",
]

_INT64_SAFE = 2**62


def scalar_product_triple(table: CharacterTable, i: int, j: int, l: int) -> int:
    """Multiplicity of chi_l in chi_i * chi_j, by exact class-sum arithmetic."""
    inv = inverse_class_map(table)
    irr = table.irreducibles
    total = Cyclotomic.rational(0)
    for c, cl in enumerate(table.classes):
        total = total + irr[i][c] * irr[j][c] * irr[l][inv[c]] * cl.size
    r = cyclo_as_rational(total / table.order)
    if r is None or r.denominator != 1 or r < 0:
        raise InconsistentTableError(
            f"inconsistent table: [chi_{i} chi_{j}, chi_{l}] = {total / table.order!r}")
    return int(r)


_constants_cache: "weakref.WeakKeyDictionary[CharacterTable, np.ndarray]" = weakref.WeakKeyDictionary()


def exact_structure_constants(table: CharacterTable) -> np.ndarray:
    """Integer tensor n[i, j, l] = [chi_i chi_j, chi_l], computed once per table.

    Runs the same class-sum formula as :func:`scalar_product_triple`, on the
    integer coefficient arrays of all values at the table's conductor.
    """
    cached = _constants_cache.get(table)
    if cached is not None:
        return cached
    n = table.conductor
    k = table.class_number
    V = table.value_array
    R = multiplication_tensor(n).astype(object)
    inv = inverse_class_map(table)
    w = np.array([c.size for c in table.classes], dtype=object)

    # P[i, j, c] = chi_i(c) chi_j(c);  Q[l, c] = |c| chi_l(c^-1) as a multiplication matrix
    P = np.einsum("ice,jcf,efr->ijcr", V, V, R)
    Q = np.einsum("c,lcs,rst->lcrt", w, V[:, inv, :], R)
    phi = R.shape[0]
    bound = k * phi * max(1, int(np.abs(P).max())) * max(1, int(np.abs(Q).max()))
    dtype = np.int64 if bound < _INT64_SAFE else object
    S = np.tensordot(P.astype(dtype), Q.astype(dtype), axes=([2, 3], [1, 2]))  # (i, j, l, t)

    if np.any(S[..., 1:] != 0):
        raise InconsistentTableError("inconsistent table: irrational scalar product")
    num = S[..., 0]
    if np.any(num % table.order != 0):
        raise InconsistentTableError("inconsistent table: non-integral scalar product")
    out = (num // table.order).astype(np.int64)
    if np.any(out < 0):
        raise InconsistentTableError("inconsistent table: negative scalar product")
    out.setflags(write=False)
    _constants_cache[table] = out
    return out


@dataclass(frozen=True, eq=False)
class ModAlgebra:
    """Commutative F_p-algebra with structure constants ``constants[i, j, l]``.

    ``one`` holds the coordinates of the identity element.
    """

    p: int
    constants: np.ndarray
    one: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.one is None:
            e = np.zeros(self.dim, dtype=np.int64)
            e[0] = 1
            object.__setattr__(self, "one", e)

    @property
    def dim(self) -> int:
        return self.constants.shape[0]

    def basis(self) -> np.ndarray:
        return np.eye(self.dim, dtype=np.int64)

    def multiply(self, x, y) -> np.ndarray:
        """Product of coordinate vectors; leading axes broadcast (batched products)."""
        x = np.asarray(x, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        if x.shape[-1] != self.dim or y.shape[-1] != self.dim:
            raise ValueError(f"expected vectors of length {self.dim}")
        xy = x[..., :, None] * y[..., None, :] % self.p
        return np.tensordot(xy, self.constants, axes=([-2, -1], [0, 1])) % self.p

    def power(self, x, e: int) -> np.ndarray:
        """x**e by repeated squaring (e >= 1)."""
        x = np.asarray(x, dtype=np.int64) % self.p
        out = None
        while e:
            if e & 1:
                out = x if out is None else self.multiply(out, x)
            e >>= 1
            if e:
                x = self.multiply(x, x)
        return out

    def is_commutative(self) -> bool:
        return bool(np.array_equal(self.constants, self.constants.transpose(1, 0, 2)))

    def is_associative(self) -> bool:
        n = self.constants
        lhs = np.einsum("ijm,mlr->ijlr", n, n) % self.p
        rhs = np.einsum("jlm,imr->ijlr", n, n) % self.p
        return bool(np.array_equal(lhs, rhs))


def build_algebra(table: CharacterTable, p: int) -> ModAlgebra:
    """F_p Irr(G): exact structure constants reduced modulo p."""
    constants = exact_structure_constants(table) % p
    constants.setflags(write=False)
    return ModAlgebra(p, constants)


def multiply(A: ModAlgebra, x, y) -> np.ndarray:
    return A.multiply(x, y)
