"""Exact rational and cyclotomic arithmetic.

A :class:`Cyclotomic` stores an element of Q(zeta_n) in the power basis
1, zeta_n, ..., zeta_n^(phi(n)-1), reduced modulo the n-th cyclotomic
polynomial.  Values keep the conductor they were created with; binary
operations lift both operands to the lcm of the conductors.

Besides the scalar type there are a few array helpers (``coefficient_array``,
``multiplication_tensor``, ``conjugation_matrix``) used to run the same exact
integer arithmetic over whole character tables with numpy.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Mapping

import numpy as np

from .errors import NotInPrimeFieldError, NotPIntegralError

Rational = Fraction

__all__ = [
    "Rational",
    "Cyclotomic",
    "cyclotomic_polynomial",
    "cyclo_normalize",
    "cyclo_add",
    "cyclo_mul",
    "cyclo_conjugate",
    "cyclo_as_rational",
    "rational_mod_p",
    "cyclo_mod_p",
    "zeta",
    "is_prime",
    "prime_divisors",
    "multiplicative_order",
    "euler_phi",
]


# -- elementary number theory -------------------------------------------------

def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def euler_phi(n: int) -> int:
    result = n
    for q in prime_divisors(n):
        result -= result // q
    return result


def multiplicative_order(a: int, m: int) -> int:
    """Least k >= 1 with a**k == 1 mod m (1 for m == 1)."""
    if m == 1:
        return 1
    if gcd(a, m) != 1:
        raise ValueError(f"{a} is not a unit modulo {m}")
    k, x = 1, a % m
    while x != 1:
        x = x * a % m
        k += 1
    return k


def split_off(n: int, p: int) -> tuple[int, int]:
    """Write n = p**a * m with p not dividing m; return (p**a, m)."""
    pa = 1
    while n % p == 0:
        n //= p
        pa *= p
    return pa, n


# -- integer polynomials (coefficient tuples, lowest degree first) ------------

def _poly_trim(c: list) -> list:
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return c


def _poly_exact_div(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dn = len(den) - 1
    assert den[-1] == 1
    q = [0] * (len(num) - dn)
    for i in range(len(num) - 1, dn - 1, -1):
        c = num[i]
        if c:
            q[i - dn] = c
            for j, d in enumerate(den):
                num[i - dn + j] -= c * d
    if any(num):
        raise ArithmeticError("polynomial division is not exact")
    return q


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, via (x^n - 1) divided by Phi_d for proper divisors d."""
    if n < 1:
        raise ValueError("conductor must be positive")
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num = _poly_exact_div(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


@lru_cache(maxsize=None)
def _power_reductions(n: int) -> tuple[tuple[int, ...], ...]:
    """Row e holds the power-basis coefficients of zeta_n**e, e in [0, n)."""
    phi = cyclotomic_polynomial(n)
    deg = len(phi) - 1
    rows = []
    cur = [1] + [0] * (deg - 1)
    for _ in range(n):
        rows.append(tuple(cur))
        top = cur[-1]
        cur = [0] + cur[:-1]
        if top:
            for j in range(deg):
                cur[j] -= top * phi[j]
    return tuple(rows)


# -- the cyclotomic type --------------------------------------------------------

@dataclass(frozen=True, eq=False)
class Cyclotomic:
    """Sum of coeffs[e] * zeta_conductor**e, canonical modulo Phi_conductor."""

    conductor: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.conductor < 1:
            raise ValueError("conductor must be positive")
        if len(self.coeffs) != euler_phi(self.conductor):
            raise ValueError(
                f"expected {euler_phi(self.conductor)} coefficients, got {len(self.coeffs)}"
            )

    @classmethod
    def rational(cls, r) -> Cyclotomic:
        return cls(1, (Fraction(r),))

    def lift(self, n: int) -> Cyclotomic:
        """Same value at conductor n, a multiple of the current conductor."""
        if n == self.conductor:
            return self
        if n % self.conductor:
            raise ValueError(f"cannot lift conductor {self.conductor} to {n}")
        step = n // self.conductor
        return cyclo_normalize(n, {e * step: c for e, c in enumerate(self.coeffs) if c})

    def is_integral(self) -> bool:
        """True when every coefficient is an integer (an element of Z[zeta_n])."""
        return all(c.denominator == 1 for c in self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other):
        return cyclo_add(self, _coerce(other))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.conductor, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return cyclo_add(self, -_coerce(other))

    def __rsub__(self, other):
        return cyclo_add(_coerce(other), -self)

    def __mul__(self, other):
        return cyclo_mul(self, _coerce(other))

    __rmul__ = __mul__

    def __truediv__(self, other):
        r = Fraction(other)
        return Cyclotomic(self.conductor, tuple(c / r for c in self.coeffs))

    def __eq__(self, other):
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        n = _lcm(self.conductor, other.conductor)
        return self.lift(n).coeffs == other.lift(n).coeffs

    def __hash__(self):
        r = cyclo_as_rational(self)
        # equal irrational values may sit at different conductors
        return hash(r) if r is not None else 0

    def conjugate(self) -> Cyclotomic:
        return cyclo_conjugate(self)

    def __repr__(self):
        r = cyclo_as_rational(self)
        if r is not None:
            return f"Cyclotomic({r})"
        terms = [f"{c}*z{self.conductor}^{e}" for e, c in enumerate(self.coeffs) if c]
        return "Cyclotomic(" + " + ".join(terms) + ")"


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def _coerce(x) -> Cyclotomic:
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)):
        return Cyclotomic.rational(x)
    raise TypeError(f"cannot interpret {x!r} as a cyclotomic number")


def zeta(n: int, e: int = 1) -> Cyclotomic:
    return cyclo_normalize(n, {e: 1})


def cyclo_normalize(conductor: int, raw: Mapping[int, object]) -> Cyclotomic:
    """Canonical form of sum(raw[e] * zeta_conductor**e) for arbitrary integer e."""
    if conductor < 1:
        raise ValueError("conductor must be a positive integer")
    red = _power_reductions(conductor)
    out = [Fraction(0)] * len(red[0])
    for e, c in raw.items():
        c = Fraction(c)
        if not c:
            continue
        for j, r in enumerate(red[e % conductor]):
            if r:
                out[j] += c * r
    return Cyclotomic(conductor, tuple(out))


def cyclo_add(x: Cyclotomic, y: Cyclotomic) -> Cyclotomic:
    n = _lcm(x.conductor, y.conductor)
    x, y = x.lift(n), y.lift(n)
    return Cyclotomic(n, tuple(a + b for a, b in zip(x.coeffs, y.coeffs)))


def cyclo_mul(x: Cyclotomic, y: Cyclotomic) -> Cyclotomic:
    n = _lcm(x.conductor, y.conductor)
    x, y = x.lift(n), y.lift(n)
    raw: dict[int, Fraction] = {}
    for e, a in enumerate(x.coeffs):
        if not a:
            continue
        for f, b in enumerate(y.coeffs):
            if b:
                raw[e + f] = raw.get(e + f, 0) + a * b
    return cyclo_normalize(n, raw)


def cyclo_conjugate(x: Cyclotomic) -> Cyclotomic:
    """Image under zeta -> zeta**(n-1), i.e. complex conjugation."""
    n = x.conductor
    return cyclo_normalize(n, {-e: c for e, c in enumerate(x.coeffs) if c})


def cyclo_as_rational(x: Cyclotomic) -> Fraction | None:
    """The rational value of x, or None when x is irrational."""
    if any(x.coeffs[1:]):
        return None
    return x.coeffs[0]


def rational_mod_p(r, p: int) -> int:
    r = Fraction(r)
    if r.denominator % p == 0:
        raise NotPIntegralError(f"{r} is not {p}-integral")
    return r.numerator * pow(r.denominator, -1, p) % p


# -- reduction of cyclotomic integers into F_p --------------------------------

def _poly_mod_p(a: list[int], m: tuple[int, ...], p: int) -> list[int]:
    a = [c % p for c in a]
    dm = len(m) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            for j, d in enumerate(m):
                a[i - dm + j] = (a[i - dm + j] - c * d) % p
    return _poly_trim(a[:dm] if len(a) > dm else a) if dm else [0]


@lru_cache(maxsize=None)
def residue_modulus(m: int, p: int) -> tuple[int, ...]:
    """Least monic irreducible factor of Phi_m over F_p (m coprime to p).

    Phi_m is squarefree mod p with all irreducible factors of degree
    ord_m(p), so the first monic divisor of that degree found in
    lexicographic order is irreducible.
    """
    if m % p == 0:
        raise ValueError("modulus must be coprime to p")
    phi = [c % p for c in cyclotomic_polynomial(m)]
    f = multiplicative_order(p, m)
    for idx in range(p**f):
        low = [(idx // p**j) % p for j in range(f)]
        cand = tuple(low + [1])
        if _poly_mod_p(phi, cand, p) == [0]:
            return cand
    raise ArithmeticError(f"no factor of Phi_{m} of degree {f} over F_{p}")


def cyclo_mod_p(x: Cyclotomic, p: int) -> int:
    """Reduce a p-integral cyclotomic number into F_p.

    The reduction is the ring map sending zeta_n to a root t of
    ``residue_modulus(n', p)`` where n' is the p'-part of n.  Values that land
    outside F_p raise :class:`NotInPrimeFieldError`.  For rational x this
    agrees with :func:`rational_mod_p`.
    """
    if any(c.denominator % p == 0 for c in x.coeffs):
        raise NotPIntegralError(f"{x!r} is not {p}-integral")
    r = cyclo_as_rational(x)
    if r is not None:
        return rational_mod_p(r, p)
    _, m = split_off(x.conductor, p)
    modulus = residue_modulus(m, p)
    image = _poly_mod_p([rational_mod_p(c, p) for c in x.coeffs], modulus, p)
    if any(image[1:]):
        raise NotInPrimeFieldError(f"{x!r} does not reduce into F_{p}")
    return image[0]


# -- array helpers --------------------------------------------------------------

def common_conductor(values: Iterable[Cyclotomic]) -> int:
    n = 1
    for v in values:
        n = _lcm(n, v.conductor)
    return n


def coefficient_array(values, n: int) -> np.ndarray:
    """Integer coefficient array of shape values.shape + (phi(n),).

    ``values`` is a (nested) list of integral Cyclotomic numbers whose
    conductors divide n.
    """
    arr = np.asarray(values, dtype=object)
    out = np.zeros(arr.shape + (euler_phi(n),), dtype=object)
    for idx, v in np.ndenumerate(arr):
        out[idx] = [int(c) for c in _coerce(v).lift(n).coeffs]
    return out


@lru_cache(maxsize=None)
def multiplication_tensor(n: int) -> np.ndarray:
    """R[e, f, :] are the coefficients of zeta_n**(e+f) for e, f < phi(n)."""
    red = np.array(_power_reductions(n), dtype=np.int64)
    deg = red.shape[1]
    idx = (np.arange(deg)[:, None] + np.arange(deg)[None, :]) % n
    return red[idx]


@lru_cache(maxsize=None)
def conjugation_matrix(n: int) -> np.ndarray:
    """C with conj(x) = x @ C on coefficient vectors."""
    red = np.array(_power_reductions(n), dtype=np.int64)
    deg = red.shape[1]
    return red[(-np.arange(deg)) % n]
