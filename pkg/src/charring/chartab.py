"""Character tables: data model, JSON file format, and validation.

File format (UTF-8 JSON)::

    {"name": "S3", "order": 6,
     "classes": [{"size": 1, "order": 1, "powermaps": {"2": 0, "3": 0}}, ...],
     "irreducibles": [[1, 1, 1], ...]}

A value is either an integer or ``{"conductor": n, "coeffs": {"e": c, ...}}``
meaning sum(c * zeta_n**e).  Class indices are 0-based.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd

import numpy as np

from .errors import InconsistentTableError, TableParseError
from .exactnum import (
    Cyclotomic,
    coefficient_array,
    common_conductor,
    conjugation_matrix,
    cyclo_conjugate,
    cyclo_normalize,
    multiplication_tensor,
    prime_divisors,
)

__all__ = [
    "ConjClass",
    "CharacterTable",
    "ValidationReport",
    "parse_table",
    "load_table",
    "emit_table",
    "validate_table",
    "inverse_class_map",
]


@dataclass(frozen=True)
class ConjClass:
    size: int
    element_order: int
    power_maps: dict[int, int] = field(default_factory=dict)


@dataclass(frozen=True, eq=False)
class CharacterTable:
    name: str
    order: int
    classes: tuple[ConjClass, ...]
    irreducibles: tuple[tuple[Cyclotomic, ...], ...]

    @property
    def class_number(self) -> int:
        return len(self.classes)

    @property
    def degrees(self) -> list:
        return [row[0] for row in self.irreducibles]

    @property
    def primes(self) -> list[int]:
        return prime_divisors(self.order)

    @cached_property
    def conductor(self) -> int:
        return common_conductor(v for row in self.irreducibles for v in row)

    @cached_property
    def value_array(self) -> np.ndarray:
        """Integer coefficients of every value at the common conductor, shape (k, k, phi)."""
        return coefficient_array([list(r) for r in self.irreducibles], self.conductor)

    def __eq__(self, other):
        if not isinstance(other, CharacterTable):
            return NotImplemented
        return (
            self.name == other.name
            and self.order == other.order
            and self.classes == other.classes
            and self.irreducibles == other.irreducibles
        )

    __hash__ = object.__hash__


# -- parsing --------------------------------------------------------------------

def _require(obj, key, where, kind=int):
    if not isinstance(obj, dict) or key not in obj:
        raise TableParseError(f"{where}: missing field {key!r}")
    val = obj[key]
    if kind is int and (not isinstance(val, int) or isinstance(val, bool)):
        raise TableParseError(f"{where}: field {key!r} must be an integer, got {val!r}")
    if kind is str and not isinstance(val, str):
        raise TableParseError(f"{where}: field {key!r} must be a string")
    if kind is list and not isinstance(val, list):
        raise TableParseError(f"{where}: field {key!r} must be a list")
    return val


def _parse_int_key(key: str, where: str) -> int:
    try:
        return int(key)
    except ValueError:
        raise TableParseError(f"{where}: key {key!r} is not an integer") from None


def _parse_value(raw, where: str) -> Cyclotomic:
    if isinstance(raw, int) and not isinstance(raw, bool):
        return Cyclotomic.rational(raw)
    if isinstance(raw, dict):
        n = _require(raw, "conductor", where)
        if n < 1:
            raise TableParseError(f"{where}: conductor must be positive")
        coeffs = _require(raw, "coeffs", where, kind=None)
        if not isinstance(coeffs, dict):
            raise TableParseError(f"{where}: 'coeffs' must be an object")
        terms = {}
        for e, c in coeffs.items():
            if not isinstance(c, int) or isinstance(c, bool):
                raise TableParseError(f"{where}: coefficient {c!r} is not an integer")
            e = _parse_int_key(e, where)
            terms[e] = terms.get(e, 0) + c
        return cyclo_normalize(n, terms)
    raise TableParseError(f"{where}: unsupported value {raw!r}")


def parse_table(source) -> CharacterTable:
    """Parse a table from bytes, str, or a binary/text stream.

    Checks structure only (fields, shapes, index ranges, power maps for
    every prime divisor of the order); use :func:`validate_table` for the
    mathematics.
    """
    if hasattr(source, "read"):
        source = source.read()
    if isinstance(source, bytes):
        source = source.decode("utf-8")
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise TableParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict):
        raise TableParseError("top level must be an object")

    name = _require(doc, "name", "table", kind=str)
    order = _require(doc, "order", "table")
    if order < 1:
        raise TableParseError("table: order must be positive")
    raw_classes = _require(doc, "classes", "table", kind=list)
    raw_irr = _require(doc, "irreducibles", "table", kind=list)
    k = len(raw_classes)
    if k == 0:
        raise TableParseError("table: empty class list")

    primes = prime_divisors(order)
    classes = []
    for i, rc in enumerate(raw_classes):
        where = f"classes[{i}]"
        size = _require(rc, "size", where)
        eorder = _require(rc, "order", where)
        if size < 1 or eorder < 1:
            raise TableParseError(f"{where}: size and order must be positive")
        pm_raw = _require(rc, "powermaps", where, kind=None)
        if not isinstance(pm_raw, dict):
            raise TableParseError(f"{where}: 'powermaps' must be an object")
        pm = {}
        for q, j in pm_raw.items():
            q = _parse_int_key(q, where)
            if not isinstance(j, int) or isinstance(j, bool) or not 0 <= j < k:
                raise TableParseError(f"{where}: power map image {j!r} out of range")
            pm[q] = j
        for q in primes:
            if q not in pm:
                raise TableParseError(f"{where}: missing power map for prime {q}")
        classes.append(ConjClass(size, eorder, dict(sorted(pm.items()))))

    if len(raw_irr) != k:
        raise TableParseError(f"shape mismatch: {len(raw_irr)} characters but {k} classes")
    rows = []
    for a, row in enumerate(raw_irr):
        if not isinstance(row, list) or len(row) != k:
            got = len(row) if isinstance(row, list) else "non-list"
            raise TableParseError(f"shape mismatch: irreducibles[{a}] has {got} entries, expected {k}")
        rows.append(tuple(_parse_value(v, f"irreducibles[{a}][{b}]") for b, v in enumerate(row)))
    return CharacterTable(name, order, tuple(classes), tuple(rows))


def load_table(path) -> CharacterTable:
    with open(path, "rb") as fh:
        return parse_table(fh)


def _emit_value(v: Cyclotomic):
    if not any(v.coeffs[1:]) and v.coeffs[0].denominator == 1:
        return int(v.coeffs[0])
    return {
        "conductor": v.conductor,
        "coeffs": {str(e): int(c) for e, c in enumerate(v.coeffs) if c},
    }


def emit_table(table: CharacterTable) -> str:
    doc = {
        "name": table.name,
        "order": table.order,
        "classes": [
            {"size": c.size, "order": c.element_order,
             "powermaps": {str(q): j for q, j in c.power_maps.items()}}
            for c in table.classes
        ],
        "irreducibles": [[_emit_value(v) for v in row] for row in table.irreducibles],
    }
    return json.dumps(doc, indent=1) + "\n"


# -- validation -----------------------------------------------------------------

@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def __bool__(self):
        return self.ok

    def __str__(self):
        if self.ok:
            return "ok"
        return "\n".join(self.failures)


def _gram(table: CharacterTable) -> np.ndarray:
    """Exact sum_c |c| chi(c) conj(psi(c)) for all pairs, as coefficient vectors."""
    n = table.conductor
    V = table.value_array
    W = V @ conjugation_matrix(n)
    w = np.array([c.size for c in table.classes], dtype=object)
    R = multiplication_tensor(n).astype(object)
    T = np.einsum("ace,c,bcf->abef", V, w, W)
    return np.einsum("abef,efr->abr", T, R)


def _column_gram(table: CharacterTable) -> np.ndarray:
    n = table.conductor
    V = table.value_array
    W = V @ conjugation_matrix(n)
    R = multiplication_tensor(n).astype(object)
    T = np.einsum("ace,adf->cdef", V, W)
    return np.einsum("cdef,efr->cdr", T, R)


def validate_table(table: CharacterTable) -> ValidationReport:
    """Check every structural and orthogonality invariant; collect all failures."""
    rep = ValidationReport()
    fail = rep.failures.append
    G = table.order
    k = table.class_number
    classes = table.classes

    if classes[0].size != 1 or classes[0].element_order != 1:
        fail("class 0 is not the identity class (size 1, element order 1)")
    total = sum(c.size for c in classes)
    if total != G:
        fail(f"Σ class sizes = {total} ≠ {G}")
    for i, c in enumerate(classes):
        if G % c.size:
            fail(f"class {i}: size {c.size} does not divide {G}")
        if G % c.element_order:
            fail(f"class {i}: element order {c.element_order} does not divide {G}")
        for q in table.primes:
            if q not in c.power_maps:
                fail(f"class {i}: missing power map for prime {q}")
        for q, j in c.power_maps.items():
            if not 0 <= j < k:
                fail(f"class {i}: {q}-power map image {j} out of range")
                continue
            want = c.element_order // gcd(c.element_order, q)
            if classes[j].element_order != want:
                fail(f"class {i}: {q}-power image {j} has element order "
                     f"{classes[j].element_order}, expected {want}")

    if len(table.irreducibles) != k or any(len(r) != k for r in table.irreducibles):
        fail(f"character matrix is not {k}x{k}")
        return rep

    integral = True
    for a, row in enumerate(table.irreducibles):
        for b, v in enumerate(row):
            if not v.is_integral():
                fail(f"irreducibles[{a}][{b}] has non-integer coefficients")
                integral = False
    if any(v != 1 for v in table.irreducibles[0]):
        fail("row 0 is not the trivial character")

    degrees_ok = True
    deg_sq = 0
    for a, d in enumerate(table.degrees):
        if any(d.coeffs[1:]) or d.coeffs[0].denominator != 1 or d.coeffs[0] <= 0:
            fail(f"degree of character {a} is not a positive integer")
            degrees_ok = False
        else:
            deg_sq += int(d.coeffs[0]) ** 2
    if degrees_ok and deg_sq != G:
        fail(f"Σ degrees² = {deg_sq} ≠ {G}")
    if not integral:
        return rep

    gram = _gram(table)
    for a in range(k):
        for b in range(k):
            want = G if a == b else 0
            if gram[a, b, 0] != want or any(gram[a, b, 1:]):
                fail(f"row orthogonality fails for characters ({a}, {b})")
    cgram = _column_gram(table)
    for c in range(k):
        for d in range(k):
            want = G // classes[c].size if c == d else 0
            if G % classes[c].size:
                want = None
            if want is None or cgram[c, d, 0] != want or any(cgram[c, d, 1:]):
                fail(f"column orthogonality fails for classes ({c}, {d})")

    try:
        inv = inverse_class_map(table)
    except InconsistentTableError as exc:
        fail(str(exc))
    else:
        for c in range(k):
            if inv[inv[c]] != c:
                fail(f"inverse class map is not an involution at class {c}")
            if classes[inv[c]].size != classes[c].size or \
                    classes[inv[c]].element_order != classes[c].element_order:
                fail(f"class {c} and its inverse class {inv[c]} differ in size or order")
    return rep


def inverse_class_map(table: CharacterTable) -> list[int]:
    """Permutation c -> class of c^{-1}, found by matching conjugated columns."""
    k = table.class_number
    cols = [tuple(table.irreducibles[a][c] for a in range(k)) for c in range(k)]
    inv = []
    for c in range(k):
        target = tuple(cyclo_conjugate(v) for v in cols[c])
        hits = [d for d in range(k) if cols[d] == target]
        if len(hits) != 1:
            kind = "no" if not hits else "ambiguous"
            raise InconsistentTableError(
                f"inconsistent table: {kind} inverse column for class {c}")
        inv.append(hits[0])
    return inv


def mutate_entry(table: CharacterTable, a: int, b: int, delta=1) -> CharacterTable:
    """Copy of the table with irreducibles[a][b] shifted by delta (for testing)."""
    rows = [list(r) for r in table.irreducibles]
    rows[a][b] = rows[a][b] + delta
    return CharacterTable(table.name, table.order, table.classes, tuple(tuple(r) for r in rows))

