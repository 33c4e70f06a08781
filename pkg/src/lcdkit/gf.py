"""Arithmetic for the three small fields used by the toolkit.

Field elements are integer indices 0..q-1.  For GF(4) the indices encode
the polynomial basis over GF(2) with w = x mod (x^2 + x + 1):

    0 -> 0,  1 -> 1,  2 -> w,  3 -> w^2

so that addition of indices is XOR.  All arithmetic is table driven; the
tables are numpy arrays and can be fancy-indexed with whole vectors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

EUCLIDEAN = "euclidean"
HERMITIAN = "hermitian"

# text alphabets, one symbol per element index
_ALPHABETS = {2: "01", 3: "012", 4: "01wW"}


class FieldError(ValueError):
    """Invalid field construction or mixed-field operands."""


def _build_tables(order: int):
    if order in (2, 3):
        add = np.fromfunction(lambda a, b: (a + b) % order, (order, order), dtype=np.int64)
        mul = np.fromfunction(lambda a, b: (a * b) % order, (order, order), dtype=np.int64)
    else:
        # GF(4) = GF(2)[x]/(x^2+x+1), index bits are polynomial coefficients
        def poly_mul(a, b):
            r = 0
            for i in range(2):
                if (b >> i) & 1:
                    r ^= a << i
            if (r >> 2) & 1:
                r ^= 0b111  # reduce x^2 -> x + 1
            return r & 0b11

        add = np.fromfunction(lambda a, b: a.astype(int) ^ b.astype(int), (4, 4), dtype=np.int64)
        mul = np.array([[poly_mul(a, b) for b in range(4)] for a in range(4)])
    neg = np.array([np.nonzero(add[a] == 0)[0][0] for a in range(order)])
    inv = np.zeros(order, dtype=np.int64)
    for a in range(1, order):
        inv[a] = np.nonzero(mul[a] == 1)[0][0]
    conj = np.arange(order)
    if order == 4:
        conj = np.array([0, 1, 3, 2])  # x -> x^2 swaps w and w^2
    out = {}
    for name, t in [("add", add), ("mul", mul), ("neg", neg), ("inv", inv), ("conj", conj)]:
        t = t.astype(np.uint8)
        t.setflags(write=False)
        out[name] = t
    return out


@lru_cache(maxsize=None)
def _tables(order: int):
    return _build_tables(order)


@dataclass(frozen=True)
class FieldSpec:
    """A field order in {2, 3, 4} plus the inner-product flavor.

    The Hermitian flavor exists only for GF(4); it conjugates the right
    operand of every pairing with x -> x^2.
    """

    order: int
    flavor: str = EUCLIDEAN

    def __post_init__(self):
        if self.order not in (2, 3, 4):
            raise FieldError(f"unsupported field order {self.order}")
        if self.flavor not in (EUCLIDEAN, HERMITIAN):
            raise FieldError(f"unknown flavor {self.flavor!r}")
        if self.flavor == HERMITIAN and self.order != 4:
            raise FieldError("Hermitian flavor requires order 4")

    # -- table access ----------------------------------------------------
    @property
    def add_table(self) -> np.ndarray:
        return _tables(self.order)["add"]

    @property
    def mul_table(self) -> np.ndarray:
        return _tables(self.order)["mul"]

    @property
    def neg_table(self) -> np.ndarray:
        return _tables(self.order)["neg"]

    @property
    def inv_table(self) -> np.ndarray:
        return _tables(self.order)["inv"]

    @property
    def conj_table(self) -> np.ndarray:
        """Coordinatewise conjugation; identity unless flavor is Hermitian."""
        if self.flavor == HERMITIAN:
            return _tables(self.order)["conj"]
        return np.arange(self.order, dtype=np.uint8)

    # -- scalar arithmetic (also accepts numpy arrays) --------------------
    def add(self, a, b):
        return self.add_table[a, b]

    def sub(self, a, b):
        return self.add_table[a, self.neg_table[b]]

    def mul(self, a, b):
        return self.mul_table[a, b]

    def neg(self, a):
        return self.neg_table[a]

    def inv(self, a):
        if np.any(np.asarray(a) == 0):
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return self.inv_table[a]

    def conj(self, a):
        return self.conj_table[a]

    # -- text I/O ----------------------------------------------------------
    @property
    def alphabet(self) -> str:
        return _ALPHABETS[self.order]

    @property
    def name(self) -> str:
        if self.order == 4 and self.flavor == HERMITIAN:
            return "gf4h"
        return f"gf{self.order}"

    def parse_symbol(self, ch: str) -> int:
        try:
            return self.alphabet.index(ch)
        except ValueError:
            raise FieldError(f"symbol {ch!r} not in alphabet {self.alphabet!r} of {self.name}") from None

    def format_symbol(self, value: int) -> str:
        return self.alphabet[value]

    def element(self, value: int) -> "FieldElement":
        return FieldElement(int(value), self)

    def __repr__(self):
        return f"FieldSpec({self.name})"


@dataclass(frozen=True)
class FieldElement:
    """A field element bundled with its field, for element-level algebra.

    Matrix code works on raw integer indices for speed; this wrapper is
    the convenient and type-safe face of the same tables.
    """

    value: int
    field: FieldSpec = field(compare=True)

    def __post_init__(self):
        if not 0 <= self.value < self.field.order:
            raise FieldError(f"value {self.value} out of range for {self.field.name}")

    def _check(self, other: "FieldElement"):
        if not isinstance(other, FieldElement):
            raise TypeError(f"expected FieldElement, got {type(other).__name__}")
        if other.field.order != self.field.order:
            raise FieldError(f"mixed-field operands: {self.field.name} and {other.field.name}")

    def __add__(self, other):
        self._check(other)
        return FieldElement(int(self.field.add(self.value, other.value)), self.field)

    def __mul__(self, other):
        self._check(other)
        return FieldElement(int(self.field.mul(self.value, other.value)), self.field)

    def __neg__(self):
        return FieldElement(int(self.field.neg(self.value)), self.field)

    def __sub__(self, other):
        self._check(other)
        return self + (-other)

    def inverse(self):
        return FieldElement(int(self.field.inv(self.value)), self.field)

    def conjugate(self):
        return FieldElement(int(self.field.conj(self.value)), self.field)

    def __str__(self):
        return self.field.format_symbol(self.value)


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
GF4 = FieldSpec(4)
GF4H = FieldSpec(4, HERMITIAN)

FIELDS_BY_NAME = {"gf2": GF2, "gf3": GF3, "gf4": GF4, "gf4h": GF4H}


def field_by_name(name: str) -> FieldSpec:
    try:
        return FIELDS_BY_NAME[name]
    except KeyError:
        raise FieldError(f"unknown field name {name!r}; expected one of {sorted(FIELDS_BY_NAME)}") from None
