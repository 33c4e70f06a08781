"""Linear codes over GF(2)/GF(3)/GF(4) and their core queries.

A LinearCode is an immutable full-rank generator matrix tagged with its
field.  Queries cover: dual and hull computation, the LCD test, the
shortening/puncturing constructions, exact minimum weight and weight
distribution (exhaustive or Brouwer-Zimmermann), binary even/odd-like
classification, and the text file format used by the corpus and the CLI.

Coordinates are 0-based throughout the API; the text formats (code files
and construction records) are 1-based so they stay visually comparable
with published tables.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from . import enumeration, linalg
from .gf import FieldError, FieldSpec, field_by_name

# re-exported: callers catch budget errors from this module
BudgetExceeded = enumeration.BudgetExceeded

EXHAUSTIVE = "exhaustive"
BROUWER_ZIMMERMANN = "bz"


class CodeError(ValueError):
    pass


class EmptyCode(CodeError):
    """A construction produced the zero code."""


@dataclass(frozen=True, eq=False)
class LinearCode:
    field: FieldSpec
    generator: np.ndarray  # (k, n) uint8, full rank; stored as given

    @property
    def n(self) -> int:
        return self.generator.shape[1]

    @property
    def k(self) -> int:
        return self.generator.shape[0]

    def params(self) -> tuple[int, int]:
        return (self.n, self.k)

    def same_code(self, other: "LinearCode") -> bool:
        """Row-space equality (generators may differ)."""
        return (
            self.field == other.field
            and self.n == other.n
            and linalg.row_spaces_equal(self.generator, other.generator, self.field)
        )

    def __repr__(self):
        return f"LinearCode({self.field.name}, [{self.n},{self.k}])"


def _frozen(m: np.ndarray) -> np.ndarray:
    m = np.array(m, dtype=np.uint8)
    m.setflags(write=False)
    return m


def new_code(field: FieldSpec, matrix) -> LinearCode:
    """Validate and wrap a generator matrix; no silent normalization."""
    m = linalg.as_matrix(field, matrix)
    if m.size == 0 or m.shape[0] == 0:
        raise CodeError("generator matrix must be nonempty")
    k, n = m.shape
    if k > n:
        raise CodeError(f"dimension {k} exceeds length {n}")
    if linalg.rank(m, field) != k:
        for i in range(1, k + 1):
            if linalg.rank(m[:i], field) < i:
                raise CodeError(f"generator row {i} is linearly dependent on the rows above it")
    return LinearCode(field, _frozen(m))


def dual(C: LinearCode) -> LinearCode:
    """The [n, n-k] dual under the code's inner-product flavor.

    For k = n the result is the zero-dimensional code, which is legal
    only as an output (its generator has no rows).
    """
    basis = linalg.nullspace(C.generator, C.field)
    return LinearCode(C.field, _frozen(basis.reshape(-1, C.n)))


@dataclass(frozen=True)
class HullInfo:
    basis: np.ndarray  # RREF
    dim: int
    pivot_set: tuple[int, ...]


def hull(C: LinearCode) -> HullInfo:
    g = linalg.gram(C.generator, C.field)
    dim = C.k - linalg.rank(g, C.field)
    dual_basis = linalg.nullspace(C.generator, C.field)
    basis = linalg.intersect_row_spaces(C.generator, dual_basis, C.field)
    # rank(gram) and the row-space intersection must agree on the dimension
    assert basis.shape[0] == dim, "hull dimension mismatch between Gram rank and intersection"
    pivots = tuple(int(np.nonzero(basis[i])[0][0]) for i in range(dim))
    return HullInfo(_frozen(basis), dim, pivots)


def is_lcd(C: LinearCode) -> bool:
    if C.k == 0:
        return True
    return linalg.rank(linalg.gram(C.generator, C.field), C.field) == C.k


def _check_coords(C: LinearCode, T) -> tuple[int, ...]:
    T = tuple(sorted(set(int(t) for t in T)))
    for t in T:
        if not 0 <= t < C.n:
            raise CodeError(f"coordinate {t} out of range for length {C.n}")
    return T


def shorten(C: LinearCode, T) -> LinearCode:
    """Codewords vanishing on T, with the T coordinates deleted.

    The dimension is re-derived from the subcode, never assumed.  The
    returned generator is in RREF (T = empty set returns C unchanged).
    """
    T = _check_coords(C, T)
    if not T:
        return C
    plain = FieldSpec(C.field.order)
    msgs = linalg.nullspace(C.generator[:, T].T, plain)
    if msgs.shape[0] == 0:
        raise EmptyCode(f"shortening on {len(T)} coordinates leaves no nonzero codeword")
    sub = linalg.matmul(C.field, msgs, C.generator)
    keep = [j for j in range(C.n) if j not in set(T)]
    basis = linalg.row_space_basis(sub[:, keep], C.field)
    return LinearCode(C.field, _frozen(basis))


def puncture(C: LinearCode, T) -> LinearCode:
    """Delete the T coordinates from every codeword (RREF generator)."""
    T = _check_coords(C, T)
    if not T:
        return C
    keep = [j for j in range(C.n) if j not in set(T)]
    basis = linalg.row_space_basis(C.generator[:, keep], C.field)
    if basis.shape[0] == 0:
        raise EmptyCode("puncturing deleted every nonzero coordinate")
    return LinearCode(C.field, _frozen(basis))


def min_weight(C: LinearCode, strategy: str = EXHAUSTIVE, cap: int | None = None, threads: int = 1) -> int:
    """Exact minimum nonzero Hamming weight.

    Both strategies are exact; ``bz`` typically touches far fewer
    codewords.  On budget exhaustion BudgetExceeded carries the best
    upper bound seen, explicitly flagged non-exact.
    """
    if strategy == EXHAUSTIVE:
        return enumeration.min_weight_exhaustive(C.field, C.generator, cap=cap, threads=threads)
    if strategy == BROUWER_ZIMMERMANN:
        return enumeration.min_weight_bz(C.field, C.generator, cap=cap)
    raise CodeError(f"unknown strategy {strategy!r}")


@dataclass(frozen=True)
class WeightDistribution:
    counts: tuple[int, ...]  # A_0 .. A_n
    min_weight: int
    odd_like: bool | None  # binary codes only, None otherwise

    def nonzero(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.counts) if c]


def weight_distribution(C: LinearCode, cap: int | None = None, threads: int = 1) -> WeightDistribution:
    counts = enumeration.weight_distribution_exhaustive(C.field, C.generator, cap=cap, threads=threads)
    d = next(i for i in range(1, len(counts)) if counts[i])
    odd_like = None
    if C.field.order == 2:
        odd_like = any(counts[i] for i in range(1, len(counts), 2))
    return WeightDistribution(tuple(counts), d, odd_like)


def is_even_like(C: LinearCode) -> bool:
    """True iff every codeword has even weight (binary codes only).

    Row weights suffice: weights add mod 2 under GF(2) vector addition.
    """
    if C.field.order != 2:
        raise CodeError("even/odd-like classification is defined for binary codes only")
    return all(int(row.sum()) % 2 == 0 for row in C.generator)


def macwilliams_dual_counts(counts, n: int, k: int) -> list[int]:
    """Weight distribution of the dual of a binary code from the primal one."""
    size = 2**k
    out = []
    for j in range(n + 1):
        acc = 0
        for i, a in enumerate(counts):
            if not a:
                continue
            kraw = sum((-1) ** s * comb(i, s) * comb(n - i, j - s) for s in range(0, min(i, j) + 1))
            acc += a * kraw
        q, r = divmod(acc, size)
        if r:
            raise CodeError("MacWilliams transform did not divide evenly; input is not a weight distribution")
        out.append(q)
    return out


# -- text file format ------------------------------------------------------
#
#   line 1:  field n k          (field in {gf2, gf3, gf4h})
#   then k rows of n symbols (whitespace between symbols optional)
#   '#' starts a comment line

_FILE_FIELDS = ("gf2", "gf3", "gf4h")


def parse_code(text: str) -> LinearCode:
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise CodeError("empty code file")
    head = lines[0].split()
    if len(head) != 3:
        raise CodeError(f"malformed header {lines[0]!r}; expected 'field n k'")
    name, n_s, k_s = head
    if name not in _FILE_FIELDS:
        raise CodeError(f"unknown field {name!r}; expected one of {_FILE_FIELDS}")
    field = field_by_name(name)
    try:
        n, k = int(n_s), int(k_s)
    except ValueError:
        raise CodeError(f"malformed header {lines[0]!r}") from None
    if len(lines) - 1 != k:
        raise CodeError(f"expected {k} matrix rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        symbols = ln.replace(" ", "").replace("\t", "")
        if len(symbols) != n:
            raise CodeError(f"row {len(rows) + 1} has {len(symbols)} symbols, expected {n}")
        try:
            rows.append([field.parse_symbol(ch) for ch in symbols])
        except FieldError as exc:
            raise CodeError(f"row {len(rows) + 1}: {exc}") from None
    return new_code(field, rows)


def format_code(C: LinearCode) -> str:
    field = C.field
    lines = [f"{field.name} {C.n} {C.k}"]
    for row in C.generator:
        lines.append("".join(field.format_symbol(int(v)) for v in row))
    return "\n".join(lines) + "\n"


def read_code_file(path) -> LinearCode:
    with open(path, "r", encoding="ascii") as fh:
        return parse_code(fh.read())


def write_code_file(path, C: LinearCode) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_code(C))


def parse_vector(field: FieldSpec, text: str) -> np.ndarray:
    symbols = text.strip().replace(" ", "").replace("\t", "")
    return np.array([field.parse_symbol(ch) for ch in symbols], dtype=np.uint8)


def format_vector(field: FieldSpec, vec) -> str:
    return "".join(field.format_symbol(int(v)) for v in vec)
