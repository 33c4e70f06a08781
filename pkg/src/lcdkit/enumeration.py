"""Exhaustive and Brouwer-Zimmermann weight enumeration on packed vectors.

Vectors are packed into Python ints, one bit plane per GF(2)-coordinate
of the symbol encoding: GF(2) uses a single plane, GF(3) uses planes
(ones, twos), GF(4) uses the low/high bits of the element index (so
addition is XOR on both planes).  One enumeration step costs a constant
number of word operations regardless of length.

Binary enumeration walks the message space in Gray-code order (one row
add per codeword); GF(3)/GF(4) use a mixed-radix odometer whose carries
cost amortized q/(q-1) row adds per codeword.  The message space can be
partitioned across worker processes; min/sum reductions make the result
identical for every worker count.
"""

from __future__ import annotations

import itertools
import multiprocessing
from math import comb

import numpy as np

from .gf import FieldSpec
from .linalg import rref

DEFAULT_CAPS = {2: 2**26, 3: 3**16, 4: 4**13}

PARALLEL_THRESHOLD = 1 << 18


class BudgetExceeded(Exception):
    """Enumeration ran out of budget; carries the best (non-exact) upper bound."""

    def __init__(self, best_upper: int | None, steps: int):
        self.best_upper = best_upper
        self.steps = steps
        extra = f"; best upper bound so far {best_upper}" if best_upper is not None else ""
        super().__init__(f"work budget exhausted after {steps} steps{extra}")


# -- packing -------------------------------------------------------------


def pack_vector(order: int, vec) -> tuple[int, ...]:
    """Pack a symbol sequence into bit planes (low plane first)."""
    if order == 2:
        p = 0
        for j, v in enumerate(vec):
            if v:
                p |= 1 << j
        return (p,)
    if order == 3:
        p1 = p2 = 0
        for j, v in enumerate(vec):
            if v == 1:
                p1 |= 1 << j
            elif v == 2:
                p2 |= 1 << j
        return (p1, p2)
    lo = hi = 0
    for j, v in enumerate(vec):
        if v & 1:
            lo |= 1 << j
        if v & 2:
            hi |= 1 << j
    return (lo, hi)


def packed_weight(planes: tuple[int, ...]) -> int:
    acc = 0
    for p in planes:
        acc |= p
    return acc.bit_count()


def add_packed(order: int, a: tuple[int, ...], b: tuple[int, ...], mask: int) -> tuple[int, ...]:
    if order == 2:
        return (a[0] ^ b[0],)
    if order == 4:
        return (a[0] ^ b[0], a[1] ^ b[1])
    a1, a2 = a
    b1, b2 = b
    na = mask & ~(a1 | a2)
    nb = mask & ~(b1 | b2)
    return ((a1 & nb) | (b1 & na) | (a2 & b2), (a2 & nb) | (b2 & na) | (a1 & b1))


def scale_symbols(field: FieldSpec, row: np.ndarray, scalar: int) -> np.ndarray:
    return field.mul_table[scalar, row]


def pack_rows_scaled(field: FieldSpec, G: np.ndarray) -> list[list[tuple[int, ...]]]:
    """scaled[j][a] = packed planes of a * row_j, for every scalar a."""
    q = field.order
    return [[pack_vector(q, scale_symbols(field, G[j], a)) for a in range(q)] for j in range(G.shape[0])]


# -- scan loops ----------------------------------------------------------
#
# Each loop handles message indices [start, start + count) of the global
# enumeration order and returns (best nonzero weight seen, counts or None).


def _scan_gf2(rows: list[int], n: int, start: int, count: int, want_dist: bool):
    best = n + 1
    counts = [0] * (n + 1) if want_dist else None
    g = start ^ (start >> 1)
    cw = 0
    j = 0
    while g:
        if g & 1:
            cw ^= rows[j]
        g >>= 1
        j += 1
    if start == 0:
        if want_dist:
            counts[0] += 1
    else:
        w = cw.bit_count()
        if w < best:
            best = w
        if want_dist:
            counts[w] += 1
    if want_dist:
        for i in range(start + 1, start + count):
            cw ^= rows[(i & -i).bit_length() - 1]
            w = cw.bit_count()
            counts[w] += 1
            if w < best:
                best = w
    else:
        for i in range(start + 1, start + count):
            cw ^= rows[(i & -i).bit_length() - 1]
            w = cw.bit_count()
            if w < best:
                best = w
    return best, counts


def _radix_digits(index: int, base: int, k: int) -> list[int]:
    d = []
    for _ in range(k):
        d.append(index % base)
        index //= base
    return d


def _scan_gf3(scaled, n: int, start: int, count: int, want_dist: bool):
    mask = (1 << n) - 1
    k = len(scaled)
    digits = _radix_digits(start, 3, k)
    c1 = c2 = 0
    for j, dj in enumerate(digits):
        for _ in range(dj):
            b1, b2 = scaled[j][1]
            na = mask & ~(c1 | c2)
            nb = mask & ~(b1 | b2)
            c1, c2 = (c1 & nb) | (b1 & na) | (c2 & b2), (c2 & nb) | (b2 & na) | (c1 & b1)
    best = n + 1
    counts = [0] * (n + 1) if want_dist else None
    w = (c1 | c2).bit_count()
    if start == 0:
        if want_dist:
            counts[0] += 1
    else:
        best = w
        if want_dist:
            counts[w] += 1
    r1 = [s[1][0] for s in scaled]
    r2 = [s[1][1] for s in scaled]
    for _ in range(count - 1):
        j = 0
        while digits[j] == 2:
            digits[j] = 0
            b1, b2 = r1[j], r2[j]
            na = mask & ~(c1 | c2)
            nb = mask & ~(b1 | b2)
            c1, c2 = (c1 & nb) | (b1 & na) | (c2 & b2), (c2 & nb) | (b2 & na) | (c1 & b1)
            j += 1
        digits[j] += 1
        b1, b2 = r1[j], r2[j]
        na = mask & ~(c1 | c2)
        nb = mask & ~(b1 | b2)
        c1, c2 = (c1 & nb) | (b1 & na) | (c2 & b2), (c2 & nb) | (b2 & na) | (c1 & b1)
        w = (c1 | c2).bit_count()
        if w < best:
            best = w
        if want_dist:
            counts[w] += 1
    return best, counts


def _scan_gf4(scaled, n: int, start: int, count: int, want_dist: bool):
    k = len(scaled)
    digits = _radix_digits(start, 4, k)
    lo = hi = 0
    for j, dj in enumerate(digits):
        slo, shi = scaled[j][dj]
        lo ^= slo
        hi ^= shi
    # delta for a digit stepping m -> m+1 is row if m is even else w^2*row
    dlo = [(s[1][0], s[3][0]) for s in scaled]
    dhi = [(s[1][1], s[3][1]) for s in scaled]
    best = n + 1
    counts = [0] * (n + 1) if want_dist else None
    w = (lo | hi).bit_count()
    if start == 0:
        if want_dist:
            counts[0] += 1
    else:
        best = w
        if want_dist:
            counts[w] += 1
    for _ in range(count - 1):
        j = 0
        while digits[j] == 3:
            digits[j] = 0
            lo ^= dlo[j][1]
            hi ^= dhi[j][1]
            j += 1
        m = digits[j]
        digits[j] = m + 1
        lo ^= dlo[j][m & 1]
        hi ^= dhi[j][m & 1]
        w = (lo | hi).bit_count()
        if w < best:
            best = w
        if want_dist:
            counts[w] += 1
    return best, counts


def _scan_worker(args):
    order, payload, n, start, count, want_dist = args
    if order == 2:
        return _scan_gf2(payload, n, start, count, want_dist)
    if order == 3:
        return _scan_gf3(payload, n, start, count, want_dist)
    return _scan_gf4(payload, n, start, count, want_dist)


def _partition(total: int, parts: int) -> list[tuple[int, int]]:
    base, rem = divmod(total, parts)
    ranges = []
    s = 0
    for p in range(parts):
        c = base + (1 if p < rem else 0)
        if c:
            ranges.append((s, c))
            s += c
    return ranges


def _scan(field: FieldSpec, G: np.ndarray, total: int, want_dist: bool, threads: int):
    q = field.order
    n = G.shape[1]
    if q == 2:
        payload = [int(p[0]) for p in (pack_vector(2, row) for row in G)]
    else:
        payload = pack_rows_scaled(field, G)
    if threads > 1 and total >= PARALLEL_THRESHOLD:
        ranges = _partition(total, threads)
        args = [(q, payload, n, s, c, want_dist) for s, c in ranges]
        try:
            ctx = multiprocessing.get_context("fork")
            with ctx.Pool(len(args)) as pool:
                parts = pool.map(_scan_worker, args)
        except (OSError, ValueError):
            parts = [_scan_worker(a) for a in args]
    else:
        parts = [_scan_worker((q, payload, n, 0, total, want_dist))]
    best = min(p[0] for p in parts)
    counts = None
    if want_dist:
        counts = [0] * (n + 1)
        for _, c in parts:
            for i, v in enumerate(c):
                counts[i] += v
    return best, counts


def min_weight_exhaustive(field: FieldSpec, G: np.ndarray, cap: int | None = None, threads: int = 1) -> int:
    """Exact minimum nonzero weight by scanning all q^k codewords.

    Raises BudgetExceeded (carrying the best upper bound from a partial
    scan of ``cap`` codewords) when q^k exceeds the cap.
    """
    k, n = G.shape
    if k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    cap = DEFAULT_CAPS[field.order] if cap is None else cap
    total = field.order**k
    if total > cap:
        best, _ = _scan(field, G, max(cap, 2), False, 1)
        raise BudgetExceeded(best if best <= n else None, max(cap, 2))
    best, _ = _scan(field, G, total, False, threads)
    return best


def weight_distribution_exhaustive(field: FieldSpec, G: np.ndarray, cap: int | None = None, threads: int = 1) -> list[int]:
    k, n = G.shape
    cap = DEFAULT_CAPS[field.order] if cap is None else cap
    total = field.order**k
    if total > cap:
        raise BudgetExceeded(None, 0)
    if k == 0:
        return [1] + [0] * n
    _, counts = _scan(field, G, total, True, threads)
    return counts


# -- Brouwer-Zimmermann --------------------------------------------------


def _information_set_chain(field: FieldSpec, G: np.ndarray):
    """Systematic generators on pairwise disjoint column sets.

    Returns [(matrix, deficit)]; deficit = k minus the number of pivots
    the matrix places inside its own (previously unused) column block.
    """
    k, n = G.shape
    remaining = set(range(n))
    used: list[int] = []
    chain = []
    while remaining:
        col_order = sorted(remaining) + used
        res = rref(G, field, col_order=col_order)
        new_piv = [p for p in res.pivots if p in remaining]
        if not new_piv:
            break
        chain.append((res.matrix, k - len(new_piv)))
        remaining -= set(new_piv)
        used.extend(sorted(new_piv))
    return chain


def min_weight_bz(field: FieldSpec, G: np.ndarray, cap: int | None = None) -> int:
    """Brouwer-Zimmermann minimum weight.

    Enumerates information-weight-w combinations over a chain of
    systematic generator matrices; stops once the accumulated lower bound
    for unseen codewords reaches the best weight found.
    """
    k, n = G.shape
    if k == 0:
        raise ValueError("the zero code has no nonzero codewords")
    cap = DEFAULT_CAPS[field.order] if cap is None else cap
    q = field.order
    mask = (1 << n) - 1
    chain = _information_set_chain(field, G)
    packed_chain = [(pack_rows_scaled(field, mat), deficit) for mat, deficit in chain]
    best = n + 1
    work = 0
    for w in range(1, k + 1):
        for scaled, _deficit in packed_chain:
            for support in itertools.combinations(range(k), w):
                for scalars in itertools.product(range(1, q), repeat=w - 1):
                    cw = scaled[support[0]][1]
                    for idx, a in zip(support[1:], scalars):
                        cw = add_packed(q, cw, scaled[idx][a], mask)
                    ww = packed_weight(cw)
                    if ww and ww < best:
                        best = ww
                    work += 1
                    if work > cap:
                        raise BudgetExceeded(best if best <= n else None, work)
        lower = sum(max(0, w + 1 - deficit) for _mat, deficit in packed_chain)
        if lower >= best:
            return best
    return best


def bz_work_estimate(field: FieldSpec, k: int, n: int, w: int) -> int:
    blocks = max(1, -(-n // k))
    return blocks * sum(comb(k, i) * (field.order - 1) ** max(0, i - 1) for i in range(1, w + 1))
