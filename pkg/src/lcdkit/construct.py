"""Construction engines that turn codes into LCD codes or grow LCD codes.

Contents:

* hull-pivot shortening: an [n,k,d] code with an l-dimensional hull has
  an LCD [n-l, k-l, >=d] shortening on the hull's pivot coordinates;
* hull-guided puncturing: when l < d, puncturing the same coordinate set
  keeps the dimension and yields an LCD [n-l, k, >=d-l] code;
* two extension methods: method 1 prepends a coordinate and a dual row
  (1|x; 0|G), method 2 stacks a dual row y on top of G.  Each is LCD
  exactly when the extension vector's weight satisfies a per-field
  condition, and each odd-like binary LCD code arises this way
  (decompose_m1 inverts method 1);
* a deterministic search over extension vectors, ranked by the exact
  minimum distance they achieve.

Construction records serialize chains of these steps so published
results can be replayed bit-exactly.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass

import numpy as np

from . import enumeration, linalg
from .codes import (
    EmptyCode,
    CodeError,
    LinearCode,
    dual,
    format_vector,
    hull,
    is_even_like,
    is_lcd,
    min_weight,
    parse_vector,
    shorten,
    puncture,
)
from .gf import FieldSpec

M1 = "m1"
M2 = "m2"


class ConstructError(CodeError):
    pass


class NotLcd(ConstructError):
    """Operation requires an LCD input code."""


class NotInDual(ConstructError):
    pass


class WeightCondition(ConstructError):
    pass


class NotDecomposable(ConstructError):
    pass


class NoCandidate(ConstructError):
    pass


def weight_condition(field: FieldSpec, method: str, weight: int) -> bool:
    """The weight test that makes an extension LCD.

    Method 1 adds 1 to the self-pairing of the extension vector, method 2
    uses the self-pairing itself; self-pairings reduce to the weight mod
    the characteristic-like modulus of each field.
    """
    if method == M1:
        if field.order == 3:
            return weight % 3 != 2
        return weight % 2 == 0
    if method == M2:
        if field.order == 3:
            return weight % 3 != 0
        return weight % 2 == 1
    raise ConstructError(f"unknown method {method!r}")


@dataclass(frozen=True)
class ExtensionVector:
    vector: np.ndarray
    method: str
    weight: int


def extension_vector(C: LinearCode, vector, method: str) -> ExtensionVector:
    """Validate dual membership and the method's weight condition."""
    v = np.asarray(vector, dtype=np.uint8)
    if v.shape != (C.n,):
        raise ConstructError(f"extension vector has length {v.shape}, expected {C.n}")
    if linalg.pairing_matrix(C.generator, v.reshape(1, -1), C.field).any():
        raise NotInDual("vector does not pair to zero with every generator row")
    w = int((v != 0).sum())
    if not weight_condition(C.field, method, w):
        raise WeightCondition(f"weight {w} violates the method-{method[1]} condition for {C.field.name}")
    return ExtensionVector(v, method, w)


# -- hull-based constructions ---------------------------------------------


def shorten_to_lcd(C: LinearCode) -> tuple[LinearCode, tuple[int, ...]]:
    """Shorten on the hull pivot set; LCD [n-l, k-l] with distance >= d."""
    h = hull(C)
    if h.dim == 0:
        return C, ()
    if h.dim == C.k:
        raise EmptyCode("the code is self-orthogonal; shortening on the hull leaves nothing")
    S = shorten(C, h.pivot_set)
    assert S.params() == (C.n - h.dim, C.k - h.dim)
    assert is_lcd(S)
    return S, h.pivot_set


def puncture_to_lcd(C: LinearCode, cap: int | None = None, threads: int = 1) -> tuple[LinearCode, tuple[int, ...]]:
    """Puncture on the hull pivot set; LCD [n-l, k] with distance >= d-l.

    Requires l < d so the dimension survives; the minimum distance of C
    is computed to check this precondition.
    """
    h = hull(C)
    if h.dim == 0:
        return C, ()
    d = min_weight(C, cap=cap, threads=threads)
    if h.dim >= d:
        raise ConstructError(f"hull dimension {h.dim} is not below the minimum distance {d}")
    P = puncture(C, h.pivot_set)
    assert P.params() == (C.n - h.dim, C.k)
    assert is_lcd(P)
    return P, h.pivot_set


# -- extension methods ------------------------------------------------------


def extend_m1(C: LinearCode, x) -> LinearCode:
    """[n+1, k+1] LCD extension with generator (1 x; 0 G)."""
    if not is_lcd(C):
        raise NotLcd("method 1 extends LCD codes only")
    ev = x if isinstance(x, ExtensionVector) else extension_vector(C, x, M1)
    if ev.method != M1:
        raise ConstructError("extension vector was validated for the other method")
    if ev.weight == 0:
        warnings.warn("all-zero extension vector: the result is LCD but its minimum distance is 1")
    g = np.zeros((C.k + 1, C.n + 1), dtype=np.uint8)
    g[0, 0] = 1
    g[0, 1:] = ev.vector
    g[1:, 1:] = C.generator
    out = LinearCode(C.field, g)
    assert is_lcd(out)
    return out


def extend_m2(C: LinearCode, y) -> LinearCode:
    """[n, k+1] LCD extension with generator (y; G)."""
    if not is_lcd(C):
        raise NotLcd("method 2 extends LCD codes only")
    ev = y if isinstance(y, ExtensionVector) else extension_vector(C, y, M2)
    if ev.method != M2:
        raise ConstructError("extension vector was validated for the other method")
    g = np.vstack([ev.vector.reshape(1, -1), C.generator])
    out = LinearCode(C.field, g)
    assert is_lcd(out)
    return out


def pad_zero_column(C: LinearCode) -> LinearCode:
    """[n+1, k] with a zero column appended; Gram, LCD status and minimum
    weight are untouched."""
    g = np.hstack([C.generator, np.zeros((C.k, 1), dtype=np.uint8)])
    return LinearCode(C.field, g)


# -- completeness direction -------------------------------------------------


def project_split(v, C: LinearCode) -> tuple[np.ndarray, np.ndarray]:
    """Split v = c + h with c in C and h in the dual; needs C LCD.

    The LCD property makes the ambient space the direct sum of C and its
    dual, so the split exists and is unique.
    """
    if not is_lcd(C):
        raise NotLcd("the ambient space splits only for LCD codes")
    v = np.asarray(v, dtype=np.uint8)
    dgen = dual(C).generator
    stacked = np.vstack([C.generator, dgen]) if dgen.size else C.generator
    coeffs = linalg.solve_rowspace(stacked, v, C.field)
    assert coeffs is not None, "C + C^perp failed to span the ambient space"
    c = linalg.matmul(C.field, coeffs[: C.k].reshape(1, -1), C.generator)[0]
    h = C.field.add_table[v, C.field.neg_table[c]]
    return c, h


def decompose_m1(Cp: LinearCode) -> tuple[int, LinearCode, np.ndarray]:
    """Invert method 1 on an odd-like binary LCD code.

    Scans coordinates in increasing order for one whose shortening is an
    LCD [n-1, k-1] code, then splits the residual generator row against
    that shortening to recover an even-weight dual vector x such that
    method 1 rebuilds a code equivalent to the input (equal up to moving
    the chosen coordinate to the front).
    """
    if Cp.field.order != 2:
        raise ConstructError("decomposition is defined for binary codes")
    if Cp.k < 2:
        raise ConstructError("decomposition needs dimension at least 2")
    if not is_lcd(Cp):
        raise NotLcd("input must be LCD")
    if is_even_like(Cp):
        raise ConstructError("input must be odd-like")
    for i in range(Cp.n):
        if not Cp.generator[:, i].any():
            continue  # coordinate untouched by the code: no dimension drop
        S = shorten(Cp, (i,))
        if S.k != Cp.k - 1 or not is_lcd(S):
            continue
        order = [i] + [j for j in range(Cp.n) if j != i]
        res = linalg.rref(Cp.generator, Cp.field, col_order=order)
        assert res.pivots[0] == i
        u = res.matrix[0]
        x_full = np.delete(u, i)
        _, x = project_split(x_full, S)
        assert int((x != 0).sum()) % 2 == 0, "residual dual component must have even weight"
        return i, S, x
    raise NotDecomposable("no coordinate shortens to an LCD code")


# -- extension search --------------------------------------------------------


@dataclass(frozen=True)
class SearchResult:
    vector: np.ndarray
    code: LinearCode
    min_weight: int
    exact: bool
    exhaustive: bool
    candidates: int
    target_met: bool | None


def _pack_planes(field: FieldSpec, words: np.ndarray) -> list[np.ndarray]:
    """Pack symbol rows (N x n, n <= 63) into per-plane uint64 arrays."""
    n = words.shape[1]
    assert n <= 63
    if field.order == 2:
        planes = [np.zeros(len(words), dtype=np.uint64)]
    else:
        planes = [np.zeros(len(words), dtype=np.uint64), np.zeros(len(words), dtype=np.uint64)]
    for j in range(n):
        col = words[:, j]
        if field.order == 2:
            planes[0] |= (col & 1).astype(np.uint64) << np.uint64(j)
        elif field.order == 3:
            planes[0] |= (col == 1).astype(np.uint64) << np.uint64(j)
            planes[1] |= (col == 2).astype(np.uint64) << np.uint64(j)
        else:
            planes[0] |= (col & 1).astype(np.uint64) << np.uint64(j)
            planes[1] |= ((col >> 1) & 1).astype(np.uint64) << np.uint64(j)
    return planes


def _planes_add_scalar(field: FieldSpec, planes: list[np.ndarray], word_planes: tuple[int, ...], mask: int):
    """planes (vectorized) + one packed word, elementwise over the batch."""
    if field.order == 2:
        return [planes[0] ^ np.uint64(word_planes[0])]
    if field.order == 4:
        return [planes[0] ^ np.uint64(word_planes[0]), planes[1] ^ np.uint64(word_planes[1])]
    a1, a2 = planes
    b1, b2 = np.uint64(word_planes[0]), np.uint64(word_planes[1])
    m = np.uint64(mask)
    na = m & ~(a1 | a2)
    nb = m & ~(b1 | b2)
    return [(a1 & nb) | (b1 & na) | (a2 & b2), (a2 & nb) | (b2 & na) | (a1 & b1)]


def _planes_weight(planes: list[np.ndarray]) -> np.ndarray:
    acc = planes[0]
    for p in planes[1:]:
        acc = acc | p
    return np.bitwise_count(acc)


def _enumerate_codewords_sym(C: LinearCode, chunk: int = 65536):
    """Yield all codewords as symbol arrays, in message order, chunked."""
    q = C.field.order
    k = C.k
    total = q**k
    add, mul = C.field.add_table, C.field.mul_table
    radix = np.array([q**j for j in range(k)], dtype=np.int64)
    for start in range(0, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = ((idx[:, None] // radix[None, :]) % q).astype(np.uint8)
        acc = np.zeros((len(idx), C.n), dtype=np.uint8)
        for col in range(k):
            acc = add[acc, mul[msgs[:, col]][:, C.generator[col]]]
        yield acc


def _coset_min_weights(C: LinearCode, cand_sym: np.ndarray, limit: int | None = None) -> np.ndarray:
    """min weight over the coset x + C for every candidate row x.

    Scans at most ``limit`` codewords of C (all of them when None); a
    truncated scan yields upper bounds instead of exact minima.  The
    elementwise work is candidates x codewords either way, so the numpy
    vectorization runs over whichever side is larger.
    """
    field = C.field
    total = field.order**C.k
    scan = total if limit is None else min(total, limit)
    best = np.full(len(cand_sym), C.n + 1, dtype=np.int64)
    if C.n > 63:
        add = field.add_table
        done = 0
        for words in _enumerate_codewords_sym(C):
            for row in words:
                w = np.count_nonzero(add[cand_sym, row], axis=1)
                np.minimum(best, w, out=best)
                done += 1
                if done >= scan:
                    return best
        return best
    mask = (1 << C.n) - 1
    if len(cand_sym) >= scan:
        # vectorize over candidates, loop codewords
        planes = _pack_planes(field, cand_sym)
        done = 0
        for words in _enumerate_codewords_sym(C):
            for row in words:
                wp = enumeration.pack_vector(field.order, row)
                shifted = _planes_add_scalar(field, planes, wp, mask)
                np.minimum(best, _planes_weight(shifted).astype(np.int64), out=best)
                done += 1
                if done >= scan:
                    return best
        return best
    # vectorize over codewords, loop candidates
    done = 0
    for words in _enumerate_codewords_sym(C):
        words = words[: scan - done]
        done += len(words)
        planes = _pack_planes(field, words)
        for ci in range(len(cand_sym)):
            wp = enumeration.pack_vector(field.order, cand_sym[ci])
            shifted = _planes_add_scalar(field, planes, wp, mask)
            w = int(_planes_weight(shifted).min())
            if w < best[ci]:
                best[ci] = w
        if done >= scan:
            break
    return best


def search_extend(
    C: LinearCode,
    method: str,
    target: int | None = None,
    budget: int = 100_000,
    seed: int = 0,
    cap: int | None = None,
    threads: int = 1,
) -> SearchResult:
    """Deterministic search for the best extension vector.

    Enumerates the dual exhaustively when it fits in ``budget`` messages,
    otherwise draws ``budget`` seeded pseudorandom dual messages.  Every
    surviving candidate is scored with the exact minimum distance of the
    extended code (via the coset of the candidate); ties break toward the
    lexicographically smallest vector.  Results never depend on
    evaluation order.
    """
    if not is_lcd(C):
        raise NotLcd("search extends LCD codes only")
    q = C.field.order
    dgen = dual(C).generator
    m = dgen.shape[0]
    total = q**m
    exhaustive = total <= budget
    if exhaustive:
        cand_msgs = None  # all messages
        n_cand = total
    else:
        rng = random.Random(seed)
        seen = []
        seen_set = set()
        for _ in range(budget):
            msg = tuple(rng.randrange(q) for _ in range(m))
            if msg not in seen_set:
                seen_set.add(msg)
                seen.append(msg)
        cand_msgs = np.array(seen, dtype=np.uint8)
        n_cand = len(seen)
    if m == 0:
        cand_sym = np.zeros((1, C.n), dtype=np.uint8)
    elif exhaustive:
        dual_code = LinearCode(C.field, dgen)
        cand_sym = np.concatenate(list(_enumerate_codewords_sym(dual_code)), axis=0)
    else:
        add, mul = C.field.add_table, C.field.mul_table
        acc = np.zeros((n_cand, C.n), dtype=np.uint8)
        for col in range(m):
            acc = add[acc, mul[cand_msgs[:, col]][:, dgen[col]]]
        cand_sym = acc

    weights = (cand_sym != 0).sum(axis=1)
    if C.field.order == 3:
        ok = (weights % 3) != (2 if method == M1 else 0)
    else:
        ok = (weights % 2) == (0 if method == M1 else 1)
    cand_sym = cand_sym[ok]
    if len(cand_sym) == 0:
        raise NoCandidate(f"no dual vector satisfies the method-{method[1]} weight condition")

    cap = enumeration.DEFAULT_CAPS[q] if cap is None else cap
    exact = q**C.k <= cap
    if exact:
        d_base = min_weight(C, cap=cap, threads=threads)
        coset = _coset_min_weights(C, cand_sym)
    else:
        try:
            d_base = min_weight(C, cap=cap, threads=threads)
        except enumeration.BudgetExceeded as exc:
            d_base = exc.best_upper if exc.best_upper is not None else C.n
        coset = _coset_min_weights(C, cand_sym, limit=cap)
    scores = np.minimum(d_base, coset + (1 if method == M1 else 0))
    best_score = int(scores.max())
    winners = cand_sym[scores == best_score]
    best_vec = min(map(tuple, winners.tolist()))
    best = np.array(best_vec, dtype=np.uint8)
    code = extend_m1(C, best) if method == M1 else extend_m2(C, best)
    return SearchResult(
        vector=best,
        code=code,
        min_weight=best_score,
        exact=exact,
        exhaustive=exhaustive,
        candidates=int(len(cand_sym)),
        target_met=None if target is None else bool(exact and best_score >= target),
    )


# -- construction records ---------------------------------------------------
#
#   base <entry id or code file path>
#   shorten 1,5,9        (coordinates are 1-based in the text form)
#   puncture 2
#   extend-m1 <symbols>
#   extend-m2 <symbols>
#   pad

STEP_OPS = ("shorten", "puncture", "extend-m1", "extend-m2", "pad")


@dataclass(frozen=True)
class Step:
    op: str
    arg: str | None = None


@dataclass(frozen=True)
class ConstructionRecord:
    base: str
    steps: tuple[Step, ...]


def parse_record(text: str) -> ConstructionRecord:
    base = None
    steps = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split(None, 1)
        op = parts[0]
        arg = parts[1].strip() if len(parts) > 1 else None
        if op == "base":
            if base is not None:
                raise ConstructError("record has more than one base line")
            if arg is None:
                raise ConstructError("base line needs a reference")
            base = arg
        elif op in STEP_OPS:
            if base is None:
                raise ConstructError("record must start with its base reference")
            if op == "pad" and arg is not None:
                raise ConstructError("pad takes no argument")
            if op != "pad" and arg is None:
                raise ConstructError(f"{op} needs an argument")
            if op in ("shorten", "puncture"):
                _coords_from_text(arg)  # fail fast on malformed coordinates
            steps.append(Step(op, arg))
        else:
            raise ConstructError(f"unknown record line {line!r}")
    if base is None:
        raise ConstructError("record is missing its base reference")
    return ConstructionRecord(base, tuple(steps))


def format_record(rec: ConstructionRecord) -> str:
    lines = [f"base {rec.base}"]
    for s in rec.steps:
        lines.append(s.op if s.arg is None else f"{s.op} {s.arg}")
    return "\n".join(lines) + "\n"


def _coords_from_text(arg: str) -> tuple[int, ...]:
    try:
        coords = tuple(int(p) for p in arg.replace(" ", "").split(","))
    except ValueError:
        raise ConstructError(f"bad coordinate list {arg!r}") from None
    if any(c < 1 for c in coords):
        raise ConstructError("record coordinates are 1-based")
    return tuple(c - 1 for c in coords)


def apply_step(C: LinearCode, step: Step) -> LinearCode:
    if step.op == "shorten":
        return shorten(C, _coords_from_text(step.arg))
    if step.op == "puncture":
        return puncture(C, _coords_from_text(step.arg))
    if step.op == "extend-m1":
        return extend_m1(C, parse_vector(C.field, step.arg))
    if step.op == "extend-m2":
        return extend_m2(C, parse_vector(C.field, step.arg))
    if step.op == "pad":
        return pad_zero_column(C)
    raise ConstructError(f"unknown step {step.op!r}")


def apply_record(rec: ConstructionRecord, base_code: LinearCode) -> list[LinearCode]:
    """Replay a record; returns the code after every step (base excluded)."""
    out = []
    current = base_code
    for step in rec.steps:
        current = apply_step(current, step)
        out.append(current)
    return out


def step_for_extension(method: str, field: FieldSpec, vector) -> Step:
    op = "extend-m1" if method == M1 else "extend-m2"
    return Step(op, format_vector(field, vector))
