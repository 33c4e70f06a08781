"""Entanglement-assisted quantum code parameters from quaternary
Hermitian LCD codes.

A Hermitian LCD [n, k, d] code over GF(4) yields an EAQECC [[n, k, d; c]]
with c = n - k ebits, and an infinite parameter family indexed by s >= 0:

    [[n + (4^k - 1)/3 * s,  k,  d + 4^(k-1) * s;  n + (4^k - 1)/3 * s - k]]

All arithmetic uses Python integers, so 4^(k-1) never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass


class ParamError(ValueError):
    pass


@dataclass(frozen=True)
class EaqeccParams:
    n: int
    k: int
    d: int
    c: int

    def __str__(self):
        return f"[[{self.n},{self.k},{self.d};{self.c}]]"


def _check(n: int, k: int, d: int):
    if not (1 <= k <= n):
        raise ParamError(f"need 1 <= k <= n, got k={k}, n={n}")
    if not (1 <= d <= n):
        raise ParamError(f"need 1 <= d <= n, got d={d}, n={n}")


def from_hermitian_lcd(n: int, k: int, d: int) -> EaqeccParams:
    """[[n, k, d; n-k]] from a Hermitian LCD [n,k,d] code."""
    _check(n, k, d)
    return EaqeccParams(n, k, d, n - k)


def family(n: int, k: int, d: int, s: int) -> EaqeccParams:
    """The s-indexed family; s = 0 reduces to from_hermitian_lcd."""
    _check(n, k, d)
    if s < 0:
        raise ParamError(f"s must be nonnegative, got {s}")
    step, rem = divmod(4**k - 1, 3)
    assert rem == 0, "4^k - 1 is always divisible by 3"
    nn = n + step * s
    dd = d + 4 ** (k - 1) * s
    return EaqeccParams(nn, k, dd, nn - k)
