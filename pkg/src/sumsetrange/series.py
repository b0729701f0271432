"""Truncated sumset-size generating functions.

F_A(z) = sum |eta.A| z^eta, kept as exact integer coefficients a_0..a_h.
Only coefficients up to the working fold h are meaningful; products are
Cauchy products truncated at degree h.
"""

import math
from dataclasses import dataclass
from typing import Sequence

from . import core


@dataclass(frozen=True)
class TruncatedSeries:
    coeffs: tuple  # a_0..a_h

    def __post_init__(self):
        if not self.coeffs or self.coeffs[0] != 1:
            raise ValueError("constant term must be 1 (|0A| = 1)")

    @property
    def h(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i]


@dataclass(frozen=True)
class RationalSeriesSpec:
    """Numerator/denominator coefficient lists, ascending degree."""

    numerator: tuple
    denominator: tuple

    def __post_init__(self):
        if not self.denominator or self.denominator[0] not in (1, -1):
            raise ValueError("denominator constant term must be +-1")


def poly_mul(p: Sequence[int], q: Sequence[int]) -> list:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return out


def poly_pow(p: Sequence[int], n: int) -> list:
    out = [1]
    for _ in range(n):
        out = poly_mul(out, p)
    return out


def series_of_set(a, h: int) -> TruncatedSeries:
    """coeffs[eta] = |eta.A| for a 1-dimensional or lattice set."""
    if isinstance(a, frozenset) or (a and not isinstance(next(iter(a)), int)):
        prof = core.lattice_profile(a, h) if h >= 1 else ()
    else:
        prof = core.profile(a, h) if h >= 1 else ()
    return TruncatedSeries((1,) + tuple(prof))


def series_multiply(f: TruncatedSeries, g: TruncatedSeries) -> TruncatedSeries:
    if f.h != g.h:
        raise ValueError("truncation degrees differ")
    h = f.h
    out = [0] * (h + 1)
    for i in range(h + 1):
        for j in range(h + 1 - i):
            out[i + j] += f.coeffs[i] * g.coeffs[j]
    return TruncatedSeries(tuple(out))


def expand_rational(spec: RationalSeriesSpec, h: int) -> TruncatedSeries:
    """First h+1 coefficients of numerator/denominator, exact long division."""
    num = list(spec.numerator) + [0] * (h + 1)
    den = list(spec.denominator) + [0] * (h + 1)
    d0 = den[0]
    out = []
    for n in range(h + 1):
        acc = num[n]
        for i in range(1, n + 1):
            acc -= den[i] * out[n - i]
        out.append(acc // d0)
    return TruncatedSeries(tuple(out))


def _one_minus_zm(m: int) -> list:
    p = [0] * (m + 1)
    p[0] = 1
    p[m] = -1
    return p


def closed_form_S(m: int, ell: int, h: int) -> TruncatedSeries:
    """F of S_{m,ell} = {0,1,m,...,m^(ell-2)}: (1-z^m)^(ell-2) / (1-z)^ell."""
    if m < 2 or ell < 2:
        raise ValueError("need m >= 2 and ell >= 2")
    num = poly_pow(_one_minus_zm(m), ell - 2)
    den = poly_pow([1, -1], ell)
    return expand_rational(RationalSeriesSpec(tuple(num), tuple(den)), h)


def closed_form_T(m: int, ell: int, h: int) -> TruncatedSeries:
    """F of T_{m,ell} = {1,m,...,m^(ell-1)}.

    ((1-z^m)^(ell-1) - z^(m-1) (1-z)^(ell-1)) / ((1-z)^ell (1-z^(m-1))),
    the unsimplified rational form, which covers ell = 2 uniformly.
    """
    if m < 2 or ell < 2:
        raise ValueError("need m >= 2 and ell >= 2")
    lead = poly_pow(_one_minus_zm(m), ell - 1)
    tail = [0] * (m - 1) + poly_pow([1, -1], ell - 1)
    n = max(len(lead), len(tail))
    num = [(lead[i] if i < len(lead) else 0) - (tail[i] if i < len(tail) else 0) for i in range(n)]
    den = poly_mul(poly_pow([1, -1], ell), _one_minus_zm(m - 1))
    return expand_rational(RationalSeriesSpec(tuple(num), tuple(den)), h)


def binomial_series(k: int, h: int) -> TruncatedSeries:
    """(1-z)^(-k): coeffs[eta] = C(eta+k-1, eta), the B_h-perfect profile."""
    if k < 1:
        raise ValueError("need k >= 1")
    return TruncatedSeries(tuple(math.comb(eta + k - 1, eta) for eta in range(h + 1)))
