"""Poly-Bernoulli, polycosecant, polycotangent, and tilde-cosecant numbers.

Each family is computable by several independent routes: closed forms in
Stirling numbers (integer arithmetic for non-positive weights where one
exists), recurrences, and direct coefficient extraction from the defining
generating function.  The default route per regime avoids rational blow-up;
the series route stays available everywhere as the cross-check oracle.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from . import series as se
from .errors import IndexParity, MethodDomain
from .sequences import euler_number, stirling2

class Family(str, Enum):
    POLY_B = "PolyB_B"
    POLY_C = "PolyB_C"
    COSECANT = "Cosecant"
    COTANGENT = "Cotangent"
    TILDE_D = "TildeD"


def _ipow(base: int, exponent: int) -> Fraction:
    """base^exponent as an exact rational; exponent may be negative."""
    return Fraction(base**exponent) if exponent >= 0 else Fraction(1, base ** (-exponent))


def _bucket(n: int) -> int:
    need = max(n, se.default_truncation())
    return ((need + 7) // 8) * 8


# ---------------------------------------------------------------- series route

@lru_cache(maxsize=None)
def _cosecant_series(k: int, order: int) -> se.Series:
    """A_k(tanh(t/2)) / sinh t, retained to the given order."""
    level2 = se.polylog_apply(2, k, se.tanh_half(order + 1))
    return level2 / se.sinh_series(order + 1)


@lru_cache(maxsize=None)
def _cotangent_series(k: int, order: int) -> se.Series:
    """A_k(tanh(t/2)) / tanh t."""
    level2 = se.polylog_apply(2, k, se.tanh_half(order + 1))
    return level2 / se.tanh_series(order + 1)


@lru_cache(maxsize=None)
def _poly_bernoulli_series(variant: str, k: int, order: int) -> se.Series:
    """Li_k(1 - e^{-t}) over 1 - e^{-t} (variant B) or e^t - 1 (variant C)."""
    inner = se.constant(1, order + 1) - se.exp_scaled(-1, order + 1)
    num = se.polylog_apply(1, k, inner)
    den = inner if variant == "B" else se.exp_scaled(1, order + 1) - 1
    return num / den


@lru_cache(maxsize=None)
def _poly_bernoulli_polynomial_series(k: int, x: Fraction, order: int) -> se.Series:
    return _poly_bernoulli_series("B", k, order) * se.exp_scaled(-x, order)


@lru_cache(maxsize=None)
def _tilde_cosecant_series(k: int, order: int) -> se.Series:
    """Li_k(tanh(t/2)) / sinh t; the level-one cousin of the cosecant function."""
    level1 = se.polylog_apply(1, k, se.tanh_half(order + 1))
    return level1 / se.sinh_series(order + 1)


# ---------------------------------------------------------------- closed forms

def _cosecant_explicit(n: int, k: int) -> Fraction:
    """Double Stirling sum valid for every integer weight k."""
    total = Fraction(0)
    for i in range(n // 2 + 1):
        inner = Fraction(0)
        for j in range(2 * i + 1, n + 2):
            inner += Fraction(
                (-1) ** (j + 1) * factorial(j) * comb(j - 1, 2 * i), 2 ** (j - 1)
            ) * stirling2(n + 1, j)
        if inner:
            total += _ipow(2 * i + 1, -(k + 1)) * inner
    return total


def _cosecant_sasaki(n: int, k: int) -> Fraction:
    """Integer-only form for even n and weight -k <= 0.

    The sum is empty at (n, k) = (0, 0) although the true value there is 1,
    so that corner is excluded from this method's domain.
    """
    kk = -k
    total = Fraction(0)
    for i in range(1, min(n + 1, kk) + 1):
        total += Fraction(factorial(i) * factorial(i - 1), 2 ** (i - 1)) * stirling2(
            kk, i
        ) * stirling2(n + 1, i)
    return total


def _cotangent_explicit(n: int, k: int) -> Fraction:
    total = Fraction(0)
    for j in range(n + 1):
        bracket = Fraction((j + 1) * (j + 2), 2) * stirling2(n, j + 2) + stirling2(n + 1, j + 1)
        if bracket == 0:
            continue
        base = Fraction((-1) ** j * factorial(j), 2**j) * bracket
        for i in range(j // 2 + 1):
            total += base * comb(j + 1, 2 * i + 1) * _ipow(2 * i + 1, -k)
    return total


def _cotangent_stirling(n: int, k: int) -> Fraction:
    """Four-part integer form for even n and weight k <= -1."""
    kk = -k
    total = Fraction(0)
    for j in range(min(n, kk - 1) + 1):
        w = Fraction(factorial(j) * factorial(j + 1), 2 ** (j + 1)) * stirling2(kk, j + 1)
        total += w * (stirling2(n, j) + stirling2(n + 1, j + 1))
    for j in range(min(n - 1, kk - 1) + 1):
        w = Fraction(factorial(j + 1), 2 ** (j + 1)) * stirling2(kk, j + 1)
        total += w * factorial(j + 1) * stirling2(n, j + 1)
        total += w * factorial(j + 2) * stirling2(n, j + 2)
    return total


def _poly_bernoulli_stirling(variant: str, n: int, k: int) -> Fraction:
    """Power form from expanding through powers of 1 - e^{-t}; valid for all k."""
    total = Fraction(0)
    for m in range(n + 1):
        s = stirling2(n, m)
        if s == 0:
            continue
        c = _ipow(m + 1, -k)
        if variant == "C" and m >= 1:
            c -= _ipow(m, -k)
        total += (-1) ** (n + m) * factorial(m) * s * c
    return total


# ------------------------------------------------------------------ public API

def poly_bernoulli(variant: str, n: int, k: int, method: str = "stirling") -> Fraction:
    """B_n^{(k)} or C_n^{(k)} by the Stirling power form or the series oracle."""
    if variant not in ("B", "C"):
        raise ValueError("variant must be 'B' or 'C'")
    if n < 0:
        raise ValueError("order index must be non-negative")
    if method == "stirling":
        return _poly_bernoulli_stirling(variant, n, k)
    if method == "series":
        return _poly_bernoulli_series(variant, k, _bucket(n)).egf(n)
    raise MethodDomain(f"unknown poly-Bernoulli method {method!r}")


def poly_bernoulli_polynomial(n: int, k: int, x) -> Fraction:
    """B_n^{(k)}(x) from e^{-xt} Li_k(1 - e^{-t}) / (1 - e^{-t}); B_n^{(k)}(0) = B_n^{(k)}."""
    if n < 0:
        raise ValueError("order index must be non-negative")
    return _poly_bernoulli_polynomial_series(k, Fraction(x), _bucket(n)).egf(n)


def polycosecant(n: int, k: int, method: str | None = None) -> Fraction:
    """D_n^{(k)}; zero at odd n.  Methods: explicit, sasaki (weight <= 0), series."""
    if n < 0:
        raise ValueError("order index must be non-negative")
    if method is None:
        if n % 2 == 1:
            return Fraction(0)
        method = "sasaki" if k <= 0 and (n, k) != (0, 0) else "explicit"
    if method == "explicit":
        return _cosecant_explicit(n, k)
    if method == "sasaki":
        if k > 0 or n % 2 == 1:
            raise MethodDomain("sasaki form needs an even index and weight <= 0")
        if (n, k) == (0, 0):
            raise MethodDomain("sasaki form is an empty sum at (0, 0); the value there is 1")
        return _cosecant_sasaki(n, k)
    if method == "series":
        return _cosecant_series(k, _bucket(n)).egf(n)
    raise MethodDomain(f"unknown polycosecant method {method!r}")


def polycotangent(n: int, k: int, method: str | None = None) -> Fraction:
    """beta_n^{(k)}; zero at odd n.

    Methods: explicit, stirling_negk (even index, weight <= -1), from_cosecant,
    series.
    """
    if n < 0:
        raise ValueError("order index must be non-negative")
    if method is None:
        if n % 2 == 1:
            return Fraction(0)
        method = "stirling_negk" if k <= -1 else "explicit"
    if method == "explicit":
        return Fraction(0) if n % 2 == 1 else _cotangent_explicit(n, k)
    if method == "stirling_negk":
        if k > -1 or n % 2 == 1:
            raise MethodDomain("stirling form needs an even index and weight <= -1")
        return _cotangent_stirling(n, k)
    if method == "from_cosecant":
        if n % 2 == 1:
            return Fraction(0)
        return sum(
            (comb(n, 2 * i) * polycosecant(2 * i, k) for i in range(n // 2 + 1)),
            Fraction(0),
        )
    if method == "series":
        return _cotangent_series(k, _bucket(n)).egf(n)
    raise MethodDomain(f"unknown polycotangent method {method!r}")


def cosecant_from_cotangent(n: int, k: int) -> Fraction:
    """D_n^{(k)} = sum_i C(n,2i) E_{n-2i} beta_{2i}^{(k)} for even n."""
    if n < 0 or n % 2 == 1:
        raise IndexParity("the cotangent-to-cosecant conversion addresses even indices")
    return sum(
        (
            comb(n, 2 * i) * euler_number(n - 2 * i) * polycotangent(2 * i, k)
            for i in range(n // 2 + 1)
        ),
        Fraction(0),
    )


def k_shift_recurrence(n: int, k: int) -> Fraction:
    """sum_m C(n+1, 2m+1) D_{n-2m}^{(k)}, which equals D_n^{(k-1)}."""
    if n < 0:
        raise ValueError("order index must be non-negative")
    return sum(
        (comb(n + 1, 2 * m + 1) * polycosecant(n - 2 * m, k) for m in range(n // 2 + 1)),
        Fraction(0),
    )


def tilde_cosecant(m: int, k: int) -> Fraction:
    """Coefficients of Li_k(tanh(t/2)) / sinh t for weight k <= 0 (series only)."""
    if m < 0:
        raise ValueError("order index must be non-negative")
    if k > 0:
        raise MethodDomain("tilde cosecant numbers are defined for weights <= 0")
    return _tilde_cosecant_series(k, _bucket(m)).egf(m)


@lru_cache(maxsize=None)
def _cosecant_bivariate(orders: tuple[int, int]) -> se.BiSeries:
    one = se.biseries_constant(1, orders)
    ey = se.biseries_exp(0, 1, orders)
    result = one
    for sign in (1, -1):
        et = se.biseries_exp(sign, 0, orders)
        ety = se.biseries_exp(sign, 1, orders)
        result = result + (et * (ey - 1)) / (one + et + ey - ety)
    return result


def cosecant_bivariate(orders: tuple[int, int] | int) -> se.BiSeries:
    """Two-variable function whose weighted coefficients are D_n^{(-k)}.

    1 + e^t(e^y - 1) / (1 + e^t + e^y - e^{t+y})
      + e^{-t}(e^y - 1) / (1 + e^{-t} + e^y - e^{-t+y})
    """
    if isinstance(orders, int):
        orders = (orders, orders)
    return _cosecant_bivariate(orders)


def family_value(family: Family | str, n: int, k: int) -> Fraction:
    """Dispatch a (family, order, weight) address to its canonical computation."""
    family = Family(family)
    if family is Family.POLY_B:
        return poly_bernoulli("B", n, k)
    if family is Family.POLY_C:
        return poly_bernoulli("C", n, k)
    if family is Family.COSECANT:
        return polycosecant(n, k)
    if family is Family.COTANGENT:
        return polycotangent(n, k)
    return tilde_cosecant(n, k)


def applicable_methods(family: Family | str, n: int, k: int) -> dict[str, str]:
    """Methods defined at (n, k) for a family, keyed by name, valued by kind."""
    family = Family(family)
    if family is Family.COSECANT:
        methods = {"explicit": "closed", "series": "oracle"}
        if k <= 0 and n % 2 == 0 and (n, k) != (0, 0):
            methods["sasaki"] = "closed"
        return methods
    if family is Family.COTANGENT:
        methods = {"explicit": "closed", "from_cosecant": "closed", "series": "oracle"}
        if k <= -1 and n % 2 == 0:
            methods["stirling_negk"] = "closed"
        return methods
    if family in (Family.POLY_B, Family.POLY_C):
        return {"stirling": "closed", "series": "oracle"}
    return {"series": "oracle"}


def family_value_by_method(family: Family | str, n: int, k: int, method: str) -> Fraction:
    family = Family(family)
    if family is Family.COSECANT:
        return polycosecant(n, k, method=method)
    if family is Family.COTANGENT:
        return polycotangent(n, k, method=method)
    if family is Family.POLY_B:
        return poly_bernoulli("B", n, k, method=method)
    if family is Family.POLY_C:
        return poly_bernoulli("C", n, k, method=method)
    return tilde_cosecant(n, k)
