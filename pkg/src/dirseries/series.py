"""Truncated formal power series in two algebras.

``OrdSeries`` is an ordinary truncated power series with indices 0..N and
the Cauchy product.  ``DirSeries`` has indices 1..N (no constant term) and
multiplies by Dirichlet composition,

    (a o b)_n = sum over divisors d of n of a_d * b_{n/d},

whose identity is the series x.  Coefficients are polynomials, so one code
path serves numeric series, parametric powers (polynomial in ``psi``) and
fully symbolic tables.

Truncation contract: every operation is exact for all indices up to the
minimum truncation of its inputs; mixing truncations silently takes the
minimum.  Dirichlet composition at index n never reads indices beyond n,
so no padding is needed.

All series are immutable values; operations are pure functions.  The
power ladders built inside parametric operations are per-call, never
shared.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterable, Sequence

from .errors import (
    ConstantTermNotOne,
    ConstantTermNotZero,
    LeadingCoefficientNotOne,
    LeadingCoefficientNotZero,
    NonUnitConstantTerm,
    NonUnitLeadingCoefficient,
    TruncationTooSmall,
)
from .poly import ONE, PSI, ZERO, Polynomial, Scalar, Symbol, binom_poly, log_n_poly

Coeff = Polynomial | Scalar


def _as_poly(value: Coeff) -> Polynomial:
    return value if isinstance(value, Polynomial) else Polynomial.const(value)


# ---------------------------------------------------------------------------
# Dirichlet-composition series (indices 1..N)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=True)
class DirSeries:
    """Series without constant term under Dirichlet composition."""

    trunc: int
    coeffs: tuple[Polynomial, ...]  # coeffs[n-1] is the coefficient at index n

    def __post_init__(self):
        if self.trunc < 1:
            raise ValueError("DirSeries needs trunc >= 1")
        if len(self.coeffs) != self.trunc:
            raise ValueError("DirSeries needs exactly trunc coefficients")

    def __getitem__(self, n: int) -> Polynomial:
        if not 1 <= n <= self.trunc:
            raise IndexError(f"index {n} outside 1..{self.trunc}")
        return self.coeffs[n - 1]

    def __add__(self, other: "DirSeries") -> "DirSeries":
        n = min(self.trunc, other.trunc)
        return DirSeries(n, tuple(self.coeffs[i] + other.coeffs[i] for i in range(n)))

    def __sub__(self, other: "DirSeries") -> "DirSeries":
        n = min(self.trunc, other.trunc)
        return DirSeries(n, tuple(self.coeffs[i] - other.coeffs[i] for i in range(n)))

    def __mul__(self, other):
        if isinstance(other, DirSeries):
            return dir_mul(self, other)
        return dir_scale(self, other)

    __rmul__ = __mul__

    def __neg__(self) -> "DirSeries":
        return dir_scale(self, -1)

    def truncated(self, n: int) -> "DirSeries":
        if n > self.trunc:
            raise TruncationTooSmall(f"have trunc {self.trunc}, need {n}")
        return DirSeries(n, self.coeffs[:n])


def dir_from_coeffs(coeffs: Iterable[Coeff]) -> DirSeries:
    tup = tuple(_as_poly(c) for c in coeffs)
    return DirSeries(len(tup), tup)


def dir_from_fn(trunc: int, fn: Callable[[int], Coeff]) -> DirSeries:
    return DirSeries(trunc, tuple(_as_poly(fn(n)) for n in range(1, trunc + 1)))


def dir_x(trunc: int) -> DirSeries:
    """The composition identity x."""
    return dir_from_fn(trunc, lambda n: 1 if n == 1 else 0)


def dir_zero(trunc: int) -> DirSeries:
    return DirSeries(trunc, (ZERO,) * trunc)


def dir_scale(a: DirSeries, c: Coeff) -> DirSeries:
    c = _as_poly(c)
    return DirSeries(a.trunc, tuple(v * c for v in a.coeffs))


def dirichlet_convolve(
    a: Sequence[Polynomial], b: Sequence[Polynomial], trunc: int
) -> list[Polynomial]:
    """Divisor-indexed convolution kernel; the single code path every
    composition product in the package goes through."""
    out = [ZERO] * trunc
    for d in range(1, trunc + 1):
        ad = a[d - 1]
        if ad.is_zero():
            continue
        for q in range(1, trunc // d + 1):
            bq = b[q - 1]
            if not bq.is_zero():
                idx = d * q - 1
                out[idx] = out[idx] + ad * bq
    return out


def dir_mul(a: DirSeries, b: DirSeries) -> DirSeries:
    n = min(a.trunc, b.trunc)
    return DirSeries(n, tuple(dirichlet_convolve(a.coeffs, b.coeffs, n)))


def dir_inverse(a: DirSeries) -> DirSeries:
    """The composition inverse: a o inverse(a) = x."""
    lead = a[1]
    if not lead.is_constant() or lead.constant_value() == 0:
        raise NonUnitLeadingCoefficient(f"coefficient at index 1 is {lead}")
    inv_lead = Polynomial.const(1 / lead.constant_value())
    out = [ZERO] * a.trunc
    out[0] = inv_lead
    for n in range(2, a.trunc + 1):
        acc = ZERO
        for d in range(2, n + 1):
            if n % d == 0:
                ad = a[d]
                if not ad.is_zero():
                    acc = acc + ad * out[n // d - 1]
        if not acc.is_zero():
            out[n - 1] = -acc * inv_lead
    return DirSeries(a.trunc, tuple(out))


def dir_pow_int(a: DirSeries, k: int) -> DirSeries:
    """k-fold composition power; k = 0 gives x, negative k inverts first."""
    if k < 0:
        return dir_pow_int(dir_inverse(a), -k)
    out = dir_x(a.trunc)
    for _ in range(k):
        out = dir_mul(out, a)
    return out


def dir_subst_xk(a: DirSeries, k: int) -> DirSeries:
    """Substitute x -> x**k: the coefficient at index k*j is a_j."""
    if k < 1:
        raise ValueError("dir_subst_xk needs k >= 1")
    out = [ZERO] * a.trunc
    for j in range(1, a.trunc // k + 1):
        out[k * j - 1] = a[j]
    return DirSeries(a.trunc, tuple(out))


def _require_lead(a: DirSeries, value: int) -> None:
    lead = a[1]
    if value == 0 and not lead.is_zero():
        raise LeadingCoefficientNotZero(f"coefficient at index 1 is {lead}")
    if value == 1 and lead != ONE:
        raise LeadingCoefficientNotOne(f"coefficient at index 1 is {lead}")


def _power_ladder(u: DirSeries, top: int) -> list[DirSeries]:
    """[u^(1), ..., u^(top)] by repeated composition."""
    ladder = []
    if top >= 1:
        ladder.append(u)
        for _ in range(top - 1):
            ladder.append(dir_mul(ladder[-1], u))
    return ladder


def _max_power(trunc: int) -> int:
    # a series with zero coefficient at index 1 has m-th power supported on
    # indices >= 2**m, so powers beyond log2(trunc) cannot contribute
    return trunc.bit_length() - 1


def dir_apply_series(f: "OrdSeries", a: DirSeries) -> DirSeries:
    """Apply an ordinary series to a composition series with zero leading
    coefficient: x*f_0 + sum of f_m * a^(m) for m >= 1."""
    _require_lead(a, 0)
    top = _max_power(a.trunc)
    if f.trunc < top:
        raise TruncationTooSmall(f"need ordinary trunc >= {top}, have {f.trunc}")
    out = dir_scale(dir_x(a.trunc), f[0])
    for m, power in enumerate(_power_ladder(a, top), start=1):
        fm = f[m]
        if not fm.is_zero():
            out = out + dir_scale(power, fm)
    return out


def dir_pow_param(a: DirSeries) -> DirSeries:
    """The parametric power with exponent ``psi``: the binomial expansion
    of (1 + (a - x))^psi under composition.  Needs leading coefficient 1."""
    _require_lead(a, 1)
    u = a - dir_x(a.trunc)
    out = dir_x(a.trunc)
    for m, power in enumerate(_power_ladder(u, _max_power(a.trunc)), start=1):
        out = out + dir_scale(power, binom_poly(PSI, m))
    return out


def dir_log(a: DirSeries) -> DirSeries:
    """Composition logarithm: the alternating sum of (a - x)^(m) / m."""
    _require_lead(a, 1)
    u = a - dir_x(a.trunc)
    out = dir_zero(a.trunc)
    for m, power in enumerate(_power_ladder(u, _max_power(a.trunc)), start=1):
        out = out + dir_scale(power, Fraction((-1) ** (m + 1), m))
    return out


def dir_exp_param(b: DirSeries) -> DirSeries:
    """Parametric exponential: x + sum of psi^m / m! * b^(m); needs zero
    leading coefficient."""
    _require_lead(b, 0)
    psi = Polynomial.symbol(PSI)
    out = dir_x(b.trunc)
    for m, power in enumerate(_power_ladder(b, _max_power(b.trunc)), start=1):
        out = out + dir_scale(power, psi**m * Fraction(1, factorial(m)))
    return out


def star_derivative(a: DirSeries) -> DirSeries:
    """Multiply the coefficient at index n by the formal logarithm of n."""
    return DirSeries(
        a.trunc, tuple(a[n] * log_n_poly(n) for n in range(1, a.trunc + 1))
    )


def series_substitute_symbol(a: DirSeries, sym: Symbol, r: Coeff) -> DirSeries:
    r = _as_poly(r)
    return DirSeries(a.trunc, tuple(c.substitute(sym, r) for c in a.coeffs))


def twist_int(a: DirSeries, k: int) -> DirSeries:
    """Multiply the coefficient at index n by n**k (k may be negative)."""
    return DirSeries(
        a.trunc,
        tuple(a[n] * Fraction(n) ** k for n in range(1, a.trunc + 1)),
    )


def perfect_power_embed(a: "OrdSeries", m: int, trunc: int | None = None) -> DirSeries:
    """Embed an ordinary series into the composition algebra by sending the
    coefficient at n to index m**n.  The embedding turns Cauchy products
    into composition products."""
    if m < 2:
        raise ValueError("perfect_power_embed needs m >= 2")
    if trunc is None:
        trunc = m**a.trunc
    out = [ZERO] * trunc
    power = 1
    for n in range(0, a.trunc + 1):
        if power > trunc:
            break
        out[power - 1] = a[n]
        power *= m
    return DirSeries(trunc, tuple(out))


# ---------------------------------------------------------------------------
# Ordinary (Cauchy) series (indices 0..N)
# ---------------------------------------------------------------------------


@dataclass(frozen=True, eq=True)
class OrdSeries:
    """Ordinary truncated power series with indices 0..N."""

    trunc: int
    coeffs: tuple[Polynomial, ...]  # coeffs[n] is the coefficient at index n

    def __post_init__(self):
        if self.trunc < 0:
            raise ValueError("OrdSeries needs trunc >= 0")
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("OrdSeries needs exactly trunc + 1 coefficients")

    def __getitem__(self, n: int) -> Polynomial:
        if not 0 <= n <= self.trunc:
            raise IndexError(f"index {n} outside 0..{self.trunc}")
        return self.coeffs[n]

    def __add__(self, other: "OrdSeries") -> "OrdSeries":
        n = min(self.trunc, other.trunc)
        return OrdSeries(n, tuple(self.coeffs[i] + other.coeffs[i] for i in range(n + 1)))

    def __sub__(self, other: "OrdSeries") -> "OrdSeries":
        n = min(self.trunc, other.trunc)
        return OrdSeries(n, tuple(self.coeffs[i] - other.coeffs[i] for i in range(n + 1)))

    def __mul__(self, other):
        if isinstance(other, OrdSeries):
            return ord_mul(self, other)
        c = _as_poly(other)
        return OrdSeries(self.trunc, tuple(v * c for v in self.coeffs))

    __rmul__ = __mul__

    def truncated(self, n: int) -> "OrdSeries":
        if n > self.trunc:
            raise TruncationTooSmall(f"have trunc {self.trunc}, need {n}")
        return OrdSeries(n, self.coeffs[: n + 1])


def ord_from_coeffs(coeffs: Iterable[Coeff]) -> OrdSeries:
    tup = tuple(_as_poly(c) for c in coeffs)
    return OrdSeries(len(tup) - 1, tup)


def ord_from_fn(trunc: int, fn: Callable[[int], Coeff]) -> OrdSeries:
    return OrdSeries(trunc, tuple(_as_poly(fn(n)) for n in range(trunc + 1)))


def ord_one(trunc: int) -> OrdSeries:
    return ord_from_fn(trunc, lambda n: 1 if n == 0 else 0)


def ord_x(trunc: int) -> OrdSeries:
    return ord_from_fn(trunc, lambda n: 1 if n == 1 else 0)


def ord_mul(a: OrdSeries, b: OrdSeries) -> OrdSeries:
    n = min(a.trunc, b.trunc)
    out = [ZERO] * (n + 1)
    for i in range(n + 1):
        ai = a[i]
        if ai.is_zero():
            continue
        for j in range(n - i + 1):
            bj = b[j]
            if not bj.is_zero():
                out[i + j] = out[i + j] + ai * bj
    return OrdSeries(n, tuple(out))


def ord_compose(f: OrdSeries, g: OrdSeries) -> OrdSeries:
    """f(g(x)) for g with zero constant term."""
    if not g[0].is_zero():
        raise ConstantTermNotZero(f"inner constant term is {g[0]}")
    n = min(f.trunc, g.trunc)
    out = [f[0]] + [ZERO] * n
    power = ord_one(n)
    for m in range(1, n + 1):
        power = ord_mul(power, g)
        fm = f[m]
        if fm.is_zero():
            continue
        for i in range(m, n + 1):
            out[i] = out[i] + power[i] * fm
    return OrdSeries(n, tuple(out))


def ord_inverse_mul(a: OrdSeries) -> OrdSeries:
    """Multiplicative inverse; needs a nonzero rational constant term."""
    lead = a[0]
    if not lead.is_constant() or lead.constant_value() == 0:
        raise NonUnitConstantTerm(f"constant term is {lead}")
    inv = Polynomial.const(1 / lead.constant_value())
    out = [inv] + [ZERO] * a.trunc
    for n in range(1, a.trunc + 1):
        acc = ZERO
        for k in range(1, n + 1):
            ak = a[k]
            if not ak.is_zero():
                acc = acc + ak * out[n - k]
        out[n] = -acc * inv
    return OrdSeries(a.trunc, tuple(out))


def ord_log(a: OrdSeries) -> OrdSeries:
    """Logarithm of a series with constant term 1, by the standard
    derivative recurrence."""
    if a[0] != ONE:
        raise ConstantTermNotOne(f"constant term is {a[0]}")
    out = [ZERO] * (a.trunc + 1)
    for n in range(1, a.trunc + 1):
        acc = a[n] * n
        for k in range(1, n):
            acc = acc - out[k] * a[n - k] * k
        out[n] = acc * Fraction(1, n)
    return OrdSeries(a.trunc, tuple(out))


def ord_exp(b: OrdSeries) -> OrdSeries:
    """Exponential of a series with constant term 0."""
    if not b[0].is_zero():
        raise ConstantTermNotZero(f"constant term is {b[0]}")
    out = [ONE] + [ZERO] * b.trunc
    for n in range(1, b.trunc + 1):
        acc = ZERO
        for k in range(1, n + 1):
            bk = b[k]
            if not bk.is_zero():
                acc = acc + bk * out[n - k] * k
        out[n] = acc * Fraction(1, n)
    return OrdSeries(b.trunc, tuple(out))


def ord_pow_param(a: OrdSeries) -> OrdSeries:
    """Parametric power a**psi = exp(psi * log a); constant term must be 1."""
    if a[0] != ONE:
        raise ConstantTermNotOne(f"constant term is {a[0]}")
    psi = Polynomial.symbol(PSI)
    return ord_exp(ord_log(a) * psi)


def ord_substitute_symbol(a: OrdSeries, sym: Symbol, r: Coeff) -> OrdSeries:
    r = _as_poly(r)
    return OrdSeries(a.trunc, tuple(c.substitute(sym, r) for c in a.coeffs))
