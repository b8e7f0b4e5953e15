"""Exact sparse multivariate polynomials over the rationals.

Scalars are arbitrary-precision rationals (``fractions.Fraction``).  The
ring's indeterminates come from a fixed vocabulary of named symbols:

* ``phi``, ``beta``  user-facing power parameters,
* ``psi``            the internal power parameter a series carries before
                     the power is specialized,
* ``L<p>``           the formal logarithm of the prime p (``L2``, ``L3``,
                     ...); logarithms of distinct primes are independent
                     symbols, so identities involving logarithms of
                     integers are decided by structural equality,
* ``a<k>``           generic series-coefficient indeterminates, k >= 1.

A monomial is a tuple of (symbol, exponent) pairs sorted by symbol name
with all exponents >= 1; the empty tuple is the unit monomial.  A
polynomial maps monomials to nonzero rational coefficients; the empty map
is zero.  Equality is structural, and the printer emits terms in a fixed
graded-lexicographic order, so printed forms are canonical.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping, Union

from .errors import MissingSymbol, NotDivisible, PolynomialSyntaxError
from .intfactor import factorize, is_prime

Symbol = str

PHI: Symbol = "phi"
BETA: Symbol = "beta"
PSI: Symbol = "psi"

Monomial = tuple[tuple[Symbol, int], ...]
Scalar = Union[int, Fraction]

_UNIT_MONO: Monomial = ()


def log_symbol(p: int) -> Symbol:
    """The symbol ``L<p>`` standing for the logarithm of the prime p."""
    if not is_prime(p):
        raise ValueError(f"L-symbols are indexed by primes, got {p}")
    return f"L{p}"


def coeff_symbol(k: int) -> Symbol:
    """The generic coefficient indeterminate ``a<k>``, k >= 1."""
    if k < 1:
        raise ValueError(f"coefficient symbols need k >= 1, got {k}")
    return f"a{k}"


def validate_symbol(name: str) -> Symbol:
    """Check that a name belongs to the reserved vocabulary."""
    if name in (PHI, BETA, PSI):
        return name
    if len(name) >= 2 and name[1:].isdigit():
        if name[0] == "L" and is_prime(int(name[1:])):
            return name
        if name[0] == "a" and int(name[1:]) >= 1:
            return name
    raise ValueError(f"unknown symbol {name!r}")


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    merged = dict(m1)
    for s, e in m2:
        merged[s] = merged.get(s, 0) + e
    return tuple(sorted(merged.items()))


def _mono_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def _term_key(mono: Monomial) -> tuple:
    return (_mono_degree(mono), mono)


class Polynomial:
    """Immutable sparse polynomial; supports +, -, *, ** and exact helpers."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Fraction] | None = None):
        clean: dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                c = Fraction(coeff)
                if c:
                    clean[mono] = c
        self._terms = clean

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return _ZERO

    @staticmethod
    def one() -> "Polynomial":
        return _ONE

    @staticmethod
    def const(value: Scalar) -> "Polynomial":
        c = Fraction(value)
        if not c:
            return _ZERO
        if c == 1:
            return _ONE
        return Polynomial({_UNIT_MONO: c})

    @staticmethod
    def symbol(name: Symbol) -> "Polynomial":
        return Polynomial({((validate_symbol(name), 1),): Fraction(1)})

    # -- inspection ----------------------------------------------------

    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _UNIT_MONO in self._terms)

    def constant_value(self) -> Fraction:
        """The value of a constant polynomial; raises if symbols occur."""
        if not self._terms:
            return Fraction(0)
        if self.is_constant():
            return self._terms[_UNIT_MONO]
        raise ValueError(f"not a constant polynomial: {self}")

    def symbols(self) -> set[Symbol]:
        return {s for mono in self._terms for s, _ in mono}

    def degree(self) -> int:
        """Total degree; zero polynomial reports -1."""
        if not self._terms:
            return -1
        return max(_mono_degree(m) for m in self._terms)

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        if not self._terms:
            return other
        if not other._terms:
            return self
        out = dict(self._terms)
        for mono, coeff in other._terms.items():
            acc = out.get(mono)
            if acc is None:
                out[mono] = coeff
            else:
                acc = acc + coeff
                if acc:
                    out[mono] = acc
                else:
                    del out[mono]
        return _wrap(out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return _wrap({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if not isinstance(other, Polynomial):
            other = Polynomial.const(other)
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Polynomial":
        return Polynomial.const(other) + (-self)

    def __mul__(self, other: "Polynomial | Scalar") -> "Polynomial":
        if not isinstance(other, Polynomial):
            c = Fraction(other)
            if not c:
                return _ZERO
            if c == 1:
                return self
            return _wrap({m: v * c for m, v in self._terms.items()})
        if not self._terms or not other._terms:
            return _ZERO
        # fast path: one side constant
        if other.is_constant():
            return self * other._terms[_UNIT_MONO]
        if self.is_constant():
            return other * self._terms[_UNIT_MONO]
        out: dict[Monomial, Fraction] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = _mono_mul(m1, m2)
                c = c1 * c2
                acc = out.get(mono)
                if acc is None:
                    out[mono] = c
                else:
                    acc = acc + c
                    if acc:
                        out[mono] = acc
                    else:
                        del out[mono]
        return _wrap(out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "Polynomial":
        if exponent < 0:
            raise ValueError("negative polynomial powers are not defined")
        result = _ONE
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- structural helpers ------------------------------------------------

    def substitute(self, sym: Symbol, replacement: "Polynomial | Scalar") -> "Polynomial":
        """Replace every occurrence of ``sym``, expanding the result."""
        if not isinstance(replacement, Polynomial):
            replacement = Polynomial.const(replacement)
        touched = False
        powers: list[Polynomial] = [_ONE]
        out = _ZERO
        for mono, coeff in self._terms.items():
            exps = dict(mono)
            e = exps.pop(sym, 0)
            if e == 0:
                out = out + Polynomial({mono: coeff})
                continue
            touched = True
            while len(powers) <= e:
                powers.append(powers[-1] * replacement)
            rest = Polynomial({tuple(sorted(exps.items())): coeff})
            out = out + rest * powers[e]
        return out if touched else self

    def divide_by_symbol(self, sym: Symbol) -> "Polynomial":
        """Exact division by ``sym``; every term must contain it."""
        out: dict[Monomial, Fraction] = {}
        for mono, coeff in self._terms.items():
            exps = dict(mono)
            e = exps.get(sym, 0)
            if e == 0:
                raise NotDivisible(f"term {mono} has no factor {sym}")
            if e == 1:
                del exps[sym]
            else:
                exps[sym] = e - 1
            out[tuple(sorted(exps.items()))] = coeff
        return _wrap(out)

    def eval_at(self, assignment: Mapping[Symbol, Scalar]) -> Fraction:
        """Exact rational value; every occurring symbol must be assigned."""
        missing = self.symbols() - set(assignment)
        if missing:
            raise MissingSymbol(f"no value for {sorted(missing)}")
        total = Fraction(0)
        for mono, coeff in self._terms.items():
            v = coeff
            for s, e in mono:
                v *= Fraction(assignment[s]) ** e
            total += v
        return total

    # -- comparison and printing -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.const(other)
        return NotImplemented

    __hash__ = None  # mutable-dict backing; not hashable

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"Polynomial({self.to_text()!r})"

    def to_text(self) -> str:
        """Canonical text form (graded, then lexicographic term order)."""
        if not self._terms:
            return "0"
        parts: list[str] = []
        for mono, coeff in sorted(self._terms.items(), key=lambda kv: _term_key(kv[0])):
            body = "*".join(s if e == 1 else f"{s}^{e}" for s, e in mono)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not parts:
                parts.append(text if coeff > 0 else f"-{text}")
            else:
                parts.append(f"+ {text}" if coeff > 0 else f"- {text}")
        return " ".join(parts)


def _wrap(terms: dict[Monomial, Fraction]) -> Polynomial:
    p = Polynomial.__new__(Polynomial)
    p._terms = terms
    return p


_ZERO = _wrap({})
_ONE = _wrap({_UNIT_MONO: Fraction(1)})

ZERO = _ZERO
ONE = _ONE


def binom_poly(sym: Symbol, m: int) -> Polynomial:
    """Falling-factorial binomial coefficient s(s-1)...(s-m+1)/m! in ``sym``."""
    if m < 0:
        raise ValueError("binom_poly needs m >= 0")
    s = Polynomial.symbol(sym)
    out = _ONE
    for i in range(m):
        out = out * (s - i)
    fac = 1
    for i in range(2, m + 1):
        fac *= i
    return out * Fraction(1, fac)


def rising_poly(sym: Symbol, m: int) -> Polynomial:
    """Rising factorial s(s+1)...(s+m-1) in ``sym``."""
    if m < 0:
        raise ValueError("rising_poly needs m >= 0")
    s = Polynomial.symbol(sym)
    out = _ONE
    for i in range(m):
        out = out * (s + i)
    return out


def log_n_poly(n: int) -> Polynomial:
    """Formal logarithm of n: sum of m_i * L_{p_i} over n = prod p_i^{m_i}."""
    if n < 1:
        raise ValueError("log_n_poly needs n >= 1")
    out = _ZERO
    for p, m in factorize(n):
        out = out + Polynomial.symbol(log_symbol(p)) * m
    return out


# -- text parsing ----------------------------------------------------------
#
# term ::= rational | symbol | term "*" term | term "^" uint | term "+" term
#        | term "-" term | "-" term | "(" term ")"
# with rationals written p/q or as integers.  Whitespace is insignificant.


class _Tokens:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        ch = self.peek()
        self.pos += 1
        return ch

    def expect(self, ch: str) -> None:
        if self.peek() != ch:
            raise PolynomialSyntaxError(f"expected {ch!r}", self.pos)
        self.pos += 1

    def take_uint(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise PolynomialSyntaxError("expected a number", start)
        return int(self.text[start : self.pos])

    def take_ident(self) -> str:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and (
            self.text[self.pos].isalnum() or self.text[self.pos] == "_"
        ):
            self.pos += 1
        if self.pos == start:
            raise PolynomialSyntaxError("expected a symbol", start)
        return self.text[start : self.pos]


def parse_polynomial(text: str) -> Polynomial:
    """Parse canonical polynomial text; inverse of Polynomial.to_text."""
    toks = _Tokens(text)
    out = _parse_sum(toks)
    toks.skip_ws()
    if toks.pos != len(text):
        raise PolynomialSyntaxError("trailing input", toks.pos)
    return out


def _parse_sum(toks: _Tokens) -> Polynomial:
    negate = False
    if toks.peek() == "-":
        toks.take()
        negate = True
    out = _parse_product(toks)
    if negate:
        out = -out
    while toks.peek() in ("+", "-"):
        op = toks.take()
        term = _parse_product(toks)
        out = out + term if op == "+" else out - term
    return out


def _parse_product(toks: _Tokens) -> Polynomial:
    out = _parse_power(toks)
    while toks.peek() == "*":
        toks.take()
        out = out * _parse_power(toks)
    return out


def _parse_power(toks: _Tokens) -> Polynomial:
    base = _parse_atom(toks)
    if toks.peek() == "^":
        toks.take()
        return base ** toks.take_uint()
    return base


def _parse_atom(toks: _Tokens) -> Polynomial:
    ch = toks.peek()
    if ch == "(":
        toks.take()
        inner = _parse_sum(toks)
        toks.expect(")")
        return inner
    if ch.isdigit():
        num = toks.take_uint()
        if toks.peek() == "/":
            toks.take()
            den = toks.take_uint()
            if den == 0:
                raise PolynomialSyntaxError("zero denominator", toks.pos)
            return Polynomial.const(Fraction(num, den))
        return Polynomial.const(num)
    if ch.isalpha():
        start = toks.pos
        name = toks.take_ident()
        try:
            return Polynomial.symbol(name)
        except ValueError:
            raise PolynomialSyntaxError(f"unknown symbol {name!r}", start) from None
    raise PolynomialSyntaxError("expected a term", toks.pos)
