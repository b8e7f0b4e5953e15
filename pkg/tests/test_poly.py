import random
from fractions import Fraction
from math import comb

import pytest

from dirseries.errors import MissingSymbol, NotDivisible, PolynomialSyntaxError
from dirseries.poly import (
    BETA,
    PHI,
    PSI,
    Polynomial,
    binom_poly,
    coeff_symbol,
    log_n_poly,
    log_symbol,
    parse_polynomial,
    rising_poly,
)

phi = Polynomial.symbol(PHI)
beta = Polynomial.symbol(BETA)
L2 = Polynomial.symbol("L2")
L3 = Polynomial.symbol("L3")
L5 = Polynomial.symbol("L5")


def random_poly(rng, symbols=(PHI, BETA, "L2"), max_terms=4, max_deg=3):
    out = Polynomial.zero()
    for _ in range(rng.randint(0, max_terms)):
        term = Polynomial.const(Fraction(rng.randint(-6, 6), rng.randint(1, 4)))
        for s in symbols:
            term = term * Polynomial.symbol(s) ** rng.randint(0, max_deg)
        out = out + term
    return out


def test_add_inverse_and_collection():
    assert phi + (-phi) == Polynomial.zero()
    assert (L2 + L3) + L2 == L2 * 2 + L3
    half = Fraction(1, 2)
    assert phi**2 * half + phi * half == phi**2 * half + phi * half


def test_mul_examples():
    assert phi * (phi + 1) == phi**2 + phi
    assert L2 * L3 == L2 * L3
    inner = L2 * 2 + L3
    lhs = (phi + beta * inner) ** 2
    rhs = phi**2 + phi * beta * inner * 2 + beta**2 * inner**2
    assert lhs == rhs


def test_substitute_examples():
    psi = Polynomial.symbol(PSI)
    assert (psi**2).substitute(PSI, phi + beta * L2) == (phi + beta * L2) ** 2
    c2 = binom_poly(PHI, 2)
    assert c2.substitute(PHI, Polynomial.const(2)) == Polynomial.one()
    assert (psi * random_poly(random.Random(1))).substitute(PSI, 0) == Polynomial.zero()


def test_divide_by_symbol():
    assert (phi**2 + phi * 3).divide_by_symbol(PHI) == phi + 3
    assert (phi * L2).divide_by_symbol(PHI) == L2
    with pytest.raises(NotDivisible):
        (phi + 1).divide_by_symbol(PHI)


def test_divide_roundtrip():
    rng = random.Random(7)
    for _ in range(20):
        p = random_poly(rng)
        assert (p * phi).divide_by_symbol(PHI) == p


def test_eval():
    assert (phi**2 + phi).eval_at({PHI: 3}) == 12
    assert Polynomial.zero().eval_at({}) == 0
    # binomial-coefficient oracle
    assert binom_poly(PHI, 3).eval_at({PHI: 5}) == comb(5, 3)
    with pytest.raises(MissingSymbol):
        (phi + L2).eval_at({PHI: 1})


def test_eval_respects_operations():
    rng = random.Random(11)
    for _ in range(20):
        p, q = random_poly(rng), random_poly(rng)
        env = {s: Fraction(rng.randint(-5, 5)) for s in (PHI, BETA, "L2")}
        assert (p * q).eval_at(env) == p.eval_at(env) * q.eval_at(env)
        assert (p + q).eval_at(env) == p.eval_at(env) + q.eval_at(env)


def test_ring_axioms_structural():
    rng = random.Random(23)
    for _ in range(15):
        p, q, r = (random_poly(rng) for _ in range(3))
        assert p * (q + r) == p * q + p * r
        assert (p * q) * r == p * (q * r)
        assert p + q == q + p
        assert p * q == q * p


def test_binom_poly():
    assert binom_poly(PHI, 0) == Polynomial.one()
    assert binom_poly(PHI, 2) == (phi**2 - phi) * Fraction(1, 2)
    assert binom_poly(PHI, 3).eval_at({PHI: 6}) == 20
    for t in range(3, 9):
        assert binom_poly(PHI, 3).eval_at({PHI: t}) == comb(t, 3)


def test_rising_poly():
    assert rising_poly(PHI, 0) == Polynomial.one()
    assert rising_poly(PHI, 2) == phi**2 + phi
    assert rising_poly(PHI, 3).eval_at({PHI: 2}) == 24


def test_log_n_poly():
    assert log_n_poly(1) == Polynomial.zero()
    assert log_n_poly(12) == L2 * 2 + L3
    assert log_n_poly(30) == L2 + L3 + L5


def test_log_additivity_exhaustive():
    for n in range(1, 101):
        for m in range(1, 101):
            assert log_n_poly(n * m) == log_n_poly(n) + log_n_poly(m)


def test_symbol_vocabulary():
    assert log_symbol(2) == "L2"
    with pytest.raises(ValueError):
        log_symbol(4)
    assert coeff_symbol(2) == "a2"
    with pytest.raises(ValueError):
        coeff_symbol(0)
    with pytest.raises(ValueError):
        Polynomial.symbol("gamma")


def test_parse_print_roundtrip():
    rng = random.Random(31)
    for _ in range(40):
        p = random_poly(rng, symbols=(PHI, BETA, "L2", "a3"))
        assert parse_polynomial(p.to_text()) == p


def test_parse_forms():
    assert parse_polynomial("2*L2 + L3") == L2 * 2 + L3
    assert parse_polynomial("1/2*phi^2") == phi**2 * Fraction(1, 2)
    assert parse_polynomial("-(phi - 1)") == -phi + 1
    assert parse_polynomial("0") == Polynomial.zero()
    assert parse_polynomial("phi*(phi+1)") == phi**2 + phi


def test_parse_errors_carry_offsets():
    with pytest.raises(PolynomialSyntaxError) as err:
        parse_polynomial("phi + gamma")
    assert err.value.offset == 6
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("phi + ")
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial("(phi")
