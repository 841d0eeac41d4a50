import math
import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from primex.dyadic import (
    PrecisionError,
    TwoAdicNumber,
    classify_quartic,
    cubic_root_in_q2,
    discriminant_quartic,
    eisenstein_scan,
    is_eisenstein,
    is_square_q2,
    newton_slopes,
    residual,
    resolvent_cubic,
    valuation,
)

x, y = sympy.symbols("x y")


def sympy_disc(a, b, c, d):
    return sympy.discriminant(x**4 + a * x**3 + b * x**2 + c * x + d, x)


def v2(n):
    n = sympy.Rational(n)
    p, q = n.p, n.q
    return sympy.multiplicity(2, p) - sympy.multiplicity(2, q)


def oracle_square(n):
    """Square test in Q_2 from the odd part mod 8, written independently."""
    n = sympy.Rational(n)
    k = v2(n)
    odd = n / sympy.Integer(2) ** k
    return k % 2 == 0 and (odd.p * pow(odd.q, -1, 8)) % 8 == 1


def monic_integral(cubic):
    """z^3 + ... with z = 2^k y, integral coefficients, same Q_2-rationality of roots."""
    c = [Fraction(t) / Fraction(cubic[0]) for t in cubic]
    k = 0
    while any((ci * Fraction(2) ** (k * i)).denominator != 1 for i, ci in enumerate(c)):
        k += 1
    return [int(ci * Fraction(2) ** (k * i)) for i, ci in enumerate(c)]


def has_root_mod_powers(coeffs, bits=24):
    """Brute lifting of the solutions of a monic integer polynomial mod 2^k."""
    sols = [0, 1]
    for k in range(1, bits + 1):
        mod = 1 << k
        sols = [r for r in sols if sum(ci * r ** (len(coeffs) - 1 - i) for i, ci in enumerate(coeffs)) % mod == 0]
        if not sols:
            return False
        sols = [r + t * mod for r in sols for t in (0, 1)]
    return True


coef = st.integers(-40, 40)


@settings(max_examples=100, deadline=None)
@given(coef, coef, coef, coef)
def test_discriminant_matches_sympy(a, b, c, d):
    assert discriminant_quartic(a, b, c, d) == sympy_disc(a, b, c, d)


@settings(max_examples=30, deadline=None)
@given(st.fractions(max_denominator=7), st.fractions(max_denominator=7), coef, coef)
def test_discriminant_rational_coefficients(a, b, c, d):
    assert sympy.Rational(discriminant_quartic(a, b, c, d)) == sympy_disc(
        sympy.Rational(a), sympy.Rational(b), c, d
    )


def test_resolvent_has_the_same_discriminant():
    rng = random.Random(17)
    for _ in range(100):
        a, b, c, d = (rng.randint(-30, 30) for _ in range(4))
        one, p2, p1, p0 = (sympy.Rational(t) for t in resolvent_cubic(a, b, c, d))
        assert one == 1
        assert sympy.discriminant(y**3 + p2 * y**2 + p1 * y + p0, y) == sympy_disc(a, b, c, d)


def test_resolvent_roots_are_pair_products():
    rng = np.random.default_rng(3)
    for _ in range(20):
        a, b, c, d = rng.integers(-9, 10, size=4)
        roots = np.roots([1, a, b, c, d]) + a / 4  # roots of the depressed quartic
        r1, r2, r3, r4 = roots
        cubic = [float(t) for t in resolvent_cubic(int(a), int(b), int(c), int(d))]
        for val in (r1 * r2 + r3 * r4, r1 * r3 + r2 * r4, r1 * r4 + r2 * r3):
            assert abs(np.polyval(cubic, val)) < 1e-6 * (1 + abs(val) ** 3)


def test_known_discriminants():
    assert discriminant_quartic(0, 0, 0, 1) == 256
    assert discriminant_quartic(0, 0, 1, 0) == -27
    assert discriminant_quartic(0, -2, 2, -2) == -2608


def test_inverse_of_three():
    t = TwoAdicNumber.from_rational(3, precision=17).inverse()
    assert t.valuation == 0 and t.unit == 43691
    assert 3 * 43691 % (1 << 17) == 1


@settings(max_examples=100, deadline=None)
@given(st.fractions().filter(bool), st.fractions().filter(bool))
def test_arithmetic_matches_rationals(p, q):
    P = TwoAdicNumber.from_rational(p)
    Q = TwoAdicNumber.from_rational(q)
    for got, want in [(P * Q, p * q), (P / Q, p / q)]:
        assert got.valuation == valuation(want)
        assert got.unit == TwoAdicNumber.from_rational(want).unit
    assert valuation(p) == v2(sympy.Rational(p.numerator, p.denominator))


def test_inexact_cancellation_raises():
    a = TwoAdicNumber(0, 1, precision=4)
    b = TwoAdicNumber(0, 15, precision=4)
    with pytest.raises(PrecisionError):
        a + b
    s = TwoAdicNumber(0, 1, precision=4) + TwoAdicNumber(0, 3, precision=4)
    assert (s.valuation, s.unit, s.precision) == (2, 1, 2)


@settings(max_examples=200, deadline=None)
@given(st.integers(-10**6, 10**6).filter(bool))
def test_square_test_matches_oracle(n):
    assert is_square_q2(n) == oracle_square(n)


@pytest.mark.parametrize("n, sq", [(1, True), (17, True), (-7, True), (4, True), (2, False), (5, False), (3, False), (-1, False), (Fraction(1, 4), True)])
def test_square_examples(n, sq):
    assert is_square_q2(n) == sq


def test_newton_slopes():
    # y^3 - 2: three roots of valuation 1/3
    assert newton_slopes([1, 0, 0, -2]) == [(Fraction(1, 3), 3)]
    # (y - 1)(y - 2)(y - 4)
    assert sorted(newton_slopes([1, -7, 14, -8])) == [(0, 1), (1, 1), (2, 1)]
    assert newton_slopes([1, 1, 0, 0]) == [(None, 2), (0, 1)]


@settings(max_examples=150, deadline=None)
@given(st.lists(st.integers(-30, 30), min_size=3, max_size=3))
def test_cubic_root_against_brute_lifting(cs):
    cubic = [1] + cs
    if sympy.discriminant(sympy.Poly([1] + cs, y)) == 0:
        return
    disc = sympy.discriminant(sympy.Poly([1] + cs, y))
    if v2(disc) > 8:
        return
    root = cubic_root_in_q2(cubic)
    assert (root is not None) == has_root_mod_powers(cubic)
    if root is not None and not root.is_zero():
        r = residual(cubic, root)  # None: the truncated root is exact
        assert r is None or r >= 40


def test_close_roots_need_precision():
    # (y - 1)^3 - 2^22: three roots 1 + 2^(22/3) w, all within distance 2^-7 of each other
    cubic = [int(t) for t in sympy.Poly(sympy.expand((y - 1) ** 3 - 2**22), y).all_coeffs()]
    with pytest.raises(PrecisionError):
        cubic_root_in_q2(cubic, precision=16)
    assert cubic_root_in_q2(cubic, precision=64) is None
    assert not has_root_mod_powers(cubic, bits=30)


@pytest.mark.parametrize(
    "coeffs, verdict",
    [
        ((0, 0, -2, 2), "S4"),
        ((0, 0, -4, 2), "S4"),
        ((0, -4, 4, -2), "S4"),
        ((0, 0, 0, -2), "IMPRIMITIVE"),
        ((2, 2, 0, 2), "A4"),
        ((-2, 2, 0, 2), "A4"),
    ],
)
def test_quartic_table(coeffs, verdict):
    report = classify_quartic(*coeffs)
    assert report.eisenstein
    assert report.verdict == verdict


@pytest.mark.parametrize("coeffs", [(0, 0, -2, 2), (0, 0, -4, 2), (0, -4, 4, -2), (0, 0, 0, -2), (2, 2, 0, 2), (0, -2, 2, -2)])
def test_verdict_against_independent_oracle(coeffs):
    # independent ingredients: sympy discriminant, odd-part square test, brute lifting of the resolvent
    disc = sympy_disc(*coeffs)
    root = has_root_mod_powers(monic_integral(resolvent_cubic(*coeffs)), bits=30)
    expected = "IMPRIMITIVE" if root else ("A4" if oracle_square(disc) else "S4")
    assert classify_quartic(*coeffs).verdict == expected


def test_printed_a4_polynomial_is_s4():
    # x^4 - 2x^2 + 2x - 2: disc = -2^4 * 163 with -163 = 5 mod 8, so the discriminant is no square,
    # and the resolvent y^3 + 2y^2 + 8y + 12 has all three roots of valuation 2/3
    report = classify_quartic(0, -2, 2, -2)
    assert report.discriminant == -2608 == -(2**4) * 163
    assert report.disc_square is False
    assert report.resolvent == (1, 2, 8, 12)
    assert newton_slopes(report.resolvent) == [(Fraction(2, 3), 3)]
    assert report.resolvent_root is None
    assert report.verdict == "S4"


eis = st.tuples(
    st.integers(-20, 20).map(lambda t: 2 * t),
    st.integers(-20, 20).map(lambda t: 2 * t),
    st.integers(-20, 20).map(lambda t: 2 * t),
    st.integers(-20, 20).map(lambda t: 4 * t + 2),
)


@settings(max_examples=60, deadline=None)
@given(eis, st.integers(-3, 3))
def test_verdict_invariant_under_substitution(coeffs, t):
    a, b, c, d = coeffs
    f = x**4 + a * x**3 + b * x**2 + c * x + d
    shifted = sympy.Poly(sympy.expand(f.subs(x, x + 2 * t)), x).all_coeffs()[1:]
    mirrored = sympy.Poly(sympy.expand(f.subs(x, -x)), x).all_coeffs()[1:]
    base = classify_quartic(*coeffs).verdict
    assert is_eisenstein(*map(int, shifted))
    assert classify_quartic(*map(int, shifted)).verdict == base
    assert classify_quartic(*map(int, mirrored)).verdict == base


def test_non_eisenstein():
    report = classify_quartic(0, 0, 0, 1)
    assert not report.eisenstein
    assert report.verdict == "NOT_APPLICABLE"


def test_scan_is_deterministic_across_workers():
    one = eisenstein_scan(2, workers=1)
    two = eisenstein_scan(2, workers=2)
    assert one.to_json() == two.to_json()
    assert one.tally == {"S4": 72, "IMPRIMITIVE": 40, "A4": 16}
    assert sum(one.tally.values()) == 4**3 * 2


def test_scan_guard():
    from primex.perm import GuardError

    with pytest.raises(GuardError):
        eisenstein_scan(7)
    with pytest.raises(ValueError):
        eisenstein_scan(0)


def test_small_arithmetic():
    prod = TwoAdicNumber.from_rational(2) * TwoAdicNumber.from_rational(6)
    assert (prod.valuation, prod.unit) == (2, 3)
    total = TwoAdicNumber(1, 1, precision=10) + TwoAdicNumber(1, 1, precision=10)
    assert total.valuation == 2
    with pytest.raises(ZeroDivisionError):
        TwoAdicNumber.zero().inverse()


def test_mod_eight_criterion_from_odd_squares():
    assert {(k * k) % 32 for k in range(1, 32, 2)} == {1, 9, 17, 25}
    assert all(s % 8 == 1 for s in {(k * k) % 32 for k in range(1, 32, 2)})
    assert is_square_q2(3136) and not is_square_q2(2048) and not is_square_q2(-2608)


@settings(max_examples=100, deadline=None)
@given(st.integers(-10**5, 10**5).filter(bool), st.integers(0, 500).map(lambda k: 2 * k + 1))
def test_square_test_ignores_odd_square_factors(n, k):
    assert is_square_q2(k * k * n) == is_square_q2(n)


@pytest.mark.parametrize(
    "coeffs, cubic",
    [((0, 0, 0, -2), (1, 0, 8, 0)), ((0, 0, -2, 2), (1, 0, -8, -4)), ((0, -4, 4, -2), (1, 4, 8, 16))],
)
def test_resolvent_examples(coeffs, cubic):
    assert resolvent_cubic(*coeffs) == cubic


def test_cubic_root_examples():
    assert cubic_root_in_q2([1, 0, 8, 0]).is_zero()
    assert cubic_root_in_q2([1, 0, -8, -4]) is None
    assert cubic_root_in_q2([1, 2, 8, 12]) is None
    root = cubic_root_in_q2([1, -7, 14, -8])  # roots 1, 2, 4
    assert root is not None and residual([1, -7, 14, -8], root) is None


def test_scan_never_leaves_eisenstein_inputs():
    assert "NOT_APPLICABLE" not in eisenstein_scan(2, workers=1).tally
