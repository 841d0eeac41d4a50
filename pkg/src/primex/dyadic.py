"""2-adic arithmetic and Galois type of Eisenstein quartics over Q_2.

For an irreducible quartic the resolvent cubic (roots a_i a_j + a_k a_l) has a
root in the base field exactly when the Galois group is imprimitive (V4, C4
or D4).  Otherwise the group is A4 when the discriminant is a square and S4
when it is not.  Eisenstein polynomials are irreducible, so these two tests
settle them completely.
"""

from __future__ import annotations

import json
import os
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "PrecisionError",
    "TwoAdicNumber",
    "valuation",
    "is_square_q2",
    "discriminant_quartic",
    "resolvent_cubic",
    "newton_slopes",
    "cubic_root_in_q2",
    "QuarticReport",
    "classify_quartic",
    "is_eisenstein",
    "eisenstein_scan",
    "DEFAULT_PRECISION",
    "GUARD_BITS",
]

DEFAULT_PRECISION = 64
GUARD_BITS = 8
SCAN_GUARD = 6


class PrecisionError(ArithmeticError):
    """The working precision cannot decide the requested quantity."""


def valuation(x: int | Fraction) -> int | None:
    """2-adic valuation of a rational number (None for zero)."""
    x = Fraction(x)
    if x == 0:
        return None
    v = 0
    num, den = x.numerator, x.denominator
    while num % 2 == 0:
        num //= 2
        v += 1
    while den % 2 == 0:
        den //= 2
        v -= 1
    return v


@dataclass(frozen=True)
class TwoAdicNumber:
    """2^valuation * unit, the unit known modulo 2^precision.

    `valuation` is None for zero.  `exact` holds the rational value when the
    number is known exactly; arithmetic between exact numbers stays exact.
    """

    valuation: int | None
    unit: int
    precision: int = DEFAULT_PRECISION
    exact: Fraction | None = None

    def __post_init__(self):
        if self.valuation is not None:
            if self.unit % 2 == 0:
                raise ValueError("unit must be odd")
            object.__setattr__(self, "unit", self.unit % (1 << self.precision))

    @classmethod
    def from_rational(cls, x: int | Fraction, precision: int = DEFAULT_PRECISION) -> TwoAdicNumber:
        x = Fraction(x)
        v = valuation(x)
        if v is None:
            return cls(None, 0, precision, Fraction(0))
        y = x / Fraction(2) ** v
        mod = 1 << precision
        unit = y.numerator * pow(y.denominator, -1, mod) % mod
        return cls(v, unit, precision, x)

    @classmethod
    def zero(cls, precision: int = DEFAULT_PRECISION) -> TwoAdicNumber:
        return cls.from_rational(0, precision)

    def is_zero(self) -> bool:
        return self.valuation is None

    def __neg__(self) -> TwoAdicNumber:
        if self.is_zero():
            return self
        ex = -self.exact if self.exact is not None else None
        return TwoAdicNumber(self.valuation, -self.unit, self.precision, ex)

    def __add__(self, other: TwoAdicNumber) -> TwoAdicNumber:
        other = _coerce(other, self.precision)
        if self.exact is not None and other.exact is not None:
            return TwoAdicNumber.from_rational(self.exact + other.exact, min(self.precision, other.precision))
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        a, b = (self, other) if self.valuation <= other.valuation else (other, self)
        shift = b.valuation - a.valuation
        prec = min(a.precision, b.precision + shift)
        total = (a.unit + (b.unit << shift)) % (1 << prec)
        if total == 0:
            raise PrecisionError("cancellation exhausted the working precision")
        extra = (total & -total).bit_length() - 1
        return TwoAdicNumber(a.valuation + extra, total >> extra, prec - extra)

    __radd__ = __add__

    def __sub__(self, other: TwoAdicNumber) -> TwoAdicNumber:
        return self + (-_coerce(other, self.precision))

    def __rsub__(self, other) -> TwoAdicNumber:
        return _coerce(other, self.precision) - self

    def __mul__(self, other: TwoAdicNumber) -> TwoAdicNumber:
        other = _coerce(other, self.precision)
        ex = self.exact * other.exact if self.exact is not None and other.exact is not None else None
        prec = min(self.precision, other.precision)
        if self.is_zero() or other.is_zero():
            if ex is None and not (self.exact == 0 or other.exact == 0):
                raise PrecisionError("product with an inexact zero")
            return TwoAdicNumber.zero(prec)
        return TwoAdicNumber(self.valuation + other.valuation, self.unit * other.unit, prec, ex)

    __rmul__ = __mul__

    def inverse(self) -> TwoAdicNumber:
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        ex = 1 / self.exact if self.exact is not None else None
        return TwoAdicNumber(-self.valuation, pow(self.unit, -1, 1 << self.precision), self.precision, ex)

    def __truediv__(self, other: TwoAdicNumber) -> TwoAdicNumber:
        return self * _coerce(other, self.precision).inverse()

    def to_json(self) -> dict:
        out = {"valuation": self.valuation, "unit": self.unit, "precision": self.precision}
        if self.exact is not None:
            out["exact"] = str(self.exact)
        return out


def _coerce(x, precision: int) -> TwoAdicNumber:
    if isinstance(x, TwoAdicNumber):
        return x
    return TwoAdicNumber.from_rational(x, precision)


def is_square_q2(x: TwoAdicNumber | int | Fraction) -> bool:
    """x = 2^v u is a square in Q_2 iff v is even and u = 1 mod 8."""
    x = _coerce(x, DEFAULT_PRECISION)
    if x.is_zero():
        raise ValueError("zero input")
    if x.precision < 3:
        raise PrecisionError("unit not known modulo 8")
    return x.valuation % 2 == 0 and x.unit % 8 == 1


# ---------------------------------------------------------------------------
# quartic invariants


def _depressed(a, b, c, d) -> tuple[Fraction, Fraction, Fraction]:
    """(p, q, r) with f(y - a/4) = y^4 + p y^2 + q y + r."""
    a, b, c, d = map(Fraction, (a, b, c, d))
    p = b - 3 * a * a / 8
    q = c - a * b / 2 + a**3 / 8
    r = d - a * c / 4 + a * a * b / 16 - 3 * a**4 / 256
    return p, q, r


def discriminant_quartic(a, b, c, d) -> int | Fraction:
    """Discriminant of x^4 + a x^3 + b x^2 + c x + d (exact)."""
    p, q, r = _depressed(a, b, c, d)
    disc = (
        256 * r**3
        - 128 * p**2 * r**2
        + 144 * p * q**2 * r
        + 16 * p**4 * r
        - 4 * p**3 * q**2
        - 27 * q**4
    )
    return int(disc) if disc.denominator == 1 else disc


def resolvent_cubic(a, b, c, d) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Monic cubic with roots a_i a_j + a_k a_l of the depressed quartic.

    For y^4 + p y^2 + q y + r this is y^3 - p y^2 - 4 r y + (4 p r - q^2).
    """
    p, q, r = _depressed(a, b, c, d)
    return Fraction(1), -p, -4 * r, 4 * p * r - q * q


def _poly_eval(coeffs: Sequence[int], x: int) -> int:
    """coeffs in descending degree order."""
    out = 0
    for c in coeffs:
        out = out * x + c
    return out


def _derivative(coeffs: Sequence[int]) -> list[int]:
    deg = len(coeffs) - 1
    return [c * (deg - i) for i, c in enumerate(coeffs[:-1])]


def newton_slopes(coeffs: Sequence) -> list[tuple[Fraction, int]]:
    """Segments of the 2-adic Newton polygon as (root valuation, number of roots).

    coeffs are in descending degree order; a zero constant term contributes
    roots at infinite valuation, reported as (None, multiplicity).
    """
    deg = len(coeffs) - 1
    pts = []
    for i, c in enumerate(reversed(list(coeffs))):
        v = valuation(c)
        if v is not None:
            pts.append((i, v))
    out = []
    if pts[0][0] > 0:
        out.append((None, pts[0][0]))
    # lower convex hull
    hull = []
    for pt in pts:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            if (y2 - y1) * (pt[0] - x1) >= (pt[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(pt)
    for (x1, y1), (x2, y2) in zip(hull, hull[1:]):
        out.append((Fraction(-(y2 - y1), x2 - x1), x2 - x1))
    assert sum(m for _, m in out) == deg
    return out


def _integral(coeffs: Sequence) -> list[int]:
    """Scale rational coefficients to coprime-ish integers (same roots)."""
    fr = [Fraction(c) for c in coeffs]
    den = 1
    for c in fr:
        den = den * c.denominator // _gcd(den, c.denominator)
    ints = [int(c * den) for c in fr]
    g = 0
    for c in ints:
        g = _gcd(g, c)
    return [c // g for c in ints] if g else ints


def _gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


def _v(x: int) -> int:
    return (x & -x).bit_length() - 1 if x else 10**9


def _unit_root(S: list[int], precision: int) -> int | None:
    """An odd 2-adic root of the integer polynomial S, to `precision` bits, or None.

    Residue classes r mod 2^m survive while S(r) = 0 mod 2^m.  A class is
    resolved once v(S(r)) > 2 v(S'(r)) with v(S'(r)) < m, which makes the
    condition independent of the lift and guarantees a unique root.
    """
    limit = precision - GUARD_BITS
    dS = _derivative(S)
    frontier = [1]
    m = 1
    while frontier:
        nxt = []
        for r in frontier:
            val = _poly_eval(S, r)
            if _v(val) < m:
                continue
            dval = _v(_poly_eval(dS, r))
            if dval < m and _v(val) > 2 * dval:
                return _hensel(S, dS, r, precision)
            nxt.append(r)
        if not nxt:
            return None
        if m >= limit:
            raise PrecisionError(f"root search unresolved at {m} bits (precision {precision})")
        frontier = [r + t * (1 << m) for r in nxt for t in (0, 1)]
        m += 1
    return None


def _hensel(S: list[int], dS: list[int], r: int, precision: int) -> int:
    mod = 1 << (precision + 2 * _v(_poly_eval(dS, r)) + 2)
    for _ in range(2 * precision):
        val = _poly_eval(S, r) % mod
        if val == 0:
            break
        d = _poly_eval(dS, r)
        k = _v(d)
        # Newton step on the odd part of the derivative
        step = (val >> k) * pow(d >> k, -1, mod) % mod
        r = (r - step) % mod
    return r


def cubic_root_in_q2(cubic: Sequence, precision: int = DEFAULT_PRECISION) -> TwoAdicNumber | None:
    """A root in Q_2 of the cubic (descending coefficients), or None if there is none."""
    coeffs = [Fraction(c) for c in cubic]
    if coeffs[0] == 0:
        raise ValueError("leading coefficient must be nonzero")
    if coeffs[-1] == 0:
        return TwoAdicNumber.zero(precision)
    for slope, _ in newton_slopes(coeffs):
        if slope is None or slope.denominator != 1:
            continue
        s = int(slope)
        deg = len(coeffs) - 1
        # roots y = 2^s w with w a unit
        scaled = [c * Fraction(2) ** (s * (deg - i)) for i, c in enumerate(coeffs)]
        S = _integral(scaled)
        w = _unit_root(S, precision)
        if w is not None:
            return TwoAdicNumber(s, w, precision)
    return None


def residual(cubic: Sequence, root: TwoAdicNumber) -> int | None:
    """2-adic valuation of cubic(root), with the root truncated to its known digits."""
    coeffs = [Fraction(c) for c in cubic]
    if root.is_zero():
        x = Fraction(0)
    else:
        x = Fraction(root.unit) * Fraction(2) ** root.valuation
    val = Fraction(0)
    for c in coeffs:
        val = val * x + c
    return valuation(val)


# ---------------------------------------------------------------------------
# classification


@dataclass(frozen=True)
class QuarticReport:
    coefficients: tuple[int, int, int, int]
    eisenstein: bool
    discriminant: int
    disc_square: bool | None
    resolvent: tuple[Fraction, Fraction, Fraction, Fraction]
    resolvent_root: TwoAdicNumber | None
    verdict: str

    def to_json(self) -> dict:
        return {
            "coefficients": list(self.coefficients),
            "polynomial": _poly_str(self.coefficients),
            "eisenstein": self.eisenstein,
            "discriminant": str(self.discriminant),
            "discriminant_2adic": TwoAdicNumber.from_rational(self.discriminant).to_json()
            if self.discriminant
            else None,
            "disc_square": self.disc_square,
            "resolvent": [str(c) for c in self.resolvent],
            "resolvent_root": self.resolvent_root.to_json() if self.resolvent_root else None,
            "verdict": self.verdict,
        }


def _poly_str(coeffs) -> str:
    terms = ["x^4"]
    for c, mono in zip(coeffs, ["x^3", "x^2", "x", ""]):
        if c:
            sign = "+" if c > 0 else "-"
            mag = abs(c)
            body = mono if mag == 1 and mono else f"{mag}{mono}"
            terms.append(f"{sign}{body}")
    return "".join(terms)


def is_eisenstein(a: int, b: int, c: int, d: int) -> bool:
    return a % 2 == 0 and b % 2 == 0 and c % 2 == 0 and d % 4 == 2


def classify_quartic(a: int, b: int, c: int, d: int, precision: int = DEFAULT_PRECISION) -> QuarticReport:
    """Galois type over Q_2 of x^4 + a x^3 + b x^2 + c x + d."""
    coeffs = (int(a), int(b), int(c), int(d))
    eis = is_eisenstein(*coeffs)
    disc = discriminant_quartic(*coeffs)
    cubic = resolvent_cubic(*coeffs)
    if not eis:
        return QuarticReport(coeffs, False, disc, None, cubic, None, "NOT_APPLICABLE")
    square = is_square_q2(TwoAdicNumber.from_rational(disc, precision))
    root = cubic_root_in_q2(cubic, precision)
    if root is not None:
        verdict = "IMPRIMITIVE"
    else:
        verdict = "A4" if square else "S4"
    return QuarticReport(coeffs, True, disc, square, cubic, root, verdict)


def _scan_chunk(args) -> list[tuple[tuple[int, int, int, int], str]]:
    a, m, precision = args
    out = []
    M = 1 << m
    for b in range(M):
        for c in range(M):
            for d in range(1, M, 2):
                coeffs = (2 * a, 2 * b, 2 * c, 2 * d)
                out.append((coeffs, classify_quartic(*coeffs, precision=precision).verdict))
    return out


def _workers() -> int:
    env = os.environ.get("PRIMEX_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


@dataclass
class ScanResult:
    mod_bits: int
    tally: Counter
    examples: dict[str, list[tuple[int, int, int, int]]]

    def to_json(self) -> dict:
        return {
            "mod_bits": self.mod_bits,
            "total": sum(self.tally.values()),
            "tally": dict(sorted(self.tally.items())),
            "first_examples": {k: [list(c) for c in v[:5]] for k, v in sorted(self.examples.items())},
        }


def eisenstein_scan(m: int, precision: int = DEFAULT_PRECISION, workers: int | None = None) -> ScanResult:
    """Classify x^4 + 2a x^3 + 2b x^2 + 2c x + 2d for 0 <= a,b,c < 2^m and odd 0 < d < 2^m."""
    if m > SCAN_GUARD:
        from .perm import GuardError

        raise GuardError("mod bits", SCAN_GUARD, m)
    if m < 1:
        raise ValueError("mod bits must be positive")
    jobs = [(a, m, precision) for a in range(1 << m)]
    workers = workers or _workers()
    if workers > 1:
        from concurrent.futures import ProcessPoolExecutor

        with ProcessPoolExecutor(max_workers=workers) as pool:
            chunks = list(pool.map(_scan_chunk, jobs))
    else:
        chunks = [_scan_chunk(j) for j in jobs]
    tally: Counter = Counter()
    examples: dict[str, list] = {}
    for chunk in chunks:
        for coeffs, verdict in chunk:
            tally[verdict] += 1
            examples.setdefault(verdict, []).append(coeffs)
    return ScanResult(m, tally, examples)


def report_json(report: QuarticReport) -> str:
    return json.dumps(report.to_json(), sort_keys=True)
