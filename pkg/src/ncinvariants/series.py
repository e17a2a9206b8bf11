"""Hilbert series as rational functions num/den with integer coefficients."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .exactfield import poly_divmod, poly_gcd, poly_mul, poly_trim, rational

DEFAULT_GUARD = 3


class SeriesError(ValueError):
    pass


def _ints(p) -> tuple:
    return tuple(int(c) for c in poly_trim(list(p)))


def product_denominator(exponents) -> tuple:
    """prod (1 - t^a) as a low-first coefficient tuple."""
    den = [1]
    for a in exponents:
        if a < 1:
            raise ValueError("exponents must be positive")
        f = [1] + [0] * (a - 1) + [-1]
        den = poly_mul(den, f)
    return _ints(den)


def _mul_trunc(p, q, n):
    out = [0] * (n + 1)
    for i, a in enumerate(p):
        if i > n or not a:
            continue
        for j, b in enumerate(q):
            if i + j > n:
                break
            out[i + j] += a * b
    return out


def _q(p) -> list:
    return [rational(c) for c in poly_trim(list(p))]


def _root1_multiplicity(p) -> int:
    """Multiplicity of t = 1 as a root of a rational polynomial."""
    p = _q(p)
    k = 0
    while p and sum(p) == 0:
        p = poly_divmod(p, [-1, 1])[0]
        k += 1
    return k


def _strip_root1(p, k):
    p = _q(p)
    for _ in range(k):
        p = poly_divmod(p, [-1, 1])[0]
    return p


def _frac(x) -> Fraction:
    return Fraction(int(x.numerator), int(x.denominator))


@dataclass(frozen=True)
class HilbertSeries:
    numerator: tuple
    denominator: tuple
    verified_to: int

    @property
    def t_degree(self) -> int:
        """deg num - deg den; the a-invariant."""
        return (len(self.numerator) - 1) - (len(self.denominator) - 1)

    def expand(self, n: int) -> list:
        """Power-series coefficients through degree n."""
        den = self.denominator
        out = []
        for d in range(n + 1):
            c = self.numerator[d] if d < len(self.numerator) else 0
            for k in range(1, min(d, len(den) - 1) + 1):
                c -= den[k] * out[d - k]
            out.append(c)
        return out

    def pole_order_at_1(self) -> int:
        return _root1_multiplicity(self.denominator) - _root1_multiplicity(self.numerator)

    def to_json(self) -> dict:
        return {
            "numerator": list(self.numerator),
            "denominator": list(self.denominator),
            "verified_to": self.verified_to,
            "a_invariant": self.t_degree,
            "pole_order_at_1": self.pole_order_at_1(),
        }

    def format(self) -> str:
        return f"({_pstr(self.numerator)}) / ({_pstr(self.denominator)})"


def _pstr(p) -> str:
    terms = []
    for i, c in enumerate(p):
        if not c:
            continue
        mono = "" if i == 0 else ("t" if i == 1 else f"t^{i}")
        if mono and abs(c) == 1:
            terms.append(("-" if c < 0 else "+") + mono)
        else:
            terms.append(f"{c:+d}{mono}")
    s = "".join(terms) or "0"
    return s[1:] if s.startswith("+") else s


def normalize(num, den) -> tuple:
    """Cancel the gcd and scale so that den(0) = 1."""
    num, den = _q(num), _q(den)
    if not den:
        raise SeriesError("zero denominator")
    if num:
        g = poly_gcd(num, den)
        if len(g) > 1:
            num = poly_divmod(num, g)[0]
            den = poly_divmod(den, g)[0]
    num = [_frac(c) for c in num]
    den = [_frac(c) for c in den]
    c0 = den[0]
    if not c0:
        raise SeriesError("denominator vanishes at t = 0")
    num = [Fraction(c) / c0 for c in num]
    den = [Fraction(c) / c0 for c in den]
    lcm = 1
    for c in num + den:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    if lcm != 1:
        raise SeriesError("non-integral series after normalization")
    return _ints(int(c) for c in num), _ints(int(c) for c in den)


def fit_series(dims: list, denominator_hint, guard: int = DEFAULT_GUARD) -> HilbertSeries:
    """Fit dims to num/den with den given by the hint.

    The hint is either ("product", [a_1, ...]) for prod (1 - t^{a_i}) or a
    coefficient list.  The numerator is dims * den truncated at N; the fit is
    accepted when its degree leaves at least ``guard`` trailing coefficients
    that vanish, so the recurrence is checked on that many extra degrees.
    """
    if isinstance(denominator_hint, tuple) and len(denominator_hint) == 2 and denominator_hint[0] == "product":
        den = product_denominator(denominator_hint[1])
    else:
        den = _ints(denominator_hint)
    N = len(dims) - 1
    if len(den) - 1 > N - guard:
        raise SeriesError(f"hint degree {len(den) - 1} exceeds N - guard = {N - guard}")
    num = _mul_trunc(list(dims), den, N)
    K = max((i for i, c in enumerate(num) if c), default=-1)
    if K > N - guard:
        raise SeriesError("no fit within N: numerator does not terminate before the guard window")
    num, den = normalize(num[: K + 1], den)
    s = HilbertSeries(num, den, N)
    if s.expand(N) != [int(x) for x in dims]:
        raise SeriesError("expansion does not reproduce the data")
    return s


def guess_series(dims: list, max_exponent: int = 6, max_factors: int = 4, guard: int = DEFAULT_GUARD):
    """First product-form denominator (fewest factors, smallest exponents)
    that fits; None if nothing fits."""
    for n in range(0, max_factors + 1):
        for exps in itertools.combinations_with_replacement(range(1, max_exponent + 1), n):
            try:
                return fit_series(dims, ("product", list(exps)), guard)
            except SeriesError:
                continue
    return None


def a_invariant(s: HilbertSeries) -> int:
    return s.t_degree


def ratio_at_one(p: HilbertSeries, q: HilbertSeries) -> Fraction:
    """(p/q)(1) after cancelling powers of (1 - t)."""
    top = poly_mul(_q(p.numerator), _q(q.denominator))
    bot = poly_mul(_q(p.denominator), _q(q.numerator))
    if not poly_trim(bot):
        raise SeriesError("q is zero")
    kt, kb = _root1_multiplicity(top), _root1_multiplicity(bot)
    if kt < kb:
        raise SeriesError("residual pole at t = 1: the growth orders differ")
    if kt > kb:
        return Fraction(0)
    return _frac(sum(_strip_root1(top, kt)) / sum(_strip_root1(bot, kb)))
