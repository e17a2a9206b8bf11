"""Exact arithmetic over Q and simple extensions Q[a]/(p(a)).

Rationals are gmpy2 ``mpq`` values.  Over a degree-one field the linear
algebra kernels work with plain rationals; ``Scalar`` is the general
element type and interoperates with ints and rationals.
"""
from __future__ import annotations

from fractions import Fraction

from gmpy2 import mpq

RATIONAL_TYPES = (int, type(mpq(0)), Fraction)


def rational(x, den=None):
    """Coerce ints, strings "p/q", [p, q] pairs and Fractions to mpq."""
    if den is not None:
        return mpq(int(x), int(den))
    if isinstance(x, str):
        return mpq(Fraction(x))
    if isinstance(x, (list, tuple)):
        if len(x) != 2:
            raise ValueError(f"rational pair must have length 2: {x!r}")
        return mpq(int(x[0]), int(x[1]))
    if isinstance(x, Fraction):
        return mpq(x.numerator, x.denominator)
    if isinstance(x, bool):
        raise TypeError("bool is not a rational")
    if isinstance(x, float):
        raise TypeError("floats are not exact")
    return mpq(x)


# ---------------------------------------------------------------------------
# dense univariate polynomials over Q, coefficient lists low degree first

def poly_trim(p):
    p = list(p)
    while p and not p[-1]:
        p.pop()
    return p


def poly_add(p, q):
    n = max(len(p), len(q))
    out = [(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0) for i in range(n)]
    return poly_trim(out)


def poly_neg(p):
    return [-c for c in p]


def poly_sub(p, q):
    return poly_add(p, poly_neg(q))


def poly_scale(p, c):
    return poly_trim([c * a for a in p])


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [mpq(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if not a:
            continue
        for j, b in enumerate(q):
            out[i + j] += a * b
    return poly_trim(out)


def poly_divmod(p, q):
    q = poly_trim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = [mpq(c) for c in poly_trim(p)]
    lead = mpq(q[-1])
    quot = [mpq(0)] * max(len(r) - len(q) + 1, 0)
    while len(r) >= len(q):
        c = r[-1] / lead
        k = len(r) - len(q)
        quot[k] = c
        for i, b in enumerate(q):
            r[i + k] -= c * b
        r = poly_trim(r)
    return poly_trim(quot), r


def poly_monic(p):
    p = poly_trim(p)
    if not p:
        return p
    lead = mpq(p[-1])
    return [mpq(c) / lead for c in p]


def poly_gcd(p, q):
    a, b = poly_trim(p), poly_trim(q)
    while b:
        a, b = b, poly_divmod(a, b)[1]
    return poly_monic(a)


def poly_xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = poly_trim(a), poly_trim(b)
    s0, s1 = [mpq(1)], []
    t0, t1 = [], [mpq(1)]
    while r1:
        q, r = poly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly_sub(s0, poly_mul(q, s1))
        t0, t1 = t1, poly_sub(t0, poly_mul(q, t1))
    if not r0:
        return [], s0, t0
    lead = r0[-1]
    return poly_scale(r0, 1 / lead), poly_scale(s0, 1 / lead), poly_scale(t0, 1 / lead)


def poly_eval(p, x):
    acc = mpq(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


# ---------------------------------------------------------------------------


class FieldSpec:
    """The field Q[a]/(minpoly(a)); degree one means Q itself."""

    __slots__ = ("minpoly", "label", "_monic", "degree")

    def __init__(self, minpoly=(0, 1), label=None):
        coeffs = [rational(c) for c in minpoly]
        coeffs = poly_trim(coeffs)
        if len(coeffs) < 2:
            raise ValueError("minpoly must have degree >= 1")
        self.minpoly = tuple(coeffs)
        self._monic = tuple(poly_monic(coeffs))
        self.degree = len(coeffs) - 1
        self.label = label if label is not None else ("QQ" if self.degree == 1 else f"QQ[a]/({_poly_str(coeffs)})")

    @property
    def is_rational(self):
        return self.degree == 1

    def __eq__(self, other):
        return isinstance(other, FieldSpec) and self._monic == other._monic

    def __hash__(self):
        return hash(self._monic)

    def __repr__(self):
        return f"FieldSpec({self.label})"

    def check_irreducible(self):
        """Trial factorization for degree <= 6; larger degrees are taken on trust."""
        if self.degree == 1:
            return True
        if self.degree > 6:
            return None
        import sympy

        t = sympy.Symbol("t")
        expr = sum(sympy.Rational(int(c.numerator), int(c.denominator)) * t**i for i, c in enumerate(self._monic))
        return bool(sympy.Poly(expr, t, domain="QQ").is_irreducible)

    # elements ---------------------------------------------------------
    def zero(self):
        return mpq(0) if self.degree == 1 else Scalar(self, ())

    def one(self):
        return mpq(1) if self.degree == 1 else Scalar(self, (1,))

    def generator(self):
        """The class of a."""
        if self.degree == 1:
            return -self._monic[0]
        return Scalar(self, (0, 1))

    def coerce(self, x):
        """Kernel representation: mpq over Q, Scalar otherwise."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise ValueError(f"mismatched fields {x.field.label} and {self.label}")
            if self.degree == 1:
                return x.coeffs[0]
            return x
        if self.degree == 1:
            return rational(x)
        return Scalar(self, (rational(x),))

    def scalar(self, x):
        """Always a Scalar, even over Q."""
        if isinstance(x, Scalar):
            if x.field != self:
                raise ValueError(f"mismatched fields {x.field.label} and {self.label}")
            return x
        return Scalar(self, (rational(x),))

    def from_coords(self, coords):
        coords = [rational(c) for c in coords]
        if self.degree == 1:
            return Scalar(self, coords).coeffs[0]
        return Scalar(self, coords)

    def coords(self, x):
        """Coefficient vector of length degree."""
        if isinstance(x, Scalar):
            return list(x.coeffs)
        return [rational(x)] + [mpq(0)] * (self.degree - 1)


def _poly_str(coeffs):
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        mono = "" if i == 0 else ("a" if i == 1 else f"a^{i}")
        if mono and c == 1:
            terms.append(mono)
        elif mono and c == -1:
            terms.append("-" + mono)
        else:
            terms.append(f"{c}{mono}")
    return "+".join(reversed(terms)).replace("+-", "-") or "0"


def _reduce(coeffs, monic):
    n = len(monic) - 1
    r = [mpq(c) for c in coeffs]
    while len(r) > n:
        c = r.pop()
        if c:
            k = len(r) - n
            for i in range(n):
                r[k + i] -= c * monic[i]
    r += [mpq(0)] * (n - len(r))
    return tuple(r)


class Scalar:
    """An element of a FieldSpec, stored as coefficients of 1, a, ..., a^(deg-1)."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldSpec, coeffs):
        self.field = field
        self.coeffs = _reduce([rational(c) for c in coeffs], field._monic)

    @classmethod
    def _raw(cls, field, coeffs):
        obj = object.__new__(cls)
        obj.field = field
        obj.coeffs = coeffs
        return obj

    def _lift(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ValueError(f"mismatched fields {self.field.label} and {other.field.label}")
            return other
        if isinstance(other, RATIONAL_TYPES) and not isinstance(other, bool):
            return Scalar(self.field, (other,))
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Scalar._raw(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Scalar._raw(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, RATIONAL_TYPES) and not isinstance(other, bool):
            c = rational(other)
            return Scalar._raw(self.field, tuple(a * c for a in self.coeffs))
        o = self._lift(other)
        if o is None:
            return NotImplemented
        prod = [mpq(0)] * (2 * len(self.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        prod[i + j] += a * b
        return Scalar._raw(self.field, _reduce(prod, self.field._monic))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero")
        g, s, _ = poly_xgcd(list(self.coeffs), list(self.field._monic))
        if len(g) != 1:
            raise ZeroDivisionError(f"element not invertible: minpoly of {self.field.label} is reducible")
        return Scalar(self.field, s)

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = Scalar(self.field, (1,))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return any(self.coeffs)

    def __eq__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if not any(self.coeffs[1:]):
            return hash(self.coeffs[0])
        return hash(self.coeffs)

    def is_rational(self):
        return not any(self.coeffs[1:])

    def __repr__(self):
        return f"Scalar({_poly_str(self.coeffs)} in {self.field.label})"

    def __str__(self):
        return _poly_str(self.coeffs)


def scalar_arith(op: str, a: Scalar, b: Scalar) -> Scalar:
    """add, sub or mul of two Scalars over the same field."""
    if not isinstance(a, Scalar) or not isinstance(b, Scalar):
        raise TypeError("scalar_arith expects Scalars")
    if a.field != b.field:
        raise ValueError(f"mismatched fields {a.field.label} and {b.field.label}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown op {op!r}")


def scalar_inverse(a: Scalar) -> Scalar:
    return a.inverse()


def inv(c):
    """Multiplicative inverse of a kernel coefficient (mpq or Scalar)."""
    if isinstance(c, Scalar):
        return c.inverse()
    if not c:
        raise ZeroDivisionError("inverse of zero")
    return 1 / mpq(c)


def is_unit_one(c):
    return c == 1


QQ = FieldSpec((0, 1), "QQ")


def cyclotomic_field(m: int) -> FieldSpec:
    """Q(w) for a primitive m-th root of unity w (m >= 1)."""
    import sympy

    t = sympy.Symbol("t")
    coeffs = sympy.Poly(sympy.cyclotomic_poly(m, t), t).all_coeffs()[::-1]
    return FieldSpec([int(c) for c in coeffs], "QQ" if m <= 2 else f"QQ(zeta{m})")


def format_coeff(c) -> str:
    if isinstance(c, Scalar):
        if c.is_rational():
            return str(c.coeffs[0])
        return "(" + str(c) + ")"
    return str(c)
