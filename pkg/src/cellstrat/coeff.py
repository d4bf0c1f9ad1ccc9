"""Exact scalars: univariate polynomials in delta over Q, and rationals.

Polynomials are immutable tuples of Fractions in ascending degree with no
trailing zeros.  Rationals are plain ``fractions.Fraction`` values, which are
already kept in lowest terms with a positive denominator.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union


class DegenerateParameterError(ValueError):
    """Raised when an operation needs 1/delta but delta is specialized to 0."""

    def __init__(self, message: str = "degenerate parameter"):
        super().__init__(message)


class MixedRepresentationError(TypeError):
    pass


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    if isinstance(c, str):
        return Fraction(c)
    raise TypeError(f"not an exact coefficient: {c!r}")


class Poly:
    """A polynomial in delta with rational coefficients."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs=()):
        cs = [_frac(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, coeffs: tuple) -> "Poly":
        p = object.__new__(cls)
        p.coeffs = coeffs
        p._hash = None
        return p

    @classmethod
    def constant(cls, c) -> "Poly":
        c = _frac(c)
        return cls._raw((c,) if c else ())

    @classmethod
    def delta(cls) -> "Poly":
        return cls._raw((Fraction(0), Fraction(1)))

    @classmethod
    def monomial(cls, k: int, c=1) -> "Poly":
        c = _frac(c)
        if not c:
            return ZERO
        return cls._raw((Fraction(0),) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_term(self) -> Fraction:
        return self.coeffs[0] if self.coeffs else Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)):
            return Poly.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        res = list(a)
        for k, c in enumerate(b):
            res[k] += c
        while res and res[-1] == 0:
            res.pop()
        return Poly._raw(tuple(res))

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return ZERO
            return Poly._raw(tuple(c * other for c in self.coeffs))
        if not isinstance(other, Poly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        res = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    res[i + j] += x * y
        return Poly._raw(tuple(res))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = ONE
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def shift(self, k: int) -> "Poly":
        """Multiply by delta**k (k may be negative when the division is exact)."""
        if k >= 0:
            return Poly._raw((Fraction(0),) * k + self.coeffs) if self.coeffs else ZERO
        if any(self.coeffs[:-k]):
            raise ValueError("not divisible by the requested power of delta")
        return Poly._raw(self.coeffs[-k:])

    def divmod(self, other: "Poly"):
        """Euclidean division over Q."""
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        lead = other.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k]
            if c:
                c = c / lead
                quot[k - dq] = c
                for j, y in enumerate(other.coeffs):
                    rem[k - dq + j] -= c * y
        return Poly(quot), Poly(rem)

    def exact_div(self, other):
        if isinstance(other, (int, Fraction)):
            return Poly._raw(tuple(c / other for c in self.coeffs))
        q, r = self.divmod(other)
        if r:
            raise ValueError("inexact polynomial division")
        return q

    def __call__(self, q) -> Fraction:
        q = _frac(q)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == ((_frac(other),) if other else ())
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("Poly", self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Poly({format_poly(self)})"

    def __str__(self):
        return format_poly(self)


ZERO = Poly._raw(())
ONE = Poly._raw((Fraction(1),))
DELTA = Poly.delta()

Scalar = Union[Poly, Fraction]


def format_poly(p: Poly, var: str = "δ") -> str:
    if not p.coeffs:
        return "0"
    terms = []
    for k in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}{mono}" if a.denominator == 1 else f"({a}){mono}"
        terms.append((sign, body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


def format_scalar(x) -> str:
    if isinstance(x, Poly):
        return format_poly(x)
    return str(_frac(x))


def _kind(x) -> str:
    if isinstance(x, Poly):
        return "poly"
    if isinstance(x, (int, Fraction)):
        return "rat"
    raise TypeError(f"not a scalar: {x!r}")


def add(a: Scalar, b: Scalar) -> Scalar:
    ka, kb = _kind(a), _kind(b)
    if ka != kb:
        raise MixedRepresentationError("mixed polynomial/rational operands")
    if ka == "poly":
        return a + b
    return _frac(a) + _frac(b)


def mul(a: Scalar, b: Scalar) -> Scalar:
    ka, kb = _kind(a), _kind(b)
    if ka != kb:
        raise MixedRepresentationError("mixed polynomial/rational operands")
    if ka == "poly":
        return a * b
    return _frac(a) * _frac(b)


def specialize(p: Poly, q) -> Fraction:
    if not isinstance(p, Poly):
        raise TypeError("specialize expects a polynomial")
    return p(q)


def inverse_power_of_delta(l: int, q) -> Fraction:
    """q**(-l) for a nonzero rational q."""
    if l < 0:
        raise ValueError("negative exponent")
    q = _frac(q)
    if q == 0:
        raise DegenerateParameterError()
    return Fraction(1) / q**l


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def to_json(x: Scalar) -> dict:
    if isinstance(x, Poly):
        return {"poly": [str(c) for c in x.coeffs]}
    return {"rat": str(_frac(x))}


def from_json(obj: dict) -> Scalar:
    if "poly" in obj:
        return Poly(Fraction(c) for c in obj["poly"])
    if "rat" in obj:
        return Fraction(obj["rat"])
    raise ValueError(f"unrecognised scalar encoding: {obj!r}")


class ScalarDomain:
    """Where computations live: symbolic delta, or delta specialized to q.

    Module and algebra code only ever needs integers, powers of delta and
    field operations, so it talks to a domain instead of branching on types.
    """

    __slots__ = ("q", "_pows")

    def __init__(self, q=None):
        if q is not None:
            q = _frac(q)
        self.q = q
        self._pows = {}

    @classmethod
    def symbolic(cls) -> "ScalarDomain":
        return cls(None)

    @classmethod
    def at(cls, q) -> "ScalarDomain":
        return cls(q)

    @property
    def is_symbolic(self) -> bool:
        return self.q is None

    @property
    def zero(self):
        return ZERO if self.q is None else Fraction(0)

    @property
    def one(self):
        return ONE if self.q is None else Fraction(1)

    def const(self, c):
        return Poly.constant(c) if self.q is None else _frac(c)

    def delta_pow(self, j: int):
        v = self._pows.get(j)
        if v is None:
            v = Poly.monomial(j) if self.q is None else self.q**j
            self._pows[j] = v
        return v

    def inv_delta_pow(self, l: int):
        if self.q is None:
            raise ValueError("symbolic domain cannot invert delta; track the denominator instead")
        return inverse_power_of_delta(l, self.q)

    def convert(self, x):
        """Bring a polynomial or rational into this domain."""
        if self.q is None:
            if isinstance(x, Poly):
                return x
            return Poly.constant(x)
        if isinstance(x, Poly):
            return x(self.q)
        return _frac(x)

    def require_nondegenerate(self):
        if self.q is not None and self.q == 0:
            raise DegenerateParameterError()

    def label(self) -> str:
        return "generic" if self.q is None else str(self.q)

    def __repr__(self):
        return f"ScalarDomain({self.label()})"
