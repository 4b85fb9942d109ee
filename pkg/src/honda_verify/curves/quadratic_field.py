"""Exact arithmetic in ``Q(sqrt(d))`` and valuations at its odd primes."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Optional, Union

import sympy
from sympy.ntheory import legendre_symbol, sqrt_mod

from ..algebra.finite_field import GF, FiniteField
from ..exceptions import CurveError, CurveSpecError, NonIntegralModel

Scalar = Union[int, Fraction, "QuadElement"]


def _squarefree(d: int) -> bool:
    return d != 0 and all(e == 1 for e in sympy.factorint(abs(d)).values())


class QuadraticField:
    """``Q(sqrt(d))`` for squarefree ``d``; ``d = 1`` stands for ``Q`` itself."""

    def __init__(self, d: int) -> None:
        if d != 1 and not _squarefree(d):
            raise CurveError(f"d = {d} is not a squarefree integer")
        self.d = d

    def __repr__(self) -> str:
        return "Q" if self.is_rational_field else f"Q(sqrt({self.d}))"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, QuadraticField) and other.d == self.d

    def __hash__(self) -> int:
        return hash(("QuadraticField", self.d))

    @property
    def is_rational_field(self) -> bool:
        return self.d == 1

    @property
    def degree(self) -> int:
        return 1 if self.is_rational_field else 2

    @property
    def discriminant(self) -> int:
        if self.is_rational_field:
            return 1
        return self.d if self.d % 4 == 1 else 4 * self.d

    def __call__(self, x: Scalar, y: Scalar = 0) -> "QuadElement":
        if isinstance(x, QuadElement):
            return x
        return QuadElement(self, Fraction(x), Fraction(y))

    @property
    def sqrt(self) -> "QuadElement":
        if self.is_rational_field:
            raise CurveError("Q has no square root generator")
        return QuadElement(self, Fraction(0), Fraction(1))

    def parse(self, text: str) -> "QuadElement":
        """Parse ``x+y*s`` (``s`` = sqrt(d)); ``sqrt(d)`` is accepted as well."""
        s = sympy.Symbol("s")
        cleaned = text.strip().replace(f"sqrt({self.d})", "s")
        try:
            expr = sympy.sympify(cleaned, locals={"s": s})
            poly = sympy.Poly(sympy.expand(expr), s)
        except (sympy.SympifyError, sympy.PolynomialError, TypeError) as exc:
            raise CurveSpecError(f"cannot parse field element {text!r}") from exc
        value = self(0)
        gen = self(0, 1) if not self.is_rational_field else None
        for (power,), coeff in poly.terms():
            if not coeff.is_Rational:
                raise CurveSpecError(f"coefficient {coeff} in {text!r} is not rational")
            c = self(Fraction(int(coeff.p), int(coeff.q)))
            if power == 0:
                value = value + c
                continue
            if gen is None:
                raise CurveSpecError(f"{text!r} uses s over Q")
            value = value + c * gen**power
        return value


@dataclass(frozen=True)
class QuadElement:
    field: QuadraticField
    x: Fraction
    y: Fraction

    def _coerce(self, other: Scalar) -> "QuadElement":
        if isinstance(other, QuadElement):
            if other.field != self.field:
                raise CurveError(f"elements of {self.field} and {other.field}")
            return other
        return QuadElement(self.field, Fraction(other), Fraction(0))

    def __add__(self, other: Scalar) -> "QuadElement":
        o = self._coerce(other)
        return QuadElement(self.field, self.x + o.x, self.y + o.y)

    __radd__ = __add__

    def __neg__(self) -> "QuadElement":
        return QuadElement(self.field, -self.x, -self.y)

    def __sub__(self, other: Scalar) -> "QuadElement":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "QuadElement":
        return self._coerce(other) - self

    def __mul__(self, other: Scalar) -> "QuadElement":
        o = self._coerce(other)
        d = self.field.d
        return QuadElement(
            self.field, self.x * o.x + d * self.y * o.y, self.x * o.y + self.y * o.x
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadElement":
        return QuadElement(self.field, self.x, -self.y)

    def norm(self) -> Fraction:
        return self.x * self.x - self.field.d * self.y * self.y

    def trace(self) -> Fraction:
        return 2 * self.x

    def inverse(self) -> "QuadElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero")
        c = self.conjugate()
        return QuadElement(self.field, c.x / n, c.y / n)

    def __truediv__(self, other: Scalar) -> "QuadElement":
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other: Scalar) -> "QuadElement":
        return self._coerce(other) * self.inverse()

    def __pow__(self, n: int) -> "QuadElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        if not isinstance(other, QuadElement):
            return NotImplemented
        return self.field == other.field and self.x == other.x and self.y == other.y

    def __hash__(self) -> int:
        return hash((self.field.d, self.x, self.y))

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_rational(self) -> bool:
        return self.y == 0

    def is_integral(self) -> bool:
        return self.trace().denominator == 1 and self.norm().denominator == 1

    def __repr__(self) -> str:
        if self.y == 0:
            return str(self.x)
        if self.x == 0:
            return f"{self.y}*s"
        sign = "+" if self.y > 0 else "-"
        return f"{self.x}{sign}{abs(self.y)}*s"


def _v(n: Union[int, Fraction], q: int) -> Optional[int]:
    """``q``-adic valuation of a rational; ``None`` for zero."""
    n = Fraction(n)
    if n == 0:
        return None
    return sympy.multiplicity(q, n.numerator) - sympy.multiplicity(q, n.denominator)


@lru_cache(maxsize=None)
def _root_mod_power(d: int, q: int, k: int, residue: int) -> int:
    """The root of ``X^2 = d`` mod ``q^k`` that reduces to ``residue`` mod ``q``."""
    for root in sqrt_mod(d, q**k, all_roots=True):
        if root % q == residue:
            return root
    raise CurveError(f"no square root of {d} mod {q}^{k} above {residue}")


class LocalPrime:
    """A prime ideal of ``Q(sqrt(d))`` above an odd rational prime ``q``.

    Valuations are normalized so a uniformizer has valuation 1; the
    ramification index ``e`` is therefore ``v(q)``. For split primes
    ``index`` picks the root of ``d`` mod ``q`` (0 for the smaller).
    """

    def __init__(self, field: QuadraticField, q: int, index: int = 0) -> None:
        if q == 2 or not sympy.isprime(q):
            raise CurveError(f"only odd rational primes are supported, got {q}")
        self.field = field
        self.q = q
        self.index = index
        if field.is_rational_field:
            self.kind = "rational"
        elif field.d % q == 0:
            self.kind = "ramified"
        elif legendre_symbol(field.d % q, q) == 1:
            self.kind = "split"
        else:
            self.kind = "inert"
        self.root: Optional[int] = None
        if self.kind == "split":
            roots = sorted(sqrt_mod(field.d, q, all_roots=True))
            self.root = roots[index % len(roots)]
        logging.debug("prime above %d in %s is %s", q, field, self.kind)

    def __repr__(self) -> str:
        suffix = f", root={self.root}" if self.root is not None else ""
        return f"LocalPrime({self.field}, {self.q}, {self.kind}{suffix})"

    @property
    def e(self) -> int:
        return 2 if self.kind == "ramified" else 1

    @property
    def f(self) -> int:
        return 2 if self.kind == "inert" else 1

    @property
    def residue_order(self) -> int:
        return self.q**self.f

    @cached_property
    def residue_field(self) -> FiniteField:
        return GF(self.q, self.f)

    def valuation(self, a: Scalar) -> Optional[int]:
        """Normalized valuation; ``None`` means ``+infinity``."""
        a = self.field(a) if not isinstance(a, QuadElement) else a
        if a.is_zero():
            return None
        q = self.q
        if self.kind == "rational" or a.y == 0:
            vx = _v(a.x, q)
            return None if vx is None else self.e * vx
        if self.kind == "inert":
            vals = [v for v in (_v(a.x, q), _v(a.y, q)) if v is not None]
            return min(vals)
        if self.kind == "ramified":
            vals = [2 * v for v in [_v(a.x, q)] if v is not None]
            vy = _v(a.y, q)
            if vy is not None:
                vals.append(2 * vy + 1)
            return min(vals)
        # split: v_q(x + y r) in Z_q, bounded by v_q of the norm
        denom = a.x.denominator * a.y.denominator
        num_x = int(a.x * denom)
        num_y = int(a.y * denom)
        bound = _v(a.norm() * denom * denom, q) or 0
        k = bound + 1
        r = _root_mod_power(self.field.d, q, k, self.root)
        value = (num_x + num_y * r) % q**k
        vq = sympy.multiplicity(q, value) if value else k
        return vq - sympy.multiplicity(q, denom)

    @property
    def uniformizer(self) -> QuadElement:
        """``sqrt(d)`` at a ramified prime, ``q`` otherwise."""
        return self.field.sqrt if self.kind == "ramified" else self.field(self.q)

    def reduce(self, a: Scalar) -> int:
        """Image of a ``v``-integral element in the residue field."""
        a = self.field(a) if not isinstance(a, QuadElement) else a
        v = self.valuation(a)
        if v is not None and v < 0:
            raise NonIntegralModel(f"{a} has negative valuation at {self}")
        q = self.q
        k = self.residue_field
        if self.kind == "split" and a.y != 0:
            # q may divide the denominators of x and y; work in Z_q via the root of d
            denom = a.x.denominator * a.y.denominator
            m = sympy.multiplicity(q, denom)
            r = _root_mod_power(self.field.d, q, m + 1, self.root)
            value = (int(a.x * denom) + int(a.y * denom) * r) % q ** (m + 1)
            return (value // q**m) * pow(denom // q**m, -1, q) % q
        x = a.x.numerator * pow(a.x.denominator, -1, q) % q
        y = a.y.numerator * pow(a.y.denominator, -1, q) % q
        if self.kind == "rational" or a.y == 0:
            return x
        if self.kind == "ramified":
            return x
        return k.add(x, k.mul(y, self.sqrt_d_residue))

    @cached_property
    def sqrt_d_residue(self) -> int:
        """A square root of ``d`` in ``GF(q^2)`` for inert primes."""
        k = self.residue_field
        target = self.field.d % self.q
        for s in k.elements():
            if k.mul(s, s) == target:
                return s
        raise CurveError(f"no square root of {self.field.d} in {k}")


def parse_field(text: str) -> QuadraticField:
    """``Q`` or ``Q(sqrt(d))``."""
    cleaned = text.replace(" ", "")
    if cleaned in ("Q", "QQ"):
        return QuadraticField(1)
    if cleaned.startswith("Q(sqrt(") and cleaned.endswith("))"):
        try:
            return QuadraticField(int(cleaned[len("Q(sqrt(") : -2]))
        except ValueError as exc:
            raise CurveSpecError(f"bad field {text!r}") from exc
    raise CurveSpecError(f"expected 'Q' or 'Q(sqrt(d))', got {text!r}")


def parse_prime(field: QuadraticField, text: str) -> LocalPrime:
    """``q`` or ``q:index`` for the second prime above a split ``q``."""
    head, _, tail = text.strip().partition(":")
    try:
        q = int(head)
        index = int(tail) if tail else 0
    except ValueError as exc:
        raise CurveSpecError(f"bad prime spec {text!r}") from exc
    return LocalPrime(field, q, index)


__all__ = [
    "QuadraticField",
    "QuadElement",
    "LocalPrime",
    "parse_field",
    "parse_prime",
]
