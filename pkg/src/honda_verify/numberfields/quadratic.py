"""Quadratic fields: discriminants, splitting of primes and class numbers."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Dict, List, Optional, Tuple

import sympy
from sympy.ntheory import legendre_symbol

from ..exceptions import NumberFieldError, SearchInconclusive
from ..reports import Provenance, VerificationReport

MAX_CLASS_NUMBER_DISCRIMINANT = 10**4
DEFAULT_SEARCH_HEIGHT = 50


def squarefree_part(n: int) -> int:
    """The squarefree ``d`` with ``n = m^2 d``, keeping the sign."""
    if n == 0:
        raise NumberFieldError("0 has no squarefree part")
    out = -1 if n < 0 else 1
    for q, e in sympy.factorint(abs(n)).items():
        if e % 2:
            out *= q
    return out


def quadratic_discriminant(d: int) -> int:
    if d in (0, 1) or squarefree_part(d) != d:
        raise NumberFieldError(f"d = {d} is not a squarefree integer other than 0, 1")
    return d if d % 4 == 1 else 4 * d


def kronecker(D: int, q: int) -> int:
    """``(D / q)`` for a prime ``q``."""
    if D % q == 0:
        return 0
    if q == 2:
        return 1 if D % 8 in (1, 7) else -1
    return legendre_symbol(D % q, q)


def splitting_type(D: int, q: int) -> str:
    return {1: "split", -1: "inert", 0: "ramified"}[kronecker(D, q)]


def sqrt_upper(n: int) -> int:
    """Smallest integer ``>= sqrt(n)``."""
    r = isqrt(n)
    return r if r * r == n else r + 1


@dataclass(frozen=True)
class QuadraticFieldData:
    d: int
    discriminant: int
    integral_basis: Tuple[str, str]
    signature: Tuple[int, int]
    class_number: Optional[int] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "d": self.d,
            "discriminant": self.discriminant,
            "integral_basis": list(self.integral_basis),
            "signature": list(self.signature),
            "class_number": self.class_number,
        }


def quadratic_field_data(d: int, class_number: Optional[int] = None) -> QuadraticFieldData:
    D = quadratic_discriminant(d)
    omega = f"(1+sqrt({d}))/2" if d % 4 == 1 else f"sqrt({d})"
    signature = (2, 0) if d > 0 else (0, 1)
    return QuadraticFieldData(d, D, ("1", omega), signature, class_number)


def reduced_forms(D: int) -> List[Tuple[int, int, int]]:
    """Primitive reduced forms ``(a, b, c)`` with ``b^2 - 4ac = D < 0``."""
    if D >= 0 or D % 4 not in (0, 1):
        raise NumberFieldError(f"{D} is not a negative discriminant")
    forms = []
    a = 1
    while 3 * a * a <= -D:
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a):
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            if gcd(gcd(a, abs(b)), c) == 1:
                forms.append((a, b, c))
        a += 1
    return forms


def _norm_form(d: int, x: int, y: int) -> Fraction:
    """Norm of ``x + y * omega``."""
    if d % 4 == 1:
        # (x + y/2)^2 - d (y/2)^2
        return Fraction((2 * x + y) ** 2 - d * y * y, 4)
    return Fraction(x * x - d * y * y)


def find_element_of_norm(d: int, target: int, height: int) -> Optional[Tuple[int, int]]:
    """``(x, y)`` with ``|N(x + y omega)| = target``, by increasing height."""
    for h in range(height + 1):
        for x in range(-h, h + 1):
            for y in (range(-h, h + 1) if abs(x) == h else (-h, h)):
                if abs(_norm_form(d, x, y)) == target:
                    return x, y
    return None


def quad_class_number(d: int, height: int = DEFAULT_SEARCH_HEIGHT) -> int:
    """Class number of ``Q(sqrt(d))``.

    Imaginary fields count reduced forms. Real fields check that every prime
    ideal of norm below the Minkowski bound is principal and so only ever
    return 1; an unfinished search raises :class:`SearchInconclusive`.
    """
    D = quadratic_discriminant(d)
    if abs(D) > MAX_CLASS_NUMBER_DISCRIMINANT:
        raise NumberFieldError(f"|disc| = {abs(D)} exceeds {MAX_CLASS_NUMBER_DISCRIMINANT}")
    if d < 0:
        h = len(reduced_forms(D))
        logging.debug("h(%d) = %d from reduced forms", d, h)
        return h
    bound = Fraction(sqrt_upper(D), 2)
    for q in sympy.primerange(2, int(bound) + 1):
        kind = splitting_type(D, q)
        if kind == "inert":
            continue
        if find_element_of_norm(d, q, height) is None:
            raise SearchInconclusive(
                f"no element of norm +-{q} in Q(sqrt({d})) up to height {height}"
            )
    logging.debug("h(%d) = 1, Minkowski bound %s", d, bound)
    return 1


def quadratic_class_number_report(d: int, height: int = DEFAULT_SEARCH_HEIGHT) -> VerificationReport:
    h = quad_class_number(d, height)
    data = quadratic_field_data(d, h)
    report = VerificationReport(
        check_id="classno",
        claim=f"class number of Q(sqrt({d}))",
        inputs={"d": d, "search_height": height},
    )
    report.add_check("class_number_positive", h >= 1, True, Provenance.TRIVIAL)
    report.data.update(data.to_dict())
    return report


__all__ = [
    "QuadraticFieldData",
    "quadratic_class_number_report",
    "find_element_of_norm",
    "kronecker",
    "quad_class_number",
    "quadratic_discriminant",
    "quadratic_field_data",
    "reduced_forms",
    "splitting_type",
    "sqrt_upper",
    "squarefree_part",
]
