"""Biquadratic fields ``Q(sqrt(a), sqrt(b))`` and class number one by Minkowski's bound.

Elements are 4-tuples of rationals over ``1, A, B, AB`` with ``A^2 = a``
and ``B^2 = b``. The ring of integers is the lattice generated by the
three quadratic rings of integers and their products, enlarged by every
integral half-sum of basis vectors until nothing changes.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

import sympy
from sympy.matrices.normalforms import hermite_normal_form
from tqdm import tqdm

from ..exceptions import NumberFieldError, SearchInconclusive
from ..reports import Provenance, VerificationReport
from .quadratic import kronecker, quadratic_discriminant, sqrt_upper, squarefree_part

Vec = Tuple[Fraction, Fraction, Fraction, Fraction]

PI_LOWER = Fraction("3.14159")
DEFAULT_SEARCH_HEIGHT = 50
# primes whose ideals lie above the Minkowski bound are only searched this far
OPTIONAL_SEARCH_HEIGHT = 4


@dataclass(frozen=True)
class PrimeIdealFactor:
    q: int
    e: int
    f: int
    g: int
    required: bool
    generator: Optional[List[int]] = None

    def to_dict(self) -> Dict[str, object]:
        return {
            "q": self.q,
            "e": self.e,
            "f": self.f,
            "g": self.g,
            "norm": self.q**self.f,
            "required": self.required,
            "generator": self.generator,
        }


class BiquadraticField:
    def __init__(self, a: int, b: int) -> None:
        a, b = squarefree_part(a), squarefree_part(b)
        if a == 1 or b == 1 or a == b:
            raise NumberFieldError(f"Q(sqrt({a}), sqrt({b})) is not biquadratic")
        self.a, self.b = a, b
        self.c = squarefree_part(a * b)
        # AB = m sqrt(c)
        self.m = isqrt_exact(a * b // self.c)
        self.subfields = (a, b, self.c)
        logging.debug("biquadratic field %s with subfields %s", self, self.subfields)

    def __repr__(self) -> str:
        return f"Q(sqrt({self.a}),sqrt({self.b}))"

    @property
    def degree(self) -> int:
        return 4

    @property
    def signature(self) -> Tuple[int, int]:
        return (4, 0) if self.a > 0 and self.b > 0 else (0, 2)

    # -- arithmetic -------------------------------------------------------
    def mul(self, u: Vec, v: Vec) -> Vec:
        a, b = self.a, self.b
        return (
            u[0] * v[0] + a * u[1] * v[1] + b * u[2] * v[2] + a * b * u[3] * v[3],
            u[0] * v[1] + u[1] * v[0] + b * (u[2] * v[3] + u[3] * v[2]),
            u[0] * v[2] + u[2] * v[0] + a * (u[1] * v[3] + u[3] * v[1]),
            u[0] * v[3] + u[3] * v[0] + u[1] * v[2] + u[2] * v[1],
        )

    def trace(self, u: Vec) -> Fraction:
        return 4 * u[0]

    def norm(self, u: Vec) -> Fraction:
        """``N(P + Q B) = N_{Q(A)/Q}(P^2 - b Q^2)``."""
        a, b = self.a, self.b
        s = u[0] ** 2 + a * u[1] ** 2 - b * (u[2] ** 2 + a * u[3] ** 2)
        t = 2 * u[0] * u[1] - 2 * b * u[2] * u[3]
        return s * s - a * t * t

    def multiplication_matrix(self, u: Vec) -> sympy.Matrix:
        cols = [self.mul(u, e) for e in _standard_basis()]
        return sympy.Matrix(4, 4, lambda i, j: _rational(cols[j][i]))

    def is_integral(self, u: Vec) -> bool:
        x = sympy.Symbol("x")
        coeffs = self.multiplication_matrix(u).charpoly(x).all_coeffs()
        return all(c.is_integer for c in coeffs)

    # -- ring of integers --------------------------------------------------
    def _quadratic_integer(self, d: int) -> Vec:
        """``omega_d`` of the subfield ``Q(sqrt(d))`` in ``1, A, B, AB`` coordinates."""
        one, zero = Fraction(1), Fraction(0)
        if d == self.a:
            root: Vec = (zero, one, zero, zero)
        elif d == self.b:
            root = (zero, zero, one, zero)
        else:
            root = (zero, zero, zero, Fraction(1, self.m))
        if d % 4 == 1:
            return (Fraction(1, 2), root[1] / 2, root[2] / 2, root[3] / 2)
        return root

    @staticmethod
    def _lattice_basis(generators: Sequence[Vec]) -> List[Vec]:
        denom = 1
        for g in generators:
            for x in g:
                denom = sympy.ilcm(denom, x.denominator)
        A = sympy.Matrix(4, len(generators), lambda i, j: int(generators[j][i] * denom))
        H = hermite_normal_form(A)
        if H.shape != (4, 4):
            raise NumberFieldError(f"order generators span rank {H.shape[1]}, expected 4")
        return [tuple(Fraction(int(H[i, j]), int(denom)) for i in range(4)) for j in range(4)]  # type: ignore[misc]

    @cached_property
    def integral_basis(self) -> List[Vec]:
        omegas = [self._quadratic_integer(d) for d in self.subfields]
        gens: List[Vec] = [_standard_basis()[0], *omegas]
        gens += [self.mul(x, y) for x, y in itertools.combinations(omegas, 2)]
        basis = self._lattice_basis(gens)
        changed = True
        while changed:
            changed = False
            for mask in itertools.product((0, 1), repeat=4):
                if not any(mask):
                    continue
                half = tuple(
                    sum((Fraction(c, 2) * v[i] for c, v in zip(mask, basis)), Fraction(0))
                    for i in range(4)
                )
                candidate = self._lattice_basis(basis + [half])  # type: ignore[list-item]
                if candidate != basis and self.is_integral(half):  # type: ignore[arg-type]
                    basis = candidate
                    changed = True
                    break
        return basis

    def basis_discriminant(self, basis: Sequence[Vec]) -> int:
        M = sympy.Matrix(
            4, 4, lambda i, j: _rational(self.trace(self.mul(basis[i], basis[j])))
        )
        return int(M.det())

    @cached_property
    def discriminant(self) -> int:
        """Product of the subfield discriminants, checked against the integral basis."""
        product = 1
        for d in self.subfields:
            product *= quadratic_discriminant(d)
        from_basis = self.basis_discriminant(self.integral_basis)
        if from_basis != product:
            raise NumberFieldError(
                f"integral basis discriminant {from_basis} != subfield product {product}"
            )
        return product

    def element(self, coords: Sequence[int]) -> Vec:
        out = [Fraction(0)] * 4
        for c, v in zip(coords, self.integral_basis):
            for i in range(4):
                out[i] += c * v[i]
        return tuple(out)  # type: ignore[return-value]

    def residue_count(self, coords: Sequence[int]) -> int:
        """``|O / (alpha)|`` from the multiplication matrix on the integral basis."""
        alpha = self.element(coords)
        B = sympy.Matrix(4, 4, lambda i, j: _rational(self.integral_basis[j][i]))
        M = B.inv() * self.multiplication_matrix(alpha) * B
        if not all(x.is_integer for x in M):
            raise NumberFieldError(f"{list(coords)} does not act integrally")
        return abs(int(M.det()))

    # -- primes -------------------------------------------------------------
    def minkowski_bound(self) -> Fraction:
        """``4!/4^4 (4/pi)^r2 sqrt|disc|``, rounded up."""
        r2 = self.signature[1]
        return (
            Fraction(factorial(4), 4**4)
            * (4 / PI_LOWER) ** r2
            * sqrt_upper(abs(self.discriminant))
        )

    def decomposition(self, q: int) -> Tuple[int, int, int]:
        """``(e, f, g)`` of ``q`` from its behaviour in the three subfields."""
        symbols = [kronecker(quadratic_discriminant(d), q) for d in self.subfields]
        ramified = symbols.count(0)
        if ramified == 3:
            return 4, 1, 1
        if ramified == 2:
            unramified = next(s for s in symbols if s != 0)
            return (2, 1, 2) if unramified == 1 else (2, 2, 1)
        if ramified == 1:
            raise NumberFieldError(f"{q} ramifies in exactly one quadratic subfield")
        return (1, 2, 2) if -1 in symbols else (1, 1, 4)

    def subfield_splitting(self, q: int) -> Dict[str, str]:
        names = {1: "split", -1: "inert", 0: "ramified"}
        return {
            f"Q(sqrt({d}))": names[kronecker(quadratic_discriminant(d), q)]
            for d in self.subfields
        }

    def find_generator(self, target: int, height: int) -> Optional[List[int]]:
        """Integral-basis coordinates of an element with ``|N| = target``."""
        for h in range(1, height + 1):
            for coords in itertools.product(range(-h, h + 1), repeat=4):
                if max(abs(c) for c in coords) != h:
                    continue
                if abs(self.norm(self.element(coords))) == target:
                    return list(coords)
        return None


def _rational(x: Fraction) -> sympy.Rational:
    return sympy.Rational(x.numerator, x.denominator)


def isqrt_exact(n: int) -> int:
    r = sqrt_upper(n)
    if r * r != n:
        raise NumberFieldError(f"{n} is not a square")
    return r


def _standard_basis() -> List[Vec]:
    one, zero = Fraction(1), Fraction(0)
    return [
        (one, zero, zero, zero),
        (zero, one, zero, zero),
        (zero, zero, one, zero),
        (zero, zero, zero, one),
    ]


def parse_field_spec(text: str) -> Tuple[int, ...]:
    """``Q(sqrt(a))`` or ``Q(sqrt(a),sqrt(b))``; returns the radicands."""
    cleaned = text.replace(" ", "")
    if not (cleaned.startswith("Q(") and cleaned.endswith(")")):
        raise NumberFieldError(f"expected Q(sqrt(a)) or Q(sqrt(a),sqrt(b)), got {text!r}")
    parts = cleaned[2:-1].split(",")
    out = []
    for part in parts:
        if not (part.startswith("sqrt(") and part.endswith(")")):
            raise NumberFieldError(f"bad generator {part!r} in {text!r}")
        try:
            out.append(int(part[5:-1]))
        except ValueError as exc:
            raise NumberFieldError(f"bad radicand in {part!r}") from exc
    if len(out) not in (1, 2):
        raise NumberFieldError(f"{text!r} must have one or two square roots")
    return tuple(out)


def class_number_one_check(
    field: BiquadraticField,
    height: int = DEFAULT_SEARCH_HEIGHT,
    optional_height: int = OPTIONAL_SEARCH_HEIGHT,
    progress: bool = False,
) -> VerificationReport:
    """Every prime ideal of norm below the Minkowski bound is principal.

    One generator per rational prime suffices: the Galois group permutes the
    primes above ``q`` transitively.
    """
    report = VerificationReport(
        check_id="classno",
        claim=f"{field} has class number 1",
        inputs={"a": field.a, "b": field.b, "search_height": height},
    )
    disc = field.discriminant
    bound = field.minkowski_bound()
    report.add_check(
        "integral_basis_discriminant",
        field.basis_discriminant(field.integral_basis),
        disc,
        Provenance.DERIVED,
    )
    factors: List[PrimeIdealFactor] = []
    primes = list(sympy.primerange(2, int(bound) + 1))
    for q in tqdm(primes, desc="primes", disable=not progress):
        e, f, g = field.decomposition(q)
        report.add_check(f"efg.q{q}", e * f * g, 4, Provenance.TRIVIAL)
        norm = q**f
        required = norm <= bound
        generator = field.find_generator(norm, height if required else optional_height)
        if generator is not None:
            report.add_check(
                f"generator.q{q}.residue_count",
                field.residue_count(generator),
                norm,
                Provenance.DERIVED,
            )
        elif required:
            raise SearchInconclusive(
                f"no element of norm {norm} above {q} in {field} up to height {height}"
            )
        factors.append(PrimeIdealFactor(q, e, f, g, required, generator))
        logging.info("%s: q=%d (e,f,g)=(%d,%d,%d) generator %s", field, q, e, f, g, generator)

    principal = all(f.generator is not None for f in factors if f.required)
    report.add_check("class_number", 1 if principal else None, 1, Provenance.REFERENCE)
    report.data.update(
        {
            "discriminant": disc,
            "signature": list(field.signature),
            "minkowski_bound": float(bound),
            "integral_basis": [[str(x) for x in v] for v in field.integral_basis],
            "primes": [f.to_dict() for f in factors],
            "subfield_splitting": {str(q): field.subfield_splitting(q) for q in primes},
        }
    )
    return report


__all__ = [
    "BiquadraticField",
    "PrimeIdealFactor",
    "class_number_one_check",
    "parse_field_spec",
]
