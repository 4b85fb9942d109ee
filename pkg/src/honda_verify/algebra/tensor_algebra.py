"""The coefficient algebra k (x) F realised as F[x]/(modulus of k)."""

from __future__ import annotations

import itertools
import logging
from functools import cached_property
from typing import Iterator, List, Sequence, Tuple

from ..exceptions import FieldMismatchError
from .finite_field import FiniteField

Element = Tuple[int, ...]


class TensorAlgebra:
    """k (x)_{F_p} F as a free F-module on ``1, x, ..., x^(a-1)``, ``a = [k:F_p]``.

    ``sigma`` is the Frobenius of the k factor: it is F-linear and sends
    ``x`` to ``x^p``.
    """

    def __init__(self, left: FiniteField, right: FiniteField) -> None:
        if left.p != right.p:
            raise FieldMismatchError(
                f"tensor factors have characteristics {left.p} and {right.p}"
            )
        self.left = left
        self.right = right
        self.p = left.p
        self.dim = left.r
        logging.debug(
            "tensor algebra GF(%d^%d) (x) GF(%d^%d)", left.p, left.r, right.p, right.r
        )

    def __repr__(self) -> str:
        return f"TensorAlgebra({self.left!r}, {self.right!r})"

    @property
    def order(self) -> int:
        return self.right.order**self.dim

    @property
    def zero(self) -> Element:
        return (0,) * self.dim

    @property
    def one(self) -> Element:
        return (1,) + (0,) * (self.dim - 1)

    def elements(self) -> Iterator[Element]:
        return itertools.product(self.right.elements(), repeat=self.dim)

    def from_right(self, c: int) -> Element:
        return (c,) + (0,) * (self.dim - 1)

    def from_left(self, a: int) -> Element:
        """Image of ``a`` in k under ``a -> a (x) 1``."""
        return tuple(self.left.coeffs(a))

    def additive_basis(self) -> List[Element]:
        """An F_p-basis of the underlying additive group."""
        basis = []
        right_basis = [self.right.from_coeffs([0] * i + [1]) for i in range(self.right.r)]
        for pos in range(self.dim):
            for b in right_basis:
                vec = [0] * self.dim
                vec[pos] = b
                basis.append(tuple(vec))
        return basis

    # -- ring structure -----------------------------------------------------------
    def add(self, a: Element, b: Element) -> Element:
        F = self.right
        return tuple(F.add(x, y) for x, y in zip(a, b))

    def neg(self, a: Element) -> Element:
        return tuple(self.right.neg(x) for x in a)

    def sub(self, a: Element, b: Element) -> Element:
        return self.add(a, self.neg(b))

    def mul(self, a: Element, b: Element) -> Element:
        F = self.right
        prod = [0] * (2 * self.dim - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        prod[i + j] = F.add(prod[i + j], F.mul(x, y))
        return self._reduce(prod)

    def _reduce(self, coeffs: List[int]) -> Element:
        F, m, d = self.right, self.left.modulus, self.dim
        coeffs = list(coeffs)
        for deg in range(len(coeffs) - 1, d - 1, -1):
            lead = coeffs[deg]
            if lead:
                for i in range(d + 1):
                    coeffs[deg - d + i] = F.sub(coeffs[deg - d + i], F.scalar(m[i], lead))
        return tuple((coeffs + [0] * d)[:d])

    # -- Frobenius of the k factor --------------------------------------------------
    @cached_property
    def _sigma_images(self) -> List[Element]:
        """``sigma(x^i) = x^(i p)`` reduced, with prime-field coefficients."""
        images = []
        for i in range(self.dim):
            monomial = [0] * (i * self.p + 1)
            monomial[-1] = 1
            images.append(self._reduce(monomial))
        return images

    def sigma(self, a: Element, k: int = 1) -> Element:
        k %= self.dim
        for _ in range(k):
            a = self._sigma_once(a)
        return a

    def sigma_inv(self, a: Element, k: int = 1) -> Element:
        return self.sigma(a, -k)

    def _sigma_once(self, a: Element) -> Element:
        F = self.right
        out = list(self.zero)
        for c, image in zip(a, self._sigma_images):
            if c:
                for pos, coeff in enumerate(image):
                    if coeff:
                        out[pos] = F.add(out[pos], F.scalar(coeff, c))
        return tuple(out)

    def sigma_order(self) -> int:
        """Order of ``sigma`` found by iterating on the generator ``x``."""
        if self.dim == 1:
            return 1
        x = tuple([0, 1] + [0] * (self.dim - 2))
        y = self.sigma(x)
        n = 1
        while y != x:
            y = self._sigma_once(y)
            n += 1
        return n

    def fixes_right(self) -> bool:
        return all(self.sigma(self.from_right(c)) == self.from_right(c) for c in self.right.elements())

    # -- F-linear maps ------------------------------------------------------------
    def image_of(self, linear_map, source: Sequence[Element] | None = None) -> set:
        """Image of an additive map, generated from an F_p-basis."""
        basis = list(source) if source is not None else self.additive_basis()
        span = {self.zero}
        for b in basis:
            v = linear_map(b)
            new = set()
            for s in span:
                acc = s
                for _ in range(self.p - 1):
                    acc = self.add(acc, v)
                    new.add(acc)
            span |= new
        return span

    def cokernel_size(self, linear_map) -> int:
        return self.order // len(self.image_of(linear_map))


__all__ = ["TensorAlgebra", "Element"]
