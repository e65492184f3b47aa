"""Prime-field and extension-field elements with canonical representatives.

PFieldElem carries a checked prime modulus; ExtFieldElem carries a checked
monic irreducible modulus over F_p and a coefficient tuple of length deg(h).
Both are immutable, hashable, and support the ring/field operators, so generic
polynomial evaluation works over either.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import is_prime
from .unipoly import UniPoly, is_irreducible


@lru_cache(maxsize=None)
def _checked_prime(p: int) -> bool:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return True


@lru_cache(maxsize=None)
def _checked_modulus(h: UniPoly) -> bool:
    if not h.is_monic() or not is_irreducible(h):
        raise ValueError("modulus must be monic irreducible over F_p")
    return True


@dataclass(frozen=True)
class PFieldElem:
    """An element of F_p, stored as the least nonnegative residue."""

    p: int
    value: int

    def __post_init__(self):
        _checked_prime(self.p)
        object.__setattr__(self, "value", self.value % self.p)

    @classmethod
    def of(cls, p: int, n: int) -> "PFieldElem":
        return cls(p, n)

    def is_zero(self) -> bool:
        return self.value == 0

    def __add__(self, other: "PFieldElem") -> "PFieldElem":
        self._check(other)
        return PFieldElem(self.p, self.value + other.value)

    def __sub__(self, other: "PFieldElem") -> "PFieldElem":
        self._check(other)
        return PFieldElem(self.p, self.value - other.value)

    def __neg__(self) -> "PFieldElem":
        return PFieldElem(self.p, -self.value)

    def __mul__(self, other: "PFieldElem") -> "PFieldElem":
        self._check(other)
        return PFieldElem(self.p, self.value * other.value)

    def __pow__(self, e: int) -> "PFieldElem":
        if e < 0:
            return self.inverse() ** (-e)
        return PFieldElem(self.p, pow(self.value, e, self.p))

    def inverse(self) -> "PFieldElem":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return PFieldElem(self.p, pow(self.value, self.p - 2, self.p))

    def __truediv__(self, other: "PFieldElem") -> "PFieldElem":
        return self * other.inverse()

    def _check(self, other: "PFieldElem") -> None:
        if self.p != other.p:
            raise ValueError("field mismatch")

    def __repr__(self) -> str:
        return f"F{self.p}({self.value})"


@dataclass(frozen=True)
class ExtFieldElem:
    """An element of F_p[x]/(h), as coefficients of length deg(h), lowest first."""

    p: int
    modulus: UniPoly
    coeffs: tuple[int, ...]

    def __post_init__(self):
        _checked_prime(self.p)
        if self.modulus.char != self.p:
            raise ValueError("modulus characteristic mismatch")
        _checked_modulus(self.modulus)
        d = self.modulus.degree
        cs = tuple(c % self.p for c in self.coeffs)
        if len(cs) > d:
            cs = tuple((UniPoly(self.p, cs) % self.modulus).coeffs)
        cs = cs + (0,) * (d - len(cs))
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def of(cls, modulus: UniPoly, n: int) -> "ExtFieldElem":
        return cls(modulus.char, modulus, (n,))

    @classmethod
    def from_poly(cls, modulus: UniPoly, f: UniPoly) -> "ExtFieldElem":
        return cls(modulus.char, modulus, f.coeffs)

    @property
    def field_size(self) -> int:
        return self.p**self.modulus.degree

    def as_poly(self) -> UniPoly:
        return UniPoly(self.p, self.coeffs)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: "ExtFieldElem") -> "ExtFieldElem":
        self._check(other)
        return ExtFieldElem(self.p, self.modulus, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "ExtFieldElem") -> "ExtFieldElem":
        self._check(other)
        return ExtFieldElem(self.p, self.modulus, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "ExtFieldElem":
        return ExtFieldElem(self.p, self.modulus, tuple(-a for a in self.coeffs))

    def __mul__(self, other: "ExtFieldElem") -> "ExtFieldElem":
        self._check(other)
        prod = self.as_poly() * other.as_poly()
        return ExtFieldElem(self.p, self.modulus, (prod % self.modulus).coeffs)

    def __pow__(self, e: int) -> "ExtFieldElem":
        if e < 0:
            return self.inverse() ** (-e)
        acc = self.as_poly().powmod(e, self.modulus)
        return ExtFieldElem(self.p, self.modulus, acc.coeffs)

    def inverse(self) -> "ExtFieldElem":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field_size - 2)

    def __truediv__(self, other: "ExtFieldElem") -> "ExtFieldElem":
        return self * other.inverse()

    def _check(self, other: "ExtFieldElem") -> None:
        if self.p != other.p or self.modulus != other.modulus:
            raise ValueError("field mismatch")

    def __repr__(self) -> str:
        return f"F{self.p}^{self.modulus.degree}({self.as_poly().render()})"
