"""Univariate polynomials over Z or F_p, with lowest-degree-first coefficients.

The zero polynomial is the empty coefficient tuple and has degree -1.  Over a
prime characteristic, coefficients are canonical residues in [0, p).  The
irreducibility test is Rabin's deterministic criterion; enumeration of monic
irreducibles walks coefficient tuples (constant term first) in lexicographic
order, which fixes the "first irreducible" used by witness construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .algebra import factorize, is_prime, mobius
from .errors import BudgetExceeded

IRREDUCIBLE_ENUM_BUDGET = 1 << 20


@dataclass(frozen=True)
class UniPoly:
    """A polynomial in one variable over Z (char 0) or F_p (char p prime)."""

    char: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if self.char < 0 or self.char == 1:
            raise ValueError("characteristic must be 0 or a prime")
        cs = self.coeffs
        if self.char:
            cs = tuple(c % self.char for c in cs)
        while cs and cs[-1] == 0:
            cs = cs[:-1]
        object.__setattr__(self, "coeffs", cs)

    @classmethod
    def zero(cls, char: int) -> "UniPoly":
        return cls(char, ())

    @classmethod
    def const(cls, char: int, c: int) -> "UniPoly":
        return cls(char, (c,))

    @classmethod
    def x(cls, char: int) -> "UniPoly":
        return cls(char, (0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        cs = list(a)
        for i, c in enumerate(b):
            cs[i] += c
        return UniPoly(self.char, tuple(cs))

    def __neg__(self) -> "UniPoly":
        return UniPoly(self.char, tuple(-c for c in self.coeffs))

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero(self.char)
        cs = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    cs[i + j] += a * b
        return UniPoly(self.char, tuple(cs))

    def scale(self, c: int) -> "UniPoly":
        return UniPoly(self.char, tuple(c * a for a in self.coeffs))

    def shift_up(self, k: int) -> "UniPoly":
        """Multiply by x^k."""
        if not self.coeffs:
            return self
        return UniPoly(self.char, (0,) * k + self.coeffs)

    def eval_int(self, x: int) -> int:
        """Evaluate at an integer by Horner's rule (exact; reduces mod p in char p)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc % self.char if self.char else acc

    def max_abs_coeff(self) -> int:
        return max((abs(c) for c in self.coeffs), default=0)

    def content(self) -> int:
        """gcd of the coefficients (char 0), signed by the leading coefficient."""
        if not self.coeffs:
            return 0
        g = reduce(lambda a, b: _gcd_int(a, b), (abs(c) for c in self.coeffs))
        return -g if self.coeffs[-1] < 0 else g

    # Field-coefficient operations; all require char p.

    def monic(self) -> "UniPoly":
        self._field()
        if not self.coeffs:
            return self
        inv = pow(self.coeffs[-1], self.char - 2, self.char)
        return self.scale(inv)

    def divmod(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        self._field()
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("polynomial division by zero")
        p = self.char
        inv = pow(other.coeffs[-1], p - 2, p)
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(p), self
        quo = [0] * (dq + 1)
        for i in range(dq, -1, -1):
            c = rem[i + len(other.coeffs) - 1] * inv % p
            if c:
                quo[i] = c
                for j, b in enumerate(other.coeffs):
                    rem[i + j] = (rem[i + j] - c * b) % p
        return UniPoly(p, tuple(quo)), UniPoly(p, tuple(rem))

    def __mod__(self, other: "UniPoly") -> "UniPoly":
        return self.divmod(other)[1]

    def divides(self, other: "UniPoly") -> bool:
        """True when self divides other over F_p."""
        if not self.coeffs:
            return not other.coeffs
        return (other % self).is_zero()

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd over F_p."""
        self._field()
        a, b = self, other
        while b.coeffs:
            a, b = b, a % b
        return a.monic() if a.coeffs else a

    def powmod(self, e: int, mod: "UniPoly") -> "UniPoly":
        """self**e mod `mod` over F_p by square and multiply."""
        self._field()
        acc = UniPoly.const(self.char, 1)
        base = self % mod
        while e:
            if e & 1:
                acc = acc * base % mod
            base = base * base % mod
            e >>= 1
        return acc

    def render(self, name: str = "x") -> str:
        """Human form, highest degree first, e.g. '2*x^3 - x + 1'."""
        if not self.coeffs:
            return "0"
        parts = []
        for e in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[e]
            if not c:
                continue
            mag = abs(c)
            if e == 0:
                body = str(mag)
            else:
                var = name if e == 1 else f"{name}^{e}"
                body = var if mag == 1 else f"{mag}*{var}"
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def _check(self, other: "UniPoly") -> None:
        if self.char != other.char:
            raise ValueError("characteristic mismatch")

    def _field(self) -> None:
        if not self.char:
            raise ValueError("operation requires prime characteristic")


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def gauss_irreducible_count(p: int, ell: int) -> int:
    """Number of monic irreducibles of degree ell over F_p: (1/ell) * sum mu(d) p^(ell/d)."""
    if not is_prime(p):
        raise ValueError("p must be prime")
    if ell < 1:
        raise ValueError("degree must be >= 1")
    total = sum(mobius(d) * p ** (ell // d) for d in range(1, ell + 1) if ell % d == 0)
    assert total % ell == 0
    return total // ell


def is_irreducible(f: UniPoly) -> bool:
    """Rabin's deterministic irreducibility test over F_p."""
    if f.char == 0:
        raise ValueError("irreducibility test is over F_p only")
    n = f.degree
    if n < 1:
        return False
    p = f.char
    f = f.monic()
    x = UniPoly.x(p)
    for q in factorize(n):
        h = x.powmod(p ** (n // q), f) - x
        if f.gcd(h).degree != 0:
            return False
    return x.powmod(p**n, f) == (x % f)


def enumerate_irreducibles(p: int, ell: int, budget: int = IRREDUCIBLE_ENUM_BUDGET):
    """Yield the monic irreducibles of degree ell over F_p in lexicographic order.

    Order is lexicographic on the coefficient tuple (a_0, ..., a_{ell-1}) below
    the leading 1, so for (p, ell) = (3, 1) the sequence is x, x+1, x+2.
    """
    if not is_prime(p):
        raise ValueError("p must be prime")
    if ell < 1:
        raise ValueError("degree must be >= 1")
    if p**ell > budget:
        raise BudgetExceeded(
            f"enumerating degree-{ell} polynomials over F_{p} needs budget {p ** ell}",
            required=p**ell,
        )
    # Odometer over (a_0, ..., a_{ell-1}), a_0 most significant.
    digits = [0] * ell
    while True:
        f = UniPoly(p, tuple(digits) + (1,))
        if is_irreducible(f):
            yield f
        i = ell - 1
        while i >= 0 and digits[i] == p - 1:
            digits[i] = 0
            i -= 1
        if i < 0:
            return
        digits[i] += 1
