"""Sparse multivariate polynomials over Z or F_p, exact throughout.

Terms map exponent vectors (one slot per variable) to nonzero coefficients.
The module's centerpiece is `substitution_exponents`: given nonzero f in s
variables of total degree d, it chooses exponents n_1..n_s in {0, ..., d^(2s)}
such that f(x^(n_1), ..., x^(n_s)) is a nonzero univariate polynomial.

The choice follows a degree recursion: factor f = (h0 + x1*h1) * x1^k with h0
free of x1 and nonzero.  If k > 0, recurse on the smaller-degree cofactor.
Otherwise recurse on h0 in the remaining variables and set n1 = d^(2s); either
the h1 part vanishes under the substitution, or its degree (at least d^(2s))
strictly exceeds that of the h0 part (at most d^(2s-1)), so the sum survives.
The strictness fails when d = 1, so the result is always verified and a
Kronecker radix fallback (n_i = (D+1)^(i-1), D = max per-variable degree,
injective on monomials) covers the gap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .unipoly import UniPoly


def grlex_key(exps: tuple[int, ...]) -> tuple:
    """Graded lexicographic sort key: total degree first, then the vector."""
    return (sum(exps), exps)


class MultiPoly:
    """Immutable sparse polynomial in `nvars` variables over Z or F_p."""

    __slots__ = ("char", "nvars", "terms", "_key")

    def __init__(self, char: int, nvars: int, terms: dict[tuple[int, ...], int]):
        if char < 0 or char == 1:
            raise ValueError("characteristic must be 0 or a prime")
        clean: dict[tuple[int, ...], int] = {}
        for exps, c in terms.items():
            if len(exps) != nvars:
                raise ValueError("exponent vector arity mismatch")
            if char:
                c %= char
            if c:
                clean[exps] = c
        self.char = char
        self.nvars = nvars
        self.terms = clean
        self._key = (char, nvars, tuple(sorted(clean.items())))

    @classmethod
    def zero(cls, char: int, nvars: int) -> "MultiPoly":
        return cls(char, nvars, {})

    @classmethod
    def const(cls, char: int, nvars: int, c: int) -> "MultiPoly":
        return cls(char, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, char: int, nvars: int, i: int) -> "MultiPoly":
        exps = tuple(1 if j == i else 0 for j in range(nvars))
        return cls(char, nvars, {exps: 1})

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        return isinstance(other, MultiPoly) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def _check(self, other: "MultiPoly") -> None:
        if self.char != other.char or self.nvars != other.nvars:
            raise ValueError("ring mismatch")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms = dict(self.terms)
        for exps, c in other.terms.items():
            terms[exps] = terms.get(exps, 0) + c
        return MultiPoly(self.char, self.nvars, terms)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.char, self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._check(other)
        terms: dict[tuple[int, ...], int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                terms[e] = terms.get(e, 0) + c1 * c2
        return MultiPoly(self.char, self.nvars, terms)

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("negative power")
        acc = MultiPoly.const(self.char, self.nvars, 1)
        base = self
        while e:
            if e & 1:
                acc = acc * base
            base = base * base
            e >>= 1
        return acc

    def scale(self, c: int) -> "MultiPoly":
        return MultiPoly(self.char, self.nvars, {e: c * v for e, v in self.terms.items()})

    def total_degree(self) -> int:
        """Max term degree; -1 for the zero polynomial."""
        return max((sum(e) for e in self.terms), default=-1)

    def var_degree(self, i: int) -> int:
        return max((e[i] for e in self.terms), default=-1)

    def max_abs_coeff(self) -> int:
        return max((abs(c) for c in self.terms.values()), default=0)

    def is_const(self) -> bool:
        return all(not any(e) for e in self.terms)

    def const_value(self) -> int:
        if not self.terms:
            return 0
        [(e, c)] = self.terms.items()
        if any(e):
            raise ValueError("not a constant")
        return c

    def substitute_sparse(self, exponents: tuple[int, ...] | list[int]) -> dict[int, int]:
        """Coefficients of f(x^(n_1), ..., x^(n_s)) as a degree -> value map.

        Sparse on purpose: the recursion bound d^(2s) can be astronomically
        larger than the term count, so a dense vector is not an option.
        Zero coefficients are dropped; in char p values are reduced.
        """
        if len(exponents) != self.nvars:
            raise ValueError("exponent count mismatch")
        out: dict[int, int] = {}
        for exps, c in self.terms.items():
            d = sum(n * e for n, e in zip(exponents, exps))
            v = out.get(d, 0) + c
            if self.char:
                v %= self.char
            if v:
                out[d] = v
            else:
                out.pop(d, None)
        return out

    def substitute_powers(self, exponents: tuple[int, ...] | list[int]) -> UniPoly:
        """Dense form of substitute_sparse; only safe for modest degrees."""
        out = self.substitute_sparse(exponents)
        if not out:
            return UniPoly.zero(self.char)
        cs = [0] * (max(out) + 1)
        for d, c in out.items():
            cs[d] = c
        return UniPoly(self.char, tuple(cs))

    def evaluate(self, point: list, embed):
        """Evaluate at field elements; `embed` lifts an int into the target field."""
        if len(point) != self.nvars:
            raise ValueError("point arity mismatch")
        acc = embed(0)
        for exps, c in self.terms.items():
            term = embed(c)
            for v, e in zip(point, exps):
                if e:
                    term = term * v**e
            acc = acc + term
        return acc

    def render(self, names: list[str] | tuple[str, ...] | None = None) -> str:
        """Canonical text, terms in descending graded-lex order, e.g. '3*t^2 - 1'."""
        if not self.terms:
            return "0"
        names = list(names) if names else [f"x{i + 1}" for i in range(self.nvars)]
        if len(names) != self.nvars:
            raise ValueError("name count mismatch")
        parts = []
        for exps in sorted(self.terms, key=grlex_key, reverse=True):
            c = self.terms[exps]
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e > 1:
                    factors.append(f"{name}^{e}")
            mag = abs(c)
            if not factors:
                body = str(mag)
            else:
                if mag != 1:
                    factors.insert(0, str(mag))
                body = "*".join(factors)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"MultiPoly({self.char}, {self.render()})"


@dataclass(frozen=True)
class ExponentChoice:
    """Chosen substitution exponents plus how they were found.

    method is "recursion" (the degree recursion above) or "kronecker" (radix
    fallback).  bound_respected records whether every exponent lies within
    {0, ..., d^(2s)} for d the total degree, independent of method.
    """

    exponents: tuple[int, ...]
    bound_respected: bool
    method: str


def substitution_exponents(f: MultiPoly) -> ExponentChoice:
    """Exponents making substitute_powers(f) nonzero; verified before return."""
    if f.is_zero():
        raise ValueError("zero polynomial has no nonzero substitution")
    exps = tuple(_recursion_exponents(f))
    if f.substitute_sparse(exps):
        return ExponentChoice(exps, _within_bound(f, exps), "recursion")
    exps = _kronecker_exponents(f)
    if not f.substitute_sparse(exps):
        # The radix map is injective on monomials, so this cannot happen.
        raise AssertionError("kronecker fallback produced a zero substitution")
    return ExponentChoice(exps, _within_bound(f, exps), "kronecker")


def _within_bound(f: MultiPoly, exps: tuple[int, ...]) -> bool:
    bound = f.total_degree() ** (2 * f.nvars)
    return all(n <= bound for n in exps)


def _recursion_exponents(f: MultiPoly) -> list[int]:
    s = f.nvars
    d = f.total_degree()
    if d <= 0 or s == 0:
        return [0] * s
    if s == 1:
        # Smallest n in {0, 1}: n = 0 works exactly when the coefficient sum
        # is nonzero; n = 1 keeps f itself, nonzero by assumption.
        return [0] if f.substitute_sparse((0,)) else [1]
    k = min(e[0] for e in f.terms)
    if k > 0:
        shifted = MultiPoly(f.char, s, {(e[0] - k, *e[1:]): c for e, c in f.terms.items()})
        return _recursion_exponents(shifted)
    h0 = MultiPoly(f.char, s - 1, {e[1:]: c for e, c in f.terms.items() if e[0] == 0})
    return [d ** (2 * s), *_recursion_exponents(h0)]


def _kronecker_exponents(f: MultiPoly) -> tuple[int, ...]:
    radix = max(f.var_degree(i) for i in range(f.nvars)) + 1 if f.nvars else 1
    return tuple(radix**i for i in range(f.nvars))


# Exact gcd and division, recursive in the last variable (primitive PRS).
# Complete at desk scale, so rational-function canonical forms are canonical.


def _to_main(f: MultiPoly) -> list[MultiPoly]:
    """Coefficients of f as polynomials in the other variables, by last-var degree."""
    split: dict[int, dict[tuple[int, ...], int]] = {}
    for e, c in f.terms.items():
        split.setdefault(e[-1], {})[e[:-1]] = c
    top = max(split, default=-1)
    return [MultiPoly(f.char, f.nvars - 1, split.get(i, {})) for i in range(top + 1)]

def _from_main(coeffs: list[MultiPoly], char: int, nvars: int) -> MultiPoly:
    terms: dict[tuple[int, ...], int] = {}
    for i, cp in enumerate(coeffs):
        for e, c in cp.terms.items():
            terms[(*e, i)] = c
    return MultiPoly(char, nvars, terms)

def _strip(coeffs: list[MultiPoly]) -> list[MultiPoly]:
    while coeffs and coeffs[-1].is_zero():
        coeffs.pop()
    return coeffs

def _list_content(coeffs: list[MultiPoly], char: int, nvars: int) -> MultiPoly:
    cont = MultiPoly.zero(char, nvars)
    for c in coeffs:
        if not c.is_zero():
            cont = mp_gcd(cont, c)
    return cont

def _int_gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return abs(a)


def mp_gcd(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact gcd over Z (content included, positive grlex lead) or F_p (monic lead)."""
    if f.is_zero():
        return _normalize_lead(g)
    if g.is_zero():
        return _normalize_lead(f)
    f._check(g)
    char, s = f.char, f.nvars
    if s == 0:
        if char:
            return MultiPoly.const(char, 0, 1)
        return MultiPoly.const(char, 0, _int_gcd(f.const_value(), g.const_value()))
    if f.is_const() or g.is_const():
        if char:
            return MultiPoly.const(char, s, 1)
        c = _int_gcd(_content_int(f), _content_int(g))
        return MultiPoly.const(char, s, c)
    a, b = _to_main(f), _to_main(g)
    cont_a = _list_content(a, char, s - 1)
    cont_b = _list_content(b, char, s - 1)
    a = [mp_divexact(c, cont_a) for c in a]
    b = [mp_divexact(c, cont_b) for c in b]
    d = mp_gcd(cont_a, cont_b)
    # Primitive polynomial remainder sequence in the last variable.
    while b:
        r = _pseudo_rem(a, b)
        cont_r = _list_content(r, char, s - 1)
        if not cont_r.is_zero():
            r = [mp_divexact(c, cont_r) for c in r]
        a, b = b, r
    return _normalize_lead(_lift_last(d, s) * _from_main(a, char, s))


def _lift_last(f: MultiPoly, nvars: int) -> MultiPoly:
    """Reinterpret an (nvars-1)-variable polynomial inside nvars variables."""
    return MultiPoly(f.char, nvars, {(*e, 0): c for e, c in f.terms.items()})


def _content_int(f: MultiPoly) -> int:
    g = 0
    for c in f.terms.values():
        g = _int_gcd(g, c)
    return g


def _pseudo_rem(a: list[MultiPoly], b: list[MultiPoly]) -> list[MultiPoly]:
    """Pseudo-remainder of a by b in the main variable (coefficients scaled by lc(b))."""
    lc = b[-1]
    db = len(b) - 1
    r = list(a)
    _strip(r)
    while len(r) - 1 >= db:
        top = r[-1]
        shift = len(r) - 1 - db
        r = [lc * c for c in r]
        for j in range(len(b)):
            r[shift + j] = r[shift + j] - top * b[j]
        r.pop()
        _strip(r)
    return r


def mp_divexact(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    """Exact division f / g; raises ValueError when g does not divide f."""
    if g.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if f.is_zero():
        return f
    f._check(g)
    char, s = f.char, f.nvars
    if s == 0:
        if char:
            return MultiPoly.const(char, 0, f.const_value() * pow(g.const_value(), char - 2, char))
        q, r = divmod(f.const_value(), g.const_value())
        if r:
            raise ValueError("inexact constant division")
        return MultiPoly.const(char, 0, q)
    if g.is_const():
        c = g.const_value()
        if char:
            inv = pow(c, char - 2, char)
            return f.scale(inv)
        terms = {}
        for e, v in f.terms.items():
            q, r = divmod(v, c)
            if r:
                raise ValueError("inexact content division")
            terms[e] = q
        return MultiPoly(char, s, terms)
    a, b = _to_main(f), _to_main(g)
    db = len(b) - 1
    q = [MultiPoly.zero(char, s - 1)] * (len(a) - len(b) + 1)
    r = list(a)
    _strip(r)
    while len(r) - 1 >= db:
        c = mp_divexact(r[-1], b[-1])
        shift = len(r) - 1 - db
        q[shift] = c
        for j in range(len(b)):
            r[shift + j] = r[shift + j] - c * b[j]
        if not r[-1].is_zero():
            raise ValueError("inexact polynomial division")
        r.pop()
        _strip(r)
    if r:
        raise ValueError("inexact polynomial division")
    return _from_main(q, char, s)


def _grlex_lead(f: MultiPoly) -> tuple[tuple[int, ...], int]:
    e = max(f.terms, key=grlex_key)
    return e, f.terms[e]


def _normalize_lead(f: MultiPoly) -> MultiPoly:
    """Canonical associate: positive grlex lead (char 0) or monic grlex lead (char p)."""
    if f.is_zero():
        return f
    _, lead = _grlex_lead(f)
    if f.char:
        if lead == 1:
            return f
        return f.scale(pow(lead, f.char - 2, f.char))
    return f.scale(-1) if lead < 0 else f
