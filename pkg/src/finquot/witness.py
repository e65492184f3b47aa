"""Constructive finite-field witnesses for nontrivial group elements.

Given a nonzero polynomial, charzero_witness / charp_witness build a ring
homomorphism into a finite field under which the polynomial survives.
separate() lifts that to groups: it picks a nonzero entry of the scaled
difference phi^len(w) * (w - I), folds phi in so denominators stay units,
finds a witness homomorphism, and checks that the induced matrix map keeps
the word away from the identity.  Everything returned is re-checkable by
verify_witness without rerunning the search.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import primes, smallest_prime_not_dividing
from .errors import IdentityWordError
from .fields import ExtFieldElem, PFieldElem
from .groups import GroupSpec, Word, scaled_difference, word_evaluate
from .multipoly import MultiPoly, substitution_exponents
from .ratfunc import FieldMatrix
from .unipoly import UniPoly, enumerate_irreducibles

ORDER_BUDGET = 1 << 17


@dataclass(frozen=True)
class FieldHom:
    """A homomorphism from the coefficient ring into a finite field.

    Characteristic-0 sources map into the prime field Z/p (modulus None,
    integer images); characteristic-p sources map into F_p[x]/(modulus)
    (ExtFieldElem images).  exponents and ell record how the images were
    derived, enough to audit the construction.
    """

    char: int
    modulus: UniPoly | None
    images: tuple
    exponents: tuple[int, ...]
    ell: int | None = None

    @property
    def field_size(self) -> int:
        return self.char if self.modulus is None else self.char ** self.modulus.degree

    def embed(self, n: int):
        if self.modulus is None:
            return PFieldElem.of(self.char, n)
        return ExtFieldElem.of(self.modulus, n)

    def apply(self, f: MultiPoly):
        """Image of a polynomial; source arity must match the image tuple."""
        return f.evaluate(list(self.images), self.embed)

    def apply_matrix(self, mat: FieldMatrix):
        """Entrywise image of a matrix of rational functions.

        Denominators must map to units; a zero denominator image raises,
        which separate() precludes by folding phi into the witness target.
        """
        out = []
        for row in mat.rows:
            cells = []
            for entry in row:
                den = self.apply(entry.den)
                if den.is_zero():
                    raise ZeroDivisionError("denominator dies under the homomorphism")
                cells.append(self.apply(entry.num) / den)
            out.append(tuple(cells))
        return tuple(out)

    def describe(self) -> str:
        tgt = f"F_{self.field_size}"
        ims = ", ".join(repr(v) for v in self.images)
        return f"{tgt}[{ims}]"


@dataclass(frozen=True)
class WitnessRecord:
    """A self-contained certificate that a word survives in a finite quotient."""

    word: Word
    word_length: int
    entry: tuple[int, int]
    hom: FieldHom
    field_size: int
    gl_bound: int
    image_order: int | None
    image_order_exact: bool | None
    verified: bool


def charzero_witness(f: MultiPoly, excluded: frozenset[int] = frozenset()) -> FieldHom:
    """A prime p and residues under which the integer polynomial f survives.

    Substitute x_i -> x^(n_i) keeping f nonzero, evaluate the result at the
    first point ell in 1..deg+1 where it is nonzero, and take the smallest
    admissible prime not dividing that value.  The variable images are then
    ell^(n_i) mod p, and f maps to the chosen nonzero value mod p.
    """
    if f.char != 0:
        raise ValueError("characteristic-0 input required")
    if f.is_zero():
        raise ValueError("zero polynomial has no witness")
    choice = substitution_exponents(f)
    g = f.substitute_sparse(choice.exponents)
    r = max(g)
    big_a = max(abs(c) for c in g.values())
    ell, value = 0, 0
    for cand in range(1, r + 2):
        value = sum(c * cand**d for d, c in g.items())
        if value:
            ell = cand
            break
    assert ell, "a degree-r polynomial cannot vanish at r+1 points"
    assert abs(value) <= (r + 1) * ell**r * big_a, "evaluation bound violated"
    p = smallest_prime_not_dividing(value, excluded)
    images = tuple(PFieldElem.of(p, pow(ell, n, p)) for n in choice.exponents)
    hom = FieldHom(char=p, modulus=None, images=images, exponents=choice.exponents, ell=ell)
    assert not hom.apply(f).is_zero(), "witness construction failed to preserve f"
    return hom


def charp_witness(f: MultiPoly) -> FieldHom:
    """An extension field F_p[x]/(h) and images under which f survives.

    After the power substitution, the result g has at most deg(g)/ell monic
    irreducible factors of degree ell, so scanning degrees upward finds an
    irreducible non-divisor h; the variable images x^(n_i) mod h then keep
    f nonzero.  The scan is by lexicographic order within each degree.
    """
    p = f.char
    if not p:
        raise ValueError("positive characteristic input required")
    if f.is_zero():
        raise ValueError("zero polynomial has no witness")
    choice = substitution_exponents(f)
    g = f.substitute_sparse(choice.exponents)
    deg_g = max(g)
    modulus = None
    ell = 0
    while modulus is None:
        ell += 1
        assert ell <= deg_g + 1, "degree scan must terminate by the factor-count bound"
        for h in enumerate_irreducibles(p, ell):
            if _sparse_mod(g, h):
                modulus = h
                break
    x = UniPoly.x(p)
    images = tuple(ExtFieldElem.from_poly(modulus, x.powmod(n, modulus)) for n in choice.exponents)
    hom = FieldHom(char=p, modulus=modulus, images=images, exponents=choice.exponents, ell=ell)
    assert not hom.apply(f).is_zero(), "witness construction failed to preserve f"
    return hom


def _sparse_mod(g: dict[int, int], h: UniPoly) -> dict[int, int]:
    """g mod h for sparse g, via per-monomial powmod; empty dict means h | g."""
    x = UniPoly.x(h.char)
    acc = UniPoly.zero(h.char)
    for d, c in g.items():
        acc = acc + x.powmod(d, h).scale(c)
    return {i: c for i, c in enumerate(acc.coeffs) if c}


def polynomial_witness(f: MultiPoly, excluded: frozenset[int] = frozenset()) -> FieldHom:
    return charp_witness(f) if f.char else charzero_witness(f, excluded)


def separate(
    spec: GroupSpec,
    word: Word,
    gamma: FieldMatrix | None = None,
    order_budget: int | None = None,
) -> WitnessRecord:
    """A finite quotient of the group in which the given word survives.

    Raises IdentityWordError when the word is trivial (checked exactly).
    With order_budget set, the exact order of the image group is computed
    by closure (or the GL bound is reported as non-exact past the budget).
    """
    if gamma is None:
        gamma = word_evaluate(spec, word)
    if gamma.is_identity():
        raise IdentityWordError(f"word {word.render()!r} is the identity")
    scaled = scaled_difference(spec, word, gamma)
    cells = [
        ((i, j), scaled[i][j])
        for i in range(spec.size)
        for j in range(spec.size)
        if not scaled[i][j].is_zero()
    ]
    (i, j), cell = min(cells, key=lambda pair: (pair[1].total_degree(), pair[0]))
    target = spec.phi * cell
    hom = polynomial_witness(target, spec.excluded_primes)

    ops = field_ops(hom)
    ims = {label: encode_matrix(hom.apply_matrix(mat), ops) for label, mat in spec.generators.items()}
    prod = ops.identity(spec.size)
    for letter in word.letters:
        prod = ops.mat_mul(prod, ims[letter], spec.size)
    verified = prod != ops.identity(spec.size)
    assert verified, "witness homomorphism failed to move the word off the identity"

    order = exact = None
    if order_budget is not None:
        order, exact = closure_order(
            [ims[l] for l in sorted(ims) if not l.endswith("^-1")], ops, spec.size, order_budget
        )
        if not exact:
            order = hom.field_size ** (spec.size**2)
    return WitnessRecord(
        word=word,
        word_length=word.length,
        entry=(i, j),
        hom=hom,
        field_size=hom.field_size,
        gl_bound=hom.field_size ** (spec.size**2),
        image_order=order,
        image_order_exact=exact,
        verified=verified,
    )


def verify_witness(spec: GroupSpec, record: WitnessRecord) -> tuple[bool, str]:
    """Independent certificate check; returns (ok, reason).

    Re-derives nothing from the search: checks field-size consistency, that
    phi and all generator denominators stay units, that generator images are
    invertible, that the word's image differs from the identity, and spot
    multiplicativity on word prefixes.
    """
    hom = record.hom
    if hom.field_size != record.field_size:
        return False, "field-size-mismatch"
    if record.gl_bound != record.field_size ** (spec.size**2):
        return False, "gl-bound-mismatch"
    if len(hom.images) != spec.nvars:
        return False, "image-arity-mismatch"
    if hom.apply(spec.phi).is_zero():
        return False, "denominator-killed"
    for mat in spec.generators.values():
        for row in mat.rows:
            for cell in row:
                if hom.apply(cell.den).is_zero():
                    return False, "denominator-killed"
    ops = field_ops(hom)
    try:
        ims = {label: encode_matrix(hom.apply_matrix(mat), ops) for label, mat in spec.generators.items()}
    except ZeroDivisionError:
        return False, "denominator-killed"
    for mat in ims.values():
        if _det(mat, ops, spec.size) == 0:
            return False, "singular-generator"
    letters = record.word.letters
    if record.word_length != len(letters):
        return False, "length-mismatch"
    if any(l not in ims for l in letters):
        return False, "unknown-letter"
    ident = ops.identity(spec.size)
    prod = ident
    prefixes = {}
    for k, letter in enumerate(letters, start=1):
        prod = ops.mat_mul(prod, ims[letter], spec.size)
        prefixes[k] = prod
    if prod == ident:
        return False, "word-collapses"
    cuts = {c for c in (1, len(letters) // 2, len(letters) - 1) if 0 < c < len(letters)}
    for cut in sorted(cuts):
        rhs = prefixes[cut]
        for letter in letters[cut:]:
            rhs = ops.mat_mul(rhs, ims[letter], spec.size)
        if rhs != prefixes[len(letters)]:
            return False, "multiplicativity"
    return True, "ok"


def image_order(spec: GroupSpec, hom: FieldHom, budget: int = ORDER_BUDGET) -> tuple[int, bool]:
    """Exact order of the image group by closure, or (gl_bound, False) past budget."""
    ops = field_ops(hom)
    gens = [
        encode_matrix(hom.apply_matrix(mat), ops)
        for label, mat in sorted(spec.generators.items())
        if not label.endswith("^-1")
    ]
    order, exact = closure_order(gens, ops, spec.size, budget)
    if not exact:
        return hom.field_size ** (spec.size**2), False
    return order, True


# Finite-field matrices are encoded as flat tuples of ints so that closure
# enumeration and dedup run on machine integers, not wrapper objects.


class FieldOps:
    """Integer-encoded arithmetic for one finite field."""

    __slots__ = ("q", "mul", "add", "neg")

    def __init__(self, q, mul, add, neg):
        self.q = q
        self.mul = mul
        self.add = add
        self.neg = neg

    def identity(self, m: int) -> tuple[int, ...]:
        return tuple(1 if i == j else 0 for i in range(m) for j in range(m))

    def mat_mul(self, a: tuple[int, ...], b: tuple[int, ...], m: int) -> tuple[int, ...]:
        mul, add = self.mul, self.add
        out = []
        for i in range(m):
            row = i * m
            for j in range(m):
                acc = 0
                for k in range(m):
                    acc = add(acc, mul(a[row + k], b[k * m + j]))
                out.append(acc)
        return tuple(out)


def field_ops(hom: FieldHom) -> FieldOps:
    p = hom.char
    if hom.modulus is None:
        return FieldOps(p, lambda a, b: a * b % p, lambda a, b: (a + b) % p, lambda a: -a % p)
    h = hom.modulus
    q = p**h.degree
    mul_table = [0] * (q * q)
    add_table = [0] * (q * q)
    neg_table = [0] * q
    polys = [_decode_poly(v, p, h.degree) for v in range(q)]
    for a in range(q):
        pa = polys[a]
        neg_table[a] = _encode_poly(-pa, p, h.degree)
        for b in range(a, q):
            pb = polys[b]
            mv = _encode_poly((pa * pb) % h, p, h.degree)
            av = _encode_poly(pa + pb, p, h.degree)
            mul_table[a * q + b] = mul_table[b * q + a] = mv
            add_table[a * q + b] = add_table[b * q + a] = av
    return FieldOps(
        q,
        lambda a, b: mul_table[a * q + b],
        lambda a, b: add_table[a * q + b],
        lambda a: neg_table[a],
    )


def _decode_poly(v: int, p: int, deg: int) -> UniPoly:
    coeffs = []
    for _ in range(deg):
        v, rem = divmod(v, p)
        coeffs.append(rem)
    return UniPoly(p, tuple(coeffs))


def _encode_poly(f: UniPoly, p: int, deg: int) -> int:
    v = 0
    for c in reversed(f.coeffs):
        v = v * p + c
    return v


def encode_elem(value) -> int:
    if isinstance(value, PFieldElem):
        return value.value
    v = 0
    for c in reversed(value.coeffs):
        v = v * value.p + c
    return v


def encode_matrix(rows, ops: FieldOps) -> tuple[int, ...]:
    return tuple(encode_elem(cell) for row in rows for cell in row)


def _det(mat: tuple[int, ...], ops: FieldOps, m: int) -> int:
    if m == 1:
        return mat[0]
    acc = 0
    sign_neg = False
    for j in range(m):
        minor = tuple(mat[r * m + c] for r in range(1, m) for c in range(m) if c != j)
        term = ops.mul(mat[j], _det(minor, ops, m - 1))
        acc = ops.add(acc, ops.neg(term) if sign_neg else term)
        sign_neg = not sign_neg
    return acc


def closure_order(gens, ops: FieldOps, m: int, budget: int) -> tuple[int, bool]:
    """Size of the generated group by breadth-first closure under the generators."""
    ident = ops.identity(m)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for elem in frontier:
            for g in gens:
                cand = ops.mat_mul(elem, g, m)
                if cand not in seen:
                    seen.add(cand)
                    if len(seen) > budget:
                        return len(seen), False
                    nxt.append(cand)
        frontier = nxt
    return len(seen), True


def chain_prime_bound(value_bound: int, excluded: frozenset[int] = frozenset()) -> int:
    """Smallest prime P so the product of admissible primes up to P exceeds the bound.

    If the product of non-excluded primes up to P exceeds |i|, some admissible
    prime up to P fails to divide i, so the witness prime is at most P.
    """
    prod = 1
    for p in primes():
        if p in excluded:
            continue
        prod *= p
        if prod > value_bound:
            return p
    raise AssertionError("unreachable")