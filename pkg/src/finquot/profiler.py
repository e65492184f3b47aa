"""Divisibility profiles: exact F for the integers, brute-force reduction
minima for matrix groups, word growth, the subgroup-growth catalog, and the
pigeonhole / threshold audits.

The reduction oracle enumerates every homomorphism into finite fields within
an explicit budget, computes exact image orders by closure, and certifies the
returned minimum as exhaustive only when a documented structural floor rules
out smaller images beyond the budget.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from weakref import WeakKeyDictionary

from .algebra import factorize, next_prime, primes
from .errors import BudgetExceeded, NotFoundWithinBudget
from .fields import ExtFieldElem, PFieldElem
from .groups import GroupSpec, Word, ball_enumerate, word_evaluate
from .multipoly import MultiPoly
from .unipoly import UniPoly, enumerate_irreducibles
from .witness import (
    FieldHom,
    FieldOps,
    closure_order,
    encode_matrix,
    field_ops,
    separate,
)


def farb_z(n: int) -> int:
    """Exact max of dz(i) for 1 <= i <= n.

    Equals m* + 1 where m* is the largest m with lcm(1..m) <= n: the value
    m*+1 is attained at i = lcm(1..m*) (m*+1 cannot divide it, or m* was not
    maximal), and no i <= n does better because dz(i) = m forces
    lcm(2..m-1) | i.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    m, acc = 1, 1
    while True:
        nxt = math.lcm(acc, m + 1)
        if nxt > n:
            return m + 1
        m, acc = m + 1, nxt


@dataclass(frozen=True)
class ReductionBudget:
    """Search limits for the reduction oracle.

    max_prime bounds target primes in characteristic 0; max_degree bounds
    extension degrees over the base prime in characteristic p; order_budget
    caps the closure size for exact image orders.
    """

    max_prime: int = 31
    max_degree: int = 3
    order_budget: int = 200_000


@dataclass(frozen=True)
class _ScanHom:
    """One reduction homomorphism with precomputed image data.

    order is None when the image closure exceeded the order budget; such a
    hom can never claim a minimum but still matters for error reporting.
    """

    label: str
    q: int
    order: int | None
    images: dict

    def survives(self, letters, ops: FieldOps, size: int) -> bool:
        ident = ops.identity(size)
        prod = ident
        for letter in letters:
            prod = ops.mat_mul(prod, self.images[letter], size)
        return prod != ident


class ReductionScanner:
    """All reduction homomorphisms for one group within one budget.

    Holds the homs sorted by image order so that the first survivor of a
    word scan is its reduction minimum.
    """

    def __init__(self, spec: GroupSpec, budget: ReductionBudget):
        self.spec = spec
        self.budget = budget
        self.floor = _quotient_floor(spec, budget)
        self._ops: dict[int, FieldOps] = {}
        self._closure_cache: dict = {}
        homs = list(self._char0_homs() if spec.char == 0 else self._charp_homs())
        homs.sort(key=lambda h: (h.order if h.order is not None else math.inf, h.label))
        self.homs = homs

    def _base_labels(self):
        return [l for l in sorted(self.spec.generators) if not l.endswith("^-1")]

    def _make_hom(self, label: str, hom: FieldHom, ops: FieldOps) -> _ScanHom | None:
        spec = self.spec
        if hom.apply(spec.phi).is_zero():
            return None
        images = {l: encode_matrix(hom.apply_matrix(m), ops) for l, m in spec.generators.items()}
        gens = tuple(images[l] for l in self._base_labels())
        order, exact = _cached_closure(
            self._closure_cache, gens, ops, spec.size, self.budget.order_budget
        )
        return _ScanHom(label=label, q=hom.field_size, order=order if exact else None, images=images)

    def _char0_homs(self):
        spec = self.spec
        for p in primes():
            if p > self.budget.max_prime:
                break
            if p in spec.excluded_primes:
                continue
            ops = self._ops.setdefault(p, field_ops(FieldHom(p, None, (), ())))
            for tup in itertools.product(range(p), repeat=spec.nvars):
                images = tuple(PFieldElem.of(p, c) for c in tup)
                scan = self._make_hom(f"p={p},t={tup}", FieldHom(p, None, images, ()), ops)
                if scan is not None:
                    yield scan

    def _charp_homs(self):
        """One hom per kernel: images up to simultaneous Frobenius conjugacy.

        Two variable assignments with the same minimal polynomial data induce
        the same kernel on the coordinate ring, hence isomorphic images, so a
        single orbit representative per extension degree suffices.
        """
        spec = self.spec
        p = spec.char
        for j in range(1, self.budget.max_degree + 1):
            modulus = next(iter(enumerate_irreducibles(p, j)))
            q = p**j
            ops = self._ops.setdefault(q, field_ops(FieldHom(p, modulus, (), ())))
            frob = [_encoded_pow(v, p, ops) for v in range(q)]
            seen = set()
            for tup in itertools.product(range(q), repeat=spec.nvars):
                if tup in seen:
                    continue
                orbit = {tup}
                cur = tuple(frob[v] for v in tup)
                while cur not in orbit:
                    orbit.add(cur)
                    cur = tuple(frob[v] for v in cur)
                seen.update(orbit)
                if spec.nvars and len(orbit) != j:
                    continue  # lands in a proper subfield; counted at smaller degree
                if not spec.nvars and j > 1:
                    continue
                images = tuple(
                    ExtFieldElem(p, modulus, _decode_coeffs(v, p, j)) for v in tup
                )
                scan = self._make_hom(f"q={q},t={tup}", FieldHom(p, modulus, images, ()), ops)
                if scan is not None:
                    yield scan

    def ops_for(self, scan: _ScanHom) -> FieldOps:
        return self._ops[scan.q]

    def min_order(self, word: Word) -> tuple[int, bool]:
        """Smallest in-budget image order under which the word survives.

        The second component certifies exhaustiveness: True means no
        homomorphism outside the budget can have a smaller nontrivial image,
        by the structural floor documented in _quotient_floor.
        """
        size = self.spec.size
        for scan in self.homs:
            if scan.survives(word.letters, self.ops_for(scan), size):
                if scan.order is None:
                    raise BudgetExceeded(
                        "image order exceeds the closure budget",
                        required=self.budget.order_budget + 1,
                    )
                return scan.order, scan.order <= self.floor
        raise NotFoundWithinBudget(
            f"no reduction within budget separates {word.render()!r}"
        )


def _encoded_pow(v: int, e: int, ops: FieldOps) -> int:
    acc = 1
    base = v
    while e:
        if e & 1:
            acc = ops.mul(acc, base)
        base = ops.mul(base, base)
        e >>= 1
    return acc


def _decode_coeffs(v: int, p: int, deg: int) -> tuple[int, ...]:
    coeffs = []
    for _ in range(deg):
        v, rem = divmod(v, p)
        coeffs.append(rem)
    return tuple(coeffs)


def _cached_closure(cache, gens, ops, size, budget):
    key = (ops.q, gens)
    if key not in cache:
        cache[key] = closure_order(gens, ops, size, budget)
    return cache[key]


def _quotient_floor(spec: GroupSpec, budget: ReductionBudget) -> int:
    """A proven lower bound on nontrivial image orders outside the budget.

    Legs, most specific first; each is a classical structural fact, so the
    exhaustiveness certificate never depends on the scan itself:

    * Opposite unipotent pair (size 2, generators [[1,f],[0,1]] and
      [[1,0],[f,1]] with the same f).  Any homomorphism keeping the word
      alive keeps both generators alive (same parameter value), so the image
      has two distinct Sylow p-subgroups for the target characteristic p;
      Sylow's theorem forces at least p+1 of them and |G| >= p(p+1).  In
      characteristic 0 with primes <= P searched, p >= nextprime(P).
    * Same shape, source characteristic p odd with f = t and extension
      degrees <= D searched: an unseen kernel needs t -> c of degree
      j > D.  Conjugating by diag(c, 1) turns the pair into e12(c^2),
      e21(1), and by Dickson's two-unipotent theorem the group is
      SL(2, F_p(c^2)) except at golden traces: (c^2+2)^2 = (c^2+2) + 1,
      where it is the icosahedral SL(2,5) of order 120.  Exceptional c
      are roots of X^4 + 3X^2 + 1; when every irreducible factor of that
      quartic fits the budget, out-of-budget kernels obey the main case
      and the order is at least |SL(2, p^ceil((D+1)/2))| since
      [F_p(c^2) : F_p] >= (D+1)/2.  Otherwise 120 joins the floor.
    * Single constant unipotent generator over characteristic 0: images are
      unipotent, so nontrivial image orders are powers of the target prime,
      at least nextprime(P).
    * Otherwise 2 (any nontrivial group has order >= 2).
    """
    base = {l: m for l, m in spec.generators.items() if not l.endswith("^-1")}
    if spec.size == 2 and len(base) == 2:
        f = _opposite_unipotent_param(spec, base)
        if f is not None:
            if spec.char == 0:
                q = next_prime(budget.max_prime)
                return q * (q + 1)
            p = spec.char
            if p % 2 and f.terms == {(1,): 1} and budget.max_degree >= 2:
                m = (budget.max_degree + 2) // 2
                floor = p**m * (p ** (2 * m) - 1)
                if not _golden_roots_within(p, budget.max_degree):
                    floor = min(floor, 120)
                return floor
            return 2
    if spec.size == 2 and len(base) == 1 and spec.char == 0:
        mat = next(iter(base.values()))
        if _is_constant_unipotent(mat):
            return next_prime(budget.max_prime)
    return 2


def _opposite_unipotent_param(spec: GroupSpec, base: dict) -> MultiPoly | None:
    """The common off-diagonal polynomial f, if the generators are
    [[1,f],[0,1]] and [[1,0],[f,1]] in either order; None otherwise."""
    params = []
    for mat in base.values():
        rows = mat.rows
        if not (_is_one(rows[0][0]) and _is_one(rows[1][1])):
            return None
        upper, lower = rows[0][1], rows[1][0]
        if not (upper.is_poly() and lower.is_poly()):
            return None
        if upper.is_zero() == lower.is_zero():
            return None
        corner = upper if not upper.is_zero() else lower
        params.append((not upper.is_zero(), corner.num))
    (u1, f1), (u2, f2) = params
    if u1 == u2 or f1 != f2:
        return None
    return f1


def _is_one(cell) -> bool:
    return cell.is_poly() and cell.num.is_const() and cell.num.const_value() == 1


def _golden_roots_within(p: int, max_degree: int) -> bool:
    """Whether every root of X^4 + 3X^2 + 1 over F_p has degree <= max_degree.

    These are the parameters of the icosahedral exception; root degrees are
    1, 2 or 4, so the question reduces to gcd computations with X^(p^d) - X.
    """
    if max_degree >= 4:
        return True
    remaining = UniPoly(p, (1, 0, 3, 0, 1))
    x = UniPoly(p, (0, 1))
    for d in range(1, max_degree + 1):
        if remaining.degree < d:
            break
        frob = x.powmod(p**d, remaining)
        factor = remaining.gcd(frob - x)
        while factor.degree > 0:
            quo, rem = remaining.divmod(factor)
            assert rem.is_zero()
            remaining = quo
            factor = remaining.gcd(factor)
    return remaining.degree == 0


def _is_constant_unipotent(mat) -> bool:
    m = mat.size
    for row in mat.rows:
        for cell in row:
            if not (cell.is_poly() and cell.num.is_const()):
                return False
    diff = mat - mat.identity(mat.char, mat.nvars, m)
    power = diff
    for _ in range(m - 1):
        power = power * diff
    return all(cell.is_zero() for row in power.rows for cell in row)


_SCANNERS: "WeakKeyDictionary[GroupSpec, dict]" = WeakKeyDictionary()


def reduction_scanner(spec: GroupSpec, budget: ReductionBudget) -> ReductionScanner:
    per_spec = _SCANNERS.setdefault(spec, {})
    if budget not in per_spec:
        per_spec[budget] = ReductionScanner(spec, budget)
    return per_spec[budget]


def d_reduction(spec: GroupSpec, word: Word, budget: ReductionBudget = ReductionBudget()) -> tuple[int, bool]:
    """Minimum image order over all in-budget reductions separating the word.

    Raises NotFoundWithinBudget when nothing in the budget separates it.
    """
    if word_evaluate(spec, word).is_identity():
        raise ValueError("identity word has no separating quotient")
    return reduction_scanner(spec, budget).min_order(word)


@dataclass(frozen=True)
class ProfileRow:
    radius: int
    ball_size: int
    max_gl_bound: int
    max_image_order: int
    max_d_reduction: int
    exhaustive: bool
    budget_misses: int = 0


@dataclass(frozen=True)
class FarbProfile:
    rows: tuple[ProfileRow, ...]

    def row(self, radius: int) -> ProfileRow:
        return self.rows[radius - 1]


def farb_profile(
    spec: GroupSpec,
    n: int,
    budget: ReductionBudget = ReductionBudget(),
    ball_budget: int | None = None,
) -> FarbProfile:
    """Per-radius maxima of the witness bound, image order and reduction
    minimum over the punctured ball, cumulative in the radius.

    Elements whose reduction minimum falls outside the budget are counted in
    budget_misses and clear the exhaustive flag; the witness bound is still
    recorded for them.
    """
    scanner = reduction_scanner(spec, budget)
    max_glb = max_io = max_dr = misses = 0
    exhaustive = True
    by_radius: dict[int, list] = {}
    elements = (
        ball_enumerate(spec, n) if ball_budget is None else ball_enumerate(spec, n, ball_budget)
    )
    for el in elements:
        by_radius.setdefault(el.word.length, []).append(el)
    rows = []
    count = 0
    for radius in range(1, n + 1):
        for el in by_radius.get(radius, ()):
            rec = separate(spec, el.word, gamma=el.matrix, order_budget=budget.order_budget)
            max_glb = max(max_glb, rec.gl_bound)
            if rec.image_order_exact:
                max_io = max(max_io, rec.image_order)
            try:
                dmin, exh = scanner.min_order(el.word)
            except (NotFoundWithinBudget, BudgetExceeded):
                misses += 1
                exhaustive = False
                continue
            if rec.image_order_exact and _hom_within(rec.hom, budget):
                assert dmin <= rec.image_order <= rec.gl_bound
            max_dr = max(max_dr, dmin)
            exhaustive = exhaustive and exh
        count += len(by_radius.get(radius, ()))
        rows.append(
            ProfileRow(
                radius=radius,
                ball_size=count,
                max_gl_bound=max_glb,
                max_image_order=max_io,
                max_d_reduction=max_dr,
                exhaustive=exhaustive,
                budget_misses=misses,
            )
        )
    return FarbProfile(rows=tuple(rows))


def _hom_within(hom: FieldHom, budget: ReductionBudget) -> bool:
    if hom.modulus is None:
        return hom.char <= budget.max_prime
    return hom.modulus.degree <= budget.max_degree


def word_growth(spec: GroupSpec, n: int) -> list[int]:
    """Cumulative element counts including the identity, radii 0..n."""
    fresh = [0] * (n + 1)
    for el in ball_enumerate(spec, n):
        fresh[el.word.length] += 1
    counts = [1]
    for k in range(1, n + 1):
        counts.append(counts[-1] + fresh[k])
    return counts


def divisor_sum(m: int) -> int:
    total = 1
    for p, k in factorize(m).items():
        total *= (p ** (k + 1) - 1) // (p - 1)
    return total


def subgroup_growth_catalog(group_id: str, n: int) -> int:
    """s(n) for the catalog groups: Z has one subgroup per index, Z^2 has
    sigma(m) sublattices of index m."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if group_id == "Z":
        return n
    if group_id == "Z2":
        return sum(divisor_sum(m) for m in range(1, n + 1))
    raise ValueError(f"unknown catalog group {group_id!r}")


def sublattice_count_oracle(m: int) -> int:
    """Index-m sublattices of Z^2 by direct Hermite-form enumeration."""
    count = 0
    for d in range(1, m + 1):
        if m % d:
            continue
        count += d  # [[a, b], [0, d]] with a = m // d, 0 <= b < d
    return count


@dataclass(frozen=True)
class AuditReport:
    n_max: int
    all_pass: bool
    failures: tuple[int, ...]
    min_ratio: float
    min_ratio_at: int


def inequality_audit(n_max: int, group_id: str = "Z") -> AuditReport:
    """Pigeonhole instantiation for the integers: 2n+1 <= F(n)^F(n).

    The exponent is s(F(n)) with s(k) = k for the infinite cyclic group.
    Exact arithmetic; the reported ratio is the slack F(n)^F(n) / (2n+1).
    """
    if group_id != "Z":
        raise ValueError("audit is defined for the catalog group 'Z' only")
    if n_max < 1:
        raise ValueError("n_max must be >= 1")
    failures = []
    min_ratio, min_at = math.inf, 0
    f, m, next_l = 2, 1, 2
    for n in range(1, n_max + 1):
        while next_l <= n:
            m += 1
            next_l = math.lcm(next_l, m + 1)
            f = m + 1
        w = 2 * n + 1
        bound = f**f
        if w > bound:
            failures.append(n)
        ratio = bound / w
        if ratio < min_ratio:
            min_ratio, min_at = ratio, n
    return AuditReport(
        n_max=n_max,
        all_pass=not failures,
        failures=tuple(failures),
        min_ratio=min_ratio,
        min_ratio_at=min_at,
    )


@dataclass(frozen=True)
class ThresholdRow:
    n: int
    value: int
    ratio: float


@dataclass(frozen=True)
class ThresholdReport:
    rows: tuple[ThresholdRow, ...]
    min_ratio: float
    min_ratio_at: int


def threshold_check(samples) -> ThresholdReport:
    """(log F(n))^2 / log log n over the samples; all n must be >= 16.

    Accepts (n, F(n)) pairs or a FarbProfile, whose reduction minima stand
    in for F; profile rows below the n >= 16 cutoff are skipped.  Reports
    only; callers decide what ratio is acceptable.
    """
    if isinstance(samples, FarbProfile):
        samples = [(row.radius, row.max_d_reduction) for row in samples.rows if row.radius >= 16]
    rows = []
    for n, value in samples:
        if n < 16:
            raise ValueError("threshold samples need n >= 16")
        ratio = math.log(value) ** 2 / math.log(math.log(n))
        rows.append(ThresholdRow(n=n, value=value, ratio=ratio))
    if not rows:
        raise ValueError("no samples")
    best = min(rows, key=lambda r: r.ratio)
    return ThresholdReport(rows=tuple(rows), min_ratio=best.ratio, min_ratio_at=best.n)


@dataclass(frozen=True)
class GrowthTable:
    group_id: str
    radii: tuple[int, ...]
    word_counts: tuple[int, ...]
    subgroup_counts: tuple[int, ...]
    divisibility: tuple[int, ...]
    audit_pass: bool


def build_growth_table(group_id: str, n: int) -> GrowthTable:
    """Word growth, subgroup growth and divisibility profile side by side
    for the catalog groups."""
    if n < 1:
        raise ValueError("n must be >= 1")
    radii = tuple(range(1, n + 1))
    if group_id == "Z":
        words = tuple(2 * k + 1 for k in radii)
    elif group_id == "Z2":
        words = tuple(2 * k * k + 2 * k + 1 for k in radii)
    else:
        raise ValueError(f"unknown catalog group {group_id!r}")
    subs = tuple(subgroup_growth_catalog(group_id, k) for k in radii)
    divis = tuple(farb_z(k) for k in radii)
    if group_id == "Z":
        audit = inequality_audit(n).all_pass
    else:
        audit = all(
            subgroup_growth_catalog("Z2", k) == sum(sublattice_count_oracle(m) for m in range(1, k + 1))
            for k in range(1, min(n, 30) + 1)
        )
    return GrowthTable(
        group_id=group_id,
        radii=radii,
        word_counts=words,
        subgroup_counts=subs,
        divisibility=divis,
        audit_pass=audit,
    )