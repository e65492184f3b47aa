from __future__ import annotations

import math

import pytest

from finquot.algebra import dz, is_prime
from finquot.errors import BudgetExceeded, NotFoundWithinBudget
from finquot.groups import ball_enumerate
from finquot.profiler import (
    ReductionBudget,
    build_growth_table,
    d_reduction,
    divisor_sum,
    farb_profile,
    farb_z,
    inequality_audit,
    subgroup_growth_catalog,
    sublattice_count_oracle,
    threshold_check,
    word_growth,
)
from finquot.profiler import _golden_roots_within
from finquot.unipoly import UniPoly, enumerate_irreducibles


def test_farb_z_examples():
    assert farb_z(1) == 2
    assert farb_z(2) == 3
    assert farb_z(6) == 4
    assert farb_z(12) == 5
    assert farb_z(59) == 5
    assert farb_z(60) == 7  # lcm(1..5) = lcm(1..6) = 60
    assert farb_z(420) == 8


def test_farb_z_rejects_nonpositive():
    with pytest.raises(ValueError):
        farb_z(0)


def test_farb_z_is_running_max_of_dz():
    best = 0
    for n in range(1, 2001):
        best = max(best, dz(n))
        assert farb_z(n) == best


def test_farb_z_nondecreasing_and_banded():
    prev = 0
    for n in range(1, 5001):
        cur = farb_z(n)
        assert cur >= prev
        prev = cur
    for n in (10**3, 10**4, 10**5, 10**6):
        assert 0.5 <= farb_z(n) / math.log(n) <= 3.0


def test_d_reduction_sanov_generator(sanov):
    assert d_reduction(sanov, sanov.word("a")) == (6, True)
    small = ReductionBudget(max_prime=7, max_degree=1, order_budget=50_000)
    assert d_reduction(sanov, sanov.word("a"), small) == (6, True)


def test_d_reduction_cyclic_powers(cyclic):
    # the n-th power of a unipotent integer matrix dies mod p exactly when p | n
    for k in range(1, 13):
        order, exhaustive = d_reduction(cyclic, cyclic.word(f"a^{k}"))
        want = 2
        while k % want == 0 or not is_prime(want):
            want += 1
        assert order == want
        assert exhaustive


def test_d_reduction_rejects_identity(sanov):
    with pytest.raises(ValueError):
        d_reduction(sanov, sanov.word("a a^-1"))


def test_d_reduction_not_found(diagonal):
    # mod 2 the only surviving parameter value is t = 1, which kills diag(t, 1/t)
    tiny = ReductionBudget(max_prime=2, max_degree=1, order_budget=1000)
    with pytest.raises(NotFoundWithinBudget):
        d_reduction(diagonal, diagonal.word("a"), tiny)


def test_d_reduction_order_budget_exhaustion(sanov):
    # a^2 dies mod 2; the next quotient is SL(2,3) of order 24 over the cap
    cramped = ReductionBudget(max_prime=5, max_degree=1, order_budget=20)
    with pytest.raises(BudgetExceeded):
        d_reduction(sanov, sanov.word("a^2"), cramped)


def test_scanner_char0_order_histogram(sanov_scanner):
    # two opposite unipotents over F_p generate SL(2,p) whenever the
    # parameter is nonzero, so each prime contributes p-1 copies of
    # p(p^2-1) plus one trivial hom at parameter zero
    hist = {}
    for hom in sanov_scanner.homs:
        hist[hom.order] = hist.get(hom.order, 0) + 1
    want = {1: 11}
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31):
        want[p * (p * p - 1)] = p - 1
    assert hist == want
    assert len(sanov_scanner.homs) == 160


def test_scanner_char3_order_table(sanov3_scanner):
    # degree 1: parameter 0 plus two copies of SL(2,3); degree 2: one orbit
    # with square in F_3 (SL(2,3) again) and the two golden-trace orbits
    # (icosahedral, order 120); degree 3: eight orbits giving SL(2,27)
    orders = sorted(h.order for h in sanov3_scanner.homs)
    assert orders == [1, 24, 24, 24, 120, 120] + [19656] * 8


def test_scanner_cyclic_orders(cyclic_scanner):
    orders = sorted(h.order for h in cyclic_scanner.homs)
    assert orders == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31]


def test_scanner_floors(sanov_scanner, sanov3_scanner, cyclic_scanner):
    assert sanov_scanner.floor == 37 * 38  # Sylow count at the next prime
    assert sanov3_scanner.floor == 720  # |SL(2, 9)|
    assert cyclic_scanner.floor == 37


def test_golden_roots_within_matches_factor_degrees():
    # X^4 + 3X^2 + 1 is the minimal polynomial family of the golden traces
    for p in (3, 5, 7, 11, 13):
        quartic = UniPoly(p, (1, 0, 3, 0, 1))
        degrees = []
        rem = quartic
        for ell in range(1, 5):
            if rem.degree <= 0:
                break
            for cand in enumerate_irreducibles(p, ell):
                while cand.divides(rem):
                    degrees.append(ell)
                    rem = rem.divmod(cand)[0]
        assert rem.degree == 0
        for max_degree in range(1, 5):
            assert _golden_roots_within(p, max_degree) == (max(degrees) <= max_degree)


def test_golden_roots_spot_values():
    assert not _golden_roots_within(3, 1)
    assert _golden_roots_within(3, 2)  # X^4+1 = (X^2+X+2)(X^2+2X+2) over F_3
    assert _golden_roots_within(5, 1)  # (X-1)^2 (X+1)^2 over F_5
    assert _golden_roots_within(7, 4)


def test_profile_cyclic_matches_farb_z(cyclic):
    profile = farb_profile(cyclic, 5)
    assert [r.max_d_reduction for r in profile.rows] == [farb_z(n) for n in range(1, 6)]
    assert [r.ball_size for r in profile.rows] == [2, 4, 6, 8, 10]
    assert all(r.exhaustive for r in profile.rows)
    assert all(r.budget_misses == 0 for r in profile.rows)


def test_profile_cyclic_prime_gap_at_six(cyclic):
    # dz(6) = 4 needs the non-prime modulus 4; field quotients give 5
    profile = farb_profile(cyclic, 6)
    assert profile.rows[-1].max_d_reduction == 5
    assert farb_z(6) == 4
    assert farb_z(6) <= profile.rows[-1].max_d_reduction


def test_profile_sanov_small(sanov):
    profile = farb_profile(sanov, 2)
    rows = profile.rows
    assert [r.radius for r in rows] == [1, 2]
    assert [r.ball_size for r in rows] == [4, 16]
    assert rows[0].max_d_reduction == 6
    assert rows[1].max_d_reduction == 24  # a^2 dies mod 2, lives in SL(2,3)
    assert rows[0].max_gl_bound == 16
    assert all(r.exhaustive for r in rows)
    for prev, cur in zip(rows, rows[1:]):
        assert cur.max_gl_bound >= prev.max_gl_bound
        assert cur.max_image_order >= prev.max_image_order
        assert cur.max_d_reduction >= prev.max_d_reduction


def test_profile_row_sandwich(sanov3):
    profile = farb_profile(sanov3, 3)
    for row in profile.rows:
        assert row.max_d_reduction <= row.max_image_order <= row.max_gl_bound


def test_word_growth(sanov, sanov3, cyclic):
    assert word_growth(cyclic, 4) == [1, 3, 5, 7, 9]
    assert word_growth(sanov, 3) == [1, 5, 17, 53]
    assert word_growth(sanov3, 4) == [1, 5, 13, 29, 61]


def test_divisor_sum():
    assert divisor_sum(1) == 1
    assert divisor_sum(6) == 12
    assert divisor_sum(12) == 28
    for m in range(1, 200):
        assert divisor_sum(m) == sum(d for d in range(1, m + 1) if m % d == 0)


def test_subgroup_growth_catalog():
    assert [subgroup_growth_catalog("Z", n) for n in (1, 2, 5)] == [1, 2, 5]
    assert [subgroup_growth_catalog("Z2", n) for n in (1, 2, 3, 4, 5)] == [1, 4, 8, 15, 21]
    with pytest.raises(ValueError):
        subgroup_growth_catalog("Z3", 2)


def test_sublattice_count_matches_divisor_sum():
    for m in range(1, 60):
        assert sublattice_count_oracle(m) == divisor_sum(m)


def test_inequality_audit():
    report = inequality_audit(10_000)
    assert report.all_pass
    assert report.failures == ()
    assert report.min_ratio_at == 1
    assert abs(report.min_ratio - 3 / 4) < 1e-12 or report.min_ratio >= 1


def test_threshold_check(cyclic):
    samples = [(n, farb_z(n)) for n in (16, 100, 10_000)]
    report = threshold_check(samples)
    assert report.min_ratio > 0.4
    assert report.min_ratio_at in (16, 100, 10_000)
    profile = farb_profile(cyclic, 16)
    prof_report = threshold_check(profile)
    assert prof_report.rows[-1].n == 16
    with pytest.raises(ValueError):
        threshold_check([(8, 3)])


def test_build_growth_table():
    tz = build_growth_table("Z", 12)
    assert tz.radii == tuple(range(1, 13))
    assert tz.word_counts == tuple(2 * n + 1 for n in range(1, 13))
    assert tz.subgroup_counts == tuple(range(1, 13))
    assert tz.divisibility == tuple(farb_z(n) for n in range(1, 13))
    assert tz.audit_pass
    t2 = build_growth_table("Z2", 8)
    assert t2.word_counts == tuple(2 * n * n + 2 * n + 1 for n in range(1, 9))
    assert t2.subgroup_counts == tuple(subgroup_growth_catalog("Z2", n) for n in range(1, 9))
    assert t2.audit_pass
    with pytest.raises(ValueError):
        build_growth_table("free", 4)
