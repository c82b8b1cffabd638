import itertools
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import primerange

from resicode import reference_data as ref
from resicode.checks import _selector15, length15_context
from resicode.poly import Poly, x_pow_n_minus_one
from resicode.qr import (
    InvariantViolation,
    NotQAryError,
    SelectorTuple,
    base_field_admissible,
    build_code,
    build_generator,
    build_generator_top,
    classify_all,
    count_all,
    count_dual_containing,
    count_lcd,
    dual_containing_exists,
    enumerate_selectors,
    factor_polynomial,
    lcd_exists,
    qr_context,
    selector_is_dual_containing,
    selector_is_lcd,
    selector_roots,
    table_order,
)
from resicode.residues import build_partition, iter_units, length_context


@pytest.fixture(scope="module")
def ctx15():
    return length15_context()


def _count_formula_oracle(g):
    # number of (Q, sign) choices per class, multiplied over all classes
    total = 1
    for r in range(g):
        for _ in itertools.combinations(range(g), r):
            total *= 2 * (2 ** (g - r) - 1)
    return total


@pytest.mark.parametrize("primes", [(7,), (3, 5), (3, 7, 11)])
def test_stream_matches_count_all(primes):
    part = build_partition(length_context(primes, 4))
    sels = list(enumerate_selectors(part))
    assert len(sels) == len(set(sels)) == count_all(len(primes)) == _count_formula_oracle(len(primes))
    assert sels == sorted(sels)


def test_count_values():
    assert [count_all(g) for g in (1, 2, 3)] == [2, 24, 24192]
    with pytest.raises(ValueError):
        count_all(0)
    assert count_dual_containing((7, 23)) == 16
    assert count_dual_containing((3, 7, 11)) == 2**12
    assert count_lcd((3, 5)) == count_dual_containing((3, 5)) == 0
    assert count_lcd((5, 17, 29)) == 24192
    assert lcd_exists((5, 17, 29)) and not dual_containing_exists((5, 17, 29))
    assert dual_containing_exists((3, 7, 11)) and not lcd_exists((3, 7, 11))


@pytest.mark.parametrize("primes,q,want", [((3, 5), 4, True), ((7, 23), 2, True), ((3, 5), 2, False), ((11, 23), 3, True)])
def test_admissibility(primes, q, want):
    assert base_field_admissible(primes, q) == want


ODD_PRIMES = list(primerange(3, 60))


@given(st.lists(st.sampled_from(ODD_PRIMES), min_size=1, max_size=3, unique=True))
def test_admissibility_congruences(primes):
    # quaternary always works; binary needs p = +-1 mod 8; ternary needs p = +-1 mod 12
    assert base_field_admissible(primes, 4)
    assert base_field_admissible(primes, 2) == all(p % 8 in (1, 7) for p in primes)
    if 3 not in primes:
        assert base_field_admissible(primes, 3) == all(p % 12 in (1, 11) for p in primes)


@pytest.mark.parametrize("primes,q", [((3, 5), 2), ((3, 7), 2), ((5, 7), 3)])
def test_inadmissible_generators_do_not_descend(primes, q):
    ctx = qr_context(primes, q)
    assert not ctx.admissible
    failures = 0
    for s in enumerate_selectors(ctx.partition):
        try:
            build_generator(ctx, s)
        except NotQAryError as exc:
            assert "not defined over" in str(exc)
            failures += 1
        top = build_generator_top(ctx, s)
        assert top.degree == (ctx.n - 1) // 2
    assert failures > 0
    with pytest.raises(NotQAryError):
        classify_all(ctx)


def test_length15_factors_and_generator(ctx15):
    for key, text in ref.LENGTH15_FACTORS.items():
        assert str(factor_polynomial(ctx15, *key)) == text
    code = build_code(ctx15, _selector15(15, (1, 1, 1)))
    assert str(code.g) == ref.LENGTH15_GENERATOR
    assert str(code.h) == ref.LENGTH15_PARITY_CHECK


def test_length15_case_families(ctx15):
    # the 24 generators split into three families of 8, one per Q_1
    fams = {}
    for s in enumerate_selectors(ctx15.partition):
        fams.setdefault(s.choices[0].modulus, set()).add(build_generator(ctx15, s))
    assert sorted(fams) == [3, 5, 15]
    assert all(len(f) == 8 for f in fams.values())
    for Q1, rows in ref.LENGTH15_TABLES.items():
        assert {str(g) for g in fams[Q1]} == {text for _, text, _ in rows}


def test_theta_robustness_length15():
    base = Counter(str(build_generator(length15_context(), s)) for s in enumerate_selectors(length15_context().partition))
    units = list(iter_units(15))
    assert len(units) == 8
    for u in units:
        ctx = length15_context(u)
        got = Counter(str(build_generator(ctx, s)) for s in enumerate_selectors(ctx.partition))
        assert got == base


SMALL_SETS = [(3,), (5,), (7,), (3, 5), (3, 7), (5, 7), (3, 11), (5, 13), (3, 5, 7)]


@pytest.mark.parametrize("primes", SMALL_SETS)
@settings(max_examples=15)
@given(data=st.data())
def test_generator_validity_and_complement(primes, data):
    ctx = _ctx4(primes)
    sels = list(enumerate_selectors(ctx.partition))
    s = data.draw(st.sampled_from(sels))
    g = build_generator(ctx, s)
    g2 = build_generator(ctx, s.negated())
    n = ctx.n
    xn = x_pow_n_minus_one(ctx.base_field, n)
    assert g.degree == (n - 1) // 2 and g.leading == 1
    assert (xn % g).is_zero()
    assert g * g2 * Poly(ctx.base_field, [ctx.base_field.neg(1), 1]) == xn
    # root-set view agrees with the congruence predicates
    roots = selector_roots(ctx, s)
    neg = {(-t) % n for t in roots}
    assert selector_is_lcd(s) == (neg == roots)
    assert selector_is_dual_containing(s) == (not neg & roots)


_CTX = {}


def _ctx4(primes):
    if primes not in _CTX:
        _CTX[primes] = qr_context(primes, 4)
    return _CTX[primes]


@pytest.mark.parametrize("primes", [(3,), (5,), (7,), (3, 5), (3, 7), (5, 13), (7, 11)])
def test_classified_counts_match_formulas(primes):
    ctx = _ctx4(primes)
    reports = classify_all(ctx, workers=2)
    lcd = sum(r.lcd for r in reports)
    dc = sum(r.dual_containing for r in reports)
    assert lcd in (0, len(reports))
    assert lcd == count_lcd(primes) and dc == count_dual_containing(primes)
    assert all(r.k == (ctx.n + 1) // 2 for r in reports)
    for r in reports:
        assert r.lcd == selector_is_lcd(r.selector)
        assert r.dual_containing == selector_is_dual_containing(r.selector)


def test_prime_length_gives_two_codes():
    ctx = _ctx4((7,))
    reports = classify_all(ctx)
    assert len(reports) == 2 and {r.k for r in reports} == {4}


def test_invariant_violation_is_raised(monkeypatch):
    import resicode.qr as qr

    ctx = length15_context()
    monkeypatch.setattr(qr, "count_dual_containing", lambda primes: 7)
    with pytest.raises(InvariantViolation):
        qr.classify_all(ctx)


def test_table_order_groups_by_first_modulus(ctx15):
    reports = table_order(ctx15, classify_all(ctx15))
    assert [r.selector.choices[0].modulus for r in reports] == [15] * 8 + [3] * 8 + [5] * 8
    first = reports[0].selector
    assert all(c.sign == 1 for c in first.choices)


def test_selector_parse(ctx15):
    s = SelectorTuple.parse("3:+,5:-,3:+", ctx15.partition)
    assert s == _selector15(3, (1, -1, 1))
    with pytest.raises(ValueError):
        SelectorTuple.parse("7:+,5:-,3:+", ctx15.partition)
    with pytest.raises(ValueError):
        SelectorTuple.parse("3:+", ctx15.partition)


def test_context_towers():
    ctx = qr_context((7, 23), 2)
    assert ctx.length.N == 33 and ctx.top_field.order == 2**33
    assert ctx.theta.order() == 161
    ctx = qr_context((5, 17, 29), 4)
    assert ctx.top_field.order == 2**56 and ctx.admissible
