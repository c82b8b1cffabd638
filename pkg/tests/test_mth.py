import pytest
from sympy import divisors, factorint, primerange

from resicode import reference_data as ref
from resicode.mth import (
    build_residue_code,
    classify_residue_codes,
    count_classified,
    dual_containing_criterion,
    lcd_criterion,
    mth_context,
    mth_report,
    residue_generator,
    roots_dual_containing,
    smallest_prime_power_1_mod,
)
from resicode.poly import Poly, x_pow_n_minus_one
from resicode.qr import build_generator, enumerate_selectors, qr_context
from resicode.residues import ResidueError


def _scan_prime_power(p):
    q = 2
    while True:
        if len(factorint(q)) == 1 and q % p == 1:
            return q
        q += 1


@pytest.mark.parametrize("p", list(primerange(3, 100)))
def test_auto_q_is_smallest_prime_power(p):
    assert smallest_prime_power_1_mod(p) == _scan_prime_power(p)


def test_named_q_choices():
    assert mth_context(7, 3).q == 8
    assert mth_context(17, 4).q == 103


def test_errors():
    with pytest.raises(ResidueError, match="does not divide"):
        mth_context(7, 4)
    with pytest.raises(ResidueError):
        mth_context(7, 3, q=9)
    with pytest.raises(ResidueError):
        mth_context(7, 3, q=15)
    with pytest.raises(ResidueError):
        residue_generator(mth_context(7, 3), 3)


@pytest.mark.parametrize("p,m", [(7, 3), (17, 4)])
def test_published_cosets(p, m):
    ctx = mth_context(p, m)
    assert [set(c) for c in ctx.classes.cosets] == ref.MTH_COSETS[(p, m)]


def test_example_generators():
    ctx = mth_context(7, 3)
    th = ctx.theta
    F = ctx.field
    want = Poly(F, [(th * th**6).value, (-(th + th**6)).value, 1])
    assert residue_generator(ctx, 0) == want
    assert build_residue_code(ctx, 0).k == 5
    assert build_residue_code(ctx, 0, True).k == 4
    ctx = mth_context(17, 4)
    code = build_residue_code(ctx, 3)
    assert code.k == 13
    for i in (6, 7, 10, 11):
        assert code.g(ctx.theta**i) == ctx.field.zero


@pytest.mark.parametrize("p,m", [(7, 3), (13, 4), (11, 5), (31, 6)])
def test_roots_and_product_identity(p, m):
    ctx = mth_context(p, m)
    F = ctx.field
    prod = Poly(F, [F.neg(1), 1])
    for j in range(m):
        f = residue_generator(ctx, j)
        prod = prod * f
        for i in range(1, p):
            assert (f(ctx.theta**i) == F.zero) == (i in ctx.classes.cosets[j])
    assert prod == x_pow_n_minus_one(F, p)


def test_counts():
    assert count_classified(7, 3) == (3, 0)
    assert count_classified(17, 4) == (4, 0)
    assert count_classified(11, 5) == (5, 0)  # 11 = 1 mod 10
    assert count_classified(13, 4) == (0, 4)  # 13 = 5 mod 8
    assert all(r.lcd for r in classify_residue_codes(mth_context(11, 5)))
    assert all(r.dual_containing for r in classify_residue_codes(mth_context(13, 4)))
    assert lcd_criterion(7, 3) and dual_containing_criterion(7, 2)


def test_unit_factor_family_reported_separately():
    rep = mth_report(mth_context(7, 2))
    assert len(rep["codes"]) == len(rep["codes_with_unit_factor"]) == 2
    assert all(c["flags"]["dual_containing"] for c in rep["codes"])
    assert not any(c["flags"]["dual_containing"] for c in rep["codes_with_unit_factor"])


@pytest.mark.parametrize("p", [p for p in primerange(3, 60)])
def test_root_condition_matches_polynomial_test_all_m(p):
    for m in divisors(p - 1):
        if m < 2:
            continue
        ctx = mth_context(p, m)
        for r in classify_residue_codes(ctx):
            assert r.disagreements == []
            assert r.dual_containing == roots_dual_containing(ctx.classes, r.j)


@pytest.mark.parametrize("p", [7, 11, 13, 17, 19, 23, 29])
def test_quadratic_case_matches_prime_length_qr(p):
    # m = 2 gives the two prime-length QR codes over the same field
    ctx = mth_context(p, 2)
    qctx = qr_context((p,), ctx.q)
    mth_gens = {residue_generator(ctx, j).raw for j in range(2)}
    qr_gens = {build_generator(qctx, s).raw for s in enumerate_selectors(qctx.partition)}
    assert len(mth_gens) == 2
    assert mth_gens == qr_gens
    assert all(build_residue_code(ctx, j).k == (p + 1) // 2 for j in range(2))
