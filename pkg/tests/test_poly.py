import pytest
from hypothesis import given
from hypothesis import strategies as st

from resicode.field import make_extension_field, make_field, make_prime_field
from resicode.poly import (
    Poly,
    _mul_raw,
    _mul_vec,
    divrem,
    format_poly,
    poly_gcd,
    product_of_roots,
    reciprocal,
    x_pow_n_minus_one,
)

F2 = make_prime_field(2)
F3 = make_prime_field(3)
F4 = make_field(4)
F16 = make_extension_field(F4, 2, [2, 1, 1])
F101 = make_prime_field(101)
FIELDS = [F2, F3, F4, F16, F101, make_field(9)]


def polys(F, max_deg=12):
    return st.lists(st.integers(0, F.order - 1), max_size=max_deg + 1).map(lambda c: Poly._make(F, tuple(c)))


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: str(F.order))
@given(data=st.data())
def test_division_identity(F, data):
    a = data.draw(polys(F))
    b = data.draw(polys(F, 6))
    if b.is_zero():
        with pytest.raises(ZeroDivisionError):
            divrem(a, b)
        return
    quo, rem = divrem(a, b)
    assert quo * b + rem == a
    assert rem.degree < b.degree


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: str(F.order))
@given(data=st.data())
def test_vector_and_scalar_multiplication_agree(F, data):
    a = data.draw(st.lists(st.integers(0, F.order - 1), min_size=1, max_size=40))
    b = data.draw(st.lists(st.integers(0, F.order - 1), min_size=1, max_size=40))
    assert list(_mul_vec(F, a, b)) == list(_mul_raw(F, tuple(a), tuple(b)))


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: str(F.order))
@given(data=st.data())
def test_gcd_divides_both(F, data):
    a, b = data.draw(polys(F, 8)), data.draw(polys(F, 8))
    g = poly_gcd(a, b)
    if a.is_zero() and b.is_zero():
        assert g.is_zero()
        return
    assert g.leading == 1
    assert (a % g).is_zero() and (b % g).is_zero()


def test_large_division_uses_vector_path():
    xn = x_pow_n_minus_one(F2, 4096)
    g = Poly(F2, [1, 1])
    q, r = divrem(xn, g)
    assert r.is_zero() and q.degree == 4095 and all(c == 1 for c in q.raw)


def test_reciprocal_and_self_reciprocal():
    f = Poly(F3, [1, 2, 0, 1])  # 1 + 2x + x^3
    r = reciprocal(f)
    assert r == Poly(F3, [1, 0, 2, 1])
    assert Poly(F4, [1, 2, 1]).is_self_reciprocal()  # 1 + a x + x^2
    assert not Poly(F4, [2, 1]).is_self_reciprocal()
    # monic associates count: 2 + 2x is a scalar multiple of 1 + x
    assert Poly(F3, [2, 2]).is_self_reciprocal()
    with pytest.raises(ValueError, match="zero constant term"):
        reciprocal(Poly(F3, [0, 1]))


def test_product_of_roots_and_evaluation():
    roots = [F16.element(v).value for v in (3, 7, 9)]
    f = product_of_roots(F16, roots)
    assert f.degree == 3
    for r in roots:
        assert f(F16.element(r)) == F16.zero
    # evaluating a base-field polynomial at an extension point
    m = Poly(F4, [2, 1, 1])
    beta = F16.element(4)
    assert m(beta) == F16.zero


def test_x_pow_n_minus_one():
    f = x_pow_n_minus_one(F3, 4)
    assert f.raw == (2, 0, 0, 0, 1)


def test_rendering():
    assert format_poly(Poly(F4, [3, 3, 1])) == "1+a+x+a x+x^2"
    assert str(Poly(F3, [0, 0, 0, 2])) == "2x^3"
    assert str(Poly(F2, [])) == "0"
    assert str(Poly(F4, [2, 0, 0, 1])) == "a+x^3"


def test_json_shape():
    assert Poly(F3, [1, 2]).to_json() == [[1], [2]]
    assert Poly(F4, [2, 1]).to_json() == [[0, 1], [1, 0]]
