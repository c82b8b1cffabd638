from math import gcd

import pytest
from hypothesis import given
from hypothesis import strategies as st
from sympy import factorint, isprime, n_order

from resicode.residues import (
    ResidueError,
    build_partition,
    divisor_family,
    jacobi,
    length_context,
    multiplicative_order,
    mth_residue_classes,
    primitive_root_mod_p,
)


def _jacobi_oracle(a, Q):
    # product of Euler-criterion Legendre symbols over the factorisation of Q
    out = 1
    for p, e in factorint(Q).items():
        r = pow(a % p, (p - 1) // 2, p)
        s = 0 if r == 0 else (1 if r == 1 else -1)
        out *= s**e
    return out


@given(st.integers(-10**6, 10**6), st.integers(0, 5000).map(lambda k: 2 * k + 1))
def test_jacobi_matches_euler_product(a, Q):
    assert jacobi(a, Q) == _jacobi_oracle(a, Q)


def test_jacobi_rejects_even_or_nonpositive():
    for Q in (0, -3, 4):
        with pytest.raises(ResidueError):
            jacobi(1, Q)


def test_jacobi_known_values():
    assert jacobi(2, 3) == -1 and jacobi(2, 7) == 1 and jacobi(-1, 5) == 1 and jacobi(-1, 7) == -1
    assert jacobi(2, 15) == 1  # (2/3)(2/5) = (-1)(-1)
    assert jacobi(5, 15) == 0


@given(st.integers(2, 3000), st.integers(1, 3000))
def test_multiplicative_order_matches_sympy(n, a):
    if gcd(a, n) != 1:
        with pytest.raises(ResidueError):
            multiplicative_order(a, n)
        return
    assert multiplicative_order(a, n) == n_order(a, n)


def test_primitive_root():
    assert primitive_root_mod_p(7) == 3
    assert primitive_root_mod_p(17) == 3
    assert primitive_root_mod_p(23) == 5
    with pytest.raises(ResidueError):
        primitive_root_mod_p(15)


@pytest.mark.parametrize(
    "primes,q,N",
    [((3, 5), 4, 2), ((7, 23), 2, 33), ((11, 23), 3, 55), ((5, 17, 29), 4, 28), ((3, 7, 11), 4, 15)],
)
def test_length_context_degree(primes, q, N):
    ctx = length_context(primes, q)
    assert ctx.N == N
    assert pow(q, N, ctx.n) == 1


def test_length_context_validation():
    with pytest.raises(ResidueError):
        length_context((3, 3), 4)
    with pytest.raises(ResidueError):
        length_context((3, 9), 4)
    with pytest.raises(ResidueError):
        length_context((3, 5), 3)
    with pytest.raises(ResidueError):
        length_context((2, 5), 3)


def test_divisor_family_uses_all_primes():
    assert divisor_family((3, 7, 11), 1) == [3, 7, 11]
    assert divisor_family((3, 7, 11), 2) == [21, 33, 77]


prime_sets = st.lists(st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23]), min_size=1, max_size=3, unique=True)


@given(prime_sets)
def test_partition_invariants(primes):
    ctx = length_context(primes, 4)
    part = build_partition(ctx)
    part.check()
    n = ctx.n
    for c in part.classes:
        assert all(gcd(j, n) == c.divisor for j in c.members)
        for Q in c.moduli:
            assert (n // c.divisor) % Q == 0
            plus, minus = c.splits[Q]
            assert len(plus) == len(minus)
            assert sorted(plus + minus) == list(c.members)
            assert all(jacobi(j, Q) == 1 for j in plus)
            # splits are unions of q-cyclotomic cosets when (q/p) = 1
            assert {4 * j % n for j in plus} == set(plus)


def test_length15_classes():
    part = build_partition(length_context((3, 5), 4))
    assert [c.divisor for c in part.classes] == [1, 3, 5]
    assert part[1].moduli == (3, 5, 15)
    assert part[3].moduli == (5,)
    assert part[5].moduli == (3,)
    assert part[3].part(5, 1) == (6, 9)
    assert part[5].part(3, 1) == (10,)


@pytest.mark.parametrize("p", [p for p in range(3, 60) if isprime(p)])
def test_mth_classes_partition_units(p):
    for m in range(2, p):
        if (p - 1) % m:
            continue
        cl = mth_residue_classes(p, m)
        assert len(cl.cosets) == m
        assert sorted(x for c in cl.cosets for x in c) == list(range(1, p))
        assert all(len(c) == (p - 1) // m for c in cl.cosets)
        assert all(pow(x, (p - 1) // m, p) == 1 for x in cl.cosets[0])
        assert cl.coset_of(cl.r) == 1


def test_mth_classes_errors():
    with pytest.raises(ResidueError, match="does not divide"):
        mth_residue_classes(7, 4)
    with pytest.raises(ResidueError):
        mth_residue_classes(9, 2)
    with pytest.raises(ResidueError):
        mth_residue_classes(7, 1)
