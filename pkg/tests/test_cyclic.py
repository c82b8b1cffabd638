import itertools

import numpy as np
import pytest

from resicode import reference_data as ref
from resicode.checks import length15_context
from resicode.cyclic import (
    CodeError,
    dual_code,
    dual_containing_by_matrix,
    is_dual_containing,
    is_lcd,
    lcd_by_rank,
    matrix_to_csv,
    min_dependent_columns,
    minimum_distance,
    new_cyclic_code,
    rank,
)
from resicode.field import make_field, make_prime_field
from resicode.poly import Poly, x_pow_n_minus_one
from resicode.qr import build_code, enumerate_selectors

F2 = make_prime_field(2)
F3 = make_prime_field(3)
F4 = make_field(4)


def _all_divisors(F, n, max_deg):
    """Monic divisors of x^n - 1 by brute force over small degrees."""
    xn = x_pow_n_minus_one(F, n)
    for d in range(1, max_deg + 1):
        for tail in itertools.product(range(F.order), repeat=d):
            g = Poly._make(F, tail + (1,))
            if (xn % g).is_zero():
                yield g


def _brute_distance(code):
    q, k = code.field.order, code.k
    G = code.generator_matrix
    best = code.n
    for msg in itertools.product(range(q), repeat=k):
        if not any(msg):
            continue
        w = np.zeros(code.n, dtype=np.int64)
        for c, row in zip(msg, G):
            if c:
                w = code.field.vadd(w, code.field.vmul(c, row))
        best = min(best, int(np.count_nonzero(w)))
    return best


@pytest.mark.parametrize("F,n", [(F2, 7), (F3, 8), (F2, 9), (F4, 5), (F3, 11)])
def test_small_codes_against_oracles(F, n):
    for g in _all_divisors(F, n, n - 1):
        code = new_cyclic_code(F, n, g)
        G, H = code.generator_matrix, code.parity_check_matrix
        assert not np.any(F.vdot(G, H.T))
        assert rank(G, F) == code.k and rank(H, F) == n - code.k
        assert code.cross_check() == []
        if F.order**code.k <= 4096:
            assert minimum_distance(code, workers=1).d == _brute_distance(code)


def test_dual_code_is_orthogonal_complement():
    for g in _all_divisors(F3, 8, 7):
        code = new_cyclic_code(F3, 8, g)
        dual = dual_code(code)
        assert dual.k == 8 - code.k
        assert not np.any(F3.vdot(code.generator_matrix, dual.generator_matrix.T))


def test_known_lcd_and_dual_containing():
    # binary Hamming [7,4]: g = 1 + x + x^3; contains its dual (the simplex code)
    ham = new_cyclic_code(F2, 7, Poly(F2, [1, 1, 0, 1]))
    assert is_dual_containing(ham) and not is_lcd(ham)
    assert dual_containing_by_matrix(ham) and not lcd_by_rank(ham)
    assert ham.self_orthogonal_paper_sense
    # repetition code <1 + x + ... + x^6> is LCD
    rep = new_cyclic_code(F2, 7, Poly(F2, [1] * 7))
    assert is_lcd(rep) and lcd_by_rank(rep)
    assert minimum_distance(rep).d == 7


def test_validation_errors():
    with pytest.raises(CodeError, match="repeated roots"):
        new_cyclic_code(F3, 6, Poly(F3, [2, 1]))
    with pytest.raises(CodeError, match="monic"):
        new_cyclic_code(F3, 8, Poly(F3, [1, 2]))
    with pytest.raises(CodeError, match="not a generator"):
        new_cyclic_code(F2, 7, Poly(F2, [1, 1, 1]))


def test_budget_exceeded_is_an_upper_bound():
    ctx = length15_context()
    code = build_code(ctx, next(enumerate_selectors(ctx.partition)))
    exact = minimum_distance(code)
    capped = minimum_distance(code, budget=100)
    assert exact.method == "exhaustive" and exact.codewords_enumerated == (4**8 - 1) // 3
    assert capped.method == "budget-exceeded" and not capped.exact
    assert capped.d >= exact.d


def test_threads_do_not_change_result(monkeypatch):
    ctx = length15_context()
    code = build_code(ctx, next(enumerate_selectors(ctx.partition)))
    monkeypatch.setenv("RESICODE_THREADS", "1")
    a = minimum_distance(code)
    monkeypatch.setenv("RESICODE_THREADS", "4")
    b = minimum_distance(code)
    assert a == b


def test_parity_check_matrix_row_of_length15_code():
    ctx = length15_context()
    from resicode.checks import _selector15

    code = build_code(ctx, _selector15(15, (1, 1, 1)))
    H = code.parity_check_matrix
    assert H.shape == (7, 15)
    assert tuple(H[0, :9]) == ref.LENGTH15_PARITY_MATRIX_ROW
    assert not np.any(H[0, 9:])
    # the shifted rows of reversed h annihilate G
    assert not np.any(F4.vdot(code.generator_matrix, H.T))
    # the published column set has full rank; other 6-sets are dependent
    cols = [c - 1 for c in ref.LENGTH15_DEPENDENT_COLUMNS]
    assert rank(H[:, cols], F4) == len(cols)
    assert min_dependent_columns(H, F4, 6) == 6 == minimum_distance(code).d


def test_unreversed_rows_are_not_parity_checks():
    ctx = length15_context()
    from resicode.checks import _selector15

    code = build_code(ctx, _selector15(15, (1, 1, 1)))
    h = np.zeros(15, dtype=np.int64)
    h[: len(code.h.raw)] = code.h.raw
    assert np.any(F4.vdot(code.generator_matrix, h[:, None]))


def test_matrix_csv():
    code = new_cyclic_code(F4, 3, Poly(F4, [1, 1]))
    text = matrix_to_csv(code.generator_matrix, F4)
    assert text.splitlines()[0] == "1,1,0"
