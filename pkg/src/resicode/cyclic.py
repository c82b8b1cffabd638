"""q-ary cyclic codes: construction, dual, LCD / dual-containing tests, distance.

Matrices are numpy ``int64`` arrays of raw field values.  Each structural
predicate has a polynomial implementation and an independent matrix
implementation; :meth:`CyclicCode.cross_check` compares them.
"""

from __future__ import annotations

import csv
import io
import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterator

import numpy as np

from .field import FieldDescriptor
from .poly import Poly, divrem, format_element, reciprocal, x_pow_n_minus_one

__all__ = [
    "CodeError",
    "CyclicCode",
    "DistanceRecord",
    "new_cyclic_code",
    "generator_matrix",
    "parity_check_matrix",
    "dual_code",
    "is_lcd",
    "is_dual_containing",
    "self_orthogonal_paper_sense",
    "lcd_by_rank",
    "dual_containing_by_matrix",
    "minimum_distance",
    "min_dependent_columns",
    "rank",
    "matrix_to_csv",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 1 << 24
_BLOCK_ROWS = 1 << 14


class CodeError(ValueError):
    pass


@dataclass(frozen=True)
class DistanceRecord:
    d: int
    method: str  # "exhaustive" or "budget-exceeded"
    codewords_enumerated: int

    @property
    def exact(self) -> bool:
        return self.method == "exhaustive"

    def to_json(self) -> dict:
        return {"d": self.d, "method": self.method, "codewords_enumerated": self.codewords_enumerated}


class CyclicCode:
    """The cyclic code <g(x)> of length n over ``field``."""

    def __init__(self, field: FieldDescriptor, n: int, g: Poly, h: Poly) -> None:
        self.field = field
        self.n = n
        self.g = g
        self.h = h
        self.k = n - g.degree

    def __repr__(self) -> str:
        return f"CyclicCode([{self.n}, {self.k}]_{self.field.order}, g={self.g})"

    @cached_property
    def generator_matrix(self) -> np.ndarray:
        return generator_matrix(self)

    @cached_property
    def parity_check_matrix(self) -> np.ndarray:
        return parity_check_matrix(self)

    @cached_property
    def lcd(self) -> bool:
        return is_lcd(self)

    @cached_property
    def dual_containing(self) -> bool:
        return is_dual_containing(self)

    # C contains its dual; named for the convention that calls this self-orthogonal
    @property
    def self_orthogonal_paper_sense(self) -> bool:
        return self.dual_containing

    def cross_check(self) -> list[str]:
        """Names of predicates whose two implementations disagree."""
        bad = []
        if self.lcd != lcd_by_rank(self):
            bad.append("lcd")
        if self.dual_containing != dual_containing_by_matrix(self):
            bad.append("dual_containing")
        return bad

    def to_json(self, distance: DistanceRecord | None = None) -> dict:
        return {
            "field": self.field.describe(),
            "n": self.n,
            "g": self.g.to_json(),
            "k": self.k,
            "flags": {"lcd": self.lcd, "dual_containing": self.dual_containing},
            "d": None if distance is None else distance.to_json(),
        }


def new_cyclic_code(field: FieldDescriptor, n: int, g: Poly) -> CyclicCode:
    """Validate that g is a monic divisor of x^n - 1 and build the code."""
    if gcd(n, field.characteristic) != 1:
        raise CodeError("repeated roots regime: gcd(n, q) != 1")
    if g.field != field:
        g = g.over(field)
    if g.is_zero() or g.leading != 1:
        raise CodeError("generator must be monic")
    h, r = divrem(x_pow_n_minus_one(field, n), g)
    if not r.is_zero():
        raise CodeError("not a generator: g does not divide x^n - 1")
    return CyclicCode(field, n, g, h)


def _shift_rows(coeffs: tuple[int, ...], rows: int, n: int) -> np.ndarray:
    M = np.zeros((rows, n), dtype=np.int64)
    c = np.asarray(coeffs, dtype=np.int64)
    for i in range(rows):
        M[i, i : i + len(c)] = c
    return M


def generator_matrix(code: CyclicCode) -> np.ndarray:
    """k x n matrix whose row i holds the coefficients of x^i g(x)."""
    return _shift_rows(code.g.raw, code.k, code.n)


def parity_check_matrix(code: CyclicCode) -> np.ndarray:
    """(n-k) x n matrix whose row i is x^i times the reversal of h(x)."""
    return _shift_rows(code.h.raw[::-1], code.n - code.k, code.n)


def dual_code(code: CyclicCode) -> CyclicCode:
    """The dual, generated by the reciprocal of h."""
    return new_cyclic_code(code.field, code.n, reciprocal(code.h))


def is_lcd(code: CyclicCode) -> bool:
    """C meets its dual trivially iff g is self-reciprocal."""
    return code.g.is_self_reciprocal()


def is_dual_containing(code: CyclicCode) -> bool:
    """C contains its dual iff g divides h*."""
    return divrem(reciprocal(code.h), code.g)[1].is_zero()


self_orthogonal_paper_sense = is_dual_containing


def lcd_by_rank(code: CyclicCode) -> bool:
    """rank of G stacked on H equals n  <=>  C and its dual meet only in 0."""
    M = np.vstack([code.generator_matrix, code.parity_check_matrix])
    return rank(M, code.field) == code.n


def dual_containing_by_matrix(code: CyclicCode) -> bool:
    """Rows of H span the dual; it lies in C iff it is self-orthogonal."""
    H = code.parity_check_matrix
    if H.shape[0] == 0:
        return True
    return not np.any(code.field.vdot(H, H.T))


# ------------------------------------------------------------ linear algebra
def rank(M: np.ndarray, field: FieldDescriptor) -> int:
    A = np.array(M, dtype=np.int64, copy=True)
    rows, cols = A.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = field.vmul(field.inv(int(A[r, c])), A[r])
        below = r + 1 + np.flatnonzero(A[r + 1 :, c])
        if below.size:
            A[below] = field.vsub(A[below], field.vmul(A[below, c][:, None], A[r][None, :]))
        r += 1
    return r


def matrix_to_csv(M: np.ndarray, field: FieldDescriptor) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for row in M:
        w.writerow([format_element(field, int(v)) for v in row])
    return buf.getvalue()


# ------------------------------------------------------------------ distance
def _span(field: FieldDescriptor, start: np.ndarray, rows: np.ndarray) -> np.ndarray:
    """All vectors start + sum c_i rows_i (one per coefficient choice)."""
    S = start[None, :]
    scalars = np.arange(field.order, dtype=np.int64)
    for row in rows:
        multiples = field.vmul(scalars[:, None], row[None, :])  # q x n
        S = field.vadd(S[None, :, :], multiples[:, None, :]).reshape(-1, S.shape[1])
    return S


def _tasks(field: FieldDescriptor, G: np.ndarray) -> Iterator[tuple[int, tuple[int, ...], int]]:
    """(lead, prefix, tail_rows): blocks covering one representative per scalar class."""
    k = G.shape[0]
    q = field.order
    tail_max = 0
    while q ** (tail_max + 1) <= _BLOCK_ROWS:
        tail_max += 1
    for lead in range(k):
        free = k - 1 - lead
        tail = min(free, tail_max)
        for prefix in itertools.product(range(q), repeat=free - tail):
            yield lead, prefix, tail


def _block_min(field: FieldDescriptor, G: np.ndarray, task) -> tuple[int, int]:
    lead, prefix, tail = task
    k = G.shape[0]
    start = G[lead].copy()
    for i, c in enumerate(prefix):
        if c:
            start = field.vadd(start, field.vmul(c, G[lead + 1 + i]))
    S = _span(field, start, G[k - tail :] if tail else G[:0])
    w = np.count_nonzero(S, axis=1)
    return int(w.min()), S.shape[0]


def _workers(requested: int | None) -> int:
    if requested:
        return max(1, requested)
    env = os.environ.get("RESICODE_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def minimum_distance(code: CyclicCode, budget: int = DEFAULT_BUDGET, workers: int | None = None) -> DistanceRecord:
    """Minimum Hamming weight by enumerating messages whose first nonzero symbol is 1.

    Scalar multiples share a weight, so these (q^k - 1)/(q - 1) representatives
    cover every nonzero codeword.  When that count exceeds ``budget`` only the
    first ``budget`` representatives are scanned and the result is an upper
    bound tagged ``budget-exceeded``.
    """
    if code.k == 0:
        raise CodeError("no nonzero codewords")
    field = code.field
    q = field.order
    total = (q**code.k - 1) // (q - 1)
    G = code.generator_matrix
    if total <= budget:
        tasks = list(_tasks(field, G))
        nthreads = _workers(workers)
        if nthreads > 1 and len(tasks) > 1:
            with ThreadPoolExecutor(nthreads) as ex:
                results = list(ex.map(lambda t: _block_min(field, G, t), tasks))
        else:
            results = [_block_min(field, G, t) for t in tasks]
        d = min(r[0] for r in results)
        count = sum(r[1] for r in results)
        assert count == total
        if d > code.n - code.k + 1:
            raise AssertionError("Singleton bound violated")
        return DistanceRecord(d, "exhaustive", count)
    best = int(np.count_nonzero(G, axis=1).min())
    count = 0
    for t in _tasks(field, G):
        if count >= budget:
            break
        w, c = _block_min(field, G, t)
        best = min(best, w)
        count += c
    return DistanceRecord(best, "budget-exceeded", count)


def min_dependent_columns(H: np.ndarray, field: FieldDescriptor, max_size: int) -> int | None:
    """Smallest number of linearly dependent columns of H, searched up to ``max_size``."""
    cols = H.shape[1]
    for s in range(1, max_size + 1):
        for subset in itertools.combinations(range(cols), s):
            if rank(H[:, subset], field) < s:
                return s
    return None
