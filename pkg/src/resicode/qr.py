"""Quadratic residue codes of squarefree odd length n = p_1 ... p_g.

A code is fixed by a *selector*: for every gcd class M_d of {1..n-1} one
admissible modulus Q | n/d and a sign.  Its generator is the product over the
classes of

    F(d, Q, sign) = prod_{t in M_d, (t/Q) = sign} (x - theta^t),

with theta a primitive n-th root of unity in GF(q^N).  When (q/p_i) = 1 for
every prime, each exponent set is closed under multiplication by q, so every
factor is a product of minimal polynomials and lies in GF(q)[x].
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import comb, prod
from typing import Iterable, Iterator, Sequence

from .cyclic import CyclicCode, DistanceRecord, minimum_distance, new_cyclic_code, _workers
from .field import FieldDescriptor, FieldElement, FieldError, coerce_to_base, make_extension_field, make_field, nth_primitive_root
from .poly import Poly, product_of_roots
from .residues import LengthContext, ResiduePartition, build_partition, jacobi, length_context

__all__ = [
    "NotQAryError",
    "InvariantViolation",
    "Choice",
    "SelectorTuple",
    "QRContext",
    "QRCodeReport",
    "qr_context",
    "base_field_admissible",
    "enumerate_selectors",
    "factor_polynomial",
    "factor_polynomial_top",
    "build_generator",
    "build_generator_top",
    "build_code",
    "count_all",
    "lcd_exists",
    "dual_containing_exists",
    "count_lcd",
    "count_dual_containing",
    "selector_is_lcd",
    "selector_is_dual_containing",
    "selector_roots",
    "classify_all",
    "table_order",
]


class NotQAryError(FieldError):
    """A generator does not descend to GF(q)."""


class InvariantViolation(AssertionError):
    """Enumeration results contradict the closed-form counts."""


@dataclass(frozen=True, order=True)
class Choice:
    divisor: int
    modulus: int
    sign: int

    def label(self) -> str:
        s = "+1" if self.sign == 1 else "-1"
        return f"F^{s}_{{{self.divisor},{self.modulus}}}"


@dataclass(frozen=True, order=True)
class SelectorTuple:
    choices: tuple[Choice, ...]

    def label(self) -> str:
        return "".join(c.label() for c in self.choices)

    def negated(self) -> SelectorTuple:
        return SelectorTuple(tuple(Choice(c.divisor, c.modulus, -c.sign) for c in self.choices))

    def to_json(self) -> list[dict]:
        return [{"divisor": c.divisor, "Q": c.modulus, "sign": c.sign} for c in self.choices]

    @classmethod
    def parse(cls, text: str, partition: ResiduePartition) -> SelectorTuple:
        """``"15:+,5:+,3:-"`` -> one (Q, sign) per class in partition order."""
        parts = [p.strip() for p in text.split(",") if p.strip()]
        if len(parts) != len(partition.classes):
            raise ValueError(f"selector needs {len(partition.classes)} entries, got {len(parts)}")
        out = []
        for cls_, part in zip(partition.classes, parts):
            q_s, _, s_s = part.partition(":")
            Q = int(q_s)
            sign = {"+": 1, "+1": 1, "1": 1, "-": -1, "-1": -1}[s_s.strip()]
            if Q not in cls_.moduli:
                raise ValueError(f"Q={Q} is not admissible for class {cls_.divisor}")
            out.append(Choice(cls_.divisor, Q, sign))
        return cls(tuple(out))


@dataclass
class QRContext:
    length: LengthContext
    partition: ResiduePartition
    base_field: FieldDescriptor
    top_field: FieldDescriptor
    theta: FieldElement
    theta_exponent: int = 1
    _powers: list[int] = field(default_factory=list, repr=False)
    _minpolys: dict[int, Poly] = field(default_factory=dict, repr=False)
    _factors: dict[tuple[int, int, int], Poly] = field(default_factory=dict, repr=False)

    @property
    def n(self) -> int:
        return self.length.n

    @property
    def q(self) -> int:
        return self.length.q

    @property
    def admissible(self) -> bool:
        return base_field_admissible(self.length.primes, self.length.q)

    def power(self, t: int) -> int:
        return self._powers[t % self.n]

    def cyclotomic_coset(self, t: int) -> tuple[int, ...]:
        n, q = self.n, self.q
        out = [t % n]
        x = t * q % n
        while x != out[0]:
            out.append(x)
            x = x * q % n
        return tuple(sorted(out))

    def descend(self, f: Poly) -> Poly:
        """Re-type a polynomial over GF(q^N) as one over GF(q)."""
        return f if self.top_field is self.base_field else coerce_to_base(f)

    def minimal_polynomial(self, t: int) -> Poly:
        """Minimal polynomial of theta^t over GF(q)."""
        coset = self.cyclotomic_coset(t)
        key = coset[0]
        if key not in self._minpolys:
            top = product_of_roots(self.top_field, [self.power(s) for s in coset])
            self._minpolys[key] = self.descend(top)
        return self._minpolys[key]


def qr_context(
    primes: Sequence[int],
    q: int,
    *,
    base_modulus=None,
    top_modulus=None,
    theta_exponent: int = 1,
) -> QRContext:
    """Fix n, N = ord_n(q), the tower GF(q) < GF(q^N) and theta.

    theta is alpha^((q^N - 1)/n) for the top field's primitive alpha, raised
    to ``theta_exponent`` (a unit mod n) if given.
    """
    ctx = length_context(primes, q)
    partition = build_partition(ctx)
    partition.check()
    base = make_field(q, base_modulus)
    if base.order != q:
        raise FieldError(f"{q} is not a prime power")
    top = make_extension_field(base, ctx.N, top_modulus)
    theta = nth_primitive_root(top, ctx.n, theta_exponent)
    powers = [1] * ctx.n
    for t in range(1, ctx.n):
        powers[t] = top.mul(powers[t - 1], theta.value)
    assert top.mul(powers[-1], theta.value) == 1
    return QRContext(ctx, partition, base, top, theta, theta_exponent, powers)


def base_field_admissible(primes: Iterable[int], q: int) -> bool:
    """Every generator descends to GF(q) iff (q/p) = 1 for each prime."""
    return all(jacobi(q, p) == 1 for p in primes)


def enumerate_selectors(partition: ResiduePartition) -> Iterator[SelectorTuple]:
    """Every selector once, lexicographic over (class, Q, sign) with sign -1 < +1."""
    menus = [[Choice(c.divisor, Q, s) for Q in c.moduli for s in (-1, 1)] for c in partition.classes]
    for combo in itertools.product(*menus):
        yield SelectorTuple(combo)


def _closed_under_q(exps: Sequence[int], q: int, n: int) -> bool:
    s = set(exps)
    return all(t * q % n in s for t in s)


def factor_polynomial_top(ctx: QRContext, divisor: int, Q: int, sign: int) -> Poly:
    """F(divisor, Q, sign) as a polynomial over GF(q^N)."""
    exps = ctx.partition[divisor].part(Q, sign)
    return product_of_roots(ctx.top_field, [ctx.power(t) for t in exps])


def factor_polynomial(ctx: QRContext, divisor: int, Q: int, sign: int) -> Poly:
    """F(divisor, Q, sign) over GF(q); raises :class:`NotQAryError` if it does not descend."""
    key = (divisor, Q, sign)
    if key in ctx._factors:
        return ctx._factors[key]
    exps = ctx.partition[divisor].part(Q, sign)
    if _closed_under_q(exps, ctx.q, ctx.n):
        result = Poly._make(ctx.base_field, (1,))
        seen: set[int] = set()
        for t in exps:
            if t in seen:
                continue
            seen.update(ctx.cyclotomic_coset(t))
            result = result * ctx.minimal_polynomial(t)
    else:
        try:
            result = ctx.descend(factor_polynomial_top(ctx, divisor, Q, sign))
        except FieldError as exc:
            raise NotQAryError(f"F({divisor},{Q},{sign:+d}) is not defined over F_{ctx.q}") from exc
    ctx._factors[key] = result
    return result


def build_generator(ctx: QRContext, selector: SelectorTuple) -> Poly:
    g = Poly._make(ctx.base_field, (1,))
    for c in selector.choices:
        g = g * factor_polynomial(ctx, c.divisor, c.modulus, c.sign)
    if g.degree != (ctx.n - 1) // 2:  # pragma: no cover - splits are checked balanced
        raise InvariantViolation(f"generator degree {g.degree} != (n-1)/2")
    return g


def build_generator_top(ctx: QRContext, selector: SelectorTuple) -> Poly:
    """Generator over GF(q^N), available even when it does not descend."""
    g = Poly._make(ctx.top_field, (1,))
    for c in selector.choices:
        g = g * factor_polynomial_top(ctx, c.divisor, c.modulus, c.sign)
    return g


def build_code(ctx: QRContext, selector: SelectorTuple) -> CyclicCode:
    return new_cyclic_code(ctx.base_field, ctx.n, build_generator(ctx, selector))


def selector_roots(ctx: QRContext | ResiduePartition, selector: SelectorTuple) -> set[int]:
    partition = ctx.partition if isinstance(ctx, QRContext) else ctx
    roots: set[int] = set()
    for c in selector.choices:
        roots.update(partition[c.divisor].part(c.modulus, c.sign))
    return roots


# ---------------------------------------------------------------- counting
def count_all(g: int) -> int:
    if g < 1:
        raise ValueError("g must be positive")
    return prod((2 * (2 ** (g - r) - 1)) ** comb(g, r) for r in range(g))


def lcd_exists(primes: Iterable[int]) -> bool:
    return all(p % 4 == 1 for p in primes)


def dual_containing_exists(primes: Iterable[int]) -> bool:
    return all(p % 4 == 3 for p in primes)


def count_lcd(primes: Sequence[int]) -> int:
    return count_all(len(primes)) if lcd_exists(primes) else 0


def count_dual_containing(primes: Sequence[int]) -> int:
    g = len(primes)
    return 2 ** (g * 2 ** (g - 1)) if dual_containing_exists(primes) else 0


def selector_is_lcd(selector: SelectorTuple) -> bool:
    """Every root's inverse is a root iff (-1/Q) = 1 for every chosen Q."""
    return all(jacobi(-1, c.modulus) == 1 for c in selector.choices)


def selector_is_dual_containing(selector: SelectorTuple) -> bool:
    """No root's inverse is a root iff (-1/Q) = -1 for every chosen Q."""
    return all(jacobi(-1, c.modulus) == -1 for c in selector.choices)


# ----------------------------------------------------------- classification
@dataclass
class QRCodeReport:
    selector: SelectorTuple
    generator: Poly
    k: int
    lcd: bool
    dual_containing: bool
    d: DistanceRecord | None = None
    q_ary: bool = True

    def to_json(self) -> dict:
        return {
            "selector": self.selector.to_json(),
            "label": self.selector.label(),
            "generator": str(self.generator),
            "g": self.generator.to_json(),
            "k": self.k,
            "q_ary": self.q_ary,
            "flags": {"lcd": self.lcd, "dual_containing": self.dual_containing},
            "d": None if self.d is None else self.d.to_json(),
        }


def _report(ctx: QRContext, sel: SelectorTuple, budget: int | None) -> QRCodeReport:
    code = build_code(ctx, sel)
    d = minimum_distance(code, budget, workers=1) if budget is not None else None
    return QRCodeReport(sel, code.g, code.k, code.lcd, code.dual_containing, d)


def classify_all(
    ctx: QRContext,
    distance_budget: int | None = None,
    workers: int | None = None,
    selectors: Iterable[SelectorTuple] | None = None,
) -> list[QRCodeReport]:
    """One report per selector (all of them unless ``selectors`` is given).

    On a full enumeration the LCD and dual-containing tallies must equal
    :func:`count_lcd` / :func:`count_dual_containing`; otherwise
    :class:`InvariantViolation` is raised.
    """
    if not ctx.admissible:
        raise NotQAryError(f"(q/p) != 1 for some prime: generators are not defined over F_{ctx.q}")
    full = selectors is None
    sels = list(enumerate_selectors(ctx.partition) if full else selectors)
    # fill caches up front so workers only read shared state
    for c in ctx.partition.classes:
        for Q in c.moduli:
            for s in (1, -1):
                factor_polynomial(ctx, c.divisor, Q, s)
    nthreads = _workers(workers)
    if nthreads > 1 and len(sels) > 1:
        with ThreadPoolExecutor(nthreads) as ex:
            reports = list(ex.map(lambda s: _report(ctx, s, distance_budget), sels))
    else:
        reports = [_report(ctx, s, distance_budget) for s in sels]
    if full:
        primes = ctx.length.primes
        if len(reports) != count_all(ctx.length.g):
            raise InvariantViolation("selector stream length differs from count_all")
        n_lcd = sum(r.lcd for r in reports)
        n_dc = sum(r.dual_containing for r in reports)
        if n_lcd not in (0, len(reports)) or n_lcd != count_lcd(primes):
            raise InvariantViolation(f"LCD tally {n_lcd} != {count_lcd(primes)}")
        if n_dc != count_dual_containing(primes):
            raise InvariantViolation(f"dual-containing tally {n_dc} != {count_dual_containing(primes)}")
    return reports


def table_order(ctx: QRContext, reports: Sequence[QRCodeReport]) -> list[QRCodeReport]:
    """For g = 2: group by Q_1 in the order n, p_1, p_2; signs + before - inside a group."""
    ctx_len = ctx.length
    if ctx_len.g != 2:
        return list(reports)
    rank_q1 = {ctx_len.n: 0, ctx_len.primes[0]: 1, ctx_len.primes[1]: 2}

    def key(r: QRCodeReport):
        first = r.selector.choices[0]
        return (rank_q1[first.modulus], tuple(-c.sign for c in r.selector.choices))

    return sorted(reports, key=key)
