"""Reproduction checks against the published values in :mod:`reference_data`.

Each check returns ``(ok, detail)``; :func:`run_checks` times it against its
budget and a slow pass counts as a failure.  Contexts and built codes are
shared through a :class:`Workspace` so the predicate cross-check can reuse
every code the other checks construct.
"""

from __future__ import annotations

import time
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from sympy import divisors, primerange

from . import reference_data as ref
from .cyclic import CyclicCode, min_dependent_columns, minimum_distance
from .field import make_field
from .poly import Poly, x_pow_n_minus_one
from .mth import (
    build_residue_code,
    classify_residue_codes,
    dual_containing_criterion,
    lcd_criterion,
    mth_context,
)
from .qr import (
    Choice,
    QRContext,
    SelectorTuple,
    build_code,
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
)
from .residues import iter_units

__all__ = ["CheckResult", "Workspace", "CHECKS", "run_checks", "length15_context"]


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str
    seconds: float
    budget: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name:<26} {self.seconds:8.2f}s (limit {self.budget:g}s)  {self.detail}"


def length15_context(theta_exponent: int = 1) -> QRContext:
    return qr_context(
        (3, 5),
        4,
        base_modulus=ref.LENGTH15_BASE_MODULUS,
        top_modulus=ref.LENGTH15_TOP_MODULUS,
        theta_exponent=theta_exponent,
    )


def _poly(field, coeffs: dict[int, int]) -> Poly:
    return Poly(field, [coeffs.get(i, 0) for i in range(max(coeffs) + 1)])


@dataclass
class Workspace:
    _ctx: dict[str, QRContext] = field(default_factory=dict)
    codes: dict[str, list[CyclicCode]] = field(default_factory=dict)

    def ctx15(self) -> QRContext:
        if "15" not in self._ctx:
            self._ctx["15"] = length15_context()
        return self._ctx["15"]

    def ctx_for(self, key: str, primes, q, theta_exponent: int = 1) -> QRContext:
        k = f"{key}:{theta_exponent}"
        if k not in self._ctx:
            self._ctx[k] = qr_context(primes, q, theta_exponent=theta_exponent)
        return self._ctx[k]

    def codes15(self) -> list[CyclicCode]:
        if "15" not in self.codes:
            ctx = self.ctx15()
            self.codes["15"] = [build_code(ctx, s) for s in enumerate_selectors(ctx.partition)]
        return self.codes["15"]

    def codes_all(self) -> list[CyclicCode]:
        """Every code the QR and m-th residue checks build."""
        self.codes15()
        if "161" not in self.codes:
            ctx = self.ctx_for("161", (7, 23), 2)
            self.codes["161"] = [build_code(ctx, s) for s in enumerate_selectors(ctx.partition)]
        if "253" not in self.codes:
            ctx = self.ctx_for("253", (11, 23), 3)
            self.codes["253"] = [build_code(ctx, s) for s in enumerate_selectors(ctx.partition)]
        if "mth" not in self.codes:
            out = []
            for p, m in ((7, 3), (17, 4)):
                c = mth_context(p, m)
                for j in range(m):
                    out.append(build_residue_code(c, j))
                    out.append(build_residue_code(c, j, True))
            self.codes["mth"] = out
        return [c for key in ("15", "161", "253", "mth") for c in self.codes[key]]


def _selector15(Q1: int, signs: tuple[int, int, int]) -> SelectorTuple:
    e1, e3, e5 = signs
    return SelectorTuple((Choice(1, Q1, e1), Choice(3, 5, e3), Choice(5, 3, e5)))


# --------------------------------------------------------------------- checks
def check_count_g2(ws: Workspace) -> tuple[bool, str]:
    n = sum(1 for _ in enumerate_selectors(ws.ctx15().partition))
    return n == 24 and count_all(2) == 24, f"selectors={n} count_all(2)={count_all(2)}"


def check_distance_histogram_15(ws: Workspace) -> tuple[bool, str]:
    hist = Counter(minimum_distance(c).d for c in ws.codes15())
    want = Counter(ref.LENGTH15_DISTANCE_HISTOGRAM)
    return hist == want, f"histogram={dict(sorted(hist.items(), reverse=True))}"


def check_generator_rows_15(ws: Workspace) -> tuple[bool, str]:
    ctx = ws.ctx15()
    bad = []
    rows = 0
    for Q1, table in ref.LENGTH15_TABLES.items():
        for signs, text, d in table:
            rows += 1
            code = build_code(ctx, _selector15(Q1, signs))
            got_d = minimum_distance(code).d
            if str(code.g) != text or got_d != d:
                bad.append(f"Q1={Q1} {signs}: {code.g} d={got_d}")
    return not bad and rows == 24, f"{rows - len(bad)}/{rows} rows match" + ("; " + "; ".join(bad) if bad else "")


def check_factors_15(ws: Workspace) -> tuple[bool, str]:
    ctx = ws.ctx15()
    bad = [k for k, text in ref.LENGTH15_FACTORS.items() if str(factor_polynomial(ctx, *k)) != text]
    for k, (u, v) in ref.LENGTH15_SPLIT_FACTORS.items():
        f = factor_polynomial(ctx, *k)
        F4 = ctx.base_field
        if f != _parse15(F4, u) * _parse15(F4, v):
            bad.append(k)
    code = build_code(ctx, _selector15(15, (1, 1, 1)))
    ok_gh = str(code.g) == ref.LENGTH15_GENERATOR and str(code.h) == ref.LENGTH15_PARITY_CHECK
    return not bad and ok_gh, f"factor mismatches={bad} g,h match={ok_gh}"


def _parse15(F4, text: str) -> Poly:
    """Parse the ascending ``1+a x+x^2`` rendering over GF(4)."""
    coeffs: dict[int, int] = {}
    for term in text.split("+"):
        parts = term.split(" ")
        if parts[-1].startswith("x"):
            xpart = parts[-1]
            cpart = parts[:-1]
        else:
            xpart, cpart = "", parts
        e = 0 if not xpart else (1 if xpart == "x" else int(xpart[2:]))
        c = 1 if not cpart else {"1": 1, "a": 2}[cpart[0]]
        coeffs[e] = F4.add(coeffs.get(e, 0), c)
    return _poly(F4, coeffs)


_THETA_SEARCH = 64  # exponents tried when locating theta


def _printed_example(ws: Workspace, key: str, primes, q, table) -> tuple[bool, list[str]]:
    """Shared logic for the two-prime binary and ternary examples.

    The printed data do not fix theta, so the smallest theta exponent that
    reproduces every factor outside the unit class is located first.  Unit
    class factors are then compared as a set of polynomials: no theta
    reproduces their printed (Q, sign) labels together with the other classes.
    """
    n = primes[0] * primes[1]
    non_unit = {k: v for k, v in table.items() if k[0] != 1}
    chosen = None
    for u in (u for u in iter_units(n) if u < _THETA_SEARCH):
        ctx = ws.ctx_for(key, primes, q, u)
        F = ctx.base_field
        if all(factor_polynomial(ctx, *k) == _product(F, v) for k, v in non_unit.items()):
            chosen = ctx
            break
    notes = []
    if chosen is None:
        return False, ["no theta exponent reproduces the non-unit factors"]
    ctx = chosen
    F = ctx.base_field
    notes.append(f"theta exponent {ctx.theta_exponent}")
    unit = ctx.partition[1]
    computed = {factor_polynomial(ctx, 1, Q, s) for Q in unit.moduli for s in (1, -1)}
    printed = {_product(F, v) for k, v in table.items() if k[0] == 1}
    ok = computed == printed
    notes.append(f"unit-class factor sets equal={ok}")
    irreducibles = {_poly(F, d) for k, v in table.items() if k[0] == 1 for d in v}
    xn = x_pow_n_minus_one(F, n)
    divides = all((xn % f).is_zero() for f in irreducibles)
    ok &= divides

    # the 24 generators assembled from printed factors equal the computed ones
    def printed_gen(sel: SelectorTuple) -> Poly:
        g = Poly(F, [1])
        for c in sel.choices:
            g = g * _product(F, table[(c.divisor, c.modulus, c.sign)])
        return g

    sels = list(enumerate_selectors(ctx.partition))
    reports = classify_all(ctx)
    same = Counter(printed_gen(s) for s in sels) == Counter(r.generator for r in reports)
    ok &= same
    n_dc = sum(r.dual_containing for r in reports)
    n_lcd = sum(r.lcd for r in reports)
    ok &= len(reports) == 24 and n_dc == 16 == count_dual_containing(primes) and n_lcd == 0 == count_lcd(primes)
    notes.append(f"generator multisets equal={same} codes={len(reports)} dual-containing={n_dc} lcd={n_lcd}")
    return ok, notes


def _product(F, dicts) -> Poly:
    g = Poly(F, [1])
    for d in dicts:
        g = g * _poly(F, d)
    return g


def check_binary_161(ws: Workspace) -> tuple[bool, str]:
    ok, notes = _printed_example(ws, "161", (7, 23), 2, ref.LENGTH161_FACTORS)
    ctx = ws.ctx_for("161", (7, 23), 2)
    code = build_code(ctx, next(enumerate_selectors(ctx.partition)))
    rec = minimum_distance(code, budget=1 << 14)
    ok &= rec.method == "budget-exceeded"
    notes.append(f"distance {rec.method} after {rec.codewords_enumerated} codewords")
    return ok, "; ".join(notes)


def check_ternary_253(ws: Workspace) -> tuple[bool, str]:
    F3 = make_field(3)
    case1 = [d for k in ((1, 253, 1), (1, 253, -1), (11, 23, 1), (11, 23, -1), (23, 11, 1), (23, 11, -1))
             for d in ref.LENGTH253_FACTORS[k]]
    full = _product(F3, case1) * Poly(F3, [2, 1])
    ok_prod = full == x_pow_n_minus_one(F3, 253)
    ok, notes = _printed_example(ws, "253", (11, 23), 3, ref.LENGTH253_FACTORS)
    return ok and ok_prod, f"(x-1)*product = x^253-1: {ok_prod}; " + "; ".join(notes)


def check_lcd_2465(ws: Workspace) -> tuple[bool, str]:
    primes = (5, 17, 29)
    ctx = ws.ctx_for("2465", primes, 4)
    total = count_all(3)
    step = total // 48
    sample = [s for i, s in enumerate(enumerate_selectors(ctx.partition)) if i % step == 0]
    reports = classify_all(ctx, selectors=sample)
    all_lcd = all(r.lcd for r in reports)
    no_dc = not any(r.dual_containing for r in reports)
    formulas = lcd_exists(primes) and count_lcd(primes) == total and count_dual_containing(primes) == 0
    ok = ctx.admissible and all_lcd and no_dc and formulas and len(sample) >= 32
    return ok, (
        f"N={ctx.length.N} admissible={ctx.admissible} sampled={len(sample)} all LCD={all_lcd} "
        f"none dual-containing={no_dc} count_lcd={count_lcd(primes)}"
    )


def check_dual_containing_231(ws: Workspace) -> tuple[bool, str]:
    primes = (3, 7, 11)
    ctx = ws.ctx_for("231", primes, 4)
    n_sel = n_dc = n_lcd = 0
    for s in enumerate_selectors(ctx.partition):
        n_sel += 1
        n_dc += selector_is_dual_containing(s)
        n_lcd += selector_is_lcd(s)
    want = ref.DUAL_CONTAINING_COUNT_231
    ok = (
        n_sel == count_all(3)
        and n_dc == want == count_dual_containing(primes)
        and n_lcd == 0 == count_lcd(primes)
        and dual_containing_exists(primes)
        and not lcd_exists(primes)
    )
    return ok, f"selectors={n_sel} dual-containing={n_dc} (formula {count_dual_containing(primes)}) lcd={n_lcd}"


def check_mth_examples(ws: Workspace) -> tuple[bool, str]:
    notes = []
    ok = True
    for (p, m), cosets in ref.MTH_COSETS.items():
        c = mth_context(p, m)
        got = [set(x) for x in c.classes.cosets]
        reps = classify_residue_codes(c)
        lcd = sum(r.lcd for r in reps)
        dc = sum(r.dual_containing for r in reps)
        good = got == cosets and lcd == m and dc == 0 and all(r.k == p - (p - 1) // m for r in reps)
        ok &= good
        notes.append(f"p={p} m={m} q={c.q} cosets ok={got == cosets} lcd={lcd} dual-containing={dc}")
    return ok, "; ".join(notes)


def check_predicate_cross(ws: Workspace) -> tuple[bool, str]:
    codes = ws.codes_all()
    bad = [(c.n, c.field.order, str(c.g)[:40], c.cross_check()) for c in codes if c.cross_check()]
    return not bad, f"{len(codes)} codes, disagreements={len(bad)}" + (f" first={bad[0]}" if bad else "")


def check_dependent_columns_15(ws: Workspace) -> tuple[bool, str]:
    bad = []
    codes = ws.codes15()
    for c in codes:
        d = minimum_distance(c).d
        s = min_dependent_columns(c.parity_check_matrix, c.field, 6)
        if s != d:
            bad.append((str(c.g), d, s))
    return not bad, f"{len(codes) - len(bad)}/{len(codes)} codes agree" + (f"; {bad[:2]}" if bad else "")


def check_mth_congruence_sweep(ws: Workspace) -> tuple[bool, str]:
    counter = []
    pairs = 0
    for p in primerange(3, 100):
        for m in divisors(p - 1):
            if m < 2:
                continue
            pairs += 1
            reps = classify_residue_codes(mth_context(p, m))
            if all(r.lcd for r in reps) != lcd_criterion(p, m):
                counter.append(("lcd", p, m))
            if m == 2 and all(r.dual_containing for r in reps) != (p % 4 == 3):
                counter.append(("dual_containing", p, m))
            if all(r.dual_containing for r in reps) != dual_containing_criterion(p, m):
                counter.append(("dual_containing_general", p, m))
            if any(r.disagreements for r in reps):
                counter.append(("root_vs_polynomial", p, m))
    return not counter, f"{pairs} (p, m) pairs, counterexamples={counter}"


CHECKS: dict[str, tuple[Callable[[Workspace], tuple[bool, str]], float]] = {
    "count_g2": (check_count_g2, 1),
    "distance_histogram_15": (check_distance_histogram_15, 5),
    "generator_rows_15": (check_generator_rows_15, 5),
    "factors_15": (check_factors_15, 1),
    "binary_161": (check_binary_161, 10),
    "ternary_253": (check_ternary_253, 30),
    "lcd_2465": (check_lcd_2465, 300),
    "dual_containing_231": (check_dual_containing_231, 120),
    "mth_examples": (check_mth_examples, 1),
    "predicate_cross_check": (check_predicate_cross, 300),
    "dependent_columns_15": (check_dependent_columns_15, 120),
    "mth_congruence_sweep": (check_mth_congruence_sweep, 60),
}


def run_one(name: str, ws: Workspace | None = None) -> CheckResult:
    fn, budget = CHECKS[name]
    ws = ws or Workspace()
    t0 = time.perf_counter()
    try:
        ok, detail = fn(ws)
    except Exception as exc:  # a crash is a failed check, not a crashed suite
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    dt = time.perf_counter() - t0
    if dt > budget:
        ok, detail = False, f"over time budget; {detail}"
    return CheckResult(name, bool(ok), detail, dt, budget)


def run_checks(only: Iterable[str] | None = None, ws: Workspace | None = None) -> list[CheckResult]:
    names = list(CHECKS) if only is None else list(only)
    unknown = [n for n in names if n not in CHECKS]
    if unknown:
        raise KeyError(f"unknown check(s): {', '.join(unknown)}")
    ws = ws or Workspace()
    return [run_one(n, ws) for n in names]
