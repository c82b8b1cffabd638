"""m-th residue codes of odd prime length p over GF(q), p | q - 1.

With A_0 the m-th power residues mod p and A_j = r^j A_0 for a primitive root
r, the codes are <f_j> and <(x - 1) f_j> where f_j = prod_{i in A_j}(x - theta^i).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count

from sympy import factorint

from .cyclic import CyclicCode, new_cyclic_code
from .field import FieldDescriptor, FieldElement, make_field, nth_primitive_root
from .poly import Poly, product_of_roots
from .residues import MthResidueClasses, ResidueError, mth_residue_classes

__all__ = [
    "MthContext",
    "MthCodeReport",
    "smallest_prime_power_1_mod",
    "mth_context",
    "residue_generator",
    "build_residue_code",
    "lcd_criterion",
    "dual_containing_criterion",
    "count_classified",
    "roots_lcd",
    "roots_dual_containing",
    "classify_residue_codes",
    "mth_report",
]


@dataclass(frozen=True)
class MthContext:
    p: int
    m: int
    q: int
    field: FieldDescriptor
    theta: FieldElement
    classes: MthResidueClasses


def _is_prime_power(q: int) -> bool:
    return q > 1 and len(factorint(q)) == 1


def smallest_prime_power_1_mod(p: int) -> int:
    for q in count(p + 1, p):
        if _is_prime_power(q):
            return q
    raise AssertionError("unreachable")  # pragma: no cover


def mth_context(p: int, m: int, q: int | None = None) -> MthContext:
    """theta = alpha^((q-1)/p) for the field's fixed primitive alpha."""
    classes = mth_residue_classes(p, m)
    if q is None:
        q = smallest_prime_power_1_mod(p)
    elif not _is_prime_power(q):
        raise ResidueError(f"{q} is not a prime power")
    elif (q - 1) % p:
        raise ResidueError(f"p={p} does not divide q-1={q - 1}")
    field = make_field(q)
    theta = nth_primitive_root(field, p)
    return MthContext(p, m, q, field, theta, classes)


def residue_generator(ctx: MthContext, j: int, include_unit_factor: bool = False) -> Poly:
    if not 0 <= j < ctx.m:
        raise ResidueError(f"coset index {j} out of range 0..{ctx.m - 1}")
    roots = [(ctx.theta**i).value for i in ctx.classes.cosets[j]]
    if include_unit_factor:
        roots.append(1)
    return product_of_roots(ctx.field, roots)


def build_residue_code(ctx: MthContext, j: int, include_unit_factor: bool = False) -> CyclicCode:
    return new_cyclic_code(ctx.field, ctx.p, residue_generator(ctx, j, include_unit_factor))


def lcd_criterion(p: int, m: int) -> bool:
    return p % (2 * m) == 1


def dual_containing_criterion(p: int, m: int) -> bool:
    return p % (2 * m) == m + 1


def count_classified(p: int, m: int) -> tuple[int, int]:
    """(LCD count, dual-containing count) within the <f_j> family."""
    return (m if lcd_criterion(p, m) else 0, m if dual_containing_criterion(p, m) else 0)


def roots_lcd(classes: MthResidueClasses, j: int) -> bool:
    """A_j closed under negation."""
    a = set(classes.cosets[j])
    return {(-i) % classes.p for i in a} == a


def roots_dual_containing(classes: MthResidueClasses, j: int) -> bool:
    """No element of A_j has its negative in A_j."""
    a = set(classes.cosets[j])
    return not any((-i) % classes.p in a for i in a)


@dataclass
class MthCodeReport:
    j: int
    unit_factor: bool
    generator: Poly
    k: int
    lcd: bool
    dual_containing: bool
    root_lcd: bool
    root_dual_containing: bool

    @property
    def disagreements(self) -> list[str]:
        """Predicates where the polynomial test and the root-set condition differ.

        The root conditions only describe the <f_j> family, so codes with the
        (x - 1) factor are never flagged.
        """
        if self.unit_factor:
            return []
        bad = []
        if self.lcd != self.root_lcd:
            bad.append("lcd")
        if self.dual_containing != self.root_dual_containing:
            bad.append("dual_containing")
        return bad

    def to_json(self) -> dict:
        return {
            "j": self.j,
            "unit_factor": self.unit_factor,
            "generator": str(self.generator),
            "g": self.generator.to_json(),
            "k": self.k,
            "flags": {
                "lcd": self.lcd,
                "dual_containing": self.dual_containing,
                "root_lcd": self.root_lcd,
                "root_dual_containing": self.root_dual_containing,
            },
            "disagreements": self.disagreements,
        }


def classify_residue_codes(ctx: MthContext, include_unit_factor: bool = False) -> list[MthCodeReport]:
    out = []
    for j in range(ctx.m):
        code = build_residue_code(ctx, j, include_unit_factor)
        out.append(
            MthCodeReport(
                j,
                include_unit_factor,
                code.g,
                code.k,
                code.lcd,
                code.dual_containing,
                roots_lcd(ctx.classes, j),
                roots_dual_containing(ctx.classes, j),
            )
        )
    return out


def mth_report(ctx: MthContext) -> dict:
    fam = classify_residue_codes(ctx, False)
    fam1 = classify_residue_codes(ctx, True)
    lcd_n, dc_n = count_classified(ctx.p, ctx.m)
    return {
        "p": ctx.p,
        "m": ctx.m,
        "q": ctx.q,
        "field": ctx.field.describe(),
        "primitive_root": ctx.classes.r,
        "cosets": [list(c) for c in ctx.classes.cosets],
        "criteria": {
            "lcd": lcd_criterion(ctx.p, ctx.m),
            "dual_containing": dual_containing_criterion(ctx.p, ctx.m),
            "lcd_count": lcd_n,
            "dual_containing_count": dc_n,
        },
        "codes": [r.to_json() for r in fam],
        "codes_with_unit_factor": [r.to_json() for r in fam1],
    }
