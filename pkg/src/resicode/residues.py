"""Jacobi symbols, multiplicative orders and the residue-class partitions.

Two partitions are built here:

* for a squarefree odd length n = p_1 ... p_g, the split of {1, ..., n-1} by
  ``gcd(j, n)`` into classes M_d, and each class further split in two by the
  Jacobi symbol (j / Q) for every admissible modulus Q | n/d, Q > 1;
* for a prime p and m | p - 1, the m cosets of the m-th power residues.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb, gcd, lcm, prod
from typing import Iterator, Sequence

from sympy import factorint, isprime

__all__ = [
    "ResidueError",
    "UnbalancedSplitError",
    "jacobi",
    "multiplicative_order",
    "primitive_root_mod_p",
    "LengthContext",
    "length_context",
    "ResidueClass",
    "ResiduePartition",
    "build_partition",
    "divisor_family",
    "MthResidueClasses",
    "mth_residue_classes",
]


class ResidueError(ValueError):
    pass


class UnbalancedSplitError(ResidueError):
    """A Jacobi split of a class is not half/half."""


def jacobi(a: int, Q: int) -> int:
    """Jacobi symbol (a/Q) for odd Q >= 1, via quadratic reciprocity."""
    if Q <= 0 or Q % 2 == 0:
        raise ResidueError(f"Jacobi symbol needs an odd positive modulus, got {Q}")
    a %= Q
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if Q % 8 in (3, 5):
                result = -result
        a, Q = Q, a
        if a % 4 == 3 and Q % 4 == 3:
            result = -result
        a %= Q
    return result if Q == 1 else 0


def _carmichael(n: int) -> int:
    lam = 1
    for p, e in factorint(n).items():
        if p == 2 and e >= 3:
            part = 2 ** (e - 2)
        else:
            part = (p - 1) * p ** (e - 1)
        lam = lcm(lam, part)
    return lam


def multiplicative_order(a: int, n: int) -> int:
    """Least x >= 1 with a^x = 1 (mod n)."""
    if n < 1:
        raise ResidueError("modulus must be positive")
    if gcd(a, n) != 1:
        raise ResidueError(f"gcd({a}, {n}) != 1")
    if n == 1:
        return 1
    order = _carmichael(n)
    for ell, e in factorint(order).items():
        for _ in range(e):
            if pow(a, order // ell, n) == 1:
                order //= ell
            else:
                break
    return order


def primitive_root_mod_p(p: int) -> int:
    """Smallest generator of (Z/p)^*."""
    if not isprime(p):
        raise ResidueError(f"{p} is not prime")
    if p == 2:
        return 1
    ells = list(factorint(p - 1))
    for r in range(2, p):
        if all(pow(r, (p - 1) // ell, p) != 1 for ell in ells):
            return r
    raise AssertionError("unreachable")


# --------------------------------------------------------------------- length
@dataclass(frozen=True)
class LengthContext:
    """n = p_1 ... p_g over GF(q), with N = ord_n(q)."""

    primes: tuple[int, ...]
    q: int
    n: int
    g: int
    N: int


def length_context(primes: Sequence[int], q: int) -> LengthContext:
    ps = tuple(sorted(int(p) for p in primes))
    if not ps:
        raise ResidueError("need at least one prime")
    if len(set(ps)) != len(ps):
        raise ResidueError("primes must be distinct")
    for p in ps:
        if p == 2 or not isprime(p):
            raise ResidueError(f"{p} is not an odd prime")
    n = prod(ps)
    if gcd(n, q) != 1:
        raise ResidueError(f"gcd(n, q) != 1 for n={n}, q={q}")
    N = lcm(*(multiplicative_order(q, p) for p in ps))
    assert pow(q, N, n) == 1 and N == multiplicative_order(q, n)
    return LengthContext(primes=ps, q=q, n=n, g=len(ps), N=N)


def divisor_family(primes: Sequence[int], r: int) -> list[int]:
    """Products of r distinct primes drawn from all of ``primes`` (sorted)."""
    return sorted(prod(c) for c in combinations(sorted(primes), r))


@dataclass(frozen=True)
class ResidueClass:
    """M_d = {j : gcd(j, n) = d, 1 <= j <= n-1} with its Jacobi splits."""

    divisor: int
    rank: int  # number of primes in the divisor
    members: tuple[int, ...]
    moduli: tuple[int, ...]  # admissible Q: Q | n/d, Q > 1
    splits: dict[int, tuple[tuple[int, ...], tuple[int, ...]]] = field(repr=False)

    def part(self, Q: int, sign: int) -> tuple[int, ...]:
        plus, minus = self.splits[Q]
        return plus if sign == 1 else minus


@dataclass(frozen=True)
class ResiduePartition:
    context: LengthContext
    classes: tuple[ResidueClass, ...]

    def __getitem__(self, divisor: int) -> ResidueClass:
        for c in self.classes:
            if c.divisor == divisor:
                return c
        raise KeyError(divisor)

    def family(self, r: int) -> list[int]:
        return [c.divisor for c in self.classes if c.rank == r]

    def check(self) -> None:
        """Assert the structural invariants of the partition."""
        ctx = self.context
        seen: set[int] = set()
        for c in self.classes:
            assert not seen.intersection(c.members)
            seen.update(c.members)
            assert len(c.moduli) == 2 ** (ctx.g - c.rank) - 1
        assert seen | {ctx.n} == set(range(1, ctx.n + 1))
        for r in range(ctx.g):
            assert len(self.family(r)) == comb(ctx.g, r)


def build_partition(ctx: LengthContext) -> ResiduePartition:
    """Split {1..n-1} into gcd classes and each class by (j / Q).

    The symbol is taken at j itself.  Q is coprime to the class divisor, so
    it is never zero; every split must be exactly half/half.
    """
    n = ctx.n
    classes = []
    for r in range(ctx.g):
        for d in divisor_family(ctx.primes, r):
            members = tuple(j for j in range(d, n, d) if gcd(j, n) == d)
            cofactor_primes = [p for p in ctx.primes if d % p]
            moduli = sorted(
                prod(c) for k in range(1, len(cofactor_primes) + 1) for c in combinations(cofactor_primes, k)
            )
            splits = {}
            for Q in moduli:
                plus, minus = [], []
                for j in members:
                    s = jacobi(j, Q)
                    if s == 0:
                        raise AssertionError(f"({j}/{Q}) vanished in class {d}")
                    (plus if s == 1 else minus).append(j)
                if len(plus) != len(minus):
                    raise UnbalancedSplitError(f"class M_{d} split by Q={Q} is {len(plus)}/{len(minus)}")
                splits[Q] = (tuple(plus), tuple(minus))
            classes.append(ResidueClass(d, r, members, tuple(moduli), splits))
    return ResiduePartition(ctx, tuple(classes))


# ------------------------------------------------------------ m-th residues
@dataclass(frozen=True)
class MthResidueClasses:
    """Cosets A_i = r^i A_0 of the m-th power residues modulo p."""

    p: int
    m: int
    r: int
    cosets: tuple[tuple[int, ...], ...]

    def coset_of(self, x: int) -> int:
        x %= self.p
        for i, c in enumerate(self.cosets):
            if x in c:
                return i
        raise ResidueError(f"{x} is not a unit mod {self.p}")


def mth_residue_classes(p: int, m: int) -> MthResidueClasses:
    if p == 2 or not isprime(p):
        raise ResidueError(f"{p} is not an odd prime")
    if m < 2:
        raise ResidueError("m must be at least 2")
    if (p - 1) % m:
        raise ResidueError("m does not divide p-1")
    e = (p - 1) // m
    a0 = sorted(k for k in range(1, p) if pow(k, e, p) == 1)
    r = primitive_root_mod_p(p)
    cosets = tuple(tuple(sorted(pow(r, i, p) * k % p for k in a0)) for i in range(m))
    return MthResidueClasses(p, m, r, cosets)


def iter_units(n: int) -> Iterator[int]:
    return (u for u in range(1, n) if gcd(u, n) == 1)
