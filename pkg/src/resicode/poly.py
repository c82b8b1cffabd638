"""Dense univariate polynomials over a :class:`~resicode.field.FieldDescriptor`.

Coefficients are raw field values stored little-endian in a tuple with no
trailing zeros; the zero polynomial is the empty tuple and has degree -1.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .field import FieldDescriptor, FieldElement, FieldError

__all__ = [
    "Poly",
    "divrem",
    "poly_gcd",
    "evaluate",
    "reciprocal",
    "is_self_reciprocal",
    "product_of_linear_factors",
    "product_of_roots",
    "x_pow_n_minus_one",
    "format_element",
    "format_poly",
]

# below this many coefficient products the pure-Python loops win
_VECTOR_THRESHOLD = 4096


class Poly:
    """Polynomial with coefficients in ``field``.

    ``coeffs`` may hold raw ints (residues for prime fields, packed values
    for extensions) or :class:`FieldElement` instances of ``field`` or one of
    its subfields.
    """

    __slots__ = ("field", "raw")

    def __init__(self, field: FieldDescriptor, coeffs: Iterable = ()) -> None:
        raw = [c.value if isinstance(c, FieldElement) and c.field is field else field.element(c).value for c in coeffs]
        while raw and raw[-1] == 0:
            raw.pop()
        self.field = field
        self.raw = tuple(raw)

    @classmethod
    def _make(cls, field: FieldDescriptor, raw: Sequence[int]) -> Poly:
        raw = list(raw)
        while raw and raw[-1] == 0:
            raw.pop()
        p = cls.__new__(cls)
        p.field = field
        p.raw = tuple(int(c) for c in raw)
        return p

    @classmethod
    def x(cls, field: FieldDescriptor) -> Poly:
        return cls._make(field, (0, 1))

    @classmethod
    def constant(cls, field: FieldDescriptor, c=1) -> Poly:
        return cls(field, (c,))

    # ----------------------------------------------------------- inspection
    @property
    def degree(self) -> int:
        return len(self.raw) - 1

    def is_zero(self) -> bool:
        return not self.raw

    @property
    def coefficients(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.raw)

    def __getitem__(self, i: int) -> FieldElement:
        return FieldElement(self.field, self.raw[i] if 0 <= i < len(self.raw) else 0)

    @property
    def leading(self) -> int:
        return self.raw[-1] if self.raw else 0

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.raw == other.raw and (self.field is other.field or self.field == other.field)

    def __hash__(self) -> int:
        return hash((self.raw, self.field.order))

    def __repr__(self) -> str:
        return f"Poly({format_poly(self)})"

    def __str__(self) -> str:
        return format_poly(self)

    def to_json(self) -> list:
        f = self.field
        return [f.coeff_tree(c) if f.base is not None else [c] for c in self.raw]

    # ----------------------------------------------------------- arithmetic
    def _same(self, other: Poly) -> None:
        if other.field is not self.field and other.field != self.field:
            raise FieldError("field mismatch")

    def __add__(self, other: Poly) -> Poly:
        self._same(other)
        f = self.field
        a, b = self.raw, other.raw
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return Poly._make(f, out)

    def __neg__(self) -> Poly:
        f = self.field
        return Poly._make(f, [f.neg(c) for c in self.raw])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def scale(self, c: int) -> Poly:
        """Multiply by the raw scalar ``c``."""
        f = self.field
        if c == 1:
            return self
        return Poly._make(f, [f.mul(c, a) for a in self.raw])

    def __mul__(self, other) -> Poly:
        if isinstance(other, FieldElement):
            return self.scale(self.field.lift(other))
        if isinstance(other, int):
            return self.scale(other % self.field.characteristic)
        self._same(other)
        return Poly._make(self.field, _mul_raw(self.field, self.raw, other.raw))

    __rmul__ = __mul__

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        return divrem(self, other)

    def __floordiv__(self, other: Poly) -> Poly:
        return divrem(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divrem(self, other)[1]

    def __pow__(self, e: int) -> Poly:
        result = Poly._make(self.field, (1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def powmod(self, e: int, m: Poly) -> Poly:
        result = Poly._make(self.field, (1,))
        base = self % m
        while e:
            if e & 1:
                result = (result * base) % m
            e >>= 1
            if e:
                base = (base * base) % m
        return result

    def monic(self) -> Poly:
        if not self.raw:
            return self
        return self.scale(self.field.inv(self.raw[-1]))

    def gcd(self, other: Poly) -> Poly:
        return poly_gcd(self, other)

    def eval(self, x) -> FieldElement:
        return evaluate(self, x)

    __call__ = eval

    def reversed(self) -> Poly:
        """Plain coefficient reversal x^deg f(1/x) (no normalisation)."""
        return Poly._make(self.field, self.raw[::-1])

    def reciprocal(self) -> Poly:
        return reciprocal(self)

    def is_self_reciprocal(self) -> bool:
        return is_self_reciprocal(self)

    def shift(self, k: int) -> Poly:
        if not self.raw:
            return self
        return Poly._make(self.field, (0,) * k + self.raw)

    def over(self, field: FieldDescriptor) -> Poly:
        """The same polynomial viewed over ``field`` (a tower relative)."""
        if field == self.field:
            return self
        if field.base == self.field or (field.base is not None and field.base.base == self.field):
            return Poly._make(field, self.raw)
        if self.field.base == field or (self.field.base is not None and self.field.base.base == field):
            limit = field.order
            if any(c >= limit for c in self.raw):
                raise FieldError("not defined over base field")
            return Poly._make(field, self.raw)
        raise FieldError("field mismatch")


# ---------------------------------------------------------------- kernels
def _mul_raw(f: FieldDescriptor, a: tuple[int, ...], b: tuple[int, ...]) -> list[int]:
    if not a or not b:
        return []
    if len(a) * len(b) >= _VECTOR_THRESHOLD and f.vectorizable:
        return _mul_vec(f, a, b)
    out = [0] * (len(a) + len(b) - 1)
    if f.base is None:
        p = f.characteristic
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return [c % p for c in out]
    fadd, fmul = f.add, f.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = fadd(out[i + j], fmul(x, y))
    return out


def _mul_vec(f: FieldDescriptor, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if f.base is None and f.characteristic < (1 << 20):
        av = np.asarray(a, dtype=np.int64)
        bv = np.asarray(b, dtype=np.int64)
        if f.characteristic ** 2 * min(len(a), len(b)) < (1 << 62):
            return (np.convolve(av, bv) % f.characteristic).tolist()
    if f.tables is None:
        # large prime: exact object arithmetic
        p = f.characteristic
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return [c % p for c in out]
    addt, mult = f.tables[0], f.tables[1]
    bv = np.asarray(b, dtype=np.int64)
    acc = np.zeros(len(a) + len(b) - 1, dtype=np.int64)
    lb = len(b)
    xor = f.characteristic == 2
    for i, x in enumerate(a):
        if x:
            term = mult[x][bv]
            if xor:
                acc[i : i + lb] ^= term
            else:
                acc[i : i + lb] = addt[acc[i : i + lb], term]
    return acc.tolist()


def divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Quotient and remainder with ``a = q*b + r`` and ``deg r < deg b``."""
    a._same(b)
    if b.is_zero():
        raise ZeroDivisionError("polynomial division by zero")
    f = a.field
    db = b.degree
    da = a.degree
    if da < db:
        return Poly._make(f, ()), a
    lead_inv = f.inv(b.leading)
    if (da - db + 1) * (db + 1) >= _VECTOR_THRESHOLD and f.vectorizable and (
        f.tables is not None or f.characteristic < (1 << 20)
    ):
        return _divrem_vec(f, a.raw, b.raw, lead_inv)
    r = list(a.raw)
    q = [0] * (da - db + 1)
    braw = b.raw
    fsub, fmul = f.sub, f.mul
    for i in range(da, db - 1, -1):
        c = r[i]
        if c == 0:
            continue
        c = fmul(c, lead_inv)
        q[i - db] = c
        off = i - db
        for j, y in enumerate(braw):
            if y:
                r[off + j] = fsub(r[off + j], fmul(c, y))
    return Poly._make(f, q), Poly._make(f, r[:db])


def _divrem_vec(f: FieldDescriptor, a, b, lead_inv: int) -> tuple[Poly, Poly]:
    r = np.asarray(a, dtype=np.int64).copy()
    bv = np.asarray(b, dtype=np.int64)
    db = len(b) - 1
    da = len(a) - 1
    q = np.zeros(da - db + 1, dtype=np.int64)
    for i in range(da, db - 1, -1):
        c = int(r[i])
        if c == 0:
            continue
        c = f.mul(c, lead_inv)
        q[i - db] = c
        off = i - db
        r[off : i + 1] = f.vsub(r[off : i + 1], f.vmul(c, bv))
    return Poly._make(f, q.tolist()), Poly._make(f, r[:db].tolist())


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    a._same(b)
    while not b.is_zero():
        a, b = b, divrem(a, b)[1]
    return a.monic()


def evaluate(f: Poly, x) -> FieldElement:
    """Horner evaluation; ``x`` may live in an extension of ``f``'s field."""
    if isinstance(x, int):
        x = FieldElement(f.field, x % f.field.characteristic)
    F = x.field
    if F != f.field:
        # coefficients embed with unchanged raw values
        g = F.base
        while g is not None and g != f.field:
            g = g.base
        if g is None:
            raise FieldError("field mismatch")
    acc = 0
    xv = x.value
    for c in reversed(f.raw):
        acc = F.add(F.mul(acc, xv), c)
    return FieldElement(F, acc)


def reciprocal(f: Poly) -> Poly:
    """f*(x) = f(0)^-1 x^deg(f) f(1/x); monic, with inverted roots."""
    if f.is_zero() or f.raw[0] == 0:
        raise FieldError("zero constant term")
    F = f.field
    c = F.inv(f.raw[0])
    return Poly._make(F, [F.mul(c, a) for a in reversed(f.raw)])


def is_self_reciprocal(f: Poly) -> bool:
    m = f.monic()
    return reciprocal(m) == m


def product_of_roots(field: FieldDescriptor, roots: Iterable[int]) -> Poly:
    """prod (x - r) for raw roots ``r`` in ``field``."""
    coeffs = [1]
    fsub, fmul = field.sub, field.mul
    for r in roots:
        # multiply by (x - r): new[i] = old[i-1] - r*old[i]
        nxt = [0] * (len(coeffs) + 1)
        nxt[-1] = coeffs[-1]
        for i in range(len(coeffs) - 1, 0, -1):
            nxt[i] = fsub(coeffs[i - 1], fmul(r, coeffs[i]))
        nxt[0] = fsub(0, fmul(r, coeffs[0]))
        coeffs = nxt
    return Poly._make(field, coeffs)


def product_of_linear_factors(theta: FieldElement, exponents: Iterable[int]) -> Poly:
    """prod_{t in exponents} (x - theta^t), a monic polynomial over theta's field."""
    F = theta.field
    if theta.value == 0:
        raise FieldError("theta must be nonzero")
    return product_of_roots(F, (F.pow(theta.value, t) for t in exponents))


def x_pow_n_minus_one(field: FieldDescriptor, n: int) -> Poly:
    return Poly._make(field, [field.neg(1)] + [0] * (n - 1) + [1])


# -------------------------------------------------------------- rendering
_SYMBOLS = "abcdefgh"


def _element_terms(field: FieldDescriptor, v: int, depth: int = 0) -> list[str]:
    """Monomials of a field element in the adjoined-root symbols, ascending."""
    if field.base is None:
        return [str(v)] if v else []
    sym = _SYMBOLS[_level(field)]
    out = []
    for j, d in enumerate(field.digits(v)):
        if not d:
            continue
        atom = "" if j == 0 else (sym if j == 1 else f"{sym}^{j}")
        if field.base.base is None:
            scal = "" if (d == 1 and atom) else str(d)
            out.append(scal + atom)
        else:
            inner = _element_terms(field.base, d)
            inner_s = inner[0] if len(inner) == 1 else "(" + "+".join(inner) + ")"
            if not atom:
                out.append(inner_s)
            else:
                out.append(atom if inner_s == "1" else inner_s + atom)
    return out


def _level(field: FieldDescriptor) -> int:
    lv = -1
    f = field
    while f.base is not None:
        lv += 1
        f = f.base
    return lv


def format_element(field: FieldDescriptor, v: int) -> str:
    terms = _element_terms(field, v)
    return "+".join(terms) if terms else "0"


def format_poly(f: Poly) -> str:
    """Ascending rendering in the style ``1+a+x+a x+x^2``.

    Extension-field coefficients are expanded into their monomials, each
    carrying the power of x (so ``(a+1)x`` prints as ``x+a x``).  Over a
    tower level the coefficient is kept parenthesised.
    """
    F = f.field
    if f.is_zero():
        return "0"
    tokens: list[str] = []
    flat = F.base is None or F.base.base is None
    for i, c in enumerate(f.raw):
        if not c:
            continue
        xpart = "" if i == 0 else ("x" if i == 1 else f"x^{i}")
        if flat:
            for term in _element_terms(F, c):
                tokens.append(_join(term, xpart))
        else:
            terms = _element_terms(F, c)
            s = terms[0] if len(terms) == 1 else "(" + "+".join(terms) + ")"
            tokens.append(_join(s, xpart))
    return "+".join(tokens)


def _join(coef: str, xpart: str) -> str:
    if not xpart:
        return coef
    if coef == "1":
        return xpart
    if coef and coef[-1].isdigit() and not any(ch.isalpha() for ch in coef):
        return coef + xpart
    return f"{coef} {xpart}"
