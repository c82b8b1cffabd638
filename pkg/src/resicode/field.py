"""Finite fields GF(p), GF(p^k) and two-level towers GF(p) < GF(q) < GF(q^N).

Every element is stored as a non-negative integer ("raw" value).  For a prime
field the raw value is the residue itself.  For an extension of degree k over a
base field B the raw value is ``sum(c_i * |B|**i)`` where ``c_i`` is the raw
value of the i-th coefficient (little-endian in the powers of the adjoined
root).  Two consequences are used throughout the package:

* an element of the base field embeds into the extension with the *same* raw
  value, so subfield membership is the test ``raw < |B|`` and coercing a
  polynomial down the tower is a relabelling of its field;
* in characteristic two, field addition at every tower level is ``a ^ b``.

Small fields (order <= 4096) get exp/log tables; fields of order <= 256 also
get dense numpy addition/multiplication tables, which the matrix and
polynomial kernels use for vectorised work.
"""

from __future__ import annotations

from functools import cached_property
from itertools import product as _cartesian
from typing import TYPE_CHECKING, Iterable, Iterator, Sequence

import numpy as np
from sympy import factorint, isprime

if TYPE_CHECKING:  # pragma: no cover
    from .poly import Poly

__all__ = [
    "FieldDescriptor",
    "FieldElement",
    "FieldError",
    "make_prime_field",
    "make_extension_field",
    "make_field",
    "add",
    "sub",
    "mul",
    "inv",
    "power",
    "nth_primitive_root",
    "subfield_membership",
    "coerce_to_base",
    "parse_field",
]

_LOG_TABLE_LIMIT = 4096
_DENSE_TABLE_LIMIT = 256


class FieldError(ValueError):
    """Invalid field construction or arithmetic request."""


class FieldDescriptor:
    """A finite field, either prime or a simple extension of another field.

    Use :func:`make_prime_field` / :func:`make_extension_field` rather than
    calling the constructor directly.
    """

    def __init__(
        self,
        characteristic: int,
        extension_degree: int,
        base: FieldDescriptor | None,
        modulus_raw: tuple[int, ...] | None,
    ) -> None:
        self.characteristic = characteristic
        self.extension_degree = extension_degree
        self.base = base
        self._modulus_raw = modulus_raw
        if base is None:
            self.order = characteristic
            self.total_degree = 1
        else:
            self.order = base.order**extension_degree
            self.total_degree = base.total_degree * extension_degree
        self._primitive: int | None = None
        self._exp: list[int] | None = None
        self._log: list[int] | None = None

        if base is not None:
            bsize = base.order
            self._bsize = bsize
            self._shift = bsize.bit_length() - 1 if bsize & (bsize - 1) == 0 else 0
            self._mask = bsize - 1
            # x^k = -(m_0 + ... + m_{k-1} x^{k-1})
            self._reduce = tuple(base.neg(c) for c in modulus_raw[:-1])

    # ------------------------------------------------------------------ basics
    @property
    def is_prime_field(self) -> bool:
        return self.base is None

    @property
    def prime_field(self) -> FieldDescriptor:
        f = self
        while f.base is not None:
            f = f.base
        return f

    @property
    def modulus(self) -> Poly | None:
        """Defining polynomial over the base field (``None`` for prime fields)."""
        if self._modulus_raw is None:
            return None
        from .poly import Poly

        return Poly(self.base, self._modulus_raw)

    @property
    def primitive_element(self) -> FieldElement:
        return FieldElement(self, self._primitive)

    @property
    def zero(self) -> FieldElement:
        return FieldElement(self, 0)

    @property
    def one(self) -> FieldElement:
        return FieldElement(self, 1)

    def _key(self) -> tuple:
        base_key = None if self.base is None else self.base._key()
        return (self.characteristic, self.extension_degree, base_key, self._modulus_raw, self._primitive)

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        if not isinstance(other, FieldDescriptor):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"<{self.describe()}>"

    def describe(self) -> str:
        """Text form ``GF(p^k; modulus=[..]; primitive=[..])``.

        ``k`` is the degree over the prime field.  A tower level whose base is
        itself an extension appends ``; base=GF(...)`` so the string is enough
        to rebuild the field.
        """
        if self.base is None:
            mod = "none"
        else:
            mod = _fmt_nested([self.base.coeff_tree(c) for c in self._modulus_raw])
        text = (
            f"GF({self.characteristic}^{self.total_degree}; modulus={mod}; "
            f"primitive={_fmt_nested(self.coeff_tree(self._primitive))}"
        )
        if self.base is not None and self.base.base is not None:
            text += f"; base={self.base.describe()}"
        return text + ")"

    # ------------------------------------------------------------ conversions
    def digits(self, a: int) -> list[int]:
        """Raw base-field coefficients of ``a`` (little-endian, length k)."""
        k = self.extension_degree
        if self.base is None:
            return [a]
        if self._shift:
            s, m = self._shift, self._mask
            return [(a >> (s * i)) & m for i in range(k)]
        out = []
        b = self._bsize
        for _ in range(k):
            a, r = divmod(a, b)
            out.append(r)
        return out

    def pack(self, digits: Sequence[int]) -> int:
        if self.base is None:
            return digits[0] % self.characteristic if digits else 0
        v = 0
        if self._shift:
            s = self._shift
            for i in range(len(digits) - 1, -1, -1):
                v = (v << s) | digits[i]
            return v
        b = self._bsize
        for i in range(len(digits) - 1, -1, -1):
            v = v * b + digits[i]
        return v

    def coeff_tree(self, a: int):
        """Nested coefficient lists down to prime-field integers."""
        if self.base is None:
            return a
        if self.base.base is None:
            return self.digits(a)
        return [self.base.coeff_tree(c) for c in self.digits(a)]

    def element(self, value) -> FieldElement:
        """Build an element from a raw int, a FieldElement, or a coefficient sequence."""
        if isinstance(value, FieldElement):
            return FieldElement(self, self.lift(value))
        if isinstance(value, (int, np.integer)):
            v = int(value)
            if self.base is None:
                return FieldElement(self, v % self.characteristic)
            if not 0 <= v < self.order:
                raise FieldError(f"raw value {v} out of range for {self.describe()}")
            return FieldElement(self, v)
        coeffs = list(value)
        if self.base is None:
            if len(coeffs) != 1:
                raise FieldError("prime field elements take a single coefficient")
            return self.element(coeffs[0])
        if len(coeffs) > self.extension_degree:
            raise FieldError("too many coefficients")
        raw = [self.base.element(c).value for c in coeffs]
        raw += [0] * (self.extension_degree - len(raw))
        return FieldElement(self, self.pack(raw))

    __call__ = element

    def lift(self, x: FieldElement) -> int:
        """Raw value of ``x`` inside this field (identity or base embedding)."""
        f = x.field
        g = self
        while g is not None:
            if g == f:
                return x.value
            g = g.base
        raise FieldError("field mismatch")

    def elements(self) -> Iterator[FieldElement]:
        for v in range(self.order):
            yield FieldElement(self, v)

    def enumeration_order(self) -> Iterator[int]:
        """Raw values ordered by comparing (c_0, c_1, ...) lexicographically.

        Base coefficients are compared by their own raw value.
        """
        if self.base is None:
            yield from range(self.order)
            return
        for combo in _cartesian(range(self._bsize), repeat=self.extension_degree):
            yield self.pack(combo)

    # ------------------------------------------------------------- arithmetic
    def add(self, a: int, b: int) -> int:
        if self.characteristic == 2:
            return a ^ b
        if self.base is None:
            return (a + b) % self.characteristic
        return self._digitwise(a, b, 1)

    def sub(self, a: int, b: int) -> int:
        if self.characteristic == 2:
            return a ^ b
        if self.base is None:
            return (a - b) % self.characteristic
        return self._digitwise(a, b, -1)

    def neg(self, a: int) -> int:
        if self.characteristic == 2:
            return a
        if self.base is None:
            return (-a) % self.characteristic
        return self._digitwise(0, a, -1)

    def _digitwise(self, a: int, b: int, sign: int) -> int:
        # addition is coordinate-wise over the prime field for every tower shape
        p = self.characteristic
        out = 0
        place = 1
        for _ in range(self.total_degree):
            a, ra = divmod(a, p)
            b, rb = divmod(b, p)
            out += ((ra + sign * rb) % p) * place
            place *= p
        return out

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        if self.base is None:
            return a * b % self.characteristic
        if self._log is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_slow(a, b)

    def _mul_slow(self, a: int, b: int) -> int:
        base = self.base
        k = self.extension_degree
        da = self.digits(a)
        db = self.digits(b)
        prod = [0] * (2 * k - 1)
        if base.base is None:
            # prime base: accumulate integers, reduce once
            p = base.characteristic
            for i, x in enumerate(da):
                if x:
                    for j, y in enumerate(db):
                        if y:
                            prod[i + j] += x * y
            red = self._reduce
            for d in range(2 * k - 2, k - 1, -1):
                c = prod[d] % p
                if c:
                    off = d - k
                    for i, m in enumerate(red):
                        if m:
                            prod[off + i] += c * m
            return self.pack([c % p for c in prod[:k]])
        bmul = base.mul
        badd = base.add
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    if y:
                        prod[i + j] = badd(prod[i + j], bmul(x, y))
        red = self._reduce
        for d in range(2 * k - 2, k - 1, -1):
            c = prod[d]
            if c:
                off = d - k
                for i, m in enumerate(red):
                    if m:
                        prod[off + i] = badd(prod[off + i], bmul(c, m))
        return self.pack(prod[:k])

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a = self.inv(a)
            e = -e
        if e == 0:
            return 1
        if a == 0:
            return 0
        if self._log is not None:
            return self._exp[(self._log[a] * e) % (self.order - 1)]
        if self.base is None:
            return pow(a, e, self.characteristic)
        result = 1
        while e:
            if e & 1:
                result = self.mul(result, a)
            e >>= 1
            if e:
                a = self.mul(a, a)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero")
        if self._log is not None:
            return self._exp[(self.order - 1 - self._log[a]) % (self.order - 1)]
        if self.base is None:
            return pow(a, -1, self.characteristic)
        return self.pow(a, self.order - 2)

    def frobenius(self, a: int, times: int = 1) -> int:
        """``a ** (p ** times)`` with p the characteristic."""
        for _ in range(times):
            a = self.pow(a, self.characteristic)
        return a

    def multiplicative_order(self, a: int) -> int:
        if a == 0:
            raise FieldError("zero has no multiplicative order")
        order = self.order - 1
        for ell, e in self._group_factors.items():
            for _ in range(e):
                if self.pow(a, order // ell) == 1:
                    order //= ell
                else:
                    break
        return order

    def is_primitive(self, a: int) -> bool:
        if a == 0:
            return False
        if self.order == 2:
            return a == 1
        top = self.order - 1
        return all(self.pow(a, top // ell) != 1 for ell in self._group_factors)

    @cached_property
    def _group_factors(self) -> dict[int, int]:
        return dict(factorint(self.order - 1))

    # ------------------------------------------------------------ setup hooks
    def _finish(self, primitive: int | None) -> None:
        if primitive is None:
            primitive = next(v for v in self.enumeration_order() if self.is_primitive(v))
        elif not self.is_primitive(primitive):
            raise FieldError("supplied element is not primitive")
        self._primitive = primitive
        if self.base is not None and self.order <= _LOG_TABLE_LIMIT:
            size = self.order - 1
            exp = [0] * (2 * size)
            log = [0] * self.order
            v = 1
            for i in range(size):
                exp[i] = v
                log[v] = i
                v = self._mul_slow(v, primitive)
            for i in range(size, 2 * size):
                exp[i] = exp[i - size]
            self._exp, self._log = exp, log

    # ---------------------------------------------------------- vector tables
    @property
    def vectorizable(self) -> bool:
        """True when numpy kernels can run directly on raw values."""
        return self.base is None or self.order <= _DENSE_TABLE_LIMIT

    @cached_property
    def tables(self) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray] | None:
        """Dense (add, mul, neg, inv) tables for order <= 256, else ``None``."""
        if self.order > _DENSE_TABLE_LIMIT:
            return None
        q = self.order
        addt = np.empty((q, q), dtype=np.int64)
        mult = np.empty((q, q), dtype=np.int64)
        for a in range(q):
            for b in range(q):
                addt[a, b] = self.add(a, b)
                mult[a, b] = self.mul(a, b)
        negt = np.array([self.neg(a) for a in range(q)], dtype=np.int64)
        invt = np.array([0] + [self.inv(a) for a in range(1, q)], dtype=np.int64)
        for t in (addt, mult, negt, invt):
            t.setflags(write=False)
        return addt, mult, negt, invt

    def vadd(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.characteristic == 2:
            return np.bitwise_xor(x, y)
        t = self.tables
        if t is not None:
            return t[0][x, y]
        return (x + y) % self.characteristic

    def vsub(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        if self.characteristic == 2:
            return np.bitwise_xor(x, y)
        t = self.tables
        if t is not None:
            return t[0][x, t[2][y]]
        return (x - y) % self.characteristic

    def vmul(self, x, y) -> np.ndarray:
        t = self.tables
        if t is not None:
            return t[1][x, y]
        return (np.asarray(x, dtype=np.int64) * y) % self.characteristic

    def vsum(self, x: np.ndarray, axis: int = -1) -> np.ndarray:
        """Field sum along one axis."""
        if self.characteristic == 2:
            return np.bitwise_xor.reduce(x, axis=axis)
        if self.tables is None:
            return x.sum(axis=axis) % self.characteristic
        x = np.moveaxis(x, axis, 0)
        acc = np.zeros(x.shape[1:], dtype=np.int64)
        for row in x:
            acc = self.tables[0][acc, row]
        return acc

    def vdot(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        """Matrix product ``a @ b`` over the field."""
        if self.tables is None:
            if self.characteristic < (1 << 20):
                return (a @ b) % self.characteristic
            return (a.astype(object) @ b.astype(object) % self.characteristic).astype(np.int64)
        return self.vsum(self.vmul(a[:, :, None], b[None, :, :]), axis=1)


class FieldElement:
    """An element of a :class:`FieldDescriptor`."""

    __slots__ = ("field", "value")

    def __init__(self, field: FieldDescriptor, value: int) -> None:
        self.field = field
        self.value = value

    @property
    def coeffs(self) -> tuple:
        """Coefficients over the base field (ints for a prime field)."""
        f = self.field
        if f.base is None:
            return (self.value,)
        return tuple(FieldElement(f.base, d) for d in f.digits(self.value))

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field != self.field:
                raise FieldError("field mismatch")
            return other.value
        if isinstance(other, int):
            return _int_in(self.field, other)
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub(self._other(other), self.value))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(self._other(other))))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inverse(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def order(self) -> int:
        return self.field.multiplicative_order(self.value)

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, FieldElement):
            return self.value == other.value and (other.field is self.field or other.field == self.field)
        if isinstance(other, int):
            return self.value == _int_in(self.field, other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.value, self.field.order))

    def __repr__(self) -> str:
        return f"FieldElement({self.field.coeff_tree(self.value)!r})"

    def __str__(self) -> str:
        from .poly import format_element

        return format_element(self.field, self.value)


def _int_in(field: FieldDescriptor, n: int) -> int:
    """Raw value of the integer ``n`` (as a multiple of 1) in ``field``."""
    return n % field.characteristic


def _fmt_nested(x) -> str:
    if isinstance(x, list):
        return "[" + ", ".join(_fmt_nested(y) for y in x) + "]"
    return str(x)


# ---------------------------------------------------------------- constructors
def make_prime_field(p: int) -> FieldDescriptor:
    """GF(p) with its smallest generator as primitive element."""
    if not isinstance(p, (int, np.integer)) or p < 2 or not isprime(int(p)):
        raise FieldError(f"{p} is not prime")
    f = FieldDescriptor(int(p), 1, None, None)
    f._finish(None)
    return f


def _is_irreducible(base: FieldDescriptor, coeffs: tuple[int, ...]) -> bool:
    from .poly import Poly

    m = Poly(base, coeffs)
    k = m.degree
    if k <= 0:
        return False
    if k == 1:
        return True
    x = Poly(base, (0, 1))
    q = base.order
    xp = x
    for i in range(1, k // 2 + 1):
        xp = xp.powmod(q, m)
        if (xp - x).gcd(m).degree > 0:
            return False
    # degree condition x^(q^k) = x holds automatically once no factor of
    # degree <= k/2 exists, but it is cheap to confirm
    for _ in range(k // 2 + 1, k + 1):
        xp = xp.powmod(q, m)
    return xp == x


def make_extension_field(
    base: FieldDescriptor,
    k: int,
    modulus=None,
    primitive=None,
) -> FieldDescriptor:
    """Degree-``k`` extension of ``base``.

    ``modulus`` may be a :class:`~resicode.poly.Poly` over ``base`` or a
    little-endian coefficient sequence (raw ints or base elements); it must be
    monic and irreducible.  When omitted, the lexicographically smallest monic
    irreducible polynomial is used (coefficients compared from the constant
    term up).  ``primitive`` may pin the primitive element; by default the
    smallest one in the same order is taken.  ``k == 1`` returns ``base``.
    """
    if k < 1:
        raise FieldError("extension degree must be positive")
    if k == 1 and modulus is None:
        return base
    if modulus is not None:
        raw = _coerce_coeffs(base, modulus)
        while raw and raw[-1] == 0:
            raw = raw[:-1]
        if len(raw) != k + 1:
            raise FieldError("modulus degree does not match extension degree")
        if raw[-1] != 1:
            raise FieldError("modulus must be monic")
        if not _is_irreducible(base, raw):
            raise FieldError("reducible modulus")
    else:
        raw = None
        # a zero constant term is never irreducible for k > 1
        for combo in _cartesian(range(1, base.order), *[range(base.order)] * (k - 1)):
            cand = tuple(combo) + (1,)
            if _is_irreducible(base, cand):
                raw = cand
                break
        assert raw is not None
    field = FieldDescriptor(base.characteristic, k, base, tuple(raw))
    prim = None
    if primitive is not None:
        prim = field.element(primitive).value if not isinstance(primitive, FieldElement) else primitive.value
    field._finish(prim)
    return field


def make_field(q: int, modulus=None) -> FieldDescriptor:
    """GF(q) for a prime power q, as a single extension of its prime field."""
    fac = factorint(q)
    if len(fac) != 1:
        raise FieldError(f"{q} is not a prime power")
    (p, e), = fac.items()
    prime = make_prime_field(p)
    if e == 1:
        return prime
    return make_extension_field(prime, e, modulus)


def _coerce_coeffs(field: FieldDescriptor, coeffs) -> tuple[int, ...]:
    from .poly import Poly

    if isinstance(coeffs, Poly):
        if coeffs.field != field:
            raise FieldError("field mismatch")
        return coeffs.raw
    return tuple(field.element(c).value for c in coeffs)


# -------------------------------------------------------- element operations
def _check(a: FieldElement, b: FieldElement) -> None:
    if a.field is not b.field and a.field != b.field:
        raise FieldError("field mismatch")


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    _check(a, b)
    return a * b


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, e: int) -> FieldElement:
    return a**e


def nth_primitive_root(top_field: FieldDescriptor, n: int, exponent: int = 1) -> FieldElement:
    """theta = alpha^((order-1)/n), optionally raised to ``exponent``.

    ``exponent`` must be a unit modulo n; it selects a different primitive
    n-th root of unity.
    """
    size = top_field.order - 1
    if n < 1 or size % n:
        raise FieldError(f"no {n}-th root of unity in field of order {top_field.order}")
    from math import gcd

    if gcd(exponent, n) != 1:
        raise FieldError("theta exponent must be coprime to n")
    theta = top_field.primitive_element ** (size // n)
    return theta**exponent if exponent != 1 else theta


def subfield_membership(x: FieldElement, q: int) -> bool:
    """True iff ``x`` lies in the base field of order ``q``.

    The coefficient test and the Frobenius test ``x**q == x`` are both run;
    they must agree.
    """
    f = x.field
    if f.order == q:
        return True
    if f.base is None or f.base.order != q:
        raise FieldError(f"field has no base of order {q}")
    by_coeffs = x.value < f.base.order
    by_frobenius = f.pow(x.value, q) == x.value
    if by_coeffs != by_frobenius:  # pragma: no cover - would mean broken arithmetic
        raise AssertionError("subfield tests disagree")
    return by_coeffs


def coerce_to_base(f: Poly) -> Poly:
    """Re-type a polynomial over GF(q^N) as one over its base GF(q)."""
    from .poly import Poly

    field = f.field
    if field.base is None:
        return f
    bsize = field.base.order
    for c in f.raw:
        if c >= bsize:
            raise FieldError("not defined over base field")
    return Poly(field.base, f.raw)


def parse_field(text: str) -> FieldDescriptor:
    """Inverse of :meth:`FieldDescriptor.describe`."""
    import ast
    import re

    text = text.strip()
    m = re.fullmatch(r"GF\((\d+)\^(\d+); modulus=(.*?); primitive=(\[.*?\]|\d+)(?:; base=(GF\(.*\)))?\)", text)
    if not m:
        raise FieldError(f"cannot parse field description {text!r}")
    p, total, mod_s, prim_s, base_s = m.groups()
    p, total = int(p), int(total)
    prim = ast.literal_eval(prim_s)
    if mod_s == "none":
        f = make_prime_field(p)
        if f._primitive != prim:
            f = FieldDescriptor(p, 1, None, None)
            f._finish(prim)
        return f
    mod = ast.literal_eval(mod_s)
    base = parse_field(base_s) if base_s else make_prime_field(p)
    k = total // base.total_degree
    mod_raw = [base.element(c).value for c in mod]
    return make_extension_field(base, k, mod_raw, primitive=[base.element(c).value for c in prim])
