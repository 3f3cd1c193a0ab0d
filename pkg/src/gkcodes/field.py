"""Exact arithmetic in small extension fields GF(p^m).

Elements are stored by their canonical integer encoding
``enc = sum(coords[i] * p**i)`` where ``coords`` are the coordinates in
the polynomial basis ``1, w, ..., w^(m-1)`` and ``w`` is the class of the
indeterminate modulo the defining polynomial.  All arithmetic goes
through full lookup tables, which is cheap for the sizes used here
(at most 729 elements) and lets matrix code work on plain integer
arrays.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

#: Default defining polynomials, little-endian coefficient vectors.
#: GF(64): X^6 + X^4 + X^3 + X + 1.  GF(729): X^6 - X^4 + X^2 - X - 1.
GF64_POLY = (1, 1, 0, 1, 1, 0, 1)
GF729_POLY = (2, 2, 1, 0, 2, 0, 1)


class FieldError(ValueError):
    pass


def _polymulmod(a: list[int], b: list[int], irr: Sequence[int], p: int) -> list[int]:
    m = len(irr) - 1
    prod = [0] * (2 * m - 1) if m > 0 else [0]
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                prod[i + j] = (prod[i + j] + ai * bj) % p
    # reduce using monic irr: X^m = -sum irr[i] X^i
    for k in range(len(prod) - 1, m - 1, -1):
        c = prod[k]
        if c:
            prod[k] = 0
            for i in range(m):
                prod[k - m + i] = (prod[k - m + i] - c * irr[i]) % p
    return prod[:m]


def _poly_trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mod(a: list[int], b: list[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    inv_lead = pow(b[-1], p - 2, p)
    while len(a) >= len(b):
        c = a[-1] * inv_lead % p
        shift = len(a) - len(b)
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - c * bi) % p
        a = _poly_trim(a)
    return a


def _poly_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a = _poly_trim(list(a))
    b = _poly_trim(list(b))
    while b:
        a, b = b, _poly_mod(a, b, p)
    return a


def _x_pow_mod(e: int, irr: Sequence[int], p: int) -> list[int]:
    """X^e modulo irr, by square and multiply."""
    m = len(irr) - 1
    result = [1] + [0] * (m - 1)
    base = [0] * m
    if m == 1:
        base = [(-irr[0]) % p]
    else:
        base[1] = 1
    while e:
        if e & 1:
            result = _polymulmod(result, base, irr, p)
        base = _polymulmod(base, base, irr, p)
        e >>= 1
    return result


def is_irreducible(irr: Sequence[int], p: int) -> bool:
    """Rabin-style test: no roots, X^(p^m) = X and gcd(X^(p^(m/r)) - X, f) = 1."""
    m = len(irr) - 1
    if m == 1:
        return True
    if irr[0] % p == 0:
        return False
    for r in range(p):
        if sum(c * pow(r, i, p) for i, c in enumerate(irr)) % p == 0:
            return False
    x = [0, 1] + [0] * (m - 2)
    if _x_pow_mod(p**m, irr, p) != x:
        return False
    for r in _prime_factors(m):
        h = _x_pow_mod(p ** (m // r), irr, p)
        h[1] = (h[1] - 1) % p
        if len(_poly_gcd(list(irr), h, p)) > 1:
            return False
    return True


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


class FieldSpec:
    """GF(p^m) with a fixed polynomial basis.

    The instance is immutable after construction.  Two specs compare equal
    when they share ``p``, ``m`` and the defining polynomial.
    """

    def __init__(self, p: int, m: int, irr: Sequence[int]):
        if p not in (2, 3):
            raise FieldError(f"unsupported characteristic {p}")
        irr = tuple(int(c) % p for c in irr)
        if len(irr) != m + 1:
            raise FieldError(f"defining polynomial must have degree {m}")
        if irr[m] != 1:
            raise FieldError("defining polynomial is not monic")
        if not is_irreducible(irr, p):
            raise FieldError("defining polynomial is not irreducible")
        self.p = p
        self.m = m
        self.irr = irr
        self.order = p**m
        self._build_tables()

    def _build_tables(self) -> None:
        p, m, q = self.p, self.m, self.order
        coords = np.array([[(e // p**i) % p for i in range(m)] for e in range(q)], dtype=np.int64)
        weights = p ** np.arange(m, dtype=np.int64)
        self._coords = coords
        add = ((coords[:, None, :] + coords[None, :, :]) % p) @ weights
        self.add_table = add.astype(np.int32)
        self.neg_table = ((-coords) % p @ weights).astype(np.int32)

        # multiplication by w (the basis indeterminate), used to build powers
        def times_w(vec: list[int]) -> list[int]:
            top = vec[-1]
            out = [0] + vec[:-1] if m > 1 else [0]
            return [(out[i] - top * self.irr[i]) % p for i in range(m)]

        def enc(vec: Sequence[int]) -> int:
            return int(sum(int(c) * p**i for i, c in enumerate(vec)))

        # find generator: smallest enc with multiplicative order q - 1
        self.gen = None
        for cand in range(1, q):
            if self._order_of(coords[cand].tolist()) == q - 1:
                self.gen = cand
                break
        if self.gen is None:  # pragma: no cover - impossible for a field
            raise FieldError("no multiplicative generator found")
        exp = np.zeros(2 * (q - 1), dtype=np.int32)
        log = np.full(q, -1, dtype=np.int64)
        cur = [1] + [0] * (m - 1)
        gen_vec = coords[self.gen].tolist()
        for k in range(q - 1):
            e = enc(cur)
            exp[k] = e
            exp[k + q - 1] = e
            log[e] = k
            cur = _polymulmod(cur, gen_vec, self.irr, p)
        self.exp_table = exp
        self.log_table = log
        la = log[1:]
        mul = np.zeros((q, q), dtype=np.int32)
        mul[1:, 1:] = exp[(la[:, None] + la[None, :]) % (q - 1)]
        self.mul_table = mul
        inv = np.zeros(q, dtype=np.int32)
        inv[1:] = exp[(-la) % (q - 1)]
        self.inv_table = inv
        # enc of the basis indeterminate w
        self.w = enc(times_w([1] + [0] * (m - 1))) if m > 1 else enc([(-self.irr[0]) % p])

    def _order_of(self, vec: list[int]) -> int:
        q1 = self.order - 1
        one = [1] + [0] * (self.m - 1)
        for r in _prime_factors(q1):
            if self._vec_pow(vec, q1 // r) == one:
                return 0  # not a generator; exact order not needed
        return q1

    def _vec_pow(self, vec: list[int], e: int) -> list[int]:
        result = [1] + [0] * (self.m - 1)
        base = list(vec)
        while e:
            if e & 1:
                result = _polymulmod(result, base, self.irr, self.p)
            base = _polymulmod(base, base, self.irr, self.p)
            e >>= 1
        return result

    # -- identity ----------------------------------------------------------
    def _key(self) -> tuple:
        return (self.p, self.m, self.irr)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, FieldSpec) and self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"FieldSpec(p={self.p}, m={self.m}, irr={list(self.irr)})"

    # -- integer-level arithmetic -----------------------------------------
    @cached_property
    def lists(self) -> tuple[list[list[int]], list[list[int]], list[int], list[int]]:
        """Plain-list copies of (add, mul, neg, inv) for scalar hot loops."""
        return (self.add_table.tolist(), self.mul_table.tolist(),
                self.neg_table.tolist(), self.inv_table.tolist())

    def add(self, a: int, b: int) -> int:
        return int(self.add_table[a, b])

    def sub(self, a: int, b: int) -> int:
        return int(self.add_table[a, self.neg_table[b]])

    def mul(self, a: int, b: int) -> int:
        return int(self.mul_table[a, b])

    def neg(self, a: int) -> int:
        return int(self.neg_table[a])

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("division by zero")
        return int(self.inv_table[a])

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("division by zero")
            return 1 if n == 0 else 0
        return int(self.exp_table[(int(self.log_table[a]) * n) % (self.order - 1)])

    def frobenius(self, a: int, r: int = 1) -> int:
        """a^(p^r)."""
        if r < 0:
            raise ValueError("r must be non-negative")
        return self.pow(a, self.p ** (r % self.m))

    def gen_pow(self, k: int) -> int:
        return int(self.exp_table[k % (self.order - 1)])

    def w_pow(self, k: int) -> int:
        """Power of the basis indeterminate w (the root of the defining polynomial)."""
        return self.pow(self.w, k)

    def from_int(self, n: int) -> int:
        """Image of an integer under Z -> GF(p)."""
        return n % self.p

    def coords(self, a: int) -> list[int]:
        return self._coords[a].tolist()

    # -- array-level arithmetic -------------------------------------------
    def vadd(self, a, b):
        return self.add_table[a, b]

    def vsub(self, a, b):
        return self.add_table[a, self.neg_table[b]]

    def vmul(self, a, b):
        return self.mul_table[a, b]

    def vpow(self, a, n: int):
        a = np.asarray(a)
        if n == 0:
            return np.ones_like(a, dtype=np.int32)
        out = self.exp_table[(self.log_table[a] * n) % (self.order - 1)]
        return np.where(a == 0, 0, out).astype(np.int32)

    def vinv(self, a):
        a = np.asarray(a)
        if np.any(a == 0):
            raise ZeroDivisionError("division by zero")
        return self.inv_table[a]

    def vpoly(self, coeffs: Sequence[int], a):
        """Evaluate a polynomial with field-encoded coefficients (little endian) at array a."""
        a = np.asarray(a)
        out = np.zeros_like(a, dtype=np.int32)
        for c in reversed(coeffs):
            out = self.add_table[self.mul_table[out, a], c]
        return out

    # -- element-level API -------------------------------------------------
    def __call__(self, enc: int) -> "FieldElement":
        return FieldElement(self, int(enc))

    def __len__(self) -> int:
        return self.order

    def __iter__(self) -> Iterator["FieldElement"]:
        return (FieldElement(self, e) for e in range(self.order))

    def elements(self) -> list["FieldElement"]:
        return list(self)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def generator(self) -> "FieldElement":
        return FieldElement(self, self.gen)

    def element(self, coords: Sequence[int]) -> "FieldElement":
        if len(coords) != self.m:
            raise FieldError("coordinate vector has wrong length")
        if any(not 0 <= c < self.p for c in coords):
            raise FieldError("coordinate out of range")
        return FieldElement(self, int(sum(c * self.p**i for i, c in enumerate(coords))))


@dataclass(frozen=True)
class FieldElement:
    """A value in a :class:`FieldSpec`, identified by its integer encoding."""

    spec: FieldSpec
    enc: int

    def __post_init__(self) -> None:
        if not 0 <= self.enc < self.spec.order:
            raise FieldError(f"encoding {self.enc} out of range")

    @property
    def coords(self) -> list[int]:
        return self.spec.coords(self.enc)

    def _other(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.spec != self.spec:
                raise FieldError("elements belong to different fields")
            return other.enc
        if isinstance(other, int):
            return self.spec.from_int(other)
        return NotImplemented

    def __add__(self, other):
        return FieldElement(self.spec, self.spec.add(self.enc, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self.enc, self._other(other)))

    def __rsub__(self, other):
        return FieldElement(self.spec, self.spec.sub(self._other(other), self.enc))

    def __mul__(self, other):
        return FieldElement(self.spec, self.spec.mul(self.enc, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.spec, self.spec.neg(self.enc))

    def __truediv__(self, other):
        return self * FieldElement(self.spec, self.spec.inv(self._other(other)))

    def __pow__(self, n: int):
        return FieldElement(self.spec, self.spec.pow(self.enc, n))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.spec, self.spec.inv(self.enc))

    def frobenius(self, r: int = 1) -> "FieldElement":
        return FieldElement(self.spec, self.spec.frobenius(self.enc, r))

    def __bool__(self) -> bool:
        return self.enc != 0

    def __int__(self) -> int:
        return self.enc

    def __repr__(self) -> str:
        return f"GF({self.spec.order})[{self.enc}]"


# module-level convenience wrappers matching the functional operation names
def field_create(p: int, m: int, irr: Sequence[int]) -> FieldSpec:
    return FieldSpec(p, m, irr)


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, n: int) -> FieldElement:
    return a**n


def frobenius(a: FieldElement, r: int) -> FieldElement:
    return a.frobenius(r)


_CACHE: dict[tuple, FieldSpec] = {}


def get_field(p: int, m: int, irr: Sequence[int] | None = None) -> FieldSpec:
    """Cached field construction; defaults to the package's standard polynomials."""
    if irr is None:
        irr = {(2, 6): GF64_POLY, (3, 6): GF729_POLY}[(p, m)]
    key = (p, m, tuple(int(c) % p for c in irr))
    if key not in _CACHE:
        _CACHE[key] = FieldSpec(p, m, irr)
    return _CACHE[key]
