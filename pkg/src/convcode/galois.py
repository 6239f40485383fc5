"""Exact arithmetic in small finite fields F_q, q = p^m <= 256.

Field elements are plain Python integers in 0..q-1.  The integer encodes
the element's coordinates in the polynomial basis 1, a, a^2, ..., a^(m-1)
as base-p digits, least significant first:

    c_0 + c_1*a + ... + c_{m-1}*a^(m-1)   <->   c_0 + c_1*p + ... + c_{m-1}*p^(m-1)

so 0 is the additive identity, 1 the multiplicative identity, and the
residue class of x (written `a` above) is encoded as the integer p.

An extension field is reduced modulo a monic irreducible polynomial of
degree m over F_p.  When no modulus is given, the irreducible polynomial
with the smallest integer encoding (same digit scheme, low degree first)
is chosen.  These defaults are fixed so serialized matrices stay portable:

    (2, 2): x^2 + x + 1           encoding 7
    (2, 3): x^3 + x + 1           encoding 11
    (2, 4): x^4 + x + 1           encoding 19
    (2, 8): x^8 + x^4 + x^3 + x + 1   encoding 283
    (3, 2): x^2 + 1               encoding 10
    (3, 3): x^3 + 2x + 1          encoding 34

All operations are pure; a FieldSpec is immutable after construction and
safe for unrestricted concurrent use.
"""

from __future__ import annotations

from typing import Iterable, Optional

# A field element is just an int in 0..q-1 under the encoding above.
FieldElement = int

MAX_ORDER = 256


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _digits(value: int, p: int, width: int) -> tuple[int, ...]:
    out = []
    for _ in range(width):
        out.append(value % p)
        value //= p
    return tuple(out)


def _pack(digits: Iterable[int], p: int) -> int:
    value = 0
    for d in reversed(list(digits)):
        value = value * p + d
    return value


def _fp_poly_divmod(num: list[int], den: list[int], p: int) -> tuple[list[int], list[int]]:
    """Long division of coefficient lists over F_p (low degree first)."""
    num = list(num)
    dd = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p) if p > 2 else den[-1]
    quot = [0] * max(len(num) - dd, 1)
    while len(num) - 1 >= dd and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            break
        shift = len(num) - 1 - dd
        factor = (num[-1] * inv_lead) % p
        quot[shift] = factor
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
    while num and num[-1] == 0:
        num.pop()
    return quot, num


def _fp_poly_irreducible(coeffs: tuple[int, ...], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(coeffs) - 1
    if m < 1 or coeffs[-1] != 1:
        return False
    if m == 1:
        return True
    for d in range(1, m // 2 + 1):
        for low in range(p**d):
            div = list(_digits(low, p, d)) + [1]
            _, rem = _fp_poly_divmod(list(coeffs), div, p)
            if not rem:
                return False
    return True


def default_modulus(p: int, m: int) -> tuple[int, ...]:
    """Monic irreducible of degree m over F_p with the smallest encoding."""
    for low in range(p**m):
        cand = _digits(low, p, m) + (1,)
        if _fp_poly_irreducible(cand, p):
            return cand
    raise ValueError(f"no irreducible polynomial of degree {m} over F_{p}")  # pragma: no cover


class FieldSpec:
    """Arithmetic of F_q for q = p^m, with exp/log tables for extensions.

    Construct through :func:`field_make`.  Elements are ints 0..q-1.
    """

    def __init__(self, p: int, m: int, modulus: Optional[tuple[int, ...]]):
        self.p = p
        self.m = m
        self.q = p**m
        self.modulus = modulus  # None for prime fields
        self._exp: Optional[list[int]] = None
        self._log: Optional[list[int]] = None
        if m > 1:
            self._build_tables()

    # -- construction helpers ------------------------------------------------

    def _mul_raw(self, a: int, b: int) -> int:
        """Polynomial-basis multiplication without tables (table bootstrap)."""
        p, m = self.p, self.m
        da = _digits(a, p, m)
        db = _digits(b, p, m)
        prod = [0] * (2 * m - 1)
        for i, ca in enumerate(da):
            if ca:
                for j, cb in enumerate(db):
                    prod[i + j] = (prod[i + j] + ca * cb) % p
        _, rem = _fp_poly_divmod(prod, list(self.modulus), p)
        rem += [0] * (m - len(rem))
        return _pack(rem[:m], p)

    def _build_tables(self) -> None:
        q = self.q
        for g in range(2, q):
            order = 1
            val = g
            while val != 1:
                val = self._mul_raw(val, g)
                order += 1
                if order > q:  # pragma: no cover - modulus reducibility guard
                    raise ValueError("modulus is not irreducible")
            if order == q - 1:
                break
        else:  # pragma: no cover
            raise ValueError("no multiplicative generator found")
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        val = 1
        for i in range(q - 1):
            exp[i] = val
            exp[i + q - 1] = val
            log[val] = i
            val = self._mul_raw(val, g)
        self._exp = exp
        self._log = log

    # -- basic queries -------------------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def units(self) -> range:
        """Nonzero elements."""
        return range(1, self.q)

    def coeffs(self, a: int) -> tuple[int, ...]:
        """Base-p digit vector of an element (length m, low power first)."""
        return _digits(a, self.p, self.m)

    def from_coeffs(self, digits: Iterable[int]) -> int:
        return _pack((d % self.p for d in digits), self.p)

    @property
    def modulus_encoding(self) -> Optional[int]:
        if self.modulus is None:
            return None
        return _pack(self.modulus, self.p)

    def _check(self, a: int) -> int:
        if not isinstance(a, int) or not 0 <= a < self.q:
            raise ValueError(f"{a!r} is not an element of {self!r}")
        return a

    # -- arithmetic ----------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if self.m == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        p = self.p
        return _pack(
            ((x + y) % p for x, y in zip(self.coeffs(a), self.coeffs(b))), p
        )

    def neg(self, a: int) -> int:
        self._check(a)
        if self.p == 2:
            return a
        if self.m == 1:
            return (-a) % self.p
        p = self.p
        return _pack(((-x) % p for x in self.coeffs(a)), p)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        self._check(a), self._check(b)
        if self.m == 1:
            return (a * b) % self.p
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        if self.m == 1:
            return pow(a, self.p - 2, self.p)
        return self._exp[(self.q - 1) - self._log[a]]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        self._check(a)
        if a == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 has no multiplicative inverse")
            return 0
        if self.m == 1:
            return pow(a, e % (self.p - 1), self.p)
        return self._exp[(self._log[a] * e) % (self.q - 1)]

    # -- dunder --------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.m, self.modulus) == (other.p, other.m, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.m, self.modulus))

    def __repr__(self) -> str:
        return f"F{self.q}"


def field_make(
    p: int,
    m: int = 1,
    modulus: Optional[Iterable[int]] = None,
    *,
    max_order: int = MAX_ORDER,
) -> FieldSpec:
    """Construct F_{p^m}.

    `modulus` is a coefficient list of a monic degree-m polynomial over F_p,
    low degree first; omitted, the documented default is used.  Rejected:
    non-prime p, q above `max_order`, reducible or non-monic moduli.
    """
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if m < 1:
        raise ValueError(f"extension degree m={m} must be >= 1")
    if p**m > max_order:
        raise ValueError(f"field order {p**m} exceeds the ceiling {max_order}")
    if m == 1:
        if modulus is not None:
            raise ValueError("prime fields take no modulus")
        return FieldSpec(p, 1, None)
    if modulus is None:
        mod = default_modulus(p, m)
    else:
        mod = tuple(int(c) % p for c in modulus)
        if len(mod) != m + 1 or mod[-1] != 1:
            raise ValueError(f"modulus must be monic of degree {m}")
        if not _fp_poly_irreducible(mod, p):
            raise ValueError("modulus is reducible over the prime field")
    return FieldSpec(p, m, mod)
