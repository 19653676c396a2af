"""Exact algebra substrate: the integer group ring of Z/n and the
cyclotomic field Q(zeta_n).

Group-ring elements are formal sums sum_e c_e * x^e with integer
coefficients and exponents mod n; all trace polynomials live here.
CyclotomicNumber models elements of Q(zeta_n) reduced modulo the n-th
cyclotomic polynomial, which gives genuine field semantics (every nonzero
element is invertible) for the fixed-point evaluation route.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .errors import BadInput, ModulusMismatch


class GroupRingElement:
    """An element of Z[Z/n]: dense integer coefficient vector indexed by
    exponent in [0, n).  Immutable after construction."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs=None):
        if n < 1:
            raise BadInput(f"group ring modulus must be >= 1, got {n}")
        self.n = n
        if coeffs is None:
            self.coeffs = (0,) * n
        else:
            coeffs = tuple(coeffs)
            if len(coeffs) != n:
                raise BadInput(f"expected {n} coefficients, got {len(coeffs)}")
            self.coeffs = coeffs

    @classmethod
    def zero(cls, n: int) -> "GroupRingElement":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "GroupRingElement":
        return cls.monomial(n, 0, 1)

    @classmethod
    def monomial(cls, n: int, exponent: int, coefficient: int = 1) -> "GroupRingElement":
        buf = [0] * n
        buf[exponent % n] = coefficient
        return cls(n, buf)

    @classmethod
    def from_dict(cls, n: int, d: dict) -> "GroupRingElement":
        buf = [0] * n
        for e, c in d.items():
            buf[e % n] += c
        return cls(n, buf)

    @classmethod
    def geometric(cls, n: int, step: int, count: int) -> "GroupRingElement":
        """sum_{k=0}^{count-1} x^{k*step mod n} (empty sum for count = 0)."""
        if count < 0:
            raise BadInput(f"count must be >= 0, got {count}")
        buf = [0] * n
        e = 0
        s = step % n
        for _ in range(count):
            buf[e] += 1
            e += s
            if e >= n:
                e -= n
        return cls(n, buf)

    def _check(self, other: "GroupRingElement") -> None:
        if self.n != other.n:
            raise ModulusMismatch(f"moduli differ: {self.n} != {other.n}")

    def __add__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.monomial(self.n, 0, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check(other)
        return GroupRingElement(self.n, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    __radd__ = __add__

    def __neg__(self):
        return GroupRingElement(self.n, [-a for a in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.monomial(self.n, 0, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check(other)
        return GroupRingElement(self.n, [a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __rsub__(self, other):
        if isinstance(other, int):
            return GroupRingElement.monomial(self.n, 0, other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return GroupRingElement(self.n, [other * a for a in self.coeffs])
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        self._check(other)
        n = self.n
        buf = [0] * n
        for e, c in enumerate(self.coeffs):
            if c == 0:
                continue
            for f, d in enumerate(other.coeffs):
                if d == 0:
                    continue
                g = e + f
                if g >= n:
                    g -= n
                buf[g] += c * d
        return GroupRingElement(n, buf)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            other = GroupRingElement.monomial(self.n, 0, other)
        if not isinstance(other, GroupRingElement):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __bool__(self):
        return any(self.coeffs)

    def coefficient(self, exponent: int) -> int:
        return self.coeffs[exponent % self.n]

    def items(self) -> list[tuple[int, int]]:
        """Nonzero (exponent, coefficient) pairs, exponents ascending."""
        return [(e, c) for e, c in enumerate(self.coeffs) if c != 0]

    def eval_at_one(self) -> int:
        """Sum of coefficients (the value at the trivial group element)."""
        return sum(self.coeffs)

    def evaluate(self, power: int = 1) -> "CyclotomicNumber":
        """Evaluate the formal sum at zeta_n^power, exactly in Q(zeta_n)."""
        n = self.n
        buf = [0] * n
        for e, c in enumerate(self.coeffs):
            if c:
                buf[(e * power) % n] += c
        return CyclotomicNumber.from_poly(n, buf)

    def __str__(self):
        terms = []
        for e, c in self.items():
            if e == 0:
                terms.append(str(c))
            else:
                mono = "x" if e == 1 else f"x^{e}"
                if c == 1:
                    terms.append(mono)
                elif c == -1:
                    terms.append(f"-{mono}")
                else:
                    terms.append(f"{c}*{mono}")
        if not terms:
            return "0"
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out

    def __repr__(self):
        return f"GroupRingElement({self.n}, {dict(self.items())})"


def gr_add(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a + b


def gr_mul(a: GroupRingElement, b: GroupRingElement) -> GroupRingElement:
    return a * b


def gr_scale(c: int, a: GroupRingElement) -> GroupRingElement:
    return c * a


def gr_geom(step: int, count: int, n: int) -> GroupRingElement:
    return GroupRingElement.geometric(n, step, count)


def gr_eval_at_one(a: GroupRingElement) -> int:
    return a.eval_at_one()


# ----------------------------------------------------------------------
# Integer polynomial helpers (ascending coefficient lists).

def _poly_trim(p: list) -> list:
    while p and p[-1] == 0:
        p.pop()
    return p


def _poly_mul_int(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x == 0:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] += x * y
    return out


def _poly_divmod_monic(a, d):
    """Divide a by the monic integer polynomial d; stays in Z[x]."""
    a = list(a)
    dd = len(d) - 1
    q = [0] * max(len(a) - dd, 0)
    for i in range(len(a) - 1, dd - 1, -1):
        c = a[i]
        if c == 0:
            continue
        q[i - dd] = c
        for j, y in enumerate(d):
            a[i - dd + j] -= c * y
    return q, _poly_trim(a)


@lru_cache(maxsize=None)
def cyclotomic_polynomial(n: int) -> tuple[int, ...]:
    """Coefficients of the n-th cyclotomic polynomial, ascending.

    Built by exact division of x^n - 1 by the cyclotomic polynomials of
    the proper divisors of n.
    """
    num = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            num, rem = _poly_divmod_monic(num, list(cyclotomic_polynomial(d)))
            assert not rem
    return tuple(num)


@lru_cache(maxsize=None)
def _phi(n: int) -> int:
    return len(cyclotomic_polynomial(n)) - 1


class CyclotomicNumber:
    """Element of Q(zeta_n), stored as an integer numerator vector of
    length phi(n) over a single positive denominator, reduced so that
    gcd of the content and the denominator is 1.  The representation is
    canonical modulo the n-th cyclotomic polynomial, so equality is
    componentwise."""

    __slots__ = ("n", "num", "den")

    def __init__(self, n: int, num, den: int = 1):
        phi = _phi(n)
        num = list(num)
        if len(num) != phi:
            raise BadInput(f"expected {phi} coordinates for conductor {n}")
        if den == 0:
            raise ZeroDivisionError("zero denominator")
        if den < 0:
            den = -den
            num = [-c for c in num]
        g = math.gcd(den, *num) if any(num) else den
        if g > 1:
            den //= g
            num = [c // g for c in num]
        self.n = n
        self.num = tuple(num)
        self.den = den

    @classmethod
    def from_poly(cls, n: int, poly, den: int = 1) -> "CyclotomicNumber":
        """Reduce an arbitrary-degree integer polynomial in zeta_n."""
        _, rem = _poly_divmod_monic(list(poly), list(cyclotomic_polynomial(n)))
        rem.extend([0] * (_phi(n) - len(rem)))
        return cls(n, rem, den)

    @classmethod
    def zero(cls, n: int) -> "CyclotomicNumber":
        return cls(n, [0] * _phi(n))

    @classmethod
    def from_integer(cls, n: int, value: int) -> "CyclotomicNumber":
        return cls.from_poly(n, [value])

    @classmethod
    def one(cls, n: int) -> "CyclotomicNumber":
        return cls.from_integer(n, 1)

    @classmethod
    def root_power(cls, n: int, e: int) -> "CyclotomicNumber":
        """zeta_n^e, reduced."""
        buf = [0] * n
        buf[e % n] = 1
        return cls.from_poly(n, buf)

    def _check(self, other: "CyclotomicNumber") -> None:
        if self.n != other.n:
            raise ModulusMismatch(f"conductors differ: {self.n} != {other.n}")

    def __bool__(self):
        return any(self.num)

    def __add__(self, other):
        if isinstance(other, int):
            other = CyclotomicNumber.from_integer(self.n, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        self._check(other)
        da, db = self.den, other.den
        num = [a * db + b * da for a, b in zip(self.num, other.num)]
        return CyclotomicNumber(self.n, num, da * db)

    __radd__ = __add__

    def __neg__(self):
        return CyclotomicNumber(self.n, [-a for a in self.num], self.den)

    def __sub__(self, other):
        if isinstance(other, int):
            other = CyclotomicNumber.from_integer(self.n, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return CyclotomicNumber(self.n, [other * a for a in self.num], self.den)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        self._check(other)
        prod = _poly_mul_int(list(self.num), list(other.num))
        return CyclotomicNumber.from_poly(self.n, prod, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "CyclotomicNumber":
        """Multiplicative inverse via the extended Euclidean algorithm
        against the cyclotomic polynomial."""
        if not self:
            raise ZeroDivisionError("inverse of zero in Q(zeta_n)")
        phi_poly = [Fraction(c) for c in cyclotomic_polynomial(self.n)]
        a = [Fraction(c) for c in self.num]
        # invariant: old_r = old_s * a (mod phi), r = s * a (mod phi)
        old_r, r = a, phi_poly
        old_s, s = [Fraction(1)], []
        while _poly_trim(r):
            q = _rational_poly_div(old_r, r)
            old_r, r = r, _poly_sub(old_r, _rational_poly_mul(q, r))
            old_s, s = s, _poly_sub(old_s, _rational_poly_mul(q, s))
        lead = _poly_trim(list(old_r))
        if len(lead) != 1:
            raise ZeroDivisionError("element shares a factor with the modulus")
        inv = [c / lead[0] for c in old_s]
        inv.extend([Fraction(0)] * (_phi(self.n) - len(inv)))
        den = math.lcm(*(c.denominator for c in inv)) if inv else 1
        ints = [int(c * den) for c in inv]
        return CyclotomicNumber(self.n, ints, den) * self.den

    def __truediv__(self, other):
        if isinstance(other, int):
            other = CyclotomicNumber.from_integer(self.n, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self * other.inverse()

    def __eq__(self, other):
        if isinstance(other, int):
            other = CyclotomicNumber.from_integer(self.n, other)
        if not isinstance(other, CyclotomicNumber):
            return NotImplemented
        return self.n == other.n and self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.n, self.num, self.den))

    def __repr__(self):
        return f"CyclotomicNumber({self.n}, {list(self.num)}, den={self.den})"


def cyc_eval(a: GroupRingElement, power: int) -> CyclotomicNumber:
    return a.evaluate(power)


def cyc_inv(a: CyclotomicNumber) -> CyclotomicNumber:
    return a.inverse()


def inverse_of_one_minus_root(n: int, c: int) -> CyclotomicNumber:
    """(1 - zeta_n^c)^(-1) for c != 0 mod n, via the closed form
    -(1/n) * sum_{j=0}^{n-1} (j+1) zeta^{cj} (no Euclidean algorithm:
    multiplying by 1 - zeta^c telescopes the sum to -n)."""
    c %= n
    if c == 0:
        raise ZeroDivisionError("1 - zeta^0 is zero")
    buf = [0] * n
    e = 0
    for j in range(n):
        buf[e] -= j + 1
        e += c
        if e >= n:
            e -= n
    return CyclotomicNumber.from_poly(n, buf, n)


# Rational-coefficient helpers used only inside inversion.

def _poly_sub(a, b):
    out = list(a) + [Fraction(0)] * (len(b) - len(a))
    for i, c in enumerate(b):
        out[i] -= c
    return _poly_trim(out)


def _rational_poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _rational_poly_div(a, b):
    """Quotient of a by b over Q (remainder discarded by the caller)."""
    a = list(a)
    lead = b[-1]
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    for i in range(len(a) - 1, len(b) - 2, -1):
        c = a[i] / lead
        if c:
            q[i - len(b) + 1] = c
            for j, y in enumerate(b):
                a[i - len(b) + 1 + j] -= c * y
    return q
