"""Integer utilities and the Jung-Hirzebruch continued-fraction expansion.

Everything here is exact integer arithmetic; no floats appear anywhere in
this package.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import BadInput, NotInvertible


def gcd_lcm(a: int, b: int) -> tuple[int, int]:
    """Return (gcd(a, b), lcm(a, b)) for positive integers."""
    if a < 1 or b < 1:
        raise BadInput(f"gcd_lcm needs positive integers, got ({a}, {b})")
    return math.gcd(a, b), math.lcm(a, b)


def mod_inverse(a: int, n: int) -> int:
    """Return the inverse of a modulo n, normalized into [1, n-1]."""
    if n < 2:
        raise BadInput(f"modulus must be >= 2, got {n}")
    try:
        return pow(a, -1, n)
    except ValueError:
        raise NotInvertible(f"{a} is not invertible modulo {n}") from None


def ceil_div(a: int, b: int) -> int:
    """Exact ceiling of a/b for b > 0."""
    return -((-a) // b)


@dataclass(frozen=True)
class JHExpansion:
    """Expansion n/r = [b_1, ..., b_L] with r_{l-1} = b_{l+1} r_l - r_{l+1}.

    ``rseq`` holds r_{-1} = n, r_0 = r, ..., r_{L-1} = 1, r_L = 0, so
    ``rseq[l + 1]`` is r_l.  Every partial quotient b_l is >= 2 and the
    r-sequence is strictly decreasing.
    """

    n: int
    r: int
    b: tuple[int, ...]
    rseq: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.b)

    def r_at(self, l: int) -> int:
        """r_l for -1 <= l <= L."""
        return self.rseq[l + 1]


def jh_expand(n: int, r: int) -> JHExpansion:
    """Compute the Jung-Hirzebruch expansion of n/r.

    Requires 0 < r < n and gcd(r, n) = 1.  Each step takes
    b = ceil(previous/current) and continues with b*current - previous;
    the sequence ends at 1, 0 after at most n - 1 steps.
    """
    if not 0 < r < n:
        raise BadInput(f"need 0 < r < n, got r={r}, n={n}")
    if math.gcd(r, n) != 1:
        raise BadInput(f"need gcd(r, n) = 1, got r={r}, n={n}")
    b: list[int] = []
    rseq = [n, r]
    prev, cur = n, r
    while cur > 0:
        q = ceil_div(prev, cur)
        b.append(q)
        prev, cur = cur, q * cur - prev
        rseq.append(cur)
    return JHExpansion(n=n, r=r, b=tuple(b), rseq=tuple(rseq))
