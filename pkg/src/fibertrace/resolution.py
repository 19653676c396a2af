"""Numerical resolution data of a tame cyclic quotient singularity.

A singularity is identified with its parameters (m1, m2, n): the chain of
exceptional curves in its minimal resolution carries self-intersections
-b_l read off the continued-fraction expansion of n/r, and multiplicities
mu_0 = m2, mu_1, ..., mu_L, mu_{L+1} = m1 obeying
mu_{l+1} = b_l * mu_l - mu_{l-1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import JHExpansion, jh_expand, mod_inverse
from .errors import BadInput


@dataclass(frozen=True)
class Singularity:
    """Parameters (m1, m2, n) with n >= 2 coprime to both branch
    multiplicities."""

    m1: int
    m2: int
    n: int

    def __post_init__(self):
        if self.m1 < 1 or self.m2 < 1:
            raise BadInput(f"branch multiplicities must be >= 1, got ({self.m1}, {self.m2})")
        if self.n < 2:
            raise BadInput(f"extension degree must be >= 2, got {self.n}")
        if math.gcd(self.n, self.m1) != 1 or math.gcd(self.n, self.m2) != 1:
            raise BadInput(
                f"degree {self.n} must be coprime to both multiplicities ({self.m1}, {self.m2})"
            )


@dataclass(frozen=True)
class ResolutionData:
    """Everything numeric about the resolution chain of one singularity."""

    sing: Singularity
    r: int                 # unique 0 < r < n with m1 + r*m2 = 0 (mod n)
    jh: JHExpansion        # expansion of n/r
    mu: tuple[int, ...]    # mu_0 .. mu_{L+1}
    alpha1: int            # inverse of m1 mod n
    alpha2: int            # inverse of m2 mod n
    m: int                 # gcd(m1, m2)
    M: int                 # lcm(m1, m2)

    @property
    def n(self) -> int:
        return self.sing.n

    @property
    def length(self) -> int:
        return self.jh.length

    @property
    def b(self) -> tuple[int, ...]:
        return self.jh.b

    def r_at(self, l: int) -> int:
        """r_l for -1 <= l <= L (r_{-1} = n, r_L = 0)."""
        return self.jh.r_at(l)


@dataclass(frozen=True)
class NodeEigenData:
    """Cotangent eigenvalue exponents at the chain nodes y_0..y_L.

    At y_l the local coordinates (z_l, w_l) are scaled by
    xi^{alpha1 * r_{l-1}} and xi^{-alpha1 * r_l}; exponents are stored
    reduced into [0, n).
    """

    n: int
    z_exp: tuple[int, ...]
    w_exp: tuple[int, ...]


def resolve(sing: Singularity) -> ResolutionData:
    """Compute the full resolution data of the singularity."""
    m1, m2, n = sing.m1, sing.m2, sing.n
    alpha1 = mod_inverse(m1, n)
    alpha2 = mod_inverse(m2, n)
    r = (-m1 * alpha2) % n
    jh = jh_expand(n, r)
    mu = [m2, (m1 + r * m2) // n]
    assert (m1 + r * m2) % n == 0
    for l in range(1, jh.length + 1):
        mu.append(jh.b[l - 1] * mu[l] - mu[l - 1])
    assert mu[-1] == m1, "multiplicity chain must end at m1"
    return ResolutionData(
        sing=sing,
        r=r,
        jh=jh,
        mu=tuple(mu),
        alpha1=alpha1,
        alpha2=alpha2,
        m=math.gcd(m1, m2),
        M=math.lcm(m1, m2),
    )


def node_eigen_data(res: ResolutionData) -> NodeEigenData:
    """Eigenvalue exponents of the chart coordinates at every node."""
    n = res.n
    a1 = res.alpha1
    z_exp = tuple((a1 * res.r_at(l - 1)) % n for l in range(res.length + 1))
    w_exp = tuple((-a1 * res.r_at(l)) % n for l in range(res.length + 1))
    return NodeEigenData(n=n, z_exp=z_exp, w_exp=w_exp)


def universal_polys(res: ResolutionData) -> list[int]:
    """P_{-1} = 0, P_0 = 1, P_l = b_l P_{l-1} - P_{l-2}; these satisfy
    r_l = P_l * r_0 (mod n) for every l."""
    p = [0, 1]
    for b in res.b:
        p.append(b * p[-1] - p[-2])
    return p


def is_stable(res: ResolutionData) -> bool:
    """True iff the multiplicity chain has reached its large-degree shape:
    strictly decreasing to m = gcd(m1, m2), flat at m, then strictly
    increasing (either monotone segment may be empty)."""
    mu = res.mu
    top = len(mu) - 1
    i = 0
    while i < top and mu[i + 1] < mu[i]:
        i += 1
    j = i
    while j < top and mu[j + 1] == mu[j]:
        j += 1
    k = j
    while k < top and mu[k + 1] > mu[k]:
        k += 1
    return k == top and mu[i] == res.m


def stabilized_profile(m1: int, m2: int, residue_class: int) -> tuple[int, int]:
    """The pair (mu_1, mu_L) shared by all large stable degrees in one
    residue class modulo lcm(m1, m2).

    Walks n through the class until the chain is stable and the pair
    repeats for two consecutive members; the walk terminates because the
    chain shape eventually freezes within each class.
    """
    big_m = math.lcm(m1, m2)
    if math.gcd(residue_class, big_m) != 1:
        raise BadInput(f"residue class {residue_class} is not invertible mod {big_m}")
    n = residue_class % big_m
    if n == 0:
        n = big_m  # only possible when big_m == 1
    previous = None
    while True:
        if n >= 2:
            res = resolve(Singularity(m1, m2, n))
            if is_stable(res):
                pair = (res.mu[1], res.mu[res.length])
                if pair == previous:
                    return pair
                previous = pair
            else:
                previous = None
        n += big_m
