"""Brauer traces of the cyclic action on the cohomology of resolution
chains, computed three independent ways.

``trace_polynomial`` assembles the denominator-free node-by-node sums and
is valid for every admissible degree.  ``trace_closed_form`` is the short
polynomial that the chain collapses to once its multiplicity profile has
stabilized.  ``trace_oracle`` evaluates the fixed-point rational-function
form exactly in Q(zeta_n) and is kept independent of the other two so it
can arbitrate between them.
"""

from __future__ import annotations

import math

from .arith import ceil_div, mod_inverse
from .errors import BadInput, NotStable
from .exactalg import CyclotomicNumber, GroupRingElement, inverse_of_one_minus_root
from .resolution import ResolutionData, is_stable

__all__ = [
    "trace_polynomial",
    "trace_closed_form",
    "closed_form_coefficients",
    "trace_oracle",
    "vertex_trace",
]


def trace_polynomial(res: ResolutionData) -> GroupRingElement:
    """Trace of the chain action as an element of Z[Z/n], one polynomial
    serving every n-th root of unity.

    Sums the per-node products of geometric series together with the
    combined correction terms; all exponents are residues of
    alpha1 * (integer combination of the r_l) mod n.
    """
    n = res.n
    a1 = res.alpha1
    mu = res.mu
    b = res.b
    L = res.length
    r = res.r_at
    buf = [0] * n

    def add_geom(base: int, step: int, count: int, sign: int) -> None:
        e = base % n
        s = step % n
        for _ in range(count):
            buf[e] += sign
            e += s
            if e >= n:
                e -= n

    # products of geometric sums, one per node y_0..y_L
    for l in range(L + 1):
        step_z = (-a1 * r(l)) % n
        step_w = (a1 * r(l - 1)) % n
        # expand the smaller factor term by term against the other
        if mu[l] <= mu[l + 1]:
            e = 0
            for _ in range(mu[l]):
                add_geom(e, step_w, mu[l + 1], +1)
                e = (e + step_z) % n
        else:
            e = 0
            for _ in range(mu[l + 1]):
                add_geom(e, step_z, mu[l], +1)
                e = (e + step_w) % n

    # combined correction terms, one per exceptional component
    for l in range(L):
        head = -r(l) * (mu[l] - 1)
        for k in range(mu[l + 1]):
            count = b[l] * (mu[l + 1] - k) - 1
            add_geom(a1 * (r(l - 1) * k + head), a1 * r(l), count, -1)

    return GroupRingElement(n, buf)


def closed_form_coefficients(res: ResolutionData) -> tuple[list[int], list[int], int]:
    """The three coefficient sequences of the stabilized trace, before any
    exponent mapping: coefficients over mu_0 in powers of xi^{alpha2},
    over mu_{L+1} in powers of xi^{alpha1}, and the length-m all-ones
    block that is subtracted.  These depend only on the residue class of
    n modulo lcm(m1, m2)."""
    if not is_stable(res):
        raise NotStable(
            f"({res.sing.m1},{res.sing.m2},{res.n}): multiplicity chain {list(res.mu)} "
            "has not stabilized"
        )
    mu = res.mu
    L = res.length
    first = [mu[1] - ceil_div(k * mu[1], mu[0]) for k in range(mu[0])]
    second = [mu[L] - ceil_div(k * mu[L], mu[L + 1]) for k in range(mu[L + 1])]
    return first, second, res.m


def trace_closed_form(res: ResolutionData) -> GroupRingElement:
    """Stabilized trace polynomial, assembled from the three coefficient
    blocks with exponent multipliers alpha2, alpha1 and the inverse of
    gcd(m1, m2)."""
    n = res.n
    first, second, m = closed_form_coefficients(res)
    alpha = mod_inverse(m, n)
    buf = [0] * n
    for k, c in enumerate(first):
        buf[(res.alpha2 * k) % n] += c
    for k, c in enumerate(second):
        buf[(res.alpha1 * k) % n] += c
    for k in range(m):
        buf[(alpha * k) % n] -= 1
    return GroupRingElement(n, buf)


def trace_oracle(res: ResolutionData, power: int) -> CyclotomicNumber:
    """Fixed-point evaluation of the trace at zeta_n^power, exactly in
    Q(zeta_n).  Requires gcd(power, n) = 1 so that no denominator
    vanishes."""
    n = res.n
    if math.gcd(power, n) != 1:
        raise BadInput(f"power {power} must be coprime to {n}")
    a1 = res.alpha1
    mu = res.mu
    L = res.length
    r = res.r_at

    def chi(e: int) -> CyclotomicNumber:
        return CyclotomicNumber.root_power(n, power * a1 * e)

    cache: dict[int, CyclotomicNumber] = {}

    def inv_one_minus_chi(e: int) -> CyclotomicNumber:
        c = (power * a1 * e) % n
        if c not in cache:
            cache[c] = inverse_of_one_minus_root(n, c)
        return cache[c]

    one = CyclotomicNumber.one(n)
    acc = CyclotomicNumber.zero(n)
    for l in range(L + 1):
        if l == 0:
            term = mu[1] * inv_one_minus_chi(-r(0))
        elif l == L:
            term = mu[L] * inv_one_minus_chi(r(L - 1))
        else:
            term = (
                (one - chi(r(l - 1) * mu[l + 1] - r(l) * mu[l]))
                * inv_one_minus_chi(r(l - 1))
                * inv_one_minus_chi(-r(l))
            )
        acc += term
    return acc


def vertex_trace(mult: int, genus: int, self_int: int, n: int) -> GroupRingElement:
    """Trace contribution of one fiber component fixed pointwise by the
    action: sum_{k=0}^{mult-1} (xi^a)^k ((mult - k) * C^2 + 1 - genus),
    with a the inverse of the component multiplicity mod n."""
    if mult < 1 or genus < 0:
        raise BadInput(f"need mult >= 1 and genus >= 0, got ({mult}, {genus})")
    a = mod_inverse(mult, n)
    buf = [0] * n
    e = 0
    for k in range(mult):
        buf[e] += (mult - k) * self_int + 1 - genus
        e = (e + a) % n
    return GroupRingElement(n, buf)
