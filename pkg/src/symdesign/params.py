"""Admissible symmetric-design parameters and imprimitivity arithmetic.

Pure integer functions: candidate (v,k,lam) enumeration for a point count
and a subgroup order, the basic flag-transitivity divisibility checks, the
four-way classification of imprimitive parameter shapes, and the (c,d,l,s)
class-equation solver.  Everything is exact and safe for unrestricted
parallel use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import divisors, factorize

__all__ = [
    "BasicCheck",
    "ParamCandidate",
    "ImprimitivityType",
    "check_basic",
    "enumerate_params",
    "brute_force_params",
    "classify_type",
    "derive_cdl",
]


@dataclass(frozen=True)
class BasicCheck:
    ok: bool
    failures: tuple[str, ...]

    def __bool__(self):
        return self.ok


def check_basic(v: int, k: int, lam: int) -> BasicCheck:
    """Counting identity, the order bound, and nontriviality.

    Passes iff k(k-1) = lam(v-1), lam*v < k*k, and 2 < k < v-1.
    """
    failures = []
    if k * (k - 1) != lam * (v - 1):
        failures.append("k(k-1) != lam(v-1)")
    if lam * v >= k * k:
        failures.append("lam*v >= k^2")
    if not 2 < k < v - 1:
        failures.append("k outside 2 < k < v-1")
    return BasicCheck(not failures, tuple(failures))


@dataclass(frozen=True)
class ParamCandidate:
    """An admissible (v,k,lam) plus its divisor-split witnesses.

    t is gcd(v-1, subgroup order); m satisfies m*k = lam*t; lam1, lam2 are
    gcd(lam, k-1) and gcd(lam, k); k1, k2 split v-1 = k1*k2.
    """

    v: int
    k: int
    lam: int
    t: int
    m: int
    k1: int
    k2: int
    lam1: int
    lam2: int

    def __post_init__(self):
        v, k, lam = self.v, self.k, self.lam
        checks = (
            (self.k - 1) % self.m == 0,
            math.gcd(self.m, k) == 1,
            lam == self.lam1 * self.lam2,
            v - 1 == self.k1 * self.k2,
            self.t % self.k2 == 0,
            self.m % self.lam1 == 0,
            self.lam1 < self.k2,
            math.gcd(self.lam1, self.k2) == 1,
        )
        if not all(checks):
            raise ValueError(f"witness identities fail for ({v},{k},{lam})")

    @property
    def triple(self) -> tuple:
        return (self.v, self.k, self.lam)


def _candidate(v: int, k: int, lam: int, t: int) -> ParamCandidate:
    lam1 = math.gcd(lam, k - 1)
    lam2 = math.gcd(lam, k)
    return ParamCandidate(
        v=v,
        k=k,
        lam=lam,
        t=t,
        m=lam * t // k,
        k1=(k - 1) // lam1,
        k2=k // lam2,
        lam1=lam1,
        lam2=lam2,
    )


def enumerate_params(
    v: int, m_order: int, m_factorization: dict[int, int] | None = None
) -> list[ParamCandidate]:
    """All admissible (v,k,lam) with k dividing m_order, by divisor splits.

    Splits v-1 = k1*k2 over the divisors k2 of t = gcd(v-1, m_order), takes
    k = 1 + k1*lam1 ranging over the divisors of m_order in the progression
    1 mod k1, and keeps exactly the triples with lam integral, lam*v < k^2,
    and 2 < k < v-1.  Agrees with brute_force_params by construction.
    """
    if v < 4:
        return []
    fact = m_factorization if m_factorization is not None else factorize(m_order)
    t = math.gcd(v - 1, m_order)
    t_fact = {}
    for p, e in fact.items():
        r = 0
        n = v - 1
        while n % p == 0 and r < e:
            n //= p
            r += 1
        if r:
            t_fact[p] = r
    m_divs = divisors(m_order, fact)
    found: dict[int, int] = {}
    for k2 in divisors(t, t_fact):
        k1 = (v - 1) // k2
        for k in m_divs:
            if k <= 2 or k >= v - 1 or (k - 1) % k1:
                continue
            lam1 = (k - 1) // k1
            if lam1 > k2 or math.gcd(lam1, k2) != 1:
                continue
            num = k * (k - 1)
            if num % (v - 1):
                continue
            lam = num // (v - 1)
            if lam * v >= k * k:
                continue
            found[k] = lam
    return [_candidate(v, k, found[k], t) for k in sorted(found)]


def brute_force_params(v: int, m_order: int) -> list[tuple]:
    """Independent oracle: direct scan over every k in 3..v-2.

    Keeps k | m_order with lam = k(k-1)/(v-1) integral and lam*v < k^2.
    Intended for moderate v; quadratic-free but linear in v.
    """
    out = []
    for k in range(3, v - 1):
        if m_order % k:
            continue
        num = k * (k - 1)
        if num % (v - 1):
            continue
        lam = num // (v - 1)
        if lam * v < k * k:
            out.append((v, k, lam))
    return out


@dataclass(frozen=True)
class ImprimitivityType:
    """Headline tag a/b/c/d/none plus every matching clause's witnesses."""

    tag: str
    witnesses: tuple[tuple, ...]  # (c, d, ell) triples for the headline tag
    all_tags: tuple[str, ...]


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


def classify_type(v: int, k: int, lam: int) -> ImprimitivityType:
    """Match (v,k,lam) against the four imprimitive parameter shapes.

    Clause order is a, b, c, d; the headline tag is the first match and
    every matching tag is reported.  Clauses b-d carry (c,d,ell) witnesses.
    """
    matches: list[tuple[str, tuple]] = []
    if 2 * k <= lam * (lam - 3):
        matches.append(("a", ()))
    if v == lam * lam * (lam + 2) and k == lam * (lam + 1):
        matches.append(
            ("b", ((lam * lam, lam + 2, lam), (lam + 2, lam * lam, 2)))
        )
    if 4 * v == (lam + 2) * (lam * lam - 2 * lam + 2) and 2 * k == lam * lam:
        side = lam % 4 == 0
        if not side and lam % 2 == 0:
            u2, rem = divmod(lam, 2)
            u = math.isqrt(u2)
            side = (
                rem == 0
                and u * u == u2
                and u % 2 == 1
                and u >= 3
                and _is_square(2 * (u2 - 1))
            )
        if side:
            matches.append(
                ("c", (((lam + 2) // 2, (lam * lam - 2 * lam + 2) // 2, 2),))
            )
    if (
        4 * v == (lam + 6) * (lam * lam + 4 * lam - 1)
        and 2 * k == lam * (lam + 5)
        and lam % 6 in (1, 3)
    ):
        matches.append(("d", ((lam + 6, (lam * lam + 4 * lam - 1) // 4, 3),)))
    if not matches:
        return ImprimitivityType("none", (), ())
    tag, witnesses = matches[0]
    return ImprimitivityType(tag, witnesses, tuple(m[0] for m in matches))


def derive_cdl(v: int, k: int, lam: int) -> list[tuple]:
    """Integer solutions (c, d, ell, s) of the class equations.

    Iterates the divisor splits v = c*d and solves lam(c-1) = k(ell-1),
    requiring ell >= 2 dividing k and 2 <= s = k/ell <= d.
    """
    out = []
    for c in divisors(v):
        d = v // c
        if c < 2 or d < 2:
            continue
        num = lam * (c - 1)
        if num % k:
            continue
        ell = 1 + num // k
        if ell < 2 or k % ell:
            continue
        s = k // ell
        if s < 2 or s > d:
            continue
        out.append((c, d, ell, s))
    return out
