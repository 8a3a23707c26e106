"""Ground-truth counts of similar sublattices (SSLs).

Two independent routes are provided: representation counts of the order's
norm form divided by the unit count, and a brute-force scan over all
sublattices of a given index in Hermite normal form.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt, lcm

from .arith import divisors
from .exact import IntegralityError, LatticeSpec, QuadElem
from .mulring import GENERIC, GenericRing
from .orders import BinaryQuadraticForm, QuadraticOrder


@dataclass(frozen=True)
class SslCountRow:
    m: int
    f: int
    f_pr: int


def _ceil_div(a: int, b: int) -> int:
    return -((-a) // b)


def count_representations(form: BinaryQuadraticForm, m: int, primitive_only: bool = False) -> int:
    """Number of (x, y) in Z^2 with form(x, y) = m (gcd(x, y) = 1 if primitive_only)."""
    a, b, c = form
    D = form.discriminant
    if m < 0:
        return 0
    count = 0
    # 4a*m = (2ax + by)^2 + |D| y^2
    ymax = isqrt(4 * a * m // -D)
    for y in range(-ymax, ymax + 1):
        disc = 4 * a * m + D * y * y
        if disc < 0:
            continue
        s = isqrt(disc)
        if s * s != disc:
            continue
        for num in {-b * y + s, -b * y - s}:
            if num % (2 * a):
                continue
            x = num // (2 * a)
            if primitive_only and gcd(x, y) != 1:
                continue
            count += 1
    return count


def representation_table(form: BinaryQuadraticForm, n_max: int) -> tuple[list[int], list[int]]:
    """All and primitive representation counts for every 0 <= m <= n_max in one sweep."""
    a, b, c = form
    D = form.discriminant
    total = [0] * (n_max + 1)
    prim = [0] * (n_max + 1)
    ymax = isqrt(4 * a * n_max // -D)
    for y in range(-ymax, ymax + 1):
        disc = 4 * a * n_max + D * y * y
        if disc < 0:
            continue
        s = isqrt(disc)
        # 2ax + by in [-s, s]
        lo = _ceil_div(-s - b * y, 2 * a)
        hi = (s - b * y) // (2 * a)
        ay = abs(y)
        for x in range(lo, hi + 1):
            v = a * x * x + b * x * y + c * y * y
            if v > n_max:
                continue
            total[v] += 1
            if gcd(x, ay) == 1:
                prim[v] += 1
    return total, prim


def ssl_counts(order: QuadraticOrder | GenericRing, m_max: int) -> list[SslCountRow]:
    """Rows (m, f(m), f_pr(m)) for 1 <= m <= m_max."""
    if m_max < 1:
        raise ValueError("m_max must be positive")
    if order is GENERIC:
        return [
            SslCountRow(m, int(isqrt(m) ** 2 == m), int(m == 1)) for m in range(1, m_max + 1)
        ]
    total, prim = representation_table(order.norm_form, m_max)
    rows = []
    for m in range(1, m_max + 1):
        if total[m] % order.w or prim[m] % order.w:
            raise IntegralityError(
                f"representation count at m={m} not divisible by unit count {order.w}"
            )
        rows.append(SslCountRow(m, total[m] // order.w, prim[m] // order.w))
    return rows


def _rational_sqrt(x: Fraction) -> Fraction | None:
    if x < 0:
        return None
    n, d = x.numerator, x.denominator
    rn, rd = isqrt(n), isqrt(d)
    if rn * rn != n or rd * rd != d:
        return None
    return Fraction(rn, rd)


def similarity_candidates(spec: LatticeSpec, m: int) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Pairs (c, c*tau) in {1, tau}-coordinates with |c|^2 = m and c*Gamma inside Gamma."""
    if spec.generic:
        raise ValueError("the sublattice oracle needs a non-generic lattice")
    alpha, beta_sq = spec.alpha, spec.beta_sq
    tau_norm = alpha * alpha + beta_sq
    out = []
    # |x + y tau|^2 = (x + alpha y)^2 + beta^2 y^2
    ymax = isqrt(int(Fraction(m) / beta_sq))
    for y in range(-ymax, ymax + 1):
        root = _rational_sqrt(m - beta_sq * y * y)
        if root is None:
            continue
        for x in {-alpha * y + root, -alpha * y - root}:
            if x.denominator != 1:
                continue
            # c*tau = x tau + y tau^2, with tau^2 = 2 alpha tau - |tau|^2
            u = -y * tau_norm
            v = x + 2 * alpha * y
            if u.denominator != 1 or v.denominator != 1:
                continue
            out.append(((int(x), y), (int(u), int(v))))
    return out


def _in_hnf(point: tuple[int, int], a: int, b: int, d: int) -> bool:
    u, v = point
    if v % d:
        return False
    return (u - (v // d) * b) % a == 0


def hnf_sublattices(m: int):
    """All index-m sublattices, as HNF triples (a, b, d): basis a*1 and b*1 + d*tau."""
    for a in divisors(m):
        d = m // a
        for b in range(a):
            yield a, b, d


def hnf_ssl_count(spec: LatticeSpec, m: int) -> tuple[int, int]:
    """(number of index-m sublattices, number of those similar to the lattice)."""
    if m < 1:
        raise ValueError("m must be positive")
    cands = similarity_candidates(spec, m)
    total = 0
    ssl = 0
    for a, b, d in hnf_sublattices(m):
        total += 1
        for c, ctau in cands:
            if _in_hnf(c, a, b, d) and _in_hnf(ctau, a, b, d):
                ssl += 1
                break
    return total, ssl


def denominator(order: QuadraticOrder, w: QuadElem) -> int:
    """Squared denominator of w/|w| for the order; w is given in the maximal order's basis."""
    u, v = w
    if u == 0 and v == 0:
        raise ValueError("w must be nonzero")
    if gcd(u, v) != 1:
        raise ValueError(f"w = {tuple(w)} is not primitive in the maximal order")
    k = order.omega_offset()
    # omega_K = (omega - k)/f, so w = (u - v k/f) + (v/f) omega
    coords = (Fraction(u) - Fraction(v * k, order.f), Fraction(v, order.f))
    t = lcm(*(c.denominator for c in coords))
    return t * t * order.maximal_order().norm(w)


def supermultiplicativity_check(rows: list[SslCountRow]) -> list[tuple[int, int]]:
    """Coprime pairs (m, n), 1 < m < n, mn in range, with f(mn) < f(m) f(n)."""
    f = {row.m: row.f for row in rows}
    n_max = max(f) if f else 0
    bad = []
    for m in range(2, isqrt(n_max) + 1):
        fm = f[m]
        if fm == 0:
            continue
        for n in range(m + 1, n_max // m + 1):
            if f[n] and gcd(m, n) == 1 and f[m * n] < fm * f[n]:
                bad.append((m, n))
    return bad


def strict_supermultiplicative_pairs(rows: list[SslCountRow]) -> list[tuple[int, int]]:
    f = {row.m: row.f for row in rows}
    n_max = max(f) if f else 0
    out = []
    for m in range(2, isqrt(n_max) + 1):
        for n in range(m + 1, n_max // m + 1):
            if gcd(m, n) == 1 and f[m * n] > f[m] * f[n]:
                out.append((m, n))
    return out
