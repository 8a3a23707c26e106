"""Small integer helpers shared by the engines (trial division, divisor sums, Moebius)."""

from __future__ import annotations

from math import gcd, isqrt


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of ``|n|`` by trial division."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor 0")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def primes_upto(n: int) -> list[int]:
    if n < 2:
        return []
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(n) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, n + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def smallest_prime_factors(n: int) -> list[int]:
    """spf[k] for 0 <= k <= n (spf[0] = spf[1] = 0)."""
    spf = [0] * (n + 1)
    for p in range(2, n + 1):
        if spf[p] == 0:
            for k in range(p, n + 1, p):
                if spf[k] == 0:
                    spf[k] = p
    return spf


def factor_with_spf(k: int, spf: list[int]) -> dict[int, int]:
    out: dict[int, int] = {}
    while k > 1:
        p = spf[k]
        out[p] = out.get(p, 0) + 1
        k //= p
    return out


def divisors(n: int) -> list[int]:
    small, large = [], []
    for d in range(1, isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def mobius(n: int) -> int:
    f = factorize(n) if n > 1 else {}
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n) if n > 1 else {}:
        result -= result // p
    return result


def squarefree_part_split(n: int) -> tuple[int, int]:
    """Return ``(k, r)`` with ``n = k**2 * r`` and ``r`` squarefree (n > 0)."""
    k = 1
    r = 1
    for p, e in factorize(n).items():
        k *= p ** (e // 2)
        r *= p ** (e % 2)
    return k, r


def gcd3(a: int, b: int, c: int) -> int:
    return gcd(gcd(a, b), c)
