"""Imaginary quadratic orders, Kronecker characters, reduced forms and genera."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, isqrt

import numpy as np

from .arith import divisors, squarefree_part_split
from .exact import QuadElem


def check_discriminant(D: int) -> None:
    if D >= 0 or D % 4 not in (0, 1):
        raise ValueError(f"invalid negative discriminant {D}")


@dataclass(frozen=True)
class BinaryQuadraticForm:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a <= 0 or self.discriminant >= 0:
            raise ValueError(f"form {tuple(self)} is not positive definite")

    def __iter__(self):
        yield self.a
        yield self.b
        yield self.c

    @property
    def discriminant(self) -> int:
        return self.b * self.b - 4 * self.a * self.c

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    def is_reduced(self) -> bool:
        a, b, c = self.a, self.b, self.c
        if not abs(b) <= a <= c:
            return False
        if (abs(b) == a or a == c) and b < 0:
            return False
        return True

    def __str__(self):
        terms = []
        for coeff, mono in ((self.a, "x^2"), (self.b, "xy"), (self.c, "y^2")):
            if coeff == 0:
                continue
            sign = "-" if coeff < 0 else "+"
            mag = "" if abs(coeff) == 1 else str(abs(coeff))
            terms.append((sign, mag + mono))
        out = "".join(s + t for s, t in terms)
        return out[1:] if out.startswith("+") else out


def fundamental_split(D: int) -> tuple[int, int]:
    """Write ``D = f**2 * d_K`` with ``d_K`` fundamental; returns ``(d_K, f)``."""
    check_discriminant(D)
    k, r = squarefree_part_split(-D)
    d0 = -r
    if d0 % 4 == 1:
        return d0, k
    if k % 2:
        raise ValueError(f"invalid discriminant {D}")
    return 4 * d0, k // 2


def is_fundamental(D: int) -> bool:
    if D >= 0 or D % 4 not in (0, 1):
        return False
    return fundamental_split(D)[1] == 1


@dataclass(frozen=True)
class QuadraticOrder:
    """Order Z[omega] with omega of trace ``norm_form.b`` and norm ``norm_form.c``.

    Elements are QuadElem(u, v) = u + v*omega.
    """

    D: int
    d_K: int
    f: int
    norm_form: BinaryQuadraticForm
    w: int

    @property
    def is_maximal(self) -> bool:
        return self.f == 1

    def maximal_order(self) -> QuadraticOrder:
        return order_from_discriminant(self.d_K)

    def omega_offset(self) -> int:
        """k with omega = k + f*omega_K, omega_K the canonical maximal-order generator."""
        delta = self.d_K % 2
        return (self.norm_form.b - self.f * delta) // 2

    def norm(self, x: QuadElem) -> int:
        return self.norm_form(x[0], x[1])

    def to_dict(self) -> dict:
        return {
            "discriminant": self.D,
            "fundamental_discriminant": self.d_K,
            "conductor": self.f,
            "norm_form": str(self.norm_form),
            "unit_count": self.w,
        }


def unit_count(D: int) -> int:
    return {-3: 6, -4: 4}.get(D, 2)


def _make_order(D: int, form: BinaryQuadraticForm) -> QuadraticOrder:
    d_K, f = fundamental_split(D)
    return QuadraticOrder(D, d_K, f, form, unit_count(D))


def order_from_discriminant(D: int) -> QuadraticOrder:
    """The order of discriminant D with its canonical generator."""
    check_discriminant(D)
    delta = D % 2
    return _make_order(D, BinaryQuadraticForm(1, delta, (delta - D) // 4))


def order_from_minpoly(s: int, p: int, q: int) -> QuadraticOrder:
    """Multiplier ring <1, s*tau> of the lattice <1, tau> where s*tau^2 + p*tau + q = 0."""
    if s <= 0 or gcd(gcd(s, p), q) != 1:
        raise ValueError("minimal polynomial must be primitive with s > 0")
    D = p * p - 4 * s * q
    if D >= 0:
        raise ValueError(f"discriminant {D} is not negative")
    return _make_order(D, BinaryQuadraticForm(1, -p, s * q))


def quadelem_norm(order: QuadraticOrder, x: QuadElem) -> int:
    return order.norm(x)


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n) for any integer a and n >= 0."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return 1 if abs(a) == 1 else 0
    if a % 2 == 0 and n % 2 == 0:
        return 0
    v = (n & -n).bit_length() - 1
    n >>= v
    k = 1
    if v % 2 and a % 8 in (3, 5):
        k = -k
    # Jacobi symbol (a/n) for odd n via reciprocity
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                k = -k
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            k = -k
        a %= n
    return k if n == 1 else 0


def kronecker_chi(D: int, n: int) -> int:
    """The quadratic character chi_D attached to the discriminant D, evaluated at n >= 1."""
    check_discriminant(D)
    if n < 1:
        raise ValueError("n must be positive")
    return kronecker(D, n)


def total_representation_count(D: int, m: int) -> int:
    """Sum of chi_D(k) over the divisors k of m."""
    return sum(kronecker_chi(D, k) for k in divisors(m))


# largest |D| for which the fingerprint scan stays well inside int64
_FINGERPRINT_MAX = 10**6


def residue_fingerprint(form: BinaryQuadraticForm, D: int | None = None) -> frozenset[int]:
    """Residues mod |D| coprime to D that the form represents."""
    D = form.discriminant if D is None else D
    N = -D
    if N > _FINGERPRINT_MAX or abs(form.b) > _FINGERPRINT_MAX:
        raise OverflowError(f"fingerprint scan for |D| = {N} exceeds the int64-safe range")
    a, b, c = (int(t) % N for t in form)
    xs = np.arange(N, dtype=np.int64)
    ax2 = (a * xs * xs) % N
    cy2 = (c * xs * xs) % N
    hit = np.zeros(N, dtype=bool)
    chunk = max(1, 4_000_000 // N)
    for start in range(0, N, chunk):
        ys = xs[start : start + chunk]
        cross = (b * np.outer(ys, xs)) % N
        vals = (cross + ax2[None, :] + cy2[start : start + chunk, None]) % N
        hit[vals.ravel()] = True
    return frozenset(int(r) for r in np.flatnonzero(hit) if gcd(int(r), N) == 1)


@dataclass(frozen=True)
class FormClassSet:
    D: int
    reduced_forms: tuple[BinaryQuadraticForm, ...]
    genera: tuple[tuple[int, ...], ...]
    fingerprints: tuple[frozenset[int], ...] = field(repr=False)

    @property
    def h(self) -> int:
        return len(self.reduced_forms)

    def genus_of(self, index: int) -> int:
        for g, members in enumerate(self.genera):
            if index in members:
                return g
        raise IndexError(index)

    def is_single_class_genus(self) -> bool:
        return all(len(g) == 1 for g in self.genera)


def enumerate_reduced_forms(D: int) -> list[BinaryQuadraticForm]:
    """Reduced primitive positive definite forms of discriminant D."""
    check_discriminant(D)
    forms = []
    for a in range(1, isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b - D) % 2:
                continue
            num = b * b - D
            if num % (4 * a):
                continue
            c = num // (4 * a)
            if c < a or (a == c and b < 0):
                continue
            if gcd(gcd(a, b), c) != 1:
                continue
            forms.append(BinaryQuadraticForm(a, b, c))
    return forms


def class_number(D: int) -> int:
    return len(enumerate_reduced_forms(D))


def reduced_forms(D: int) -> FormClassSet:
    forms = enumerate_reduced_forms(D)
    prints: list[frozenset[int]] = []
    genera: list[list[int]] = []
    fingerprints = [residue_fingerprint(q, D) for q in forms]
    for i, fp in enumerate(fingerprints):
        for g, known in enumerate(prints):
            if fp == known:
                genera[g].append(i)
                break
        else:
            prints.append(fp)
            genera.append([i])
    return FormClassSet(D, tuple(forms), tuple(tuple(g) for g in genera), tuple(prints))


def is_single_class_genus(D: int) -> bool:
    return reduced_forms(D).is_single_class_genus()
