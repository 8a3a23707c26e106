"""Multiplier rings of planar lattices and the rotation (SOS) groups of Z[i] and Z[rho]."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .arith import factorize
from .exact import LatticeSpec, QuadElem, minimal_polynomial
from .orders import QuadraticOrder, kronecker, order_from_minpoly


class GenericRing:
    """Marker for the multiplier ring Z of a generic lattice."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "GENERIC"


GENERIC = GenericRing()


def multiplier_ring(spec: LatticeSpec) -> QuadraticOrder | GenericRing:
    if spec.generic:
        return GENERIC
    return order_from_minpoly(*minimal_polynomial(spec))


@dataclass(frozen=True)
class GramMatrix2:
    g11: Fraction
    g12: Fraction
    g22: Fraction

    def __post_init__(self):
        if not (self.g11 > 0 and self.g22 > 0 and self.g11 * self.g22 - self.g12**2 > 0):
            raise ValueError("Gram matrix is not positive definite")

    def as_rows(self) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
        return (self.g11, self.g12), (self.g12, self.g22)


def gram_matrix(spec: LatticeSpec) -> GramMatrix2:
    """Gram matrix of the basis {1, tau}."""
    if spec.generic:
        raise ValueError("a generic lattice has no rational Gram matrix in this parameterization")
    a = spec.alpha
    return GramMatrix2(Fraction(1), a, a * a + spec.beta_sq)


# --- arithmetic in Z[i] and Z[rho], rho = (1 + sqrt(-3))/2 -------------------


@dataclass(frozen=True)
class _Field:
    name: str
    trace: int  # omega + conj(omega)
    norm: int  # omega * conj(omega)
    ramified: int  # the rational prime below (1 + omega)
    units: int
    root_order: int  # order of the torsion generator (1 + omega)/|1 + omega|

    def mul(self, x, y):
        a, b = x
        c, d = y
        return (a * c - self.norm * b * d, a * d + b * c + self.trace * b * d)

    def conj(self, x):
        a, b = x
        return (a + self.trace * b, -b)

    def nrm(self, x):
        a, b = x
        return a * a + self.trace * a * b + self.norm * b * b

    def divmod_exact(self, x, y):
        """x / y if it lies in the ring, else None."""
        n = self.nrm(y)
        a, b = self.mul(x, self.conj(y))
        if a % n or b % n:
            return None
        return (a // n, b // n)

    def power(self, x, k):
        out = (1, 0)
        for _ in range(k):
            out = self.mul(out, x)
        return out

    def _scaled(self, x):
        # real part times 2, imaginary part up to a common positive factor
        a, b = x
        return 2 * a + self.trace * b, b

    def arg_less(self, x, y) -> bool:
        """arg(x) < arg(y), both in the sector u > 0, v >= 0."""
        x1, y1 = self._scaled(x)
        x2, y2 = self._scaled(y)
        return x1 * y2 - x2 * y1 > 0

    def split_prime(self, p: int):
        """Canonical prime above a split p: the one of least argument in u > 0, v >= 0."""
        disc = 4 * self.norm - self.trace**2
        found = []
        for v in range(isqrt(4 * p // disc) + 1):
            r = 4 * p - disc * v * v
            s = isqrt(r)
            if s * s != r:
                continue
            for sgn in (1, -1):
                num = -self.trace * v + sgn * s
                if num % 2 == 0 and num // 2 > 0:
                    found.append((num // 2, v))
        if not found:
            raise ValueError(f"{p} does not split in {self.name}")
        best = found[0]
        for cand in found[1:]:
            if self.arg_less(cand, best):
                best = cand
        return best


GAUSSIAN = _Field("gaussian", 0, 1, 2, 4, 8)
EISENSTEIN = _Field("eisenstein", 1, 1, 3, 6, 12)
FIELDS = {"gaussian": GAUSSIAN, "eisenstein": EISENSTEIN}
_FIELD_DISC = {"gaussian": -4, "eisenstein": -3}


@dataclass(frozen=True)
class SosDecomposition:
    """z = w/|w| = zeta^ell * prod (omega_p/sqrt(p))^n_p with zeta = (1+omega)/|1+omega|."""

    field: str
    ell: int
    primes: dict[int, int]

    def to_dict(self) -> dict:
        return {"ell": self.ell, "primes": {str(p): n for p, n in sorted(self.primes.items())}}

    def compose(self, other: SosDecomposition) -> SosDecomposition:
        if self.field != other.field:
            raise ValueError("cannot compose decompositions over different fields")
        primes = dict(self.primes)
        for p, n in other.primes.items():
            primes[p] = primes.get(p, 0) + n
            if primes[p] == 0:
                del primes[p]
        mod = FIELDS[self.field].root_order
        return SosDecomposition(self.field, (self.ell + other.ell) % mod, primes)


def _get_field(field):
    if isinstance(field, _Field):
        return field
    try:
        return FIELDS[field]
    except KeyError:
        raise ValueError(f"unknown field {field!r}") from None


def sos_decompose(field, w) -> SosDecomposition:
    F = _get_field(field)
    w = tuple(w)
    if w == (0, 0):
        raise ValueError("cannot decompose the zero element")
    d = _FIELD_DISC[F.name]
    rest = w
    ell = 0
    primes: dict[int, int] = {}
    for p in sorted(factorize(F.nrm(w))):
        if p == F.ramified:
            while (q := F.divmod_exact(rest, (1, 1))) is not None:
                rest = q
                ell += 1
        elif kronecker(d, p) == -1:
            while rest[0] % p == 0 and rest[1] % p == 0:
                rest = (rest[0] // p, rest[1] // p)
        else:
            pi = F.split_prime(p)
            bar = F.conj(pi)
            n = 0
            while (q := F.divmod_exact(rest, pi)) is not None:
                rest, n = q, n + 1
            while (q := F.divmod_exact(rest, bar)) is not None:
                rest, n = q, n - 1
            if n:
                primes[p] = n
    unit = (0, 1)
    for k in range(F.units):
        if F.power(unit, k) == rest:
            break
    else:  # pragma: no cover - factorization left a non-unit
        raise ArithmeticError(f"residual {rest} is not a unit")
    # the unit omega-power is zeta^2 in both rings
    return SosDecomposition(F.name, (ell + 2 * k) % F.root_order, primes)


def sos_recombine(dec: SosDecomposition) -> QuadElem:
    """An element W of the ring whose direction W/|W| is the decomposed rotation."""
    F = _get_field(dec.field)
    W = F.power((1, 1), dec.ell)
    for p, n in sorted(dec.primes.items()):
        pi = F.split_prime(p)
        W = F.mul(W, F.power(pi if n > 0 else F.conj(pi), abs(n)))
    return QuadElem(*W)


def same_direction(field, x, y) -> bool:
    """x/|x| == y/|y| exactly: x * conj(y) is a positive real."""
    F = _get_field(field)
    a, b = F.mul(tuple(x), F.conj(tuple(y)))
    return b == 0 and a > 0


def sos_group_description(spec: LatticeSpec) -> dict:
    ring = multiplier_ring(spec)
    if ring is GENERIC:
        return {"text": "C₂", "torsion": 2, "free_rank": "0"}
    if ring.d_K == -4:
        return {"text": "C₈ × Z^(ℵ₀)", "torsion": 8, "free_rank": "aleph_0"}
    if ring.d_K == -3:
        return {"text": "C₁₂ × Z^(ℵ₀)", "torsion": 12, "free_rank": "aleph_0"}
    return {
        "text": "torsion × Z^(ℵ₀)",
        "torsion": None,
        "free_rank": "aleph_0",
        "note": "torsion not determined by this artifact",
    }
