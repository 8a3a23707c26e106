"""Exact Dirichlet-series coefficient arithmetic and closed-form generating functions.

Every series is a finite array of coefficients f(1..n_max).  Builders return
the primitive-SSL series D^pr for a family of lattices; multiplying by the
square indicator (zeta(2s)) gives the full SSL series.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Callable

from .arith import factor_with_spf, factorize, primes_upto, smallest_prime_factors
from .exact import IntegralityError
from .mulring import GAUSSIAN
from .orders import QuadraticOrder, fundamental_split, kronecker, order_from_discriminant

CLASS_NUMBER_ONE = (-3, -4, -7, -8, -11, -19, -43, -67, -163)


class CoeffSeq:
    """Coefficients f(1), ..., f(n_max) as exact rationals."""

    def __init__(self, values, n_max: int | None = None):
        values = [Fraction(v) for v in values]
        if n_max is not None and len(values) != n_max:
            raise ValueError("length does not match n_max")
        if not values:
            raise ValueError("a coefficient sequence needs n_max >= 1")
        self._values = [Fraction(0)] + values

    @classmethod
    def zeros(cls, n_max: int) -> CoeffSeq:
        return cls([0] * n_max)

    @classmethod
    def from_function(cls, fn: Callable[[int], object], n_max: int) -> CoeffSeq:
        return cls([fn(m) for m in range(1, n_max + 1)])

    @property
    def n_max(self) -> int:
        return len(self._values) - 1

    def __getitem__(self, m: int) -> Fraction:
        if not 1 <= m <= self.n_max:
            raise IndexError(m)
        return self._values[m]

    def __iter__(self):
        return iter(self._values[1:])

    def __len__(self):
        return self.n_max

    def __eq__(self, other):
        if isinstance(other, CoeffSeq):
            return self._values == other._values
        return NotImplemented

    def __repr__(self):
        head = ", ".join(str(v) for v in self._values[1:11])
        return f"CoeffSeq(n_max={self.n_max}, [{head}{', ...' if self.n_max > 10 else ''}])"

    def truncate(self, n_max: int) -> CoeffSeq:
        return CoeffSeq(self._values[1 : n_max + 1])

    def to_ints(self) -> list[int]:
        """Integer coefficients; raises IntegralityError on a fractional or negative entry."""
        out = []
        for m, v in enumerate(self._values[1:], start=1):
            if v.denominator != 1 or v < 0:
                raise IntegralityError(f"coefficient {v} at m={m} is not a nonnegative integer")
            out.append(int(v))
        return out

    def nonzero(self) -> dict[int, Fraction]:
        return {m: v for m, v in enumerate(self._values[1:], start=1) if v}


def dirichlet_convolve(a: CoeffSeq, b: CoeffSeq) -> CoeffSeq:
    if a.n_max != b.n_max:
        raise ValueError("sequences must share n_max")
    n = a.n_max
    out = [Fraction(0)] * (n + 1)
    for d in range(1, n + 1):
        ad = a[d]
        if not ad:
            continue
        for k in range(1, n // d + 1):
            bk = b[k]
            if bk:
                out[d * k] += ad * bk
    return CoeffSeq(out[1:])


def delta(n_max: int) -> CoeffSeq:
    return CoeffSeq.from_function(lambda m: int(m == 1), n_max)


def ones(n_max: int) -> CoeffSeq:
    return CoeffSeq([1] * n_max)


def square_indicator(n_max: int) -> CoeffSeq:
    """Coefficients of zeta(2s)."""
    return CoeffSeq.from_function(lambda m: int(isqrt(m) ** 2 == m), n_max)


def sigma1(n_max: int) -> CoeffSeq:
    out = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        for k in range(d, n_max + 1, d):
            out[k] += d
    return CoeffSeq(out[1:])


# --- power series in X = p^{-s} ----------------------------------------------


def series_mul(a: list, b: list, degree: int) -> list[Fraction]:
    out = [Fraction(0)] * (degree + 1)
    for i, x in enumerate(a[: degree + 1]):
        if x:
            for j, y in enumerate(b[: degree + 1 - i]):
                out[i + j] += x * y
    return out


def poly(*coeffs) -> Callable[[int], list[Fraction]]:
    """A polynomial factor, padded or truncated to the requested degree."""

    def factor(degree: int) -> list[Fraction]:
        c = [Fraction(x) for x in coeffs[: degree + 1]]
        return c + [Fraction(0)] * (degree + 1 - len(c))

    return factor


def geometric(step: int = 1, power: int = 1) -> Callable[[int], list[Fraction]]:
    """1/(1 - X^step)^power."""

    def factor(degree: int) -> list[Fraction]:
        base = [Fraction(int(k % step == 0)) for k in range(degree + 1)]
        out = [Fraction(1)] + [Fraction(0)] * degree
        for _ in range(power):
            out = series_mul(out, base, degree)
        return out

    return factor


def standard_factor(degree: int) -> list[Fraction]:
    """(1 + X)/(1 - X) = 1 + 2X + 2X^2 + ..."""
    return [Fraction(1)] + [Fraction(2)] * degree


def product_factor(*factors) -> Callable[[int], list[Fraction]]:
    def factor(degree: int) -> list[Fraction]:
        out = [Fraction(1)] + [Fraction(0)] * degree
        for fac in factors:
            out = series_mul(out, fac(degree), degree)
        return out

    return factor


ONE = poly(1)


@dataclass(frozen=True)
class EulerFactorRule:
    """Per-prime local factors: ``classifier(p)`` picks a tag, ``factors[tag](deg)`` expands it."""

    classifier: Callable[[int], str]
    factors: dict[str, Callable[[int], list[Fraction]]]

    def factor(self, p: int, degree: int) -> list[Fraction]:
        coeffs = self.factors[self.classifier(p)](degree)
        if coeffs[0] != 1:
            raise ValueError(f"Euler factor at p={p} has constant term {coeffs[0]}")
        return coeffs


def euler_expand(rule: EulerFactorRule, n_max: int) -> CoeffSeq:
    c = [Fraction(0)] * (n_max + 1)
    c[1] = Fraction(1)
    for p in primes_upto(n_max):
        degree = 0
        pk = 1
        while pk * p <= n_max:
            pk *= p
            degree += 1
        e = rule.factor(p, degree)
        old = c[:]
        pj = 1
        for j in range(1, degree + 1):
            pj *= p
            ej = e[j]
            if not ej:
                continue
            for n in range(1, n_max // pj + 1):
                if old[n]:
                    c[n * pj] += ej * old[n]
    return CoeffSeq(c[1:])


# --- rules --------------------------------------------------------------------


def zeta_rule() -> EulerFactorRule:
    return EulerFactorRule(lambda p: "all", {"all": geometric()})


def dedekind_zeta_rule(D: int) -> EulerFactorRule:
    """prod 1/((1 - p^-s)(1 - chi_D(p) p^-s))."""
    tags = {0: "ramified", 1: "split", -1: "inert"}
    return EulerFactorRule(
        lambda p: tags[kronecker(D, p)],
        {
            "ramified": geometric(),
            "split": geometric(power=2),
            "inert": geometric(step=2),
        },
    )


def _residue_rule(modulus: int, split_residues, special: dict[int, Callable]) -> EulerFactorRule:
    def classify(p: int) -> str:
        if p in special:
            return f"p{p}"
        return "split" if p % modulus in split_residues else "other"

    factors = {"split": standard_factor, "other": ONE}
    factors.update({f"p{p}": fac for p, fac in special.items()})
    return EulerFactorRule(classify, factors)


def primitive_maximal_rule(d_K: int) -> EulerFactorRule:
    """(1 + p_ram^-s) * prod over split p of (1 + p^-s)/(1 - p^-s)."""
    if d_K not in CLASS_NUMBER_ONE:
        raise ValueError(f"d_K={d_K} is not one of the class-number-one fields")
    p_ram = 2 if d_K % 4 == 0 else -d_K
    tags = {1: "split", -1: "other"}
    return EulerFactorRule(
        lambda p: "ram" if p == p_ram else tags[kronecker(d_K, p)],
        {"ram": poly(1, 1), "split": standard_factor, "other": ONE},
    )


def d28_two_factor(degree: int) -> list[Fraction]:
    return product_factor(poly(1, -2, 2), standard_factor)(degree)


PRESET_RULES: dict[str, Callable[[], EulerFactorRule]] = {
    "square": lambda: primitive_maximal_rule(-4),
    "triangular": lambda: primitive_maximal_rule(-3),
    "d12": lambda: _residue_rule(3, {1}, {2: poly(1, 0, 2), 3: poly(1, 1)}),
    "d16": lambda: _residue_rule(4, {1}, {2: poly(1, 0, 1, 2)}),
    "d27": lambda: _residue_rule(3, {1}, {3: poly(1, 0, 2, 3)}),
    "d28": lambda: _residue_rule(7, {1, 2, 4}, {2: d28_two_factor, 7: poly(1, 1)}),
}


# --- builders that are not Euler products --------------------------------------


def _d24_grading(n_max: int) -> CoeffSeq:
    """b(m): primitive ideals of norm m built from 2, 3 and p = 5, 11 (24) that are principal."""
    spf = smallest_prime_factors(n_max)
    vals = [0] * (n_max + 1)
    vals[1] = 1
    for m in range(2, n_max + 1):
        fac = factor_with_spf(m, spf)
        if any(p % 24 not in (5, 11) and p > 3 for p in fac):
            continue
        if fac.get(2, 0) > 1 or fac.get(3, 0) > 1:
            continue
        parity = sum(fac.values()) % 2
        # every such ideal lies in the non-principal class; only even products are principal
        if parity == 0:
            vals[m] = 2 ** sum(1 for p in fac if p > 3)
    return CoeffSeq(vals[1:])


def build_d24(n_max: int) -> CoeffSeq:
    rule = _residue_rule(24, {1, 7}, {})
    return dirichlet_convolve(euler_expand(rule, n_max), _d24_grading(n_max))


def _square_fpr(n_max: int) -> list[int]:
    return [0] + euler_expand(primitive_maximal_rule(-4), n_max).to_ints()


def build_zpi_small(p: int, n_max: int) -> CoeffSeq:
    """Z[3i] and Z[5i]: each primitive square-lattice SSL splits into indices m and p^2 m."""
    same = {3: {1}, 5: {1, 4}}[p]
    sq = p * p
    fsq = _square_fpr(n_max)
    out = [Fraction(0)] * (n_max + 1)
    for m in range(1, n_max + 1):
        f = fsq[m]
        if not f:
            continue
        if m % p in same:
            out[m] += f
            if sq * m <= n_max:
                out[sq * m] += f
        elif sq * m <= n_max:
            out[sq * m] += 2 * f
    return CoeffSeq(out[1:])


_Z7I_WEIGHT = {1: 4, 2: 2, 3: 1}


def z7i_prime_type(q: int) -> int:
    """Type 1, 2 or 3 of a prime q = x^2 + y^2 relative to 7."""
    if q % 7 not in (1, 2, 4):
        return 3
    x, y = GAUSSIAN.split_prime(q)
    return 1 if x % 7 == 0 or y % 7 == 0 else 2


def z7i_class(m: int, fac: dict[int, int] | None = None) -> str:
    """'N1', 'N2', 'N3' for m = 1, 2, 4 (7); 'nonresidue' otherwise."""
    fac = factorize(m) if fac is None and m > 1 else (fac or {})
    types = {q: z7i_prime_type(q) for q in fac}
    s = sum(_Z7I_WEIGHT[types[q]] * r for q, r in fac.items())
    if m % 7 not in (1, 2, 4):
        return "nonresidue"
    odd3 = sum(1 for q, r in fac.items() if types[q] == 3 and r % 2)
    if odd3 == 0:
        return "N1" if s % 4 == 0 else "N2"
    return "N3"


def z7i_s(m: int) -> int:
    fac = factorize(m) if m > 1 else {}
    return sum(_Z7I_WEIGHT[z7i_prime_type(q)] * r for q, r in fac.items())


_Z7I_AB = {
    "N1": (Fraction(1), Fraction(1)),
    "N2": (Fraction(0), Fraction(2)),
    "N3": (Fraction(1, 2), Fraction(3, 2)),
    "nonresidue": (Fraction(0), Fraction(2)),
}


def build_z7i(n_max: int) -> CoeffSeq:
    fsq = _square_fpr(n_max)
    spf = smallest_prime_factors(n_max)
    out = [Fraction(0)] * (n_max + 1)
    for m in range(1, n_max + 1):
        f = fsq[m]
        if not f:
            continue
        a, b = _Z7I_AB[z7i_class(m, factor_with_spf(m, spf))]
        out[m] += a * f
        if 49 * m <= n_max:
            out[49 * m] += b * f
    return CoeffSeq(out[1:])


PRESETS = (
    "square",
    "triangular",
    "maximal",
    "d12",
    "d16",
    "d27",
    "d28",
    "d24",
    "z3i",
    "z5i",
    "z7i",
    "generic",
)

PRESET_DISCRIMINANT = {
    "square": -4,
    "triangular": -3,
    "d12": -12,
    "d16": -16,
    "d27": -27,
    "d28": -28,
    "d24": -24,
    "z3i": -36,
    "z5i": -100,
    "z7i": -196,
}

_MAXIMAL_RE = re.compile(r"^maximal(?:[:(]\s*(-?\d+)\s*\)?)?$")


def parse_preset(name: str) -> tuple[str, int | None]:
    """'d24' -> ('d24', None); 'maximal:-7' or 'maximal(-7)' -> ('maximal', -7)."""
    m = _MAXIMAL_RE.match(name.strip())
    if m:
        if m.group(1) is None:
            raise ValueError("preset 'maximal' needs a field discriminant, e.g. maximal:-7")
        return "maximal", int(m.group(1))
    if name not in PRESETS:
        raise ValueError(f"unknown preset {name!r}")
    return name, None


def preset_order(name: str) -> QuadraticOrder | None:
    """The order whose primitive SSL counts the preset describes (None for generic)."""
    base, d_K = parse_preset(name)
    if base == "generic":
        return None
    D = d_K if base == "maximal" else PRESET_DISCRIMINANT[base]
    return order_from_discriminant(D)


def builder(preset: str, n_max: int) -> CoeffSeq:
    """Primitive SSL coefficients of the named family up to n_max, checked integral."""
    if n_max < 1:
        raise ValueError("n_max must be positive")
    base, d_K = parse_preset(preset)
    if base == "generic":
        seq = delta(n_max)
    elif base == "maximal":
        if fundamental_split(d_K)[1] != 1:
            raise ValueError(f"{d_K} is not a fundamental discriminant")
        seq = euler_expand(primitive_maximal_rule(d_K), n_max)
    elif base in PRESET_RULES:
        seq = euler_expand(PRESET_RULES[base](), n_max)
    elif base == "d24":
        seq = build_d24(n_max)
    elif base == "z3i":
        seq = build_zpi_small(3, n_max)
    elif base == "z5i":
        seq = build_zpi_small(5, n_max)
    elif base == "z7i":
        seq = build_z7i(n_max)
    else:  # pragma: no cover
        raise ValueError(preset)
    seq.to_ints()
    if seq[1] != 1:
        raise IntegralityError(f"preset {preset} has f_pr(1) = {seq[1]}")
    return seq


def full_series(primitive: CoeffSeq) -> CoeffSeq:
    """D(s) = zeta(2s) D^pr(s)."""
    return dirichlet_convolve(square_indicator(primitive.n_max), primitive)
