"""Exact scalars and lattice parameters.

Rationals are plain :class:`fractions.Fraction` values; this module only adds
the "n/d" wire format and the lattice description built on top of them.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import NamedTuple

Rational = Fraction


class IntegralityError(ArithmeticError):
    """An exact computation produced a value that must have been integral."""


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    num, sep, den = text.partition("/")
    try:
        n = int(num)
        d = int(den) if sep else 1
    except ValueError:
        raise ValueError(f"not a rational in n/d form: {text!r}") from None
    if d == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(n, d)


def format_rational(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class LatticeSpec:
    """The lattice <1, tau> with tau = alpha + i*sqrt(beta_sq), or a generic lattice.

    A generic lattice carries no parameters; its multiplier ring is Z.
    """

    generic: bool = False
    alpha: Fraction | None = None
    beta_sq: Fraction | None = None

    def __post_init__(self):
        if self.generic:
            if self.alpha is not None or self.beta_sq is not None:
                raise ValueError("generic lattice takes no tau parameters")
            return
        if self.alpha is None or self.beta_sq is None:
            raise ValueError("non-generic lattice needs alpha and beta_sq")
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta_sq", Fraction(self.beta_sq))
        if self.beta_sq <= 0:
            raise ValueError("beta_sq must be positive (tau in the upper half-plane)")

    @classmethod
    def tau(cls, alpha, beta_sq) -> LatticeSpec:
        return cls(False, Fraction(alpha), Fraction(beta_sq))

    @classmethod
    def make_generic(cls) -> LatticeSpec:
        return cls(True)

    @property
    def kind(self) -> str:
        return "generic" if self.generic else "tau"

    def to_dict(self) -> dict:
        if self.generic:
            return {"kind": "generic"}
        return {
            "kind": "tau",
            "alpha": format_rational(self.alpha),
            "beta_sq": format_rational(self.beta_sq),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> LatticeSpec:
        kind = data.get("kind")
        if kind == "generic":
            return cls.make_generic()
        if kind == "tau":
            return cls.tau(parse_rational(data["alpha"]), parse_rational(data["beta_sq"]))
        raise ValueError(f"unknown lattice kind {kind!r}")

    @classmethod
    def from_json(cls, text: str) -> LatticeSpec:
        return cls.from_dict(json.loads(text))

    def __str__(self):
        if self.generic:
            return "generic"
        return f"{format_rational(self.alpha)},{format_rational(self.beta_sq)}"


class QuadElem(NamedTuple):
    """u + v*omega, with omega the generator of some ambient order."""

    u: int
    v: int

    def is_zero(self) -> bool:
        return self.u == 0 and self.v == 0


def minimal_polynomial(spec: LatticeSpec) -> tuple[int, int, int]:
    """Primitive integer ``(s, p, q)`` with ``s*tau**2 + p*tau + q = 0`` and ``s > 0``."""
    if spec.generic:
        raise ValueError("a generic lattice has no quadratic minimal polynomial")
    # tau^2 - 2 alpha tau + (alpha^2 + beta^2) = 0
    coeffs = [Fraction(1), -2 * spec.alpha, spec.alpha**2 + spec.beta_sq]
    scale = lcm(*(c.denominator for c in coeffs))
    s, p, q = (int(c * scale) for c in coeffs)
    g = gcd(gcd(s, p), q)
    return s // g, p // g, q // g
