"""Cross-check battery used by ``simlat verify`` and the acceptance tests."""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .arith import mobius
from .counting import hnf_ssl_count, ssl_counts, supermultiplicativity_check
from .dirichlet import CoeffSeq, PRESET_DISCRIMINANT, builder, full_series, sigma1
from .exact import LatticeSpec
from .mulring import GENERIC, multiplier_ring
from .orders import QuadraticOrder


class VerificationFailure(AssertionError):
    pass


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""


def matching_preset(order: QuadraticOrder) -> str | None:
    for name, D in PRESET_DISCRIMINANT.items():
        if D == order.D:
            return name
    if order.f == 1 and order.D in (-7, -8, -11, -19, -43, -67, -163):
        return f"maximal:{order.D}"
    return None


def check_oracle(spec: LatticeSpec, m_max: int) -> CheckResult:
    rows = ssl_counts(multiplier_ring(spec), m_max)
    s1 = sigma1(m_max)
    for row in rows:
        total, ssl = hnf_ssl_count(spec, row.m)
        if total != s1[row.m]:
            return CheckResult("hnf-oracle", False, f"m={row.m}: {total} sublattices, sigma1={s1[row.m]}")
        if ssl != row.f:
            return CheckResult("hnf-oracle", False, f"m={row.m}: oracle {ssl} SSLs, norm form {row.f}")
    return CheckResult("hnf-oracle", True)


def check_rows(rows) -> list[CheckResult]:
    n = len(rows)
    f = CoeffSeq([r.f for r in rows])
    fpr = CoeffSeq([r.f_pr for r in rows])
    s1 = sigma1(n)
    out = []

    bad = next((r.m for r in rows if not 0 <= r.f_pr <= r.f <= s1[r.m]), None)
    out.append(CheckResult("bounds", bad is None, "" if bad is None else f"m={bad}"))
    bad = next((k * k for k in range(1, isqrt(n) + 1) if f[k * k] < 1), None)
    out.append(CheckResult("squares", bad is None, "" if bad is None else f"f({bad}) = 0"))

    conv = full_series(fpr)
    bad = next((m for m in range(1, n + 1) if conv[m] != f[m]), None)
    out.append(CheckResult("zeta(2s) relation", bad is None, "" if bad is None else f"m={bad}"))

    bad = None
    for m in range(1, n + 1):
        inv = sum(mobius(k) * f[m // (k * k)] for k in range(1, isqrt(m) + 1) if m % (k * k) == 0)
        if inv != fpr[m]:
            bad = m
            break
    out.append(CheckResult("moebius inversion", bad is None, "" if bad is None else f"m={bad}"))

    viol = supermultiplicativity_check(rows)
    out.append(CheckResult("super-multiplicativity", not viol, "" if not viol else f"(m,n)={viol[0]}"))
    return out


def check_builder(preset: str, rows) -> CheckResult:
    seq = builder(preset, len(rows)).to_ints()
    for r, c in zip(rows, seq):
        if r.f_pr != c:
            return CheckResult(f"builder {preset}", False, f"m={r.m}: builder {c}, enumeration {r.f_pr}")
    return CheckResult(f"builder {preset}", True)


def run_battery(spec: LatticeSpec, m_max: int, oracle_max: int = 500) -> list[CheckResult]:
    ring = multiplier_ring(spec)
    rows = ssl_counts(ring, m_max)
    results = check_rows(rows)
    if ring is GENERIC:
        seq = builder("generic", m_max).to_ints()
        ok = all(r.f_pr == c for r, c in zip(rows, seq))
        results.append(CheckResult("builder generic", ok))
        return results
    results.append(check_oracle(spec, min(m_max, oracle_max)))
    preset = matching_preset(ring)
    if preset is not None:
        results.append(check_builder(preset, rows))
    return results
