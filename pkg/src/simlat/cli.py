"""Command-line front end: analyze, count, series, verify, forms, sos."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .counting import ssl_counts
from .dirichlet import builder, parse_preset
from .exact import IntegralityError, LatticeSpec, QuadElem, format_rational, minimal_polynomial, parse_rational
from .mulring import GENERIC, gram_matrix, multiplier_ring, sos_decompose, sos_group_description
from .orders import class_number, reduced_forms

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3

COMMANDS = ("analyze", "count", "series", "verify", "forms", "sos")


class UsageError(ValueError):
    pass


@dataclass
class CommandConfig:
    command: str
    tau: tuple | None = None
    generic: bool = False
    disc: int | None = None
    preset: str | None = None
    m_max: int = 1000
    format: str = "json"
    primitive_only: bool = False
    field: str = "gaussian"
    w: tuple[int, int] | None = None

    def validate(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.m_max < 1:
            raise UsageError("--max must be at least 1")
        if self.format not in ("csv", "json"):
            raise UsageError("--format must be csv or json")
        if self.command in ("analyze", "count", "verify") and (self.tau is None) == (not self.generic):
            raise UsageError(f"{self.command} needs exactly one of --tau or --generic")
        if self.command == "series":
            if self.preset is None:
                raise UsageError("series needs --preset")
            try:
                parse_preset(self.preset)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        if self.command == "forms" and self.disc is None:
            raise UsageError("forms needs --disc")
        if self.command == "sos" and self.w is None:
            raise UsageError("sos needs --w")

    def lattice(self) -> LatticeSpec:
        if self.generic:
            return LatticeSpec.make_generic()
        try:
            return LatticeSpec.tau(*self.tau)
        except ValueError as exc:
            raise UsageError(str(exc)) from None


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, indent=2) + "\n"


def _csv(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def analyze(spec: LatticeSpec) -> dict:
    ring = multiplier_ring(spec)
    out = {"lattice": spec.to_dict(), "generic": ring is GENERIC}
    if ring is GENERIC:
        out.update(
            minimal_polynomial=None,
            discriminant=None,
            fundamental_discriminant=None,
            conductor=None,
            norm_form=None,
            class_number=None,
            unit_count=2,
            gram_matrix=None,
        )
    else:
        s, p, q = minimal_polynomial(spec)
        g = gram_matrix(spec)
        out.update(
            minimal_polynomial={"s": s, "p": p, "q": q},
            discriminant=ring.D,
            fundamental_discriminant=ring.d_K,
            conductor=ring.f,
            norm_form=str(ring.norm_form),
            class_number=class_number(ring.D),
            unit_count=ring.w,
            gram_matrix=[[format_rational(x) for x in row] for row in g.as_rows()],
        )
    out["sos_group"] = sos_group_description(spec)
    return out


def count(spec: LatticeSpec, m_max: int, fmt: str, primitive_only: bool) -> str:
    rows = ssl_counts(multiplier_ring(spec), m_max)
    if fmt == "csv":
        if primitive_only:
            return _csv(["m", "f_pr"], [(r.m, r.f_pr) for r in rows])
        return _csv(["m", "f", "f_pr"], [(r.m, r.f, r.f_pr) for r in rows])
    if primitive_only:
        data = [{"m": r.m, "f_pr": r.f_pr} for r in rows]
    else:
        data = [{"m": r.m, "f": r.f, "f_pr": r.f_pr} for r in rows]
    return _dump({"lattice": spec.to_dict(), "m_max": m_max, "rows": data})


def series(preset: str, m_max: int, fmt: str) -> str:
    coeffs = builder(preset, m_max).to_ints()
    if fmt == "csv":
        return _csv(["m", "coefficient"], enumerate(coeffs, start=1))
    return _dump({"preset": preset, "n_max": m_max, "coeffs": coeffs})


def forms(D: int) -> dict:
    fcs = reduced_forms(D)
    classes = [
        {"a": q.a, "b": q.b, "c": q.c, "genus": fcs.genus_of(i)}
        for i, q in enumerate(fcs.reduced_forms)
    ]
    return {"D": D, "h": fcs.h, "classes": classes, "single_class_genus": fcs.is_single_class_genus()}


def run(config: CommandConfig, out=None) -> int:
    """Execute one command; returns the process exit status."""
    out = sys.stdout if out is None else out
    try:
        config.validate()
        cmd = config.command
        if cmd == "analyze":
            out.write(_dump(analyze(config.lattice())))
        elif cmd == "count":
            out.write(count(config.lattice(), config.m_max, config.format, config.primitive_only))
        elif cmd == "series":
            out.write(series(config.preset, config.m_max, config.format))
        elif cmd == "forms":
            try:
                out.write(_dump(forms(config.disc)))
            except OverflowError:
                raise
            except ValueError as exc:
                raise UsageError(str(exc)) from None
        elif cmd == "sos":
            try:
                dec = sos_decompose(config.field, config.w)
            except ValueError as exc:
                raise UsageError(str(exc)) from None
            out.write(_dump(dec.to_dict()))
        elif cmd == "verify":
            from .verify import run_battery

            results = run_battery(config.lattice(), config.m_max)
            for res in results:
                if not res.ok:
                    out.write(f"FAIL {res.name}: {res.detail}\n")
                    return EXIT_FAIL
            for res in results:
                out.write(f"ok   {res.name}\n")
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (IntegralityError, OverflowError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def _tau_arg(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("expected alpha,beta_sq such as 0/1,9/4")
    try:
        return tuple(parse_rational(p) for p in parts)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _pair_arg(text: str):
    try:
        u, v = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected u,v") from None
    return QuadElem(u, v)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="simlat", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def lattice_args(p):
        g = p.add_mutually_exclusive_group(required=True)
        g.add_argument("--tau", type=_tau_arg, help="alpha,beta_sq as n/d rationals")
        g.add_argument("--generic", action="store_true", help="lattice with multiplier ring Z")

    p = sub.add_parser("analyze", help="multiplier ring and norm form of a lattice")
    lattice_args(p)

    p = sub.add_parser("count", help="SSL counts f(m), f_pr(m)")
    lattice_args(p)
    p.add_argument("--max", dest="m_max", type=int, default=1000)
    p.add_argument("--primitive", dest="primitive_only", action="store_true")
    p.add_argument("--format", choices=("csv", "json"), default="json")

    p = sub.add_parser("series", help="closed-form primitive generating function")
    p.add_argument("--preset", required=True)
    p.add_argument("--max", dest="m_max", type=int, default=1000)
    p.add_argument("--format", choices=("csv", "json"), default="json")

    p = sub.add_parser("verify", help="run the cross-check battery")
    lattice_args(p)
    p.add_argument("--max", dest="m_max", type=int, default=1000)

    p = sub.add_parser("forms", help="reduced forms and genera of a discriminant")
    p.add_argument("--disc", type=int, required=True)

    p = sub.add_parser("sos", help="rotation decomposition of a Gaussian or Eisenstein integer")
    p.add_argument("--field", choices=("gaussian", "eisenstein"), default="gaussian")
    p.add_argument("--w", type=_pair_arg, required=True)
    return parser


def parse_config(argv=None) -> CommandConfig:
    ns = build_parser().parse_args(argv)
    cfg = CommandConfig(command=ns.command)
    for name in ("tau", "generic", "disc", "preset", "m_max", "format", "primitive_only", "field", "w"):
        if hasattr(ns, name):
            setattr(cfg, name, getattr(ns, name))
    return cfg


def main(argv=None) -> int:
    try:
        config = parse_config(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
