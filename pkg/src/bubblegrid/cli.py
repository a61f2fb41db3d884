"""``bubblegrid`` command-line front end.

Exit status: 0 on success, 1 when a domain precondition fails, 2 when the
command line or an input file cannot be parsed.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .classify import class_energy, classify
from .geometry import min_symmetric_difference
from .lattice import Beta, energy, perimeter
from .oracle import DEFAULT_BUDGET, enumerate_minimisers, verify_formula
from .regularize import regularize_rows, remove_empty_lines
from .render import render
from .solver import (
    build_class4_family,
    build_explicit,
    class4_family_perimeter,
    continuum_energy,
    min_perimeter,
    wulff_discrepancy,
    wulff_rectangles,
)
from .textio import ConfigFormatError, format_configuration, read_configuration


class UsageError(Exception):
    """Unparseable input: exit status 2."""


def _fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    return repr(float(v))


def _beta(text: Optional[str]) -> Beta:
    if text is None:
        raise UsageError("--beta is required")
    s = text.strip()
    try:
        if s.startswith("~"):
            float(s[1:])
        else:
            Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"malformed beta {text!r}; use p/q or ~x") from None
    return Beta.parse(s)  # range violations surface as ValueError (status 1)


def _load(path: str):
    try:
        return read_configuration(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    except ConfigFormatError as exc:
        raise UsageError(f"{path}: {exc}") from None


def _emit(args, text: str, out):
    if args.emit:
        Path(args.emit).write_text(text)
    else:
        out.write(text if text.endswith("\n") else text + "\n")


def _require(value, flag: str):
    if value is None:
        raise UsageError(f"{flag} is required")
    return value


def cmd_solve(args, out) -> int:
    b = _beta(args.beta)
    if args.k is not None:
        fam = build_class4_family(b, args.k)
        n = fam.n_a
        res = min_perimeter(n, b)
        p = perimeter(fam)
        out.write(f"N={n} P_family={_fmt(p.at(b))} P_min={_fmt(res.min_perimeter)}\n")
        if args.emit:
            Path(args.emit).write_text(format_configuration(fam, b))
        return 0
    n = _require(args.n, "--n")
    res = min_perimeter(n, b)
    hs = ",".join(str(h) for h in res.optimal_heights)
    line = f"P_min={_fmt(res.min_perimeter)} h={{{hs}}}"
    if not res.certified:
        line += " certified=no"
    out.write(line + "\n")
    if args.emit:
        h = args.h if args.h is not None else res.optimal_heights[0]
        Path(args.emit).write_text(format_configuration(build_explicit(n, h), b))
    return 0


def cmd_enumerate(args, out) -> int:
    b = _beta(args.beta)
    rep = enumerate_minimisers(_require(args.na, "--na"), _require(args.nb, "--nb"), b, budget=args.budget)
    out.write(f"E_min={_fmt(rep.min_energy)}\n")
    out.write(f"count_no_swap={rep.count_no_swap}\n")
    out.write(f"count_swap={rep.count_swap}\n")
    if args.all:
        configs = rep.minimisers_with_swap if args.swap_identify else rep.minimisers_no_swap
        for c in configs:
            out.write("---\n")
            out.write(format_configuration(c, b))
    return 0


def cmd_energy(args, out) -> int:
    config, _ = _load(args.files[0])
    out.write(f"E={energy(config)} P={perimeter(config)}\n")
    return 0


def cmd_classify(args, out) -> int:
    config, _ = _load(args.files[0])
    c = classify(config)
    p = c.params
    e = class_energy(c.label, p, config.n_a, config.n_b)
    out.write(
        f"class={c.label.value} l=({p.l1},{p.l2},{p.l3}) h=({p.h1},{p.h2},{p.h3}) energy={e}\n"
    )
    return 0


def cmd_regularize(args, out) -> int:
    config, b = _load(args.files[0])
    result = regularize_rows(remove_empty_lines(config))
    text = f"# energy {energy(config)} -> {energy(result)}\n" + format_configuration(result, b)
    _emit(args, text, out)
    return 0


def cmd_compare(args, out) -> int:
    if len(args.files) != 2:
        raise UsageError("compare needs two files")
    c1, _ = _load(args.files[0])
    c2, _ = _load(args.files[1])
    out.write(f"symdiff={min_symmetric_difference(c1, c2)}\n")
    return 0


def cmd_render(args, out) -> int:
    config, _ = _load(args.files[0])
    _emit(args, render(config, args.format), out)
    return 0


def cmd_wulff(args, out) -> int:
    b = _beta(args.beta)
    ra, rb = wulff_rectangles(b)
    out.write(f"A=({ra.x0:.6f},{ra.x1:.6f})x({ra.y0:.6f},{ra.y1:.6f})\n")
    out.write(f"B=({rb.x0:.6f},{rb.x1:.6f})x({rb.y0:.6f},{rb.y1:.6f})\n")
    out.write(f"continuum={continuum_energy(b):.6f}\n")
    if args.n is not None:
        res = min_perimeter(args.n, b)
        config = build_explicit(args.n, res.optimal_heights[0])
        out.write(f"discrepancy={wulff_discrepancy(config, b):.6f}\n")
    return 0


def cmd_verify(args, out) -> int:
    b = _beta(args.beta)
    n_max = args.n if args.n is not None else 5
    budget = args.budget if args.budget != DEFAULT_BUDGET else 10
    failed = 0
    for chk in verify_formula(n_max, b, budget=budget):
        status = "ok" if chk.ok else "MISMATCH"
        failed += not chk.ok
        out.write(f"N={chk.n} oracle={_fmt(chk.oracle_perimeter)} formula={_fmt(chk.formula_perimeter)} {status}\n")
    return 1 if failed else 0


COMMANDS = {
    "solve": cmd_solve,
    "enumerate": cmd_enumerate,
    "energy": cmd_energy,
    "classify": cmd_classify,
    "regularize": cmd_regularize,
    "compare": cmd_compare,
    "render": cmd_render,
    "wulff": cmd_wulff,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bubblegrid", description="Lattice double-bubble toolkit")
    parser.add_argument("command", choices=sorted(COMMANDS))
    parser.add_argument("files", nargs="*", help="configuration files")
    parser.add_argument("--n", type=int)
    parser.add_argument("--na", type=int)
    parser.add_argument("--nb", type=int)
    parser.add_argument("--beta")
    parser.add_argument("--h", type=int)
    parser.add_argument("--k", type=int)
    parser.add_argument("--all", action="store_true")
    parser.add_argument("--swap-identify", action="store_true")
    parser.add_argument("--emit")
    parser.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    parser.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command in ("energy", "classify", "regularize", "render") and len(args.files) != 1:
        err.write(f"bubblegrid: {args.command} needs exactly one configuration file\n")
        return 2
    try:
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"bubblegrid: {exc}\n")
        return 2
    except (ValueError, ArithmeticError) as exc:
        err.write(f"bubblegrid: {exc}\n")
        return 1


def run(argv: Sequence[str]) -> tuple[int, str, str]:
    """Run the CLI in-process and capture ``(status, stdout, stderr)``."""
    import io

    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
