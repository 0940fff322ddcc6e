"""Command-line interface.

Exit status: 0 success, 1 malformed input, 2 verification mismatch,
3 period beyond the enumeration limit.
"""

from __future__ import annotations

import argparse
import json
import sys

from .graph import build_ms_presentation
from .model import SpecError, load_spec, normalize, standard_to_dict
from .necklace import enumerate_omega
from .oracle import GuardError, verify_counts
from .zeta import counts_via_traces, counts_via_zeta, odd_T_zeta, zeta_pft

EXIT_INPUT, EXIT_MISMATCH, EXIT_GUARD = 1, 2, 3


def _read_pft(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as e:
        raise SpecError(e.strerror or str(e), path) from None
    try:
        return normalize(load_spec(text))
    except SpecError as e:
        raise SpecError(str(e), path) from None


def _dump(obj, out):
    json.dump(obj, out, indent=2)
    out.write("\n")


def cmd_normalize(args, out):
    _dump(standard_to_dict(_read_pft(args.spec)), out)


def cmd_present(args, out):
    g = build_ms_presentation(_read_pft(args.spec))
    if args.json:
        _dump(g.to_dict(), out)
    else:
        out.write(g.to_dot("ms_presentation"))


def cmd_omega(args, out):
    if args.T < 1:
        raise SpecError("must be a positive integer", "T")
    for z in enumerate_omega(args.T):
        out.write(f"{z.bits} {z.root_length} {z.root_weight} {z.repetitions}\n")


def cmd_zeta(args, out):
    x = _read_pft(args.spec)
    if args.odd_t_fast:
        if x.period % 2 == 0:
            raise SpecError("--odd-t-fast requires an odd period", "period")
        f = odd_T_zeta(x)
        _dump({**f.to_dict(), "pretty": str(f)}, out)
        return
    _dump(zeta_pft(x).to_dict(), out)


def cmd_counts(args, out):
    x = _read_pft(args.spec)
    if args.max_n < 1:
        raise SpecError("must be positive", "--max-n")
    counts = counts_via_zeta(x, args.max_n) if args.method == "zeta" else counts_via_traces(x, args.max_n)
    for n, c in enumerate(counts, start=1):
        out.write(f"{n}\t{c}\n")


def cmd_verify(args, out):
    x = _read_pft(args.spec)
    if args.max_n < 1:
        raise SpecError("must be positive", "--max-n")
    reports = verify_counts(x, args.max_n)
    for r in reports:
        out.write(r.row() + "\n")
    return 0 if all(r.agree for r in reports) else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pftzeta", description="Zeta functions of periodic-finite-type shifts."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("normalize", help="print the standard form as JSON")
    p.add_argument("spec")
    p.set_defaults(func=cmd_normalize)

    p = sub.add_parser("present", help="print the MS presentation")
    p.add_argument("spec")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true", help="Graphviz output (default)")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("omega", help="list necklace representatives: bits L W N")
    p.add_argument("T", type=int)
    p.set_defaults(func=cmd_omega)

    p = sub.add_parser("zeta", help="print the zeta function as JSON")
    p.add_argument("spec")
    p.add_argument("--odd-t-fast", action="store_true", help="skip correction factors (odd period only)")
    p.set_defaults(func=cmd_zeta)

    p = sub.add_parser("counts", help="periodic-point counts, one TSV row per n")
    p.add_argument("spec")
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--method", choices=("traces", "zeta"), default="traces")
    p.set_defaults(func=cmd_counts)

    p = sub.add_parser("verify", help="compare all counting paths against brute force")
    p.add_argument("spec")
    p.add_argument("--max-n", type=int, default=8)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out) or 0
    except SpecError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except GuardError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
