"""Command-line surface.

Exit codes: 0 success, 1 failed verification check, 2 usage or parse error,
3 enumeration cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lattice as lat
from .alignment import enumerate_aligned
from .config import resolve_cap, resolve_threads, set_debug_crosschecks
from .enumeration import (
    check_conjecture_t,
    check_type_d_count,
    cover_enumerator,
    t_sequence,
)
from .errors import CapExceededError, CompositionError, NotAPermutationError
from .parabolic import Composition, enumerate_quotient, is_member
from .projection import project_down, project_up, theta_classes
from .signed_perm import SignedPermutation
from .tamari import build_tamari, verify_theorems

EXIT_OK, EXIT_CHECK_FAILED, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


def _alpha_values(args) -> list[Composition]:
    specs = []
    if getattr(args, "batch", None):
        with open(args.batch, encoding="utf-8") as handle:
            specs = [line.strip() for line in handle if line.strip()]
    elif args.alpha is not None:
        specs = [args.alpha]
    else:
        raise CompositionError("one of --alpha or --batch is required")
    return [Composition.parse(s) for s in specs]


def _cmd_enumerate(args) -> int:
    rows = []
    for alpha in _alpha_values(args):
        members = (
            enumerate_aligned(alpha, args.cap)
            if args.aligned
            else enumerate_quotient(alpha, args.cap)
        )
        rows.extend(pi.format() for pi in members)
    if args.format == "json":
        print(json.dumps(rows))
    else:
        print("\n".join(rows))
    return EXIT_OK


def _cmd_project(args) -> int:
    alpha = Composition.parse(args.alpha)
    if args.classes:
        print(json.dumps([c.to_json() for c in theta_classes(alpha, args.cap)]))
        return EXIT_OK
    pi = SignedPermutation.parse(args.perm)
    if not is_member(alpha, pi):
        print(f"error: {pi} is not a member of the quotient for {alpha}", file=sys.stderr)
        return EXIT_USAGE
    image = (project_down if args.dir == "down" else project_up)(alpha, pi)
    if args.format == "json":
        print(json.dumps({"alpha": alpha.format(), "result": image.format()}))
    else:
        print(image.format())
    return EXIT_OK


def _cmd_lattice(args) -> int:
    status = EXIT_OK
    for alpha in _alpha_values(args):
        if args.export:
            built = build_tamari(alpha, cap=args.cap)
            label = lambda pi: pi.long_one_line()
            stem = args.out or f"tamari_{alpha.format().replace(',', '_')}"
            path = f"{stem}.{args.export}"
            if args.export == "dot":
                text = lat.lattice_to_dot(built.lattice, label)
            else:
                text = json.dumps(lat.lattice_to_json(built.lattice, label), indent=2)
            with open(path, "w", encoding="utf-8", newline="\n") as handle:
                handle.write(text if text.endswith("\n") else text + "\n")
            print(f"wrote {path}")
        if args.check:
            report = verify_theorems(alpha, cap=args.cap)
            if args.check == "all":
                wanted = report.checks
            else:
                names = args.check.split(",")
                unknown = [n for n in names if n not in report.checks]
                if unknown:
                    print(f"error: unknown checks {unknown}", file=sys.stderr)
                    return EXIT_USAGE
                wanted = {name: report.checks[name] for name in names}
            if args.format == "json":
                print(json.dumps(report.to_json()))
            else:
                print(report.summary())
            if not all(wanted.values()):
                status = EXIT_CHECK_FAILED
    return status


def _cmd_sequence(args) -> int:
    values = t_sequence(args.max_n, args.cap, args.threads)
    if args.format == "json":
        print(json.dumps(values))
    elif args.format == "csv":
        print("n,total")
        for n, v in enumerate(values, start=1):
            print(f"{n},{v}")
    else:
        print(",".join(str(v) for v in values))
    return EXIT_OK


def _cmd_cover_enum(args) -> int:
    outputs = []
    for alpha in _alpha_values(args):
        poly = cover_enumerator(alpha, args.cap)
        outputs.append((alpha, poly))
    if args.format == "json":
        print(
            json.dumps(
                [
                    {
                        "alpha": a.format(),
                        "size": p(1),
                        "coefficients": list(p.coefficients),
                    }
                    for a, p in outputs
                ]
            )
        )
    elif args.format == "csv":
        for a, p in outputs:
            print(f"{a.format()},{p(1)},{p.format()}")
    else:
        for a, p in outputs:
            print(p.format())
    for a, p in outputs:
        if p.coefficients[-1] != 1:
            print(
                f"warning: top coefficient of {a.format()} is {p.coefficients[-1]}, not 1",
                file=sys.stderr,
            )
    return EXIT_OK


def _cmd_conjecture(args) -> int:
    reports = []
    for n in range(args.min_n, args.max_n + 1):
        if args.type_d:
            if n < 2:
                continue
            reports.append(check_type_d_count(n, args.cap))
        else:
            if args.t > n:
                continue
            reports.append(check_conjecture_t(args.t, n, args.cap))
    if args.format == "json":
        print(json.dumps([r.to_json() for r in reports]))
    else:
        for r in reports:
            print(r.summary())
    mismatches = [r for r in reports if not r.ok]
    for r in mismatches:
        print(f"MISMATCH for alpha={r.alpha.format()}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="btamari",
        description="Type-B parabolic quotients, aligned elements, and Tamari lattices",
    )
    parser.add_argument("--cap", type=int, default=None, help="enumeration cap")
    parser.add_argument("--threads", default=1, help="worker count or 'auto'")
    parser.add_argument(
        "--format", choices=["text", "json", "csv"], default="text"
    )
    parser.add_argument(
        "--debug-crosschecks",
        action="store_true",
        help="recompute key objects a second way and assert agreement",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="list quotient members")
    p.add_argument("--alpha")
    p.add_argument("--batch", help="file with one composition per line")
    p.add_argument("--aligned", action="store_true")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("project", help="project onto pattern-avoiding representatives")
    p.add_argument("--alpha", required=True)
    p.add_argument("--perm")
    p.add_argument("--dir", choices=["down", "up"])
    p.add_argument(
        "--classes", action="store_true", help="list all projection fibers as JSON"
    )
    p.set_defaults(func=_cmd_project)

    p = sub.add_parser("lattice", help="verify or export a Tamari lattice")
    p.add_argument("--alpha")
    p.add_argument("--batch")
    p.add_argument("--check", help="'all' or comma-separated check names")
    p.add_argument("--export", choices=["dot", "json"])
    p.add_argument("--out", help="output path stem for exports")
    p.set_defaults(func=_cmd_lattice)

    p = sub.add_parser("sequence", help="aligned-count totals per degree")
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=_cmd_sequence)

    p = sub.add_parser("cover-enum", help="cover enumerator polynomial")
    p.add_argument("--alpha")
    p.add_argument("--batch")
    p.set_defaults(func=_cmd_cover_enum)

    p = sub.add_parser("conjecture", help="compare counts against closed forms")
    p.add_argument("--t", type=int)
    p.add_argument("--type-d", action="store_true")
    p.add_argument("--min-n", type=int, default=1)
    p.add_argument("--max-n", type=int, required=True)
    p.set_defaults(func=_cmd_conjecture)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "conjecture" and not args.type_d and args.t is None:
        parser.error("conjecture needs --t or --type-d")
    if args.command == "project" and not args.classes and not (args.perm and args.dir):
        parser.error("project needs --perm and --dir (or --classes)")
    try:
        set_debug_crosschecks(args.debug_crosschecks)
        args.cap = resolve_cap(args.cap)
        args.threads = resolve_threads(args.threads)
        return args.func(args)
    except CapExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (CompositionError, NotAPermutationError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
