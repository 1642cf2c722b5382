"""Command-line entry point: ``jacklab`` (or ``python -m jacklab``).

Exit codes: 0 success, 1 a check failed, 2 usage or domain error,
3 internal inconsistency.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from typing import Sequence

from . import jack
from .errors import DomainError, InternalInconsistencyError, ResourceError
from .exactmath import rat_to_str
from .partitions import conjugate, parse_partition, partitions_of
from .rook import FerrersBoard, content_board, hit_numbers, hook_boards, rook_numbers
from .symfunc import convert, symfun_to_qsym
from .tableaux import enumerate_qyt, enumerate_syt, qyt_distribution, syt_count
from .verify import REGISTRY, run_check

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


def _partition_arg(text: str):
    try:
        return parse_partition(text)
    except (ValueError, DomainError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _ints_arg(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.strip("[]()").split(",") if x.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="jacklab", description="Exact Jack polynomial toolkit.")
    ap.add_argument("--cache", metavar="DIR", help="expansion cache directory (overrides $JACKLAB_CACHE)")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand", help="print an expansion of J_mu or J~_mu")
    p.add_argument("--mu", type=_partition_arg, required=True)
    p.add_argument("--basis", choices=["m", "e", "h", "p", "s", "qsym"], default="m")
    p.add_argument("--tilde", action="store_true", help="use alpha^n J_mu(1/alpha)")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("coeff", help="Schur coefficients of J~_mu in the binomial bases")
    p.add_argument("--mu", type=_partition_arg)
    p.add_argument("--lambda", dest="lam", type=_partition_arg)
    p.add_argument("--n", type=int, help="print the full grid over all mu, lambda of n")
    p.add_argument("--basis", choices=["a", "b", "poly"], default="a")
    p.add_argument("--csv", action="store_true", help="CSV output (grid mode)")

    p = sub.add_parser("verify", help="run registered checks")
    p.add_argument("check", help="check id or 'all'")
    p.add_argument("--n", type=int, help="degree (default: per check)")
    p.add_argument("--large", action="store_true", help="allow degrees above the standard bound")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--json", action="store_true")
    fmt.add_argument("--csv", action="store_true")

    sub.add_parser("checks", help="list registered checks")

    p = sub.add_parser("enumerate", help="combinatorial counters")
    p.add_argument("kind", choices=["qyt", "syt", "boards"])
    p.add_argument("--shape", type=_partition_arg, help="tableau shape (qyt/syt)")
    p.add_argument("--n", type=int, help="all shapes of n (qyt/syt)")
    p.add_argument("--list", action="store_true", help="print the tableaux themselves")
    p.add_argument("--lambda", dest="lam", type=_partition_arg, help="content board of lambda")
    p.add_argument("--hook", type=_ints_arg, metavar="N,ELL", help="hook boards C and D")
    p.add_argument("--heights", type=_ints_arg, help="explicit column heights")
    return ap


def _cmd_expand(args, out) -> int:
    mu = args.mu
    exp = jack.jack_tilde(mu) if args.tilde else jack.jack_J(mu)
    f = exp.as_symfun()
    if args.basis == "qsym":
        q = symfun_to_qsym(f)
        print(json.dumps(q.to_json()) if args.json else q, file=out)
        return EXIT_OK
    f = convert(f, args.basis)
    print(json.dumps(f.to_json()) if args.json else f, file=out)
    return EXIT_OK


def _coeff_row(mu, lam, basis):
    if basis == "a":
        return [rat_to_str(x) for x in jack.a_coeffs(mu, lam)]
    if basis == "b":
        # ordered by k = 1..n, i.e. b_{n-1}, ..., b_0
        return [rat_to_str(x) for x in reversed(jack.b_coeffs(mu, lam))]
    return [str(jack.schur_coeff(mu, lam))]


def _cmd_coeff(args, out) -> int:
    if args.n is not None:
        if args.n < 1:
            raise DomainError("--n must be positive")
        w = csv.writer(out) if args.csv else None
        if w:
            width = 1 if args.basis == "poly" else (args.n + 1 if args.basis == "a" else args.n)
            first = 0 if args.basis == "a" else 1
            # b columns are indexed by the falling-factorial degree k, holding b_{n-k}
            tag = {"a": "a", "b": "ff"}.get(args.basis)
            head = ["poly"] if args.basis == "poly" else [f"{tag}{k}" for k in range(first, first + width)]
            w.writerow(["mu", "lambda", *head])
        for mu in partitions_of(args.n):
            for lam in partitions_of(args.n):
                row = _coeff_row(mu, lam, args.basis)
                mu_s, lam_s = ",".join(map(str, mu)), ",".join(map(str, lam))
                if w:
                    w.writerow([mu_s, lam_s, *row])
                else:
                    print(f"mu={mu_s} lambda={lam_s}: {', '.join(row)}", file=out)
        return EXIT_OK
    if args.mu is None or args.lam is None:
        raise DomainError("coeff needs --mu and --lambda, or --n")
    print(", ".join(_coeff_row(args.mu, args.lam, args.basis)), file=out)
    return EXIT_OK


def _cmd_verify(args, out) -> int:
    ids = list(REGISTRY) if args.check == "all" else [args.check]
    reports = []
    for cid in ids:
        if cid not in REGISTRY:
            raise DomainError(f"unknown check {cid!r}")
        chk = REGISTRY[cid]
        n = args.n if args.n is not None else chk.default_n
        if args.check == "all":
            n = min(n, chk.large_max_n if args.large else chk.max_n)
        reports.append(run_check(cid, n, allow_large=args.large))
    if args.json:
        payload = [r.to_json() for r in reports]
        print(json.dumps(payload[0] if len(payload) == 1 else payload, indent=1), file=out)
    elif args.csv:
        for i, r in enumerate(reports):
            text = r.to_csv()
            out.write(text if i == 0 else text.split("\n", 1)[1])
    else:
        for r in reports:
            print(r.summary(), file=out)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_checks(args, out) -> int:
    for c in REGISTRY.values():
        print(f"{c.check_id:14s} default n={c.default_n} max n={c.max_n} (large {c.large_max_n})  {c.description}", file=out)
    return EXIT_OK


def _print_board(board: FerrersBoard, label: str, out) -> None:
    print(f"{label} heights={list(board.heights)}", file=out)
    print(board, file=out)
    print(f"  rook numbers r_0..r_n: {rook_numbers(board)}", file=out)
    print(f"  hit numbers  h_0..h_n: {hit_numbers(board)}", file=out)


def _cmd_enumerate(args, out) -> int:
    if args.kind == "boards":
        if args.lam:
            _print_board(content_board(args.lam), f"content board of {args.lam}", out)
        elif args.hook:
            if len(args.hook) != 2:
                raise DomainError("--hook takes N,ELL")
            C, D = hook_boards(*args.hook)
            _print_board(C, "C", out)
            _print_board(D, "D", out)
        elif args.heights:
            _print_board(FerrersBoard.of(args.heights), "board", out)
        else:
            raise DomainError("boards needs --lambda, --hook or --heights")
        return EXIT_OK
    if args.shape:
        shapes = [args.shape]
    elif args.n:
        shapes = partitions_of(args.n)
    else:
        raise DomainError(f"{args.kind} needs --shape or --n")
    for shape in shapes:
        if args.kind == "qyt":
            dist = qyt_distribution(shape)
            counts = {m: c for m, c in enumerate(dist) if c}
            print(f"{shape}: QYT by max entry {counts} (conjugate {conjugate(shape)})", file=out)
            tabs = enumerate_qyt(shape) if args.list else []
        else:
            print(f"{shape}: {syt_count(shape)} standard tableaux", file=out)
            tabs = enumerate_syt(shape) if args.list else []
        for t in tabs:
            print(t, file=out)
            print("", file=out)
    return EXIT_OK


_COMMANDS = {
    "expand": _cmd_expand,
    "coeff": _cmd_coeff,
    "verify": _cmd_verify,
    "checks": _cmd_checks,
    "enumerate": _cmd_enumerate,
}


def cli_main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.cache:
        jack.set_cache_dir(args.cache)
    try:
        return _COMMANDS[args.command](args, out)
    except InternalInconsistencyError as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (DomainError, ResourceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.cache:
            jack.set_cache_dir(None)


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
