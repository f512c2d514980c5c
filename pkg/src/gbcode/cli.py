"""Command-line front end: ``gbcode {gb,verify,encode,decode,distance,simulate}``."""

from __future__ import annotations

import argparse
import sys
import time

from .algebra import LEX, MonomialOrder, buchberger, reduce_basis
from .code import closed_form_basis, format_word, ideal_generators, parse_word, read_matrix
from .decoder import decode
from .errors import DecodeFailure, ResourceLimitError
from .oracle import verify_groebner
from .simulate import simulate

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3


class UsageError(Exception):
    pass


def _basis(code, order, method):
    if method == "closed":
        if order is not LEX:
            raise UsageError("the closed-form basis is only valid for --order lex")
        return closed_form_basis(code)
    return reduce_basis(buchberger(ideal_generators(code), order))


def cmd_gb(args, code, out):
    for line in _basis(code, MonomialOrder(args.order), args.method).render():
        out.append(line)
    return EXIT_OK


def cmd_verify(args, code, out):
    order = MonomialOrder(args.order)
    computed = _basis(code, order, "buchberger")
    ok = verify_groebner(computed)
    if order is LEX:
        closed = closed_form_basis(code)
        same = closed.render() == computed.render()
        ok = ok and same and verify_groebner(closed)
        out.append(f"closed form matches buchberger: {'yes' if same else 'no'}")
    else:
        out.append("closed form matches buchberger: n/a (closed form is lex only)")
    out.append(f"buchberger criterion: {'pass' if ok else 'fail'}")
    return EXIT_OK if ok else EXIT_FAILURE


def cmd_encode(args, code, out):
    if args.message is None:
        raise UsageError("encode needs --message")
    out.append(format_word(code.encode(parse_word(args.message, code.k))))
    return EXIT_OK


def cmd_decode(args, code, out):
    if args.word is None:
        raise UsageError("decode needs --word")
    u = parse_word(args.word, code.n)
    try:
        result = decode(u, code, args.t)
    except DecodeFailure as exc:
        out.append(f"decode failure: {exc}")
        return EXIT_FAILURE
    out.append(f"codeword={format_word(result.codeword)}")
    out.append(f"message={format_word(result.message)}")
    out.append(f"error={format_word(result.error)}")
    out.append(f"path={result.path}")
    if result.search_v is not None:
        out.append(f"v={format_word(result.search_v)}")
    return EXIT_OK


def cmd_distance(args, code, out):
    out.append(f"d={code.d} t={code.t}")
    return EXIT_OK


def cmd_simulate(args, code, out):
    if args.trials < 0 or args.errors < 0 or args.workers < 1:
        raise UsageError("--trials and --errors must be >= 0, --workers >= 1")
    if args.errors > code.n:
        raise UsageError(f"--errors must not exceed n = {code.n}")
    res = simulate(code, args.trials, args.errors, args.seed, args.t, args.workers)
    out.append(
        f"trials={res.trials} errors={args.errors} successes={res.successes} "
        f"failures={res.failures} miscorrections={res.miscorrections} rate={res.rate:.3f}"
    )
    return EXIT_OK


COMMANDS = {
    "gb": cmd_gb,
    "verify": cmd_verify,
    "encode": cmd_encode,
    "decode": cmd_decode,
    "distance": cmd_distance,
    "simulate": cmd_simulate,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--matrix", required=True, help="generator matrix file")
    common.add_argument("--word", help="received word, n bits")
    common.add_argument("--message", help="message, k bits")
    common.add_argument("--order", choices=["lex", "grlex"], default="lex")
    common.add_argument("--method", choices=["closed", "buchberger"], default="closed")
    common.add_argument("--t", type=int, default=None, help="override the error-correcting radius")
    common.add_argument("--trials", type=int, default=1000)
    common.add_argument("--errors", type=int, default=1)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--workers", type=int, default=1)
    common.add_argument("--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="gbcode", description="Groebner-basis encoding and decoding of binary linear codes."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.t is not None and args.t < 0:
        print("error: --t must be nonnegative", file=stderr)
        return EXIT_USAGE

    start = time.perf_counter()
    out: list[str] = []
    try:
        code = read_matrix(args.matrix)
        status = COMMANDS[args.command](args, code, out)
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_RESOURCE
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_USAGE
    if args.verbose:
        out.append(f"elapsed={time.perf_counter() - start:.6f}s")
    stdout.write("".join(line + "\n" for line in out))
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
