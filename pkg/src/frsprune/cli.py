"""Command-line entry point: encode, corrupt, decode, experiment, bench."""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from .errors import FrsError
from .experiment import run_bench, run_experiment
from .frs import FrsParams, corrupt, encode, read_word, write_word
from .harness import ALGOS, DecodeOptions, decode_end_to_end
from .poly import Polynomial


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"expected a rational like 1/4, got {text!r}") from exc


def _u64(text: str) -> int:
    v = int(text)
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _rn(n: int, num: int, den: int) -> int:
    if (n * num) % den:
        raise FrsError(f"rate {num}/{den} does not give an integer message length for n={n}")
    return n * num // den


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="frsprune", description="Folded Reed-Solomon list decoding with subspace pruning.")
    sub = p.add_subparsers(dest="command", required=True)

    enc = sub.add_parser("encode", help="encode a message polynomial")
    enc.add_argument("--q", type=int, required=True)
    enc.add_argument("--n", type=int, required=True)
    enc.add_argument("--m", type=int, required=True)
    enc.add_argument("--rate-num", type=int, required=True)
    enc.add_argument("--rate-den", type=int, required=True)
    enc.add_argument("--message", type=Path, required=True, help="coefficients, low degree first")
    enc.add_argument("--out", type=Path, required=True)

    cor = sub.add_parser("corrupt", help="replace exactly --errors folded symbols")
    cor.add_argument("--in", dest="inp", type=Path, required=True)
    cor.add_argument("--errors", type=int, required=True)
    cor.add_argument("--seed", type=_u64, required=True)
    cor.add_argument("--out", type=Path, required=True)

    dec = sub.add_parser("decode", help="list decode a received word")
    dec.add_argument("--in", dest="inp", type=Path, required=True)
    dec.add_argument("--algo", choices=ALGOS, required=True)
    dec.add_argument("--s", type=int)
    dec.add_argument("--eps", type=_fraction)
    dec.add_argument("--beta", type=_fraction, default=Fraction(1, 10))
    dec.add_argument("--seed", type=_u64, default=0)
    dec.add_argument("--oracle", action="store_true")
    dec.add_argument("--rate-num", type=int, help="code rate numerator; word files carry no rate")
    dec.add_argument("--rate-den", type=int, help="code rate denominator")
    dec.add_argument("--timing", action="store_true", help="include wall time in the report")
    dec.add_argument("--out", type=Path, required=True)

    exp = sub.add_parser("experiment", help="run a config-driven experiment grid")
    exp.add_argument("--config", type=Path, required=True)
    exp.add_argument("--out", type=Path, required=True)

    bench = sub.add_parser("bench", help="run a built-in experiment suite")
    bench.add_argument("--suite", choices=("scaling", "success", "listsize"), required=True)
    bench.add_argument("--out", type=Path, required=True)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "encode":
            Rn = _rn(args.n, args.rate_num, args.rate_den)
            params = FrsParams.create(args.q, args.n, args.m, Rn)
            f = Polynomial.from_text(args.message.read_text(), args.q)
            write_word(args.out, encode(params, f))
        elif args.command == "corrupt":
            write_word(args.out, corrupt(read_word(args.inp), args.errors, args.seed))
        elif args.command == "decode":
            if args.rate_num is None or args.rate_den is None:
                raise FrsError("decode needs --rate-num and --rate-den (word files do not record the rate)")
            g = read_word(args.inp)
            n = g.N * g.m
            params = FrsParams.create(g.q, n, g.m, _rn(n, args.rate_num, args.rate_den))
            opts = DecodeOptions(s=args.s, eps=args.eps, beta=args.beta, seed=args.seed, oracle=args.oracle)
            report = decode_end_to_end(params, g, args.algo, opts)
            args.out.write_text(report.to_json(timing=args.timing) + "\n")
        elif args.command == "experiment":
            run_experiment(args.config, args.out)
        elif args.command == "bench":
            run_bench(args.suite, args.out)
    except FrsError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
