import argparse
import json
import logging
import os
import sys
from pathlib import Path
from typing import List, Optional

from hyperfactor.core.errors import (
    DisconnectedError,
    FormatError,
    HypergraphError,
    OracleCapExceeded,
    SamplingBudgetExceeded,
    ValidationError,
)
from hyperfactor.core.fileformat import parse, serialize, to_dict
from hyperfactor.core.hypergraph import product_of, two_section
from hyperfactor.core.pipeline import Factorizer
from hyperfactor.core.types import (
    DirectedHypergraph,
    FactorizationConfig,
    GeneratorConfig,
    HypergraphFactorization,
)
from hyperfactor.oracle.brute_force import HYPERGRAPH_CAP, brute_force_pfd_hypergraph, same_factor_multiset
from hyperfactor.oracle.generators import random_prime_hypergraph, random_product

SEED_ENV = "HYPERFACTOR_SEED"

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CONSISTENCY = 3


class CommandFailed(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def read_hypergraph(source: str) -> DirectedHypergraph:
    """Parses a HypergraphFile from a path, or from standard input for '-'."""
    try:
        text = sys.stdin.read() if source == "-" else Path(source).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as e:
        raise CommandFailed(f"Error reading {'stdin' if source == '-' else 'file'}: {e}", EXIT_INPUT) from e
    return parse(text)


def env_seed(default: int) -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError as e:
        raise CommandFailed(f"{SEED_ENV} must be an integer, got {raw!r}", EXIT_INPUT) from e


def check_against_oracle(h: DirectedHypergraph, result: HypergraphFactorization) -> bool:
    """False on disagreement; inputs beyond the oracle's reach count as agreeing."""
    if h.n > HYPERGRAPH_CAP:
        return True
    return same_factor_multiset(result.factors, brute_force_pfd_hypergraph(h))


def render_factorization(h: DirectedHypergraph, result: HypergraphFactorization) -> str:
    blocks = []
    for s, (factor, members) in enumerate(zip(result.factors, result.partition), start=1):
        header = f"# factor {s}: n={factor.n} m={factor.m} coordinates={','.join(map(str, members))}\n"
        blocks.append(header + serialize(factor))
    blocks.append(f"# input: {len(result.factors)} prime factor(s)\n" + serialize(h, result.coordinates))
    return "\n".join(blocks)


def render_json(h: DirectedHypergraph, result: HypergraphFactorization) -> str:
    data = {
        "factors": [
            {"index": s, "coordinates": list(members), **to_dict(factor)}
            for s, (factor, members) in enumerate(zip(result.factors, result.partition), start=1)
        ],
        "input": to_dict(h, result.coordinates),
    }
    return json.dumps(data, ensure_ascii=False, indent=2)


def command_factor(args) -> int:
    h = read_hypergraph(args.input)
    result = Factorizer(FactorizationConfig(workers=args.workers)).factorize(h)
    if args.verify and not check_against_oracle(h, result):
        raise CommandFailed("factorization disagrees with the brute-force oracle", EXIT_CONSISTENCY)
    if args.json:
        print(render_json(h, result))
    else:
        print(render_factorization(h, result), end="")
    return EXIT_OK


def command_product(args) -> int:
    if len(args.inputs) < 2:
        raise CommandFailed("product needs at least two hypergraphs", EXIT_INPUT)
    print(serialize(product_of(*(read_hypergraph(f) for f in args.inputs))), end="")
    return EXIT_OK


def command_section(args) -> int:
    h = read_hypergraph(args.input)
    names = h.names
    lines = sorted(tuple(sorted((names[u], names[v]))) for u, v in two_section(h).edges())
    for u, v in lines:
        print(f"{u} {v}")
    return EXIT_OK


def command_verify(args) -> int:
    h = read_hypergraph(args.input)
    result = Factorizer(FactorizationConfig(verify_soundness=True, debug_checks=True)).factorize(h)
    oracle = "skipped" if h.n > HYPERGRAPH_CAP else "agrees"
    if not check_against_oracle(h, result):
        raise CommandFailed("factorization disagrees with the brute-force oracle", EXIT_CONSISTENCY)
    print(f"ok: n={h.n} m={h.m} r={h.rank} factors={len(result.factors)} "
          f"sizes={list(result.coordinates.factor_sizes)} oracle={oracle}")
    return EXIT_OK


def command_gen(args) -> int:
    try:
        cfg = GeneratorConfig(
            seed=env_seed(args.seed),
            n=args.n,
            r=args.r,
            arc_density=args.density,
            directed_fraction=args.directed_fraction,
        )
    except ValueError as e:
        raise CommandFailed(str(e), EXIT_INPUT) from e

    try:
        if args.factors == 1:
            h = random_prime_hypergraph(cfg)
        else:
            h, _ = random_product(cfg, args.factors)
    except (OracleCapExceeded, SamplingBudgetExceeded, ValueError) as e:
        raise CommandFailed(str(e), EXIT_INPUT) from e
    print(serialize(h), end="")
    return EXIT_OK


def command_bench(args) -> int:
    from hyperfactor.bench import run_bench

    return run_bench(args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hyperfactor",
        description="🧩 hyperfactor: Cartesian prime factorization of directed hypergraphs",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging on stderr")
    subparsers = parser.add_subparsers(dest="command", required=True)

    factor_p = subparsers.add_parser("factor", help="Print the prime factors and the coordinate table")
    factor_p.add_argument("input", help="HypergraphFile path, or - for stdin")
    factor_p.add_argument("--json", action="store_true", help="Emit JSON instead of HypergraphFile blocks")
    factor_p.add_argument("--verify", action="store_true", help="Compare with the brute-force oracle (n <= 8)")
    factor_p.add_argument("--workers", type=int, default=1, help="Threads for the increment checks")
    factor_p.set_defaults(handler=command_factor)

    product_p = subparsers.add_parser("product", help="Cartesian product of the given hypergraphs")
    product_p.add_argument("inputs", nargs="+", help="Two or more HypergraphFile paths (- for stdin)")
    product_p.set_defaults(handler=command_product)

    section_p = subparsers.add_parser("section", help="Edges of the 2-section, one 'u v' per line")
    section_p.add_argument("input")
    section_p.set_defaults(handler=command_section)

    verify_p = subparsers.add_parser("verify", help="Factor with every check enabled and print a verdict")
    verify_p.add_argument("input")
    verify_p.set_defaults(handler=command_verify)

    gen_p = subparsers.add_parser("gen", help="Random prime or product hypergraph")
    gen_p.add_argument("--seed", type=int, default=0)
    gen_p.add_argument("--n", type=int, default=6, help="Vertices of a prime; largest factor size of a product")
    gen_p.add_argument("--r", type=int, default=3, help="Maximum arc size")
    gen_p.add_argument("--factors", type=int, default=1, choices=[1, 2, 3])
    gen_p.add_argument("--density", type=float, default=1.5, help="Arcs per vertex")
    gen_p.add_argument("--directed-fraction", type=float, default=0.5)
    gen_p.set_defaults(handler=command_gen)

    bench_p = subparsers.add_parser("bench", help="Timing series of factorizations")
    bench_p.add_argument("--series", choices=["doubling", "rank"], default="doubling")
    bench_p.add_argument("--repeats", type=int, default=3)
    bench_p.add_argument("--min-n", type=int, default=2 ** 8)
    bench_p.add_argument("--max-n", type=int, default=2 ** 13)
    bench_p.add_argument("--rank", type=int, default=3)
    bench_p.add_argument("--seed", type=int, default=0)
    bench_p.add_argument("--assert-budget", type=float, metavar="SECONDS",
                         help="Fail when the n=4096 row takes longer than SECONDS")
    bench_p.set_defaults(handler=command_bench)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        logging.basicConfig(level=logging.DEBUG, stream=sys.stderr, format="%(name)s: %(message)s")

    try:
        return args.handler(args)
    except CommandFailed as e:
        print(f"❌ {e}", file=sys.stderr)
        return e.code
    except FormatError as e:
        for line, message in e.diagnostics:
            print(f"❌ line {line}: {message}", file=sys.stderr)
        return EXIT_INPUT
    except (ValidationError, DisconnectedError) as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_INPUT
    except HypergraphError as e:
        print(f"❌ Internal consistency failure: {e}", file=sys.stderr)
        return EXIT_CONSISTENCY


if __name__ == "__main__":
    sys.exit(main())
