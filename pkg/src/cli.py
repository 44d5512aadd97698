"""
Command-line interface: gen, divide, check, oracle, bench and render.

Exit codes: 0 success, 1 verdict false under ``check --expect``, 2 usage,
parse or schema error, 3 resource error (search node limit).
"""
import argparse
import sys
from typing import Dict, List, Optional

from .allocation import validate_partition
from .bench import parse_config, run_bench
from .config import configure_logging, load_environment
from .errors import FamCakeError, SearchLimitError
from .fairness import Criterion, evaluate
from .instance import gen_preset, gen_random
from .loader import FixtureLoader
from .oracle import min_components, positivity_min_components
from .protocols import ProtocolFactory
from .visualization import FORMATS, Visualizer

EXIT_OK = 0
EXIT_VERDICT_FALSE = 1
EXIT_USAGE = 2
EXIT_RESOURCE = 3

DEFAULT_BENCH_CONFIG = "configs/comparison.yaml"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="famcake", description="Fair division of a cake among families.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="generate an instance")
    source = gen.add_mutually_exclusive_group(required=True)
    source.add_argument("--preset", help="section2 (land), nonadditive, thm2 (weighted-gap) or lemma5 (interleaved)")
    source.add_argument("--random", action="store_true", help="seeded random instance")
    gen.add_argument("--k", type=int, help="number of families")
    gen.add_argument("--m", type=int, help="members per family (interleaved)")
    gen.add_argument("--sizes", help="comma-separated family sizes for --random, e.g. 3,3")
    gen.add_argument("--max-breakpoints", type=int, default=3)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--weights", choices=("equal", "random"), default="equal")
    gen.add_argument("--out", default="-")

    divide = commands.add_parser("divide", help="run a division protocol")
    divide.add_argument("--criterion", required=True, help="avg, unan or dem")
    divide.add_argument("--method", help="protocol method (default depends on the criterion)")
    divide.add_argument("--compact", action="store_true", help="alternating exact layout")
    divide.add_argument("--in", dest="inp", required=True)
    divide.add_argument("--out", default="-")

    check = commands.add_parser("check", help="evaluate an allocation")
    check.add_argument("--in", dest="inp", required=True)
    check.add_argument("--alloc", required=True)
    check.add_argument("--expect", help="exit 1 unless this criterion holds")
    check.add_argument("--out", default="-")

    oracle = commands.add_parser("oracle", help="minimum component count by exhaustive search")
    oracle.add_argument("--criterion", required=True, help="avg, unan, dem or pos")
    oracle.add_argument("--max-comp", type=int, required=True)
    oracle.add_argument("--q", type=int, help="positive members per family (pos only)")
    oracle.add_argument("--limit", type=int, help="node cap (default FAMCAKE_SEARCH_LIMIT)")
    oracle.add_argument("--in", dest="inp", required=True)
    oracle.add_argument("--out", default="-")

    bench = commands.add_parser("bench", help="run the comparison benchmark")
    bench.add_argument("--trials", type=int)
    bench.add_argument("--seed", type=int)
    bench.add_argument("--config", default=DEFAULT_BENCH_CONFIG)
    bench.add_argument("--report", default="-")
    bench.add_argument("--workers", type=int, default=1)
    bench.add_argument("--timings", action="store_true", help="record wall times per trial")

    render = commands.add_parser("render", help="render an allocation")
    render.add_argument("--in", dest="inp", required=True)
    render.add_argument("--alloc", required=True)
    render.add_argument("--format", choices=FORMATS, default="text")
    render.add_argument("--out", default="-")
    return parser


def _emit(text: str, out: str) -> None:
    if out and out != "-":
        with open(out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _gen(args: argparse.Namespace, loader: FixtureLoader) -> int:
    if args.preset:
        params: Dict[str, int] = {}
        if args.k is not None:
            params["k"] = args.k
        if args.m is not None:
            params["m"] = args.m
        inst = gen_preset(args.preset, params)
    else:
        if args.sizes:
            sizes = [int(size) for size in args.sizes.split(",")]
        else:
            sizes = [1] * (args.k or 2)
        k = args.k if args.k is not None else len(sizes)
        weights = None if args.weights == "equal" else "random"
        inst = gen_random(k, sizes, args.max_breakpoints, args.seed, weights)
    _emit(loader.dumps(inst.to_dict()), args.out)
    return EXIT_OK


def _divide(args: argparse.Namespace, loader: FixtureLoader) -> int:
    inst = loader.load_instance(args.inp)
    result = ProtocolFactory().divide(inst, args.criterion, args.method, args.compact)
    _emit(loader.dumps(result.to_dict()), args.out)
    return EXIT_OK


def _check(args: argparse.Namespace, loader: FixtureLoader) -> int:
    inst = loader.load_instance(args.inp)
    allocation = loader.load_allocation(args.alloc)
    partition = validate_partition(allocation)
    report = evaluate(inst, allocation)
    document = {"partition": partition.describe(), "comp": allocation.comp(), **report.to_dict()}
    _emit(loader.dumps(document), args.out)
    if args.expect:
        criterion = Criterion.parse(args.expect)
        if not partition.valid or not report.holds(criterion):
            return EXIT_VERDICT_FALSE
    return EXIT_OK


def _oracle(args: argparse.Namespace, loader: FixtureLoader) -> int:
    inst = loader.load_instance(args.inp)
    criterion = Criterion.parse(args.criterion)
    if criterion is Criterion.POSITIVITY:
        if args.q is None:
            raise ValueError("--q is required for the positivity criterion")
        result = positivity_min_components(inst, args.q, args.max_comp, args.limit)
    else:
        result = min_components(inst, criterion, args.max_comp, args.limit)
    _emit(loader.dumps(result.to_dict()), args.out)
    return EXIT_OK


def _bench(args: argparse.Namespace, loader: FixtureLoader) -> int:
    specs = parse_config(loader.load_config(args.config), args.trials, args.seed, args.timings)
    report = run_bench(specs, args.workers)
    _emit(loader.dumps(report.to_dict()), args.report)
    return EXIT_OK


def _render(args: argparse.Namespace, loader: FixtureLoader) -> int:
    inst = loader.load_instance(args.inp)
    allocation = loader.load_allocation(args.alloc)
    _emit(Visualizer().render(inst, allocation, args.format), args.out)
    return EXIT_OK


HANDLERS = {
    "gen": _gen,
    "divide": _divide,
    "check": _check,
    "oracle": _oracle,
    "bench": _bench,
    "render": _render,
}


def run(argv: Optional[List[str]] = None) -> int:
    """Run the CLI and return its exit code."""
    load_environment()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        configure_logging(args.verbose)
        return HANDLERS[args.command](args, FixtureLoader())
    except SearchLimitError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_RESOURCE
    except (FamCakeError, FileNotFoundError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
