"""Main entry point for the induced-paths command line."""

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from contextlib import contextmanager
from typing import Iterator, List, Optional, Sequence, TextIO, Tuple

from pydantic import ValidationError

from . import __version__
from .bench import format_csv, run_bench
from .exceptions import (
    GuardExceededError,
    InducedPathsError,
    InternalConsistencyError,
    PipelineError,
)
from .formats import format_edgelist, read_graph, read_pair
from .generators import gen_clique_superimposed, generate, make_rng
from .oracle import (
    check_thm3_conditions_exact,
    check_thm3_conditions_sampled,
    contradiction_witness,
    longest_induced_path_exact,
)
from .ramsey import run_ramsey_pipeline
from .search import run, run_with_invariant_checks, verify_induced_path
from .spectral import certify_thm1, certify_thm2, compute_lambda
from .types import (
    AlgParams,
    BenchOptions,
    ColoringStrategy,
    GenSpec,
    GraphModel,
    RamseyParams,
    RamseyReport,
    RunReport,
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

_NAMED_MODELS = [m.value for m in GraphModel if m is not GraphModel.CLIQUE_SUPERIMPOSED]


@contextmanager
def _reader(path: str) -> Iterator[TextIO]:
    if path == "-":
        yield sys.stdin
    else:
        with open(path, encoding="utf-8") as handle:
            yield handle


def _emit(path: str, text: str) -> None:
    if path == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text)


def _int_pair(text: str) -> Tuple[int, int]:
    try:
        first, second = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'a,b', got {text!r}") from None
    return first, second


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        message = f"expected comma-separated integers, got {text!r}"
        raise argparse.ArgumentTypeError(message) from None


def _seed_range(text: str) -> List[int]:
    try:
        if ".." in text:
            lo, hi = (int(part) for part in text.split(".."))
            return list(range(lo, hi + 1))
        return [int(text)]
    except ValueError:
        message = f"expected 'a..b' or a single seed, got {text!r}"
        raise argparse.ArgumentTypeError(message) from None


def cmd_gen(args: argparse.Namespace) -> int:
    spec = GenSpec(model=GraphModel(args.model), n=args.n, d=args.d, p=args.p, seed=args.seed)
    if args.with_cliques is None:
        _emit(args.output, format_edgelist(generate(spec)))
        return EXIT_OK
    count, size = args.with_cliques
    instance = gen_clique_superimposed(spec, count, size, args.seed)
    _emit(args.output, format_edgelist(instance.graph))
    sidecar = {"cliqueCount": count, "cliqueSize": size, "cliques": instance.cliques}
    _emit(args.cliques_out, json.dumps(sidecar) + "\n")
    return EXIT_OK


def cmd_find(args: argparse.Namespace) -> int:
    with _reader(args.input) as handle:
        pair = read_pair(handle, args.format)
    order = None
    if args.sigma_seed is not None:
        order = [int(v) for v in make_rng(args.sigma_seed).permutation(pair.n)]
    params = AlgParams(
        order=order,
        target_len=args.target,
        s1_cap=args.s1_cap,
        s2_cap=args.s2_cap,
        record_trace=args.trace,
        count_path_members_in_n1=args.count_predecessor,
        sigma_seed=args.sigma_seed,
    )
    result = run_with_invariant_checks(pair, params) if args.checked else run(pair, params)
    if args.verify_echo and not verify_induced_path(pair, result.best_path):
        raise InternalConsistencyError(f"returned path {result.best_path} failed re-verification")

    report = RunReport(
        n=pair.n,
        m_g=pair.g.m,
        m_g_prime=pair.g_prime.m,
        d_min=pair.d_min,
        sigma_seed=args.sigma_seed,
        target_len=args.target,
        best_len=result.best_len,
        best_path=result.best_path,
        rounds=result.rounds,
        stop_reason=result.stop_reason,
        s1_size=result.s1_size,
        s2_size=result.s2_size,
        work_counter=result.work_counter,
        trace=result.trace,
    )
    lines = [report.to_json()]
    if args.witness:
        lines.append(" ".join(str(v) for v in result.best_path))
    if args.proof_witness:
        witness = contradiction_witness(pair, params, result)
        lines.append(witness.to_json() if witness else "null")
    _emit(args.output, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    with _reader(args.input) as handle:
        pair = read_pair(handle, args.format)
    path = [int(v) for v in args.path.split()]
    valid = verify_induced_path(pair, path)
    _emit(args.output, json.dumps({"valid": valid, "length": max(len(path) - 1, 0)}) + "\n")
    return EXIT_OK if valid else EXIT_FAILURE


def cmd_spectral(args: argparse.Namespace) -> int:
    with _reader(args.input) as handle:
        g = read_graph(handle)
    _emit(args.output, compute_lambda(g, dense_limit=args.dense_limit).to_json() + "\n")
    return EXIT_OK


def cmd_certify(args: argparse.Namespace) -> int:
    if args.theorem == "thm1":
        if args.graph is not None:
            with _reader(args.graph) as handle:
                g = read_graph(handle)
            spectrum = compute_lambda(g)
            n, d, lam = g.n, spectrum.d, spectrum.lam
        elif None in (args.n, args.d, args.lam):
            raise ValueError("thm1 needs either --graph or all of --n, --d, --lambda")
        else:
            n, d, lam = args.n, args.d, args.lam
        certificate = certify_thm1(n, d, lam, gamma_bound=args.gamma_bound)
    else:
        if args.graph is None:
            raise ValueError("thm2 needs --graph")
        with _reader(args.graph) as handle:
            g = read_graph(handle)
        d = args.d if args.d is not None else g.min_degree()
        certificate = certify_thm2(g.n, d, args.C, g, args.samples, seed=args.seed)
    _emit(args.output, certificate.to_json() + "\n")
    return EXIT_OK


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.query == "longest":
        with _reader(args.input) as handle:
            g = read_graph(handle)
        length, path = longest_induced_path_exact(g, max_n=args.max_n)
        _emit(args.output, json.dumps({"length": length, "path": path}) + "\n")
        return EXIT_OK
    with _reader(args.input) as handle:
        pair = read_pair(handle, args.format)
    if args.samples is not None:
        report = check_thm3_conditions_sampled(
            pair, args.ell, args.s1, args.s2, args.samples, seed=args.seed
        )
    else:
        report = check_thm3_conditions_exact(pair, args.ell, args.s1, args.s2, guard=args.guard)
    _emit(args.output, report.to_json() + "\n")
    return EXIT_OK


def ramsey_seed(params: RamseyParams, strategy: ColoringStrategy, seed: int) -> RamseyReport:
    """One pipeline run; an empty survivor set comes back as a report with ``failure`` set."""
    try:
        return run_ramsey_pipeline(params, strategy, seed)
    except PipelineError as exc:
        if isinstance(exc.report, RamseyReport):
            return exc.report
        raise


def cmd_ramsey(args: argparse.Namespace) -> int:
    params = RamseyParams(n=args.n, k=args.k, c=args.c, edge_probability=args.p)
    strategy = ColoringStrategy(args.strategy)
    seeds = args.seeds
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(
                pool.map(ramsey_seed, [params] * len(seeds), [strategy] * len(seeds), seeds)
            )
    else:
        reports = [ramsey_seed(params, strategy, seed) for seed in seeds]
    _emit(args.output, "".join(report.to_json() + "\n" for report in reports))
    failed = [r.seed for r in reports if r.failure is not None]
    if failed:
        logger.error("pipeline failed for seed(s) %s", failed)
        return EXIT_FAILURE
    return EXIT_OK


def cmd_bench(args: argparse.Namespace) -> int:
    options = BenchOptions(
        model=GraphModel(args.model),
        d=args.d,
        p_scale=args.p_scale,
        sizes=args.sizes,
        repeats=args.repeats,
        seed=args.seed,
        jobs=args.jobs,
    )
    _emit(args.output, format_csv(run_bench(options)))
    return EXIT_OK


def _add_output(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "-o", "--output", default="-", help="Output path (default: '-' for stdout)"
    )


def _add_pair_input(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("input", nargs="?", default="-", help="Graph or pair file ('-' = stdin)")
    parser.add_argument(
        "--format",
        choices=["edgelist", "pair"],
        default=None,
        help="Input format (default: detect the '---' separator)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="induced-paths",
        description="Long induced paths: modified DFS, certificates, oracles and experiments",
    )
    parser.add_argument(
        "-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging"
    )
    parser.add_argument("--version", action="version", version=f"induced-paths {__version__}")
    verbs = parser.add_subparsers(dest="verb", required=True)

    gen = verbs.add_parser("gen", help="Generate a graph as an edge list")
    gen.add_argument("--model", choices=_NAMED_MODELS, required=True, help="Graph family")
    gen.add_argument("--n", type=int, default=10, help="Vertex count (default: 10)")
    gen.add_argument("--d", type=int, default=None, help="Degree for RandomRegular")
    gen.add_argument("--p", type=float, default=None, help="Edge probability for Gnp")
    gen.add_argument("--seed", type=int, default=0, help="PRNG seed (default: 0)")
    gen.add_argument(
        "--with-cliques",
        type=_int_pair,
        default=None,
        metavar="COUNT,SIZE",
        help="Superimpose COUNT disjoint cliques of SIZE vertices",
    )
    gen.add_argument(
        "--cliques-out",
        default="cliques.json",
        help="Clique partition sidecar path (default: cliques.json)",
    )
    _add_output(gen)
    gen.set_defaults(handler=cmd_gen)

    find = verbs.add_parser("find", help="Search for a path in G' that is induced in G")
    _add_pair_input(find)
    find.add_argument("--sigma-seed", type=int, default=None, help="Shuffle the vertex order")
    find.add_argument("--target", type=int, default=None, help="Stop at this many edges")
    find.add_argument("--s1-cap", type=int, default=None, help="Abort when |S1| reaches this")
    find.add_argument("--s2-cap", type=int, default=None, help="Abort when |S2| reaches this")
    find.add_argument("--checked", action="store_true", help="Re-check invariants every round")
    find.add_argument("--trace", action="store_true", help="Include the per-round trace")
    find.add_argument("--witness", action="store_true", help="Also print the path as a line")
    find.add_argument(
        "--verify-echo", action="store_true", help="Re-verify the path before printing"
    )
    find.add_argument(
        "--count-predecessor",
        action="store_true",
        help="Count the path predecessor in the step-2 counter",
    )
    find.add_argument(
        "--proof-witness",
        action="store_true",
        help="After a cap stop, print the set pair violating a path-theorem condition",
    )
    _add_output(find)
    find.set_defaults(handler=cmd_find)

    verify = verbs.add_parser("verify", help="Check a vertex sequence is an induced path")
    _add_pair_input(verify)
    verify.add_argument("--path", required=True, help="Whitespace-separated vertices")
    _add_output(verify)
    verify.set_defaults(handler=cmd_verify)

    spectral = verbs.add_parser("spectral", help="Adjacency spectrum of a regular graph")
    spectral.add_argument("input", nargs="?", default="-", help="Edge-list file ('-' = stdin)")
    spectral.add_argument("--dense-limit", type=int, default=4096, help="Dense solver up to n")
    _add_output(spectral)
    spectral.set_defaults(handler=cmd_spectral)

    certify = verbs.add_parser("certify", help="Certificate arithmetic for the expander theorems")
    certify.add_argument("theorem", choices=["thm1", "thm2"])
    certify.add_argument("--graph", default=None, help="Edge-list file to measure")
    certify.add_argument("--n", type=int, default=None)
    certify.add_argument("--d", type=int, default=None)
    certify.add_argument("--lambda", dest="lam", type=float, default=None)
    certify.add_argument(
        "--gamma-bound",
        choices=["proof", "hypothesis"],
        default="proof",
        help="Bound used for |Gamma(X)| in the second condition (thm1)",
    )
    certify.add_argument("--C", type=float, default=100.0, help="Uniformity constant (thm2)")
    certify.add_argument("--samples", type=int, default=64, help="Sampled sets (thm2)")
    certify.add_argument("--seed", type=int, default=0)
    _add_output(certify)
    certify.set_defaults(handler=cmd_certify)

    oracle = verbs.add_parser("oracle", help="Exhaustive ground truth on small graphs")
    oracle.add_argument("query", choices=["longest", "conditions"])
    _add_pair_input(oracle)
    oracle.add_argument("--max-n", type=int, default=24, help="Size guard for 'longest'")
    oracle.add_argument("--ell", type=int, default=1)
    oracle.add_argument("--s1", type=int, default=1)
    oracle.add_argument("--s2", type=int, default=1)
    oracle.add_argument("--guard", type=int, default=10**8, help="Set-pair guard for 'conditions'")
    oracle.add_argument(
        "--samples", type=int, default=None, help="Use the sampled checker with this many sets"
    )
    oracle.add_argument("--seed", type=int, default=0)
    _add_output(oracle)
    oracle.set_defaults(handler=cmd_oracle)

    ramsey = verbs.add_parser("ramsey", help="Monochromatic induced paths in coloured G(nk, p)")
    ramsey.add_argument("--n", type=int, required=True)
    ramsey.add_argument("--k", type=int, required=True)
    ramsey.add_argument("--c", type=float, required=True)
    ramsey.add_argument("--p", type=float, default=None, help="Override the edge probability")
    ramsey.add_argument(
        "--strategy",
        choices=[s.value for s in ColoringStrategy],
        default=ColoringStrategy.UNIFORM_RANDOM.value,
    )
    ramsey.add_argument("--seeds", type=_seed_range, default=[0], help="'a..b' or one seed")
    ramsey.add_argument("--jobs", type=int, default=1, help="Worker processes")
    _add_output(ramsey)
    ramsey.set_defaults(handler=cmd_ramsey)

    bench = verbs.add_parser("bench", help="Benchmark the search; CSV output")
    bench.add_argument(
        "--model",
        choices=[GraphModel.RANDOM_REGULAR.value, GraphModel.GNP.value],
        default=GraphModel.RANDOM_REGULAR.value,
    )
    bench.add_argument("--d", type=int, default=10, help="Degree for RandomRegular")
    bench.add_argument("--p-scale", type=float, default=20.0, help="Gnp uses p = P_SCALE / n")
    bench.add_argument("--sizes", type=_int_list, required=True, help="Comma-separated sizes")
    bench.add_argument("--repeats", type=int, default=3)
    bench.add_argument("--seed", type=int, default=0)
    bench.add_argument("--jobs", type=int, default=1, help="Worker processes")
    _add_output(bench)
    bench.set_defaults(handler=cmd_bench)
    return parser


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Main entry point for induced-paths."""
    parser = build_parser()
    args = parser.parse_args(argv)
    configure_logging(args.verbose)

    try:
        code: int = args.handler(args)
        return code
    except KeyboardInterrupt:
        print("\nInterrupted.", file=sys.stderr)
        return EXIT_FAILURE
    except GuardExceededError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILURE
    except (ValidationError, ValueError, OSError) as e:
        print(f"Invalid input: {e}", file=sys.stderr)
        return EXIT_USAGE
    except InducedPathsError as e:
        print(f"Error: {e}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
