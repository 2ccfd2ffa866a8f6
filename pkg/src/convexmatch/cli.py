"""Command-line front end.

    convexmatch solve [--weighted | --unweighted] [--colorings] GRAPH
    convexmatch cover GRAPH
    convexmatch certify GRAPH MATCHING COVER
    convexmatch gen --n-u N --n-v N [--model M] [--weights LO HI] [--seed S]
    convexmatch bench --sizes 10000,100000 [--models M,...] [--repetitions R]

Exit status: 0 on success (certify: certificate valid), 1 when certify
rejects, 2 on unreadable or malformed input, 3 if a produced cover fails its
own certificate check.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import bench, formats
from .certify import check_certificate
from .chain_cover import minimum_chain_cover
from .generate import MODELS, GenSpec, generate, generate_weighted
from .unweighted import max_cardinality_induced_matching
from .weighted import max_weight_induced_matching


class CommandError(Exception):
    def __init__(self, message: str, status: int = 2):
        super().__init__(message)
        self.status = status


def _read(path: str) -> str:
    try:
        return sys.stdin.read() if path == "-" else Path(path).read_text()
    except OSError as exc:
        raise CommandError(f"{path}: {exc.strerror}") from None


def _parse(parser, path: str):
    try:
        return parser(_read(path))
    except formats.ParseError as exc:
        raise CommandError(f"{path}: {exc}") from None


def cmd_solve(text: str, weighted: bool = False, colorings: bool = False) -> str:
    if weighted:
        wg = formats.parse_weighted_graph(text)
        result = max_weight_induced_matching(wg)
        return formats.format_weighted_result(result.total, result.edges)
    g = formats.parse_graph(text)
    result = max_cardinality_induced_matching(g)
    return formats.format_cardinality_result(result.size, result.matching, result.colorings if colorings else None)


def cmd_cover(text: str) -> str:
    g = formats.parse_graph(text)
    result = max_cardinality_induced_matching(g)
    cover = minimum_chain_cover(g, result.colorings)
    verdict = check_certificate(g, result.matching, cover)
    if not verdict.valid:
        raise CommandError(f"internal error: produced cover fails certification: {verdict.reason}", status=3)
    return formats.format_cover(cover)


def cmd_certify(graph_text: str, matching_text: str, cover_text: str):
    g = formats.parse_graph(graph_text)
    matching = formats.parse_matching(matching_text)
    cover = formats.parse_cover(cover_text)
    return check_certificate(g, matching, cover)


def cmd_gen(spec: GenSpec) -> str:
    if spec.weight_range is None:
        return formats.format_graph(generate(spec))
    return formats.format_weighted_graph(generate_weighted(spec))


def cmd_bench(sizes: Sequence[int], models: Sequence[str], repetitions: int, seed: int = 0, algorithms=None) -> str:
    rows = bench.run(sizes, models, repetitions, algorithms or bench.ALGORITHMS, seed=seed)
    return bench.to_csv(rows)


def _int_list(text: str) -> list[int]:
    if not text.strip():
        return []
    try:
        return [int(float(x)) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _str_list(text: str) -> list[str]:
    return [x.strip() for x in text.split(",") if x.strip()]


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convexmatch", description="Induced matchings and chain covers on convex bipartite graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="maximum induced matching")
    mode = s.add_mutually_exclusive_group()
    mode.add_argument("--weighted", action="store_true", help="maximise total edge weight")
    mode.add_argument("--unweighted", action="store_true", help="maximise edge count (default)")
    s.add_argument("--colorings", action="store_true", help="append the compressed DP rows (unweighted only)")
    s.add_argument("graph")
    s.add_argument("--out", help="write to this file instead of standard output")

    c = sub.add_parser("cover", help="minimum chain cover, self-certified")
    c.add_argument("graph")
    c.add_argument("--out")

    v = sub.add_parser("certify", help="check a matching/cover optimality certificate")
    v.add_argument("graph")
    v.add_argument("matching")
    v.add_argument("cover")

    g = sub.add_parser("gen", help="generate a random instance")
    g.add_argument("--n-u", type=int, required=True)
    g.add_argument("--n-v", type=int, required=True)
    g.add_argument("--model", choices=MODELS, default="uniform-intervals")
    g.add_argument("--weights", type=int, nargs=2, metavar=("LO", "HI"))
    g.add_argument("--length", type=int, help="interval length for the fixed-length model")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")

    b = sub.add_parser("bench", help="time the solvers, CSV output")
    b.add_argument("--sizes", type=_int_list, default=[], help="comma-separated n values (n_u = n_v = n)")
    b.add_argument("--models", type=_str_list, default=["uniform-intervals"])
    b.add_argument("--algorithms", type=_str_list, default=list(bench.ALGORITHMS))
    b.add_argument("--repetitions", type=int, default=3)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--out")
    return p


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "solve":
            if args.colorings and args.weighted:
                raise CommandError("--colorings applies to the unweighted solver only")
            text = _read(args.graph)
            try:
                _emit(cmd_solve(text, weighted=args.weighted, colorings=args.colorings), args.out)
            except formats.ParseError as exc:
                raise CommandError(f"{args.graph}: {exc}") from None
        elif args.command == "cover":
            text = _read(args.graph)
            try:
                _emit(cmd_cover(text), args.out)
            except formats.ParseError as exc:
                raise CommandError(f"{args.graph}: {exc}") from None
        elif args.command == "certify":
            g = _parse(formats.parse_graph, args.graph)
            matching = _parse(formats.parse_matching, args.matching)
            cover = _parse(formats.parse_cover, args.cover)
            verdict = check_certificate(g, matching, cover)
            if not verdict.valid:
                print(verdict.reason, file=sys.stderr)
                return 1
            print("valid")
        elif args.command == "gen":
            try:
                spec = GenSpec(
                    args.n_u,
                    args.n_v,
                    model=args.model,
                    weight_range=tuple(args.weights) if args.weights else None,
                    seed=args.seed,
                    length=args.length,
                )
            except ValueError as exc:
                raise CommandError(str(exc)) from None
            _emit(cmd_gen(spec), args.out)
        elif args.command == "bench":
            unknown = set(args.models) - set(MODELS)
            if unknown:
                raise CommandError(f"unknown model(s): {', '.join(sorted(unknown))}")
            bad = set(args.algorithms) - set(bench.ALGORITHMS)
            if bad:
                raise CommandError(f"unknown algorithm(s): {', '.join(sorted(bad))}")
            _emit(cmd_bench(args.sizes, args.models, args.repetitions, args.seed, args.algorithms), args.out)
    except CommandError as exc:
        print(f"convexmatch: {exc}", file=sys.stderr)
        return exc.status
    return 0


if __name__ == "__main__":
    sys.exit(main())
