"""Command line interface.

Subcommands: entropy, divergence, pairwise, spectrum, figure. Single-value
commands emit key=value lines; vector and matrix commands emit CSV. All
numbers use %.12g. Diagnostics go to stderr; the exit status is 0 only when
no error occurred.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from pathlib import Path

import numpy as np

from .divergence import jensen_tsallis_divergence, pairwise_matrix
from .entropy import renyi_entropy, tsallis_entropy, tsallis_entropy_p, von_neumann_entropy
from .errors import (
    DimensionMismatchError,
    EmptyGraphError,
    GraphParseError,
    InvalidAlphaError,
)
from .graph_io import Graph, parse_edge_list, parse_matrix_market, parse_off_mesh
from .laplacian import density_matrix, volume
from .spectral import spectrum
from .validation import check_weight_vector

EXTENSION_FORMATS = {".edges": "edges", ".txt": "edges", ".mtx": "mtx", ".off": "off"}

_CLI_ERRORS = (ValueError, ArithmeticError, RuntimeError, OSError)


def _fmt(x: float) -> str:
    return "%.12g" % x


def resolve_format(path: str, format_flag: str) -> str:
    if format_flag != "auto":
        return format_flag
    suffix = Path(path).suffix.lower()
    if suffix not in EXTENSION_FORMATS:
        raise ValueError(
            f"{path}: cannot infer format from extension {suffix!r}; pass --format"
        )
    return EXTENSION_FORMATS[suffix]


def load_graph(path: str, format_flag: str = "auto", one_based: bool = False) -> Graph:
    kind = resolve_format(path, format_flag)
    try:
        with open(path, "r", encoding="utf-8") as handle:
            if kind == "edges":
                return parse_edge_list(handle, one_based=one_based)
            if kind == "mtx":
                return parse_matrix_market(handle)
            return parse_off_mesh(handle)
    except GraphParseError as exc:
        raise type(exc)(f"{path}: {exc}") from exc


def _load_density(path: str, format_flag: str, one_based: bool):
    g = load_graph(path, format_flag, one_based)
    try:
        return g, density_matrix(g)
    except EmptyGraphError as exc:
        raise EmptyGraphError(f"{path}: {exc}") from exc


def _open_output(args) -> io.TextIOBase:
    if args.out is None:
        return sys.stdout
    return open(args.out, "w", encoding="utf-8", newline="")


def _emit(args, text: str) -> None:
    out = _open_output(args)
    try:
        out.write(text)
    finally:
        if out is not sys.stdout:
            out.close()


def _alpha_for_measure(args) -> float:
    # von Neumann is the alpha -> 1 limit; report it as such
    return 1.0 if args.measure == "von-neumann" else args.alpha


def cmd_entropy(args) -> int:
    g, rho = _load_density(args.input, args.format, args.one_based)
    if args.measure == "tsallis":
        value = tsallis_entropy(rho, args.alpha)
    elif args.measure == "renyi":
        value = renyi_entropy(rho, args.alpha)
    else:
        value = von_neumann_entropy(rho)
    record = [
        f"file={args.input}",
        f"m={g.vertex_count}",
        f"edge_count={g.edge_count}",
        f"volume={volume(g)}",
        f"alpha={_fmt(_alpha_for_measure(args))}",
        f"measure={args.measure}",
        f"value={_fmt(value)}",
    ]
    _emit(args, "\n".join(record) + "\n")
    return 0


def _parse_weights(text: str | None, n: int):
    if text is None:
        return None
    try:
        weights = [float(token) for token in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"--weights: {exc}") from exc
    return check_weight_vector(weights, expected_length=n)


def cmd_divergence(args) -> int:
    loaded = [_load_density(p, args.format, args.one_based) for p in args.inputs]
    sizes = {g.vertex_count for g, _ in loaded}
    if len(sizes) > 1:
        raise DimensionMismatchError(
            f"inputs have mixed vertex counts: {sorted(sizes)}"
        )
    rhos = [rho for _, rho in loaded]
    weights = _parse_weights(args.weights, len(rhos))
    result = jensen_tsallis_divergence(rhos, weights, args.alpha)
    record = [
        f"value={_fmt(result.value)}",
        f"upper_bound={_fmt(result.upper_bound)}",
        f"tight_bound={_fmt(result.tight_bound)}",
        f"normalized={_fmt(result.normalized)}",
        f"alpha={_fmt(result.alpha)}",
        f"n={result.n}",
    ]
    _emit(args, "\n".join(record) + "\n")
    return 0


def _pairwise_paths(args) -> list[str]:
    if args.inputs and args.dir:
        raise ValueError("pass either --inputs or --dir, not both")
    if args.inputs:
        return list(args.inputs)
    if args.dir:
        root = Path(args.dir)
        if not root.is_dir():
            raise ValueError(f"{args.dir}: not a directory")
        found = sorted(
            str(p) for p in root.iterdir()
            if p.is_file() and p.suffix.lower() in EXTENSION_FORMATS
        )
        if not found:
            raise ValueError(f"{args.dir}: no graph files with known extensions")
        return found
    raise ValueError("pairwise needs --inputs or --dir")


def cmd_pairwise(args) -> int:
    paths = _pairwise_paths(args)
    labels: list[str] = []
    rhos = []
    dim = None
    for path in paths:
        try:
            _, rho = _load_density(path, args.format, args.one_based)
            if dim is not None and rho.shape[0] != dim:
                raise DimensionMismatchError(
                    f"{path}: has {rho.shape[0]} vertices, corpus has {dim}"
                )
        except _CLI_ERRORS as exc:
            if not args.skip_bad:
                raise
            print(f"skipping {path}: {exc}", file=sys.stderr)
            continue
        if dim is None:
            dim = rho.shape[0]
        labels.append(path)
        rhos.append(rho)
    if not rhos:
        raise ValueError("no usable graphs for the pairwise matrix")

    matrix = pairwise_matrix(rhos, args.alpha, normalized=args.normalized)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow([""] + labels)
    for label, row in zip(labels, matrix):
        writer.writerow([label] + [_fmt(x) for x in row])
    _emit(args, buffer.getvalue())
    return 0


def cmd_spectrum(args) -> int:
    _, rho = _load_density(args.input, args.format, args.one_based)
    mu = spectrum(rho)
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["index", "mu"])
    for index, value in enumerate(mu, start=1):
        writer.writerow([index, _fmt(value)])
    _emit(args, buffer.getvalue())
    return 0


def _diagonal_entropy(p: float, alpha: float) -> float:
    """Tsallis entropy of diag(p, 1-p); alpha = 0 uses trace(rho**0) - 1
    with the 0**0 := 0 convention (rank minus one)."""
    pair = np.array([p, 1.0 - p])
    if alpha == 0.0:
        return float(np.count_nonzero(pair) - 1)
    return tsallis_entropy_p(pair, alpha)


def cmd_figure(args) -> int:
    tokens = [token.strip() for token in args.alpha_list.split(",")]
    alphas = []
    for token in tokens:
        try:
            a = float(token)
        except ValueError as exc:
            raise InvalidAlphaError(f"--alpha-list: {exc}") from None
        if a < 0.0:
            raise InvalidAlphaError(f"alpha must be nonnegative, got {token}")
        alphas.append(a)
    if args.grid < 2:
        raise ValueError(f"--grid needs at least 2 points, got {args.grid}")

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["p"] + tokens)
    for p in np.linspace(0.0, 1.0, args.grid):
        row = [_fmt(p)]
        row.extend(_fmt(_diagonal_entropy(p, a)) for a in alphas)
        writer.writerow(row)
    _emit(args, buffer.getvalue())
    return 0


def _add_common_options(parser):
    parser.add_argument("--format", choices=["auto", "edges", "mtx", "off"],
                        default="auto", help="input format (default: by extension)")
    parser.add_argument("--one-based", action="store_true",
                        help="edge-list indices start at 1")


def _add_input_options(parser, multi: bool = False, directory: bool = False):
    if multi:
        parser.add_argument("--inputs", nargs="+", metavar="FILE",
                            required=not directory,
                            help="graph files to compare")
        if directory:
            parser.add_argument("--dir", metavar="DIR",
                                help="directory scanned for graph files")
    else:
        parser.add_argument("--input", metavar="FILE", required=True,
                            help="graph file")
    _add_common_options(parser)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qjt",
        description="Entropies and Jensen-Tsallis divergences of graph "
        "Laplacian density matrices.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("entropy", help="entropy of one graph")
    _add_input_options(p)
    p.add_argument("--measure", choices=["tsallis", "renyi", "von-neumann"],
                   default="tsallis")
    p.add_argument("--alpha", type=float, default=2.0, help="entropic index")
    p.set_defaults(func=cmd_entropy)

    p = commands.add_parser("divergence", help="divergence between graphs")
    _add_input_options(p, multi=True)
    p.add_argument("--alpha", type=float, default=2.0, help="entropic index")
    p.add_argument("--weights", metavar="W1,W2,...",
                   help="density weights (default: uniform)")
    p.set_defaults(func=cmd_divergence)

    p = commands.add_parser("pairwise", help="pairwise divergence matrix")
    _add_input_options(p, multi=True, directory=True)
    p.add_argument("--alpha", type=float, default=2.0, help="entropic index")
    p.add_argument("--normalized", action=argparse.BooleanOptionalAction,
                   default=True, help="divide each value by its upper bound")
    p.add_argument("--skip-bad", action="store_true",
                   help="skip unparseable or mismatched files instead of aborting")
    p.set_defaults(func=cmd_pairwise)

    p = commands.add_parser("spectrum", help="eigenvalue spectrum of one graph")
    _add_input_options(p)
    p.set_defaults(func=cmd_spectrum)

    p = commands.add_parser("figure", help="entropy curves of diag(p, 1-p)")
    p.add_argument("--alpha-list", default="0,0.5,1,2", metavar="A1,A2,...",
                   help="entropic indices, one output column each (0 allowed)")
    p.add_argument("--grid", type=int, default=101,
                   help="number of p samples on [0, 1]")
    p.set_defaults(func=cmd_figure)

    for command in commands.choices.values():
        command.add_argument("--out", metavar="FILE",
                             help="write output here instead of stdout")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CLI_ERRORS as exc:
        print(f"qjt: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
