"""Command-line front-end.

Every command prints either plain text or a JSON envelope with the shape
{"command", "input", "result", "versions", "timing_ms"}.  Apart from the
timing field, JSON output is byte-identical across identical invocations.
Errors go to stderr with a nonzero exit status; no partial results are
printed.
"""

import argparse
import json
import os
import sys
import time

from . import __version__
from .census import DEFAULT_DEGREE_LIMIT, CensusProblem, generating_series
from .characters import CACHE_FORMAT_VERSION, char_table, character
from .errors import ConsistencyError, InvcensusError
from .factorizer import search_candidates
from .kronecker import inner_product_expansion
from .molien import molien_series
from .partitions import format_partition, parse_partition
from .series import read_series_file, series_to_json


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text!r}")
    return value


def _nonnegative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text!r}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="invcensus",
        description="Count local unitary invariants of bipartite density matrices.",
    )
    parser.add_argument("--version", action="version", version=f"invcensus {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    common.add_argument(
        "--cache-dir",
        default=None,
        help="directory for persistent caches (default: INVCENSUS_CACHE, else in-memory only)",
    )
    common.add_argument(
        "--threads",
        type=_positive_int,
        default=1,
        help="cap on internal parallelism",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    census = sub.add_parser(
        "census", parents=[common], help="invariant counts by the character route"
    )
    census.add_argument("--n1", type=_positive_int, required=True, help="dimension of the first factor")
    census.add_argument("--n2", type=_positive_int, required=True, help="dimension of the second factor")
    census.add_argument("--max-degree", type=_nonnegative_int, required=True)
    census.add_argument("--degree-limit", type=_nonnegative_int, default=DEFAULT_DEGREE_LIMIT)

    molien = sub.add_parser(
        "molien", parents=[common], help="invariant counts by the constant-term route"
    )
    molien.add_argument("--n1", type=_positive_int, required=True)
    molien.add_argument("--n2", type=_positive_int, required=True)
    molien.add_argument("--max-degree", type=_nonnegative_int, required=True)
    molien.add_argument("--degree-limit", type=_nonnegative_int, default=DEFAULT_DEGREE_LIMIT)
    molien.add_argument(
        "--check",
        action="store_true",
        help="recompute by the character route and require agreement",
    )

    kron = sub.add_parser(
        "kron", parents=[common], help="inner product expansion of two partitions"
    )
    kron.add_argument("lam", metavar="LAMBDA", help="first partition, e.g. 6,2")
    kron.add_argument("mu", metavar="MU", help="second partition of the same weight")

    factor = sub.add_parser(
        "factor", parents=[common], help="search integrity-basis presentations of a series"
    )
    factor.add_argument("--series-file", required=True, help="JSON series file")
    factor.add_argument("--free-generators", type=_nonnegative_int, default=None)
    factor.add_argument("--max-factor-degree", type=_positive_int, default=None)
    factor.add_argument("--max-total-factors", type=_positive_int, default=None)
    factor.add_argument("--limit", type=_positive_int, default=10, help="candidates to show")

    char = sub.add_parser(
        "char", parents=[common], help="one symmetric group character value"
    )
    char.add_argument("lam", metavar="LAMBDA", help="irreducible label, e.g. 2,1")
    char.add_argument("mu", metavar="MU", help="cycle type of the same weight")

    table = sub.add_parser(
        "table", parents=[common], help="full character table of S_n"
    )
    table.add_argument("n", type=_nonnegative_int)

    return parser


def _format_polynomial(series, var: str = "q") -> str:
    terms = []
    for degree, coeff in enumerate(series):
        if coeff == 0:
            continue
        if degree == 0:
            terms.append(str(coeff))
        elif degree == 1:
            terms.append(var if coeff == 1 else f"{coeff} {var}")
        else:
            terms.append(f"{var}^{degree}" if coeff == 1 else f"{coeff} {var}^{degree}")
    return " + ".join(terms) if terms else "0"


def _format_multiset(degrees) -> str:
    return "{" + ",".join(str(d) for d in degrees) + "}"


def _cmd_census(args, cache_dir):
    problem = CensusProblem(args.n1, args.n2)
    series = generating_series(problem, args.max_degree, args.degree_limit)
    echo = {
        "n1": args.n1,
        "n2": args.n2,
        "max_degree": args.max_degree,
        "degree_limit": args.degree_limit,
        "format": args.format,
        "threads": args.threads,
        "cache_dir": cache_dir,
    }
    return echo, series_to_json(series), _format_polynomial(series)


def _cmd_molien(args, cache_dir):
    problem = CensusProblem(args.n1, args.n2)
    series = molien_series(problem, args.max_degree, args.degree_limit)
    echo = {
        "n1": args.n1,
        "n2": args.n2,
        "max_degree": args.max_degree,
        "degree_limit": args.degree_limit,
        "check": args.check,
        "format": args.format,
        "threads": args.threads,
        "cache_dir": cache_dir,
    }
    result = series_to_json(series)
    text = _format_polynomial(series)
    if args.check:
        recount = generating_series(problem, args.max_degree, args.degree_limit)
        if series != recount:
            for n in range(args.max_degree + 1):
                if series[n] != recount[n]:
                    raise ConsistencyError(
                        f"census disagreement at degree {n}: "
                        f"oracle {series[n]}, census {recount[n]}"
                    )
        result["census_agreement"] = "OK"
        text += "\ncensus agreement: OK"
    return echo, result, text


def _cmd_kron(args, cache_dir):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    expansion = inner_product_expansion(lam, mu)
    echo = {
        "lambda": args.lam,
        "mu": args.mu,
        "format": args.format,
        "threads": args.threads,
        "cache_dir": cache_dir,
    }
    result = {
        "weight": expansion.weight,
        "terms": [
            {"partition": list(nu), "multiplicity": mult} for nu, mult in expansion
        ],
    }
    text = "\n".join(
        f"{{{format_partition(nu)}}}: {mult}" for nu, mult in expansion
    )
    return echo, result, text


def _describe_candidate(rank, report, target_degree):
    lines = [
        f"candidate {rank}: num {_format_multiset(report.candidate.numerator_degrees)}"
        f" / den {_format_multiset(report.candidate.denominator_degrees)}",
        f"  free generators {report.candidate.free_generator_count},"
        f" total invariants {report.candidate.total_invariant_count}",
    ]
    if report.first_mismatch is None:
        lines.append(f"  matches the target through degree {target_degree} (full truncation)")
    else:
        degree, candidate_value, target_value = report.first_mismatch
        lines.append(
            f"  match through degree {report.match_degree};"
            f" first mismatch at degree {degree}"
            f" (candidate {candidate_value}, target {target_value})"
        )
    if not report.fully_factored:
        lines.append(
            "  numerator not fully factored; raw numerator series "
            + str(list(report.numerator_series))
        )
    return lines


def _cmd_factor(args, cache_dir):
    target = read_series_file(args.series_file)
    reports = search_candidates(
        target,
        free_generators=args.free_generators,
        max_factor_degree=args.max_factor_degree,
        max_total_factors=args.max_total_factors,
    )
    shown = reports[: args.limit]
    echo = {
        "series_file": args.series_file,
        "free_generators": args.free_generators,
        "max_factor_degree": args.max_factor_degree,
        "max_total_factors": args.max_total_factors,
        "limit": args.limit,
        "format": args.format,
        "threads": args.threads,
        "cache_dir": cache_dir,
    }
    result = {
        "candidate_count": len(reports),
        "candidates": [
            {
                "numerator_degrees": list(r.candidate.numerator_degrees),
                "denominator_degrees": list(r.candidate.denominator_degrees),
                "free_generator_count": r.candidate.free_generator_count,
                "total_invariant_count": r.candidate.total_invariant_count,
                "match_degree": r.match_degree,
                "first_mismatch": list(r.first_mismatch) if r.first_mismatch else None,
                "numerator_nonnegative_through": r.numerator_nonnegative_through,
                "fully_factored": r.fully_factored,
                "degree_one_anchored": r.degree_one_anchored,
                "numerator_series": series_to_json(r.numerator_series),
            }
            for r in shown
        ],
    }
    if shown:
        lines = [f"{len(reports)} candidate(s); showing {len(shown)}"]
        for rank, report in enumerate(shown, start=1):
            lines.extend(_describe_candidate(rank, report, target.degree))
        text = "\n".join(lines)
    else:
        text = "no candidates found"
    return echo, result, text


def _cmd_char(args, cache_dir):
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    value = character(lam, mu)
    echo = {
        "lambda": args.lam,
        "mu": args.mu,
        "format": args.format,
        "threads": args.threads,
        "cache_dir": cache_dir,
    }
    return echo, {"value": value}, str(value)


def _cmd_table(args, cache_dir):
    table = char_table(args.n, cache_dir=cache_dir)
    echo = {
        "n": args.n,
        "format": args.format,
        "threads": args.threads,
        "cache_dir": cache_dir,
    }
    result = {
        "n": table.n,
        "partitions": [list(p) for p in table.partitions],
        "values": [list(row) for row in table.values],
    }
    labels = [format_partition(p) for p in table.partitions]
    cells = [[""] + labels]
    for label, row in zip(labels, table.values):
        cells.append([label] + [str(v) for v in row])
    widths = [max(len(r[c]) for r in cells) for c in range(len(cells[0]))]
    text = "\n".join(
        "  ".join(cell.rjust(width) for cell, width in zip(row, widths)).rstrip()
        for row in cells
    )
    return echo, result, text


_DISPATCH = {
    "census": _cmd_census,
    "molien": _cmd_molien,
    "kron": _cmd_kron,
    "factor": _cmd_factor,
    "char": _cmd_char,
    "table": _cmd_table,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cache_dir = args.cache_dir or os.environ.get("INVCENSUS_CACHE") or None
    start = time.perf_counter()
    try:
        echo, result, text = _DISPATCH[args.command](args, cache_dir)
    except (InvcensusError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    if args.format == "json":
        envelope = {
            "command": args.command,
            "input": echo,
            "result": result,
            "versions": {
                "tool": __version__,
                "cache_format": CACHE_FORMAT_VERSION,
            },
            "timing_ms": elapsed_ms,
        }
        print(json.dumps(envelope, indent=2))
    else:
        print(text)
    return 0


if __name__ == "__main__":
    sys.exit(main())
