"""Command-line front end: counts, polynomials, verification, exports.

Exit codes: 0 all good, 1 verification mismatch, 2 usage error, 3 resource
cap exceeded.  JSON payloads carry every number as a decimal string so that
64-bit consumers cannot silently overflow.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from .errors import SizeLimitError
from .graph import (
    DEFAULT_GRAPH_CAP,
    build,
    direction_edge_count,
    direction_edge_count_closed,
    graph_json,
    to_dot,
    total_edges_closed,
)
from .invariants import (
    irregularity_closed,
    irregularity_oracle,
    mostar_closed,
    mostar_oracle,
    wiener_closed,
    wiener_oracle,
)
from .polynomials import cube_poly_closed, dist_cube_poly_closed, weight_poly
from .sequences import pfib
from .series import DEFAULT_ORDER
from .strings import count_by_weight, max_weight
from .verify import run_suite

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2
EXIT_CAP = 3


@dataclass(frozen=True)
class RunConfig:
    """Validated per-invocation settings; fully deterministic, no seeds."""

    command: str
    p_range: tuple[int, int]
    n_range: tuple[int, int]
    fmt: str = "text"
    order: int = DEFAULT_ORDER
    cap: int = DEFAULT_GRAPH_CAP
    quiet: bool = False

    def __post_init__(self) -> None:
        for name, (lo, hi) in (("p", self.p_range), ("n", self.n_range)):
            if lo < 0 or hi < lo:
                raise ValueError(f"invalid {name} range {lo}..{hi}")
        if self.order < 0:
            raise ValueError(f"series order must be non-negative, got {self.order}")
        if self.cap < 0:
            raise ValueError(f"cap must be non-negative, got {self.cap}")

    def p_values(self) -> list[int]:
        return list(range(self.p_range[0], self.p_range[1] + 1))

    def n_values(self) -> list[int]:
        return list(range(self.n_range[0], self.n_range[1] + 1))


def _span(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            a, b = text.split("..", 1)
            lo, hi = int(a), int(b)
        else:
            lo = hi = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected INT or A..B, got {text!r}"
        ) from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError(f"invalid range {text!r}")
    return lo, hi


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fibpcubes",
        description="Exact counts, polynomials, and identity checks for "
        "Fibonacci p-cubes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    count = sub.add_parser(
        "count", help="closed-form vertex/edge counts and weight census"
    )
    count.add_argument("--p", type=_span, required=True, metavar="P[..P2]")
    count.add_argument(
        "--n", "--n-range", dest="n", type=_span, required=True, metavar="N[..N2]"
    )
    count.add_argument("--format", choices=("text", "json", "csv"), default="text")
    count.add_argument("--quiet", action="store_true")

    poly = sub.add_parser("poly", help="print one counting polynomial")
    poly.add_argument("kind", choices=("cube", "weight", "distance"))
    poly.add_argument("--p", type=_nonneg, required=True)
    poly.add_argument("--n", type=_nonneg, required=True)
    poly.add_argument("--format", choices=("text", "json"), default="text")

    verify = sub.add_parser("verify", help="run closed-form vs oracle suites")
    verify.add_argument(
        "suite", choices=("cubes", "gf", "indices", "irregularity", "all")
    )
    verify.add_argument("--p", type=_span, default=(1, 3), metavar="P[..P2]")
    verify.add_argument(
        "--n", "--n-range", dest="n", type=_span, default=(0, 8), metavar="N[..N2]"
    )
    verify.add_argument("--N", dest="order", type=_nonneg, default=DEFAULT_ORDER)
    verify.add_argument("--cap", type=_nonneg, default=DEFAULT_GRAPH_CAP)
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.add_argument("--quiet", action="store_true")

    export = sub.add_parser("export", help="write the materialized graph")
    export.add_argument("--p", type=_nonneg, required=True)
    export.add_argument("--n", type=_nonneg, required=True)
    export.add_argument("--format", choices=("dot", "json"), default="dot")
    export.add_argument("--output", default="-", help="file path or - for stdout")
    export.add_argument("--cap", type=_nonneg, default=DEFAULT_GRAPH_CAP)

    indices = sub.add_parser(
        "indices", help="distance/degree invariants, closed and oracle"
    )
    indices.add_argument("--p", type=_nonneg, required=True)
    indices.add_argument("--n", type=_nonneg, required=True)
    indices.add_argument("--cap", type=_nonneg, default=DEFAULT_GRAPH_CAP)
    indices.add_argument("--format", choices=("json", "text"), default="json")
    return parser


def _count_rows(cfg: RunConfig) -> list[dict]:
    rows = []
    for p in cfg.p_values():
        for n in cfg.n_values():
            top = max_weight(p, n)
            rows.append(
                {
                    "p": str(p),
                    "n": str(n),
                    "vertices": str(pfib(p, n + p + 1)),
                    "edges": str(total_edges_closed(p, n)),
                    "max_weight": str(top),
                    "weight_census": [
                        str(count_by_weight(p, n, w)) for w in range(top + 1)
                    ],
                }
            )
    return rows


def cmd_count(cfg: RunConfig) -> int:
    rows = _count_rows(cfg)
    if cfg.fmt == "json":
        print(json.dumps(rows, indent=2))
    elif cfg.fmt == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(["p", "n", "vertices", "edges", "max_weight", "weights"])
        for row in rows:
            writer.writerow(
                [
                    row["p"],
                    row["n"],
                    row["vertices"],
                    row["edges"],
                    row["max_weight"],
                    " ".join(row["weight_census"]),
                ]
            )
    else:
        for row in rows:
            print(
                f"p={row['p']} n={row['n']} vertices={row['vertices']} "
                f"edges={row['edges']} max_weight={row['max_weight']} "
                f"weights={','.join(row['weight_census'])}"
            )
    return EXIT_OK


def cmd_poly(cfg: RunConfig, kind: str) -> int:
    p, n = cfg.p_range[0], cfg.n_range[0]
    if kind == "cube":
        poly = cube_poly_closed(p, n)
    elif kind == "weight":
        poly = weight_poly(p, n)
    else:
        poly = dist_cube_poly_closed(p, n)
    if cfg.fmt == "json":
        doc: dict = {"p": str(p), "n": str(n), "kind": kind}
        if kind == "distance":
            doc["terms"] = poly.to_json()
        else:
            doc.update(poly.to_json())
        print(json.dumps(doc, indent=2))
    else:
        print(poly.render())
    return EXIT_OK


def cmd_verify(cfg: RunConfig, suite: str) -> int:
    if cfg.n_range[1] > cfg.cap:
        raise SizeLimitError(
            f"n range up to {cfg.n_range[1]} exceeds the graph cap {cfg.cap}"
        )
    results = run_suite(
        suite, cfg.p_values(), cfg.n_values(), order=cfg.order, graph_cap=cfg.cap
    )
    failed = [r for r in results if not r.passed]
    if cfg.fmt == "json":
        print(
            json.dumps(
                [
                    {"name": r.name, "passed": r.passed, "detail": r.detail}
                    for r in results
                ],
                indent=2,
            )
        )
    else:
        for r in results:
            status = "PASS" if r.passed else "FAIL"
            line = f"{status} {r.name}"
            if r.detail:
                line += f": {r.detail}"
            print(line)
        if not cfg.quiet:
            print(f"{len(results) - len(failed)}/{len(results)} checks passed")
    return EXIT_MISMATCH if failed else EXIT_OK


def cmd_export(cfg: RunConfig, output: str) -> int:
    p, n = cfg.p_range[0], cfg.n_range[0]
    g = build(p, n, cap=cfg.cap)
    if cfg.fmt == "json":
        payload = json.dumps(graph_json(g), indent=2) + "\n"
    else:
        payload = to_dot(g)
    if output == "-":
        sys.stdout.write(payload)
    else:
        with open(output, "w", encoding="utf-8") as handle:
            handle.write(payload)
    return EXIT_OK


def _indices_doc(cfg: RunConfig) -> dict:
    p, n = cfg.p_range[0], cfg.n_range[0]
    closed_dirs = [
        str(direction_edge_count_closed(p, n, i)) for i in range(1, n + 1)
    ]
    doc: dict = {
        "p": str(p),
        "n": str(n),
        "vertices": str(pfib(p, n + p + 1)),
        "edges": str(total_edges_closed(p, n)),
        "wiener": {"closed": str(wiener_closed(p, n)), "oracle": None},
        "mostar": {"closed": str(mostar_closed(p, n)), "oracle": None},
        "irregularity": {
            "closed": str(irregularity_closed(p, n)) if n >= p else None,
            "oracle": None,
            "note": None if n >= p else "theorem not applicable (n < p), oracle-only",
        },
        "edge_counts_by_direction": {"closed": closed_dirs, "oracle": None},
    }
    if n <= cfg.cap:
        g = build(p, n, cap=cfg.cap)
        doc["wiener"]["oracle"] = str(wiener_oracle(g))
        doc["mostar"]["oracle"] = str(mostar_oracle(g))
        doc["irregularity"]["oracle"] = str(irregularity_oracle(g))
        doc["edge_counts_by_direction"]["oracle"] = [
            str(direction_edge_count(g, i)) for i in range(1, n + 1)
        ]
    return doc


def cmd_indices(cfg: RunConfig) -> int:
    doc = _indices_doc(cfg)
    if cfg.fmt == "text":
        buffer = io.StringIO()
        buffer.write(f"p={doc['p']} n={doc['n']} vertices={doc['vertices']} ")
        buffer.write(f"edges={doc['edges']}\n")
        for key in ("wiener", "mostar", "irregularity"):
            entry = doc[key]
            buffer.write(
                f"{key}: closed={entry['closed']} oracle={entry['oracle']}\n"
            )
        sys.stdout.write(buffer.getvalue())
    else:
        print(json.dumps(doc, indent=2))
    return EXIT_OK


def _config_from(args: argparse.Namespace) -> RunConfig:
    p_range = args.p if isinstance(args.p, tuple) else (args.p, args.p)
    n_range = args.n if isinstance(args.n, tuple) else (args.n, args.n)
    return RunConfig(
        command=args.command,
        p_range=p_range,
        n_range=n_range,
        fmt=getattr(args, "format", "text"),
        order=getattr(args, "order", DEFAULT_ORDER),
        cap=getattr(args, "cap", DEFAULT_GRAPH_CAP),
        quiet=getattr(args, "quiet", False),
    )


def main(argv: "list[str] | None" = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = _config_from(args)
        if args.command == "count":
            return cmd_count(cfg)
        if args.command == "poly":
            return cmd_poly(cfg, args.kind)
        if args.command == "verify":
            return cmd_verify(cfg, args.suite)
        if args.command == "export":
            return cmd_export(cfg, args.output)
        return cmd_indices(cfg)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())
