"""Command-line front end.

Matrix files hold one generator row per line as a string of 0/1 characters;
``#`` starts a comment and blank lines are skipped.

Exit codes: 0 success, 1 counterexample found by ``verify``, 2 usage, parse
or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .code import LinearCode, build_code, covering_radius, enumerate_cosets, minimum_distance
from .equivalence import permutation_equivalent
from .errors import ParseError, RankDeficient
from .gf2 import MAX_LENGTH, BinaryMatrix, BitWord
from .graph import analyze, bfs_distances, bipartition_problems, hasse_isomorphic, to_dot
from .poset import build_hasse, corollary_distance, orphans
from .verify import DEFAULT_MAX_PAIRS, run_verify


def read_matrix_file(path: str | Path) -> tuple[BinaryMatrix, list[int]]:
    """Parse a matrix file; also returns the source line number of each row."""
    text = Path(path).read_text()
    rows: list[str] = []
    lines: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        for col, ch in enumerate(body, start=1):
            if ch not in "01":
                raise ParseError(f"unexpected character {ch!r}", lineno, col)
        if len(body) > MAX_LENGTH:
            raise ParseError(f"row length {len(body)} exceeds {MAX_LENGTH}", lineno)
        if rows and len(body) != len(rows[0]):
            raise ParseError(f"row length {len(body)} differs from {len(rows[0])}", lineno)
        rows.append(body)
        lines.append(lineno)
    if not rows:
        raise ParseError("no matrix rows found", max(1, len(text.splitlines())))
    return BinaryMatrix.from_strings(rows), lines


def parse_code_file(path: str | Path) -> LinearCode:
    matrix, lines = read_matrix_file(path)
    try:
        return build_code(matrix)
    except RankDeficient as exc:
        if exc.row is None:
            raise
        raise RankDeficient(
            f"{path}: row {exc.row} (line {lines[exc.row - 1]}) is a combination of earlier rows",
            row=exc.row,
        ) from None


def _theorem_checks(g, rho: int, report) -> dict[str, bool]:
    return {
        "connected": report.connected,
        "triangle_free": report.triangle_free,
        "bipartite_parity": not bipartition_problems(g),
        "diameter_ge_rho": report.connected and report.diameter >= rho,
        "star_iff_rho_1": report.is_star == (rho == 1),
        "vertex_count": len(g.table) == 1 << g.table.code.redundancy,
    }


def cmd_analyze(code: LinearCode, fmt: str = "text") -> str:
    table = enumerate_cosets(code)
    g = build_hasse(table)
    report = analyze(g)
    rho = covering_radius(table)
    d = minimum_distance(code)
    orphan_list = orphans(g)
    checks = _theorem_checks(g, rho, report)
    if fmt == "records":
        out = [
            json.dumps({"type": "coset", "label": f"C{i}", "syndrome": str(c.syndrome), "weight": c.weight,
                        "leaders": [str(x) for x in c.leaders]})
            for i, c in enumerate(table)
        ]
        out.append(json.dumps({
            "type": "summary", "n": code.n, "k": code.k, "d": d, "rho": rho, "cosets": len(table),
            "edges": len(g.edges), "orphans": [f"C{v}" for v in orphan_list], "diameter": report.diameter,
            "star": report.is_star, "checks": checks,
        }, sort_keys=True))
        return "\n".join(out) + "\n"
    lines = [
        f"code: n={code.n} k={code.k} d={d}",
        f"covering radius: {rho}",
        f"cosets: {len(table)}",
        _coset_table(table),
        f"edges: {len(g.edges)}",
        f"orphans: {' '.join(f'C{v}' for v in orphan_list)} ({len(orphan_list)})",
        f"diameter: {report.diameter}",
        f"star: {str(report.is_star).lower()}",
        "checks:",
    ]
    lines += [f"  {name}: {str(ok).lower()}" for name, ok in checks.items()]
    return "\n".join(lines) + "\n"


def _coset_table(table) -> str:
    rows = ["  label  syndrome  weight  leaders"]
    for i, c in enumerate(table):
        rows.append(f"  {'C' + str(i):<6} {str(c.syndrome):<9} {c.weight:<7} {' '.join(str(x) for x in c.leaders)}")
    return "\n".join(rows)


def cmd_cosets(code: LinearCode) -> str:
    return _coset_table(enumerate_cosets(code)) + "\n"


def cmd_distance(code: LinearCode, word_a: str, word_b: str) -> str:
    table = enumerate_cosets(code)
    a = table.coset_of(BitWord.from_str(word_a))
    b = table.coset_of(BitWord.from_str(word_b))
    ia, ib = table.index_of(a), table.index_of(b)
    if ia == ib:
        return f"C{ia} and C{ib} are the same coset: distance 0\n"
    value, walk = corollary_distance(table, a, b)
    bfs = bfs_distances(build_hasse(table), ia)[ib]
    return (
        f"C{ia} -> C{ib}\n"
        f"formula distance: {value}\n"
        f"graph distance: {bfs}\n"
        f"witness walk: {' '.join(f'C{v}' for v in walk)}\n"
    )


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cosetposet", description="Coset posets of binary linear codes.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", help="full report for one generator matrix")
    s.add_argument("file")
    s.add_argument("--format", choices=["text", "records"], default="text")

    s = sub.add_parser("cosets", help="coset table: syndrome, weight, all leaders")
    s.add_argument("file")

    s = sub.add_parser("hasse", help="export the Hasse diagram as DOT")
    s.add_argument("file")
    s.add_argument("--dot", default="-", help="output path, '-' for stdout")

    s = sub.add_parser("distance", help="distance between the cosets of two words")
    s.add_argument("file")
    s.add_argument("word_a")
    s.add_argument("word_b")

    s = sub.add_parser("isomorphic", help="are the two Hasse diagrams isomorphic")
    s.add_argument("file_a")
    s.add_argument("file_b")

    s = sub.add_parser("equivalent", help="are the two codes permutation equivalent")
    s.add_argument("file_a")
    s.add_argument("file_b")

    s = sub.add_parser("verify", help="run the theorem checks over generated codes")
    s.add_argument("--mode", choices=["exhaustive", "random"], default="exhaustive")
    s.add_argument("--n-max", type=int, default=5)
    s.add_argument("--n-min", type=int, default=2)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--max-pairs", type=int, default=DEFAULT_MAX_PAIRS)
    s.add_argument("--catalog", type=int, default=None, metavar="N",
                   help="also list isomorphic-diagram inequivalent pairs with n <= N")
    s.add_argument("--budget", type=float, default=None)
    s.add_argument("--format", choices=["text", "records"], default="text")
    return p


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    out = sys.stdout
    try:
        if args.command == "analyze":
            out.write(cmd_analyze(parse_code_file(args.file), args.format))
        elif args.command == "cosets":
            out.write(cmd_cosets(parse_code_file(args.file)))
        elif args.command == "hasse":
            g = build_hasse(enumerate_cosets(parse_code_file(args.file)))
            dot = to_dot(g)
            if args.dot == "-":
                out.write(dot)
            else:
                with open(args.dot, "w", encoding="utf-8", newline="\n") as fh:
                    fh.write(dot)
        elif args.command == "distance":
            out.write(cmd_distance(parse_code_file(args.file), args.word_a, args.word_b))
        elif args.command == "isomorphic":
            ga = build_hasse(enumerate_cosets(parse_code_file(args.file_a)))
            gb = build_hasse(enumerate_cosets(parse_code_file(args.file_b)))
            w = hasse_isomorphic(ga, gb)
            if w is None:
                out.write("isomorphic: false\n")
            else:
                out.write("isomorphic: true\n")
                out.write("mapping: " + " ".join(f"C{v}->C{u}" for v, u in enumerate(w.mapping)) + "\n")
        elif args.command == "equivalent":
            p = permutation_equivalent(parse_code_file(args.file_a), parse_code_file(args.file_b))
            out.write("equivalent: false\n" if p is None else f"equivalent: true\npermutation: {p}\n")
        elif args.command == "verify":
            report = run_verify(
                args.n_max, mode=args.mode, seed=args.seed, count=args.count, n_min=args.n_min,
                budget=None if args.budget is None else int(args.budget), max_pairs=args.max_pairs,
                catalog_n_max=args.catalog,
            )
            out.write(report.to_records() if args.format == "records" else report.to_text())
            return 0 if report.passed else 1
    except (ValueError, OSError) as exc:
        print(f"cosetposet: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
