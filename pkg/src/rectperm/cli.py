"""Command-line interface: ``rectperm {enumerate,map,inverse,verify,stats,render}``.

Exit status is 0 when the command succeeded and every requested check
passed, 1 when a check failed, 2 on bad input or a guard violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from rectperm import enumeration, stats, verify
from rectperm.diagrect import DiagRect, Rect, check_diagonal
from rectperm.errors import InvalidGenRect, RectPermError, SizeGuardExceeded
from rectperm.genrect import GenRect, gamma, inverse_gamma
from rectperm.perm import Permutation
from rectperm.realize import realize, render_svg

ENGINE_GUARDS = {"brute": enumeration.BRUTE_GUARD}


def genrect_to_json(g: GenRect) -> dict[str, Any]:
    return {
        "n": g.n,
        "rects": [{"id": r.id, "x0": r.x0, "y0": r.y0, "x1": r.x1, "y1": r.y1} for r in g.diag.rects],
        "walls": [
            {"orientation": w.orientation, "coord": w.coord, "lo": w.lo, "hi": w.hi, "shuffle": list(s)}
            for w, s in zip(g.walls, g.shuffles)
        ],
    }


def _int(value: Any, what: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidGenRect("schema", f"{what} must be an integer, got {value!r}")
    return value


def genrect_from_json(doc: Any) -> GenRect:
    """Parse and validate a GenRect document; raises InvalidGenRect."""
    if not isinstance(doc, dict) or not {"n", "rects", "walls"} <= doc.keys():
        raise InvalidGenRect("schema", "expected an object with keys n, rects, walls")
    n = _int(doc["n"], "n")
    if n < 1:
        raise InvalidGenRect("schema", "n must be >= 1")
    try:
        rects = sorted(
            (Rect(_int(r["id"], "id"), *(_int(r[k], k) for k in ("x0", "y0", "x1", "y1"))) for r in doc["rects"]),
            key=lambda r: r.id,
        )
    except (KeyError, TypeError):
        raise InvalidGenRect("schema", "each rect needs id, x0, y0, x1, y1") from None
    if [r.id for r in rects] != list(range(1, n + 1)):
        raise InvalidGenRect("rect-ids", f"rect ids must be exactly 1..{n}")
    diag = DiagRect(n, tuple(rects))
    walls = doc["walls"]
    if not isinstance(walls, list):
        raise InvalidGenRect("schema", "walls must be a list")
    try:
        declared = [(w["orientation"], w["coord"], w["lo"], w["hi"]) for w in walls]
        shuffles = [tuple(_int(v, "shuffle entry") for v in w["shuffle"]) for w in walls]
    except (KeyError, TypeError):
        raise InvalidGenRect("schema", "each wall needs orientation, coord, lo, hi, shuffle") from None
    # diagonal validity first, so wall extraction runs on a real tiling
    try:
        check_diagonal(diag)
    except ValueError as exc:
        raise InvalidGenRect("diagonal-rectangulation", str(exc)) from None
    actual = [(w.orientation, w.coord, w.lo, w.hi) for w in diag.walls]
    if declared != actual:
        raise InvalidGenRect("walls", f"declared walls {declared} differ from the rectangulation's walls {actual}")
    g = GenRect(diag, tuple(shuffles))
    g.validate()
    return g


def _read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    return arg


def _read_doc(arg: str) -> Any:
    text = sys.stdin.read() if arg == "-" else open(arg, encoding="utf-8").read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidGenRect("json", str(exc)) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_enumerate(args) -> int:
    n = args.n
    engine = args.engine
    guard = ENGINE_GUARDS.get(engine)
    if guard is not None and n > guard:
        raise SizeGuardExceeded(f"engine {engine}", n, guard)
    if n < 1:
        raise ValueError("--n must be >= 1")
    if engine == "2clumped":
        counts = enumeration.count_2clumped(n, threads=args.threads, mem_cap=args.mem_cap)
    elif engine == "1clumped":
        counts = enumeration.count_1clumped(n, threads=args.threads)
    elif engine == "baxter-formula":
        counts = [enumeration.baxter_closed_form(m) for m in range(1, n + 1)]
    else:
        if args.k is None:
            raise ValueError("--engine brute needs --k")
        counts = [enumeration.brute_count_k_clumped(m, args.k) for m in range(1, n + 1)]
    rows = list(enumerate(counts, 1))
    if args.emit == "json":
        text = json.dumps([{"n": m, "count": str(c)} for m, c in rows], indent=2) + "\n"
    else:
        text = enumeration.write_counts_csv(rows)
    _emit(text, args.out)
    return 0


def _svg_for(g: GenRect, args) -> str:
    return render_svg(realize(g), scale=args.scale, labels=not args.no_labels, diagonal=args.diagonal)


def cmd_map(args) -> int:
    perm = Permutation.parse(_read_text(args.perm))
    g = gamma(perm)
    if args.emit == "svg":
        text = _svg_for(g, args)
    else:
        text = json.dumps(genrect_to_json(g), indent=2) + "\n"
    _emit(text, args.out)
    return 0


def cmd_inverse(args) -> int:
    g = genrect_from_json(_read_doc(args.doc))
    _emit(str(inverse_gamma(g)) + "\n", args.out)
    return 0


def cmd_verify(args) -> int:
    guard = verify.GUARDS[args.suite]
    if args.n > guard:
        raise SizeGuardExceeded(f"verify {args.suite}", args.n, guard)
    report = verify.SUITES[args.suite](args.n)
    _emit(json.dumps(report.as_dict(), indent=2) + "\n", args.out)
    return 0 if report.passed else 1


def cmd_stats(args) -> int:
    if args.mode == "conjecture":
        if args.d is None:
            raise ValueError("stats conjecture needs --d")
        rows = stats.check_conjecture(args.d, range(1, args.n + 1))
        _emit(stats.conjecture_csv(rows), args.out)
        return 0 if all(r.match for r in rows) else 1
    dist = stats.distribution(args.n, args.stat)
    lines = [f"{args.stat},count"] + [f"{v},{c}" for v, c in sorted(dist.counts.items())]
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_render(args) -> int:
    source = args.source
    text = sys.stdin.read() if source == "-" else None
    if text is None:
        try:
            g = gamma(Permutation.parse(source))
        except ValueError:
            g = genrect_from_json(_read_doc(source))
    else:
        stripped = text.strip()
        if stripped.startswith("{"):
            try:
                g = genrect_from_json(json.loads(stripped))
            except json.JSONDecodeError as exc:
                raise InvalidGenRect("json", str(exc)) from None
        else:
            g = gamma(Permutation.parse(stripped))
    _emit(_svg_for(g, args), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rectperm", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--out", help="write output to this file instead of stdout")
        p.add_argument("--threads", type=int, default=1, help="worker threads (results do not depend on it)")

    def svg_opts(p):
        p.add_argument("--scale", type=float, default=40)
        p.add_argument("--no-labels", action="store_true")
        p.add_argument("--diagonal", action="store_true", help="draw the top-left to bottom-right diagonal")

    p = sub.add_parser("enumerate", help="exact counts for n = 1..N")
    p.add_argument("--engine", choices=["2clumped", "1clumped", "baxter-formula", "brute"], default="2clumped")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, help="clump bound for the brute engine")
    p.add_argument("--emit", choices=["csv", "json"], default="csv")
    p.add_argument("--mem-cap", type=int, default=None, help="abort if a level has more distinct words")
    common(p)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="gamma of a permutation")
    p.add_argument("perm", help="one-line notation such as 3,1,2, or - for stdin")
    p.add_argument("--emit", choices=["json", "svg"], default="json")
    svg_opts(p)
    common(p)
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("inverse", help="2-clumped preimage of a GenRect JSON document")
    p.add_argument("doc", help="path to the document, or - for stdin")
    common(p)
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("verify", help="run an exhaustive property suite over S_n")
    p.add_argument("suite", choices=sorted(verify.SUITES))
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="statistic histograms and conjecture checks")
    p.add_argument("mode", choices=["distribution", "conjecture"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--stat", choices=stats.STATS, default="right_descents")
    p.add_argument("--d", type=int)
    common(p)
    p.set_defaults(func=cmd_stats)

    p = sub.add_parser("render", help="SVG of a permutation's rectangulation or of a GenRect document")
    p.add_argument("source", help="permutation, path to a JSON document, or - for stdin")
    svg_opts(p)
    common(p)
    p.set_defaults(func=cmd_render)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except (RectPermError, ValueError, OSError) as exc:
        print(f"rectperm: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
