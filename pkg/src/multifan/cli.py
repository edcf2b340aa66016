"""
Command-line surface: construction, enumeration, certification and table
reproduction.

Exit codes: 0 certified / PASS, 1 verified failure (degeneracies found,
reproduction mismatch, oracle mismatch), 2 usage or IO error.

Output files carry deterministic headers only (construction, n, seed,
counts); a JSON manifest with timestamps, tool version and content digests
is written next to each output file.  Reruns with the same arguments and
seed produce byte-identical output files.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import asdict, dataclass

from . import __version__
from .fan import CheckReport, certify_fan, format_stats_table
from .moves import fattening_sequence, format_trace
from .polygon import diagonal_to_position, enumerate_k_triangulations, format_triangulations
from .rays import CONSTRUCTIONS, build_rays, format_ray_file, parse_ray_file
from .subword import all_facets, format_facet_file, positions_of
from .tables import TABLE_IDS, reproduce_table
from .words import Word, multiassociahedron_word, parse_word, format_word

TIER_CAP = {"quick": 4, "desk": 5, "full": 8}


@dataclass
class RunManifest:
    command: str
    construction: str | None
    n: int | None
    k: int | None
    seed: int | None
    timestamp: float
    version: str
    outputs: dict[str, str]


class UsageError(Exception):
    pass


def _tier_check(n: int, tier: str):
    cap = TIER_CAP[tier]
    if n > cap:
        raise UsageError(
            f"n={n} exceeds the {tier} tier cap ({cap}); pass --tier full for n up to 8"
        )


def _write_output(path: str, text: str, manifest: RunManifest):
    with open(path, "w") as fh:
        fh.write(text)
    digest = hashlib.sha256(text.encode()).hexdigest()
    manifest.outputs[path] = f"sha256:{digest}"
    with open(path + ".manifest.json", "w") as fh:
        json.dump(asdict(manifest), fh, indent=2, sort_keys=True)
        fh.write("\n")


_EFFECTIVE_ARGV: list[str] = []


def _manifest(args, command: str, construction=None, n=None, k=None, seed=None) -> RunManifest:
    return RunManifest(
        command=" ".join(_EFFECTIVE_ARGV or [command]),
        construction=construction,
        n=n,
        k=k,
        seed=seed,
        timestamp=time.time(),
        version=__version__,
        outputs={},
    )


def _emit(args, text: str, manifest: RunManifest):
    if args.out:
        _write_output(args.out, text, manifest)
    else:
        sys.stdout.write(text)


def _resolve_word(args) -> tuple[Word, int | None, int | None]:
    if getattr(args, "kn", None):
        k, n = (int(t) for t in args.kn.split(","))
        return multiassociahedron_word(k, n), k, n
    if getattr(args, "word", None):
        w = parse_word(args.word)
        return w, None, w.rank
    raise UsageError("pass --word or --kn")


def cmd_facets(args) -> int:
    word, k, n = _resolve_word(args)
    _tier_check(word.rank, args.tier)
    index = all_facets(word)
    manifest = _manifest(args, "facets", n=word.rank, k=k)
    _emit(args, format_facet_file(index), manifest)
    return 0


def cmd_rays(args) -> int:
    base = args.construction.split(":", 1)[0]
    if base not in CONSTRUCTIONS:
        raise UsageError(f"unknown construction {args.construction!r}; know {CONSTRUCTIONS}")
    _tier_check(args.n, args.tier)
    if base == "perturbed" and args.seed is None:
        raise UsageError("perturbed construction requires --seed")
    ra = build_rays(args.construction, args.n, args.seed)
    manifest = _manifest(args, "rays", construction=args.construction, n=args.n, seed=args.seed)
    _emit(args, format_ray_file(ra), manifest)
    return 0


def _report_json(word: Word, ra, rep: CheckReport) -> str:
    doc = {
        "word": format_word(word),
        "n": word.rank,
        "construction": ra.construction,
        "seed": ra.seed,
        "certified": rep.certified,
        "partial_certificate": rep.partial,
        "condition1": rep.condition1,
        "condition1_holds": rep.condition1_holds,
        "base_facet": list(rep.base_facet) if rep.base_facet else None,
        "first_failure": rep.first_failure,
        "stats": {
            "bad_ridges": rep.stats.bad_ridges,
            "degenerate_ridges": rep.stats.degenerate_ridges,
            "ridges": rep.stats.ridges,
            "ridge_ratio": rep.stats.ridge_ratio,
            "degenerate_cones": rep.stats.degenerate_cones,
            "cones": rep.stats.cones,
            "cone_ratio": rep.stats.cone_ratio,
            "min_dimension": rep.stats.min_dimension,
        },
    }
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def cmd_check(args) -> int:
    try:
        with open(args.rays) as fh:
            ra = parse_ray_file(fh.read())
    except OSError as exc:
        raise UsageError(f"cannot read ray file: {exc}")
    word, _, _ = _resolve_word(args)
    if ra.word != word:
        raise UsageError(
            f"ray file is for {format_word(ra.word)}, not {format_word(word)}"
        )
    _tier_check(word.rank, args.tier)
    index = all_facets(word)
    rep = certify_fan(ra, index, condition1=args.condition1, threads=args.threads)
    sys.stdout.write(format_stats_table([rep.stats]))
    if rep.certified:
        sys.stdout.write("certified: complete simplicial fan\n")
    elif rep.partial:
        sys.stdout.write(
            "partial certificate: all ridges good, base condition sampled\n"
        )
    else:
        sys.stdout.write(f"not certified: {rep.first_failure or 'base condition unchecked'}\n")
    if args.out:
        manifest = _manifest(args, "check", construction=ra.construction,
                             n=word.rank, seed=ra.seed)
        _write_output(args.out, _report_json(word, ra, rep), manifest)
    if rep.certified or (rep.partial and args.allow_partial):
        return 0
    return 1


def cmd_reproduce(args) -> int:
    ns = _parse_range(args.n) if args.n else None
    if ns:
        for n in ns:
            _tier_check(n, args.tier)
    try:
        results = reproduce_table(args.table, ns, threads=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc))
    fails = 0
    for cell in results:
        if cell.ok:
            sys.stdout.write(f"PASS {cell.cell} = {cell.got}\n")
        else:
            fails += 1
            sys.stdout.write(
                f"FAIL {cell.cell}: expected {cell.expected}, got {cell.got}\n"
            )
    sys.stdout.write(f"{args.table}: {len(results) - fails}/{len(results)} cells match\n")
    return 1 if fails else 0


def cmd_oracle(args) -> int:
    k, n = (int(t) for t in args.kn.split(","))
    try:
        tris = enumerate_k_triangulations(k, n)
    except ValueError as exc:
        raise UsageError(str(exc))
    mapped = {
        frozenset(diagonal_to_position(k, n, d) for d in tri) for tri in tris
    }
    index = all_facets(multiassociahedron_word(k, n))
    facets = {frozenset(positions_of(f)) for f in index.facets}
    if args.out:
        manifest = _manifest(args, "oracle", n=n, k=k)
        _write_output(args.out, format_triangulations(tris), manifest)
    if mapped == facets:
        sys.stdout.write(
            f"PASS k={k} n={n}: {len(facets)} facets on both routes\n"
        )
        return 0
    only_oracle = len(mapped - facets)
    only_subword = len(facets - mapped)
    sys.stdout.write(
        f"FAIL k={k} n={n}: {only_oracle} oracle-only, {only_subword} subword-only\n"
    )
    return 1


def cmd_trace(args) -> int:
    word = multiassociahedron_word(args.k_prefix, args.n)
    trace = fattening_sequence(word, triangle_start=args.k_prefix * args.n)
    manifest = _manifest(args, "trace", n=args.n, k=args.k_prefix)
    _emit(args, format_trace(trace, verbose=args.verbose), manifest)
    return 0


def _parse_range(spec: str) -> list[int]:
    if ".." in spec:
        lo, hi = (int(t) for t in spec.split("..", 1))
        return list(range(lo, hi + 1))
    return [int(t) for t in spec.split(",")]


def _common(sub, out=True):
    sub.add_argument("--tier", choices=sorted(TIER_CAP), default="desk")
    sub.add_argument("--threads", type=int, default=1)
    if out:
        sub.add_argument("--out", help="write the result here (plus .manifest.json)")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="multifan",
        description="construct and certify fan realizations of 2-associahedra",
    )
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subs = p.add_subparsers(dest="command", required=True)

    s = subs.add_parser("facets", help="enumerate subword-complex facets")
    s.add_argument("--word", help='word spec, e.g. "c^2 w0(3)" or "n=3; 1 2 3 1 2 1"')
    s.add_argument("--kn", help="k,n shorthand for c^k w0(n)")
    _common(s)
    s.set_defaults(func=cmd_facets)

    s = subs.add_parser("rays", help="build construction rays")
    s.add_argument("--construction", required=True,
                   help="naive | fixed[:L,R] | linear | perturbed | pattern | pattern-verbatim | loday")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--seed", type=int)
    _common(s)
    s.set_defaults(func=cmd_rays)

    s = subs.add_parser("check", help="certify a ray file against a word")
    s.add_argument("--rays", required=True, help="ray file path")
    s.add_argument("--word", help="word spec")
    s.add_argument("--kn", help="k,n shorthand")
    s.add_argument("--condition1", choices=("auto", "full", "sampled", "skip"),
                   default="auto")
    s.add_argument("--allow-partial", action="store_true")
    _common(s)
    s.set_defaults(func=cmd_check)

    s = subs.add_parser("reproduce", help="regenerate a reference table and diff it")
    s.add_argument("table", choices=TABLE_IDS)
    s.add_argument("--n", help="column range for statistics tables, e.g. 1..5")
    _common(s, out=False)
    s.set_defaults(func=cmd_reproduce)

    s = subs.add_parser("oracle", help="compare brute-force triangulations with subword facets")
    s.add_argument("--kn", required=True, help="k,n")
    _common(s)
    s.set_defaults(func=cmd_oracle)

    s = subs.add_parser("trace", help="emit a fattening move trace")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--k-prefix", type=int, default=0,
                   help="fatten the staircase after k copies of c")
    s.add_argument("--verbose", action="store_true",
                   help="print the word after each move")
    _common(s)
    s.set_defaults(func=cmd_trace)
    return p


def main(argv=None) -> int:
    global _EFFECTIVE_ARGV
    _EFFECTIVE_ARGV = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
