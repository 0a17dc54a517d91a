"""Command line front end.

Exit codes: 0 success, 1 usage error, 2 invalid input (file, format, or
out-of-domain request), 3 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import TreePatternError
from .isomorphism import (
    RootedPattern,
    aut_rooted,
    aut_unrooted,
    pattern_from_text,
)
from .moments import moment_report, rational_str
from .montecarlo import (
    convergence_csv,
    convergence_experiment,
    estimate_pattern_stats,
    sample_tree,
    stream_for,
)
from .oracle import DEFAULT_CAP, verify_labelled_count, verify_moments
from .patterns import (
    BUILTIN_PATTERN_HELP,
    find_patterns,
    is_builtin_pattern_name,
    pattern_from_name,
)
from .trees import (
    RootedTree,
    prufer_decode,
    prufer_encode,
    prufer_from_text,
    prufer_to_text,
    rootify,
    tree_center,
    tree_from_text,
    tree_to_text,
)

USAGE_ERROR = 1
INPUT_ERROR = 2
VERIFY_FAILURE = 3


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage problems; this tool reserves 2 for bad
    # input files, so remap.
    def error(self, message):
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write_text(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
        return
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)


def _load_tree(path: str):
    return tree_from_text(_read_text(path))


def _load_pattern(source: str) -> RootedPattern:
    if is_builtin_pattern_name(source):
        return pattern_from_name(source)
    return pattern_from_text(_read_text(source))


def _cmd_gen(args) -> int:
    t = sample_tree(args.n, stream_for(args.seed, 0))
    _write_text(args.out, tree_to_text(t))
    return 0


def _cmd_encode(args) -> int:
    t = _load_tree(args.file)
    _write_text(args.out, prufer_to_text(prufer_encode(t)))
    return 0


def _cmd_decode(args) -> int:
    s = prufer_from_text(_read_text(args.file))
    _write_text(args.out, tree_to_text(prufer_decode(s)))
    return 0


def _cmd_count(args) -> int:
    t = _load_tree(args.tree)
    pat = _load_pattern(args.pattern)
    occs = find_patterns(t, pat)
    if args.json:
        rec = {
            "count": len(occs),
            "occurrences": [{"root": o.root, "others": sorted(o.others)}
                            for o in occs],
        }
        _write_text(args.out, json.dumps(rec, indent=2) + "\n")
        return 0
    lines = [str(len(occs))]
    lines.extend(f"{o.root}: {' '.join(str(v) for v in sorted(o.others))}"
                 for o in occs)
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_aut(args) -> int:
    t = _load_tree(args.tree)
    if args.root is not None:
        value = aut_rooted(RootedTree(t, args.root))
    else:
        value = aut_unrooted(t)
    _write_text(args.out, f"{value}\n")
    return 0


def _cmd_center(args) -> int:
    c = tree_center(_load_tree(args.tree))
    if c.is_edge:
        _write_text(args.out, f"edge {c.vertices[0]} {c.vertices[1]}\n")
    else:
        _write_text(args.out, f"vertex {c.vertex}\n")
    return 0


def _cmd_rootify(args) -> int:
    rt = rootify(_load_tree(args.tree))
    _write_text(args.out, tree_to_text(rt.tree) + f"root {rt.root}\n")
    return 0


def _cmd_moments(args) -> int:
    pat = _load_pattern(args.pattern)
    rep = moment_report(pat, args.n)
    if args.json:
        _write_text(args.out, json.dumps(rep.to_dict(), indent=2) + "\n")
        return 0
    d = rep.to_dict()
    lines = [
        f"n                    {rep.n}",
        f"p                    {rep.p}",
        f"aut_root_order       {rep.aut_root_order}",
        f"mean                 {d['mean']} ({d['mean_float']:.6g})",
        f"second_moment        {d['second_moment']} "
        f"({d['second_moment_float']:.6g})",
        f"variance             {d['variance']} ({d['variance_float']:.6g})",
        f"chebyshev_zero_bound {d['chebyshev_zero_bound']} "
        f"({d['chebyshev_zero_bound_float']:.6g})",
        f"asymptotic_slope     {rep.asymptotic_slope:.10g}",
    ]
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _fmt_opt(q) -> str:
    return rational_str(q) if q is not None else "-"


def _cmd_verify(args) -> int:
    pat = _load_pattern(args.pattern)
    if args.n is not None:
        ns = [args.n]
    else:
        n_max = args.n_max if args.n_max is not None else pat.p + 2
        ns = list(range(pat.p + 2, n_max + 1))
        if not ns:
            raise TreePatternError(
                f"--n-max {n_max} is below the first verifiable n = "
                f"{pat.p + 2}")
    lc = verify_labelled_count(pat)
    results = [verify_moments(pat, n, cap=args.cap, workers=args.workers)
               for n in ns]
    passed = lc.equal and all(r.all_passed for r in results)
    if args.json:
        rec = {
            "pattern": args.pattern,
            "p": pat.p,
            "aut_root_order": pat.aut_root_order,
            "labelled_count": {
                "enumerated": lc.enumerated,
                "formula": lc.formula,
                "equal": lc.equal,
            },
            "moments": [
                {
                    "n": r.n,
                    "checks": [
                        {
                            "name": c.name,
                            "oracle": _fmt_opt(c.oracle_value),
                            "formula": _fmt_opt(c.formula_value),
                            "status": c.status,
                            "note": c.note,
                        }
                        for c in r.checks
                    ],
                }
                for r in results
            ],
            "passed": passed,
        }
        _write_text(args.out, json.dumps(rec, indent=2) + "\n")
        return 0 if passed else VERIFY_FAILURE
    lines = [
        f"labelled_count           enumerated={lc.enumerated} "
        f"formula={lc.formula} {'ok' if lc.equal else 'FAIL'}"
    ]
    for r in results:
        for c in r.checks:
            if c.status == "skipped":
                lines.append(f"n={r.n:<3} {c.name:<24} skipped ({c.note})")
            else:
                mark = "ok" if c.status == "ok" else "FAIL"
                lines.append(
                    f"n={r.n:<3} {c.name:<24} oracle={_fmt_opt(c.oracle_value)} "
                    f"formula={_fmt_opt(c.formula_value)} {mark}")
    lines.append("all checks passed" if passed else "VERIFICATION FAILED")
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0 if passed else VERIFY_FAILURE


def _cmd_mc(args) -> int:
    pat = _load_pattern(args.pattern)
    est = estimate_pattern_stats(pat, args.n, args.samples, args.seed,
                                 args.workers)
    if args.json:
        _write_text(args.out, json.dumps(est.to_dict(), indent=2) + "\n")
        return 0
    lines = [
        f"n          {est.n}",
        f"samples    {est.samples}",
        f"seed       {est.seed}",
        f"hits_ge1   {est.hits_ge1}",
        f"p_hat      {est.p_hat:.6g}  (95% CI {est.p_ci_low:.6g}.."
        f"{est.p_ci_high:.6g})",
        f"mean_hat   {est.mean_hat:.6g}  (stderr {est.stderr_mean:.3g})",
    ]
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def _cmd_converge(args) -> int:
    pat = _load_pattern(args.pattern)
    try:
        n_list = [int(tok) for tok in args.n_list.split(",") if tok]
    except ValueError:
        raise TreePatternError(f"bad --n-list {args.n_list!r}") from None
    rows = convergence_experiment(pat, n_list, args.samples, args.seed,
                                  args.workers)
    if args.csv:
        _write_text(args.out, convergence_csv(rows))
        return 0
    lines = [f"{'n':>6} {'p_hat':>10} {'ci_low':>10} {'ci_high':>10} "
             f"{'mean_hat':>10} {'exact_mean':>12} {'cheb_bound':>12}"]
    for row in rows:
        e = row.estimate
        exact = (f"{float(row.exact_mean):.6g}"
                 if row.exact_mean is not None else "-")
        bound = (f"{float(row.cheb_bound):.6g}"
                 if row.cheb_bound is not None else "-")
        lines.append(f"{e.n:>6} {e.p_hat:>10.6f} {e.p_ci_low:>10.6f} "
                     f"{e.p_ci_high:>10.6f} {e.mean_hat:>10.6f} "
                     f"{exact:>12} {bound:>12}")
    _write_text(args.out, "\n".join(lines) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="treepatterns",
        description="Pattern statistics of uniform random labelled trees.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text)
        sp.set_defaults(func=func)
        sp.add_argument("--out", default=None, metavar="FILE",
                        help="write output here instead of stdout")
        return sp

    sp = add("gen", _cmd_gen, "sample a uniform random tree")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)

    sp = add("encode", _cmd_encode, "tree file to Pruefer sequence")
    sp.add_argument("file", nargs="?", default="-",
                    help="tree file, '-' for stdin")

    sp = add("decode", _cmd_decode, "Pruefer sequence to tree file")
    sp.add_argument("file", nargs="?", default="-",
                    help="sequence file, '-' for stdin")

    sp = add("count", _cmd_count, "count pattern occurrences in a tree")
    sp.add_argument("--tree", required=True, metavar="FILE")
    sp.add_argument("--pattern", required=True,
                    metavar="FILE|NAME", help=BUILTIN_PATTERN_HELP)
    sp.add_argument("--json", action="store_true")

    sp = add("aut", _cmd_aut, "automorphism group order of a tree")
    sp.add_argument("--tree", required=True, metavar="FILE")
    sp.add_argument("--root", type=int, default=None,
                    help="count only root-fixing automorphisms")

    sp = add("center", _cmd_center, "center vertex or edge of a tree")
    sp.add_argument("--tree", required=True, metavar="FILE")

    sp = add("rootify", _cmd_rootify, "root a tree at its center")
    sp.add_argument("--tree", required=True, metavar="FILE")

    sp = add("moments", _cmd_moments, "exact moment report for a pattern")
    sp.add_argument("--pattern", required=True, metavar="FILE|NAME")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--json", action="store_true")

    sp = add("verify", _cmd_verify,
             "compare formulas against exhaustive enumeration")
    sp.add_argument("--pattern", required=True, metavar="FILE|NAME")
    sp.add_argument("--n", type=int, default=None,
                    help="verify a single n")
    sp.add_argument("--n-max", type=int, default=None,
                    help="verify every n from p + 2 up to this")
    sp.add_argument("--cap", type=int, default=DEFAULT_CAP,
                    help="enumeration cap (hard limit 10)")
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--json", action="store_true")

    sp = add("mc", _cmd_mc, "Monte Carlo estimate for one n")
    sp.add_argument("--pattern", required=True, metavar="FILE|NAME")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--json", action="store_true")

    sp = add("converge", _cmd_converge,
             "Monte Carlo containment across several n")
    sp.add_argument("--pattern", required=True, metavar="FILE|NAME")
    sp.add_argument("--n-list", required=True, metavar="A,B,C")
    sp.add_argument("--samples", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--workers", type=int, default=1)
    sp.add_argument("--csv", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (TreePatternError, OSError) as exc:
        print(f"treepatterns: {exc}", file=sys.stderr)
        return INPUT_ERROR


def run() -> None:
    sys.exit(main())
