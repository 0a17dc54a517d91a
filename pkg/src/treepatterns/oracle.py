"""Exhaustive ground truth for small n.

Every labelled tree on n vertices is visited exactly once by decoding all
n**(n-2) Pruefer sequences.  On top of that sweep sit the exact occurrence
count distribution, a check of the labelled rooted count p!/aut against
direct enumeration, and per-formula comparisons of the exact moments with
exhaustive averages.  Enumeration refuses to run past a small cap: the
tree count explodes, and the cap keeps mistakes cheap.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Callable, Iterator, Sequence

from .errors import CapExceededError, TooSmallError
from .isomorphism import RootedPattern, ahu_code, labelled_rooted_count
from .moments import (
    PairRelation,
    chebyshev_zero_bound,
    mean_pattern_count,
    occurrence_probability,
    pair_occurrence_probability,
    second_moment_pattern_count,
)
from .patterns import _count_multi, _is_occurrence
from .trees import Tree, _decode_edges

DEFAULT_CAP = 9
HARD_CAP = 10


def _check_cap(n: int, cap: int) -> None:
    if n < 2:
        raise TooSmallError("enumeration needs n >= 2")
    if n > min(cap, HARD_CAP):
        raise CapExceededError(
            f"n = {n} exceeds the enumeration cap {min(cap, HARD_CAP)} "
            f"({n}**{n - 2} = {n ** (n - 2)} trees)")


def _sequences(n: int, first: Sequence[int] | None = None) -> Iterator[tuple[int, ...]]:
    # Lexicographic order; restricting the first entry partitions the space.
    if n == 2:
        if first is None:
            yield ()
        return
    heads = range(1, n + 1) if first is None else first
    for h in heads:
        for tail in product(range(1, n + 1), repeat=n - 3):
            yield (h, *tail)


def iter_trees(n: int, cap: int = DEFAULT_CAP) -> Iterator[Tree]:
    """Yield every labelled tree on n vertices exactly once."""
    _check_cap(n, cap)
    for seq in _sequences(n):
        yield Tree(n, frozenset(_decode_edges(seq, n)))


def enumerate_trees(n: int, visitor: Callable[[Tree], None],
                    cap: int = DEFAULT_CAP) -> int:
    """Apply visitor to every labelled tree on n vertices; return the count."""
    count = 0
    for t in iter_trees(n, cap):
        visitor(t)
        count += 1
    return count


def _adjacency(seq: tuple[int, ...], n: int) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in _decode_edges(seq, n):
        adj[u].append(v)
        adj[v].append(u)
    return adj


@dataclass(frozen=True, eq=False)
class ExactDistribution:
    """Exact distribution of the occurrence count over all labelled trees."""

    n: int
    pattern: RootedPattern
    histogram: dict[int, int]
    total: int

    def __post_init__(self) -> None:
        if sum(self.histogram.values()) != self.total:
            raise RuntimeError("histogram does not cover every tree")

    @property
    def p_zero(self) -> Fraction:
        return Fraction(self.histogram.get(0, 0), self.total)

    @property
    def p_at_least_one(self) -> Fraction:
        return 1 - self.p_zero

    @property
    def mean(self) -> Fraction:
        return Fraction(sum(k * c for k, c in self.histogram.items()),
                        self.total)

    @property
    def second_moment(self) -> Fraction:
        return Fraction(sum(k * k * c for k, c in self.histogram.items()),
                        self.total)


def _distribution_chunk(args) -> list[dict[int, int]]:
    n, targets, first = args
    hists: list[dict[int, int]] = [{} for _ in targets]
    for seq in _sequences(n, first):
        adj = _adjacency(seq, n)
        for h, c in zip(hists, _count_multi(n, adj, targets)):
            h[c] = h.get(c, 0) + 1
    return hists


def _chunk_heads(n: int, workers: int) -> list[list[int]]:
    heads = list(range(1, n + 1))
    k = min(workers, n)
    return [heads[i::k] for i in range(k)]


def exact_pattern_distributions(n: int, pats: Sequence[RootedPattern],
                                cap: int = DEFAULT_CAP,
                                workers: int = 1) -> list[ExactDistribution]:
    """Exact count distributions for several patterns in one sweep."""
    _check_cap(n, cap)
    targets = [(pat.p + 1, pat.canonical.code) for pat in pats]
    if workers <= 1 or n == 2:
        hists = _distribution_chunk((n, targets, None))
    else:
        jobs = [(n, targets, heads) for heads in _chunk_heads(n, workers)]
        hists = [{} for _ in targets]
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            for part in pool.map(_distribution_chunk, jobs):
                for h, q in zip(hists, part):
                    for k, c in q.items():
                        h[k] = h.get(k, 0) + c
    total = n ** (n - 2)
    return [ExactDistribution(n, pat, h, total)
            for pat, h in zip(pats, hists)]


def exact_pattern_distribution(n: int, pat: RootedPattern,
                               cap: int = DEFAULT_CAP,
                               workers: int = 1) -> ExactDistribution:
    """Exact distribution of the occurrence count of pat over all trees."""
    return exact_pattern_distributions(n, [pat], cap, workers)[0]


@dataclass(frozen=True)
class LabelledCountReport:
    """Enumerated labelled rooted trees matching a shape vs the formula."""

    pattern: RootedPattern
    enumerated: int
    formula: int

    @property
    def equal(self) -> bool:
        return self.enumerated == self.formula


def verify_labelled_count(pat: RootedPattern) -> LabelledCountReport:
    """Count labelled trees on p + 1 fixed labels that, rooted at label 1,
    match the pattern shape; compare with p!/aut."""
    m = pat.p + 1
    if m > 7:
        raise CapExceededError(f"pattern size {m} exceeds the rooted "
                               "enumeration cap 7")
    code = pat.canonical.code
    hits = 0
    for seq in _sequences(m):
        adj = _adjacency(seq, m)
        if ahu_code(adj, 1) == code:
            hits += 1
    return LabelledCountReport(pat, hits, labelled_rooted_count(pat))


_OK = "ok"
_FAIL = "fail"
_SKIP = "skipped"


@dataclass(frozen=True)
class FormulaCheck:
    """One exhaustive-vs-formula comparison."""

    name: str
    oracle_value: Fraction | None
    formula_value: Fraction | None
    status: str
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.status != _FAIL


@dataclass(frozen=True)
class MomentVerification:
    """All formula checks for one pattern at one n."""

    pattern: RootedPattern
    n: int
    checks: tuple[FormulaCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _fixed_tuples(p: int) -> dict[str, tuple[int, frozenset[int]]]:
    # Index tuples used for the fixed-tuple averages.  base is the tuple
    # (1; 2..p+1); disjoint shifts it past p+1; the two overlap variants
    # share indices with base without equalling it.
    base = (1, frozenset(range(2, p + 2)))
    return {
        "base": base,
        "disjoint": (p + 2, frozenset(range(p + 3, 2 * p + 3))),
        "overlap_same_root": (1, frozenset(range(3, p + 3))),
        "overlap_diff_root": (2, frozenset(range(3, p + 3))),
    }


def _moment_chunk(args) -> tuple[int, ...]:
    n, p, code, first = args
    tup = _fixed_tuples(p)
    r1, o1 = tup["base"]
    rd, od = tup["disjoint"]
    rs, os_ = tup["overlap_same_root"]
    ro, oo = tup["overlap_diff_root"]
    pair_ok = n >= 2 * (p + 1)
    targets = [(p + 1, code)]
    g_base = g_disjoint = g_same = g_diff = 0
    sum_c = sum_c2 = zeros = 0
    for seq in _sequences(n, first):
        adj = _adjacency(seq, n)
        b = _is_occurrence(adj, r1, o1, p, code)
        if b:
            g_base += 1
            if pair_ok and _is_occurrence(adj, rd, od, p, code):
                g_disjoint += 1
            if _is_occurrence(adj, rs, os_, p, code):
                g_same += 1
            if _is_occurrence(adj, ro, oo, p, code):
                g_diff += 1
        c = _count_multi(n, adj, targets)[0]
        sum_c += c
        sum_c2 += c * c
        if c == 0:
            zeros += 1
    return g_base, g_disjoint, g_same, g_diff, sum_c, sum_c2, zeros


def verify_moments(pat: RootedPattern, n: int, cap: int = DEFAULT_CAP,
                   workers: int = 1) -> MomentVerification:
    """Compare each exact formula against exhaustive enumeration at n.

    Checks outside their domain (the pair and second-moment formulas need
    n >= 2(p + 1)) are reported as skipped rather than failed.
    """
    _check_cap(n, cap)
    p = pat.p
    if n < p + 2:
        raise TooSmallError(
            f"verification needs n >= p + 2 = {p + 2}, got n = {n}")
    code = pat.canonical.code
    if workers <= 1 or n == 2:
        acc = _moment_chunk((n, p, code, None))
    else:
        jobs = [(n, p, code, heads) for heads in _chunk_heads(n, workers)]
        acc = (0,) * 7
        with ProcessPoolExecutor(max_workers=len(jobs)) as pool:
            for part in pool.map(_moment_chunk, jobs):
                acc = tuple(a + b for a, b in zip(acc, part))
    g_base, g_disjoint, g_same, g_diff, sum_c, sum_c2, zeros = acc
    total = n ** (n - 2)
    pair_ok = n >= 2 * (p + 1)
    checks: list[FormulaCheck] = []

    def compare(name: str, oracle: Fraction, formula: Fraction,
                note: str = "") -> None:
        status = _OK if oracle == formula else _FAIL
        checks.append(FormulaCheck(name, oracle, formula, status, note))

    def skip(name: str) -> None:
        checks.append(FormulaCheck(name, None, None, _SKIP,
                                   f"needs n >= {2 * (p + 1)}"))

    compare("tuple_probability", Fraction(g_base, total),
            occurrence_probability(pat, n))
    compare("mean_count", Fraction(sum_c, total), mean_pattern_count(pat, n))
    if pair_ok:
        compare("pair_disjoint", Fraction(g_disjoint, total),
                pair_occurrence_probability(pat, n, PairRelation.ALL_DISTINCT))
    else:
        skip("pair_disjoint")
    compare("pair_same_tuple", Fraction(g_base, total),
            pair_occurrence_probability(pat, n,
                                        PairRelation.SAME_ROOT_SAME_SET))
    if pair_ok:
        # Overlapping-but-different tuples exclude each other only from
        # n = 2(p + 1) on; below that a small host can satisfy both (for
        # the cherry at n = 4, the star does), so the checks would be
        # vacuously wrong there.
        compare("pair_overlap_same_root", Fraction(g_same, total),
                pair_occurrence_probability(pat, n, PairRelation.OTHER))
        compare("pair_overlap_diff_root", Fraction(g_diff, total),
                pair_occurrence_probability(pat, n, PairRelation.OTHER))
    else:
        skip("pair_overlap_same_root")
        skip("pair_overlap_diff_root")
    if pair_ok:
        compare("second_moment", Fraction(sum_c2, total),
                second_moment_pattern_count(pat, n))
        p_zero = Fraction(zeros, total)
        bound = chebyshev_zero_bound(pat, n)
        status = _OK if p_zero <= bound else _FAIL
        checks.append(FormulaCheck("zero_probability_bound", p_zero, bound,
                                   status, "bound must cover the exact value"))
    else:
        skip("second_moment")
        skip("zero_probability_bound")
    return MomentVerification(pat, n, tuple(checks))
