"""Exact moments of pattern counts over uniform random labelled trees.

All values are exact rationals built from integer arithmetic; n**(n - 2)
grows to thousands of digits and is never pushed through floating point.
Writing m = p + 1 for the pattern size and L = p!/aut for the number of
labelled rooted shapes on a fixed vertex set:

  occurrence probability of one fixed tuple   L * (n-m)**(n-m-1) / n**(n-2)
  mean count over all tuples                  n * C(n-1, p) * the above
  second moment (n >= 2m; 0**0 == 1)
      [ n! (n-2m)**(n-2m) / (aut**2 (n-2m)!)
        + n! (n-m)**(n-m-1) / (aut (n-m)!) ] / n**(n-2)

The zero-probability bound is the one-sided Chebyshev consequence
P(count = 0) <= second/mean**2 - 1, and mean/n tends to
exp(-m) / aut, the reported asymptotic slope.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import DomainTooSmallError, ZeroMeanError
from .isomorphism import RootedPattern, labelled_rooted_count


class PairRelation(Enum):
    """How two occurrence tuples relate: disjoint vertex sets, identical
    root and set, or anything else (overlapping but not identical)."""

    ALL_DISTINCT = "all_distinct"
    SAME_ROOT_SAME_SET = "same_root_same_set"
    OTHER = "other"


def _require(n: int, least: int, what: str) -> None:
    if n < least:
        raise DomainTooSmallError(f"{what} needs n >= {least}, got n = {n}")


def occurrence_probability(pat: RootedPattern, n: int, *,
                           duplicate_indices: bool = False) -> Fraction:
    """Probability that one fixed (root, others) tuple is an occurrence.

    A tuple with repeated indices never forms an occurrence, so the value
    is 0 regardless of n; otherwise n >= p + 2 is required.
    """
    if duplicate_indices:
        return Fraction(0)
    m = pat.p + 1
    _require(n, m + 1, "occurrence probability")
    lc = labelled_rooted_count(pat)
    return Fraction(lc * (n - m) ** (n - m - 1), n ** (n - 2))


def mean_pattern_count(pat: RootedPattern, n: int) -> Fraction:
    """Expected number of occurrences in a uniform tree on n vertices."""
    m = pat.p + 1
    _require(n, m + 1, "mean pattern count")
    lc = labelled_rooted_count(pat)
    num = n * math.comb(n - 1, pat.p) * lc * (n - m) ** (n - m - 1)
    return Fraction(num, n ** (n - 2))


def pair_occurrence_probability(pat: RootedPattern, n: int,
                                relation: PairRelation) -> Fraction:
    """Probability that two fixed tuples are both occurrences.

    Disjoint tuples need n >= 2(p + 1), with 0**0 == 1 exactly at the
    boundary.  An identical pair reduces to the single-tuple probability.
    Overlapping-but-different tuples give 0: for n >= 2(p + 1) they can
    never both be occurrences (below that bound hosts are too cramped for
    the exclusion argument, so the zero only applies from there on).
    """
    m = pat.p + 1
    if relation is PairRelation.OTHER:
        return Fraction(0)
    if relation is PairRelation.SAME_ROOT_SAME_SET:
        return occurrence_probability(pat, n)
    _require(n, 2 * m, "disjoint pair probability")
    lc = labelled_rooted_count(pat)
    k = n - 2 * m
    return Fraction(lc * lc * k ** k, n ** (n - 2))


def second_moment_pattern_count(pat: RootedPattern, n: int) -> Fraction:
    """Exact second moment of the occurrence count; needs n >= 2(p + 1)."""
    m = pat.p + 1
    _require(n, 2 * m, "second moment")
    a = pat.aut_root_order
    k = n - 2 * m
    nf = math.factorial(n)
    pairs = Fraction(nf * k ** k, a * a * math.factorial(k))
    diag = Fraction(nf * (n - m) ** (n - m - 1), a * math.factorial(n - m))
    return (pairs + diag) / n ** (n - 2)


def variance_pattern_count(pat: RootedPattern, n: int) -> Fraction:
    mean = mean_pattern_count(pat, n)
    return second_moment_pattern_count(pat, n) - mean * mean


def chebyshev_zero_bound(pat: RootedPattern, n: int) -> Fraction:
    """Upper bound on P(no occurrence): second/mean**2 - 1."""
    mean = mean_pattern_count(pat, n)
    if mean == 0:
        raise ZeroMeanError("zero mean; the ratio bound is undefined")
    return second_moment_pattern_count(pat, n) / (mean * mean) - 1


def asymptotic_slope(pat: RootedPattern) -> float:
    """Limit of mean/n as n grows: exp(-(p + 1)) / aut."""
    return math.exp(-(pat.p + 1)) / pat.aut_root_order


def rational_str(q: Fraction) -> str:
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class MomentReport:
    """Exact moment summary for one pattern at one n (n >= 2(p + 1))."""

    n: int
    p: int
    aut_root_order: int
    mean: Fraction
    second_moment: Fraction
    variance: Fraction
    chebyshev_zero_bound: Fraction
    asymptotic_slope: float

    def to_dict(self) -> dict:
        """Flat record; rationals as 'num/den' strings plus float views."""
        return {
            "n": self.n,
            "p": self.p,
            "aut_root_order": self.aut_root_order,
            "mean": rational_str(self.mean),
            "mean_float": float(self.mean),
            "second_moment": rational_str(self.second_moment),
            "second_moment_float": float(self.second_moment),
            "variance": rational_str(self.variance),
            "variance_float": float(self.variance),
            "chebyshev_zero_bound": rational_str(self.chebyshev_zero_bound),
            "chebyshev_zero_bound_float": float(self.chebyshev_zero_bound),
            "asymptotic_slope": self.asymptotic_slope,
        }


def moment_report(pat: RootedPattern, n: int) -> MomentReport:
    mean = mean_pattern_count(pat, n)
    second = second_moment_pattern_count(pat, n)
    return MomentReport(
        n=n,
        p=pat.p,
        aut_root_order=pat.aut_root_order,
        mean=mean,
        second_moment=second,
        variance=second - mean * mean,
        chebyshev_zero_bound=second / (mean * mean) - 1,
        asymptotic_slope=asymptotic_slope(pat),
    )
