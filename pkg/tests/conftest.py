"""Shared fixtures and helpers for the test suite."""

from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from treepatterns import (
    RootedPattern,
    RootedTree,
    ahu_code,
    build_tree,
    cherry,
    path_pattern_end,
    rooted_edge,
    star_pattern,
)

import naive


def make_pattern(n, edges, root) -> RootedPattern:
    return RootedPattern.from_rooted_tree(RootedTree(build_tree(n, edges), root))


def rooted_shape_reps(m):
    """One (tree, root) representative per rooted shape on m vertices.

    Deduplicates with the library's canonical code; the tests in
    test_isomorphism check that dedup key against brute-force search,
    so nothing here silently trusts it.
    """
    seen = {}
    for t in naive.all_trees(m):
        for root in range(1, m + 1):
            code = ahu_code(t.adjacency, root)
            if code not in seen:
                seen[code] = (t, root)
    return list(seen.values())


@pytest.fixture(scope="session")
def edge_pattern():
    return rooted_edge()


@pytest.fixture(scope="session")
def cherry_pattern():
    return cherry()


@pytest.fixture(scope="session")
def named_patterns():
    """The built-in menagerie keyed by CLI name."""
    return {
        "edge": rooted_edge(),
        "cherry": cherry(),
        "star3": star_pattern(3),
        "star4": star_pattern(4),
        "path3@end": path_pattern_end(3),
        "path4@end": path_pattern_end(4),
    }
