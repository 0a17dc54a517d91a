"""Canonical forms, isomorphism tests, and automorphism counts for rooted trees.

Canonical codes follow the classic bottom-up scheme: a leaf is "()" and an
internal vertex wraps the lexicographically sorted codes of its children.
Two rooted trees are isomorphic exactly when their codes coincide, and the
same traversal yields the order of the root-preserving automorphism group.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial

from .errors import FormatError, TooSmallError
from .trees import RootedTree, Tree, _data_lines, _parse_header, build_tree, tree_center, tree_to_text


def _code_and_aut(adjacency, root: int, blocked: int | None = None) -> tuple[str, int]:
    # Iterative post-order so deep paths do not hit the recursion limit.
    # blocked (if given) is a neighbor of root that the traversal must not
    # cross; used to code one side of a cut edge.
    parent: dict[int, int | None] = {root: blocked}
    order = [root]
    children: dict[int, list[int]] = {}
    stack = [root]
    while stack:
        v = stack.pop()
        kids = []
        pv = parent[v]
        for w in adjacency[v]:
            if w != pv:
                parent[w] = v
                kids.append(w)
                stack.append(w)
        if kids:
            children[v] = kids
            order.extend(kids)
    code: dict[int, str] = {}
    aut: dict[int, int] = {}
    for v in reversed(order):
        kids = children.get(v)
        if not kids:
            code[v] = "()"
            aut[v] = 1
            continue
        ks = sorted(code[c] for c in kids)
        a = 1
        for c in kids:
            a *= aut[c]
        run = 1
        for i in range(1, len(ks)):
            if ks[i] == ks[i - 1]:
                run += 1
                a *= run
            else:
                run = 1
        code[v] = "(" + "".join(ks) + ")"
        aut[v] = a
    return code[root], aut[root]


def ahu_code(adjacency, root: int, blocked: int | None = None) -> str:
    """Canonical code of the subtree reachable from root.

    adjacency may be any mapping or sequence giving neighbor lists; with
    blocked set, the edge root-blocked is not crossed.
    """
    return _code_and_aut(adjacency, root, blocked)[0]


@dataclass(frozen=True)
class CanonicalForm:
    """Canonical code string of a rooted tree."""

    code: str


def canonical_form_rooted(rt: RootedTree) -> CanonicalForm:
    return CanonicalForm(ahu_code(rt.tree.adjacency, rt.root))


def rooted_isomorphic(a: RootedTree, b: RootedTree) -> bool:
    """True when a root-preserving isomorphism exists."""
    if a.tree.n != b.tree.n:
        return False
    return canonical_form_rooted(a) == canonical_form_rooted(b)


def aut_rooted(rt: RootedTree) -> int:
    """Order of the automorphism group fixing the root."""
    return _code_and_aut(rt.tree.adjacency, rt.root)[1]


def aut_unrooted(t: Tree) -> int:
    """Order of the full automorphism group of an unlabelled tree.

    Every automorphism preserves the center.  A vertex center reduces to
    the rooted count there; an edge center multiplies the rooted counts of
    the two halves, doubled when the halves are isomorphic (the edge may
    then be flipped).
    """
    c = tree_center(t)
    adj = t.adjacency
    if not c.is_edge:
        return _code_and_aut(adj, c.vertex)[1]
    u, w = c.vertices
    cu, au = _code_and_aut(adj, u, blocked=w)
    cw, aw = _code_and_aut(adj, w, blocked=u)
    return au * aw * (2 if cu == cw else 1)


@dataclass(frozen=True)
class RootedPattern:
    """A rooted tree shape used as an attachment pattern.

    p is the number of non-root vertices (at least 1); aut_root_order and
    the canonical code are computed once at construction.
    """

    shape: RootedTree
    p: int
    aut_root_order: int
    canonical: CanonicalForm

    @classmethod
    def from_rooted_tree(cls, rt: RootedTree) -> "RootedPattern":
        p = rt.tree.n - 1
        if p < 1:
            raise TooSmallError("a pattern needs at least one non-root vertex")
        code, aut = _code_and_aut(rt.tree.adjacency, rt.root)
        return cls(rt, p, aut, CanonicalForm(code))


def labelled_rooted_count(pat: RootedPattern) -> int:
    """Number of rooted labelled trees on p + 1 fixed labels, with a fixed
    root label, that are rooted-isomorphic to the pattern: p! / aut."""
    q, r = divmod(factorial(pat.p), pat.aut_root_order)
    if r:
        raise RuntimeError(
            f"automorphism order {pat.aut_root_order} does not divide "
            f"{pat.p}! (internal inconsistency)")
    return q


def pattern_from_text(text: str) -> RootedPattern:
    """Parse a pattern file: the tree format followed by one line 'root <r>'."""
    lines = _data_lines(text)
    if len(lines) < 2:
        raise FormatError("pattern input needs a tree and a root line")
    n = _parse_header(lines[0])
    if len(lines) != n + 1:
        raise FormatError(
            f"expected {n - 1} edge lines plus a root line for n={n}")
    edges = []
    for line in lines[1:-1]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected edge line 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"bad edge line {line!r}") from None
    parts = lines[-1].split()
    if len(parts) != 2 or parts[0] != "root":
        raise FormatError(f"expected final line 'root <r>', got {lines[-1]!r}")
    try:
        root = int(parts[1])
    except ValueError:
        raise FormatError(f"bad root {parts[1]!r}") from None
    tree = build_tree(n, edges)
    return RootedPattern.from_rooted_tree(RootedTree(tree, root))


def pattern_to_text(pat: RootedPattern) -> str:
    return tree_to_text(pat.shape.tree) + f"root {pat.shape.root}\n"
