"""Labelled trees on vertices 1..n.

Construction and validation, the Pruefer codec (smallest-labelled-leaf
convention), centers by leaf peeling, rootification, and the plain-text
file formats used by the command line tools.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .errors import (
    DisconnectedError,
    DuplicateEdgeError,
    FormatError,
    SelfLoopError,
    TooSmallError,
    VertexOutOfRangeError,
    WrongEdgeCountError,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Tree:
    """Immutable labelled tree on vertices 1..n.

    Edges are stored as (u, v) pairs with u < v.  Use build_tree to
    construct from untrusted input; the constructor itself does not
    validate.
    """

    n: int
    edges: frozenset[Edge]

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        """Neighbor lists indexed by vertex; index 0 is unused."""
        nbr: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            nbr[u].append(v)
            nbr[v].append(u)
        return tuple(tuple(sorted(x)) for x in nbr)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def __repr__(self) -> str:
        return f"Tree(n={self.n}, edges={sorted(self.edges)})"


@dataclass(frozen=True)
class RootedTree:
    """A tree together with a distinguished root vertex."""

    tree: Tree
    root: int

    def __post_init__(self) -> None:
        if not 1 <= self.root <= self.tree.n:
            raise VertexOutOfRangeError(
                f"root {self.root} not in 1..{self.tree.n}")


@dataclass(frozen=True)
class PruferSequence:
    """A Pruefer sequence for a tree on n labelled vertices.

    The sequence has length n - 2 and entries in 1..n.  n = 2 gives the
    empty sequence.
    """

    n: int
    seq: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 2:
            raise TooSmallError("Pruefer sequences require n >= 2")
        object.__setattr__(self, "seq", tuple(self.seq))
        if len(self.seq) != self.n - 2:
            raise ValueError(
                f"sequence length {len(self.seq)} != n - 2 = {self.n - 2}")
        for s in self.seq:
            if not 1 <= s <= self.n:
                raise VertexOutOfRangeError(f"entry {s} not in 1..{self.n}")


def build_tree(n: int, edges: Iterable[Sequence[int]]) -> Tree:
    """Validate an edge list and return the tree it describes.

    Raises SelfLoopError, VertexOutOfRangeError, DuplicateEdgeError,
    WrongEdgeCountError, or DisconnectedError on bad input.
    """
    if n < 1:
        raise TooSmallError("a tree needs at least one vertex")
    seen: set[Edge] = set()
    norm: list[Edge] = []
    for e in edges:
        u, v = e
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        if not 1 <= u <= n or not 1 <= v <= n:
            raise VertexOutOfRangeError(f"edge ({u}, {v}) not within 1..{n}")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise DuplicateEdgeError(f"edge {key} listed twice")
        seen.add(key)
        norm.append(key)
    if len(norm) != n - 1:
        raise WrongEdgeCountError(
            f"{len(norm)} edges for n={n}; a tree needs {n - 1}")
    t = Tree(n, frozenset(norm))
    adj = t.adjacency
    reached = 1
    visited = bytearray(n + 1)
    visited[1] = 1
    stack = [1]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if not visited[w]:
                visited[w] = 1
                reached += 1
                stack.append(w)
    if reached != n:
        raise DisconnectedError(f"only {reached} of {n} vertices reachable")
    return t


def _decode_edges(seq: Sequence[int], n: int) -> list[Edge]:
    # Linear-time decode.  At each step the smallest-labelled remaining
    # leaf is joined to the next sequence entry; vertex n survives to the
    # final edge.
    deg = [1] * (n + 1)
    for s in seq:
        deg[s] += 1
    edges: list[Edge] = []
    ptr = 1
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for s in seq:
        edges.append((leaf, s) if leaf < s else (s, leaf))
        deg[s] -= 1
        if deg[s] == 1 and s < ptr:
            leaf = s
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    edges.append((leaf, n))
    return edges


def prufer_decode(s: PruferSequence) -> Tree:
    """Decode a Pruefer sequence into the unique tree it encodes."""
    return Tree(s.n, frozenset(_decode_edges(s.seq, s.n)))


def prufer_encode(t: Tree) -> PruferSequence:
    """Encode a tree by repeatedly deleting the smallest-labelled leaf.

    Each deletion appends the leaf's neighbor to the sequence; encoding
    stops when two vertices remain.  Inverse of prufer_decode.
    """
    n = t.n
    if n < 2:
        raise TooSmallError("Pruefer encoding requires n >= 2")
    adj = t.adjacency
    deg = [0] + [len(adj[v]) for v in range(1, n + 1)]
    removed = bytearray(n + 1)
    out: list[int] = []
    ptr = 1
    while deg[ptr] != 1:
        ptr += 1
    leaf = ptr
    for _ in range(n - 2):
        y = 0
        for w in adj[leaf]:
            if not removed[w]:
                y = w
                break
        out.append(y)
        removed[leaf] = 1
        deg[y] -= 1
        if deg[y] == 1 and y < ptr:
            leaf = y
        else:
            ptr += 1
            while deg[ptr] != 1:
                ptr += 1
            leaf = ptr
    return PruferSequence(n, tuple(out))


@dataclass(frozen=True)
class Center:
    """Center of a tree: a single vertex or a pair of adjacent vertices."""

    vertices: tuple[int, ...]

    @property
    def is_edge(self) -> bool:
        return len(self.vertices) == 2

    @property
    def vertex(self) -> int:
        if self.is_edge:
            raise ValueError("center is an edge, not a single vertex")
        return self.vertices[0]


def tree_center(t: Tree) -> Center:
    """Center by leaf peeling: strip all leaves per round until <= 2 remain."""
    n = t.n
    if n == 1:
        return Center((1,))
    adj = t.adjacency
    deg = [0] + [len(adj[v]) for v in range(1, n + 1)]
    removed = bytearray(n + 1)
    layer = [v for v in range(1, n + 1) if deg[v] <= 1]
    alive = n
    while alive > 2:
        for v in layer:
            removed[v] = 1
        alive -= len(layer)
        nxt: list[int] = []
        for v in layer:
            for w in adj[v]:
                if not removed[w]:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    survivors = tuple(v for v in range(1, n + 1) if not removed[v])
    return Center(survivors)


def rootify(t: Tree) -> RootedTree:
    """Root a tree canonically at its center.

    A vertex center becomes the root directly.  An edge center {u, w} is
    subdivided: the new vertex n + 1 replaces the edge and becomes the
    root, so the result always has a vertex center equal to its root.
    """
    c = tree_center(t)
    if not c.is_edge:
        return RootedTree(t, c.vertex)
    u, w = c.vertices
    m = t.n + 1
    cut = (u, w) if u < w else (w, u)
    edges = set(t.edges)
    edges.remove(cut)
    edges.add((u, m))
    edges.add((w, m))
    return RootedTree(Tree(m, frozenset(edges)), m)


def _data_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line)
    return out


def _parse_header(line: str) -> int:
    parts = line.split()
    if len(parts) != 2 or parts[0] != "n":
        raise FormatError(f"expected header 'n <int>', got {line!r}")
    try:
        return int(parts[1])
    except ValueError:
        raise FormatError(f"bad vertex count {parts[1]!r}") from None


def tree_from_text(text: str) -> Tree:
    """Parse the tree format: 'n <int>' then n - 1 lines 'u v'.

    Blank lines and lines starting with '#' are ignored.
    """
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty tree input")
    n = _parse_header(lines[0])
    edges = []
    for line in lines[1:]:
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"expected edge line 'u v', got {line!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise FormatError(f"bad edge line {line!r}") from None
    return build_tree(n, edges)


def tree_to_text(t: Tree) -> str:
    lines = [f"n {t.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(t.edges))
    return "\n".join(lines) + "\n"


def prufer_from_text(text: str) -> PruferSequence:
    """Parse the sequence format: 'n <int>' then the space-separated entries."""
    lines = _data_lines(text)
    if not lines:
        raise FormatError("empty sequence input")
    n = _parse_header(lines[0])
    toks: list[int] = []
    for line in lines[1:]:
        for tok in line.split():
            try:
                toks.append(int(tok))
            except ValueError:
                raise FormatError(f"bad sequence entry {tok!r}") from None
    try:
        return PruferSequence(n, tuple(toks))
    except ValueError as exc:
        raise FormatError(str(exc)) from None


def prufer_to_text(s: PruferSequence) -> str:
    head = f"n {s.n}\n"
    if not s.seq:
        return head
    return head + " ".join(str(x) for x in s.seq) + "\n"
