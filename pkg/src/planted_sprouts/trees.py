"""Noncrossing trees and their correspondence with game endstates.

A complete game's arc labels form a noncrossing spanning tree on the circle
vertices.  This module holds the tree type, the primary-edge machinery that
drives the correspondence in both directions, an independent enumerator of
noncrossing trees, and the closed-form endstate count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .game import PlaySequence, endstate_signature


def _normalize_edges(edges):
    out = set()
    for e in edges:
        a, b = e
        if a == b:
            raise ValueError(f"edge {e!r} is a loop")
        out.add((min(a, b), max(a, b)))
    return frozenset(out)


def _crosses(e, f) -> bool:
    a, b = e
    c, d = f
    return (a < c < b < d) or (c < a < d < b)


def _adjacency(n, edges):
    nbrs = {v: set() for v in range(1, n + 1)}
    for i, j in edges:
        nbrs[i].add(j)
        nbrs[j].add(i)
    return nbrs


def is_noncrossing_tree(n: int, edges) -> bool:
    """True iff the edges form a spanning tree of 1..n with no two chords
    interleaving cyclically."""
    if n < 1:
        return False
    edges = list(edges)
    try:
        norm = _normalize_edges(edges)
    except (ValueError, TypeError):
        return False
    if len(norm) != n - 1 or len(norm) != len(edges):
        return False
    if not all(1 <= i < j <= n for i, j in norm):
        return False
    norm = sorted(norm)
    for x in range(len(norm)):
        for y in range(x + 1, len(norm)):
            if _crosses(norm[x], norm[y]):
                return False
    # connected + n-1 edges => tree
    comp = {v: v for v in range(1, n + 1)}

    def find(v):
        while comp[v] != v:
            comp[v] = comp[comp[v]]
            v = comp[v]
        return v

    for i, j in norm:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        comp[ri] = rj
    return True


@dataclass(frozen=True)
class NoncrossingTree:
    n: int
    edges: frozenset  # of (i, j) tuples with i < j

    def __post_init__(self):
        if not is_noncrossing_tree(self.n, self.edges):
            raise ValueError(
                f"not a noncrossing tree on {self.n} vertices: {sorted(self.edges)}"
            )

    @classmethod
    def from_edges(cls, n: int, edges) -> "NoncrossingTree":
        return cls(n=n, edges=_normalize_edges(edges))


def endstate_to_tree(state) -> NoncrossingTree:
    """The noncrossing tree whose edges are a complete game's arc labels."""
    signature = endstate_signature(state)
    return NoncrossingTree.from_edges(state.n, (tuple(sorted(arc)) for arc in signature))


def _primary_edges_raw(n, edges):
    """Primary edges of a (noncrossing) tree given as normalized (i, j) pairs.

    An edge {i, j}, i < j, is primary iff i has no neighbor in the clockwise
    interval from j back around to i, and j has no neighbor strictly between
    i and j.  Equivalently: all other neighbors of each endpoint lie on its
    own side of the chord.
    """
    nbrs = _adjacency(n, edges)
    out = set()
    for i, j in edges:
        inside = set(range(i + 1, j))
        outside = set(range(j + 1, n + 1)) | set(range(1, i))
        if not (nbrs[i] & outside) and not (nbrs[j] & inside):
            out.add((i, j))
    return out


def primary_edges(tree: NoncrossingTree) -> frozenset:
    return frozenset(_primary_edges_raw(tree.n, tree.edges))


def _cw_pivot_target(n, nbrs, fixed, moving):
    """Rotate `moving` clockwise around `fixed`; return the edge reached at the
    first tree-neighbor of `fixed`, or None if the scan returns to `fixed`."""
    w = moving % n + 1
    while w != fixed:
        if w in nbrs[fixed]:
            return (min(fixed, w), max(fixed, w))
        w = w % n + 1
    return None


def is_pivotable_clockwise(tree: NoncrossingTree, edge) -> bool:
    """True iff either endpoint of the edge can swing clockwise onto another
    tree edge.  Edges that cannot are exactly the primary ones."""
    e = (min(edge), max(edge))
    if e not in tree.edges:
        raise ValueError(f"edge {e} is not in the tree")
    nbrs = _adjacency(tree.n, tree.edges)
    u, v = e
    return (
        _cw_pivot_target(tree.n, nbrs, u, v) is not None
        or _cw_pivot_target(tree.n, nbrs, v, u) is not None
    )


def _ccw_first_neighbor(n, nbrs, v):
    w = (v - 2) % n + 1
    while w != v:
        if w in nbrs[v]:
            return w
        w = (w - 2) % n + 1
    raise ValueError(f"vertex {v} has no neighbors")


def find_primary_edge(tree: NoncrossingTree, start: int = 1):
    """Walk v -> first counterclockwise neighbor of v until the step maps back,
    which happens exactly at a primary edge."""
    if tree.n < 2:
        raise ValueError("a tree with fewer than 2 vertices has no edges")
    if not 1 <= start <= tree.n:
        raise ValueError(f"start vertex must be in 1..{tree.n}")
    nbrs = _adjacency(tree.n, tree.edges)
    v = start
    for _ in range(2 * (tree.n - 1)):
        w = _ccw_first_neighbor(tree.n, nbrs, v)
        if _ccw_first_neighbor(tree.n, nbrs, w) == v:
            return (min(v, w), max(v, w))
        v = w
    raise RuntimeError("neighbor walk failed to settle on a primary edge")


def _relative_primary_edges(n, vertices, edges):
    """Primary edges of a subtree relative to a subgame's own cyclic order.

    `vertices` is the subgame's label set sorted ascending; primary-ness only
    depends on the cyclic order, so ranks within the sorted order stand in
    for circle positions.
    """
    rank = {v: k + 1 for k, v in enumerate(vertices)}
    m = len(vertices)
    ranked = {(min(rank[a], rank[b]), max(rank[a], rank[b])) for a, b in edges}
    prim = _primary_edges_raw(m, ranked)
    return {
        (min(vertices[a - 1], vertices[b - 1]), max(vertices[a - 1], vertices[b - 1]))
        for a, b in prim
    }


def tree_to_canonical_game(tree: NoncrossingTree) -> PlaySequence:
    """A deterministic legal play whose endstate tree is the given tree.

    At each level the lexicographically least primary edge of the current
    subgame's induced subtree is played first; the side containing the
    smaller label is then realized before the other.
    """
    n = tree.n

    def rec(vertices, edges):
        if len(vertices) <= 1:
            return []
        prim = sorted(_relative_primary_edges(n, vertices, edges))
        i, j = prim[0]
        span = (j - i) % n
        side_a = tuple(v for v in vertices if (v - i) % n < span)
        side_b = tuple(v for v in vertices if (v - i) % n >= span)
        set_a = set(side_a)
        edges_a, edges_b = set(), set()
        for e in edges:
            if e == (i, j):
                continue
            in_a = (e[0] in set_a, e[1] in set_a)
            if all(in_a):
                edges_a.add(e)
            elif not any(in_a):
                edges_b.add(e)
            else:
                raise RuntimeError(f"edge {e} straddles the split at {prim[0]}")
        first, second = sorted(((side_a, edges_a), (side_b, edges_b)), key=lambda s: s[0][0])
        return [(i, j)] + rec(*first) + rec(*second)

    return PlaySequence.of(n, rec(tuple(range(1, n + 1)), set(tree.edges)))


def enumerate_noncrossing_trees(n: int):
    """All noncrossing trees on n vertices, by backtracking over chord sets
    in lexicographic order.  Independent of the game engine."""
    if n < 1:
        raise ValueError(f"vertex count must be positive, got {n}")
    if n == 1:
        return [NoncrossingTree(1, frozenset())]
    all_edges = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out = []

    def extend(start, chosen, comp):
        need = n - 1 - len(chosen)
        if need == 0:
            out.append(NoncrossingTree(n, frozenset(chosen)))
            return
        for k in range(start, len(all_edges) - need + 1):
            a, b = all_edges[k]
            if comp[a] == comp[b]:
                continue
            if any(_crosses((a, b), e) for e in chosen):
                continue
            ca, cb = comp[a], comp[b]
            merged = {v: (ca if c == cb else c) for v, c in comp.items()}
            extend(k + 1, chosen + [(a, b)], merged)

    extend(0, [], {v: v for v in range(1, n + 1)})
    return out


def count_endstates(n: int) -> int:
    """Closed-form endstate count: C(3n-3, n-1) / (2n-1), exact."""
    if n < 1:
        raise ValueError(f"game order must be positive, got {n}")
    numerator = math.comb(3 * n - 3, n - 1)
    denominator = 2 * n - 1
    if numerator % denominator:
        raise ArithmeticError(f"C({3*n-3},{n-1}) is not divisible by {denominator}")
    return numerator // denominator


def tree_to_dot(tree: NoncrossingTree) -> str:
    """DOT form with circular position hints; primary edges carry primary=true."""
    prim = primary_edges(tree)
    lines = ["graph noncrossing_tree {", "  layout=neato;"]
    for v in range(1, tree.n + 1):
        angle = 2 * math.pi * (v - 1) / tree.n
        x, y = math.sin(angle), math.cos(angle)
        lines.append(f'  {v} [pos="{x:.4f},{y:.4f}!"];')
    for i, j in sorted(tree.edges):
        attrs = " [primary=true, penwidth=2]" if (i, j) in prim else ""
        lines.append(f"  {i} -- {j}{attrs};")
    lines.append("}")
    return "\n".join(lines) + "\n"
