"""Line-graph construction and structural recognition.

The recognition test is the classical two-part characterization: a graph is
a line graph iff it has no induced claw (K_{1,3}) and any two odd triangles
sharing an edge span an induced K_4.  A triangle is odd when some vertex of
the graph is adjacent to an odd number (1 or 3) of its corners.  Failures
return concrete witnesses so verification reports can cite them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .graphs import Graph, build_graph


@dataclass(frozen=True)
class TriangleRecord:
    """A triangle with its parity classification.

    ``witness`` is a vertex adjacent to an odd number of the triangle's
    corners (present iff ``is_odd``).  The witness search ranges over every
    vertex of the graph; the triangle's own corners see exactly two corners
    each, so they can never be witnesses.
    """

    vertices: tuple[int, int, int]
    is_odd: bool
    witness: int | None


@dataclass(frozen=True)
class LineGraphViolation:
    """Evidence against line-graph membership."""

    kind: str  # "claw" or "odd_triangle_pair"
    vertices: tuple[int, ...]


def line_graph(g: Graph) -> Graph:
    """Line graph: one vertex per edge of g (in lexicographic edge order),
    adjacent iff the edges share an endpoint."""
    edges = g.edges()
    if not edges:
        raise ValueError("line graph of an edgeless graph is not defined here")
    result_edges = []
    for i, (a, b) in enumerate(edges):
        for j in range(i + 1, len(edges)):
            c, d = edges[j]
            if a == c or a == d or b == c or b == d:
                result_edges.append((i, j))
    return build_graph(len(edges), result_edges)


def is_molecular(g: Graph) -> bool:
    """Maximum degree at most 4."""
    return max(g.degrees, default=0) <= 4


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    out = []
    for u in range(g.n):
        nu = [w for w in g.adj[u] if w > u]
        for i, v in enumerate(nu):
            for w in nu[i + 1 :]:
                if g.has_edge(v, w):
                    out.append((u, v, w))
    return out


def odd_triangles(g: Graph) -> list[TriangleRecord]:
    """Every triangle of g, classified as odd or even with witness."""
    records = []
    for tri in triangles(g):
        tset = set(tri)
        witness = None
        for x in range(g.n):
            k = sum(1 for t in tri if g.has_edge(x, t) if x != t)
            if k % 2 == 1:
                witness = x
                break
        records.append(TriangleRecord(tri, witness is not None, witness))
    return records


def _find_claw(g: Graph) -> tuple[int, ...] | None:
    """Induced K_{1,3}: a center with three pairwise non-adjacent neighbors."""
    for center in range(g.n):
        nbrs = g.adj[center]
        if len(nbrs) < 3:
            continue
        for a, b, c in itertools.combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return (center, a, b, c)
    return None


def is_line_graph(g: Graph) -> tuple[bool, LineGraphViolation | None]:
    """Recognition via the claw / odd-triangle characterization.

    Returns (True, None) or (False, violation) where the violation carries
    the offending vertex set.
    """
    claw = _find_claw(g)
    if claw is not None:
        return False, LineGraphViolation("claw", claw)
    odd = [r for r in odd_triangles(g) if r.is_odd]
    for r1, r2 in itertools.combinations(odd, 2):
        shared = set(r1.vertices) & set(r2.vertices)
        if len(shared) != 2:
            continue
        union = sorted(set(r1.vertices) | set(r2.vertices))
        if any(not g.has_edge(u, v) for u, v in itertools.combinations(union, 2)):
            return False, LineGraphViolation("odd_triangle_pair", tuple(union))
    return True, None
