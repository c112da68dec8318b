"""Simple undirected graphs with frozen degree data.

A ``Graph`` is immutable after construction: vertices are the dense integers
``0..n-1``, adjacency lists are sorted tuples, and the degree sequence is
cached at build time.  Everything downstream (edge-degree census, index
values, theorem checks) is a pure function of this structure, so graphs are
safe to share across parallel workers.

Also houses the edge-degree census, degree statistics, connectivity split,
a permutation-search canonical form for isomorphism dedup, and graph6 /
edge-list text I/O.
"""

from __future__ import annotations

from dataclasses import dataclass, field

CANONICAL_FORM_MAX_N = 10
GRAPH6_MAX_N = 10**6

TREE_CLASS_COUNTS = (1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551)  # n = 1..12
CONNECTED_CLASS_COUNTS = (1, 1, 2, 6, 21, 112, 853)  # n = 1..7


class GraphConstructionError(ValueError):
    """Invalid vertex count or edge list."""


class Graph6ParseError(ValueError):
    """Malformed graph6 record; carries the byte offset of the defect."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on vertices 0..n-1 with cached degrees."""

    n: int
    adj: tuple[tuple[int, ...], ...]
    degrees: tuple[int, ...]

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    def edges(self) -> list[tuple[int, int]]:
        """All edges (u, v) with u < v, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        a = self.adj[u]
        lo, hi = 0, len(a)
        while lo < hi:
            mid = (lo + hi) // 2
            if a[mid] < v:
                lo = mid + 1
            else:
                hi = mid
        return lo < len(a) and a[lo] == v


def build_graph(n: int, edges) -> Graph:
    """Validated constructor: rejects bad endpoints, self-loops, duplicates."""
    if n < 1:
        raise GraphConstructionError(f"vertex count must be >= 1, got {n}")
    seen = set()
    adj = [[] for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphConstructionError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphConstructionError(f"self-loop ({u}, {v}) is not allowed")
        key = (u, v) if u < v else (v, u)
        if key in seen:
            raise GraphConstructionError(f"duplicate edge ({u}, {v})")
        seen.add(key)
        adj[u].append(v)
        adj[v].append(u)
    adj_t = tuple(tuple(sorted(a)) for a in adj)
    return Graph(n=n, adj=adj_t, degrees=tuple(len(a) for a in adj_t))


# -- degree data -----------------------------------------------------------


@dataclass(frozen=True)
class EdgeDegreeCensus:
    """Multiset of unordered endpoint-degree pairs, one entry per edge.

    Keys are pairs (a, b) with a >= b >= 1; GA and ABC are functions of this
    census alone.
    """

    counts: dict[tuple[int, int], int] = field(default_factory=dict)

    def total(self) -> int:
        return sum(self.counts.values())

    def items(self) -> list[tuple[tuple[int, int], int]]:
        """Census entries in deterministic (sorted-key) order."""
        return sorted(self.counts.items())

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.counts.get(key, 0)


@dataclass(frozen=True)
class DegreeStats:
    delta_max: int
    delta_min: int
    delta_min_nonpendant: int | None  # min degree over vertices of degree >= 2
    pendant_count: int


def edge_degree_census(g: Graph) -> EdgeDegreeCensus:
    counts: dict[tuple[int, int], int] = {}
    deg = g.degrees
    for u, v in g.edges():
        a, b = deg[u], deg[v]
        key = (a, b) if a >= b else (b, a)
        counts[key] = counts.get(key, 0) + 1
    return EdgeDegreeCensus(counts)


def degree_stats(g: Graph) -> DegreeStats:
    if g.n < 1:
        raise ValueError("degree_stats requires at least one vertex")
    deg = g.degrees
    nonpendant = [d for d in deg if d >= 2]
    return DegreeStats(
        delta_max=max(deg),
        delta_min=min(deg),
        delta_min_nonpendant=min(nonpendant) if nonpendant else None,
        pendant_count=sum(1 for d in deg if d == 1),
    )


# -- connectivity ----------------------------------------------------------


def connectivity(g: Graph) -> tuple[bool, list[Graph]]:
    """Connected flag plus the components as relabeled graphs.

    Components are ordered by their smallest original vertex; inside each
    component the original vertex order is preserved.
    """
    unseen = set(range(g.n))
    components: list[Graph] = []
    while unseen:
        root = min(unseen)
        stack = [root]
        comp = {root}
        unseen.discard(root)
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in unseen:
                    unseen.discard(w)
                    comp.add(w)
                    stack.append(w)
        order = sorted(comp)
        relabel = {v: i for i, v in enumerate(order)}
        edges = [(relabel[u], relabel[v]) for u in order for v in g.adj[u] if u < v]
        components.append(build_graph(len(order), edges))
    return len(components) == 1, components


def is_connected(g: Graph) -> bool:
    return connectivity(g)[0]


def is_tree(g: Graph) -> bool:
    return g.m == g.n - 1 and is_connected(g)


# -- canonical form --------------------------------------------------------


def _refine_colors(g: Graph) -> list[int]:
    """Stable vertex coloring: degrees refined by neighbor-color multisets.

    Colors are canonically numbered (by sorted key) each round, so two
    isomorphic graphs receive corresponding colors.
    """
    colors = list(g.degrees)
    while True:
        keys = [(colors[v], tuple(sorted(colors[w] for w in g.adj[v]))) for v in range(g.n)]
        order = {k: i for i, k in enumerate(sorted(set(keys)))}
        new = [order[k] for k in keys]
        if new == colors:
            return colors
        colors = new


def canonical_form(g: Graph, max_n: int = CANONICAL_FORM_MAX_N) -> bytes:
    """Canonical bytes: equal for two graphs iff they are isomorphic.

    Minimizes the triangular adjacency bit-string over vertex orderings that
    respect the refined color partition (no isomorphism can mix vertices of
    different colors, so the restriction is lossless).  The search is a DFS
    with lexicographic prefix pruning plus a twin cut: candidates whose
    swap with an already-tried candidate is an automorphism are skipped.
    Worst case is still factorial in the largest color class; intended for
    small graphs only.
    """
    if g.n > max_n:
        raise ValueError(
            f"canonical_form supports up to {max_n} vertices (got {g.n}); "
            "raise max_n explicitly if the cost is acceptable"
        )
    n = g.n
    colors = _refine_colors(g)
    cells: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    cell_list = [cells[c] for c in sorted(cells)]
    cell_of_pos = [ci for ci, cell in enumerate(cell_list) for _ in cell]
    adjsets = [set(a) for a in g.adj]
    rows = [0] * n  # rows[p] = adjacency bits of position p toward positions < p
    order: list[int] = []
    used = [False] * n
    best: list[int] | None = None

    def twins(u: int, v: int) -> bool:
        if u in adjsets[v]:
            return adjsets[u] - {v} == adjsets[v] - {u}
        return adjsets[u] == adjsets[v]

    def rec(p: int) -> None:
        nonlocal best
        if p == n:
            if best is None or rows < best:
                best = rows[:]
            return
        tried: list[int] = []
        for v in cell_list[cell_of_pos[p]]:
            if used[v] or any(twins(v, t) for t in tried):
                continue
            tried.append(v)
            row = 0
            for j in range(p):
                row = (row << 1) | (1 if order[j] in adjsets[v] else 0)
            rows[p] = row
            if best is not None and rows[: p + 1] > best[: p + 1]:
                continue
            used[v] = True
            order.append(v)
            rec(p + 1)
            order.pop()
            used[v] = False

    rec(0)
    assert best is not None
    bits = 0
    for p in range(n):
        bits = (bits << p) | best[p]
    nbits = n * (n - 1) // 2
    payload = bits.to_bytes((nbits + 7) // 8, "big") if nbits else b""
    return g.n.to_bytes(4, "big") + payload


def permute(g: Graph, perm: list[int] | tuple[int, ...]) -> Graph:
    """Relabeled copy: vertex v of the input becomes perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise ValueError("perm must be a permutation of 0..n-1")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# -- graph6 format ---------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    """graph6 record of the given labeling (no relabeling is performed)."""
    if g.n < 1:
        raise ValueError("graph6_encode requires at least one vertex")
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    elif n <= 68719476735:
        head = "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))
    else:
        raise ValueError(f"graph6 cannot encode n={n}")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if g.has_edge(u, v) else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i : i + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return head + "".join(chars)


def graph6_decode(record: str) -> Graph:
    """Parse one graph6 line; exact inverse of :func:`graph6_encode`."""
    line = record.rstrip("\n")
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<") :]
    if not line:
        raise Graph6ParseError("empty graph6 record", 0)
    for i, ch in enumerate(line):
        if not 63 <= ord(ch) <= 126:
            raise Graph6ParseError(f"character {ch!r} outside graph6 range 63..126", i)
    vals = [ord(ch) - 63 for ch in line]
    if vals[0] < 63:
        n, body = vals[0], vals[1:]
        offset = 1
    elif len(vals) >= 2 and vals[1] < 63:
        if len(vals) < 4:
            raise Graph6ParseError("truncated 4-byte order header", len(vals))
        n = (vals[1] << 12) | (vals[2] << 6) | vals[3]
        body, offset = vals[4:], 4
    else:
        if len(vals) < 8:
            raise Graph6ParseError("truncated 8-byte order header", len(vals))
        n = 0
        for v in vals[2:8]:
            n = (n << 6) | v
        body, offset = vals[8:], 8
    if n < 1:
        raise Graph6ParseError(f"unsupported vertex count {n}", 0)
    if n > GRAPH6_MAX_N:
        raise Graph6ParseError(f"vertex count {n} exceeds supported maximum {GRAPH6_MAX_N}", 0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(body) != need:
        raise Graph6ParseError(
            f"expected {need} adjacency characters for n={n}, found {len(body)}", offset
        )
    edges = []
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if (body[idx // 6] >> (5 - idx % 6)) & 1:
                edges.append((u, v))
            idx += 1
    # padding bits beyond the upper triangle must be zero
    for extra in range(nbits, need * 6):
        if (body[extra // 6] >> (5 - extra % 6)) & 1:
            raise Graph6ParseError("nonzero padding bit", offset + extra // 6)
    return build_graph(n, edges)


def iter_graph6(lines):
    """Decode an iterable of graph6 lines, skipping blank ones."""
    return (graph6_decode(line) for line in lines if line.strip())


# -- edge-list text format ---------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Plain text format: first line "n m", then m lines "u v"."""
    rows = [r for r in (line.strip() for line in text.splitlines()) if r]
    if not rows:
        raise ValueError("empty edge-list input")
    head = rows[0].split()
    if len(head) != 2:
        raise ValueError(f'first line must be "n m", got {rows[0]!r}')
    n, m = int(head[0]), int(head[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header declares {m} edges but {len(rows) - 1} lines follow")
    edges = []
    for r in rows[1:]:
        parts = r.split()
        if len(parts) != 2:
            raise ValueError(f'edge line must be "u v", got {r!r}')
        edges.append((int(parts[0]), int(parts[1])))
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
