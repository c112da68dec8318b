"""Generators for the named graph families and boundary examples.

Wheel convention: WHEEL(n) has n vertices total, a hub joined to a cycle on
n-1 vertices (so the hub has degree n-1).  The closed forms for the wheel
indices follow that convention:

    GA(W_n)  = (n-1) * (1 + 2*sqrt(3*(n-1)) / (n+2))
    ABC(W_n) = (n-1) * (2/3 + sqrt(n / (3*(n-1))))

``boundary_bipartite(delta)`` builds the complete bipartite graph
K_{delta, (2*delta-1)**2 + delta + 1}: the sharpness witness where the
max-min degree gap exceeds (2*delta-1)**2 by exactly one and ABC beats GA.
CLIQUE_BRIDGE(p, q) joins a vertex of K_p to a vertex of K_q by an edge and
generalizes the 15-vertex K_12 - K_3 example on the other side of that
boundary.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import Graph, build_graph
from .intervals import DEFAULT_PRECISION, Interval


class FamilyKind(enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    STAR = "star"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "kbip"
    WHEEL = "wheel"
    STARLIKE = "starlike"
    T_STAR = "tstar"
    CLIQUE_BRIDGE = "bridge"


@dataclass(frozen=True)
class FamilySpec:
    """A family name plus its integer parameters.

    Parameter meaning per kind: PATH/CYCLE/COMPLETE/WHEEL take the vertex
    count; STAR takes the leaf count (K_{1,n} has n+1 vertices);
    COMPLETE_BIPARTITE takes the two part sizes; STARLIKE takes the branch
    lengths (more than two, sorted nonincreasing); CLIQUE_BRIDGE takes the
    two clique sizes; T_STAR takes no parameters.
    """

    kind: FamilyKind
    params: tuple[int, ...] = ()

    def label(self) -> str:
        if self.params:
            return f"{self.kind.value}:{','.join(str(p) for p in self.params)}"
        return self.kind.value


class FamilyError(ValueError):
    """Parameter out of range for the requested family."""


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise FamilyError(msg)


def _path_edges(vertices: list[int]) -> list[tuple[int, int]]:
    return [(vertices[i], vertices[i + 1]) for i in range(len(vertices) - 1)]


def generate(spec: FamilySpec) -> Graph:
    """Build the graph described by a FamilySpec."""
    kind, p = spec.kind, spec.params
    if kind is FamilyKind.PATH:
        _need(len(p) == 1 and p[0] >= 1, f"path needs one parameter n >= 1, got {p}")
        return build_graph(p[0], _path_edges(list(range(p[0]))))
    if kind is FamilyKind.CYCLE:
        _need(len(p) == 1 and p[0] >= 3, f"cycle needs one parameter n >= 3, got {p}")
        n = p[0]
        return build_graph(n, _path_edges(list(range(n))) + [(n - 1, 0)])
    if kind is FamilyKind.STAR:
        _need(len(p) == 1 and p[0] >= 1, f"star needs one parameter n >= 1, got {p}")
        return build_graph(p[0] + 1, [(0, i) for i in range(1, p[0] + 1)])
    if kind is FamilyKind.COMPLETE:
        _need(len(p) == 1 and p[0] >= 1, f"complete graph needs one parameter n >= 1, got {p}")
        n = p[0]
        return build_graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        _need(len(p) == 2 and p[0] >= 1 and p[1] >= 1,
              f"complete bipartite needs parameters r, s >= 1, got {p}")
        r, s = p
        return build_graph(r + s, [(u, r + v) for u in range(r) for v in range(s)])
    if kind is FamilyKind.WHEEL:
        _need(len(p) == 1 and p[0] >= 4, f"wheel needs one parameter n >= 4, got {p}")
        n = p[0]
        rim = list(range(1, n))
        edges = _path_edges(rim) + [(n - 1, 1)] + [(0, v) for v in rim]
        return build_graph(n, edges)
    if kind is FamilyKind.STARLIKE:
        _need(len(p) > 2, f"starlike tree needs more than two branches, got {len(p)}")
        _need(all(r >= 1 for r in p), f"branch lengths must be >= 1, got {p}")
        _need(all(p[i] >= p[i + 1] for i in range(len(p) - 1)),
              f"branch lengths must be sorted nonincreasing, got {p}")
        edges = []
        nxt = 1
        for r in p:
            branch = list(range(nxt, nxt + r))
            edges.append((0, branch[0]))
            edges.extend(_path_edges(branch))
            nxt += r
        return build_graph(sum(p) + 1, edges)
    if kind is FamilyKind.T_STAR:
        _need(len(p) == 0, "tstar takes no parameters")
        # two claws joined at their centers: centers 0 and 1
        edges = [(0, 1)] + [(0, i) for i in (2, 3, 4)] + [(1, i) for i in (5, 6, 7)]
        return build_graph(8, edges)
    if kind is FamilyKind.CLIQUE_BRIDGE:
        _need(len(p) == 2 and p[0] >= 3 and p[1] >= 3,
              f"clique bridge needs clique sizes p, q >= 3, got {p}")
        a, b = p
        edges = [(u, v) for u in range(a) for v in range(u + 1, a)]
        edges += [(a + u, a + v) for u in range(b) for v in range(u + 1, b)]
        edges.append((0, a))
        return build_graph(a + b, edges)
    raise FamilyError(f"unknown family kind {kind!r}")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the flat CLI syntax, e.g. "wheel:195" or "starlike:4,3,2,2"."""
    name, _, rest = text.partition(":")
    try:
        kind = FamilyKind(name.strip().lower())
    except ValueError:
        valid = ", ".join(k.value for k in FamilyKind)
        raise FamilyError(f"unknown family {name!r}; expected one of {valid}") from None
    params: tuple[int, ...] = ()
    if rest.strip():
        try:
            params = tuple(int(tok) for tok in rest.split(","))
        except ValueError:
            raise FamilyError(f"family parameters must be integers, got {rest!r}") from None
    return FamilySpec(kind, params)


def wheel_closed_forms(n: int, precision: int = DEFAULT_PRECISION) -> tuple[Interval, Interval]:
    """Enclosures of the wheel GA and ABC closed forms at order n."""
    if n < 4:
        raise FamilyError(f"wheel closed forms need n >= 4, got {n}")
    one = Interval.exact(1, precision)
    n1 = Interval.exact(n - 1, precision)
    ga = n1 * (one + Interval.exact(3 * (n - 1), precision).sqrt().scaled(2)
               / Interval.exact(n + 2, precision))
    abc = n1 * (Interval.ratio(2, 3, precision)
                + Interval.ratio(n, 3 * (n - 1), precision).sqrt())
    return ga, abc


def boundary_bipartite(delta: int) -> Graph:
    """K_{delta, (2*delta-1)**2 + delta + 1}: the sharpness witness."""
    if delta < 2:
        raise FamilyError(f"boundary construction needs delta >= 2, got {delta}")
    s = (2 * delta - 1) ** 2 + delta + 1
    return generate(FamilySpec(FamilyKind.COMPLETE_BIPARTITE, (delta, s)))
