"""Shared strategies and family shortcuts for the test suite."""

import itertools

from hypothesis import settings
from hypothesis import strategies as st

settings.register_profile("degix", deadline=None)
settings.load_profile("degix")

from degix.families import FamilyKind, FamilySpec, generate
from degix.graphs import build_graph


def family(kind: str, *params):
    return generate(FamilySpec(FamilyKind(kind), tuple(params)))


def path(n):
    return family("path", n)


def cycle(n):
    return family("cycle", n)


def star(leaves):
    return family("star", leaves)


def complete(n):
    return family("complete", n)


@st.composite
def graphs(draw, min_n=1, max_n=8, connected_only=False):
    """Random simple graph on min_n..max_n vertices as edge subsets."""
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    picked = draw(st.sets(st.sampled_from(pairs))) if pairs else set()
    g = build_graph(n, sorted(picked))
    if connected_only:
        from degix.graphs import is_connected
        from hypothesis import assume

        assume(is_connected(g))
    return g
