"""Deterministic constructors for the graph families used throughout.

Vertex labels are short and stable so reports and fixtures stay
readable; every constructor returns a normalized (simple) graph.
"""

from __future__ import annotations

import itertools

from .graph import Graph


def path_graph(length: int) -> Graph:
    """A segment with `length` edges."""
    vs = [str(i + 1) for i in range(length + 1)]
    es = [(f"e{i + 1}", vs[i], vs[i + 1]) for i in range(length)]
    return Graph.make(vs, es)


def cycle_graph(k: int) -> Graph:
    vs = [str(i + 1) for i in range(k)]
    es = [(f"e{i + 1}", vs[i], vs[(i + 1) % k]) for i in range(k)]
    return Graph.make(vs, es)


def star_graph(arms: int, arm_length: int = 1) -> Graph:
    vs = ["c"]
    es = []
    for a in range(arms):
        prev = "c"
        for i in range(arm_length):
            nxt = f"a{a + 1}v{i + 1}"
            vs.append(nxt)
            es.append((f"a{a + 1}e{i + 1}", prev, nxt))
            prev = nxt
    return Graph.make(vs, es)


def complete_graph(m: int) -> Graph:
    vs = [str(i + 1) for i in range(m)]
    es = [(f"e{u}_{v}", u, v) for u, v in itertools.combinations(vs, 2)]
    return Graph.make(vs, es)


def complete_bipartite(p: int, q: int) -> Graph:
    left = [f"a{i + 1}" for i in range(p)]
    right = [f"b{j + 1}" for j in range(q)]
    es = [(f"e{u}_{v}", u, v) for u in left for v in right]
    return Graph.make(left + right, es)


def rose_graph(petals: int, petal_length: int, rays: int = 0,
               ray_length: int = 1) -> Graph:
    """Cycles and rays glued along a single central vertex."""
    if petal_length < 3 and petals:
        raise ValueError("petals need length >= 3 to stay simple")
    vs = ["c"]
    es = []
    for p in range(petals):
        prev = "c"
        for i in range(petal_length - 1):
            nxt = f"p{p + 1}v{i + 1}"
            vs.append(nxt)
            es.append((f"p{p + 1}e{i + 1}", prev, nxt))
            prev = nxt
        es.append((f"p{p + 1}e{petal_length}", prev, "c"))
    for r in range(rays):
        prev = "c"
        for i in range(ray_length):
            nxt = f"r{r + 1}v{i + 1}"
            vs.append(nxt)
            es.append((f"r{r + 1}e{i + 1}", prev, nxt))
            prev = nxt
    return Graph.make(vs, es)


def sun_graph(cycle_len: int, ray_vertices: tuple, ray_length: int = 1) -> Graph:
    """A cycle with a pendant ray at each listed position (1-based)."""
    g = cycle_graph(cycle_len)
    vs = list(g.vertices)
    es = [(e.id, e.u, e.v) for e in g.edges]
    for pos in ray_vertices:
        prev = str(pos)
        for i in range(ray_length):
            nxt = f"s{pos}v{i + 1}"
            vs.append(nxt)
            es.append((f"s{pos}e{i + 1}", prev, nxt))
            prev = nxt
    return Graph.make(vs, es)


def theta_graph(a: int, b: int, c: int) -> Graph:
    """Two hubs joined by three internally disjoint arcs of given lengths."""
    if min(a, b, c) < 1 or sorted((a, b, c)).count(1) > 1:
        raise ValueError("arc lengths would create parallel edges")
    vs = ["u", "w"]
    es = []
    for name, length in (("a", a), ("b", b), ("c", c)):
        prev = "u"
        for i in range(length - 1):
            nxt = f"{name}{i + 1}"
            vs.append(nxt)
            es.append((f"{name}e{i + 1}", prev, nxt))
            prev = nxt
        es.append((f"{name}e{length}", prev, "w"))
    return Graph.make(vs, es)


def h_graph(bridge_length: int = 1, arm_length: int = 1) -> Graph:
    """Two degree-3 vertices joined by a bridge, two pendant arms each."""
    vs = ["u", "w"]
    es = []
    prev = "u"
    for i in range(bridge_length - 1):
        nxt = f"m{i + 1}"
        vs.append(nxt)
        es.append((f"me{i + 1}", prev, nxt))
        prev = nxt
    es.append((f"me{bridge_length}", prev, "w"))
    for hub in ("u", "w"):
        for a in (1, 2):
            prev = hub
            for i in range(arm_length):
                nxt = f"{hub}{a}v{i + 1}"
                vs.append(nxt)
                es.append((f"{hub}{a}e{i + 1}", prev, nxt))
                prev = nxt
    return Graph.make(vs, es)


def two_bouquets(circles_a: int, circles_b: int, circle_len: int = 3,
                 bridge_length: int = 2) -> Graph:
    """Two bouquets of circles with centers joined by a segment."""
    vs = ["u", "w"]
    es = []
    for side, count in (("u", circles_a), ("w", circles_b)):
        for p in range(count):
            prev = side
            for i in range(circle_len - 1):
                nxt = f"{side}p{p + 1}v{i + 1}"
                vs.append(nxt)
                es.append((f"{side}p{p + 1}e{i + 1}", prev, nxt))
                prev = nxt
            es.append((f"{side}p{p + 1}e{circle_len}", prev, side))
    prev = "u"
    for i in range(bridge_length - 1):
        nxt = f"br{i + 1}"
        vs.append(nxt)
        es.append((f"bre{i + 1}", prev, nxt))
        prev = nxt
    es.append((f"bre{bridge_length}", prev, "w"))
    return Graph.make(vs, es)


def square_with_two_cone_points() -> Graph:
    """A 4-cycle plus two extra vertices each joined to all its corners."""
    vs = ["c1", "c2", "c3", "c4", "x", "y"]
    es = [("s1", "c1", "c2"), ("s2", "c2", "c3"),
          ("s3", "c3", "c4"), ("s4", "c4", "c1")]
    for apex in ("x", "y"):
        for i in range(1, 5):
            es.append((f"{apex}{i}", apex, f"c{i}"))
    return Graph.make(vs, es)


def tripod_graph(n: int) -> tuple:
    """The swap fixture: spine of 2n-1 vertices plus a spike at its center.

    Returns ``(graph, spine, spike)`` with the spine listed left to
    right; position k of the motion recipe is ``spine[k + n - 1]``.
    """
    labels = [f"t{i}" for i in range(2 * n - 1)]
    vs = labels + ["p"]
    es = [(f"sp{i}", labels[i], labels[i + 1]) for i in range(len(labels) - 1)]
    es.append(("spike", labels[n - 1], "p"))
    return Graph.make(vs, es), labels, "p"
