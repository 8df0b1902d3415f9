"""Finite multigraphs viewed as one-dimensional CW-complexes.

A graph here is an immutable value: a sorted tuple of vertex ids and a
sorted tuple of edges.  Ids are strings; the canonical order is
``(len(id), id)`` so that numeric labels sort naturally (``"2" < "10"``).
Loops and parallel edges are permitted on input; :func:`normalize`
subdivides them away, and :func:`smooth` goes the other way, suppressing
degree-2 vertices down to the minimal multigraph of the same
homeomorphism type.  Shape detection and the first Betti number feed the
braid-group classification layer.

Generated ids (subdivision points, smoothing merges) contain ``#`` or
``~``, characters excluded from user-facing ids, so they never collide
with input labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Optional

from .errors import PreconditionError, ResourceLimitError

DEFAULT_CYCLE_CAP = 10**6


def idkey(x: str):
    """Canonical sort key for vertex/edge ids."""
    return (len(x), x)


@dataclass(frozen=True)
class Edge:
    id: str
    u: str
    v: str

    def endpoints(self) -> frozenset:
        return frozenset((self.u, self.v))

    def is_loop(self) -> bool:
        return self.u == self.v

    def other(self, x: str) -> str:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"{x} is not an endpoint of {self.id}")

    def touches(self, other: "Edge") -> bool:
        return bool(self.endpoints() & other.endpoints())


@dataclass(frozen=True)
class Graph:
    """Immutable multigraph; use :meth:`make` to get canonical ordering."""

    vertices: tuple
    edges: tuple

    @staticmethod
    def make(vertices: Iterable[str], edges: Iterable[tuple]) -> "Graph":
        vs = tuple(sorted({str(v) for v in vertices}, key=idkey))
        es = []
        seen = set()
        for eid, u, v in edges:
            eid, u, v = str(eid), str(u), str(v)
            if eid in seen:
                raise PreconditionError(f"duplicate edge id {eid!r}")
            seen.add(eid)
            es.append(Edge(eid, u, v))
        vset = set(vs)
        for e in es:
            if e.u not in vset or e.v not in vset:
                raise PreconditionError(f"edge {e.id!r} has unknown endpoint")
        es.sort(key=lambda e: idkey(e.id))
        return Graph(vs, tuple(es))

    # -- basic views ---------------------------------------------------

    @cached_property
    def edge_by_id(self) -> dict:
        return {e.id: e for e in self.edges}

    @cached_property
    def incidence(self) -> dict:
        """vertex -> tuple of incident edges (loops listed once)."""
        inc = {v: [] for v in self.vertices}
        for e in self.edges:
            inc[e.u].append(e)
            if not e.is_loop():
                inc[e.v].append(e)
        return {v: tuple(lst) for v, lst in inc.items()}

    def degree(self, v: str) -> int:
        """Topological degree; a loop contributes 2."""
        d = 0
        for e in self.incidence[v]:
            d += 2 if e.is_loop() else 1
        return d

    def neighbors(self, v: str) -> tuple:
        outs = set()
        for e in self.incidence[v]:
            outs.add(e.other(v))
        outs.discard(v)
        return tuple(sorted(outs, key=idkey))

    def is_simple(self) -> bool:
        seen = set()
        for e in self.edges:
            if e.is_loop():
                return False
            key = frozenset((e.u, e.v))
            if key in seen:
                return False
            seen.add(key)
        return True

    @cached_property
    def simple_adjacency(self) -> dict:
        """vertex -> neighbor -> edge, valid on simple graphs only."""
        adj = {v: {} for v in self.vertices}
        for e in self.edges:
            adj[e.u][e.v] = e
            adj[e.v][e.u] = e
        return adj

    def components(self) -> tuple:
        """Connected components as sorted tuples of vertices."""
        seen = set()
        comps = []
        for start in self.vertices:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for e in self.incidence[x]:
                    y = e.other(x)
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            comps.append(tuple(sorted(comp, key=idkey)))
        return tuple(comps)

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def essential_vertices(self) -> tuple:
        """Vertices of degree >= 3 (unchanged by subdivision)."""
        return tuple(v for v in self.vertices if self.degree(v) >= 3)

    def first_betti(self) -> int:
        return len(self.edges) - len(self.vertices) + len(self.components())

    def induced(self, vertices) -> "Subgraph":
        vset = frozenset(vertices)
        eids = frozenset(
            e.id for e in self.edges if e.u in vset and e.v in vset
        )
        return Subgraph(self, vset, eids)

    def full_subgraph(self, edge_ids) -> "Subgraph":
        """Smallest subgraph containing the given edges."""
        eids = frozenset(edge_ids)
        vs = set()
        for eid in eids:
            e = self.edge_by_id[eid]
            vs.add(e.u)
            vs.add(e.v)
        return Subgraph(self, frozenset(vs), eids)

    def fingerprint(self) -> str:
        parts = ["V:" + ",".join(self.vertices)]
        parts += [f"E:{e.id}:{e.u}:{e.v}" for e in self.edges]
        return ";".join(parts)


@dataclass(frozen=True)
class Subgraph:
    """A subgraph closed under endpoints, referencing its parent."""

    parent: Graph
    vertices: frozenset
    edge_ids: frozenset

    def __post_init__(self):
        by_id = self.parent.edge_by_id
        for eid in self.edge_ids:
            e = by_id.get(eid)
            if e is None:
                raise PreconditionError(f"unknown edge {eid!r} in subgraph")
            if e.u not in self.vertices or e.v not in self.vertices:
                raise PreconditionError(f"subgraph not closed under endpoints at {eid!r}")

    def as_graph(self) -> Graph:
        by_id = self.parent.edge_by_id
        return Graph.make(
            self.vertices,
            [(eid, by_id[eid].u, by_id[eid].v) for eid in self.edge_ids],
        )

    def vertex_disjoint(self, other: "Subgraph") -> bool:
        return not (self.vertices & other.vertices)

    def first_betti(self) -> int:
        return self.as_graph().first_betti()

    def is_proper(self) -> bool:
        return (self.vertices != frozenset(self.parent.vertices)
                or self.edge_ids != frozenset(e.id for e in self.parent.edges))


@dataclass(frozen=True)
class Cycle:
    """A simple cycle in canonical rotation.

    ``vertices[0]`` is the least vertex of the cycle and ``vertices[1]``
    the lesser of its two cycle neighbors; ``edge_ids[i]`` joins
    ``vertices[i]`` to ``vertices[(i+1) % k]``.
    """

    vertices: tuple
    edge_ids: tuple

    def __len__(self) -> int:
        return len(self.vertices)

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    def disjoint_from(self, other: "Cycle") -> bool:
        return not (self.vertex_set & other.vertex_set)

    def as_subgraph(self, g: Graph) -> Subgraph:
        return Subgraph(g, self.vertex_set, frozenset(self.edge_ids))


# -- shape taxonomy ----------------------------------------------------

SEGMENT = "segment"
CYCLE = "cycle"
STAR = "star"
THETA = "theta"
HGRAPH = "h_graph"
CYCLE_TWO_RAYS = "cycle_two_rays"
ROSE = "rose"
SUN = "sun"
PULSAR = "pulsar"
TREE = "tree"
GENERAL = "general"

SHAPE_PRECEDENCE = (
    SEGMENT, CYCLE, STAR, THETA, HGRAPH, CYCLE_TWO_RAYS,
    ROSE, SUN, PULSAR, TREE, GENERAL,
)


@dataclass(frozen=True)
class Shape:
    """Precedence tag plus the full set of class memberships.

    The tag is the first matching class in the fixed precedence order
    and is what reports display; theorem predicates consult
    ``memberships`` because the classes overlap (a single cycle is also
    a rose, a sun and a pulsar).
    """

    tag: str
    memberships: frozenset
    detail: dict = field(compare=False, default_factory=dict)

    def is_a(self, cls: str) -> bool:
        return cls in self.memberships


def normalize(g: Graph) -> Graph:
    """Subdivide every loop twice and every parallel edge once.

    The result is a simple graph homeomorphic to the input; simple
    inputs come back unchanged.
    """
    if g.is_simple():
        return g
    seen_pairs = set()
    loops, parallels = [], []
    for e in g.edges:
        if e.is_loop():
            loops.append(e)
            continue
        key = frozenset((e.u, e.v))
        if key in seen_pairs:
            parallels.append(e)
        else:
            seen_pairs.add(key)
    # every member of a parallel family counts as "a parallel edge"
    families = {}
    for e in g.edges:
        if not e.is_loop():
            families.setdefault(frozenset((e.u, e.v)), []).append(e)
    parallels = [e for fam in families.values() if len(fam) > 1 for e in fam]

    vertices = list(g.vertices)
    edges = []
    for e in g.edges:
        if e.is_loop():
            m1, m2 = f"{e.id}#s1", f"{e.id}#s2"
            vertices += [m1, m2]
            edges += [(f"{e.id}#p0", e.u, m1), (f"{e.id}#p1", m1, m2),
                      (f"{e.id}#p2", m2, e.u)]
        elif e in parallels:
            m = f"{e.id}#s1"
            vertices.append(m)
            edges += [(f"{e.id}#p0", e.u, m), (f"{e.id}#p1", m, e.v)]
        else:
            edges.append((e.id, e.u, e.v))
    out = Graph.make(vertices, edges)
    if not out.is_simple():
        # parallel families of size > 2 over loops etc. may need another pass
        return normalize(out)
    return out


def subdivide_edge(g: Graph, edge_id: str, times: int = 1) -> Graph:
    """Replace one edge by a path with `times` interior vertices."""
    if times < 1:
        return g
    e = g.edge_by_id[edge_id]
    vertices = list(g.vertices)
    edges = [(x.id, x.u, x.v) for x in g.edges if x.id != edge_id]
    chain = [e.u] + [f"{edge_id}#s{i}" for i in range(1, times + 1)] + [e.v]
    vertices += chain[1:-1]
    for i in range(len(chain) - 1):
        edges.append((f"{edge_id}#p{i}", chain[i], chain[i + 1]))
    return Graph.make(vertices, edges)


def subdivide_all(g: Graph, times: int) -> Graph:
    """Subdivide every edge the same number of times."""
    out = g
    for e in g.edges:
        out = subdivide_edge(out, e.id, times)
    return out


def _distances_from(g: Graph, start: str) -> dict:
    dist = {start: 0}
    frontier = [start]
    while frontier:
        nxt = []
        for x in frontier:
            for e in g.incidence[x]:
                y = e.other(x)
                if y not in dist:
                    dist[y] = dist[x] + 1
                    nxt.append(y)
        frontier = nxt
    return dist


def _shortest_path(g: Graph, a: str, b: str) -> Optional[list]:
    """Vertex list of one shortest a-b path, ties broken canonically."""
    prev = {a: None}
    frontier = [a]
    while frontier and b not in prev:
        nxt = []
        for x in frontier:
            for y in g.neighbors(x):
                if y not in prev:
                    prev[y] = x
                    nxt.append(y)
        frontier = nxt
    if b not in prev:
        return None
    path = [b]
    while path[-1] != a:
        path.append(prev[path[-1]])
    path.reverse()
    return path


def _girth_cycle(g: Graph) -> Optional[list]:
    """Vertices of one shortest simple cycle of a simple graph, or None.

    Girth = min over edges (u,v) of 1 + shortest u-v distance avoiding
    that edge; exact, and cheap at the sizes handled here.
    """
    best = None
    for e in g.edges:
        trimmed = Graph.make(
            g.vertices,
            [(x.id, x.u, x.v) for x in g.edges if x.id != e.id],
        )
        path = _shortest_path(trimmed, e.u, e.v)
        if path is not None and (best is None or len(path) < len(best)):
            best = path
    return best


def subdivide_for(g: Graph, n: int) -> Graph:
    """Subdivide until the complex UC_n faithfully models the braid group.

    Ensures: at least ``n`` vertices, every path from an essential
    vertex to another vertex of degree other than two (branch point or
    leaf) has length >= n-1, and every simple cycle has length >= n+1.
    Leaf arcs matter: on the minimal three-arm star with three
    particles the discrete complex is a tree even though the braid
    group is free of rank three, and arm length n-1 is exactly where
    the homology stabilises.  Compliant graphs come back unchanged;
    otherwise single edges on violating structures are split, least id
    first.
    """
    if not g.is_simple():
        raise PreconditionError("subdivide_for expects a normalized graph")
    if n < 1:
        raise PreconditionError("particle count must be >= 1")
    out = g
    for _ in range(10000):
        if len(out.vertices) < n:
            if not out.edges:
                raise PreconditionError(
                    f"cannot host {n} particles on an edgeless graph")
            out = subdivide_edge(out, out.edges[0].id)
            continue
        ess = out.essential_vertices()
        leaves = tuple(v for v in out.vertices if out.degree(v) == 1)
        violation = None
        for a, b in itertools.chain(itertools.combinations(ess, 2),
                                    itertools.product(ess, leaves)):
            path = _shortest_path(out, a, b)
            if path is not None and len(path) - 1 < n - 1:
                violation = path
                break
        if violation is not None:
            eid = min(
                (out.simple_adjacency[violation[i]][violation[i + 1]].id
                 for i in range(len(violation) - 1)),
                key=idkey,
            )
            out = subdivide_edge(out, eid)
            continue
        cyc = _girth_cycle(out)
        if cyc is not None and len(cyc) < n + 1:
            eids = []
            for i in range(len(cyc)):
                eids.append(out.simple_adjacency[cyc[i]][cyc[(i + 1) % len(cyc)]].id)
            out = subdivide_edge(out, min(eids, key=idkey))
            continue
        return out
    raise ResourceLimitError("subdivide_for did not converge")


def smooth(g: Graph) -> Graph:
    """Suppress degree-2 vertices down to the minimal homeomorphic multigraph.

    Loops and parallel edges may reappear; a bare circle ends up as a
    single vertex carrying a loop.  Runs componentwise, so disconnected
    graphs are fine.
    """
    vertices = set(g.vertices)
    edges = {e.id: (e.u, e.v) for e in g.edges}

    changed = True
    while changed:
        changed = False
        inc = {v: [] for v in vertices}
        for eid, (u, w) in edges.items():
            inc[u].append(eid)
            if u != w:
                inc[w].append(eid)
        for v in sorted(vertices, key=idkey):
            around = inc[v]
            if len(around) != 2:
                continue
            e1, e2 = sorted(around, key=idkey)
            if e1 == e2:
                continue  # lone loop vertex of a bare circle
            a = edges[e1][0] if edges[e1][1] == v else edges[e1][1]
            b = edges[e2][0] if edges[e2][1] == v else edges[e2][1]
            if a == v or b == v:
                continue  # loop plus another edge means degree > 2
            del edges[e1]
            del edges[e2]
            edges[f"({e1}~{e2})"] = (a, b)
            vertices.remove(v)
            changed = True
            break
    return Graph.make(vertices, [(eid, u, w) for eid, (u, w) in edges.items()])


# -- membership predicates on the smoothed multigraph -------------------

def _loops_at(g: Graph, v: str) -> list:
    return [e for e in g.incidence[v] if e.is_loop()]


def _leaves(g: Graph) -> list:
    return [v for v in g.vertices if g.degree(v) == 1]


def _shape_memberships(m: Graph) -> tuple:
    """All shape classes the smoothed multigraph belongs to, plus details."""
    classes = set()
    detail = {}
    nv, ne = len(m.vertices), len(m.edges)
    b1 = m.first_betti()
    degs = {v: m.degree(v) for v in m.vertices}
    leaves = [v for v in m.vertices if degs[v] == 1]
    internal = [v for v in m.vertices if degs[v] != 1]

    if nv <= 2 and ne <= 1 and not any(e.is_loop() for e in m.edges):
        classes.add(SEGMENT)
    if nv == 1 and ne == 1 and m.edges[0].is_loop():
        classes.add(CYCLE)
    if (b1 == 0 and len(internal) == 1 and len(leaves) == nv - 1
            and degs[internal[0]] >= 3):
        classes.add(STAR)
        detail["arms"] = degs[internal[0]]
    if nv == 2 and ne == 3 and not leaves and b1 == 2 \
            and not any(e.is_loop() for e in m.edges):
        classes.add(THETA)
    if b1 == 0:
        classes.add(TREE)

    # rose: one hub carrying every loop and every edge; others are leaves
    for hub in m.vertices:
        ok = all(e.u == hub or e.v == hub for e in m.edges)
        ok = ok and all(v == hub or degs[v] == 1 for v in m.vertices)
        if ok:
            classes.add(ROSE)
            detail["rose_center"] = hub
            detail["rose_cycles"] = sum(1 for e in m.edges if e.is_loop())
            detail["rose_rays"] = sum(1 for e in m.edges if not e.is_loop())
            break
    if nv == 1 and ne == 0:
        classes.add(ROSE)
        detail.setdefault("rose_center", m.vertices[0] if m.vertices else None)

    if b1 == 1:
        # the 2-core is the unique cycle; rays must hang directly off it
        core_v = set(m.vertices)
        core_e = {e.id: e for e in m.edges}
        stripped = True
        while stripped:
            stripped = False
            for v in list(core_v):
                inc = [e for e in core_e.values()
                       if v in (e.u, e.v) and not e.is_loop()]
                lo = [e for e in core_e.values() if e.is_loop() and e.u == v]
                if not lo and len(inc) == 1:
                    core_v.remove(v)
                    del core_e[inc[0].id]
                    stripped = True
        sun_ok = True
        for e in m.edges:
            if e.id in core_e:
                continue
            endp = sorted((e.u, e.v), key=lambda x: x in core_v)
            leaf, attach = endp[0], endp[1]
            if not (attach in core_v and degs[leaf] == 1):
                sun_ok = False
                break
        if sun_ok:
            classes.add(SUN)
            detail["sun_core"] = tuple(sorted(core_v, key=idkey))
            # exactly two rayed core vertices on a 2-vertex core
            if (len(core_v) == 2 and len(core_e) == 2
                    and not any(e.is_loop() for e in core_e.values())):
                rays = [e for e in m.edges if e.id not in core_e]
                attach_pts = {e.u if e.u in core_v else e.v for e in rays}
                if len(rays) == 2 and len(attach_pts) == 2:
                    classes.add(CYCLE_TWO_RAYS)

    # pulsar: two hubs, parallel arcs between them, rays only at the hubs
    if CYCLE in classes:
        classes.add(PULSAR)
        classes.add(SUN)
    else:
        hubs = [v for v in m.vertices if degs[v] >= 2]
        if len(hubs) == 2 and not any(e.is_loop() for e in m.edges):
            u, v = hubs
            arcs = [e for e in m.edges if {e.u, e.v} == {u, v}]
            rays = [e for e in m.edges if {e.u, e.v} != {u, v}]
            rays_ok = all(
                (e.u in (u, v)) != (e.v in (u, v)) for e in rays
            ) and all(degs[x] == 1 for e in rays for x in (e.u, e.v)
                      if x not in (u, v))
            if len(arcs) >= 2 and rays_ok and len(arcs) + len(rays) == ne:
                classes.add(PULSAR)
                detail["pulsar_hubs"] = (u, v)
                detail["pulsar_arcs"] = len(arcs)

    # h-graph: one bridge between two degree-3 hubs, two rays each
    hubs3 = [v for v in m.vertices if degs[v] == 3]
    if (b1 == 0 and len(hubs3) == 2 and nv == 6 and ne == 5):
        u, v = hubs3
        bridge = [e for e in m.edges if {e.u, e.v} == {u, v}]
        if len(bridge) == 1 and len(leaves) == 4:
            classes.add(HGRAPH)
            detail["h_hubs"] = (u, v)

    return classes, detail


def classify_shape(g: Graph) -> Shape:
    """Shape of the smoothed graph under the fixed precedence order."""
    m = smooth(g)
    classes, detail = _shape_memberships(m)
    tag = GENERAL
    for t in SHAPE_PRECEDENCE:
        if t in classes:
            tag = t
            break
    detail["smoothed_vertices"] = len(m.vertices)
    detail["smoothed_edges"] = len(m.edges)
    return Shape(tag, frozenset(classes), detail)


def simple_cycles(g: Graph, cap: int = DEFAULT_CYCLE_CAP) -> tuple:
    """All simple cycles of a normalized graph, deterministically ordered.

    Backtracking rooted at the least vertex of each cycle; every cycle is
    emitted once, in its canonical rotation.  Raises ResourceLimitError
    beyond `cap` cycles.
    """
    if not g.is_simple():
        raise PreconditionError("simple_cycles expects a normalized graph")
    order = {v: i for i, v in enumerate(g.vertices)}
    found = []

    def extend(start, path, on_path):
        last = path[-1]
        for y in g.neighbors(last):
            if y == start and len(path) >= 3:
                # canonical direction: second vertex below last vertex
                if order[path[1]] < order[path[-1]]:
                    eids = []
                    for i in range(len(path)):
                        a, b = path[i], path[(i + 1) % len(path)]
                        eids.append(g.simple_adjacency[a][b].id)
                    found.append(Cycle(tuple(path), tuple(eids)))
                    if len(found) > cap:
                        raise ResourceLimitError(
                            f"cycle count exceeds cap {cap}")
            elif y not in on_path and order[y] > order[start]:
                path.append(y)
                on_path.add(y)
                extend(start, path, on_path)
                on_path.remove(y)
                path.pop()

    for start in g.vertices:
        extend(start, [start], {start})
    found.sort(key=lambda c: (tuple(sorted(c.vertices, key=idkey)), c.vertices))
    return tuple(found)


def first_betti(x) -> int:
    """|E| - |V| + #components for a Graph or Subgraph."""
    if isinstance(x, Subgraph):
        return x.as_graph().first_betti()
    return x.first_betti()
