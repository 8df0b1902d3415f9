"""Deciding when a graph braid group is trivial, cyclic, free,
hyperbolic, toral relatively hyperbolic or acylindrically hyperbolic.

Two independent routes are implemented for the headline properties.
The fast path evaluates the classification criteria directly on the
graph: shape memberships for three or more particles, cycle and
complement-component predicates for two and three.  The oracle route
replays the structure of the proofs: it hunts for a pair of disjoint
subgraphs whose braid groups are respectively nontrivial/nontrivial
(destroying hyperbolicity) or free-containing/nontrivial (producing
F2 x Z), over a doubly subdivided copy of the graph so that subgraphs
may legitimately keep half-edges toward deleted material.  The two
routes are checked against each other exhaustively in the test suite.

Disjoint always means vertex-disjoint; degrees of original vertices are
preserved by subdivision, which is what makes the complement trick
sound.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import PreconditionError, ResourceLimitError
from .graph import (
    CYCLE, CYCLE_TWO_RAYS, HGRAPH, PULSAR, ROSE, STAR, SUN, THETA, TREE,
    Cycle, Graph, Subgraph, classify_shape, idkey, normalize,
    simple_cycles, smooth, subdivide_all,
)

ORACLE_SMOOTH_VERTEX_CAP = 15


# -- elementary verdict helpers -----------------------------------------

def _component_graphs(g: Graph) -> tuple:
    outs = []
    for comp in g.components():
        outs.append(g.induced(comp).as_graph())
    return tuple(outs)


def _is_segment_graph(g: Graph) -> bool:
    """Path graphs, including the one-vertex degenerate case."""
    return (g.first_betti() == 0
            and all(g.degree(v) <= 2 for v in g.vertices))


def _is_cycle_graph(g: Graph) -> bool:
    return (g.first_betti() == 1
            and all(g.degree(v) == 2 for v in g.vertices))


def _is_star3_graph(g: Graph) -> bool:
    degs = sorted(g.degree(v) for v in g.vertices)
    return (g.first_betti() == 0 and bool(degs) and degs[-1] == 3
            and sum(1 for d in degs if d >= 3) == 1)


@dataclass(frozen=True)
class ParticleAssignment:
    """Particle counts per connected component, in component order."""

    counts: tuple

    @property
    def total(self) -> int:
        return sum(self.counts)


def assignments(g: Graph, n: int) -> tuple:
    comps = g.components()
    outs = []
    for split in itertools.product(range(n + 1), repeat=len(comps)):
        if sum(split) == n:
            outs.append(ParticleAssignment(split))
    return tuple(outs)


def is_trivial(g: Graph, assignment: ParticleAssignment) -> tuple:
    """(verdict, witness component) for triviality of the braid group.

    Components with one particle must be trees, components with two or
    more must be segments; empty components are unconstrained.
    """
    comps = _component_graphs(g)
    if len(comps) != len(assignment.counts):
        raise PreconditionError("assignment does not match component count")
    for comp, k in zip(comps, assignment.counts):
        if k == 0:
            continue
        if k == 1:
            if comp.first_betti() != 0:
                return (False, comp)
        else:
            if not _is_segment_graph(comp):
                return (False, comp)
    return (True, None)


def is_infinite_cyclic(g: Graph, n: int) -> bool:
    """Connected graphs: Z for one particle on a single cycle class,
    for two particles on a cycle or a three-arm star, and for three or
    more only on a cycle."""
    if not g.is_connected():
        raise PreconditionError("cyclicity test expects a connected graph")
    if n == 1:
        return g.first_betti() == 1
    shape = classify_shape(g)
    if n == 2:
        return shape.is_a(CYCLE) or (
            shape.is_a(STAR) and shape.detail.get("arms") == 3)
    return shape.is_a(CYCLE)


# -- disjoint-cycle machinery -------------------------------------------

def _complement_components(g: Graph, banned: frozenset) -> tuple:
    """Vertex sets of the components of g minus a vertex set."""
    seen = set(banned)
    comps = []
    for start in g.vertices:
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            x = stack.pop()
            for y in g.neighbors(x):
                if y not in seen and y not in comp:
                    comp.add(y)
                    stack.append(y)
        seen |= comp
        comps.append(frozenset(comp))
    return tuple(comps)


def _component_betti(g: Graph, comp: frozenset) -> int:
    edges = sum(1 for e in g.edges if e.u in comp and e.v in comp)
    return edges - len(comp) + 1


def disjoint_cycle_pair(g: Graph) -> Optional[tuple]:
    """A vertex-disjoint pair of simple cycles, or None.

    A pair exists iff the complement of some cycle still carries a
    cycle, so the scan is linear in the number of cycles.
    """
    cycles = simple_cycles(g)
    for c in cycles:
        for comp in _complement_components(g, c.vertex_set):
            if _component_betti(g, comp) >= 1:
                inner = g.induced(comp).as_graph()
                other = simple_cycles(inner)[0]
                return (c, other)
    return None


def essential_vertex_off_cycle(g: Graph) -> Optional[tuple]:
    """An essential vertex not on some simple cycle, or None."""
    ess = g.essential_vertices()
    if not ess:
        return None
    for c in simple_cycles(g):
        for v in ess:
            if v not in c.vertex_set:
                return (v, c)
    return None


def is_hyperbolic(g: Graph, n: int) -> tuple:
    """(verdict, witness) following the per-n characterisation.

    One particle is always free; two exclude a disjoint cycle pair;
    three demand a tree, sun, rose or pulsar; four or more a rose.
    """
    if not g.is_connected():
        raise PreconditionError("hyperbolicity test expects a connected graph")
    if n == 1:
        return (True, "free fundamental group")
    if n == 2:
        pair = disjoint_cycle_pair(g)
        return (pair is None, pair)
    shape = classify_shape(g)
    if n == 3:
        ok = any(shape.is_a(t) for t in (TREE, SUN, ROSE, PULSAR))
        return (ok, shape)
    return (shape.is_a(ROSE), shape)


def is_hyperbolic_by_obstructions(g: Graph, n: int) -> bool:
    """The equivalent obstruction form: no disjoint cycle pair, for three
    particles also no essential vertex off a cycle, for four or more at
    most one essential vertex."""
    if n == 1:
        return True
    if disjoint_cycle_pair(g) is not None:
        return False
    if n == 2:
        return True
    if essential_vertex_off_cycle(g) is not None:
        return False
    if n == 3:
        return True
    return len(smooth(g).essential_vertices()) <= 1


def contains_f2xz(g: Graph, n: int) -> tuple:
    """(verdict, witness) for an F2 x Z subgroup, connected graphs.

    Two particles: a cycle whose complement keeps a component of first
    Betti number two.  Three: the five obstruction patterns.  Four:
    anything but rose / H / cycle-with-two-rays / theta.  Five and up:
    anything but a rose.
    """
    if not g.is_connected():
        raise PreconditionError("expects a connected graph")
    if n == 1:
        return (False, None)
    if n == 2:
        for c in simple_cycles(g):
            for comp in _complement_components(g, c.vertex_set):
                if _component_betti(g, comp) >= 2:
                    return (True, ("cycle with b1>=2 complement", c, comp))
        return (False, None)
    if n == 3:
        witness = _f2xz_obstruction_n3(g)
        return (witness is not None, witness)
    shape = classify_shape(g)
    if n == 4:
        ok_shapes = (ROSE, HGRAPH, CYCLE_TWO_RAYS, THETA)
        if any(shape.is_a(t) for t in ok_shapes):
            return (False, None)
        return (True, ("shape outside the four-particle list", shape.tag))
    if shape.is_a(ROSE):
        return (False, None)
    return (True, ("not a rose", shape.tag))


def _f2xz_obstruction_n3(g: Graph) -> Optional[tuple]:
    """First matching three-particle obstruction, or None.

    (a) a cycle with a complement component of first Betti number >= 2;
    (b) a degree->=4 vertex off some cycle;
    (c) a cycle with a complement component holding two essential vertices;
    (d) an essential vertex whose complement has a b1 >= 2 component;
    (e) a cycle disjoint from a cycle through an essential vertex.
    """
    ess = set(g.essential_vertices())
    deg4 = {v for v in ess if g.degree(v) >= 4}
    cycles = simple_cycles(g)
    for c in cycles:
        comps = _complement_components(g, c.vertex_set)
        for v in deg4:
            if v not in c.vertex_set:
                return ("b", v, c)
        for comp in comps:
            if _component_betti(g, comp) >= 2:
                return ("a", c, comp)
            if len(comp & ess) >= 2:
                return ("c", c, comp)
            if _component_betti(g, comp) >= 1 and (comp & ess):
                inner = g.induced(comp).as_graph()
                for c2 in simple_cycles(inner):
                    if c2.vertex_set & ess:
                        return ("e", c, c2)
    for v in ess:
        for comp in _complement_components(g, frozenset((v,))):
            if _component_betti(g, comp) >= 2:
                return ("d", v, comp)
    return None


def is_toral_rel_hyp(g: Graph, n: int) -> tuple:
    """(verdict, witness): hyperbolic relative to free abelian subgroups,
    which for these groups is exactly the absence of F2 x Z."""
    has, witness = contains_f2xz(g, n)
    return (not has, witness)


def acyl_hyp_status(g: Graph, n: int) -> str:
    """'trivial', 'infinite_cyclic' or 'acylindrically_hyperbolic'."""
    if not g.is_connected():
        raise PreconditionError("expects a connected graph")
    trivial, _ = is_trivial(g, ParticleAssignment((n,)))
    if trivial:
        return "trivial"
    if is_infinite_cyclic(g, n):
        return "infinite_cyclic"
    return "acylindrically_hyperbolic"


def free_certificate(g: Graph, n: int) -> tuple:
    """('free'|'unknown', reason).  Never claims non-freeness."""
    if not g.is_connected():
        raise PreconditionError("expects a connected graph")
    if n == 1:
        return ("free", "one-particle groups are graph fundamental groups")
    shape = classify_shape(g)
    if shape.is_a(ROSE):
        return ("free", "rose graph")
    if n == 2:
        cycles = simple_cycles(g)
        if cycles:
            common = frozenset.intersection(*[c.vertex_set for c in cycles])
            if common:
                v = sorted(common, key=idkey)[0]
                return ("free", f"vertex {v} lies on every cycle")
        else:
            return ("free", "no cycles at all")
    return ("unknown", "no freeness criterion applies")


def contains_free_nonabelian(g: Graph, assignment: ParticleAssignment) -> bool:
    """Free nonabelian subgroup test, componentwise.

    One particle needs two independent cycles; two particles anything
    beyond segment/cycle/three-arm star; three or more anything beyond
    segment/cycle.
    """
    comps = _component_graphs(g)
    if len(comps) != len(assignment.counts):
        raise PreconditionError("assignment does not match component count")
    for comp, k in zip(comps, assignment.counts):
        if k == 0:
            continue
        if k == 1:
            if comp.first_betti() >= 2:
                return True
        elif k == 2:
            if not (_is_segment_graph(comp) or _is_cycle_graph(comp)
                    or _is_star3_graph(comp)):
                return True
        else:
            if not (_is_segment_graph(comp) or _is_cycle_graph(comp)):
                return True
    return False


# -- proof-derived oracles ----------------------------------------------
#
# Searches run on the twice-subdivided graph.  The removable witnesses
# are the minimal carriers of a nontrivial braid group: a simple cycle
# (one particle) or additionally a three-arm star germ (two or more).
# Everything else is read off the components of the complement, whose
# half-edge stubs survive as subdivision vertices.

class _FastGraph:
    """Plain-dict adjacency with original-graph bookkeeping."""

    def __init__(self, g: Graph):
        self.adj = {v: set() for v in g.vertices}
        for e in g.edges:
            self.adj[e.u].add(e.v)
            self.adj[e.v].add(e.u)

    def component_flags(self, banned: set) -> list:
        """For each component of the complement: (b1, max_degree,
        vertex count, degree multiset facts needed by the conditions)."""
        seen = set(banned)
        out = []
        for start in self.adj:
            if start in seen:
                continue
            comp = {start}
            stack = [start]
            while stack:
                x = stack.pop()
                for y in self.adj[x]:
                    if y not in banned and y not in comp:
                        comp.add(y)
                        stack.append(y)
            edges = sum(1 for x in comp for y in self.adj[x]
                        if y in comp) // 2
            seen |= comp
            degs = [sum(1 for y in self.adj[x] if y in comp) for x in comp]
            b1 = edges - len(comp) + 1
            maxdeg = max(degs) if degs else 0
            deg3plus = sum(1 for d in degs if d >= 3)
            out.append((b1, maxdeg, deg3plus, len(comp)))
        return out


def _oracle_flags(flags: tuple) -> dict:
    """Translate component shape data into the lemma conditions."""
    b1, maxdeg, deg3plus, _ = flags
    segment = b1 == 0 and maxdeg <= 2
    cycle = b1 == 1 and maxdeg == 2 and deg3plus == 0
    star3 = b1 == 0 and deg3plus == 1 and maxdeg == 3
    return {
        "nt1": b1 >= 1,                       # one particle: has a cycle
        "nt2": not segment,                   # two or more: not a segment
        "free1": b1 >= 2,
        "free2": not (segment or cycle or star3),
        "free3": maxdeg >= 3,
    }


@dataclass(frozen=True)
class OracleVerdict:
    verdict: bool
    witness: Optional[tuple] = None


class SubgraphOracle:
    """Exhaustive Λ1/Λ2 search over a doubly subdivided graph.

    Witness subgraphs are enumerated once and reused for every particle
    count; complements are analysed with raw adjacency sets.
    """

    def __init__(self, g: Graph):
        if not g.is_simple():
            raise PreconditionError("oracle expects a normalized graph")
        if len(smooth(g).vertices) > ORACLE_SMOOTH_VERTEX_CAP:
            raise ResourceLimitError(
                f"smoothed graph exceeds {ORACLE_SMOOTH_VERTEX_CAP} vertices")
        self.base = g
        self.g2 = subdivide_all(g, 2)
        self.fast = _FastGraph(self.g2)
        self._witnesses = None

    def _midpoint_toward(self, e, v: str) -> str:
        # subdivide_all names interior vertices {eid}#s1, {eid}#s2 from e.u
        return f"{e.id}#s1" if e.u == v else f"{e.id}#s2"

    def witnesses(self) -> list:
        """(kind, removed vertex set) with kind 'cycle' or 'star'."""
        if self._witnesses is not None:
            return self._witnesses
        outs = []
        for c in simple_cycles(self.base):
            removed = set(c.vertices)
            for eid in c.edge_ids:
                removed.add(f"{eid}#s1")
                removed.add(f"{eid}#s2")
            outs.append(("cycle", frozenset(removed), c))
        for v in self.base.essential_vertices():
            incident = sorted(self.base.incidence[v], key=lambda e: idkey(e.id))
            for arms in itertools.combinations(incident, 3):
                removed = {v}
                for e in arms:
                    removed.add(self._midpoint_toward(e, v))
                outs.append(("star", frozenset(removed), (v, tuple(a.id for a in arms))))
        self._witnesses = outs
        return outs

    def _scan(self, want_key: str, witness_kinds: tuple) -> Optional[tuple]:
        for kind, removed, info in self.witnesses():
            if kind not in witness_kinds:
                continue
            for flags in self.fast.component_flags(removed):
                if _oracle_flags(flags)[want_key]:
                    return (kind, info, flags)
        return None

    def nonhyperbolic(self, n: int) -> OracleVerdict:
        """A disjoint pair of nontrivial-braid-group subgraphs reachable
        with n particles destroys hyperbolicity."""
        if n < 2:
            return OracleVerdict(False)
        hit = self._scan("nt1", ("cycle",))          # split 1 + 1
        if hit:
            return OracleVerdict(True, ("1+1",) + hit)
        if n >= 3:
            hit = self._scan("nt2", ("cycle",))      # cycle + >=2 particles
            if hit:
                return OracleVerdict(True, ("1+2",) + hit)
            hit = self._scan("nt1", ("star",))       # star pair + 1 particle
            if hit:
                return OracleVerdict(True, ("2+1",) + hit)
        if n >= 4:
            hit = self._scan("nt2", ("star",))
            if hit:
                return OracleVerdict(True, ("2+2",) + hit)
        return OracleVerdict(False)

    def f2xz(self, n: int) -> OracleVerdict:
        """A free-containing subgraph disjoint from a nontrivial one."""
        if n < 2:
            return OracleVerdict(False)
        combos = []
        if n >= 2:
            combos.append(("free1", ("cycle",), "1+1"))
        if n >= 3:
            combos.append(("free1", ("star",), "1+2"))
            combos.append(("free2", ("cycle",), "2+1"))
        if n >= 4:
            combos.append(("free2", ("star",), "2+2"))
            combos.append(("free3", ("cycle",), "3+1"))
        if n >= 5:
            combos.append(("free3", ("star",), "3+2"))
        for want, kinds, split in combos:
            hit = self._scan(want, kinds)
            if hit:
                return OracleVerdict(True, (split,) + hit)
        return OracleVerdict(False)


def oracle_nonhyperbolic(g: Graph, n: int) -> OracleVerdict:
    return SubgraphOracle(g).nonhyperbolic(n)


def oracle_f2xz(g: Graph, n: int) -> OracleVerdict:
    return SubgraphOracle(g).f2xz(n)


# -- peripheral collections for relative hyperbolicity -------------------

@dataclass(frozen=True)
class PeripheralReport:
    cycle_pairs_covered: bool
    uncovered_pair: Optional[tuple]
    intersections_ok: bool
    bad_intersection: Optional[tuple]
    paths_ok: bool
    bad_path: Optional[tuple]
    all_proper: bool

    @property
    def valid(self) -> bool:
        return (self.cycle_pairs_covered and self.intersections_ok
                and self.paths_ok)

    @property
    def applies(self) -> bool:
        """Criterion verdict: relative hyperbolicity follows only when the
        conditions hold with proper members."""
        return self.valid and self.all_proper


def _subgraph_contains_cycle(sub: Subgraph, c: Cycle) -> bool:
    return (c.vertex_set <= sub.vertices
            and frozenset(c.edge_ids) <= sub.edge_ids)


def check_peripheral_collection(g: Graph, collection: Sequence[Subgraph],
                                path_cap: int = 200000) -> PeripheralReport:
    """Verify the three sufficient conditions for two-particle relative
    hyperbolicity of a collection of subgraphs.

    1. every vertex-disjoint pair of simple cycles lies in one member;
    2. pairwise intersections are disjoint unions of segments;
    3. a reduced path between member vertices avoiding one of the
       member's cycles stays inside the member.
    """
    if not g.is_simple():
        raise PreconditionError("expects a normalized graph")
    cycles = simple_cycles(g)

    covered, uncovered = True, None
    for a, b in itertools.combinations(cycles, 2):
        if not a.disjoint_from(b):
            continue
        if not any(_subgraph_contains_cycle(s, a)
                   and _subgraph_contains_cycle(s, b) for s in collection):
            covered, uncovered = False, (a, b)
            break

    inter_ok, bad_inter = True, None
    for s1, s2 in itertools.combinations(collection, 2):
        vs = s1.vertices & s2.vertices
        es = s1.edge_ids & s2.edge_ids
        if not vs:
            continue
        part = Subgraph(g, vs, es).as_graph()
        if not all(_is_segment_graph(c) for c in _component_graphs(part)):
            inter_ok, bad_inter = False, (s1, s2)
            break

    paths_ok, bad_path = True, None
    budget = path_cap
    for sub in collection:
        if not paths_ok:
            break
        sub_cycles = [c for c in cycles if _subgraph_contains_cycle(sub, c)]
        if not sub_cycles:
            continue
        members = sorted(sub.vertices, key=idkey)
        for a, b in itertools.combinations(members, 2):
            outside = set(sub.vertices) - {a, b}
            for path in _simple_paths_avoiding(g, a, b, outside, budget):
                budget -= 1
                if budget <= 0:
                    raise ResourceLimitError("path enumeration cap hit")
                edges = {g.simple_adjacency[path[i]][path[i + 1]].id
                         for i in range(len(path) - 1)}
                if edges <= sub.edge_ids:
                    continue
                pv = set(path)
                for c in sub_cycles:
                    if not (pv & c.vertex_set):
                        paths_ok, bad_path = False, (sub, tuple(path), c)
                        break
                if not paths_ok:
                    break
            if not paths_ok:
                break

    proper = all(s.is_proper() for s in collection)
    return PeripheralReport(covered, uncovered, inter_ok, bad_inter,
                            paths_ok, bad_path, proper)


def _simple_paths_avoiding(g: Graph, a: str, b: str, banned: set, cap: int):
    """Simple a-b paths whose interior avoids `banned`."""
    path = [a]
    on_path = {a}
    produced = 0

    def rec():
        nonlocal produced
        last = path[-1]
        for y in g.neighbors(last):
            if y == b:
                yield path + [b]
                produced += 1
                if produced > cap:
                    raise ResourceLimitError("path enumeration cap hit")
            elif y not in on_path and y not in banned:
                path.append(y)
                on_path.add(y)
                yield from rec()
                on_path.remove(y)
                path.pop()

    yield from rec()


# -- aggregation ---------------------------------------------------------

@dataclass(frozen=True)
class ComponentVerdict:
    particles: int
    trivial: bool
    infinite_cyclic: bool
    hyperbolic: bool
    toral_rel_hyp: bool
    acyl_status: str
    free: str
    contains_f2: bool
    contains_f2xz: bool
    shape_tag: str


@dataclass(frozen=True)
class AssignmentReport:
    assignment: tuple
    per_component: tuple
    trivial: bool
    infinite_cyclic: bool
    hyperbolic: bool
    toral_rel_hyp: bool
    acyl_status: str
    free: str
    contains_f2: bool
    contains_f2xz: bool


@dataclass(frozen=True)
class ClassificationReport:
    fingerprint: str
    n: int
    connected: bool
    assignments: tuple
    oracle_agreement: Optional[dict]   # None when oracles were skipped
    oracle_note: str

    @property
    def main(self) -> AssignmentReport:
        if len(self.assignments) != 1:
            raise PreconditionError("main verdict needs a connected graph")
        return self.assignments[0]


def _classify_component(comp: Graph, k: int) -> ComponentVerdict:
    shape = classify_shape(comp)
    if k == 0:
        return ComponentVerdict(0, True, False, True, True, "trivial",
                                "free", False, False, shape.tag)
    trivial, _ = is_trivial(comp, ParticleAssignment((k,)))
    cyclic = is_infinite_cyclic(comp, k)
    hyp, _ = is_hyperbolic(comp, k)
    trh, _ = is_toral_rel_hyp(comp, k)
    f2 = contains_free_nonabelian(comp, ParticleAssignment((k,)))
    f2z, _ = contains_f2xz(comp, k)
    status = acyl_hyp_status(comp, k)
    free, _ = free_certificate(comp, k)
    return ComponentVerdict(k, trivial, cyclic, hyp, trh, status,
                            free, f2, f2z, shape.tag)


def _combine(per: tuple) -> dict:
    """Product rules across components (torsion-free factors)."""
    nontrivial = [c for c in per if not c.trivial]
    trivial = not nontrivial
    cyclic = len(nontrivial) == 1 and nontrivial[0].infinite_cyclic
    hyperbolic = (len(nontrivial) == 0
                  or (len(nontrivial) == 1 and nontrivial[0].hyperbolic))
    f2 = any(c.contains_f2 for c in per)
    f2xz = (any(c.contains_f2xz for c in per)
            or (f2 and any(not c.trivial and not c.contains_f2 for c in per))
            or (sum(1 for c in per if c.contains_f2) >= 2))
    trh = not f2xz
    if trivial:
        acyl = "trivial"
    elif cyclic:
        acyl = "infinite_cyclic"
    elif len(nontrivial) == 1:
        acyl = nontrivial[0].acyl_status
    else:
        acyl = "product_of_infinite_groups"
    if all(c.free == "free" for c in per):
        free = "free" if len(nontrivial) <= 1 else "unknown"
    else:
        free = "unknown"
    return dict(trivial=trivial, infinite_cyclic=cyclic,
                hyperbolic=hyperbolic, toral_rel_hyp=trh,
                acyl_status=acyl, free=free,
                contains_f2=f2, contains_f2xz=f2xz)


def _check_consistency(r: AssignmentReport):
    if r.trivial:
        assert not r.contains_f2 and not r.contains_f2xz
        assert r.hyperbolic and r.toral_rel_hyp
    if r.infinite_cyclic:
        assert not r.contains_f2 and r.hyperbolic
    if r.hyperbolic:
        assert r.toral_rel_hyp
    if r.contains_f2xz:
        assert r.contains_f2


def full_report(g: Graph, n: int, run_oracles: str = "auto") -> ClassificationReport:
    """Classify B_n over all particle assignments of the graph.

    ``run_oracles``: 'auto' runs the brute-force cross-checks when the
    graph is connected and small enough, 'on' forces them (may raise),
    'off' skips.  Skips are flagged, never silent.
    """
    g = normalize(g)
    reports = []
    comps = _component_graphs(g)
    for assignment in assignments(g, n):
        per = tuple(_classify_component(c, k)
                    for c, k in zip(comps, assignment.counts))
        combined = _combine(per)
        rep = AssignmentReport(assignment.counts, per, **combined)
        _check_consistency(rep)
        reports.append(rep)

    oracle_agreement = None
    note = "oracles skipped"
    if run_oracles != "off" and g.is_connected() and n >= 2:
        try:
            oracle = SubgraphOracle(g)
            fast_hyp, _ = is_hyperbolic(g, n)
            fast_f2xz, _ = contains_f2xz(g, n)
            o_nonhyp = oracle.nonhyperbolic(n)
            o_f2xz = oracle.f2xz(n)
            oracle_agreement = {
                "hyperbolic": fast_hyp == (not o_nonhyp.verdict),
                "toral_rel_hyp": fast_f2xz == o_f2xz.verdict,
            }
            note = "oracles ran"
        except ResourceLimitError as exc:
            if run_oracles == "on":
                raise
            oracle_agreement = None
            note = f"oracles skipped: {exc}"
    return ClassificationReport(g.fingerprint(), n, g.is_connected(),
                                tuple(reports), oracle_agreement, note)
