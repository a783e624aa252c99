"""Graphical building sets, nerves of graph-associahedra, and the formality classifier.

A building set on a ground set is a family of nonempty subsets containing all
singletons and closed under unions of intersecting members.  Its nerve
complex has one vertex per non-maximal element, and a set of elements spans a
face when it is *nested*: any two members are comparable or disjoint, and no
two-or-more pairwise disjoint members have their union in the building set.
Disconnected building sets contribute the join of their components' nerves
(single-vertex components contribute the empty complex, the join identity).

For a simple graph the building set consists of the connected induced
subgraph vertex sets, and the nerve is the boundary sphere of the
graph-associahedron.  The moment-angle manifold over a graph-associahedron
is formal exactly when every component of the graph is a vertex, an edge, a
path on 3 vertices, or a triangle; otherwise a nontrivial strictly defined
triple Massey product exists and is attached as a witness.
"""

import itertools
from dataclasses import dataclass
from typing import Optional

from .complexes import SimplicialComplex
from .errors import CapacityError, InputError
from .massey import TripleWitness, search_triple_products

GRAPH_CAPACITY = 10

FACTOR_EDGE = "S^3"
FACTOR_PATH3 = "(S^3 x S^4)^#5"
FACTOR_CYCLE3 = "(S^3 x S^5)^#9 # (S^4 x S^4)^#8"


@dataclass(frozen=True)
class Graph:
    """Simple graph on vertices 1..n."""

    n: int
    edges: tuple  # sorted tuple of sorted pairs

    @classmethod
    def from_edges(cls, n, edges):
        if n < 1:
            raise InputError(f"graph needs at least one vertex, got n={n}")
        clean = set()
        for e in edges:
            a, b = e
            if not (1 <= a <= n and 1 <= b <= n):
                raise InputError(f"edge {tuple(e)} outside 1..{n}")
            if a == b:
                raise InputError(f"loop at vertex {a}")
            clean.add((min(a, b), max(a, b)))
        return cls(n, tuple(sorted(clean)))

    @classmethod
    def from_json_dict(cls, data):
        if not isinstance(data, dict) or "n" not in data:
            raise InputError("graph JSON must be an object with an \"n\" field")
        return cls.from_edges(data["n"], data.get("edges", ()))

    def to_json_dict(self):
        return {"n": self.n, "edges": [list(e) for e in self.edges]}

    def neighbors(self, v):
        out = set()
        for a, b in self.edges:
            if a == v:
                out.add(b)
            elif b == v:
                out.add(a)
        return out

    def components(self):
        """Vertex sets of the connected components, sorted."""
        seen = set()
        comps = []
        for v in range(1, self.n + 1):
            if v in seen:
                continue
            stack, comp = [v], set()
            while stack:
                x = stack.pop()
                if x in comp:
                    continue
                comp.add(x)
                stack.extend(self.neighbors(x) - comp)
            seen |= comp
            comps.append(tuple(sorted(comp)))
        return tuple(sorted(comps))

    def induced_edges(self, vertices):
        vs = set(vertices)
        return tuple(e for e in self.edges if e[0] in vs and e[1] in vs)


@dataclass(frozen=True)
class BuildingSet:
    """Family of subsets of 1..ground containing the singletons and closed
    under unions of intersecting members."""

    ground: int
    sets: tuple  # sorted tuple of sorted tuples

    @classmethod
    def from_sets(cls, ground, sets, validate=True):
        family = {tuple(sorted(set(s))) for s in sets}
        family |= {(v,) for v in range(1, ground + 1)}
        for s in family:
            if not s or s[0] < 1 or s[-1] > ground:
                raise InputError(f"building-set element {s} outside 1..{ground}")
        if validate:
            elems = sorted(family)
            for s1, s2 in itertools.combinations(elems, 2):
                if set(s1) & set(s2):
                    union = tuple(sorted(set(s1) | set(s2)))
                    if union not in family:
                        raise InputError(
                            f"not a building set: {s1} and {s2} intersect but "
                            f"their union is missing"
                        )
        return cls(ground, tuple(sorted(family)))

    @property
    def is_connected(self):
        return tuple(range(1, self.ground + 1)) in self.sets

    def maximal_elements(self):
        """The maximal members; they partition the ground set."""
        out = []
        for s in self.sets:
            if not any(set(s) < set(t) for t in self.sets):
                out.append(s)
        return tuple(sorted(out))


def graphical_building_set(G):
    """All vertex subsets inducing a connected subgraph."""
    if G.n > GRAPH_CAPACITY:
        raise CapacityError(
            "graph-size", f"graphs are limited to {GRAPH_CAPACITY} vertices"
        )
    found = set()
    frontier = [frozenset((v,)) for v in range(1, G.n + 1)]
    while frontier:
        nxt = []
        for s in frontier:
            if s in found:
                continue
            found.add(s)
            reachable = set()
            for v in s:
                reachable |= G.neighbors(v)
            for u in reachable - s:
                grown = s | {u}
                if grown not in found:
                    nxt.append(grown)
        frontier = nxt
    return BuildingSet.from_sets(
        G.n, (tuple(sorted(s)) for s in found), validate=False
    )


def _component_nonfaces(elements, family):
    """Minimal non-nested subsets among the (non-maximal) elements of one block.

    Bad pairs are incomparable intersecting pairs and disjoint pairs with
    union in the family; larger minimal non-faces are pairwise disjoint
    collections whose union lies in the family.  The antichain reduction on
    construction of the nerve complex keeps exactly the minimal ones.
    """
    index = {s: i + 1 for i, s in enumerate(elements)}
    nonfaces = []
    for s1, s2 in itertools.combinations(elements, 2):
        a, b = set(s1), set(s2)
        if a & b:
            if not (a <= b or b <= a):
                nonfaces.append((index[s1], index[s2]))
        elif tuple(sorted(a | b)) in family:
            nonfaces.append((index[s1], index[s2]))

    def grow(start, chosen, union):
        if len(chosen) >= 2 and tuple(sorted(union)) in family:
            nonfaces.append(tuple(index[s] for s in chosen))
            return  # supersets cannot be minimal
        for idx in range(start, len(elements)):
            s = elements[idx]
            if union & set(s):
                continue
            grow(idx + 1, chosen + [s], union | set(s))

    grow(0, [], set())
    return len(elements), nonfaces


def nested_set_complex(B):
    """The nerve complex of the nestohedron: faces are the nested sets.

    Built per maximal element and joined; the vertex order within a block is
    by (size, lexicographic) over the non-maximal elements.
    """
    family = set(B.sets)
    out = SimplicialComplex.empty()
    for block in B.maximal_elements():
        elements = sorted(
            (s for s in B.sets if set(s) < set(block)), key=lambda s: (len(s), s)
        )
        m, nonfaces = _component_nonfaces(elements, family)
        labels = ["{" + ",".join(str(v) for v in s) + "}" for s in elements]
        out = out.join(SimplicialComplex(m, nonfaces, labels))
    return out


def associahedron_nerve(G):
    """Nerve of the graph-associahedron of G (components contribute a join)."""
    return nested_set_complex(graphical_building_set(G))


# -- formality ---------------------------------------------------------------------


@dataclass(frozen=True)
class ComponentVerdict:
    vertices: tuple
    kind: str  # vertex | edge | path3 | cycle3 | other
    factor: Optional[str]


@dataclass(frozen=True)
class FormalityVerdict:
    formal: bool
    components: tuple
    diffeo_type: tuple  # sphere/connected-sum factors, one per non-point component
    witness: Optional[TripleWitness]


def _classify_component(G, vertices):
    k = len(vertices)
    e = len(G.induced_edges(vertices))
    if k == 1:
        return ComponentVerdict(vertices, "vertex", None)
    if k == 2:
        return ComponentVerdict(vertices, "edge", FACTOR_EDGE)
    if k == 3 and e == 2:
        return ComponentVerdict(vertices, "path3", FACTOR_PATH3)
    if k == 3 and e == 3:
        return ComponentVerdict(vertices, "cycle3", FACTOR_CYCLE3)
    return ComponentVerdict(vertices, "other", None)


def _is_complete(G, vertices):
    k = len(vertices)
    return len(G.induced_edges(vertices)) == k * (k - 1) // 2


def formality_classify(G):
    """Formality of the moment-angle manifold over the graph-associahedron.

    Formal iff every component is a vertex, an edge, a 3-path, or a
    3-cycle; the manifold is then a product of the listed factors.  Otherwise
    a triple-product witness is attached: classes of dimension 3 when some
    big component is not complete on 4 vertices, else the (5, 3, 5) profile.
    """
    comps = [_classify_component(G, vs) for vs in G.components()]
    formal = all(c.kind != "other" for c in comps)
    if formal:
        return FormalityVerdict(
            formal=True,
            components=tuple(comps),
            diffeo_type=tuple(c.factor for c in comps if c.factor is not None),
            witness=None,
        )
    nerve = associahedron_nerve(G)
    big = [c for c in comps if c.kind == "other"]
    if any(not _is_complete(G, c.vertices) for c in big):
        witness = search_triple_products(nerve, require_strict=True)
    else:
        witness = search_triple_products(nerve, profile=(5, 3, 5), require_strict=True)
    return FormalityVerdict(
        formal=False, components=tuple(comps), diffeo_type=(), witness=witness
    )
