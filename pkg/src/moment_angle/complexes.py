"""Finite abstract simplicial complexes on the vertex set {1, ..., m}.

A complex is stored by its set of minimal non-faces (the generators of the
corresponding squarefree monomial ideal); the maximal faces are derived
lazily by hypergraph dualization and cached.  Every singleton {i} is required
to be a face, so complexes carry no ghost vertices.  All values are
canonicalized and immutable after construction; equality and hashing use the
canonical form (vertex labels are carried along but never affect any
computation).

Vertices are 1-indexed everywhere in the public API.  Internally subsets are
represented both as sorted tuples and as bitmasks (bit v-1 for vertex v).
"""

import itertools
import math
from typing import Iterable, NamedTuple

from .errors import CapacityError, GhostVertexError, InputError

ISOMORPHISM_CAPACITY = 9


def _mask_of(vertices, m):
    mask = 0
    for v in vertices:
        if not isinstance(v, int) or v < 1 or v > m:
            raise InputError(f"vertex {v!r} out of range 1..{m}")
        mask |= 1 << (v - 1)
    return mask


def _tuple_of(mask):
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _antichain_min(masks):
    """Inclusion-minimal elements of a collection of bitmasks."""
    masks = sorted(set(masks), key=lambda x: (bin(x).count("1"), x))
    kept = []
    for m in masks:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return kept


def _antichain_max(masks):
    masks = sorted(set(masks), key=lambda x: (-bin(x).count("1"), x))
    kept = []
    for m in masks:
        if not any(k & m == m for k in kept):
            kept.append(m)
    return kept


def _minimal_transversals(edges, m):
    """All inclusion-minimal vertex sets hitting every edge (Berge's method).

    ``edges`` is a list of bitmasks over m vertices.  An empty edge admits no
    transversal; zero edges admit exactly the empty transversal.
    """
    trans = [0]
    for e in edges:
        if e == 0:
            return []
        hit, miss = [], []
        for t in trans:
            (hit if t & e else miss).append(t)
        if not miss:
            continue
        new = list(hit)
        verts = _tuple_of(e)
        for t in miss:
            new.extend(t | (1 << (v - 1)) for v in verts)
        trans = _antichain_min(new)
    return trans


class StructureReport(NamedTuple):
    is_flag: bool
    connectivity: float  # q such that all non-faces have size >= q+1; math.inf for a simplex


class SimplicialComplex:
    """A simplicial complex given by vertex count and minimal non-faces."""

    __slots__ = ("m", "labels", "_mf_masks", "_full_mask", "_cache")

    def __init__(self, m, minimal_nonfaces=(), labels=None):
        if not isinstance(m, int) or m < 0:
            raise InputError(f"vertex count must be a nonnegative integer, got {m!r}")
        self.m = m
        self._full_mask = (1 << m) - 1
        masks = []
        for nf in minimal_nonfaces:
            mask = _mask_of(nf, m)
            size = bin(mask).count("1")
            if size != len(tuple(nf)):
                raise InputError(f"non-face {tuple(nf)!r} has repeated vertices")
            if size < 2:
                raise GhostVertexError(
                    f"non-face {tuple(nf)!r} has size {size}; singletons must be faces"
                )
            masks.append(mask)
        self._mf_masks = tuple(sorted(_antichain_min(masks)))
        if labels is None:
            labels = tuple(str(i) for i in range(1, m + 1))
        else:
            labels = tuple(str(x) for x in labels)
            if len(labels) != m:
                raise InputError(f"expected {m} labels, got {len(labels)}")
        self.labels = labels
        self._cache = {}

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_minimal_nonfaces(cls, m, minimal_nonfaces, labels=None):
        return cls(m, minimal_nonfaces, labels)

    @classmethod
    def from_maximal_faces(cls, m, maximal_faces, labels=None):
        """Inverse constructor: recover the minimal non-faces by dualization.

        A subset is a non-face exactly when it meets the complement of every
        maximal face, so the minimal non-faces are the minimal transversals
        of the complement hypergraph.
        """
        face_masks = []
        covered = 0
        for f in maximal_faces:
            mask = _mask_of(f, m)
            face_masks.append(mask)
            covered |= mask
        if covered != (1 << m) - 1:
            missing = _tuple_of(((1 << m) - 1) ^ covered)
            raise GhostVertexError(f"vertices {missing} lie in no maximal face")
        face_masks = _antichain_max(face_masks)
        full = (1 << m) - 1
        complements = [full ^ f for f in face_masks]
        mf = _minimal_transversals(complements, m)
        K = cls(m, [_tuple_of(x) for x in mf], labels)
        K._cache["maximal_faces"] = tuple(sorted(face_masks))
        return K

    @classmethod
    def full_simplex(cls, m):
        return cls(m, ())

    @classmethod
    def empty(cls):
        """The complex {emptyset} on zero vertices (reduced cohomology k in degree -1)."""
        return cls(0, ())

    @classmethod
    def from_json_dict(cls, data):
        if not isinstance(data, dict) or "m" not in data:
            raise InputError("complex JSON must be an object with an \"m\" field")
        m = data["m"]
        labels = data.get("labels")
        if "minimal_nonfaces" in data:
            return cls(m, data["minimal_nonfaces"], labels)
        if "maximal_faces" in data:
            return cls.from_maximal_faces(m, data["maximal_faces"], labels)
        raise InputError("complex JSON needs \"minimal_nonfaces\" or \"maximal_faces\"")

    # -- canonical data ----------------------------------------------------

    @property
    def minimal_nonfaces(self):
        return tuple(_tuple_of(mask) for mask in self._mf_masks)

    def to_json_dict(self, include_maximal=False):
        out = {"m": self.m, "minimal_nonfaces": [list(nf) for nf in self.minimal_nonfaces]}
        if self.labels != tuple(str(i) for i in range(1, self.m + 1)):
            out["labels"] = list(self.labels)
        if include_maximal:
            out["maximal_faces"] = [list(f) for f in self.maximal_faces()]
        return out

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.m == other.m and self._mf_masks == other._mf_masks

    def __hash__(self):
        return hash((self.m, self._mf_masks))

    def __repr__(self):
        return f"SimplicialComplex(m={self.m}, |MF|={len(self._mf_masks)})"

    # -- faces ---------------------------------------------------------------

    def is_face_mask(self, mask):
        return all(nf & mask != nf for nf in self._mf_masks)

    def is_face(self, vertices):
        return self.is_face_mask(_mask_of(vertices, self.m))

    def faces(self, size):
        """All faces with ``size`` vertices, as sorted tuples in lex order."""
        key = ("faces", size)
        if key not in self._cache:
            if size == 0:
                out = ((),)
            else:
                out = tuple(
                    f
                    for f in itertools.combinations(range(1, self.m + 1), size)
                    if self.is_face_mask(_mask_of(f, self.m))
                )
            self._cache[key] = out
        return self._cache[key]

    @property
    def dim(self):
        """Dimension: one less than the largest face size; -1 for {emptyset}."""
        if "dim" not in self._cache:
            self._cache["dim"] = max(bin(f).count("1") for f in self._max_face_masks()) - 1
        return self._cache["dim"]

    def face_counts(self):
        """Number of faces of each size 0..dim+1 (index = cardinality)."""
        return tuple(len(self.faces(k)) for k in range(self.dim + 2))

    def _max_face_masks(self):
        if "maximal_faces" not in self._cache:
            trans = _minimal_transversals(self._mf_masks, self.m)
            self._cache["maximal_faces"] = tuple(
                sorted(self._full_mask ^ t for t in trans)
            )
        return self._cache["maximal_faces"]

    def maximal_faces(self):
        return tuple(sorted(_tuple_of(f) for f in self._max_face_masks()))

    # -- operations ----------------------------------------------------------

    def induced(self, vertices):
        """The induced subcomplex on ``vertices``, relabeled to 1..|I|.

        The minimal non-faces of the result are exactly the minimal non-faces
        contained in the vertex set.  The empty vertex set yields the complex
        {emptyset}, whose reduced cohomology has rank 1 in degree -1; this is
        the convention that makes Hochster-type sums literally correct.
        """
        vs = tuple(sorted(set(vertices)))
        mask = _mask_of(vs, self.m)
        relabel = {v: i + 1 for i, v in enumerate(vs)}
        mf = [
            tuple(relabel[v] for v in _tuple_of(nf))
            for nf in self._mf_masks
            if nf & mask == nf
        ]
        return SimplicialComplex(len(vs), mf, tuple(self.labels[v - 1] for v in vs))

    def join(self, other):
        """Simplicial join; the second factor's vertices are shifted by self.m."""
        mf = list(self.minimal_nonfaces)
        mf.extend(tuple(v + self.m for v in nf) for nf in other.minimal_nonfaces)
        return SimplicialComplex(self.m + other.m, mf, self.labels + other.labels)

    def structure_report(self):
        """Flagness and connectivity read off the minimal non-face sizes.

        A complex is flag iff every minimal non-face is a pair; it is
        q-connected iff every minimal non-face has at least q+1 vertices.
        A full simplex is q-connected for all q (connectivity = +inf).
        """
        if not self._mf_masks:
            return StructureReport(True, math.inf)
        sizes = [bin(nf).count("1") for nf in self._mf_masks]
        return StructureReport(all(s == 2 for s in sizes), min(sizes) - 1)

    def stellar_vertex_cut(self, face):
        """Stellar subdivision of a maximal face: the nerve move of a vertex cut.

        The face is removed, a new vertex m+1 is added, and the boundary of
        the face is coned over the new vertex.  The induced subcomplex on the
        old vertex set keeps its 1-skeleton unchanged.
        """
        f = tuple(sorted(set(face)))
        fmask = _mask_of(f, self.m)
        if fmask not in self._max_face_masks():
            raise InputError(f"{f} is not a maximal face")
        if len(f) < 2:
            raise GhostVertexError("cutting a maximal singleton would orphan its vertex")
        w = self.m + 1
        new_faces = [_tuple_of(g) for g in self._max_face_masks() if g != fmask]
        new_faces.extend(tuple(sorted(set(f) - {v})) + (w,) for v in f)
        return SimplicialComplex.from_maximal_faces(
            w, new_faces, self.labels + (str(w),)
        )

    # -- 1-skeleton helpers ---------------------------------------------------

    def graph_edges(self):
        return self.faces(2)

    def component_count(self, vertices=None):
        """Connected components of the 1-skeleton (isolated vertices count)."""
        if vertices is None:
            vertices = range(1, self.m + 1)
        verts = sorted(set(vertices))
        parent = {v: v for v in verts}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        vset = set(verts)
        for a, b in itertools.combinations(verts, 2):
            if {a, b} <= vset and self.is_face_mask(_mask_of((a, b), self.m)):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        return len({find(v) for v in verts})


# -- spec-level operation names -----------------------------------------------


def from_minimal_nonfaces(m, minimal_nonfaces, labels=None):
    return SimplicialComplex(m, minimal_nonfaces, labels)


def from_maximal_faces(m, maximal_faces, labels=None):
    return SimplicialComplex.from_maximal_faces(m, maximal_faces, labels)


def maximal_faces(K):
    return K.maximal_faces()


def induced_subcomplex(K, vertices):
    return K.induced(vertices)


def join(K1, K2):
    return K1.join(K2)


def structure_report(K):
    return K.structure_report()


def stellar_vertex_cut(K, face):
    return K.stellar_vertex_cut(face)


def are_isomorphic(K1, K2):
    """Brute-force isomorphism test, for identifying small nerve complexes."""
    if K1.m != K2.m:
        return False
    if K1.m > ISOMORPHISM_CAPACITY:
        raise CapacityError(
            "isomorphism",
            f"isomorphism search is limited to m <= {ISOMORPHISM_CAPACITY}",
        )
    mf1 = K1.minimal_nonfaces
    mf2 = set(K2.minimal_nonfaces)
    if len(mf1) != len(mf2):
        return False
    if sorted(len(f) for f in mf1) != sorted(len(f) for f in mf2):
        return False
    for perm in itertools.permutations(range(1, K1.m + 1)):
        mapped = {tuple(sorted(perm[v - 1] for v in nf)) for nf in mf1}
        if mapped == mf2:
            return True
    return False
