"""Shared oracles and generators for the test suite.

The brute-force functions here are deliberately independent of the library's
own algorithms: faces are found by scanning all vertex subsets, so they can
arbitrate the dualization and induced-subcomplex code paths.
"""

import itertools
import random

from moment_angle.complexes import SimplicialComplex
from moment_angle.koszul import KoszulCochain
from moment_angle.real_cochains import RealCochain


def brute_faces(m, nonfaces):
    """All faces by scanning every subset for non-face containment."""
    nf = [set(x) for x in nonfaces]
    out = []
    for size in range(m + 1):
        for cand in itertools.combinations(range(1, m + 1), size):
            cset = set(cand)
            if not any(x <= cset for x in nf):
                out.append(cand)
    return out


def brute_maximal_faces(m, nonfaces):
    faces = brute_faces(m, nonfaces)
    sets = [set(f) for f in faces]
    return sorted(
        f for f, fs in zip(faces, sets) if not any(fs < other for other in sets)
    )


def brute_minimal_nonfaces(m, maximal_faces):
    maxsets = [set(f) for f in maximal_faces]
    out = []
    for size in range(2, m + 1):
        for cand in itertools.combinations(range(1, m + 1), size):
            cset = set(cand)
            if any(cset <= f for f in maxsets):
                continue
            if any(set(prev) <= cset for prev in out):
                continue
            out.append(cand)
    return sorted(out)


def all_complexes(m):
    """Every complex on m vertices without ghost vertices (antichains of non-faces)."""
    pool = [
        frozenset(c)
        for size in range(2, m + 1)
        for c in itertools.combinations(range(1, m + 1), size)
    ]
    results = []

    def grow(start, chosen):
        results.append(SimplicialComplex(m, [tuple(sorted(c)) for c in chosen]))
        for idx in range(start, len(pool)):
            cand = pool[idx]
            if any(cand <= c or c <= cand for c in chosen):
                continue
            grow(idx + 1, chosen + [cand])

    grow(0, [])
    return results


def random_complex(rng, m):
    """A random antichain of non-faces of size >= 2 on m vertices."""
    count = rng.randint(0, m + 2) if m >= 2 else 0
    nonfaces = []
    for _ in range(count):
        size = rng.randint(2, m)
        nonfaces.append(tuple(sorted(rng.sample(range(1, m + 1), size))))
    return SimplicialComplex(m, nonfaces)


def random_complexes(seed, count, max_m=6, min_m=3):
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        out.append(random_complex(rng, rng.randint(min_m, max_m)))
    return out


def random_koszul_cochain(rng, K, terms=3):
    out = KoszulCochain.zero(K)
    for _ in range(terms):
        verts = list(range(1, K.m + 1))
        u = tuple(v for v in verts if rng.random() < 0.4)
        rest = [v for v in verts if v not in u]
        v_part = tuple(v for v in rest if rng.random() < 0.4)
        if not K.is_face(v_part):
            continue
        out = out + KoszulCochain.monomial(K, u, v_part, rng.randint(-3, 3))
    return out


def random_real_cochain(rng, K, terms=3):
    out = RealCochain.zero(K)
    for _ in range(terms):
        verts = list(range(1, K.m + 1))
        u = tuple(v for v in verts if rng.random() < 0.4)
        if not K.is_face(u):
            continue
        rest = [v for v in verts if v not in u]
        t_part = tuple(v for v in rest if rng.random() < 0.4)
        out = out + RealCochain.monomial(K, u, t_part, rng.randint(-3, 3))
    return out


def homogeneous_pieces(cochain, kind="koszul"):
    """Split a cochain into its homogeneous-degree pieces."""
    cls = KoszulCochain if kind == "koszul" else RealCochain
    by_degree = {}
    for mono, coeff in cochain.terms.items():
        by_degree.setdefault(mono.degree, {})[mono] = coeff
    return [cls(cochain.complex, terms) for _, terms in sorted(by_degree.items())]
