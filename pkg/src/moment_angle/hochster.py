"""Multigraded and bigraded algebraic Betti numbers via Hochster's formula.

The bigraded Betti number beta^{-i,2j} of the face ring is the sum over all
j-element vertex subsets J of the rank of reduced cohomology of the induced
subcomplex K_J in degree j-i-1; the same per-subset ranks assemble the
Poincare vectors of the moment-angle complex Z_K and of the real
moment-angle complex R_K.
"""

import itertools
from dataclasses import dataclass

from .errors import CapacityError, InputError
from .rational_linalg import reduced_cohomology_rank, reduced_cohomology_ranks

FULL_TABLE_CAPACITY = 22


def multigraded_betti(K, i, J):
    """beta^{-i, 2J}: rank of reduced H^{|J|-i-1} of the induced subcomplex on J."""
    J = tuple(sorted(set(J)))
    if i < 0 or i > len(J):
        raise InputError(f"homological degree {i} outside 0..{len(J)}")
    return reduced_cohomology_rank(K.induced(J), len(J) - i - 1)


@dataclass(frozen=True)
class BettiTable:
    bigraded: dict  # (i, j) -> rank, only nonzero entries
    zk_poincare: tuple  # Betti numbers of Z_K by total degree
    rk_poincare: tuple  # Betti numbers of R_K by total degree

    def rank(self, i, j):
        return self.bigraded.get((i, j), 0)

    def sorted_entries(self):
        return sorted((i, j, r) for (i, j), r in self.bigraded.items())


def bigraded_betti_table(K, multidegrees=None, capacity=FULL_TABLE_CAPACITY):
    """Full bigraded Betti table plus Z_K and R_K Poincare vectors.

    Enumerates all 2^m vertex subsets unless an explicit iterable of
    multidegrees is supplied; the enumeration is guarded by ``capacity`` and
    fails loudly rather than truncating.
    """
    if multidegrees is None:
        if K.m > capacity:
            raise CapacityError(
                "betti-table",
                f"full table needs 2^{K.m} subsets; capacity is m <= {capacity} "
                "(pass an explicit multidegree filter for targeted queries)",
            )
        subsets = itertools.chain.from_iterable(
            itertools.combinations(range(1, K.m + 1), size) for size in range(K.m + 1)
        )
    else:
        subsets = [tuple(sorted(set(J))) for J in multidegrees]

    bigraded = {}
    zk = {}
    rk = {}
    for J in subsets:
        profile = reduced_cohomology_ranks(K.induced(J))
        size = len(J)
        for d, r in profile.items():
            if not r:
                continue
            i = size - d - 1
            key = (i, size)
            bigraded[key] = bigraded.get(key, 0) + r
            p_zk = d + size + 1
            zk[p_zk] = zk.get(p_zk, 0) + r
            p_rk = d + 1
            rk[p_rk] = rk.get(p_rk, 0) + r

    def to_vector(data):
        top = max(data) if data else 0
        return tuple(data.get(p, 0) for p in range(top + 1))

    return BettiTable(bigraded, to_vector(zk), to_vector(rk))


def component_count_betti(K, i):
    """beta^{-i, 2(i+1)} computed from connected-component counts.

    Sums (number of components of K_J) - 1 over all (i+1)-subsets J; the
    components of an induced subcomplex are those of its 1-skeleton, with
    isolated vertices counting as components.
    """
    if i < 1:
        raise InputError(f"component-count Betti numbers need i >= 1, got {i}")
    total = 0
    for J in itertools.combinations(range(1, K.m + 1), i + 1):
        total += K.component_count(J) - 1
    return total
