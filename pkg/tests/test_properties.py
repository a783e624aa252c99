"""Cross-cutting property suites, runnable standalone.

Each test here re-checks one structural law end to end: differentials
square to zero, Leibniz and graded commutativity hold, defining systems
satisfy their relations exactly, the multiwedge respects joins, and greedy
choices do not move strictly defined values.
"""

import random

from moment_angle.complexes import SimplicialComplex
from moment_angle.families import FamilySpec, family_complex, polygon_nerve
from moment_angle.koszul import component_basis
from moment_angle.massey import (
    CellFailure,
    build_defining_system,
    family_massey_input,
    massey_value,
)
from moment_angle.multiwedge import j_construction
from moment_angle.rational_linalg import coboundary_matrix

from conftest import (
    homogeneous_pieces,
    random_complex,
    random_koszul_cochain,
    random_real_cochain,
)


def test_simplicial_delta_squared_zero():
    rng = random.Random(101)
    for _ in range(30):
        K = random_complex(rng, rng.randint(1, 6))
        for d in range(-1, K.dim):
            assert coboundary_matrix(K, d).matmul(coboundary_matrix(K, d + 1)).is_zero()


def test_koszul_differential_squares_to_zero():
    rng = random.Random(103)
    for _ in range(50):
        K = random_complex(rng, rng.randint(1, 6))
        c = random_koszul_cochain(rng, K, terms=4)
        assert c.differential().differential().is_zero()


def test_real_differential_squares_to_zero():
    rng = random.Random(107)
    for _ in range(50):
        K = random_complex(rng, rng.randint(1, 5))
        c = random_real_cochain(rng, K, terms=4)
        assert c.differential().differential().is_zero()


def test_leibniz_both_models():
    rng = random.Random(109)
    for _ in range(30):
        K = random_complex(rng, rng.randint(1, 5))
        x, y = random_koszul_cochain(rng, K), random_koszul_cochain(rng, K)
        for xd in homogeneous_pieces(x):
            lhs = (xd * y).differential()
            rhs = xd.differential() * y + xd.scaled((-1) ** xd.degree()) * y.differential()
            assert (lhs - rhs).is_zero()
        a, b = random_real_cochain(rng, K), random_real_cochain(rng, K)
        for ad in homogeneous_pieces(a, kind="real"):
            lhs = (ad * b).differential()
            rhs = ad.differential() * b + ad.scaled((-1) ** ad.degree()) * b.differential()
            assert (lhs - rhs).is_zero()


def test_graded_commutativity():
    rng = random.Random(113)
    for _ in range(30):
        K = random_complex(rng, rng.randint(1, 6))
        x, y = random_koszul_cochain(rng, K), random_koszul_cochain(rng, K)
        for xd in homogeneous_pieces(x):
            for yd in homogeneous_pieces(y):
                sign = (-1) ** (xd.degree() * yd.degree())
                assert (xd * yd - (yd * xd).scaled(sign)).is_zero()


def test_defining_system_residuals():
    hexn = polygon_nerve(6)
    from moment_angle.koszul import KoszulCochain
    from moment_angle.massey import MasseyClassInput, MasseyInput

    classes = [
        MasseyClassInput((j, j + 3), 0, KoszulCochain.monomial(hexn, (j + 3,), (j,)))
        for j in (1, 2, 3)
    ]
    ds = build_defining_system(MasseyInput(hexn, classes))
    assert all(res.is_zero() for res in ds.residuals().values())
    for n, s in [(3, 1), (4, 1), (3, 2)]:
        ds = build_defining_system(family_massey_input(n, s))
        assert all(res.is_zero() for res in ds.residuals().values())


def test_join_multiwedge_compatibility():
    rng = random.Random(127)
    for _ in range(20):
        K1 = random_complex(rng, rng.randint(1, 4))
        K2 = random_complex(rng, rng.randint(1, 4))
        J1 = tuple(rng.randint(1, 2) for _ in range(K1.m))
        J2 = tuple(rng.randint(1, 2) for _ in range(K2.m))
        assert j_construction(K1.join(K2), J1 + J2) == j_construction(K1, J1).join(
            j_construction(K2, J2)
        )


def test_greedy_determinism_for_lemma_condition_inputs():
    rng = random.Random(131)
    for n, s in [(3, 1), (3, 2), (4, 1)]:
        inp = family_massey_input(n, s)
        base = massey_value(build_defining_system(inp))
        for _ in range(3):
            perturbations = {}
            for span in range(2, inp.k):
                for i in range(1, inp.k + 2 - span):
                    j = i + span
                    support = inp.window_support(i, j - 1)
                    degree = inp.window_total_degree(i, j - 1) - 1
                    comp = component_basis(inp.complex, support, degree)
                    coords = [0] * len(comp.monomials)
                    for vec in comp.cocycle_basis():
                        w = rng.randint(-1, 1)
                        coords = [c + w * v for c, v in zip(coords, vec)]
                    perturbations[(i, j)] = comp.cochain_from_coordinates(coords)
            ds = build_defining_system(inp, perturbations)
            assert not isinstance(ds, CellFailure)
            assert massey_value(ds).class_coordinates == base.class_coordinates
