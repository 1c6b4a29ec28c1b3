"""Mod-2 cohomology: coboundaries, the ordered cup product on degree-1
cochains, the pairing tensor, and cup-product regularity (property A)."""

from __future__ import annotations

import random

import pytest

import covertype as ct
from covertype import gf2
from covertype.cohomology import (
    Cochain,
    coboundary_matrix,
    cochain_support,
    cup_1_1,
    h1_cocycle_basis,
    has_property_A,
    pairing_tensor,
    property_a_witness,
)
from covertype.homology import chain_data, chain_vector, homology_basis
from covertype.errors import PreconditionError


def random_cochain(rng, complex_, degree):
    n = len(complex_.simplices(degree))
    return Cochain(degree, gf2.Gf2Vector(n, rng.getrandbits(n)))


def test_coboundary_is_dual_to_boundary(torus):
    d2 = chain_data(torus).boundary_matrix(2)
    assert coboundary_matrix(torus, 1) == d2.transpose()
    delta0 = coboundary_matrix(torus, 0)
    delta1 = coboundary_matrix(torus, 1)
    assert (delta1 @ delta0).is_zero()


def test_coboundary_evaluation():
    k = ct.build_complex([("a", "b", "c")])
    f = Cochain(0, gf2.Gf2Vector.from_coords([1, 0, 0]))  # indicator of a
    df = coboundary_matrix(k, 0) @ f.values
    # (delta f)(uv) = f(u) + f(v): exactly the edges touching a
    assert cochain_support(k, Cochain(1, df)) == (("a", "b"), ("a", "c"))


def test_coboundary_shapes():
    edge = ct.build_complex([("a", "b")])
    d0 = coboundary_matrix(edge, 0)
    assert (d0.rows, d0.cols) == (1, 2)
    assert d0.row(0).coords() == [1, 1]
    triangle = ct.build_complex([("a", "b", "c")])
    d1 = coboundary_matrix(triangle, 1)
    assert (d1.rows, d1.cols) == (1, 3)
    assert d1.row(0).coords() == [1, 1, 1]


def test_cup_product_front_back_rule():
    k = ct.build_complex([("a", "b", "c")])
    edges = k.simplices(1)

    def indicator(*picked):
        return Cochain(1, gf2.Gf2Vector.from_support(
            len(edges), [edges.index(e) for e in picked]
        ))

    front = indicator(("a", "b"))
    back = indicator(("b", "c"))
    # order matters: only front-edge then back-edge evaluates to 1
    assert cup_1_1(k, front, back).values.bits == 1
    assert cup_1_1(k, back, front).values.bits == 0
    assert cup_1_1(k, front, front).values.bits == 0


def test_cup_is_bilinear(torus):
    rng = random.Random(5)
    for _ in range(10):
        a = random_cochain(rng, torus, 1)
        b = random_cochain(rng, torus, 1)
        c = random_cochain(rng, torus, 1)
        ab = Cochain(1, a.values + b.values)
        left = cup_1_1(torus, ab, c).values
        assert left == cup_1_1(torus, a, c).values + cup_1_1(torus, b, c).values
        right = cup_1_1(torus, a, Cochain(1, b.values + c.values)).values
        assert right == cup_1_1(torus, a, b).values + cup_1_1(torus, a, c).values


def test_cup_rejects_wrong_degree_or_complex(torus, sphere):
    two = Cochain(2, gf2.Gf2Vector(len(torus.simplices(2)), 0))
    one = Cochain(1, gf2.Gf2Vector(len(torus.simplices(1)), 0))
    with pytest.raises(PreconditionError):
        cup_1_1(torus, two, one)
    with pytest.raises(PreconditionError):
        cup_1_1(sphere, one, one)
    with pytest.raises(PreconditionError):
        cochain_support(sphere, one)


def test_h1_cocycle_basis_sizes_and_cocycle_property():
    for name, b1 in (
        ("sphere_4", 0),
        ("projective_plane_6", 1),
        ("torus_7", 2),
        ("klein_bottle_8", 2),
        ("nonorientable_genus3_9", 3),
        ("genus2_10", 4),
        ("m2_homotopy_9", 4),
    ):
        k = ct.load_bundled(name)
        basis = h1_cocycle_basis(k)
        assert len(basis) == b1
        delta1 = coboundary_matrix(k, 1)
        span = gf2.Span(
            len(k.simplices(1)), gf2.image_basis(coboundary_matrix(k, 0))
        )
        for rep in basis:
            assert (delta1 @ rep.values).is_zero()
            assert span.add(rep.values)  # independent modulo coboundaries


def test_h1_cocycle_basis_hollow_triangle():
    k = ct.build_complex([("a", "b"), ("a", "c"), ("b", "c")])
    basis = h1_cocycle_basis(k)
    assert len(basis) == 1
    assert basis[0].values.weight() == 1  # a single-edge indicator suffices


def test_pairing_tensor_torus(torus):
    tensor = pairing_tensor(torus)
    assert (tensor.b1, tensor.b2) == (2, 1)
    # the intersection form of the torus is the hyperbolic plane
    assert tensor.entries == (((0,), (1,)), ((1,), (0,)))
    assert gf2.rank(tensor.flattened()) == 2


def test_pairing_tensor_projective_plane(projective_plane):
    tensor = pairing_tensor(projective_plane)
    assert (tensor.b1, tensor.b2) == (1, 1)
    assert tensor.entries == (((1,),),)  # the generator squares to 1


def test_pairing_tensor_empty_when_h1_vanishes(sphere):
    tensor = pairing_tensor(sphere)
    assert (tensor.b1, tensor.b2) == (0, 1)
    assert tensor.entries == ()


def test_property_a_degenerate_cases():
    point = ct.build_complex([("a",)])
    assert has_property_A(point)  # vacuous: nothing to pair
    circle = ct.build_complex([("a", "b"), ("a", "c"), ("b", "c")])
    assert not has_property_A(circle)  # b1 = 1 but H^2 = 0


def test_pairing_tensor_shape(genus2):
    tensor = pairing_tensor(genus2)
    assert (tensor.b1, tensor.b2) == (4, 1)
    flat = tensor.flattened()
    assert (flat.rows, flat.cols) == (4, 4)
    assert gf2.rank(flat) == 4
    # mod 2 the pairing is symmetric
    assert all(
        tensor.entries[i][j] == tensor.entries[j][i]
        for i in range(4)
        for j in range(4)
    )


@pytest.mark.parametrize(
    "name,expected",
    [
        ("sphere_4", True),  # vacuous: b1 = 0
        ("projective_plane_6", True),
        ("torus_7", True),
        ("klein_bottle_8", True),
        ("nonorientable_genus3_9", True),
        ("genus2_10", True),
        ("m2_homotopy_9", True),
        ("side_sphere_5", True),
        ("torus_wedge_circle_9", False),
    ],
)
def test_property_a_on_bundled(name, expected):
    k = ct.load_bundled(name)
    assert has_property_A(k) is expected
    witness = property_a_witness(k)
    assert (witness is None) is expected


def test_witness_class_on_wedge(torus_wedge_circle):
    """The circle summand of the wedge pairs to zero with everything."""
    k = torus_wedge_circle
    witness = property_a_witness(k)
    assert witness is not None
    assert cochain_support(k, witness) == (("1", "8"),)
    # verify the witness directly: nonzero class, all pairings vanish
    data = chain_data(k)
    cycles = [chain_vector(data, 2, z) for z in homology_basis(k, 2)]
    span = gf2.Span(
        len(k.simplices(1)), gf2.image_basis(coboundary_matrix(k, 0))
    )
    assert not span.contains(witness.values)
    for beta in h1_cocycle_basis(k):
        for z in cycles:
            assert cup_1_1(k, witness, beta).values.dot(z) == 0
            assert cup_1_1(k, beta, witness).values.dot(z) == 0


@pytest.mark.parametrize("seed", range(8))
def test_pairing_ignores_coboundary_perturbations(seed, torus, klein_bottle):
    """Cup pairings against homology classes only depend on the
    cohomology class of each factor."""
    rng = random.Random(seed)
    for k in (torus, klein_bottle):
        data = chain_data(k)
        cycles = [chain_vector(data, 2, z) for z in homology_basis(k, 2)]
        basis = h1_cocycle_basis(k)
        delta0 = coboundary_matrix(k, 0)
        alpha = rng.choice(basis)
        f = gf2.Gf2Vector(len(k.vertices), rng.getrandbits(len(k.vertices)))
        perturbed = Cochain(1, alpha.values + delta0 @ f)
        for beta in basis:
            for z in cycles:
                assert cup_1_1(k, alpha, beta).values.dot(z) == cup_1_1(
                    k, perturbed, beta
                ).values.dot(z)
                assert cup_1_1(k, beta, alpha).values.dot(z) == cup_1_1(
                    k, beta, perturbed
                ).values.dot(z)


def test_property_a_insensitive_to_vertex_relabeling(torus):
    """Relabeling vertices permutes the canonical bases but cannot
    change the regularity verdict."""
    relabeled = ct.build_complex(
        [[f"v{ord(x)}" for x in s] for s in torus.maximal_simplices()]
    )
    assert has_property_A(relabeled) is True
    tensor = pairing_tensor(relabeled)
    assert (tensor.b1, tensor.b2) == (2, 1)
