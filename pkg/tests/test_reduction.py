"""The reduction pipeline: collapses, maximal-edge contractions,
surplus-cycle excision, and the certified vertex lower bound."""

from __future__ import annotations

import pytest

import covertype as ct
from covertype.complexes import COLLAPSE, CONTRACTION, EXCISION, apply_move
from covertype.reduction import (
    BoundCertificate,
    ReductionTrace,
    certify_lower_bound,
    collapse_all,
    eliminate_maximal_edges,
    excise_to_surface_homology,
    reduce_to_certificate,
)
from covertype.surfaces import SurfaceClass
from covertype.errors import (
    InconsistencyError,
    PreconditionError,
    PropertyAViolationError,
    StageError,
)

from helpers import (
    SURFACE_FILES,
    attach_dunce_with_bridge,
    attach_flap,
    barycentric_subdivision,
    dunce_hat,
    randomized_thickening,
)


def test_collapse_all_solid_tetrahedron():
    solid = ct.build_complex([("a", "b", "c", "d")])
    final, trace = collapse_all(solid)
    assert final.f_vector == (1,)
    assert all(m.kind == COLLAPSE for m in trace.moves)
    assert trace.initial_f == (4, 6, 4, 1)
    assert trace.final_f == (1,)
    assert all(b == (1,) or b == (1, 0) or b == (1, 0, 0) or b == (1, 0, 0, 0)
               for b in trace.betti_steps)
    assert trace.property_a_final


def test_collapse_all_removes_flap(torus):
    flapped = attach_flap(torus, ("1", "2"), "z")
    final, trace = collapse_all(flapped)
    assert final == torus
    assert trace.move_counts() == {COLLAPSE: 2}
    assert trace.betti_steps == ((1, 2, 1),) * 3


def test_collapse_all_fixes_collapse_free_complexes(torus):
    final, trace = collapse_all(torus)
    assert final == torus
    assert trace.moves == ()
    hat = dunce_hat()  # contractible but has no free faces
    final, trace = collapse_all(hat)
    assert final == hat


def test_eliminate_maximal_edges_contracts_bridge(torus):
    bridged = attach_dunce_with_bridge(torus, "1", "d_")
    assert bridged.free_faces() == ()
    final, trace = eliminate_maximal_edges(bridged)
    assert trace.move_counts()[CONTRACTION] == 1
    assert all(b == (1, 2, 1) for b in trace.betti_steps)
    assert trace.property_a_final
    # the bridge is gone but the hat still hangs off the merged vertex
    assert len(final.vertices) == len(bridged.vertices) - 1
    assert final.maximal_simplices() == tuple(
        s for s in final.simplices(2)
    )


def test_eliminate_maximal_edges_requires_collapsed_input(torus):
    flapped = attach_flap(torus, ("1", "2"), "z")
    with pytest.raises(PreconditionError):
        eliminate_maximal_edges(flapped)


def test_eliminate_maximal_edges_gate(torus_wedge_circle):
    # b2 = 1 and the wedge circle kills cup-product regularity, so the
    # contraction stage refuses to start
    with pytest.raises(PreconditionError, match="regularity"):
        eliminate_maximal_edges(torus_wedge_circle)


def test_eliminate_detects_essential_circle():
    # a graph cycle with a chord: no free faces, b2 = 0 so no gate,
    # but contracting any edge would crush an essential circle
    theta = ct.build_complex(
        [("a", "b"), ("b", "c"), ("c", "d"), ("a", "d"), ("a", "c")]
    )
    assert theta.free_faces() == ()
    with pytest.raises(PropertyAViolationError):
        eliminate_maximal_edges(theta)


def test_excision_worked_example(side_sphere):
    final, trace = excise_to_surface_homology(side_sphere)
    assert trace.initial_f == (5, 9, 7)
    assert final.f_vector == (5, 9, 6)
    assert trace.move_counts() == {EXCISION: 1}
    move = trace.moves[0]
    assert move.simplices == (("1", "2", "3"),)
    # the recorded evidence is the 2-cycle the excision killed
    assert move.aux == (
        ("1", "2", "3"),
        ("1", "2", "4"),
        ("1", "3", "4"),
        ("2", "3", "4"),
    )
    assert trace.betti_steps == ((1, 0, 2), (1, 0, 1))
    assert ("1", "2", "3") not in final


def test_excision_is_trivial_on_surfaces(torus):
    final, trace = excise_to_surface_homology(torus)
    assert final == torus
    assert trace.moves == ()


def test_excision_requires_b2_equal_one(side_sphere):
    skeleton = side_sphere.skeleton(2)  # b2 = 2 with nothing bounding
    with pytest.raises(PreconditionError):
        excise_to_surface_homology(skeleton)
    solid = ct.build_complex([("a", "b", "c", "d")])
    with pytest.raises(PreconditionError):
        excise_to_surface_homology(solid)
    crowded = ct.build_complex([tuple("abcdef")]).skeleton(2)
    assert ct.betti_numbers(crowded) == (1, 0, 10)
    with pytest.raises(PreconditionError):
        excise_to_surface_homology(crowded)


def test_trace_concatenation_checks_seams():
    with pytest.raises(InconsistencyError):
        ReductionTrace((4, 6, 4), (4, 6, 4), (), ((1, 0, 1), (1, 0, 1)), True)


# ---------------------------------------------------------------------
# certificates


def test_certificate_side_sphere(side_sphere):
    cert = certify_lower_bound(side_sphere, SurfaceClass(True, 0))
    assert cert == BoundCertificate(chi=2, f_vector=(5, 9, 6), rho=4)
    assert cert.triangles_cover_edges
    assert cert.simple_graph_bound
    assert cert.euler_vertex_bound


def test_certificate_m2_homotopy(m2_homotopy):
    final, trace, cert = reduce_to_certificate(m2_homotopy, SurfaceClass(True, 2))
    assert cert == BoundCertificate(chi=-2, f_vector=(9, 36, 25), rho=9)
    assert trace.moves == ()  # the model is already irreducible
    assert final == m2_homotopy
    assert cert.f_vector[0] == cert.rho  # the bound is attained


def test_certificate_subdivided_sphere(sphere):
    fine = barycentric_subdivision(sphere)
    assert fine.f_vector == (14, 36, 24)
    final, trace, cert = reduce_to_certificate(fine, SurfaceClass(True, 0))
    assert cert.rho == 4
    assert cert.f_vector[0] >= 4
    assert cert.f_vector[0] <= 14  # vertex count never grows
    assert final.f_vector == cert.f_vector


@pytest.mark.parametrize("name,surface", SURFACE_FILES)
def test_certificates_on_bundled_surfaces(name, surface):
    k = ct.load_bundled(name)
    final, trace, cert = reduce_to_certificate(k, surface)
    # a closed-surface triangulation is already fully reduced
    assert trace.moves == ()
    assert final == k
    assert cert.chi == surface.chi
    assert cert.f_vector == k.f_vector
    assert cert.f_vector[0] >= cert.rho


@pytest.mark.parametrize("seed", range(6))
def test_pipeline_on_thickened_surfaces(seed):
    k, surface, log = randomized_thickening(seed)
    final, trace, cert = reduce_to_certificate(k, surface)
    assert cert.chi == surface.chi
    assert cert.f_vector[0] >= cert.rho, log
    assert trace.initial_f == k.skeleton(2).f_vector
    assert trace.final_f == final.f_vector
    assert trace.property_a_final
    counts = trace.move_counts()
    assert counts.get(EXCISION, 0) == trace.betti_steps[0][2] - 1


@pytest.mark.parametrize("seed", (0, 3))
def test_trace_replays_from_skeleton(seed):
    k, surface, _ = randomized_thickening(seed)
    final, trace, _ = reduce_to_certificate(k, surface)
    current = k.skeleton(2)
    for move in trace.moves:
        current = apply_move(current, move)
    assert current == final


def test_stage_error_names_the_failing_stage(torus, torus_wedge_circle):
    with pytest.raises(StageError) as info:
        reduce_to_certificate(torus, SurfaceClass(True, 0))
    assert info.value.stage == "homology-check"
    assert str(info.value).startswith("[homology-check]")

    # the wedge has the Betti numbers of N_3 but fails the cup check
    with pytest.raises(StageError) as info:
        reduce_to_certificate(torus_wedge_circle, SurfaceClass(False, 3))
    assert info.value.stage == "contraction"
    assert isinstance(info.value.cause, PreconditionError)


def test_certificate_validation():
    with pytest.raises(InconsistencyError, match="chi"):
        BoundCertificate(chi=1, f_vector=(5, 9, 6), rho=6)
    with pytest.raises(InconsistencyError, match="rho"):
        BoundCertificate(chi=2, f_vector=(5, 9, 6), rho=5)
    # a lone triangle: every inequality needs at least two triangles per edge
    with pytest.raises(InconsistencyError, match="3\\*a2 >= 2\\*a1"):
        BoundCertificate(chi=1, f_vector=(3, 3, 1), rho=6)
    # all three inequalities hold at (3, 3, 2) yet three vertices are
    # too few: the linear side condition of rho is what rules it out
    with pytest.raises(InconsistencyError, match="below the bound"):
        BoundCertificate(chi=2, f_vector=(3, 3, 2), rho=4)
