"""The homotopy-preserving reduction pipeline and its certificate.

Given a complex whose homology (and cup structure) matches a closed
surface, the pipeline excises surplus 2-cycles from the 2-skeleton,
collapses free faces, and contracts maximal edges, logging every move
with the Betti numbers after each step.  The final complex is pure
2-dimensional with no free faces, so counting arguments on its f-vector
certify the vertex lower bound rho for anything homotopy equivalent to
the surface.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cohomology import has_property_A
from .complexes import (
    MoveRecord,
    SimplicialComplex,
    collapse_free_face,
    contract_edge,
    remove_two_simplex,
)
from .errors import (
    CoveringTypeError,
    InconsistencyError,
    PreconditionError,
    StageError,
)
from .homology import betti_numbers, h2_epi_witness, homology_basis, surplus_cycle
from .surfaces import SurfaceClass, rho

__all__ = [
    "ReductionTrace",
    "BoundCertificate",
    "collapse_all",
    "eliminate_maximal_edges",
    "excise_to_surface_homology",
    "certify_lower_bound",
    "reduce_to_certificate",
]


@dataclass(frozen=True)
class ReductionTrace:
    """Replayable log of a reduction run.

    betti_steps[0] holds the Betti numbers of the initial complex and
    betti_steps[i] those after the i-th move, so the audit data always
    has one more entry than there are moves.
    """

    initial_f: tuple[int, ...]
    final_f: tuple[int, ...]
    moves: tuple[MoveRecord, ...]
    betti_steps: tuple[tuple[int, ...], ...]
    property_a_final: bool

    def __post_init__(self) -> None:
        if len(self.betti_steps) != len(self.moves) + 1:
            raise InconsistencyError("trace needs one Betti entry per step plus the initial one")

    def move_counts(self) -> dict[str, int]:
        counts: dict[str, int] = {}
        for m in self.moves:
            counts[m.kind] = counts.get(m.kind, 0) + 1
        return counts


def _same_betti(a: tuple[int, ...], b: tuple[int, ...]) -> bool:
    # a collapse may drop the dimension, shortening the tuple; trailing
    # zeros carry no homology
    n = max(len(a), len(b))
    return a + (0,) * (n - len(a)) == b + (0,) * (n - len(b))


def _concat_traces(first: ReductionTrace, second: ReductionTrace) -> ReductionTrace:
    if first.final_f != second.initial_f:
        raise InconsistencyError("traces do not compose: f-vectors disagree at the seam")
    return ReductionTrace(
        first.initial_f,
        second.final_f,
        first.moves + second.moves,
        first.betti_steps + second.betti_steps[1:],
        second.property_a_final,
    )


def collapse_all(
    complex_: SimplicialComplex,
) -> tuple[SimplicialComplex, ReductionTrace]:
    """Collapse free faces until none remain, lexicographically smallest
    face first.  Each elementary collapse is a homotopy equivalence, so
    the Betti numbers are asserted constant along the way."""
    current = complex_
    moves: list[MoveRecord] = []
    betti_steps = [betti_numbers(current)]
    while True:
        pairs = current.free_faces()
        if not pairs:
            break
        face, _ = pairs[0]
        current, record = collapse_free_face(current, face)
        moves.append(record)
        step = betti_numbers(current)
        if not _same_betti(step, betti_steps[-1]):
            raise InconsistencyError(
                f"collapse of {face} changed the Betti numbers {betti_steps[-1]} -> {step}"
            )
        betti_steps.append(step)
    trace = ReductionTrace(
        complex_.f_vector,
        current.f_vector,
        tuple(moves),
        tuple(betti_steps),
        has_property_A(current),
    )
    return current, trace


def eliminate_maximal_edges(
    complex_: SimplicialComplex,
) -> tuple[SimplicialComplex, ReductionTrace]:
    """Contract maximal edges (and re-collapse) until none remain.

    Requires a complex with no free faces.  When the complex carries
    2-dimensional homology, cup-product regularity is checked up front:
    it is the hypothesis that makes every maximal edge contractible.
    Without 2-cycles every cup product vanishes and the check carries
    no information, so each edge is vetted only by the path test inside
    contract_edge, which raises PropertyAViolationError on failure.
    """
    if complex_.free_faces():
        raise PreconditionError("eliminate_maximal_edges expects a complex with no free faces")
    betti0 = betti_numbers(complex_)
    if len(betti0) > 2 and betti0[2] >= 1 and not has_property_A(complex_):
        raise PreconditionError(
            "complex has 2-cycles but lacks cup-product regularity; contraction is not justified"
        )
    current = complex_
    moves: list[MoveRecord] = []
    betti_steps = [betti0]
    while True:
        maximal_edges = [
            e for e in current.simplices(1) if not current._facet_cofaces[e]
        ]
        if not maximal_edges:
            break
        edge = maximal_edges[0]
        current, record = contract_edge(current, edge)
        moves.append(record)
        step = betti_numbers(current)
        if not _same_betti(step, betti_steps[-1]):
            raise InconsistencyError(
                f"contraction of {edge} changed the Betti numbers {betti_steps[-1]} -> {step}"
            )
        betti_steps.append(step)
        current, sub = collapse_all(current)
        moves.extend(sub.moves)
        betti_steps.extend(sub.betti_steps[1:])
    trace = ReductionTrace(
        complex_.f_vector,
        current.f_vector,
        tuple(moves),
        tuple(betti_steps),
        has_property_A(current),
    )
    return current, trace


def excise_to_surface_homology(
    complex_: SimplicialComplex,
) -> tuple[SimplicialComplex, ReductionTrace]:
    """Cut the 2-skeleton down to a single 2-cycle class.

    Requires b2 = 1.  While the 2-skeleton has extra second homology,
    find a 2-cycle that bounds in the ambient complex, delete the
    lexicographically smallest triangle in its support, and record the
    cycle as evidence; each excision lowers b2 by exactly one and
    leaves b0, b1 alone.  Afterwards a cycle generating H_2 of the
    ambient complex is re-homed inside the result as a final check.
    """
    ambient_betti = betti_numbers(complex_)
    if len(ambient_betti) < 3 or ambient_betti[2] != 1:
        raise PreconditionError(
            f"excision expects one-dimensional H_2, found Betti numbers {ambient_betti}"
        )
    current = complex_.skeleton(2)
    moves: list[MoveRecord] = []
    betti_steps = [betti_numbers(current)]
    while betti_numbers(current)[2] > 1:
        found = surplus_cycle(complex_, current.simplices(2))
        if found is None:
            raise InconsistencyError(
                "2-skeleton has surplus homology but no cycle bounds in the ambient complex"
            )
        cycle, sigma = found
        current, record = remove_two_simplex(current, sigma, aux=cycle)
        moves.append(record)
        step = betti_numbers(current)
        prev = betti_steps[-1]
        if step[:2] != prev[:2] or step[2] != prev[2] - 1:
            raise InconsistencyError(
                f"excision of {sigma} moved the Betti numbers {prev} -> {step}"
            )
        betti_steps.append(step)
    if betti_steps[-1][:3] != ambient_betti[:3]:
        raise InconsistencyError(
            f"excised skeleton has Betti numbers {betti_steps[-1]}, ambient complex {ambient_betti[:3]}"
        )
    generator = homology_basis(complex_, 2)[0]
    if h2_epi_witness(complex_, current, generator) is None:
        raise InconsistencyError(
            "no cycle inside the excised skeleton represents the ambient H_2 generator"
        )
    trace = ReductionTrace(
        complex_.skeleton(2).f_vector,
        current.f_vector,
        tuple(moves),
        tuple(betti_steps),
        has_property_A(current),
    )
    return current, trace


@dataclass(frozen=True)
class BoundCertificate:
    """Final f-vector of a reduction run plus the counting inequalities
    that turn it into the vertex lower bound rho.

    For a pure 2-complex with no free faces: every edge lies in at
    least two triangles (3*a2 >= 2*a1), the 1-skeleton is a simple
    graph (2*a1 <= a0*(a0-1)), and together with chi = a0 - a1 + a2
    these force 6*chi >= 6*a0 - a0*(a0-1), which is exactly the
    statement a0 >= rho(chi).
    """

    chi: int
    f_vector: tuple[int, int, int]
    rho: int

    @property
    def triangles_cover_edges(self) -> bool:
        return 3 * self.f_vector[2] >= 2 * self.f_vector[1]

    @property
    def simple_graph_bound(self) -> bool:
        a0, a1 = self.f_vector[0], self.f_vector[1]
        return 2 * a1 <= a0 * (a0 - 1)

    @property
    def euler_vertex_bound(self) -> bool:
        a0 = self.f_vector[0]
        return 6 * self.chi >= 6 * a0 - a0 * (a0 - 1)

    def __post_init__(self) -> None:
        a0, a1, a2 = self.f_vector
        if a0 - a1 + a2 != self.chi:
            raise InconsistencyError("certificate f-vector does not have the declared chi")
        if self.rho != rho(self.chi):
            raise InconsistencyError("certificate rho does not match its chi")
        for label, ok in (
            ("3*a2 >= 2*a1", self.triangles_cover_edges),
            ("2*a1 <= a0*(a0-1)", self.simple_graph_bound),
            ("6*chi >= 6*a0 - a0*(a0-1)", self.euler_vertex_bound),
        ):
            if not ok:
                raise InconsistencyError(f"certificate inequality {label} fails for {self.f_vector}")
        if a0 < self.rho:
            raise InconsistencyError(
                f"final complex has {a0} vertices, below the bound rho = {self.rho}"
            )


def reduce_to_certificate(
    complex_: SimplicialComplex, surface: SurfaceClass
) -> tuple[SimplicialComplex, ReductionTrace, BoundCertificate]:
    """Run the full pipeline against a declared surface class.

    Stages: homology-check (Betti numbers must match the surface),
    excision, collapse, contraction, certificate.  Any stage error is
    re-raised as StageError naming the stage.
    """
    stage = "homology-check"
    try:
        expected = (1, 2 - surface.chi, 1)
        actual = betti_numbers(complex_)
        padded = actual + (0,) * max(0, 3 - len(actual))
        if padded[:3] != expected or any(b != 0 for b in padded[3:]):
            raise PreconditionError(
                f"Betti numbers {actual} do not match surface {surface.name} (expected {expected})"
            )

        stage = "excision"
        skeleton_complex, trace = excise_to_surface_homology(complex_)

        stage = "collapse"
        collapsed, collapse_trace = collapse_all(skeleton_complex)
        trace = _concat_traces(trace, collapse_trace)

        stage = "contraction"
        final, contract_trace = eliminate_maximal_edges(collapsed)
        trace = _concat_traces(trace, contract_trace)

        stage = "certificate"
        if any(len(s) != 3 for s in final.maximal_simplices()):
            raise InconsistencyError("final complex is not pure 2-dimensional")
        if final.free_faces():
            raise InconsistencyError("final complex still has free faces")
        chi = final.euler_characteristic()
        if chi != surface.chi:
            raise InconsistencyError(
                f"final chi {chi} differs from the surface's {surface.chi}"
            )
        if not trace.property_a_final:
            raise InconsistencyError("final complex lost cup-product regularity")
        if final.f_vector[0] > complex_.f_vector[0]:
            raise InconsistencyError("reduction increased the vertex count")
        certificate = BoundCertificate(chi, final.f_vector, rho(chi))
    except CoveringTypeError as err:
        raise StageError(stage, err) from err
    return final, trace, certificate


def certify_lower_bound(
    complex_: SimplicialComplex, surface: SurfaceClass
) -> BoundCertificate:
    """Reduce the complex and return just the resulting certificate."""
    return reduce_to_certificate(complex_, surface)[2]
