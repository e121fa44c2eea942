"""Decision procedures for inscribable and circumscribable type.

A graph is of circumscribable type exactly when its edges admit a
weighting with each weight strictly inside (0, 1/2), every face boundary
summing to 1, and every non-facial circuit summing to strictly more than
1.  Inscribable type is the same question asked of the planar dual.

The strict system is decided through its closed margin relaxation: we
maximize a shared slack t and answer yes exactly when the optimum is
positive.  Circuit rows are generated lazily: each round adds the
minimum-weight non-facial circuit whenever it violates the margin-coupled
row, and the loop stops when none does, at which point the relaxation
optimum is the optimum of the full (exponential) system.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from .errors import (
    EulerError,
    InternalError,
    IterationLimitError,
    NotThreeConnectedError,
    VertexCapError,
)
from .graph import DualPair, PolyhedralGraph, dual, trace_faces, validate_steinitz
from .lp import MarginSolution, add_circuit_constraint, maximize_margin, new_system
from .separation import (
    Circuit,
    WeightVector,
    all_nonfacial_circuits,
    brute_force_min_nonfacial,
    check_conditions,
    min_nonfacial_circuit,
)


@dataclass(frozen=True)
class Certificate:
    """Outcome of a type decision, reproducible from its cut list.

    For a yes answer, ``weights`` is a witness on the tested graph's
    edges and ``margin`` is its positive slack.  For a no answer,
    ``margin`` records the final LP optimum (at most 0), or None if the
    face equalities were contradictory outright; rebuilding the system
    with ``cuts`` reproduces that LP.  ``graph_role`` says which graph
    carried the conditions: the input itself ('primal') or its planar
    dual ('dual'); in the dual case ``edge_bijection`` maps each input
    edge id to the tested dual edge id.
    """

    answer: str  # 'yes' | 'no'
    graph_role: str  # 'primal' | 'dual'
    margin: Fraction | None
    weights: WeightVector | None
    cuts: tuple[tuple[int, ...], ...]
    iterations: int
    lp_status: str  # 'optimal' | 'infeasible'
    edge_bijection: tuple[int, ...] | None = None

    @property
    def is_yes(self) -> bool:
        return self.answer == "yes"


@dataclass(frozen=True)
class DihedralAngles:
    """Ideal dihedral angles as exact rational multiples of pi.

    ``coefficients[e]`` is the angle coefficient for primal edge e,
    strictly between 0 and 1.
    """

    coefficients: tuple[Fraction, ...]

    def __getitem__(self, e: int) -> Fraction:
        return self.coefficients[e]

    def __len__(self) -> int:
        return len(self.coefficients)


def _require_polyhedral(g: PolyhedralGraph) -> None:
    report = validate_steinitz(g)
    if not report.planar_spherical:
        raise EulerError("graph embedding is not spherical", graph=g)
    if not report.three_connected:
        raise NotThreeConnectedError("graph is not 3-connected", graph=g)


def _separate(g: PolyhedralGraph, weights: WeightVector, faces):
    """Minimum-weight non-facial circuit for the current LP point.

    The shortest-path oracle needs nonnegative weights; relaxation optima
    satisfy w >= t, so negative entries can only occur once the margin
    has gone negative.  In that regime the answer is already 'no' and we
    fall back to exhaustive enumeration to finish the cut loop exactly.
    """
    if all(x >= 0 for x in weights):
        return min_nonfacial_circuit(g, weights, faces)
    try:
        return brute_force_min_nonfacial(g, weights, vertex_cap=32)
    except VertexCapError as exc:
        raise InternalError(
            "negative intermediate weights on a graph too large to enumerate"
        ) from exc


def decide_circumscribable(
    g: PolyhedralGraph, *, max_iterations: int | None = None
) -> Certificate:
    """Decide circumscribable type of g by cut generation.

    Repeatedly maximizes the margin and asks the separation oracle for
    the cheapest non-facial circuit; a circuit whose weight falls short
    of 1 + t contributes a new row.  Each round adds a distinct circuit,
    so the loop terminates; the cap (default 10 E) signals a bug, not an
    input property.
    """
    _require_polyhedral(g)
    faces = trace_faces(g)
    cap = max_iterations if max_iterations is not None else 10 * g.edge_count
    system = new_system(g)
    cuts: list[tuple[int, ...]] = []
    for iteration in range(1, cap + 1):
        solution = maximize_margin(system)
        if solution.status == "infeasible":
            return Certificate(
                answer="no",
                graph_role="primal",
                margin=None,
                weights=None,
                cuts=tuple(cuts),
                iterations=iteration,
                lp_status="infeasible",
            )
        circuit, weight = _separate(g, solution.weights, faces)
        if weight - solution.margin < 1:
            system = add_circuit_constraint(system, circuit)
            cuts.append(circuit.edge_ids)
            continue
        answer = "yes" if solution.margin > 0 else "no"
        return Certificate(
            answer=answer,
            graph_role="primal",
            margin=solution.margin,
            weights=solution.weights if answer == "yes" else None,
            cuts=tuple(cuts),
            iterations=iteration,
            lp_status="optimal",
        )
    raise IterationLimitError(f"cut loop exceeded {cap} iterations")


def decide_inscribable(
    g: PolyhedralGraph, *, max_iterations: int | None = None
) -> Certificate:
    """Decide inscribable type of g: its planar dual must be of
    circumscribable type.  The certificate's weights are indexed by dual
    edge ids; the bijection from primal edge ids is included."""
    _require_polyhedral(g)
    pair = dual(g)
    cert = decide_circumscribable(pair.dual, max_iterations=max_iterations)
    return replace(cert, graph_role="dual", edge_bijection=pair.primal_to_dual)


def fast_path_four_connected(g: PolyhedralGraph) -> bool | None:
    """Shortcut: a 4-connected polyhedral graph is of both inscribable
    and circumscribable type.  Returns True in that case, None otherwise
    (no weight certificate either way)."""
    from .graph import is_k_vertex_connected

    _require_polyhedral(g)
    if is_k_vertex_connected(g, 4):
        return True
    return None


def dihedral_angles(cert: Certificate, pair: DualPair) -> DihedralAngles:
    """Ideal dihedral angles of the inscribed realization.

    Requires a yes certificate produced on ``pair.dual`` for the
    inscribability of ``pair.primal``.  Each primal edge e gets the
    coefficient 1 - 2 w(e*) of pi, where w is the certificate weighting
    of the dual edge e*; the unit face sums of w are re-asserted.
    """
    if not cert.is_yes:
        raise ValueError("dihedral angles require a yes certificate")
    if cert.graph_role != "dual" or cert.weights is None:
        raise ValueError("certificate was not produced on the planar dual")
    w = cert.weights
    if len(w) != pair.dual.edge_count:
        raise ValueError("certificate does not match the dual graph")
    for face in trace_faces(pair.dual):
        total = sum((w[e] for e in face.edge_ids), Fraction(0))
        if total != 1:
            raise InternalError(f"dual face {face.id} sums to {total}, not 1")
    coeffs = []
    for e in range(pair.primal.edge_count):
        c = 1 - 2 * w[pair.primal_to_dual[e]]
        if not 0 < c < 1:
            raise InternalError(f"angle coefficient {c} outside (0, 1)")
        coeffs.append(c)
    return DihedralAngles(tuple(coeffs))


def solve_full_enumeration(g: PolyhedralGraph) -> tuple[MarginSolution, int]:
    """Optimum of the margin LP with ALL non-facial circuits as rows.

    Enumerates every non-facial circuit up front, then refines an active
    set: solve, scan the complete list exactly for the most violated row,
    add it, repeat.  On return the solution has been checked against
    every enumerated row, so it is the exact optimum of the full system.
    Returns the solution and the number of LP solves.
    """
    _require_polyhedral(g)
    circuits = all_nonfacial_circuits(g)
    system = new_system(g)
    solves = 0
    while True:
        solution = maximize_margin(system)
        solves += 1
        if solution.status == "infeasible":
            return solution, solves
        worst = _most_violated(circuits, solution)
        if worst is None:
            return solution, solves
        system = add_circuit_constraint(system, worst)


def _most_violated(
    circuits: tuple[Circuit, ...], solution: MarginSolution
) -> Circuit | None:
    """Most violated circuit row at the LP point, None if all hold.

    Scans with common-denominator integers so the comparison is exact.
    """
    w = solution.weights
    t = solution.margin
    denom = math.lcm(t.denominator, *(x.denominator for x in w))
    nums = [x.numerator * (denom // x.denominator) for x in w]
    threshold = (1 + t).numerator * (denom // (1 + t).denominator)
    worst = None
    worst_key = None
    for c in circuits:
        s = sum(nums[e] for e in c.edge_ids)
        if s < threshold:
            key = (s, c.edge_ids)
            if worst_key is None or key < worst_key:
                worst_key = key
                worst = c
    return worst


def verify_certificate(
    cert: Certificate, g: PolyhedralGraph
) -> tuple[bool, list[str]]:
    """Independently re-check a certificate against its input graph.

    Yes certificates: the recorded weighting must satisfy all three
    condition families exactly, and the minimum slack must reproduce a
    value at least the recorded margin.  No certificates: rebuilding the
    LP from the recorded cut list must reproduce the recorded final
    state.  Returns (verdict, list of failure messages).
    """
    problems: list[str] = []
    _require_polyhedral(g)
    if cert.graph_role == "dual":
        pair = dual(g)
        tested = pair.dual
        if cert.edge_bijection is not None and tuple(cert.edge_bijection) != pair.primal_to_dual:
            problems.append("recorded edge bijection does not match the dual")
    else:
        tested = g
    if cert.is_yes:
        if cert.weights is None or cert.margin is None:
            problems.append("yes certificate lacks weights or margin")
            return False, problems
        if len(cert.weights) != tested.edge_count:
            problems.append("weight count does not match the tested graph")
            return False, problems
        if cert.margin <= 0:
            problems.append(f"margin {cert.margin} is not positive")
        report = check_conditions(tested, cert.weights)
        if not report.ok:
            if report.bound_violations:
                problems.append(f"bound violations on edges {report.bound_violations}")
            for fid, total in report.face_violations:
                problems.append(f"face {fid} sums to {total}")
            if report.circuit_violation is not None:
                c, wt = report.circuit_violation
                problems.append(f"circuit {c.edge_ids} weighs {wt} <= 1")
        else:
            slack = _minimum_slack(tested, cert.weights)
            if slack < cert.margin:
                problems.append(
                    f"recomputed slack {slack} below recorded margin {cert.margin}"
                )
    else:
        system = new_system(tested)
        for key in cert.cuts:
            system = add_circuit_constraint(
                system, Circuit.from_edge_set(tested, key)
            )
        solution = maximize_margin(system)
        if cert.lp_status == "infeasible":
            if solution.status != "infeasible":
                problems.append("recorded infeasible but the rebuilt LP is feasible")
        else:
            if solution.status != "optimal":
                problems.append("rebuilt LP is infeasible but certificate records an optimum")
            elif solution.margin != cert.margin:
                problems.append(
                    f"rebuilt optimum {solution.margin} differs from recorded {cert.margin}"
                )
            elif solution.margin > 0:
                problems.append("recorded no but the rebuilt optimum is positive")
    return not problems, problems


def _minimum_slack(g: PolyhedralGraph, w: WeightVector) -> Fraction:
    """Minimum slack of the weighting over all constraint families."""
    half = Fraction(1, 2)
    slack = min(min(w[e] for e in range(g.edge_count)),
                min(half - w[e] for e in range(g.edge_count)))
    _, weight = min_nonfacial_circuit(g, w)
    return min(slack, weight - 1)


# --- certificate serialization -------------------------------------------

def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _frac_parse(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den) if den else 1)


def certificate_to_json(
    cert: Certificate, angles: DihedralAngles | None = None
) -> str:
    """Deterministic JSON serialization; rationals as 'p/q' strings."""
    doc: dict = {
        "answer": cert.answer,
        "graph_role": cert.graph_role,
        "margin": _frac_str(cert.margin) if cert.margin is not None else None,
        "weights": (
            {str(e): _frac_str(cert.weights[e]) for e in range(len(cert.weights))}
            if cert.weights is not None
            else None
        ),
        "angles": (
            {str(e): _frac_str(angles[e]) for e in range(len(angles))}
            if angles is not None
            else None
        ),
        "cuts": [list(c) for c in cert.cuts],
        "iterations": cert.iterations,
        "lp_status": cert.lp_status,
        "edge_bijection": (
            {str(e): d for e, d in enumerate(cert.edge_bijection)}
            if cert.edge_bijection is not None
            else None
        ),
    }
    return json.dumps(doc, indent=2) + "\n"


def certificate_from_json(text: str) -> Certificate:
    doc = json.loads(text)
    weights = None
    if doc.get("weights") is not None:
        raw = doc["weights"]
        weights = WeightVector(
            tuple(_frac_parse(raw[str(e)]) for e in range(len(raw)))
        )
    bijection = None
    if doc.get("edge_bijection") is not None:
        raw = doc["edge_bijection"]
        bijection = tuple(int(raw[str(e)]) for e in range(len(raw)))
    return Certificate(
        answer=doc["answer"],
        graph_role=doc["graph_role"],
        margin=_frac_parse(doc["margin"]) if doc.get("margin") is not None else None,
        weights=weights,
        cuts=tuple(tuple(c) for c in doc.get("cuts", [])),
        iterations=int(doc["iterations"]),
        lp_status=doc.get("lp_status", "optimal"),
        edge_bijection=bijection,
    )
