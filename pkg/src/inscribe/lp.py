"""Exact rational linear programming for the margin feasibility system.

The system's variables are one weight per edge plus a shared margin t;
maximizing t decides strict feasibility of the open weighting conditions:
the open region is nonempty exactly when the closed system admits t > 0.

The solver is a dense two-phase simplex over ``fractions.Fraction``: no
floating point anywhere, so feasibility and optimality are exact.  The
pivot rule is steepest reduced cost with a permanent switch to Bland's
rule after a run of degenerate pivots, which guarantees termination.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DuplicateCircuitError, InternalError
from .graph import PolyhedralGraph, trace_faces
from .separation import Circuit, WeightVector

#: Exact rational scalar used throughout: arbitrary-precision numerator
#: and denominator, kept in canonical reduced form by the type itself.
Rational = Fraction

_F0 = Fraction(0)
_F1 = Fraction(1)
_HALF = Fraction(1, 2)


@dataclass(frozen=True)
class Row:
    """One linear constraint over the weight variables and the margin.

    ``coeffs`` has one entry per edge plus a final entry for the margin.
    ``kind`` tags the row family: ``lower``/``upper`` bound rows carry the
    edge id in ``ref``, ``face`` rows the face id, ``circuit`` rows the
    canonical edge id tuple, and the single ``floor`` row (t >= -1) has
    ``ref`` None.
    """

    coeffs: tuple[Fraction, ...]
    relation: str
    rhs: Fraction
    kind: str
    ref: object = None

    def evaluate(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * v for c, v in zip(self.coeffs, x) if c), _F0)

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        lhs = self.evaluate(x)
        if self.relation == "<=":
            return lhs <= self.rhs
        if self.relation == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass(frozen=True)
class ConstraintSystem:
    """Immutable snapshot of the margin LP's rows.

    Always contains, for every edge e: w_e - t >= 0 and w_e + t <= 1/2;
    one equality per face fixing its boundary sum to 1; and t >= -1 so
    the feasible region is compact.  Circuit rows are added on demand.
    """

    edge_count: int
    rows: tuple[Row, ...]
    circuit_keys: frozenset[tuple[int, ...]]
    face_edge_sets: frozenset[frozenset[int]]

    @property
    def variable_count(self) -> int:
        return self.edge_count + 1

    @property
    def margin_index(self) -> int:
        return self.edge_count


def new_system(g: PolyhedralGraph) -> ConstraintSystem:
    """Bound and face-equality rows for g; no circuit rows yet."""
    n = g.edge_count + 1
    t = g.edge_count
    rows: list[Row] = []

    def unit(*pairs: tuple[int, Fraction]) -> tuple[Fraction, ...]:
        vec = [_F0] * n
        for j, c in pairs:
            vec[j] = c
        return tuple(vec)

    for e in range(g.edge_count):
        rows.append(Row(unit((e, _F1), (t, -_F1)), ">=", _F0, "lower", e))
    for e in range(g.edge_count):
        rows.append(Row(unit((e, _F1), (t, _F1)), "<=", _HALF, "upper", e))
    faces = trace_faces(g)
    for f in faces:
        vec = [_F0] * n
        for e in f.edge_ids:
            vec[e] = _F1
        rows.append(Row(tuple(vec), "=", _F1, "face", f.id))
    rows.append(Row(unit((t, _F1)), ">=", Fraction(-1), "floor", None))
    return ConstraintSystem(
        edge_count=g.edge_count,
        rows=tuple(rows),
        circuit_keys=frozenset(),
        face_edge_sets=frozenset(f.edge_ids for f in faces),
    )


def add_circuit_constraint(s: ConstraintSystem, circuit: Circuit) -> ConstraintSystem:
    """New system with the row  sum(w over circuit) - t >= 1  appended."""
    key = circuit.edge_ids
    if key in s.circuit_keys:
        raise DuplicateCircuitError(f"circuit {key} already present")
    if frozenset(key) in s.face_edge_sets:
        raise ValueError(f"circuit {key} bounds a face")
    if any(not 0 <= e < s.edge_count for e in key):
        raise ValueError("circuit references an unknown edge")
    vec = [_F0] * s.variable_count
    for e in key:
        vec[e] = _F1
    vec[s.margin_index] = -_F1
    row = Row(tuple(vec), ">=", _F1, "circuit", key)
    return ConstraintSystem(
        edge_count=s.edge_count,
        rows=s.rows + (row,),
        circuit_keys=s.circuit_keys | {key},
        face_edge_sets=s.face_edge_sets,
    )


@dataclass(frozen=True)
class MarginSolution:
    """Exact optimum of the margin LP."""

    status: str  # 'optimal' | 'infeasible'
    margin: Fraction | None
    weights: WeightVector | None


def maximize_margin(s: ConstraintSystem) -> MarginSolution:
    """Exact maximum of t over the closed system.

    The optimum exists whenever the system is feasible: the invariant
    rows keep the region compact.  The returned point satisfies every
    row exactly; this is re-verified before returning.
    """
    objective = [_F0] * s.variable_count
    objective[s.margin_index] = _F1
    status, x = _solve_lp(s.variable_count, s.rows, objective)
    if status == "infeasible":
        return MarginSolution("infeasible", None, None)
    if status != "optimal":
        raise InternalError(f"margin LP cannot be {status}: bounds are built in")
    for row in s.rows:
        if not row.satisfied_by(x):
            raise InternalError(f"solver returned a point violating a {row.kind} row")
    return MarginSolution(
        "optimal",
        x[s.margin_index],
        WeightVector(tuple(x[: s.edge_count])),
    )


class _Tableau:
    """Dense simplex tableau with exact rational entries."""

    def __init__(self, matrix, rhs, basis, ncols):
        self.matrix = matrix
        self.rhs = rhs
        self.basis = basis
        self.ncols = ncols
        self.reduced = [_F0] * ncols
        self.value = _F0

    def set_objective(self, cost):
        reduced = list(cost)
        value = _F0
        for i, bc in enumerate(self.basis):
            cb = cost[bc]
            if cb:
                row = self.matrix[i]
                for j in range(self.ncols):
                    if row[j]:
                        reduced[j] -= cb * row[j]
                value += cb * self.rhs[i]
        for bc in self.basis:
            reduced[bc] = _F0
        self.reduced = reduced
        self.value = value

    def pivot(self, r, c):
        row = self.matrix[r]
        piv = row[c]
        if piv != 1:
            inv = _F1 / piv
            self.matrix[r] = row = [x * inv for x in row]
            self.rhs[r] *= inv
        for i in range(len(self.matrix)):
            if i == r:
                continue
            f = self.matrix[i][c]
            if f:
                other = self.matrix[i]
                self.matrix[i] = [x - f * y for x, y in zip(other, row)]
                self.matrix[i][c] = _F0
                self.rhs[i] -= f * self.rhs[r]
        f = self.reduced[c]
        if f:
            self.reduced = [x - f * y for x, y in zip(self.reduced, row)]
            self.reduced[c] = _F0
            self.value += f * self.rhs[r]
        self.basis[r] = c

    def maximize(self, stall_threshold=64, pivot_cap=1_000_000):
        bland = False
        stall = 0
        pivots = 0
        while True:
            enter = -1
            if bland:
                for j in range(self.ncols):
                    if self.reduced[j] > 0:
                        enter = j
                        break
            else:
                best = _F0
                for j in range(self.ncols):
                    v = self.reduced[j]
                    if v > best:
                        best = v
                        enter = j
            if enter < 0:
                return "optimal"
            leave = -1
            best_ratio = None
            for i in range(len(self.matrix)):
                a = self.matrix[i][enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if (
                        best_ratio is None
                        or ratio < best_ratio
                        or (ratio == best_ratio and self.basis[i] < self.basis[leave])
                    ):
                        best_ratio = ratio
                        leave = i
            if leave < 0:
                return "unbounded"
            degenerate = best_ratio == 0
            self.pivot(leave, enter)
            pivots += 1
            if degenerate:
                stall += 1
                if stall > stall_threshold:
                    bland = True
            else:
                stall = 0
            if pivots > pivot_cap:
                raise InternalError("simplex exceeded its pivot cap")


def _solve_lp(n_vars, rows, objective):
    """Maximize objective over free variables subject to the rows.

    Free variables are split into nonnegative pairs; inequality rows get
    slacks; phase 1 drives artificial variables out.  Returns
    (status, x) with status 'optimal', 'infeasible' or 'unbounded'.
    """
    nsplit = 2 * n_vars
    ineq_count = sum(1 for r in rows if r.relation != "=")
    ncols = nsplit + ineq_count
    matrix: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    slack_col: list[int | None] = []
    next_slack = nsplit
    for row in rows:
        coeffs = row.coeffs
        b = row.rhs
        rel = row.relation
        if rel == ">=":
            coeffs = tuple(-c for c in coeffs)
            b = -b
            rel = "<="
        elif rel not in ("<=", "="):
            raise ValueError(f"unknown relation {row.relation!r}")
        vec = [_F0] * ncols
        for j, c in enumerate(coeffs):
            if c:
                vec[2 * j] = c
                vec[2 * j + 1] = -c
        sc = None
        if rel == "<=":
            sc = next_slack
            vec[sc] = _F1
            next_slack += 1
        if b < 0:
            vec = [-x for x in vec]
            b = -b
        matrix.append(vec)
        rhs.append(b)
        slack_col.append(sc)

    m = len(matrix)
    basis: list[int | None] = [None] * m
    for i in range(m):
        sc = slack_col[i]
        if sc is not None and matrix[i][sc] == 1:
            basis[i] = sc
    art_rows = [i for i in range(m) if basis[i] is None]
    art_start = ncols
    if art_rows:
        n_art = len(art_rows)
        for i in range(m):
            matrix[i] = matrix[i] + [_F0] * n_art
        for k, i in enumerate(art_rows):
            matrix[i][art_start + k] = _F1
            basis[i] = art_start + k
        tab = _Tableau(matrix, rhs, basis, art_start + n_art)
        phase1 = [_F0] * (art_start + n_art)
        for k in range(n_art):
            phase1[art_start + k] = -_F1
        tab.set_objective(phase1)
        if tab.maximize() != "optimal":
            raise InternalError("phase-1 objective is bounded by construction")
        if tab.value != 0:
            return "infeasible", None
        for i in range(len(tab.matrix) - 1, -1, -1):
            if tab.basis[i] >= art_start:
                row = tab.matrix[i]
                piv = next((j for j in range(art_start) if row[j]), None)
                if piv is None:
                    del tab.matrix[i]
                    del tab.rhs[i]
                    del tab.basis[i]
                else:
                    tab.pivot(i, piv)
        tab.matrix = [r[:art_start] for r in tab.matrix]
        tab.ncols = art_start
    else:
        tab = _Tableau(matrix, rhs, basis, ncols)

    cost = [_F0] * tab.ncols
    for j in range(n_vars):
        cost[2 * j] = objective[j]
        cost[2 * j + 1] = -objective[j]
    tab.set_objective(cost)
    status = tab.maximize()
    if status == "unbounded":
        return "unbounded", None
    if any(v > 0 for v in tab.reduced):
        raise InternalError("simplex stopped with a positive reduced cost")
    split = [_F0] * nsplit
    for i, bc in enumerate(tab.basis):
        if bc < nsplit:
            split[bc] = tab.rhs[i]
    x = [split[2 * j] - split[2 * j + 1] for j in range(n_vars)]
    return "optimal", x
