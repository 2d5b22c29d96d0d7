"""EO x Newton interaction table for M(3,2), derived by a fixed rule cascade.

Each rule writes statuses into cells and appends its tag to the cell's
justification list. Facts imported from geometry (two strata with
omega(3) = 3, the minimal stratum, the closure of gamma_{3,4}, and the
generic-first-slope lower bound) are named axioms below; the p-ranks, generic first slopes and the supersingular
witness are computed.
"""

from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction

from .crystal import isoclinic_check, reduce_mod_p, table1_module, verify_axioms
from .errors import Inconsistent, NotTabulated, WitnessFailure, WrongSignature
from .finalseq import FinalSequence, final_sequence_from_permutation, generic_first_slope
from .modp import eo_class_from_eta, unitary_eta
from .polygons import (
    NewtonPolygon,
    admissible_polygons,
    first_slope,
    format_slopes,
    mu_ordinary,
    polygon_p_rank,
    supersingular,
)
from .weyl import CosetRep, Permutation, enumerate_W, eo_dimension, forget_unitary_32

__all__ = [
    "Status",
    "Cell",
    "EOStratum",
    "InteractionTable",
    "WitnessReport",
    "eo_p_rank_32",
    "eo_strata_32",
    "compatible_polygons",
    "polygon_name",
    "supersingular_witness",
    "classify_32",
    "RULES",
]


class Status(enum.Enum):
    EQUAL = "Equal"
    CONTAINED_IN = "ContainedIn"
    INTERSECTS = "Intersects"
    EMPTY = "Empty"

    def __str__(self):
        return self.value


# Non-empty statuses may be strengthened; Empty never mixes with them.
_STRENGTH = {Status.INTERSECTS: 1, Status.CONTAINED_IN: 2, Status.EQUAL: 3}

RULES = {
    "R-prank": "EO and Newton strata in different p-rank strata are disjoint",
    "R-unique-newton": "a p-rank stratum holding a single Newton stratum contains its EO strata",
    "R-slope": "Newton polygons on a stratum have first slope at least the generic first slope",
    "R-hoeve": "omega_{1,2}(3) = omega_{1,3}(3) = 3 forces supersingularity",
    "R-minimal": "gamma_{2,4} maps to the minimal EO stratum of slope [1/4, 1/2, 3/4]",
    "R-closure": "gamma_{3,4} is dense in the p-rank 0 stratum, the closure of beta_1",
    "R-witness": "an explicit supersingular module reduces to gamma_{3,4}",
}

# Imported facts, keyed by the u-tuple of gamma.
OMEGA3_FIXED = ((1, 2), (1, 3))
MINIMAL_STRATUM = ((2, 4), ((1, 3, 1), (1, 1, 1), (3, 1, 1)))
CLOSURE_INTERSECTS = ((3, 4), ((1, 3, 1), (1, 1, 1), (3, 1, 1)))
WITNESS_STRATUM = (3, 4)


def _check_32(r: CosetRep):
    if (r.a, r.b) != (3, 2):
        raise WrongSignature(f"only signature (3,2) is supported, got ({r.a},{r.b})")


def eo_p_rank_32(gamma: CosetRep) -> int:
    """p-rank of an EO stratum of M(3,2): positive exactly on gamma_{u,5} with u > 1."""
    _check_32(gamma)
    u, v = gamma.u
    if (u, v) == (4, 5):
        return 4
    if v == 5 and u > 1:
        return 2
    return 0


@dataclass(frozen=True)
class EOStratum:
    gamma: CosetRep
    dimension: int
    p_rank: int
    omega: Permutation | None = None
    phi: FinalSequence | None = None
    generic_slope: Fraction | None = None

    @property
    def label(self) -> str:
        return self.gamma.label


def eo_strata_32() -> list[EOStratum]:
    out = []
    for g in enumerate_W(3, 2):
        try:
            omega = forget_unitary_32(g)
        except NotTabulated:
            omega = phi = lam = None
        else:
            phi = final_sequence_from_permutation(omega, 5)
            lam = generic_first_slope(phi)
        out.append(EOStratum(g, eo_dimension(g), eo_p_rank_32(g), omega, phi, lam))
    return out


def compatible_polygons(lam: Fraction, polys: list[NewtonPolygon]) -> list[NewtonPolygon]:
    if not 0 <= lam <= Fraction(1, 2):
        raise ValueError(f"generic first slope {lam} outside [0, 1/2]")
    return [P for P in polys if first_slope(P) >= lam]


def polygon_name(P: NewtonPolygon, polys: list[NewtonPolygon], a: int, b: int) -> str:
    if P == supersingular(P.q):
        return "beta_ss"
    if P == mu_ordinary(a, b):
        return "beta_max"
    middle = [Q for Q in polys if Q != supersingular(P.q) and Q != mu_ordinary(a, b)]
    return f"beta_{middle.index(P) + 1}"


# witness --------------------------------------------------------------------

@dataclass(frozen=True)
class WitnessReport:
    p: int
    axioms_passed: bool
    isoclinic: tuple[int, int]
    slope: Fraction
    eta: tuple[int, ...]
    eo_class: CosetRep

    @property
    def certified(self) -> bool:
        return self.axioms_passed and self.slope == Fraction(1, 2) and self.eo_class.u == WITNESS_STRATUM

    def __str__(self):
        N, s = self.isoclinic
        return "\n".join([
            f"witness module: rank 10, p = {self.p}",
            f"axioms (1)-(7): {'all pass' if self.axioms_passed else 'FAIL'}",
            f"isoclinic: F^{N}(M) = p^{s} M, every slope = {self.slope}",
            f"eta_1 = {self.eta}",
            f"EO class: {self.eo_class.label}",
            "certified: M(3,2)_{gamma_3,4} meets the supersingular locus"
            if self.certified else "certified: no",
        ])


def supersingular_witness(p: int = 3, module=None) -> WitnessReport:
    """Certify that gamma_{3,4} meets the supersingular locus.

    ``module`` defaults to ``table1_module(p)``; passing another one
    is how a corrupted module is shown to be rejected.
    """
    m = table1_module(p) if module is None else module
    report = verify_axioms(m)
    if not report.passed:
        failed = ", ".join(f"({c.number}) {c.detail}" for c in report.failures())
        raise WitnessFailure("axioms", failed)
    iso = isoclinic_check(m, 2 * m.rank)
    if iso is None or iso.slope != Fraction(1, 2):
        raise WitnessFailure("slope", f"isoclinic check gave {iso}")
    try:
        eta = unitary_eta(reduce_mod_p(m))
        cls = eo_class_from_eta(eta, *m.signature)
    except Exception as exc:  # any failure in the mod-p leg is a failed class
        raise WitnessFailure("class", str(exc)) from exc
    if cls.u != WITNESS_STRATUM:
        raise WitnessFailure("class", f"EO class is {cls.label}, not gamma_{{3,4}}")
    return WitnessReport(m.p, True, (iso.N, iso.s), iso.slope, eta.values, cls)


# table ----------------------------------------------------------------------

@dataclass
class Cell:
    status: Status | None = None
    tags: list[str] = field(default_factory=list)


@dataclass
class InteractionTable:
    strata: list[EOStratum]
    polygons: list[NewtonPolygon]
    names: list[str]
    cells: dict[tuple[tuple[int, ...], int], Cell]

    def cell(self, u, col) -> Cell:
        """Cell by gamma u-tuple and polygon (index, name or NewtonPolygon)."""
        if isinstance(col, str):
            col = self.names.index(col)
        elif isinstance(col, NewtonPolygon):
            col = self.polygons.index(col)
        return self.cells[(tuple(u), col)]

    def status(self, u, col) -> Status:
        return self.cell(u, col).status

    def row(self, u) -> list[Status]:
        return [self.cells[(tuple(u), j)].status for j in range(len(self.polygons))]

    def set(self, u, col: int, status: Status, tag: str) -> None:
        c = self.cells[(tuple(u), col)]
        if c.status is None:
            c.status = status
        elif (c.status is Status.EMPTY) != (status is Status.EMPTY):
            raise Inconsistent(
                f"{tag} sets {status} on ({_lbl(u)}, {self.names[col]}) already {c.status} by {c.tags}")
        elif status is not Status.EMPTY and _STRENGTH[status] > _STRENGTH[c.status]:
            c.status = status
        if tag not in c.tags:
            c.tags.append(tag)

    def contain(self, u, col: int, tag: str, status: Status = Status.CONTAINED_IN) -> None:
        for j in range(len(self.polygons)):
            if j != col:
                self.set(u, j, Status.EMPTY, tag)
        self.set(u, col, status, tag)

    def check(self) -> None:
        n = len(self.polygons)
        for s in self.strata:
            u = s.gamma.u
            row = self.row(u)
            if any(x is None for x in row):
                raise Inconsistent(f"row {s.label} is undetermined: {row}")
            if all(x is Status.EMPTY for x in row):
                raise Inconsistent(f"row {s.label} has no non-empty cell")
            for j, x in enumerate(row):
                others = [row[k] for k in range(n) if k != j]
                if x in (Status.EQUAL, Status.CONTAINED_IN) and any(o is not Status.EMPTY for o in others):
                    raise Inconsistent(f"{s.label} is {x} {self.names[j]} but meets another polygon")
                if x is Status.EQUAL:
                    col = [self.cells[(t.gamma.u, j)].status for t in self.strata if t is not s]
                    if any(o is not Status.EMPTY for o in col):
                        raise Inconsistent(f"{s.label} equals {self.names[j]} but the column has others")

    # serialisation ------------------------------------------------------
    def to_rows(self) -> list[dict]:
        rows = []
        for s in self.strata:
            for j, name in enumerate(self.names):
                c = self.cells[(s.gamma.u, j)]
                rows.append({
                    "stratum": s.label,
                    "dimension": s.dimension,
                    "p_rank": s.p_rank,
                    "polygon": name,
                    "slopes": format_slopes(self.polygons[j]),
                    "status": str(c.status),
                    "justification": list(c.tags),
                })
        return rows

    def to_json(self) -> str:
        def frac(x):
            return None if x is None else f"{x.numerator}/{x.denominator}"

        data = {
            "signature": [3, 2],
            "polygons": [
                {"name": n, "slopes": format_slopes(P), **P.to_json()} for n, P in zip(self.names, self.polygons)
            ],
            "strata": [
                {
                    "name": s.label,
                    "u": list(s.gamma.u),
                    "dimension": s.dimension,
                    "p_rank": s.p_rank,
                    "omega": s.omega.cycle_string() if s.omega else None,
                    "phi": s.phi.values() if s.phi else None,
                    "generic_first_slope": frac(s.generic_slope),
                }
                for s in self.strata
            ],
            "cells": self.to_rows(),
        }
        return json.dumps(data, indent=2)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["stratum", "dimension", "p_rank", "polygon", "slopes", "status", "justification"])
        for r in self.to_rows():
            w.writerow([r["stratum"], r["dimension"], r["p_rank"], r["polygon"], r["slopes"], r["status"],
                        ";".join(r["justification"])])
        return buf.getvalue()

    def to_markdown(self) -> str:
        head = ["EO stratum", "dim", "p-rank"] + [f"{n} {format_slopes(P)}" for n, P in zip(self.names, self.polygons)]
        lines = ["| " + " | ".join(head) + " |", "|" + "---|" * len(head)]
        for s in self.strata:
            cells = []
            for j in range(len(self.polygons)):
                c = self.cells[(s.gamma.u, j)]
                cells.append(f"{c.status} ({', '.join(c.tags)})")
            lines.append("| " + " | ".join([s.label, str(s.dimension), str(s.p_rank)] + cells) + " |")
        return "\n".join(lines) + "\n"


def _lbl(u) -> str:
    return "gamma_{" + ",".join(map(str, u)) + "}"


def classify_32(witness_prime: int = 3) -> InteractionTable:
    strata = eo_strata_32()
    polys = admissible_polygons(3, 2)
    names = [polygon_name(P, polys, 3, 2) for P in polys]
    table = InteractionTable(
        strata, polys, names, {(s.gamma.u, j): Cell() for s in strata for j in range(len(polys))})
    col = {P.factors: j for j, P in enumerate(polys)}

    # R-prank
    for s in strata:
        for j, P in enumerate(polys):
            if s.p_rank != polygon_p_rank(P):
                table.set(s.gamma.u, j, Status.EMPTY, "R-prank")

    # R-unique-newton
    for level in sorted({s.p_rank for s in strata}):
        level_polys = [j for j, P in enumerate(polys) if polygon_p_rank(P) == level]
        level_strata = [s for s in strata if s.p_rank == level]
        if len(level_polys) == 1:
            status = Status.EQUAL if len(level_strata) == 1 else Status.CONTAINED_IN
            for s in level_strata:
                table.contain(s.gamma.u, level_polys[0], "R-unique-newton", status)

    # R-slope
    for s in strata:
        if s.generic_slope is None:
            continue
        ok = compatible_polygons(s.generic_slope, polys)
        for j, P in enumerate(polys):
            if P not in ok:
                table.set(s.gamma.u, j, Status.EMPTY, "R-slope")
        if len(ok) == 1:
            table.contain(s.gamma.u, polys.index(ok[0]), "R-slope")

    # R-hoeve
    ss = col[supersingular(5).factors]
    for u in OMEGA3_FIXED:
        table.contain(u, ss, "R-hoeve")

    # R-minimal
    u, factors = MINIMAL_STRATUM
    table.contain(u, col[factors], "R-minimal")

    # R-closure
    u, factors = CLOSURE_INTERSECTS
    table.set(u, col[factors], Status.INTERSECTS, "R-closure")

    # R-witness
    report = supersingular_witness(witness_prime)
    table.set(report.eo_class.u, ss, Status.INTERSECTS, "R-witness")

    table.check()
    return table
