"""
Per-coloring link invariants, duality and mirror cross-checks, and slice
obstructions for checkerboard colorable diagrams on surfaces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from . import bilinear as bl
from . import enhancement as en
from .diagram import (
    Coloring,
    DiagramError,
    FaceComplex,
    LinkDiagram,
    alexander_numbering,
    checkerboard_colorings,
    correction_term,
    mirror_horizontal,
    mirror_vertical,
    tait_structure,
    total_linking,
    trace_faces,
)
from .enhancement import INFINITY, BrownValue, brown_add


class NotColorableError(DiagramError):
    pass


class NotAKnotError(ValueError):
    pass


# the xi computation gives the invariants of the surface shaded by xi*
SURFACE_LABEL = {"xi": "F*", "xi*": "F"}


@dataclass(frozen=True)
class ColoringInvariants:
    label: str
    surface_label: str
    goeritz: bl.SymIntMatrix
    mu: int
    euler: int
    sigma: int
    det_inv: int
    nullity: int
    brown: BrownValue
    form_brown: BrownValue
    monsky: en.GaussianInt
    radical_dim: int
    even: bool

    def __post_init__(self):
        assert self.euler == -2 * self.mu

    def key(self):
        """The S*-invariant part, for comparing diagrams of the same link."""
        return (self.sigma, self.det_inv, self.nullity, str(self.brown))


def coloring_invariants(d: LinkDiagram, xi: Coloring, fc: Optional[FaceComplex] = None,
                        cap: Optional[int] = None, drop: int = 0) -> ColoringInvariants:
    fc = fc or trace_faces(d)
    t = tait_structure(d, fc, xi)
    g = bl.goeritz_matrix(t, drop)
    mu = correction_term(t)
    phi = en.enhance(g)
    big = phi.dim > (en.DEFAULT_CAP if cap is None else cap)
    lam = en.monsky_sum_decomposed(phi, cap) if big else en.monsky_sum(phi, cap)
    b = en.brown(phi, cap)
    return ColoringInvariants(
        label=xi.label,
        surface_label=SURFACE_LABEL[xi.label],
        goeritz=g,
        mu=mu,
        euler=-2 * mu,
        sigma=bl.signature(g) - mu,
        det_inv=bl.det_invariant(g),
        nullity=bl.nullity(g),
        brown=brown_add(b, -mu),
        form_brown=b,
        monsky=lam,
        radical_dim=len(en.radical(phi)),
        even=phi.is_even(),
    )


@dataclass(frozen=True)
class DiagramReport:
    diagram: LinkDiagram
    faces: FaceComplex
    colorings: tuple[ColoringInvariants, ColoringInvariants]
    total_linking: int
    null_homologous: bool
    duality_note: str

    @property
    def genus(self) -> int:
        return self.faces.genus

    @property
    def is_knot(self) -> bool:
        return self.diagram.n_components == 1

    def brown_values(self) -> list[BrownValue]:
        return [c.brown for c in self.colorings]


def full_report(d: LinkDiagram, cap: Optional[int] = None) -> DiagramReport:
    fc = trace_faces(d)
    cols = checkerboard_colorings(fc)
    if not cols:
        raise NotColorableError("diagram is not checkerboard colorable")
    pair = tuple(coloring_invariants(d, xi, fc, cap) for xi in cols)
    note = ("invariants from coloring xi are those of the checkerboard surface F* shaded by xi*, "
            "and those from xi* belong to F, the surface shaded by xi")
    if fc.genus == 0:
        same = pair[0].brown == pair[1].brown
        note += "; classical diagram, Brown invariants " + ("coincide" if same else "DIFFER")
    return DiagramReport(d, fc, pair, total_linking(d), alexander_numbering(d, fc) is not None, note)


# ---------------------------------------------------------------------------
# slice obstructions


GENUS_BOUND_CAVEAT = ("lower bound on the genus of an orientable surface S bounding K, valid when "
                      "the closed surface formed with a spanning surface of zero Euler number is "
                      "Z/2 null-homologous")


@dataclass(frozen=True)
class ColoringObstructions:
    label: str
    by_signature: bool
    by_determinant: bool
    by_brown: bool
    genus_lower_bound: Fraction

    @property
    def obstructed(self) -> bool:
        return self.by_signature or self.by_determinant or self.by_brown


@dataclass(frozen=True)
class SliceReport:
    per_coloring: tuple[ColoringObstructions, ...]
    genus_lower_bound: Fraction
    caveat: str = GENUS_BOUND_CAVEAT

    @property
    def obstructed(self) -> bool:
        return any(c.obstructed for c in self.per_coloring)

    @property
    def verdict(self) -> str:
        return "Obstructed" if self.obstructed else "NotObstructed"


def coloring_obstructions(c: ColoringInvariants) -> ColoringObstructions:
    return ColoringObstructions(
        label=c.label,
        by_signature=abs(c.sigma) > c.nullity,
        by_determinant=c.nullity == 0 and not bl.is_perfect_square(c.det_inv),
        by_brown=c.det_inv % 2 == 1 and c.brown not in (0, INFINITY),
        genus_lower_bound=max(Fraction(0), Fraction(abs(c.sigma) - c.nullity, 2)),
    )


def slice_obstructions(r: DiagramReport) -> SliceReport:
    if not r.is_knot:
        raise NotAKnotError("slice obstructions are defined for knots only")
    per = tuple(coloring_obstructions(c) for c in r.colorings)
    return SliceReport(per, max(p.genus_lower_bound for p in per))


@dataclass(frozen=True)
class AlternatingVerdict:
    status: str  # "NotSlice" | "Inconclusive"
    alternating: bool
    genus: int
    sigma_gap: Optional[int] = None
    gap_matches_genus: Optional[bool] = None


def alternating_obstruction(r: DiagramReport) -> AlternatingVerdict:
    """Alternating knot diagrams on a surface of genus g >= 1 are not slice.

    The witness is the gap between the two signatures, which must equal 2g;
    a mismatch is reported rather than hidden.
    """
    d = r.diagram
    alt = d.is_alternating() and d.n_crossings > 0
    if not (r.is_knot and alt and r.genus >= 1):
        return AlternatingVerdict("Inconclusive", alt, r.genus)
    gap = abs(r.colorings[0].sigma - r.colorings[1].sigma)
    return AlternatingVerdict("NotSlice", alt, r.genus, gap, gap == 2 * r.genus)


def levine_arf(det: int) -> int:
    if det % 2 == 0:
        raise ValueError("Levine's formula needs an odd determinant")
    return 0 if det % 8 in (1, 7) else 1


def levine_cross_check(c: ColoringInvariants) -> str:
    """Compare the Brown invariant of a coloring with Levine's Arf value from the determinant.

    Applicable when the determinant is odd and the Brown invariant is 0 or 4,
    the situation of a nonsingular even form.
    """
    if c.det_inv % 2 == 0 or c.brown not in (0, 4):
        return "NotApplicable"
    return "Consistent" if c.brown == 4 * levine_arf(c.det_inv) else "Inconsistent"


@dataclass(frozen=True)
class ArfAnnotation:
    status: str  # "Holds" | "Violated" | "Unverifiable"
    arf: dict[str, Optional[int]] = field(default_factory=dict)


def arf_relation_check(r: DiagramReport) -> ArfAnnotation:
    """Arf invariants of the Seifert-surface classes of a null-homologous link.

    Each checkerboard class of a null-homologous diagram contains a Seifert
    surface F' (tubing to a parallel copy of the surface keeps
    orientability).  On F' the form is even and the push-off L' has
    lk(L, L') = 0, so e(F', L) = 0 and the Brown invariant is 4 Arf(q_F').
    A defined value outside {0, 4} violates the relation.
    """
    if not r.null_homologous:
        return ArfAnnotation("Unverifiable")
    arf, ok = {}, True
    for c in r.colorings:
        if c.brown is INFINITY:
            arf[c.surface_label] = None
        elif c.brown in (0, 4):
            arf[c.surface_label] = c.brown // 4
        else:
            arf[c.surface_label] = None
            ok = False
    if ok and all(v is None for v in arf.values()):
        return ArfAnnotation("Unverifiable", arf)
    return ArfAnnotation("Holds" if ok else "Violated", arf)


@dataclass(frozen=True)
class MirrorCheck:
    vertical: bool
    horizontal: bool

    @property
    def ok(self) -> bool:
        return self.vertical and self.horizontal


def _mirror_ok(r: DiagramReport, m: DiagramReport) -> bool:
    def neg(c):
        return (-c.sigma, c.det_inv, c.nullity, str(en.brown_neg(c.brown)))
    return sorted(neg(c) for c in r.colorings) == sorted(c.key() for c in m.colorings)


def mirror_report_check(r: DiagramReport, cap: Optional[int] = None) -> MirrorCheck:
    """Mirror images negate sigma and beta (infinity fixed) and keep det and nullity."""
    d = r.diagram
    return MirrorCheck(_mirror_ok(r, full_report(mirror_vertical(d), cap)),
                       _mirror_ok(r, full_report(mirror_horizontal(d), cap)))


# ---------------------------------------------------------------------------
# serialization


def brown_json(b: BrownValue):
    return "infinity" if b is INFINITY else b


def _number(x: Fraction):
    return int(x) if x.denominator == 1 else float(x)


def report_to_json(r: DiagramReport, source: str, with_mirror: bool = True,
                   cap: Optional[int] = None) -> dict:
    cols = []
    for c in r.colorings:
        cols.append({
            "label": c.label,
            "goeritz": c.goeritz.tolist(),
            "mu": c.mu,
            "euler": c.euler,
            "sigma": c.sigma,
            "determinant": c.det_inv,
            "nullity": c.nullity,
            "brown": brown_json(c.brown),
        })
    slice_ = None
    levine = None
    if r.is_knot:
        s = slice_obstructions(r)
        slice_ = {
            "per_coloring": {p.label: {"signature": p.by_signature, "determinant": p.by_determinant,
                                       "brown": p.by_brown,
                                       "genus_lower_bound": _number(p.genus_lower_bound)}
                             for p in s.per_coloring},
            "verdict": s.verdict,
            "genus_lower_bound": _number(s.genus_lower_bound),
        }
        levine = {c.label: levine_cross_check(c) for c in r.colorings}
    arf = arf_relation_check(r)
    mirror = None
    if with_mirror:
        m = mirror_report_check(r, cap)
        mirror = {"vertical": m.vertical, "horizontal": m.horizontal}
    return {
        "input": source,
        "genus": r.genus,
        "colorable": True,
        "colorings": cols,
        "duality_note": r.duality_note,
        "slice": slice_,
        "checks": {"levine": levine, "arf": {"status": arf.status, "arf": arf.arf}, "mirror": mirror},
    }
