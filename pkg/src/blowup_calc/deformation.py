"""Deformation counts for elementary transforms of t'Hooft bundles along lines."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .curves import (
    CurveSheafData,
    LineType,
    catalog_line,
    lines,
    restriction_degree,
    twisted_curve_cohomology,
)
from .errors import ValidationError
from .instanton import is_admissible_charge
from .sheafdata import TwistDescriptor
from .transform import catalog_step, iterate_transforms, thooft_seed

SQUARE_TWIST = TwistDescriptor(4, -2)


@dataclass(frozen=True)
class LineTypeData:
    """Local Ext^1(F, F) on a line, as a sum of line bundles of these degrees."""

    local_ext_degrees: tuple[int, ...]
    h0_local: int
    h1_local: int


# Ext^1(F,F) = O(1)^2 + O on a pulled-back line, O(1) + O + O(-1) on a fibre
LINE_TYPE_TABLE = {
    LineType.PULLBACK: LineTypeData((1, 1, 0), 5, 0),
    LineType.FIBER: LineTypeData((1, 0, -1), 3, 0),
}


def _rational_h0(deg: int) -> int:
    return max(0, deg + 1)


def _rational_h1(deg: int) -> int:
    return max(0, -deg - 1)


def local_ext_cohomology(tag: LineType | str) -> tuple[int, int]:
    """(h0, h1) of the local Ext^1 sheaf, recomputed from its splitting."""
    entry = _table_entry(tag)
    degs = entry.local_ext_degrees
    return sum(map(_rational_h0, degs)), sum(map(_rational_h1, degs))


def _table_entry(tag: LineType | str) -> LineTypeData:
    tag = LineType(tag)
    if tag not in LINE_TYPE_TABLE:
        raise ValidationError(f"no deformation data for line type {tag.name}")
    return LINE_TYPE_TABLE[tag]


@dataclass(frozen=True)
class DeformationReport:
    ext1: int
    h0_local_ext: int
    h1_local_ext: int
    h1_hom: int
    component_dimension: int
    smooth: bool
    boundary_component: tuple[int, int]
    notes: tuple[str, ...] = ()

    def as_dict(self) -> dict:
        return {
            "ext1": self.ext1,
            "h0_local_ext": self.h0_local_ext,
            "h1_local_ext": self.h1_local_ext,
            "h1_hom": self.h1_hom,
            "component_dimension": self.component_dimension,
            "smooth": self.smooth,
            "boundary_component": list(self.boundary_component),
            "notes": list(self.notes),
        }


def thooft_component_dimension(k: int, l: int) -> int:
    if not is_admissible_charge(2, k, l):
        raise ValidationError(f"charge ({k},{l}) is not admissible in rank 2")
    return 8 * k - 4 * l - 3


def _square_sheaf(tag: LineType | str) -> CurveSheafData:
    line = catalog_line(tag)
    return CurveSheafData(lines([line.tag]), (2 * (line.genus - 1),))


def h0_twisted_square(tag: LineType | str) -> int:
    """h0 of i_* L^2 (x) O(4,-2) for L = O(-1) on a catalog line."""
    tag = LineType(tag)
    if tag is LineType.CUSTOM:
        raise ValidationError("custom components carry no line-type data")
    line = catalog_line(tag)
    return _rational_h0(2 * (line.genus - 1) + restriction_degree(line, SQUARE_TWIST))


def transform_deformation_report(k: int, l: int, tag: LineType | str) -> DeformationReport:
    """Ext^1 count at an elementary transform of a t'Hooft bundle along one line."""
    tag = LineType(tag)
    entry = _table_entry(tag)
    base = thooft_component_dimension(k, l)
    notes = []

    square = twisted_curve_cohomology(_square_sheaf(tag), SQUARE_TWIST)
    if square.h1 != 0:
        raise ValidationError(f"h1 of i_*L^2(4,-2) is {square.h1}; the count does not apply")
    if square.h0 != 0:
        notes.append(
            f"h0(i_*L^2(4,-2)) = {square.h0}: only the h1 vanishing is needed and checked"
        )

    h0_local, h1_local = local_ext_cohomology(tag)
    assert (h0_local, h1_local) == (entry.h0_local, entry.h1_local)

    h1_hom = base + h0_twisted_square(tag)
    ext1 = h0_local + h1_hom
    landing = (k + 1, l + 1) if tag is LineType.FIBER else (k + 1, l)
    component_dim = thooft_component_dimension(*landing)
    if ext1 != component_dim:
        notes.append(f"ext1 = {ext1} differs from the boundary component dimension {component_dim}")
    return DeformationReport(
        ext1=ext1,
        h0_local_ext=h0_local,
        h1_local_ext=h1_local,
        h1_hom=h1_hom,
        component_dimension=component_dim,
        smooth=h1_local == 0,
        boundary_component=landing,
        notes=tuple(notes),
    )


def iterated_deformation_reports(k: int, l: int, steps: Sequence[LineType | str]) -> list[DeformationReport]:
    """Per-step reports along the trajectory of successive single-line transforms."""
    trajectory = iterate_transforms(thooft_seed(k, l).instanton, [catalog_step(t) for t in steps])
    out = []
    for i, (tag, before, after) in enumerate(zip(steps, trajectory, trajectory[1:]), start=1):
        rep = transform_deformation_report(*before.data.charge, tag)
        if not rep.smooth:
            raise ValidationError(f"step {i}: the transform is not a smooth point")
        if rep.boundary_component != after.data.charge:
            raise ValidationError(
                f"step {i}: boundary component {rep.boundary_component} "
                f"differs from the transformed charge {after.data.charge}"
            )
        out.append(rep)
    return out


def iterated_deformation_dimension(k: int, l: int, steps: Sequence[LineType | str]) -> int:
    reports = iterated_deformation_reports(k, l, steps)
    if reports:
        k, l = reports[-1].boundary_component
    return thooft_component_dimension(k, l)
