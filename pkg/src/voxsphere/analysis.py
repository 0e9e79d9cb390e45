"""Count tables, absentee ratios, growth-rate fits, and the closed-form
disc-absentee formula.

All counting goes through the closed row tallies in :mod:`voxsphere.kernels`,
so tables stream: no voxel set is materialized, and radii in the tens of
thousands stay cheap.  Tables are cached grow-only per process, keyed by the
largest radius requested so far.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from decimal import Decimal, ROUND_HALF_EVEN
from importlib import resources

import numpy as np

from .lattice import ceil_sqrt, exact_isqrt_many
from . import kernels


@dataclass(frozen=True)
class CountRow:
    """One table row: voxel counts for a single radius.

    total is redundant (primitive + absentee) and kept explicit because the
    published tables print all three columns.
    """
    r: int
    primitive: int
    absentee: int
    total: int

    def __post_init__(self):
        if self.total != self.primitive + self.absentee:
            raise ValueError("total must equal primitive + absentee")


class _Tables:
    """Grow-only cache of the per-radius tallies."""

    def __init__(self):
        self.rmax = -1
        self.csz = None
        self.dsz = None
        self.cpref = None
        self.cnt = None
        self.circ = None

    def grow(self, rmax: int) -> None:
        if rmax <= self.rmax:
            return
        self.csz, self.dsz = kernels.size_tables(rmax)
        self.cpref = kernels.circle_prefix(self.csz)
        self.cnt, self.circ = kernels.gap_tallies(max(rmax - 1, 0), self.csz)
        self.rmax = rmax


_tables = _Tables()


def sphere_count_row(r: int) -> CountRow:
    """Hollow-sphere table row: (swept voxels, gap voxels, completed total)."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    _tables.grow(r)
    primitive = int(kernels.surface_totals(
        np.array([r], dtype=np.int64), _tables.csz, _tables.cpref)[0])
    absentee = 2 * int(_tables.cnt[:max(r, 1)].sum())
    return CountRow(r, primitive, absentee, primitive + absentee)


def solid_count_row(r: int) -> CountRow:
    """Solid-sphere table row: (covered voxels, absentee voxels, solid total).

    total counts the per-plane filled-disc solid; absentee counts the line
    and circle species; primitive is their difference, matching how the
    tabulated first column relates to the other two.
    """
    if r < 0:
        raise ValueError("radius must be non-negative")
    _tables.grow(r)
    total = int(kernels.solid_totals(
        np.array([r], dtype=np.int64), _tables.dsz)[0])
    if r < 2:
        absentee = 0
    else:
        cnt = _tables.cnt[:r]
        ws = np.arange(r, dtype=np.int64)
        lines = int((cnt * (2 * exact_isqrt_many(ws) + 1)).sum())
        circles = 2 * int(_tables.circ[:r].sum())
        absentee = lines + circles
    return CountRow(r, total - absentee, absentee, total)


def sphere_table(radii) -> list[CountRow]:
    """sphere_count_row over a radius collection, ascending-cache friendly."""
    radii = [int(r) for r in radii]
    if radii:
        _tables.grow(max(radii))
    return [sphere_count_row(r) for r in radii]


def solid_table(radii) -> list[CountRow]:
    """solid_count_row over a radius collection."""
    radii = [int(r) for r in radii]
    if radii:
        _tables.grow(max(radii))
    return [solid_count_row(r) for r in radii]


def alpha(row: CountRow, places: int = 6) -> Decimal:
    """Absentee share absentee/total, rounded half-to-even.

    The hollow-sphere ratio table prints six decimal places and the solid
    table five; pass places accordingly.
    """
    if row.total <= 0:
        raise ValueError("total must be positive")
    q = Decimal(1).scaleb(-places)
    return (Decimal(row.absentee) / Decimal(row.total)).quantize(
        q, rounding=ROUND_HALF_EVEN)


def loglog_slope(series) -> float:
    """Ordinary least-squares slope of log(count) against log(r)."""
    pts = [(int(r), int(c)) for r, c in series]
    if len(pts) < 3:
        raise ValueError("need at least three points")
    if any(r <= 0 or c <= 0 for r, c in pts):
        raise ValueError("radii and counts must be positive")
    xs = np.log([r for r, _ in pts])
    ys = np.log([c for _, c in pts])
    return float(np.polyfit(xs, ys, 1)[0])


def _ceil_half_sqrt(n: int) -> int:
    """Smallest integer m with 2m >= sqrt(n), i.e. ceil(sqrt(n)/2)."""
    return (ceil_sqrt(n) + 1) // 2


def run_count_bound(r: int) -> int:
    """Number of octant rows carrying runs of C(r): r - ceil(r/sqrt(2)) + 1,
    with the ceiling evaluated by exact integer comparison
    (ceil(r/sqrt(2)) is the smallest q with 2q^2 >= r^2)."""
    if r < 1:
        raise ValueError("radius must be positive")
    q = math.isqrt((r * r) // 2)
    while 2 * q * q < r * r:
        q += 1
    return r - q + 1


def closed_form_disc_count(r: int) -> tuple[int, list[int]]:
    """The closed-form disc-absentee count, evaluated exactly as written.

    Returns (total, per-k terms) with
    term_k = ceil(sqrt((2k+1)r - k^2 - k)) - (2k+1) - ceil(sqrt(8k^2+4k+1)/2)
    summed for k = 0 .. run_count_bound(r) - 1 and multiplied by 8.  Terms go
    negative for larger k and the total disagrees with enumeration (r = 10
    gives 8 against the enumerated 40); compare_closed_form records this.
    All ceilings use integer square roots, never floating point.
    """
    if r < 1:
        raise ValueError("radius must be positive")
    m_r = run_count_bound(r)
    terms = []
    for k in range(m_r):
        lead = ceil_sqrt((2 * k + 1) * r - k * k - k)
        terms.append(lead - (2 * k + 1) - _ceil_half_sqrt(8 * k * k + 4 * k + 1))
    return 8 * sum(terms), terms


def enumerated_disc_absentee_count(r: int) -> int:
    """|disc gap pixels of D(r)| from the witness tallies (exact)."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    if r < 2:
        return 0
    _tables.grow(r)
    return int(_tables.cnt[:r].sum())


def compare_closed_form(rmax: int = 128) -> list[tuple[int, int, int, bool]]:
    """Per-radius comparison (r, closed_form, enumerated, equal) for
    r = 1..rmax.  Informational: the closed form is reported, not trusted."""
    _tables.grow(rmax)
    out = []
    for r in range(1, rmax + 1):
        cf, _ = closed_form_disc_count(r)
        en = enumerated_disc_absentee_count(r)
        out.append((r, cf, en, cf == en))
    return out


def reference_counts(kind: str) -> dict[int, CountRow]:
    """Published count-table rows shipped with the package.

    kind is "sphere" (hollow spheres) or "solid".  The final hollow row
    (r = 10000) is reproducible except for one witness: see
    HOLLOW_FINAL_ROW_DEFICIT.
    """
    name = {"sphere": "hollow_counts.csv", "solid": "solid_counts.csv"}[kind]
    text = (resources.files("voxsphere") / "data" / name).read_text()
    out = {}
    for row in csv.DictReader(text.splitlines()):
        r = int(row["r"])
        out[r] = CountRow(r, int(row["primitive"]), int(row["absentee"]),
                          int(row["total"]))
    return out


def reference_ratios(kind: str) -> dict[int, str]:
    """Published absentee-ratio rows (decimal strings, as printed)."""
    name = {"sphere": "hollow_ratios.csv", "solid": "solid_ratios.csv"}[kind]
    text = (resources.files("voxsphere") / "data" / name).read_text()
    return {int(row["r"]): row["alpha"]
            for row in csv.DictReader(text.splitlines())}


# The published hollow table's final row (r = 10000) undercounts gap voxels
# by exactly the contribution of witness 9999: 2 * 6184 = 12368 voxels
# missing from the absentee and total columns.  Every other count row of
# both shipped count tables matches exact enumeration.
HOLLOW_FINAL_ROW_R = 10000
HOLLOW_FINAL_ROW_DEFICIT = 12368

# Hollow ratio rows that do not equal the half-even rounding of the
# enumerated ratio.  56 of 60 rows match; these four deviate:
#   r=90    printed 0.058618 truncates the exact 0.0586185409...
#   r=1200  printed 0.058404, enumeration rounds to 0.058403
#   r=1900  printed 0.058397, enumeration rounds to 0.058396
#   r=10000 printed 0.058383 is the ratio of the deficient final-row
#           counts; the full enumeration gives 0.058394
# All four still satisfy the convergence band |alpha - 0.0584| < 0.001.
# Every solid ratio row matches half-even rounding at five places.
HOLLOW_RATIO_ERRATA = (90, 1200, 1900, 10000)
