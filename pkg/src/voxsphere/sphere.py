"""Digital spheres of revolution and their absentee voxels.

A hemisphere is swept by rotating the first-quadrant arc of a digital circle
about the y axis: every arc pixel (x, j) contributes the digital circle of
radius x in the plane y = j.  Distinct radii give disjoint rings, so the
voxel count of the hemisphere is the sum of ring sizes over arc pixels.

Gap pixels of the plane (strictly between consecutive digital circles) lift
to gap voxels of the sphere.  A gap pixel (i, k) with witness w belongs to
the sphere of radius r at exactly one plane: the j whose run interval
[r^2 - j^2 - j, r^2 - j^2 + j) contains w^2.  Those intervals tile the
squared radii, making the plane unique, always >= 1 (so the equator never
carries gap voxels), and mirror-symmetric between hemispheres.
"""

from __future__ import annotations

import numpy as np

from . import circle, kernels
from .lattice import INT, absentee_witness, canonicalize, classify_many, isqrt, symmetric_octet


def generatrix(r: int) -> np.ndarray:
    """First-quadrant arc of the digital circle C(r), ordered from (0, r) to
    (r, 0): planes descend, abscissas ascend within a plane.  Consecutive
    points differ by one of (+1, 0), (+1, -1), (0, -1)."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    if r == 0:
        return np.array([[0, 0]], dtype=INT)
    pts = []
    for j in range(r, -1, -1):
        shallow, steep = circle.circle_row_run(r, j)
        for x in shallow:
            pts.append((x, j))
        for x in steep:
            pts.append((x, j))
    return np.array(pts, dtype=INT)


def _rings_at_planes(radius_plane_pairs) -> np.ndarray:
    """Concatenate digital circles of given radii, each placed in its plane."""
    parts = []
    for s, j in radius_plane_pairs:
        ring = circle.circle_pixels(int(s))
        vox = np.empty((len(ring), 3), dtype=INT)
        vox[:, 0] = ring[:, 0]
        vox[:, 1] = j
        vox[:, 2] = ring[:, 1]
        parts.append(vox)
    if not parts:
        return np.zeros((0, 3), dtype=INT)
    return np.concatenate(parts)


def hemisphere_voxels(r: int) -> np.ndarray:
    """Upper hemisphere: one ring per generatrix pixel, canonicalized."""
    return canonicalize(_rings_at_planes(generatrix(r)))


def sphere_voxels(r: int) -> np.ndarray:
    """Sphere of revolution: hemisphere plus its mirror through the equator."""
    upper = hemisphere_voxels(r)
    lower = upper.copy()
    lower[:, 1] = -lower[:, 1]
    return canonicalize(np.concatenate([upper, lower]))


def sphere_surface_count(r: int) -> int:
    """|sphere_voxels(r)| without materializing the set."""
    csz, _ = kernels.size_tables(r)
    cpref = kernels.circle_prefix(csz)
    return int(kernels.surface_totals([r], csz, cpref)[0])


def gap_plane(r: int, w: int) -> int:
    """The unique plane j >= 1 of the radius-r sphere holding the gap voxels
    of witness w: j(j+1) >= r^2 - w^2 and j(j-1) < r^2 - w^2."""
    if not 0 <= w < r:
        raise ValueError("witness must satisfy 0 <= w < r")
    q = r * r - w * w
    j = isqrt(q)
    while j * (j + 1) < q:
        j += 1
    while j >= 1 and (j - 1) * j >= q:
        j -= 1
    return j


def step_gap_voxels(gen: np.ndarray, t: int) -> np.ndarray:
    """Gap voxels introduced by the generatrix step t -> t+1 (0-based), which
    must grow the swept radius by one.  The gap pixels between the circles of
    radii x_t and x_t + 1 are expanded over their eight plane symmetries and
    placed at the plane whose run interval contains the witness square."""
    if not 0 <= t < len(gen) - 1:
        raise ValueError("step index out of range")
    w = int(gen[t, 0])
    if int(gen[t + 1, 0]) != w + 1:
        raise ValueError("step does not grow the swept radius")
    r = int(gen[0, 1])
    parts = []
    for a, b in circle.iter_octant_absentees(w):
        octet = symmetric_octet(a, b)
        vox = np.empty((len(octet), 3), dtype=INT)
        vox[:, 0] = octet[:, 0]
        vox[:, 1] = gap_plane(r, w)
        vox[:, 2] = octet[:, 1]
        parts.append(vox)
    if not parts:
        return np.zeros((0, 3), dtype=INT)
    return canonicalize(np.concatenate(parts))


def hemisphere_absentees(r: int) -> np.ndarray:
    """All upper-hemisphere gap voxels: the union of step_gap_voxels over the
    radius-growing generatrix steps; one voxel per gap pixel of the disc."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    parts = []
    for w in range(1, r):
        j = gap_plane(r, w)
        for a, b in circle.iter_octant_absentees(w):
            octet = symmetric_octet(a, b)
            vox = np.empty((len(octet), 3), dtype=INT)
            vox[:, 0] = octet[:, 0]
            vox[:, 1] = j
            vox[:, 2] = octet[:, 1]
            parts.append(vox)
    if not parts:
        return np.zeros((0, 3), dtype=INT)
    return canonicalize(np.concatenate(parts))


def sphere_absentees(r: int) -> np.ndarray:
    """Gap voxels of both hemispheres (the mirror never meets the equator)."""
    upper = hemisphere_absentees(r)
    lower = upper.copy()
    lower[:, 1] = -lower[:, 1]
    return canonicalize(np.concatenate([upper, lower]))


def completed_sphere_voxels(r: int) -> np.ndarray:
    """Sphere of revolution with every gap voxel filled in."""
    return canonicalize(np.concatenate([sphere_voxels(r), sphere_absentees(r)]))


def completed_sphere_count(r: int) -> int:
    csz, _ = kernels.size_tables(max(r, 1))
    cpref = kernels.circle_prefix(csz)
    surface = int(kernels.surface_totals([r], csz, cpref)[0])
    cnt, _ = kernels.gap_tallies(max(r - 1, 0), csz)
    return surface + 2 * int(cnt[: max(r, 1)].sum())


def is_sphere_absentee(v, r: int) -> bool:
    """Whether voxel v = (i, j, k) is a gap voxel of the radius-r sphere:
    its in-plane pixel must lie strictly between two consecutive circles
    (witness w) and w^2 must fall in the run interval of its plane."""
    i, j, k = (int(c) for c in v)
    w = absentee_witness(i, k)
    if w is None:
        return False
    jj = abs(j)
    c = r * r - jj * jj
    return c - jj <= w * w < c + jj


def is_sphere_absentee_many(vox: np.ndarray, r: int) -> np.ndarray:
    """Vectorised is_sphere_absentee over an (N, 3) int array."""
    vox = np.asarray(vox, dtype=INT)
    q, absent = classify_many(vox[:, 0], vox[:, 2])
    jj = np.abs(vox[:, 1])
    c = r * r - jj * jj
    ww = q * q
    return absent & (c - jj <= ww) & (ww < c + jj)


def parabolic_family_contains(v) -> bool:
    """Whether the octant-restricted voxel (i, j, k), 0 <= i <= k, j >= 0,
    lies in the translation-invariant parabolic gap family: some band
    (2h+1)k + h^2 <= i^2 < (2h+1)k + (h+1)^2 with k + h >= 1 contains it.
    Exactly the voxels whose (i, k) pixel is a gap pixel."""
    i, j, k = (int(c) for c in v)
    if not (0 <= i <= k) or j < 0:
        raise ValueError("voxel outside the supported octant")
    return circle.parabolic_band_index(i, k) is not None
