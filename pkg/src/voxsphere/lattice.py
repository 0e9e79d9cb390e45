"""Exact integer primitives shared by the 2D and 3D lattice constructions.

Everything here works in plain 64-bit integer arithmetic.  A pixel (a, b)
belongs to the digital circle of radius r when the distance from the pixel
centre to the real circle, measured along the dominant axis, is below 1/2:

    | max(|a|,|b|) - sqrt(r^2 - min(|a|,|b|)^2) | < 1/2

Squaring both bounds turns the test into a comparison of 4*(r^2 - n^2)
against the odd squares (2m - 1)^2 and (2m + 1)^2, which is never a tie
because one side is divisible by four and the other is odd.
"""

from __future__ import annotations

import math

import numpy as np

INT = np.int64


def isqrt(n: int) -> int:
    """Floor square root of a non-negative integer."""
    if n < 0:
        raise ValueError("isqrt of a negative number")
    return math.isqrt(n)


def ceil_sqrt(n: int) -> int:
    """Smallest integer q with q*q >= n."""
    if n < 0:
        raise ValueError("ceil_sqrt of a negative number")
    if n == 0:
        return 0
    return math.isqrt(n - 1) + 1


def on_digital_circle(r: int, a: int, b: int) -> bool:
    """Membership of pixel (a, b) in the digital circle of radius r."""
    if r < 0:
        raise ValueError("radius must be non-negative")
    m = max(abs(a), abs(b))
    n = min(abs(a), abs(b))
    if n > r:
        return False
    d = 4 * (r * r - n * n)
    if m == 0:
        # only the origin on the radius-0 circle
        return d < 1
    return (2 * m - 1) ** 2 < d < (2 * m + 1) ** 2


def classify_pixel(x: int, y: int) -> tuple[int, bool]:
    """Place a pixel on the unique circle through it, or between two circles.

    Returns (q, False) when the pixel lies on the digital circle of radius q,
    and (w, True) when it falls in the gap between the circles of radii w and
    w + 1 (an absentee pixel with witness w).  Every lattice pixel is exactly
    one of the two: with m = max(|x|,|y|), n = min(|x|,|y|) the pixel is on
    C(q) iff q^2 lands in [m^2+n^2-m+1, m^2+n^2+m], a window that contains at
    most one square.
    """
    m = max(abs(x), abs(y))
    n = min(abs(x), abs(y))
    if m == 0:
        return 0, False
    t = m * m + n * n
    q = math.isqrt(t + m)
    if q * q >= t - m + 1:
        return q, False
    return q, True


def ring_radius(x: int, y: int) -> int | None:
    """Radius of the digital circle through (x, y), or None for absentees."""
    q, absent = classify_pixel(x, y)
    return None if absent else q


def absentee_witness(x: int, y: int) -> int | None:
    """Witness radius w when (x, y) lies strictly between C(w) and C(w+1)."""
    q, absent = classify_pixel(x, y)
    return q if absent else None


def classify_many(x: np.ndarray, y: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorised classify_pixel over int64 arrays: (radius, absentee mask)."""
    ax = np.abs(x.astype(INT))
    ay = np.abs(y.astype(INT))
    m = np.maximum(ax, ay)
    n = np.minimum(ax, ay)
    t = m * m + n * n
    q = exact_isqrt_many(t + m)
    absent = (q * q < t - m + 1) & (m > 0)
    return q, absent


def exact_isqrt_many(a: np.ndarray) -> np.ndarray:
    """Exact floor sqrt for int64 arrays (float sqrt plus a one-step fixup)."""
    q = np.sqrt(a.astype(np.float64)).astype(INT)
    q -= q * q > a
    q += (q + 1) * (q + 1) <= a
    return q


def symmetric_octet(a: int, b: int) -> np.ndarray:
    """All sign/swap images of (a, b), deduplicated and lexicographically sorted.

    Cardinality is 1 for the origin, 4 on an axis or diagonal, 8 otherwise.
    """
    if a < 0 or b < 0:
        raise ValueError("octet representative must have non-negative coordinates")
    pts = {
        (a, b), (b, a), (-a, b), (b, -a),
        (a, -b), (-b, a), (-a, -b), (-b, -a),
    }
    return np.array(sorted(pts), dtype=INT)


def canonicalize(points: np.ndarray) -> np.ndarray:
    """Deduplicate and lexicographically sort an (N, k) point array."""
    arr = np.asarray(points, dtype=INT)
    if arr.size == 0:
        return arr.reshape(0, arr.shape[1] if arr.ndim == 2 else 2)
    return np.unique(arr, axis=0)


class IntegerInterval:
    """Half-open integer interval [lo, hi)."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: int, hi: int):
        self.lo = int(lo)
        self.hi = int(hi)

    def __contains__(self, value: int) -> bool:
        return self.lo <= value < self.hi

    @property
    def is_empty(self) -> bool:
        return self.hi <= self.lo

    def __len__(self) -> int:
        return max(0, self.hi - self.lo)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntegerInterval):
            return NotImplemented
        return (self.lo, self.hi) == (other.lo, other.hi)

    def __hash__(self) -> int:
        return hash((self.lo, self.hi))

    def __repr__(self) -> str:
        return f"IntegerInterval({self.lo}, {self.hi})"
