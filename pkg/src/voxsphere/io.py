"""Serialization of pixel and voxel sets.

Three formats, all ASCII and byte-deterministic for a given set:

* ``canonical-text`` -- one point per line, decimal coordinates separated by
  single spaces, LF endings, lexicographically sorted, no trailing
  whitespace.  Two columns for pixel sets, three for voxel sets.
* ``csv`` -- same rows with a header (``i,j`` or ``i,j,k``) and commas.
* ``ply-ascii`` -- standard ASCII PLY point cloud with integer x/y/z vertex
  properties; pixel sets are embedded at z = 0 since PLY has no 2D form.

File writes go through a temporary file in the destination directory and an
atomic rename, so a failed export never leaves a partial file behind.
"""

from __future__ import annotations

import os
import sys
import tempfile

import numpy as np

from .lattice import INT, canonicalize

FORMATS = ("canonical-text", "csv", "ply-ascii")


def _as_points(vox: np.ndarray) -> np.ndarray:
    arr = np.asarray(vox, dtype=INT)
    if arr.ndim != 2 or arr.shape[1] not in (2, 3):
        raise ValueError("expected an (N, 2) or (N, 3) array")
    return arr


def emit_canonical_text(vox: np.ndarray) -> str:
    pts = _as_points(vox)
    return "".join(" ".join(str(c) for c in row) + "\n" for row in pts.tolist())


def emit_csv(vox: np.ndarray) -> str:
    pts = _as_points(vox)
    header = "i,j" if pts.shape[1] == 2 else "i,j,k"
    body = "".join(",".join(str(c) for c in row) + "\n" for row in pts.tolist())
    return header + "\n" + body


def emit_ply(vox: np.ndarray) -> str:
    pts = _as_points(vox)
    if pts.shape[1] == 2:
        z = np.zeros((pts.shape[0], 1), dtype=INT)
        pts = np.hstack([pts, z])
    head = (
        "ply\n"
        "format ascii 1.0\n"
        f"element vertex {pts.shape[0]}\n"
        "property int x\n"
        "property int y\n"
        "property int z\n"
        "end_header\n"
    )
    body = "".join(" ".join(str(c) for c in row) + "\n" for row in pts.tolist())
    return head + body


_EMITTERS = {
    "canonical-text": emit_canonical_text,
    "csv": emit_csv,
    "ply-ascii": emit_ply,
}


def emit(vox: np.ndarray, fmt: str) -> str:
    try:
        emitter = _EMITTERS[fmt]
    except KeyError:
        raise ValueError(f"unknown format {fmt!r}; choose from {FORMATS}")
    return emitter(vox)


def parse_canonical_text(text: str) -> np.ndarray:
    """Inverse of emit_canonical_text; accepts 2- or 3-column input and
    re-canonicalizes, so parse(emit(S)) == S for canonical S."""
    rows = []
    width = None
    for ln, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        parts = line.split()
        if width is None:
            width = len(parts)
            if width not in (2, 3):
                raise ValueError(f"line {ln}: expected 2 or 3 columns")
        if len(parts) != width:
            raise ValueError(f"line {ln}: expected {width} columns")
        rows.append([int(p) for p in parts])
    if not rows:
        return np.zeros((0, 3), dtype=INT)
    return canonicalize(np.array(rows, dtype=INT))


def write_text(text: str, out: str | None) -> None:
    """Write to a path atomically (temp file + rename), or to stdout when
    out is None."""
    if out is None:
        sys.stdout.write(text)
        return
    directory = os.path.dirname(os.path.abspath(out))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".voxsphere-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, out)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
