"""Non-uniform rectilinear grid generation for FDTD-style solvers.

The pipeline, per axis: project shape vertices to anchors, cluster anchors
that sit closer than the per-axis resolution fraction, grade extra lines
toward each anchor, fill the remaining gaps at the local maximum cell size,
enforce the global minimum cell size, then append the absorbing-boundary
gap and PML cells. All cell-size inputs are expressed as fractions of the
shortest excitation wavelength.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np

from .scene import SceneNode, dfs_shapes, axis_vertex_coords, scene_bbox, SceneError

C_VACUUM = 299_792_458.0  # m/s


class MeshWarning(UserWarning):
    pass


@dataclass(frozen=True)
class ExcitationSpec:
    """Excitation band. f_min must be positive: a DC component would make
    the quarter-wavelength boundary spacing unbounded."""

    f_min: float
    f_max: float
    c: float = C_VACUUM

    def __post_init__(self):
        if self.f_min <= 0:
            raise ValueError(
                "f_min must be > 0: a DC excitation makes the boundary spacing "
                "infinitely large"
            )
        if self.f_max < self.f_min:
            raise ValueError(f"f_max ({self.f_max}) must be >= f_min ({self.f_min})")
        if self.c <= 0:
            raise ValueError("propagation speed must be > 0")


@dataclass(frozen=True)
class MeshParams:
    """Grid-resolution parameters, as wavelength-fraction denominators.

    Larger fractions mean smaller cells; min_cell_global caps how small a
    cell may get (keeping the solver timestep long), so it must be the
    largest of the three.
    """

    max_cell_model: float
    max_cell_space: float
    min_cell_global: float
    n: tuple[int, int, int] = (3, 3, 3)
    res_fraction: tuple[float, float, float] = (6.0, 6.0, 6.0)
    pml_n: int = 8
    grading_ratio: float = 2.0

    def __post_init__(self):
        for name in ("max_cell_model", "max_cell_space", "min_cell_global"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be > 0")
        if self.min_cell_global < self.max_cell_model:
            raise ValueError(
                "min_cell_global must be >= max_cell_model "
                "(the minimum cell cannot exceed the model cell size)"
            )
        if not 4 <= self.pml_n <= 50:
            raise ValueError(f"pml_n must be in [4, 50], got {self.pml_n}")
        if len(self.n) != 3 or any(k < 0 or k != int(k) for k in self.n):
            raise ValueError("n must be a triple of non-negative integers")
        if len(self.res_fraction) != 3 or any(f <= 0 for f in self.res_fraction):
            raise ValueError("res_fraction must be a triple of positive fractions")
        if self.grading_ratio <= 1:
            raise ValueError("grading_ratio must be > 1")


@dataclass(frozen=True)
class AxisMesh:
    lines: np.ndarray = field(repr=False)
    model_interval: tuple[float, float]

    def __post_init__(self):
        object.__setattr__(self, "lines", np.asarray(self.lines, dtype=float))
        if np.any(np.diff(self.lines) <= 0):
            raise ValueError("axis mesh lines must be strictly increasing")

    @property
    def cells(self) -> np.ndarray:
        return np.diff(self.lines)


@dataclass(frozen=True)
class Grid:
    x: AxisMesh
    y: AxisMesh
    z: AxisMesh
    lambda_min: float
    lambda_max: float
    lambda_mid_quarter: float
    dt_max: float


def wavelengths(exc: ExcitationSpec) -> tuple[float, float]:
    """(lambda_min, lambda_max) of the excitation band."""
    return exc.c / exc.f_max, exc.c / exc.f_min


def boundary_gap(lambda_min: float, lambda_max: float) -> float:
    """Quarter of the midpoint wavelength: the model-to-boundary spacing."""
    if not 0 < lambda_min <= lambda_max:
        raise ValueError("require 0 < lambda_min <= lambda_max")
    return (lambda_min * lambda_max) / (2.0 * (lambda_min + lambda_max))


def cfl_timestep(dx_min: float, dy_min: float, dz_min: float, c: float = C_VACUUM) -> float:
    """Largest stable timestep for the given minimum cell edges."""
    if dx_min <= 0 or dy_min <= 0 or dz_min <= 0:
        raise ValueError("minimum cell edges must be > 0")
    return 1.0 / (c * math.sqrt(1.0 / dx_min**2 + 1.0 / dy_min**2 + 1.0 / dz_min**2))


def _ceil_cells(width: float, h: float) -> int:
    # Tolerant ceil: a gap that is an exact multiple of h (up to rounding)
    # must not gain a spurious extra cell.
    return max(1, math.ceil(width / h - 1e-9))


def refine_axis(
    anchors,
    params: MeshParams,
    axis: int,
    lambda_min: float,
    interval: tuple[float, float] | None = None,
) -> np.ndarray:
    """Insert graded refinement lines around each anchor.

    On each side of every anchor, n[axis] lines are placed at offsets
    h / ratio^(n-k+1) for k = 1..n, where h is the model cell size; the
    spacing approaches the anchor geometrically. Inserted lines that fall
    outside `interval` (when given) or within the merge tolerance of an
    anchor are dropped. Anchors are always retained.
    """
    anchors = np.asarray(anchors, dtype=float)
    n = params.n[axis]
    if n == 0 or anchors.size == 0:
        return anchors.copy()
    h = lambda_min / params.max_cell_model
    eps = lambda_min / params.min_cell_global
    offsets = h / params.grading_ratio ** np.arange(n, 0, -1)  # ascending
    cand = np.concatenate([(anchors[:, None] - offsets).ravel(),
                           (anchors[:, None] + offsets).ravel()])
    if interval is not None:
        cand = cand[(cand >= interval[0]) & (cand <= interval[1])]
    # Drop candidates colliding with an anchor.
    idx = np.searchsorted(anchors, cand)
    near_right = np.zeros(cand.shape, dtype=bool)
    near_left = np.zeros(cand.shape, dtype=bool)
    has_right = idx < anchors.size
    near_right[has_right] = anchors[idx[has_right]] - cand[has_right] < eps
    has_left = idx > 0
    near_left[has_left] = cand[has_left] - anchors[idx[has_left] - 1] < eps
    cand = cand[~(near_left | near_right)]
    return np.unique(np.concatenate([anchors, cand]))


def fill_gaps(lines, model_interval: tuple[float, float], lambda_min: float,
              params: MeshParams) -> np.ndarray:
    """Uniformly subdivide every gap down to the local maximum cell size.

    Gaps overlapping the model interval use the (finer) model resolution,
    gaps fully outside use the space resolution. Cell counts round up, so
    the local ceiling always holds. Every input line is retained.
    """
    lines = np.asarray(lines, dtype=float)
    if lines.size < 2:
        raise ValueError("fill_gaps requires at least 2 lines")
    h_model = lambda_min / params.max_cell_model
    h_space = lambda_min / params.max_cell_space
    lo, hi = model_interval
    out = [lines[:1]]
    for a, b in zip(lines[:-1], lines[1:]):
        h = h_model if (a < hi and b > lo) else h_space
        m = _ceil_cells(b - a, h)
        if m > 1:
            out.append(a + (b - a) * np.arange(1, m) / m)
        out.append(np.array([b]))
    return np.concatenate(out)


def merge_lines(lines, epsilon_merge: float, anchors=()) -> np.ndarray:
    """Drop lines closer than epsilon_merge to the previously kept line.

    Greedy left-to-right pass. Anchor lines are never dropped: when an
    anchor would collide, preceding non-anchor lines are dropped instead,
    so consecutive gaps are >= epsilon_merge unless both endpoints are
    anchors.
    """
    lines = np.asarray(lines, dtype=float)
    if lines.size == 0:
        return lines.copy()
    anchor_set = set(np.asarray(anchors, dtype=float).tolist())
    kept = [lines[0]]
    for x in lines[1:]:
        if x == kept[-1]:
            continue
        if x - kept[-1] >= epsilon_merge:
            kept.append(x)
            continue
        if x in anchor_set:
            while kept and kept[-1] not in anchor_set and x - kept[-1] < epsilon_merge:
                kept.pop()
            kept.append(x)
    return np.array(kept)


def add_boundary_and_pml(axis_lines, gap: float, pml_n: int, space_cell: float) -> np.ndarray:
    """Append the free-space boundary gap and PML cells to both axis ends.

    The gap region is subdivided at the space cell size (rounding the cell
    count up); the PML consists of exactly pml_n cells of space_cell each.
    """
    lines = np.asarray(axis_lines, dtype=float)
    if lines.size == 0:
        raise ValueError("axis_lines must be non-empty")
    if not 4 <= pml_n <= 50:
        raise ValueError(f"pml_n must be in [4, 50], got {pml_n}")
    if gap < 0 or space_cell <= 0:
        raise ValueError("require gap >= 0 and space_cell > 0")
    lo, hi = lines[0], lines[-1]
    left, right = [], []
    if gap > 0:
        m = _ceil_cells(gap, space_cell)
        frac = np.arange(1, m + 1) / m
        left.append(lo - gap * frac[::-1])
        right.append(hi + gap * frac)
    pml = space_cell * np.arange(1, pml_n + 1)
    left.insert(0, lo - gap - pml[::-1])
    right.append(hi + gap + pml)
    return np.concatenate([*left, lines, *right])


def _cluster_anchors(anchors: np.ndarray, tol: float, eps_merge: float) -> np.ndarray:
    """Merge anchors closer than tol into clusters, keeping each cluster's
    two extreme coordinates (or its midpoint when the extent is below the
    merge tolerance)."""
    if anchors.size <= 1:
        return anchors.copy()
    out: list[float] = []
    start = 0
    for i in range(1, anchors.size + 1):
        if i == anchors.size or anchors[i] - anchors[i - 1] >= tol:
            lo, hi = anchors[start], anchors[i - 1]
            if i - 1 == start:
                out.append(lo)
            elif hi - lo < eps_merge:
                out.append(0.5 * (lo + hi))
            else:
                out.extend((lo, hi))
            start = i
    return np.asarray(out)


def _mesh_axis(anchors: np.ndarray, axis: int, lambda_min: float, lambda_max: float,
               params: MeshParams) -> AxisMesh:
    """Full single-axis pipeline; pure, so axes may run concurrently."""
    eps = lambda_min / params.min_cell_global
    model_interval = (float(anchors[0]), float(anchors[-1]))
    anchors = _cluster_anchors(anchors, lambda_min / params.res_fraction[axis], eps)
    lines = refine_axis(anchors, params, axis, lambda_min, interval=model_interval)
    if lines.size >= 2:
        lines = fill_gaps(lines, model_interval, lambda_min, params)
    lines = merge_lines(lines, eps, anchors=anchors)
    gap = boundary_gap(lambda_min, lambda_max)
    lines = add_boundary_and_pml(lines, gap, params.pml_n,
                                 lambda_min / params.max_cell_space)
    return AxisMesh(lines, model_interval)


def generate(scene_root: SceneNode, exc: ExcitationSpec, params: MeshParams) -> Grid:
    """Generate the full 3-D grid for a scene.

    Deterministic and pure: identical inputs yield identical grids, and the
    three axes are independent of each other.
    """
    if params.max_cell_model <= params.max_cell_space:
        warnings.warn(
            "max_cell_model <= max_cell_space: the model is meshed more "
            "coarsely than the surrounding free space",
            MeshWarning,
            stacklevel=2,
        )
    shapes = dfs_shapes(scene_root)
    if not shapes:
        raise SceneError("cannot mesh an empty scene")
    scene_bbox(shapes)  # validates geometry consistency early
    lam_min, lam_max = wavelengths(exc)
    meshes = [
        _mesh_axis(np.asarray(axis_vertex_coords(shapes, axis)), axis,
                   lam_min, lam_max, params)
        for axis in range(3)
    ]
    dt = cfl_timestep(*(float(m.cells.min()) for m in meshes), c=exc.c)
    return Grid(*meshes, lambda_min=lam_min, lambda_max=lam_max,
                lambda_mid_quarter=boundary_gap(lam_min, lam_max), dt_max=dt)


def cell_counts(grid: Grid) -> tuple[int, int, int, int]:
    """(nx, ny, nz, total) cell counts of a grid."""
    nx = grid.x.lines.size - 1
    ny = grid.y.lines.size - 1
    nz = grid.z.lines.size - 1
    return nx, ny, nz, nx * ny * nz


def grid_to_json(grid: Grid) -> str:
    """JSON export with full double precision (shortest round-trip floats)."""
    import json

    nx, ny, nz, total = cell_counts(grid)
    return json.dumps(
        {
            "x_lines": grid.x.lines.tolist(),
            "y_lines": grid.y.lines.tolist(),
            "z_lines": grid.z.lines.tolist(),
            "dt_max": grid.dt_max,
            "lambda_min": grid.lambda_min,
            "cells": [nx, ny, nz, total],
        }
    )


def grid_to_text(grid: Grid) -> str:
    """Plain-text export: three blocks headed X/Y/Z, one coordinate per line."""
    blocks = []
    for head, mesh in zip("XYZ", (grid.x, grid.y, grid.z)):
        blocks.append(head)
        blocks.extend(repr(v) for v in mesh.lines.tolist())
    return "\n".join(blocks) + "\n"
