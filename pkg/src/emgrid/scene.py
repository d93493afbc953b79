"""Geometry data model: materials, shapes, compound trees, and vertex queries.

A scene is a tree of compounds (named groups) whose leaves carry shapes.
Shapes are either axis-aligned boxes or raw vertex sets; only their vertex
coordinates matter to the mesher, so overlap between shapes is permitted
and never checked.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

# Axis indices used throughout the package.
X, Y, Z = 0, 1, 2


class SceneError(ValueError):
    """Raised for malformed or inconsistent scene documents."""


@dataclass(frozen=True)
class Material:
    eps_r: float = 1.0
    mu_r: float = 1.0
    pec: bool = False

    def __post_init__(self):
        # eps_r/mu_r are ignored for PEC, so only validate the dielectric case.
        if not self.pec:
            if self.eps_r <= 0:
                raise SceneError(f"eps_r must be > 0, got {self.eps_r}")
            if self.mu_r <= 0:
                raise SceneError(f"mu_r must be > 0, got {self.mu_r}")


Point = tuple[float, float, float]


@dataclass(frozen=True)
class BoundingBox:
    min: Point
    max: Point

    def __post_init__(self):
        if any(lo > hi for lo, hi in zip(self.min, self.max)):
            raise SceneError(f"bounding box min {self.min} exceeds max {self.max}")

    def union(self, other: "BoundingBox") -> "BoundingBox":
        return BoundingBox(
            tuple(min(a, b) for a, b in zip(self.min, other.min)),
            tuple(max(a, b) for a, b in zip(self.max, other.max)),
        )

    def contains(self, other: "BoundingBox") -> bool:
        return all(a <= b for a, b in zip(self.min, other.min)) and all(
            a >= b for a, b in zip(self.max, other.max)
        )


@dataclass(frozen=True)
class Shape:
    """A material-bearing geometric primitive.

    kind is "box" (two opposite corners, normalized so min <= max) or
    "vertex-set" (at least one explicit 3-D point). Lengths are meters.
    """

    id: str
    kind: str
    material: Material
    corner_min: Point | None = None
    corner_max: Point | None = None
    vertices: tuple[Point, ...] = ()

    @staticmethod
    def box(shape_id: str, corner_a, corner_b, material: Material) -> "Shape":
        lo = tuple(min(a, b) for a, b in zip(corner_a, corner_b))
        hi = tuple(max(a, b) for a, b in zip(corner_a, corner_b))
        if lo == hi:
            raise SceneError(
                f"shape {shape_id!r}: box has zero extent on all three axes"
            )
        return Shape(shape_id, "box", material, corner_min=lo, corner_max=hi)

    @staticmethod
    def vertex_set(shape_id: str, vertices, material: Material) -> "Shape":
        pts = tuple(tuple(float(c) for c in v) for v in vertices)
        if not pts:
            raise SceneError(f"shape {shape_id!r}: vertex-set must contain >= 1 point")
        if any(len(p) != 3 for p in pts):
            raise SceneError(f"shape {shape_id!r}: vertices must be 3-D points")
        return Shape(shape_id, "vertex-set", material, vertices=pts)

    def corner_points(self) -> tuple[Point, ...]:
        """All vertex coordinates of the shape (8 box corners or the set)."""
        if self.kind == "box":
            lo, hi = self.corner_min, self.corner_max
            return tuple(
                (x, y, z) for x in (lo[0], hi[0]) for y in (lo[1], hi[1]) for z in (lo[2], hi[2])
            )
        return self.vertices


@dataclass(frozen=True)
class Leaf:
    shape: Shape


@dataclass(frozen=True)
class Compound:
    name: str
    children: tuple["SceneNode", ...] = field(default_factory=tuple)


SceneNode = Leaf | Compound


def _parse_material(obj, shape_id: str) -> Material:
    if not isinstance(obj, dict):
        raise SceneError(f"shape {shape_id!r}: material must be an object")
    try:
        return Material(
            eps_r=float(obj.get("eps_r", 1.0)),
            mu_r=float(obj.get("mu_r", 1.0)),
            pec=bool(obj.get("pec", False)),
        )
    except SceneError as exc:
        raise SceneError(f"shape {shape_id!r}: {exc}") from None


def _parse_shape(obj) -> Shape:
    if not isinstance(obj, dict):
        raise SceneError("shape entry must be an object")
    shape_id = obj.get("id")
    if not isinstance(shape_id, str) or not shape_id:
        raise SceneError("shape id must be a non-empty string")
    kind = obj.get("kind")
    material = _parse_material(obj.get("material", {}), shape_id)
    if kind == "box":
        if "min" not in obj or "max" not in obj:
            raise SceneError(f"shape {shape_id!r}: box requires 'min' and 'max'")
        lo = tuple(float(c) for c in obj["min"])
        hi = tuple(float(c) for c in obj["max"])
        if len(lo) != 3 or len(hi) != 3:
            raise SceneError(f"shape {shape_id!r}: corners must be 3-D points")
        return Shape.box(shape_id, lo, hi, material)
    if kind == "vertex-set":
        if "vertices" not in obj:
            raise SceneError(f"shape {shape_id!r}: vertex-set requires 'vertices'")
        return Shape.vertex_set(shape_id, obj["vertices"], material)
    raise SceneError(f"shape {shape_id!r}: unknown shape kind {kind!r}")


def _parse_node(obj, seen_ids: set[str]) -> SceneNode:
    if not isinstance(obj, dict):
        raise SceneError("scene node must be an object")
    if "shape" in obj:
        shape = _parse_shape(obj["shape"])
        if shape.id in seen_ids:
            raise SceneError(f"duplicate shape id {shape.id!r}")
        seen_ids.add(shape.id)
        return Leaf(shape)
    if "children" in obj or "name" in obj:
        name = obj.get("name", "")
        if not isinstance(name, str):
            raise SceneError("compound name must be a string")
        children = obj.get("children", [])
        if not isinstance(children, list):
            raise SceneError(f"compound {name!r}: children must be a list")
        return Compound(name, tuple(_parse_node(c, seen_ids) for c in children))
    raise SceneError("scene node must carry either 'shape' or 'name'/'children'")


def parse_scene(text: str) -> SceneNode:
    """Parse a JSON scene document into a compound/shape tree."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SceneError(f"malformed scene document: {exc}") from None
    return _parse_node(doc, set())


def dfs_shapes(root: SceneNode) -> list[Shape]:
    """Flatten the tree to its leaf shapes in depth-first pre-order.

    Children are visited in document order; compounds never appear in the
    output. An empty compound yields an empty list.
    """
    out: list[Shape] = []
    stack = [root]
    while stack:
        node = stack.pop()
        if isinstance(node, Leaf):
            out.append(node.shape)
        else:
            stack.extend(reversed(node.children))
    return out


def shape_bbox(shape: Shape) -> BoundingBox:
    """Tight axis-aligned bounding box of a shape."""
    if shape.kind == "box":
        return BoundingBox(shape.corner_min, shape.corner_max)
    lo = tuple(min(v[i] for v in shape.vertices) for i in range(3))
    hi = tuple(max(v[i] for v in shape.vertices) for i in range(3))
    return BoundingBox(lo, hi)


def scene_bbox(shapes: list[Shape]) -> BoundingBox:
    """Union of the bounding boxes of all shapes."""
    if not shapes:
        raise SceneError("cannot compute the bounding box of an empty scene")
    bbox = shape_bbox(shapes[0])
    for s in shapes[1:]:
        bbox = bbox.union(shape_bbox(s))
    return bbox


def axis_vertex_coords(shapes: list[Shape], axis: int) -> list[float]:
    """Sorted, exactly-deduplicated projection of all shape vertices onto an axis.

    Coordinates are authored values, so exact floating-point equality is the
    correct dedup criterion here.
    """
    if axis not in (X, Y, Z):
        raise ValueError(f"axis must be one of {X}, {Y}, {Z}")
    coords = {p[axis] for s in shapes for p in s.corner_points()}
    return sorted(coords)
