"""Shared scene fixtures.

All mesh fixtures use a 30 GHz single-frequency excitation (lambda close to
10 mm) and place box corners on a 2 mm lattice, so vertex coordinates are
exact in binary floating point and always farther apart than the default
clustering tolerance of lambda/6.
"""

import json

import numpy as np
import pytest

from emgrid import Compound, ExcitationSpec, Leaf, Material, MeshParams, Shape

MM = 1e-3
PEC = Material(pec=True)


def leaf_box(shape_id, lo, hi, material=PEC):
    return Leaf(Shape.box(shape_id, lo, hi, material))


@pytest.fixture
def exc_30ghz():
    return ExcitationSpec(f_min=30e9, f_max=30e9)


@pytest.fixture
def default_params():
    return MeshParams(max_cell_model=40.0, max_cell_space=30.0, min_cell_global=300.0)


@pytest.fixture
def single_box_scene():
    return leaf_box("plate", (0, 0, 0), (10 * MM, 20 * MM, 30 * MM))


@pytest.fixture
def centered_box_scene():
    # Symmetric about all three axis planes.
    return leaf_box("core", (-6 * MM, -8 * MM, -10 * MM), (6 * MM, 8 * MM, 10 * MM))


@pytest.fixture
def abutting_boxes_scene():
    # Two boxes sharing the x = 10 mm face.
    return Compound(
        "pair",
        (
            leaf_box("left", (0, 0, 0), (10 * MM, 8 * MM, 8 * MM)),
            leaf_box("right", (10 * MM, 0, 0), (20 * MM, 8 * MM, 8 * MM)),
        ),
    )


@pytest.fixture
def thin_sheet_scene():
    # Zero extent along z: a conducting sheet.
    return leaf_box("sheet", (0, 0, 4 * MM), (12 * MM, 8 * MM, 4 * MM))


@pytest.fixture
def nested_compound_scene():
    return Compound(
        "assembly",
        (
            Compound(
                "radome",
                (
                    leaf_box("shell", (-8 * MM, -8 * MM, 0), (8 * MM, 8 * MM, 2 * MM)),
                    Compound(
                        "feed",
                        (leaf_box("pin", (-2 * MM, -2 * MM, 2 * MM), (2 * MM, 2 * MM, 10 * MM)),),
                    ),
                ),
            ),
            leaf_box("ground", (-10 * MM, -10 * MM, -2 * MM), (10 * MM, 10 * MM, 0)),
        ),
    )


def random_lattice_scene(seed=1234, n_shapes=50, lattice=2 * MM, span=12):
    """Randomized scene of axis-aligned boxes with corners on a lattice.

    span is the domain size in lattice steps per axis; every box gets at
    least one step of extent on every axis.
    """
    rng = np.random.default_rng(seed)
    children = []
    for i in range(n_shapes):
        lo = rng.integers(0, span - 1, size=3)
        ext = rng.integers(1, 4, size=3)
        hi = np.minimum(lo + ext, span)
        children.append(
            leaf_box(f"s{i}", tuple(lo * lattice), tuple(hi * lattice))
        )
    return Compound("random-scene", tuple(children))


@pytest.fixture
def random_scene():
    return random_lattice_scene()


def dfs_figure_tree():
    """Compound tree whose leaves are S1..S7 in depth-first document order.

    C1 -> [C2, C4, C6]; C2 -> [C3 -> [S1]]; C4 -> [C5 -> [S2, S3], S4];
    C6 -> [S5, S6, S7].
    """

    def s(j):
        x = 2 * j * MM
        return leaf_box(f"S{j}", (x, 0, 0), (x + 2 * MM, 2 * MM, 2 * MM))

    return Compound(
        "C1",
        (
            Compound("C2", (Compound("C3", (s(1),)),)),
            Compound("C4", (Compound("C5", (s(2), s(3))), s(4))),
            Compound("C6", (s(5), s(6), s(7))),
        ),
    )


@pytest.fixture
def dfs_tree():
    return dfs_figure_tree()


@pytest.fixture
def scene_json(tmp_path):
    """Scene document on disk, for CLI tests."""
    doc = {
        "name": "pair",
        "children": [
            {
                "shape": {
                    "id": "left",
                    "kind": "box",
                    "min": [0, 0, 0],
                    "max": [0.01, 0.008, 0.008],
                    "material": {"pec": True},
                }
            },
            {
                "shape": {
                    "id": "right",
                    "kind": "box",
                    "min": [0.01, 0, 0],
                    "max": [0.02, 0.008, 0.008],
                    "material": {"eps_r": 2.2},
                }
            },
        ],
    }
    path = tmp_path / "scene.json"
    path.write_text(json.dumps(doc))
    return path
