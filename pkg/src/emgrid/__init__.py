"""emgrid: non-uniform rectilinear grid generation for time-domain
electromagnetic solvers, with companion RF link and scattering analysis."""

from .scene import (
    X,
    Y,
    Z,
    BoundingBox,
    Compound,
    Leaf,
    Material,
    SceneError,
    SceneNode,
    Shape,
    axis_vertex_coords,
    dfs_shapes,
    parse_scene,
    scene_bbox,
    shape_bbox,
)
from .meshgen import (
    C_VACUUM,
    AxisMesh,
    ExcitationSpec,
    Grid,
    MeshParams,
    MeshWarning,
    add_boundary_and_pml,
    boundary_gap,
    cell_counts,
    cfl_timestep,
    fill_gaps,
    generate,
    grid_to_json,
    grid_to_text,
    merge_lines,
    refine_axis,
    wavelengths,
)
from .analysis import (
    LinkBudget,
    RisChannel,
    TotalInternalReflection,
    atom_channel_gain,
    composite_channel,
    e2e_channel_gain,
    eirp,
    fem_sweep_points,
    fspl,
    fspl_wavelength,
    optimal_phases,
    received_power,
    sidelobe_count,
    snell_refraction,
)
from .scatter import (
    MainLobeTruncated,
    PlateSpec,
    ScatterPattern,
    count_sidelobes,
    hpbw,
    pattern_to_text,
    po_pattern,
    poynting,
    rcs_from_fields,
)

__version__ = "0.1.0"
