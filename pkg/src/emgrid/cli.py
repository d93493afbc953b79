"""Command-line entry point: file-in/file-out wrappers around the library.

All numeric logic lives in the library modules; subcommands only parse
flags, call into them, and format results. Frequencies are accepted in Hz
(scientific notation works), angles in degrees.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

from . import analysis, meshgen, scatter, scene


def _triple(text: str, cast):
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"expected three comma-separated values, got {text!r}")
    return tuple(cast(p) for p in parts)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="emgrid",
        description="Rectilinear grid generation and RF link analysis",
    )
    sub = parser.add_subparsers(dest="subcommand", required=True)

    mesh = sub.add_parser("mesh", help="generate a 3-D grid from a scene file")
    mesh.add_argument("--scene", required=True, help="scene JSON path")
    mesh.add_argument("--fmin", type=float, required=True, help="lowest excitation frequency (Hz)")
    mesh.add_argument("--fmax", type=float, required=True, help="highest excitation frequency (Hz)")
    mesh.add_argument("--max-cell-model", type=float, required=True)
    mesh.add_argument("--max-cell-space", type=float, required=True)
    mesh.add_argument("--min-cell-global", type=float, required=True)
    mesh.add_argument("--n", type=lambda s: _triple(s, int), default=(3, 3, 3),
                      help="refinement line count per axis, NX,NY,NZ")
    mesh.add_argument("--res-fraction", type=lambda s: _triple(s, float),
                      default=(6.0, 6.0, 6.0), help="clustering fraction per axis, FX,FY,FZ")
    mesh.add_argument("--pml-n", type=int, default=8)
    mesh.add_argument("--grading-ratio", type=float, default=2.0)
    mesh.add_argument("--out", required=True, help="output path")
    mesh.add_argument("--format", choices=("json", "text"), default="json")

    lb = sub.add_parser("linkbudget", help="evaluate a link budget from flags")
    lb.add_argument("--ptx", type=float, required=True, help="transmit power (dBm)")
    lb.add_argument("--gain", type=float, action="append", default=[], help="gain (dB), repeatable")
    lb.add_argument("--loss", type=float, action="append", default=[], help="loss (dB), repeatable")
    lb.add_argument("--fspl-d", type=float, help="free-space path distance (m)")
    lb.add_argument("--fspl-f", type=float, help="free-space path frequency (Hz)")

    ris = sub.add_parser("ris-phase", help="optimal per-atom phases for channel lists")
    ris.add_argument("--channels", required=True,
                     help='JSON path: {"g":[[re,im],...],"h":[[re,im],...]}')

    sc = sub.add_parser("scatter", help="plate scattering pattern and metrics")
    sc.add_argument("--p", type=float, required=True, help="plate side in wavelengths")
    sc.add_argument("--theta-i", type=float, default=0.0, help="incidence angle (degrees)")
    sc.add_argument("--samples", type=int, default=3601)
    sc.add_argument("--out", required=True, help="output path for the pattern export")
    return parser


def _run_mesh(args) -> int:
    with open(args.scene) as fh:
        root = scene.parse_scene(fh.read())
    exc = meshgen.ExcitationSpec(f_min=args.fmin, f_max=args.fmax)
    params = meshgen.MeshParams(
        max_cell_model=args.max_cell_model,
        max_cell_space=args.max_cell_space,
        min_cell_global=args.min_cell_global,
        n=args.n,
        res_fraction=args.res_fraction,
        pml_n=args.pml_n,
        grading_ratio=args.grading_ratio,
    )
    grid = meshgen.generate(root, exc, params)
    text = meshgen.grid_to_json(grid) if args.format == "json" else meshgen.grid_to_text(grid)
    with open(args.out, "w") as fh:
        fh.write(text)
    nx, ny, nz, total = meshgen.cell_counts(grid)
    print(f"cells: {nx}×{ny}×{nz} = {total}, dt_max = {grid.dt_max!r}")
    return 0


def _run_linkbudget(args) -> int:
    gains = tuple(("gain", g) for g in args.gain)
    losses = [("loss", l) for l in args.loss]
    if (args.fspl_d is None) != (args.fspl_f is None):
        raise ValueError("--fspl-d and --fspl-f must be given together")
    if args.fspl_d is not None:
        losses.append(("fspl", analysis.fspl(args.fspl_d, args.fspl_f)))
    budget = analysis.LinkBudget(p_tx=args.ptx, gains=gains, losses=tuple(losses))
    print(f"P_TX = {budget.p_tx:.2f} dBm")
    for label, value in budget.gains:
        print(f"{label}  +{value:.2f} dB")
    for label, value in budget.losses:
        print(f"{label}  -{value:.2f} dB")
    print(f"P_RX = {analysis.received_power(budget):.2f} dBm")
    return 0


def _run_ris_phase(args) -> int:
    with open(args.channels) as fh:
        doc = json.load(fh)
    g = [complex(re, im) for re, im in doc["g"]]
    h = [complex(re, im) for re, im in doc["h"]]
    phases = analysis.optimal_phases(g, h)
    before = analysis.RisChannel(g, h, [0.0] * len(g), A=1.0, d_g=1.0, d_h=1.0, m=max(len(g), 1))
    after = analysis.RisChannel(g, h, phases, A=1.0, d_g=1.0, d_h=1.0, m=max(len(g), 1))
    for i, phi in enumerate(phases, start=1):
        print(f"phi_{i} = {float(phi)!r}")
    print(f"|k| before = {abs(analysis.composite_channel(before))!r}")
    print(f"|k| after = {abs(analysis.composite_channel(after))!r}")
    return 0


def _run_scatter(args) -> int:
    # Wavelength drops out of the normalized pattern; 1 m keeps units simple.
    plate = scatter.PlateSpec(p=args.p, lam=1.0, theta_i=math.radians(args.theta_i))
    pattern = scatter.po_pattern(plate, samples=args.samples)
    with open(args.out, "w") as fh:
        fh.write(scatter.pattern_to_text(pattern))
    peak_deg = math.degrees(pattern.angles[int(pattern.values.argmax())])
    print(f"peak angle = {peak_deg:.2f} deg")
    print(f"sidelobes = {scatter.count_sidelobes(pattern)}")
    try:
        width = math.degrees(scatter.hpbw(pattern))
        print(f"hpbw = {width:.4f} deg")
    except scatter.MainLobeTruncated as exc:
        print(f"hpbw = undefined ({exc})")
    return 0


_RUNNERS = {
    "mesh": _run_mesh,
    "linkbudget": _run_linkbudget,
    "ris-phase": _run_ris_phase,
    "scatter": _run_scatter,
}


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return _RUNNERS[args.subcommand](args)
    except Exception as exc:  # noqa: BLE001 - single-line diagnostic contract
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
