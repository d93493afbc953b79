import math

import numpy as np
import pytest
from scipy.optimize import brentq

from emgrid import (
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


def test_plate_spec_validation():
    plate = PlateSpec(p=5.0, lam=0.01)
    assert plate.side == pytest.approx(0.05)
    with pytest.raises(ValueError):
        PlateSpec(p=0.0, lam=0.01)
    with pytest.raises(ValueError):
        PlateSpec(p=1.0, lam=-1.0)
    with pytest.raises(ValueError):
        PlateSpec(p=1.0, lam=0.01, theta_i=math.pi / 2)


def test_pattern_validation():
    angles = np.linspace(-np.pi / 2, np.pi / 2, 181)
    with pytest.raises(ValueError):
        ScatterPattern(angles, np.full(181, 0.5), peak_intensity=1.0)  # not normalized
    with pytest.raises(ValueError):
        ScatterPattern(angles[:100], np.ones(100), peak_intensity=1.0)  # too coarse


def test_peak_at_specular_angle():
    for ti_deg in (0.0, 15.0, 30.0):
        plate = PlateSpec(p=10.0, lam=0.01, theta_i=math.radians(ti_deg))
        pattern = po_pattern(plate, samples=1801)
        peak = math.degrees(pattern.angles[int(np.argmax(pattern.values))])
        assert peak == pytest.approx(ti_deg, abs=0.1)


def test_normal_incidence_pattern_symmetric():
    pattern = po_pattern(PlateSpec(p=5.0, lam=0.01), samples=1801)
    assert pattern.values == pytest.approx(pattern.values[::-1], rel=1e-12)


def test_closed_form_matches_quadrature():
    for p in (0.5, 2.0, 10.0):
        plate = PlateSpec(p=p, lam=0.01, theta_i=math.radians(20.0))
        cf = po_pattern(plate, samples=721)
        qd = po_pattern(plate, samples=721, method="quadrature")
        assert np.allclose(cf.values, qd.values, rtol=1e-6, atol=1e-9)
        assert cf.peak_intensity == pytest.approx(qd.peak_intensity, rel=1e-6)
    with pytest.raises(ValueError):
        po_pattern(plate, samples=721, method="fft")
    with pytest.raises(ValueError):
        po_pattern(plate, samples=5)


def test_sidelobe_counts_analytic():
    # At normal incidence the pattern is sinc^2(p sin(theta)); over the
    # half-space it has 2p - 2 local maxima besides the specular peak for
    # integer p, and none below p = 1.
    for p, expected in ((0.5, 0), (5.0, 8), (10.0, 18)):
        pattern = po_pattern(PlateSpec(p=p, lam=0.01), samples=3601)
        assert count_sidelobes(pattern) == expected


def test_hpbw_against_root_finding():
    p = 2.0
    pattern = po_pattern(PlateSpec(p=p, lam=0.01), samples=14401)
    # Half-power angle from the closed-form kernel directly.
    half = brentq(lambda t: np.sinc(p * math.sin(t)) ** 2 - 0.5, 1e-9, math.pi / 4)
    assert hpbw(pattern) == pytest.approx(2 * half, rel=1e-5)


def test_hpbw_truncated_main_lobe():
    # A plate much smaller than a wavelength stays above half power
    # everywhere in the visible range.
    pattern = po_pattern(PlateSpec(p=0.2, lam=0.01), samples=361)
    with pytest.raises(MainLobeTruncated):
        hpbw(pattern)


def test_pattern_to_text_format():
    pattern = po_pattern(PlateSpec(p=1.0, lam=0.01), samples=181)
    lines = pattern_to_text(pattern).splitlines()
    assert len(lines) == 181
    assert lines[90] == "0.000000 1.000000"
    db_lines = pattern_to_text(pattern, include_db=True).splitlines()
    assert db_lines[90].split() == ["0.000000", "1.000000", "0.000000"]
    assert all(len(l.split()) == 3 for l in db_lines)


def test_poynting_direction():
    assert poynting([1, 0, 0], [0, 1, 0]) == pytest.approx([0, 0, 1])


def test_rcs_from_fields():
    assert rcs_from_fields(1.0, 1.0, 1.0) == pytest.approx(4.0 * math.pi)
    # Far-field 1/r falloff keeps RCS constant.
    assert rcs_from_fields(0.5, 1.0, 2.0) == pytest.approx(4.0 * math.pi)
    with pytest.raises(ValueError):
        rcs_from_fields(1.0, 0.0, 1.0)
    with pytest.raises(ValueError):
        rcs_from_fields(1.0, 1.0, 0.0)
