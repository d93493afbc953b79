"""Closed-form RF link math: link budgets, path loss, reflection angles,
and end-to-end channel gain through a reconfigurable reflecting surface."""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .meshgen import C_VACUUM


class TotalInternalReflection(ValueError):
    """Refraction angle undefined: sin(theta_i) * n1/n2 exceeds 1."""


@dataclass(frozen=True)
class LinkBudget:
    """Transmit power plus labeled gain/loss entries, all in dB terms."""

    p_tx: float
    gains: tuple[tuple[str, float], ...] = ()
    losses: tuple[tuple[str, float], ...] = ()

    def __post_init__(self):
        for label, value in (*self.gains, *self.losses):
            if not label:
                raise ValueError("gain/loss labels must be non-empty")
            if not math.isfinite(value):
                raise ValueError(f"{label!r}: gain/loss values must be finite")
        if not math.isfinite(self.p_tx):
            raise ValueError("p_tx must be finite")


@dataclass(frozen=True)
class RisChannel:
    """Per-atom forward/return channels and phase configuration of a
    reflecting surface with m atoms of aperture A."""

    g: np.ndarray
    h: np.ndarray
    phi: np.ndarray
    A: float
    d_g: float
    d_h: float
    m: int

    def __post_init__(self):
        object.__setattr__(self, "g", np.asarray(self.g, dtype=complex))
        object.__setattr__(self, "h", np.asarray(self.h, dtype=complex))
        object.__setattr__(self, "phi", np.asarray(self.phi, dtype=float))
        if not (len(self.g) == len(self.h) == len(self.phi)):
            raise ValueError("g, h and phi must have the same length")
        if self.A <= 0 or self.d_g <= 0 or self.d_h <= 0:
            raise ValueError("A, d_g and d_h must be > 0")
        if self.m < 1:
            raise ValueError("atom count m must be >= 1")


def received_power(budget: LinkBudget) -> float:
    """Received power in dBm: transmit power plus gains minus losses."""
    return (
        budget.p_tx
        + sum(v for _, v in budget.gains)
        - sum(v for _, v in budget.losses)
    )


def eirp(p_tx: float, l_tx: float, g_tx: float) -> float:
    """Effective isotropic radiated power in dBm."""
    return p_tx - l_tx + g_tx


def fspl(d: float, f: float, c: float = C_VACUUM) -> float:
    """Free-space path loss in dB, frequency form: 20*log10(4*pi*d*f/c)."""
    if d <= 0 or f <= 0:
        raise ValueError("require d > 0 and f > 0")
    return 20.0 * math.log10(4.0 * math.pi * d * f / c)


def fspl_wavelength(d: float, lam: float) -> float:
    """Free-space path loss in dB, wavelength form: 10*log10((4*pi*d/lam)^2)."""
    if d <= 0 or lam <= 0:
        raise ValueError("require d > 0 and lam > 0")
    return 10.0 * math.log10((4.0 * math.pi * d / lam) ** 2)


def snell_refraction(theta_i: float, n1: float, n2: float) -> float:
    """Refraction angle for incidence theta_i between media n1 and n2."""
    if not 0 <= theta_i < math.pi / 2:
        raise ValueError("theta_i must be in [0, pi/2)")
    if n1 <= 0 or n2 <= 0:
        raise ValueError("refractive indices must be > 0")
    if n1 == n2:
        return theta_i
    s = math.sin(theta_i) * n1 / n2
    if s > 1.0:
        raise TotalInternalReflection(
            f"sin(theta_i)*n1/n2 = {s:.6g} > 1: no refracted ray"
        )
    return math.asin(s)


def atom_channel_gain(A: float, d: float) -> float:
    """Channel gain to or from a single atom of aperture A at distance d."""
    if A <= 0 or d <= 0:
        raise ValueError("require A > 0 and d > 0")
    return A / (4.0 * math.pi * d**2)


def e2e_channel_gain(A: float, d_g: float, d_h: float, m: int) -> float:
    """End-to-end channel gain m^2 A^2 / (4 pi d_g d_h)^2 through m atoms."""
    if A <= 0 or d_g <= 0 or d_h <= 0 or m < 1:
        raise ValueError("require positive A, d_g, d_h and m >= 1")
    base = (A / (4.0 * math.pi * d_g * d_h)) ** 2
    return (m * m) * base


def composite_channel(ch: RisChannel) -> complex:
    """Composite end-to-end channel k = sum_n g_n e^{j phi_n} h_n."""
    return complex(np.sum(ch.g * np.exp(1j * ch.phi) * ch.h))


def optimal_phases(g, h) -> np.ndarray:
    """Per-atom phases that co-phase all terms of the composite channel.

    phi_n = -arg(g_n h_n); the resulting |k| is sum |g_n||h_n|. Zero-channel
    atoms get phase 0.
    """
    g = np.asarray(g, dtype=complex)
    h = np.asarray(h, dtype=complex)
    if g.shape != h.shape:
        raise ValueError("g and h must have the same length")
    return -np.angle(g * h)


def sidelobe_count(p: float) -> int:
    """Sidelobe count 2p - 1 for a square plate of side p wavelengths."""
    if p <= 0:
        raise ValueError("p must be > 0")
    if abs(2 * p - round(2 * p)) > 1e-9:
        warnings.warn(
            f"2p = {2 * p} is not an integer; side length is not a "
            "half-wavelength multiple",
            stacklevel=2,
        )
    return max(int(round(2 * p)) - 1, 0)


def fem_sweep_points(f0: float, f1: float, df: float) -> int:
    """Number of frequency-sweep points (f1 - f0) / df, as printed: rounded
    when within 1e-9 of an integer, floored otherwise."""
    if df <= 0:
        raise ValueError("df must be > 0")
    if f1 < f0:
        raise ValueError("f1 must be >= f0")
    val = (f1 - f0) / df
    nearest = round(val)
    if abs(val - nearest) <= 1e-9:
        return int(nearest)
    return math.floor(val)
