"""Assembled wavefunction on the ten-parameter group manifold.

Each bispinor component is the product of a translation factor (one row of
a plane-wave amplitude times the phase) and a Lorentz factor (radial
function times associated hyperspherical function).  The printed lines are
scalar products: bispinor row i pairs with row i of the r-th amplitude,
rows 1-2 with u_r e^{-ipx} and rows 3-4 with v_r e^{+ipx}.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .dirac import FourMomentum, plane_wave, u_amplitude, v_amplitude
from .errors import DomainError, SizeCapExceeded
from .halfint import HalfInt
from .hypersph import EulerAngles, HypersphIndex, m_assoc, m_assoc_dotted
from .radial import RadialParams, RadialPoint, SignPair, f1_solution, f4_from_f1, resolve_scale

GRID_SIZE_CAP = 10**7

_PLUS_HALF = HalfInt(1)

GRID_AXES = ("x1", "x2", "x3", "x4", "phi", "eps", "theta", "tau")


@dataclass(frozen=True)
class GroupPoint:
    x: tuple[float, float, float, float]
    ang: EulerAngles


@dataclass(frozen=True)
class SpinConfig:
    p: FourMomentum
    r: int
    rp: RadialParams
    radius: float
    sign_pair: SignPair = "+-"

    def __post_init__(self) -> None:
        if self.r not in (1, 2):
            raise ValueError(f"r must be 1 or 2, got {self.r}")
        if not self.radius > 0.0:
            raise ValueError(f"radius must be positive, got {self.radius}")
        if self.sign_pair not in ("+-", "-+"):
            raise ValueError(f"sign_pair must be '+-' or '-+', got {self.sign_pair!r}")


@dataclass(frozen=True)
class PoincareBispinor:
    psi1: complex
    psi2: complex
    psi1_dot: complex
    psi2_dot: complex

    def as_tuple(self) -> tuple[complex, complex, complex, complex]:
        return (self.psi1, self.psi2, self.psi1_dot, self.psi2_dot)


def lorentz_factor(cfg: SpinConfig, ang: EulerAngles) -> tuple[complex, complex, complex, complex]:
    """The four Lorentz-part scalars (radial times hyperspherical):

    L1 = f1 M^{+1/2}_l,  L2 = s f1 M^{-1/2}_l,
    L3 = -s f4 Mdot^{+1/2}_{l_dot},  L4 = f4 Mdot^{-1/2}_{l_dot},

    with s = +1 for sign pair '+-' and s = -1 for '-+'.

    Both m = +1/2 and m = -1/2 must be admissible for l (and l_dot), which
    restricts half-integer orders to l = 1/2; larger half-integer l raises
    PoleInDenominator from the hyperspherical sum.
    """
    rp = cfg.rp
    s = 1.0 if cfg.sign_pair == "+-" else -1.0
    a = resolve_scale(rp.kappa, rp.kappa_dot)
    pt = RadialPoint(cfg.radius)
    f1 = f1_solution(rp, pt, a)
    f4 = f4_from_f1(rp, pt, a)
    up = HypersphIndex(rp.l, _PLUS_HALF)
    dn = HypersphIndex(rp.l, -_PLUS_HALF)
    up_d = HypersphIndex(rp.l_dot, _PLUS_HALF)
    dn_d = HypersphIndex(rp.l_dot, -_PLUS_HALF)
    return (
        f1 * m_assoc(up, ang),
        s * f1 * m_assoc(dn, ang),
        -s * f4 * m_assoc_dotted(up_d, ang),
        f4 * m_assoc_dotted(dn_d, ang),
    )


def translation_factor(cfg: SpinConfig, gp: GroupPoint) -> tuple[complex, complex, complex, complex]:
    """Row-wise translation scalars: u_r rows 1-2 with e^{-ipx}, v_r rows
    3-4 with e^{+ipx}."""
    u = u_amplitude(cfg.r, cfg.p).components
    v = v_amplitude(cfg.r, cfg.p).components
    pw_u = plane_wave(gp.x, cfg.p, "+")
    pw_v = plane_wave(gp.x, cfg.p, "-")
    return (complex(u[0]) * pw_u, complex(u[1]) * pw_u,
            complex(v[2]) * pw_v, complex(v[3]) * pw_v)


def bispinor(cfg: SpinConfig, gp: GroupPoint) -> PoincareBispinor:
    """Componentwise product of translation and Lorentz factors."""
    t = translation_factor(cfg, gp)
    lo = lorentz_factor(cfg, gp.ang)
    return PoincareBispinor(t[0] * lo[0], t[1] * lo[1], t[2] * lo[2], t[3] * lo[3])


def _validate_axis(name: str, values: Sequence[float]) -> None:
    if name not in GRID_AXES:
        raise DomainError(f"unknown grid axis {name!r}; valid axes: {GRID_AXES}")
    if len(values) == 0:
        raise DomainError(f"axis {name!r} has no points")
    if name == "theta":
        for v in values:
            if not (0.0 < v < math.pi):
                raise DomainError(f"theta axis value {v} outside (0, pi)")
    if name == "tau":
        for v in values:
            if not v > 0.0:
                raise DomainError(f"tau axis value {v} must be positive")


def grid_eval(
    cfg: SpinConfig,
    base: GroupPoint,
    axes: Mapping[str, Sequence[float]],
) -> list[tuple[GroupPoint, PoincareBispinor]]:
    """Evaluate the bispinor over a cartesian grid.

    ``axes`` maps parameter names (subset of GRID_AXES) to value lists;
    unswept parameters come from ``base``.  Rows are emitted in
    lexicographic order of the axes in mapping order, and each row equals
    a pointwise ``bispinor`` call bitwise.
    """
    names = list(axes.keys())
    total = 1
    for name in names:
        _validate_axis(name, axes[name])
        total *= len(axes[name])
    if total > GRID_SIZE_CAP:
        raise SizeCapExceeded(f"grid of {total} points exceeds cap {GRID_SIZE_CAP}")

    rows = []
    for combo in itertools.product(*(axes[name] for name in names)):
        vals = dict(zip(names, combo))
        x = tuple(
            vals.get(f"x{i}", base.x[i - 1]) for i in (1, 2, 3, 4)
        )
        ang = EulerAngles(
            phi=vals.get("phi", base.ang.phi),
            eps=vals.get("eps", base.ang.eps),
            theta=vals.get("theta", base.ang.theta),
            tau=vals.get("tau", base.ang.tau),
        )
        gp = GroupPoint(x, ang)
        rows.append((gp, bispinor(cfg, gp)))
    return rows
