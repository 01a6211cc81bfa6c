import cmath
import math

import numpy as np
import pytest

from poincarewave.assembly import (
    GroupPoint,
    SpinConfig,
    bispinor,
    grid_eval,
    lorentz_factor,
    translation_factor,
)
from poincarewave.dirac import FourMomentum
from poincarewave.errors import DomainError, PoleInDenominator, SizeCapExceeded
from poincarewave.halfint import half
from poincarewave.hypersph import EulerAngles
from poincarewave.radial import RadialParams


ANG = EulerAngles(phi=0.4, eps=0.2, theta=math.pi / 2, tau=1.0)


def config(sign_pair="+-", r=1, C1=1.0, C2=0.0):
    rp = RadialParams(kappa=0.5, kappa_dot=0.5, C1=C1, C2=C2, l=half(1), l_dot=half(1))
    p = FourMomentum.on_shell(0.0, 0.0, 0.75, 1.0)
    return SpinConfig(p=p, r=r, rp=rp, radius=1.0, sign_pair=sign_pair)


def test_config_validation():
    with pytest.raises(ValueError):
        config(sign_pair="++")
    with pytest.raises(ValueError):
        config(r=3)


def test_lorentz_factor_golden():
    # frozen composition of the verified radial and hyperspherical parts
    lo = lorentz_factor(config(), ANG)
    want = (
        0.7474225531292459 + 0.10046855321828263j,
        0.5993967906615951 - 0.7665251541658812j,
        -0.23238835620403334 - 0.1372924554740495j,
        0.09075888778060598 - 0.33622983753926583j,
    )
    for got, ref in zip(lo, want):
        assert got == pytest.approx(ref, rel=1e-12)


def test_bispinor_golden():
    gp = GroupPoint((0.0, 0.0, 0.0, 1.0), ANG)
    b = bispinor(config(), gp).as_tuple()
    want = (
        0.3511020177933485 - 0.7187166177308385j,
        0.0,
        0.06046949128888185 - 0.27982798797874686j,
        0.0,
    )
    for got, ref in zip(b, want):
        assert got == pytest.approx(ref, rel=1e-12, abs=1e-15)


def test_factorization():
    rng = np.random.default_rng(7)
    cfg = config(C1=0.6 + 0.2j, C2=-0.3 + 0.1j, r=2)
    for _ in range(100):
        ang = EulerAngles(
            phi=float(rng.uniform(-3, 3)),
            eps=float(rng.uniform(-1, 1)),
            theta=float(rng.uniform(0.2, 2.9)),
            tau=float(rng.uniform(0.2, 4.0)),
        )
        gp = GroupPoint(tuple(rng.uniform(-2, 2, size=4)), ang)
        b = bispinor(cfg, gp).as_tuple()
        t = translation_factor(cfg, gp)
        lo = lorentz_factor(cfg, gp.ang)
        for i in range(4):
            assert b[i] == pytest.approx(t[i] * lo[i], rel=1e-14, abs=1e-300)


def test_sign_pair_flip_negates_middle_components():
    gp = GroupPoint((0.3, -0.7, 1.1, 0.4), ANG)
    b = bispinor(config("+-", C1=0.6, C2=0.2), gp).as_tuple()
    f = bispinor(config("-+", C1=0.6, C2=0.2), gp).as_tuple()
    assert f[0] == pytest.approx(b[0], rel=1e-15)
    assert f[1] == pytest.approx(-b[1], rel=1e-15)
    assert f[2] == pytest.approx(-b[2], rel=1e-15)
    assert f[3] == pytest.approx(b[3], rel=1e-15)


def test_translation_moves_only_phase():
    cfg = config()
    a = bispinor(cfg, GroupPoint((0.0, 0.0, 0.0, 0.0), ANG)).as_tuple()
    b = bispinor(cfg, GroupPoint((1.3, -0.2, 0.8, 2.0), ANG)).as_tuple()
    for va, vb in zip(a, b):
        assert abs(va) == pytest.approx(abs(vb), abs=1e-14)


def test_half_integer_l_above_one_half_hits_pole():
    rp = RadialParams(kappa=0.5, kappa_dot=0.5, C1=1.0, C2=0.0, l=half(3), l_dot=half(3))
    cfg = SpinConfig(p=FourMomentum.on_shell(0, 0, 0, 1.0), r=1, rp=rp, radius=1.0)
    with pytest.raises(PoleInDenominator):
        lorentz_factor(cfg, ANG)


def test_grid_ordering_lexicographic():
    cfg = config()
    base = GroupPoint((0.0, 0.0, 0.0, 0.0), ANG)
    axes = {"x3": [0.0, 1.0], "x4": [0.0, 0.5, 1.0]}
    rows = grid_eval(cfg, base, axes)
    assert len(rows) == 6
    coords = [(gp.x[2], gp.x[3]) for gp, _ in rows]
    assert coords == [(0, 0), (0, 0.5), (0, 1), (1, 0), (1, 0.5), (1, 1)]


def test_grid_rows_match_pointwise_calls():
    cfg = config(C1=0.6 + 0.2j, C2=-0.3 + 0.1j)
    base = GroupPoint((0.1, 0.2, 0.3, 0.4), ANG)
    axes = {"theta": [0.5, 1.5, 2.5], "tau": [0.4, 2.0]}
    for gp, row in grid_eval(cfg, base, axes):
        direct = bispinor(cfg, gp).as_tuple()
        assert row.as_tuple() == direct  # bitwise equality
        assert gp.x == base.x


def test_grid_axis_validation():
    cfg = config()
    base = GroupPoint((0.0, 0.0, 0.0, 0.0), ANG)
    with pytest.raises(DomainError):
        grid_eval(cfg, base, {"x9": [0.0]})
    with pytest.raises(DomainError):
        grid_eval(cfg, base, {"theta": [0.0]})
    with pytest.raises(DomainError):
        grid_eval(cfg, base, {"tau": [-1.0]})
    with pytest.raises(SizeCapExceeded):
        grid_eval(cfg, base, {"x1": [0.0] * 4000, "x2": [0.0] * 4000})


def test_plane_wave_enters_with_opposite_signs():
    # moving only x4 rotates rows 1-2 and rows 3-4 by conjugate phases
    cfg = config(C1=0.5, C2=0.5)
    a = bispinor(cfg, GroupPoint((0, 0, 0, 0.0), ANG)).as_tuple()
    b = bispinor(cfg, GroupPoint((0, 0, 0, 1.0), ANG)).as_tuple()
    rot_u = b[0] / a[0]
    rot_v = b[2] / a[2]
    assert rot_u == pytest.approx(cmath.exp(-1.25j), rel=1e-12)
    assert rot_v == pytest.approx(cmath.exp(1.25j), rel=1e-12)
