"""Functions on the Lorentz group.

The kernel Z^l_m(theta, tau) is a finite sum over k = -l ... l of products
of two Gauss hypergeometric factors; the associated functions attach an
exponential phase in (phi, eps) (plain phase for the undotted family,
conjugated phase for the dotted one).

The evaluation domain is open: theta in (0, pi), tau in (0, inf).  Individual
k-terms carry tanh^{-k}(tau/2), which diverges termwise as tau -> 0 for
k > 0, and no limiting prescription is adopted at the endpoints.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import DomainError, InvalidIndex, PoleInDenominator
from .halfint import HalfInt, unit_range
from .specfun import _termination_index, hyp2f1

_I_POWERS = (1 + 0j, 1j, -1 + 0j, -1j)


@dataclass(frozen=True)
class EulerAngles:
    """Six Lorentz-group parameters (phi, eps, theta, tau, phi2, eps2).

    The last pair is identically zero for every function evaluated here.
    """

    phi: float = 0.0
    eps: float = 0.0
    theta: float = 0.0
    tau: float = 0.0
    phi2: float = 0.0
    eps2: float = 0.0

    def __post_init__(self) -> None:
        if self.phi2 != 0.0 or self.eps2 != 0.0:
            raise DomainError("phi2 and eps2 must be zero")


@dataclass(frozen=True)
class HypersphIndex:
    l: HalfInt
    m: HalfInt

    def __post_init__(self) -> None:
        if self.l.twice < 0:
            raise InvalidIndex(f"l must be non-negative, got {self.l}")
        if (self.m.twice - self.l.twice) % 2 != 0:
            raise InvalidIndex(f"m = {self.m} not congruent to l = {self.l} mod 1")
        if abs(self.m.twice) > self.l.twice:
            raise InvalidIndex(f"|m| = |{self.m}| exceeds l = {self.l}")


def sum_index_values(idx: HypersphIndex) -> list[HalfInt]:
    """The k-sum runs over -l, -l+1, ..., l: exactly 2l+1 values."""
    return unit_range(-idx.l, idx.l)


def _check_open_domain(theta: float, tau: float) -> None:
    if not (0.0 < theta < math.pi):
        raise DomainError(f"theta must lie in (0, pi), got {theta}")
    if not tau > 0.0:
        raise DomainError(f"tau must be positive, got {tau}")


def _term_params(idx: HypersphIndex, k: HalfInt):
    l, m = idx.l, idx.m
    a1 = (m.twice - l.twice) / 2.0 + 1.0
    b1 = 1.0 - (l.twice + k.twice) / 2.0
    c1 = (m.twice - k.twice) / 2.0 + 1.0
    a2 = 1.0 - l.twice / 2.0
    c2 = 1.0 - k.twice / 2.0
    return a1, b1, c1, a2, b1, c2


def index_is_evaluable(idx: HypersphIndex) -> bool:
    """True when no k-term of Z^l_m hits a pole of a denominator parameter.

    The printed formula is termwise singular for some index pairs (a
    non-positive c parameter whose pole falls inside the terminating sum);
    those pairs raise PoleInDenominator on evaluation.
    """
    from .specfun import _check_pole

    for k in sum_index_values(idx):
        a1, b1, c1, a2, b2, c2 = _term_params(idx, k)
        try:
            _check_pole(a1, b1, c1)
            _check_pole(a2, b2, c2)
        except PoleInDenominator:
            return False
    return True


def z_assoc(idx: HypersphIndex, theta: float, tau: float) -> complex:
    """The kernel Z^l_m(theta, tau).

    cos^{2l}(theta/2) cosh^{2l}(tau/2) times the k-sum of
    i^{m-k} tan^{m-k}(theta/2) tanh^{-k}(tau/2)
    * 2F1(m-l+1, 1-l-k; m-k+1; -tan^2(theta/2))
    * 2F1(-l+1, 1-l-k; -k+1; tanh^2(tau/2)).

    m - k is always an integer, so i^{m-k} cycles through the four units;
    tanh^{-k} uses the principal real branch (its base is positive on the
    open domain).  The k-sum is accumulated in order k = -l ... l with
    compensated summation so grid sweeps are bitwise reproducible.
    """
    _check_open_domain(theta, tau)
    l, m = idx.l, idx.m
    t = math.tan(0.5 * theta)
    h = math.tanh(0.5 * tau)
    x = -t * t
    y = h * h
    prefactor = math.cos(0.5 * theta) ** l.twice * math.cosh(0.5 * tau) ** l.twice

    total = 0.0 + 0.0j
    comp = 0.0 + 0.0j  # Kahan carry
    for k in sum_index_values(idx):
        n = (m.twice - k.twice) // 2  # m - k, an integer
        phase = _I_POWERS[n % 4]
        a1, b1, c1, a2, b2, c2 = _term_params(idx, k)
        term = (
            phase
            * t**n
            * h ** (-k.twice / 2.0)
            * hyp2f1(a1, b1, c1, x)
            * hyp2f1(a2, b2, c2, y)
        )
        yv = term - comp
        tv = total + yv
        comp = (tv - total) - yv
        total = tv
    return prefactor * total


def m_assoc(idx: HypersphIndex, ang: EulerAngles) -> complex:
    """Associated function e^{-m(eps + i phi)} Z^l_m(theta, tau)."""
    mval = idx.m.twice / 2.0
    return cmath.exp(-mval * (ang.eps + 1j * ang.phi)) * z_assoc(idx, ang.theta, ang.tau)


def m_assoc_dotted(idx: HypersphIndex, ang: EulerAngles) -> complex:
    """Dotted counterpart: same Z kernel with conjugated phase convention,
    e^{-m(eps - i phi)} Z^l_m(theta, tau)."""
    mval = idx.m.twice / 2.0
    return cmath.exp(-mval * (ang.eps - 1j * ang.phi)) * z_assoc(idx, ang.theta, ang.tau)
