"""Model parameters and derived boundary constants.

The chain is the open staggered XXZ layer of the D2(2) model: 2N spin-1/2
"primed" sites, anisotropy eta > 0, one generic non-diagonal boundary triple
(s, s1, s2) per edge, and 2N inhomogeneities theta_j.  The staggered pattern
is theta_{2l-1} = i*tb_{2l-1}, theta_{2l} = i*tb_{2l} + i*pi with real tb.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field, replace

import numpy as np

HERMITICITY_TOL = 1e-10


def staggered_theta(n: int, theta_bar: np.ndarray | float = 0.0) -> np.ndarray:
    """Staggered inhomogeneities for a 2n-site chain, offset by real theta_bar."""
    tb = np.broadcast_to(np.asarray(theta_bar, dtype=float), (2 * n,)).copy()
    theta = 1j * tb
    theta[1::2] += 1j * math.pi
    return theta


@dataclass(frozen=True)
class ModelParams:
    """Chain size, anisotropy, boundary triples and inhomogeneities."""

    n: int                 # D2(2) site count; the staggered chain has 2n primed sites
    eta: float
    s: complex
    s1: complex
    s2: complex
    sp: complex            # primed (right-edge) triple
    s1p: complex
    s2p: complex
    theta: np.ndarray = field(default=None)  # 2n inhomogeneities; staggered if omitted
    hermitian: bool = False

    def __post_init__(self):
        if self.eta <= 0:
            raise ValueError(f"anisotropy eta must be positive, got {self.eta}")
        if self.theta is None:
            object.__setattr__(self, "theta", staggered_theta(self.n))
        else:
            theta = np.asarray(self.theta, dtype=complex)
            if theta.shape != (2 * self.n,):
                raise ValueError(f"theta must have length {2 * self.n}, got {theta.shape}")
            object.__setattr__(self, "theta", theta)
        if self.hermitian:
            self._check_hermitian()

    def _check_hermitian(self):
        ok = (abs(complex(self.s).imag) < HERMITICITY_TOL
              and abs(complex(self.sp).imag) < HERMITICITY_TOL
              and abs(self.s2 - np.conj(self.s1)) < HERMITICITY_TOL
              and abs(self.s2p - np.conj(self.s1p) * math.exp(2 * self.eta)) < HERMITICITY_TOL)
        if not ok:
            raise ValueError(
                "hermitian flag requires real s, s', s2 = conj(s1) and s2' = conj(s1') e^{2 eta}")

    @classmethod
    def hermitian_point(cls, n: int, eta: float, s: float, s1: complex,
                        sp: float, s1p: complex,
                        theta_bar: np.ndarray | float = 0.0) -> "ModelParams":
        """Boundary parameters satisfying the hermiticity constraints."""
        return cls(n=n, eta=eta, s=s, s1=s1, s2=np.conj(s1),
                   sp=sp, s1p=s1p, s2p=np.conj(s1p) * math.exp(2 * eta),
                   theta=staggered_theta(n, theta_bar), hermitian=True)

    def with_theta_bar(self, theta_bar: np.ndarray | float) -> "ModelParams":
        return replace(self, theta=staggered_theta(self.n, theta_bar))

    @property
    def left_triple(self) -> tuple[complex, complex, complex]:
        return (self.s, self.s1, self.s2)

    @property
    def right_triple(self) -> tuple[complex, complex, complex]:
        return (self.sp, self.s1p, self.s2p)


@dataclass(frozen=True)
class DerivedBoundary:
    """Boundary constants alpha, beta, alpha1, alpha2 for both edges.

    cosh(alpha1) = alpha/2 + beta and cosh(alpha2) = alpha/2 - beta with
    alpha = 1/(2 s1 s2), beta = sqrt(alpha cosh(2s) + (alpha/2)^2 + 1).
    alpha2_bar is Re(alpha2) (in the hermitian family alpha2 = Re + i*pi).
    """

    alpha: complex
    beta: complex
    alpha1: complex
    alpha2: complex
    alpha_p: complex
    beta_p: complex
    alpha1_p: complex
    alpha2_p: complex

    @property
    def alpha2_bar(self) -> float:
        return float(self.alpha2.real)

    @property
    def alpha2_p_bar(self) -> float:
        return float(self.alpha2_p.real)

    def magnitudes(self) -> tuple[float, float, float, float]:
        """(|alpha1|, |alpha2_bar|, |alpha1'|, |alpha2'_bar|) for regime tests."""
        return (abs(self.alpha1), abs(self.alpha2_bar),
                abs(self.alpha1_p), abs(self.alpha2_p_bar))


def _acosh_principal(z: complex) -> complex:
    """Inverse cosh on the branch Re >= 0, Im in (-pi, pi]."""
    w = cmath.acosh(z)
    if w.real < 0:
        w = -w
    if w.imag <= -math.pi:
        w += 2j * math.pi
    return w


def _edge_constants(s: complex, s1: complex, s2: complex,
                    snap: bool) -> tuple[complex, complex, complex, complex]:
    prod = s1 * s2
    if prod == 0:
        raise ValueError("boundary constants need s1*s2 != 0")
    alpha = 1.0 / (2.0 * prod)
    beta = cmath.sqrt(alpha * cmath.cosh(2.0 * s) + (alpha / 2.0) ** 2 + 1.0)
    alpha1 = _acosh_principal(alpha / 2.0 + beta)
    alpha2 = _acosh_principal(alpha / 2.0 - beta)
    if snap:
        # Hermitian family: alpha1 real, alpha2 = Re(alpha2) + i*pi.
        if abs(alpha1.imag) < 1e-8:
            alpha1 = complex(alpha1.real, 0.0)
        if abs(abs(alpha2.imag) - math.pi) < 1e-8:
            alpha2 = complex(alpha2.real, math.pi)
    return alpha, beta, alpha1, alpha2


def derived_boundary(p: ModelParams) -> DerivedBoundary:
    """Solve cosh(alpha1) = alpha/2 + beta, cosh(alpha2) = alpha/2 - beta per edge."""
    a, b, a1, a2 = _edge_constants(p.s, p.s1, p.s2, p.hermitian)
    ap, bp, a1p, a2p = _edge_constants(p.sp, p.s1p, p.s2p, p.hermitian)
    return DerivedBoundary(alpha=a, beta=b, alpha1=a1, alpha2=a2,
                           alpha_p=ap, beta_p=bp, alpha1_p=a1p, alpha2_p=a2p)


def boundary_triple_for(alpha1: float, alpha2_bar: float, eta: float,
                        primed: bool) -> tuple[float, float, float]:
    """Invert the edge constants: a hermitian (s, s1, s2) realizing the targets.

    Requires |alpha1| > |alpha2_bar| (which the hermitian family forces, since
    cosh(alpha1) - cosh(alpha2_bar) = alpha = 1/(2|s1|^2) > 0).
    """
    ca1, ca2 = math.cosh(alpha1), math.cosh(alpha2_bar)
    if ca1 <= ca2:
        raise ValueError("hermitian edges need |alpha1| > |alpha2_bar|")
    alpha = ca1 - ca2
    cosh2s = (ca1 * ca2 - 1.0) / alpha
    s = 0.5 * math.acosh(cosh2s)
    if primed:
        s1 = math.sqrt(math.exp(-2.0 * eta) / (2.0 * alpha))
        s2 = s1 * math.exp(2.0 * eta)
    else:
        s1 = math.sqrt(1.0 / (2.0 * alpha))
        s2 = s1
    return s, s1, s2


def hermitian_point_from_targets(n: int, eta: float,
                                 left: tuple[float, float],
                                 right: tuple[float, float],
                                 theta_bar: np.ndarray | float = 0.0) -> ModelParams:
    """ModelParams whose derived constants hit (|alpha1|, |alpha2_bar|) targets."""
    s, s1, _ = boundary_triple_for(left[0], left[1], eta, primed=False)
    sp, s1p, _ = boundary_triple_for(right[0], right[1], eta, primed=True)
    return ModelParams.hermitian_point(n, eta, s, s1, sp, s1p, theta_bar)
