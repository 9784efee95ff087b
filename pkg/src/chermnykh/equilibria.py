"""Equilibrium points: collinear roots, power-series estimates, triangular points.

The collinear balance function K(x) uses the mean motion evaluated pointwise
at r=|x| (its own closed form carries the disk terms with x-dependence); this
is what the reference root tables satisfy digit for digit.  The frozen-n
constant of the model module appears here only inside the degree-10 case
polynomials, which embed it by construction.

The triangular "numeric" points solve the effective pair

    q1/r1^2 = 1/r2^3 + (3/2) A2/r2^5
    n^2(r) - (1-mu) q1/r1^2 - mu/r2^3 - (3/2) mu A2/r2^5 - k0/r^3 - (3/8) k'/r^4 = 0

(with the r1 powers exactly as displayed in the source formulation, which are
not the gradient's powers).  In the classical limit the pair still forces
r1 = r2 = 1, so the classical triangular points come out exact.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq, fsolve

from .errors import DomainError, NumericError, SeriesError
from .model import SystemParams, State, mean_motion_sq, omega_gradient

CASES = ("case1", "case2i", "case2ii", "case3")

# interval name -> (label, lower bound fn, upper bound fn)
_INTERVALS = ("Right", "MidRight", "MidLeft", "Left")
_LABELS = {"Right": "L1", "MidRight": "L2", "MidLeft": "l1_new", "Left": "L3"}
_CASE_INTERVAL = {"case1": "Right", "case2i": "MidRight", "case2ii": "MidLeft", "case3": "Left"}

_SCAN_STEP = 1e-4
_SCAN_XMAX = 3.0
_POLE_EPS = 1e-6


@dataclass(frozen=True)
class EquilibriumPoint:
    """One equilibrium point and how it was obtained.

    residual is the residual of the generating system (|K(x)| for collinear
    roots, the max-norm of the effective pair for refined triangular points);
    series points report the generating residual of their target system as a
    diagnostic, not a convergence claim.
    """

    label: str                      # L1, L2, l1_new, L3, L4, L5
    x: float
    y: float
    interval: str                   # Right, MidRight, MidLeft, Left, OffAxis
    method: str                     # NumericRoot, Series, NewtonRefined
    residual: float
    in_interval: bool = True
    case: str | None = None

    def position(self) -> tuple[float, float]:
        return self.x, self.y


@dataclass(frozen=True)
class SeriesCoefficients:
    case_id: str
    alpha: tuple[float, float, float, float]    # terms multiplying mu^{1/4} .. mu^{4/4}
    d: tuple[float, float, float, float, float, float]
    alpha_base: float                           # 12 a b A2 / d1


def _interval_bounds(name: str, params: SystemParams, xmax: float) -> tuple[float, float]:
    mu = params.mu
    return {
        "Right": (1.0 - mu, xmax),
        "MidRight": (0.0, 1.0 - mu),
        "MidLeft": (-mu, 0.0),
        "Left": (-xmax, -mu),
    }[name]


def interval_of(x: float, params: SystemParams) -> str:
    mu = params.mu
    if x > 1.0 - mu:
        return "Right"
    if 0.0 < x < 1.0 - mu:
        return "MidRight"
    if -mu < x < 0.0:
        return "MidLeft"
    if x < -mu:
        return "Left"
    raise DomainError(f"x={x} lies on the singular set")


def k_of_x(x: float, params: SystemParams) -> float:
    """Collinear balance K(x) with pointwise mean motion n^2(|x|).

    Vanishes exactly at the on-axis equilibria.  Poles at x in {-mu, 0, 1-mu}.
    """
    mu = params.mu
    if x in (0.0,) or x == -mu or x == 1.0 - mu:
        raise DomainError(f"K(x) is singular at x={x}")
    return float(_k_values(np.asarray([x], dtype=float), params)[0])


def _k_values(xs: np.ndarray, params: SystemParams) -> np.ndarray:
    """Vectorized K over an array of x (caller keeps clear of the poles)."""
    mu, q1, a2 = params.mu, params.q1, params.a2
    k0, kp = params.k0, params.kprime
    r = np.abs(xs)
    r1 = np.abs(xs + mu)
    r2 = np.abs(xs + mu - 1.0)
    n2 = q1 + 1.5 * a2 + 2.0 * k0 / r**2 + 0.75 * kp / r**3
    out = (n2 * xs
           - (1.0 - mu) * q1 * (xs + mu) / r1**3
           - mu * (xs + mu - 1.0) / r2**3
           - 1.5 * mu * a2 * (xs + mu - 1.0) / r2**5)
    out -= k0 * xs / r**3 + (3.0 / 8.0) * kp * xs / r**4
    return out


def collinear_points(params: SystemParams, xmax: float = _SCAN_XMAX) -> list[EquilibriumPoint]:
    """Bracket and polish every root of K(x) in each of the four intervals.

    Scans at step 1e-4 with a 1e-6 exclusion zone around the three poles,
    then polishes each sign change to |K| < 1e-12.  Intervals without a sign
    change contribute nothing (the classical MidLeft case).
    """
    points = []
    for name in _INTERVALS:
        lo, hi = _interval_bounds(name, params, xmax)
        lo, hi = lo + _POLE_EPS, hi - _POLE_EPS
        if hi <= lo:
            continue
        n = max(int(math.ceil((hi - lo) / _SCAN_STEP)), 8) + 1
        xs = np.linspace(lo, hi, n)
        vals = _k_values(xs, params)
        sign_flip = np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]
        for i in sign_flip:
            try:
                root = brentq(lambda x: k_of_x(x, params), xs[i], xs[i + 1],
                              xtol=1e-15, rtol=8.9e-16, maxiter=200)
            except Exception as exc:  # pragma: no cover - bracket guaranteed by sign change
                raise NumericError(f"root polish failed in {name} on "
                                   f"[{xs[i]}, {xs[i+1]}]: {exc}") from exc
            res = abs(k_of_x(root, params))
            if res > 1e-12:
                raise NumericError(f"polished root x={root} has |K|={res} > 1e-12")
            points.append(EquilibriumPoint(
                label=_LABELS[name], x=root, y=0.0, interval=name,
                method="NumericRoot", residual=res))
    return points


# --- degree-10 case polynomials -------------------------------------------

def _poly_constants(params: SystemParams):
    d = params.disk
    chpi = d.c_value(params.pi) * d.h * params.pi if params.disk_present else 0.0
    k0c = chpi * (d.b - d.a) / (d.a * d.b)          # half of params.k0
    lg = chpi * math.log(d.b / d.a) if params.disk_present else 0.0
    n2 = mean_motion_sq(params)                      # frozen value is embedded
    return k0c, lg, n2


def degree10_coefficients(case_id: str, params: SystemParams) -> list[float]:
    """Coefficient list [8n^2, B1, ..., B10] of the case polynomial in rho.

    Transcribed verbatim per case; the lone repair is the mu factor on the
    case-3 B3 bracket, without which the known mu=0 factorization
    (rho-2)^4 (rho-1)^2 x quartic fails.  Cases 2i/2ii carry transcription
    defects at mu > 0 (see the tests); root-finding on K(x) is ground truth.
    """
    if case_id not in CASES:
        raise ValueError(f"unknown case {case_id!r}")
    k0c, lg, n2 = _poly_constants(params)
    m = params.mu
    q1, a2 = params.q1, params.a2

    b1 = 48 * n2 - 32 * n2 * m
    b2 = 120 * n2 - 160 * n2 * m + 48 * n2 * m**2
    b3 = 160 * n2 - 8 * q1 + 8 * (-40 * n2 + q1) * m + 192 * n2 * m**2 - 32 * n2 * m**3
    b4 = (120 * n2 - 3 * lg - 24 * q1 + 16 * (3 * q1 - 20 * n2) * m
          + 24 * (-q1 + 12 * n2) * m**2 - 96 * m**3 + 8 * n2 * m**4)
    b5 = (48 * n2 - 6 * lg - 24 * q1 - 4 * (40 * n2 + 3 * a2 - 18 * q1) * m
          + 24 * (8 * n2 - 3 * q1) * m**2 + 24 * (-4 * n2 + q1) * m**3 + 16 * n2 * m**4)
    b6 = (8 * n2 - 3 * lg - 8 * q1 - 4 * (8 * n2 + 15 * a2 - 8 * q1) * m
          + 12 * (4 * n2 + 3 * a2 - 4 * q1) * m**2 + 32 * (-n2 + q1) * m**3
          + 8 * (n2 - q1) * m**4)
    b7 = -40 * (1 + 3 * a2) * m + 48 * (2 + 3 * a2) * m**2 - 36 * (2 + a2) * m**3 + 16 * m**4
    b8 = (-8 * (1 + 15 * a2) * m + 24 * (1 + 9 * a2) * m**2 - 12 * (2 + 9 * a2) * m**3
          + 4 * (2 + 3 * a2) * m**4)
    b9 = -60 * a2 * m + 144 * a2 * m**2 - 108 * a2 * m**3 + 24 * a2 * m**4
    b10 = -12 * a2 * m + 36 * a2 * m**2 - 36 * a2 * m**3 + 12 * a2 * m**4

    if case_id == "case1":
        return [8 * n2, b1, b2,
                b3 - 16 * k0c - 8 * m,
                b4 - 48 * k0c + 8 * (2 * k0c - 5) * m + 24 * m**2,
                b5 - 48 * k0c + 16 * (2 * k0c - 5) * m + 96 * m**2 - 24 * m**3,
                b6 - 16 * k0c + 16 * (k0c - 5) * m + 144 * m**2 - 72 * m**3 + 8 * m**4,
                b7, b8, b9, b10]
    if case_id == "case2i":
        return [8 * n2, -b1, b2,
                -b3 + 16 * k0c - 8 * m,
                b4 - 48 * k0c + 8 * (16 * k0c + 5) * m - 24 * m**2,
                -b5 + 48 * k0c - 16 * (2 * k0c + 5) * m + 96 * m**2 - 24 * m**3,
                b6 - 16 * k0c + 16 * (16 * k0c - 5) * m - 144 * m**2 + 72 * m**3 - 8 * m**4,
                -b7, b8, -b9, b10]
    if case_id == "case2ii":
        return [8 * n2, -b1, b2,
                -b3 - 16 * k0c - 8 * m,
                b4 + 48 * k0c - 8 * (2 * k0c - 5) * m - 24 * m**2,
                -b5 - 48 * k0c + 16 * (2 * k0c - 5) * m + 96 * m**2 - 24 * m**3,
                b6 + 16 * k0c - 16 * (k0c - 5) * m - 144 * m**2 + 72 * m**3 - 8 * m**4,
                -b7, b8, -b9, b10]

    # case 3 has its own B list
    c1 = -112 * n2 - 32 * n2 * m
    c2 = 696 * n2 + 416 * n2 * m + 48 * n2 * m**2
    c3 = -2528 * n2 + 16 * k0c + 8 * q1 - 8 * (296 * n2 + q1 - 1) * m
    c4 = (5944 * n2 - 176 * k0c - 3 * lg - 88 * q1 + 8 * (968 * n2 - 16 * k0c - 8 * q1 - 9) * m
          + 24 * (124 * n2 + q1 - 1) * m**2 + 352 * n2 * m**3 + 8 * n2 * m**4)
    c5 = (-9456 * n2 + 816 * k0c + 30 * lg + 408 * q1
          + 4 * (-4008 * n2 + 40 * k0c + 3 * a2 - 42 * q1 + 68) * m
          - 8 * (1080 * n2 + 27 * q1 - 24) * m**2 - 24 * (68 * n2 + q1 - 1) * m**3
          - 80 * n2 * m**4)
    c6 = (10312 * n2 - 2064 * k0c - 123 * lg - 1032 * q1
          + 4 * (5448 * n2 - 164 * k0c - 15 * a2 + 12 * q1 - 140) * m
          + 12 * (1284 * n2 - 3 * a2 - 64 * q1 - 52) * m**2
          + 8 * (516 * n2 + 26 * q1 - 21) * m**3 + 8 * (41 * n2 + q1 - 1) * m**4)
    c7 = (-7616 * n2 + 3072 * k0c + 264 * lg + 1536 * q1
          + 8 * (2432 * n2 + 176 * k0c + 15 * a2 + 72 * q1 + 85) * m
          + 4 * (-4320 * n2 + 36 * a2 + 336 * q1 + 264) * m**2
          + 4 * (-1536 * n2 + 9 * a2 - 176 * q1 + 114) * m**3
          - 16 * (44 * n2 + 4 * q1 - 3) * m**4)
    c8 = (3648 * n2 - 2688 * k0c - 312 * lg - 1344 * q1
          + 8 * (1376 * n2 - 208 * k0c - 15 * a2 - 144 * q1 - 61) * m
          + 8 * (1488 * n2 - 27 * a2 + 144 * q1 - 123) * m**2
          + 4 * (1344 * n2 - 27 * a2 + 288 * q1 - 150) * m**3
          + 4 * (208 * n2 - 3 * a2 + 48 * q1 - 13) * m**4)
    c9 = (-1024 * n2 + 1280 * k0c + 192 * lg + 640 * q1
          + 4 * (-896 * n2 + 256 * k0c + 15 * a2 + 224 * q1 + 48) * m
          + 8 * (-576 * n2 + 18 * a2 - 48 * q1 + 60) * m**2
          + 4 * (-640 * n2 + 27 * a2 - 224 * q1 + 96) * m**3
          + 8 * (-64 * n2 + 3 * a2 - 32 * q1 + 12) * m**4)
    c10 = (128 * n2 - 256 * k0c - 48 * lg - 128 * q1
           + 4 * (128 * n2 - 64 * k0c - 3 * a2 - 64 * q1 - 8) * m
           + 12 * (64 * n2 - 3 * a2 - 8) * m**2
           + 4 * (128 * n2 - 9 * a2 + 64 * q1 - 24) * m**3
           + 4 * (32 * n2 - 3 * a2 + 32 * q1 - 8) * m**4)
    return [8 * n2, c1, c2, c3, c4, c5, c6, c7, c8, c9, c10]


# --- mu^{1/4} series -------------------------------------------------------

def _series_d(case_id: str, params: SystemParams):
    """The six d constants of the requested case, frozen-n, pi restored on
    the 144ab term (its printed form drops the pi that every sibling carries)."""
    k0c, lg, n2 = _poly_constants(params)
    d = params.disk
    a, b = d.a, d.b
    ab = a * b
    q1 = params.q1
    chpi = d.c_value(params.pi) * d.h * params.pi if params.disk_present else 0.0
    cb = chpi * (b - a)                              # c h pi (b-a)

    if case_id in ("case1", "case2i"):
        d1 = 8 * ab * n2 - 16 * cb - 3 * ab * lg - 8 * ab * q1
        d2 = 8 * ab * n2 + 32 * cb + 9 * ab * lg + 16 * ab * q1
        d3 = (448 * a * a * b * b * n2 * n2 - 6656 * a * a * n2 * cb + 1024 * cb * cb
              + 135 * a * a * b * b * lg * lg
              + 144 * ab * chpi * (15 * ab * n2 + 4 * cb) * math.log(b / a))
        d4 = (32 * ab * (104 * ab * n2 + 32 * cb + 9 * ab * q1 * lg)
              + 256 * a * a * b * b * q1 * q1)
        d5 = (512 * a * a * b * b * n2**3 - 16384 * a * a * n2 * n2 * cb
              + 20480 * n2 * cb * cb + 5952 * a * a * b * b * n2 * n2 * lg
              + 2232 * a * a * b * b * n2 * lg * lg - 27 * a * a * b * b * lg**3
              + 12288 * ab * n2 * cb * lg)
        d6 = (2048 * ab * n2 * (4 * ab * n2 + 10 * b * cb + 3 * ab * lg) * q1
              + 5120 * a * a * b * b * n2 * q1 * q1)
        return d1, d2, d3, d4, d5, d6

    # shared core of cases 2ii and 3
    d3 = (448 * a * a * b * b * n2 * n2 - 6656 * ab * n2 * cb + 1024 * cb * cb
          + 135 * a * a * b * b * lg * lg
          + 144 * ab * chpi * (15 * ab * n2 - 4 * cb) * math.log(b / a))
    d5 = (512 * a * a * b * b * n2**3 - 16384 * ab * n2 * n2 * cb
          + 20480 * n2 * cb * cb + 5952 * a * a * b * b * n2 * n2 * lg
          + 2232 * a * a * b * b * n2 * lg * lg + 27 * a * a * b * b * lg**3
          - 12288 * ab * n2 * cb * lg)
    if case_id == "case2ii":
        d1 = 8 * ab * n2 + 16 * cb - 3 * ab * lg - 8 * ab * q1
        d2 = 8 * ab * n2 - 32 * a * cb + 9 * ab * lg + 16 * ab * q1
        d4 = 32 * ab * (104 * ab * n2 - 32 * cb + 9 * ab * lg) * q1 + 256 * a * a * b * b * q1 * q1
        d6 = (2048 * ab * n2 * (4 * ab * n2 - 10 * cb + 3 * ab * lg) * q1
              + 5120 * a * a * b * b * n2 * q1 * q1)
    else:
        d1 = 8 * ab * n2 + 16 * cb - 3 * ab * lg + 8 * ab * q1
        d2 = -8 * ab * n2 + 32 * cb - 9 * ab * lg + 16 * ab * q1
        d4 = (-32 * ab * (104 * ab * n2 - 32 * cb + 9 * ab * lg) * q1
              + 256 * a * a * b * b * q1 * q1)
        d6 = (-2048 * ab * n2 * (4 * ab * n2 - 10 * cb + 3 * ab * lg) * q1
              + 5120 * a * a * b * b * n2 * q1 * q1)
    return d1, d2, d3, d4, d5, d6


def series_rho(case_id: str, params: SystemParams) -> tuple[float, SeriesCoefficients]:
    """Truncated mu^{1/4} series for the case's collinear offset rho.

    Case 2i's base constant is -alpha; its quarter powers are taken in
    magnitude, which reproduces the case-1 term sizes.  Case 3 expands
    around 2 (its rho is 2 plus the series with the negative branch).
    """
    if case_id not in CASES:
        raise ValueError(f"unknown case {case_id!r}")
    if params.a2 <= 0:
        raise SeriesError("series needs A2 > 0 (alpha formulas divide by A2); "
                          "use collinear_points instead")
    d1, d2, d3, d4, d5, d6 = _series_d(case_id, params)
    if d1 == 0:
        raise SeriesError("degenerate series: d1 = 0")
    ab = params.disk.a * params.disk.b
    a2 = params.a2
    alpha = 12.0 * ab * a2 / d1
    base = abs(alpha)            # case 2i reads (-alpha)^{k/4} as a magnitude
    a14 = base ** 0.25

    t1 = a14 / d1
    t2 = (d2 / (4.0 * d1)) * a14**2
    t3 = ((d1 * d1 + 3.0 * a2 * (d3 + d4)) / (6.0 * a2 * d1 * d1)) * a14**3
    t4 = -((2.0 * d1 * d1 * d2 + 3.0 * ab * a2 * (d5 + d6)) / (12.0 * a2 * d1**3)) * a14**4

    m14 = params.mu ** 0.25
    if case_id == "case3":
        signs = (-1.0, 1.0, -1.0, 1.0)      # negative branch
        offset = 2.0
    else:
        signs = (1.0, 1.0, 1.0, 1.0)
        offset = 0.0
    rho = offset + sum(s * t * m14 ** (k + 1)
                       for k, (s, t) in enumerate(zip(signs, (t1, t2, t3, t4))))
    coeffs = SeriesCoefficients(case_id=case_id, alpha=(t1, t2, t3, t4),
                                d=(d1, d2, d3, d4, d5, d6), alpha_base=alpha)
    return rho, coeffs


def series_to_point(case_id: str, rho: float, params: SystemParams) -> EquilibriumPoint:
    """Map a case offset rho to the on-axis point per the case conversion."""
    mu = params.mu
    if case_id == "case1":
        x = 1.0 - mu + rho
    elif case_id == "case2i":
        x = 1.0 - mu - rho
    elif case_id == "case2ii":
        x = -1.0 + mu + rho
    elif case_id == "case3":
        x = mu - 1.0 - (rho - 2.0)
    else:
        raise ValueError(f"unknown case {case_id!r}")
    name = _CASE_INTERVAL[case_id]
    lo, hi = _interval_bounds(name, params, _SCAN_XMAX)
    inside = lo < x < hi
    try:
        res = abs(k_of_x(x, params))
    except DomainError:
        res = math.inf
    return EquilibriumPoint(label=_LABELS[name], x=x, y=0.0, interval=name,
                            method="Series", residual=res, in_interval=inside,
                            case=case_id)


def series_collinear_points(params: SystemParams) -> list[EquilibriumPoint]:
    """All four series estimates in case order."""
    out = []
    for case_id in CASES:
        rho, _ = series_rho(case_id, params)
        out.append(series_to_point(case_id, rho, params))
    return out


# --- triangular points -----------------------------------------------------

def _effective_pair(params: SystemParams):
    mu, q1, a2 = params.mu, params.q1, params.a2
    k0, kp = params.k0, params.kprime

    def fun(v):
        x, y = v
        r1 = math.hypot(x + mu, y)
        r2 = math.hypot(x + mu - 1.0, y)
        r = math.hypot(x, y)
        n2 = q1 + 1.5 * a2 + 2.0 * k0 / r**2 + 0.75 * kp / r**3
        g1 = q1 / r1**2 - 1.0 / r2**3 - 1.5 * a2 / r2**5
        g2 = (n2 - (1.0 - mu) * q1 / r1**2 - mu / r2**3 - 1.5 * mu * a2 / r2**5
              - k0 / r**3 - 0.375 * kp / r**4)
        return [g1, g2]

    return fun


def _series_triangular(params: SystemParams) -> tuple[float, float]:
    """First-order offsets delta1, delta2 mapped to (x, y), upper sign."""
    mu, q1, a2 = params.mu, params.q1, params.a2
    k0, kp = params.k0, params.kprime
    q13 = q1 ** (1.0 / 3.0)
    q23 = q1 ** (2.0 / 3.0)
    r0 = math.sqrt(mu * mu + q23 * (1.0 - mu))
    y0 = q13 * math.sqrt(1.0 - q23 / 4.0)
    # disk sum at r0; pointwise mean motion at y0 - mu
    ds = k0 / r0**3 + 0.375 * kp / r0**4
    rn = y0 - mu
    n2 = q1 + 1.5 * a2 + 2.0 * k0 / rn**2 + 0.75 * kp / rn**3
    delta1 = (1.0 - n2 + ds) / 3.0
    delta2 = (1.0 + 1.5 * a2 - n2 + ds) / (3.0 * (1.0 + 2.5 * a2))
    x = q23 / 2.0 - mu + (q23 * delta1 - delta2)
    arg = 1.0 - q23 / 4.0 + (2.0 - q23) * delta1 + delta2
    if arg <= 0:
        raise SeriesError("no off-axis equilibrium: y radicand is "
                          f"{arg} <= 0 for these parameters")
    y = q13 * math.sqrt(arg)
    return x, y


def triangular_points(params: SystemParams, method: str = "NewtonRefined"
                      ) -> tuple[EquilibriumPoint, EquilibriumPoint]:
    """L4 (y > 0) and its exact mirror L5.

    method "Series" stops at the delta offsets; "NewtonRefined" (default)
    polishes the series seed on the effective pair.  If the polish fails the
    series value is returned with a warning.
    """
    if method not in ("Series", "NewtonRefined"):
        raise ValueError(f"unknown method {method!r}")
    x, y = _series_triangular(params)
    used = "Series"
    fun = _effective_pair(params)
    residual = max(abs(g) for g in fun((x, y)))
    if method == "NewtonRefined":
        sol, info, ier, msg = fsolve(fun, (x, y), full_output=True, xtol=1e-14)
        res = max(abs(g) for g in fun(sol))
        if ier == 1 and sol[1] > 0 and res < 1e-10:
            x, y = float(sol[0]), float(sol[1])
            used, residual = "NewtonRefined", res
        else:
            warnings.warn(f"triangular refinement did not converge ({msg.strip()}); "
                          "returning the series value", stacklevel=2)
    l4 = EquilibriumPoint(label="L4", x=x, y=y, interval="OffAxis",
                          method=used, residual=residual)
    l5 = EquilibriumPoint(label="L5", x=x, y=-y, interval="OffAxis",
                          method=used, residual=residual)
    return l4, l5


def all_points(params: SystemParams) -> list[EquilibriumPoint]:
    """Numeric collinear roots plus refined triangular points."""
    pts = collinear_points(params)
    pts.extend(triangular_points(params))
    return pts


def gradient_residual(pt: EquilibriumPoint, params: SystemParams) -> float:
    """Max-norm of the model-module gradient at the point (diagnostic).

    Nonzero in general at collinear roots because the frozen-n gradient and
    the pointwise-n balance K disagree whenever the disk is on.
    """
    gx, gy = omega_gradient(State(pt.x, pt.y), params)
    return max(abs(gx), abs(gy))
