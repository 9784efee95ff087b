"""Physical parameters and the effective-potential machinery.

The system is a planar restricted three-body problem in a rotating frame:
a radiating primary of mass 1-mu at (-mu, 0) with mass-reduction factor q1,
an oblate secondary of mass mu at (1-mu, 0) with oblateness coefficient A2,
plus the gravitational pull of a flat power-law disk (surface density c/r^3)
centered on the origin.  Lengths are normalized to the primary separation.

Two conventions are deliberate and load-bearing:

* The disk potential V(r) used inside Omega and the radial disk force f_b(r)
  used inside the mean motion and the gradient are independent closed forms;
  f_b is NOT -dV/dr (the 1/r^2 coefficients differ, 7/8 vs 3/8).  Both are
  kept exactly as the formulation writes them.  Consequently grad(omega) and
  omega_gradient agree only when the disk is off (a == b).
* The mean motion n is frozen at the disk reference radius r_ref and never
  re-evaluated per point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

from .errors import DomainError, ModelError

PAPER_PI = 3.14


@dataclass(frozen=True)
class DiskProfile:
    """Flat disk with density rho(r) = c/r^3 between radii a and b.

    Exactly one of c, m_b may be given; the other follows from the closure
    m_b = 2*pi*c*h*(b-a)/(a*b).  The closure depends on the active value of
    pi, which lives on SystemParams, so the twin field stays None here and
    is resolved by c_value()/mass_value().  a == b means no disk at all:
    V and f_b vanish identically.
    """

    a: float = 1.0
    b: float = 1.0
    h: float = 1e-4
    c: float | None = None
    m_b: float | None = None

    def __post_init__(self):
        if not (self.b >= self.a > 0):
            raise ModelError(f"disk radii must satisfy b >= a > 0, got a={self.a}, b={self.b}")
        if self.h <= 0:
            raise ModelError(f"disk thickness must be positive, got h={self.h}")
        if self.c is not None and self.m_b is not None:
            raise ModelError("give exactly one of c, m_b; got both")
        if self.c is not None and self.c < 0:
            raise ModelError(f"density factor must be >= 0, got c={self.c}")
        if self.m_b is not None and self.m_b < 0:
            raise ModelError(f"disk mass must be >= 0, got m_b={self.m_b}")
        if self.a == self.b and (self.m_b or 0.0) > 0:
            raise ModelError("zero-width disk (a == b) cannot carry mass")

    def c_value(self, pi: float) -> float:
        """Density factor, resolving the closure when only m_b was given."""
        if self.c is not None:
            return self.c
        if self.m_b is None or self.m_b == 0.0:
            return 0.0
        return self.m_b * self.a * self.b / (2.0 * pi * self.h * (self.b - self.a))

    def mass_value(self, pi: float) -> float:
        """Total disk mass, resolving the closure when only c was given."""
        if self.m_b is not None:
            return self.m_b
        if self.c is None or self.c == 0.0 or self.a == self.b:
            return 0.0
        return 2.0 * pi * self.c * self.h * (self.b - self.a) / (self.a * self.b)

    def present_for(self, pi: float) -> bool:
        return self.b > self.a and self.c_value(pi) > 0.0


@dataclass(frozen=True)
class SystemParams:
    """All constants of one model instance."""

    mu: float
    q1: float = 1.0
    a2: float = 0.0
    disk: DiskProfile = field(default_factory=DiskProfile)
    r_ref: float = 0.99
    pi_mode: str = "exact"          # "exact" | "paper"

    def __post_init__(self):
        if not (0.0 < self.mu < 0.5):
            raise ModelError(f"mass ratio must satisfy 0 < mu < 0.5, got {self.mu}")
        if not (0.0 < self.q1 <= 1.0):
            raise ModelError(f"mass-reduction factor must satisfy 0 < q1 <= 1, got {self.q1}")
        if self.a2 < 0:
            raise ModelError(f"oblateness coefficient must be >= 0, got {self.a2}")
        if self.r_ref <= 0:
            raise ModelError(f"reference radius must be positive, got {self.r_ref}")
        if self.pi_mode not in ("exact", "paper"):
            raise ModelError(f"pi_mode must be 'exact' or 'paper', got {self.pi_mode!r}")

    @property
    def pi(self) -> float:
        return PAPER_PI if self.pi_mode == "paper" else math.pi

    @property
    def disk_present(self) -> bool:
        return self.disk.present_for(self.pi)

    # Disk strength constants; every disk term in the model is built from
    # these two combinations.
    @property
    def k0(self) -> float:
        """2*c*h*pi*(b-a)/(a*b): the 1/r^2 force coefficient."""
        d = self.disk
        if not self.disk_present:
            return 0.0
        return 2.0 * d.c_value(self.pi) * d.h * self.pi * (d.b - d.a) / (d.a * d.b)

    @property
    def kprime(self) -> float:
        """c*h*pi*ln(b/a): the logarithmic force coefficient."""
        d = self.disk
        if not self.disk_present:
            return 0.0
        return d.c_value(self.pi) * d.h * self.pi * math.log(d.b / d.a)

    def with_mu(self, mu: float) -> "SystemParams":
        return replace(self, mu=mu)

    def with_disk(self, disk: DiskProfile) -> "SystemParams":
        return replace(self, disk=disk)


@dataclass(frozen=True)
class State:
    x: float
    y: float
    vx: float = 0.0
    vy: float = 0.0


def paper_preset() -> SystemParams:
    """Reference parameter set used throughout the test tables."""
    return SystemParams(
        mu=0.000953728,
        q1=0.75,
        a2=0.0025,
        disk=DiskProfile(a=1.0, b=1.5, h=1e-4, c=1910.83),
        r_ref=0.99,
        pi_mode="paper",
    )


def classical_preset(mu: float = 0.000953728) -> SystemParams:
    """No radiation, no oblateness, no disk: the classical problem."""
    return SystemParams(mu=mu, q1=1.0, a2=0.0, disk=DiskProfile(a=1.0, b=1.0), pi_mode="exact")


def disk_potential(r: float, disk: DiskProfile, pi: float = math.pi) -> float:
    """Disk potential V(r) = -2chpi*(b-a)/(ab)/r + (7/8)*chpi*ln(b/a)/r^2.

    Parameters
    ----------
    r : float
        Distance from the disk center (the origin); must be positive.
    disk : DiskProfile
    pi : float
        Value of pi to use (3.14 reproduces the reference tables).
    """
    if r <= 0:
        raise DomainError(f"disk potential needs r > 0, got r={r}")
    if not disk.present_for(pi):
        return 0.0
    chpi = disk.c_value(pi) * disk.h * pi
    return (-2.0 * chpi * (disk.b - disk.a) / (disk.a * disk.b) / r
            + (7.0 / 8.0) * chpi * math.log(disk.b / disk.a) / r**2)


def disk_force(r: float, disk: DiskProfile, pi: float = math.pi) -> float:
    """Radial disk force f_b(r) = -2chpi*(b-a)/(ab)/r^2 - (3/8)*chpi*ln(b/a)/r^3.

    Negative (attractive) for all r > 0 whenever the disk is present.  The
    planar components are (x/r)*f_b and (y/r)*f_b.  Note f_b != -dV/dr; see
    the module docstring.
    """
    if r <= 0:
        raise DomainError(f"disk force needs r > 0, got r={r}")
    if not disk.present_for(pi):
        return 0.0
    chpi = disk.c_value(pi) * disk.h * pi
    return (-2.0 * chpi * (disk.b - disk.a) / (disk.a * disk.b) / r**2
            - (3.0 / 8.0) * chpi * math.log(disk.b / disk.a) / r**3)


def mean_motion_sq(params: SystemParams, r: float | None = None) -> float:
    """n^2 = q1 + (3/2)*A2 - 2*f_b(r), default at the frozen r_ref.

    The model's n is the r_ref value; passing r evaluates the same radicand
    at another radius (the equilibria module's root functions need that).
    """
    rr = params.r_ref if r is None else r
    n2 = params.q1 + 1.5 * params.a2 - 2.0 * disk_force(rr, params.disk, params.pi)
    if n2 <= 0:
        raise ModelError(f"mean-motion radicand is {n2} <= 0 at r={rr}")
    return n2


def mean_motion(params: SystemParams) -> float:
    """Perturbed mean motion n, frozen at r_ref.  > 1 for an attractive disk with q1=1, A2=0."""
    return math.sqrt(mean_motion_sq(params))


def _distances(x: float, y: float, params: SystemParams):
    mu = params.mu
    r1 = math.hypot(x + mu, y)
    r2 = math.hypot(x + mu - 1.0, y)
    r = math.hypot(x, y)
    if r1 <= 0:
        raise DomainError("state coincides with the radiating primary (r1 = 0)")
    if r2 <= 0:
        raise DomainError("state coincides with the oblate secondary (r2 = 0)")
    if r <= 0 and params.disk_present:
        raise DomainError("state at the disk center (r = 0) with disk present")
    return r1, r2, r


def omega(s: State, params: SystemParams) -> float:
    """Effective potential Omega.

    Omega = n^2 (x^2+y^2)/2 + (1-mu) q1/r1 + mu/r2 + mu A2/(2 r2^3) - V(r).
    """
    r1, r2, r = _distances(s.x, s.y, params)
    n2 = mean_motion_sq(params)
    mu, q1, a2 = params.mu, params.q1, params.a2
    val = (n2 * (s.x**2 + s.y**2) / 2.0
           + (1.0 - mu) * q1 / r1
           + mu / r2
           + mu * a2 / (2.0 * r2**3))
    if params.disk_present:
        if r <= 0:
            raise DomainError("Omega undefined at the disk center")
        val -= disk_potential(r, params.disk, params.pi)
    return val


def omega_gradient(s: State, params: SystemParams) -> tuple[float, float]:
    """First partials (Omega_x, Omega_y) in their explicit closed form.

    The disk enters through the force coefficients k0, kprime, which is why
    this is not the exact gradient of omega() when the disk is on.
    """
    r1, r2, r = _distances(s.x, s.y, params)
    n2 = mean_motion_sq(params)
    mu, q1, a2 = params.mu, params.q1, params.a2
    k0, kp = params.k0, params.kprime

    def comp(w: float, w1: float, w2: float) -> float:
        # w: coordinate; w1, w2: offsets to the primaries along this axis
        g = (n2 * w
             - (1.0 - mu) * q1 * w1 / r1**3
             - mu * w2 / r2**3
             - 1.5 * mu * a2 * w2 / r2**5)
        if params.disk_present:
            g -= k0 * w / r**3 + (3.0 / 8.0) * kp * w / r**4
        return g

    gx = comp(s.x, s.x + mu, s.x + mu - 1.0)
    gy = comp(s.y, s.y, s.y)
    return gx, gy


def omega_hessian(s: State, params: SystemParams) -> tuple[float, float, float]:
    """Second partials (Omega_xx, Omega_yy, Omega_xy).

    Exact Jacobian of omega_gradient; on y=0 it reduces to the collinear
    shortcut used by the stability module.
    """
    r1, r2, r = _distances(s.x, s.y, params)
    n2 = mean_motion_sq(params)
    mu, q1, a2 = params.mu, params.q1, params.a2
    k0, kp = params.k0, params.kprime
    x1 = s.x + mu
    x2 = s.x + mu - 1.0
    y = s.y

    base = (n2
            - (1.0 - mu) * q1 / r1**3
            - mu / r2**3
            - 1.5 * mu * a2 / r2**5)
    if params.disk_present:
        base -= k0 / r**3 + (3.0 / 8.0) * kp / r**4

    wxx = (base
           + 3.0 * (1.0 - mu) * q1 * x1**2 / r1**5
           + 3.0 * mu * x2**2 / r2**5
           + 7.5 * mu * a2 * x2**2 / r2**7)
    wyy = (base
           + 3.0 * (1.0 - mu) * q1 * y**2 / r1**5
           + 3.0 * mu * y**2 / r2**5
           + 7.5 * mu * a2 * y**2 / r2**7)
    wxy = (3.0 * (1.0 - mu) * q1 * x1 * y / r1**5
           + 3.0 * mu * x2 * y / r2**5
           + 7.5 * mu * a2 * x2 * y / r2**7)
    if params.disk_present:
        wxx += 3.0 * k0 * s.x**2 / r**5 + 1.5 * kp * s.x**2 / r**6
        wyy += 3.0 * k0 * y**2 / r**5 + 1.5 * kp * y**2 / r**6
        wxy += 3.0 * k0 * s.x * y / r**5 + 1.5 * kp * s.x * y / r**6
    return wxx, wyy, wxy


def jacobi_constant(s: State, params: SystemParams) -> float:
    """C = 2*Omega - vx^2 - vy^2."""
    return 2.0 * omega(s, params) - s.vx**2 - s.vy**2


def load_params(path: str) -> SystemParams:
    """Read a flat key-value parameter file.

    Lines look like ``mu = 0.000953728`` with dotted disk keys (disk.a,
    disk.b, disk.h, and exactly one of disk.c / disk.mb).  '#' starts a
    comment.  Unknown keys are rejected.
    """
    scalars = {"mu": None, "q1": 1.0, "a2": 0.0, "r_ref": 0.99}
    disk_keys = {"disk.a": 1.0, "disk.b": 1.0, "disk.h": 1e-4, "disk.c": None, "disk.mb": None}
    pi_mode = "exact"
    with open(path, encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ModelError(f"{path}:{lineno}: expected 'key = value', got {raw.strip()!r}")
            key, _, value = line.partition("=")
            key = key.strip()
            value = value.strip().strip('"').strip("'")
            if key == "pi_mode":
                pi_mode = value.lower()
            elif key in scalars:
                scalars[key] = float(value)
            elif key in disk_keys:
                disk_keys[key] = float(value)
            else:
                raise ModelError(f"{path}:{lineno}: unknown key {key!r}")
    if scalars["mu"] is None:
        raise ModelError(f"{path}: missing required key 'mu'")
    if disk_keys["disk.c"] is not None and disk_keys["disk.mb"] is not None:
        raise ModelError(f"{path}: give exactly one of disk.c / disk.mb")
    disk = DiskProfile(a=disk_keys["disk.a"], b=disk_keys["disk.b"], h=disk_keys["disk.h"],
                       c=disk_keys["disk.c"], m_b=disk_keys["disk.mb"])
    return SystemParams(mu=scalars["mu"], q1=scalars["q1"], a2=scalars["a2"],
                        disk=disk, r_ref=scalars["r_ref"], pi_mode=pi_mode)
