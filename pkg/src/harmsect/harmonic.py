"""Harmonic polynomial sections, the divided-difference kernel, and grid scans.

A planar harmonic polynomial f = h + conj(g) is stored as the two
coefficient lists of its analytic and co-analytic parts.  The univalence
criterion sampled here is nonvanishing of the kernel

    K(z, t) = sum_k (a_k z^k - conj(b_k z^k)) sin(kt)/sin(t),

which equals z times the divided difference (f(z1) - f(z2))/(z1 - z2) at
z1 = r e^(i eta), z2 = r e^(i psi), t = (eta - psi)/2, z = r e^(i(eta+psi)/2).
The t = 0 value uses the exact continuous extension sin(kt)/sin(t) -> k,
never a 0/0 evaluation; at t = 0 nonvanishing is the local-univalence
(sense-preservation) boundary condition.

Grid scans are one-sided evidence: a positive minimum of |K| at a given
resolution is consistent with univalence but proves nothing, while a zero
or sign change is a concrete violation witness.  The empirical radius
conjoins kernel nonvanishing with Jacobian positivity and records which
predicate failed first.
"""

from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass

import numpy as np

from .radius import FamilyClass

_Z_BLOCK = 8192


@dataclass(frozen=True)
class HarmonicPolynomial:
    """Coefficients a_1..a_n of the analytic part and b_1..b_m of the co-analytic.

    Normalized so that a_1 = 1 and b_1 = 0; evaluation is
    f(z) = sum a_k z^k + conj(sum b_k z^k).
    """

    a: np.ndarray
    b: np.ndarray

    def __post_init__(self) -> None:
        a = np.atleast_1d(np.asarray(self.a, dtype=complex))
        b = np.atleast_1d(np.asarray(self.b, dtype=complex))
        if a.size < 1 or b.size < 1:
            raise ValueError("need at least one coefficient in each part")
        if a[0] != 1:
            raise ValueError(f"normalization requires a_1 = 1, got {a[0]}")
        if b[0] != 0:
            raise ValueError(f"normalization requires b_1 = 0, got {b[0]}")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)

    @property
    def degree(self) -> int:
        return max(self.a.size, self.b.size)


@dataclass(frozen=True)
class ExtremalCoefficients:
    """Coefficient source taking the family's coefficient bounds with equality.

    This is a synthetic extremal-coefficient model (the bounds are sharp
    values, not the coefficients of a single known mapping): for the
    general families a_k = (k+1)(2k+1)/6 and b_k = (k-1)(2k-1)/6, for the
    convex family a_k = (k+1)/2 and b_k = (k-1)/2.
    """

    family: FamilyClass

    def analytic(self, k: np.ndarray) -> np.ndarray:
        if self.family is FamilyClass.GENERAL:
            return (k + 1) * (2 * k + 1) / 6.0
        return (k + 1) / 2.0

    def co_analytic(self, k: np.ndarray) -> np.ndarray:
        if self.family is FamilyClass.GENERAL:
            return (k - 1) * (2 * k - 1) / 6.0
        return (k - 1) / 2.0


@dataclass(frozen=True)
class IdentityCoefficients:
    """Coefficient source of the identity map: a_1 = 1, everything else 0."""

    def analytic(self, k: np.ndarray) -> np.ndarray:
        return np.where(k == 1, 1.0, 0.0)

    def co_analytic(self, k: np.ndarray) -> np.ndarray:
        return np.zeros_like(k, dtype=float)


def section(source, n: int, m: int) -> HarmonicPolynomial:
    """Truncate a coefficient source to analytic order n, co-analytic order m.

    `source` is either another HarmonicPolynomial or an object with
    analytic(k)/co_analytic(k) methods.  b_1 is forced to 0.
    """
    if n < 1 or m < 1:
        raise ValueError(f"section orders must be >= 1, got ({n}, {m})")
    if isinstance(source, HarmonicPolynomial):
        a = np.zeros(n, dtype=complex)
        take = min(n, source.a.size)
        a[:take] = source.a[:take]
        a[0] = 1.0
        b = np.zeros(m, dtype=complex)
        take = min(m, source.b.size)
        b[:take] = source.b[:take]
    else:
        a = np.asarray(source.analytic(np.arange(1, n + 1, dtype=float)), dtype=complex)
        b = np.asarray(source.co_analytic(np.arange(1, m + 1, dtype=float)), dtype=complex)
    b[0] = 0.0
    return HarmonicPolynomial(a=a, b=b)


def evaluate(p: HarmonicPolynomial, z):
    """f(z) = h(z) + conj(g(z)) by Horner evaluation of both parts."""
    z = np.asarray(z, dtype=complex) if not np.isscalar(z) else complex(z)
    h = 0.0
    for c in p.a[::-1]:
        h = h * z + c
    g = 0.0
    for c in p.b[::-1]:
        g = g * z + c
    return z * h + np.conj(z * g)


def jacobian(p: HarmonicPolynomial, z):
    """|h'(z)|^2 - |g'(z)|^2; positive where f is sense-preserving."""
    z = np.asarray(z, dtype=complex) if not np.isscalar(z) else complex(z)
    ka = np.arange(1, p.a.size + 1)
    kb = np.arange(1, p.b.size + 1)
    hp = 0.0
    for c in (ka * p.a)[::-1]:
        hp = hp * z + c
    gp = 0.0
    for c in (kb * p.b)[::-1]:
        gp = gp * z + c
    return np.abs(hp) ** 2 - np.abs(gp) ** 2


def _sin_ratio(ks: np.ndarray, t: float) -> np.ndarray:
    if t == 0.0:
        return ks.astype(float)
    return np.sin(ks * t) / math.sin(t)


def _padded_coeffs(p: HarmonicPolynomial) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    k_max = p.degree
    ks = np.arange(1, k_max + 1, dtype=float)
    a = np.zeros(k_max, dtype=complex)
    a[: p.a.size] = p.a
    b = np.zeros(k_max, dtype=complex)
    b[: p.b.size] = p.b
    return ks, a, b


def kernel(p: HarmonicPolynomial, z, t: float):
    """Divided-difference kernel sum_k (a_k z^k - conj(b_k z^k)) sin(kt)/sin(t).

    Defined for |z| < 1 and t in [0, pi/2]; the t = 0 ratio is k exactly.
    Equals z times the divided difference of f over the matched chord (see
    divided_difference), so for z != 0 its nonvanishing is the univalence
    criterion.
    """
    if not 0.0 <= t <= math.pi / 2.0:
        raise ValueError(f"t must lie in [0, pi/2], got {t}")
    zs = np.asarray(z, dtype=complex)
    if np.any(np.abs(zs) >= 1.0):
        raise ValueError("kernel is defined on |z| < 1")
    ks, a, b = _padded_coeffs(p)
    ratio = _sin_ratio(ks, t)
    zk = zs[..., None] ** ks
    out = ((a * zk) - np.conj(b * zk)) @ ratio
    return complex(out) if np.isscalar(z) else out


def divided_difference(p: HarmonicPolynomial, r: float, eta: float, psi: float):
    """(f(r e^(i eta)) - f(r e^(i psi))) / (r e^(i eta) - r e^(i psi))."""
    z1 = r * np.exp(1j * np.asarray(eta))
    z2 = r * np.exp(1j * np.asarray(psi))
    dz = z1 - z2
    if np.any(np.abs(dz) == 0):
        raise ValueError("chord endpoints coincide")
    return (evaluate(p, z1) - evaluate(p, z2)) / dz


@dataclass(frozen=True)
class ProbeGrid:
    """Resolution of a kernel/Jacobian scan: concentric circles times a t grid."""

    radial_points: int = 64
    angular_points: int = 256
    t_points: int = 128
    radius: float = 0.9

    def __post_init__(self) -> None:
        for name in ("radial_points", "angular_points", "t_points"):
            if getattr(self, name) < 8:
                raise ValueError(f"{name} must be >= 8, got {getattr(self, name)}")
        if not 0.0 < self.radius < 1.0:
            raise ValueError(f"radius must lie in (0, 1), got {self.radius}")

    def z_points(self) -> np.ndarray:
        radii = np.linspace(self.radius / self.radial_points, self.radius, self.radial_points)
        angles = 2.0 * np.pi * np.arange(self.angular_points) / self.angular_points
        return (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()

    def t_values(self) -> np.ndarray:
        return np.linspace(0.0, math.pi / 2.0, self.t_points)

    def scaled(self, factor: int) -> "ProbeGrid":
        if factor < 1:
            raise ValueError(f"grid scale must be >= 1, got {factor}")
        return dataclasses.replace(
            self,
            radial_points=self.radial_points * factor,
            angular_points=self.angular_points * factor,
            t_points=self.t_points * factor,
        )


@dataclass(frozen=True)
class KernelScan:
    """Minimum kernel modulus over a probe grid and where it occurred."""

    min_modulus: float
    argmin_z: complex
    argmin_t: float


def kernel_min_modulus(p: HarmonicPolynomial, grid: ProbeGrid) -> KernelScan:
    """min |kernel| over the grid (z = 0 excluded by construction).

    One-sided evidence only: a small minimum suggests a near-violation, a
    large one is merely consistent with univalence at this resolution.
    The reduction is over a fixed grid, so the result does not depend on
    evaluation order.
    """
    zs = grid.z_points()
    ts = grid.t_values()
    ks, a, b = _padded_coeffs(p)
    ratios = np.stack([_sin_ratio(ks, float(t)) for t in ts], axis=1)  # (K, NT)

    best = math.inf
    best_z = 0j
    best_t = 0.0
    for start in range(0, zs.size, _Z_BLOCK):
        block = zs[start : start + _Z_BLOCK]
        zk = block[:, None] ** ks[None, :]
        coeffs = a[None, :] * zk - np.conj(b[None, :] * zk)  # (NZ, K)
        mod = np.abs(coeffs @ ratios)  # (NZ, NT)
        flat = int(np.argmin(mod))
        val = float(mod.flat[flat])
        if val < best:
            best = val
            best_z = complex(block[flat // ts.size])
            best_t = float(ts[flat % ts.size])
    return KernelScan(min_modulus=best, argmin_z=best_z, argmin_t=best_t)


def _jacobian_min(p: HarmonicPolynomial, grid: ProbeGrid) -> float:
    return float(np.min(jacobian(p, grid.z_points())))


@dataclass(frozen=True)
class EmpiricalScan:
    """Largest radius passing both grid predicates, with the failure context.

    `binding` names the predicate that failed just above the returned
    radius ("jacobian" wins when both fail, since sense-preservation loss
    already implies a kernel zero at t = 0); None when nothing failed below
    the unit disk.  `witness` is the kernel minimum at the returned radius.
    """

    radius: float
    binding: str | None
    witness: KernelScan
    min_jacobian: float


def empirical_scan(p: HarmonicPolynomial, grid: ProbeGrid) -> EmpiricalScan:
    """Binary search for the largest grid-clean radius, to 1e-3.

    The predicate at radius r is [min |kernel| > 0 and min Jacobian > 0]
    over the grid rescaled to r.  Semantics are "no violation found at
    this resolution": the result is an upper-style estimate that must
    dominate the certified radius, never a certificate.
    """
    lo, hi = 0.0, 1.0
    binding = None
    while hi - lo > 1e-3:
        mid = 0.5 * (lo + hi)
        probe = dataclasses.replace(grid, radius=mid)
        jac_min = _jacobian_min(p, probe)
        kern_min = kernel_min_modulus(p, probe).min_modulus
        if jac_min > 0.0 and kern_min > 0.0:
            lo = mid
        else:
            hi = mid
            binding = "jacobian" if jac_min <= 0.0 else "kernel"
    at = dataclasses.replace(grid, radius=lo if lo > 0.0 else 1e-6)
    return EmpiricalScan(
        radius=lo,
        binding=binding,
        witness=kernel_min_modulus(p, at),
        min_jacobian=_jacobian_min(p, at),
    )


def empirical_radius(p: HarmonicPolynomial, grid: ProbeGrid) -> float:
    """Largest radius at which the grid scan finds no violation, to 1e-3."""
    return empirical_scan(p, grid).radius
