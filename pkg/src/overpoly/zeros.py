"""Numerical root-finding and verification of the explicit zero formulas.

Primary method is Aberth-Ehrlich simultaneous iteration with a
companion-matrix fallback; residuals are computed by exact rational
evaluation at the double-precision points, so they can be trusted at the
1e-8..1e-12 scales the assertions use.

The iteration runs in extended precision (gmpy2), sized to the coefficient
magnitudes: these families have coefficients growing like 3^n while their
roots cluster near the unit circle, so in the monomial basis the roots are
only determined to O(eps * 3^n) by double-precision coefficients -- far
worse than the 1e-8 agreement asserted here.  The extra working precision
recovers roots that are correct to double-precision accuracy in the exact
polynomial, which is what the residual check certifies.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import gmpy2
import numpy as np

from .polyring import UniPoly
from .sequences import CheckReport
from .specializations import Q1, Qtilde, Qx, Rtilde, Rx

MAX_FAMILY_N = 60  # coefficient growth ~3^n; doubles overflow far beyond this


class RootFindingError(RuntimeError):
    """Raised when the iteration fails to converge; carries best iterates."""

    def __init__(self, message: str, best: list[complex]):
        super().__init__(message)
        self.best = best


@dataclass(frozen=True)
class ComplexPoint:
    """A root approximation with its exactly-evaluated residual |p(z)|."""

    re: float
    im: float
    residual: float

    @property
    def z(self) -> complex:
        return complex(self.re, self.im)


def _int_coeffs(p: UniPoly) -> list[int]:
    """Coefficients scaled by the common denominator, as exact integers."""
    den = math.lcm(*(c.denominator for c in p.coeffs))
    return [int(c * den) for c in p.coeffs]


def _newton_ratio(desc: list[int], ddesc: list[int], z: complex) -> complex:
    """p(z)/p'(z) by extended-precision Horner at a double-precision point.

    The families here have coefficients ~3^n with unit-scale roots, so a
    double-precision Horner loses the value entirely to cancellation; exact
    integer coefficients and enough working bits make the ratio reliable to
    double accuracy, which is all the double-precision iterate can absorb.
    """
    zm = gmpy2.mpc(z)
    pv = gmpy2.mpc(desc[0])
    for c in desc[1:]:
        pv = pv * zm + c
    if pv == 0:
        return 0j
    dv = gmpy2.mpc(ddesc[0])
    for c in ddesc[1:]:
        dv = dv * zm + c
    if dv == 0:
        return complex(pv)  # arbitrary finite kick off the critical point
    return complex(pv / dv)


def _aberth(coeffs: list[int], max_iter: int = 400) -> list[complex] | None:
    """Aberth-Ehrlich simultaneous iteration to ~1e-8 relative accuracy.

    Polynomial values run in extended precision; the pairwise-repulsion sums
    and the iterates themselves stay in double precision.  The iteration is
    only asked to separate the roots to the clustering scale -- near a
    multiple root Ehrlich-Aberth can enter a limit cycle where the cluster
    members swap places indefinitely, so final accuracy comes from the
    multiplicity-aware Newton polish in roots(), not from pushing this loop.
    """
    d = len(coeffs) - 1
    prec = 64 + max(abs(c).bit_length() for c in coeffs)
    desc = list(reversed(coeffs))
    ddesc = list(reversed([i * coeffs[i] for i in range(1, d + 1)]))
    stop = 1e-8
    with gmpy2.context(precision=prec):
        center = -coeffs[-2] / (d * coeffs[-1])
        radius = max(0.5, float(abs(gmpy2.mpfr(coeffs[0]) / coeffs[-1])) ** (1.0 / d))
        zs = [center + radius * cmath.exp(2j * math.pi * (k + 0.35) / d + 0.45j)
              for k in range(d)]
        worst = math.inf
        for _ in range(max_iter):
            worst = 0.0
            for i in range(d):
                z = zs[i]
                w = _newton_ratio(desc, ddesc, z)
                if w == 0:
                    continue
                s = sum(1.0 / (z - zs[k]) for k in range(d) if k != i)
                denom = 1.0 - w * s
                if denom == 0:
                    denom = 1.0
                step = w / denom
                zs[i] = z - step
                worst = max(worst, abs(step) / (1 + abs(zs[i])))
            if not math.isfinite(worst) or any(
                    not math.isfinite(abs(z)) for z in zs):
                return None
            if worst <= stop:
                return zs
    # A limit cycle kept some steps above the stop threshold; the iterates
    # are still usable polish seeds if they are reasonably close.
    return zs if worst <= 1e-4 else None


def _polish_cluster(coeffs: list[int], z: complex, m: int,
                    iters: int = 60) -> complex:
    """Newton refinement z -= m * p(z)/p'(z) for an m-fold root.

    The multiplicity factor restores quadratic convergence at multiple
    roots; for m = 1 this is plain Newton.  Starting points come from the
    Aberth stage and are already within the convergence basin.
    """
    d = len(coeffs) - 1
    prec = 64 + max(abs(c).bit_length() for c in coeffs)
    desc = list(reversed(coeffs))
    ddesc = list(reversed([i * coeffs[i] for i in range(1, d + 1)]))
    with gmpy2.context(precision=prec):
        for _ in range(iters):
            step = m * _newton_ratio(desc, ddesc, z)
            z = z - step
            if abs(step) <= 1e-14 * (1 + abs(z)):
                break
    return z


def roots(p: UniPoly, tol: float = 1e-12) -> list[ComplexPoint]:
    """All complex roots of p, with multiplicity.

    Clusters of approximations within 1e-6 are averaged and reported with
    multiplicity: the extended-precision iteration locates an m-fold root to
    much better than the cluster radius, and the centroid of the cluster
    cancels the leading error term.  Polynomials with distinct roots closer
    than the cluster radius are outside this function's supported range.
    """
    if p.degree < 1:
        raise ValueError("degree must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be positive")
    coeffs = _int_coeffs(p)
    zero_count = 0
    while coeffs[0] == 0:
        zero_count += 1
        coeffs = coeffs[1:]
    zs = [0j] * zero_count
    if len(coeffs) > 1:
        found = _aberth(coeffs)
        if found is None:
            scale = max(abs(c) for c in coeffs)
            found = [complex(z) for z in
                     np.roots([c / scale for c in reversed(coeffs)])]
            if len(found) != len(coeffs) - 1:
                raise RootFindingError("companion fallback lost roots", found)
        found = _cluster_average(found)
        polished: dict[complex, complex] = {}
        for z in found:
            if z not in polished:
                polished[z] = _polish_cluster(coeffs, z, found.count(z))
        zs += [polished[z] for z in found]
    pts = [ComplexPoint(z.real, z.imag, p.abs_at(z)) for z in zs]
    # Gate each residual against the coefficient mass at that modulus: for
    # roots of modulus R the natural scale of |p| near the root is
    # sum |c_i| R^i, not the plain coefficient norm.
    abs_coeffs = [abs(float(c)) for c in p.coeffs]
    for pt in pts:
        r = abs(pt.z)
        scale = sum(c * r ** i for i, c in enumerate(abs_coeffs))
        if pt.residual > 1e-7 * (1 + scale):
            raise RootFindingError(
                f"residual {pt.residual:.3g} too large vs scale {scale:.3g}",
                [q.z for q in pts])
    return pts


def _cluster_average(zs: list[complex], eps: float = 1e-6) -> list[complex]:
    remaining = list(zs)
    out: list[complex] = []
    while remaining:
        seed = remaining.pop(0)
        cluster = [seed]
        rest = []
        for z in remaining:
            if abs(z - seed) < eps:
                cluster.append(z)
            else:
                rest.append(z)
        remaining = rest
        centroid = sum(cluster) / len(cluster)
        out.extend([centroid] * len(cluster))
    return out


def match_distance(a: list[complex], b: list[complex]) -> float:
    """Max pair distance under optimal bipartite matching of two multisets."""
    if len(a) != len(b):
        return math.inf
    from scipy.optimize import linear_sum_assignment
    cost = np.array([[abs(x - y) for y in b] for x in a])
    ri, ci = linear_sum_assignment(cost)
    return float(cost[ri, ci].max())


# -- explicit zero formulas ------------------------------------------------

def _annotate(p: UniPoly, zs: list[complex]) -> list[ComplexPoint]:
    return [ComplexPoint(z.real, z.imag, p.abs_at(z)) for z in zs]


def zeros_explicit_zz(n: int) -> list[ComplexPoint]:
    """Zeros 1/(zeta_j - 2) of Q_n(1,z,z), zeta_j the (n+1)th roots of unity."""
    if n < 1:
        raise ValueError("n must be >= 1")
    p = Q1(n, 1, 1)
    zs = []
    for j in range(1, n + 1):
        zeta = -1.0 + 0j if 2 * j == n + 1 else cmath.exp(2j * math.pi * j / (n + 1))
        zs.append(1.0 / (zeta - 2.0))
    return _annotate(p, zs)


def zeros_explicit_zz2(n: int) -> list[ComplexPoint]:
    """Zeros (zeta_j - 1 +/- sqrt(zeta_j^2 - 2 zeta_j - 3))/2 of Q_n(1,z,z^2)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    p = Q1(n, 1, 2)
    zs = []
    for j in range(1, n + 1):
        zeta = -1.0 + 0j if 2 * j == n + 1 else cmath.exp(2j * math.pi * j / (n + 1))
        root = cmath.sqrt(zeta * zeta - 2 * zeta - 3)
        zs.append((zeta - 1 + root) / 2)
        zs.append((zeta - 1 - root) / 2)
    return _annotate(p, zs)


def zeros_explicit_qtilde(n: int) -> list[ComplexPoint]:
    """Zeros of Qtilde(n) from the shifted Chebyshev-node formula."""
    if n < 1:
        raise ValueError("n must be >= 1")
    p = Qtilde(n)
    zs = []
    for j in range(1, n + 1):
        r = math.cos(j * math.pi / (n + 1))
        z = complex((8 * r * r - 5) / 2, 2 * r * math.sqrt(5 - 4 * r * r))
        zs.append(z - 0.5)
    return _annotate(p, zs)


def check_zz_circle(n: int, circle_tol: float = 1e-10,
                    match_tol: float = 1e-8) -> CheckReport:
    """Explicit zz zeros match numerics and sit on (x+2/3)^2+y^2 = 1/9."""
    failures = []
    pts = zeros_explicit_zz(n)
    num = roots(Q1(n, 1, 1))
    d = match_distance([p.z for p in pts], [p.z for p in num])
    if d > match_tol:
        failures.append(f"zz match distance {d:.3g} at n={n}")
    for p in pts:
        res = abs((p.re + 2 / 3) ** 2 + p.im ** 2 - 1 / 9)
        if res > circle_tol:
            failures.append(f"zz circle residual {res:.3g} at n={n}")
            break
    return CheckReport(not failures, failures)


def check_zz2_quartic(n: int, quartic_tol: float = 1e-8,
                      match_tol: float = 1e-8) -> CheckReport:
    """Explicit zz2 zeros match numerics, satisfy the quartic, pair to 1."""
    failures = []
    pts = zeros_explicit_zz2(n)
    num = roots(Q1(n, 1, 2))
    d = match_distance([p.z for p in pts], [p.z for p in num])
    if d > match_tol:
        failures.append(f"zz2 match distance {d:.3g} at n={n}")
    for p in pts:
        x, y = p.re, p.im
        res = abs((x * x + y * y + x) ** 2 + (x + 1) ** 2 - 2 * y * y)
        if res > quartic_tol:
            failures.append(f"zz2 quartic residual {res:.3g} at n={n}")
            break
    for j in range(0, len(pts), 2):
        prod = pts[j].z * pts[j + 1].z
        if abs(prod - 1) > 1e-8:
            failures.append(f"zz2 pair product {prod} at n={n}")
            break
    return CheckReport(not failures, failures)


def check_qtilde_circle(n: int, circle_tol: float = 1e-9,
                   match_tol: float = 1e-8) -> CheckReport:
    """Qtilde zeros: on the circle |z + 1/2| = 5/2 with Re(z) < 1."""
    failures = []
    pts = zeros_explicit_qtilde(n)
    num = roots(Qtilde(n))
    d = match_distance([p.z for p in pts], [p.z for p in num])
    if d > match_tol:
        failures.append(f"qtilde match distance {d:.3g} at n={n}")
    for p in num:
        res = abs(abs(p.z + 0.5) - 2.5)
        if res > circle_tol:
            failures.append(f"qtilde circle residual {res:.3g} at n={n}")
            break
        if p.re >= 1:
            failures.append(f"qtilde zero with Re >= 1 at n={n}")
            break
    return CheckReport(not failures, failures)


def rtilde_zero_survey(n: int) -> list[tuple[ComplexPoint, float]]:
    """Zeros of Rtilde(n) with distance to the |z+1/2| = 5/2 circle.

    Exploratory output only; the approach of these zeros to the circle is
    observed, not asserted.
    """
    p = Rtilde(n)
    if p.degree < 1:
        return []
    return [(pt, abs(abs(pt.z + 0.5) - 2.5)) for pt in roots(p)]


def check_real_negative_reciprocal(n_max: int, tol: float = 1e-8) -> CheckReport:
    """Qx/Rx roots are real, negative, and closed under rho -> 1/rho."""
    failures = []
    for n in range(1, n_max + 1):
        for name, poly in (("Qx", Qx(n)), ("Rx", Rx(n))):
            pts = roots(poly)
            zs = [p.z for p in pts]
            for p in pts:
                if abs(p.im) > tol:
                    failures.append(f"{name}({n}) non-real root {p.z}")
                    break
                if p.re >= 0:
                    failures.append(f"{name}({n}) non-negative root {p.re}")
                    break
            for z in zs:
                inv = 1.0 / z
                best = min(abs(inv - w) / (1 + abs(inv)) for w in zs)
                if best > tol:
                    failures.append(f"{name}({n}) reciprocal partner missing for {z}")
                    break
    return CheckReport(not failures, failures)
