"""Classical and homogenized Chebyshev polynomials.

The homogenized forms carry two polynomial arguments (A, B) and satisfy
P_{n+1} = A P_n - B P_{n-1}; at (A, B) = (2w, 1) they reduce to the
classical U_n(w) and T_n(w).  Working at this level keeps everything inside
the exact rational ring, with no square roots.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .polyring import ArityMismatchError, MultiPoly, UniPoly
from .sequences import CheckReport, Q_poly, R_poly, W1, W2, _x, _y


@dataclass(frozen=True)
class HomogPair:
    """Trace-like argument A and norm-like argument B, of equal arity."""

    A: MultiPoly
    B: MultiPoly

    def __post_init__(self):
        if self.A.arity != self.B.arity:
            raise ArityMismatchError("A and B must share arity")


@lru_cache(maxsize=None)
def _homog(n: int, pair: HomogPair, first: MultiPoly) -> MultiPoly:
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return MultiPoly.const(pair.A.arity, 1)
    if n == 1:
        return first
    return pair.A * _homog(n - 1, pair, first) - pair.B * _homog(n - 2, pair, first)


def U_homog(n: int, pair: HomogPair) -> MultiPoly:
    """Second-kind homogenization: 1, A, A^2 - B, ..."""
    return _homog(n, pair, pair.A)


def T_homog(n: int, pair: HomogPair) -> MultiPoly:
    """First-kind homogenization: 1, A/2, A^2/2 - B, ... (rational coeffs)."""
    return _homog(n, pair, pair.A.scale(Fraction(1, 2)))


def U_classical(n: int) -> UniPoly:
    """Chebyshev U_n as a dense integer polynomial."""
    w2 = MultiPoly.var(1, 0).scale(2)
    return U_homog(n, HomogPair(w2, MultiPoly.const(1, 1))).to_unipoly()


def T_classical(n: int) -> UniPoly:
    """Chebyshev T_n as a dense integer polynomial."""
    w2 = MultiPoly.var(1, 0).scale(2)
    return T_homog(n, HomogPair(w2, MultiPoly.const(1, 1))).to_unipoly()


def qr_pair(b: int) -> HomogPair:
    """The (W1, W2) argument pair generating Q and R for base b."""
    return HomogPair(W1(b), W2(b))


def verify_chebyshev_form(b: int, n: int) -> CheckReport:
    """Check the Chebyshev representation of Q_n and R_n for base b.

    Q_n = U~_n(W1, W2) and
    R_n = T~_n(W1, W2) + (x + y_1 - x*y_{b-1} - y_b)/2 * U~-style Q_{n-1},
    where the correction multiplies the (n-1)st second-kind value.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    failures = []
    pair = qr_pair(b)
    un = U_homog(n, pair)
    if Q_poly(b, n) != un:
        failures.append(f"Q_{n} != homogenized U_{n} at b={b}")
    corr = (_x(b) + _y(b, 1) - _x(b) * _y(b, b - 1) - _y(b, b)).scale(Fraction(1, 2))
    rhs = T_homog(n, pair) + corr * U_homog(n - 1, pair)
    if R_poly(b, n) != rhs:
        failures.append(f"R_{n} != homogenized T_{n} + correction at b={b}")
    return CheckReport(not failures, failures)


def verify_pell_like(b: int, n: int) -> CheckReport:
    """U~_n - (x*y_{b-1} + y_b) U~_{n-1} = T~_n + correction * U~_{n-1},
    the exact-polynomial form behind R_n = Q_n - (x*y_{b-1}+y_b) Q_{n-1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    pair = qr_pair(b)
    un, unm1 = U_homog(n, pair), U_homog(n - 1, pair)
    corr = (_x(b) + _y(b, 1) - _x(b) * _y(b, b - 1) - _y(b, b)).scale(Fraction(1, 2))
    lhs = un - (_x(b) * _y(b, b - 1) + _y(b, b)) * unm1
    rhs = T_homog(n, pair) + corr * unm1
    ok = lhs == rhs
    return CheckReport(ok, [] if ok else [f"Pell-like identity fails at b={b}, n={n}"])


def classical_sine_check(n: int, thetas: list[float], tol: float = 1e-10) -> CheckReport:
    """Numerical sanity: U_n(cos t) * sin t = sin((n+1) t)."""
    failures = []
    un = U_classical(n)
    for t in thetas:
        lhs = float(un.eval_complex(complex(math.cos(t))).real) * math.sin(t)
        rhs = math.sin((n + 1) * t)
        if abs(lhs - rhs) > tol:
            failures.append(f"U_{n} sine identity off by {abs(lhs - rhs):.3g} at theta={t}")
    return CheckReport(not failures, failures)
