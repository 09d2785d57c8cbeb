"""The polynomial families p_n, Q_n, R_n for base b, built from recurrences.

Variables are (x, y_1..y_b) with x at index 0.  For b = 2 these print as
(x, y, z).  The digit recursion on n keeps exact indices of size b^40 cheap,
so the Q/R subsequences can be cross-checked against their p-index
definitions.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass

from .polyring import MultiPoly

_memo: dict[tuple[int, int], MultiPoly] = {}
_memo_lock = threading.Lock()


def _x(b: int) -> MultiPoly:
    return MultiPoly.var(b + 1, 0)


def _y(b: int, k: int) -> MultiPoly:
    if not 1 <= k <= b:
        raise ValueError(f"y_{k} out of range for base {b}")
    return MultiPoly.var(b + 1, k)


def p_poly(b: int, n: int) -> MultiPoly:
    """p_n in variables (x, y_1..y_b), via memoized digit recursion on n.

    Recurrences, with j the lowest base-b digit of the index:
      p_{bn}   = p_n + (y_b + x*y_{b-1}) * p_{n-1}
      p_{bn+1} = (x + y_1) * p_n + x*y_b * p_{n-1}
      p_{bn+j} = (x*y_{j-1} + y_j) * p_n          (2 <= j <= b-1)
    with p_0 = 1, p_1 = x + y_1, p_j = x*y_{j-1} + y_j for 2 <= j <= b-1.
    """
    if b < 2:
        raise ValueError("base must be >= 2")
    if n < 0:
        raise ValueError("index must be >= 0")
    key = (b, n)
    with _memo_lock:
        hit = _memo.get(key)
    if hit is not None:
        return hit
    arity = b + 1
    if n == 0:
        result = MultiPoly.const(arity, 1)
    elif n == 1:
        result = _x(b) + _y(b, 1)
    elif n <= b - 1:
        result = _x(b) * _y(b, n - 1) + _y(b, n)
    else:
        m, j = divmod(n, b)
        if j == 0:
            result = p_poly(b, m) + (_y(b, b) + _x(b) * _y(b, b - 1)) * p_poly(b, m - 1)
        elif j == 1:
            result = (_x(b) + _y(b, 1)) * p_poly(b, m) + (_x(b) * _y(b, b)) * p_poly(b, m - 1)
        else:
            result = (_x(b) * _y(b, j - 1) + _y(b, j)) * p_poly(b, m)
    with _memo_lock:
        _memo[key] = result
    return result


def q_index(b: int, n: int) -> int:
    """(b^{n+1} - b) / (b - 1), exactly."""
    return (b ** (n + 1) - b) // (b - 1)


def r_index(b: int, n: int) -> int:
    """(b^n - 1) / (b - 1) = q_index / b, exactly."""
    return (b ** n - 1) // (b - 1)


def W1(b: int) -> MultiPoly:
    """x*y_{b-1} + x + y_1 + y_b, the trace-like recurrence coefficient."""
    return _x(b) * _y(b, b - 1) + _x(b) + _y(b, 1) + _y(b, b)


def W2(b: int) -> MultiPoly:
    """x^2*y_{b-1} + x*y_1*y_{b-1} + y_1*y_b, the norm-like coefficient."""
    x, y1, ybm1, yb = _x(b), _y(b, 1), _y(b, b - 1), _y(b, b)
    return x * x * ybm1 + x * y1 * ybm1 + y1 * yb


def _three_term(b: int, n: int, init0: MultiPoly, init1: MultiPoly) -> MultiPoly:
    if n == 0:
        return init0
    w1, w2 = W1(b), W2(b)
    prev, cur = init0, init1
    for _ in range(n - 1):
        prev, cur = cur, w1 * cur - w2 * prev
    return cur


def Q_poly(b: int, n: int) -> MultiPoly:
    """Q_n for base b via the three-term recurrence; equals p at q_index."""
    return _three_term(b, n, MultiPoly.const(b + 1, 1), W1(b))


def R_poly(b: int, n: int) -> MultiPoly:
    """R_n for base b via the three-term recurrence; equals p at r_index."""
    return _three_term(b, n, MultiPoly.const(b + 1, 1), _x(b) + _y(b, 1))


def q_series(b: int, N: int, kind: str) -> list[MultiPoly]:
    """Coefficients 0..N of the rational generating function for Q or R.

    Q: 1 / (1 - W1 q + W2 q^2); R has numerator 1 - (x*y_{b-1} + y_b) q.
    Computed by series inversion (Cauchy-product bootstrap), independent of
    the three-term recurrence values it is checked against.
    """
    if kind not in ("Q", "R"):
        raise ValueError("kind must be Q or R")
    arity = b + 1
    one = MultiPoly.const(arity, 1)
    w1, w2 = W1(b), W2(b)
    if kind == "Q":
        num = [one]
    else:
        num = [one, -( _x(b) * _y(b, b - 1) + _y(b, b))]
    den = [one, -w1, w2]
    out: list[MultiPoly] = []
    for n in range(N + 1):
        c = num[n] if n < len(num) else MultiPoly.zero(arity)
        for k in range(1, min(n, 2) + 1):
            c = c - den[k] * out[n - k]
        out.append(c)
    return out


@dataclass
class CheckReport:
    """Outcome of an identity suite: ok flag plus failure descriptions."""

    ok: bool
    failures: list[str]

    def require(self) -> None:
        if not self.ok:
            raise AssertionError("; ".join(self.failures))


def gf_check(b: int, N: int) -> CheckReport:
    """Verify the generating functions to series order N.

    The series side comes from rational-function inversion; the polynomial
    side comes from p at the Q/R index positions, so the two computations
    share no code path.
    """
    failures = []
    for kind, idx in (("Q", q_index), ("R", r_index)):
        series = q_series(b, N, kind)
        for n in range(N + 1):
            direct = p_poly(b, idx(b, n))
            if series[n] != direct:
                failures.append(f"{kind}-series mismatch at b={b}, n={n}")
                break
    return CheckReport(not failures, failures)


def relation_checks(b: int, n: int) -> CheckReport:
    """Inter-identities tying R to Q.

    - R_{n+1} = (x + y_1) R_n + x*y_b Q_{n-1}
    - R_n = Q_n - (x*y_{b-1} + y_b) Q_{n-1}
    - Q_n and R_n use only the variables x, y_1, y_{b-1}, y_b
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    failures = []
    x, y1, ybm1, yb = _x(b), _y(b, 1), _y(b, b - 1), _y(b, b)
    qn, qnm1 = Q_poly(b, n), Q_poly(b, n - 1)
    rn, rnp1 = R_poly(b, n), R_poly(b, n + 1)
    if rnp1 != (x + y1) * rn + (x * yb) * qnm1:
        failures.append(f"R_(n+1) recurrence via Q fails at b={b}, n={n}")
    if rn != qn - (x * ybm1 + yb) * qnm1:
        failures.append(f"R_n = Q_n - (x*y_(b-1)+y_b) Q_(n-1) fails at b={b}, n={n}")
    allowed = {0, 1, b - 1, b}
    for name, poly in (("Q", qn), ("R", rn)):
        extra = poly.used_variables() - allowed
        if extra:
            failures.append(f"{name}_{n} (b={b}) uses variables {sorted(extra)}")
    return CheckReport(not failures, failures)
