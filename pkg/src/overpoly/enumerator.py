"""Brute-force enumeration of restricted b-ary overpartitions.

This is the combinatorial ground truth: every polynomial produced by the
recurrence machinery is checked against statistics gathered here.
"""

from __future__ import annotations

from dataclasses import dataclass

from .polyring import MultiPoly


@dataclass(frozen=True)
class PartConfig:
    """Base b >= 2 and maximum multiplicity lambda >= 1 of non-overlined powers."""

    b: int
    lam: int

    def __post_init__(self):
        if self.b < 2:
            raise ValueError("base must be >= 2")
        if self.lam < 1:
            raise ValueError("lambda must be >= 1")


@dataclass(frozen=True)
class Overpartition:
    """One overpartition: per-power (exponent, overlined flag, plain count).

    Entries are sorted by descending power exponent; each entry has the
    overline used at most once and at least one part present.
    """

    entries: tuple[tuple[int, int, int], ...]

    def value(self, b: int) -> int:
        return sum((over + plain) * b ** j for j, over, plain in self.entries)

    def parts(self, b: int) -> list[tuple[int, bool]]:
        """Flat (part value, overlined) list, non-increasing, overline first."""
        out = []
        for j, over, plain in self.entries:
            v = b ** j
            if over:
                out.append((v, True))
            out.extend([(v, False)] * plain)
        return out

    def render(self, b: int, compact: bool = False) -> str:
        """ASCII rendering; overlined parts are prefixed with '~'."""
        if not self.entries:
            return "()"
        toks = []
        for j, over, plain in self.entries:
            v = b ** j
            if over:
                toks.append(f"~{v}")
            if plain:
                if compact and plain > 1:
                    toks.append(f"{v}^{plain}")
                else:
                    toks.extend([str(v)] * plain)
        return "(" + ",".join(toks) + ")"


@dataclass(frozen=True)
class StatVector:
    """Counts (i, j_1..j_b): overlined singles and k-tuples of plain parts."""

    i: int
    j: tuple[int, ...]


def _powers_desc(b: int, n: int) -> list[int]:
    out = []
    j = 0
    while b ** j <= n:
        out.append(j)
        j += 1
    return list(reversed(out))


def enumerate_overpartitions(cfg: PartConfig, n: int) -> list[Overpartition]:
    """All lambda-restricted b-ary overpartitions of n, deterministic order.

    Recursive descent over power exponents, largest first; at each power the
    overline flag is decided before the plain multiplicity.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    results: list[Overpartition] = []
    exps = _powers_desc(cfg.b, n)

    def descend(idx: int, remaining: int, acc: list[tuple[int, int, int]]):
        if remaining == 0:
            results.append(Overpartition(tuple(acc)))
            return
        if idx == len(exps):
            return
        j = exps[idx]
        v = cfg.b ** j
        # Even taking everything available at this and smaller powers may fall
        # short; prune. Max contribution per power: (1 + lambda) * b^e.
        for over in (1, 0):
            for plain in range(cfg.lam + 1):
                take = (over + plain) * v
                if take > remaining:
                    break
                if over or plain:
                    acc.append((j, over, plain))
                    descend(idx + 1, remaining - take, acc)
                    acc.pop()
                else:
                    descend(idx + 1, remaining, acc)

    descend(0, n, [])
    # Consistency check: every enumerated object reconstructs n.
    for p in results:
        assert p.value(cfg.b) == n
    return results


def count_series(cfg: PartConfig, N: int) -> list[int]:
    """Counts for n = 0..N, computed by truncated product of the generating
    function; cross-checked against direct enumeration in tests."""
    if N < 0:
        raise ValueError("N must be >= 0")
    series = [0] * (N + 1)
    series[0] = 1
    j = 0
    while cfg.b ** j <= N or j == 0:
        v = cfg.b ** j
        if v > N:
            break
        # factor (1 + q^v) * (1 + q^v + ... + q^{lam*v})
        factor = [0] * (N + 1)
        factor[0] = 1
        for t in range(1, cfg.lam + 1):
            if t * v <= N:
                factor[t * v] += 1
        for t in range(cfg.lam + 1):
            if v + t * v <= N:
                factor[v + t * v] += 1
        new = [0] * (N + 1)
        for a, ca in enumerate(series):
            if ca == 0:
                continue
            for bb, cb in enumerate(factor):
                if cb and a + bb <= N:
                    new[a + bb] += ca * cb
        series = new
        j += 1
    return series


def stats(p: Overpartition, cfg: PartConfig) -> StatVector:
    """Exponent statistics (i, j_1..j_b) of one overpartition."""
    i = 0
    j = [0] * cfg.b
    for _exp, over, plain in p.entries:
        if over:
            i += 1
        if plain:
            if plain > cfg.b:
                raise ValueError("plain multiplicity exceeds the statistic range")
            j[plain - 1] += 1
    return StatVector(i, tuple(j))


def weight_poly(cfg: PartConfig, n: int) -> MultiPoly:
    """Sum of x^i * prod y_k^{j_k} over all overpartitions of n.

    Requires lambda = b so the statistics map onto the variables x, y_1..y_b.
    """
    if cfg.lam != cfg.b:
        raise ValueError("weight_poly requires lambda = b")
    arity = cfg.b + 1
    result = MultiPoly.zero(arity)
    for p in enumerate_overpartitions(cfg, n):
        s = stats(p, cfg)
        expo = (s.i,) + s.j
        result = result + MultiPoly(arity, {expo: 1})
    return result


def s_statistic(p: Overpartition, cfg: PartConfig) -> int:
    """Overlined singles + plain singles + plain (b-1)-tuples + plain b-tuples.

    For b = 2 the single and (b-1)-tuple categories coincide and are counted
    once.
    """
    s = stats(p, cfg)
    sizes = {1, cfg.b - 1, cfg.b}
    return s.i + sum(s.j[k - 1] for k in sizes if k >= 1)


def s_histogram(cfg: PartConfig, n: int) -> dict[int, int]:
    """Number of overpartitions of n per S value."""
    hist: dict[int, int] = {}
    for p in enumerate_overpartitions(cfg, n):
        v = s_statistic(p, cfg)
        hist[v] = hist.get(v, 0) + 1
    return hist


def overline_histogram(cfg: PartConfig, n: int) -> dict[int, int]:
    """Number of overpartitions of n per count of overlined parts."""
    hist: dict[int, int] = {}
    for p in enumerate_overpartitions(cfg, n):
        i = stats(p, cfg).i
        hist[i] = hist.get(i, 0) + 1
    return hist


def plain_part_histogram(cfg: PartConfig, n: int, distinct: bool) -> dict[int, int]:
    """Histogram over the number of non-overlined parts.

    With distinct=True, count distinct plain part values (mu = sum j_k);
    otherwise count plain parts with multiplicity (mu = sum k * j_k).
    """
    hist: dict[int, int] = {}
    for p in enumerate_overpartitions(cfg, n):
        s = stats(p, cfg)
        if distinct:
            mu = sum(s.j)
        else:
            mu = sum((k + 1) * c for k, c in enumerate(s.j))
        hist[mu] = hist.get(mu, 0) + 1
    return hist
