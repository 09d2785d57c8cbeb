"""Command-line interface: construction, enumeration, zeros, curves, verify.

Subcommands mirror the library modules; `verify` drives the full
reproduction suite and reports one pass/fail line per criterion.  All
output is deterministic for fixed flags: terms are emitted in canonical
order and floats use %.12g formatting.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import chebyshev, curves, enumerator, specializations as spec, zeros
from .polyring import MultiPoly, UniPoly, default_var_names
from .sequences import (CheckReport, Q_poly, R_poly, gf_check, p_poly,
                        relation_checks)


def _fmt_float(v: float) -> str:
    return "%.12g" % v


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _multi_out(args, p: MultiPoly, names: list[str] | None = None) -> str:
    if args.format == "json":
        return p.to_json()
    return p.to_str(names=names)


def _uni_out(args, p: UniPoly) -> str:
    if args.format == "json":
        return p.to_multipoly().to_json()
    return p.to_str()


# -- subcommands -----------------------------------------------------------

def _cmd_poly(args) -> int:
    p = p_poly(args.b, args.n)
    names = args.vars.split(",") if args.vars else default_var_names(args.b + 1)
    _emit(args, _multi_out(args, p, names))
    return 0


def _cmd_qr(args) -> int:
    fn = Q_poly if args.kind == "Q" else R_poly
    p = fn(args.b, args.n)
    if args.eval_all_ones:
        _emit(args, str(p.eval_rational([1] * (args.b + 1))))
        return 0
    _emit(args, _multi_out(args, p, default_var_names(args.b + 1)))
    return 0


def _cmd_special(args) -> int:
    fams = {"qx": spec.Qx, "rx": spec.Rx, "qz": spec.QZ, "rz": spec.RZ}
    if args.family == "q1":
        p = spec.Q1(args.n, args.alpha, args.beta)
        if args.factor:
            variant = {(1, 1): "zz", (1, 2): "zz2"}.get((args.alpha, args.beta))
            if variant is None:
                print("factorizations are available for (alpha, beta) in "
                      "(1,1) and (1,2) only", file=sys.stderr)
                return 2
            lines = [_uni_out(args, f) for f in spec.factor_Q1(args.n, variant)]
            _emit(args, "\n".join(lines))
            return 0
    else:
        p = fams[args.family](args.n)
    _emit(args, _uni_out(args, p))
    return 0


def _cmd_enum(args) -> int:
    cfg = enumerator.PartConfig(args.b, args.lam)
    parts = enumerator.enumerate_overpartitions(cfg, args.n)
    if args.count:
        _emit(args, str(len(parts)))
        return 0
    _emit(args, "\n".join(p.render(args.b, compact=args.compact)
                          for p in parts))
    return 0


_ZERO_FAMILIES = {
    "zz": lambda n: spec.Q1(n, 1, 1),
    "zz2": lambda n: spec.Q1(n, 1, 2),
    "qtilde": spec.Qtilde,
    "rtilde": spec.Rtilde,
    "qx": spec.Qx,
    "rx": spec.Rx,
}


def _cmd_zeros(args) -> int:
    p = _ZERO_FAMILIES[args.family](args.n)
    pts = zeros.roots(p) if p.degree >= 1 else []
    if args.format == "json":
        body = json.dumps([{"re": pt.re, "im": pt.im, "residual": pt.residual}
                           for pt in pts])
        _emit(args, body)
        return 0
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["re", "im", "residual"])
    for pt in pts:
        w.writerow([_fmt_float(pt.re), _fmt_float(pt.im),
                    _fmt_float(pt.residual)])
    _emit(args, buf.getvalue().rstrip("\n"))
    return 0


def _cmd_curve(args) -> int:
    if args.check_catalog:
        rep = curves.check_curve_catalog()
        print("PASS curve catalogue" if rep.ok
              else "FAIL curve catalogue: " + rep.failures[0])
        return 0 if rep.ok else 1
    if args.alpha is None or args.beta is None:
        print("curve requires --alpha and --beta (or --check-catalog)",
              file=sys.stderr)
        return 2
    f = curves.derive_curve(args.alpha, args.beta)
    if args.samples:
        pts = curves.curve_samples(args.alpha, args.beta, args.samples)
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["x", "y"])
        for x, y in pts:
            w.writerow([_fmt_float(x), _fmt_float(y)])
        _emit(args, buf.getvalue().rstrip("\n"))
        return 0
    if args.format == "text":
        _emit(args, f.to_str())
    else:
        _emit(args, f.poly.to_json())
    return 0


# -- verification suites ---------------------------------------------------

_P_SMALL = [
    "1",
    "x+y",
    "x*y+x+y+z",
    "x^2+2*x*y+x*z+y^2",
    "x^2*y+x*y^2+x*y+x*z+y*z+x+y+z",
    "x^2*y+x^2*z+x*y^2+x*y*z+x^2+2*x*y+x*z+y^2+y*z",
    "x^2*y^2+x^2*y+x*y^2+2*x*y*z+x^2+2*x*y+2*x*z+y^2+y*z+z^2",
    "x^3+3*x^2*y+2*x^2*z+x^2*y*z+3*x*y^2+2*x*y*z+x*z^2+y^3",
]
_P_SMALL_SUMS = [1, 2, 4, 5, 8, 10, 13, 14]
_COUNT_SERIES_B2 = [1, 2, 4, 5, 8, 10, 13, 14, 18, 21, 26]

_QX_REF = [[1], [2, 2], [3, 7, 3], [4, 16, 16, 4], [5, 30, 51, 30, 5],
             [6, 50, 126, 126, 50, 6]]
_RX_REF = [[1], [1, 1], [1, 3, 1], [1, 6, 6, 1], [1, 10, 19, 10, 1],
             [1, 15, 45, 45, 15, 1]]
_QZ_REF = [[1], [0, 3, 1], [0, 0, 8, 4, 1], [0, 0, 0, 21, 13, 5, 1],
             [0, 0, 0, 0, 55, 40, 19, 6, 1],
             [0, 0, 0, 0, 0, 144, 120, 66, 26, 7, 1]]
_RZ_REF = [[1], [0, 2], [0, 0, 5], [0, 0, 0, 13, 1], [0, 0, 0, 0, 34, 6, 1],
             [0, 0, 0, 0, 0, 89, 25, 7, 1]]
_ZZ_REF = [[1], [1, 3], [1, 5, 7], [1, 7, 17, 15], [1, 9, 31, 49, 31],
           [1, 11, 49, 111, 129, 63]]
_ZZ_FACTORS = {3: [[1, 3], [1, 4, 5]],
                   5: [[1, 3], [1, 3, 3], [1, 5, 7]]}
_ZZ2_REF = [[1], [1, 2, 1], [1, 3, 5, 3, 1], [1, 4, 9, 12, 9, 4, 1],
           [1, 5, 14, 25, 31, 25, 14, 5, 1],
           [1, 6, 20, 44, 70, 82, 70, 44, 20, 6, 1]]
_CENTRAL_ZZ2 = [1, 2, 5, 12, 31, 82]


def _report(failures: list[str]) -> CheckReport:
    return CheckReport(not failures, failures)


def criterion_base_table(nmax: int | None = None) -> CheckReport:
    """Digit-recursion polynomials and coefficient sums for n = 0..7."""
    failures = []
    for n, text in enumerate(_P_SMALL):
        p = p_poly(2, n)
        if p != MultiPoly.parse(text, names=["x", "y", "z"]):
            failures.append(f"p_{n} differs from the reference table")
        if p.eval_rational([1, 1, 1]) != _P_SMALL_SUMS[n]:
            failures.append(f"p_{n} coefficient sum differs")
    return _report(failures)


def criterion_oracle(nmax: int | None = None) -> CheckReport:
    """Recurrence polynomials equal enumeration weights; counts match."""
    failures = []
    limits = {2: 40, 3: 30, 5: 30}
    for b, top in limits.items():
        if nmax is not None:
            top = min(top, nmax)
        cfg = enumerator.PartConfig(b, b)
        for n in range(top + 1):
            if p_poly(b, n) != enumerator.weight_poly(cfg, n):
                failures.append(f"oracle mismatch at b={b}, n={n}")
                break
    series = enumerator.count_series(enumerator.PartConfig(2, 2), 10)
    if series != _COUNT_SERIES_B2:
        failures.append("b=2 count series differs from the reference values")
    return _report(failures)


def criterion_tables(nmax: int | None = None) -> CheckReport:
    """Specialization tables: Qx/Rx, QZ/RZ, Q1(1,1) + factors, Q1(1,2)."""
    failures = []
    for n in range(6):
        if spec.Qx(n) != UniPoly(_QX_REF[n]) or spec.Rx(n) != UniPoly(_RX_REF[n]):
            failures.append(f"Qx/Rx table differs at n={n}")
        if spec.QZ(n) != UniPoly(_QZ_REF[n]) or spec.RZ(n) != UniPoly(_RZ_REF[n]):
            failures.append(f"QZ/RZ table differs at n={n}")
        if spec.Q1(n, 1, 1) != UniPoly(_ZZ_REF[n]):
            failures.append(f"Q1(n,1,1) table differs at n={n}")
        if spec.Q1(n, 1, 2) != UniPoly(_ZZ2_REF[n]):
            failures.append(f"Q1(n,1,2) table differs at n={n}")
        if spec.Q1(n, 1, 2)[n] != _CENTRAL_ZZ2[n]:
            failures.append(f"central coefficient differs at n={n}")
    for n, factors in _ZZ_FACTORS.items():
        got = sorted(tuple(f.coeffs) for f in spec.factor_Q1(n, "zz"))
        want = sorted(tuple(Fraction(c) for c in f) for f in factors)
        if got != want:
            failures.append(f"factor list differs at n={n}")
    return _report(failures)


def criterion_identities(nmax: int | None = None) -> CheckReport:
    """Recurrence/generating-function/Chebyshev/factorization identities."""
    failures = []
    top = 20 if nmax is None else min(20, nmax)
    for b in (2, 3, 5):
        rep = gf_check(b, top)
        failures.extend(rep.failures)
        for n in range(1, top + 1):
            for rep in (relation_checks(b, n),
                        chebyshev.verify_chebyshev_form(b, n),
                        chebyshev.verify_pell_like(b, n)):
                failures.extend(rep.failures)
    failures.extend(spec.trinomial_checks(top).failures)
    failures.extend(spec.check_x_family_structure(max(24 if nmax is None else nmax, 2)).failures)
    for n in range(1, top + 1):
        if not spec.closed_form_zz_check(n):
            failures.append(f"(2z+1) closed form fails at n={n}")
        if not spec.closed_form_zz2_check(n):
            failures.append(f"(z^2+z+1) closed form fails at n={n}")
        if not spec.factor_product_check(n, "zz"):
            failures.append(f"zz factor product fails at n={n}")
        if not spec.factor_product_check(n, "zz2"):
            failures.append(f"zz2 factor product fails at n={n}")
        if not spec.q1_closed_form_check(n):
            failures.append(f"two-variable closed form fails at n={n}")
    if not spec.phi_shift_expansions_check():
        failures.append("shifted cyclotomic expansions fail")
    return _report(failures)


def criterion_counting(nmax: int | None = None) -> CheckReport:
    """All-ones evaluations: Q -> (3^(n+1)-1)/2 and R -> (3^n+1)/2."""
    failures = []
    top = 20 if nmax is None else min(20, nmax)
    for b in (2, 3, 5):
        ones = [1] * (b + 1)
        for n in range(top + 1):
            if Q_poly(b, n).eval_rational(ones) != Fraction(3 ** (n + 1) - 1, 2):
                failures.append(f"Q all-ones count fails at b={b}, n={n}")
            if R_poly(b, n).eval_rational(ones) != Fraction(3 ** n + 1, 2):
                failures.append(f"R all-ones count fails at b={b}, n={n}")
    return _report(failures)


def criterion_fibonacci(nmax: int | None = None) -> CheckReport:
    """Coefficient structure of the equal-variables specialization."""
    top = 25 if nmax is None else max(5, min(25, nmax))
    return spec.check_tilde_coefficients(top)


def criterion_statistics(nmax: int | None = None) -> CheckReport:
    """Histogram interpretations of the coefficient vectors."""
    failures = []
    top = 4 if nmax is None else min(4, nmax)
    for n in range(1, top + 1):
        for rep in (spec.check_overline_counts(n), spec.check_two_variable_counts(n),
                    spec.check_plain_part_counts(n), spec.check_plain_part_symmetry(n),
                    spec.check_s_histograms(n)):
            failures.extend(rep.failures)
    failures.extend(spec.check_s_histogram_base_b(5, 2).failures)
    return _report(failures)


def criterion_zero_loci(nmax: int | None = None) -> CheckReport:
    """Explicit zero formulas vs numerics, circles, quartic, reciprocals."""
    failures = []
    top = 30 if nmax is None else min(30, nmax)
    for n in range(1, top + 1):
        for rep in (zeros.check_zz_circle(n), zeros.check_zz2_quartic(n),
                    zeros.check_qtilde_circle(n)):
            failures.extend(rep.failures)
    if top >= 30:
        failures.extend(zeros.check_zz2_quartic(50).failures)
    failures.extend(zeros.check_real_negative_reciprocal(top).failures)
    return _report(failures)


def criterion_curves(nmax: int | None = None) -> CheckReport:
    """Curve catalogue, parametrization, tangents, moduli, inversions."""
    failures = []
    for rep in (curves.check_curve_catalog(), curves.verify_param(),
                curves.tangent_points_f12(), curves.extremal_moduli_f12(),
                curves.cassini_check()):
        failures.extend(rep.failures)
    for ab in ((1, 1), (1, 2), (1, 0), (2, 1)):
        failures.extend(curves.inversion_check(*ab).failures)
    failures.extend(curves.membership(
        curves.derive_curve(1, 2), zeros.zeros_explicit_zz2(21), 1e-8).failures)
    return _report(failures)


CRITERIA: list[tuple[str, object]] = [
    ("digit-recursion table", criterion_base_table),
    ("enumeration oracle", criterion_oracle),
    ("specialization tables", criterion_tables),
    ("identity suites", criterion_identities),
    ("counting closed forms", criterion_counting),
    ("fibonacci coefficients", criterion_fibonacci),
    ("combinatorial statistics", criterion_statistics),
    ("zero loci numerics", criterion_zero_loci),
    ("curve suite", criterion_curves),
]

_SUITE_KEYS = {
    "recursion": "digit-recursion table",
    "oracle": "enumeration oracle",
    "tables": "specialization tables",
    "identities": "identity suites",
    "counting": "counting closed forms",
    "fibonacci": "fibonacci coefficients",
    "stats": "combinatorial statistics",
    "zeros": "zero loci numerics",
    "curves": "curve suite",
}


def _cmd_verify(args) -> int:
    wanted = set(_SUITE_KEYS.values()) if args.suite == "all" \
        else {_SUITE_KEYS[args.suite]}
    failed = False
    for name, fn in CRITERIA:
        if name not in wanted:
            continue
        rep = fn(args.nmax)
        if rep.ok:
            print(f"PASS {name}")
        else:
            failed = True
            print(f"FAIL {name}: {rep.failures[0]}")
    return 1 if failed else 0


# -- argument parsing ------------------------------------------------------

def _build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(
        prog="overpoly",
        description="Restricted overpartition polynomials: construction, "
                    "enumeration, zeros, and curves.")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p, fmt=("text", "json")):
        p.add_argument("--format", choices=fmt, default=fmt[0])
        p.add_argument("--out", metavar="FILE", default=None)

    p = sub.add_parser("poly", help="digit-recursion polynomial p_n")
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--vars", default=None)
    common(p)
    p.set_defaults(fn=_cmd_poly)

    p = sub.add_parser("qr", help="Q_n or R_n for base b")
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=["Q", "R"], required=True)
    p.add_argument("--eval-all-ones", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_qr)

    p = sub.add_parser("special", help="single-variable specializations")
    p.add_argument("--family", choices=["qx", "rx", "qz", "rz", "q1"],
                   required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--alpha", type=int, default=1)
    p.add_argument("--beta", type=int, default=1)
    p.add_argument("--factor", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_special)

    p = sub.add_parser("enum", help="enumerate restricted overpartitions")
    p.add_argument("--b", type=int, default=2)
    p.add_argument("--lambda", dest="lam", type=int, default=2)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--count", action="store_true")
    p.add_argument("--compact", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_enum)

    p = sub.add_parser("zeros", help="numerical zeros of a family member")
    p.add_argument("--family", choices=sorted(_ZERO_FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)
    common(p, fmt=("csv", "json"))
    p.set_defaults(fn=_cmd_zeros)

    p = sub.add_parser("curve", help="implicit zero-locus curves")
    p.add_argument("--alpha", type=int, default=None)
    p.add_argument("--beta", type=int, default=None)
    p.add_argument("--samples", type=int, default=None)
    p.add_argument("--check-catalog", action="store_true")
    common(p, fmt=("json", "text", "csv"))
    p.set_defaults(fn=_cmd_curve)

    p = sub.add_parser("verify", help="run the reproduction suites")
    p.add_argument("--suite", choices=["all"] + sorted(_SUITE_KEYS),
                   default="all")
    p.add_argument("--nmax", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p.set_defaults(fn=_cmd_verify)
    return top


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
