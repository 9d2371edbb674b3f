"""Command line front end: ``moment-cara <command> [flags]``.

JSON goes to stdout (CSV for ``flat-table --format csv``).  Errors go to
stderr as ``{"error": code, "message": text}``.  Exit status is 0 on
success, 1 on a domain error and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .core import binom
from .errors import CaraError
from .flat import flat_check, minimal_worst_cases, table_to_csv, worst_case_table
from .hilbert import (PolynomialProfile, ProjectiveSpace, Sphere, asymptotic_ratio,
                      curve_bounds, grid_cara_closed_form, grid_degree, ratio_limit,
                      variety_bounds)
from .moments import (format_rational, hankel, measure_to_dict, read_measure, read_moments,
                      write_measure, write_moments)
from .recover import read_moment_values_1d, recover_atoms_1d
from .sparse import (descartes_number, nonneg_zero_bounds, semigroup_invariants,
                     sparse_cara_bounds)
from .witness import (DEFAULT_MAX_GRID, boundary_cara, build_grid_witness, certificate,
                      default_candidates, interpolation_points, prune)

TABULAR = {"flat-table"}


class UsageError(Exception):
    pass


def _gens(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _default_max_grid() -> int:
    env = os.environ.get("MOMENT_CARA_MAX_GRID")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError(f"MOMENT_CARA_MAX_GRID must be an integer, got {env!r}")
    return DEFAULT_MAX_GRID


# --- command implementations -------------------------------------------------

def _bounds_grid(args, domain):
    deg = grid_degree(args.d, args.parity)
    lower = grid_cara_closed_form(args.n, args.d, args.parity, domain)
    size = binom(args.n + deg, args.n)
    return {
        "lower": lower,
        "upper": size - 1,
        "basis_size": size,
        "degree": deg,
        "ratio": format_rational(asymptotic_ratio(args.n, args.d, args.parity, domain)),
    }


def cmd_bounds_rn(args):
    return _bounds_grid(args, "rn")


def cmd_bounds_cube(args):
    return _bounds_grid(args, "cube")


def cmd_bounds_variety(args):
    if args.profile == "polynomial":
        if not args.coeffs:
            raise UsageError("--profile polynomial needs --coeffs")
        profile = PolynomialProfile(args.coeffs.split(","))
    else:
        if args.n is None:
            raise UsageError(f"--profile {args.profile} needs --n")
        profile = Sphere(args.n) if args.profile == "sphere" else ProjectiveSpace(args.n)
    rep = variety_bounds(profile, args.k, args.d)
    return {"lower": _num(rep.lower), "upper": _num(rep.upper),
            "regime_note": rep.regime_note, "regime_violation": rep.regime_violation}


def _num(v):
    return v if isinstance(v, int) else format_rational(v)


def cmd_bounds_curve(args):
    rep = curve_bounds(args.e, args.d)
    return {"lower": rep.lower, "upper": rep.upper, "regime_note": rep.regime_note}


def cmd_bounds_sparse(args):
    ring = semigroup_invariants(args.gens)
    lower, upper = sparse_cara_bounds(ring, args.k)
    zl, zu = nonneg_zero_bounds(ring, args.k)
    return {"lower": lower, "upper": upper, "conductor": ring.conductor, "gaps": ring.gaps,
            "D_conductor": descartes_number(ring, ring.conductor).value,
            "nonneg_zeros": [zl, zu]}


def cmd_descartes(args):
    res = descartes_number(semigroup_invariants(args.gens), args.k)
    return {"D": res.value,
            "witness_signs": [{"exponent": e, "sign": s}
                              for e, s in zip(res.exponents, res.signs)]}


def cmd_semigroup(args):
    ring = semigroup_invariants(args.gens)
    return {"generators": list(ring.generators), "conductor": ring.conductor,
            "gaps": ring.gaps, "gap_list": list(ring.gap_list)}


def cmd_witness(args):
    max_grid = args.max_grid if args.max_grid is not None else _default_max_grid()
    w = build_grid_witness(args.n, args.d, args.parity, args.domain, max_grid=max_grid)
    if args.write_atoms:
        write_measure(w.measure, args.write_atoms)
    if args.write_moments:
        write_moments(w.sequence, args.write_moments)
    out = {"certified_cara": w.certified_cara, "closed_form": w.closed_form,
           "match": w.matches, "atoms": len(w.grid), "degree": w.degree,
           "basis_size": len(w.sequence.values),
           "certificate_value": format_rational(w.certificate_value())}
    if args.verify and not w.matches:
        raise CaraError(f"rank {w.certified_cara} differs from closed form {w.closed_form}")
    return out


def cmd_certificate(args):
    cert = certificate(args.n, args.d, args.domain)
    terms = sorted(cert.as_polynomial().items())
    return {"factor": list(cert.factor), "degree": cert.degree,
            "terms": [{"alpha": list(a), "coeff": format_rational(c)} for a, c in terms]}


def cmd_prune(args):
    m = _need(args.atoms, "--atoms", read_measure)
    out = prune(m, m.n, args.degree)
    return {"atoms_before": len(m), "atoms_after": len(out),
            "rank": boundary_cara(m, m.n, args.degree), "measure": measure_to_dict(out)}


def cmd_interp_points(args):
    if args.candidates:
        with open(args.candidates) as fh:
            stream = json.load(fh)
    else:
        stream = default_candidates(args.n)
    pts = interpolation_points(args.n, args.degree, stream)
    return {"points": [[format_rational(c) for c in p] for p in pts]}


def cmd_hankel(args):
    s = _need(args.moments, "--moments", read_moments)
    H = hankel(s, args.degree)
    return {"basis": [list(a) for a in H.basis],
            "matrix": [[format_rational(v) for v in row] for row in H.matrix.rows],
            "rank": H.rank()}


def cmd_flat_check(args):
    s = _need(args.moments, "--moments", read_moments)
    res = flat_check(s, args.degree)
    return {"rank_lower": res.rank_lower, "rank_upper": res.rank_upper, "flat": res.flat}


def cmd_flat_table(args):
    reports = worst_case_table(range(args.n_min, args.n_max + 1), [args.d])
    if args.format == "csv":
        return table_to_csv(reports)
    return {"rows": [{"n": r.n, "d": r.d, "C": r.cara_lower, "required_D": r.required_D,
                      "worst_case": r.worst_case, "minimal": r.minimal} for r in reports],
            "minimal": [list(p) for p in minimal_worst_cases(reports)]}


def cmd_recover(args):
    values = _need(args.moments, "--moments", read_moment_values_1d)
    kwargs = {"tol": args.tol} if args.tol is not None else {}
    return recover_atoms_1d(values, args.k, **kwargs).to_dict()


def cmd_ratio(args):
    r = asymptotic_ratio(args.n, args.d, args.parity, args.domain)
    return {"ratio": format_rational(r), "ratio_float": float(r),
            "limit": format_rational(ratio_limit(args.n))}


def _need(path, flag, reader):
    if not path:
        raise UsageError(f"{flag} FILE is required")
    return reader(path)


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="moment-cara", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, *flags, help=None):
        p = sub.add_parser(name, help=help)
        p.set_defaults(func=func)
        p.add_argument("--format", choices=("json", "csv"))
        for flag in flags:
            FLAGS[flag](p)
        return p

    add("bounds-rn", cmd_bounds_rn, "n", "d", "parity", help="grid bounds on R^n")
    add("bounds-cube", cmd_bounds_cube, "n", "d", "parity", help="grid bounds on [0,1]^n")
    p = add("bounds-variety", cmd_bounds_variety, "k", "d", help="Hilbert-polynomial bounds")
    p.add_argument("--profile", choices=("sphere", "projective", "polynomial"), required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--coeffs", help="ascending Hilbert polynomial coefficients, e.g. --coeffs=-20,8")
    p = add("bounds-curve", cmd_bounds_curve, "d", help="smooth curve bounds")
    p.add_argument("--e", type=int, required=True, help="curve degree")
    add("bounds-sparse", cmd_bounds_sparse, "gens", "k", help="bounds with gaps")
    add("descartes", cmd_descartes, "gens", "k", help="Descartes number D_k")
    add("semigroup", cmd_semigroup, "gens", help="conductor and gaps")
    p = add("witness", cmd_witness, "n", "d", "parity", "domain", "max_grid",
            help="grid witness with exact rank certification")
    p.add_argument("--verify", action="store_true",
                   help="exit 1 if the rank differs from the closed form")
    p.add_argument("--write-atoms", metavar="FILE")
    p.add_argument("--write-moments", metavar="FILE")
    add("certificate", cmd_certificate, "n", "d", "domain", help="grid-vanishing sum of squares")
    add("prune", cmd_prune, "atoms", "degree", help="Caratheodory reduction of a measure")
    p = add("interp-points", cmd_interp_points, "n", "degree",
            help="points whose evaluations span the dual")
    p.add_argument("--candidates", metavar="FILE", help="JSON list of candidate points")
    add("hankel", cmd_hankel, "moments", "degree", help="Hankel matrix and rank")
    add("flat-check", cmd_flat_check, "moments", "degree", help="rank H_D vs rank H_{D+1}")
    p = add("flat-table", cmd_flat_table, "d", help="worst-case flat extension table")
    p.add_argument("--n-max", type=int, required=True)
    p.add_argument("--n-min", type=int, default=1)
    add("recover", cmd_recover, "moments", "k", "tol", help="1-D atom recovery")
    add("ratio", cmd_ratio, "n", "d", "parity", "domain", help="lower bound / basis size")
    return parser


FLAGS = {
    "n": lambda p: p.add_argument("--n", type=int, required=True),
    "d": lambda p: p.add_argument("--d", type=int, required=True),
    "k": lambda p: p.add_argument("--k", type=int, required=True),
    "parity": lambda p: p.add_argument("--parity", choices=("even", "odd"), default="even"),
    "domain": lambda p: p.add_argument("--domain", choices=("rn", "cube"), default="rn"),
    "gens": lambda p: p.add_argument("--gens", type=_gens, required=True),
    "degree": lambda p: p.add_argument("--degree", type=int, required=True),
    "atoms": lambda p: p.add_argument("--atoms", metavar="FILE"),
    "moments": lambda p: p.add_argument("--moments", metavar="FILE"),
    "max_grid": lambda p: p.add_argument("--max-grid", type=int),
    "tol": lambda p: p.add_argument("--tol", type=float),
}


def _fail(code: str, message: str, status: int) -> int:
    sys.stderr.write(json.dumps({"error": code, "message": message}, sort_keys=True) + "\n")
    return status


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.format is None:
        # tabular commands print CSV unless JSON is asked for
        args.format = "csv" if args.command in TABULAR else "json"
    if args.format == "csv" and args.command not in TABULAR:
        return _fail("usage", f"--format csv is not available for {args.command}", 2)
    inputs = {k: v for k, v in sorted(vars(args).items())
              if k not in ("func", "command", "format") and v is not None}
    try:
        result = args.func(args)
    except UsageError as exc:
        return _fail("usage", str(exc), 2)
    except CaraError as exc:
        return _fail(exc.code, str(exc), 1)
    except (ValueError, OSError) as exc:
        return _fail("invalid-input", str(exc), 1)
    if isinstance(result, str):
        sys.stdout.write(result)
        return 0
    payload = {"command": args.command, "inputs": inputs, "version": __version__}
    payload.update(result)
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")
    return 0


if __name__ == "__main__":
    sys.exit(main())
