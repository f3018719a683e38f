"""Command-line front end: figure-reproduction data files and checks.

Subcommands
    algebra-check    commutator residual table
    bg-density       Barut-Girardello radial density (series route)
    bg-evolve        BG density-evolution grid over (tau, r)
    per-density      su(1,1) Perelomov radial density
    per-evolve       su(1,1) Perelomov density-evolution grid
    squeeze-map      squeezing classification over the complex-z plane
    su2-variances    closed-form vs matrix-route su(2) variance report
    transition-prob  binomial shell transition probabilities
    turning-points   classical turning radii for a mean energy
    dicke-info       explicit Dicke-like basis vectors
    state-dump       coherent-state amplitudes (CSV rows or canonical JSON)

Output is CSV by default ("# key=value" metadata comments, a header line,
17-significant-digit numbers) or JSON with --format json, written to
--out PATH or stdout.  Exit codes: 0 success, 1 usage error, 2 domain
error, 3 non-convergence.  Phases are accepted as radians ("1.57") or
multiples of pi ("0.5pi", "pi") and recorded verbatim in the metadata;
a phase phi parameterizes z = |z| e^{-i phi}.  The environment variable
RADOSC_MAX_TERMS overrides the default series term budget.
"""

from __future__ import annotations

import argparse
import cmath
import math
import sys

import numpy as np

from . import __version__
from .coherent import CoherentSpec, Family, Group, transition_probability
from .dynamics import EvolutionSpec, density_evolution
from .errors import ConvergenceError, DomainError
from .grids import GridResult
from .observables import (
    squeezing_map,
    su2_variances_closed,
    su2_variances_matrix,
    turning_points,
)
from .operators import DickeCase, commutator_suite, dicke_basis, su2_weight
from .statespace import evaluate_density

__all__ = ["run", "main"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # argparse would sys.exit(2); we map usage errors to 1
        raise UsageError(message)


def _parse_phase(text: str) -> float:
    t = text.strip().lower()
    if t.endswith("pi"):
        head = t[:-2]
        if head in ("", "+"):
            return math.pi
        if head == "-":
            return -math.pi
        return float(head) * math.pi
    return float(t)


def _z_from(mod: float, phase_text: str) -> complex:
    return mod * cmath.exp(-1j * _parse_phase(phase_text))


def _meta(args, **extra) -> dict:
    meta = {"version": __version__, "command": args.command}
    meta.update(extra)
    return meta


def _linspace_positive(rmax: float, points: int) -> np.ndarray:
    if rmax <= 0 or points < 2:
        raise DomainError("need rmax > 0 and at least 2 grid points")
    return np.linspace(rmax / points, rmax, points)


# --------------------------------------------------------------------------
# subcommand handlers, each returning a GridResult (or raw text)


def _cmd_algebra_check(args) -> GridResult:
    rows = commutator_suite(args.smax, args.lmax)
    names = [name for name, _ in rows]
    values = np.array([[res] for _, res in rows])
    meta = _meta(args, smax=args.smax, lmax=args.lmax, lattice="2<=s,l<=max (l>=3 for [J+;a+],[J+;b-])")
    return GridResult("identity", names, "quantity", ["residual"], values, meta)


def _density_grid(args, family: Family) -> GridResult:
    z = _z_from(args.mod, args.phase)
    spec = CoherentSpec(family, args.ell, z, args.trunc)
    r = _linspace_positive(args.rmax, args.points)
    dens = evaluate_density(spec.build(), r)
    meta = _meta(args, family=family.value, ell=args.ell, mod=args.mod, phase=args.phase,
                 rmax=args.rmax, points=args.points, trunc=args.trunc)
    return GridResult("r", list(r), "quantity", ["density"], dens[:, None], meta)


def _cmd_bg_density(args) -> GridResult:
    return _density_grid(args, Family.BG)


def _cmd_per_density(args) -> GridResult:
    return _density_grid(args, Family.SU11P)


def _evolve_grid(args, family: Family) -> GridResult:
    z = _z_from(args.mod, args.phase)
    taus = np.linspace(0.0, _parse_phase(args.tau_max), args.tau_points)
    spec = EvolutionSpec(
        family=CoherentSpec(family, args.ell, z, args.trunc),
        t_grid=taus / (4.0 * args.lam),
        r_grid=_linspace_positive(args.rmax, args.points),
        lam=args.lam,
    )
    grid = density_evolution(spec)
    grid.metadata.update({str(k): str(v) for k, v in _meta(
        args, mod=args.mod, phase=args.phase, rmax=args.rmax, points=args.points,
        tau_max=args.tau_max, tau_points=args.tau_points, trunc=args.trunc).items()})
    return grid


def _cmd_bg_evolve(args) -> GridResult:
    return _evolve_grid(args, Family.BG)


def _cmd_per_evolve(args) -> GridResult:
    return _evolve_grid(args, Family.SU11P)


def _cmd_squeeze_map(args) -> GridResult:
    group = Group(args.group)
    if group is Group.SU11:
        if args.ell is None:
            raise UsageError("--group su11 requires --ell")
        label = args.ell
    else:
        if args.n is None:
            raise UsageError("--group su2 requires --n")
        label = args.n
    mods = np.linspace(args.mod_min, args.mod_max, args.mod_points)
    phases = np.linspace(0.0, 2 * math.pi, args.phase_points, endpoint=False)
    grid = squeezing_map(group, label, mods, phases)
    grid.metadata.update({str(k): str(v) for k, v in _meta(
        args, mod_min=args.mod_min, mod_max=args.mod_max,
        mod_points=args.mod_points, phase_points=args.phase_points).items()})
    return grid


def _cmd_su2_variances(args) -> GridResult:
    z = _z_from(args.mod, args.phase)
    cols = ["mean_3", "var_1", "var_2", "bound", "squeezed_1", "squeezed_2", "minimum_uncertainty"]
    rows = []
    for rep in (su2_variances_closed(args.n, z), su2_variances_matrix(args.n, z)):
        rows.append([rep.mean_3, rep.var_1, rep.var_2, rep.bound,
                     float(rep.squeezed_1), float(rep.squeezed_2), float(rep.minimum_uncertainty)])
    meta = _meta(args, n=args.n, mod=args.mod, phase=args.phase)
    return GridResult("route", ["closed", "matrix"], "quantity", cols, np.array(rows), meta)


def _cmd_transition_prob(args) -> GridResult:
    two_j = int(round(2 * su2_weight(args.n)))
    rows = list(range(two_j + 1))
    values = np.array(
        [[args.n - 2 * r, transition_probability(args.n, r, args.mod)] for r in rows]
    )
    meta = _meta(args, n=args.n, mod=args.mod)
    return GridResult("r_index", rows, "quantity", ["ell", "probability"], values, meta)


def _cmd_turning_points(args) -> GridResult:
    r_in, r_out = turning_points(args.energy, args.ell)
    meta = _meta(args, energy=args.energy, ell=args.ell)
    return GridResult("index", [0], "quantity", ["r_inner", "r_outer"],
                      np.array([[r_in, r_out]]), meta)


def _cmd_dicke_info(args) -> GridResult:
    basis = dicke_basis(DickeCase(args.case), _parse_phase(args.chi))
    rows = []
    for p, vec in enumerate(basis.vectors):
        mu = basis.j - p
        for q in vec.support():
            c = vec.amplitude(q)
            rows.append([p, mu, q.s, q.ell, c.real, c.imag])
    meta = _meta(args, case=args.case, chi=args.chi, j=basis.j, dim=len(basis.vectors))
    return GridResult("entry", list(range(len(rows))), "field",
                      ["vector", "mu", "s", "ell", "re", "im"], np.array(rows), meta)


def _cmd_state_dump(args):
    family = Family(args.family)
    z = _z_from(args.mod, args.phase)
    state = CoherentSpec(family, args.label, z, args.trunc).build()
    if args.format == "json":
        return state.to_json() + "\n"
    rows = []
    for q in state.support():
        c = state.amplitude(q)
        rows.append([q.s, q.ell, c.real, c.imag])
    meta = _meta(args, family=args.family, label=args.label, mod=args.mod,
                 phase=args.phase, trunc=args.trunc)
    return GridResult("entry", list(range(len(rows))), "field",
                      ["s", "ell", "re", "im"], np.array(rows), meta)


# --------------------------------------------------------------------------


def _add_output_flags(p: _Parser):
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--format", choices=["csv", "json"], default="csv")


def build_parser() -> _Parser:
    parser = _Parser(prog="radosc", description="radial-oscillator algebra and coherent-state toolkit")
    parser.add_argument("--version", action="version", version=f"radosc {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def new(name, handler, help_text):
        p = sub.add_parser(name, help=help_text)
        p.set_defaults(handler=handler, command=name)
        _add_output_flags(p)
        return p

    p = new("algebra-check", _cmd_algebra_check, "commutator residual table")
    p.add_argument("--smax", type=int, default=8)
    p.add_argument("--lmax", type=int, default=8)

    for name, handler, help_text in (
        ("bg-density", _cmd_bg_density, "Barut-Girardello radial density"),
        ("per-density", _cmd_per_density, "su(1,1) Perelomov radial density"),
    ):
        p = new(name, handler, help_text)
        p.add_argument("--ell", type=int, required=True)
        p.add_argument("--mod", type=float, required=True, help="|z|")
        p.add_argument("--phase", default="0", help="phi in z=|z|e^{-i phi} (radians or '0.5pi')")
        p.add_argument("--rmax", type=float, default=12.0)
        p.add_argument("--points", type=int, default=600)
        p.add_argument("--trunc", type=int, default=None)

    for name, handler, help_text in (
        ("bg-evolve", _cmd_bg_evolve, "BG density evolution over (tau, r)"),
        ("per-evolve", _cmd_per_evolve, "Perelomov density evolution over (tau, r)"),
    ):
        p = new(name, handler, help_text)
        p.add_argument("--ell", type=int, required=True)
        p.add_argument("--mod", type=float, required=True)
        p.add_argument("--phase", default="0")
        p.add_argument("--rmax", type=float, default=12.0)
        p.add_argument("--points", type=int, default=300)
        p.add_argument("--tau-max", default="2pi", help="largest tau = 4*lambda*t (radians or '2pi')")
        p.add_argument("--tau-points", type=int, default=121)
        p.add_argument("--lam", "--lambda", dest="lam", type=float, default=1.0)
        p.add_argument("--trunc", type=int, default=None)

    p = new("squeeze-map", _cmd_squeeze_map, "squeezing classification map")
    p.add_argument("--group", choices=["su11", "su2"], required=True)
    p.add_argument("--ell", type=int, default=None)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--mod-min", type=float, default=0.0)
    p.add_argument("--mod-max", type=float, required=True)
    p.add_argument("--mod-points", type=int, default=60)
    p.add_argument("--phase-points", type=int, default=120)

    p = new("su2-variances", _cmd_su2_variances, "su(2) variance report, both routes")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mod", type=float, required=True)
    p.add_argument("--phase", default="0")

    p = new("transition-prob", _cmd_transition_prob, "shell transition probabilities")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mod", type=float, required=True)

    p = new("turning-points", _cmd_turning_points, "classical turning radii")
    p.add_argument("--energy", type=float, required=True)
    p.add_argument("--ell", type=int, required=True)

    p = new("dicke-info", _cmd_dicke_info, "Dicke-like basis vectors")
    p.add_argument("--case", choices=[c.value for c in DickeCase], required=True)
    p.add_argument("--chi", default="0")

    p = new("state-dump", _cmd_state_dump, "coherent-state amplitudes")
    p.add_argument("--family", choices=[f.value for f in Family], required=True)
    p.add_argument("--label", type=int, required=True, help="ell (bg, su11p) or n (su2p)")
    p.add_argument("--mod", type=float, required=True)
    p.add_argument("--phase", default="0")
    p.add_argument("--trunc", type=int, default=None)

    return parser


def run(argv=None) -> int:
    """Entry point; returns the process exit code instead of raising."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        result = args.handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except ConvergenceError as exc:
        print(f"non-convergence: {exc}", file=sys.stderr)
        return 3
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:  # bad numeric literals in flag values
        print(f"usage error: {exc}", file=sys.stderr)
        return 1

    text = result if isinstance(result, str) else (
        result.json_text() if args.format == "json" else result.csv_text()
    )
    if args.out:
        with open(args.out, "w") as fp:
            fp.write(text)
    else:
        sys.stdout.write(text)
    return 0


def main():
    sys.exit(run())
