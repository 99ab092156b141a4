"""Command-line front end.

Usage sketch:

    bicx eval mr --v 0 --c 1 --z 1
    bicx eval gamma --y "2|3"
    bicx verify recurrences --seed 42 --n 200
    bicx kinetic --kind basic --v 1 --cc 2 --n0 1 --tmax 2
    bicx table mr --v 0.5 --c 1 --z-grid 0.1:2:0.1

Bicomplex literals accept "a+bi+cj+dk" or idempotent "z1|z2"; canonical
output is idempotent with 17 significant digits.  Output goes to stdout,
diagnostics to stderr.  Exit codes: 0 pass, 1 identity failure, 2 parse
error, 3 domain error, 4 series divergence.  BICX_SEED overrides --seed.
"""

from __future__ import annotations

import csv
import io
import json
import math
import os
import sys
from typing import List, Sequence

import click

from . import __version__
from .core import Bicomplex, exp as bc_exp, log as bc_log
from .errors import (
    DomainError,
    MaxTermsExceeded,
    ParseError,
    QuadratureNonConvergence,
    SeriesDivergence,
)
from .fractional import KineticProblem, kinetic_solve, kinetic_verify
from .gammafn import bicomplex_gamma
from .integralreps import BarnesPath
from .literals import format_bicomplex, format_real, parse_bicomplex
from .millerross import MRParams, evaluate
from .quadrature import QuadratureConfig
from .series import TruncationPolicy
from .verify import run_suite

EXIT_PASS = 0
EXIT_IDENTITY_FAILURE = 1
EXIT_PARSE = 2
EXIT_DOMAIN = 3
EXIT_DIVERGENCE = 4


def _fail(code: int, exc: BaseException) -> None:
    click.echo(f"{type(exc).__name__}: {exc}", err=True)
    sys.exit(code)


def _guarded(fn):
    """Map library exceptions onto the documented exit codes."""
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ParseError as exc:
            _fail(EXIT_PARSE, exc)
        except DomainError as exc:
            _fail(EXIT_DOMAIN, exc)
        except SeriesDivergence as exc:
            if exc.empirical_radius is not None:
                click.echo(
                    f"empirical radius: t < {exc.empirical_radius:.6g}", err=True
                )
            _fail(EXIT_DIVERGENCE, exc)
        except (MaxTermsExceeded, QuadratureNonConvergence) as exc:
            _fail(EXIT_DIVERGENCE, exc)

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _seed(seed: int) -> int:
    env = os.environ.get("BICX_SEED")
    return int(env) if env else seed


def _policy(rel_tol: float, max_terms: int) -> TruncationPolicy:
    return TruncationPolicy(rel_tol=rel_tol, max_terms=max_terms)


def _emit_rows(header: Sequence[str], rows: List[Sequence], fmt: str) -> None:
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        click.echo(buf.getvalue(), nl=False)
    elif fmt == "json":
        payload = [dict(zip(header, row)) for row in rows]
        click.echo(json.dumps(payload, indent=2))
    else:
        click.echo("  ".join(header))
        for row in rows:
            click.echo("  ".join(str(x) for x in row))


@click.group()
@click.version_option(version=__version__, prog_name="bicx")
def cli():
    """Bicomplex special functions: evaluation, verification, kinetics."""


# ---- eval -------------------------------------------------------------------

@cli.command("eval")
@click.argument("what", type=click.Choice(["mr", "gamma", "exp", "log"]))
@click.option("--v", "v_lit", default="0", help="Order V (bicomplex literal).")
@click.option("--c", "c_lit", default="1", help="Multiplier C (bicomplex literal).")
@click.option("--z", "z_lit", default="1", help="Argument Z (bicomplex literal).")
@click.option("--y", "y_lit", default=None, help="Gamma argument Y.")
@click.option("--rel-tol", default=1e-14, show_default=True)
@click.option("--max-terms", default=10_000, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["plain", "json", "csv"]),
              default="plain", show_default=True)
@_guarded
def cmd_eval(what, v_lit, c_lit, z_lit, y_lit, rel_tol, max_terms, fmt):
    """Evaluate one function at one point and print the certified value."""
    if what == "gamma":
        y = parse_bicomplex(y_lit if y_lit is not None else z_lit)
        value = bicomplex_gamma(y)
        result = {"value": format_bicomplex(value)}
    elif what == "exp":
        result = {"value": format_bicomplex(bc_exp(parse_bicomplex(z_lit)))}
    elif what == "log":
        result = {"value": format_bicomplex(bc_log(parse_bicomplex(z_lit)))}
    else:
        params = MRParams(parse_bicomplex(v_lit), parse_bicomplex(c_lit))
        sv = evaluate(params, parse_bicomplex(z_lit), _policy(rel_tol, max_terms))
        result = {
            "value": format_bicomplex(sv.value),
            "terms_used": sv.terms_used,
            "tail_bound": [sv.tail_bound.n1, sv.tail_bound.n2],
        }
    if fmt == "json":
        click.echo(json.dumps(result, indent=2))
    elif fmt == "csv":
        header = list(result)
        row = [result[k] if not isinstance(result[k], list)
               else ";".join(format_real(x) for x in result[k]) for k in header]
        _emit_rows(header, [row], "csv")
    else:
        for key, val in result.items():
            if isinstance(val, list):
                val = "(" + ", ".join(format_real(x) for x in val) + ")"
            click.echo(f"{key}: {val}")
    sys.exit(EXIT_PASS)


# ---- verify -------------------------------------------------------------------

@cli.command("verify")
@click.argument("suite", type=click.Choice(
    ["recurrences", "derivatives", "ode", "integral-reps", "barnes",
     "fractional", "kinetic", "cr", "all"]))
@click.option("--seed", default=42, show_default=True)
@click.option("--n", default=None, type=int, help="Cloud size override.")
@click.option("--t", "barnes_T", default=40.0, show_default=True,
              help="Barnes truncation height.")
@click.option("--inject-bug", is_flag=True, hidden=True,
              help="Test hook: flip a sign in the ODE identity.")
@click.option("--format", "fmt", type=click.Choice(["json", "plain"]),
              default="json", show_default=True)
@_guarded
def cmd_verify(suite, seed, n, barnes_T, inject_bug, fmt):
    """Run an identity suite over a seeded random cloud; exit 0 iff all pass."""
    report = run_suite(suite, _seed(seed), n=n, barnes_T=barnes_T,
                       inject_bug=inject_bug)
    if fmt == "json":
        click.echo(json.dumps(report, indent=2))
    else:
        for chk in report["checks"]:
            status = "pass" if chk["pass"] else "FAIL"
            click.echo(
                f"{status}  {chk['name']}: max_residual={chk['max_residual']:.3e} "
                f"budget={chk['budget']:.1e} points={chk['points']}"
            )
        click.echo(f"suite {report['suite']}: "
                   + ("pass" if report["pass"] else "FAIL"))
    sys.exit(EXIT_PASS if report["pass"] else EXIT_IDENTITY_FAILURE)


# ---- kinetic -------------------------------------------------------------------

def _t_grid(tmin: float, tmax: float, tstep: float) -> List[float]:
    if tstep <= 0 or tmax < tmin or tmin <= 0:
        raise DomainError("need 0 < tmin <= tmax and tstep > 0")
    count = int(math.floor((tmax - tmin) / tstep + 1e-9))
    return [tmin + i * tstep for i in range(count + 1)]


@cli.command("kinetic")
@click.option("--kind", type=click.Choice(["basic", "exp", "mr"]), default="basic",
              show_default=True)
@click.option("--v", "v_lit", default="1", help="Decay order V.")
@click.option("--cc", default=1.0, show_default=True, help="Rate constant c > 0.")
@click.option("--n0", default=1.0, show_default=True)
@click.option("--fm", "fm_lit", default="1", help="Forcing multiplier C.")
@click.option("--mu", "mu_lit", default="1", help="Forcing order mu (mr kind).")
@click.option("--z0", "z0_lit", default="1", help="Forcing argument Z0 (mr kind).")
@click.option("--k-forcing", default=0, show_default=True)
@click.option("--tmin", default=0.1, show_default=True)
@click.option("--tmax", default=2.0, show_default=True)
@click.option("--tstep", default=0.1, show_default=True)
@click.option("--max-terms", default=10_000, show_default=True)
@click.option("--no-residual", is_flag=True, help="Skip RL back-substitution.")
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "plain"]),
              default="csv", show_default=True)
@_guarded
def cmd_kinetic(kind, v_lit, cc, n0, fm_lit, mu_lit, z0_lit, k_forcing,
                tmin, tmax, tstep, max_terms, no_residual, fmt):
    """Solve a fractional kinetic equation and print N(t) over a time grid."""
    kind_full = {"basic": "basic", "exp": "exp_forced", "mr": "mr_forced"}[kind]
    kwargs = dict(kind=kind_full, n0=n0, c=cc, order=parse_bicomplex(v_lit))
    if kind_full in ("exp_forced", "mr_forced"):
        kwargs["multiplier"] = parse_bicomplex(fm_lit)
    if kind_full == "mr_forced":
        kwargs["mu"] = parse_bicomplex(mu_lit)
        kwargs["z0"] = parse_bicomplex(z0_lit)
        kwargs["k_forcing"] = k_forcing
    problem = KineticProblem(**kwargs)
    policy = TruncationPolicy(max_terms=max_terms)
    solution = kinetic_solve(problem, policy)
    grid = _t_grid(tmin, tmax, tstep)

    residuals = None
    if not no_residual:
        residuals = kinetic_verify(problem, solution, grid,
                                   QuadratureConfig(tol=1e-8))
    header = ["t", "n_1", "n_i", "n_j", "n_k", "residual_1", "residual_2"]
    rows = []
    for idx, t in enumerate(grid):
        value = solution.at(t).value
        a1, a2, a3, a4 = value.reals()
        r1 = format_real(residuals[idx].n1) if residuals else ""
        r2 = format_real(residuals[idx].n2) if residuals else ""
        rows.append([format_real(t), format_real(a1), format_real(a2),
                     format_real(a3), format_real(a4), r1, r2])
    _emit_rows(header, rows, fmt)
    sys.exit(EXIT_PASS)


# ---- table -------------------------------------------------------------------

@cli.command("table")
@click.argument("what", type=click.Choice(["mr"]))
@click.option("--v", "v_lit", default="0.5")
@click.option("--c", "c_lit", default="1")
@click.option("--z-grid", default="0.1:2:0.1", show_default=True,
              help="start:stop:step for a real Z grid.")
@click.option("--rel-tol", default=1e-14, show_default=True)
@click.option("--max-terms", default=10_000, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["csv", "json", "plain"]),
              default="csv", show_default=True)
@_guarded
def cmd_table(what, v_lit, c_lit, z_grid, rel_tol, max_terms, fmt):
    """Tabulate E_{V,C} over a real argument grid."""
    try:
        start_s, stop_s, step_s = z_grid.split(":")
        start, stop, step = float(start_s), float(stop_s), float(step_s)
    except ValueError:
        raise ParseError(f"bad grid spec {z_grid!r}; want start:stop:step") from None
    if step <= 0 or stop < start:
        raise ParseError("grid needs step > 0 and stop >= start")
    params = MRParams(parse_bicomplex(v_lit), parse_bicomplex(c_lit))
    policy = _policy(rel_tol, max_terms)
    header = ["z", "e_1", "e_i", "e_j", "e_k", "terms", "tail_1", "tail_2"]
    rows = []
    count = int(math.floor((stop - start) / step + 1e-9))
    for i in range(count + 1):
        z = start + i * step
        sv = evaluate(params, Bicomplex(z, z), policy)
        a1, a2, a3, a4 = sv.value.reals()
        rows.append([
            format_real(z), format_real(a1), format_real(a2),
            format_real(a3), format_real(a4), sv.terms_used,
            format_real(sv.tail_bound.n1), format_real(sv.tail_bound.n2),
        ])
    _emit_rows(header, rows, fmt)
    sys.exit(EXIT_PASS)


def main():
    cli(prog_name="bicx")


if __name__ == "__main__":
    main()
