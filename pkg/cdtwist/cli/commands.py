"""
Commands of the cdtwist command line.

Results go to stdout (or --out FILE); logs go to stderr and the log file.
Exit codes: 0 success, 1 verification failure, 2 invalid input.
"""
import functools
import logging
from contextlib import contextmanager
from typing import Any, Dict, Iterator, TextIO

import click
from pydantic import ValidationError

from cdtwist.algebra.engine import basis_element, make_cd_tower
from cdtwist.algebra.search import find_zero_divisor
from cdtwist.algebra.tables import (
    build_table,
    iter_table,
    iter_text_rows,
    render_csv,
    render_json,
    render_text,
    write_csv_stream,
    write_json_stream,
)
from cdtwist.algebra.verify import verify_twist_vs_oracle
from cdtwist.cli.dependencies import CliConfig
from cdtwist.errors import CDTwistError, InvalidParameterError
from cdtwist.nonassoc.quaternion import (
    check_flexible_basis_law,
    check_third_power_assoc,
    double_octonion,
    nonassoc_params,
    nucleus_membership,
    render_ej,
)
from cdtwist.scalars.kinds import parse_gammas, parse_rational
from cdtwist.scalars.quadratic import QuadExt
from cdtwist.twist.batch import run_bench
from cdtwist.twist.core import MAX_LEVEL, alpha_eval, basis_product, render_theta_trace, theta_trace

logger = logging.getLogger(__name__)

FORMATS = click.Choice(["text", "csv", "json"])


def handle_errors(func):
    """Map library errors to click usage errors (exit code 2)"""
    @functools.wraps(func)
    def wrapper(*args, **kwargs):
        try:
            return func(*args, **kwargs)
        except (CDTwistError, ValidationError) as e:
            logger.error(f"Error in {func.__name__}: {e}")
            raise click.UsageError(str(e))
    return wrapper


@contextmanager
def output(path: str) -> Iterator[TextIO]:
    with click.open_file(path or "-", "w") as handle:
        yield handle


def _signed(value) -> str:
    text = str(value)
    return text if text.startswith("-") else f"+{text}"


@click.command("mul")
@click.option("--t", "t", type=int, required=True, help="Tower level")
@click.option("--p", "p", type=int, required=True, help="Left basis index")
@click.option("--q", "q", type=int, required=True, help="Right basis index")
@click.option("--gammas", default="symbolic", show_default=True, help="'symbolic' or t comma separated rationals")
@click.option("--verbose", is_flag=True, help="Print the sign chain and the g-monomial")
@click.option("--out", default=None, help="Write the result to this file")
@handle_errors
def mul_command(t: int, p: int, q: int, gammas: str, verbose: bool, out: str):
    """Multiply two basis vectors with the fast twist path."""
    CliConfig(command="mul", t=t, gammas=gammas)
    values = parse_gammas(gammas, t)
    term = basis_product(t, p, q)

    if values == "symbolic":
        result = term.render()
    else:
        result = f"{_signed(alpha_eval(t, p, q, values))} * f{term.index}"

    with output(out) as handle:
        if verbose:
            steps, final = theta_trace(t, p, q)
            handle.write(render_theta_trace(steps, final) + "\n")
            handle.write(f"g-monomial: {term.monomial()} (p AND q = {term.gamma_mask})\n")
            handle.write(f"index: f{p} * f{q} -> f{term.index} (p XOR q)\n")
        handle.write(result + "\n")


@click.command("table")
@click.option("--t", "t", type=int, required=True, help="Tower level")
@click.option("--gammas", default="symbolic", show_default=True, help="'symbolic' or t comma separated rationals")
@click.option("--format", "fmt", type=FORMATS, default="text", show_default=True)
@click.option("--stream", is_flag=True, help="Write rows as they are produced, without the size cap")
@click.option("--out", default=None, help="Write the table to this file")
@click.pass_obj
@handle_errors
def table_command(config: Dict[str, Any], t: int, gammas: str, fmt: str, stream: bool, out: str):
    """Print the multiplication table of the tower E_t."""
    CliConfig(command="table", t=t, gammas=gammas, format=fmt)
    values = parse_gammas(gammas, t)
    spec = make_cd_tower(t, values)

    with output(out) as handle:
        if stream:
            entries = iter_table(spec)
            if fmt == "text":
                for line in iter_text_rows(spec, entries):
                    handle.write(line + "\n")
            elif fmt == "csv":
                write_csv_stream(entries, handle)
            else:
                write_json_stream(t, values, entries, handle)
            return

        entries = build_table(spec, cap=config['table_config']['cap'])
        if fmt == "text":
            handle.write(render_text(spec, entries))
        elif fmt == "csv":
            handle.write(render_csv(entries))
        else:
            handle.write(render_json(t, values, entries))


@click.command("verify")
@click.option("--t", "t", type=int, required=True, help="Tower level")
@click.option("--gammas", default="symbolic", show_default=True, help="'symbolic' or t comma separated rationals")
@click.option("--mode", type=click.Choice(["exhaustive", "random"]), default="exhaustive", show_default=True)
@click.option("--n", "n", type=int, default=None, help="Random pairs (random mode)")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--workers", type=int, default=None, help="Worker processes")
@click.option("--progress", is_flag=True, help="Show a progress bar on stderr")
@click.option("--out", default=None, help="Write the report to this file")
@click.pass_context
@handle_errors
def verify_command(ctx: click.Context, t: int, gammas: str, mode: str, n: int, seed: int,
                   workers: int, progress: bool, out: str):
    """Check the twist path against the doubling engine; exit 1 on any disagreement."""
    settings = ctx.obj['verify_config']
    CliConfig(command="verify", t=t, gammas=gammas, seed=seed)
    values = parse_gammas(gammas, t)

    report = verify_twist_vs_oracle(
        t,
        values,
        mode=mode,
        n=settings['random_pairs'] if n is None else n,
        seed=seed,
        workers=settings['workers'] if workers is None else workers,
        exhaustive_max_t=settings['exhaustive_max_t'],
        progress=progress
    )
    with output(out) as handle:
        handle.write(report.model_dump_json(indent=2) + "\n")
    if not report.ok:
        ctx.exit(1)


@click.command("flex")
@click.option("--d", "d", type=int, default=2, show_default=True, help="Radicand of E = Q(sqrt(d))")
@click.option("--gamma", default="sqrt", show_default=True, help="Parameter in E - Q, e.g. 'sqrt', '1+2*sqrt'")
@click.option("--alpha", default=None, help="f1^2, d times a rational square (default d)")
@click.option("--doubled", is_flag=True, help="Check the eight-dimensional doubling instead")
@click.option("--delta", default=None, help="Parameter in E for --doubled (default gamma)")
@click.option("--trials", type=int, default=50, show_default=True, help="Random pairs for the nucleus check")
@click.option("--out", default=None, help="Write the report to this file")
@handle_errors
def flex_command(d: int, gamma: str, alpha: str, doubled: bool, delta: str, trials: int, out: str):
    """Check law (F), third-power associativity and the nucleus of a nonassociative quaternion algebra."""
    CliConfig(command="flex", trials=trials)
    alpha_value = parse_rational(alpha) if alpha is not None else None
    params = nonassoc_params(d, gamma, alpha_value)
    h = params.algebra
    spec = double_octonion(params, delta) if doubled else h
    report = check_flexible_basis_law(spec, params.root)

    with output(out) as handle:
        handle.write(f"E = Q(sqrt({params.d})), gamma = {params.gamma}, alpha = {params.alpha}\n")
        if doubled:
            handle.write(f"doubled with delta = {delta if delta is not None else params.gamma}\n")
        handle.write(f"law (F): {report.summary}\n")
        for failure in report.failures:
            handle.write(
                f"  fails ({failure.i},{failure.k}): f{failure.i}(f{failure.k} f{failure.i}) = {failure.left}"
                f" vs (f{failure.i} f{failure.k}) f{failure.i} = {failure.right}\n"
            )
        # j = (0, 1) and k = (0, rho)
        for name, coeff in (("j", 1), ("k", params.root)):
            x = basis_element(h, 1, coeff)
            left, right, equal = check_third_power_assoc(h, x)
            relation = "=" if equal else "≠"
            handle.write(
                f"{name}*{name}^2 = {render_ej(h, left)} {relation} {name}^2*{name} = {render_ej(h, right)}\n"
            )
        member = nucleus_membership(h, QuadExt(0, 1, params.d), trials)
        handle.write(f"sqrt({params.d}) in nucleus: {'yes' if member else 'no'} ({trials} random pairs)\n")


@click.command("zero-divisor")
@click.option("--t", "t", type=int, required=True, help="Tower level")
@click.option("--gammas", default=None, help="t comma separated rationals (default all -1)")
@click.option("--family", type=click.Choice(["structured", "random"]), default="structured", show_default=True)
@click.option("--budget", type=int, default=None, help="Candidate pairs to test")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--progress", is_flag=True, help="Show a progress bar on stderr")
@click.option("--out", default=None, help="Write the result to this file")
@click.pass_obj
@handle_errors
def zero_divisor_command(config: Dict[str, Any], t: int, gammas: str, family: str, budget: int,
                         seed: int, progress: bool, out: str):
    """Search for nonzero x, y in E_t with x y = 0."""
    if gammas is None:
        gammas = ",".join(["-1"] * t)
    CliConfig(command="zero-divisor", t=t, gammas=gammas, seed=seed, budget=budget)
    values = parse_gammas(gammas, t)
    if values == "symbolic":
        raise InvalidParameterError("Zero divisor search needs concrete gamma values")
    spec = make_cd_tower(t, values)
    if budget is None:
        budget = config['search_config']['budget']

    found = find_zero_divisor(spec, family=family, budget=budget, seed=seed, progress=progress)
    with output(out) as handle:
        if found is None:
            handle.write(f"no zero divisor found ({family} family, t={t})\n")
        else:
            x, y = found
            handle.write(f"zero divisor: ({x}) * ({y}) = 0\n")


@click.command("bench")
@click.option("--t", "t", type=int, required=True, help=f"Tower level (at most {MAX_LEVEL})")
@click.option("--n", "n", type=int, default=None, help="Number of random basis products")
@click.option("--seed", type=int, default=0, show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json"]), default="text", show_default=True)
@click.option("--progress", is_flag=True, help="Show a progress bar on stderr")
@click.option("--out", default=None, help="Write the timing report to this file")
@click.pass_obj
@handle_errors
def bench_command(config: Dict[str, Any], t: int, n: int, seed: int, fmt: str, progress: bool, out: str):
    """Time random basis products through the vectorised twist path."""
    CliConfig(command="bench", t=t, seed=seed)
    if t > MAX_LEVEL:
        raise InvalidParameterError(f"Level must be at most {MAX_LEVEL}, got {t}")
    n = config['bench_config']['n'] if n is None else n
    report = run_bench(t, n, seed=seed, progress=progress)
    with output(out) as handle:
        if fmt == "json":
            handle.write(report.model_dump_json(indent=2) + "\n")
        else:
            handle.write(
                f"t={report.t} n={report.n}: {report.seconds:.3f}s, "
                f"{report.products_per_second:,.0f} products/s\n"
            )


COMMANDS = [
    mul_command,
    table_command,
    verify_command,
    flex_command,
    zero_divisor_command,
    bench_command,
]
