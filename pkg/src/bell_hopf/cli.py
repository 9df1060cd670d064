"""
`bell-hopf` command line.

Every command writes its result to stdout only (logs go to stderr) and exits
with the code of the library error that stopped it: 3 domain, 4 bound,
5 convergence, 6 parse, 1 for a failed axiom check. Exit 2 stays with
click for usage errors (unknown options, bad option values).
"""

from __future__ import annotations

import functools
import sys
from collections.abc import Callable
from fractions import Fraction
from pathlib import Path
from typing import Any
from typing import TypeVar

import click
import mpmath
from dotenv import load_dotenv
from pydantic import ValidationError

from . import __version__
from .boson import BosonWord
from .boson import normal_order
from .combinatorics import bell
from .combinatorics import stirling2
from .combinatorics import stirling_row
from .config import ENV_FOCK_DIM
from .config import ENV_LOG_LEVEL
from .config import ENV_ORDER
from .config import ENV_PRECISION
from .config import BellHopfConfig
from .config import load_config
from .diagrams import code_monomial
from .diagrams import enumerate_labeled_diagrams
from .diagrams import format_census
from .diagrams import shape_census
from .diagrams import shape_of
from .diagrams import to_dot_bundle
from .errors import BellHopfError
from .errors import BoundExceededError
from .errors import ConvergenceError
from .errors import DomainError
from .formatting import coefficient_text
from .formatting import dumps
from .formatting import normal_form_json
from .formatting import sequences_json
from .formatting import sequences_text
from .hopf import AlphabetSpec
from .hopf import check_hopf_axioms
from .logging_config import get_logger
from .logging_config import setup_logging
from .parsing import parse_rational_list
from .parsing import parse_real
from .statmech import CumulantSequence
from .statmech import ModelSpec
from .statmech import MomentSequence
from .statmech import cumulants_to_moments
from .statmech import graph_expansion
from .statmech import partition_function_closed
from .statmech import partition_function_quadrature
from .statmech import pfi_general
from .statmech import termwise_divergence_report

logger = get_logger("cli")

F = TypeVar("F", bound=Callable[..., Any])


def handle_errors(func: F) -> F:
    """Map library errors to a one-line stderr message and their exit code."""

    @functools.wraps(func)
    def wrapper(*args: Any, **kwargs: Any) -> Any:
        try:
            return func(*args, **kwargs)
        except BellHopfError as e:
            click.echo(f"error: {e}", err=True)
            sys.exit(e.exit_code)

    return wrapper  # type: ignore[return-value]


class RationalParam(click.ParamType):
    """Exact rational from "3", "-1/2" or "0.25"."""

    name = "rational"

    def convert(self, value: Any, param: click.Parameter | None, ctx: click.Context | None) -> Fraction:
        if isinstance(value, Fraction):
            return value
        try:
            return Fraction(str(value).strip())
        except (ValueError, ZeroDivisionError):
            self.fail(f"{value!r} is not a rational number", param, ctx)


RATIONAL = RationalParam()


def get_config(ctx: click.Context) -> BellHopfConfig:
    return ctx.obj["config"]  # type: ignore[no-any-return]


def _number(value: mpmath.mpf, digits: int) -> str:
    return mpmath.nstr(value, digits, strip_zeros=False)


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.option("--order", type=int, envvar=ENV_ORDER, default=None, help="Default truncation order N")
@click.option("--fock-dim", type=int, envvar=ENV_FOCK_DIM, default=None, help="Truncated Fock dimension")
@click.option("--precision", type=int, envvar=ENV_PRECISION, default=None, help="Decimal digits for Z")
@click.option(
    "--config",
    "config_path",
    type=click.Path(exists=True, dir_okay=False, path_type=Path),
    default=None,
    help="YAML configuration file",
)
@click.option("--log-level", envvar=ENV_LOG_LEVEL, default=None, help="DEBUG, INFO, WARNING or ERROR")
@click.version_option(__version__, prog_name="bell-hopf")
@click.pass_context
def cli(
    ctx: click.Context,
    order: int | None,
    fock_dim: int | None,
    precision: int | None,
    config_path: Path | None,
    log_level: str | None,
) -> None:
    """Exact Bell combinatorics, boson normal ordering and the BELL Hopf algebra."""
    try:
        base = load_config(config_path)
    except ValueError as e:
        raise click.UsageError(str(e)) from e

    overrides = {
        "truncation_order": order,
        "fock_dimension": fock_dim,
        "decimal_precision": precision,
        "log_level": log_level,
    }
    try:
        config = BellHopfConfig(
            **{**base.model_dump(), **{k: v for k, v in overrides.items() if v is not None}}
        )
    except ValidationError as e:
        raise click.UsageError(f"invalid setting: {e.errors()[0]['msg']}") from e

    setup_logging(config.log_level, force=True, component="cli")
    logger.debug(f"Effective configuration: {config.model_dump()}")
    ctx.obj = {"config": config}


@cli.command("bell")
@click.argument("max_n", type=int)
@click.option("--format", "fmt", type=click.Choice(["plain", "json"]), default="plain")
@click.pass_context
@handle_errors
def cmd_bell(ctx: click.Context, max_n: int, fmt: str) -> None:
    """Table of B(0..MAX_N)."""
    config = get_config(ctx)
    if max_n < 0:
        raise DomainError(f"max-n must be non-negative, got {max_n}")
    if max_n > config.max_bell_n:
        raise BoundExceededError(f"max-n {max_n} exceeds the configured bound {config.max_bell_n}")
    values = [bell(n) for n in range(max_n + 1)]
    if fmt == "json":
        click.echo(dumps({"bell": [str(v) for v in values]}))
        return
    for n, value in enumerate(values):
        click.echo(f"{n} {value}")


@cli.command("stirling")
@click.argument("n", type=int)
@click.argument("k", type=int, required=False)
@click.pass_context
@handle_errors
def cmd_stirling(ctx: click.Context, n: int, k: int | None) -> None:
    """S(N,K), or the whole row "k S(N,k)" when K is omitted."""
    config = get_config(ctx)
    if n > config.max_bell_n:
        raise BoundExceededError(f"n {n} exceeds the configured bound {config.max_bell_n}")
    if k is not None:
        click.echo(str(stirling2(n, k)))
        return
    for index, value in enumerate(stirling_row(n)):
        click.echo(f"{index} {value}")


@cli.command("normal-order")
@click.argument("word")
@click.option("--format", "fmt", type=click.Choice(["plain", "json"]), default="plain")
@handle_errors
def cmd_normal_order(word: str, fmt: str) -> None:
    """Normal form of WORD over a (annihilator) and c (creator)."""
    nf = normal_order(BosonWord.parse(word))
    click.echo(normal_form_json(nf) if fmt == "json" else nf.render())


@cli.command("diagrams")
@click.argument("n", type=int)
@click.option("--format", "fmt", type=click.Choice(["plain", "dot", "json"]), default="plain")
@click.option("--census", "census_only", is_flag=True, help="Shape census only (closed form)")
@click.pass_context
@handle_errors
def cmd_diagrams(ctx: click.Context, n: int, fmt: str, census_only: bool) -> None:
    """Labeled diagrams on N lines with shape, code and a census footer."""
    config = get_config(ctx)
    if n < 0:
        raise DomainError(f"n must be non-negative, got {n}")

    if census_only:
        if n > config.max_census_n:
            raise BoundExceededError(f"census bound is {config.max_census_n}, got {n}")
        census = shape_census(n, method="closed")
        if fmt == "json":
            payload = [{"code": str(code_monomial(s)), "count": str(c)} for s, c in census]
            click.echo(dumps({"n": n, "census": payload}))
        else:
            click.echo(format_census(census))
        return

    if n > config.max_listing_n:
        raise BoundExceededError(
            f"full listing is limited to n <= {config.max_listing_n}; use --census for n = {n}"
        )
    diagrams = list(enumerate_labeled_diagrams(n))
    if fmt == "dot":
        click.echo(to_dot_bundle(diagrams), nl=False)
        return

    census = shape_census(n, method="enumerate")
    if fmt == "json":
        payload = {
            "n": n,
            "diagrams": [
                {
                    "blocks": [list(b) for b in d.blocks],
                    "shape": list(shape_of(d).parts),
                    "code": str(code_monomial(shape_of(d))),
                }
                for d in diagrams
            ],
            "census": [{"code": str(code_monomial(s)), "count": c} for s, c in census],
            "total": len(diagrams),
        }
        click.echo(dumps(payload))
        return

    for d in diagrams:
        shape = shape_of(d)
        click.echo(f"{d}\t{shape}\t{code_monomial(shape)}")
    click.echo(f"census: {format_census(census)}")
    click.echo(f"total: {len(diagrams)}")


@cli.command("hopf-check")
@click.argument("mode", type=click.Choice(["poly", "bell"]))
@click.argument("weight_bound", type=int, required=False)
@click.option("--samples", type=int, default=None, help="Random linear combinations")
@click.option("--seed", type=int, default=None)
@click.option("--workers", type=int, default=None, help="Worker processes")
@click.pass_context
@handle_errors
def cmd_hopf_check(
    ctx: click.Context,
    mode: str,
    weight_bound: int | None,
    samples: int | None,
    seed: int | None,
    workers: int | None,
) -> None:
    """Check the Hopf axioms of POLY or BELL up to WEIGHT_BOUND."""
    config = get_config(ctx)
    report = check_hopf_axioms(
        config.hopf_weight_bound if weight_bound is None else weight_bound,
        AlphabetSpec(mode),
        samples=config.hopf_random_samples if samples is None else samples,
        seed=config.random_seed if seed is None else seed,
        max_workers=config.max_workers if workers is None else workers,
    )
    click.echo(f"Hopf axioms for {report.alphabet.upper()}, weight <= {report.weight_bound}")
    click.echo(f"monomials checked: {report.monomials_checked} (+ e), random samples: {report.random_samples}")
    for axiom in report.axioms:
        status = "PASS" if axiom.passed else "FAIL"
        click.echo(f"{axiom.name:<20} {status} ({axiom.checked})")
        if axiom.counterexample:
            click.echo(f"  counterexample: {axiom.counterexample}")
    click.echo(f"result: {'PASS' if report.passed else 'FAIL'}")
    if not report.passed:
        sys.exit(1)


@cli.command("pfi")
@click.argument("word")
@click.option("--order", "pfi_order", type=int, default=None, help="Truncation order")
@click.option("--ybar", type=RATIONAL, default=None, help="Evaluate at ybar = |z|^2")
@click.option("--z", "z_value", type=RATIONAL, default=None, help="Evaluate at a real z")
@click.option("--symbolic", is_flag=True, help="Polynomials in ybar (default for balanced words)")
@click.option("--format", "fmt", type=click.Choice(["plain", "json"]), default="plain")
@click.pass_context
@handle_errors
def cmd_pfi(
    ctx: click.Context,
    word: str,
    pfi_order: int | None,
    ybar: Fraction | None,
    z_value: Fraction | None,
    symbolic: bool,
    fmt: str,
) -> None:
    """Moments W and cumulants V of <z|exp(x WORD)|z>."""
    config = get_config(ctx)
    order = config.truncation_order if pfi_order is None else pfi_order
    if sum(option is not None for option in (ybar, z_value)) + symbolic > 1:
        raise click.UsageError("use at most one of --ybar, --z and --symbolic")
    parsed = BosonWord.parse(word)

    if z_value is not None:
        moments, cumulants = pfi_general(parsed, order, z=z_value)
    else:
        moments, cumulants = pfi_general(parsed, order)
        if ybar is not None:
            moments = MomentSequence(tuple(w.evaluate(ybar) for w in moments.values))  # type: ignore[union-attr]
            cumulants = CumulantSequence(tuple(v.evaluate(ybar) for v in cumulants.values))  # type: ignore[union-attr]

    output = sequences_json(moments, cumulants) if fmt == "json" else sequences_text(moments, cumulants)
    click.echo(output.rstrip("\n"))


@cli.command("z", context_settings={"ignore_unknown_options": True})
@click.argument("beta_eps")
@click.option("--method", type=click.Choice(["closed", "quadrature", "both"]), default="closed")
@click.option("--upper", type=float, default=None, help="Finite part of the y-integral")
@click.option("--steps", type=int, default=None, help="Simpson panels")
@click.pass_context
@handle_errors
def cmd_z(ctx: click.Context, beta_eps: str, method: str, upper: float | None, steps: int | None) -> None:
    """Free-boson partition function 1/(1 - exp(-BETA_EPS)); BETA_EPS may be lnK."""
    config = get_config(ctx)
    digits = config.decimal_precision
    model = ModelSpec.free_boson(parse_real(beta_eps, digits))

    closed = partition_function_closed(model, digits) if method in ("closed", "both") else None
    if closed is not None:
        click.echo(f"closed:      {_number(closed, digits)}")
    if method == "closed":
        return

    result = partition_function_quadrature(
        model,
        upper=config.quadrature_upper if upper is None else upper,
        steps=config.quadrature_steps if steps is None else steps,
        precision=digits,
    )
    click.echo(f"quadrature:  {result.value}")
    click.echo(f"error bound: {result.error_bound:.3e}")
    if closed is None:
        return
    with mpmath.workdps(digits):
        difference = abs(closed - result.as_mpf())
    click.echo(f"difference:  {mpmath.nstr(difference, 3)}")
    slack = mpmath.mpf(10) ** (5 - digits)
    if difference > result.error_bound + slack:
        raise ConvergenceError(
            f"quadrature differs from the closed form by {mpmath.nstr(difference, 3)}, "
            f"above its bound {result.error_bound:.3e}"
        )


@cli.command("graph-expansion")
@click.argument("n", type=int)
@click.option("--v", "v_text", required=True, help="Comma-separated V1,V2,... (rationals)")
@click.option("--method", type=click.Choice(["closed", "enumerate", "both"]), default="closed")
@handle_errors
def cmd_graph_expansion(n: int, v_text: str, method: str) -> None:
    """W_N as a vertex-weighted sum over labeled diagrams."""
    cumulants = CumulantSequence.from_values(parse_rational_list(v_text))
    if method == "both":
        closed = graph_expansion(cumulants, n, "closed")
        enumerated = graph_expansion(cumulants, n, "enumerate")
        if closed != enumerated:
            raise DomainError(f"closed form {closed} and enumeration {enumerated} disagree")
        value = closed
    else:
        value = graph_expansion(cumulants, n, method)  # type: ignore[arg-type]
    click.echo(f"W[{n}] = {coefficient_text(value)}")
    moments = cumulants_to_moments(cumulants)
    click.echo(f"exp-series W[{n}] = {coefficient_text(moments[n])}")


@cli.command("divergence-report")
@click.argument("order", type=int)
@click.option("--format", "fmt", type=click.Choice(["plain", "json"]), default="plain")
@handle_errors
def cmd_divergence_report(order: int, fmt: str) -> None:
    """Flag the term-wise divergence of the expanded free-boson y-integral."""
    report = termwise_divergence_report(order)
    if fmt == "json":
        click.echo(report.model_dump_json())
        return
    for term in report.terms:
        powers = ",".join(map(str, term.powers))
        status = "divergent" if term.divergent else "finite"
        click.echo(f"n={term.n}  B{term.n}(y) = {term.polynomial}  powers {{{powers}}}  {status}")
    click.echo(report.conclusion)


def main() -> None:
    """Console entry point; .env files feed the BELL_HOPF_* fallbacks."""
    load_dotenv()
    cli(prog_name="bell-hopf")


if __name__ == "__main__":
    main()
