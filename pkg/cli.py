"""
Command-line entry point.

    python cli.py build --design oop-proposed --n 4 --level macro --out adder.qasm
    python cli.py verify --design ip-proposed --n 3 --exhaustive
    python cli.py table --which 1 --n 4 --n 8 --format csv
    python cli.py simulate --design oop-proposed --n 4 --a 5 --b 7

JSON goes to stdout, logs to stderr. Exit codes: 0 success, 1 domain or
runtime failure, 2 usage error.
"""
import functools
import json
import logging
import sys

import click

from builders import registry
from resources.tables import rows_to_csv, table_rows
from utils.qasm import EmitLevel, emit


def _echo_json(payload):
    click.echo(json.dumps(payload, indent=2))


def domain_errors(command):
    """Turn domain errors into exit code 1 with the message on stderr."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ValueError as e:
            click.echo(f"❌ {e}", err=True)
            sys.exit(1)
    return wrapper


def _parse_inputs(pairs, a=None, b=None):
    inputs = {}
    if a is not None:
        inputs["A"] = a
    if b is not None:
        inputs["B"] = b
    for pair in pairs:
        name, sep, value = pair.partition("=")
        if not sep or not name:
            raise click.BadParameter(f"expected NAME=VALUE, got {pair!r}", param_hint="--input")
        try:
            inputs[name.strip()] = int(value, 0)
        except ValueError:
            raise click.BadParameter(f"{value!r} is not an integer", param_hint="--input")
    return inputs


design_option = click.option("--design", required=True, type=click.Choice(registry.DESIGN_NAMES))
n_option = click.option("--n", "n", required=True, type=int, help="Adder width or scale exponent.")
m_option = click.option("--m", "m", type=int, default=None, help="Coordinate bits (bilinear).")
color_option = click.option("--color-width", type=int, default=None, help="Color bits (bilinear).")
engine_option = click.option("--engine", type=click.Choice(["boolean", "sparse"]), default="boolean",
                             show_default=True)


@click.group()
@click.option("-v", "--verbose", count=True, help="-v for INFO, -vv for DEBUG.")
def cli(verbose):
    """Quantum carry-lookahead adders and the arithmetic built on them."""
    level = {0: logging.WARNING, 1: logging.INFO}.get(verbose, logging.DEBUG)
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s")


# ------------------- BUILD -------------------
@cli.command()
@design_option
@n_option
@m_option
@color_option
@click.option("--level", type=click.Choice([level.value for level in EmitLevel]), default="macro",
              show_default=True)
@click.option("--out", "out_path", type=click.Path(dir_okay=False, writable=True), default=None,
              help="QASM destination; omitted prints the QASM instead of the report.")
@domain_errors
def build(design, n, m, color_width, level, out_path):
    """Build a circuit and write it as QASM."""
    circuit = registry.build(design, n, m, color_width)
    text = emit(circuit, level)
    if out_path is None:
        click.echo(text, nl=False)
        return
    with open(out_path, "w", encoding="utf-8", newline="\n") as handle:
        handle.write(text)
    logging.getLogger(__name__).info(f"✅ Wrote {out_path}")
    _echo_json(registry.resource_report(design, circuit, n))


# ------------------- VERIFY -------------------
@cli.command()
@design_option
@n_option
@m_option
@color_option
@click.option("--exhaustive", is_flag=True, help="Every input combination (default without --samples).")
@click.option("--samples", type=click.IntRange(min=1), default=None, help="Number of random cases.")
@click.option("--seed", type=int, default=None, help="Seed for --samples.")
@engine_option
@domain_errors
def verify(design, n, m, color_width, exhaustive, samples, seed, engine):
    """Check a design against its classical oracle."""
    if exhaustive and samples is not None:
        raise click.UsageError("--exhaustive and --samples are mutually exclusive")
    if samples is not None and seed is None:
        raise click.UsageError("--samples needs --seed")
    report = registry.verify_design(design, n, m, color_width, exhaustive=samples is None,
                                    samples=samples, seed=seed, engine=engine)
    _echo_json(report.to_dict())
    if not report.passed:
        sys.exit(1)


# ------------------- TABLE -------------------
@cli.command()
@click.option("--which", required=True, type=click.IntRange(1, 2), help="1 out-of-place, 2 in-place.")
@click.option("--n", "widths", required=True, type=int, multiple=True)
@click.option("--format", "fmt", type=click.Choice(["json", "csv"]), default="json", show_default=True)
@domain_errors
def table(which, widths, fmt):
    """Comparison table rows: printed formula, value and constructed T-count."""
    rows = table_rows(which, list(widths))
    if fmt == "csv":
        click.echo(rows_to_csv(rows), nl=False)
    else:
        _echo_json(rows)


# ------------------- SIMULATE -------------------
@cli.command()
@design_option
@n_option
@m_option
@color_option
@click.option("--a", type=int, default=None, help="Shorthand for --input A=VALUE.")
@click.option("--b", type=int, default=None, help="Shorthand for --input B=VALUE.")
@click.option("--input", "pairs", multiple=True, help="NAME=VALUE for any input register.")
@engine_option
@domain_errors
def simulate(design, n, m, color_width, a, b, pairs, engine):
    """Run one input and print the output registers."""
    inputs = _parse_inputs(pairs, a, b)
    _echo_json(registry.simulate_design(design, n, inputs, m, color_width, engine=engine))


if __name__ == "__main__":
    cli()
