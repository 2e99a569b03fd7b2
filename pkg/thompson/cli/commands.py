"""The `thompson` command line.

Exit codes: 0 for a positive answer or success, 1 for a negative answer and
2 for bad input or an exhausted search. Listings such as `ponds` exit 0 even
when they print `none`.
"""

import functools
import logging
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import ParamSpec, TypeVar

import click
from dotenv import load_dotenv

from thompson.algebra.words import SimpleWord, Word, format_word, make_signature, parse_word
from thompson.automorphism import (
    Automorphism,
    compose,
    dumps_automorphism,
    invert,
    load_automorphism,
    load_example,
    power,
)
from thompson.config import Config, setup_logging
from thompson.conjugacy import conjugate, cycle_type, equivalence_classes
from thompson.exceptions import SearchLimitExceeded, ThompsonError
from thompson.orbits import component_type, orbit_test, order_of, quasi_normal_basis, scan_component
from thompson.power_conjugacy import power_conjugate

from .dot import emit_dot

logger = logging.getLogger(__name__)

P = ParamSpec("P")
R = TypeVar("R")

NEGATIVE, FAILURE = 1, 2


def reports_errors(command: Callable[P, R]) -> Callable[P, R]:
    """Turn package errors into a message on stderr and exit code 2."""

    @functools.wraps(command)
    def wrapper(*args: P.args, **kwargs: P.kwargs) -> R:
        try:
            return command(*args, **kwargs)
        except SearchLimitExceeded as e:
            click.echo(f"search limit exceeded: {e}", err=True)
            raise SystemExit(FAILURE) from e
        except (ThompsonError, OSError) as e:
            click.echo(f"error: {e}", err=True)
            raise SystemExit(FAILURE) from e

    return wrapper


def _automorphisms(files: Sequence[str], examples: Sequence[str], count: int) -> list[Automorphism]:
    """Files first, then bundled examples; exactly count of them."""
    if len(files) + len(examples) != count:
        raise click.UsageError(f"expected {count} automorphism(s), got {len(files) + len(examples)}")
    return [load_automorphism(path) for path in files] + [load_example(name) for name in examples]


def _simple(psi: Automorphism, text: str) -> SimpleWord:
    word = parse_word(psi.sig, text)
    if not isinstance(word, SimpleWord):
        raise click.BadParameter(f"{text!r} is not a simple word")
    return word


def _word(psi: Automorphism, text: str) -> Word:
    return parse_word(psi.sig, text)


files_argument = click.argument("files", nargs=-1, type=click.Path(exists=True, dir_okay=False))
example_option = click.option(
    "--example", "-e", "examples", multiple=True, metavar="NAME", help="Use a bundled example in place of a file."
)


@click.group()
@click.option(
    "--config",
    "workspace",
    type=click.Path(exists=True, file_okay=False),
    default=None,
    help="Directory holding config.yaml (default: $THOMPSON_WORKSPACE or the current directory).",
)
@click.option("--log-level", type=click.Choice(["debug", "info", "warning", "error"]), default=None)
@click.option("--max-steps", type=click.IntRange(min=1), default=None, help="Step cap for every bounded search.")
def main(workspace: str | None, log_level: str | None, max_steps: int | None) -> None:
    """Decision procedures for the Higman-Thompson groups G_{n,r}."""
    load_dotenv()
    Config.reset_instance()
    config = Config(workspace)
    setup_logging(log_level or config.data.logging.level, config.data.logging.filename)
    if max_steps is not None:
        config.override_search(max_steps=max_steps)
    logger.debug(f"workspace {config.workspace_path}, limits {config.data.search}")


@main.command("reduce")
@click.option("-n", "n", type=int, required=True, help="Arity n.")
@click.option("-r", "r", type=int, required=True, help="Number of generators r.")
@click.argument("word")
@reports_errors
def reduce_command(n: int, r: int, word: str) -> None:
    """Print the standard form of WORD."""
    click.echo(format_word(parse_word(make_signature(n, r), word)))


@main.command()
@files_argument
@example_option
@reports_errors
def validate(files: tuple[str, ...], examples: tuple[str, ...]) -> None:
    """Check that a file describes an automorphism and print its canonical form."""
    (psi,) = _automorphisms(files, examples, 1)
    click.echo(dumps_automorphism(psi), nl=False)


@main.command()
@files_argument
@example_option
@reports_errors
def qnf(files: tuple[str, ...], examples: tuple[str, ...]) -> None:
    """Print a quasi-normal basis with leaf types, characteristics and ponds."""
    (psi,) = _automorphisms(files, examples, 1)
    data = quasi_normal_basis(psi)
    click.echo(f"basis {data.basis}")
    for leaf in data.basis.leaves:
        kind = data.types[leaf]
        details = ""
        if leaf in data.characteristics:
            details = f" characteristic {data.characteristics[leaf]}"
        elif leaf in data.witnesses:
            witness = data.witnesses[leaf]
            details = f" via {format_word(SimpleWord(witness.leaf.generator, witness.leaf.path + witness.path))}"
            details += f" power {witness.power}"
        elif leaf in data.periods:
            details = f" period {data.periods[leaf]}"
        click.echo(f"{leaf} type {kind}{details}")
    for pond in data.ponds:
        click.echo(str(pond))


@main.command()
@files_argument
@example_option
@reports_errors
def order(files: tuple[str, ...], examples: tuple[str, ...]) -> None:
    """Print the order of the automorphism."""
    (psi,) = _automorphisms(files, examples, 1)
    value = order_of(psi)
    click.echo(f"order {'infinite' if value is None else value}")


@main.command()
@files_argument
@example_option
@click.option("--word", "-w", required=True, help="A simple word below the quasi-normal basis.")
@reports_errors
def orbit(files: tuple[str, ...], examples: tuple[str, ...], word: str) -> None:
    """Print the component type and the scanned segment of the orbit of a word."""
    (psi,) = _automorphisms(files, examples, 1)
    start = _simple(psi, word)
    data = quasi_normal_basis(psi)
    click.echo(f"component {component_type(psi, data, start)}")
    scan = scan_component(psi, data.basis, start)
    for index, element in sorted(scan.indexed(), key=lambda item: item[0]):
        click.echo(f"{index} {format_word(element)}")


@main.command("share-orbit")
@click.argument("operands", nargs=-1, metavar="[FILE] U V")
@example_option
@reports_errors
def share_orbit(operands: tuple[str, ...], examples: tuple[str, ...]) -> None:
    """Decide whether V = U psi^m for some m."""
    if len(operands) < 2:
        raise click.UsageError("expected the words U and V")
    *files, source, target = operands
    (psi,) = _automorphisms(files, examples, 1)
    answer = orbit_test(psi, _word(psi, source), _word(psi, target))
    if not answer.related:
        click.echo("unrelated")
        raise SystemExit(NEGATIVE)
    click.echo(f"related shift={answer.shift}")


@main.command()
@files_argument
@example_option
@reports_errors
def ponds(files: tuple[str, ...], examples: tuple[str, ...]) -> None:
    """List the ponds of the automorphism."""
    (psi,) = _automorphisms(files, examples, 1)
    found = quasi_normal_basis(psi).ponds
    for pond in found:
        click.echo(str(pond))
    if not found:
        click.echo("none")


@main.command("compose")
@files_argument
@example_option
@reports_errors
def compose_command(files: tuple[str, ...], examples: tuple[str, ...]) -> None:
    """Print psi followed by phi."""
    psi, phi = _automorphisms(files, examples, 2)
    click.echo(dumps_automorphism(compose(psi, phi)), nl=False)


@main.command("invert")
@files_argument
@example_option
@reports_errors
def invert_command(files: tuple[str, ...], examples: tuple[str, ...]) -> None:
    """Print the inverse."""
    (psi,) = _automorphisms(files, examples, 1)
    click.echo(dumps_automorphism(invert(psi)), nl=False)


@main.command("power")
@files_argument
@example_option
@click.option("--exponent", "-k", type=int, required=True)
@reports_errors
def power_command(files: tuple[str, ...], examples: tuple[str, ...], exponent: int) -> None:
    """Print psi^k."""
    (psi,) = _automorphisms(files, examples, 1)
    click.echo(dumps_automorphism(power(psi, exponent)), nl=False)


@main.command("conjugate")
@files_argument
@example_option
@reports_errors
def conjugate_command(files: tuple[str, ...], examples: tuple[str, ...]) -> None:
    """Decide whether rho^-1 psi rho = phi and print rho."""
    psi, phi = _automorphisms(files, examples, 2)
    certificate = conjugate(psi, phi)
    if not certificate.conjugate:
        click.echo(f"not-conjugate {certificate.reason}")
        raise SystemExit(NEGATIVE)
    click.echo("conjugate")
    click.echo(dumps_automorphism(certificate.conjugator), nl=False)


@main.command("power-conjugate")
@files_argument
@example_option
@reports_errors
def power_conjugate_command(files: tuple[str, ...], examples: tuple[str, ...]) -> None:
    """Find the pairs (a, b) with psi^a conjugate to phi^b."""
    psi, phi = _automorphisms(files, examples, 2)
    result = power_conjugate(psi, phi)
    if not result.solvable:
        click.echo("none")
    for pair in result.pairs:
        click.echo(f"pair a={pair.a} b={pair.b} g={'free' if pair.g is None else pair.g}")
        click.echo(dumps_automorphism(pair.conjugator), nl=False)
    a_hat, b_hat = result.bounds
    click.echo(f"bounds a_hat={a_hat} b_hat={b_hat}")
    if not result.solvable:
        raise SystemExit(NEGATIVE)


@main.command()
@files_argument
@example_option
@click.option("--output", "-o", type=click.Path(dir_okay=False, path_type=Path), default=None)
@reports_errors
def dot(files: tuple[str, ...], examples: tuple[str, ...], output: Path | None) -> None:
    """Write the tree pair diagram in DOT."""
    (psi,) = _automorphisms(files, examples, 1)
    text = emit_dot(psi)
    if output is None:
        click.echo(text, nl=False)
    else:
        output.write_text(text, encoding="utf-8")


@main.command()
@files_argument
@example_option
@reports_errors
def multipliers(files: tuple[str, ...], examples: tuple[str, ...]) -> None:
    """Print the multiplier set of a regular infinite automorphism."""
    (psi,) = _automorphisms(files, examples, 1)
    for characteristic in sorted(quasi_normal_basis(psi).multipliers):
        click.echo(str(characteristic))


@main.command()
@files_argument
@example_option
@reports_errors
def classes(files: tuple[str, ...], examples: tuple[str, ...]) -> None:
    """Print the equivalence classes of the quasi-normal basis."""
    (psi,) = _automorphisms(files, examples, 1)
    for members in equivalence_classes(psi):
        click.echo(" | ".join(format_word(leaf) for leaf in sorted(members)))


@main.command("cycle-type")
@files_argument
@example_option
@reports_errors
def cycle_type_command(files: tuple[str, ...], examples: tuple[str, ...]) -> None:
    """Print the cycle type of a periodic automorphism as size:multiplicity."""
    (psi,) = _automorphisms(files, examples, 1)
    click.echo(str(cycle_type(psi)))
