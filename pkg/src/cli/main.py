"""Command-line front-end.

Exit codes: 0 success, 1 parse error, 2 not contracting, 3 irrational
spectrum, 4 not invariant, 5 internal invariant violation.
"""

import functools
import logging
from typing import Optional

import click

from ..embedding.checks import check_extension, check_m2
from ..graphs.embedding import reduce_embedding
from ..graphs.homogenize import quasi_homogenize
from ..normalform.poincare_dulac import poincare_dulac, spectrum_of, verify_conjugacy
from ..polyring.parsing import format_polynomial
from ..polyring.polynomial import Polynomial
from ..spectrum.classes import weight_class
from ..spectrum.resonance import resonance_bound
from ..utils.config import get_options, parse_exponent, setup_environment
from ..utils.errors import CertificationError, NotInvariant, ParseError, QuasiHomError
from .certify import certify_document
from .codec import (
    Problem,
    dump_json,
    embedding_to_document,
    load_problem,
    normal_form_to_document,
    read_document,
    result_to_document,
    spectrum_to_document,
)

logger = logging.getLogger(__name__)


def _common_options(command):
    """--degree, --class-bound, --output and --verbose."""
    command = click.option("--verbose", is_flag=True, help="Log every stage and per-degree solve")(command)
    command = click.option("-o", "--output", type=click.Path(dir_okay=False), help="Write the JSON document here")(command)
    command = click.option("--class-bound", help="Largest lambda-class constrained, as an exponent like 5,0")(command)
    command = click.option("--degree", type=int, help="Truncation degree N")(command)
    return command


def _exit_codes(command):
    """Turn library errors into the documented exit status."""

    @functools.wraps(command)
    def run(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except NotInvariant as err:
            failing = err.failing_class.representative if err.failing_class is not None else None
            click.echo(f"error: {err} (generator {err.index}, class {failing})", err=True)
            raise SystemExit(err.exit_code)
        except QuasiHomError as err:
            click.echo(f"error: {err}", err=True)
            raise SystemExit(err.exit_code)

    return run


def _setup(verbose: bool) -> None:
    setup_environment("DEBUG" if verbose else None)


def _options(problem: Problem, degree: Optional[int], class_bound: Optional[str], verbose: bool):
    bound = parse_exponent(class_bound, "--class-bound") if class_bound else problem.class_bound
    return get_options(degree=degree or problem.degree, class_bound=bound, verbose=verbose or None)


def _require_map(problem: Problem):
    if problem.map is None:
        raise ParseError("the problem has no map", field="map")
    return problem.map


def _emit(document, output: Optional[str]) -> None:
    text = dump_json(document, output)
    if output is None:
        click.echo(text, nl=False)
    else:
        click.echo(f"Written to {output}")


@click.group()
def main():
    """Exact Poincare-Dulac normal forms and weighted homogeneous generators of invariant ideals."""


@main.command()
@click.argument("problem_file", type=click.Path(exists=True, dir_okay=False))
@_common_options
@_exit_codes
def spectrum(problem_file, degree, class_bound, output, verbose):
    """Ordered spectrum, resonances, relation lattice and weights of the map."""
    _setup(verbose)
    problem = load_problem(problem_file)
    ordered = spectrum_of(_require_map(problem))
    document = spectrum_to_document(ordered)
    if output is not None:
        dump_json(document, output)
    names = problem.variables
    click.echo(f"spectrum:    {', '.join(document['spectrum'])}")
    click.echo("contracting: yes")
    for i, exponents in enumerate(document["resonances"]):
        monomials = [format_polynomial(Polynomial.monomial(tuple(alpha)), names) for alpha in exponents]
        click.echo(f"resonances of {names[i]}: {{{', '.join(monomials)}}}")
    click.echo(f"relation lattice: {document['relation_lattice']}")
    click.echo(f"weights:     {', '.join(str(n) for n in document['weights'])}")


@main.command("normal-form")
@click.argument("problem_file", type=click.Path(exists=True, dir_okay=False))
@_common_options
@_exit_codes
def normal_form(problem_file, degree, class_bound, output, verbose):
    """Conjugate the map to Poincare-Dulac normal form and write the certificate."""
    _setup(verbose)
    problem = load_problem(problem_file)
    F = _require_map(problem)
    N = degree or problem.degree or max(F.degree, resonance_bound(spectrum_of(F)) + 2)
    cert = poincare_dulac(F, N)
    _emit(normal_form_to_document(cert, problem.variables), output or problem.output)
    if not verify_conjugacy(cert):
        raise CertificationError("conjugacy does not verify")


@main.command("quasi-homogenize")
@click.argument("problem_file", type=click.Path(exists=True, dir_okay=False))
@_common_options
@_exit_codes
def quasi_homogenize_command(problem_file, degree, class_bound, output, verbose):
    """Weighted homogeneous generators of the invariant ideal, with certificates."""
    _setup(verbose)
    problem = load_problem(problem_file)
    F = _require_map(problem)
    if problem.ideal is None:
        raise ParseError("the problem has no ideal", field="ideal")
    result = quasi_homogenize(problem.ideal, F, _options(problem, degree, class_bound, verbose))
    _emit(result_to_document(result, problem.variables), output or problem.output)
    if result.equality is None or result.filtration is None or not result.filtration.holds:
        raise CertificationError("certificates are incomplete")


@main.command("embed-check")
@click.argument("problem_file", type=click.Path(exists=True, dir_okay=False))
@_common_options
@_exit_codes
def embed_check(problem_file, degree, class_bound, output, verbose):
    """Embedding dimension of the ideal and, with a map, the checks on the extension."""
    _setup(verbose)
    problem = load_problem(problem_file)
    if problem.ideal is None:
        raise ParseError("the problem has no ideal", field="ideal")
    ideal = problem.ideal
    N = degree or problem.degree or max(ideal.degree, 1) + 2
    report = check_m2(ideal)
    reduction = reduce_embedding(ideal, N)
    extension = None
    if problem.map is not None:
        options = _options(problem, degree, class_bound, verbose)
        bound = None
        if options.class_bound is not None:
            bound = weight_class(spectrum_of(problem.map), options.class_bound)
        extension = check_extension(problem.map, ideal, bound, N)
    _emit(embedding_to_document(report, reduction, problem.variables, extension), output or problem.output)


@main.command()
@click.argument("document_file", type=click.Path(exists=True, dir_okay=False))
@click.option("--verbose", is_flag=True, help="Log every check")
@_exit_codes
def certify(document_file, verbose):
    """Re-verify a normal-form or result document from scratch."""
    _setup(verbose)
    passed = certify_document(read_document(document_file))
    click.echo(f"ok: {', '.join(passed)}")


if __name__ == "__main__":
    main()
