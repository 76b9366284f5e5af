"""JSON documents for problems, spectra, normal forms, results and embedding reports.

Documents are written with sorted keys and a fixed indent so identical inputs
give byte-identical files. Numbers and polynomials travel as strings in their
exact textual form.
"""

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from ..embedding.checks import EmbeddingReport, ExtensionReport
from ..embedding.elimination import EmbeddingReduction
from ..exactnum.numbers import GaussianRational, format_gaussian, parse_gaussian
from ..invariant.cofactors import IdealPresentation
from ..invariant.extraction import EqualityCertificate, FiltrationCertificate, QHResult
from ..normalform.poincare_dulac import NormalFormCertificate
from ..polyring.parsing import default_variables, format_polynomial, parse_polynomial
from ..polyring.polynomial import PolyMap, Polynomial
from ..spectrum.classes import weight_class
from ..spectrum.lattice import relation_lattice, weight_vector
from ..spectrum.ordering import OrderedSpectrum
from ..spectrum.resonance import resonance_bound, resonance_set
from ..utils.errors import ParseError, QuasiHomError

FORMAT_VERSION = 1

PROBLEM = "quasihom-problem"
SPECTRUM = "quasihom-spectrum"
NORMAL_FORM = "quasihom-normal-form"
RESULT = "quasihom-result"
EMBEDDING = "quasihom-embedding"

Document = Dict[str, Any]


@dataclass(frozen=True)
class Problem:
    """A parsed problem file."""

    variables: Tuple[str, ...]
    map: Optional[PolyMap] = None
    ideal: Optional[IdealPresentation] = None
    degree: Optional[int] = None
    class_bound: Optional[Tuple[int, ...]] = None
    output: Optional[str] = None

    @property
    def dimension(self) -> int:
        return len(self.variables)


# Reading


def read_document(source: Union[str, Path]) -> Document:
    """Parse a JSON document from a path, reporting syntax errors with line and column."""
    path = Path(source)
    try:
        text = path.read_text()
    except OSError as err:
        raise ParseError(f"cannot read {path}: {err.strerror}", field="file") from None
    return parse_document(text)


def parse_document(text: str) -> Document:
    try:
        document = json.loads(text)
    except json.JSONDecodeError as err:
        raise ParseError(err.msg, field="document", line=err.lineno, column=err.colno) from None
    if not isinstance(document, dict):
        raise ParseError("expected a JSON object", field="document")
    return document


def check_header(document: Document, *formats: str) -> str:
    """The document's format, after checking it is one of `formats` at the supported version."""
    kind = document.get("format")
    if kind not in formats:
        raise ParseError(f"expected format {' or '.join(formats)}, got {kind!r}", field="format")
    version = document.get("version")
    if version != FORMAT_VERSION:
        raise ParseError(f"unsupported version {version!r}, this build reads version {FORMAT_VERSION}", field="version")
    return kind


def _require(document: Document, key: str, kind: type, field: Optional[str] = None):
    if key not in document:
        raise ParseError("missing", field=field or key)
    value = document[key]
    if not isinstance(value, kind):
        raise ParseError(f"expected {kind.__name__}", field=field or key)
    return value


def _polynomials(texts: Sequence[Any], variables: Sequence[str], field: str) -> List[Polynomial]:
    result = []
    for k, text in enumerate(texts):
        if not isinstance(text, str):
            raise ParseError("expected a polynomial string", field=f"{field}[{k}]")
        result.append(parse_polynomial(text, variables, field=f"{field}[{k}]"))
    return result


def _poly_map(texts: Sequence[Any], variables: Sequence[str], field: str) -> PolyMap:
    components = _polynomials(texts, variables, field)
    if len(components) != len(variables):
        raise ParseError(f"expected {len(variables)} components, got {len(components)}", field=field)
    try:
        return PolyMap(components, len(variables))
    except ValueError as err:
        raise ParseError(str(err), field=field) from None


def _ideal(texts: Sequence[Any], variables: Sequence[str], field: str) -> IdealPresentation:
    try:
        return IdealPresentation(tuple(_polynomials(texts, variables, field)), len(variables))
    except ValueError as err:
        raise ParseError(str(err), field=field) from None


def _poly_matrix(rows: Sequence[Sequence[Any]], variables: Sequence[str], field: str):
    return tuple(tuple(_polynomials(row, variables, f"{field}[{k}]")) for k, row in enumerate(rows))


def _scalar_matrix(rows: Sequence[Sequence[Any]], field: str):
    if not all(isinstance(row, list) and all(isinstance(c, str) for c in row) for row in rows):
        raise ParseError("expected a matrix of coefficient strings", field=field)
    return tuple(tuple(parse_gaussian(c) for c in row) for row in rows)


def _exponent(value: Any, field: str) -> Tuple[int, ...]:
    if not isinstance(value, list) or not all(isinstance(a, int) and a >= 0 for a in value):
        raise ParseError("expected a list of non-negative integers", field=field)
    return tuple(value)


def problem_from_document(document: Document) -> Problem:
    check_header(document, PROBLEM)
    texts_map = document.get("map")
    texts_ideal = document.get("ideal")
    dimension = document.get("dimension")
    variables = document.get("variables")
    if dimension is None:
        if variables is not None:
            dimension = len(variables)
        elif texts_map is not None:
            dimension = len(texts_map)
        else:
            raise ParseError("cannot infer the dimension", field="dimension")
    if not isinstance(dimension, int) or dimension < 1:
        raise ParseError("expected a positive integer", field="dimension")
    if variables is None:
        variables = default_variables(dimension)
    if len(variables) != dimension or len(set(variables)) != dimension:
        raise ParseError(f"expected {dimension} distinct variable names", field="variables")

    options = document.get("options") or {}
    degree = options.get("degree")
    if degree is not None and (not isinstance(degree, int) or degree < 1):
        raise ParseError("expected a positive integer", field="options.degree")
    bound = options.get("class_bound")
    return Problem(
        variables=tuple(variables),
        map=_poly_map(texts_map, variables, "map") if texts_map is not None else None,
        ideal=_ideal(texts_ideal, variables, "ideal") if texts_ideal is not None else None,
        degree=degree,
        class_bound=_exponent(bound, "options.class_bound") if bound is not None else None,
        output=options.get("output"),
    )


def load_problem(source: Union[str, Path]) -> Problem:
    """Read and validate a problem file."""
    return problem_from_document(read_document(source))


# Writing


def dump_json(document: Document, path: Optional[Union[str, Path]] = None) -> str:
    """Canonical text of a document; also written to `path` when given."""
    text = json.dumps(document, sort_keys=True, indent=2, ensure_ascii=False) + "\n"
    if path is not None:
        Path(path).write_text(text)
    return text


def _header(kind: str) -> Document:
    return {"format": kind, "version": FORMAT_VERSION}


def _scalars(values: Sequence[GaussianRational]) -> List[str]:
    return [format_gaussian(GaussianRational.coerce(c)) for c in values]


def _matrix(rows) -> List[List[str]]:
    return [_scalars(row) for row in rows]


def _texts(polynomials: Sequence[Polynomial], variables: Sequence[str]) -> List[str]:
    return [format_polynomial(P, variables) for P in polynomials]


def _spectrum_fields(spectrum: OrderedSpectrum) -> Document:
    return {"spectrum": _scalars(spectrum.entries), "jordan": list(spectrum.jordan_flags)}


def _spectrum_from(document: Document) -> OrderedSpectrum:
    entries = tuple(parse_gaussian(text) for text in _require(document, "spectrum", list))
    flags = tuple(bool(flag) for flag in document.get("jordan", [False] * max(len(entries) - 1, 0)))
    return OrderedSpectrum(entries, flags)


def spectrum_to_document(spectrum: OrderedSpectrum) -> Document:
    """Ordered spectrum with resonances, relation lattice and weights."""
    document = _header(SPECTRUM)
    document.update(_spectrum_fields(spectrum))
    document["contracting"] = True
    document["resonance_bound"] = resonance_bound(spectrum)
    document["resonances"] = [[list(alpha) for alpha in resonance_set(spectrum, i)] for i in range(spectrum.dimension)]
    document["relation_lattice"] = [list(v) for v in relation_lattice(spectrum).basis]
    document["weights"] = list(weight_vector(spectrum))
    return document


def normal_form_to_document(cert: NormalFormCertificate, variables: Sequence[str]) -> Document:
    document = _header(NORMAL_FORM)
    document.update(_spectrum_fields(cert.spectrum))
    document["variables"] = list(variables)
    document["truncation_degree"] = cert.truncation_degree
    document["original"] = _texts(cert.original.components, variables)
    document["normalized"] = _texts(cert.normalized.components, variables)
    document["conjugacy"] = _texts(cert.conjugacy.components, variables)
    return document


def normal_form_from_document(document: Document) -> NormalFormCertificate:
    check_header(document, NORMAL_FORM)
    variables = _require(document, "variables", list)
    return NormalFormCertificate(
        original=_poly_map(_require(document, "original", list), variables, "original"),
        normalized=_poly_map(_require(document, "normalized", list), variables, "normalized"),
        conjugacy=_poly_map(_require(document, "conjugacy", list), variables, "conjugacy"),
        truncation_degree=_require(document, "truncation_degree", int),
        spectrum=_spectrum_from(document),
    )


def certificate_to_document(
    equality: Optional[EqualityCertificate],
    filtration: Optional[FiltrationCertificate],
    variables: Sequence[str],
) -> Document:
    """Both membership directions and the filtration witnesses."""
    document: Document = {}
    if equality is not None:
        document["equality"] = {
            "B": [_texts(row, variables) for row in equality.B],
            "B0": _matrix(equality.B0),
            "inverse_witness": [_texts(row, variables) for row in equality.inverse_witness],
            "truncation_degree": equality.truncation_degree,
            "essential": list(equality.essential),
        }
    if filtration is not None:
        document["filtration"] = {
            "holds": filtration.holds,
            "failing_index": filtration.failing_index,
            "cofactors": [_texts(row, variables) for row in filtration.cofactors],
        }
    return document


def certificates_from_document(
    document: Document, variables: Sequence[str]
) -> Tuple[Optional[EqualityCertificate], Optional[FiltrationCertificate]]:
    equality = filtration = None
    if document.get("equality") is not None:
        data = document["equality"]
        equality = EqualityCertificate(
            B=_poly_matrix(_require(data, "B", list, "equality.B"), variables, "equality.B"),
            B0=_scalar_matrix(_require(data, "B0", list, "equality.B0"), "equality.B0"),
            inverse_witness=_poly_matrix(
                _require(data, "inverse_witness", list, "equality.inverse_witness"),
                variables,
                "equality.inverse_witness",
            ),
            truncation_degree=_require(data, "truncation_degree", int, "equality.truncation_degree"),
            essential=tuple(_require(data, "essential", list, "equality.essential")),
        )
    if document.get("filtration") is not None:
        data = document["filtration"]
        filtration = FiltrationCertificate(
            cofactors=_poly_matrix(_require(data, "cofactors", list, "filtration.cofactors"), variables, "filtration.cofactors"),
            holds=bool(_require(data, "holds", bool, "filtration.holds")),
            failing_index=data.get("failing_index"),
        )
    return equality, filtration


def result_to_document(result: QHResult, variables: Sequence[str]) -> Document:
    document = _header(RESULT)
    document.update(_spectrum_fields(result.spectrum))
    document["variables"] = list(variables)
    document["truncation_degree"] = result.truncation_degree
    document["class_bound"] = list(result.class_bound.representative) if result.class_bound else None
    document["ideal"] = _texts(result.input_generators, variables)
    document["generators"] = _texts(result.source_generators, variables)
    document["P"] = _texts(result.generators_P, variables)
    document["classes"] = [list(gamma.representative) for gamma in result.classes]
    document["weights"] = list(result.weights)
    document["degrees"] = list(result.degrees)
    document["basis_change"] = _matrix(result.basis_change)
    document["A0"] = _matrix(result.a0)
    if result.normal_form is not None:
        document["normal_form"] = normal_form_to_document(result.normal_form, variables)
    document["certificates"] = certificate_to_document(result.equality, result.filtration, variables)
    return document


def result_from_document(document: Document) -> QHResult:
    check_header(document, RESULT)
    variables = _require(document, "variables", list)
    spectrum = _spectrum_from(document)
    try:
        classes = tuple(
            weight_class(spectrum, _exponent(rep, f"classes[{k}]"))
            for k, rep in enumerate(_require(document, "classes", list))
        )
        bound = document.get("class_bound")
        class_bound = weight_class(spectrum, _exponent(bound, "class_bound")) if bound is not None else None
    except QuasiHomError as err:
        raise ParseError(str(err), field="classes") from None
    normal_form = None
    if document.get("normal_form") is not None:
        normal_form = normal_form_from_document(document["normal_form"])
    equality, filtration = certificates_from_document(document.get("certificates") or {}, variables)
    return QHResult(
        generators_P=tuple(_polynomials(_require(document, "P", list), variables, "P")),
        classes=classes,
        weights=tuple(_require(document, "weights", list)),
        degrees=tuple(_require(document, "degrees", list)),
        basis_change=_scalar_matrix(_require(document, "basis_change", list), "basis_change"),
        spectrum=spectrum,
        source_generators=tuple(_polynomials(_require(document, "generators", list), variables, "generators")),
        a0=_scalar_matrix(_require(document, "A0", list), "A0"),
        truncation_degree=_require(document, "truncation_degree", int),
        class_bound=class_bound,
        equality=equality,
        filtration=filtration,
        normal_form=normal_form,
        normalized_map=normal_form.normalized if normal_form is not None else None,
        input_generators=tuple(_polynomials(document.get("ideal", []), variables, "ideal")),
    )


def embedding_to_document(
    report: EmbeddingReport,
    reduction: EmbeddingReduction,
    variables: Sequence[str],
    extension: Optional[ExtensionReport] = None,
) -> Document:
    document = _header(EMBEDDING)
    document["variables"] = list(variables)
    document["in_m2"] = report.in_m2
    document["offending_generator"] = report.offending_generator
    document["linear_part"] = _matrix(report.linear_part)
    remaining = [variables[k] for k in reduction.variables]
    steps = []
    current = list(variables)
    for step in reduction.steps:
        steps.append(
            {
                "variable": variables[step.original_variable],
                "generator": step.generator,
                "solution": format_polynomial(step.solution, current),
                "truncation": step.truncation,
            }
        )
        del current[step.variable]
    document["reduction"] = {
        "embedding_dimension": reduction.embedding_dimension,
        "variables": remaining,
        "ideal": _texts(reduction.reduced.generators, remaining),
        "steps": steps,
        "truncation": reduction.truncation,
    }
    if extension is not None:
        document["extension"] = {
            "invertible": extension.invertible,
            "contracting": extension.contracting,
            "invariant": extension.invariant,
            "failing_generator": extension.failing_generator,
        }
    return document
