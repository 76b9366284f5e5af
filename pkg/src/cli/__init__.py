"""Command-line front-end and JSON document codecs."""

from .certify import certify_document, certify_normal_form, certify_result
from .codec import (
    FORMAT_VERSION,
    Problem,
    certificate_to_document,
    certificates_from_document,
    dump_json,
    embedding_to_document,
    load_problem,
    normal_form_from_document,
    normal_form_to_document,
    parse_document,
    problem_from_document,
    read_document,
    result_from_document,
    result_to_document,
    spectrum_to_document,
)
from .main import main

__all__ = [
    "certify_document",
    "certify_normal_form",
    "certify_result",
    "FORMAT_VERSION",
    "Problem",
    "certificate_to_document",
    "certificates_from_document",
    "dump_json",
    "embedding_to_document",
    "load_problem",
    "normal_form_from_document",
    "normal_form_to_document",
    "parse_document",
    "problem_from_document",
    "read_document",
    "result_from_document",
    "result_to_document",
    "spectrum_to_document",
    "main",
]
