"""State type definitions for the LangGraph pipelines."""

from typing import Annotated, List
from typing_extensions import TypedDict
import operator

from ..embedding.elimination import EliminationStep
from ..invariant.cofactors import CofactorMatrix, IdealPresentation
from ..invariant.extraction import QHResult
from ..normalform.poincare_dulac import NormalFormCertificate
from ..polyring.polynomial import PolyMap
from ..spectrum.ordering import OrderedSpectrum
from ..utils.config import PipelineOptions
from ..utils.linalg import Matrix


class QuasiHomogenizeState(TypedDict, total=False):
    """State for the quasi-homogenization sequence."""
    map: PolyMap
    ideal: IdealPresentation
    options: PipelineOptions
    normal_form: NormalFormCertificate
    spectrum: OrderedSpectrum
    truncation: int
    transported: IdealPresentation
    minimal: IdealPresentation
    cofactor_matrix: CofactorMatrix
    jordanized: IdealPresentation
    transition: Matrix
    result: QHResult
    log: Annotated[List[str], operator.add]


class EmbeddingState(TypedDict, total=False):
    """State for the embedding-reduction supervisor loop."""
    original: IdealPresentation
    ideal: IdealPresentation
    truncation: int
    variables: List[int]
    steps: Annotated[List[EliminationStep], operator.add]
    next: str
