"""Hopf algebras of permutations (SSym) and quasi-symmetric functions (QSym).

Elements are finite integer combinations of basis elements tagged by space:
``F``/``M`` for SSym (indexed by permutations), ``Fq``/``Mq`` for QSym
(indexed by compositions).
"""

from ._config import DEFAULT_MAX_DEGREE, get_max_degree, max_degree, set_max_degree
from ._kernels import BACKEND
from .errors import (
    DegreeGuardError,
    DegreeMismatch,
    ElementSyntaxError,
    InternalConsistencyError,
    InvalidComposition,
    InvalidPermutation,
    PermhopfError,
    SpaceMismatch,
)
from .formal import (
    QSYM_F,
    QSYM_M,
    SSYM_F,
    SSYM_M,
    Element,
    Tensor,
    antipode,
    coproduct,
    counit,
    product,
    takeuchi_antipode,
    verify_hopf_axioms,
)
from .orders import Composition, weak_leq, weak_mobius, z_of
from .permcore import DescentSet, Permutation, descents, global_descents
from .syntax import element_from_json, element_to_json, parse_element

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Composition",
    "DEFAULT_MAX_DEGREE",
    "DegreeGuardError",
    "DegreeMismatch",
    "DescentSet",
    "Element",
    "ElementSyntaxError",
    "InternalConsistencyError",
    "InvalidComposition",
    "InvalidPermutation",
    "Permutation",
    "PermhopfError",
    "QSYM_F",
    "QSYM_M",
    "SSYM_F",
    "SSYM_M",
    "SpaceMismatch",
    "Tensor",
    "antipode",
    "coproduct",
    "counit",
    "descents",
    "element_from_json",
    "element_to_json",
    "get_max_degree",
    "global_descents",
    "max_degree",
    "parse_element",
    "product",
    "set_max_degree",
    "takeuchi_antipode",
    "verify_hopf_axioms",
    "weak_leq",
    "weak_mobius",
    "z_of",
]
