"""Schubert structure constants for boolean elements of finite Weyl groups.

The main entry points are :func:`equivariant_constant` and
:func:`ordinary_constant`, which evaluate the boolean insertion formula, and
:func:`find_insertion_path_type_a`, the quadratic search in type A.  The
oracles in :mod:`boolean_schubert.oracle` compute the same numbers from
scratch for cross-checking.
"""

from .boolean_core import (
    BooleanElement,
    NotBooleanError,
    accessible_subgraph,
    diagram_contains,
    element_from_json,
    element_to_json,
    element_to_text,
    enumerate_boolean,
    from_diagram,
    from_reduced_word,
    identity,
    induced,
    parse_element,
    reduced_words,
    sub_elements,
    to_reduced_word,
)
from .constants import OrderingMismatchError, constant_table, equivariant_constant, ordinary_constant
from .fast_path import fast_ordinary_constant_type_a, find_insertion_path_type_a, insertion_order_type_a
from .insertion import (
    InsertionPath,
    InsertionStep,
    StepKind,
    boolean_product_expansion,
    chevalley_boolean_product,
    enumerate_paths,
    insertion_targets,
    step_multiplicity,
    step_weight,
)
from .oracle import ResourceLimitError, chevalley_constant, kk_constant
from .polynomial import Polynomial, RootPolynomial, WeightPolynomial
from .root_system import InvalidRootSystemError, RootSystem, build_root_system, positive_roots, reflect

__version__ = "0.1.0"
