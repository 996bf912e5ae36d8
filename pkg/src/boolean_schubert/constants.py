"""Schubert structure constants for boolean triples.

``equivariant_constant(u, v, w)`` is d_uv^w: zero unless some insertion path
v ->supp(u) w exists, otherwise the sum of ``mul * wt`` over all insertion
paths u ->supp(v) w.  ``ordinary_constant`` is the same rule restricted to
non-equivariant paths, which equals d_uv^w at t = 0.
"""

from __future__ import annotations

from collections.abc import Sequence

from .boolean_core import BooleanElement, diagram_contains, sub_elements
from .insertion import path_exists, path_sum, path_sums_by_support
from .polynomial import WeightPolynomial

__all__ = [
    "OrderingMismatchError",
    "equivariant_constant",
    "ordinary_constant",
    "constant_table",
]


class OrderingMismatchError(AssertionError):
    """Two path orderings gave different sums (this indicates a bug)."""


def _same_root_system(*elems: BooleanElement) -> None:
    if len({e.rs for e in elems}) != 1:
        raise ValueError("elements belong to different root systems")


def _ordering(v: BooleanElement, ordering: Sequence[int] | None) -> list[int]:
    if ordering is None:
        return sorted(v.support)
    ordering = list(ordering)
    if sorted(ordering) != sorted(v.support):
        raise ValueError(f"ordering {ordering} is not a permutation of supp(v)={sorted(v.support)}")
    return ordering


def _gated(u: BooleanElement, v: BooleanElement, w: BooleanElement, min_extra: int) -> bool:
    # d_uv^w has degree l(u)+l(v)-l(w), and needs u, v <= w
    if not (diagram_contains(u, w) and diagram_contains(v, w)):
        return False
    return u.length + v.length - w.length >= min_extra


def equivariant_constant(
    u: BooleanElement,
    v: BooleanElement,
    w: BooleanElement,
    ordering: Sequence[int] | None = None,
    check_ordering: bool = False,
) -> WeightPolynomial:
    """The equivariant structure constant d_uv^w as a polynomial in t.

    ``ordering`` fixes the order in which supp(v) is inserted (default:
    ascending).  With ``check_ordering`` the sum is recomputed with the
    reversed ordering and compared.
    """
    _same_root_system(u, v, w)
    zero = WeightPolynomial.zero(w.rs.rank)
    order = _ordering(v, ordering)
    if not _gated(u, v, w, 0):
        return zero
    if not path_exists(v, sorted(u.support), w, equivariant=True):
        return zero
    value = path_sum(u, order, w, equivariant=True)
    if check_ordering and len(order) > 1:
        other = path_sum(u, order[::-1], w, equivariant=True)
        if other != value:
            raise OrderingMismatchError(f"{order}: {value} vs reversed: {other}")
    return value


def ordinary_constant(
    u: BooleanElement,
    v: BooleanElement,
    w: BooleanElement,
    ordering: Sequence[int] | None = None,
    check_ordering: bool = False,
) -> int:
    """The ordinary structure constant c_uv^w."""
    _same_root_system(u, v, w)
    order = _ordering(v, ordering)
    if not _gated(u, v, w, 0) or u.length + v.length != w.length:
        return 0
    if not path_exists(v, sorted(u.support), w, equivariant=False):
        return 0
    value = path_sum(u, order, w, equivariant=False).constant_term()
    if check_ordering and len(order) > 1:
        other = path_sum(u, order[::-1], w, equivariant=False).constant_term()
        if other != value:
            raise OrderingMismatchError(f"{order}: {value} vs reversed: {other}")
    return value


def constant_table(w: BooleanElement, equivariant: bool = False) -> dict:
    """All nonzero constants (u, v) -> value for u, v in the interval [id, w].

    Same rule as the single-triple functions, but each row of path sums is
    computed once per u (the sum depends on supp(v) only).
    """
    subs = sub_elements(w)
    sums = {}
    for x in subs:
        size = None if equivariant else w.length - x.length
        sums[x] = path_sums_by_support(x, w, equivariant, size)
    table = {}
    for u in subs:
        for v in subs:
            value = sums[u].get(v.support)
            # gate: some path v ->supp(u) w
            if value is None or u.support not in sums[v]:
                continue
            table[(u, v)] = value if equivariant else value.constant_term()
    return table
