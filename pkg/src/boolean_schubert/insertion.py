"""Boolean insertion steps and paths.

A step ``u ->_i v`` is one of three mutually exclusive events:

1. ``i`` is in supp(u) and v adds one vertex g reachable from ``i`` by a
   directed path of B(v).  Weight 1, multiplicity = number of directed Dynkin
   multigraph paths from ``i`` to g along that path.
2. ``i`` is in supp(u) and v = u.  Weight = sum of t_g over directed Dynkin
   multigraph paths from ``i`` inside B(u) (length 0 allowed), multiplicity 1.
3. ``i`` is not in supp(u) and v adds the vertex ``i`` with any orientation of
   its new edges.  Weight 1, multiplicity 1.

Summed over the targets of one root, ``mul * wt`` gives the Chevalley product
of xi_u with xi_{s_i}, modulo classes of non-boolean elements.
"""

from __future__ import annotations

import enum
import functools
import itertools
from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .boolean_core import BooleanElement, diagram_contains, enumerate_boolean, induced
from .polynomial import WeightPolynomial

__all__ = [
    "StepKind",
    "InsertionStep",
    "InsertionPath",
    "step_weight",
    "step_multiplicity",
    "insertion_targets",
    "enumerate_paths",
    "chevalley_boolean_product",
    "boolean_product_expansion",
    "path_sum",
    "path_exists",
    "path_exists_any_order",
    "path_sums_by_support",
]


class StepKind(enum.Enum):
    EVENT1 = 1  # adds a vertex reachable from the inserted root
    EVENT2 = 2  # equivariant, target equals source
    EVENT3 = 3  # adds the inserted root itself

    @property
    def equivariant(self) -> bool:
        return self is StepKind.EVENT2


@dataclass(frozen=True)
class InsertionStep:
    source: BooleanElement
    root: int
    target: BooleanElement
    kind: StepKind
    weight: WeightPolynomial
    multiplicity: int

    @property
    def equivariant(self) -> bool:
        return self.kind.equivariant

    @property
    def value(self) -> WeightPolynomial:
        return self.weight * self.multiplicity


@dataclass(frozen=True)
class InsertionPath:
    start: BooleanElement
    steps: tuple[InsertionStep, ...] = ()

    @property
    def end(self) -> BooleanElement:
        return self.steps[-1].target if self.steps else self.start

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(s.root for s in self.steps)

    @property
    def weight(self) -> WeightPolynomial:
        out = WeightPolynomial.one(self.start.rs.rank)
        for s in self.steps:
            out = out * s.weight
        return out

    @property
    def multiplicity(self) -> int:
        m = 1
        for s in self.steps:
            m *= s.multiplicity
        return m

    @property
    def value(self) -> WeightPolynomial:
        return self.weight * self.multiplicity

    @property
    def equivariant(self) -> bool:
        return any(s.equivariant for s in self.steps)

    def is_chain(self) -> bool:
        prev = self.start
        for s in self.steps:
            if s.source != prev:
                return False
            prev = s.target
        return True


def _directed_path(b: BooleanElement, i: int, g: int) -> list[int] | None:
    """The tree path from i to g if every edge of it is oriented forward in B(b)."""
    path = b.rs.tree_path(i, g)
    for a, c in zip(path, path[1:]):
        if (a, c) not in b.edges:
            return None
    return path


@functools.lru_cache(maxsize=None)
def step_weight(u: BooleanElement, i: int) -> WeightPolynomial:
    """Weight of the equivariant step ``u ->_i u``."""
    if i not in u.support:
        raise ValueError(f"alpha_{i} is not in supp(u); no equivariant step")
    rs = u.rs
    out = {}
    # B(u) is a forest, so a DFS visits each simple path exactly once
    stack = [(i, 1)]
    while stack:
        x, count = stack.pop()
        exp = tuple(int(k == x) for k in rs.indices)
        out[exp] = out.get(exp, 0) + count
        for y in u.out_neighbors(x):
            stack.append((y, count * rs.edge_mult(x, y)))
    return WeightPolynomial(rs.rank, out)


def step_multiplicity(u: BooleanElement, i: int, v: BooleanElement) -> int:
    """Multiplicity of ``u ->_i v``; raises ValueError if it is not an insertion."""
    if v == u and i in u.support:
        return 1
    new = v.support - u.support
    if len(new) != 1 or not diagram_contains(u, v):
        raise ValueError(f"{u} ->_{i} {v} is not a boolean insertion")
    (g,) = new
    if i not in u.support:
        if g != i:
            raise ValueError(f"{u} ->_{i} {v} must add alpha_{i}")
        return 1
    path = _directed_path(v, i, g)
    if path is None:
        raise ValueError(f"no directed path from alpha_{i} to alpha_{g} in {v}")
    return v.rs.path_count(path)


def _orientations(u: BooleanElement, g: int) -> list[BooleanElement]:
    """All diagrams obtained by adding vertex g to B(u) with any orientation."""
    rs = u.rs
    nbrs = [k for k in rs.neighbors[g] if k in u.support]
    support = u.support | {g}
    out = []
    for flips in itertools.product((False, True), repeat=len(nbrs)):
        new = {(k, g) if f else (g, k) for k, f in zip(nbrs, flips)}
        out.append(BooleanElement(rs, support, u.edges | new))
    return out


def insertion_targets(u: BooleanElement, i: int) -> list[InsertionStep]:
    """Every boolean insertion step ``u ->_i v``.

    The equivariant step (if any) comes first, then the others sorted by
    target.
    """
    rs = u.rs
    one = WeightPolynomial.one(rs.rank)
    if i not in u.support:
        return [
            InsertionStep(u, i, v, StepKind.EVENT3, one, 1)
            for v in sorted(_orientations(u, i))
        ]
    steps = [InsertionStep(u, i, u, StepKind.EVENT2, step_weight(u, i), 1)]
    frontier = sorted(
        {g for x in u.support for g in rs.neighbors[x] if g not in u.support}
    )
    others = []
    for g in frontier:
        for v in _orientations(u, g):
            path = _directed_path(v, i, g)
            if path is not None:
                others.append(InsertionStep(u, i, v, StepKind.EVENT1, one, rs.path_count(path)))
    others.sort(key=lambda s: s.target.sort_key())
    return steps + others


def _check_roots(roots: Sequence[int]) -> list[int]:
    roots = list(roots)
    if len(set(roots)) != len(roots):
        raise ValueError(f"roots must be distinct, got {roots}")
    return roots


def enumerate_paths(
    u: BooleanElement, roots: Sequence[int], w: BooleanElement, equivariant: bool = True
) -> list[InsertionPath]:
    """All insertion paths from u to w inserting ``roots`` in the given order.

    With ``equivariant=False`` only paths made of non-equivariant steps are
    returned.
    """
    roots = _check_roots(roots)
    if not diagram_contains(u, w):
        return []
    found = []

    def walk(cur: BooleanElement, k: int, steps: list[InsertionStep]):
        if k == len(roots):
            if cur == w:
                found.append(InsertionPath(u, tuple(steps)))
            return
        # each remaining root adds at most one vertex
        if len(w.support) - len(cur.support) > len(roots) - k:
            return
        for step in insertion_targets(cur, roots[k]):
            if step.equivariant and not equivariant:
                continue
            if diagram_contains(step.target, w):
                steps.append(step)
                walk(step.target, k + 1, steps)
                steps.pop()

    walk(u, 0, [])
    return found


def chevalley_boolean_product(v: BooleanElement, i: int) -> dict[BooleanElement, WeightPolynomial]:
    """``xi_v * xi_{s_i}`` modulo non-boolean classes, as target -> coefficient."""
    out: dict[BooleanElement, WeightPolynomial] = {}
    for step in insertion_targets(v, i):
        out[step.target] = out.get(step.target, WeightPolynomial.zero(v.rs.rank)) + step.value
    return out


def boolean_product_expansion(
    u: BooleanElement, roots: Iterable[int], ordering: Sequence[int] | None = None
) -> dict[BooleanElement, WeightPolynomial]:
    """``xi_u * prod xi_{s_b}`` over ``roots`` modulo non-boolean classes.

    The result does not depend on ``ordering``, which must be a permutation of
    ``roots``.
    """
    roots = _check_roots(list(roots))
    ordering = sorted(roots) if ordering is None else _check_roots(ordering)
    if sorted(ordering) != sorted(roots):
        raise ValueError(f"ordering {ordering} is not a permutation of {sorted(roots)}")
    zero = WeightPolynomial.zero(u.rs.rank)
    current = {u: WeightPolynomial.one(u.rs.rank)}
    for beta in ordering:
        nxt: dict[BooleanElement, WeightPolynomial] = {}
        for x, coeff in current.items():
            for step in insertion_targets(x, beta):
                nxt[step.target] = nxt.get(step.target, zero) + coeff * step.value
        current = {x: c for x, c in nxt.items() if c}
    return current


# Restricted to paths ending at w every intermediate diagram is an induced
# subdiagram of B(w), so states are just subsets of supp(w).


def _targets_within(u: BooleanElement, i: int, w: BooleanElement, equivariant: bool):
    """Steps ``u ->_i v`` with B(v) inside B(w), as (v, mul * wt) pairs."""
    rs = u.rs
    if i not in u.support:
        if i in w.support:
            yield induced(w, u.support | {i}), None
        return
    if equivariant:
        yield u, step_weight(u, i)
    for g in w.support - u.support:
        v = induced(w, u.support | {g})
        path = _directed_path(v, i, g)
        if path is not None:
            yield v, rs.path_count(path)


def path_sum(
    u: BooleanElement, ordering: Sequence[int], w: BooleanElement, equivariant: bool = True
) -> WeightPolynomial:
    """Sum of ``mul * wt`` over all insertion paths ``u ->_ordering w``."""
    ordering = _check_roots(ordering)
    rank = u.rs.rank
    zero = WeightPolynomial.zero(rank)
    if not diagram_contains(u, w):
        return zero
    target_len = len(w.support)
    current = {u: WeightPolynomial.one(rank)}
    for k, beta in enumerate(ordering):
        left = len(ordering) - k - 1
        nxt: dict[BooleanElement, WeightPolynomial] = {}
        for x, coeff in current.items():
            for v, value in _targets_within(x, beta, w, equivariant):
                if target_len - len(v.support) > left:
                    continue
                term = coeff if value is None else coeff * value
                nxt[v] = nxt.get(v, zero) + term
        current = nxt
        if not current:
            return zero
    return current.get(w, zero)


def path_exists(
    u: BooleanElement, ordering: Sequence[int], w: BooleanElement, equivariant: bool = True
) -> bool:
    """Whether some insertion path ``u ->_ordering w`` exists."""
    ordering = _check_roots(ordering)
    if not diagram_contains(u, w):
        return False
    target_len = len(w.support)
    current = {u}
    for k, beta in enumerate(ordering):
        left = len(ordering) - k - 1
        current = {
            v
            for x in current
            for v, _ in _targets_within(x, beta, w, equivariant)
            if target_len - len(v.support) <= left
        }
        if not current:
            return False
    return w in current


def path_exists_any_order(
    u: BooleanElement, roots: Iterable[int], w: BooleanElement, equivariant: bool = True
) -> bool:
    """Whether some ordering of ``roots`` admits an insertion path from u to w.

    Searches all orderings at once, memoised on (current diagram, roots left).
    """
    remaining = frozenset(_check_roots(list(roots)))
    if not diagram_contains(u, w):
        return False
    target_len = len(w.support)
    dead: set = set()

    def search(cur: BooleanElement, left: frozenset) -> bool:
        if not left:
            return cur == w
        if target_len - len(cur.support) > len(left) or (cur, left) in dead:
            return False
        for beta in sorted(left):
            for v, _ in _targets_within(cur, beta, w, equivariant):
                if search(v, left - {beta}):
                    return True
        dead.add((cur, left))
        return False

    return search(u, remaining)


def path_sums_by_support(
    u: BooleanElement, w: BooleanElement, equivariant: bool = True, size: int | None = None
) -> dict[frozenset, WeightPolynomial]:
    """``path_sum(u, sorted(S), w)`` for every S inside supp(w), nonzero values only.

    Subsets are walked as a binary trie over the sorted support, so the DP
    for a shared prefix is done once.  ``size`` restricts to |S| = size.
    Every path contributes a nonzero polynomial with non-negative
    coefficients, so a key is present exactly when some path exists.
    """
    roots = sorted(w.support)
    target_len = len(w.support)
    out: dict[frozenset, WeightPolynomial] = {}
    if not diagram_contains(u, w):
        return out
    zero = WeightPolynomial.zero(u.rs.rank)
    chosen: list[int] = []

    def walk(k: int, current: dict) -> None:
        left = len(roots) - k
        if size is not None and not (len(chosen) <= size <= len(chosen) + left):
            return
        current = {x: c for x, c in current.items() if target_len - len(x.support) <= left}
        if not current:
            return
        if k == len(roots):
            if w in current:
                out[frozenset(chosen)] = current[w]
            return
        walk(k + 1, current)
        beta = roots[k]
        nxt: dict = {}
        for x, coeff in current.items():
            for v, value in _targets_within(x, beta, w, equivariant):
                term = coeff if value is None else coeff * value
                nxt[v] = nxt.get(v, zero) + term
        chosen.append(beta)
        walk(k + 1, nxt)
        chosen.pop()

    walk(0, {u: WeightPolynomial.one(u.rs.rank)})
    return out
