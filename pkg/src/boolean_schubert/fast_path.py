"""Quadratic-time search for a non-equivariant insertion path in type A.

Procedure for u ->supp(v) w:

1. Start from B = B(u) and S = supp(v); give up unless B(u) is inside B(w).
2. Sweep S in increasing order.  A root is *forced* when only one vertex can
   be added by inserting it into B (looking at the Dynkin diagram alone): a
   root outside B can only add itself, a root inside B can add the first
   vertex past either end of the interval it reaches.  A forced insertion
   must keep B inside B(w), otherwise there is no path at all.  Roots with two
   possible vertices wait.
3. Repeat sweeps until one makes no progress.
4. Pair the waiting roots i_1 < ... < i_m with the missing vertices
   j_1 < ... < j_m of B(w) and insert i_k so that it adds exactly j_k.

Diagrams kept inside B(w) are induced subdiagrams, so the state is a boolean
mask over 1..n and each insertion attempt costs O(n).
"""

from __future__ import annotations

from .boolean_core import BooleanElement, diagram_contains, induced
from .insertion import InsertionPath, InsertionStep, StepKind
from .polynomial import WeightPolynomial
from .root_system import InvalidRootSystemError

__all__ = ["find_insertion_path_type_a", "fast_ordinary_constant_type_a", "insertion_order_type_a"]


def _require_type_a(*elems: BooleanElement) -> None:
    for e in elems:
        if e.rs.lie_type != "A":
            raise InvalidRootSystemError(f"fast path needs type A, got {e.rs.name}")
    if len({e.rs for e in elems}) != 1:
        raise ValueError("elements belong to different root systems")


def insertion_order_type_a(
    u: BooleanElement, v: BooleanElement, w: BooleanElement
) -> list[tuple[int, int]] | None:
    """The (root, added vertex) sequence of a path u ->supp(v) w, or None."""
    _require_type_a(u, v, w)
    if not diagram_contains(u, w):
        return None
    n = w.rs.rank
    in_w = [False] * (n + 2)
    for x in w.support:
        in_w[x] = True
    # right[k]: the edge between k and k+1 in B(w) points k -> k+1
    right = [False] * (n + 2)
    for a, b in w.edges:
        if b == a + 1:
            right[a] = True
    in_b = [False] * (n + 2)
    for x in u.support:
        in_b[x] = True
    added = []

    def ends(i: int) -> tuple[int, int]:
        lo = hi = i
        while in_b[hi + 1] and right[hi]:
            hi += 1
        while in_b[lo - 1] and not right[lo - 1]:
            lo -= 1
        return lo, hi

    def candidates(i: int) -> list[int]:
        if not in_b[i]:
            return [i]
        lo, hi = ends(i)
        out = []
        if lo > 1 and not in_b[lo - 1]:
            out.append(lo - 1)
        if hi < n and not in_b[hi + 1]:
            out.append(hi + 1)
        return out

    def fits(i: int, g: int) -> bool:
        """Adding g via root i keeps B inside B(w)."""
        if not in_w[g]:
            return False
        if not in_b[i]:
            return g == i
        lo, hi = ends(i)
        if g == hi + 1:
            return right[hi]
        if g == lo - 1:
            return not right[lo - 1]
        return False

    pending = sorted(v.support)
    progress = True
    while progress:
        progress = False
        waiting = []
        for i in pending:
            cands = candidates(i)
            if len(cands) > 1:
                waiting.append(i)
                continue
            if not cands or not fits(i, cands[0]):
                return None
            in_b[cands[0]] = True
            added.append((i, cands[0]))
            progress = True
        pending = waiting

    missing = [x for x in range(1, n + 1) if in_w[x] and not in_b[x]]
    if len(missing) != len(pending):
        return None
    for i, g in zip(pending, missing):
        if not fits(i, g):
            return None
        in_b[g] = True
        added.append((i, g))
    return added


def find_insertion_path_type_a(
    u: BooleanElement, v: BooleanElement, w: BooleanElement
) -> InsertionPath | None:
    """A non-equivariant insertion path u ->supp(v) w in type A, or None."""
    order = insertion_order_type_a(u, v, w)
    if order is None:
        return None
    one = WeightPolynomial.one(w.rs.rank)
    steps = []
    cur = u
    support = set(u.support)
    for i, g in order:
        support.add(g)
        nxt = induced(w, support)
        kind = StepKind.EVENT1 if i in cur.support else StepKind.EVENT3
        steps.append(InsertionStep(cur, i, nxt, kind, one, 1))
        cur = nxt
    return InsertionPath(u, tuple(steps))


def fast_ordinary_constant_type_a(u: BooleanElement, v: BooleanElement, w: BooleanElement) -> int:
    """c_uv^w in type A: 1 iff paths exist in both directions."""
    if insertion_order_type_a(u, v, w) is None:
        return 0
    return int(insertion_order_type_a(v, u, w) is not None)
