"""Independent ground truth for structure constants at small rank.

Two evaluators, neither of which uses the insertion calculus:

* :func:`kk_constant` applies the operators ``B_j`` of the Kostant-Kumar
  formula for boolean w (``a_j * s_j``, ``s_j`` or ``d_j`` depending on
  whether j lies in both, one, or neither of supp(u), supp(v)) along a
  reduced word of w, starting from 1.
* :func:`chevalley_constant` multiplies xi_u by the divisor classes
  xi_{s_b}, b in supp(v), with the full equivariant Chevalley rule on an
  explicitly enumerated Weyl group, and reads off the coefficient of xi_w.

The divided difference keeps the sign convention ``d_j(p) = (s_j p - p) / a_j``.
"""

from __future__ import annotations

import os
from collections import deque
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass

from .boolean_core import BooleanElement, diagram_contains, from_reduced_word, to_reduced_word
from .polynomial import RootPolynomial
from .root_system import RootSystem, RootVector, pair_fundamental_coroot, reflect, weyl_group_order

__all__ = [
    "OracleError",
    "ResourceLimitError",
    "WeylElement",
    "WeylGroup",
    "MAX_ORDER_ENV",
    "DEFAULT_MAX_ORDER",
    "apply_simple",
    "divided_difference",
    "kk_constant",
    "enumerate_weyl",
    "chevalley_multiply",
    "chevalley_constant",
]

MAX_ORDER_ENV = "BOOLEAN_SCHUBERT_MAX_WEYL_ORDER"
DEFAULT_MAX_ORDER = 51840


class OracleError(RuntimeError):
    """Internal inconsistency inside an oracle computation."""


class ResourceLimitError(RuntimeError):
    """The requested Weyl group is larger than the configured bound."""


# polynomial operators


def apply_simple(rs: RootSystem, j: int, p: RootPolynomial) -> RootPolynomial:
    """Act by s_j on a polynomial in the simple roots."""
    images = [RootPolynomial.linear(reflect(rs, j, rs.simple_root(i))) for i in rs.indices]
    return p.substitute(images)


def divided_difference(rs: RootSystem, j: int, p: RootPolynomial) -> RootPolynomial:
    diff = apply_simple(rs, j, p) - p
    try:
        return diff.divide_by_variable(j)
    except ArithmeticError as exc:
        raise OracleError(f"s_{j}(p) - p not divisible by a_{j}: {exc}") from None


def kk_constant(
    u: BooleanElement, v: BooleanElement, w: BooleanElement, word: Sequence[int] | None = None
) -> RootPolynomial:
    """d_uv^w by the Kostant-Kumar operators along a reduced word of w."""
    rs = w.rs
    if word is None:
        word = to_reduced_word(w)
    word = list(word)
    if from_reduced_word(rs, word) != w:
        raise ValueError(f"{word} is not a reduced word of {w}")
    for name, x in (("u", u), ("v", v)):
        if not x.support <= w.support:
            raise ValueError(f"supp({name}) is not contained in supp(w)")
    zero = RootPolynomial.zero(rs.rank)
    if not (diagram_contains(u, w) and diagram_contains(v, w)):
        return zero  # u or v is not below w
    p = RootPolynomial.one(rs.rank)
    for j in reversed(word):
        in_u, in_v = j in u.support, j in v.support
        if in_u and in_v:
            p = RootPolynomial.variable(rs.rank, j) * apply_simple(rs, j, p)
        elif in_u or in_v:
            p = apply_simple(rs, j, p)
        else:
            p = divided_difference(rs, j, p)
        if not p:
            return zero
    return p


# Weyl group


@dataclass(frozen=True)
class WeylElement:
    """Action on the root lattice; ``cols[j]`` is the image of alpha_{j+1}."""

    cols: tuple[RootVector, ...]

    def apply(self, x: RootVector) -> RootVector:
        n = len(self.cols)
        out = [0] * n
        for j, c in enumerate(x):
            if c:
                col = self.cols[j]
                for r in range(n):
                    out[r] += c * col[r]
        return tuple(out)

    def __mul__(self, other: WeylElement) -> WeylElement:
        return WeylElement(tuple(self.apply(col) for col in other.cols))

    def times_simple(self, rs: RootSystem, j: int) -> WeylElement:
        """Right multiplication by s_j."""
        cols = list(self.cols)
        cj = self.cols[j - 1]
        for i in rs.neighbors[j]:
            m = rs.edge_mult(i, j)
            cols[i - 1] = tuple(a + m * b for a, b in zip(cols[i - 1], cj))
        cols[j - 1] = tuple(-b for b in cj)
        return WeylElement(tuple(cols))


def _identity(rs: RootSystem) -> WeylElement:
    return WeylElement(tuple(rs.simple_root(i) for i in rs.indices))


def _reflection(rs: RootSystem, beta: RootVector) -> WeylElement:
    norm = rs.form(beta, beta)
    cols = []
    for i in rs.indices:
        a = rs.simple_root(i)
        k = 2 * rs.form(a, beta) // norm
        cols.append(tuple(x - k * b for x, b in zip(a, beta)))
    return WeylElement(tuple(cols))


def _max_order() -> int:
    raw = os.environ.get(MAX_ORDER_ENV)
    return int(raw) if raw else DEFAULT_MAX_ORDER


class WeylGroup:
    """All elements of a finite Weyl group with lengths and reduced words."""

    def __init__(self, rs: RootSystem, max_order: int | None = None):
        bound = _max_order() if max_order is None else max_order
        order = weyl_group_order(rs.lie_type, rs.rank)
        if order > bound:
            raise ResourceLimitError(
                f"W({rs.name}) has {order} elements, above the bound {bound} "
                f"(set {MAX_ORDER_ENV} to raise it)"
            )
        self.rs = rs
        e = _identity(rs)
        self.elements: list[WeylElement] = [e]
        self.index: dict[WeylElement, int] = {e: 0}
        self.lengths: list[int] = [0]
        self.words: list[tuple[int, ...]] = [()]
        queue = deque([0])
        while queue:
            k = queue.popleft()
            x = self.elements[k]
            for j in rs.indices:
                y = x.times_simple(rs, j)
                if y not in self.index:
                    self.index[y] = len(self.elements)
                    self.elements.append(y)
                    self.lengths.append(self.lengths[k] + 1)
                    self.words.append(self.words[k] + (j,))
                    queue.append(self.index[y])
        if len(self.elements) != order:
            raise OracleError(f"enumerated {len(self.elements)} elements, expected {order}")
        self._reflections = [_reflection(rs, beta) for beta in rs.positive_roots]
        self._covers: dict[int, list[tuple[int, RootVector]]] = {}
        self._below: dict[int, frozenset[int]] = {}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def element_from_word(self, word: Iterable[int]) -> WeylElement:
        x = _identity(self.rs)
        for j in word:
            x = x.times_simple(self.rs, j)
        return x

    def length(self, x: WeylElement) -> int:
        return self.lengths[self.index[x]]

    def support(self, x: WeylElement) -> frozenset[int]:
        return frozenset(self.words[self.index[x]])

    def is_boolean(self, x: WeylElement) -> bool:
        return self.length(x) == len(self.support(x))

    def to_boolean(self, x: WeylElement) -> BooleanElement:
        return from_reduced_word(self.rs, self.words[self.index[x]])

    def from_boolean(self, b: BooleanElement) -> WeylElement:
        return self.element_from_word(to_reduced_word(b))

    def covers(self, x: WeylElement) -> list[tuple[WeylElement, RootVector]]:
        """Pairs (x s_beta, beta) with beta positive and l(x s_beta) = l(x) + 1."""
        k = self.index[x]
        if k not in self._covers:
            out = []
            for beta, r in zip(self.rs.positive_roots, self._reflections):
                y = self.index[x * r]
                if self.lengths[y] == self.lengths[k] + 1:
                    out.append((y, beta))
            self._covers[k] = out
        return [(self.elements[y], beta) for y, beta in self._covers[k]]

    def lower_ideal(self, x: WeylElement) -> frozenset[WeylElement]:
        """Everything below x in Bruhat order (reflections lowering the length)."""
        k = self.index[x]
        if k not in self._below:
            seen = {k}
            stack = [k]
            while stack:
                y = stack.pop()
                ey = self.elements[y]
                for r in self._reflections:
                    z = self.index[ey * r]
                    if self.lengths[z] < self.lengths[y] and z not in seen:
                        seen.add(z)
                        stack.append(z)
            self._below[k] = frozenset(seen)
        return frozenset(self.elements[y] for y in self._below[k])

    def bruhat_leq(self, x: WeylElement, y: WeylElement) -> bool:
        return x in self.lower_ideal(y)


_groups: dict[RootSystem, WeylGroup] = {}


def enumerate_weyl(rs: RootSystem, max_order: int | None = None) -> WeylGroup:
    """The Weyl group of ``rs`` (built once and cached), subject to the order bound."""
    bound = _max_order() if max_order is None else max_order
    if rs in _groups:
        if len(_groups[rs]) > bound:
            raise ResourceLimitError(f"W({rs.name}) exceeds the bound {bound}")
        return _groups[rs]
    group = WeylGroup(rs, bound)
    _groups[rs] = group
    return group


# equivariant Chevalley rule


def _omega_minus_image(group: WeylGroup, x: WeylElement, i: int) -> RootPolynomial:
    """omega_i - x(omega_i) in the root lattice, as a linear polynomial.

    For a reduced word x = s_{j1}...s_{jm} it telescopes to the sum over
    positions k with j_k = i of s_{j1}...s_{j(k-1)}(alpha_i).
    """
    rs = group.rs
    prefix = _identity(rs)
    total = [0] * rs.rank
    alpha = rs.simple_root(i)
    for j in group.words[group.index[x]]:
        if j == i:
            total = [a + b for a, b in zip(total, prefix.apply(alpha))]
        prefix = prefix.times_simple(rs, j)
    return RootPolynomial.linear(total)


def chevalley_multiply(
    group: WeylGroup,
    f: Mapping[WeylElement, RootPolynomial],
    i: int,
    keep: frozenset[WeylElement] | None = None,
) -> dict[WeylElement, RootPolynomial]:
    """Multiply ``sum f[x] xi_x`` by xi_{s_i}.

    ``keep``, if given, drops every output class outside that set (used to
    discard classes that cannot lie below a fixed target).
    """
    rs = group.rs
    zero = RootPolynomial.zero(rs.rank)
    out: dict[WeylElement, RootPolynomial] = {}

    def add(x, value):
        if keep is not None and x not in keep:
            return
        out[x] = out.get(x, zero) + value

    for x, coeff in f.items():
        if not coeff:
            continue
        add(x, coeff * _omega_minus_image(group, x, i))
        for y, beta in group.covers(x):
            m = pair_fundamental_coroot(rs, i, beta)
            if m:
                add(y, coeff * m)
    return {x: c for x, c in out.items() if c}


def chevalley_constant(
    u: BooleanElement, v: BooleanElement, w: BooleanElement, max_order: int | None = None
) -> RootPolynomial:
    """d_uv^w as the xi_w coefficient of xi_u * prod_{b in supp(v)} xi_{s_b}.

    Below a boolean w each support set carries exactly one element, so only
    the v' with supp(v') = supp(v) and v' <= w contributes; that v' is v when
    v <= w.
    """
    rs = w.rs
    group = enumerate_weyl(rs, max_order)
    zero = RootPolynomial.zero(rs.rank)
    wx = group.from_boolean(w)
    ux = group.from_boolean(u)
    vx = group.from_boolean(v)
    below = group.lower_ideal(wx)
    if ux not in below or vx not in below:
        return zero
    f = {ux: RootPolynomial.one(rs.rank)}
    for beta in sorted(v.support):
        f = chevalley_multiply(group, f, beta, keep=below)
    return f.get(wx, zero)
