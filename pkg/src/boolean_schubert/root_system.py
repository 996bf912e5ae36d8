"""Finite root systems in the simple-root basis.

Simple roots are labelled 1..rank following Bourbaki:

* ``A_n``: chain 1-2-...-n.
* ``B_n``: chain 1-...-n, alpha_n short.
* ``C_n``: chain 1-...-n, alpha_n long.
* ``D_n``: chain 1-...-(n-2), with n-1 and n both attached to n-2.
* ``E_n``: chain 1-3-4-5-...-n, with 2 attached to 4.  For ``E_7`` the
  branch node is 4 and the long arm is 4-5-6-7.
* ``F_4``: 1-2=>3-4, alpha_1 and alpha_2 long.
* ``G_2``: 1<=2, alpha_1 short.

Squared lengths are normalised so that short roots have length 2 (long roots
have 4 in types B/C/F and 6 in G).  Everything is exact integer arithmetic.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass, field

__all__ = [
    "InvalidRootSystemError",
    "RootSystem",
    "RootVector",
    "build_root_system",
    "reflect",
    "positive_roots",
    "pair_fundamental_coroot",
    "weyl_group_order",
]

LIE_TYPES = ("A", "B", "C", "D", "E", "F", "G")

# a vector sum(n_i alpha_i) in the simple-root basis, index 0 <-> alpha_1
RootVector = tuple[int, ...]


class InvalidRootSystemError(ValueError):
    """Raised for an unsupported (lie_type, rank) pair or a non-root."""


def _validate(lie_type: str, rank: int) -> None:
    if lie_type not in LIE_TYPES:
        raise InvalidRootSystemError(f"unknown Lie type {lie_type!r}")
    if not isinstance(rank, int) or rank < 1:
        raise InvalidRootSystemError(f"rank must be a positive integer, got {rank!r}")
    ok = {
        "A": rank >= 1,
        "B": rank >= 2,
        "C": rank >= 2,
        "D": rank >= 4,
        "E": 6 <= rank <= 8,
        "F": rank == 4,
        "G": rank == 2,
    }[lie_type]
    if not ok:
        raise InvalidRootSystemError(f"invalid rank {rank} for type {lie_type}")


def _dynkin_edges(lie_type: str, rank: int) -> list[tuple[int, int]]:
    """Undirected Dynkin edges as 1-based pairs."""
    if lie_type in "ABCFG":
        return [(i, i + 1) for i in range(1, rank)]
    if lie_type == "D":
        edges = [(i, i + 1) for i in range(1, rank - 1)]
        edges.append((rank - 2, rank))
        return edges
    # E
    edges = [(1, 3), (2, 4)]
    edges += [(i, i + 1) for i in range(3, rank)]
    return edges


def _root_norms(lie_type: str, rank: int) -> list[int]:
    if lie_type == "B":
        return [4] * (rank - 1) + [2]
    if lie_type == "C":
        return [2] * (rank - 1) + [4]
    if lie_type == "F":
        return [4, 4, 2, 2]
    if lie_type == "G":
        return [2, 6]
    return [2] * rank


def weyl_group_order(lie_type: str, rank: int) -> int:
    """Closed-form order of the Weyl group."""
    _validate(lie_type, rank)
    fact = functools.reduce(lambda a, b: a * b, range(1, rank + 1), 1)
    if lie_type == "A":
        return fact * (rank + 1)
    if lie_type in "BC":
        return 2**rank * fact
    if lie_type == "D":
        return 2 ** (rank - 1) * fact
    if lie_type == "E":
        return {6: 51840, 7: 2903040, 8: 696729600}[rank]
    if lie_type == "F":
        return 1152
    return 12


@dataclass(frozen=True)
class RootSystem:
    """Cartan data and the directed Dynkin multigraph of a finite root system.

    ``cartan[i][j] = 2<a_i, a_j> / <a_j, a_j>`` (0-based indices), so the
    number of directed Dynkin edges from ``alpha_i`` to ``alpha_j`` is
    ``-cartan[i][j]``.  Public methods take 1-based simple-root labels.
    """

    lie_type: str
    rank: int
    root_norms: tuple[int, ...] = field(init=False, compare=False, repr=False)
    inner: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)
    cartan: tuple[tuple[int, ...], ...] = field(init=False, compare=False, repr=False)
    neighbors: dict[int, tuple[int, ...]] = field(init=False, compare=False, repr=False)
    _roots: list = field(init=False, compare=False, repr=False, default_factory=list)
    _paths: dict = field(init=False, compare=False, repr=False, default_factory=dict)

    def __post_init__(self):
        _validate(self.lie_type, self.rank)
        n = self.rank
        norms = _root_norms(self.lie_type, n)
        inner = [[0] * n for _ in range(n)]
        for i in range(n):
            inner[i][i] = norms[i]
        nbrs: dict[int, list[int]] = {i: [] for i in range(1, n + 1)}
        for a, b in _dynkin_edges(self.lie_type, n):
            # <a_i, a_j> = -max(|a_i|^2, |a_j|^2) / 2 for adjacent simple roots
            value = -max(norms[a - 1], norms[b - 1]) // 2
            inner[a - 1][b - 1] = inner[b - 1][a - 1] = value
            nbrs[a].append(b)
            nbrs[b].append(a)
        cartan = [[2 * inner[i][j] // norms[j] for j in range(n)] for i in range(n)]
        set_ = object.__setattr__
        set_(self, "root_norms", tuple(norms))
        set_(self, "inner", tuple(map(tuple, inner)))
        set_(self, "cartan", tuple(map(tuple, cartan)))
        set_(self, "neighbors", {k: tuple(sorted(v)) for k, v in nbrs.items()})

    @property
    def name(self) -> str:
        return f"{self.lie_type}{self.rank}"

    @property
    def indices(self) -> range:
        return range(1, self.rank + 1)

    def edge_mult(self, i: int, j: int) -> int:
        """Number of directed Dynkin edges from alpha_i to alpha_j."""
        if i == j:
            return 0
        return -self.cartan[i - 1][j - 1]

    def adjacent(self, i: int, j: int) -> bool:
        return i != j and self.cartan[i - 1][j - 1] != 0

    def dynkin_edges(self) -> list[tuple[int, int]]:
        """Undirected edges (i, j) with i < j, sorted."""
        return sorted((i, j) for i in self.indices for j in self.neighbors[i] if i < j)

    def tree_path(self, start: int, end: int) -> list[int]:
        """The unique vertex path from ``start`` to ``end`` in the Dynkin tree."""
        key = (start, end)
        if key not in self._paths:
            self._paths[key] = tuple(self._find_path(start, end))
        return list(self._paths[key])

    def _find_path(self, start: int, end: int) -> list[int]:
        parent = {start: 0}
        stack = [start]
        while stack:
            x = stack.pop()
            if x == end:
                break
            for y in self.neighbors[x]:
                if y not in parent:
                    parent[y] = x
                    stack.append(y)
        path = [end]
        while path[-1] != start:
            path.append(parent[path[-1]])
        return path[::-1]

    def path_count(self, path: list[int]) -> int:
        """Number of directed multigraph paths following ``path`` vertex by vertex."""
        count = 1
        for a, b in zip(path, path[1:]):
            count *= self.edge_mult(a, b)
        return count

    def form(self, x: RootVector, y: RootVector) -> int:
        """The invariant bilinear form on root-lattice vectors."""
        return sum(
            x[i] * self.inner[i][j] * y[j]
            for i in range(self.rank)
            if x[i]
            for j in range(self.rank)
            if y[j]
        )

    def simple_root(self, i: int) -> RootVector:
        return tuple(1 if k == i - 1 else 0 for k in range(self.rank))

    @property
    def positive_roots(self) -> tuple[RootVector, ...]:
        """Positive roots ordered by height (computed on first use)."""
        if not self._roots:
            roots = tuple(_root_strings(self))
            self._roots.extend([roots, {beta: k for k, beta in enumerate(roots)}])
        return self._roots[0]

    @property
    def root_index(self) -> dict[RootVector, int]:
        self.positive_roots
        return self._roots[1]


@functools.cache
def build_root_system(lie_type: str, rank: int) -> RootSystem:
    """Return the (shared, immutable) root system of the given type and rank."""
    return RootSystem(lie_type.upper() if isinstance(lie_type, str) else lie_type, rank)


def reflect(rs: RootSystem, j: int, beta: RootVector) -> RootVector:
    """Apply the simple reflection s_j to ``beta``.

    Only coordinate j changes: it becomes the edge-weighted sum of the
    neighbouring coordinates minus itself.
    """
    coeffs = list(beta)
    coeffs[j - 1] = sum(rs.edge_mult(k, j) * beta[k - 1] for k in rs.neighbors[j]) - beta[j - 1]
    return tuple(coeffs)


def _root_strings(rs: RootSystem) -> list[RootVector]:
    # Build positive roots by height: beta + alpha_i is a root iff the
    # alpha_i-string through beta extends upward, i.e. p - <beta, alpha_i^v> > 0.
    found = [rs.simple_root(i) for i in rs.indices]
    known = set(found)
    layer = list(found)
    while layer:
        nxt = []
        for beta in layer:
            for i in rs.indices:
                alpha = rs.simple_root(i)
                if beta == alpha:
                    continue
                p = 0
                down = beta
                while True:
                    down = tuple(b - a for b, a in zip(down, alpha))
                    if down in known:
                        p += 1
                    else:
                        break
                pairing = 2 * rs.form(beta, alpha) // rs.root_norms[i - 1]
                if p - pairing > 0:
                    up = tuple(b + a for b, a in zip(beta, alpha))
                    if up not in known:
                        known.add(up)
                        nxt.append(up)
        found.extend(sorted(nxt))
        layer = nxt
    return found


def positive_roots(rs: RootSystem) -> list[RootVector]:
    return list(rs.positive_roots)


def pair_fundamental_coroot(rs: RootSystem, i: int, beta: RootVector) -> int:
    """<omega_i, beta^vee> = n_i <a_i, a_i> / <beta, beta> for a root beta."""
    beta = tuple(beta)
    neg = tuple(-b for b in beta)
    if beta not in rs.root_index and neg not in rs.root_index:
        raise InvalidRootSystemError(f"{beta} is not a root of {rs.name}")
    num = beta[i - 1] * rs.root_norms[i - 1]
    den = rs.form(beta, beta)
    if num % den:
        raise AssertionError(f"non-integral coroot pairing for {beta}")
    return num // den
