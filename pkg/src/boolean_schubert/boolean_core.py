"""Boolean Weyl group elements stored as boolean diagrams.

A boolean element is a product of distinct simple reflections.  It is
determined by its support together with an orientation of every Dynkin edge
inside the support: the edge ``k -> j`` means ``s_j`` comes before ``s_k`` in
every reduced word.  Words are many-to-one, so the diagram is the canonical
form and words are produced on demand.
"""

from __future__ import annotations

import heapq
import itertools
import json
from collections.abc import Iterable, Iterator
from dataclasses import dataclass

from .root_system import RootSystem

__all__ = [
    "NotBooleanError",
    "BooleanElement",
    "identity",
    "from_reduced_word",
    "from_diagram",
    "to_reduced_word",
    "reduced_words",
    "diagram_contains",
    "accessible_subgraph",
    "induced",
    "sub_elements",
    "enumerate_boolean",
    "parse_element",
    "element_to_json",
    "element_from_json",
    "element_to_text",
]

Edge = tuple[int, int]


class NotBooleanError(ValueError):
    """The input does not describe a boolean element."""


@dataclass(frozen=True)
class BooleanElement:
    """Support and oriented edges ``(source, target)`` of a boolean diagram.

    The constructor trusts its input; use :func:`from_diagram` or
    :func:`from_reduced_word` for validated construction.
    """

    rs: RootSystem
    support: frozenset[int]
    edges: frozenset[Edge]

    @property
    def length(self) -> int:
        return len(self.support)

    def out_neighbors(self, i: int) -> list[int]:
        return [b for a, b in self.edges if a == i]

    def sort_key(self) -> tuple:
        return (len(self.support), tuple(sorted(self.support)), tuple(sorted(self.edges)))

    def __hash__(self):
        # frozensets cache their own hashes; rs still takes part in __eq__
        return hash((self.support, self.edges))

    def __lt__(self, other: BooleanElement) -> bool:
        return self.sort_key() < other.sort_key()

    def __repr__(self) -> str:
        return f"BooleanElement({self.rs.name}, {element_to_text(self)})"


def identity(rs: RootSystem) -> BooleanElement:
    return BooleanElement(rs, frozenset(), frozenset())


def _check_index(rs: RootSystem, i: int) -> None:
    if not (isinstance(i, int) and 1 <= i <= rs.rank):
        raise NotBooleanError(f"simple root index {i!r} out of range for {rs.name}")


def from_reduced_word(rs: RootSystem, word: Iterable[int]) -> BooleanElement:
    """Diagram of ``s_{word[0]} s_{word[1]} ...``; letters must be distinct."""
    word = list(word)
    pos: dict[int, int] = {}
    for p, i in enumerate(word):
        _check_index(rs, i)
        if i in pos:
            raise NotBooleanError(f"repeated generator s_{i} in word {word}")
        pos[i] = p
    edges = set()
    for a, b in rs.dynkin_edges():
        if a in pos and b in pos:
            # the later letter points at the earlier one
            edges.add((a, b) if pos[a] > pos[b] else (b, a))
    return BooleanElement(rs, frozenset(pos), frozenset(edges))


def from_diagram(rs: RootSystem, support: Iterable[int], edges: Iterable[Edge]) -> BooleanElement:
    support = frozenset(support)
    for i in support:
        _check_index(rs, i)
    edges = frozenset((int(a), int(b)) for a, b in edges)
    wanted = {(a, b) for a, b in rs.dynkin_edges() if a in support and b in support}
    seen = set()
    for a, b in edges:
        key = (min(a, b), max(a, b))
        if key not in wanted:
            raise NotBooleanError(f"edge {a}->{b} is not a Dynkin edge inside the support")
        if key in seen:
            raise NotBooleanError(f"edge {key} oriented twice")
        seen.add(key)
    if seen != wanted:
        missing = sorted(wanted - seen)
        raise NotBooleanError(f"unoriented Dynkin edges in support: {missing}")
    return BooleanElement(rs, support, edges)


def to_reduced_word(b: BooleanElement) -> list[int]:
    """Lexicographically smallest reduced word of ``b``."""
    # k must come after every out-neighbour j of k
    waiting = {i: 0 for i in b.support}
    blocks: dict[int, list[int]] = {i: [] for i in b.support}
    for k, j in b.edges:
        waiting[k] += 1
        blocks[j].append(k)
    heap = [i for i, n in waiting.items() if n == 0]
    heapq.heapify(heap)
    word = []
    while heap:
        j = heapq.heappop(heap)
        word.append(j)
        for k in blocks[j]:
            waiting[k] -= 1
            if waiting[k] == 0:
                heapq.heappush(heap, k)
    return word


def reduced_words(b: BooleanElement) -> Iterator[list[int]]:
    """All reduced words of ``b`` (the linear extensions of its diagram)."""
    preds = {i: {j for k, j in b.edges if k == i} for i in b.support}

    def extend(prefix: list[int], placed: set[int]):
        if len(prefix) == len(b.support):
            yield list(prefix)
            return
        for i in sorted(b.support - placed):
            if preds[i] <= placed:
                prefix.append(i)
                placed.add(i)
                yield from extend(prefix, placed)
                placed.discard(i)
                prefix.pop()

    yield from extend([], set())


def diagram_contains(inner: BooleanElement, outer: BooleanElement) -> bool:
    """True iff B(inner) is a subdiagram of B(outer) with the same edge directions."""
    return inner.support <= outer.support and inner.edges <= outer.edges


def accessible_subgraph(b: BooleanElement, i: int) -> set[int]:
    """Vertices reachable from ``i`` along directed edges of B(b), including ``i``."""
    if i not in b.support:
        raise ValueError(f"alpha_{i} is not in the support {sorted(b.support)}")
    seen = {i}
    stack = [i]
    while stack:
        x = stack.pop()
        for a, y in b.edges:
            if a == x and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def induced(w: BooleanElement, subset: Iterable[int]) -> BooleanElement:
    """The subdiagram of B(w) induced on ``subset`` (which must lie in the support)."""
    subset = frozenset(subset)
    return BooleanElement(
        w.rs, subset, frozenset(e for e in w.edges if e[0] in subset and e[1] in subset)
    )


def sub_elements(w: BooleanElement) -> list[BooleanElement]:
    """Every boolean u with B(u) contained in B(w), i.e. the interval [id, w]."""
    supp = sorted(w.support)
    return [
        induced(w, combo)
        for size in range(len(supp) + 1)
        for combo in itertools.combinations(supp, size)
    ]


def enumerate_boolean(rs: RootSystem) -> Iterator[BooleanElement]:
    """All boolean elements of the Weyl group, each exactly once.

    Order: supports by size then lexicographically; within a support, bit k
    of a binary counter orients the k-th edge (sorted): 0 means low -> high.
    """
    all_edges = rs.dynkin_edges()
    for size in range(rs.rank + 1):
        for combo in itertools.combinations(rs.indices, size):
            supp = frozenset(combo)
            inside = [(a, b) for a, b in all_edges if a in supp and b in supp]
            for mask in range(2 ** len(inside)):
                edges = frozenset(
                    (b, a) if mask >> k & 1 else (a, b) for k, (a, b) in enumerate(inside)
                )
                yield BooleanElement(rs, supp, edges)


# text / json encodings


def element_to_json(b: BooleanElement) -> dict:
    return {"support": sorted(b.support), "edges": [list(e) for e in sorted(b.edges)]}


def element_from_json(rs: RootSystem, data: dict) -> BooleanElement:
    if "word" in data:
        return from_reduced_word(rs, [int(i) for i in data["word"]])
    if "support" in data:
        return from_diagram(rs, [int(i) for i in data["support"]], data.get("edges", []))
    raise NotBooleanError(f"element needs 'word' or 'support': {data!r}")


def element_to_text(b: BooleanElement) -> str:
    supp = ",".join(map(str, sorted(b.support)))
    edges = ",".join(f"{a}>{b_}" for a, b_ in sorted(b.edges))
    return f"diagram:{{{supp};{edges}}}"


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise NotBooleanError(f"expected comma-separated integers, got {text!r}") from None


def parse_element(rs: RootSystem, text: str) -> BooleanElement:
    """Parse ``word:3,2,4``, ``diagram:{2,3,4;4>3,4>2}``, ``id`` or a JSON object."""
    text = text.strip()
    if text in ("id", "e", ""):
        return identity(rs)
    if text.startswith("{"):
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise NotBooleanError(f"bad JSON element: {exc}") from None
        return element_from_json(rs, data)
    kind, sep, body = text.partition(":")
    if not sep:
        raise NotBooleanError(f"element must start with 'word:' or 'diagram:', got {text!r}")
    if kind == "word":
        return from_reduced_word(rs, _ints(body))
    if kind == "diagram":
        body = body.strip()
        if not (body.startswith("{") and body.endswith("}")):
            raise NotBooleanError(f"diagram must look like {{support;edges}}, got {body!r}")
        supp_text, _, edge_text = body[1:-1].partition(";")
        edges = []
        for item in filter(None, (e.strip() for e in edge_text.split(","))):
            a, arrow, b = item.partition(">")
            if not arrow:
                raise NotBooleanError(f"edge must look like 'a>b', got {item!r}")
            edges.append((int(a), int(b)))
        return from_diagram(rs, _ints(supp_text), edges)
    raise NotBooleanError(f"unknown element kind {kind!r}")
