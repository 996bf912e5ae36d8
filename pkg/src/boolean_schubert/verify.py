"""Exhaustive consistency sweeps over boolean triples of one root system.

Each suite returns ``{"checked": int, "mismatches": [...]}``; a mismatch
records the triple (or product) involved plus the expected and obtained
values.
"""

from __future__ import annotations

import itertools
import os
import random
from collections.abc import Iterator

from .boolean_core import (
    BooleanElement,
    element_to_json,
    enumerate_boolean,
    from_reduced_word,
    reduced_words,
    sub_elements,
)
from .constants import equivariant_constant, ordinary_constant
from .fast_path import fast_ordinary_constant_type_a, find_insertion_path_type_a
from .insertion import (
    boolean_product_expansion,
    chevalley_boolean_product,
    insertion_targets,
    path_exists_any_order,
    step_multiplicity,
)
from .oracle import ResourceLimitError, chevalley_constant, chevalley_multiply, enumerate_weyl, kk_constant
from .polynomial import Polynomial
from .root_system import RootSystem

__all__ = [
    "SUITES",
    "MAX_TRIPLES_ENV",
    "count_triples",
    "run_suite",
    "boolean_triples",
    "sampled_triples",
    "path_shaped",
]

MAX_TRIPLES_ENV = "BOOLEAN_SCHUBERT_MAX_TRIPLES"
# refuse exhaustive sweeps above this many triples unless truncated or sampled
DEFAULT_MAX_TRIPLES = 2_000_000


def path_shaped(rs: RootSystem) -> bool:
    """Whether the Dynkin diagram is a path (types A, B, C, F, G)."""
    return rs.lie_type in "ABCFG"


def boolean_triples(rs: RootSystem) -> Iterator[tuple[BooleanElement, BooleanElement, BooleanElement]]:
    """Every (u, v, w) of boolean elements with B(u), B(v) inside B(w)."""
    for w in enumerate_boolean(rs):
        subs = sub_elements(w)
        for u in subs:
            for v in subs:
                yield u, v, w


def _value(x):
    return x.to_json() if isinstance(x, Polynomial) else x


def _record(u, v, w, expected, got, **extra) -> dict:
    out = {
        "u": element_to_json(u),
        "v": element_to_json(v),
        "w": element_to_json(w),
        "expected": _value(expected),
        "got": _value(got),
    }
    out.update(extra)
    return out


def count_triples(rs: RootSystem, stop: int | None = None) -> int:
    """Number of triples :func:`boolean_triples` yields (or a value > ``stop``).

    A support S carries 2^(edges in S) elements, each with 2^|S| elements below.
    """
    edges = rs.dynkin_edges()
    total = 0
    for size in range(rs.rank + 1):
        for combo in itertools.combinations(rs.indices, size):
            supp = set(combo)
            inside = sum(1 for a, b in edges if a in supp and b in supp)
            total += 2**inside * 4**size
            if stop is not None and total > stop:
                return total
    return total


def sampled_triples(rs: RootSystem, samples: int, seed: int) -> Iterator[tuple]:
    """Seeded random triples; half of them satisfy l(u) + l(v) = l(w)."""
    rng = random.Random(f"{seed}:{rs.name}")
    elems = list(enumerate_boolean(rs))
    for _ in range(samples):
        w = rng.choice(elems)
        subs = sub_elements(w)
        u = rng.choice(subs)
        fitting = [v for v in subs if v.length == w.length - u.length]
        v = rng.choice(fitting) if fitting and rng.random() < 0.5 else rng.choice(subs)
        yield u, v, w


class _Budget:
    def __init__(self, limit: int | None, sample: int | None = None, seed: int = 0):
        self.limit = limit
        self.sample = sample
        self.seed = seed
        self.checked = 0

    def triples(self, rs):
        if self.sample is None:
            return boolean_triples(rs)
        return sampled_triples(rs, self.sample, self.seed)

    def spend(self) -> bool:
        if self.limit is not None and self.checked >= self.limit:
            return False
        self.checked += 1
        return True


def _suite_kk(rs, budget):
    bad = []
    for u, v, w in budget.triples(rs):
        if not budget.spend():
            break
        expected = kk_constant(u, v, w)
        got = equivariant_constant(u, v, w).to_root()
        if expected != got:
            bad.append(_record(u, v, w, expected, got))
    return bad


def _suite_chevalley(rs, budget):
    """Boolean Chevalley rule and the full product, against the Weyl-group oracle."""
    group = enumerate_weyl(rs)
    bad = []
    for v in enumerate_boolean(rs):
        vx = group.from_boolean(v)
        for i in rs.indices:
            if not budget.spend():
                return bad
            full = chevalley_multiply(group, {vx: _one_root(rs)}, i)
            expected = {
                group.to_boolean(x): c.to_weight() for x, c in full.items() if group.is_boolean(x)
            }
            got = chevalley_boolean_product(v, i)
            if expected != got:
                s_i = from_reduced_word(rs, [i])
                for w in sorted(set(expected) | set(got)):
                    e, g = expected.get(w, 0), got.get(w, 0)
                    if e != g:
                        bad.append(_record(v, s_i, w, e, g, check="boolean_chevalley"))
    for u, v, w in budget.triples(rs):
        if not budget.spend():
            break
        expected = kk_constant(u, v, w)
        got = chevalley_constant(u, v, w)
        if expected != got:
            bad.append(_record(u, v, w, expected, got, check="chevalley_constant"))
    return bad


def _one_root(rs):
    from .polynomial import RootPolynomial

    return RootPolynomial.one(rs.rank)


def _require_type_a(rs, suite):
    if rs.lie_type != "A":
        raise ValueError(f"suite {suite!r} applies to type A only")


def _suite_zero_one(rs, budget):
    _require_type_a(rs, "zero-one")
    bad = []
    for u, v, w in budget.triples(rs):
        if not budget.spend():
            break
        c = ordinary_constant(u, v, w)
        if c not in (0, 1):
            bad.append(_record(u, v, w, "0 or 1", c))
    return bad


def _suite_symmetry(rs, budget):
    bad = []
    for u, v, w in budget.triples(rs):
        if not budget.spend():
            break
        a = equivariant_constant(u, v, w)
        b = equivariant_constant(v, u, w)
        if a != b:
            bad.append(_record(u, v, w, a, b))
    return bad


def _root_orderings(rs):
    for size in range(rs.rank + 1):
        for subset in itertools.combinations(rs.indices, size):
            yield subset, list(itertools.permutations(subset))


def _suite_ordering(rs, budget):
    bad = []
    ident = from_reduced_word(rs, [])
    for u in enumerate_boolean(rs):
        for subset, orders in _root_orderings(rs):
            reference = boolean_product_expansion(u, subset, orders[0])
            for order in orders[1:]:
                if not budget.spend():
                    return bad
                got = boolean_product_expansion(u, subset, order)
                if got != reference:
                    for w in sorted(set(reference) | set(got)):
                        e, g = reference.get(w, 0), got.get(w, 0)
                        if e != g:
                            bad.append(
                                _record(u, ident, w, e, g, roots=list(subset), ordering=list(order))
                            )
    return bad


def _count_paths(u, order):
    """Number of non-equivariant insertion paths from u, per endpoint."""
    current = {u: 1}
    for beta in order:
        nxt: dict = {}
        for x, n in current.items():
            for step in insertion_targets(x, beta):
                if not step.equivariant:
                    nxt[step.target] = nxt.get(step.target, 0) + n
        current = nxt
    return current


def _suite_uniqueness(rs, budget):
    if not path_shaped(rs):
        raise ValueError(f"uniqueness applies to path-shaped Dynkin diagrams, not {rs.name}")
    bad = []
    ident = from_reduced_word(rs, [])
    for u in enumerate_boolean(rs):
        for _, orders in _root_orderings(rs):
            for order in orders:
                if not budget.spend():
                    return bad
                for w, n in _count_paths(u, order).items():
                    if n > 1:
                        bad.append(_record(u, ident, w, "at most 1 path", n, ordering=list(order)))
    return bad


def _valid_path(path, u, v, w) -> bool:
    if path.start != u or path.end != w or not path.is_chain():
        return False
    if sorted(path.roots) != sorted(v.support):
        return False
    try:
        return all(
            not s.equivariant and step_multiplicity(s.source, s.root, s.target) == s.multiplicity
            for s in path.steps
        )
    except ValueError:
        return False


def _suite_fastpath(rs, budget):
    _require_type_a(rs, "fastpath")
    bad = []
    for u, v, w in budget.triples(rs):
        if not budget.spend():
            break
        exists = u.length + v.length == w.length and path_exists_any_order(
            u, v.support, w, equivariant=False
        )
        path = find_insertion_path_type_a(u, v, w)
        if (path is not None) != exists:
            bad.append(_record(u, v, w, exists, path is not None, check="existence"))
        elif path is not None and not _valid_path(path, u, v, w):
            bad.append(_record(u, v, w, "valid path", list(path.roots), check="path"))
        c, f = ordinary_constant(u, v, w), fast_ordinary_constant_type_a(u, v, w)
        if c != f:
            bad.append(_record(u, v, w, c, f, check="constant"))
    return bad


def _suite_words(rs, budget):
    """Kostant-Kumar value is the same for every reduced word of w, and positive."""
    bad = []
    for u, v, w in budget.triples(rs):
        words = list(reduced_words(w))
        if not budget.spend():
            break
        reference = kk_constant(u, v, w, words[0])
        if not reference.has_nonnegative_coefficients():
            bad.append(_record(u, v, w, "non-negative coefficients", reference, word=words[0]))
        for word in words[1:]:
            got = kk_constant(u, v, w, word)
            if got != reference:
                bad.append(_record(u, v, w, reference, got, word=word))
    return bad


SUITES = {
    "kk": _suite_kk,
    "chevalley": _suite_chevalley,
    "zero-one": _suite_zero_one,
    "symmetry": _suite_symmetry,
    "ordering": _suite_ordering,
    "uniqueness": _suite_uniqueness,
    "fastpath": _suite_fastpath,
    "words": _suite_words,
}


def run_suite(
    name: str,
    rs: RootSystem,
    max_checks: int | None = None,
    sample: int | None = None,
    seed: int = 0,
) -> dict:
    """Run one suite.

    ``max_checks`` truncates the sweep deterministically; ``sample`` replaces
    the exhaustive triple sweep by that many seeded random triples (suites
    that do not sweep triples ignore it).
    """
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {sorted(SUITES)}")
    if max_checks is None and sample is None:
        raw = os.environ.get(MAX_TRIPLES_ENV)
        bound = int(raw) if raw else DEFAULT_MAX_TRIPLES
        # 2^rank supports at most 4^rank triples each; skip the count when hopeless
        if rs.rank > 2 * bound.bit_length() or count_triples(rs, bound) > bound:
            raise ResourceLimitError(
                f"exhaustive sweep of {rs.name} exceeds {bound} triples; pass a check "
                f"limit, sample, or set {MAX_TRIPLES_ENV}"
            )
    budget = _Budget(max_checks, sample, seed)
    mismatches = SUITES[name](rs, budget)
    return {
        "suite": name,
        "lie_type": rs.lie_type,
        "rank": rs.rank,
        "sampled": sample is not None,
        "checked": budget.checked,
        "mismatches": mismatches,
    }
