"""Timing of the type-A fast path on seeded random boolean triples."""

from __future__ import annotations

import math
import random
import statistics
import time
from collections.abc import Sequence

from .boolean_core import BooleanElement, induced
from .fast_path import find_insertion_path_type_a
from .root_system import build_root_system

__all__ = ["random_triple_type_a", "triple_corpus", "benchmark", "loglog_slope"]


def random_triple_type_a(
    n: int, rng: random.Random, density: float = 0.85
) -> tuple[BooleanElement, BooleanElement, BooleanElement]:
    """A random (u, v, w) in A_n admitting a non-equivariant path u ->supp(v) w.

    w gets a random support and orientation, u a random induced subdiagram,
    and v is read off a random insertion path grown from u inside B(w).
    """
    rs = build_root_system("A", n)
    support = frozenset(i for i in rs.indices if rng.random() < density)
    right = {a: rng.random() < 0.5 for a in range(1, n)}
    edges = frozenset(
        (a, a + 1) if right[a] else (a + 1, a)
        for a in range(1, n)
        if a in support and a + 1 in support
    )
    w = BooleanElement(rs, support, edges)
    cur = {x for x in support if rng.random() < 0.5}
    u = induced(w, cur)
    used: set[int] = set()
    missing = sorted(support - cur)
    rng.shuffle(missing)
    for g in missing:
        # roots able to add g: g itself, or any vertex of cur reaching g
        options = [g] if g not in used else []
        for step in (-1, 1):
            k = g + step
            while k in cur and 1 <= k <= n and _points(right, k, k - step):
                if k not in used:
                    options.append(k)
                k += step
        if not options:
            continue
        i = rng.choice(options)
        used.add(i)
        cur.add(g)
    w = induced(w, cur)
    return u, induced(w, used), w


def _points(right: dict[int, bool], a: int, b: int) -> bool:
    """Whether the Dynkin edge between adjacent a, b is oriented a -> b."""
    return right[a] if b == a + 1 else not right[b]


def triple_corpus(n: int, samples: int, seed: int) -> list[tuple]:
    rng = random.Random(f"{seed}:{n}")
    return [random_triple_type_a(n, rng) for _ in range(samples)]


def loglog_slope(ns: Sequence[int], times: Sequence[float]) -> float:
    """Least-squares slope of log(time) against log(n)."""
    xs = [math.log(n) for n in ns]
    ys = [math.log(t) for t in times]
    mx, my = statistics.fmean(xs), statistics.fmean(ys)
    num = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    den = sum((x - mx) ** 2 for x in xs)
    return num / den


def benchmark(n_list: Sequence[int], samples: int, seed: int, repeat: int = 3) -> dict:
    """Median/mean wall time per call for each n, plus the log-log slope of the medians.

    Each triple is timed ``repeat`` times and the fastest run kept, which
    filters scheduler noise without changing the corpus.
    """
    rows = []
    for n in n_list:
        corpus = triple_corpus(n, samples, seed)
        timings = []
        found = 0
        for u, v, w in corpus:
            best = math.inf
            for _ in range(repeat):
                t0 = time.perf_counter()
                path = find_insertion_path_type_a(u, v, w)
                best = min(best, time.perf_counter() - t0)
            timings.append(best)
            found += path is not None
        rows.append(
            {
                "n": n,
                "samples": samples,
                "median_s": statistics.median(timings),
                "mean_s": statistics.fmean(timings),
                "paths_found": found,
            }
        )
    slope = loglog_slope([r["n"] for r in rows], [r["median_s"] for r in rows]) if len(rows) > 1 else None
    return {"seed": seed, "results": rows, "loglog_slope": slope}
