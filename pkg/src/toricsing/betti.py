"""Fibers, fiber graphs, Betti degrees and minimal generating sets of toric ideals.

For an A-degree ``b`` the fiber graph has the monomials of degree ``b`` as
vertices, two of them being adjacent when their difference lies in the ideal
generated by binomials of strictly smaller degree.  ``b`` is a Betti degree
exactly when this graph is disconnected; a minimal generating set then picks,
for every Betti degree, binomials along a spanning tree of the complete graph
on its components (one vertex pair per tree edge).
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from math import prod
from typing import Iterable, Optional, Sequence

from .algebra import (
    Binomial,
    MarkedBasis,
    Monomial,
    TermOrder,
    buchberger,
    format_monomial,
    make_binomial,
    monomial_normal_form,
    reduce,
)
from .dynkin import Configuration
from .errors import BudgetExceeded
from .lattice import det, enumerate_fiber, in_semigroup
from .toric import ToricIdeal, adegree

DEFAULT_FIBER_LIMIT = 10**6
MODES = ("gcd", "ideal")


@dataclass(frozen=True)
class Fiber:
    degree: tuple[int, ...]
    monomials: tuple[Monomial, ...]

    def __len__(self) -> int:
        return len(self.monomials)


@dataclass(frozen=True)
class FiberGraph:
    fiber: Fiber
    components: tuple[tuple[Monomial, ...], ...]
    mode: str
    edges: frozenset = field(default=frozenset(), compare=False)

    @property
    def is_disconnected(self) -> bool:
        return len(self.components) > 1

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    def partition(self) -> frozenset:
        return frozenset(frozenset(c) for c in self.components)


@dataclass(frozen=True)
class BettiReport:
    betti_degrees: tuple[tuple[tuple[int, ...], int, tuple[int, ...]], ...]
    indispensables: tuple[Binomial, ...]
    min_gen_set_count: int
    sample_min_gen_set: tuple[Binomial, ...]

    def to_dict(self, names: Optional[Sequence[str]] = None) -> dict:
        return {
            "betti_degrees": [{"degree": list(b), "components": k, "sizes": list(s)}
                              for b, k, s in self.betti_degrees],
            "indispensables": [_binomial_dict(g, names) for g in self.indispensables],
            "min_gen_set_count": self.min_gen_set_count,
            "sample_min_gen_set": [_binomial_dict(g, names) for g in self.sample_min_gen_set],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "BettiReport":
        return cls(
            tuple((tuple(e["degree"]), e["components"], tuple(e["sizes"])) for e in d["betti_degrees"]),
            tuple(Binomial(tuple(g["lead"]), tuple(g["trail"]), True) for g in d["indispensables"]),
            int(d["min_gen_set_count"]),
            tuple(Binomial(tuple(g["lead"]), tuple(g["trail"]), True) for g in d["sample_min_gen_set"]),
        )


def _binomial_dict(g: Binomial, names) -> dict:
    out = {"lead": list(g.lead), "trail": list(g.trail)}
    if names is not None:
        out["text"] = g.format(names)
    return out


# ---------------------------------------------------------------------------
# fibers and fiber graphs


def fiber(c: Configuration, b: Sequence[int], limit: Optional[int] = DEFAULT_FIBER_LIMIT) -> Fiber:
    """All monomials of A-degree ``b`` (depth-first order, deterministic)."""
    b = tuple(int(v) for v in b)
    if len(b) != c.n:
        raise ValueError(f"degree of length {len(b)} for a configuration in dimension {c.n}")
    if any(v < 0 for v in b):
        raise ValueError("degree must be componentwise nonnegative")
    return Fiber(b, tuple(enumerate_fiber(c.points, b, limit)))


class _UnionFind:
    def __init__(self, n: int) -> None:
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        if ra > rb:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return True


def _components(mons: Sequence[Monomial], uf: _UnionFind) -> tuple[tuple[Monomial, ...], ...]:
    groups: dict[int, list[Monomial]] = {}
    for i, m in enumerate(mons):
        groups.setdefault(uf.find(i), []).append(m)
    return tuple(tuple(g) for _, g in sorted(groups.items()))


def strictly_below(c: Configuration, lower: Sequence[int], upper: Sequence[int],
                   limit: Optional[int] = DEFAULT_FIBER_LIMIT) -> bool:
    """``upper - lower`` is a nonzero element of the semigroup NA."""
    diff = [u - l for u, l in zip(upper, lower)]
    if any(v < 0 for v in diff) or not any(diff):
        return False
    return in_semigroup(c.points, diff, limit)


def _below_degree_ideal(I: ToricIdeal, b: Sequence[int], limit: Optional[int],
                        max_steps: Optional[int], cache: Optional[dict]) -> MarkedBasis:
    """Groebner basis of the ideal generated by the elements of ``I`` of degree strictly below ``b``.

    Any binomial generating set of a toric ideal connects every fiber by moves
    of no larger degree, so the reduced GB elements below ``b`` generate that ideal.
    """
    c = I.config
    gens = [g for g in I.reduced_gb if strictly_below(c, adegree(c, g.lead), b, limit)]
    key = frozenset((g.lead, g.trail) for g in gens)
    if cache is not None and key in cache:
        return cache[key]
    gb = buchberger(gens, I.order, max_steps, c.names)
    if cache is not None:
        cache[key] = gb
    return gb


def fiber_graph(c: Configuration, b: Sequence[int], mode: str = "gcd", I: Optional[ToricIdeal] = None,
                limit: Optional[int] = DEFAULT_FIBER_LIMIT, max_steps: Optional[int] = None,
                with_edges: bool = False, _cache: Optional[dict] = None) -> FiberGraph:
    """Fiber graph at degree ``b``.

    ``mode="ideal"`` decides adjacency by membership in the ideal generated by
    the binomials of strictly smaller degree (needs ``I``): two monomials are
    adjacent iff they have the same normal form modulo a Groebner basis of it.
    ``mode="gcd"`` joins monomials sharing a variable; such pairs are always
    adjacent in the ideal sense, and on every tested ideal the partitions agree.
    """
    if mode not in MODES:
        raise ValueError(f"unknown fiber-graph mode {mode!r}")
    F = fiber(c, b, limit)
    mons = F.monomials
    uf = _UnionFind(len(mons))
    edges = set()
    if mode == "gcd":
        first_with: dict[int, int] = {}
        for i, m in enumerate(mons):
            for v, e in enumerate(m):
                if e:
                    j = first_with.setdefault(v, i)
                    if j != i:
                        uf.union(i, j)
        if with_edges:
            for (i, p), (j, q) in combinations(enumerate(mons), 2):
                if any(x and y for x, y in zip(p, q)):
                    edges.add(frozenset((p, q)))
    else:
        if I is None:
            raise ValueError("ideal mode needs the toric ideal")
        gb = _below_degree_ideal(I, F.degree, limit, max_steps, _cache)
        classes: dict[Monomial, int] = {}
        for i, m in enumerate(mons):
            nf = monomial_normal_form(m, gb, max_steps) if len(gb) else m
            j = classes.setdefault(nf, i)
            if j != i:
                uf.union(i, j)
        if with_edges:
            for (i, p), (j, q) in combinations(enumerate(mons), 2):
                if uf.find(i) == uf.find(j):
                    edges.add(frozenset((p, q)))
    return FiberGraph(F, _components(mons, uf), mode, frozenset(edges))


# ---------------------------------------------------------------------------
# Betti degrees


def candidate_degrees(I: ToricIdeal) -> list[tuple[int, ...]]:
    """A-degrees of the reduced GB elements (a generating set), deduplicated and sorted."""
    c = I.config
    return sorted({adegree(c, g.lead) for g in I.reduced_gb}, key=lambda b: (sum(b), b))


def _graph_task(args) -> FiberGraph:
    I, b, mode, limit, max_steps = args
    return fiber_graph(I.config, b, mode, I, limit, max_steps)


def betti_graphs(I: ToricIdeal, mode: str = "gcd", limit: Optional[int] = DEFAULT_FIBER_LIMIT,
                 max_steps: Optional[int] = None, jobs: int = 1) -> list[FiberGraph]:
    """Disconnected fiber graphs over the candidate degrees.

    Degrees are independent; with ``jobs > 1`` they are analysed in worker
    processes and merged in candidate order.
    """
    degrees = candidate_degrees(I)
    if jobs > 1 and len(degrees) > 1:
        with ProcessPoolExecutor(jobs) as pool:
            graphs = list(pool.map(_graph_task, [(I, b, mode, limit, max_steps) for b in degrees]))
    else:
        cache: dict = {}
        graphs = [fiber_graph(I.config, b, mode, I, limit, max_steps, _cache=cache) for b in degrees]
    return [G for G in graphs if G.is_disconnected]


def betti_degrees(I: ToricIdeal, mode: str = "gcd", limit: Optional[int] = DEFAULT_FIBER_LIMIT) -> list[tuple[int, ...]]:
    return [G.fiber.degree for G in betti_graphs(I, mode, limit)]


def indispensable_binomials(I: ToricIdeal, mode: str = "gcd", limit: Optional[int] = DEFAULT_FIBER_LIMIT,
                            graphs: Optional[list[FiberGraph]] = None) -> list[Binomial]:
    """Binomials from Betti degrees whose fiber graph is two isolated monomials."""
    if graphs is None:
        graphs = betti_graphs(I, mode, limit)
    out = []
    for G in graphs:
        if G.sizes == (1, 1):
            b = make_binomial(G.components[0][0], G.components[1][0], I.order)
            if b is not None:
                out.append(b)
    return out


# ---------------------------------------------------------------------------
# counting and extracting minimal generating sets


def weighted_spanning_trees(weights: Sequence[Sequence[int]]) -> int:
    """Weighted spanning-tree count of a multigraph (matrix-tree theorem).

    ``weights[i][j]`` is the number of parallel edges between ``i`` and ``j``.
    """
    k = len(weights)
    if k <= 1:
        return 1
    lap = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(k):
            if i != j:
                lap[i][j] = -weights[i][j]
                lap[i][i] += weights[i][j]
    return det([row[1:] for row in lap[1:]])


def component_tree_count(sizes: Sequence[int]) -> int:
    """Spanning trees of the complete multigraph with ``|G_i| |G_j|`` edges between components."""
    return weighted_spanning_trees([[si * sj if i != j else 0 for j, sj in enumerate(sizes)]
                                    for i, si in enumerate(sizes)])


def component_tree_count_closed(sizes: Sequence[int]) -> int:
    """Closed form ``(prod s_i) * (sum s_i)^(k-2)`` of :func:`component_tree_count`."""
    k = len(sizes)
    if k <= 1:
        return 1
    return prod(sizes) * sum(sizes) ** (k - 2)


def count_minimal_generating_sets(I: ToricIdeal, mode: str = "gcd", limit: Optional[int] = DEFAULT_FIBER_LIMIT,
                                  graphs: Optional[list[FiberGraph]] = None) -> int:
    if graphs is None:
        graphs = betti_graphs(I, mode, limit)
    return prod(component_tree_count(G.sizes) for G in graphs)


def _prufer_decode(seq: Sequence[int], k: int) -> list[tuple[int, int]]:
    degree = [1] * k
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = next(i for i in range(k) if degree[i] == 1)
        edges.append((min(leaf, v), max(leaf, v)))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (i for i in range(k) if degree[i] == 1)
    edges.append((u, w))
    return sorted(edges)


def tree_by_index(k: int, index: int) -> list[tuple[int, int]]:
    """The ``index``-th labelled tree on ``k`` vertices, in lexicographic Pruefer-code order."""
    if k <= 1:
        return []
    if k == 2:
        return [(0, 1)]
    digits = []
    for _ in range(k - 2):
        index, r = divmod(index, k)
        digits.append(r)
    return _prufer_decode(digits[::-1], k)


def all_trees(k: int) -> list[list[tuple[int, int]]]:
    return [tree_by_index(k, i) for i in range(max(1, k ** (k - 2)) if k > 1 else 1)]


def _degree_choice(G: FiberGraph, rng: random.Random, order: TermOrder,
                   prefer: Sequence[Binomial]) -> list[Binomial]:
    comps = G.components
    k = len(comps)
    where = {m: i for i, comp in enumerate(comps) for m in comp}
    uf = _UnionFind(k)
    chosen: list[Binomial] = []
    for g in prefer:
        i, j = where.get(g.lead), where.get(g.trail)
        if i is not None and j is not None and uf.union(i, j):
            chosen.append(g)
    tree = tree_by_index(k, rng.randrange(k ** (k - 2)) if k > 2 else 0)
    for i, j in tree:
        if uf.union(i, j):
            p = comps[i][rng.randrange(len(comps[i]))]
            q = comps[j][rng.randrange(len(comps[j]))]
            chosen.append(make_binomial(p, q, order))
    # preferred edges may leave gaps that the random tree does not close
    for i, j in combinations(range(k), 2):
        if uf.union(i, j):
            chosen.append(make_binomial(comps[i][0], comps[j][0], order))
    return chosen


def extract_minimal_generating_set(I: ToricIdeal, seed: int = 0, prefer: Iterable[Binomial] = (),
                                   mode: str = "gcd", limit: Optional[int] = DEFAULT_FIBER_LIMIT,
                                   graphs: Optional[list[FiberGraph]] = None) -> list[Binomial]:
    """One minimal generating set, chosen per Betti degree from ``seed``.

    Binomials in ``prefer`` are used first wherever they join two components of
    their degree's fiber graph; the rest follows a seeded random spanning tree
    and seeded vertex choices.
    """
    if graphs is None:
        graphs = betti_graphs(I, mode, limit)
    prefer = list(prefer)
    rng = random.Random(seed)
    out: list[Binomial] = []
    for G in graphs:
        out.extend(_degree_choice(G, rng, I.order, prefer))
    return out


def enumerate_minimal_generating_sets(I: ToricIdeal, cap: int = 10**4, mode: str = "gcd",
                                      limit: Optional[int] = DEFAULT_FIBER_LIMIT) -> set[frozenset]:
    """Every minimal generating set (as sets of unordered monomial pairs), by brute force."""
    graphs = betti_graphs(I, mode, limit)
    per_degree: list[list[frozenset]] = []
    total = 1
    for G in graphs:
        options = set()
        for tree in all_trees(len(G.components)):
            partial = [frozenset()]
            for i, j in tree:
                partial = [s | {frozenset((p, q))} for s in partial
                           for p in G.components[i] for q in G.components[j]]
            options.update(partial)
        per_degree.append(list(options))
        total *= len(options)
        if total > cap:
            raise BudgetExceeded(f"more than {cap} minimal generating sets")
    results = {frozenset()}
    for opts in per_degree:
        results = {r | o for r in results for o in opts}
    return results


def generates(gens: Sequence[Binomial], I: ToricIdeal, max_steps: Optional[int] = None) -> bool:
    """Do ``gens`` (assumed to lie in ``I``) generate ``I``?"""
    gb = buchberger(list(gens), I.order, max_steps, I.config.names)
    return all(reduce(g, gb, I.order) is None for g in I.reduced_gb)


def minimality_check(gens: Sequence[Binomial], I: ToricIdeal, max_steps: Optional[int] = None,
                     limit: Optional[int] = DEFAULT_FIBER_LIMIT) -> bool:
    """True iff ``gens`` generate ``I`` and no element is redundant.

    Graded argument: an element of degree ``b`` is redundant iff it lies in the
    ideal generated by the other elements of degree at most ``b``, so each
    redundancy test only involves generators of comparable smaller degree.
    """
    gens = list(gens)
    if not gens:
        return I.is_zero
    if not generates(gens, I, max_steps):
        return False
    c = I.config
    if len({(g.lead, g.trail) for g in gens} | {(g.trail, g.lead) for g in gens}) < 2 * len(gens):
        return False  # a repeated binomial is redundant
    degs = [adegree(c, g.lead) for g in gens]
    cache: dict = {}
    for idx, g in enumerate(gens):
        b = degs[idx]
        others = [h for j, h in enumerate(gens)
                  if j != idx and (degs[j] == b or strictly_below(c, degs[j], b, limit))]
        key = frozenset((h.lead, h.trail) for h in others)
        gb = cache.get(key)
        if gb is None:
            gb = cache[key] = buchberger(others, I.order, max_steps, c.names)
        if reduce(g, gb, I.order) is None:
            return False
    return True


def betti_report(I: ToricIdeal, mode: str = "gcd", fiber_limit: Optional[int] = None, seed: int = 0,
                 prefer: Iterable[Binomial] = (), jobs: int = 1) -> BettiReport:
    limit = fiber_limit or DEFAULT_FIBER_LIMIT
    graphs = betti_graphs(I, mode, limit, jobs=jobs)
    degs = tuple((G.fiber.degree, len(G.components), G.sizes) for G in graphs)
    ind = tuple(indispensable_binomials(I, graphs=graphs))
    count = count_minimal_generating_sets(I, graphs=graphs)
    sample = tuple(extract_minimal_generating_set(I, seed, prefer, graphs=graphs))
    return BettiReport(degs, ind, count, sample)


def fiber_graphs_dot(graphs: Sequence[FiberGraph], names: Optional[Sequence[str]] = None) -> str:
    """Graphviz description: one cluster per degree, one node per monomial."""
    lines = ["graph fibers {", "  node [shape=box];"]
    for gi, G in enumerate(graphs):
        lines.append(f"  subgraph cluster_{gi} {{")
        lines.append(f'    label="{",".join(map(str, G.fiber.degree))}";')
        ids = {}
        for ci, comp in enumerate(G.components):
            for m in comp:
                node = f"d{gi}_m{len(ids)}"
                ids[m] = node
                lines.append(f'    {node} [label="{format_monomial(m, names)}", group=c{ci}];')
        edges = G.edges
        if not edges:
            # draw a path through every component so the partition stays visible
            edges = {frozenset((comp[i], comp[i + 1])) for comp in G.components for i in range(len(comp) - 1)}
        for e in sorted(edges, key=lambda e: sorted(ids[m] for m in e)):
            a, b = sorted(ids[m] for m in e)
            lines.append(f"    {a} -- {b};")
        lines.append("  }")
    lines.append("}")
    return "\n".join(lines) + "\n"
