"""Builders for the graph families this package studies.

The central construction starts from an "underlying" graph F whose
vertex set becomes an independent specified set D, replaces every F-edge
v_i v_j by a pair of subdivision vertices (each adjacent to exactly v_i
and v_j), optionally adds supplementary Y-vertices whose D-neighbourhood
is a clique of F of size >= 2, and finally adds supplementary edges among
the non-D vertices, keeping each subdivision pair independent.

Built instances use a canonical numbering: D first (F order), then the
pairs in lexicographic F-edge order (first subdivision vertex before the
second), then the Y-vertices.  Human-readable names for the vertices are
kept in a labels side table, never in the graph itself.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Optional, Sequence

from .graph import Graph, from_edges
from .solvers import CnfFormula, triple_cover_holds

RANDOM_INSTANCE_ATTEMPTS = 1000


# ---------------------------------------------------------------------------
# Standard graphs
# ---------------------------------------------------------------------------


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycles need >= 3 vertices, got {n}")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    if n < 1:
        raise ValueError(f"paths need >= 1 vertex, got {n}")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return from_edges(n, list(combinations(range(n), 2)))


def star(k: int) -> Graph:
    """Star with k leaves: centre 0, leaves 1..k (order k + 1)."""
    if k < 0:
        raise ValueError(f"leaf count must be >= 0, got {k}")
    return from_edges(k + 1, [(0, i) for i in range(1, k + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


def all_four_vertex_graphs() -> list[Graph]:
    """The 11 isomorphism classes of simple graphs on four vertices."""
    edge_sets: list[list[tuple[int, int]]] = [
        [],
        [(0, 1)],
        [(0, 1), (2, 3)],
        [(0, 1), (1, 2)],
        [(0, 1), (1, 2), (2, 3)],
        [(0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 2), (0, 2)],
        [(0, 1), (1, 2), (0, 2), (0, 3)],
        [(0, 1), (1, 2), (2, 3), (3, 0)],
        [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
        [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)],
    ]
    return [from_edges(4, es) for es in edge_sets]


# ---------------------------------------------------------------------------
# Specified-set constructions
# ---------------------------------------------------------------------------


class ConstructionError(ValueError):
    """A construction request violating one of the three building rules."""

    def __init__(self, rule: str, message: str):
        self.rule = rule
        super().__init__(f"rule {rule}: {message}")


@dataclass(frozen=True)
class ConstructionSpec:
    """Recipe for building a graph around an underlying graph ``f``.

    ``y_specs`` lists the D-neighbourhood of each supplementary vertex
    (a subset of V(f) of size >= 2 inducing a complete subgraph of f).
    ``supp_edges`` are extra edges among the subdivision/supplementary
    vertices, referenced in the canonical numbering of :func:`build`.
    """

    f: Graph
    y_specs: tuple[frozenset[int], ...] = ()
    supp_edges: tuple[tuple[int, int], ...] = ()

    @property
    def d_size(self) -> int:
        return self.f.n

    @property
    def n_total(self) -> int:
        return self.f.n + 2 * self.f.m + len(self.y_specs)

    def pair_vertices(self, i: int, j: int) -> tuple[int, int]:
        """Canonical ids of the subdivision pair for F-edge (i, j)."""
        i, j = min(i, j), max(i, j)
        t = self.f.edge_list().index((i, j))
        base = self.f.n + 2 * t
        return base, base + 1

    @property
    def is_g1(self) -> bool:
        """Every supplementary vertex sees exactly two D-vertices."""
        return all(len(ys) == 2 for ys in self.y_specs)

    @property
    def is_g2(self) -> bool:
        """No supplementary vertices at all."""
        return not self.y_specs


@dataclass(frozen=True)
class PartitionedInstance:
    """A built graph together with its specified set and pair labelling.

    ``pair_map`` sends each underlying edge (u, v), u < v, both in ``d``,
    to its subdivision pair (x1, x2).  ``labels`` is a side table of
    display names; vertices themselves are plain ints.
    """

    g: Graph
    d: frozenset[int]
    pair_map: dict[tuple[int, int], tuple[int, int]]
    labels: dict[int, str] = field(default_factory=dict)


def build(spec: ConstructionSpec) -> PartitionedInstance:
    """Materialise a :class:`ConstructionSpec` in canonical numbering."""
    f = spec.f
    d = f.n
    f_edges = f.edge_list()
    n_pairs_end = d + 2 * len(f_edges)
    n_total = n_pairs_end + len(spec.y_specs)

    for ys in spec.y_specs:
        if len(ys) < 2:
            raise ConstructionError(
                "y-neighbourhood-size",
                f"supplementary neighbourhood {sorted(ys)} has size < 2",
            )
        for v in ys:
            if not 0 <= v < d:
                raise ConstructionError(
                    "y-neighbourhood-domain",
                    f"supplementary neighbourhood {sorted(ys)} leaves D "
                    f"(vertex {v})",
                )
        for u, v in combinations(sorted(ys), 2):
            if not f.has_edge(u, v):
                raise ConstructionError(
                    "y-neighbourhood-clique",
                    f"supplementary neighbourhood {sorted(ys)} is not a "
                    f"complete subgraph of the underlying graph "
                    f"({u} and {v} are non-adjacent)",
                )

    for u, v in spec.supp_edges:
        if u == v:
            raise ConstructionError(
                "supp-edge-loop", f"supplementary edge ({u}, {v}) is a loop"
            )
        for w in (u, v):
            if w < d:
                raise ConstructionError(
                    "supp-edge-touches-d",
                    f"supplementary edge ({u}, {v}) touches D-vertex {w}; "
                    f"edges must stay inside the subdivision/supplementary "
                    f"vertices",
                )
            if w >= n_total:
                raise ConstructionError(
                    "supp-edge-range",
                    f"supplementary edge ({u}, {v}) references vertex {w} "
                    f"outside the construction (n = {n_total})",
                )
        if u < n_pairs_end and v < n_pairs_end and (u - d) // 2 == (v - d) // 2:
            raise ConstructionError(
                "supp-edge-pair-internal",
                f"supplementary edge ({u}, {v}) lies inside one subdivision "
                f"pair, which must stay independent",
            )

    edges: list[tuple[int, int]] = []
    labels = {i: f"v{i + 1}" for i in range(d)}
    pair_map: dict[tuple[int, int], tuple[int, int]] = {}
    nxt = d
    for i, j in f_edges:
        x1, x2 = nxt, nxt + 1
        nxt += 2
        edges += [(x1, i), (x1, j), (x2, i), (x2, j)]
        pair_map[(i, j)] = (x1, x2)
        labels[x1] = f"x_{{{i + 1},{j + 1}}}^1"
        labels[x2] = f"x_{{{i + 1},{j + 1}}}^2"
    for t, ys in enumerate(spec.y_specs):
        y = nxt
        nxt += 1
        edges += [(y, v) for v in sorted(ys)]
        labels[y] = f"y{t + 1}"
    edges += list(spec.supp_edges)

    return PartitionedInstance(
        g=from_edges(n_total, edges),
        d=frozenset(range(d)),
        pair_map=pair_map,
        labels=labels,
    )


def double_subdivision(f: Graph) -> PartitionedInstance:
    """Replace every edge of ``f`` by a pair of subdivision vertices."""
    return build(ConstructionSpec(f))


# ---------------------------------------------------------------------------
# Named gadgets
# ---------------------------------------------------------------------------


def gadget_a(k: int) -> PartitionedInstance:
    """Ring gadget on a k-leaf star: the subdivision pairs of the star's
    edges are chained into a cycle by supplementary edges.

    Its specified set (centre plus leaves) is the instance's ``d``.
    """
    if k < 2:
        raise ValueError(f"the ring gadget needs k >= 2, got {k}")
    f = star(k)
    first = [f.n + 2 * t for t in range(k)]       # x_t^1 in canonical order
    second = [f.n + 2 * t + 1 for t in range(k)]  # x_t^2
    supp = tuple(
        (first[t], second[(t + 1) % k]) for t in range(k)
    )
    inst = build(ConstructionSpec(f, supp_edges=supp))
    labels = {0: "v"}
    labels.update({i: f"w{i}" for i in range(1, k + 1)})
    for t in range(k):
        labels[first[t]] = f"x_{t + 1}^1"
        labels[second[t]] = f"x_{t + 1}^2"
    return PartitionedInstance(inst.g, inst.d, inst.pair_map, labels)


def gadget_b() -> PartitionedInstance:
    """Two subdivided independent edges whose pairs are bridged once."""
    f = from_edges(4, [(0, 1), (2, 3)])
    inst = build(ConstructionSpec(f, supp_edges=((4, 6),)))
    labels = {
        0: "v1", 1: "u1", 2: "v2", 3: "u2",
        4: "x_1^1", 5: "x_1^2", 6: "x_2^1", 7: "x_2^2",
    }
    return PartitionedInstance(inst.g, inst.d, inst.pair_map, labels)


def gadget_a4_star() -> PartitionedInstance:
    """The 4-spoke ring gadget with one extra subdivided leaf-leaf edge.

    The underlying graph is a 4-leaf star plus the edge w1 w2, so it has a
    triangle; the gadget is a fixture for behaviour when the underlying
    graph has girth below five (brute force puts gamma = gamma_2 = 5 here).
    """
    f = from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)])
    first = [5 + 2 * t for t in range(4)]
    second = [5 + 2 * t + 1 for t in range(4)]
    supp = tuple((first[t], second[(t + 1) % 4]) for t in range(4))
    return build(ConstructionSpec(f, supp_edges=supp))


def gadget_s(multiplicities: Sequence[int]) -> PartitionedInstance:
    """Doubled-subdivided star: leaf j is tied to the centre through
    ``multiplicities[j]`` parallel subdivision vertices (each >= 2).
    """
    mults = list(multiplicities)
    if not mults:
        raise ValueError("need at least one leaf")
    if any(m < 2 for m in mults):
        raise ValueError(f"every multiplicity must be >= 2, got {mults}")
    k = len(mults)
    f = star(k)
    y_specs = []
    for j, m in enumerate(mults):
        y_specs += [frozenset({0, j + 1})] * (m - 2)
    inst = build(ConstructionSpec(f, y_specs=tuple(y_specs)))
    labels = {0: "v"}
    labels.update({j: f"v{j}" for j in range(1, k + 1)})
    counters = {j: 2 for j in range(1, k + 1)}
    for (i, j), (x1, x2) in inst.pair_map.items():
        labels[x1] = f"x_{j}^1"
        labels[x2] = f"x_{j}^2"
    y = f.n + 2 * f.m
    for j, m in enumerate(mults):
        for _ in range(m - 2):
            counters[j + 1] += 1
            labels[y] = f"x_{j + 1}^{counters[j + 1]}"
            y += 1
    return PartitionedInstance(inst.g, inst.d, inst.pair_map, labels)


def gadget_t6() -> Graph:
    """One edge with two pendant leaves at each end (six vertices)."""
    return from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])


def join_c4(f: Graph) -> Graph:
    """Disjoint union of ``f`` with a 4-cycle, plus edges from every
    f-vertex to one antipodal pair of the cycle.

    The antipodal pair 2-dominates everything, so the result always has
    gamma = gamma_2 = 2 (for any f, connected or not).
    """
    n = f.n
    edges = f.edge_list()
    a, b, c, d = n, n + 1, n + 2, n + 3
    edges += [(a, b), (b, c), (c, d), (d, a)]
    edges += [(w, a) for w in range(n)]
    edges += [(w, c) for w in range(n)]
    return from_edges(n + 4, edges)


# ---------------------------------------------------------------------------
# 3-SAT reduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SatReduction:
    """Reduction output plus whether the triple-cover precondition holds.

    Satisfiability of the source formula always implies
    gamma(g) <= num_vars + 1 < gamma_2(g) = num_vars + 2; the converse is
    guaranteed only when ``triple_cover`` is True.
    """

    instance: PartitionedInstance
    triple_cover: bool


def reduce_3sat(f: CnfFormula) -> SatReduction:
    """Encode a 3-CNF formula as a domination-equality question.

    The graph has 3k + l + 3 vertices for k variables and l clauses:
    a hub v0, variable guards v1..vk, a clause guard v_{k+1}, a
    true/false vertex per variable, one vertex per clause and one
    all-literals vertex.  Needs at least one clause.
    """
    k = f.num_vars
    n_clauses = len(f.clauses)
    if n_clauses == 0:
        raise ValueError("the reduction needs at least one clause")

    # Canonical numbering: D = {v0..v_{k+1}} = 0..k+1, then the pairs of
    # the (k+1)-leaf star in edge order, then the remaining clause
    # vertices as supplementary Y-vertices.
    def x_true(i: int) -> int:   # variable i, 1-based
        return k + 2 + 2 * (i - 1)

    def x_false(i: int) -> int:
        return x_true(i) + 1

    all_lits = 3 * k + 2          # paired with the first clause vertex

    def clause_vertex(j: int) -> int:  # clause j, 1-based
        return 3 * k + 2 + j

    supp: list[tuple[int, int]] = []
    supp += [(all_lits, x_true(i)) for i in range(1, k + 1)]
    supp += [(all_lits, x_false(i)) for i in range(1, k + 1)]
    for j, clause in enumerate(f.clauses, start=1):
        for lit in clause:
            supp.append(
                (clause_vertex(j), x_true(lit) if lit > 0 else x_false(-lit))
            )

    spec = ConstructionSpec(
        star(k + 1),
        y_specs=(frozenset({0, k + 1}),) * (n_clauses - 1),
        supp_edges=tuple(supp),
    )
    inst = build(spec)

    labels = {0: "v0"}
    labels.update({i: f"v{i}" for i in range(1, k + 2)})
    for i in range(1, k + 1):
        labels[x_true(i)] = f"x{i}^t"
        labels[x_false(i)] = f"x{i}^f"
    labels[all_lits] = "c*"
    for j in range(1, n_clauses + 1):
        labels[clause_vertex(j)] = f"c{j}"

    return SatReduction(
        instance=PartitionedInstance(inst.g, inst.d, inst.pair_map, labels),
        triple_cover=triple_cover_holds(f),
    )


# ---------------------------------------------------------------------------
# Random instances
# ---------------------------------------------------------------------------


def _has_short_cycle(g: Graph) -> bool:
    """Any triangle, or any two vertices with two common neighbours."""
    for u, v in g.edges():
        if set(g.neighbors(u)) & set(g.neighbors(v)):
            return True
    for u, v in combinations(range(g.n), 2):
        if len(set(g.neighbors(u)) & set(g.neighbors(v))) >= 2:
            return True
    return False


def random_h_instance(
    f_size: int,
    f_edge_prob: float,
    supp_edge_prob: float,
    seed: int,
) -> Optional[PartitionedInstance]:
    """Seeded random instance whose underlying graph has girth >= 5.

    Rejection-samples the underlying graph (up to 1000 attempts; returns
    None when the budget runs out), doubly subdivides it and sprinkles
    supplementary edges among the subdivision vertices, never inside one
    pair.
    """
    rng = random.Random(seed)
    f = None
    for _ in range(RANDOM_INSTANCE_ATTEMPTS):
        candidate_edges = [
            (u, v)
            for u, v in combinations(range(f_size), 2)
            if rng.random() < f_edge_prob
        ]
        candidate = from_edges(f_size, candidate_edges)
        if not _has_short_cycle(candidate):
            f = candidate
            break
    if f is None:
        return None

    x_first = f.n
    x_last = f.n + 2 * f.m - 1
    supp = []
    for u in range(x_first, x_last + 1):
        for v in range(u + 1, x_last + 1):
            if (u - f.n) // 2 == (v - f.n) // 2:
                continue  # same pair: must stay independent
            if rng.random() < supp_edge_prob:
                supp.append((u, v))
    return build(ConstructionSpec(f, supp_edges=tuple(supp)))
