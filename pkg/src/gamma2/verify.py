"""Self-check driver: every cross-validation suite behind one entry point.

Each check pits an implementation against an independent route (exact
solver vs subset enumeration, structural recognizer vs definitional
oracle, and so on) over seeded random instances plus fixed fixtures.
``run_verify`` is deterministic for a fixed seed: every check draws from
its own RNG keyed by (seed, check name), so filtering by scope never
shifts the streams.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterator, Optional

from . import constructions, formats
from .constructions import (
    ConstructionSpec,
    PartitionedInstance,
    all_four_vertex_graphs,
    build,
    cycle,
    gadget_s,
    join_c4,
    petersen,
    random_h_instance,
    reduce_3sat,
)
from .graph import Graph, from_edges, is_connected
from .matching import brute_force_maximum_matching, maximum_matching
from .recognition import (
    check_witness,
    extract_underlying,
    forbidden_subgraph_check,
    perfect_oracle,
    recognize_h,
    recognize_perfect,
)
from .solvers import (
    CnfFormula,
    cnf_satisfiable,
    enumerate_min_k_dominating,
    gamma_k,
    is_gamma_gamma2_graph,
    is_k_dominating,
    triple_cover_holds,
)


@dataclass(frozen=True)
class CheckResult:
    name: str
    instances: int
    passed: int
    counterexample: Optional[str]
    seconds: float

    @property
    def ok(self) -> bool:
        return self.passed == self.instances


@dataclass(frozen=True)
class VerifyReport:
    seed: int
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            status = "ok" if c.ok else "FAIL"
            lines.append(
                f"{c.name:40s} {c.passed}/{c.instances} {status}"
                f"  ({c.seconds:.2f}s)"
            )
            if c.counterexample:
                lines.append(f"  counterexample:\n{c.counterexample}")
        lines.append("verify: " + ("all checks passed" if self.ok else "FAILED"))
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        import json

        return json.dumps(
            {
                "seed": self.seed,
                "ok": self.ok,
                "checks": [
                    {
                        "name": c.name,
                        "instances": c.instances,
                        "passed": c.passed,
                        "counterexample": c.counterexample,
                        "seconds": round(c.seconds, 3),
                    }
                    for c in self.checks
                ],
            },
            indent=2,
        ) + "\n"


# ---------------------------------------------------------------------------
# Samplers (shared with the test suite)
# ---------------------------------------------------------------------------


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return from_edges(
        n, [e for e in combinations(range(n), 2) if rng.random() < p]
    )


def random_connected_min_degree2(
    rng: random.Random, n_low: int, n_high: int
) -> Graph:
    while True:
        n = rng.randint(n_low, n_high)
        g = random_graph(rng, n, rng.choice([0.3, 0.4, 0.5]))
        if g.n >= 3 and is_connected(g) and g.min_degree() >= 2:
            return g


def random_g1_spec(rng: random.Random, d_max: int = 6) -> ConstructionSpec:
    """Random construction whose supplementary vertices all see exactly
    two D-vertices (their neighbourhood is then an underlying edge)."""
    f = random_graph(rng, rng.randint(1, d_max), rng.choice([0.3, 0.5, 0.7]))
    f_edges = f.edge_list()
    y_specs = []
    if f_edges:
        for _ in range(rng.randint(0, 3)):
            y_specs.append(frozenset(rng.choice(f_edges)))
    supp = _random_supp_edges(rng, f, len(y_specs), 0.15)
    return ConstructionSpec(f, tuple(y_specs), supp)


def random_general_spec(rng: random.Random, d_max: int = 6) -> ConstructionSpec:
    """Random construction allowing bigger supplementary neighbourhoods
    (any clique of the underlying graph with >= 2 vertices)."""
    f = random_graph(rng, rng.randint(1, d_max), rng.choice([0.4, 0.6, 0.8]))
    cliques = [
        set(c)
        for size in (2, 3)
        for c in combinations(range(f.n), size)
        if all(f.has_edge(u, v) for u, v in combinations(c, 2))
    ]
    y_specs = []
    if cliques:
        for _ in range(rng.randint(0, 3)):
            y_specs.append(frozenset(rng.choice(cliques)))
    supp = _random_supp_edges(rng, f, len(y_specs), 0.1)
    return ConstructionSpec(f, tuple(y_specs), supp)


def _random_supp_edges(
    rng: random.Random, f: Graph, n_y: int, p: float
) -> tuple[tuple[int, int], ...]:
    d = f.n
    x_end = d + 2 * f.m
    total = x_end + n_y
    supp = []
    for u in range(d, total):
        for v in range(u + 1, total):
            if v < x_end and (u - d) // 2 == (v - d) // 2:
                continue
            if rng.random() < p:
                supp.append((u, v))
    return tuple(supp)


def random_formula(rng: random.Random, k: int, n_clauses: int) -> CnfFormula:
    clauses = []
    for _ in range(n_clauses):
        variables = rng.sample(range(1, k + 1), 3)
        clauses.append(
            tuple(v if rng.random() < 0.5 else -v for v in variables)
        )
    return CnfFormula(k, tuple(clauses))


# Variable triples whose complements cover every triple of a 7-variable
# formula: polarising them arbitrarily always yields the avoided-triple
# property.  12 is the minimum possible clause count for 7 variables.
COVER_7 = (
    (2, 3, 5), (5, 6, 7), (2, 3, 6), (3, 5, 7), (4, 5, 6), (1, 2, 7),
    (4, 6, 7), (1, 2, 6), (1, 3, 6), (2, 4, 7), (1, 4, 5), (1, 3, 4),
)


def covered_formula(rng: random.Random, k: int) -> CnfFormula:
    """A random formula satisfying the avoided-triple property.

    For 6 variables every variable triple must itself occur as a clause
    (20 clauses); for 7 a fixed minimum covering family of 12 is used.
    Only k in {6, 7} is supported.
    """
    if k == 6:
        var_sets = list(combinations(range(1, 7), 3))
    elif k == 7:
        var_sets = list(COVER_7)
    else:
        raise ValueError(f"covered_formula supports k in {{6, 7}}, got {k}")
    clauses = tuple(
        tuple(v if rng.random() < 0.5 else -v for v in vs) for vs in var_sets
    )
    return CnfFormula(k, clauses)


#: Hand-built unsatisfiable formulas that still satisfy the
#: avoided-triple property (found by exhaustive polarity search).
UNSAT_COVERED_7 = CnfFormula(7, (
    (2, 3, -5), (5, 6, 7), (2, -3, -6), (-3, -5, 7), (-4, -5, 6),
    (-1, -2, 7), (4, 6, -7), (1, -2, -6), (-1, 3, -6), (-2, 4, -7),
    (1, -4, 5), (1, 3, 4), (-1, -4, -7),
))

UNSAT_COVERED_6 = CnfFormula(6, (
    (-1, 2, 3), (1, 2, 4), (-1, -2, -5), (-1, 2, -6), (1, -3, 4),
    (1, 3, -5), (1, -3, -6), (1, 4, -5), (1, -4, -6), (-1, -5, 6),
    (-2, -3, -4), (2, -3, -5), (-2, 3, -6), (2, 4, 5), (2, -4, 6),
    (2, 5, -6), (-3, 4, 5), (-3, -4, 6), (3, 5, 6), (4, -5, 6),
))


def t6_augmented_fixtures() -> list[Graph]:
    """Minimum-degree-2 graphs containing the double-pendant edge."""
    return [
        # leaf pairs tied off into triangles
        from_edges(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 3), (4, 5)]),
        # each leaf pair closed through a fresh vertex (all cycles are C4)
        from_edges(
            8,
            [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (3, 6), (4, 7), (5, 7)],
        ),
    ]


def h_instance_stream(
    seed: int, max_vertices: int = 22
) -> Iterator[PartitionedInstance]:
    """Endless stream of valid random subdivision instances (underlying
    graph of girth >= 5)."""
    sub_seed = seed
    while True:
        sub_seed += 1
        f_size = 3 + sub_seed % 4
        inst = random_h_instance(f_size, 0.35, 0.25, seed=sub_seed * 7919 + seed)
        if inst is not None and inst.g.n <= max_vertices:
            yield inst


# ---------------------------------------------------------------------------
# Check bodies
# ---------------------------------------------------------------------------


def _serialize_graph(g: Graph) -> str:
    return formats.graph_to_text(g)


def _check_matching_oracle(rng: random.Random, budget: int) -> Iterator[tuple[bool, str]]:
    fixtures = [cycle(4), cycle(5), petersen()]
    produced = 0
    for g in fixtures:
        if produced >= budget:
            return
        produced += 1
        yield (
            maximum_matching(g).size == brute_force_maximum_matching(g).size,
            _serialize_graph(g),
        )
    while produced < budget:
        produced += 1
        g = random_graph(rng, rng.randint(1, 12), rng.choice([0.2, 0.35, 0.5]))
        if g.m > 25:
            continue
        blossom = maximum_matching(g)
        ok = blossom.size == brute_force_maximum_matching(g).size
        # the matching itself must be valid
        seen: set[int] = set()
        for u, v in blossom.edges():
            if not g.has_edge(u, v) or u in seen or v in seen:
                ok = False
            seen.update((u, v))
        yield ok, _serialize_graph(g)


def _check_gamma_lower_bound(rng: random.Random, budget: int) -> Iterator[tuple[bool, str]]:
    # For max degree >= k >= 2: gamma_k >= gamma + k - 2.
    for _ in range(budget):
        g = random_graph(rng, rng.randint(2, 12), rng.choice([0.2, 0.4, 0.6]))
        if g.n == 0 or g.max_degree() == 0:
            yield True, ""
            continue
        base = gamma_k(g, 1).number
        ok = True
        for k in (2, 3):
            if g.max_degree() >= k:
                if gamma_k(g, k).number < base + k - 2:
                    ok = False
        yield ok, _serialize_graph(g)


def _equality_graphs(rng: random.Random, budget: int) -> Iterator[Graph]:
    found = 0
    while found < budget:
        g = random_graph(rng, rng.randint(2, 10), rng.choice([0.3, 0.5, 0.7]))
        if g.n < 2 or not is_connected(g):
            continue
        if not is_gamma_gamma2_graph(g):
            continue
        found += 1
        yield g


def _check_min_degree_necessity(rng: random.Random, budget: int) -> Iterator[tuple[bool, str]]:
    # Connected non-trivial graphs with gamma == gamma_2 have min degree >= 2.
    for g in _equality_graphs(rng, budget):
        yield g.min_degree() >= 2, _serialize_graph(g)


def _check_min_2domset_independence(rng: random.Random, budget: int) -> Iterator[tuple[bool, str]]:
    from .graph import is_independent

    for g in _equality_graphs(rng, budget):
        ok = all(
            is_independent(g, dd) for dd in enumerate_min_k_dominating(g, 2)
        )
        yield ok, _serialize_graph(g)


def _check_private_pair_structure(rng: random.Random, budget: int) -> Iterator[tuple[bool, str]]:
    # In an equality graph, for any two members of a minimum 2-dominating
    # set with a common neighbour there are two non-adjacent outside
    # vertices seeing exactly those two in D; together they induce a C4.
    for g in _equality_graphs(rng, budget):
        ok = True
        for dd in enumerate_min_k_dominating(g, 2):
            for u, v in combinations(sorted(dd), 2):
                common = set(g.neighbors(u)) & set(g.neighbors(v))
                if not common:
                    continue
                mates = [
                    w
                    for w in range(g.n)
                    if w not in dd
                    and set(g.neighbors(w)) & dd == {u, v}
                ]
                pair = [
                    (a, b)
                    for a, b in combinations(mates, 2)
                    if not g.has_edge(a, b)
                ]
                if not pair:
                    ok = False
                    break
                a, b = pair[0]
                # u, a, v, b must induce a 4-cycle
                if g.has_edge(u, v) or g.has_edge(a, b):
                    ok = False
                    break
            if not ok:
                break
        yield ok, _serialize_graph(g)


def _check_specified_set_2domination(rng: random.Random, budget: int) -> Iterator[tuple[bool, str]]:
    # Built instances whose supplementary vertices see exactly two
    # D-vertices have gamma_2 == |V(F)|, witnessed by D itself.
    for _ in range(budget):
        spec = random_g1_spec(rng)
        inst = build(spec)
        ok = (
            is_k_dominating(inst.g, inst.d, 2)
            and gamma_k(inst.g, 2).number == spec.f.n
        )
        yield ok, formats.instance_to_json(inst)


def _check_join_c4_collapse(rng: random.Random, budget: int) -> Iterator[tuple[bool, str]]:
    corpus = all_four_vertex_graphs()
    produced = 0
    for f in corpus:
        if produced >= budget:
            return
        produced += 1
        g = join_c4(f)
        yield (
            gamma_k(g, 1).number == 2 and gamma_k(g, 2).number == 2,
            _serialize_graph(g),
        )
    while produced < budget:
        produced += 1
        f = random_graph(rng, rng.randint(1, 6), 0.4)
        g = join_c4(f)
        yield (
            gamma_k(g, 1).number == 2 and gamma_k(g, 2).number == 2,
            _serialize_graph(g),
        )


def _check_underlying_roundtrip(rng: random.Random, budget: int) -> Iterator[tuple[bool, str]]:
    # The square of the built graph induced on D recovers the underlying
    # graph exactly (canonical numbering makes this graph equality).
    for _ in range(budget):
        spec = random_general_spec(rng)
        inst = build(spec)
        yield (
            extract_underlying(inst.g, inst.d) == spec.f,
            formats.instance_to_json(inst),
        )


def _check_recognition_cross_validation(rng: random.Random, budget: int) -> Iterator[tuple[bool, str]]:
    stream = h_instance_stream(seed=rng.randrange(1 << 30))
    for _ in range(budget):
        inst = next(stream)
        verdict = recognize_h(inst)
        ok = verdict.equal == is_gamma_gamma2_graph(inst.g)
        if not verdict.equal:
            ok = ok and verdict.witness is not None
            ok = ok and check_witness(inst.g, inst.d, verdict.witness)
        yield ok, formats.instance_to_json(inst)


def _check_sat_reduction(rng: random.Random, budget: int) -> Iterator[tuple[bool, str]]:
    produced = 0
    for f in (UNSAT_COVERED_6, UNSAT_COVERED_7):
        if produced >= budget:
            return
        produced += 1
        yield _sat_reduction_case(f, require_equivalence=True)
    while produced < budget:
        produced += 1
        if produced % 3 == 0:
            f = random_formula(rng, rng.randint(3, 6), rng.randint(1, 8))
            yield _sat_reduction_case(f, require_equivalence=False)
        else:
            f = covered_formula(rng, rng.choice([6, 7]))
            yield _sat_reduction_case(f, require_equivalence=True)


def _sat_reduction_case(f: CnfFormula, require_equivalence: bool) -> tuple[bool, str]:
    red = reduce_3sat(f)
    g = red.instance.g
    k = f.num_vars
    ok = g.n == 3 * k + len(f.clauses) + 3
    ok = ok and gamma_k(g, 2).number == k + 2
    sat = cnf_satisfiable(f) is not None
    gamma = gamma_k(g, 1).number
    if sat:
        ok = ok and gamma <= k + 1
    if require_equivalence:
        ok = ok and triple_cover_holds(f) == red.triple_cover and red.triple_cover
        ok = ok and (sat == (gamma < k + 2))
    return ok, formats.cnf_to_text(f)


def _check_perfect_triple_agreement(rng: random.Random, budget: int) -> Iterator[tuple[bool, str]]:
    fixtures: list[Graph] = []
    for total in range(4, 13):
        for k in range(1, total):
            for mults in _multiplicity_lists(total - 1 - k, k):
                fixtures.append(gadget_s(mults).g)
    fixtures += [cycle(n) for n in range(4, 10)]
    fixtures.append(constructions.complete(4))
    fixtures.append(petersen())
    fixtures += t6_augmented_fixtures()
    produced = 0
    for g in fixtures:
        if produced >= budget:
            return
        produced += 1
        yield _triple_agreement_case(g)
    while produced < budget:
        produced += 1
        g = random_connected_min_degree2(rng, 4, 10)
        yield _triple_agreement_case(g)


def _multiplicity_lists(total: int, k: int) -> Iterator[list[int]]:
    # non-increasing lists of k values >= 2 summing to total
    if k == 0:
        if total == 0:
            yield []
        return
    for first in range(2, total - 2 * (k - 1) + 1):
        for rest in _multiplicity_lists(total - first, k - 1):
            if not rest or first >= rest[0]:
                yield [first] + rest


def _triple_agreement_case(g: Graph) -> tuple[bool, str]:
    structural = recognize_perfect(g).perfect
    forbidden = forbidden_subgraph_check(g)
    oracle = perfect_oracle(g)
    return structural == forbidden == oracle, _serialize_graph(g)


# ---------------------------------------------------------------------------
# Driver
# ---------------------------------------------------------------------------


_CHECKS: dict[str, tuple[Callable[[random.Random, int], Iterator[tuple[bool, str]]], int]] = {
    "gamma-k-lower-bound": (_check_gamma_lower_bound, 150),
    "join-c4-collapse": (_check_join_c4_collapse, 30),
    "matching-oracle": (_check_matching_oracle, 150),
    "min-2domset-independence": (_check_min_2domset_independence, 40),
    "min-degree-necessity": (_check_min_degree_necessity, 40),
    "perfect-triple-agreement": (_check_perfect_triple_agreement, 120),
    "private-pair-structure": (_check_private_pair_structure, 30),
    "recognition-cross-validation": (_check_recognition_cross_validation, 120),
    "sat-reduction-equivalence": (_check_sat_reduction, 20),
    "specified-set-2domination": (_check_specified_set_2domination, 60),
    "underlying-roundtrip": (_check_underlying_roundtrip, 60),
}


def run_verify(
    scope: Optional[str] = None,
    seed: int = 0,
    budget: Optional[int] = None,
) -> VerifyReport:
    """Run the cross-validation suites.

    ``scope`` filters checks by name prefix.  ``budget`` overrides the
    per-check instance count; 0 produces an empty report.
    """
    if budget == 0:
        return VerifyReport(seed=seed, checks=())
    results = []
    for name in sorted(_CHECKS):
        if scope and not name.startswith(scope):
            continue
        body, default_budget = _CHECKS[name]
        count = budget if budget is not None else default_budget
        rng = random.Random(f"{seed}:{name}")
        start = time.perf_counter()
        instances = 0
        passed = 0
        counterexample = None
        for ok, serialized in body(rng, count):
            instances += 1
            if ok:
                passed += 1
            elif counterexample is None:
                counterexample = serialized
        results.append(
            CheckResult(
                name=name,
                instances=instances,
                passed=passed,
                counterexample=counterexample,
                seconds=time.perf_counter() - start,
            )
        )
    return VerifyReport(seed=seed, checks=tuple(results))
