"""Exact k-domination solvers and a tiny 3-CNF satisfiability checker.

A set D is k-dominating when every vertex outside D has at least k
neighbours inside D; gamma_k is the minimum size of such a set.

``gamma_k`` runs a branch-and-bound search per connected component with
constraint propagation and a packing lower bound; it handles the graph
sizes the constructions in this package produce (a few dozen vertices).
``gamma_k_bruteforce`` enumerates subsets by increasing size and is the
independent oracle used to validate it on small graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .graph import Graph, components, induced_subgraph

BRUTE_FORCE_VERTEX_LIMIT = 22
SAT_VARIABLE_LIMIT = 20


@dataclass(frozen=True)
class DominationResult:
    """Optimum value plus one witness set attaining it."""

    k: int
    number: int
    witness: frozenset[int]


def is_k_dominating(g: Graph, s: Iterable[int], k: int) -> bool:
    """True iff every vertex outside ``s`` has >= k neighbours in ``s``."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    ss = set(s)
    for v in ss:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    return all(
        sum(1 for u in g.neighbors(v) if u in ss) >= k
        for v in range(g.n)
        if v not in ss
    )


# ---------------------------------------------------------------------------
# Branch and bound
# ---------------------------------------------------------------------------


def _greedy_cover_mask(adj: list[int], k: int) -> int:
    """Greedy k-dominating set of a component, as a bitmask (upper bound)."""
    n = len(adj)
    chosen = 0
    for v in range(n):
        if adj[v].bit_count() < k:
            chosen |= 1 << v  # can never be k-dominated from outside
    while True:
        needs = {}
        for v in range(n):
            if chosen >> v & 1:
                continue
            need = k - (adj[v] & chosen).bit_count()
            if need > 0:
                needs[v] = need
        if not needs:
            return chosen
        best_v, best_score = -1, -1
        for u in range(n):
            if chosen >> u & 1:
                continue
            score = sum(1 for v in needs if adj[v] >> u & 1)
            score += needs.get(u, 0)
            if score > best_score:
                best_v, best_score = u, score
        chosen |= 1 << best_v


def _solve_component(adj: list[int], k: int) -> tuple[int, int]:
    """Minimum k-dominating set of one component given bitmask adjacency.

    Returns (size, chosen_mask).  The search is deterministic: branch
    vertices and propagation order depend only on vertex indices.
    """
    n = len(adj)
    full = (1 << n) - 1
    best_mask = _greedy_cover_mask(adj, k)
    best = best_mask.bit_count()

    def dfs(chosen: int, excluded: int, size: int) -> None:
        nonlocal best, best_mask
        if size >= best:
            return
        # Unit propagation: a vertex short of options is forced, a vertex
        # with exactly as many undecided neighbours as it still needs
        # forces all of them.
        while True:
            undecided = full & ~chosen & ~excluded
            forced = 0
            for v in range(n):
                bit = 1 << v
                if chosen & bit:
                    continue
                need = k - (adj[v] & chosen).bit_count()
                if need <= 0:
                    continue
                avail_mask = adj[v] & undecided
                avail = avail_mask.bit_count()
                if excluded & bit:
                    if avail < need:
                        return  # dead branch
                    if avail == need:
                        forced |= avail_mask
                elif avail < need:
                    forced |= bit  # cannot stay outside
            if not forced:
                break
            chosen |= forced
            size += forced.bit_count()
            if size >= best:
                return

        undecided = full & ~chosen & ~excluded
        deficient: list[tuple[int, int, int]] = []  # (vertex, need, options)
        for v in range(n):
            bit = 1 << v
            if chosen & bit:
                continue
            need = k - (adj[v] & chosen).bit_count()
            if need > 0:
                options = adj[v] & undecided
                if undecided & bit:
                    options |= bit
                deficient.append((v, need, options))

        if not deficient:
            best = size
            best_mask = chosen
            return

        # Lower bound: deficient vertices with pairwise disjoint option
        # pools require that many separate selections.
        bound = 0
        used = 0
        for v, need, options in sorted(
            deficient, key=lambda t: t[2].bit_count()
        ):
            if options & used:
                continue
            used |= options
            bound += need if excluded >> v & 1 else 1
        if size + bound >= best:
            return

        # Branch on the most constrained vertex's most useful option.
        deficiency_mask = 0
        for v, _, _ in deficient:
            deficiency_mask |= 1 << v
        v, need, options = min(
            deficient, key=lambda t: (t[2].bit_count() - t[1], t[0])
        )
        pivot, pivot_score = -1, -1
        candidates = options
        while candidates:
            u = (candidates & -candidates).bit_length() - 1
            candidates &= candidates - 1
            score = (adj[u] & deficiency_mask).bit_count()
            score += deficiency_mask >> u & 1
            if score > pivot_score:
                pivot, pivot_score = u, score
        dfs(chosen | (1 << pivot), excluded, size + 1)
        dfs(chosen, excluded | (1 << pivot), size)

    dfs(0, 0, 0)
    return best, best_mask


def gamma_k(g: Graph, k: int) -> DominationResult:
    """Exact k-domination number with a deterministic witness.

    Solved independently per connected component; the empty graph has
    gamma_k = 0.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    total = 0
    witness: set[int] = set()
    for comp in components(g):
        sub, mapping = induced_subgraph(g, comp)
        size, mask = _solve_component(sub.adjacency_masks(), k)
        total += size
        witness.update(mapping[i] for i in range(sub.n) if mask >> i & 1)
    return DominationResult(k, total, frozenset(witness))


# ---------------------------------------------------------------------------
# Oracles
# ---------------------------------------------------------------------------


def _bit_is_k_dominating(masks: list[int], subset: int, n: int, k: int) -> bool:
    for v in range(n):
        if subset >> v & 1:
            continue
        if (masks[v] & subset).bit_count() < k:
            return False
    return True


def _check_oracle_size(g: Graph, what: str) -> None:
    if g.n > BRUTE_FORCE_VERTEX_LIMIT:
        raise ValueError(
            f"{what} accepts at most {BRUTE_FORCE_VERTEX_LIMIT} vertices, "
            f"got {g.n}"
        )


def gamma_k_bruteforce(g: Graph, k: int) -> DominationResult:
    """Subset enumeration by increasing size; the validation oracle."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    _check_oracle_size(g, "gamma_k_bruteforce")
    masks = g.adjacency_masks()
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            subset = 0
            for v in combo:
                subset |= 1 << v
            if _bit_is_k_dominating(masks, subset, g.n, k):
                return DominationResult(k, size, frozenset(combo))
    raise AssertionError("unreachable: the full vertex set k-dominates")


def enumerate_min_k_dominating(g: Graph, k: int) -> list[frozenset[int]]:
    """All minimum k-dominating sets, in lexicographic order.

    Self-contained: rescans subset sizes from zero rather than trusting
    the branch-and-bound optimum.
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    _check_oracle_size(g, "enumerate_min_k_dominating")
    masks = g.adjacency_masks()
    for size in range(g.n + 1):
        found = []
        for combo in combinations(range(g.n), size):
            subset = 0
            for v in combo:
                subset |= 1 << v
            if _bit_is_k_dominating(masks, subset, g.n, k):
                found.append(frozenset(combo))
        if found:
            return found
    return [frozenset()]  # n == 0


def is_gamma_gamma2_graph(g: Graph) -> bool:
    """Definitional test for gamma(g) == gamma_2(g) (small graphs only)."""
    _check_oracle_size(g, "is_gamma_gamma2_graph")
    return gamma_k(g, 1).number == gamma_k(g, 2).number


# ---------------------------------------------------------------------------
# 3-CNF formulas
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CnfFormula:
    """A 3-CNF formula in DIMACS literal convention.

    Literals are non-zero ints: +i / -i for variable i (1-based).  Every
    clause must have exactly three literals over three distinct variables.
    """

    num_vars: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self) -> None:
        if self.num_vars < 0:
            raise ValueError("variable count must be non-negative")
        for idx, clause in enumerate(self.clauses):
            if len(clause) != 3:
                raise ValueError(f"clause #{idx} has {len(clause)} literals")
            variables = {abs(lit) for lit in clause}
            if 0 in variables:
                raise ValueError(f"clause #{idx} contains literal 0")
            if len(variables) != 3:
                raise ValueError(
                    f"clause #{idx} repeats a variable: {clause}"
                )
            for lit in clause:
                if abs(lit) > self.num_vars:
                    raise ValueError(
                        f"clause #{idx} uses variable {abs(lit)} "
                        f"but only {self.num_vars} are declared"
                    )


def cnf_satisfiable(f: CnfFormula) -> Optional[tuple[bool, ...]]:
    """Exhaustive SAT check; returns a satisfying assignment or None.

    The assignment is indexed by variable - 1.  Guarded to at most 20
    variables.
    """
    if f.num_vars > SAT_VARIABLE_LIMIT:
        raise ValueError(
            f"cnf_satisfiable accepts at most {SAT_VARIABLE_LIMIT} "
            f"variables, got {f.num_vars}"
        )
    pos = []
    neg = []
    for clause in f.clauses:
        p = q = 0
        for lit in clause:
            if lit > 0:
                p |= 1 << (lit - 1)
            else:
                q |= 1 << (-lit - 1)
        pos.append(p)
        neg.append(q)
    full = (1 << f.num_vars) - 1
    for assignment in range(1 << f.num_vars):
        flipped = full ^ assignment
        if all(
            assignment & p or flipped & q for p, q in zip(pos, neg)
        ):
            return tuple(bool(assignment >> i & 1) for i in range(f.num_vars))
    return None


def triple_cover_holds(f: CnfFormula) -> bool:
    """True iff every three variables are all avoided by some clause."""
    clause_vars = [frozenset(abs(lit) for lit in clause) for clause in f.clauses]
    return all(
        any(not (triple & cv) for cv in clause_vars)
        for triple in (
            frozenset(t) for t in combinations(range(1, f.num_vars + 1), 3)
        )
    )
