"""Recognition algorithms.

Two independent questions are answered here.

First, for an annotated instance (a double subdivision with supplementary
edges whose underlying graph has girth >= 5), ``recognize_h`` decides in
polynomial time whether the domination number equals the 2-domination
number.  The test is purely local: a bridging supplementary edge whose
endpoints share no D-neighbour is one obstruction; the other is a ring of
subdivision pairs around a single D-vertex, found through a perfect
matching in a small auxiliary graph per D-vertex.  Every negative verdict
carries a replayable witness.

Second, ``recognize_perfect`` decides structurally whether every induced
subgraph of minimum degree two keeps the two numbers equal; the positive
graphs are exactly the disjoint unions of doubled-subdivided stars.
``forbidden_subgraph_check`` and ``perfect_oracle`` are the two
independent routes used to cross-validate it.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .constructions import PartitionedInstance
from .graph import Graph, components, from_edges, induced_subgraph, power
from .matching import maximum_matching
from .solvers import is_gamma_gamma2_graph

FORBIDDEN_CHECK_VERTEX_LIMIT = 14
PERFECT_ORACLE_VERTEX_LIMIT = 13


# ---------------------------------------------------------------------------
# Instance validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class HValidationReport:
    """Outcome of :func:`validate_h`.

    ``underlying`` is the reconstructed underlying graph (on the sorted
    D-vertices relabelled 0..|D|-1) when the pair structure itself is
    sound, else None.  ``failures`` lists every violated rule.
    """

    valid: bool
    underlying: Optional[Graph]
    failures: tuple[str, ...]


class InvalidHInstanceError(ValueError):
    """Raised when recognition is asked about a malformed instance."""

    def __init__(self, report: HValidationReport):
        self.report = report
        super().__init__(
            "not a valid subdivision instance with underlying girth >= 5: "
            + "; ".join(report.failures)
        )


def validate_h(inst: PartitionedInstance) -> HValidationReport:
    """Check every structural rule of the recognizable instance family.

    The specified set must be independent, every non-D vertex must be the
    subdivision vertex of exactly one pair, each pair vertex must see
    exactly its two F-endpoints inside D, pairs must stay independent and
    the underlying graph must contain no triangle and no 4-cycle.
    """
    g, d = inst.g, inst.d
    failures: list[str] = []

    for v in d:
        if not 0 <= v < g.n:
            return HValidationReport(
                False, None, (f"D-vertex {v} outside 0..{g.n - 1}",)
            )

    for u in sorted(d):
        for w in g.neighbors(u):
            if w in d and u < w:
                failures.append(f"D is not independent: edge ({u}, {w})")

    seen: dict[int, tuple[int, int]] = {}
    structure_ok = True
    for key, (x1, x2) in inst.pair_map.items():
        a, b = key
        if a not in d or b not in d or a >= b:
            failures.append(
                f"pair key {key} is not an ordered pair of D-vertices"
            )
            structure_ok = False
            continue
        if x1 == x2:
            failures.append(f"pair {key} lists the same vertex twice")
            structure_ok = False
            continue
        for x in (x1, x2):
            if not 0 <= x < g.n or x in d:
                failures.append(
                    f"pair {key} names {x}, which is not a non-D vertex"
                )
                structure_ok = False
                continue
            if x in seen:
                failures.append(f"vertex {x} belongs to two pairs")
                structure_ok = False
                continue
            seen[x] = key

    uncovered = sorted(set(range(g.n)) - d - set(seen))
    for v in uncovered:
        failures.append(
            f"vertex {v} is outside D but not a subdivision vertex of any pair"
        )

    for key, (x1, x2) in inst.pair_map.items():
        expected = set(key)
        for x in (x1, x2):
            if not (0 <= x < g.n) or x in d:
                continue
            d_nbrs = set(g.neighbors(x)) & d
            if d_nbrs != expected:
                failures.append(
                    f"pair vertex {x} of {key} has D-neighbourhood "
                    f"{sorted(d_nbrs)}, expected {sorted(expected)}"
                )
        if g.has_edge(x1, x2):
            failures.append(
                f"supplementary edge inside pair {key}: ({x1}, {x2})"
            )

    underlying: Optional[Graph] = None
    if structure_ok:
        order = sorted(d)
        position = {v: i for i, v in enumerate(order)}
        underlying = from_edges(
            len(order),
            [(position[a], position[b]) for a, b in inst.pair_map],
        )
        for u, v in underlying.edges():
            if set(underlying.neighbors(u)) & set(underlying.neighbors(v)):
                failures.append("underlying graph contains a triangle")
                break
        else:
            for u, v in combinations(range(underlying.n), 2):
                common = set(underlying.neighbors(u)) & set(
                    underlying.neighbors(v)
                )
                if len(common) >= 2:
                    failures.append("underlying graph contains a 4-cycle")
                    break

    return HValidationReport(not failures, underlying, tuple(failures))


def extract_underlying(g: Graph, d: frozenset[int]) -> Graph:
    """Underlying graph recovered as the square of ``g`` induced on ``d``.

    Vertices are relabelled 0..|d|-1 in sorted order of ``d``.
    """
    sub, _ = induced_subgraph(power(g, 2), d)
    return sub


# ---------------------------------------------------------------------------
# Witnesses
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BWitness:
    """Bridge obstruction: two subdivision pairs over disjoint D-edges,
    joined by the supplementary edge ``x1[0] -- x2[0]``."""

    v1: int
    u1: int
    x1: tuple[int, int]
    v2: int
    u2: int
    x2: tuple[int, int]

    def vertices(self) -> tuple[int, ...]:
        return (self.v1, self.u1, *self.x1, self.v2, self.u2, *self.x2)


@dataclass(frozen=True)
class AWitness:
    """Ring obstruction around ``center``: spoke r is (w_r, x_r1, x_r2)
    and the supplementary edges x_r1 -- x_{r+1}2 close a cycle."""

    center: int
    spokes: tuple[tuple[int, int, int], ...]

    def vertices(self) -> tuple[int, ...]:
        out = [self.center]
        for w, x1, x2 in self.spokes:
            out += [w, x1, x2]
        return tuple(out)


Witness = Union[AWitness, BWitness]


def check_witness(g: Graph, d: frozenset[int], witness: Witness) -> bool:
    """Replay a witness: distinct vertices, right D-membership, and every
    edge of the obstruction pattern present in ``g``."""
    vs = witness.vertices()
    if len(set(vs)) != len(vs):
        return False
    if not all(0 <= v < g.n for v in vs):
        return False
    if isinstance(witness, BWitness):
        specified = (witness.v1, witness.u1, witness.v2, witness.u2)
        others = (*witness.x1, *witness.x2)
        if not all(v in d for v in specified):
            return False
        if any(x in d for x in others):
            return False
        for a, b in ((witness.v1, witness.u1), (witness.v2, witness.u2)):
            pair = witness.x1 if a == witness.v1 else witness.x2
            for x in pair:
                if not (g.has_edge(a, x) and g.has_edge(b, x)):
                    return False
        return g.has_edge(witness.x1[0], witness.x2[0])
    if len(witness.spokes) < 2:
        return False
    if witness.center not in d:
        return False
    for w, x1, x2 in witness.spokes:
        if w not in d or x1 in d or x2 in d:
            return False
        for x in (x1, x2):
            if not (g.has_edge(witness.center, x) and g.has_edge(w, x)):
                return False
    t = len(witness.spokes)
    return all(
        g.has_edge(witness.spokes[r][1], witness.spokes[(r + 1) % t][2])
        for r in range(t)
    )


# ---------------------------------------------------------------------------
# Equality recognition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RecognitionVerdict:
    """``equal`` is the gamma == gamma_2 verdict; a False verdict always
    carries a witness.  ``matching_calls`` counts the auxiliary maximum
    matching invocations (at most two per underlying edge)."""

    equal: bool
    witness: Optional[Witness] = None
    matching_calls: int = 0


def recognize_h(inst: PartitionedInstance) -> RecognitionVerdict:
    """Decide gamma == gamma_2 for a subdivision instance whose
    underlying graph has girth >= 5.

    Runs in polynomial time: one scan over the supplementary edges, then
    one auxiliary matching problem per (D-vertex, incident pair).  Raises
    :class:`InvalidHInstanceError` on malformed input.
    """
    report = validate_h(inst)
    if not report.valid:
        raise InvalidHInstanceError(report)
    g, d = inst.g, inst.d

    pair_of: dict[int, tuple[int, int]] = {}
    partner: dict[int, int] = {}
    for key, (x1, x2) in inst.pair_map.items():
        pair_of[x1] = key
        pair_of[x2] = key
        partner[x1] = x2
        partner[x2] = x1

    # Bridge scan: a supplementary edge whose endpoints have disjoint
    # D-neighbourhoods spans two independent underlying edges.
    for u, v in g.edges():
        if u in d or v in d:
            continue
        common = set(g.neighbors(u)) & set(g.neighbors(v)) & d
        if common:
            continue
        a1, b1 = pair_of[u]
        a2, b2 = pair_of[v]
        witness = BWitness(
            v1=a1, u1=b1, x1=(u, partner[u]),
            v2=a2, u2=b2, x2=(v, partner[v]),
        )
        return RecognitionVerdict(False, witness)

    # Ring scan: around each D-vertex, drop one pair's internal edge and
    # look for a perfect matching among its subdivision vertices; success
    # traces a cycle of pairs.
    matching_calls = 0
    for center in sorted(d):
        incident = sorted(
            key for key in inst.pair_map if center in key
        )
        if len(incident) < 2:
            continue
        local = sorted(g.neighbors(center))
        index = {v: i for i, v in enumerate(local)}
        base_edges = [
            (index[u], index[v])
            for u, v in g.edges()
            if u in index and v in index
        ]
        pair_edges = {
            key: (index[inst.pair_map[key][0]], index[inst.pair_map[key][1]])
            for key in incident
        }
        k = len(incident)
        for removed in incident:
            aux_edges = base_edges + [
                pair_edges[key] for key in incident if key != removed
            ]
            aux = from_edges(len(local), aux_edges)
            matching_calls += 1
            m = maximum_matching(aux)
            if m.size != k:
                continue
            witness = _trace_ring(
                inst, center, removed, local, m.mate, pair_of, partner
            )
            return RecognitionVerdict(False, witness, matching_calls)

    return RecognitionVerdict(True, None, matching_calls)


def _trace_ring(
    inst: PartitionedInstance,
    center: int,
    removed: tuple[int, int],
    local: list[int],
    mate: tuple[int | None, ...],
    pair_of: dict[int, tuple[int, int]],
    partner: dict[int, int],
) -> AWitness:
    """Turn a perfect matching that avoids one pair edge into a ring.

    Both vertices of the broken pair are matched across supplementary
    edges; following exit -> matched entry -> pair partner hops from pair
    to pair until the walk closes back at the broken pair.  Spoke r holds
    (w_r, x_r1, x_r2) with the matching edges realising x_r1 -- x_{r+1}2.
    """

    def other_endpoint(key: tuple[int, int]) -> int:
        a, b = key
        return b if a == center else a

    x1_start, x2_start = inst.pair_map[removed]
    spokes: list[tuple[int, int, int]] = [
        (other_endpoint(removed), x1_start, x2_start)
    ]
    exit_vertex = x1_start
    while True:
        matched = mate[local.index(exit_vertex)]
        assert matched is not None, "perfect matching must cover every vertex"
        entry = local[matched]
        next_key = pair_of[entry]
        if next_key == removed:
            assert entry == x2_start, "ring must close at the broken pair"
            break
        exit_vertex = partner[entry]
        spokes.append((other_endpoint(next_key), exit_vertex, entry))
    return AWitness(center=center, spokes=tuple(spokes))


# ---------------------------------------------------------------------------
# Hereditary recognition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class PerfectVerdict:
    perfect: bool
    failing_component: Optional[tuple[int, ...]] = None
    reason: Optional[str] = None


def recognize_perfect(g: Graph) -> PerfectVerdict:
    """Structural recognizer for hereditary domination equality.

    Accepts exactly the disjoint unions of doubled-subdivided stars.  The
    candidate centre of each component must have maximum degree, every
    other vertex is either a degree-2 subdivision vertex of the centre or
    a leaf seeing >= 2 of them.  Requires minimum degree >= 2.
    """
    for v in range(g.n):
        if g.degree(v) < 2:
            raise ValueError(
                f"recognize_perfect needs minimum degree >= 2; "
                f"vertex {v} has degree {g.degree(v)}"
            )
    for comp in components(g):
        sub, mapping = induced_subgraph(g, comp)
        if not _component_is_subdivided_star(sub):
            return PerfectVerdict(
                False,
                failing_component=tuple(mapping),
                reason="component is not a doubled-subdivided star",
            )
    return PerfectVerdict(True)


def _component_is_subdivided_star(g: Graph) -> bool:
    top = g.max_degree()
    candidates = [v for v in range(g.n) if g.degree(v) == top]
    return any(_is_center(g, v) for v in candidates)


def _is_center(g: Graph, center: int) -> bool:
    spokes = set(g.neighbors(center))
    leaf_of: dict[int, int] = {}
    for x in spokes:
        if g.degree(x) != 2:
            return False
        others = [u for u in g.neighbors(x) if u != center]
        leaf = others[0]
        if leaf in spokes:
            return False  # edge inside the neighbourhood
        leaf_of[x] = leaf
    leaves = set(leaf_of.values())
    if g.n != 1 + len(spokes) + len(leaves):
        return False
    for leaf in leaves:
        group = [x for x in spokes if leaf_of[x] == leaf]
        if len(group) < 2:
            return False
        if set(g.neighbors(leaf)) != set(group):
            return False
    return True


def forbidden_subgraph_check(g: Graph) -> bool:
    """Second route to hereditary equality, via forbidden subgraphs.

    True iff ``g`` is connected with minimum degree >= 2 and contains no
    double-pendant edge (T6), no path on eight vertices and no cycle of
    length other than four, all as not-necessarily-induced subgraphs.
    Guarded to at most 14 vertices.
    """
    if g.n > FORBIDDEN_CHECK_VERTEX_LIMIT:
        raise ValueError(
            f"forbidden_subgraph_check accepts at most "
            f"{FORBIDDEN_CHECK_VERTEX_LIMIT} vertices, got {g.n}"
        )
    if g.n == 0 or len(components(g)) != 1:
        return False
    if g.min_degree() < 2:
        return False
    if _has_double_pendant_edge(g):
        return False
    if _has_triangle(g):
        return False
    if _has_cycle_of_length_at_least(g, 5):
        return False
    if _has_path_on(g, 8):
        return False
    return True


def _has_double_pendant_edge(g: Graph) -> bool:
    # An edge (a, b) plus two private attachments on each side; the four
    # attachments must be distinct, but extra edges among them are fine.
    for a, b in g.edges():
        side_a = set(g.neighbors(a)) - {b}
        side_b = set(g.neighbors(b)) - {a}
        if len(side_a) >= 2 and len(side_b) >= 2 and len(side_a | side_b) >= 4:
            return True
    return False


def _has_triangle(g: Graph) -> bool:
    return any(
        set(g.neighbors(u)) & set(g.neighbors(v)) for u, v in g.edges()
    )


def _has_cycle_of_length_at_least(g: Graph, bound: int) -> bool:
    # Enumerate simple cycles whose minimum vertex is the DFS start.
    on_path: set[int] = set()
    path: list[int] = []

    def dfs(v: int, start: int) -> bool:
        for u in g.neighbors(v):
            if u == start and len(path) >= bound:
                return True
            if u > start and u not in on_path:
                on_path.add(u)
                path.append(u)
                if dfs(u, start):
                    return True
                path.pop()
                on_path.remove(u)
        return False

    for start in range(g.n):
        on_path = {start}
        path = [start]
        if dfs(start, start):
            return True
    return False


def _has_path_on(g: Graph, count: int) -> bool:
    if g.n < count:
        return False
    on_path: set[int] = set()

    def dfs(v: int, length: int) -> bool:
        if length == count:
            return True
        for u in g.neighbors(v):
            if u not in on_path:
                on_path.add(u)
                if dfs(u, length + 1):
                    return True
                on_path.remove(u)
        return False

    for start in range(g.n):
        on_path = {start}
        if dfs(start, 1):
            return True
    return False


def perfect_oracle(g: Graph) -> bool:
    """Definitional oracle: every induced subgraph of minimum degree >= 2
    has equal domination and 2-domination numbers.  At most 13 vertices.
    """
    if g.n > PERFECT_ORACLE_VERTEX_LIMIT:
        raise ValueError(
            f"perfect_oracle accepts at most {PERFECT_ORACLE_VERTEX_LIMIT} "
            f"vertices, got {g.n}"
        )
    masks = g.adjacency_masks()
    for subset in range(1, 1 << g.n):
        if subset.bit_count() < 3:
            continue
        ok = True
        probe = subset
        while probe:
            v = (probe & -probe).bit_length() - 1
            probe &= probe - 1
            if (masks[v] & subset).bit_count() < 2:
                ok = False
                break
        if not ok:
            continue
        vertices = [v for v in range(g.n) if subset >> v & 1]
        sub, _ = induced_subgraph(g, vertices)
        if not is_gamma_gamma2_graph(sub):
            return False
    return True
