"""Recognition: equality decision on subdivision instances, and the three
routes to hereditary equality."""

import pytest

from gamma2 import (
    AWitness,
    BWitness,
    InvalidHInstanceError,
    PartitionedInstance,
    check_witness,
    double_subdivision,
    extract_underlying,
    forbidden_subgraph_check,
    from_edges,
    gadget_a,
    gadget_b,
    gadget_s,
    is_gamma_gamma2_graph,
    perfect_oracle,
    random_h_instance,
    recognize_h,
    recognize_perfect,
    validate_h,
)
from gamma2.constructions import complete, cycle, path, petersen, star
from gamma2.recognition import (
    FORBIDDEN_CHECK_VERTEX_LIMIT,
    PERFECT_ORACLE_VERTEX_LIMIT,
)
from gamma2.verify import t6_augmented_fixtures


def shift(g, offset, n):
    return [(u + offset, v + offset) for u, v in g.edge_list()]


# --- validation ------------------------------------------------------------


def test_validate_accepts_built_instances():
    for inst in (double_subdivision(path(3)), gadget_b(), gadget_a(3)):
        report = validate_h(inst)
        assert report.valid
        assert report.failures == ()
        assert report.underlying is not None


def test_validate_rejects_dependent_specified_set():
    base = double_subdivision(path(2))
    tampered = PartitionedInstance(
        g=from_edges(4, base.g.edge_list() + [(0, 1)]),
        d=base.d,
        pair_map=base.pair_map,
        labels=base.labels,
    )
    report = validate_h(tampered)
    assert not report.valid
    assert any("independent" in msg for msg in report.failures)


def test_validate_rejects_wrong_pair_neighbourhood():
    base = double_subdivision(path(3))
    # give pair vertex 3 an extra D-neighbour
    tampered = PartitionedInstance(
        g=from_edges(7, base.g.edge_list() + [(2, 3)]),
        d=base.d,
        pair_map=base.pair_map,
        labels=base.labels,
    )
    report = validate_h(tampered)
    assert not report.valid


def test_validate_rejects_uncovered_outside_vertex():
    base = double_subdivision(path(2))
    tampered = PartitionedInstance(
        g=from_edges(5, base.g.edge_list() + [(2, 4), (3, 4)]),
        d=base.d,
        pair_map=base.pair_map,
        labels=base.labels,
    )
    report = validate_h(tampered)
    assert not report.valid


def test_validate_rejects_adjacent_pair():
    base = double_subdivision(path(2))
    tampered = PartitionedInstance(
        g=from_edges(4, base.g.edge_list() + [(2, 3)]),
        d=base.d,
        pair_map=base.pair_map,
        labels=base.labels,
    )
    report = validate_h(tampered)
    assert not report.valid


def test_validate_rejects_short_cycles_in_underlying():
    triangle = double_subdivision(complete(3))
    report = validate_h(triangle)
    assert not report.valid
    assert any("triangle" in msg for msg in report.failures)
    square = double_subdivision(cycle(4))
    report = validate_h(square)
    assert not report.valid
    assert any("4-cycle" in msg for msg in report.failures)


def test_extract_underlying_roundtrip():
    for f in (path(4), star(3), petersen()):
        inst = double_subdivision(f)
        assert extract_underlying(inst.g, inst.d) == f
    b = gadget_b()
    assert extract_underlying(b.g, b.d) == from_edges(4, [(0, 1), (2, 3)])


# --- equality decision -----------------------------------------------------


def test_recognize_equal_on_subdivided_stars():
    for f in (path(2), path(3), star(3), star(4)):
        verdict = recognize_h(double_subdivision(f))
        assert verdict.equal
        assert verdict.witness is None


def test_recognize_bridge_obstruction():
    inst = gadget_b()
    verdict = recognize_h(inst)
    assert not verdict.equal
    assert isinstance(verdict.witness, BWitness)
    assert check_witness(inst.g, inst.d, verdict.witness)
    assert not is_gamma_gamma2_graph(inst.g)


def test_recognize_ring_obstruction():
    for k in (2, 3, 4):
        inst = gadget_a(k)
        verdict = recognize_h(inst)
        assert not verdict.equal
        assert isinstance(verdict.witness, AWitness)
        assert len(verdict.witness.spokes) == k
        assert check_witness(inst.g, inst.d, verdict.witness)
        assert not is_gamma_gamma2_graph(inst.g)


def test_matching_call_budget():
    inst = gadget_a(4)
    verdict = recognize_h(inst)
    f = extract_underlying(inst.g, inst.d)
    assert verdict.matching_calls <= 2 * f.m


def test_tampered_witness_fails_replay():
    inst = gadget_b()
    w = recognize_h(inst).witness
    assert isinstance(w, BWitness)
    bad = BWitness(w.v1, w.u1, w.x1, w.v2, w.u2, (w.x2[1], w.x2[0]))
    # reversing the second pair breaks the bridge edge x1[0] -- x2[0]
    assert not check_witness(inst.g, inst.d, bad)
    clash = BWitness(w.v1, w.v1, w.x1, w.v2, w.u2, w.x2)
    assert not check_witness(inst.g, inst.d, clash)


def test_recognize_rejects_invalid_instance():
    with pytest.raises(InvalidHInstanceError):
        recognize_h(double_subdivision(complete(3)))


def test_recognize_agrees_with_oracle_on_random_instances():
    checked = 0
    seed = 0
    while checked < 40:
        seed += 1
        inst = random_h_instance(3 + seed % 3, 0.4, 0.3, seed=seed)
        if inst is None or inst.g.n > 22:
            continue
        checked += 1
        verdict = recognize_h(inst)
        assert verdict.equal == is_gamma_gamma2_graph(inst.g)
        if not verdict.equal:
            assert check_witness(inst.g, inst.d, verdict.witness)


# --- hereditary equality ---------------------------------------------------


def test_recognize_perfect_accepts_subdivided_stars():
    for mults in ((2,), (2, 2), (3, 2), (4, 2, 2)):
        assert recognize_perfect(gadget_s(mults).g).perfect


def test_recognize_perfect_accepts_disjoint_unions():
    a = gadget_s((2, 2)).g
    b = gadget_s((3,)).g
    union = from_edges(
        a.n + b.n, a.edge_list() + shift(b, a.n, b.n)
    )
    assert recognize_perfect(union).perfect


@pytest.mark.parametrize(
    "g",
    [cycle(5), cycle(6), complete(4), petersen()]
    + t6_augmented_fixtures(),
)
def test_recognize_perfect_rejects(g):
    verdict = recognize_perfect(g)
    assert not verdict.perfect
    assert verdict.failing_component is not None
    assert verdict.reason


def test_recognize_perfect_requires_min_degree_two():
    with pytest.raises(ValueError, match="vertex 0"):
        recognize_perfect(path(4))


def test_forbidden_subgraph_route():
    assert forbidden_subgraph_check(cycle(4))
    assert forbidden_subgraph_check(gadget_s((2, 2)).g)
    assert not forbidden_subgraph_check(cycle(5))
    assert not forbidden_subgraph_check(complete(4))
    for g in t6_augmented_fixtures():
        assert not forbidden_subgraph_check(g)
    # long path: two subdivided stars chained together stay perfect only
    # when disconnected; the chain below contains a path on 8 vertices
    chain = from_edges(
        9,
        [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7),
         (7, 8), (8, 6), (5, 3)],
    )
    assert not forbidden_subgraph_check(chain)


def test_perfect_oracle_small_cases():
    assert perfect_oracle(cycle(4))
    assert perfect_oracle(gadget_s((2, 2)).g)
    assert not perfect_oracle(cycle(5))
    assert not perfect_oracle(complete(4))


def test_size_guards():
    big_ring = cycle(FORBIDDEN_CHECK_VERTEX_LIMIT + 1)
    with pytest.raises(ValueError):
        forbidden_subgraph_check(big_ring)
    with pytest.raises(ValueError):
        perfect_oracle(cycle(PERFECT_ORACLE_VERTEX_LIMIT + 1))


def test_three_routes_agree_on_connected_fixtures():
    fixtures = [cycle(n) for n in range(4, 10)]
    fixtures += [gadget_s(m).g for m in ((2,), (2, 2), (3, 2), (2, 2, 2))]
    fixtures += [complete(4), petersen()]
    fixtures += t6_augmented_fixtures()
    for g in fixtures:
        structural = recognize_perfect(g).perfect
        assert structural == forbidden_subgraph_check(g)
        if g.n <= PERFECT_ORACLE_VERTEX_LIMIT:
            assert structural == perfect_oracle(g)
