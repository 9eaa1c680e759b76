import random

import pytest

from udgcolor.core import (boundary_order, build_instance, instance_graph,
                           is_clique)
from udgcolor.cover import (CliqueCover, collinear_cover, cover_from_text,
                            cover_three_cliques, cover_to_text,
                            disk_case_cover, far_pair_cover, hollow_pivot,
                            partition_from_cover, trace_from_text,
                            trace_to_text)
from udgcolor.errors import (EmptyInstance, StabilityViolated,
                             StructureViolation)
from udgcolor.geom import point, smallest_enclosing_disk
from udgcolor.instances import gen_circulant, gen_two_cluster
from udgcolor.oracles import brute_cover_exists, verify_cover


def _check(inst, cover):
    assert verify_cover(instance_graph(inst), cover) is None


def test_cover_single_vertex():
    inst = build_instance("one", [point(0, 0)])
    cover, trace = cover_three_cliques(inst)
    assert cover.cliques == (frozenset({0}), frozenset({0}), frozenset())
    assert cover.shared_vertex == 0
    assert trace is None


def test_cover_two_far_points():
    inst = build_instance("two", [point(0, 0), point(2, 0)])
    cover, _ = cover_three_cliques(inst)
    assert cover.cliques == (frozenset({0}), frozenset({0}), frozenset({1}))
    assert cover.shared_vertex == 0


def test_cover_c5_matches_brute_force_existence():
    inst = gen_circulant(5, 2)
    cover, trace = cover_three_cliques(inst)
    _check(inst, cover)
    g = instance_graph(inst)
    assert brute_cover_exists(g, shared=True) is not None
    containing = [i for i in range(3) if cover.shared_vertex in cover.cliques[i]]
    assert len(containing) >= 2


def test_cover_gate_rejects_independent_triple():
    inst = build_instance("bad", [point(0, 0), point(2, 0), point(4, 0)])
    with pytest.raises(StabilityViolated) as err:
        cover_three_cliques(inst)
    assert err.value.witness == (0, 1, 2)


def test_cover_empty_instance():
    with pytest.raises(EmptyInstance):
        cover_three_cliques(build_instance("none", []))


def test_far_pair_two_points():
    inst = build_instance("fp", [point(0, 0), point(2, 0)])
    cover = far_pair_cover(inst, 0, 1)
    assert cover.cliques == (frozenset({0}), frozenset({0}), frozenset({1}))


def test_far_pair_with_midpoint():
    inst = build_instance("fp", [point(0, 0), point(2, 0), point(1, 0)])
    cover = far_pair_cover(inst, 0, 1)
    assert cover.cliques == (frozenset({0}), frozenset({0, 2}), frozenset({1}))
    _check(inst, cover)


def test_far_pair_four_collinear():
    inst = build_instance("fp", [point(0, 0), point(2, 0), point("1/2", 0),
                                 point("3/2", 0)])
    cover = far_pair_cover(inst, 0, 1)
    assert cover.cliques == (frozenset({0, 2}), frozenset({0}), frozenset({1, 3}))
    _check(inst, cover)


def test_collinear_cover_all_close():
    inst = build_instance("ln", [point(0, 0), point("1/2", 0), point(1, 0)])
    cover = collinear_cover(inst)
    assert cover.cliques == (frozenset({0, 1, 2}), frozenset(), frozenset({0}))
    _check(inst, cover)


def test_collinear_cover_two_groups():
    inst = build_instance("ln", [point(0, 0), point(1, 0), point("3/2", 0),
                                 point(2, 0)])
    cover = collinear_cover(inst)
    assert cover.cliques == (frozenset({0, 1}), frozenset({2, 3}), frozenset({0}))
    _check(inst, cover)


def test_collinear_cover_far_pair_only():
    inst = build_instance("ln", [point(0, 0), point(2, 0)])
    cover = collinear_cover(inst)
    assert cover.cliques == (frozenset({0}), frozenset({1}), frozenset({0}))
    _check(inst, cover)


def test_hollow_pivot_complete_boundary():
    inst = build_instance("sq", [point(0, 0), point("1/2", 0),
                                 point("1/2", "1/2"), point(0, "1/2")])
    order = boundary_order(inst)
    g = instance_graph(inst)
    v = order.sequence[0]
    assert hollow_pivot(order, g, v) == (order.successor(v), order.predecessor(v))


def test_hollow_pivot_c8():
    inst = gen_circulant(8, 3)
    order = boundary_order(inst)
    g = instance_graph(inst)
    assert hollow_pivot(order, g, 0) == (6, 2)


def test_hollow_pivot_c5():
    inst = gen_circulant(5, 2)
    order = boundary_order(inst)
    g = instance_graph(inst)
    v_minus, v_plus = hollow_pivot(order, g, 0)
    assert (v_minus, v_plus) == (4, 1)
    # the leftover arc is the middle clique {2,3}
    assert is_clique(g, {2, 3})


def test_hollow_pivot_conclusion_holds_on_random_boundaries():
    from udgcolor.core import interval_closed

    rng = random.Random(31)
    done = 0
    while done < 25:
        inst = gen_two_cluster(4 + rng.randrange(12), seed=rng.randrange(10000),
                               separation="3/4")
        g = instance_graph(inst)
        try:
            order = boundary_order(inst)
        except Exception:
            continue
        sub = set(order.sequence)
        for v in order.sequence:
            v_minus, v_plus = hollow_pivot(order, g, v)
            left = interval_closed(order, v_minus, v)
            right = interval_closed(order, v, v_plus)
            rest = [w for w in order.sequence
                    if w not in set(interval_closed(order, v_minus, v_plus))]
            assert is_clique(g, left) and is_clique(g, right) and is_clique(g, rest)
        done += 1


def test_disk_case_small_square_complete():
    inst = build_instance("sq", [point(0, 0), point("1/2", 0),
                                 point("1/2", "1/2"), point(0, "1/2")])
    center = smallest_enclosing_disk(inst.points).center
    cover, trace = disk_case_cover(inst, center)
    _check(inst, cover)
    assert trace.mode in ("narrow", "split")
    shared = cover.shared_vertex
    assert sum(shared in part for part in cover.cliques) >= 2


def test_disk_case_c8_by_invariants():
    inst = gen_circulant(8, 3)
    cover, trace = cover_three_cliques(inst)
    _check(inst, cover)
    assert trace is not None and trace.p_virtual
    assert sum(len(c) for c in cover.cliques) >= 8
    assert brute_cover_exists(instance_graph(inst), shared=True) is not None


def test_disk_case_c5_by_invariants():
    inst = gen_circulant(5, 2)
    cover, trace = cover_three_cliques(inst)
    _check(inst, cover)
    assert brute_cover_exists(instance_graph(inst), shared=True) is not None


def test_disk_case_real_universal_vertex():
    pts = [point(0, 0), point("3/5", 0), point("-3/5", 0),
           point(0, "3/5"), point(0, "-3/5")]
    inst = build_instance("cross", pts)
    cover, trace = cover_three_cliques(inst)
    _check(inst, cover)
    assert not trace.p_virtual
    assert trace.p_id == 0


def test_disk_case_nonedge_shortcut():
    # acute triangle: base pair non-adjacent, enclosing center strictly inside
    pts = [point(0, 0), point("6/5", 0), point("3/5", "4/5")]
    inst = build_instance("acute", pts)
    cover, trace = cover_three_cliques(inst)
    _check(inst, cover)
    assert trace.mode == "nonedge"
    assert trace.nonedge_pair == (0, 1)


def test_disk_case_trace_regions_cover_everything():
    inst = gen_circulant(11, 4)
    cover, trace = cover_three_cliques(inst)
    _check(inst, cover)
    assert trace.mode == "split"
    region_union = (trace.region_b_plus | trace.region_b_minus | trace.region_r
                    | trace.region_t_plus | trace.region_t_minus)
    expected = set(range(inst.n)) | {trace.p_id}
    assert region_union == expected
    assert (trace.split_t_plus_b | trace.split_t_plus_r | trace.split_t_plus_star
            == trace.region_t_plus)
    assert (trace.split_t_minus_b | trace.split_t_minus_r | trace.split_t_minus_star
            == trace.region_t_minus)
    g = instance_graph(inst)
    # the two R-complete zones must join into one clique
    assert is_clique(g, (trace.split_t_plus_r | trace.split_t_minus_r) - {trace.p_id})


def test_partition_single_vertex_cover():
    part = partition_from_cover(
        CliqueCover((frozenset({0}), frozenset({0}), frozenset()), 0))
    assert part.parts == (frozenset({0}), frozenset(), frozenset())


def test_partition_disjointification_rule():
    cover = CliqueCover((frozenset({0, 1}), frozenset({1, 2}), frozenset({3, 4})), 1)
    part = partition_from_cover(cover)
    assert part.parts == (frozenset({0, 1}), frozenset({2}), frozenset({3, 4}))


def test_partition_from_engine_cover_c5():
    inst = gen_circulant(5, 2)
    cover, _ = cover_three_cliques(inst)
    part = partition_from_cover(cover)
    sizes = sorted(len(p) for p in part.parts)
    assert sum(sizes) == 5
    assert len(set(sizes)) >= 2
    assert verify_cover(instance_graph(inst), part) is None


def test_partition_empty_rejected():
    with pytest.raises(EmptyInstance):
        partition_from_cover(CliqueCover((frozenset(), frozenset(), frozenset()), None))


def test_partition_keeps_shared_in_larger():
    cover = CliqueCover((frozenset({0}), frozenset({0, 1, 2}), frozenset({3})), 0)
    part = partition_from_cover(cover)
    assert part.parts[1] == frozenset({0, 1, 2})
    assert part.parts[0] == frozenset()


def test_determinism_identical_cover():
    inst = gen_two_cluster(24, seed=9, separation="1/2")
    c1, t1 = cover_three_cliques(inst)
    c2, t2 = cover_three_cliques(inst)
    assert c1 == c2
    assert t1 == t2


def test_cover_round_trip_text():
    inst = gen_circulant(8, 3)
    cover, trace = cover_three_cliques(inst)
    text = cover_to_text(cover, inst.id)
    rid, parsed = cover_from_text(text)
    assert rid == inst.id
    assert parsed == cover
    ttext = trace_to_text(trace, inst.id)
    rid, tparsed = trace_from_text(ttext)
    assert rid == inst.id
    assert tparsed == trace


def test_structure_violation_is_hard_error():
    # disk_case_cover on points outside the claimed disk must refuse
    inst = build_instance("off", [point(0, 0), point(3, 0)])
    with pytest.raises(StructureViolation):
        disk_case_cover(inst, point(0, 0))
