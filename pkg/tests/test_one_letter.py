"""One-pair specializations: the three-condition characterization, the
parity double cover, and the distance gadget."""

import random

import pytest

from dycklab import (Alphabet, Instance, Label, LabeledGraph, ParityIndex,
                     UpdateError, bfs_distances, build_distance_gadget,
                     parity_index_for, prop1_check, solve_dyck)
from dycklab.suites import random_undirected_one_pair

OPEN1, CLOSE1 = Label("l", 1, False), Label("l", 1, True)


def undirected(n, edges, s, t):
    g = LabeledGraph.build(False, n, Alphabet("dyck", 1), edges)
    return Instance(g, s, t)


def test_same_endpoints_always_reachable():
    inst = undirected(3, [], 1, 1)
    assert prop1_check(inst)


def test_two_edge_path_is_reachable():
    inst = undirected(3, [(0, OPEN1, 1), (1, CLOSE1, 2)], 0, 2)
    assert prop1_check(inst)
    assert solve_dyck(inst).query(0, 2)


def test_odd_path_fails_the_even_walk_condition():
    inst = undirected(4, [(0, OPEN1, 1), (1, OPEN1, 2), (2, CLOSE1, 3)], 0, 3)
    assert not prop1_check(inst)
    assert not solve_dyck(inst).query(0, 3)


def test_missing_endpoint_labels_fail_fast():
    inst = undirected(2, [(0, CLOSE1, 1)], 0, 1)
    assert not prop1_check(inst)


def test_characterization_rejects_bad_inputs():
    directed = Instance(
        LabeledGraph.build(True, 2, Alphabet("dyck", 1), []), 0, 1)
    with pytest.raises(ValueError):
        prop1_check(directed)
    two_pair = Instance(
        LabeledGraph.build(False, 2, Alphabet("dyck", 2), []), 0, 1)
    with pytest.raises(ValueError):
        prop1_check(two_pair)


def test_characterization_matches_solver_on_random_instances():
    rng = random.Random(99)
    for _ in range(150):
        inst = random_undirected_one_pair(rng, max_vertices=6)
        assert prop1_check(inst) == solve_dyck(inst).query(inst.source, inst.sink)


# ---------------------------------------------------------------------------
# Parity double cover

def test_single_edge_gives_odd_walks_only():
    idx = ParityIndex(2, [(0, 1)])
    assert not idx.even_walk(0, 1)
    assert idx.odd_walk(0, 1)
    assert idx.even_walk(0, 0)


def test_triangle_connects_everything():
    idx = ParityIndex(3, [(0, 1), (1, 2), (2, 0)])
    for u in range(3):
        for v in range(3):
            assert idx.even_walk(u, v)
            assert idx.odd_walk(u, v)


def test_four_cycle_stays_bipartite():
    idx = ParityIndex(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert idx.even_walk(0, 2)
    assert not idx.even_walk(0, 1)
    assert idx.odd_walk(0, 1)


def test_delete_from_triangle_breaks_the_odd_cycle():
    idx = ParityIndex(3, [(0, 1), (1, 2), (2, 0)])
    idx.delete(2, 0)
    assert idx.even_walk(0, 2)  # walk 0-1-2 of length 2 survives
    assert not idx.even_walk(0, 1)


def test_delete_last_edge_isolates_all():
    idx = ParityIndex(2, [(0, 1)])
    idx.delete(0, 1)
    assert not idx.odd_walk(0, 1)
    assert not idx.even_walk(0, 1)


def test_strict_duplicate_and_missing_edges():
    idx = ParityIndex(2, [(0, 1)])
    with pytest.raises(UpdateError):
        idx.insert(1, 0)
    with pytest.raises(UpdateError):
        idx.delete(0, 0)


def test_update_log_matches_from_scratch():
    rng = random.Random(5)
    for _ in range(20):
        n = rng.randint(2, 7)
        idx = ParityIndex(n)
        present: set[tuple[int, int]] = set()
        for _ in range(30):
            u, v = rng.randrange(n), rng.randrange(n)
            key = (min(u, v), max(u, v))
            if key in present:
                present.remove(key)
                idx.delete(u, v)
            else:
                present.add(key)
                idx.insert(u, v)
            fresh = ParityIndex(n, sorted(present))
            for a in range(n):
                for b in range(n):
                    assert idx.even_walk(a, b) == fresh.even_walk(a, b)
                    assert idx.odd_walk(a, b) == fresh.odd_walk(a, b)


def test_parity_index_for_dedupes_parallel_labels():
    inst = undirected(2, [(0, OPEN1, 1), (0, CLOSE1, 1)], 0, 1)
    idx = parity_index_for(inst)
    assert idx.odd_walk(0, 1)
    assert not idx.even_walk(0, 1)


# ---------------------------------------------------------------------------
# Distance gadget

def test_single_vertex_gadget_shape():
    gadget = build_distance_gadget(1, set())
    g = gadget.instance.graph
    assert g.vertex_count == 2
    assert g.has_edge(0, OPEN1, 0)
    assert g.has_edge(0, CLOSE1, gadget.chain_vertex(0, 1))


def test_single_arc_distance_one():
    gadget = build_distance_gadget(2, {(0, 1)})
    idx = solve_dyck(gadget.instance)
    assert idx.query(0, gadget.chain_vertex(1, 1))
    assert idx.query(0, gadget.chain_vertex(1, 2))  # padding via self-loops


def test_chain_vertex_bounds():
    gadget = build_distance_gadget(2, set())
    with pytest.raises(ValueError):
        gadget.chain_vertex(0, 0)
    with pytest.raises(ValueError):
        gadget.chain_vertex(2, 1)


def gadget_distances(vertex_count, arcs, source):
    gadget = build_distance_gadget(vertex_count, arcs)
    idx = solve_dyck(gadget.instance)
    out = {}
    for t in range(vertex_count):
        if t == source:
            out[t] = 0
            continue
        ks = [k for k in range(1, vertex_count + 1)
              if idx.query(source, gadget.chain_vertex(t, k))]
        if ks:
            out[t] = min(ks)
    return out


def test_distances_match_bfs_on_random_digraphs():
    rng = random.Random(31)
    for _ in range(15):
        n = rng.randint(1, 6)
        arcs = {(u, v) for u in range(n) for v in range(n)
                if u != v and rng.random() < 0.3}
        s = rng.randrange(n)
        assert gadget_distances(n, arcs, s) == bfs_distances(n, arcs, s)
