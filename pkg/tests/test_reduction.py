import json
from functools import lru_cache

import pytest

from oracles import brute_2_subcolorable, has_odd_hole_nx, pysat_solve
from subcolor.core import (Graph, complete_bipartite, complete_graph, cycle_graph, grid_graph, is_induced_cycle,
                           is_planar, load_graph6, max_degree, path_graph, random_grid_subgraph)
from subcolor.gadgets import EdgeGadgetSpec, VertexGadgetSpec, default_gadgets
from subcolor.reduction import (CSV_COLUMNS, ReductionIntegrityError, ReductionRefused, check_class_membership,
                                equivalence_experiment, export_gprime, extend_coloring,
                                p3_neighborhood_reduction, project_coloring, reduce)
from subcolor.subcoloring import (BLUE, RED, PreconditionError, Subcoloring, is_saturated,
                                  solve_2_subcoloring, verify_2_subcoloring)

H, E = default_gadgets(4)
H3, _ = default_gadgets(3)

# triangle-free planar source graph with maximum degree 4 and no 2-subcolouring
UNSAT_EDGES = [(0, 1), (0, 2), (0, 3), (0, 9), (1, 5), (1, 7), (2, 4), (2, 6), (3, 6), (3, 11), (4, 5),
               (4, 8), (5, 9), (5, 11), (6, 8), (6, 10), (7, 9), (8, 11), (10, 11)]


@lru_cache(maxsize=None)
def reduced(name):
    graphs = {"K2": path_graph(2), "P3": path_graph(3), "C4": cycle_graph(4), "grid3": grid_graph(3, 3),
              "empty3": Graph(3)}
    return reduce(graphs[name], H, E)


def structural_invariants(r):
    g, h, e = r.g, r.h, r.e
    assert r.gprime.n == g.n * h.graph.n + 2 * g.m * (e.graph.n - 2)
    assert max_degree(r.gprime) <= 4
    assert len(r.owner) == r.gprime.n
    used = {}
    for (u, v), (c1, c2) in r.edge_map.items():
        for end, i, j in ((u, c1.port_u, c2.port_u), (v, c1.port_v, c2.port_v)):
            assert min(i, j) % 2 == 0 and abs(i - j) == 1
            assert (end, min(i, j)) not in used
            used[(end, min(i, j))] = (u, v)
        # copy 1 takes the even port at u, copy 2 the even port at v
        assert c1.port_u % 2 == 0 and c2.port_v % 2 == 0
        for copy in (c1, c2):
            assert copy.ids[e.x1] == r.port(u, copy.port_u)
            assert copy.ids[e.x2] == r.port(v, copy.port_v)


# ---------------------------------------------------------------------------
# construction

def test_empty_graph_gives_disjoint_gadgets():
    r = reduced("empty3")
    assert r.gprime.n == 3 * H.graph.n
    assert r.gprime.m == 3 * H.graph.m
    assert len(r.gprime.components()) == 3


def test_k2_vertex_count():
    r = reduced("K2")
    assert r.gprime.n == 2 * H.graph.n + 2 * (E.graph.n - 2)
    structural_invariants(r)


def test_p3_middle_vertex_uses_two_pairs():
    r = reduced("P3")
    structural_invariants(r)
    pairs_at_1 = {min(c.port_u if u == 1 else c.port_v for c in pair) // 2
                  for (u, v), pair in r.edge_map.items()}
    assert len(pairs_at_1) == 2
    for v, (off, copy) in r.vertex_map.items():
        assert copy == v and off == r.vertex_offset[v]
        assert all(r.owner[r.h_vertex(v, w)] == ("H", v) for w in H.graph.vertices())


@pytest.mark.parametrize("name", ["C4", "grid3"])
def test_structure_and_planarity(name):
    r = reduced(name)
    structural_invariants(r)
    ok, rs = is_planar(r.gprime)
    assert ok and r.embedding is not None


def test_mock_gadgets_structural():
    # tiny stand-ins: the reduction is purely structural once certification is skipped
    mock_h = VertexGadgetSpec(Graph(9, [(8, i) for i in range(4)] + [(i, i + 4) for i in range(4)]),
                              tuple(range(4, 8)), ((4, 5), (6, 7)))
    mock_e = EdgeGadgetSpec(Graph(6, [(0, 2), (2, 4), (4, 5), (5, 3), (3, 1)]), 0, 1, 2, 3, 4, 5)
    for g in (cycle_graph(4), cycle_graph(6), grid_graph(2, 3)):
        if max_degree(g) > 2:
            continue
        r = reduce(g, mock_h, mock_e, certify_gadgets=False)
        structural_invariants(r)


@pytest.mark.parametrize("g,condition", [
    (complete_graph(3), "triangle-free"),
    (complete_bipartite(1, 5), "max-degree"),
    (complete_bipartite(3, 3), "planar"),
])
def test_refusals(g, condition):
    with pytest.raises(ReductionRefused) as info:
        reduce(g, H, E)
    assert info.value.condition == condition


def test_port_exhaustion_and_uncertified_gadgets():
    with pytest.raises(ReductionRefused) as info:
        reduce(complete_bipartite(1, 4), H3, E)
    assert info.value.condition == "port-exhaustion"
    broken = EdgeGadgetSpec(Graph(E.graph.n, [x for x in E.graph.edge_list() if x != (0, 1)]), **E.terminals)
    with pytest.raises(ReductionRefused) as info:
        reduce(path_graph(2), H, broken)
    assert info.value.condition == "certified-gadgets"


def test_nonplanar_composition_is_an_integrity_error():
    # K2,3 with ports 0, 1, 2, 3: no face carries all four ports, so the copies for C4 must cross
    bad_h = VertexGadgetSpec(Graph(5, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)]),
                             (0, 1, 2, 3), ((0, 1), (2, 3)))
    mock_e = EdgeGadgetSpec(Graph(6, [(0, 2), (2, 4), (4, 5), (5, 3), (3, 1)]), 0, 1, 2, 3, 4, 5)
    with pytest.raises(ReductionIntegrityError) as info:
        reduce(cycle_graph(4), bad_h, mock_e, certify_gadgets=False)
    witness = info.value.witness
    assert witness
    assert not is_planar(Graph(max(max(e) for e in witness) + 1, witness))[0]


# ---------------------------------------------------------------------------
# class membership

def test_class_c5_and_k4():
    rep = check_class_membership(cycle_graph(5))
    assert rep.verdicts["odd-hole-free"].holds is False
    assert sorted(rep.verdicts["odd-hole-free"].witness) == [0, 1, 2, 3, 4]
    rep = check_class_membership(complete_graph(4))
    assert rep.verdicts["K4-free"].holds is False
    assert sorted(rep.verdicts["K4-free"].witness) == [0, 1, 2, 3]


def test_class_grid_passes_all_eight():
    rep = check_class_membership(grid_graph(3, 3))
    assert len(rep.verdicts) == 8 and rep.all_pass


def test_class_witnesses_replay():
    g = Graph(6, cycle_graph(5).edge_list() + [(0, 5), (1, 5)])
    rep = check_class_membership(g)
    for name, v in rep.verdicts.items():
        if v.holds is False and name == "odd-hole-free":
            assert is_induced_cycle(g, v.witness)
    assert rep.verdicts["odd-hole-free"].holds == (not has_odd_hole_nx(g.n, g.edge_list()))


@pytest.mark.parametrize("name", ["K2", "P3", "C4", "grid3"])
def test_reduced_graphs_are_in_the_class(name):
    rep = check_class_membership(reduced(name).gprime)
    assert rep.all_pass, {k: v.to_json() for k, v in rep.verdicts.items() if not v.holds}
    assert rep.p3_removal["contains"]["bipartite"]
    assert rep.p3_removal["equals"]["bipartite"]


def test_p3_removal_examples():
    _, removed, bip = p3_neighborhood_reduction(grid_graph(4, 4))
    assert removed == set() and bip
    # claw plus one leaf edge: N(centre) is K2 + K1, which has no induced P3
    claw_plus = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2)])
    residual, removed, bip = p3_neighborhood_reduction(claw_plus)
    assert removed == set() and residual.m == 4 and not bip
    # diamond: both degree-3 vertices see an induced P3
    diamond = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)])
    for reading in ("contains", "equals"):
        residual, removed, bip = p3_neighborhood_reduction(diamond, reading)
        assert removed == {0, 2} and residual.n == 2 and residual.m == 0 and bip
    _, removed, bip = p3_neighborhood_reduction(cycle_graph(5))
    assert removed == set() and not bip
    with pytest.raises(ValueError):
        p3_neighborhood_reduction(cycle_graph(5), "roughly")


def test_p3_readings_differ_on_degree_four():
    # N(0) = {1,2,3,4} with edges 1-2, 2-3: contains a P3 but is not one
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (2, 3)])
    assert 0 in p3_neighborhood_reduction(g, "contains")[1]
    assert 0 not in p3_neighborhood_reduction(g, "equals")[1]


# ---------------------------------------------------------------------------
# colouring transfer

def test_project_k2_bichromatic_and_swap():
    r = reduced("K2")
    cprime = extend_coloring(r, Subcoloring((RED, BLUE)))
    assert project_coloring(r, cprime) == Subcoloring((RED, BLUE))
    assert project_coloring(r, cprime.swapped()) == Subcoloring((BLUE, RED))
    # the four identified terminals have no same-coloured neighbour inside their edge copy
    for copy in r.copies():
        inside = set(copy.ids)
        for t in (E.x1, E.x2):
            x = copy.ids[t]
            assert all(cprime[w] != cprime[x] for w in r.gprime.neighbors(x) if w in inside)


def test_extend_k2_monochromatic_saturation_audit():
    r = reduced("K2")
    cprime = extend_coloring(r, Subcoloring((RED, RED)))
    assert verify_2_subcoloring(r.gprime, cprime)
    assert project_coloring(r, cprime) == Subcoloring((RED, RED))
    for c1, c2 in r.edge_map.values():
        for copy in (c1, c2):
            sat = [is_saturated(r.gprime, cprime, copy.ids[t]) for t in (E.x1, E.x2)]
            assert all(sat)
    # every port of both gadgets is saturated, each exactly once from inside or from one edge copy
    for v in (0, 1):
        assert all(is_saturated(r.gprime, cprime, r.port(v, i)) for i in range(len(H.ports)))


def test_extend_rejects_invalid_source_colouring():
    with pytest.raises(PreconditionError):
        extend_coloring(reduced("P3"), Subcoloring((RED, RED, RED)))


def test_project_detects_tampering():
    r = reduced("K2")
    cprime = extend_coloring(r, Subcoloring((RED, BLUE)))
    tampered = list(cprime.colors)
    p = r.port(0, 3)
    tampered[p] = tampered[p].other
    with pytest.raises(ReductionIntegrityError):
        project_coloring(r, Subcoloring(tuple(tampered)))


@pytest.mark.parametrize("name", ["P3", "C4", "grid3"])
def test_extension_is_total(name):
    r = reduced(name)
    from subcolor.subcoloring import enumerate_2_subcolorings
    for c in enumerate_2_subcolorings(r.g):
        ext = extend_coloring(r, c)
        assert ext is not None and project_coloring(r, ext) == c


def test_unsat_source_gives_unsat_reduction():
    g = Graph(12, UNSAT_EDGES)
    assert not brute_2_subcolorable(g.n, g.edge_list())
    assert solve_2_subcoloring(g) is None
    r = reduce(g, H, E)
    structural_invariants(r)
    assert solve_2_subcoloring(r.gprime) is None
    assert pysat_solve(r.gprime.n, r.gprime.edge_list()) is None
    # dropping any edge makes the source colourable, and so the reduction too
    g2 = Graph(12, UNSAT_EDGES[1:])
    assert solve_2_subcoloring(g2) is not None
    assert solve_2_subcoloring(reduce(g2, H, E).gprime) is not None


# ---------------------------------------------------------------------------
# experiment and export

def test_experiment_trivial_cases():
    assert equivalence_experiment(0, 4, 4, 0.8, 0, H, E).rows == []
    res = equivalence_experiment(3, 4, 4, 0, 0, H, E)
    assert all(r.n == 0 and r.agree and r.sat_G and r.sat_Gprime for r in res.rows)
    assert res.to_csv().splitlines()[0] == ",".join(CSV_COLUMNS)


def test_experiment_small_run_is_deterministic():
    a = equivalence_experiment(3, 3, 3, 0.8, 5, H, E)
    b = equivalence_experiment(3, 3, 3, 0.8, 5, H, E)
    assert a.to_csv() == b.to_csv()
    s = a.summary()
    assert s["agreements"] == 3 and s["class_failures"] == 0 and not s["errors"]
    assert s["total_millis"] is None


def test_experiment_records_failures_instead_of_raising():
    # three port pairs cannot host a degree-4 grid vertex
    rows = equivalence_experiment(1, 3, 3, 1, 0, H3, E).rows
    assert rows[0].error.startswith("ReductionRefused") and not rows[0].agree


def test_experiment_refuses_uncertified_gadgets():
    broken = EdgeGadgetSpec(Graph(E.graph.n, [x for x in E.graph.edge_list() if x != (0, 1)]), **E.terminals)
    with pytest.raises(ValueError):
        equivalence_experiment(1, 3, 3, 0.5, 0, H, broken)


def test_export_formats():
    r = reduced("K2")
    body, prov = export_gprime(r, "graph6")
    assert load_graph6(body.strip()) == r.gprime
    data = json.loads(prov)
    assert data["n_source"] == 2 and len(data["owner"]) == r.gprime.n
    assert len(data["edge_map"]["0-1"]) == 2
    dot, _ = export_gprime(r, "dot")
    assert dot.startswith("graph") and "--" in dot
    with pytest.raises(ValueError):
        export_gprime(r, "png")


def test_grid_instances_are_valid_sources():
    for i in range(20):
        g = random_grid_subgraph(5, 5, 0.8, f"0:{i}")
        reduce(g, H, E)
