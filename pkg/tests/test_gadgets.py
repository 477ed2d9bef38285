import json
import random

import pytest

from oracles import brute_edge_properties, brute_vertex_properties, pysat_solve
from subcolor.core import Graph, is_planar
from subcolor.gadgets import (FAIL, HUB_PLANS, PASS, VACUOUS, EdgeGadgetSpec, GadgetSpecError,
                              SynthesisRefused, VertexGadgetSpec, assemble_vertex_gadget, builtin_gadget,
                              default_gadgets, dump_gadget, gadget_from_json, load_gadget,
                              ports_on_common_face, synthesize_edge_gadget, synthesize_vertex_gadget,
                              verify_edge_gadget, verify_vertex_gadget, w4_edge_gadget)
from subcolor.subcoloring import Subcoloring, verify_2_subcoloring
from subcolor.subcoloring.coloring import is_saturated

W4 = w4_edge_gadget()

# single-edge perturbations of the wheel gadget and the statuses they must produce
PERTURBED = {
    "drop-hub-z1": ([(0, 1)], [], {"P1": FAIL, "P2": FAIL, "P3": PASS, "P4": FAIL}),
    "drop-rim": ([(1, 2)], [], {"P1": FAIL, "P2": FAIL, "P3": PASS, "P4": FAIL}),
    "join-x": ([], [(7, 8)], {"P1": PASS, "P2": PASS, "P3": PASS, "P4": VACUOUS}),
    "join-y": ([], [(5, 6)], {"P1": PASS, "P2": PASS, "P3": PASS, "P4": PASS}),
    "y1-to-rim2": ([], [(2, 5)], {"P1": PASS, "P2": FAIL, "P3": PASS, "P4": FAIL}),
}


def perturb(remove, add) -> EdgeGadgetSpec:
    edges = [e for e in W4.graph.edge_list() if e not in remove] + add
    return EdgeGadgetSpec(Graph(W4.graph.n, edges), **W4.terminals)


def replay_counterexample(spec: EdgeGadgetSpec, name: str, verdict) -> None:
    """The reported colouring really is a valid colouring of the property's domain that breaks it."""
    dom = list(verdict.domain)
    sub, old = spec.graph.induced_subgraph(dom)
    idx = {v: i for i, v in enumerate(old)}
    c = Subcoloring(tuple(verdict.counterexample[v] for v in old))
    assert verify_2_subcoloring(sub, c)
    t = {k: idx.get(v) for k, v in spec.terminals.items()}
    sat = lambda k: is_saturated(sub, c, t[k])  # noqa: E731
    if name == "P1":
        assert c[t["z1"]] == c[t["z2"]] or not sat("z1") or not sat("z2")
    elif name == "P2":
        assert c[t["y1"]] == c[t["y2"]] or sat("y1") or sat("y2")
    elif name == "P4":
        assert c[t["x1"]] == c[t["x2"]] and sat("x1") == sat("x2")


@pytest.mark.parametrize("method", ["enumerate", "query"])
def test_w4_passes_every_edge_property(method):
    report = verify_edge_gadget(W4, method=method)
    assert report.all_pass
    assert set(report.verdicts) == {"P1", "P2", "P3", "P4"}
    assert report.verdicts["P3"].counterexample is None
    assert "witness" in report.verdicts["P3"].detail


@pytest.mark.parametrize("name", sorted(PERTURBED))
@pytest.mark.parametrize("method", ["enumerate", "query"])
def test_perturbed_gadgets(name, method):
    remove, add, expected = PERTURBED[name]
    spec = perturb(remove, add)
    report = verify_edge_gadget(spec, method=method)
    assert {k: v.status for k, v in report.verdicts.items()} == expected
    assert brute_edge_properties(spec.graph.n, spec.graph.edge_list(), spec.terminals) == expected
    for k, v in report.verdicts.items():
        if v.status == FAIL and k != "P3":
            replay_counterexample(spec, k, v)


def test_degree_violation_is_rejected_not_judged():
    with pytest.raises(GadgetSpecError) as info:
        verify_edge_gadget(perturb([], [(1, 7)]))
    assert info.value.invariant == "max-degree"


def test_random_edge_gadgets_against_brute_force():
    rng = random.Random(5)
    checked = 0
    while checked < 60:
        n = rng.randint(6, 10)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.35]
        spec = EdgeGadgetSpec(Graph(n, edges), *range(6))
        try:
            report = verify_edge_gadget(spec, method=rng.choice(["enumerate", "query"]))
        except GadgetSpecError:
            continue
        checked += 1
        got = {k: v.status for k, v in report.verdicts.items()}
        assert got == brute_edge_properties(n, spec.graph.edge_list(), spec.terminals)


@pytest.mark.parametrize("data,invariant", [
    ({"kind": "edge", "n": 3, "edges": [[0, 1]], "terminals": {"x1": 0}}, "terminals-present"),
    ({"kind": "edge", "n": 6, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5]],
      "terminals": {"x1": 0, "x2": 0, "y1": 1, "y2": 2, "z1": 3, "z2": 4}}, "terminals-distinct"),
    ({"kind": "edge", "n": 7, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5]],
      "terminals": {"x1": 0, "x2": 1, "y1": 2, "y2": 3, "z1": 4, "z2": 5}}, "connected"),
    ({"kind": "edge", "n": 6, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 5]],
      "terminals": {"x1": 0, "x2": 1, "y1": 2, "y2": 3, "z1": 4, "z2": 9}}, "terminals-in-range"),
    ({"kind": "vertex", "n": 4, "edges": [[0, 1], [1, 2], [2, 3]],
      "terminals": {"ports": [0, 1, 2], "pairs": [[0, 1]]}}, "pairs-partition-ports"),
    ({"kind": "vertex", "n": 5, "edges": [[0, 1], [0, 2], [0, 3], [0, 4]],
      "terminals": {"ports": [0, 1], "pairs": [[0, 1]]}}, "port-degree"),
    ({"kind": "blob", "n": 1, "edges": [], "terminals": {}}, "kind"),
])
def test_malformed_specs(data, invariant):
    with pytest.raises(GadgetSpecError) as info:
        spec = gadget_from_json(data)
        spec.validate()
    assert info.value.invariant == invariant


def test_spec_json_round_trip(tmp_path):
    for name in ("edge-w4", "vertex-h3"):
        spec = builtin_gadget(name)
        path = tmp_path / f"{name}.json"
        path.write_text(dump_gadget(spec))
        assert load_gadget(path) == spec
        assert "\n" not in dump_gadget(spec)
    with pytest.raises(KeyError):
        builtin_gadget("vertex-h9")


@pytest.mark.parametrize("pairs", [3, 4])
def test_builtin_vertex_gadgets(pairs):
    h, e = default_gadgets(pairs)
    assert h == assemble_vertex_gadget(e, pairs)
    assert e == W4
    assert h.pair_count == pairs and len(h.ports) == 2 * pairs
    h.validate()
    assert max(h.graph.degree(v) for v in h.graph.vertices()) <= 4
    assert is_planar(h.graph)[0]
    report = verify_vertex_gadget(h)
    assert report.method == "query"
    assert report.all_pass and report.ports_on_common_face
    # every port gets the colour of ports[0]
    assert all(report.forced[p] == report.forced[h.ports[0]] for p in h.ports)


@pytest.mark.parametrize("pairs", [3, 4])
def test_vertex_gadgets_against_pysat(pairs):
    h, _ = default_gadgets(pairs)
    n, edges, ports = h.graph.n, h.graph.edge_list(), list(h.ports)
    assert pysat_solve(n, edges) is not None
    for p in ports[1:]:
        assert pysat_solve(n, edges, fixed={ports[0]: 0, p: 1}) is None
    for i, p in enumerate(ports):
        assert pysat_solve(n, edges, unsat=(p,)) is not None
        for q in ports[i + 1:]:
            assert pysat_solve(n, edges, unsat=(p, q)) is None


def test_hub_plans_cover_ports_once_or_twice():
    for k, plan in HUB_PLANS.items():
        used = [p for hub in plan for p in hub]
        assert set(used) == set(range(2 * k))
        assert all(len(hub) <= 4 for hub in plan)


def test_small_vertex_gadgets_against_brute_force():
    rng = random.Random(8)
    for _ in range(80):
        n = rng.randint(3, 10)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4]
        g = Graph(n, edges)
        if not g.edge_list() or max(g.degree(v) for v in g.vertices()) > 4:
            continue
        ports = tuple(v for v in range(n) if g.degree(v) <= 3)[:2]
        if len(ports) < 2:
            continue
        h = VertexGadgetSpec(g, ports, (ports,))
        expected = brute_vertex_properties(n, g.edge_list(), ports)
        for method in ("enumerate", "query"):
            got = {k: v.status for k, v in verify_vertex_gadget(h, method=method).verdicts.items()}
            assert got == expected


def test_ports_on_common_face():
    h, _ = default_gadgets(3)
    assert ports_on_common_face(h)
    # ports in a crossing order on a 4-cycle cannot be read around one face
    c4 = Graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert ports_on_common_face(VertexGadgetSpec(c4, (0, 1, 2, 3), ((0, 1), (2, 3))))
    k4 = Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    assert not ports_on_common_face(VertexGadgetSpec(k4, (0, 1, 2, 3), ((0, 1), (2, 3))))


def test_unknown_method():
    with pytest.raises(ValueError):
        verify_edge_gadget(W4, method="guess")


def test_report_json_is_serialisable():
    text = json.dumps(verify_edge_gadget(perturb([(0, 1)], [])).to_json())
    assert '"fail"' in text and "counterexample" in text


# ---------------------------------------------------------------------------
# synthesis

def test_edge_synthesis_finds_nothing_below_nine():
    r = synthesize_edge_gadget(8)
    assert r.found is None and r.exhausted
    assert sorted(r.per_n) == [6, 7, 8]


def test_edge_synthesis_finds_certified_gadget_at_nine():
    r = synthesize_edge_gadget(9, require_class=True)
    assert r.found is not None and r.exhausted
    assert r.found.graph.n == 9
    assert verify_edge_gadget(r.found).all_pass
    assert verify_edge_gadget(r.found, method="query").all_pass
    spec = r.found
    assert brute_edge_properties(spec.graph.n, spec.graph.edge_list(), spec.terminals) == {
        "P1": PASS, "P2": PASS, "P3": PASS, "P4": PASS}


def test_edge_synthesis_budget():
    r = synthesize_edge_gadget(12, time_budget=0.0)
    assert r.found is None and not r.exhausted


@pytest.mark.parametrize("kwargs", [{"n_max": 5}, {"n_max": 13}, {"n_max": 8, "degree_cap": 1}])
def test_edge_synthesis_refusals(kwargs):
    with pytest.raises(SynthesisRefused):
        synthesize_edge_gadget(**kwargs)


def test_vertex_synthesis_small_space_is_empty():
    r = synthesize_vertex_gadget(W4, 6, 3)
    # nothing to search: n = 2k is skipped
    assert r.found is None and r.exhausted and r.examined == 0
    r = synthesize_vertex_gadget(W4, 16, 4, time_budget=0.5)
    assert r.found is None and not r.exhausted


@pytest.mark.parametrize("args", [(W4, 17, 3), (W4, 10, 5), (W4, 10, 2)])
def test_vertex_synthesis_refusals(args):
    with pytest.raises(SynthesisRefused):
        synthesize_vertex_gadget(*args)
