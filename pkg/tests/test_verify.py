import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import is_tdc
from tdtc import constructions
from tdtc.families import complete, cycle, wheel
from tdtc.solve import tdtc_number
from tdtc.graph import EdgeObj, Graph, VertexObj, total_graph
from tdtc.verify import (
    Coloring,
    ColoringError,
    check_coloring,
    common_neighborhood,
    totally_dominates,
)

W5_COLORING = "v1 v3 e_02 e_45 | v2 e_34 e_05 | v0 e_15 | v4 e_03 | v5 e_04 | e_01 e_23 | e_12"


def labelled(tg, text):
    return Coloring([[tg.by_label(t) for t in block.split()] for block in text.split("|")])


@pytest.fixture
def w5():
    return total_graph(wheel(5))


def test_w5_reference_coloring_is_valid(w5):
    report = check_coloring(w5, labelled(w5, W5_COLORING), "tdtc")
    assert report.valid
    assert report.violations == []
    assert len(labelled(w5, W5_COLORING)) == 7


def test_w5_reference_on_base_graph_equals_total_graph(w5):
    coloring = labelled(w5, W5_COLORING)
    assert check_coloring(wheel(5), coloring, "tdtc").valid


def test_missing_class_leaves_object_uncovered(w5):
    coloring = Coloring(labelled(w5, W5_COLORING).classes[:-1])
    report = check_coloring(w5, coloring, "tdtc")
    assert not report.valid
    assert [(v.kind, v.objects) for v in report.violations if v.kind == "uncovered"] == [
        ("uncovered", (EdgeObj(1, 2),))
    ]


def test_one_class_k3_has_three_conflicts():
    report = check_coloring(complete(3), [[0, 1, 2]], "proper")
    assert not report.valid
    assert len([v for v in report.violations if v.kind == "conflict"]) == 3


def test_merged_classes_report_conflict(w5):
    classes = list(labelled(w5, W5_COLORING).classes)
    merged = [classes[0] + classes[1]] + classes[2:]
    report = check_coloring(w5, merged, "tdtc")
    assert not report.valid
    lines = report.describe(w5)
    assert "conflict: v1, v2" in lines


def test_duplicate_and_empty_reported():
    report = check_coloring(complete(2), [[0], [0, 1], []], "proper")
    kinds = sorted(v.kind for v in report.violations)
    assert kinds == ["conflict", "duplicate", "empty-class"]


def test_unknown_object_rejected(w5):
    with pytest.raises(ColoringError):
        check_coloring(w5, [[EdgeObj(1, 3)]], "tdtc")
    with pytest.raises(ColoringError):
        check_coloring(complete(3), [[0], [1], [7]], "proper")


def test_undominated_in_tdc_mode():
    # in C_4 each neighbourhood is the whole opposite class
    assert check_coloring(cycle(4), [[0, 2], [1, 3]], "tdc").valid
    # in C_6 a neighbourhood holds only two of the three
    report = check_coloring(cycle(6), [[0, 2, 4], [1, 3, 5]], "tdc")
    assert not report.valid
    assert {v.kind for v in report.violations} == {"undominated"}
    assert check_coloring(cycle(6), [[0, 2, 4], [1, 3, 5]], "proper").valid


def test_total_mode_is_proper_on_total_graph():
    tg = total_graph(complete(2))
    assert check_coloring(tg, [[VertexObj(0)], [VertexObj(1)], [EdgeObj(0, 1)]], "total").valid
    assert not check_coloring(tg, [[VertexObj(0), EdgeObj(0, 1)], [VertexObj(1)]], "total").valid


def test_unknown_mode():
    with pytest.raises(ValueError):
        check_coloring(complete(2), [[0], [1]], "fancy")


# --------------------------------------------------------- common neighbourhood


@pytest.mark.parametrize("n", [4, 5, 6])
def test_cn_vertex_with_disjoint_edge(n):
    tg = total_graph(complete(n))
    i, p, q = 0, 1, 2
    cn = common_neighborhood(tg, [VertexObj(i), EdgeObj(p, q)])
    assert cn == {VertexObj(p), VertexObj(q), EdgeObj(i, p), EdgeObj(i, q)}


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_cn_single_vertex(n):
    tg = total_graph(complete(n))
    i = 1
    expected = {VertexObj(j) for j in range(n) if j != i} | {EdgeObj(i, j) for j in range(n) if j != i}
    assert common_neighborhood(tg, [VertexObj(i)]) == expected


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_cn_disjoint_edges_meet_in_four(n):
    tg = total_graph(complete(n))
    a = common_neighborhood(tg, [EdgeObj(0, 1)])
    b = common_neighborhood(tg, [EdgeObj(2, 3)])
    assert len(a & b) == 4


def test_cn_empty_class_rejected():
    with pytest.raises(ColoringError):
        common_neighborhood(total_graph(complete(3)), [])


def test_totally_dominates_examples():
    c4 = total_graph(cycle(4))
    assert totally_dominates(c4, VertexObj(0), [EdgeObj(0, 1)])
    assert not totally_dominates(c4, VertexObj(0), [VertexObj(0)])
    k5 = total_graph(complete(5))
    assert not totally_dominates(k5, EdgeObj(1, 2), [VertexObj(2), EdgeObj(0, 1), EdgeObj(3, 4)])


# ------------------------------------------------------------- properties


def all_fixtures():
    out = []
    for n in range(3, 8):
        out.append((f"wheel{n}", total_graph(wheel(n)), constructions.wheel_tdtc(n)))
    for n in constructions.COMPLETE_FIXTURES:
        out.append((f"complete{n}", total_graph(complete(n)), constructions.complete_tdtc_fixture(n)))
    out.append(("star3", *constructions.extremal_order_n(4)))
    return out


@pytest.mark.parametrize("name, target, coloring", all_fixtures(), ids=lambda x: x if isinstance(x, str) else "")
def test_cn_union_covers_objects(name, target, coloring):
    if not hasattr(target, "objects"):
        target = total_graph(target)
    assert check_coloring(target, coloring, "tdtc").valid
    covered = set().union(*(common_neighborhood(target, cls) for cls in coloring.classes))
    assert covered == set(target.objects)


@pytest.mark.parametrize("name, target, coloring", all_fixtures(), ids=lambda x: x if isinstance(x, str) else "")
def test_tdtc_equals_tdc_on_total_graph(name, target, coloring):
    if not hasattr(target, "objects"):
        target = total_graph(target)
    as_ids = Coloring([[target.index_of(o) for o in cls] for cls in coloring.classes])
    a = check_coloring(target, coloring, "tdtc")
    b = check_coloring(target.graph, as_ids, "tdc")
    assert a.valid == b.valid
    assert [sorted(target.index_of(o) for o in v.objects) for v in a.violations] == [
        sorted(v.objects) for v in b.violations
    ]


@st.composite
def colorings_of_small_graph(draw):
    n = draw(st.integers(2, 7))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True, min_size=1))
    k = draw(st.integers(1, n))
    labels = draw(st.lists(st.integers(0, k - 1), min_size=n, max_size=n))
    return n, edges, labels


@given(colorings_of_small_graph())
@settings(max_examples=200, deadline=None)
def test_tdc_verdict_matches_oracle(case):
    n, edges, labels = case
    g = Graph(n, tuple(edges))
    classes = {}
    for v, c in enumerate(labels):
        classes.setdefault(c, []).append(v)
    report = check_coloring(g, list(classes.values()), "tdc")
    adj = [set(g.neighbors(v)) for v in range(n)]
    assert report.valid == is_tdc(adj, [set(c) for c in classes.values()])
    assert report.valid == (report.violations == [])


@given(colorings_of_small_graph(), st.data())
@settings(max_examples=150, deadline=None)
def test_domination_map_monotone_under_shrinking(case, data):
    n, edges, labels = case
    g = Graph(n, tuple(edges))
    classes = {}
    for v, c in enumerate(labels):
        classes.setdefault(c, []).append(v)
    cls = data.draw(st.sampled_from(sorted(classes.values())))
    if len(cls) < 2:
        return
    smaller = data.draw(st.lists(st.sampled_from(cls), unique=True, min_size=1, max_size=len(cls) - 1))
    for x in range(n):
        if totally_dominates(g, x, cls):
            assert totally_dominates(g, x, smaller)


def test_dominated_classes_small_in_complete_total_graphs():
    for n in range(2, 6):
        tg = total_graph(complete(n))
        res = tdtc_number(complete(n))
        report = check_coloring(tg, res.witness, "tdtc")
        dominated = set().union(*report.domination.values())
        assert all(len(res.witness.classes[k]) <= 2 for k in dominated)
