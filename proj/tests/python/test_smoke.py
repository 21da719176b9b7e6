import pytest

import domlab


def test_cycle_value_and_certificate():
    g = domlab.from_family("cycle:7")
    r = domlab.gamma(g, k=1, variant="restrained")
    assert r.feasible and r.value == 5
    assert domlab.is_ktrds(g, r.certificate, 1)
    assert r.certificate == sorted(r.certificate)


def test_prism_and_naive_agree():
    g = domlab.from_family("prism:cycle:6")
    assert domlab.gamma(g, 2).value == 8
    assert domlab.gamma_naive(g, 2).value == 8
    assert domlab.complementary_prism(domlab.from_family("cycle:6")) == g


def test_domatic_partition():
    r = domlab.domatic(domlab.from_family("complete:6"), 1)
    assert r.value == 3
    assert sorted(v for cls in r.partition for v in cls) == list(range(6))


def test_infeasible():
    r = domlab.gamma(domlab.from_family("cycle:5"), 3)
    assert not r.feasible


def test_edge_list_round_trip():
    g = domlab.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert domlab.from_edge_list(domlab.edge_list(g)) == g
    assert g.edges() == [(0, 1), (0, 3), (1, 2), (2, 3)]


def test_errors():
    with pytest.raises(ValueError, match="cyc"):
        domlab.from_family("cyc:5")
    with pytest.raises(ValueError):
        domlab.from_edges(3, [(1, 1)])
    with pytest.raises(domlab.GuardExceeded):
        domlab.gamma(domlab.from_family("cycle:65"))


def test_verify_sections():
    summary, csv = domlab.verify(["complete", "cycle"])
    assert summary["discrepancies"] == 0
    assert csv.startswith("instance,family,n,k,variant,solver,formula,applicable,match,witness,runtime_ms\n")
    assert domlab.verify(["cycle"], seed=3)[1] == domlab.verify(["cycle"], seed=3)[1]
