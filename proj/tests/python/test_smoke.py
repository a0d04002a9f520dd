"""Smoke tests of the Python bindings (the module is built by CMake; the
test harness puts its directory on PYTHONPATH)."""

import pytest

import planebranch as pb


def test_invariants_running_example():
    inv = pb.invariants(param="x=t^8; y=t^20+t^30+t^35")
    assert inv["char_exponents"] == [8, 20, 30, 35]
    assert inv["semigroup"] == [8, 20, 50, 105]
    assert inv["conductor"] == 168
    assert inv["puiseux_pairs"] == [[2, 5], [2, 15], [2, 35]]


def test_invariants_from_exponents():
    inv = pb.invariants(chars=[2, 3])
    assert inv["semigroup"] == [2, 3]
    assert inv["conductor"] == 2


def test_dimension():
    rep = pb.dimension(param="x=t^8; y=t^20+t^30+t^35")
    assert rep["dimension"] == 20
    assert rep["sigma_values"][:2] == [6, 9]
    assert rep["rigid"] is False


def test_resolve_matrices():
    res = pb.resolve(param="x=t^5; y=t^13")
    assert res["N"] == 6
    assert res["proximity"][0] == [1, -1, 0, 0, 0, 0]
    assert res["proximity_inverse"][0] == [1, 1, 1, 2, 3, 5]


def test_tree():
    rep = pb.tree(chars=[2, 3], direction="xy")
    assert rep["delta_p"]["p"] == [1, 0, 0]
    assert rep["properties"]["all_ok"] is True
    assert rep["identity"]["equal"] is True


def test_saito_equation_route():
    r = pb.min_saito_valuation(equation="y^6-x^7")
    assert r["nu_min"] == 1
    assert r["route"] == "equation"


def test_saito_param_route():
    r = pb.min_saito_valuation(param="x=t^2; y=t^3")
    assert r["nu_min"] == 1
    assert r["route"] == "parametrization"


def test_verify_generic_minimum():
    rep = pb.verify_generic_minimum([2, 3], direction="none", seeds=[1, 2])
    assert rep["all_match"] is True
    assert [c["got"] for c in rep["checks"]] == [1, 1]


def test_classify_rigidity():
    table = pb.classify_rigidity(max_mult=3, generator_bound=12)
    assert table, "empty classification"
    assert all(e["rigid"] for e in table)


def test_sigma():
    assert [pb.sigma(k) for k in range(2, 8)] == [0, 0, 0, 1, 2, 4]


def test_errors():
    with pytest.raises(ValueError):
        pb.invariants(param="x=t^8; z=t^3")  # mixed parameter letters
    with pytest.raises(ValueError):
        pb.invariants(chars=[4, 6])  # gcd chain never reaches 1
    with pytest.raises(RuntimeError):
        pb.min_saito_valuation(param="x=t^4; y=t^5+t^6", degree_bound=1)


def test_dot():
    dot = pb.dot_dual_graph(chars=[2, 3])
    assert dot.startswith("graph dual")
