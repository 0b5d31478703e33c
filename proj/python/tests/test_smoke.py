import math

import numpy as np
import pytest

import qrebound as q


def test_scalar_functions():
    assert q.s_of_x(0.0) == 0.0
    assert q.s_of_x(0.1) == pytest.approx(0.020044683157952950, rel=1e-12)
    assert q.upper_bound_sharp_dgt2(0.5, 0.1) == pytest.approx(0.6 * math.log(6), rel=1e-14)
    assert q.upper_bound_sharp_d2(0.2, 0.3) == pytest.approx(0.1163217565860045, rel=1e-13)
    with pytest.raises(ValueError):
        q.s_of_x(1.5)


def test_states():
    rho = np.diag([0.6, 0.4]).astype(complex)
    mm = np.eye(2, dtype=complex) / 2
    assert q.relative_entropy(rho, mm) == pytest.approx(0.6 * math.log(1.2) + 0.4 * math.log(0.8))
    assert q.von_neumann_entropy(mm) == pytest.approx(math.log(2))
    assert q.trace_distance(rho, mm) == pytest.approx(0.1)
    assert q.trace_distance(rho, mm, half=False) == pytest.approx(0.2)
    e1 = np.diag([1.0, 0.0]).astype(complex)
    e2 = np.diag([0.0, 1.0]).astype(complex)
    assert math.isinf(q.relative_entropy(e1, e2))
    assert q.rescaled_distance(e1, e2, "kyfan:2") == pytest.approx(1.0)
    with pytest.raises(ValueError):
        q.von_neumann_entropy(np.diag([0.7, 0.7]).astype(complex))


def test_report_and_witnesses():
    rho, sigma = q.witness_upper(0.5, 0.1, 4, J=1)
    report = q.bound_report(rho, sigma)
    assert report["exact"] == pytest.approx(0.6 * math.log(6), rel=1e-12)
    assert report["exact"] <= report["up_log"]
    rho, sigma = q.witness_lower(0.3, 3)
    assert q.relative_entropy(rho, sigma) == pytest.approx(q.s_of_x(0.3), rel=1e-9)
    e1 = np.diag([1.0, 0.0]).astype(complex)
    e2 = np.diag([0.0, 1.0]).astype(complex)
    assert q.bound_report(e1, e2)["exact"] == "+inf"
    assert q.counterexample_bad_bound(10.0)["margin"] > 0


def test_figures():
    columns, rows = q.figure(1)
    assert columns[0] == "x"
    assert rows[0] == [0.0, 0.0, 0.0, 0.0]
    columns, rows = q.figure(3, 0.2)
    assert all(r[2] <= r[1] for r in rows)


def test_suite():
    names = q.property_names()
    assert "dominance_lower" in names
    a = q.run_suite(seed=1, samples=3, dims=[2, 3])
    b = q.run_suite(seed=1, samples=3, dims=[2, 3])
    assert a == b
    assert a["verdict"] == "pass"
    with pytest.raises(ValueError):
        q.run_suite(properties=["nope"])
