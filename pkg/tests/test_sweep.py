import math

import numpy as np
import pytest

from nxinfo.errors import DomainError
from nxinfo.sweep import (
    SweepTable,
    format_cell,
    integer_grid,
    parameter_grid,
    sweep_bec,
    sweep_bsc,
    sweep_fig1,
    sweep_uniform_lengths,
)


def test_format_cell():
    assert format_cell(0.1 + 0.2) == "0.3"
    assert format_cell(-0.0) == "0"
    assert format_cell(True) == "true"
    assert format_cell(np.int64(7)) == "7"
    assert format_cell(math.pi) == "3.14159265359"
    assert float(format_cell(1 / 3)) == pytest.approx(1 / 3, rel=1e-12)


def test_parameter_grid():
    g = parameter_grid(0.0, 1.0, 0.1)
    assert g.size == 11 and g[3] == 0.3 and g[-1] == 1.0
    assert parameter_grid(0.0, 1.0, 1e-3).size == 1001
    with pytest.raises(DomainError):
        parameter_grid(1.0, 0.0, 0.1)
    with pytest.raises(DomainError):
        parameter_grid(0.0, 1.0, 0.0)


def test_integer_grid():
    assert integer_grid(2, 5) == [2, 3, 4, 5]
    with pytest.raises(DomainError):
        integer_grid(5, 2)


def test_fig1_first_row():
    t = sweep_fig1(2, 100)
    assert t.header == ["N", "H_S", "H_plus", "H_minus"]
    n, hs, hp, hm = t.rows[0]
    assert n == 2
    assert (hs, hp, hm) == pytest.approx((0.693147180560, 0.585786437627, 0.828427124746), abs=1e-12)
    assert len(t.rows) == 99
    assert np.all(np.diff(t.column("N")) > 0)


def test_fig1_ordering():
    t = sweep_fig1(2, 500)
    assert np.all(t.column("H_plus") < t.column("H_S"))
    assert np.all(t.column("H_S") < t.column("H_minus"))


def test_bsc_midpoint_row():
    t = sweep_bsc(0.0, 1.0, 0.1)
    row = t.to_records()[5]
    assert row["p"] == 0.5
    for key in ("C_S", "C_plus", "C_minus"):
        assert abs(row[key]) <= 1e-9


def test_bec_shannon_column_exact():
    t = sweep_bec(0.0, 1.0, 1e-3)
    alpha = t.column("alpha")
    np.testing.assert_array_equal(t.column("C_S"), 1 - alpha)


def test_variant_subset():
    t = sweep_bsc(0.0, 1.0, 0.5, kinds=["zero"])
    assert t.header == ["p", "C_zero"]


def test_uniform_lengths_gap_decreasing():
    t = sweep_uniform_lengths(16, 1024)
    assert np.all(np.diff(t.column("gap_plus")) < 0)
    assert np.all(t.column("L_plus") <= t.column("L_S"))
    assert np.all(t.column("L_S") <= t.column("L_minus"))


def test_csv_shape():
    text = SweepTable(["a", "b"], [(1, 0.5), (2, -0.0)]).to_csv()
    assert text == "a,b\n1,0.5\n2,0\n"
