"""Smoke tests for the oasislab python bindings."""

import pytest

import oasislab as ol


def test_digit_arithmetic():
    assert ol.digits(544, 10) == [4, 4, 5]
    assert ol.digits(0, 7) == []
    assert ol.sum_of_digit_squares(16, 6) == 20
    assert ol.eval_happy(487, 10, 544) == 544
    assert ol.deficiency(16, 6) == -4
    assert ol.to_base_string(271, 16) == "10(15)"


def test_constant_lookup():
    assert ol.constant_of_fixed_point(133, 16) == 44
    assert ol.constant_of_fixed_point(2, 6) is None


def test_fixed_point_engine():
    assert ol.search_bound(0, 10) == 1000
    assert ol.fixed_points(5, 6) == [6, 7, 30, 31]
    assert ol.fixed_points(1, 3) == []
    assert ol.smallest_fixed_point(28, 4) == 32
    assert ol.companion_increment(6, 6) == 7
    assert ol.companion_reflect_second_digit(14, 6) == 26


def test_mirage_runs():
    runs = ol.maximal_mirage_runs(6)
    documented = [r for r in runs if r.d_min == -4 and r.d_max == 0]
    assert len(documented) == 1
    assert documented[0].kind == "mirage-only"
    assert documented[0].witnesses == [16, 22, 2, 9, 1]
    assert ol.mirage_max_length(4) == 6
    table = ol.deficiency_table(6)
    assert 0 in table[0] and 1 in table[0]


def test_oasis_analysis():
    result = ol.max_oasis(20)
    assert result.length == 9
    assert result.oasis.c_min == 5124
    assert result.oasis.fixed_points[0] == 5383
    assert result.mirage_length == 9

    assert ol.oasis_length_bound(10) == 540

    constructed = ol.construct_5_oasis(8)
    assert constructed.c_min == 12
    assert constructed.fixed_points == [17, 26, 34, 25, 33]

    shifted = ol.translate_oasis(constructed, 2)
    assert shifted.length == 5
    assert ol.check_digit_theorems(constructed).passed()


def test_table1_rows():
    rows = ol.table1(6)
    assert [(r.base, r.length, r.c_min) for r in rows] == [
        (2, 2, 3),
        (4, 6, 28),
        (6, 5, 5),
    ]


def test_error_mapping():
    with pytest.raises(ValueError):
        ol.deficiency(5, 1)
    with pytest.raises(OverflowError):
        ol.fixed_points(0, 3_000_000)
    with pytest.raises(ValueError):
        ol.construct_5_oasis(4)


def test_cli_binding():
    code, out, err = ol.run_cli(["eval", "--base", "10", "--constant", "0", "1"])
    assert (code, out) == (0, "1\n")
    code, _, _ = ol.run_cli(["eval", "--base", "1", "--constant", "0", "1"])
    assert code == 2
