import math

import pytest
from hypothesis import given, strategies as st

from mqattack.estimate import (CSV_HEADER, TABLES, exact_complexity, row_stats, simplified_complexity,
                               table_report, table_rows)
from mqattack.generators import aes_stats, gen_random_bmq, stats_of, trivium_stats
from mqattack.generators.stats import InstanceStats

from published import TABLE_ROWS

# this row's published exponent does not follow from its own (n, T); see test below
INCONSISTENT = {("aes", (6, 12))}


@pytest.mark.parametrize("key", sorted(TABLE_ROWS, key=str))
def test_counts_match_table(key):
    st_ = row_stats(*key)
    n, r, T, _ = TABLE_ROWS[key]
    assert (st_.n, st_.r, st_.T) == (n, r, T)


@pytest.mark.parametrize("key", sorted(set(TABLE_ROWS) - INCONSISTENT, key=str))
def test_log2_matches_table(key):
    est = simplified_complexity(row_stats(*key), 0.01)
    assert est.log2_value == pytest.approx(TABLE_ROWS[key][3], abs=0.01)


def test_aes192_published_value_uses_other_branch():
    own = simplified_complexity(aes_stats(6, 12), 0.01).log2_value
    assert abs(own - 76.59) > 0.5
    # the value printed for AES-192 is what the N_k > 6 counts give at (6, 12)
    n = 96 * 6 * 12 + 32 * 6 + 64 * 12
    T = 4928 * 6 * 12 + 192 * 6 + 10208 * 12
    other = InstanceStats("aes", {}, n, 1, T)
    assert simplified_complexity(other, 0.01).log2_value == pytest.approx(76.59, abs=0.01)


def test_ceiling_changes_trivium_row():
    st_ = trivium_stats(288)
    assert simplified_complexity(st_, 0.01).log2_value == pytest.approx(53.96, abs=0.005)
    assert simplified_complexity(st_, 0.01, ceil_log=True).log2_value == pytest.approx(54.04, abs=0.01)


def test_exact_trivium_288():
    est = exact_complexity(trivium_stats(288), 0.01)
    assert est.log2_value == pytest.approx(51.06, abs=0.01)
    assert est.formula == "exact-cor-ec" and est.ceil_log


def test_simplified_bounds_exact():
    for key in TABLE_ROWS:
        st_ = row_stats(*key)
        assert simplified_complexity(st_, 0.01).log2_value >= exact_complexity(st_, 0.01).log2_value
    for seed in range(5):
        st_ = stats_of(gen_random_bmq(6, 5, seed=seed), "bmq", {})
        assert simplified_complexity(st_, 0.01).log2_value >= exact_complexity(st_, 0.01).log2_value


def test_exact_boundary_all_short():
    st_ = InstanceStats("x", {}, 10, 6, 9, histogram={1: 3, 2: 3})
    assert math.isfinite(exact_complexity(st_, 0.1).log2_value)
    with pytest.raises(ValueError):
        exact_complexity(InstanceStats("x", {}, 3, 5, 4), 0.1)
    with pytest.raises(ValueError):
        simplified_complexity(trivium_stats(288), 1.5)


@given(st.integers(1, 10**4), st.integers(1, 10**4), st.integers(0, 10**4))
def test_monotone_in_T(n, r, extra):
    T = 3 * r + extra
    a = InstanceStats("x", {}, n, r, T)
    b = InstanceStats("x", {}, n, r, T + 1)
    assert exact_complexity(b, 0.01).log2_value > exact_complexity(a, 0.01).log2_value
    assert simplified_complexity(b, 0.01).log2_value > simplified_complexity(a, 0.01).log2_value


def test_key_doubling_ratio():
    a = simplified_complexity(aes_stats(4, 10), 0.01).log2_value
    b = simplified_complexity(aes_stats(8, 14), 0.01).log2_value
    assert b - a == pytest.approx(5, abs=0.5)


def test_report_shape():
    text = table_report("trivium", 0.01)
    lines = text.splitlines()
    assert lines[0] == CSV_HEADER and len(lines) == 5
    assert lines[1].startswith("trivium,Nr=288,951,951,5331,53.96")
    assert len(table_rows("all", 0.01)) == 14
    assert {k for k in TABLES["summary"]} <= set(TABLES["all"])
    with pytest.raises(ValueError):
        table_report("nope")
