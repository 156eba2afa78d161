import pytest
from hypothesis import given, strategies as st

from mqattack.boolpoly import (BooleanPolynomial, BooleanSystem, brute_force_f2_solutions, mask_to_point,
                               monomial, reduce_squarefree)

from conftest import bool_polys


def test_reduce_squarefree_collapses_exponents():
    f = reduce_squarefree({(3, 1): 1, (0, 1): 1})
    assert f == BooleanPolynomial.from_monomials([monomial(0, 1), monomial(1)])


def test_reduce_squarefree_cancels_mod_2():
    assert not reduce_squarefree({(2,): 1, (1,): 1})


def test_reduce_squarefree_mixed_example_matches_pointwise():
    src = {(2, 2, 0): 1, (1, 1, 0): 1, (0, 0, 1): 1}
    f = reduce_squarefree(src)
    assert f == BooleanPolynomial.variable(2)
    for mask in range(8):
        a = mask_to_point(mask, 3)
        direct = sum(c * a[0] ** e[0] * a[1] ** e[1] * a[2] ** e[2] for e, c in src.items()) % 2
        assert f.evaluate(a) == direct


def test_evaluate_examples():
    f = BooleanPolynomial.from_index_lists([[0], [1], []])
    assert f.evaluate((0, 1)) == 0
    assert f.evaluate((1, 1)) == 1
    assert BooleanPolynomial.constant(0).evaluate((1, 0, 1)) == 0


def test_evaluate_rejects_unassigned_variable():
    f = BooleanPolynomial.from_index_lists([[0, 3]])
    with pytest.raises(ValueError):
        f.evaluate((1, 1))


def test_brute_force_example():
    sys_ = BooleanSystem(("x1", "x2"), (BooleanPolynomial.from_index_lists([[0], [1], []]),))
    assert brute_force_f2_solutions(sys_) == {(0, 1), (1, 0)}


def test_brute_force_guard():
    sys_ = BooleanSystem(tuple(f"x{i}" for i in range(30)), ())
    with pytest.raises(ValueError):
        brute_force_f2_solutions(sys_)


def test_system_rejects_undeclared_variable():
    with pytest.raises(ValueError):
        BooleanSystem(("x1",), (BooleanPolynomial.variable(3),))


@given(bool_polys(4), bool_polys(4), st.integers(0, 15))
def test_ring_operations_agree_with_evaluation(f, g, mask):
    a = mask_to_point(mask, 4)
    assert (f + g).evaluate(a) == f.evaluate(a) ^ g.evaluate(a)
    assert (f * g).evaluate(a) == f.evaluate(a) & g.evaluate(a)
    assert (f + f) == BooleanPolynomial.constant(0)


@given(bool_polys(4), st.dictionaries(st.integers(0, 3), st.integers(0, 1)), st.integers(0, 15))
def test_substitute_agrees_with_evaluation(f, assign, mask):
    a = list(mask_to_point(mask, 4))
    for i, v in assign.items():
        a[i] = v
    assert f.substitute(assign).evaluate(a) == f.evaluate(a)


@given(st.lists(bool_polys(4, 4), max_size=4))
def test_json_round_trip_and_brute_force_matches_pointwise(polys):
    sys_ = BooleanSystem(("a", "b", "c", "d"), tuple(polys))
    assert BooleanSystem.from_json_obj(sys_.to_json_obj()) == sys_
    sols = brute_force_f2_solutions(sys_)
    for mask in range(16):
        a = mask_to_point(mask, 4)
        assert (a in sols) == sys_.is_solution(a)
    assert sum(k * v for k, v in sys_.histogram().items()) == sys_.total_sparseness
