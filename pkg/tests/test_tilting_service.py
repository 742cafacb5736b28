import pytest

from app.services.algebra_service import (
    dual_regular_module,
    projective_module,
    regular_module,
    simple_module,
)
from app.services.ar_service import enumerate_indecomposables
from app.services.module_service import direct_sum, is_isomorphic, power
from app.services.tilting_service import (
    check_tilting,
    construct_cc,
    construct_tc,
    ext_projectives_of_torsion_class,
    in_add,
    in_C_lambda,
    projective_injectives,
    torsion_pair_of_cotilting,
    torsion_pair_of_tilting,
)


def test_projective_injectives(a2, auslander2, kx2):
    assert projective_injectives(a2).dims == (1, 1)
    assert projective_injectives(auslander2).dims == (1, 2)
    assert projective_injectives(kx2).dims == (2,)


def test_membership_in_C(a2):
    assert in_C_lambda(projective_module(a2, 0))
    assert not in_C_lambda(simple_module(a2, 0))
    assert not in_C_lambda(simple_module(a2, 1))


def test_tc_and_cc_over_a2(a2):
    assert construct_tc(a2).dims == (2, 1)
    assert construct_cc(a2).dims == (1, 2)
    assert is_isomorphic(construct_cc(a2), regular_module(a2))


def test_tc_of_selfinjective_algebra_is_basic_regular(kx3):
    assert construct_tc(kx3).dims == (3,)


def test_in_add(a2):
    p1, s1, s2 = projective_module(a2, 0), simple_module(a2, 0), simple_module(a2, 1)
    assert in_add(direct_sum(a2, [p1, p1, s1]), [s1, p1])
    assert not in_add(s2, [s1, p1])


def test_regular_module_is_tilting_and_cotilting_over_hereditary(a2):
    report = check_tilting(regular_module(a2))
    assert report.is_tilting and report.is_cotilting
    assert report.summand_count == 2
    assert len(report.witness_sequences) == 2


def test_dual_regular_module_is_tilting_over_a2(a2):
    assert check_tilting(dual_regular_module(a2)).is_tilting


def test_one_summand_is_only_partial(a2):
    report = check_tilting(power(simple_module(a2, 1), 2))
    assert report.is_partial_tilting
    assert not report.is_tilting
    assert report.summand_count == 1


def test_selfinjective_regular_module(kx2):
    report = check_tilting(regular_module(kx2))
    assert report.is_tilting and report.is_cotilting
    assert not check_tilting(simple_module(kx2, 0)).is_partial_tilting


def test_large_projective_dimension_is_not_partial_tilting(corpus):
    algebra = corpus("nakayama_linear_rad2")
    assert not check_tilting(simple_module(algebra, 0)).is_partial_tilting


def test_tilting_torsion_pair_of_dual_regular_over_a2(a2):
    catalog = enumerate_indecomposables(a2)
    pair = torsion_pair_of_tilting(dual_regular_module(a2), catalog)
    assert pair.torsion_indices == [1, 2]
    assert pair.torsionfree_indices == [0]
    assert pair.splitting
    assert pair.neither == []
    assert ext_projectives_of_torsion_class(dual_regular_module(a2), catalog, pair) == [1, 2]


def test_tilting_torsion_pair_of_regular_module(a2):
    catalog = enumerate_indecomposables(a2)
    pair = torsion_pair_of_tilting(regular_module(a2), catalog)
    assert pair.torsion_indices == [0, 1, 2]
    assert pair.torsionfree_indices == []


def test_cotilting_torsion_pair_of_regular_over_a2(a2):
    catalog = enumerate_indecomposables(a2)
    pair = torsion_pair_of_cotilting(regular_module(a2), catalog)
    assert pair.torsionfree_indices == [0, 2]
    assert pair.torsion_indices == [1]
    assert pair.splitting


@pytest.mark.parametrize("name", ["a3", "auslander_x2", "nakayama_linear_rad2"])
def test_tc_torsion_pair_is_consistent(corpus, name):
    algebra = corpus(name)
    tc = construct_tc(algebra)
    if not check_tilting(tc).is_tilting:
        pytest.skip("T_C is not tilting here")
    catalog = enumerate_indecomposables(algebra)
    pair = torsion_pair_of_tilting(tc, catalog)
    assert sorted(set(pair.torsion_indices) | set(pair.torsionfree_indices) | set(pair.neither)) == list(range(catalog.size))
    assert ext_projectives_of_torsion_class(tc, catalog, pair)
