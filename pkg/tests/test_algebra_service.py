import numpy as np
import pytest

from app.core.errors import NotAdmissible
from app.models.quiver import Arrow, Path, Quiver, Relation
from app.services.algebra_service import (
    build_algebra,
    dual_regular_module,
    injective_module,
    projective_module,
    regular_module,
    simple_module,
)
from app.services.module_service import is_isomorphic


@pytest.mark.parametrize(
    "name, dim",
    [
        ("semisimple", 1),
        ("a2", 3),
        ("a3", 6),
        ("k_x2", 2),
        ("k_x3", 3),
        ("nakayama_linear_rad2", 5),
        ("nakayama_cyclic_rad2", 6),
        ("auslander_x2", 5),
        ("auslander_x3", 14),
        ("commutative_square", 9),
    ],
)
def test_corpus_dimensions(corpus, name, dim):
    assert corpus(name).dim == dim


def test_path_basis_starts_with_trivial_paths(a2):
    assert a2.path_basis[:2] == (Path(0, 0), Path(1, 1))
    assert [a2.label(i) for i in range(a2.dim)] == ["e1", "e2", "a"]


def test_free_loop_is_not_admissible():
    quiver = Quiver(1, (Arrow("x", 0, 0),))
    with pytest.raises(NotAdmissible):
        build_algebra(quiver, [], cap=5)


def test_relation_with_an_arrow_is_rejected():
    quiver = Quiver(2, (Arrow("a", 0, 1),))
    with pytest.raises(NotAdmissible):
        build_algebra(quiver, [Relation(((1, quiver.make_path((0,))),))])


def test_relation_vanishing_mod_p_is_dropped():
    quiver = Quiver(1, (Arrow("x", 0, 0),))
    xx = quiver.make_path((0, 0))
    xxx = quiver.make_path((0, 0, 0))
    algebra = build_algebra(quiver, [Relation(((5, xx),)), Relation(((1, xxx),))], p=5)
    assert algebra.dim == 3
    assert len(algebra.relations) == 1


def test_commutativity_relation_identifies_paths(corpus):
    square = corpus("commutative_square")
    # one path 1 -> 4 survives
    assert len(square.paths_between(0, 3)) == 1
    ac = square.quiver.make_path((0, 2))
    bd = square.quiver.make_path((1, 3))
    assert np.array_equal(square.normal_form(ac), square.normal_form(bd))


def test_standard_modules_of_a2(a2):
    assert projective_module(a2, 0).dims == (1, 1)
    assert projective_module(a2, 1).dims == (0, 1)
    assert injective_module(a2, 0).dims == (1, 0)
    assert injective_module(a2, 1).dims == (1, 1)
    assert simple_module(a2, 1).dims == (0, 1)
    assert is_isomorphic(projective_module(a2, 0), injective_module(a2, 1))


def test_regular_and_dual_have_algebra_dimension(corpus):
    algebra = corpus("auslander_x2")
    assert regular_module(algebra).dim == algebra.dim
    assert dual_regular_module(algebra).dim == algebra.dim


def test_opposite_is_involutive(auslander2):
    opposite = auslander2.opposite()
    assert opposite.dim == auslander2.dim
    assert opposite.opposite() is auslander2
