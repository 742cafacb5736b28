import pytest

from app.core.config import RunCaps
from app.models.schemas import CheckStatus
from app.services.theorem_service import (
    CHECKS,
    TheoremSession,
    check_main_theorem,
    run_check,
    run_suite,
    summarize,
)
from tests.conftest import corpus_names, load_corpus


@pytest.mark.parametrize(
    "name, one_ag, auslander",
    [
        ("semisimple", True, True),
        ("a2", False, False),
        ("k_x2", True, False),
        ("nakayama_cyclic_rad2", True, False),
        ("nakayama_linear_rad2", True, True),
        ("auslander_x2", True, True),
        ("auslander_x3", True, True),
        ("commutative_square", False, False),
    ],
)
def test_characterisations(corpus, name, one_ag, auslander):
    session = TheoremSession(corpus(name))
    assert session.is_1ag() == one_ag
    assert session.is_auslander() == auslander


@pytest.mark.parametrize(
    "name, tilted",
    [("semisimple", True), ("k_x2", False), ("nakayama_cyclic_rad2", False), ("auslander_x2", False)],
)
def test_main_theorem_verdicts(corpus, name, tilted):
    verdict = check_main_theorem(TheoremSession(corpus(name)))
    assert verdict.is_1ag
    assert verdict.is_tilted == tilted
    assert verdict.main_theorem_lhs == tilted
    assert verdict.main_theorem_consistent


def test_verdict_outside_the_theorem(a2):
    verdict = check_main_theorem(TheoremSession(a2))
    assert not verdict.is_1ag
    assert verdict.is_tilted
    assert verdict.main_theorem_lhs is None
    assert verdict.main_theorem_consistent is None


def test_left_part_of_hereditary_algebra_is_everything(a2):
    session = TheoremSession(a2)
    assert session.p1_set == [0, 1, 2]
    assert session.left_part == [0, 1, 2]


def test_left_part_of_local_algebra(kx2):
    session = TheoremSession(kx2)
    assert session.p1_set == [1]
    assert session.left_part == []
    assert session.cogen_tc_set == [0, 1]


def test_summary(auslander2):
    summary = summarize(TheoremSession(auslander2))
    assert summary.dimension == 5
    assert summary.gldim == "2"
    assert summary.domdim == "2"
    assert summary.gorenstein is True
    assert not summary.selfinjective


def test_main_theorem_is_vacuous_when_not_1ag(a2):
    result = run_check(TheoremSession(a2), "main_theorem")
    assert result.status == CheckStatus.VACUOUS


def test_catalog_failure_is_inconclusive():
    from app.models.quiver import Arrow, Quiver
    from app.services.algebra_service import build_algebra

    kronecker = build_algebra(Quiver(2, (Arrow("a", 0, 1), Arrow("b", 0, 1))), [], name="Kronecker")
    session = TheoremSession(kronecker, RunCaps(catalog=8))
    result = run_check(session, "catalog_closure")
    assert result.status == CheckStatus.INCONCLUSIVE
    assert "RepInfiniteSuspected" in result.evidence[0]


def test_suite_runs_every_check_once(semisimple):
    report = run_suite(semisimple)
    assert [c.name for c in report.checks] == list(CHECKS)
    assert report.worst == CheckStatus.PASS
    records = report.records()
    assert len(records) == len(CHECKS) + 1
    assert records[0].startswith('{"kind": "algebra"')


@pytest.mark.corpus
@pytest.mark.parametrize("name", corpus_names())
def test_corpus_suite_has_no_failures(name):
    algebra, caps = load_corpus(name)
    report = run_suite(algebra, caps)
    failed = [(c.name, c.evidence) for c in report.checks if c.status == CheckStatus.FAIL]
    assert not failed
    if report.verdict.main_theorem_consistent is not None:
        assert report.verdict.main_theorem_consistent


@pytest.mark.parametrize("name", ["a2", "a3", "commutative_square", "k_x2", "auslander_x2"])
def test_tc_construction_requires_membership_in_c(corpus, name):
    result = run_check(TheoremSession(corpus(name)), "tc_construction")
    assert result.status == CheckStatus.PASS, result.evidence


def test_hereditary_tc_is_tilting_but_outside_c(a2):
    session = TheoremSession(a2)
    assert session.tc_report.is_tilting
    assert session.tc.dims == (2, 1)
    assert not session.tc_in_c
    assert not session.cc_in_c


@pytest.mark.parametrize(
    "name, expected",
    [
        (
            "a2",
            {
                "symmetry": CheckStatus.PASS,
                "tilted_dichotomy": CheckStatus.PASS,
                "ar_formula": CheckStatus.PASS,
                "ext_balance": CheckStatus.PASS,
                "ses_pd_bound": CheckStatus.PASS,
                "catalog_closure": CheckStatus.PASS,
                "ar_sequences": CheckStatus.PASS,
                "projective_adjunction": CheckStatus.PASS,
                "injective_adjunction": CheckStatus.PASS,
                "tc_construction": CheckStatus.PASS,
                "main_theorem": CheckStatus.VACUOUS,
                "main_z": CheckStatus.VACUOUS,
                "tilted_homological_lemmas": CheckStatus.VACUOUS,
            },
        ),
        (
            "k_x2",
            {
                "main_theorem": CheckStatus.PASS,
                "prop_easy1": CheckStatus.PASS,
                "prop_easy2": CheckStatus.PASS,
                "tc_construction": CheckStatus.PASS,
                "symmetry": CheckStatus.PASS,
                "tilted_dichotomy": CheckStatus.VACUOUS,
                "prop_splits": CheckStatus.VACUOUS,
            },
        ),
        (
            "auslander_x2",
            {
                "main_theorem": CheckStatus.PASS,
                "prop_easy1": CheckStatus.PASS,
                "prop_easy2": CheckStatus.PASS,
                "main_z": CheckStatus.PASS,
                "tc_construction": CheckStatus.PASS,
                "left_part_in_p1": CheckStatus.PASS,
                "tilted_homological_lemmas": CheckStatus.VACUOUS,
                "prop_splits": CheckStatus.VACUOUS,
            },
        ),
    ],
)
def test_check_outcomes_on_small_algebras(corpus, name, expected):
    session = TheoremSession(corpus(name))
    for check, status in expected.items():
        result = run_check(session, check)
        assert result.status == status, (check, result.evidence)


@pytest.mark.parametrize("name", ["a2", "k_x2", "auslander_x2"])
def test_small_suites_have_no_failures(corpus, name):
    report = run_suite(corpus(name))
    assert report.worst != CheckStatus.FAIL, [(c.name, c.evidence) for c in report.checks if c.status == CheckStatus.FAIL]


def test_cross_check_mismatch_makes_the_verdict_fail(semisimple, monkeypatch):
    from app.core.errors import CrossCheckMismatch
    from app.services.theorem_service import theorem_verdict

    def disagree(self):
        raise CrossCheckMismatch("1-AG by dimensions is True, by a tilting-cotilting T_C in C is False")

    monkeypatch.setattr(TheoremSession, "is_1ag", disagree)
    verdict = theorem_verdict(TheoremSession(semisimple))
    assert verdict.status == CheckStatus.FAIL
    assert verdict.is_1ag is None
    assert verdict.is_auslander is None
    assert "CrossCheckMismatch" in verdict.detail[0]
    assert run_suite(semisimple).worst == CheckStatus.FAIL


def test_capped_catalog_makes_the_verdict_inconclusive():
    from app.models.quiver import Arrow, Quiver
    from app.services.algebra_service import build_algebra
    from app.services.theorem_service import theorem_verdict

    kronecker = build_algebra(Quiver(2, (Arrow("a", 0, 1), Arrow("b", 0, 1))), [], name="Kronecker")
    verdict = theorem_verdict(TheoremSession(kronecker, RunCaps(catalog=8)))
    assert verdict.status == CheckStatus.INCONCLUSIVE
    assert verdict.is_tilted is None
