from itertools import combinations

import pytest

from conftest import FIXTURES
from geomkit.incidence import (AXIOM_IDS, THEOREM_IDS, AxiomsNotSatisfied, FiniteIncidenceModel,
                               MalformedModel, canonical_four_point, check_axiom, check_axioms,
                               check_incidence_theorems, format_model, load_model, mutations,
                               parse_model)


@pytest.fixture
def canon():
    return canonical_four_point()


def test_canonical_shape(canon):
    assert len(canon.points) == 4
    assert len(canon.lines) == 6
    assert len(canon.planes) == 4


@pytest.mark.parametrize("axiom", AXIOM_IDS)
def test_canonical_passes_each_axiom(canon, axiom):
    rep = check_axiom(canon, axiom)
    assert rep.passed, rep.witnesses


def test_canonical_passes_theorems(canon):
    reps = check_incidence_theorems(canon)
    assert [r.id for r in reps] == list(THEOREM_IDS)
    assert all(r.passed for r in reps)


def test_three_point_model_fails_a8():
    m = FiniteIncidenceModel(frozenset({1, 2, 3}),
                             tuple(frozenset(c) for c in combinations((1, 2, 3), 2)),
                             (frozenset({1, 2, 3}),))
    failing = {r.id for r in check_axioms(m) if not r.passed}
    assert "A8" in failing


def test_removed_line_reports_a2_with_witness(canon):
    lines = tuple(a for a in canon.lines if a != frozenset({1, 2}))
    rep = check_axiom(FiniteIncidenceModel(canon.points, lines, canon.planes), "A2")
    assert not rep.passed
    assert any(set(w[:2]) == {1, 2} for w in rep.witnesses)


def test_every_mutation_breaks_something(canon):
    muts = mutations(canon)
    # 6 removals + 12 point drops + 6 duplicates
    assert len(muts) == 24
    for label, m in muts:
        failing = [r.id for r in check_axioms(m) if not r.passed]
        failing += [r.id for r in check_incidence_theorems(m, require_axioms=False) if not r.passed]
        assert failing, label


def test_theorems_refused_without_axioms(canon):
    _, broken = mutations(canon)[0]
    with pytest.raises(AxiomsNotSatisfied):
        check_incidence_theorems(broken)


def test_validation_rejects_stray_labels():
    m = FiniteIncidenceModel(frozenset({1, 2}), (frozenset({1, 5}),), ())
    with pytest.raises(MalformedModel):
        check_axioms(m)


def test_text_round_trip(canon):
    again = parse_model(format_model(canon))
    assert again.points == canon.points
    assert sorted(map(sorted, again.lines)) == sorted(map(sorted, canon.lines))


def test_parse_rejects_unknown_declaration():
    with pytest.raises(MalformedModel):
        parse_model("points: 1 2\ncircle: 1 2\n")


def test_fixture_files():
    assert all(r.passed for r in check_axioms(load_model(FIXTURES / "canonical.model")))
    bad = {r.id for r in check_axioms(load_model(FIXTURES / "corrupted.model")) if not r.passed}
    assert {"A2", "A4"} <= bad
