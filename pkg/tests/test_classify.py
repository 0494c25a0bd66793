"""Configurations, the twelve patterns, and the zero-one predicates."""

import pytest

from zeroone.classify import (
    MULTIPLICITOUS_PATTERNS,
    InternalCheckError,
    avoids_multiplicitous,
    find_configuration,
    has_configuration,
    survey,
    witness_pattern,
    zero_one_status,
    _multfree_fast,
)
from zeroone.orthodontia import is_multiplicity_free
from zeroone.perms import Permutation, all_permutations, parse_permutation, rothe_diagram


def test_twelve_patterns_listed():
    assert len(MULTIPLICITOUS_PATTERNS) == 12
    assert {p.n for p in MULTIPLICITOUS_PATTERNS} == {5, 6}


def test_configuration_instances_verify_their_definitions():
    for p in MULTIPLICITOUS_PATTERNS:
        inst = find_configuration(p)
        assert inst is not None
        d = rothe_diagram(p)
        if inst.kind == "A":
            r1, c1, r2, c2, r3 = inst.indices
            assert 1 <= r3 < r1 < r2 and 1 < c1 < c2
            assert (r1, c1) in d and (r2, c2) in d and (r1, c2) not in d
            assert p[r3] < c1
        else:
            r1, c1, r2, c2, r3, r4 = inst.indices
            assert r3 < r1 < r2 and r4 != r3 and c1 < c2
            assert (r1, c1) in d and (r1, c2) in d
            if inst.kind == "B":
                assert (r2, c2) in d
                assert p[r3] < c1 and p[r4] < c2 and r4 < r1
            else:
                assert (r2, c1) in d and 2 < c1
                assert r4 < r3 and p[r3] < c1 and p[r4] < c1


def test_find_configuration_spec_example():
    inst = find_configuration(parse_permutation("13254"))
    assert inst.kind == "A"
    assert inst.indices == (2, 2, 4, 4, 1)


def test_find_configuration_absent_for_identity():
    assert find_configuration(Permutation.identity(5)) is None


def test_fast_and_witness_scans_agree():
    for n in (4, 5, 6):
        for w in all_permutations(n):
            assert has_configuration(w.entries) == (find_configuration(w) is not None)


def test_fast_multfree_matches_object_path():
    for n in (4, 5, 6):
        for w in all_permutations(n):
            assert _multfree_fast(w.entries) == is_multiplicity_free(w)


def test_avoids_multiplicitous_examples():
    assert not avoids_multiplicitous(parse_permutation("12543"))
    assert avoids_multiplicitous(parse_permutation("457812693"))
    for w in all_permutations(4):
        assert avoids_multiplicitous(w)


def test_witness_pattern():
    w = parse_permutation("12543")
    pattern, realization = witness_pattern(w)
    assert pattern.entries == (1, 2, 5, 4, 3)
    assert realization == (1, 2, 3, 4, 5)
    assert witness_pattern(Permutation.identity(6)) is None


def test_zero_one_status_examples():
    good = zero_one_status(parse_permutation("31542"), include_expansion=True, checked=True)
    assert good.verdict() and good.agree()
    assert good.by_expansion and good.by_patterns
    assert good.by_configurations and good.by_multiplicity_free

    bad = zero_one_status(parse_permutation("12543"), include_expansion=True, checked=True)
    assert not bad.verdict() and bad.agree()
    assert bad.computed() == [False, False, False, False]

    fast = zero_one_status(parse_permutation("12543"))
    assert fast.by_expansion is None
    assert len(fast.computed()) == 3


def test_zero_one_status_checked_raises_on_disagreement(monkeypatch):
    import zeroone.classify as classify_mod

    monkeypatch.setattr(classify_mod, "avoids_multiplicitous", lambda w: False)
    with pytest.raises(InternalCheckError):
        zero_one_status(Permutation.identity(5), checked=True)
    # unchecked mode reports the (forced) disagreement without raising
    status = zero_one_status(Permutation.identity(5))
    assert not status.agree()


def test_predicates_agree_exhaustively_S6():
    for w in all_permutations(6):
        assert zero_one_status(w, checked=True).agree()


def test_configuration_free_iff_pattern_avoiding_S6():
    for n in (5, 6):
        for w in all_permutations(n):
            assert (find_configuration(w) is None) == avoids_multiplicitous(w)


def test_survey_counts():
    assert survey(1).zero_one == 1
    assert survey(4) == survey(4, workers=2)
    assert survey(4).zero_one == 24
    pinned = survey(5)
    assert (pinned.total, pinned.zero_one, pinned.disagreements) == (120, 115, 0)
    assert survey(6).zero_one == 605


def test_survey_all_methods_small():
    s = survey(5, methods="all")
    assert s.zero_one == 115
    assert s.disagreements == 0


def test_survey_limits():
    with pytest.raises(ValueError):
        survey(9)
    with pytest.raises(ValueError):
        survey(8, methods="all")
    with pytest.raises(ValueError):
        survey(3, methods="bogus")
    assert survey(3, methods="all", limit=3).total == 6


def test_pattern_closure_one_step_S5(schubert_table_5):
    from zeroone.perms import one_step_pattern
    from zeroone.poly import is_zero_one, schubert_classic

    for entries, f in schubert_table_5.items():
        if not is_zero_one(f):
            continue
        w = Permutation(entries)
        for k in range(1, 6):
            assert is_zero_one(schubert_classic(one_step_pattern(w, k)))
