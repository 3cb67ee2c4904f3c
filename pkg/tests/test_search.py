import math

import numpy as np
import pytest

from boolnet import BooleanNetwork, UsageError, has_property_P
from boolnet.search import (
    FILTER_NAMES,
    SearchScope,
    census,
    conjugate,
    enumerate_networks,
    hunt_question1,
    network_features,
    run_shards,
    sample_networks,
    sample_opposition_networks,
    sample_rows,
    select_networks,
)
from boolnet.tables import FEATURES, features_from_rows, network_from_index, network_index

import naive_oracle

# Frozen from naive_oracle.census(n); the oracle is re-run below for n <= 2.
GOLDEN_COUNTS = {
    1: {
        "acyclic": 2, "at_most_one_fixed_point": 3, "has_fixed_point": 3, "hypothesis_h": 4,
        "no_fixed_point": 1, "no_negative_circuit": 3, "no_positive_circuit": 3,
        "no_shared_negative_circuit": 3, "opposition": 1, "positive_through_vertex": 4,
        "property_p": 4, "question1": 0, "shared_negative_circuit": 1, "unique_fixed_point": 2,
    },
    2: {
        "acyclic": 12, "at_most_one_fixed_point": 189, "has_fixed_point": 175, "hypothesis_h": 194,
        "no_fixed_point": 81, "no_negative_circuit": 63, "no_positive_circuit": 63,
        "no_shared_negative_circuit": 71, "opposition": 96, "positive_through_vertex": 207,
        "property_p": 84, "question1": 0, "shared_negative_circuit": 185, "unique_fixed_point": 108,
    },
}
GOLDEN_THEOREMS = {  # hypothesis, conclusion, both, failures
    1: {"1": (2, 2, 2, 0), "2": (3, 3, 3, 0), "3": (3, 3, 3, 0), "4": (3, 3, 3, 0),
        "lemma2": (1, 1, 1, 0), "lemma3": (3, 3, 3, 0)},
    2: {"1": (12, 108, 12, 0), "2": (63, 189, 63, 0), "3": (39, 175, 39, 0), "4": (46, 175, 46, 0),
        "lemma2": (28, 185, 28, 0), "lemma3": (39, 175, 39, 0)},
}


def _theorem_tuples(theorems):
    return {t: (v["hypothesis"], v["conclusion"], v["both"], v["failures"]) for t, v in theorems.items()}


def test_enumerate_networks_counts_and_order():
    one = list(enumerate_networks(1))
    assert len(one) == 4
    assert one[0] == BooleanNetwork(1, (0, 0)) and one[-1] == BooleanNetwork(1, (1, 1))
    two = list(enumerate_networks(2))
    assert len(two) == 256 and len(set(two)) == 256
    assert two[0].table == (0, 0, 0, 0) and two[-1].table == (3, 3, 3, 3)
    assert [network_index(F) for F in two] == list(range(256))
    with pytest.raises(UsageError, match="random mode"):
        next(enumerate_networks(4))


@pytest.mark.parametrize("n", [1, 2])
def test_golden_values_match_oracle(n):
    total, counts, theorems = naive_oracle.census(n)
    assert total == 4 ** n if n == 1 else total == 256
    assert counts == GOLDEN_COUNTS[n]
    assert _theorem_tuples(theorems) == GOLDEN_THEOREMS[n]


@pytest.mark.parametrize("n", [1, 2])
def test_census_matches_golden(n):
    rep = census(SearchScope(n))
    assert rep.total == (4 if n == 1 else 256)
    assert rep.counts == GOLDEN_COUNTS[n]
    assert _theorem_tuples(rep.theorems) == GOLDEN_THEOREMS[n]
    assert rep.failures == 0 and not rep.counterexamples and not rep.inconsistent


def test_library_features_match_oracle_n2():
    for (F, naive) in zip(enumerate_networks(2), naive_oracle.all_networks(2)):
        lib = network_features(F)
        ref = naive_oracle.features(naive, 2)
        assert {k: lib[k] for k in FEATURES} == {k: ref[k] for k in FEATURES}


def test_table_features_match_library_sampled_n3():
    rows = next(sample_rows(3, 300, 17))
    feats = features_from_rows(3, rows)
    for k, r in enumerate(rows):
        lib = network_features(BooleanNetwork(3, tuple(r.tolist())))
        assert {f: bool(feats[f][k]) for f in FEATURES} == lib


def test_table_features_match_library_on_p_class_n3():
    nets = list(select_networks(SearchScope(3, filters=("property_p", "opposition"))))
    assert len(nets) == 5807
    picks = [nets[k] for k in range(0, len(nets), 97)]
    rows = np.array([F.table for F in picks], dtype=np.int64)
    feats = features_from_rows(3, rows)
    for k, F in enumerate(picks):
        assert {f: bool(feats[f][k]) for f in FEATURES} == network_features(F)


def test_sampling_is_deterministic_and_prefix_stable():
    a = [F.table for F in sample_networks(3, 50, 9)]
    assert a == [F.table for F in sample_networks(3, 50, 9)]
    assert a[:20] == [F.table for F in sample_networks(3, 20, 9)]
    assert a != [F.table for F in sample_networks(3, 50, 10)]


def test_sampling_is_uniform_per_cell():
    n, count = 2, 40000
    rows = np.concatenate(list(sample_rows(n, count, 3)))
    assert rows.shape == (count, 4)
    expected = count / 4
    sd = math.sqrt(count * 0.25 * 0.75)
    for col in range(4):
        freq = np.bincount(rows[:, col], minlength=4)
        assert np.all(np.abs(freq - expected) < 5 * sd)


def test_scope_validation():
    with pytest.raises(UsageError, match="exhaustive mode supports"):
        SearchScope(4)
    with pytest.raises(UsageError, match="seed"):
        SearchScope(4, mode="random", samples=10)
    with pytest.raises(UsageError, match="unknown filter"):
        SearchScope(2, filters=("nonsense",))
    with pytest.raises(UsageError):
        SearchScope(2, mode="sideways")
    assert SearchScope(5, mode="random", samples=3, seed=0).size == 3


@pytest.mark.parametrize("n", [1, 2])
def test_hunt_small_returns_none(n):
    assert hunt_question1(SearchScope(n)) is None


def test_hunt_random_n4_small():
    assert hunt_question1(SearchScope(4, mode="random", samples=200, seed=1)) is None


def test_filter_order_does_not_change_final_count():
    names = ("property_p", "opposition", "hypothesis_h")
    a = census(SearchScope(2, filters=names))
    b = census(SearchScope(2, filters=tuple(reversed(names))))
    assert a.filter_counts[-1][1] == b.filter_counts[-1][1]
    assert [c for _, c in a.filter_counts] == sorted((c for _, c in a.filter_counts), reverse=True)


def test_select_networks_agrees_with_counts():
    scope = SearchScope(2, filters=("property_p", "opposition"))
    picked = list(select_networks(scope))
    assert len(picked) == census(scope).filter_counts[-1][1]
    assert all(has_property_P(F) for F in picked)
    with pytest.raises(UsageError):
        next(select_networks(SearchScope(4, mode="random", samples=1, seed=0)))


def test_sharded_equals_single(tmp_path):
    scope = SearchScope(2, filters=("property_p",))
    whole = run_shards(scope, prefix_rows=0)
    for prefix in (1, 2):
        assert run_shards(scope, prefix_rows=prefix) == whole
    assert run_shards(scope, prefix_rows=1, workers=2) == whole


def test_checkpoint_resume(tmp_path):
    scope = SearchScope(2)
    ck = tmp_path / "ck.json"
    whole = run_shards(scope, prefix_rows=1)
    run_shards(scope, prefix_rows=1, shards=[0, 1], checkpoint=ck)
    assert ck.exists()
    assert run_shards(scope, prefix_rows=1, checkpoint=ck) == whole
    with pytest.raises(UsageError, match="different scope"):
        run_shards(SearchScope(2, filters=("acyclic",)), prefix_rows=1, checkpoint=ck)
    with pytest.raises(UsageError):
        run_shards(scope, prefix_rows=1, shards=[99])


def test_random_census_n4_library_path():
    rep = census(SearchScope(4, mode="random", samples=60, seed=4))
    assert rep.total == 60 and rep.failures == 0


def test_index_round_trip_n3():
    for k in (0, 1, 12345, (1 << 24) - 1):
        assert network_index(network_from_index(3, k)) == k


@pytest.mark.parametrize("n", [3, 4, 5])
def test_opposition_sampler_lands_in_class(n):
    for F in sample_opposition_networks(n, 30, n):
        f = network_features(F) if n <= 4 else None
        assert has_property_P(F)
        if f is not None:
            assert f["opposition"] and f["hypothesis_h"] and f["no_fixed_point"]


def test_conjugate_identity_is_noop():
    F = next(sample_networks(3, 1, 0))
    assert conjugate(F, [1, 2, 3], 0) == F


def test_filter_names_cover_features():
    assert set(FEATURES) < set(FILTER_NAMES)
