import itertools
import json
import math

import numpy as np
import pytest

from qhash.bias import (
    BiasSet,
    SearchConfig,
    exhaustive_search,
    heuristic_search,
    load_bias_set,
    save_bias_set,
)
from qhash.errors import BudgetExceeded, FieldMismatch, MalformedFile, RangeError
from qhash.field import make_field

from oracles import PRIMES_TO_31, naive_bias, naive_dft

COS_PI_5 = 0.8090169943749475  # cos(pi/5), bias of every 2-element subset of F_5
SQRT2_OVER_3 = 0.47140452079103173  # bias of {1,2,4} in F_7


def make_set(q, elements):
    return BiasSet(make_field(q), elements)


def test_dft_value_at_zero_is_set_size():
    for q, elements in ((7, [1, 2, 4]), (5, [0, 3]), (11, list(range(1, 11)))):
        bset = make_set(q, elements)
        assert bset.dft_value(0) == pytest.approx(len(elements), abs=1e-12)


def test_dft_value_complete_sum_is_minus_one():
    bset = make_set(7, list(range(1, 7)))
    assert bset.dft_value(3) == pytest.approx(-1.0, abs=1e-12)


def test_dft_value_against_direct_summation():
    bset = make_set(7, [1, 2, 4])
    got = bset.dft_value(1)
    assert abs(got) == pytest.approx(math.sqrt(2), abs=1e-9)
    assert got == pytest.approx(naive_dft(7, [1, 2, 4], 1), abs=1e-12)


def test_dft_value_field_mismatch():
    bset = make_set(7, [1, 2, 4])
    with pytest.raises(FieldMismatch):
        bset.dft_value(make_field(5).element(1))


def test_bias_known_values():
    assert make_set(7, [1, 2, 4]).bias() == pytest.approx(SQRT2_OVER_3, abs=1e-9)
    assert make_set(7, list(range(1, 7))).bias() == pytest.approx(1 / 6, abs=1e-12)
    assert make_set(5, [1]).bias() == pytest.approx(1.0, abs=1e-12)
    assert make_set(5, [0]).bias() == 1.0  # constant character


def test_bias_matches_naive_double_loop_exhaustive_small():
    # all subsets with |B| <= 3 for q <= 13, plus seeded larger samples to 31
    for q in (2, 3, 5, 7, 11, 13):
        for size in range(1, 4):
            for combo in itertools.combinations(range(q), size):
                bset = make_set(q, combo)
                assert bset.bias() == pytest.approx(naive_bias(q, combo), abs=1e-12), (q, combo)


def test_bias_matches_naive_double_loop_sampled_to_31():
    rng = np.random.default_rng(7)
    for q in PRIMES_TO_31:
        for _ in range(20):
            size = int(rng.integers(1, min(5, q) + 1))
            combo = sorted(int(x) for x in rng.choice(q, size=size, replace=False))
            bset = make_set(q, combo)
            assert bset.bias() == pytest.approx(naive_bias(q, combo), abs=1e-12)


def test_bias_in_unit_interval():
    rng = np.random.default_rng(11)
    for q in (5, 13, 31):
        for _ in range(10):
            size = int(rng.integers(1, q))
            combo = sorted(int(x) for x in rng.choice(q, size=size, replace=False))
            lam = make_set(q, combo).bias()
            assert 0.0 <= lam <= 1.0 + 1e-12


def test_is_delta_good():
    bset = make_set(7, [1, 2, 4])
    assert bset.is_delta_good(0.5)
    assert not bset.is_delta_good(0.4)
    assert make_set(5, [0]).is_delta_good(1.0)
    with pytest.raises(RangeError):
        bset.is_delta_good(1.5)


def test_bias_set_validation():
    with pytest.raises(RangeError):
        make_set(7, [])
    with pytest.raises(RangeError):
        make_set(7, [1, 1])
    assert make_set(7, [9]).elements == (2,)  # reduced mod q


def test_exhaustive_search_q5_pairs_tie_break():
    # every 2-element subset of F_5 has the same bias; the lexicographically
    # smallest wins
    result = exhaustive_search(SearchConfig(q=5, size=2, budget=100))
    assert result.elements == (0, 1)
    assert result.bias() == pytest.approx(COS_PI_5, abs=1e-12)


def test_exhaustive_search_matches_oracle_q3():
    from oracles import exhaustive_min_bias

    result = exhaustive_search(SearchConfig(q=3, size=2, budget=10))
    lam, _ = exhaustive_min_bias(3, 2)
    assert result.bias() == pytest.approx(lam, abs=1e-12)


def test_exhaustive_search_full_nonzero_set():
    # every 6-element subset of F_7 is a one-point complement with bias 1/6,
    # so the optimum matches the full nonzero set and the tie-break picks the
    # lexicographically smallest subset
    result = exhaustive_search(SearchConfig(q=7, size=6, budget=10))
    assert result.bias() == pytest.approx(1 / 6, abs=1e-12)
    assert result.elements == (0, 1, 2, 3, 4, 5)
    assert make_set(7, range(1, 7)).bias() == pytest.approx(result.bias(), abs=1e-12)


def test_exhaustive_search_budget_guard():
    with pytest.raises(BudgetExceeded):
        exhaustive_search(SearchConfig(q=101, size=8, budget=1000))


def test_heuristic_search_deterministic():
    cfg = SearchConfig(q=31, size=4, mode="heuristic", budget=500, seed=99)
    a = heuristic_search(cfg)
    b = heuristic_search(cfg)
    assert a.elements == b.elements
    assert a.bias() == b.bias()


def test_heuristic_search_worker_count_invariant():
    cfg = SearchConfig(q=31, size=4, mode="heuristic", budget=2000, seed=5)
    assert heuristic_search(cfg, workers=1).to_json() == heuristic_search(cfg, workers=4).to_json()


def test_heuristic_q5_pairs_hit_known_bias():
    for seed in (0, 1, 2):
        cfg = SearchConfig(q=5, size=2, mode="heuristic", budget=50, seed=seed)
        assert heuristic_search(cfg).bias() == pytest.approx(COS_PI_5, abs=1e-12)


def test_heuristic_never_worse_than_initial_candidate():
    for seed in range(6):
        cfg = SearchConfig(q=101, size=8, mode="heuristic", budget=2000, seed=seed)
        result = heuristic_search(cfg)
        rng = np.random.Generator(np.random.Philox(key=[seed, 0]))
        initial = sorted(int(x) for x in rng.permutation(101)[:8])
        assert result.bias() <= make_set(101, initial).bias() + 1e-15


def test_heuristic_not_better_than_exhaustive():
    for q, size in itertools.product((5, 7, 11, 13), (2, 3, 4)):
        exact = exhaustive_search(SearchConfig(q=q, size=size, budget=10**6))
        approx = heuristic_search(
            SearchConfig(q=q, size=size, mode="heuristic", budget=300, seed=1)
        )
        assert exact.bias() <= approx.bias() + 1e-12


def test_search_mode_validation():
    with pytest.raises(RangeError):
        SearchConfig(q=5, size=2, mode="annealing")
    with pytest.raises(RangeError):
        exhaustive_search(SearchConfig(q=5, size=2, mode="heuristic"))
    with pytest.raises(RangeError):
        heuristic_search(SearchConfig(q=5, size=2, mode="exhaustive"))


def test_bias_set_roundtrip(tmp_path):
    bset = make_set(7, [1, 2, 4])
    path = tmp_path / "b.json"
    save_bias_set(bset, str(path))
    loaded = load_bias_set(str(path))
    assert loaded == bset
    assert loaded.bias() == pytest.approx(bset.bias(), abs=1e-15)


def test_load_rejects_stale_bias(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"q": 7, "elements": [1, 2, 4], "bias": 0.25}))
    with pytest.raises(MalformedFile):
        load_bias_set(str(path))


def test_load_rejects_garbage(tmp_path):
    path = tmp_path / "junk.json"
    path.write_text("not json {")
    with pytest.raises(MalformedFile):
        load_bias_set(str(path))
    path2 = tmp_path / "short.json"
    path2.write_text(json.dumps({"q": 7}))
    with pytest.raises(MalformedFile):
        load_bias_set(str(path2))
    with pytest.raises(MalformedFile):
        load_bias_set(str(tmp_path / "missing.json"))
