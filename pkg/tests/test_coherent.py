import cmath
import itertools
import math

import numpy as np
import pytest

from qhash.bias import BiasSet
from qhash.coherent import (
    CoherentHashState,
    coherent_hash,
    coherent_hash_composed,
    coherent_overlap,
)
from qhash.errors import DimensionMismatch, RangeError
from qhash.field import make_field
from qhash.generator import ComposedGenerator, LinearFamily, RSFamily, composed_hash_state
from qhash.qstate import hash_state, inner_product

EXP_MINUS_5_4 = 0.2865047968601901  # e^(-1.25)


def make_set(q, elements):
    return BiasSet(make_field(q), elements)


def per_mode_overlap(beta, gamma):
    return cmath.exp(-0.5 * abs(beta) ** 2 - 0.5 * abs(gamma) ** 2 + beta.conjugate() * gamma)


def test_vacuum_when_alpha_zero():
    state = coherent_hash(make_set(5, [1, 2]), 3, 0.0)
    np.testing.assert_array_equal(state.modes, [0, 0])


def test_zero_input_gives_equal_modes():
    alpha = 0.7 + 0.2j
    state = coherent_hash(make_set(5, [1, 2]), 0, alpha)
    np.testing.assert_allclose(state.modes, [alpha / math.sqrt(2)] * 2, atol=1e-15)


def test_mode_phases_follow_displayed_map():
    state = coherent_hash(make_set(5, [1, 2]), 1, 1.0)
    expected = np.exp(2j * np.pi * np.array([1, 2]) / 5) / math.sqrt(2)
    np.testing.assert_allclose(state.modes, expected, atol=1e-15)


def test_mode_magnitudes_exact():
    for alpha in (0.5, 2.0, 1.5 - 0.5j):
        state = coherent_hash(make_set(7, [1, 2, 4]), 3, alpha)
        np.testing.assert_allclose(
            np.abs(state.modes), abs(alpha) / math.sqrt(3), atol=1e-12
        )


def test_overlap_identical_states_is_one():
    state = coherent_hash(make_set(7, [1, 2, 4]), 3, 1.3)
    assert coherent_overlap(state, state) == pytest.approx(1.0, abs=1e-12)


def test_overlap_vacua_is_one():
    a = coherent_hash(make_set(5, [1, 2]), 1, 0.0)
    b = coherent_hash(make_set(5, [1, 2]), 2, 0.0)
    assert coherent_overlap(a, b) == pytest.approx(1.0, abs=1e-15)


def test_overlap_golden_value():
    bset = make_set(5, [1, 2])
    a = coherent_hash(bset, 1, 1.0)
    b = coherent_hash(bset, 2, 1.0)
    assert abs(coherent_overlap(a, b)) == pytest.approx(EXP_MINUS_5_4, abs=1e-9)


def test_overlap_matches_per_mode_product_oracle():
    rng = np.random.default_rng(2)
    for q in (5, 7, 13):
        size = int(rng.integers(2, min(6, q)))
        elements = sorted(int(x) for x in rng.choice(q, size=size, replace=False))
        bset = make_set(q, elements)
        for alpha in (0.5, 1.0, 1.0 + 0.7j):
            w, v = (int(x) for x in rng.integers(0, q, size=2))
            a = coherent_hash(bset, w, alpha)
            b = coherent_hash(bset, v, alpha)
            expected = 1.0 + 0.0j
            for beta, gamma in zip(a.modes, b.modes):
                expected *= per_mode_overlap(complex(beta), complex(gamma))
            assert coherent_overlap(a, b) == pytest.approx(expected, abs=1e-12)


def test_overlap_links_to_state_inner_product():
    rng = np.random.default_rng(6)
    for q in (5, 7, 11):
        size = int(rng.integers(2, min(6, q)))
        elements = sorted(int(x) for x in rng.choice(q, size=size, replace=False))
        bset = make_set(q, elements)
        for alpha in (0.5, 1.0, 2.0):
            for w, v in itertools.combinations(range(q), 2):
                overlap = coherent_overlap(
                    coherent_hash(bset, w, alpha), coherent_hash(bset, v, alpha)
                )
                re_ip = inner_product(hash_state(bset, w), hash_state(bset, v)).real
                assert abs(overlap) == pytest.approx(
                    math.exp(-(alpha**2) * (1.0 - re_ip)), abs=1e-9
                )


def test_overlap_decreases_with_alpha():
    bset = make_set(5, [1, 2])
    values = [
        abs(coherent_overlap(coherent_hash(bset, 1, a), coherent_hash(bset, 2, a)))
        for a in (0.25, 0.5, 1.0, 2.0, 4.0)
    ]
    assert all(x > y for x, y in zip(values, values[1:]))


def test_overlap_dimension_mismatch():
    a = coherent_hash(make_set(5, [1, 2]), 1, 1.0)
    b = coherent_hash(make_set(7, [1, 2, 4]), 1, 1.0)
    with pytest.raises(DimensionMismatch):
        coherent_overlap(a, b)


def test_coherent_state_validates_mode_magnitudes():
    with pytest.raises(RangeError):
        CoherentHashState(1.0, [1.0, 0.5])


def test_composed_coherent_follows_state_phases():
    gen = ComposedGenerator(
        LinearFamily(make_set(5, [1, 2])),
        RSFamily.with_default_points(make_field(5), 2, 4),
    )
    msg = (1, 2)
    coh = coherent_hash_composed(gen, msg, 2.0)
    assert coh.num_modes == 8
    state = composed_hash_state(gen, msg)
    # same phases, rescaled from 1/sqrt(nT) to alpha/sqrt(nT)
    np.testing.assert_allclose(coh.modes, 2.0 * state.amplitudes[:8], atol=1e-12)


def test_json_export():
    state = coherent_hash(make_set(5, [1, 2]), 1, 1.0 + 2.0j)
    doc = state.to_json()
    assert doc["alpha"] == [1.0, 2.0]
    assert len(doc["modes"]) == 2
