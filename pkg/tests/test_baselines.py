import math
import statistics

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ceecsim.baselines import (
    ProtocolKind,
    baseline_select,
    deec_probability,
    esep_thresholds,
    leach_threshold,
    rotation_thresholds,
    sep_thresholds,
)
from ceecsim.engine import run_simulation
from ceecsim.topology import NetworkConfig, deploy

BASELINES = [ProtocolKind.LEACH, ProtocolKind.SEP, ProtocolKind.ESEP, ProtocolKind.DEEC]


def test_leach_threshold():
    assert leach_threshold(0.1, 20, True) == pytest.approx(0.1)
    assert leach_threshold(0.1, 37, False) == 0
    assert leach_threshold(0.1, 19, True) == 1.0
    # 0.1 / (1 - 0.1*4)
    assert leach_threshold(0.1, 4, True) == pytest.approx(1 / 6)


@given(p=st.floats(0.001, 0.999), r=st.integers(0, 10**6), eligible=st.booleans())
def test_leach_threshold_is_probability(p, r, eligible):
    assert 0 <= leach_threshold(p, r, eligible) <= 1


@settings(max_examples=200)
@given(
    ps=st.lists(st.just(0.0) | st.floats(1e-6, 1.0), min_size=1, max_size=20),
    r=st.integers(0, 10**5),
    flags=st.lists(st.booleans(), min_size=20, max_size=20),
)
def test_vectorised_thresholds_match_scalar(ps, r, flags):
    eligible = np.array(flags[: len(ps)])
    got = rotation_thresholds(np.array(ps), r, eligible)
    want = [leach_threshold(p, r, e) if p > 0 else 0.0 for p, e in zip(ps, eligible)]
    np.testing.assert_array_equal(got, want)


def test_sep_thresholds():
    assert sep_thresholds(0.1, 0, 0.3) == pytest.approx((0.1, 0.1))
    # 0.1/1.5, 0.2/1.5
    assert sep_thresholds(0.1, 1, 0.5) == pytest.approx((0.0667, 0.1333), abs=5e-5)


@given(p=st.floats(0.01, 0.99), alpha=st.floats(0, 10), m=st.floats(0, 1))
def test_sep_weighted_mean_is_p(p, alpha, m):
    p_nrm, p_adv = sep_thresholds(p, alpha, m)
    assert (1 - m) * p_nrm + m * p_adv == pytest.approx(p, rel=1e-9)


def test_esep_thresholds():
    assert esep_thresholds(0.1, 0, (0.2, 0.3, 0.5)) == pytest.approx((0.1, 0.1, 0.1))
    # thirds, extras 0/1/2: scale = 1 + (0 + 1 + 2)/3 = 2
    assert esep_thresholds(0.1, 1, (1 / 3, 1 / 3, 1 / 3)) == pytest.approx((0.05, 0.1, 0.15))
    with pytest.raises(ValueError):
        esep_thresholds(0.1, 1, (0.5, 0.5, 0.5))


@given(
    p=st.floats(0.01, 0.99),
    alpha=st.floats(0, 10),
    weights=st.tuples(st.floats(0, 1), st.floats(0, 1), st.floats(0, 1)).filter(lambda w: sum(w) > 0.01),
)
def test_esep_weighted_mean_is_p(p, alpha, weights):
    fractions = [w / math.fsum(weights) for w in weights]
    probs = esep_thresholds(p, alpha, fractions)
    assert math.fsum(f * q for f, q in zip(fractions, probs)) == pytest.approx(p, rel=1e-9)


def test_deec_probability():
    assert deec_probability(0.1, 0.4, 0.4) == pytest.approx(0.1)
    assert deec_probability(0.1, 0.8, 0.4) == pytest.approx(0.2)
    assert deec_probability(0.1, 0.0, 0.4) == 0
    assert deec_probability(0.5, 9.0, 1.0) == 1.0
    with pytest.raises(ValueError):
        deec_probability(0.1, 0.1, 0.0)


@pytest.mark.parametrize("kind", BASELINES)
def test_selection_is_seed_deterministic(kind, default_config):
    def heads(seed):
        rng = np.random.default_rng(seed)
        nodes = deploy(default_config, rng)
        return [baseline_select(kind, nodes, default_config, r, rng).heads for r in (1, 2, 3)]

    assert heads(5) == heads(5)


@pytest.mark.parametrize("kind", BASELINES)
def test_members_join_nearest_head_anywhere(kind, fresh_network, default_config):
    assignment = baseline_select(kind, fresh_network, default_config, 1, np.random.default_rng(2))
    by_id = {n.id: n for n in fresh_network}
    for member, head in assignment.membership.items():
        m = by_id[member]
        dists = {h: (by_id[h].x - m.x) ** 2 + (by_id[h].y - m.y) ** 2 for h in assignment.heads}
        assert dists[head] == min(dists.values())
        assert head == min(h for h, d in dists.items() if d == dists[head])


def test_ceec_is_not_a_baseline(fresh_network, default_config):
    with pytest.raises(ValueError):
        baseline_select(ProtocolKind.CEEC, fresh_network, default_config, 1, np.random.default_rng(0))


def test_zero_heads_gives_empty_assignment(fresh_network, default_config):
    # round 1 threshold is p, so an rng that always draws 1.0 elects nobody
    class Never:
        def random(self, n):
            return np.ones(n)

    assignment = baseline_select(ProtocolKind.LEACH, fresh_network, default_config, 1, Never())
    assert assignment.heads == [] and assignment.membership == {}


def test_leach_head_count_varies_around_p_n():
    result = run_simulation(NetworkConfig(seed=4, max_rounds=1000), ProtocolKind.LEACH)
    counts = [m.ch_count for m in result.per_round]
    assert statistics.pstdev(counts) > 0
    assert statistics.mean(counts) == pytest.approx(10, abs=0.5)


@pytest.mark.parametrize("kind", BASELINES)
def test_long_run_head_fraction_near_p(kind):
    # heads are not independent across rounds, so the SE of the mean is
    # estimated from epoch-length batches of 20 rounds
    result = run_simulation(NetworkConfig(seed=8, max_rounds=2000), kind)
    assert result.per_round[-1].alive_total == 100
    fractions = [m.ch_count / 100 for m in result.per_round]
    batches = [statistics.mean(fractions[i : i + 20]) for i in range(0, 2000, 20)]
    se = statistics.stdev(batches) / math.sqrt(len(batches))
    assert abs(statistics.mean(fractions) - 0.1) < 3 * se + 0.005


@pytest.mark.parametrize("kind", [ProtocolKind.SEP, ProtocolKind.ESEP, ProtocolKind.DEEC])
def test_homogeneous_baselines_reduce_to_leach(kind):
    config = NetworkConfig(n1=100, n2=0, n3=0, alpha=0.0, seed=3, max_rounds=400)
    leach = [m.ch_count for m in run_simulation(config, ProtocolKind.LEACH).per_round]
    other = [m.ch_count for m in run_simulation(config, kind).per_round]
    if kind is ProtocolKind.DEEC:
        # residual energies drift apart, so only the statistics agree
        assert statistics.mean(other) == pytest.approx(statistics.mean(leach), abs=0.5)
    else:
        assert other == leach
