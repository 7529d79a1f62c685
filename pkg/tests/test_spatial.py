import numpy as np
import pytest

from rclt import (
    Column,
    ColumnBank,
    LengthMismatchError,
    NoiseConfig,
    init_columns,
    overlap,
    select_winners,
    union_set,
    update_permanences,
)


def make_bank(perms, K_p=0.5):
    return ColumnBank(np.array(perms, dtype=np.float64), K_p=K_p,
                      p_inc=0.05, p_dec=0.01, rng_seed=0)


def test_init_columns_deterministic():
    a = init_columns(50, 4, 0.5, seed=42)
    b = init_columns(50, 4, 0.5, seed=42)
    assert np.array_equal(a.permanences, b.permanences)
    c = init_columns(50, 4, 0.5, seed=43)
    assert not np.array_equal(a.permanences, c.permanences)


def test_init_columns_streams_differ_per_column():
    bank = init_columns(50, 4, 0.5, seed=42)
    for i in range(3):
        assert not np.array_equal(bank.permanences[i], bank.permanences[i + 1])


def test_init_columns_range_and_connected():
    bank = init_columns(200, 8, 0.5, seed=1)
    assert bank.permanences.min() >= 0.0
    assert bank.permanences.max() < 1.0
    assert np.array_equal(bank.connected, (bank.permanences > 0.5).astype(np.uint8))


def test_init_columns_rejects_bad_args():
    with pytest.raises(ValueError):
        init_columns(0, 4, 0.5, seed=1)
    with pytest.raises(ValueError):
        init_columns(10, 0, 0.5, seed=1)
    with pytest.raises(ValueError):
        init_columns(10, 4, 1.5, seed=1)


def test_overlap_counts_shared_active_bits():
    col = Column(permanences=np.zeros(6), connected=np.array([1, 0, 1, 1, 0, 0], dtype=np.uint8))
    sdr = np.array([1, 1, 1, 0, 0, 1], dtype=np.uint8)
    assert overlap(col, sdr) == 2


def test_overlap_rejects_length_mismatch():
    col = Column(permanences=np.zeros(4), connected=np.zeros(4, dtype=np.uint8))
    with pytest.raises(LengthMismatchError):
        overlap(col, np.zeros(5, dtype=np.uint8))


def test_select_winners_orders_by_overlap_then_index():
    bank = make_bank([
        [0.9, 0.9, 0.0, 0.0],   # overlap 2
        [0.9, 0.9, 0.9, 0.0],   # overlap 3
        [0.9, 0.9, 0.0, 0.9],   # overlap 2, ties with column 0
        [0.0, 0.0, 0.0, 0.0],   # overlap 0, filtered by K_score
    ])
    sdr = np.array([1, 1, 1, 0], dtype=np.uint8)
    winners = select_winners(bank, sdr, c=3, K_score=1)
    assert winners.indices == [1, 0, 2]
    assert winners.overlaps == [3, 2, 2]


def test_select_winners_k_score_gate_may_empty():
    bank = make_bank([[0.9, 0.0], [0.0, 0.9]])
    sdr = np.array([0, 0], dtype=np.uint8)
    winners = select_winners(bank, sdr, c=1, K_score=1)
    assert winners.indices == []
    assert not winners


def test_select_winners_respects_c():
    bank = make_bank([[0.9, 0.9]] * 5)
    sdr = np.array([1, 1], dtype=np.uint8)
    winners = select_winners(bank, sdr, c=2, K_score=1)
    assert winners.indices == [0, 1]


def test_select_winners_rejects_length_mismatch():
    bank = make_bank([[0.9, 0.9]])
    with pytest.raises(LengthMismatchError):
        select_winners(bank, np.ones(3, dtype=np.uint8), c=1, K_score=1)


def test_update_permanences_winners_only():
    bank = make_bank([[0.6, 0.4, 0.6], [0.6, 0.4, 0.6]])
    before = bank.permanences.copy()
    sdr = np.array([1, 1, 0], dtype=np.uint8)
    winners = select_winners(bank, sdr, c=1, K_score=1)
    assert winners.indices == [0]
    update_permanences(bank, winners, sdr)
    assert np.allclose(bank.permanences[0], [0.65, 0.45, 0.59])
    assert np.array_equal(bank.permanences[1], before[1])


def test_update_permanences_clamps_and_rethresholds():
    bank = make_bank([[0.98, 0.005]])
    sdr = np.array([1, 0], dtype=np.uint8)
    winners = select_winners(bank, sdr, c=1, K_score=1)
    update_permanences(bank, winners, sdr)
    assert bank.permanences[0].tolist() == [1.0, 0.0]
    assert bank.connected[0].tolist() == [1, 0]


def test_update_permanences_connected_crosses_threshold():
    bank = make_bank([[0.48, 0.52]])
    assert bank.connected[0].tolist() == [0, 1]
    sdr = np.array([1, 0], dtype=np.uint8)
    # K_score=0 lets the zero-overlap column win so the update runs
    winners = select_winners(bank, sdr, c=1, K_score=0)
    assert winners.indices == [0]
    update_permanences(bank, winners, sdr)
    # 0.48+0.05 = 0.53 connects; 0.52-0.01 = 0.51 stays connected
    assert bank.connected[0].tolist() == [1, 1]


def test_union_set_is_elementwise_or():
    bank = make_bank([[0.9, 0.0, 0.9, 0.0], [0.0, 0.9, 0.0, 0.0]])
    union = union_set(bank)
    assert union.tolist() == [1, 1, 1, 0]


def test_union_set_noise_only_flips_zeros_on():
    bank = make_bank([[0.9, 0.0, 0.9, 0.0], [0.0, 0.9, 0.0, 0.0]])
    union = union_set(bank, NoiseConfig(p_noise=1.0), rng_seed=5)
    assert union.tolist() == [1, 1, 1, 1]
    silent = union_set(bank, NoiseConfig(p_noise=0.0), rng_seed=5)
    assert silent.tolist() == [1, 1, 1, 0]


def test_union_set_noise_deterministic_per_seed():
    bank = make_bank([[0.0] * 64])
    a = union_set(bank, NoiseConfig(p_noise=0.5), rng_seed=9)
    b = union_set(bank, NoiseConfig(p_noise=0.5), rng_seed=9)
    assert np.array_equal(a, b)


def test_noise_config_validation():
    with pytest.raises(ValueError):
        NoiseConfig(p_noise=1.5).validate()
    NoiseConfig(p_noise=0.25).validate()


def test_bank_column_view_shares_storage():
    bank = make_bank([[0.9, 0.1]])
    col = bank.column(0)
    assert col.permanences is bank.permanences[0] or np.shares_memory(col.permanences, bank.permanences)
