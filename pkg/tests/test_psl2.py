import pytest

from chardeg.bounds import epsilon_of
from chardeg.errors import UnsupportedFamilyError
from chardeg.exactmath import LESS, pow_compare
from chardeg.lie import prime_powers_up_to
from chardeg.psl2 import (
    Psl2Char, extendible_witness_even, field_invariance, psl2_characters,
    psl2_degrees, psl2_order, theta2_stabilizer_odd,
)


def test_degree_lists_examples():
    assert psl2_degrees(8).entries == ((9, 3), (8, 1), (7, 4), (1, 1))
    assert psl2_degrees(5).entries == ((5, 1), (4, 1), (3, 2), (1, 1))
    assert psl2_degrees(7).entries == ((8, 1), (7, 1), (6, 1), (3, 2), (1, 1))
    assert psl2_degrees(8).sum_squares == 504
    assert psl2_degrees(5).sum_squares == 60
    assert psl2_degrees(7).sum_squares == 168


def test_exceptional_isomorphism_4_vs_5():
    assert psl2_degrees(4).entries == psl2_degrees(5).entries


def test_degree_multiset_matches_character_list():
    for q in (4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32):
        ds = psl2_degrees(q)
        chars = psl2_characters(q)
        assert ds.sum_squares == psl2_order(q)
        assert sorted(c.degree for c in chars) == sorted(
            d for d, m in ds for _ in range(m))


def test_sum_identity_sweep():
    for q in prime_powers_up_to(500):
        if q >= 4:
            assert psl2_degrees(q).sum_squares == psl2_order(q)


def test_max_degree_is_q_or_q_plus_one():
    for q in prime_powers_up_to(200):
        if q >= 5:
            assert psl2_degrees(q).max_degree in (q, q + 1)


def test_eighth_power_comparison_fails_for_large_q():
    # the largest degree is only about the cube root of the order, so
    # b**8 > |S|**3 must fail once q is large; this is why these groups are
    # excluded from the Steinberg-degree growth check
    for q in (16, 17, 19, 25, 27, 49, 1024):
        b = psl2_degrees(q).max_degree
        assert pow_compare(b, 8, psl2_order(q), 3) == LESS


def test_epsilon_exceeds_one():
    for q in prime_powers_up_to(300):
        if q >= 5:
            assert epsilon_of(psl2_degrees(q)) > 1


def test_field_invariance_examples():
    assert field_invariance(Psl2Char(8, "theta", 3), 1) is True
    assert field_invariance(Psl2Char(9, "theta", 2), 1) is False
    # k = f is the identity automorphism
    assert field_invariance(Psl2Char(8, "theta", 1), 3) is True
    assert field_invariance(Psl2Char(16, "chi", 3), 4) is True


def test_field_invariance_unsupported_families():
    with pytest.raises(UnsupportedFamilyError):
        field_invariance(Psl2Char(8, "steinberg"), 1)
    with pytest.raises(UnsupportedFamilyError):
        field_invariance(Psl2Char(13, "xi", 1), 1)


def test_extendible_witness_examples():
    w = extendible_witness_even(8)
    assert (w.family, w.index, w.degree) == ("theta", 3, 7)
    w = extendible_witness_even(16)
    assert (w.family, w.index, w.degree) == ("chi", 5, 17)
    w = extendible_witness_even(32)
    assert (w.family, w.index, w.degree) == ("theta", 11, 31)


def test_extendible_witness_invariance():
    for f in range(3, 16):
        w = extendible_witness_even(2**f)
        assert all(field_invariance(w, k) for k in range(1, f + 1))


def test_extendible_witness_rejects_small_or_odd():
    with pytest.raises(ValueError):
        extendible_witness_even(4)
    with pytest.raises(ValueError):
        extendible_witness_even(9)


def test_theta2_stabilizer_examples():
    rep = theta2_stabilizer_odd(9)
    assert rep.all_pass and rep.checks == [(1, True)] and rep.stabilizer_index == 2
    rep = theta2_stabilizer_odd(5)
    assert rep.all_pass and rep.checks == []  # f = 1 is vacuous
    rep = theta2_stabilizer_odd(27)
    assert rep.all_pass and len(rep.checks) == 2
    with pytest.raises(ValueError):
        theta2_stabilizer_odd(8)


def test_degrees_rejects_bad_q():
    with pytest.raises(ValueError):
        psl2_degrees(3)
    with pytest.raises(ValueError):
        psl2_degrees(6)


def test_character_index_validation():
    with pytest.raises(ValueError):
        Psl2Char(8, "chi", 4)  # even q: chi index <= (q-2)/2 = 3
    with pytest.raises(ValueError):
        Psl2Char(9, "theta", 3)  # odd q: theta index must be even
    with pytest.raises(ValueError):
        Psl2Char(9, "eta", 1)  # q = 1 mod 4 has xi, not eta
    with pytest.raises(ValueError):
        Psl2Char(7, "xi", 1)
