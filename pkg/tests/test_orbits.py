import pytest
from hypothesis import given, strategies as st

import oracles
from sympladder.orbits import (
    BlockInvolution,
    Composition,
    InvalidInvolution,
    InvalidRange,
    admissible_rep,
    character_exponents,
    maximal_parabolic_exponent,
    s2_of,
    validate,
)

compositions = st.lists(st.integers(1, 3), min_size=1, max_size=6).map(tuple)


def taus(alpha):
    return {t.tau for t in s2_of(alpha)}


def test_s2_examples():
    assert taus((1, 1)) == {(1, 2), (2, 1)}
    assert taus((1, 2, 1)) == {(1, 2, 3), (3, 2, 1)}
    assert len(s2_of((1, 1, 1, 1))) == 10
    assert s2_of((2, 1))[0].tau == (1, 2)


@pytest.mark.parametrize("k, count", list(enumerate((1, 2, 4, 10, 26, 76), start=1)))
def test_involution_numbers(k, count):
    assert oracles.involution_count(k) == count
    assert len(s2_of((1,) * k)) == count


@given(compositions)
def test_s2_matches_permutation_oracle(alpha):
    got = [t.tau for t in s2_of(alpha)]
    assert len(got) == len(set(got))
    assert set(got) == oracles.block_involutions(alpha)


def test_involution_repr():
    assert repr(BlockInvolution((1, 2))) == "e"
    assert repr(BlockInvolution((2, 1, 4, 3))) == "(1 2)(3 4)"


def test_rep_examples():
    assert set(admissible_rep((1, 1), (2, 1)).blocks) == {(2, 1), (1, 2)}
    assert admissible_rep((3,), (1,)).blocks == ((1, 1),)
    rep = admissible_rep((2, 1, 2), (3, 2, 1))
    assert set(rep.blocks) == {(3, 1), (2, 2), (1, 3)}
    assert rep.marker(3, 1) == "J_2" and rep.marker(2, 2) == "J_1" and rep.marker(1, 1) is None


@given(compositions, st.data())
def test_rep_is_permutation_like(alpha, data):
    tau = data.draw(st.sampled_from(s2_of(alpha)))
    m = admissible_rep(alpha, tau).matrix()
    assert all(sum(row) == 1 for row in m)
    assert all(sum(col) == 1 for col in zip(*m))


def test_exponent_examples():
    assert character_exponents((1, 1), (2, 1)) == (1, 0)
    assert character_exponents((4,), (1,)) == (0,)
    assert character_exponents((1, 1, 1, 1), (4, 3, 2, 1)) == (1, 1, 0, 0)


@given(compositions, st.data())
def test_exponents_mark_the_smaller_index_of_each_swap(alpha, data):
    tau = data.draw(st.sampled_from(s2_of(alpha)))
    ex = character_exponents(alpha, tau)
    assert {i for i, e in enumerate(ex, start=1) if e} == {i for i in range(1, len(alpha) + 1) if i < tau(i)}
    assert sum(ex) == len(tau.cycles())


@pytest.mark.parametrize("alpha, tau", [
    ((1, 2), (2, 1)),
    ((1, 1), (1, 1)),
    ((1, 1, 1), (2, 3, 1)),
    ((1, 1), (1,)),
])
def test_invalid_involutions(alpha, tau):
    with pytest.raises(InvalidInvolution):
        validate(alpha, tau)


def test_composition_rejects_nonpositive():
    with pytest.raises(ValueError):
        Composition((1, 0))
    assert Composition((2, 1, 2)).n == 5


@pytest.mark.parametrize("n, k, r, want", [(4, 2, 1, -3), (4, 2, 2, -1), (2, 1, 0, -3)])
def test_parabolic_examples(n, k, r, want):
    assert maximal_parabolic_exponent(n, k, r) == want


@given(st.integers(1, 20), st.data())
def test_parabolic_formula(n, data):
    k = data.draw(st.integers(0, n // 2))
    r = data.draw(st.integers(0, k))
    assert maximal_parabolic_exponent(n, k, r) == -(n - 2 * r + 1)


@pytest.mark.parametrize("n, k, r", [(4, 3, 1), (4, 1, 2), (4, 2, -1)])
def test_parabolic_range(n, k, r):
    with pytest.raises(InvalidRange):
        maximal_parabolic_exponent(n, k, r)
