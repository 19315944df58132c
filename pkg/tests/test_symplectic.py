import pytest
from hypothesis import given, strategies as st

import oracles
from conftest import RHO, SC, multisegments
from sympladder.core import Multisegment, OrderedMultisegment, is_ladder, seg, speh_halve, standard_orders
from sympladder.symplectic import (
    DecomposedMultisegment,
    DistinguishedLineUnsupported,
    GoodDecomposition,
    NotStandardOrder,
    check_good_decomposition,
    compositions,
    decompose,
    good_decompositions,
    has_good_decomposition,
    is_symplectic,
    verify_speh_implication,
)


def O(*pairs, line=RHO):
    return OrderedMultisegment(line, tuple(seg(line, *p) for p in pairs))


def M(*pairs):
    return Multisegment.of(RHO, *pairs)


def test_compositions():
    assert compositions(3) == [(3,), (1, 2), (2, 1), (1, 1, 1)]
    assert len(compositions(5)) == 16


def test_decompose_top_down():
    assert decompose(seg(RHO, 0, 3), (1, 2, 1)) == (seg(RHO, 3, 3), seg(RHO, 1, 2), seg(RHO, 0, 0))


class TestGoodDecompositions:
    def test_adjacent_shift_pair_has_one_certificate(self):
        (gd,) = good_decompositions(O((1, 2), (0, 1)))
        assert gd.decomposition.shape == (1, 1)
        assert gd.pairs == (((1, 1), (2, 1)),)
        assert gd.tau((2, 1)) == (1, 1)

    def test_single_segment_has_none(self):
        assert good_decompositions(O((0, 2))) == []

    def test_equal_pair_has_none(self):
        assert good_decompositions(O((0, 1), (0, 1))) == []

    def test_empty_order_has_the_empty_certificate(self):
        assert len(good_decompositions(O())) == 1

    def test_rejects_non_standard_order(self):
        with pytest.raises(NotStandardOrder):
            good_decompositions(O((0, 1), (1, 2)))

    def test_rejects_distinguished_line(self):
        with pytest.raises(DistinguishedLineUnsupported):
            good_decompositions(O((0, 0), line=SC))
        with pytest.raises(DistinguishedLineUnsupported):
            is_symplectic(Multisegment.of(SC, (0, 0)))

    @given(multisegments(max_segs=4, lo=0, hi=3, max_len=2))
    def test_matches_exhaustive_oracle(self, m):
        for order in standard_orders(m):
            got = {(g.decomposition.pieces, frozenset(g.pairs)) for g in good_decompositions(order)}
            assert got == oracles.good_decompositions(order)

    @given(multisegments(max_segs=4, lo=0, hi=3, max_len=3))
    def test_every_certificate_passes_validator(self, m):
        for order in standard_orders(m):
            for gd in good_decompositions(order):
                assert check_good_decomposition(gd) == []

    @given(multisegments(max_segs=3, lo=-1, hi=3, max_len=3))
    def test_speh_ladder_trivial_certificate(self, half):
        m = half + half.shifted(1)
        order = is_ladder(m)
        if order is None:
            return
        t = len(order)
        dec = DecomposedMultisegment(order, tuple((d,) for d in order))
        gd = GoodDecomposition(dec, tuple(((2 * i + 1, 1), (2 * i + 2, 1)) for i in range(t // 2)))
        assert check_good_decomposition(gd) == []


class TestValidator:
    def test_flags_wrong_shift(self):
        order = O((0, 1), (0, 1))
        dec = DecomposedMultisegment(order, tuple((d,) for d in order))
        gd = GoodDecomposition(dec, (((1, 1), (2, 1)),))
        assert any("shift" in p for p in check_good_decomposition(gd))

    def test_flags_row_condition(self):
        order = O((2, 3), (1, 1), (0, 0))
        dec = DecomposedMultisegment(order, ((seg(RHO, 3, 3), seg(RHO, 2, 2)), (seg(RHO, 1, 1),), (seg(RHO, 0, 0),)))
        # the lower piece of row 1 must pair with an earlier row than the upper piece
        gd = GoodDecomposition(dec, (((1, 1), (2, 1)), ((1, 2), (3, 1))))
        problems = check_good_decomposition(gd)
        assert any("row condition" in p for p in problems)

    def test_flags_partial_pairing(self):
        order = O((1, 2), (0, 1))
        dec = DecomposedMultisegment(order, tuple((d,) for d in order))
        assert check_good_decomposition(GoodDecomposition(dec, ()))


class TestIsSymplectic:
    @pytest.mark.parametrize("m, want", [
        (M((1, 2), (0, 1)), True),
        (M((0, 1), (0, 1)), False),
        (M(), True),
        (M((0, 0)), False),
        (M((1, 1), (0, 0)), True),
        (M((0, 0), (2, 2)), False),
    ])
    def test_examples(self, m, want):
        assert is_symplectic(m) is want

    @given(st.lists(st.tuples(st.integers(0, 3), st.integers(0, 2)), max_size=4), st.randoms())
    def test_invariant_under_input_order(self, raw, rnd):
        segs = [seg(RHO, a, a + l) for a, l in raw]
        shuffled = segs[:]
        rnd.shuffle(shuffled)
        assert is_symplectic(Multisegment(RHO, segs)) == is_symplectic(Multisegment(RHO, shuffled))

    @given(multisegments(max_segs=4, lo=0, hi=3, max_len=3))
    def test_symplectic_implies_speh_type(self, m):
        if is_symplectic(m):
            assert speh_halve(m) is not None

    def test_has_good_decomposition_agrees(self):
        o = O((1, 2), (0, 1))
        assert has_good_decomposition(o) == good_decompositions(o)[0]


def test_speh_implication_report():
    rep = verify_speh_implication(3, 0, 3)
    assert rep.ok
    assert rep.cases == 286
    assert rep.both == rep.symplectic
