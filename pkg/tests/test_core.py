from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from conftest import CHI, RHO, RHO2, multisegments, segments
import oracles
from sympladder.core import (
    ZERO,
    Indivisible,
    Line,
    MixedGrid,
    MixedLines,
    Multisegment,
    NotALadder,
    OrderedMultisegment,
    RankMismatch,
    Segment,
    SegmentError,
    exponent,
    is_ladder,
    jacquet_decomposition,
    kernel_components,
    linked,
    meet_join,
    precedes,
    rank,
    seg,
    shift,
    speh_halve,
    standard_orders,
)

H = Fraction(1, 2)


def M(line, *pairs):
    return Multisegment.of(line, *pairs)


def O(line, *pairs):
    return OrderedMultisegment(line, tuple(seg(line, *p) for p in pairs))


class TestSegment:
    def test_rejects_reversed_and_mixed_grid(self):
        with pytest.raises(SegmentError):
            seg(RHO, 2, 1)
        with pytest.raises(SegmentError):
            seg(RHO, 0, H)

    def test_exponent_accepts_halves_only(self):
        assert exponent("3/2") == Fraction(3, 2)
        assert exponent(-2) == -2
        with pytest.raises((ValueError, TypeError)):
            exponent(Fraction(1, 3))
        with pytest.raises((ValueError, TypeError)):
            exponent(0.5)

    def test_length_counts_exponents(self):
        assert seg(RHO, -H, 3 * H).length == 3
        assert seg(RHO, 0, 2).exponents() == [0, 1, 2]

    def test_line_equality_is_by_label(self):
        assert Line("rho", 2, True) == RHO
        assert not Line("rho", 2, True).same_as(RHO)
        with pytest.raises(ValueError):
            Line("bad", 0)


@pytest.mark.parametrize("pair, k, want", [
    ((0, 2), 1, (1, 3)),
    ((0, 2), 0, (0, 2)),
    ((-H, 3 * H), H, (0, 2)),
])
def test_shift_examples(pair, k, want):
    assert shift(seg(RHO, *pair), k) == seg(RHO, *want)


@pytest.mark.parametrize("x, y, want", [
    ((0, 1), (1, 2), True),
    ((0, 0), (2, 3), False),
    ((0, 3), (1, 2), False),
    ((0, 0), (1, 1), True),
    ((1, 2), (0, 1), False),
])
def test_precedes_examples(x, y, want):
    assert precedes(seg(RHO, *x), seg(RHO, *y)) is want


def test_precedes_false_across_lines_and_grids():
    assert not precedes(seg(RHO, 0, 1), seg(CHI, 1, 2))
    assert not precedes(seg(RHO, 0, 1), seg(RHO, H, 3 * H))


@pytest.mark.parametrize("x, y, want", [
    ((0, 1), (1, 2), True),
    ((1, 2), (0, 1), True),
    ((0, 3), (1, 2), False),
])
def test_linked_examples(x, y, want):
    assert linked(seg(RHO, *x), seg(RHO, *y)) is want


def test_meet_join_examples():
    assert meet_join(seg(RHO, 0, 2), seg(RHO, 1, 3)) == (seg(RHO, 1, 2), seg(RHO, 0, 3))
    assert meet_join(seg(RHO, 0, 0), seg(RHO, 2, 3)) == (None, None)
    assert meet_join(seg(RHO, 0, 1), seg(RHO, 2, 3)) == (None, seg(RHO, 0, 3))
    with pytest.raises(MixedLines):
        meet_join(seg(RHO, 0), seg(CHI, 0))
    with pytest.raises(MixedGrid):
        meet_join(seg(RHO, 0), seg(RHO, H))


@given(segments(), segments())
def test_precedes_irreflexive_antisymmetric(x, y):
    assert not precedes(x, x)
    assert not (precedes(x, y) and precedes(y, x))
    assert linked(x, y) == linked(y, x)
    assert not linked(x, x)


@given(segments(), segments())
def test_meet_join_matches_exponent_sets(x, y):
    if (x.a - y.a).denominator != 1:
        return
    meet, join = meet_join(x, y)
    ex, ey = set(x.exponents()), set(y.exponents())
    assert (set(meet.exponents()) if meet else set()) == ex & ey
    u = ex | ey
    contiguous = max(u) - min(u) + 1 == len(u)
    assert (join is not None) == contiguous
    if join:
        assert set(join.exponents()) == u


class TestMultisegment:
    def test_canonical_sort_and_equality(self):
        assert M(RHO, (1, 2), (0, 1)).segments == (seg(RHO, 0, 1), seg(RHO, 1, 2))
        assert M(RHO, (1, 2), (0, 1)) == M(RHO, (0, 1), (1, 2))
        assert M(RHO, (0, 0)) != M(CHI, (0, 0))

    def test_rejects_foreign_segments(self):
        with pytest.raises(MixedLines):
            Multisegment(RHO, [seg(CHI, 0)])

    @pytest.mark.parametrize("m, want", [
        (M(RHO2, (1, 1), (0, 0)), 4),
        (M(RHO, ), 0),
        (M(RHO, (0, 1), (1, 2)), 4),
    ])
    def test_rank(self, m, want):
        assert rank(m) == want

    def test_support_counts_exponents(self):
        assert M(RHO, (0, 1), (1, 2)).support() == Counter({0: 1, 1: 2, 2: 1})


class TestStandardOrders:
    def test_linked_pair_has_one(self):
        (o,) = standard_orders(M(RHO, (0, 1), (1, 2)))
        assert o.segments == (seg(RHO, 1, 2), seg(RHO, 0, 1))

    def test_unlinked_pair_has_two(self):
        assert len(standard_orders(M(RHO, (0, 0), (2, 3)))) == 2

    def test_singleton_and_empty(self):
        assert len(standard_orders(M(RHO, (0, 2)))) == 1
        assert standard_orders(M(RHO)) == [OrderedMultisegment(RHO, ())]

    @given(multisegments(max_segs=5))
    def test_matches_permutation_oracle(self, m):
        got = {o.segments for o in standard_orders(m)}
        assert got == oracles.standard_orders(m)
        assert all(o.is_standard() for o in standard_orders(m))

    @given(multisegments(max_segs=5))
    def test_decreasing_end_order_is_standard(self, m):
        dec = tuple(sorted(m.segments, key=lambda d: (-d.b, -d.a)))
        assert dec in {o.segments for o in standard_orders(m)}


class TestIsLadder:
    def test_examples(self):
        assert is_ladder(M(RHO, (0, 1), (1, 2))).segments == (seg(RHO, 1, 2), seg(RHO, 0, 1))
        assert is_ladder(M(RHO, (0, 1), (0, 1))) is None
        assert is_ladder(M(RHO, (0, 3), (1, 2))) is None

    @given(multisegments(max_segs=5))
    def test_matches_permutation_oracle(self, m):
        order = is_ladder(m)
        brute = oracles.ladder_orders(m)
        assert (order is None) == (not brute)
        if order is not None:
            assert brute == {order.segments}


class TestSpehHalve:
    def test_examples(self):
        assert speh_halve(M(RHO, (1, 2), (0, 1))) == M(RHO, (0, 1))
        assert speh_halve(M(RHO, (2, 2), (1, 1), (0, 0), (-1, -1))) == M(RHO, (1, 1), (-1, -1))
        assert speh_halve(M(RHO, (0, 1), (0, 1))) is None
        assert speh_halve(M(RHO)) == M(RHO)

    @given(multisegments(max_segs=6, lo=-1, hi=3, max_len=2))
    def test_matches_matching_oracle(self, m):
        half = speh_halve(m)
        brute = oracles.speh_halves(m)
        assert (half is None) == (not brute)
        if half is not None:
            assert half in brute

    @given(multisegments(max_segs=3).map(lambda m: m + m.shifted(1)))
    def test_always_finds_a_half_of_a_doubled_multisegment(self, m):
        half = speh_halve(m)
        assert half is not None
        assert half + half.shifted(1) == m

    @given(multisegments(line=RHO2, max_segs=6, lo=-1, hi=2, max_len=2))
    def test_half_forces_parity(self, m):
        if speh_halve(m) is not None:
            assert len(m) % 2 == 0
            assert rank(m) % (2 * m.line.r) == 0


class TestKernelComponents:
    def test_examples(self):
        assert kernel_components(O(RHO, (1, 2), (0, 1))) == [M(RHO, (0, 2), (1, 1))]
        assert kernel_components(O(RHO, (2, 2), (0, 0))) == [ZERO]
        assert kernel_components(O(RHO, (1, 1), (0, 0))) == [M(RHO, (0, 1))]

    def test_rejects_non_ladder_order(self):
        with pytest.raises(NotALadder):
            kernel_components(O(RHO, (0, 1), (1, 2)))

    @given(multisegments(max_segs=5))
    def test_one_entry_per_adjacent_pair(self, m):
        order = is_ladder(m)
        if order is None:
            return
        comps = kernel_components(order)
        assert len(comps) == max(len(m) - 1, 0)
        for c in comps:
            if c is not ZERO:
                assert c.support() == m.support()

    @given(multisegments(max_segs=3, lo=-2, hi=3, max_len=3))
    def test_speh_ladders_have_no_speh_kernel_component(self, half):
        m = half + half.shifted(1)
        order = is_ladder(m)
        if order is None:
            return
        for c in kernel_components(order):
            assert c is ZERO or speh_halve(c) is None


class TestJacquet:
    def test_examples(self):
        assert jacquet_decomposition(seg(RHO, 0, 2), [1, 2]) == [seg(RHO, 2, 2), seg(RHO, 0, 1)]
        assert jacquet_decomposition(seg(RHO, 0, 2), [3]) == [seg(RHO, 0, 2)]
        assert jacquet_decomposition(seg(RHO2, 0, 1), [2, 2]) == [seg(RHO2, 1, 1), seg(RHO2, 0, 0)]

    def test_errors(self):
        with pytest.raises(Indivisible):
            jacquet_decomposition(seg(RHO2, 0, 1), [1, 3])
        with pytest.raises(RankMismatch):
            jacquet_decomposition(seg(RHO, 0, 2), [1, 1])

    @given(segments(), st.data())
    def test_pieces_tile_the_segment(self, d, data):
        cuts = sorted(data.draw(st.sets(st.integers(1, d.length - 1))) if d.length > 1 else [])
        bounds = [0] + cuts + [d.length]
        parts = [d.line.r * (bounds[i + 1] - bounds[i]) for i in range(len(bounds) - 1)]
        pieces = jacquet_decomposition(d, parts)
        assert sorted(x for p in pieces for x in p.exponents()) == d.exponents()
        assert pieces[0].b == d.b and pieces[-1].a == d.a
        assert all(q.b == p.a - 1 for p, q in zip(pieces, pieces[1:]))
        assert jacquet_decomposition(d, [d.line.r * d.length]) == [d]
