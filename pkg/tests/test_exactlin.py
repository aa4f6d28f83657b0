from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from cmarr.errors import DimensionMismatch, ZeroCovector
from cmarr.exactlin import (Subspace, common_kernel, normalize_covector,
                            rank_of, restrict_covectors_to)
from cmarr.generators import gen_G8


def test_normalize_integer_input():
    assert normalize_covector((-2, 4, -6)) == (1, -2, 3)


def test_normalize_single_entry():
    assert normalize_covector((0, 0, 5)) == (0, 0, 1)


def test_normalize_rational_input():
    assert normalize_covector((Fraction(1, 3), Fraction(-1, 6), 0)) \
        == (2, -1, 0)


def test_normalize_zero_raises():
    with pytest.raises(ZeroCovector):
        normalize_covector((0, 0, 0))


def test_rank_empty():
    assert rank_of([]) == 0


def test_rank_plane():
    assert rank_of([(1, 0), (0, 1), (1, 1)]) == 2


def test_rank_g8_is_full():
    assert rank_of(gen_G8().hyperplanes) == 3


def test_rank_mixed_dims_raises():
    with pytest.raises(DimensionMismatch):
        rank_of([(1, 0), (1, 0, 0)])


def test_common_kernel_single():
    sub = common_kernel([(1, 0, 0)])
    assert sub.dim == 2
    assert sub.basis == ((0, 1, 0), (0, 0, 1))


def test_common_kernel_two_forms():
    sub = common_kernel([(1, -1, 0), (0, 1, -1)])
    assert sub.basis == ((1, 1, 1),)


def test_common_kernel_full_rank():
    sub = common_kernel([(1, 0), (0, 1), (1, 1)])
    assert sub.dim == 0


def test_common_kernel_empty_is_full_space():
    sub = common_kernel([], dim=3)
    assert sub == Subspace.full(3)


def test_restrict_merges_covectors():
    line = Subspace(2, [(1, 1)])
    assert restrict_covectors_to(line, [(1, 0), (0, 1)]) == ((1,),)


def test_restrict_drops_vanishing():
    sub = Subspace(3, [(1, 1, 0), (0, 0, 1)])
    assert restrict_covectors_to(sub, [(1, -1, 0)]) == ()


def test_restrict_zero_sum_block():
    # differences kappa_i - kappa_j restricted to the zero-sum plane; a
    # rescaled duplicate collapses, leaving 3 covectors of rank 2
    forms = [(1, -1, 0), (1, 0, -1), (0, 1, -1), (-2, 2, 0)]
    sub = common_kernel([(1, 1, 1)])
    out = restrict_covectors_to(sub, forms)
    assert len(out) == 3
    assert rank_of(out) == 2


small_fracs = st.fractions(min_value=-50, max_value=50)


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=5),
       small_fracs.filter(lambda f: f != 0))
def test_normalize_scale_invariant(entries, scale):
    if all(x == 0 for x in entries):
        entries[0] = 1
    base = normalize_covector(entries)
    assert normalize_covector([scale * x for x in entries]) == base
    assert normalize_covector(base) == base


@given(st.lists(st.lists(st.integers(-10, 10), min_size=3, max_size=3),
                min_size=0, max_size=5))
def test_rank_plus_kernel_dimension(rows):
    rows = [r for r in rows if any(r)]
    assert rank_of(rows) + common_kernel(rows, dim=3).dim == 3


def test_restriction_rank_bounded():
    from cmarr.generators import G8_AMBIENT
    sub = common_kernel([(1, 1, 1, 1)])
    out = restrict_covectors_to(sub, G8_AMBIENT)
    assert len(out) == 25
    assert rank_of(out) == sub.dim == 3
