import pytest
from hypothesis import given, settings

from conftest import one_dot_ribbons
from thickribbons import (
    SkewShape,
    count_standard_tableaux,
    equivalent,
    equivalent_by_kostka,
    kostka_vector,
    parse_one_dot,
    partitions_of,
    to_skew_shape,
)
from thickribbons.tableaux import count_fillings


def test_single_row_all_ones():
    kv = kostka_vector(SkewShape((6,), ()))
    assert dict(kv.entries) == {nu: 1 for nu in partitions_of(6)}


def test_single_column():
    kv = kostka_vector(SkewShape((1, 1, 1, 1), ()))
    assert kv.entries == (((1, 1, 1, 1), 1),)


def test_equivalent_pair_has_equal_vectors():
    a = kostka_vector(to_skew_shape(parse_one_dot("1,2,2|3", 2)))
    b = kostka_vector(to_skew_shape(parse_one_dot("1,2|3,2", 2)))
    assert a == b


def test_equivalent_by_kostka_examples():
    assert equivalent_by_kostka(
        parse_one_dot("1,2,2|3", 2), parse_one_dot("1,2|3,2", 2)
    )
    d = parse_one_dot("2|3,1", 2)
    assert equivalent_by_kostka(d, d)
    # different sorted row multisets force inequivalence
    assert not equivalent_by_kostka(
        parse_one_dot("2|2,1", 2), parse_one_dot("2|3", 2)
    )


def test_size_guard():
    big = SkewShape((11,), ())
    with pytest.raises(ValueError):
        kostka_vector(big)
    assert kostka_vector(big, max_cells=11).count((11,)) == 1


def test_guard_on_equivalence():
    d = parse_one_dot("3,3|3,3", 2)
    with pytest.raises(ValueError):
        equivalent_by_kostka(d, d)


@given(one_dot_ribbons(max_extra=1))
@settings(max_examples=25)
def test_standard_count_matches_all_ones_content(d):
    shape = to_skew_shape(d)
    if shape.size > 9:
        return
    ones = (1,) * shape.size
    assert count_fillings(shape, ones) == count_standard_tableaux(shape)


@given(one_dot_ribbons(max_extra=1), one_dot_ribbons(max_extra=1))
@settings(max_examples=25)
def test_agrees_with_expansion_equivalence(d, e):
    if d.m != e.m or d.size != e.size or d.size > 9:
        return
    assert equivalent_by_kostka(d, e) == equivalent(d.ribbon(), e.ribbon())
