import itertools

import pytest
from hypothesis import given, settings

from conftest import one_dot_ribbons
from thickribbons import (
    OneDotRibbon,
    antipodal,
    classify,
    classify_equal,
    classify_unequal,
    element_type,
    integer_classes,
    is_canonical,
    parse_one_dot,
    period,
    recovered_components,
    sign_table,
    sign_table_from_coarsenings,
)

TABLE_EXAMPLE = parse_one_dot("1,3,2|4,2,1,2,2", 2)


def test_period_examples():
    assert period(parse_one_dot("3,1,4,1,2|3,1,2", 2)) == 5
    assert period(TABLE_EXAMPLE) == 5
    equal = parse_one_dot("1,3|2,2", 2)
    assert period(equal) == equal.size_alpha - equal.m + 1


def test_sign_table_paper_example():
    t = sign_table(TABLE_EXAMPLE)
    assert sorted(t.plus) == [1, 4, 9, 11, 12, 14]
    assert [t.sign(x) for x in t.domain] == list("+--+----+-++-+-")


def test_sign_table_two_single_rows():
    t = sign_table(parse_one_dot("4|6", 2))
    assert not t.plus


def test_sign_table_glued_formula():
    t = sign_table(parse_one_dot("3,1,4,1,2|3,1,2", 2))
    assert sorted(t.plus) == [3, 4, 8, 9, 13, 14]


@given(one_dot_ribbons(max_extra=2))
@settings(max_examples=40)
def test_sign_table_matches_coarsening_definition(d):
    assert sign_table(d) == sign_table_from_coarsenings(d)


@given(one_dot_ribbons())
def test_forced_minus_positions(d):
    t = sign_table(d)
    assert not t.is_plus(d.size_alpha - d.m + 1)
    assert not t.is_plus(d.size_alpha)


@given(one_dot_ribbons())
def test_components_recovered_from_signs(d):
    assert recovered_components(sign_table(d)) == (d.alpha, d.beta)


def test_element_type_examples():
    t = sign_table(TABLE_EXAMPLE)
    assert element_type(t, 4) == 2
    assert element_type(t, 1) == 1
    assert element_type(t, 3) == 0
    assert [element_type(t, x) for x in t.domain] == [
        1, 1, 0, 2, 1, 0, 1, 0, 1, 0, 1, 2, 0, 1, 1,
    ]


def test_integer_classes_example():
    ic = integer_classes(TABLE_EXAMPLE)
    assert ic.r == 5
    assert ic.block_of(1) == (1, 5, 6, 10, 11, 15)


def test_integer_classes_mod_one_collapse():
    d = parse_one_dot("2|3", 2)  # r = gcd(1, 2) = 1
    ic = integer_classes(d)
    assert ic.r == 1
    assert len(ic.blocks) == 1


@given(one_dot_ribbons(max_extra=2))
def test_integer_classes_residue_characterization(d):
    ic = integer_classes(d)
    r, m = ic.r, d.m
    top = d.size - m
    for i, j in itertools.combinations(range(1, top + 1), 2):
        same = ic.block_of(i) == ic.block_of(j)
        rule = (i - j) % r == 0 or (i - (m - 1 - j)) % r == 0
        assert same == rule


@given(one_dot_ribbons(max_extra=2))
def test_blocks_meet_first_period(d):
    ic = integer_classes(d)
    r, m = ic.r, d.m
    for block in ic.blocks:
        i = block[0]
        met = [x for x in block if 1 <= x <= r]
        expected = 1 if (2 * i - (m - 1)) % r == 0 else 2
        assert len(met) == expected


def test_classify_unequal_examples():
    tax = classify_unequal(parse_one_dot("3,1,4,1,2|3,1,2", 2))
    assert set(tax.labels) <= {"A", "C"}
    # two bare rows: all signs -, every class purely even type
    tax = classify_unequal(parse_one_dot("4|6", 2))
    assert set(tax.labels) == {"C"}
    with pytest.raises(ValueError):
        classify_unequal(parse_one_dot("3|3", 2))


def test_classify_unequal_stable_on_canonical_class_members():
    # the class of 1,2,2|3 has two canonical members with different signs
    first = classify_unequal(parse_one_dot("3|2,2,1", 2))
    second = classify_unequal(parse_one_dot("1,2|3,2", 2))
    assert first == second
    assert first.labels == ("A",)


def test_classify_equal_examples():
    # self-rotating diagram: every class purely even
    tax = classify_equal(parse_one_dot("1,2|2,1", 2))
    assert set(tax.labels) == {"C"}
    # rotation-asymmetric: some A or B class must appear
    tax = classify_equal(parse_one_dot("1,2|3", 2))
    assert "A" in tax.labels or "B" in tax.labels
    assert tax.r == 2
    with pytest.raises(ValueError):
        classify_equal(parse_one_dot("2|3", 2))


def test_classify_dispatch():
    assert classify(parse_one_dot("1,2|3", 2)).case == "equal"
    assert classify(parse_one_dot("2|3", 2)).case == "unequal"


def test_canonical_unequal_examples():
    assert not is_canonical(parse_one_dot("1,2,2|3", 2))
    assert is_canonical(parse_one_dot("3|2,2,1", 2))


def test_canonical_equal_examples():
    assert is_canonical(parse_one_dot("1,2|2,1", 2))  # equals its rotation
    assert is_canonical(parse_one_dot("1,2|3", 2))
    assert not is_canonical(parse_one_dot("3|2,1", 2))


@given(one_dot_ribbons())
def test_exactly_one_of_pair_is_canonical(d):
    mate = antipodal(d)
    if mate == d:
        assert is_canonical(d)
    else:
        assert is_canonical(d) != is_canonical(mate)


@given(one_dot_ribbons())
def test_taxonomy_blocks_depend_only_on_invariants(d):
    """The position classes of a diagram and its rotation coincide."""
    assert integer_classes(d).blocks == integer_classes(antipodal(d)).blocks
