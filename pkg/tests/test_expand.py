import pytest
from hypothesis import given

from conftest import thick_ribbons
from thickribbons import (
    HExpansion,
    ThickRibbon,
    antipodal,
    coarsenings,
    equivalent,
    expand_determinant,
    expand_poset,
    expand_recursive,
    parse_ribbon,
    to_skew_shape,
)

SEVEN_TERMS = {
    (3, 3, 3, 1): 1,
    (5, 3, 1, 1): -2,
    (4, 3, 3): -1,
    (7, 1, 1, 1): 1,
    (8, 1, 1): -1,
    (5, 4, 1): 1,
    (6, 3, 1): 1,
}

SIX_TERMS = {
    (3, 2, 2, 1): 1,
    (3, 3, 2): -1,
    (4, 2, 1, 1): -1,
    (5, 3): 1,
    (6, 1, 1): 1,
    (7, 1): -1,
}


def test_recursive_worked_example():
    assert expand_recursive(parse_ribbon("3|3|3,1", 2)).as_dict() == SEVEN_TERMS


def test_recursive_cancellation_example():
    assert expand_recursive(parse_ribbon("1,2,2|3", 2)).as_dict() == SIX_TERMS
    assert expand_recursive(parse_ribbon("1,2|3,2", 2)).as_dict() == SIX_TERMS


def test_recursive_single_row():
    assert expand_recursive(ThickRibbon(((9,),), 2)).as_dict() == {(9,): 1}


def test_poset_examples():
    assert expand_poset(parse_ribbon("1,2,2|3", 2)).as_dict() == SIX_TERMS
    assert expand_poset(parse_ribbon("3|3|3,1", 2)).as_dict() == SEVEN_TERMS
    two_rows = ThickRibbon(((2, 5),), 2)
    assert expand_poset(two_rows).as_dict() == {(5, 2): 1, (7,): -1}


def test_poset_cancellation_is_real():
    # both length-2 coarsenings hitting (4, 3, 1) exist and cancel
    d = parse_ribbon("1,2,2|3", 2)
    pairs = {(str(c), k) for c, k in coarsenings(d)}
    assert ("1,4|3", 0) in pairs and ("3,4", 1) in pairs
    assert expand_poset(d).coeff((4, 3, 1)) == 0


def test_determinant_examples():
    shape = to_skew_shape(ThickRibbon(((4, 6),), 2))
    assert expand_determinant(shape).as_dict() == {(6, 4): 1, (10,): -1}
    assert expand_determinant(to_skew_shape(parse_ribbon("3|3|3,1", 2))).as_dict() == SEVEN_TERMS
    from thickribbons import SkewShape

    assert expand_determinant(SkewShape((5,), ())).as_dict() == {(5,): 1}


def test_coeff_examples():
    e = expand_recursive(parse_ribbon("3|3|3,1", 2))
    assert e.coeff((5, 3, 1, 1)) == -2
    assert e.coeff((2, 2, 2, 2, 2)) == 0
    assert expand_recursive(parse_ribbon("1,2,2|3", 2)).coeff((5, 3)) == 1


def test_equivalent_examples():
    assert equivalent(parse_ribbon("1,2,2|3", 2), parse_ribbon("1,2|3,2", 2))
    assert not equivalent(parse_ribbon("3|3", 2), parse_ribbon("3|4", 2))
    with pytest.raises(ValueError):
        equivalent(parse_ribbon("3|3", 2), parse_ribbon("3|3", 3))


@given(thick_ribbons())
def test_triple_oracle_agreement(d):
    reference = expand_recursive(d)
    assert expand_poset(d) == reference
    assert expand_determinant(to_skew_shape(d)) == reference


@given(thick_ribbons())
def test_antipodal_invariance(d):
    assert expand_recursive(antipodal(d)) == expand_recursive(d)


@given(thick_ribbons())
def test_homogeneity(d):
    e = expand_recursive(d)
    assert e.degree == d.size
    assert all(sum(lam) == d.size for lam, _ in e.terms)
    assert all(c != 0 for _, c in e.terms)


@given(thick_ribbons())
def test_leading_term(d):
    """The segment-size partition is the unique shortest support partition
    free of m-1 parts, and its coefficient is (-1)^(length + segments)."""
    e = expand_recursive(d)
    seg_sizes = tuple(sorted((sum(s) for s in d.segments), reverse=True))
    sign = -1 if (d.length + len(d.segments)) % 2 else 1
    assert e.coeff(seg_sizes) == sign
    if len(d.segments) > 1:  # dotted diagrams: every segment size >= m
        free = [lam for lam, _ in e.terms if (d.m - 1) not in lam]
        shortest = min(len(lam) for lam in free)
        assert [lam for lam in free if len(lam) == shortest] == [seg_sizes]


def test_serialization_order_and_str():
    e = expand_recursive(parse_ribbon("3|3|3,1", 2))
    obj = e.to_json_obj()
    assert obj["degree"] == 10
    partitions = [tuple(t["partition"]) for t in obj["terms"]]
    assert partitions == sorted(partitions, reverse=True)
    assert str(e) == (
        "-h8*h1^2 + h7*h1^3 + h6*h3*h1 + h5*h4*h1 - 2*h5*h3*h1^2 "
        "- h4*h3^2 + h3^3*h1"
    )


def test_from_dict_rejects_inhomogeneous():
    with pytest.raises(ValueError):
        HExpansion.from_dict(4, {(3,): 1})
