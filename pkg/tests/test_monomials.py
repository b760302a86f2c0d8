import pytest
from hypothesis import given
from hypothesis import strategies as st

from axes_ideals.errors import InputError
from axes_ideals.monomials import (
    as_vector,
    degree,
    divides,
    format_product,
    format_vector,
    iter_vectors,
    iter_vectors_of_degree,
    lcm,
    multiply,
    parse_monomial,
)


def test_divides_examples():
    assert divides((1, 1, 0), (2, 1, 1))
    assert divides((0, 0, 0), (5, 0, 7))
    assert not divides((2, 0), (1, 3))


def test_divides_dimension_mismatch():
    with pytest.raises(InputError):
        divides((1, 0), (1, 0, 0))


def test_lcm_examples():
    assert lcm((1, 0, 2), (0, 3, 1)) == (1, 3, 2)
    assert lcm((2, 5), (2, 5)) == (2, 5)
    assert lcm((0, 0), (1, 1)) == (1, 1)


def test_multiply():
    assert multiply((1, 0), (0, 1)) == (1, 1)
    assert multiply((2, 3), (0, 0)) == (2, 3)


def test_as_vector_rejects_bad_entries():
    with pytest.raises(InputError):
        as_vector((1, -1))
    with pytest.raises(InputError):
        as_vector(())
    with pytest.raises(InputError):
        as_vector((1.5, 2))


def test_parse_vector_form():
    assert parse_monomial("[2,1,1]", 3) == (2, 1, 1)
    assert parse_monomial(" [0, 4 ,0] ", 3) == (0, 4, 0)
    with pytest.raises(InputError):
        parse_monomial("[1,2]", 3)
    with pytest.raises(InputError):
        parse_monomial("[1,-2,0]", 3)
    with pytest.raises(InputError):
        parse_monomial("[]", 2)


def test_parse_product_form():
    assert parse_monomial("x1^2*x2*x3", 3) == (2, 1, 1)
    assert parse_monomial("x2", 3) == (0, 1, 0)
    assert parse_monomial("x1*x1", 2) == (2, 0)
    assert parse_monomial("1", 4) == (0, 0, 0, 0)
    with pytest.raises(InputError):
        parse_monomial("x4", 3)
    with pytest.raises(InputError):
        parse_monomial("y1", 3)
    with pytest.raises(InputError):
        parse_monomial("", 3)


def test_format_round_trip():
    vec = (2, 0, 3)
    assert format_vector(vec) == "[2,0,3]"
    assert parse_monomial(format_vector(vec), 3) == vec
    assert format_product(vec) == "x1^2*x3^3"
    assert parse_monomial(format_product(vec), 3) == vec
    assert format_product((0, 0)) == "1"


@given(st.lists(st.integers(0, 9), min_size=1, max_size=6))
def test_format_parse_inverse(entries):
    vec = tuple(entries)
    assert parse_monomial(format_vector(vec), len(vec)) == vec
    assert parse_monomial(format_product(vec), len(vec)) == vec


@given(
    st.integers(1, 4).flatmap(
        lambda n: st.tuples(
            st.lists(st.integers(0, 8), min_size=n, max_size=n),
            st.lists(st.integers(0, 8), min_size=n, max_size=n),
        )
    )
)
def test_lcm_properties(pair):
    a, b = tuple(pair[0]), tuple(pair[1])
    ab = lcm(a, b)
    assert ab == lcm(b, a)
    assert divides(a, ab) and divides(b, ab)
    assert lcm(a, a) == a


def test_iter_vectors_counts():
    # C(d+n, n) vectors of degree <= d in n variables
    assert len(list(iter_vectors(3, 2))) == 10
    assert len(list(iter_vectors(2, 5))) == 21
    vecs = list(iter_vectors(3, 4))
    assert len(vecs) == len(set(vecs))
    assert all(degree(v) <= 4 for v in vecs)


def test_iter_vectors_of_degree():
    vecs = list(iter_vectors_of_degree(3, 2))
    assert len(vecs) == 6
    assert all(degree(v) == 2 for v in vecs)
