import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from idemring.errors import InputError, NonPrime, Reducible, SizeExceeded
from idemring.field import is_prime, make_field, poly_rem, smallest_irreducible


def has_root(poly, p):
    return any(sum(c * pow(x, i, p) for i, c in enumerate(poly)) % p == 0 for x in range(p))


def test_f2_tables():
    F = make_field(2, 1)
    assert F.q == 2
    assert F.add_table.tolist() == [[0, 1], [1, 0]]
    assert F.mul_table.tolist() == [[0, 0], [0, 1]]


def test_f4_default_modulus_is_smallest_irreducible():
    # oracle: monic degree-2 polys over F_2 in lexicographic order (c0 first),
    # irreducible iff rootless
    candidates = [list(c) + [1] for c in itertools.product(range(2), repeat=2)]
    first = next(f for f in candidates if not has_root(f, 2))
    assert first == [1, 1, 1]
    assert list(make_field(2, 2).modulus) == first


@pytest.mark.parametrize("p,m", [(2, 3), (3, 2), (5, 2), (3, 3), (7, 2)])
def test_smallest_irreducible_low_degree_by_root_search(p, m):
    # degree <= 3: irreducible iff no root
    for low in itertools.product(range(p), repeat=m):
        f = list(low) + [1]
        if not has_root(f, p):
            break
    assert smallest_irreducible(p, m) == f


def test_non_prime_rejected():
    with pytest.raises(NonPrime):
        make_field(4, 1)


def test_reducible_modulus_rejected():
    with pytest.raises(Reducible):
        make_field(2, 2, [1, 0, 1])  # (x+1)^2


def test_bad_modulus_shape():
    with pytest.raises(InputError):
        make_field(2, 2, [1, 1])
    with pytest.raises(InputError):
        make_field(2, 2, [1, 1, 2])


def test_size_bound():
    with pytest.raises(SizeExceeded):
        make_field(2, 9)
    with pytest.raises(SizeExceeded):
        make_field(257, 1)
    assert make_field(2, 8).q == 256


def test_explicit_modulus_accepted():
    F = make_field(3, 2, [2, 2, 1])  # x^2+2x+2 is rootless over F_3
    assert F.q == 9
    assert F.check_axioms() == []


@pytest.mark.parametrize("p,m", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (2, 4)])
def test_field_axioms_exhaustive(p, m):
    F = make_field(p, m)
    assert F.check_axioms() == []
    a = np.arange(1, F.q)
    assert np.all(F.mul(a, F.inv(a)) == 1)


def test_f4_mul_matches_polynomial_arithmetic():
    F = make_field(2, 2)
    # x * x = x + 1 -> element 2 * 2 = 3
    assert F.mul(2, 2) == 3
    assert F.mul(3, 3) == 2
    assert F.inv(2) == 3


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        make_field(3).inv(0)


def test_field_sum():
    F = make_field(2, 2)
    assert F.sum([1, 2, 3], axis=0) == 0
    G = make_field(5)
    assert G.sum([4, 4, 4], axis=0) == 2


def test_is_prime():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]


def test_poly_rem():
    # x^3 + 1 = (x+1)(x^2+x+1) over F_2
    assert poly_rem([1, 0, 0, 1], [1, 1], 2) == []
    assert poly_rem([0, 0, 1], [1, 1, 1], 2) == [1, 1]


@settings(max_examples=200, deadline=None)
@given(st.sampled_from([(2, 3), (3, 2), (2, 8), (7, 1)]), st.data())
def test_distributivity_property(pm, data):
    F = make_field(*pm)
    a, b, c = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.sub(F.add(a, b), b) == a
