import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hermes import field as ff
from hermes.errors import (
    DivisionByZero,
    FieldMismatch,
    InvalidModulus,
    NotPrime,
    NotPrimePower,
    NotQuadraticExtension,
    TooLarge,
)
from hermes.field import hermitian_field, make_field, quadratic_extension


def _has_root_free_factorization(coeffs, p):
    """Brute-force irreducibility for degree <= 3: no root in GF(p) (oracle)."""
    assert len(coeffs) - 1 in (2, 3)
    return all(sum(c * x**i for i, c in enumerate(coeffs)) % p for x in range(p))


def test_prime_field_gf2():
    f = make_field(2, 1)
    assert f.order == 2
    assert f.modulus == (0, 1)
    assert [str(x) for x in f.elements()] == ["0", "1"]


def test_gf4_modulus_is_the_only_irreducible_quadratic():
    irreducible = [
        (c0, c1, 1)
        for c0, c1 in itertools.product(range(2), repeat=2)
        if _has_root_free_factorization((c0, c1, 1), 2)
    ]
    assert irreducible == [(1, 1, 1)]
    assert make_field(2, 2).modulus == (1, 1, 1)


@pytest.mark.parametrize("p,e", [(2, 3), (3, 2), (3, 3), (5, 2), (7, 2)])
def test_modulus_is_lexicographically_smallest(p, e):
    # oracle: the first candidate in little-endian lex order without a root
    for low in itertools.product(range(p), repeat=e):
        cand = (*low, 1)
        if _has_root_free_factorization(cand, p):
            expected = cand
            break
    assert make_field(p, e).modulus == expected


def test_deterministic_construction():
    make_field.cache_clear()
    a = make_field(3, 2)
    make_field.cache_clear()
    b = make_field(3, 2)
    assert a is not b
    assert a == b and a.modulus == b.modulus


def test_not_prime():
    with pytest.raises(NotPrime):
        make_field(4, 1)


def test_too_large():
    with pytest.raises(TooLarge):
        make_field(2, 17)
    with pytest.raises(TooLarge):
        make_field(3, 2, cap=8)


def test_prime_power_factoring():
    assert ff.factor_prime_power(16) == (2, 4)
    assert ff.factor_prime_power(9) == (3, 2)
    with pytest.raises(NotPrimePower):
        ff.factor_prime_power(6)
    assert not ff.is_prime_power(1)


def test_custom_modulus():
    f = make_field(2, 3, modulus=(1, 0, 1, 1))
    assert f.modulus == (1, 0, 1, 1)
    with pytest.raises(InvalidModulus):
        make_field(2, 2, modulus=(1, 0, 1))  # x^2 + 1 = (x + 1)^2
    with pytest.raises(InvalidModulus):
        make_field(2, 2, modulus=(1, 1, 0))
    with pytest.raises(InvalidModulus):
        make_field(2, 2, modulus=(1, 1))


@pytest.mark.parametrize("q,order", [(2, 4), (3, 9), (4, 16)])
def test_quadratic_extension_sizes(q, order):
    f = hermitian_field(q)
    assert f.order == order
    assert f.base.order == q
    assert len(set(f.subfield_elements())) == q


@pytest.mark.parametrize("q", [2, 3, 4, 5, 8, 9])
def test_embedding_is_homomorphism(q):
    f = hermitian_field(q)
    b = f.base
    for x in range(q):
        for y in range(q):
            assert f.embed(b.add(x, y)) == f.add(f.embed(x), f.embed(y))
            assert f.embed(b.mul(x, y)) == f.mul(f.embed(x), f.embed(y))
    assert f.embed(0) == 0 and f.embed(1) == 1
    assert len({f.embed(x) for x in range(q)}) == q


def test_gf4_omega_arithmetic():
    f = make_field(2, 2)
    w = f("01")
    assert w * w == w + 1
    assert f.one().inverse() == f.one()


def test_conj_gf4():
    f = hermitian_field(2)
    w = f("01")
    assert w.conj() == w * w == w + 1
    assert f.zero().conj() == f.zero()
    assert f.one().conj() == f.one()


def test_conj_requires_extension():
    with pytest.raises(NotQuadraticExtension):
        make_field(3, 2).conj(1)


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        make_field(5, 1).inv(0)
    with pytest.raises(ZeroDivisionError):
        hermitian_field(3).zero().inverse()


def test_field_mismatch():
    with pytest.raises(FieldMismatch):
        ff.add(make_field(2, 2).one(), hermitian_field(2).one())
    with pytest.raises(FieldMismatch):
        make_field(3, 2).one() * make_field(3, 1).one()


def test_serialization_roundtrip():
    for f in (hermitian_field(3), hermitian_field(4), make_field(7, 1)):
        for x in range(f.order):
            assert f.parse(f.serialize(x)) == x
    assert hermitian_field(2).serialize(2) == "01"
    with pytest.raises(ValueError):
        hermitian_field(2).parse("012")
    with pytest.raises(ValueError):
        hermitian_field(2).parse("02")


def test_serialization_large_prime_is_dotted():
    f = make_field(41, 1)
    assert f.serialize(40) == "40"
    assert f.parse("17") == 17


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_conj_fixed_set_is_subfield(q):
    f = hermitian_field(q)
    fixed = [x for x in range(f.order) if f.conj(x) == x]
    assert len(fixed) == q
    assert sorted(fixed) == sorted(f.subfield_elements())


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8])
def test_multiplicative_order_full(q):
    f = hermitian_field(q)
    for x in range(1, f.order):
        assert f._pow_poly(x, f.order - 1) == 1
        assert f.pow(x, f.order - 1) == 1


@pytest.mark.parametrize("p,e", [(2, 4), (3, 2), (5, 2), (3, 3)])
def test_table_arithmetic_matches_polynomial_arithmetic(p, e):
    tabled = make_field(p, e)
    plain = ff.FieldSpec(p, e, tabled.modulus, tables=False)
    for a in range(tabled.order):
        assert tabled.neg(a) == plain.neg(a)
        if a:
            assert tabled.inv(a) == plain.inv(a)
        for b in range(tabled.order):
            assert tabled.add(a, b) == plain.add(a, b)
            assert tabled.mul(a, b) == plain.mul(a, b)


def test_untabled_extension_conj_agrees():
    tabled = hermitian_field(3)
    plain = quadratic_extension(tabled.base, tables=False)
    for x in range(tabled.order):
        assert tabled.conj(x) == plain.conj(x)


FIELDS = [hermitian_field(q) for q in (2, 3, 4, 5, 7)] + [make_field(2, 3)]


@st.composite
def triples(draw):
    f = draw(st.sampled_from(FIELDS))
    x, y, z = (draw(st.integers(0, f.order - 1)) for _ in range(3))
    return f, x, y, z


@given(triples())
@settings(max_examples=300)
def test_field_axioms(data):
    f, x, y, z = data
    add, mul = f.add, f.mul
    assert add(add(x, y), z) == add(x, add(y, z))
    assert mul(mul(x, y), z) == mul(x, mul(y, z))
    assert add(x, y) == add(y, x)
    assert mul(x, y) == mul(y, x)
    assert mul(x, add(y, z)) == add(mul(x, y), mul(x, z))
    assert add(x, f.neg(x)) == 0
    assert add(x, 0) == x and mul(x, 1) == x
    if x:
        assert mul(x, f.inv(x)) == 1


@given(triples())
@settings(max_examples=300)
def test_conj_is_automorphism_and_involution(data):
    f, x, y, _ = data
    if f.base is None:
        return
    c = f.conj
    assert c(f.mul(x, y)) == f.mul(c(x), c(y))
    assert c(f.add(x, y)) == f.add(c(x), c(y))
    assert c(c(x)) == x


def test_element_wrapper_pickles():
    import pickle

    f = hermitian_field(3)
    x = f(5)
    y = pickle.loads(pickle.dumps(x))
    assert y == x and y.field == f
