import itertools
import warnings
from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermes import counting as ct
from hermes.errors import RadiusOutOfRange, UnsupportedRadius
from hermes.field import hermitian_field, make_field
from hermes.hermitian import enumerate_hermitian

GRID_Q = (2, 3, 4, 5, 7, 8, 9)
GRID_N = range(1, 13)


def count_lines(f, dim):
    """Number of 1-dimensional subspaces of GF(f)^dim by normalising vectors."""
    reps = set()
    for v in itertools.product(range(f.order), repeat=dim):
        lead = next((x for x in v if x), None)
        if lead is None:
            continue
        s = f.inv(lead)
        reps.add(tuple(f.mul(s, x) for x in v))
    return len(reps)


def count_subspaces_gf2(dim, k):
    """Number of k-dimensional subspaces of GF(2)^dim by spanning every k-subset."""
    vecs = range(1, 2**dim)
    spans = set()
    for gens in itertools.combinations(vecs, k):
        span = {0}
        for g in gens:
            span |= {x ^ g for x in span}
        if len(span) == 2**k:
            spans.add(frozenset(span))
    return len(spans)


def census(q, n):
    return Counter(a.rank() for a in enumerate_hermitian(n, hermitian_field(q)))


def test_gaussian_binomial_examples():
    gf4 = make_field(2, 2)
    assert ct.gaussian_binomial(3, 5, 0) == 1
    assert ct.gaussian_binomial(4, 2, 1) == 5 == count_lines(gf4, 2)
    assert ct.gaussian_binomial(4, 3, 1) == 21 == count_lines(gf4, 3)
    assert ct.gaussian_binomial(2, 4, 2) == count_subspaces_gf2(4, 2) == 35
    assert ct.gaussian_binomial(2, 3, 4) == 0
    assert ct.gaussian_binomial(2, 3, -1) == 0


@given(st.integers(2, 20), st.integers(0, 15), st.data())
def test_gaussian_binomial_symmetry_and_pascal(b, n, data):
    m = data.draw(st.integers(0, n))
    assert ct.gaussian_binomial(b, n, m) == ct.gaussian_binomial(b, n, n - m)
    if n >= 1 and m >= 1:
        assert ct.gaussian_binomial(b, n, m) == ct.gaussian_binomial(b, n - 1, m - 1) + b**m * ct.gaussian_binomial(
            b, n - 1, m
        )


def test_binomial_bounds_examples():
    br = ct.binomial_bounds(2, 2, 1)
    assert (br.lower, br.upper) == (4, 16)
    assert ct.gaussian_binomial(4, 2, 1) in br
    assert (ct.binomial_bounds(3, 4, 0).lower, ct.binomial_bounds(3, 4, 0).upper) == (1, 9)
    br = ct.binomial_bounds(3, 4, 2)
    assert (br.lower, br.upper) == (3**8, 3**10)
    assert ct.gaussian_binomial(9, 4, 2) in br


@pytest.mark.parametrize("q,n", [(2, 2), (2, 3), (3, 2)])
def test_sphere_sizes_match_enumeration(q, n):
    c = census(q, n)
    assert [ct.sphere_size(q, n, t) for t in range(n + 1)] == [c[t] for t in range(n + 1)]


def test_sphere_size_values():
    assert [ct.sphere_size(2, 2, t) for t in range(3)] == [1, 5, 10]
    assert [ct.sphere_size(2, 3, t) for t in range(4)] == [1, 21, 210, 280]
    for q in GRID_Q:
        for n in (1, 5):
            assert ct.sphere_size(q, n, 0) == 1


def test_ball_size_values():
    assert ct.ball_size(2, 2, 0) == 1
    assert ct.ball_size(2, 2, 1) == 6 == 1 + (2**4 - 1) // 3
    for q in (2, 3):
        for n in (1, 2, 3):
            assert ct.ball_size(q, n, n) == q ** (n * n)


def test_ball_closed_form_examples():
    assert ct.ball_size_closed_form(2, 2, 1) == 6
    c = census(3, 2)
    assert ct.ball_size_closed_form(3, 2, 1) == 21 == c[0] + c[1]
    c = census(2, 3)
    assert ct.ball_size_closed_form(2, 3, 2) == 232 == c[0] + c[1] + c[2]
    with pytest.raises(UnsupportedRadius):
        ct.ball_size_closed_form(2, 3, 3)
    with pytest.raises(RadiusOutOfRange):
        ct.ball_size_closed_form(2, 1, 2)


def test_bracket_examples():
    br = ct.sphere_bounds(2, 2, 1)
    assert (br.lower, br.upper) == (2**2, 2**6) and 5 in br
    br = ct.sphere_bounds(2, 5, 0)
    assert (br.lower, br.upper) == (1, 4) and 1 in br
    br = ct.ball_bounds(3, 4, 2)
    assert (br.lower, br.upper) == (3**10, 3**17)
    assert ct.ball_size(3, 4, 2) in br
    assert ct.sphere_size(2, 2, 2) in ct.sphere_bounds(2, 2, 2)
    assert (ct.sphere_bounds(2, 2, 2).lower, ct.sphere_bounds(2, 2, 2).upper) == (2**2, 2**8)


def test_t_equals_n_edge():
    for q in GRID_Q:
        for n in GRID_N:
            br = ct.ball_bounds(q, n, n)
            assert (br.lower, br.upper) == (q ** (n * (n - 1)), q ** (n * (n + 1) + 3))
            assert q ** (n * n) in br


def test_radius_errors():
    with pytest.raises(RadiusOutOfRange):
        ct.sphere_size(2, 2, 3)
    with pytest.raises(RadiusOutOfRange):
        ct.ball_size(2, 2, -1)
    with pytest.raises(RadiusOutOfRange):
        ct.sphere_bounds(2, 2, 3)


def test_non_prime_power_is_flagged_but_evaluated():
    with pytest.warns(ct.NotPrimePowerWarning):
        s = ct.sphere_size(6, 2, 1)
    assert s == ct.gaussian_binomial(36, 2, 1) * 5
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        ct.sphere_size(9, 2, 1)


def test_partition_identity_grid():
    for q in GRID_Q:
        for n in GRID_N:
            assert sum(ct.sphere_size(q, n, t) for t in range(n + 1)) == q ** (n * n)


def test_bracket_containment_grid():
    for q in GRID_Q:
        for n in GRID_N:
            for t in range(n + 1):
                assert ct.gaussian_binomial(q * q, n, t) in ct.binomial_bounds(q, n, t)
                assert ct.sphere_size(q, n, t) in ct.sphere_bounds(q, n, t)
                assert ct.ball_size(q, n, t) in ct.ball_bounds(q, n, t)


def test_closed_forms_grid():
    for q in GRID_Q:
        for n in GRID_N:
            for t in (1, 2):
                if t <= n:
                    assert ct.ball_size_closed_form(q, n, t) == ct.ball_size(q, n, t)


def test_bracket_type():
    with pytest.raises(ValueError):
        ct.BoundBracket(3, 2)
    assert ct.BoundBracket(1, 8).clipped() == ct.BoundBracket(1, 1)


def test_packing_radius_and_power_of():
    assert [ct.packing_radius(d) for d in range(1, 8)] == [0, 0, 1, 1, 2, 2, 3]
    assert ct.power_of(512, 2) == 9
    assert ct.power_of(1, 7) == 0
    assert ct.power_of(24, 2) is None
