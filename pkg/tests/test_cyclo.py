"""Exact cyclotomic arithmetic, checked against floating point and sympy."""

import cmath
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from hopfmod import _kernels_py
from hopfmod.cyclo import (ConductorMismatch, Cyc, approx, approx_str, embed, field,
                           minimal_sqrt_conductor, restrict, sqrt_integer)

CONDUCTORS = [1, 3, 4, 8, 12, 24, 40]


def numeric(a: Cyc) -> complex:
    z = cmath.exp(2j * cmath.pi / a.F.N)
    return sum(float(c) * z ** k for k, c in enumerate(a.coeffs))


def elements(N):
    F = field(N)
    coeff = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 7))
    return st.lists(coeff, min_size=F.phi, max_size=F.phi).map(F.element)


def test_degree_matches_totient():
    for N in CONDUCTORS:
        assert field(N).phi == sympy.totient(N)


def test_field_cache_returns_same_object():
    assert field(24) is field(24)


def test_zeta_is_primitive_root():
    F = field(12)
    z = F.zeta()
    assert z ** 12 == F.one
    assert all(z ** k != F.one for k in range(1, 12))
    assert F.root_of_unity(1, 4) ** 2 == -F.one


@pytest.mark.parametrize("N", [3, 8, 24, 40])
@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_ring_operations_match_complex(N, data):
    a = data.draw(elements(N))
    b = data.draw(elements(N))
    assert abs(numeric(a * b) - numeric(a) * numeric(b)) < 1e-6 * (1 + abs(numeric(a) * numeric(b)))
    assert abs(numeric(a + b) - numeric(a) - numeric(b)) < 1e-9 * (1 + abs(numeric(a)) + abs(numeric(b)))
    if a:
        assert a * a.inverse() == field(N).one
        assert b / a * a == b


@settings(max_examples=30, deadline=None)
@given(elements(24))
def test_galois_conjugation_is_complex_conjugation(a):
    assert abs(numeric(a.conj()) - numeric(a).conjugate()) < 1e-9 * (1 + abs(numeric(a)))
    assert a.galois(5).galois(5) == a


def test_galois_rejects_non_units():
    with pytest.raises(ValueError):
        field(12).zeta().galois(2)


def test_norm_is_rational():
    F = field(8)
    a = F.one + F.zeta()
    assert isinstance(a.norm(), Fraction)
    assert a.norm() == 2


@pytest.mark.parametrize("l", [2, 3, 5, 7, 12, 20])
def test_sqrt_integer_exact_and_positive(l):
    N = minimal_sqrt_conductor(l) or 1
    r = sqrt_integer(l, N * 2)
    assert r * r == r.F.from_int(l)
    assert approx(r)[0] > 0


def test_minimal_sqrt_conductors():
    # Q(sqrt 5) has conductor 5, Q(sqrt 3) has 12, Q(sqrt 2) has 8
    assert [minimal_sqrt_conductor(l) for l in (5, 3, 2, 4)] == [5, 12, 8, 1]


def test_sqrt_in_too_small_field_raises():
    with pytest.raises(ConductorMismatch):
        sqrt_integer(3, 3)


def test_embed_and_restrict_roundtrip():
    F = field(3)
    a = F.zeta() + F.from_fraction(Fraction(2, 5))
    b = embed(a, 24)
    assert b.conductor == 24
    assert abs(numeric(a) - numeric(b)) < 1e-12
    assert restrict(b, 3) == a
    assert restrict(embed(field(8).zeta(), 24), 3) is None


def test_mixed_conductor_arithmetic_is_rejected_or_lifted():
    a, b = field(3).zeta(), field(4).zeta()
    try:
        c = a * b
    except ConductorMismatch:
        return
    assert abs(numeric(c) - numeric(a) * numeric(b)) < 1e-12


def test_json_roundtrip_is_exact():
    F = field(40)
    a = F.zeta(3) * F.from_fraction(Fraction(-7, 9)) + F.one
    assert Cyc.from_json(a.to_json()) == a


def test_approx_str_digits():
    re, im = approx_str(field(4).zeta(), 10)
    assert float(re) == 0 and float(im) == 1.0


def test_integer_coercion_and_hash():
    F = field(8)
    assert F.coerce(3) == F.from_int(3)
    assert len({F.from_int(2), F.from_fraction(Fraction(4, 2))}) == 1


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_compiled_and_pure_kernels_agree(data):
    kc = pytest.importorskip("hopfmod._kernels")
    F = field(24)
    vec = st.tuples(*[st.integers(-50, 50)] * F.phi)
    ac, bc = data.draw(vec), data.draw(vec)
    ad, bd = data.draw(st.integers(1, 9)), data.draw(st.integers(1, 9))
    assert kc.cmul(ac, ad, bc, bd, F.phi, F.red) == _kernels_py.cmul(ac, ad, bc, bd, F.phi, F.red)
    assert kc.cadd(ac, ad, bc, bd) == _kernels_py.cadd(ac, ad, bc, bd)
    assert kc.csub(ac, ad, bc, bd) == _kernels_py.csub(ac, ad, bc, bd)
