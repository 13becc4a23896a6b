import random

import pytest
from hypothesis import given, settings, strategies as st

import oracles
from qarygraph.fields import (
    DEFAULT_MODULI,
    ExtField,
    FieldError,
    FieldSpec,
    check_spec,
    split_entries,
    u_vector,
)

GF8 = FieldSpec(2, 3, (1, 1, 0, 1))
GF27 = FieldSpec(3, 3, (1, 2, 0, 1))
SPECS = [FieldSpec(q, m, mod) for (q, m), mod in sorted(DEFAULT_MODULI.items())]


@pytest.fixture(scope="module", params=SPECS, ids=str)
def field(request):
    return ExtField(request.param)


def test_products_from_examples():
    f8, f27 = ExtField(GF8), ExtField(GF27)
    a = f8.alpha_pow(1)
    assert f8.coords(f8.mul(a, f8.mul(a, a))) == (1, 1, 0)
    b = f27.alpha_pow(1)
    assert f27.coords(f27.mul(b, f27.mul(b, b))) == (2, 1, 0)


def test_alpha_pow_and_log_examples():
    f8, f27 = ExtField(GF8), ExtField(GF27)
    assert f8.coords(f8.alpha_pow(6)) == (1, 0, 1)
    assert f8.alpha_pow(7) == 1
    assert f27.alpha_pow(26) == 1
    assert f8.log(f8.element((1, 0, 1))) == 6
    assert f8.log(1) == 0
    assert f27.log(f27.alpha_pow(1)) == 1
    with pytest.raises((ValueError, ZeroDivisionError)):
        f8.log(0)


def test_alpha_pow_matches_repeated_multiplication(field):
    q, mod = field.q, field.spec.modulus
    for k in range(field.N + 2):
        want = oracles.coeffs_to_int(oracles.alpha_power_coeffs(k, mod, q), q)
        assert field.alpha_pow(k) == want


def test_arithmetic_matches_polynomial_oracle(field):
    pf = oracles.PolyField(field.q, field.spec.modulus)
    rng = random.Random(field.size)
    for _ in range(200):
        a, b = rng.randrange(field.size), rng.randrange(field.size)
        assert field.add(a, b) == pf.add(a, b)
        assert field.mul(a, b) == pf.mul(a, b)
        assert field.neg(a) == pf.neg(a)
        assert field.mul(a, b) == field.polymul(a, b)


def test_inverse_law(field):
    rng = random.Random(0)
    for _ in range(20):
        a = rng.randrange(1, field.size)
        assert field.mul(a, field.inv(a)) == 1
    with pytest.raises(ZeroDivisionError):
        field.inv(0)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 80), st.integers(0, 80), st.integers(0, 80))
def test_field_axioms_gf81(a, b, c):
    f = ExtField(FieldSpec.default(3, 4))
    assert f.add(a, f.add(b, c)) == f.add(f.add(a, b), c)
    assert f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c))
    assert f.add(a, f.neg(a)) == 0
    assert f.sub(f.add(a, b), b) == a


def test_base_field_embedding(field):
    for c in range(field.q):
        assert field.is_base(c)
        assert field.coords(c)[0] == c
    assert sum(field.is_base(a) for a in field.elements()) == field.q


def test_check_spec_examples():
    assert check_spec(GF8).ok
    assert check_spec(GF27).ok
    rep = check_spec(FieldSpec(2, 3, (1, 0, 0, 1)))
    assert not rep.ok and not rep.irreducible
    assert "reducible" in rep.message


@pytest.mark.parametrize("spec,needle", [
    (FieldSpec(4, 2, (1, 1, 1)), "not prime"),
    (FieldSpec(2, 3, (1, 1, 1)), "coefficients"),
    (FieldSpec(2, 3, (1, 1, 0, 0)), "monic"),
    (FieldSpec(2, 3, (0, 1, 0, 1)), "divisible by x"),
    (FieldSpec(3, 2, (1, 0, 3)), "[0, 3)"),
    # x^4+x^3+x^2+x+1 is irreducible but x has order 5
    (FieldSpec(2, 4, (1, 1, 1, 1, 1)), "not primitive"),
])
def test_check_spec_rejections(spec, needle):
    rep = check_spec(spec)
    assert not rep.ok
    assert needle in rep.message
    with pytest.raises(FieldError):
        ExtField(spec)


def test_all_default_moduli_verify():
    for spec in SPECS:
        assert check_spec(spec).ok, spec


def test_spec_text_round_trip():
    line = "field q=2 m=3 modulus=1,1,0,1"
    assert FieldSpec.parse(line) == GF8
    assert str(GF8) == line
    for bad in ("field q=2 m=3", "q=2 m=3 modulus=1,1,0,1", "field q=2 m=3 modulus=1,,1"):
        with pytest.raises(FieldError):
            FieldSpec.parse(bad)
    with pytest.raises(FieldError):
        FieldSpec.default(5, 2)


def test_u_vector():
    f8 = ExtField(GF8)
    a = f8.alpha_pow
    assert u_vector(f8) == (1, a(1), a(2))
    assert u_vector(ExtField(FieldSpec.default(2, 1))) == (1,)
    f27 = ExtField(GF27)
    assert [f27.coords(x) for x in u_vector(f27)] == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]


def test_entry_text(field):
    for a in field.elements():
        assert field.parse(field.format(a)) == a
        assert field.parse(field.format(a, coords=True)) == a
    assert field.format(0) == "0"
    assert field.format(1) == "a^0"


def test_entry_parse_forms():
    f = ExtField(GF27)
    assert f.parse("a") == f.alpha_pow(1)
    assert f.parse("-1") == 2
    assert f.parse("-a^2") == f.neg(f.alpha_pow(2))
    assert f.parse("(2,1,0)") == f.alpha_pow(3)
    for bad in ("b", "a^x", "(1,2)", "3"):
        with pytest.raises(FieldError):
            f.parse(bad)


def test_split_entries():
    assert split_entries("a^1, 0 ,a^2") == ["a^1", "0", "a^2"]
    assert split_entries("(1,0,1) a^3  0") == ["(1,0,1)", "a^3", "0"]
