import random

import pytest

import oracles
from qarygraph.extlinalg import (
    SupportError,
    decompose_rank2,
    dot_ext,
    embed,
    expand,
    inverse_ext,
    inverse_fq,
    matmul_ext,
    matmul_fq,
    rank_ext,
    rank_support,
    rank_weight,
)
from qarygraph.fields import ExtField, FieldSpec
from qarygraph.spaces import span, unit, zero_space

F8 = ExtField(FieldSpec(2, 3, (1, 1, 0, 1)))
F27 = ExtField(FieldSpec(3, 3, (1, 2, 0, 1)))


def test_dot_examples():
    a = F27.alpha_pow(1)
    assert dot_ext(F27, F27.u, (a, F27.neg(1), 0)) == 0
    assert dot_ext(F27, F27.u, embed(unit(3, 0))) == 1
    assert dot_ext(F8, F8.u, (F8.alpha_pow(1), 1, 0)) == 0


def test_expand_examples():
    a = F27.alpha_pow(1)
    assert expand(F27, (a, F27.neg(1), 0)) == [[0, 1, 0], [2, 0, 0], [0, 0, 0]]
    assert expand(F8, (F8.alpha_pow(1), 1, 0)) == [[0, 1, 0], [1, 0, 0], [0, 0, 0]]
    assert expand(F8, (0, 0, 0)) == [[0, 0, 0]] * 3


def test_rank_support_examples():
    a = F27.alpha_pow(1)
    v = (a, F27.neg(1), 0)
    assert rank_support(F27, v) == span([unit(3, 0), unit(3, 1)], 3)
    assert rank_weight(F27, v) == 2
    assert rank_support(F8, (0, 0, 0)) == zero_space(2, 3)
    assert rank_weight(F8, (0, 0, 0)) == 0
    b = F8.alpha_pow
    assert rank_support(F8, (0, b(2), b(1))) == span([unit(3, 1), unit(3, 2)], 2)


@pytest.mark.parametrize("f", [F8, F27], ids=["gf8", "gf27"])
def test_rank_support_matches_oracle(f):
    rng = random.Random(f.size)
    for _ in range(300):
        v = tuple(rng.randrange(f.size) for _ in range(3))
        supp = rank_support(f, v)
        assert oracles.span_set(supp.basis, f.q, 3) == oracles.brute_rank_support(f.q, f.m, v)


def test_rank_support_is_alpha_invariant():
    rng = random.Random(2)
    for _ in range(100):
        v = tuple(rng.randrange(27) for _ in range(3))
        c = rng.randrange(1, 27)
        assert rank_support(F27, v) == rank_support(F27, tuple(F27.mul(c, x) for x in v))


def test_decompose_examples():
    e1, e2, e3 = (unit(3, i) for i in range(3))
    assert decompose_rank2(F8, (F8.alpha_pow(1), 1, 0), e2, e1) == (1, F8.alpha_pow(1))
    a2 = F27.alpha_pow(2)
    assert decompose_rank2(F27, (a2, 0, F27.neg(1)), e1, e3) == (a2, F27.neg(1))
    with pytest.raises(SupportError):
        decompose_rank2(F8, embed(e1), e1, e2)
    with pytest.raises(SupportError):
        decompose_rank2(F8, (F8.alpha_pow(1), 1, 0), e1, e1)
    with pytest.raises(SupportError):
        decompose_rank2(F8, (F8.alpha_pow(1), 1, 0), e1, e3)


def test_decompose_round_trip():
    rng = random.Random(3)
    for _ in range(200):
        x = tuple(rng.randrange(3) for _ in range(3))
        y = tuple(rng.randrange(3) for _ in range(3))
        if span([x, y], 3).dim != 2:
            continue
        a, b = rng.randrange(1, 27), rng.randrange(1, 27)
        v = tuple(F27.add(F27.mul(a, xi), F27.mul(b, yi)) for xi, yi in zip(x, y))
        if rank_weight(F27, v) != 2:
            continue
        assert decompose_rank2(F27, v, x, y) == (a, b)


def test_rank_ext_matches_oracle():
    pf = oracles.PolyField(2, (1, 1, 0, 1))
    rng = random.Random(4)
    for _ in range(200):
        r, c = rng.randint(1, 4), rng.randint(1, 5)
        m = [[rng.choice([0, 0, rng.randrange(8)]) for _ in range(c)] for _ in range(r)]
        assert rank_ext(F8, m) == pf.rank(m)
    assert rank_ext(F8, [[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3


def test_inverses():
    rng = random.Random(6)
    eye = [[1 if i == j else 0 for j in range(3)] for i in range(3)]
    done = 0
    while done < 20:
        m = [[rng.randrange(27) for _ in range(3)] for _ in range(3)]
        if rank_ext(F27, m) < 3:
            with pytest.raises(ValueError):
                inverse_ext(F27, m)
            continue
        assert matmul_ext(F27, m, inverse_ext(F27, m)) == eye
        done += 1
    b = [[1, 1, 0], [0, 1, 0], [1, 0, 1]]
    assert matmul_fq(b, inverse_fq(b, 2), 2) == eye
