import pytest
from hypothesis import given, settings, strategies as st

from classpres.field import (discrete_log, find_gamma, lemma_xy, lemma_xy_conditions, make_tower,
                             minimal_polynomial, poly_eval, subfield_expression, tower_for_q)

from oracles import FROZEN, gf8_log_one_minus_gen

QS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]


def test_gf4_generator_satisfies_x2_x_1():
    T = make_tower(2, 1)
    E = T.ext
    w = E.gen
    assert E.add(E.add(E.mul(w, w), w), 1) == 0
    assert T.base.size if hasattr(T.base, "size") else True


def test_gf9_zeta():
    T = make_tower(3, 1)
    E = T.ext
    zeta = E.prim_pow(2)
    assert E.mul(zeta, zeta) == E.prim_pow(4) == T.embed(T.base.gen)
    assert E.add(zeta, E.pow(zeta, 3)) == 0
    assert FROZEN["gf9_trace_zero"][0]


def test_gf5_omega0_primitive():
    T = make_tower(5, 1)
    assert T.base.coeffs(T.base.gen)[0] in FROZEN["gf5_primitive"]
    assert T.restrict(T.ext.prim_pow(6)) == T.base.gen


def test_discrete_log_examples():
    F = make_tower(5, 1).base
    assert discrete_log(F, F.from_int(4), F.from_int(2)) == 2
    assert discrete_log(F, 1, F.from_int(3)) == 0
    G = make_tower(2, 3).base
    w0 = G.gen
    c = discrete_log(G, G.sub(1, w0), w0)
    assert G.pow(w0, c) == G.sub(1, w0)
    # independent scan with the same modulus
    assert c == gf8_log_one_minus_gen(G.modulus if hasattr(G, "modulus") else G.mod)


def test_discrete_log_errors():
    F = make_tower(7, 1).base
    with pytest.raises(ValueError):
        discrete_log(F, 0, F.gen)
    # 2 generates the squares mod 7; 3 is not a square
    with pytest.raises(ValueError):
        discrete_log(F, F.from_int(3), F.from_int(2))


def test_minimal_polynomial():
    T = make_tower(2, 1)
    assert minimal_polynomial(T.ext, T.ext.gen) == [1, 1, 1]
    F = make_tower(7, 1).base
    a = F.from_int(3)
    m = minimal_polynomial(F, a)
    assert len(m) == 2 and poly_eval(F, m, a) == 0


@pytest.mark.parametrize("q", [4, 7, 8, 9, 11, 16, 25, 27])
def test_minimal_polynomial_annihilates(q):
    T = tower_for_q(q)
    x, _ = lemma_xy(T)
    a = T.base.prim_pow(-x)
    m = minimal_polynomial(T.base, a, T.p)
    assert poly_eval(T.base, m, a) == 0


@pytest.mark.parametrize("q", [9, 25, 27])
def test_subfield_expression(q):
    T = tower_for_q(q)
    F = T.base
    x, _ = lemma_xy(T)
    g = F.prim_pow(-x)
    for target in (F.inv(F.gen), g, 1):
        c = subfield_expression(F, target, g, T.e - 1)
        acc = 0
        for i, ci in enumerate(c):
            acc = F.add(acc, F.mul(F.from_int(ci), F.pow(g, i)))
        assert acc == target


def test_lemma_xy_even_q():
    assert lemma_xy(tower_for_q(4))[0] == -5
    assert lemma_xy(tower_for_q(16))[0] == -17


@pytest.mark.parametrize("q", [4, 7, 8, 9, 11, 13, 16, 25, 27])
def test_lemma_xy_conditions(q):
    T = tower_for_q(q)
    x, y = lemma_xy(T)
    assert lemma_xy_conditions(T, x, y)
    E = T.ext
    if q == 7:
        assert E.add(E.prim_pow(x * (q - 2)), E.prim_pow(y * (q - 2))) == 1
        assert E.add(E.prim_pow(-x * (q + 1)), E.prim_pow(-y * (q + 1))) == 1


@pytest.mark.parametrize("q", [2, 3, 5])
def test_lemma_xy_excluded(q):
    with pytest.raises(ValueError):
        lemma_xy(tower_for_q(q))


def test_lemma_xy_seed_is_deterministic():
    T = tower_for_q(11)
    assert lemma_xy(T, 7) == lemma_xy(T, 7)


def test_find_gamma():
    T = tower_for_q(3)
    E = T.ext
    w = E.gen
    zeta = E.prim_pow(2)
    beta, eta = E.mul(w, zeta), E.mul(E.inv(w), zeta)
    g = find_gamma(T, beta, eta)
    assert T.trace(g) == 0
    s = E.add(beta, g)
    assert s != 0 and T.trace(s) != 0 or s != 0
    ratio = E.div(s, eta)
    assert E.pow(ratio, T.q) == ratio  # lies in GF(q)
    assert find_gamma(T, eta, eta) == 0
    with pytest.raises(ValueError):
        find_gamma(T, 0, eta)


@pytest.mark.parametrize("q", QS)
def test_tower_primitive(q):
    T = tower_for_q(q)
    E = T.ext
    n = q * q - 1
    assert E.prim_pow(n) == 1
    for r in {n // p for p in _primes(n)}:
        assert E.prim_pow(r) != 1


@pytest.mark.parametrize("q", [2, 3, 4, 5, 7, 8, 9, 11, 13, 16])
def test_norm_and_trace_in_subfield(q):
    T = tower_for_q(q)
    E = T.ext
    for a in E.elements():
        for v in (T.norm(a), T.trace(a)):
            assert E.pow(v, q) == v
            T.restrict(v)


def _primes(n):
    out, p = set(), 2
    while p * p <= n:
        while n % p == 0:
            out.add(p)
            n //= p
        p += 1
    if n > 1:
        out.add(n)
    return out


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(QS), st.integers(0, 10**6), st.integers(0, 10**6), st.integers(0, 10**6))
def test_field_axioms(q, i, j, k):
    E = tower_for_q(q).ext
    n = q * q
    a, b, c = (E.from_int(0) if x % n == 0 else E.prim_pow(x) for x in (i, j, k))
    assert E.mul(a, E.add(b, c)) == E.add(E.mul(a, b), E.mul(a, c))
    assert E.mul(E.mul(a, b), c) == E.mul(a, E.mul(b, c))
    assert E.add(a, E.neg(a)) == 0
    if a:
        assert E.mul(a, E.inv(a)) == 1


@settings(max_examples=200, deadline=None)
@given(st.sampled_from(QS), st.integers(1, 10**6), st.integers(1, 10**6))
def test_frobenius_is_automorphism(q, i, j):
    T = tower_for_q(q)
    E = T.ext
    a, b = E.prim_pow(i), E.prim_pow(j)
    assert T.frob(E.add(a, b)) == E.add(T.frob(a), T.frob(b))
    assert T.frob(E.mul(a, b)) == E.mul(T.frob(a), T.frob(b))


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(QS), st.integers(0, 10**6))
def test_embed_restrict_roundtrip(q, i):
    T = tower_for_q(q)
    a = T.base.prim_pow(i)
    assert T.restrict(T.embed(a)) == a
    assert T.embed(T.base.gen) == T.ext.prim_pow(q + 1)
