import pytest
from hypothesis import given, settings, strategies as st

from classpres.field import tower_for_q
from classpres.linalg import Mat
from classpres.slp import (ONE, ExpansionBudget, Presentation, Relator, Slp, aux, bit_len, comm, cyclic_reduce,
                           evaluate, expand, gen, parse_word, parse_word_list, prod, rel, render, substitute,
                           word_len)

NAMES = ["a", "b", "U'", "V'"]
a, b, u, v = (gen(n) for n in NAMES)
INDEX = {n: i for i, n in enumerate(NAMES)}


def _perm(p):
    """A permutation matrix over GF(2) from a tuple image list."""
    F = tower_for_q(2).base
    n = len(p)
    return Mat.from_rows(F, [[1 if p[i] == j else 0 for j in range(n)] for i in range(n)])


# S_4 acting on rows
ASSIGN = {"a": _perm((1, 0, 2, 3)), "b": _perm((1, 2, 3, 0)), "U'": _perm((0, 2, 1, 3)), "V'": _perm((3, 0, 1, 2))}


def words(depth=3):
    leaf = st.sampled_from([a, b, u, v, ONE])
    return st.recursive(leaf, lambda s: st.one_of(
        st.tuples(s, s).map(lambda t: t[0] * t[1]),
        s.map(lambda x: ~x),
        st.tuples(s, st.integers(-6, 6)).map(lambda t: t[0] ** t[1]),
        st.tuples(s, s).map(lambda t: t[0] ** t[1]),
        st.tuples(s, s).map(lambda t: comm(t[0], t[1])),
    ), max_leaves=8)


def _letters_eval(letters):
    out = Mat.identity(ASSIGN["a"].F, 4)
    for l in letters:
        m = ASSIGN[NAMES[l >> 1]]
        out = out * (m.inverse() if l & 1 else m)
    return out


def test_conventions():
    assert expand(a ** b, INDEX) == [3, 0, 2]
    assert expand(comm(a, b), INDEX) == [1, 3, 0, 2]
    assert expand(rel(a, b), INDEX) == [0, 3]
    assert expand(prod([a, ~a, b]), INDEX) == [2]


def test_metrics():
    w = (a * b) ** 5
    assert word_len(w) == 10
    assert bit_len(w) == 2 + 4
    x = aux("x", a * b * a)
    assert word_len(x ** 2) == 2
    assert expand(x, INDEX) == [0, 2, 0]


def test_expansion_budget():
    with pytest.raises(ExpansionBudget):
        expand((a * b) ** 10**4, INDEX, budget=1000)


def test_cyclic_reduce():
    assert cyclic_reduce([0, 2, 4, 3, 1]) == [4]


def test_render_and_parse():
    w = comm(a, b ** u) * (v ** -1) ** 3
    s = render(w)
    assert s == "[a, b^U']*(V'^-1)^3"
    assert expand(parse_word(s, NAMES), INDEX) == expand(w, INDEX)
    ws = parse_word_list("a*b; [a, b], U'^(a*b)", NAMES)
    assert len(ws) == 3
    with pytest.raises(ValueError):
        parse_word("a*c", NAMES)


def test_substitute():
    w = comm(a, b) * a ** 3
    s = substitute(w, {"a": b, "b": a * b})
    assert evaluate(s, ASSIGN) == evaluate(comm(b, a * b) * b ** 3, ASSIGN)


def test_slp_json_validation():
    with pytest.raises(ValueError):
        Slp.from_json([["gen", 5]], 2)
    with pytest.raises(ValueError):
        Slp.from_json([["gen", 0], ["mul", 0, 3]], 2)


def test_presentation_round_trip():
    P = Presentation("toy", ["a", "b"])
    P.add(a ** 2, "base-case")
    P.add(b ** 3, "torus-normaliser")
    P.add(ONE, "steinberg")  # trivial relators are dropped
    P.add((a * b) ** 5, "steinberg", "A5")
    assert P.count() == 3 and P.count("torus-normaliser") == 2
    data = P.to_json()
    assert [r["tag"] for r in data["relators"]] == ["base-case", "torus-normaliser", "steinberg"]
    for r, orig in zip(data["relators"], P.relators):
        back = Slp.from_json(r["slp"], 2).to_word(["a", "b"])
        assert expand(back, {"a": 0, "b": 1}) == expand(orig.word, {"a": 0, "b": 1})
    assert "[steinberg A5]" in P.to_text(tags=True)
    with pytest.raises(ValueError):
        Relator(a, "nonsense")


@settings(max_examples=300, deadline=None)
@given(words(), words())
def test_eval_is_homomorphism(x, y):
    assert evaluate(x * y, ASSIGN) == evaluate(x, ASSIGN) * evaluate(y, ASSIGN)
    assert evaluate(~x, ASSIGN) == evaluate(x, ASSIGN).inverse()


@settings(max_examples=300, deadline=None)
@given(words())
def test_expand_agrees_with_evaluation(x):
    assert _letters_eval(expand(x, INDEX)) == evaluate(x, ASSIGN)


@settings(max_examples=200, deadline=None)
@given(words(), st.integers(-12, 12))
def test_pow_is_repeated_product(x, k):
    rep = ONE
    for _ in range(abs(k)):
        rep = rep * (x if k > 0 else ~x)
    assert evaluate(x ** k, ASSIGN) == evaluate(rep, ASSIGN)


@settings(max_examples=300, deadline=None)
@given(words())
def test_render_parse_round_trip(x):
    assert expand(parse_word(render(x), NAMES), INDEX) == expand(x, INDEX)


@settings(max_examples=200, deadline=None)
@given(words())
def test_slp_round_trip(x):
    s = Slp.from_word(x, NAMES)
    s2 = Slp.from_json(s.to_json(), len(NAMES))
    assert s2.eval(ASSIGN, NAMES) == evaluate(x, ASSIGN)
    assert expand(s2.to_word(NAMES), INDEX) == expand(x, INDEX)
