import pytest
from hypothesis import given, settings, strategies as st

from classpres.field import tower_for_q
from classpres.generators import presentation_generators
from classpres.groups import GroupSpec
from classpres.linalg import FormSpec, Mat, dickson_or_spinor, is_scalar, preserves_form

QS = [2, 3, 4, 5, 7, 8, 9, 16, 25]


def _mat(F, d, entries):
    rows = [[F.from_int(0) if x == 0 else F.prim_pow(x) for x in entries[i * d:(i + 1) * d]] for i in range(d)]
    return Mat.from_rows(F, rows)


def mats():
    return st.tuples(st.sampled_from(QS), st.integers(1, 4)).flatmap(
        lambda t: st.tuples(st.just(t[0]), st.just(t[1]),
                            st.lists(st.integers(0, 10**4), min_size=t[1] ** 2, max_size=t[1] ** 2),
                            st.lists(st.integers(0, 10**4), min_size=t[1] ** 2, max_size=t[1] ** 2)))


@settings(max_examples=200, deadline=None)
@given(mats())
def test_det_multiplicative(t):
    q, d, x, y = t
    F = tower_for_q(q).base
    A, B = _mat(F, d, x), _mat(F, d, y)
    assert (A * B).det() == F.mul(A.det(), B.det())
    assert A.transpose().det() == A.det()


@settings(max_examples=200, deadline=None)
@given(mats())
def test_inverse(t):
    q, d, x, _ = t
    F = tower_for_q(q).base
    A = _mat(F, d, x)
    if A.det() == 0:
        return
    I = Mat.identity(F, d)
    assert A * A.inverse() == I
    assert A.inverse() * A == I
    assert A ** -3 == (A.inverse()) ** 3
    assert A ** 0 == I


def test_basic_constructors():
    F = tower_for_q(9).base
    w = F.gen
    D = Mat.diag(F, [w, 1, F.inv(w)])
    assert D.det() == 1 and D.entry(0, 0) == w
    assert is_scalar(Mat.scalar(F, 3, w)) == w
    assert is_scalar(D) is None
    assert Mat.from_rows(F, D.rows()) == D
    assert len(D.to_json()) == 3
    with pytest.raises(ValueError):
        Mat.from_rows(F, [[1, 0], [0]])


def test_conj_convention():
    F = tower_for_q(5).base
    x = Mat.from_rows(F, [[1, 1], [0, 1]])
    g = Mat.from_rows(F, [[0, 1], [F.neg_one, 0]])
    assert x.conj(g) == g.inverse() * x * g


def test_form_rejects_unknown_kind():
    F = tower_for_q(3).base
    with pytest.raises(ValueError):
        FormSpec("bogus", Mat.identity(F, 2))


GROUPS = [("SL", 3, 4), ("Sp", 4, 3), ("Sp", 6, 2), ("SU", 3, 3), ("SU", 4, 2), ("SU", 5, 2),
          ("OmegaPlus", 6, 3), ("OmegaPlus", 4, 4), ("OmegaCircle", 5, 3), ("OmegaCircle", 7, 5),
          ("OmegaMinus", 6, 3), ("OmegaMinus", 8, 2), ("OmegaMinus", 6, 4)]


@pytest.mark.parametrize("fam,d,q", GROUPS)
def test_generators_preserve_form(fam, d, q):
    G = presentation_generators(GroupSpec(fam, d, q))
    for name, m in G.entries.items():
        assert m.det() == 1, name
        if G.form is not None:
            assert preserves_form(m, G.form), name
        if fam.startswith("Omega"):
            assert dickson_or_spinor(m, G.form) == 0, name


def test_spinor_detects_reflection_products():
    # product of two reflections in vectors of non-square ratio has spinor norm -1
    F = tower_for_q(3).base
    G = Mat.identity(F, 3)
    form = FormSpec("symmetric", G, None)
    # reflections in e1 and e2: Q(e1)Q(e2) = 2*2 = 1, a square
    m = Mat.diag(F, [F.neg_one, F.neg_one, 1])
    assert dickson_or_spinor(m, form) == 0
    # reflections in e1 and e1+e2: Q-values 2 and 1, and 2 is a non-square mod 3
    r1 = Mat.diag(F, [F.neg_one, 1, 1])
    two = F.from_int(2)
    rv = Mat.from_rows(F, [[0, F.neg_one, 0], [F.neg_one, 0, 0], [0, 0, 1]])
    assert preserves_form(rv, form) and rv.det() == F.neg_one
    assert dickson_or_spinor(r1 * rv, form) == (0 if F.is_square(two) else 1)


def test_dickson_even():
    F = tower_for_q(2).base
    G = Mat.from_rows(F, [[0, 1], [1, 0]])
    Q = Mat.from_rows(F, [[0, 1], [0, 0]])
    form = FormSpec("quadratic-plus", G, Q)
    swap = Mat.from_rows(F, [[0, 1], [1, 0]])
    assert dickson_or_spinor(swap, form) == 1
    assert dickson_or_spinor(Mat.identity(F, 2), form) == 0

