import pytest

from classpres.generators import (PRES_TO_STD, STD_TO_PRES, all_matrices, central_element, dictionary,
                                  presentation_generators, standard_generators, word_dictionary)
from classpres.groups import GroupSpec
from classpres.linalg import Mat, is_scalar, preserves_form
from classpres.slp import evaluate, render


def _g(*a):
    return GroupSpec(*a)


def test_sl2_generators():
    g = _g("SL", 2, 9)
    G = presentation_generators(g)
    F = G["tau"].F
    w = F.gen
    assert G["tau"] == Mat.from_rows(F, [[1, 1], [0, 1]])
    assert G["delta"] == Mat.diag(F, [F.inv(w), w])
    assert G["U'"] == Mat.from_rows(F, [[0, 1], [F.neg_one, 0]])


def test_su3_delta():
    q = 4
    M = all_matrices(_g("SU", 3, q))
    F = M["Delta"].F
    w = F.gen
    assert M["Delta"] == Mat.diag(F, [w, F.pow(w, q - 1), F.pow(w, -q % (q * q - 1))])


def test_omega_odd_tau():
    M = all_matrices(_g("OmegaCircle", 5, 5))
    F = M["tau"].F
    # basis (e1, f1, e2, f2, w)
    rows = M["tau"].rows()
    assert rows[0] == [1, 1, 0, 0, 1]
    assert rows[4] == [0, F.from_int(2), 0, 0, 1]


def test_sp43_z_preserves_form():
    G = presentation_generators(_g("Sp", 4, 3))
    assert preserves_form(G["Z"], G.form)
    F = G["Z"].F
    assert not preserves_form(Mat.diag(F, [F.gen, 1, 1, 1]), G.form)


@pytest.mark.parametrize("q", [3, 5])
def test_sl_standard_v_block_form(q):
    # v = [[0, 1], [-I_(d-1), 0]]: e_1 -> e_d, e_i -> -e_(i-1)
    d = 5
    v = standard_generators(_g("SL", d, q))["v"]
    F = v.F
    expect = [[0] * d for _ in range(d)]
    expect[0][d - 1] = 1
    for i in range(1, d):
        expect[i][i - 1] = F.neg_one
    assert v == Mat.from_rows(F, expect) or v == Mat.from_rows(F, expect).transpose()


def test_sp_standard_x_is_sigma_conjugated():
    g = _g("Sp", 6, 5)
    M = all_matrices(g)
    S = standard_generators(g)
    assert S["x"] == M["sigma"].conj(M["Z"])


def test_su_even_standard_s():
    g = _g("SU", 4, 3)
    M = all_matrices(g)
    S = standard_generators(g)
    assert S["s"] == M["Z"].inverse()
    assert S["t"] == M["tau"].inverse()


def test_sl2_dictionary():
    d = word_dictionary(_g("SL", 2, 7), PRES_TO_STD)
    assert render(d["s"]) == "U'"
    M = all_matrices(_g("SL", 2, 7))
    assert evaluate(d["delta"], M) == M["delta"].inverse()
    assert render(word_dictionary(_g("SL", 2, 9), PRES_TO_STD)["delta"]) == "delta^-1"


@pytest.mark.parametrize("q", [3, 5, 7, 9])
def test_su3_odd_t_word(q):
    d = word_dictionary(_g("SU", 3, q), STD_TO_PRES)
    assert render(d["t"]) == f"y^-{(q + 1) // 2}*s"


def test_sl45_round_trip():
    g = _g("SL", 4, 5)
    M = all_matrices(g)
    G = presentation_generators(g)
    S = {k: evaluate(w, M) for k, w in word_dictionary(g, PRES_TO_STD).items()}
    back = {k: evaluate(w, S) for k, w in word_dictionary(g, STD_TO_PRES).items()}
    for k in G.names:
        assert back[k] == M[k]
    assert S == standard_generators(g).entries


def test_dictionary_slps_match_words():
    g = _g("Sp", 4, 5)
    M = all_matrices(g)
    names = presentation_generators(g).names
    for k, s in dictionary(g, PRES_TO_STD).items():
        assert s.eval(M, names) == standard_generators(g)[k]


@pytest.mark.parametrize("fam,d,q,order,value", [
    ("Sp", 4, 3, 2, -1), ("Sp", 4, 4, 1, 1), ("SU", 3, 4, 1, 1), ("SU", 3, 5, 3, None), ("SL", 3, 4, 3, None),
    ("SL", 4, 5, 4, None), ("SU", 6, 2, 3, None), ("SU", 5, 4, 5, None), ("OmegaPlus", 6, 5, 2, -1),
])
def test_central_element(fam, d, q, order, value):
    g = _g(fam, d, q)
    w, k = central_element(g)
    assert k == order
    m = evaluate(w, all_matrices(g))
    lam = is_scalar(m)
    assert lam is not None
    F = m.F
    assert F.mult_order(lam) == k
    if value == -1:
        assert lam == F.neg_one


def test_su3_central_word():
    # the center of SU(3,q) has order gcd(3, q+1): trivial at q = 4, order 3 at q = 5
    assert render(central_element(_g("SU", 3, 4))[0]) == "1"
    assert render(central_element(_g("SU", 3, 5))[0]) == "Delta^8"


def test_generator_set_json():
    G = presentation_generators(_g("SU", 4, 2))
    data = G.to_json()
    assert data["role"] == "presentation" and data["names"] == G.names
    assert data["form"]["kind"] == "hermitian"
    assert set(data["tower"]) >= {"p", "e"}


@pytest.mark.parametrize("fam,d", [("SU", 4), ("SU", 6), ("SU", 5)])
def test_su_q2_delta_is_trivial_or_absent(fam, d):
    M = all_matrices(_g(fam, d, 2))
    if "delta" in M:
        assert M["delta"].is_identity()
