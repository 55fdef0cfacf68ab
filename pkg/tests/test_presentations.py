import pytest

from classpres.enumerate import Overflow, enumerate_presentation
from classpres.groups import GroupSpec, UnsupportedGroup, group_order
from classpres.presentations import central_word, family_module, present, torus_presentation
from classpres.presentations.su3 import borel_relators
from classpres.presentations.sym import present_signed, present_sym
from classpres.linalg import Mat
from classpres.slp import TAGS, Presentation, evaluate, expand, gen, render
from classpres.verify import relator_outcomes

from oracles import FROZEN

SAMPLE = [("SL", 2, 9), ("SL", 3, 4), ("SL", 4, 5), ("SL", 5, 8), ("Sp", 4, 3), ("Sp", 6, 4), ("Sp", 8, 5),
          ("SU", 3, 4), ("SU", 3, 7), ("SU", 4, 3), ("SU", 5, 2), ("SU", 6, 2), ("SU", 7, 3),
          ("OmegaPlus", 4, 5), ("OmegaPlus", 6, 2), ("OmegaPlus", 8, 9), ("OmegaCircle", 5, 9),
          ("OmegaCircle", 7, 3), ("OmegaMinus", 6, 4), ("OmegaMinus", 8, 3), ("OmegaMinus", 8, 2)]


def test_sl22_presentation():
    P = present(GroupSpec("SL", 2, 2))
    assert len(P.generators) == 2 and len(P.relators) == 3
    assert P.word_length() == 12
    r = enumerate_presentation(P)
    assert r.index == 6


def test_sym3_relators():
    P = present_sym(3)
    U, V = gen("U"), gen("V")
    idx = {"U": 0, "V": 1}
    got = sorted(tuple(expand(w, idx)) for w in P.words)
    for w in (U ** 2, V ** 3, (U * V) ** 2, (U * U ** V) ** 3):
        assert tuple(expand(w, idx)) in got
    assert enumerate_presentation(P).index == 6


@pytest.mark.parametrize("d", [3, 4, 5])
def test_sym_and_signed_orders(d):
    assert enumerate_presentation(present_sym(d)).index == FROZEN["sym"][d]
    assert enumerate_presentation(present_signed(d)).index == FROZEN["signed"][d]


def test_signed4_has_v_to_the_8():
    P = present_signed(4)
    assert "V'^8" in [render(w) for w in P.words]


def test_sym_rejects_small_d():
    with pytest.raises(ValueError):
        present_sym(2)


@pytest.mark.parametrize("fam,d,q", SAMPLE)
def test_relators_are_identity(fam, d, q):
    g = GroupSpec(fam, d, q)
    P = present(g)
    outs = relator_outcomes(g, P)
    assert all(o["outcome"] == "identity" for o in outs), [o for o in outs if o["outcome"] != "identity"][:2]
    assert all(r.tag in TAGS for r in P.relators)
    assert P.count("torus-normaliser") <= 56
    # the per-symbol constant of the bit-length metric
    assert P.bit_length() <= 3 * P.word_length()


@pytest.mark.parametrize("fam,d,q", [("SL", 4, 3), ("Sp", 6, 3), ("SU", 5, 4), ("OmegaPlus", 6, 3),
                                     ("OmegaMinus", 6, 3)])
def test_quotient_relators_are_central(fam, d, q):
    g = GroupSpec(fam, d, q, True)
    P = present(g)
    outs = relator_outcomes(g, P)
    assert all(o["outcome"] in ("identity", "central") for o in outs)
    w, k = central_word(g)
    if k > 1:
        assert P.relators[-1].tag == "center-kill"


def test_sp43_omits_v():
    P = present(GroupSpec("Sp", 4, 3))
    assert "V" not in P.generators


def test_exceptional_cases():
    def labels(fam, d, q):
        return [r.label for r in present(GroupSpec(fam, d, q)).relators if r.tag == "exceptional-multiplier"]

    assert labels("SL", 3, 4) == ["(e)", "(f)", "(g)"]
    assert labels("SL", 3, 5) == [] and labels("SL", 4, 4) == []
    assert labels("SU", 4, 3) == ["(vi)"]
    assert labels("SU", 4, 5) == [] and labels("SU", 6, 3) == []
    assert labels("OmegaCircle", 7, 3) == ["(vi)"]
    assert labels("OmegaCircle", 5, 3) == [] and labels("OmegaCircle", 7, 5) == []
    red = [r.redundant for r in present(GroupSpec("SL", 3, 4)).relators if r.tag == "exceptional-multiplier"]
    assert red == [False, True, True]


@pytest.mark.parametrize("q,size", [(4, 3), (7, 3), (8, 7), (9, 3), (11, 7), (13, 3), (16, 3), (17, 7)])
def test_su3_u0_size(q, size):
    assert present(GroupSpec("SU", 3, q)).meta["u0_size"] == size


def test_su3_small_cases_are_explicit():
    assert len(present(GroupSpec("SU", 3, 3)).relators) == 6
    assert len(present(GroupSpec("SU", 3, 5)).relators) == 7
    assert present(GroupSpec("SU", 3, 2)).meta["u0_size"] == 0


@pytest.mark.parametrize("q", [4, 7, 8, 9, 11])
def test_su3_borel_index(q):
    """R1 u R2 u R3 plus Delta^(q^2-1) presents a Borel subgroup: index q^3 over <Delta>."""
    g = GroupSpec("SU", 3, q)
    B = borel_relators(g, g.tower())
    Delta = gen("Delta")
    P = Presentation(g, ["nu", "tau", "Delta"])
    P.add(Delta ** (q * q - 1), "torus-normaliser")
    for k in ("R1", "R2", "R3"):
        P.extend(B[k], "base-case")
    for strategy in ("felsch", "hlt"):
        try:
            r = enumerate_presentation(P, [Delta], max_cosets=64 * q ** 3, strategy=strategy)
            break
        except Overflow:
            continue
    else:
        pytest.fail("both strategies overflowed")
    assert r.index == q ** 3


def test_torus_orders():
    assert torus_presentation(GroupSpec("SL", 3, 4)).order == 54
    t = torus_presentation(GroupSpec("SU", 5, 3))
    assert t.order == (9 - 1) ** 2 * 2 ** 2 * 2
    r = enumerate_presentation(torus_presentation(GroupSpec("SL", 3, 4)).presentation)
    assert r.index == 54


def test_centraliser_words_are_over_torus_generators():
    g = GroupSpec("Sp", 4, 3)
    mod = family_module(g)
    T = g.tower()
    tor = mod.torus(g, T)
    for c in mod.centralisers(g, T):
        for w in c.words:
            expand(w, {k: i for i, k in enumerate(tor.presentation.generators)})


def test_omega_minus_central_word():
    for d in (6, 10):
        g = GroupSpec("OmegaMinus", d, 3)  # 3^n = 3 mod 4 for odd n
        w, k = central_word(g)
        m = evaluate(w, family_module(g).matrices(g, g.tower()))
        assert k == 2 and m == Mat.scalar(m.F, d, m.F.neg_one)
    assert central_word(GroupSpec("OmegaMinus", 8, 3))[1] == 1


@pytest.mark.parametrize("fam,d,q", [("OmegaMinus", 4, 3), ("OmegaCircle", 3, 5), ("OmegaCircle", 5, 4),
                                     ("Sp", 3, 3), ("SL", 1, 2), ("SU", 2, 3), ("SL", 3, 6)])
def test_unsupported(fam, d, q):
    with pytest.raises(UnsupportedGroup):
        GroupSpec(fam, d, q)


def test_omega_minus_4_message():
    with pytest.raises(UnsupportedGroup, match="PSL"):
        GroupSpec("OmegaMinus", 4, 3)


@pytest.mark.parametrize("key", sorted(FROZEN["orders"]))
def test_group_order_matches_oracle(key):
    assert group_order(GroupSpec(*key)) == FROZEN["orders"][key]


def test_group_order_small():
    assert group_order(GroupSpec("SL", 2, 2)) == 6
    assert group_order(GroupSpec("SU", 3, 2)) == FROZEN["su3_2"]
    assert group_order(GroupSpec("Sp", 4, 2)) == FROZEN["sp4_2"]
    assert group_order(GroupSpec("SL", 3, 3)) == FROZEN["sl3_3"]
