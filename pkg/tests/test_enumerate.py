import pytest
from hypothesis import given, settings, strategies as st

from classpres.enumerate import Overflow, check_table, coset_enumerate, enumerate_presentation
from classpres.generators import all_matrices
from classpres.groups import GroupSpec, group_order
from classpres.presentations import present
from classpres.presentations.sym import present_sym
from classpres.slp import ExpansionBudget, comm, expand, gen, gens

from oracles import FROZEN

a, b = gens("a b")


def _order(m):
    one = m ** 0
    x, k = m, 1
    while x != one:
        x, k = x * m, k + 1
    return k


def test_sym4():
    assert enumerate_presentation(present_sym(4)).index == FROZEN["sym4"]


def test_sl25():
    P = present(GroupSpec("SL", 2, 5))
    r = enumerate_presentation(P, max_cosets=64 * 120, strategy="hlt")
    assert r.index == FROZEN["sl2_5"]


def test_sl32_table_is_closed():
    P = present(GroupSpec("SL", 3, 2))
    r = enumerate_presentation(P, max_cosets=4 * 168)
    assert r.index == FROZEN["sl3_2"]
    idx = {g: i for i, g in enumerate(P.generators)}
    assert check_table(r.table, [expand(w, idx) for w in P.words])


def test_all_generators_subgroup():
    P = present(GroupSpec("SL", 3, 3))
    r = enumerate_presentation(P, [gen(x) for x in P.generators])
    assert r.index == 1


@pytest.mark.parametrize("fam,d,q,sub", [("SL", 3, 2, "tau"), ("SL", 3, 3, "U'"), ("Sp", 4, 2, "sigma")])
def test_index_times_subgroup_order(fam, d, q, sub):
    g = GroupSpec(fam, d, q)
    P = present(g)
    r = enumerate_presentation(P, [gen(sub)], max_cosets=64 * group_order(g))
    assert r.index * _order(all_matrices(g)[sub]) == group_order(g)


def test_overflow():
    with pytest.raises(Overflow):
        coset_enumerate(["a"], [a ** 1000], max_cosets=100)


def test_expansion_budget():
    with pytest.raises(ExpansionBudget):
        coset_enumerate(["a", "b"], [(a * b) ** 10**7], budget=10**5)


def test_free_generator_with_no_relators_overflows():
    with pytest.raises(Overflow):
        coset_enumerate(["a"], [], max_cosets=50)


def test_unknown_strategy():
    with pytest.raises(ValueError):
        coset_enumerate(["a"], [a ** 2], strategy="bogus")


def test_deterministic():
    P = present(GroupSpec("Sp", 4, 2))
    r1 = enumerate_presentation(P, max_cosets=4 * 720)
    r2 = enumerate_presentation(P, max_cosets=4 * 720)
    assert (r1.index, r1.defined, r1.max_live) == (r2.index, r2.defined, r2.max_live)
    assert (r1.table == r2.table).all()
    assert r1.to_json()["final"] == r1.index


def _von_dyck(l, m, n):
    return [a ** l, b ** m, (a * b) ** n]


# small finite groups: cyclic, dihedral, <l,m,n> triangle groups with 1/l+1/m+1/n > 1, abelian products
GROUPS = [
    (["a"], [a ** 7], 7),
    (["a", "b"], [a ** 2, b ** 2, (a * b) ** 6], 12),
    (["a", "b"], _von_dyck(2, 3, 3), 12),
    (["a", "b"], _von_dyck(2, 3, 4), 24),
    (["a", "b"], _von_dyck(2, 3, 5), 60),
    (["a", "b"], [a ** 4, b ** 6, comm(a, b)], 24),
    (["a", "b"], [a ** 8, b ** 2, (a ** b) * a], 16),
]


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GROUPS), st.permutations(range(3)), st.booleans())
def test_strategy_independence(grp, perm, use_sub):
    names, rels, order = grp
    rels = [rels[i] for i in perm if i < len(rels)]
    sub = [a] if use_sub else []
    r1 = coset_enumerate(names, rels, sub, max_cosets=10**4, strategy="felsch")
    r2 = coset_enumerate(names, rels, sub, max_cosets=10**4, strategy="hlt")
    assert r1.index == r2.index
    if not use_sub:
        assert r1.index == order
