"""Omega(2n+1,q), q odd, on {sigma, tau, Delta, z, U', V'} (Delta dropped for e = 1, V' for n = 2).

Basis (e_1, f_1, ..., e_n, f_n, w) with e_i.f_i = 1 and w.w = -2.  The
standard generators live in the basis with w replaced by w/2 (w.w = -1/2);
std_basis gives the change of basis.
"""

from __future__ import annotations

import math

from ..field import FieldTower, linear_expression
from ..groups import GroupSpec, eps, mat_from_images, signed_cycle
from ..linalg import FormSpec, Mat
from ..slp import ONE, Presentation, aux, comm, gen, prod, rel
from .common import Centraliser, Torus
from .sl2 import delta_word_prime, sl2_relators
from .sp import e_, f_
from .sym import signed_relators


def matrices(g: GroupSpec, T: FieldTower) -> dict:
    F = T.base
    n, d = g.n, g.d
    w = F.gen
    wi = F.inv(w)
    m1 = F.neg_one
    W = 2 * n
    es = [e_(i) for i in range(1, n + 1)]
    fs = [f_(i) for i in range(1, n + 1)]
    imgs = signed_cycle(F, d, es, eps(n))
    imgs.update(signed_cycle(F, d, fs, eps(n)))
    return {
        "sigma": mat_from_images(F, d, {e_(1): [(e_(1), 1), (e_(2), 1)], f_(2): [(f_(2), 1), (f_(1), m1)]}),
        "tau": mat_from_images(F, d, {e_(1): [(e_(1), 1), (f_(1), 1), (W, 1)], W: [(W, 1), (f_(1), 2 % g.p)]}),
        "Delta": mat_from_images(F, d, {e_(1): [(e_(1), wi)], f_(1): [(f_(1), w)],
                                        e_(2): [(e_(2), w)], f_(2): [(f_(2), wi)]}),
        "z": mat_from_images(F, d, {e_(1): [(f_(1), 1)], f_(1): [(e_(1), 1)], W: [(W, m1)]}),
        "U'": mat_from_images(F, d, {e_(1): [(e_(2), 1)], e_(2): [(e_(1), m1)],
                                     f_(1): [(f_(2), 1)], f_(2): [(f_(1), m1)]}),
        "V'": mat_from_images(F, d, imgs),
        "delta": mat_from_images(F, d, {e_(1): [(e_(1), wi)], f_(1): [(f_(1), w)]}),
    }


def _form(g, T, ww):
    F = T.base
    d = g.d
    Q = [[0] * d for _ in range(d)]
    G = [[0] * d for _ in range(d)]
    for i in range(1, g.n + 1):
        Q[e_(i)][f_(i)] = 1
        G[e_(i)][f_(i)] = G[f_(i)][e_(i)] = 1
    G[d - 1][d - 1] = ww
    Q[d - 1][d - 1] = F.div(ww, 2 % g.p)
    return FormSpec("quadratic-odd", Mat.from_rows(F, G), Mat.from_rows(F, Q))


def form(g: GroupSpec, T: FieldTower) -> FormSpec:
    return _form(g, T, T.base.neg(2 % g.p))


def std_form(g: GroupSpec, T: FieldTower) -> FormSpec:
    F = T.base
    return _form(g, T, F.neg(F.inv(2 % g.p)))


def std_basis(g: GroupSpec, T: FieldTower) -> Mat:
    """Rows are the standard basis in presentation coordinates: w' = w/2."""
    F = T.base
    return Mat.diag(F, [1] * (g.d - 1) + [F.inv(2 % g.p)])


def generator_names(g: GroupSpec, T: FieldTower) -> list[str]:
    names = ["sigma", "tau", "Delta", "z", "U'", "V'"]
    if g.e == 1:
        names.remove("Delta")
    if g.n == 2:
        names.remove("V'")
    return names


def _V(g):
    return gen("V'") if g.n > 2 else gen("U'")


def Delta_word(g: GroupSpec, T: FieldTower):
    if g.e > 1:
        return gen("Delta")
    return delta_word_prime(T.base, gen("sigma"), gen("U'"))


def n1_relators(g: GroupSpec) -> list:
    n = g.n
    z, U, V = gen("z"), gen("U'"), _V(g)
    out = signed_relators(U, V, n)
    if n > 2:
        out.append(comm(z, U ** V))
    if n > 3:
        out.append(comm(z, V * ~U))
    out += [z ** 2, comm(z, U ** 2), comm(z, z ** U)]
    return out


def n_relators(g: GroupSpec, with_order=True) -> list:
    n, q = g.n, g.q
    D, z, U, V = gen("Delta"), gen("z"), gen("U'"), _V(g)
    out = n1_relators(g)
    if n > 3:
        out.append(comm(D, U ** (V ** 2)))
    if n > 4:
        out.append(comm(D, V * U * U ** V))
    if n > 2:
        out.append(comm(D, z ** (V ** 2)))
    out.append(rel(D ** U, ~D))
    if n > 2:
        out.append(comm(D, (U ** 2) ** V))
    if with_order:
        out.append(rel(D ** ((q - 1) // 2), U ** 2))
    if n > 2:
        out += [rel(D * D ** V, D ** (V * U)), comm(D, D ** V)]
    if n > 3:
        out.append(comm(D, D ** (V ** 2)))
    out.append(rel(D ** (z * z ** U), ~D))
    if n == 2:
        out.append(comm(D, D ** z))
    return out


def tau_centraliser(g: GroupSpec) -> list:
    n = g.n
    z, U, V = gen("z"), gen("U'"), _V(g)
    out = []
    if n > 2:
        out.append(U ** V)
    if n > 3:
        out.append(V * ~U)
    if g.e > 1 and n > 2:
        out.append(gen("Delta") ** V)
    out.append(U ** 2 * z ** U)
    if g.e > 1 and n == 2:
        D = gen("Delta")
        out.append(D * D ** z)
    return out


def steinberg(g: GroupSpec):
    n = g.n
    sigma, tau, z, U, V = gen("sigma"), gen("tau"), gen("z"), gen("U'"), _V(g)
    zU = z ** U
    out = []
    if n > 2:
        VU = V * ~U
        out += [(rel(comm(sigma, sigma ** V), sigma ** VU), "(a)"), (comm(sigma, sigma ** VU), "(b)"),
                (comm(sigma, sigma ** (U ** VU)), "(c)")]
    if n > 3:
        out.append((comm(sigma, sigma ** (V ** 2)), "(d)"))
    out += [(comm(sigma, sigma ** zU), "(e)"),
            (rel(comm(tau, tau ** U), (sigma ** 2) ** zU), "(f)"),
            (comm(sigma, tau), "(g)"),
            (rel(comm(sigma ** z, tau), sigma * tau ** (z * U)), "(h)")]
    if n > 2:
        out.append((comm(sigma, tau ** (V ** 2)), "(j)"))
    return out


def present(g: GroupSpec, T: FieldTower) -> Presentation:
    n, p = g.n, g.p
    F = T.base
    sigma, tau, z, U = gen("sigma"), gen("tau"), gen("z"), gen("U'")
    P = Presentation(g, generator_names(g, T))
    if g.e > 1:
        D = gen("Delta")
        P.extend(n_relators(g, with_order=False), "torus-normaliser", "N")
        P.add(comm(sigma, D ** (z ** U)), "centraliser", "sigma")
        P.extend([comm(tau, c) for c in tau_centraliser(g)], "centraliser", "tau")
        P.extend(sl2_relators(F, sigma, D, U, "SL", "sigma"), "base-case", "SL(2,q)")
        P.extend(sl2_relators(F, tau, D * D ** (z ** U), z, "PSL", "tau"), "base-case", "PSL(2,q)")
    else:
        P.extend(n1_relators(g), "torus-normaliser", "N1")
        P.extend([comm(tau, c) for c in tau_centraliser(g)], "centraliser", "tau")
        P.extend(sl2_relators(F, sigma, None, U, "SL"), "base-case", "SL(2,p)")
        P.extend(sl2_relators(F, tau, None, z, "PSL"), "base-case", "PSL(2,p)")
    for w, label in steinberg(g):
        P.add(w, "steinberg", label)
    exceptional = []
    if g.e == 1 and n == 3 and p == 3:
        P.add(comm(tau, sigma ** _V(g)), "exceptional-multiplier", "(vi)")
        exceptional.append("(vi)")
    P.meta["exceptional"] = exceptional
    return P


def central_word(g: GroupSpec, T: FieldTower):
    return ONE, 1


def torus(g: GroupSpec, T: FieldTower) -> Torus:
    n, q = g.n, g.q
    if g.e > 1:
        names = ["Delta", "z", "U'", "V'"]
        rels = n_relators(g)
        order = (q - 1) ** n * 2 ** (n - 1) * math.factorial(n)
    else:
        names = ["z", "U'", "V'"]
        rels = n1_relators(g)
        order = 2 ** (2 * n - 1) * math.factorial(n)
    if n == 2:
        names.remove("V'")
    P = Presentation(g, names)
    P.extend(rels, "torus-normaliser")
    return Torus(P, {k: gen(k) for k in names}, order)


def centralisers(g: GroupSpec, T: FieldTower) -> list[Centraliser]:
    n, q = g.n, g.q
    idx = 2 * (q - 1) * n if g.e > 1 else 4 * n
    return [Centraliser("tau", gen("tau"), tau_centraliser(g), idx)]


# -- standard generators --

def std_names(g: GroupSpec) -> list[str]:
    return ["s", "t", "delta", "u", "v"]


def pres_to_std(g: GroupSpec, T: FieldTower) -> dict:
    z, U, V = gen("z"), gen("U'"), _V(g)
    Vi = ~V
    t = gen("tau") if g.d % 4 == 3 else ~gen("tau")
    return {"s": z ** Vi, "t": t ** Vi, "delta": comm(z, ~Delta_word(g, T)) ** Vi, "u": U, "v": V}


def _omega59_delta(F, sigma, tau, z, U, D2):
    """Delta in Omega(5,9) from Delta^2, z, U', tau (sigma is a word in tau, z, U').

    Delta is the SL(2,q) word x(w - w^2)^U x(w^-1) x(w - 1)^U x(-1) in the long root
    subgroup, where x(s) = sigma_12(s) = ([tau_1(s/2), tau_2(1)])^(z^U') and
    tau_1(a + b w^2) = tau^a (tau^b)^(Delta^-2) (Delta^2 scales tau_1 by w^-2).
    """
    w = F.gen
    half = F.inv(2)
    tau2 = tau ** U
    zU = z ** U
    basis = [1, F.prim_pow(-2)]
    conj = [ONE, ~D2]

    def x(s):
        a = linear_expression(F, F.mul(s, half), basis)
        t1 = prod((tau ** c) ** conj[i] for i, c in enumerate(a) if c)
        return comm(t1, tau2) ** zU

    w2 = F.mul(w, w)
    return (x(F.sub(w, w2)) ** U * x(F.inv(w)) * x(F.sub(w, 1)) ** U * x(F.neg_one))


def std_to_pres(g: GroupSpec, T: FieldTower) -> dict:
    n, p, q = g.n, g.p, g.q
    F = T.base
    s, t, dl, u, v = gen("s"), gen("t"), gen("delta"), gen("u"), gen("v")
    V = v if n > 2 else u
    z = s ** V
    tau = t ** V if g.d % 4 == 3 else ~(t ** V)
    U = u
    sigma = comm(tau ** (z * U), tau ** ((p + 1) // 2))
    out = {"sigma": sigma, "tau": tau, "z": z, "U'": U}
    if n > 2:
        out["V'"] = v
    if g.e == 1:
        return out
    D2 = aux("Delta2", comm(dl ** V, U))
    if q % 4 == 3:
        out["Delta"] = U ** 2 * D2 ** ((q + 1) // 4)
    elif q == 9:
        out["Delta"] = _omega59_delta(F, aux("sigma_w", sigma), aux("tau_w", tau), aux("z_w", z), U, D2)
    else:
        w = F.gen
        basis = [F.prim_pow(4 * i) for i in range(g.e)]
        a = linear_expression(F, F.sub(1, F.inv(w)), basis)
        b = linear_expression(F, F.sub(1, w), basis)
        c = linear_expression(F, F.neg(F.prim_pow(3)), basis)
        sg = aux("sigma_w", sigma)
        sU = sg ** U
        out["Delta"] = (prod((sg ** ci) ** (D2 ** i * U) for i, ci in enumerate(c) if ci) * D2 * sU
                        * prod((sg ** bi) ** (D2 ** i * sU) for i, bi in enumerate(b) if bi)
                        * prod((sg ** ai) ** (D2 ** i) for i, ai in enumerate(a) if ai))
    return out
