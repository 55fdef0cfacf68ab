"""SU(2n+1,q) on {nu, sigma, tau, Gamma, t, U, V} (V omitted for n = 2).

Basis (e_1, f_1, ..., e_n, f_n, w) with e_i.f_i = f_i.e_i = w.w = 1 for the hermitian form.
"""

from __future__ import annotations

import math

from ..field import FieldTower
from ..groups import GroupSpec, mat_from_images
from ..linalg import FormSpec, Mat
from ..slp import ONE, Presentation, comm, gen, rel, substitute
from . import su3
from .common import Centraliser, Torus
from .sl2 import sl2_relators
from .sp import e_, f_
from .su_even import steinberg_relators
from .sym import sym_relators


def perm_matrix(F, n, perm):
    imgs = {}
    for i, j in perm.items():
        imgs[e_(i)] = [(e_(j), 1)]
        imgs[f_(i)] = [(f_(j), 1)]
    return mat_from_images(F, 2 * n + 1, imgs)


def matrices(g: GroupSpec, T: FieldTower) -> dict:
    F = T.ext
    n, d, q = g.n, g.d, g.q
    w = F.gen
    W = 2 * n
    return {
        "nu": mat_from_images(F, d, {e_(1): [(e_(1), 1), (f_(1), T.phi), (W, 1)], W: [(W, 1), (f_(1), F.neg_one)]}),
        "sigma": mat_from_images(F, d, {e_(1): [(e_(1), 1), (e_(2), 1)], f_(2): [(f_(2), 1), (f_(1), F.neg_one)]}),
        "tau": mat_from_images(F, d, {e_(1): [(e_(1), 1), (f_(1), F.neg(T.psi))]}),
        "Gamma": mat_from_images(F, d, {e_(1): [(e_(1), F.inv(w))], f_(1): [(f_(1), F.pow(w, q))],
                                        W: [(W, F.prim_pow(1 - q))]}),
        "t": mat_from_images(F, d, {e_(1): [(f_(1), 1)], f_(1): [(e_(1), 1)], W: [(W, F.neg_one)]}),
        "U": perm_matrix(F, n, {1: 2, 2: 1}),
        "V": perm_matrix(F, n, {i: i % n + 1 for i in range(1, n + 1)}),
    }


def form(g: GroupSpec, T: FieldTower) -> FormSpec:
    F = T.ext
    d = g.d
    G = [[0] * d for _ in range(d)]
    for i in range(1, g.n + 1):
        G[e_(i)][f_(i)] = G[f_(i)][e_(i)] = 1
    G[d - 1][d - 1] = 1
    return FormSpec("hermitian", Mat.from_rows(F, G), None, T.q)


def generator_names(g: GroupSpec, T: FieldTower) -> list[str]:
    names = ["nu", "sigma", "tau", "Gamma", "t", "U", "V"]
    return names if g.n > 2 else names[:-1]


def _V(g):
    return gen("V") if g.n > 2 else gen("U")


def derived(g: GroupSpec) -> dict:
    """Delta, Z and delta of the even-dimensional presentation, as words."""
    q = g.q
    Gamma, t, U = gen("Gamma"), gen("t"), gen("U")
    Z = t if q % 2 == 0 else t * Gamma ** ((q + 1) // 2)
    return {"Delta": Gamma * ~(Gamma ** U), "Z": Z, "delta": Gamma ** (q + 1)}


def n_relators(g: GroupSpec, with_ii=True) -> list:
    n, q = g.n, g.q
    Gamma, t, U, V = gen("Gamma"), gen("t"), gen("U"), _V(g)
    out = sym_relators(U, V, n)
    if with_ii:
        out += [Gamma ** (q * q - 1), t ** 2, rel(Gamma ** t, Gamma ** -q)]
    if n > 2:
        out += [comm(Gamma, U ** V), comm(t, U ** V)]
    if n > 3:
        out += [comm(Gamma, V * U), comm(t, V * U)]
    out += [comm(Gamma, Gamma ** U), comm(t, t ** U), comm(Gamma, t ** U)]
    return out


def nu_centraliser(g: GroupSpec) -> list:
    n, q = g.n, g.q
    Gamma, t, U, V = gen("Gamma"), gen("t"), gen("U"), _V(g)
    Delta = derived(g)["Delta"]
    out = []
    if n > 2:
        out.append(U ** V)
    if n > 3:
        out.append(V * U)
    out.append(t ** U if q % 2 == 0 else t ** U * Delta ** ((q * q - 1) // 2))
    h = Gamma ** (q - 1) * (Gamma ** 3) ** U
    if n == 2 and q % 3 == 1:
        h = h * comm(t, ~Gamma) ** U
    out.append(h)
    if n > 2:
        out.append(Gamma ** U * ~(Gamma ** (V ** 2)))
    return out


def sigma_centraliser(g: GroupSpec, for_presentation=False) -> list:
    n, q = g.n, g.q
    Gamma, t, U, V = gen("Gamma"), gen("t"), gen("U"), _V(g)
    Z = derived(g)["Z"]
    out = []
    if not for_presentation:
        if n > 3:
            out.append(U ** (V ** 2))
        if n > 4:
            out.append(V * U * U ** V)
        if n > 2:
            out += [Gamma ** (V ** 2), t ** (V ** 2)]
    out.append(U ** t if q % 2 == 0 else U ** t * Z ** 2)
    out.append(Gamma * Gamma ** U)
    return out


def su3_block(g: GroupSpec, T: FieldTower) -> list:
    """Relators of SU(3,q) carried onto {nu, tau^-1, Gamma^-1, t} (or the q = 2 set)."""
    q = g.q
    nu, tau, Gamma, t, U = gen("nu"), gen("tau"), gen("Gamma"), gen("t"), gen("U")
    h = su3.GroupSpec("SU", 3, q)
    P = su3.present(h, T)
    if q == 2:
        mapping = {"nu": nu, "nu'": nu ** (Gamma ** U), "Delta": ~Gamma, "t": t}
    elif q in su3._SMALL:
        # the q = 3, 5 generators use another primitive element; go through standard generators
        std = {"x": nu, "y": ~Gamma, "t": ~tau, "s": (~Gamma) ** ((q + 1) // 2) * t,
               "delta": Gamma ** -(q + 1)}
        back = su3.std_to_pres(h, T)
        mapping = {k: substitute(back[k], std) for k in back}
    else:
        mapping = {"nu": nu, "tau": ~tau, "Delta": ~Gamma, "t": t}
    memo = {}
    return [substitute(r.word, mapping, memo) for r in P.relators]


def present(g: GroupSpec, T: FieldTower) -> Presentation:
    n, q = g.n, g.q
    F = T.ext
    nu, sigma, tau, Gamma, t, U = (gen(x) for x in ("nu", "sigma", "tau", "Gamma", "t", "U"))
    V = _V(g)
    D = derived(g)
    Delta, Z = D["Delta"], D["Z"]
    P = Presentation(g, generator_names(g, T))
    P.extend(n_relators(g, with_ii=False), "torus-normaliser", "N")
    P.extend([comm(nu, c) for c in nu_centraliser(g)], "centraliser", "nu")
    P.extend([comm(sigma, c) for c in sigma_centraliser(g, True)], "centraliser", "sigma")
    P.extend(su3_block(g, T), "base-case", "SU(3,q)")
    W = U if q % 2 == 0 else U * Z ** 2
    P.extend(sl2_relators(F, sigma, Delta, W, "SL", "sigma"), "base-case", "SL(2,q^2)")

    P.add(rel(comm(nu, nu ** U), (~sigma) ** (t ** U)), "steinberg", "(a)")
    if q == 4:
        P.add(rel(comm(nu, nu ** (Gamma * U)), sigma ** (Gamma ** 7 * t ** U)), "steinberg", "(b)")
    P.add(comm(nu, sigma), "steinberg", "(c)")
    if q == 4:
        P.add(comm(nu ** Gamma, sigma), "steinberg", "(d)")
    w = F.gen
    if q % 2 == 0:
        r = F.log(F.div(F.pow(w, q), F.add(w, F.pow(w, q))))
        P.add(rel(comm(nu, sigma ** U), sigma ** (Gamma ** r * Z ** U) * nu ** U), "steinberg", "(e)")
    else:
        r = F.log(F.mul(F.inv(2 % g.p), F.inv(F.prim_pow((q + 1) // 2))))
        P.add(rel(comm(nu, sigma ** U), sigma ** (Gamma ** r * Z ** U) * (~nu) ** U), "steinberg", "(e)")
    if q == 2:
        P.add(rel(comm(nu, sigma ** (Gamma * U)), sigma ** (Gamma * Z ** U) * nu ** (U ** ~Gamma)),
              "steinberg", "(f)")
    if n > 2:
        P.add(comm(nu, sigma ** V), "steinberg", "(g)")
    P.add(comm(nu, tau ** U), "steinberg", "(h)")
    for wd, tag, label in steinberg_relators(g, T, sigma, tau, Z, Delta, U, V):
        if tag == "steinberg":
            P.add(wd, "steinberg", f"(j){label}")
    P.meta["exceptional"] = []
    if g.quotient:
        wd, k = central_word(g, T)
        if k > 1:
            P.add(wd, "center-kill")
    return P


def central_word(g: GroupSpec, T: FieldTower):
    n, q = g.n, g.q
    k = math.gcd(q + 1, 2 * n + 1)
    if k == 1:
        return ONE, 1
    return (gen("Gamma") * derived(g)["Z"] * _V(g)) ** (2 * n * (q + 1) // k), k


def torus(g: GroupSpec, T: FieldTower) -> Torus:
    n, q = g.n, g.q
    names = [x for x in ("Gamma", "t", "U", "V") if x in generator_names(g, T)]
    P = Presentation(g, names)
    P.extend(n_relators(g), "torus-normaliser")
    return Torus(P, {k: gen(k) for k in names}, (2 * (q * q - 1)) ** n * math.factorial(n))


def centralisers(g: GroupSpec, T: FieldTower) -> list[Centraliser]:
    n, q = g.n, g.q
    return [Centraliser("nu", gen("nu"), nu_centraliser(g), 2 * (q * q - 1) * n),
            Centraliser("sigma", gen("sigma"), sigma_centraliser(g), 2 * (q * q - 1) * n * (n - 1))]


def std_names(g: GroupSpec) -> list[str]:
    return ["s", "t", "delta", "u", "v", "x", "y"]


def pres_to_std(g: GroupSpec, T: FieldTower) -> dict:
    q = g.q
    Gamma, V = gen("Gamma"), _V(g)
    return {"s": ~derived(g)["Z"], "t": ~gen("tau"), "delta": Gamma ** -(q + 1), "u": gen("U"), "v": V,
            "x": gen("nu") ** ~V, "y": (~Gamma) ** ~V}


def std_to_pres(g: GroupSpec, T: FieldTower) -> dict:
    q = g.q
    s, v = gen("s"), gen("v")
    nu = gen("x") ** v
    Gamma = ~(gen("y") ** v)
    tp = Gamma ** ((q * q + q) // 2) * ~s if q % 2 else s
    U = gen("u")
    sigma = comm(nu ** (tp * U), nu ** tp) ** tp
    out = {"nu": nu, "sigma": sigma, "tau": ~gen("t"), "Gamma": Gamma, "t": tp, "U": U}
    if g.n > 2:
        out["V"] = v
    return out
