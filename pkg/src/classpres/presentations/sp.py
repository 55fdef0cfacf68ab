"""Sp(2n,q) on {sigma, tau, delta, Z, U, V} (V omitted for n = 2, delta for prime fields).

Basis (e_1, f_1, ..., e_n, f_n) with e_i.f_i = 1.
"""

from __future__ import annotations

import math

from ..field import FieldTower
from ..groups import GroupSpec, mat_from_images
from ..linalg import FormSpec, Mat
from ..slp import ONE, Presentation, comm, gen, rel
from .common import Centraliser, Torus
from .sl2 import delta_word_prime, sl2_relators
from .sym import sym_relators


def e_(i):
    return 2 * (i - 1)


def f_(i):
    return 2 * i - 1


def perm_matrix(F, n, perm):
    """Simultaneous permutation of the e's and f's; perm maps 1..n to 1..n."""
    imgs = {}
    for i, j in perm.items():
        imgs[e_(i)] = [(e_(j), 1)]
        imgs[f_(i)] = [(f_(j), 1)]
    return mat_from_images(F, 2 * n, imgs)


def matrices(g: GroupSpec, T: FieldTower) -> dict:
    F = T.base
    n, d = g.n, g.d
    w = F.gen
    m1 = F.neg_one
    out = {
        "sigma": mat_from_images(F, d, {e_(1): [(e_(1), 1), (e_(2), 1)], f_(2): [(f_(2), 1), (f_(1), m1)]}),
        "tau": mat_from_images(F, d, {e_(1): [(e_(1), 1), (f_(1), 1)]}),
        "delta": mat_from_images(F, d, {e_(1): [(e_(1), F.inv(w))], f_(1): [(f_(1), w)]}),
        "Z": mat_from_images(F, d, {e_(1): [(f_(1), 1)], f_(1): [(e_(1), m1)]}),
        "U": perm_matrix(F, n, {1: 2, 2: 1}),
        "V": perm_matrix(F, n, {i: i % n + 1 for i in range(1, n + 1)}),
    }
    return out


def form(g: GroupSpec, T: FieldTower) -> FormSpec:
    F = T.base
    G = Mat.identity(F, g.d).rows()
    G = [[0] * g.d for _ in range(g.d)]
    for i in range(1, g.n + 1):
        G[e_(i)][f_(i)] = 1
        G[f_(i)][e_(i)] = F.neg_one
    return FormSpec("symplectic", Mat.from_rows(F, G))


def generator_names(g: GroupSpec, T: FieldTower) -> list[str]:
    names = ["sigma", "tau", "delta", "Z", "U", "V"]
    if g.e == 1:
        names.remove("delta")
    if g.n == 2:
        names.remove("V")
    return names


def _V(g):
    # for n = 2 the matrix V equals U
    return gen("V") if g.n > 2 else gen("U")


def delta_word(g: GroupSpec, T: FieldTower):
    if g.e > 1:
        return gen("delta")
    return delta_word_prime(T.base, gen("tau"), gen("Z"))


def n1_relators(g: GroupSpec, with_order=True) -> list:
    n, q = g.n, g.q
    Z, U, V = gen("Z"), gen("U"), _V(g)
    out = sym_relators(U, V, n)
    if with_order:
        out.append(Z ** (2 if q % 2 == 0 else 4))
    if n > 2:
        out.append(comm(Z, U ** V))
    if n > 3:
        out.append(comm(Z, V * U))
    out.append(comm(Z, Z ** U))
    return out


def n_relators(g: GroupSpec, with_order=True) -> list:
    n, q = g.n, g.q
    delta, Z, U, V = gen("delta"), gen("Z"), gen("U"), _V(g)
    out = n1_relators(g, with_order)
    if with_order:
        out.append(delta ** (q - 1) if q % 2 == 0 else rel(delta ** ((q - 1) // 2), Z ** 2))
        out.append(rel(delta ** Z, ~delta))
    if n > 2:
        out.append(comm(delta, U ** V))
    if n > 3:
        out.append(comm(delta, V * U))
    out += [comm(Z, delta ** U), comm(delta, delta ** U)]
    return out


def sigma_centraliser(g: GroupSpec) -> list:
    n = g.n
    Z, U, V = gen("Z"), gen("U"), _V(g)
    out = [Z * U * ~Z]
    if n > 3:
        out.append(U ** (V ** 2))
    if n > 4:
        out.append(V * U * U ** V)
    if n > 2:
        out.append(Z ** (V ** 2))
    if g.e > 1:
        delta = gen("delta")
        if n > 2:
            out.append(delta ** (V ** 2))
        out.append(delta * delta ** V)
    elif g.q % 2:
        out.append(comm(Z ** 2, U))
    return out


def tau_centraliser(g: GroupSpec, for_presentation=False) -> list:
    n, q = g.n, g.q
    Z, U, V = gen("Z"), gen("U"), _V(g)
    out = [Z ** U]
    if n > 2:
        out.append(U ** V)
    if n > 3 and not (for_presentation and q % 2):
        out.append(V * U)
    if q % 2:
        out.append(Z ** 2)
    if g.e > 1:
        out.append(gen("delta") ** U)
    return out


def present(g: GroupSpec, T: FieldTower) -> Presentation:
    n, q = g.n, g.q
    F = T.base
    sigma, tau, Z, U, V = gen("sigma"), gen("tau"), gen("Z"), gen("U"), _V(g)
    P = Presentation(g, generator_names(g, T))
    Up = U * Z ** 2 if q % 2 else U
    if g.e > 1:
        delta = gen("delta")
        P.extend(n_relators(g, with_order=False), "torus-normaliser", "N")
        P.extend([comm(sigma, c) for c in sigma_centraliser(g)], "centraliser", "sigma")
        P.extend([comm(tau, c) for c in tau_centraliser(g, True)], "centraliser", "tau")
        Delta = comm(U, delta)
        P.extend(sl2_relators(F, sigma, Delta, Up, "SL", "sigma"), "base-case", "SL(2,q) sigma")
        P.extend(sl2_relators(F, tau, delta, Z, "SL", "tau"), "base-case", "SL(2,q) tau")
    else:
        P.extend(n1_relators(g), "torus-normaliser", "N1")
        P.extend([comm(sigma, c) for c in sigma_centraliser(g)], "centraliser", "sigma")
        P.extend([comm(tau, c) for c in tau_centraliser(g, True)], "centraliser", "tau")
        P.extend(sl2_relators(F, sigma, None, Up, "SL"), "base-case", "SL(2,p) sigma")
        P.extend(sl2_relators(F, tau, None, Z, "SL"), "base-case", "SL(2,p) tau")
    if n > 2:
        P.add(rel(comm(sigma, sigma ** V), sigma ** (V * U)), "steinberg", "(a)")
        P.add(comm(sigma, sigma ** (V * U)), "steinberg", "(b)")
        P.add(comm(sigma, sigma ** (U * V)), "steinberg", "(c)")
    if n > 3:
        P.add(comm(sigma, sigma ** (V ** 2)), "steinberg", "(d)")
    if q % 2:
        P.add(rel(comm(sigma, sigma ** Z), (tau ** 2) ** (Z * U)), "steinberg", "(e)")
    else:
        P.add(comm(sigma, sigma ** Z), "steinberg", "(e)")
    P.add(comm(sigma, tau), "steinberg", "(f)")
    P.add(rel(comm(sigma, tau ** U), sigma ** (Z ** U) * ~tau), "steinberg", "(g)")
    if n > 2:
        P.add(comm(sigma, tau ** (V ** 2)), "steinberg", "(h)")
    P.add(comm(tau, tau ** U), "steinberg", "(j)")
    P.meta["exceptional"] = []
    if g.quotient:
        w, k = central_word(g, T)
        if k > 1:
            P.add(w, "center-kill")
    return P


def central_word(g: GroupSpec, T: FieldTower):
    if g.q % 2 == 0:
        return ONE, 1
    return (gen("Z") * _V(g)) ** (2 * g.n), 2


def torus(g: GroupSpec, T: FieldTower) -> Torus:
    n, q = g.n, g.q
    names = [x for x in ("delta", "Z", "U", "V") if x in generator_names(g, T)]
    P = Presentation(g, names)
    if g.e > 1:
        P.extend(n_relators(g), "torus-normaliser")
        order = (2 * (q - 1)) ** n * math.factorial(n)
    else:
        P.extend(n1_relators(g), "torus-normaliser")
        order = (2 if q == 2 else 4) ** n * math.factorial(n)
    return Torus(P, {k: gen(k) for k in names}, order)


def centralisers(g: GroupSpec, T: FieldTower) -> list[Centraliser]:
    n, q = g.n, g.q
    if g.e > 1:
        s_idx = 2 * n * (n - 1) * (q - 1)
        t_idx = 2 * n * (q - 1) if q % 2 == 0 else n * (q - 1)
    else:
        s_idx = 2 * n * (n - 1) if q == 2 else 4 * n * (n - 1)
        t_idx = 2 * n
    return [Centraliser("sigma", gen("sigma"), sigma_centraliser(g), s_idx),
            Centraliser("tau", gen("tau"), tau_centraliser(g), t_idx)]


def std_names(g: GroupSpec) -> list[str]:
    return ["s", "t", "delta", "u", "v", "x"]


def pres_to_std(g: GroupSpec, T: FieldTower) -> dict:
    Z = gen("Z")
    return {"s": Z, "t": gen("tau"), "delta": ~delta_word(g, T), "u": gen("U"), "v": _V(g),
            "x": gen("sigma") ** Z}


def std_to_pres(g: GroupSpec, T: FieldTower) -> dict:
    s = gen("s")
    out = {"sigma": gen("x") ** ~s, "tau": gen("t"), "Z": s, "U": gen("u")}
    if g.e > 1:
        out["delta"] = ~gen("delta")
    if g.n > 2:
        out["V"] = gen("v")
    return out


def std_matrices(g: GroupSpec, T: FieldTower) -> dict:
    M = matrices(g, T)
    ev_delta = M["delta"].inverse()
    return {"s": M["Z"], "t": M["tau"], "delta": ev_delta, "u": M["U"], "v": M["V"],
            "x": M["sigma"].conj(M["Z"])}
