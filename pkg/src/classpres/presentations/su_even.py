"""SU(2n,q) on {sigma, tau, Z, delta, Delta, U, V} (V omitted for n = 2).

Hyperbolic basis (e_1, f_1, ..., e_n, f_n) with e_i.f_i = f_i.e_i = 1 for the hermitian form.
"""

from __future__ import annotations

import math

from ..field import FieldTower
from ..groups import GroupSpec, mat_from_images
from ..linalg import FormSpec, Mat
from ..slp import ONE, Presentation, comm, gen, rel
from .common import Centraliser, Torus
from .sl2 import delta_word_prime, sl2_relators
from .sp import e_, f_, perm_matrix
from .sym import sym_relators


def matrices(g: GroupSpec, T: FieldTower) -> dict:
    F = T.ext
    n, d, q = g.n, g.d, g.q
    w = F.gen
    psi = T.psi
    w0 = T.omega0
    return {
        "sigma": mat_from_images(F, d, {e_(1): [(e_(1), 1), (e_(2), 1)], f_(2): [(f_(2), 1), (f_(1), F.neg_one)]}),
        "tau": mat_from_images(F, d, {e_(1): [(e_(1), 1), (f_(1), F.neg(psi))]}),
        "Z": mat_from_images(F, d, {e_(1): [(f_(1), F.neg(psi))], f_(1): [(e_(1), F.inv(psi))]}),
        "delta": mat_from_images(F, d, {e_(1): [(e_(1), F.inv(w0))], f_(1): [(f_(1), w0)]}),
        "Delta": mat_from_images(F, d, {e_(1): [(e_(1), F.inv(w))], f_(1): [(f_(1), F.pow(w, q))],
                                        e_(2): [(e_(2), w)], f_(2): [(f_(2), F.inv(F.pow(w, q)))]}),
        "U": perm_matrix(F, n, {1: 2, 2: 1}),
        "V": perm_matrix(F, n, {i: i % n + 1 for i in range(1, n + 1)}),
    }


def form(g: GroupSpec, T: FieldTower) -> FormSpec:
    F = T.ext
    G = [[0] * g.d for _ in range(g.d)]
    for i in range(1, g.n + 1):
        G[e_(i)][f_(i)] = G[f_(i)][e_(i)] = 1
    return FormSpec("hermitian", Mat.from_rows(F, G), None, T.q)


def generator_names(g: GroupSpec, T: FieldTower) -> list[str]:
    names = ["sigma", "tau", "Z", "delta", "Delta", "U", "V"]
    return names if g.n > 2 else names[:-1]


def _V(g):
    return gen("V") if g.n > 2 else gen("U")


def n_relators(g: GroupSpec, omit=()) -> dict:
    """Relations for N = <Z, delta, Delta, U, V>, keyed so the full presentation can omit some.

    Keys: 'D:i'..'D:vi' for <Delta, U, V>, 'd:ii'..'d:v' adding delta, 'Z:ii'..'Z:viii' adding Z.
    """
    n, q = g.n, g.q
    Z, delta, Delta, U, V = gen("Z"), gen("delta"), gen("Delta"), gen("U"), _V(g)
    R = {}
    R["D:i"] = sym_relators(U, V, n)
    R["D:ii"] = ([comm(Delta, U ** (V ** 2))] if n > 3 else []) + \
        ([comm(Delta, V * U * U ** V)] if n > 4 else [])
    R["D:iii"] = [rel(Delta ** U, ~Delta)]
    R["D:iv"] = [rel(Delta * Delta ** V, Delta ** (V * U))] if n > 2 else []
    R["D:v"] = ([comm(Delta, Delta ** V)] if n > 2 else []) + \
        ([comm(Delta, Delta ** (V ** 2))] if n > 3 else [])
    R["D:vi"] = [Delta ** (q * q - 1)]
    R["d:ii"] = [delta ** (q - 1)]
    R["d:iii"] = ([comm(delta, U ** V)] if n > 2 else []) + ([comm(delta, V * U)] if n > 3 else [])
    R["d:iv"] = [comm(delta, Delta)] + ([comm(delta, Delta ** V)] if n > 2 else [])
    R["d:v"] = [rel(Delta ** (q + 1), delta * ~(delta ** U))]
    R["Z:ii"] = [rel(Z ** 2, delta ** ((q - 1) // 2)) if q % 2 else Z ** 2]
    R["Z:iii"] = ([comm(Z, U ** V)] if n > 2 else []) + ([comm(Z, V * U)] if n > 3 else [])
    R["Z:iv"] = [comm(Z, Z ** U)]
    R["Z:v"] = [rel(delta, comm(~Delta, Z))]
    R["Z:vi"] = [comm(Z, Delta ** V)] if n > 2 else []
    R["Z:vii"] = [rel(delta ** Z, ~delta)]
    R["Z:viii"] = [comm(delta, Z ** U)] if n == 2 else []
    return {k: v for k, v in R.items() if k not in omit}


def sigma_centraliser(g: GroupSpec) -> list:
    n, q = g.n, g.q
    Z, delta, Delta, U, V = gen("Z"), gen("delta"), gen("Delta"), gen("U"), _V(g)
    out = []
    if n > 3:
        out.append(U ** (V ** 2))
    if n > 4:
        out.append(V * U * U ** V)
    if q % 2 and n > 3:
        out.append(Delta ** (V ** 2))
    if q % 2 and n == 3:
        out.append(delta ** (V ** 2))
    if n > 2:
        out += [Z ** (V ** 2), Delta * (Delta ** 2) ** V]
    if n == 2:
        out.append(delta * delta ** U if q % 2 == 0 else Delta ** ((q + 1) // 2) * ~delta)
    out.append(Z * U * ~Z)
    return out


def tau_centraliser(g: GroupSpec, for_presentation=False) -> list:
    n, q = g.n, g.q
    Z, delta, Delta, U, V = gen("Z"), gen("delta"), gen("Delta"), gen("U"), _V(g)
    out = []
    if n > 2:
        out.append(U ** V)
    if n > 3 and not for_presentation:
        out.append(V * U)
    if n == 2 and q % 2:
        out.append(delta ** U)
    if n > 2:
        out.append(Delta ** V)
    out += [Z ** U, Delta ** 2 * ~delta]
    return out


def steinberg_relators(g: GroupSpec, T: FieldTower, sigma, tau, Z, Delta, U, V) -> list:
    """Steinberg instances (a)-(h), plus (vi) when (n, q) = (2, 3), as (word, tag, label)."""
    n, q = g.n, g.q
    F = T.ext
    out = [(comm(sigma, tau), "steinberg", "(a)"),
           (rel(comm(sigma, sigma ** Z), (tau ** 2) ** (Z * U) if q % 2 else ONE), "steinberg", "(b)")]
    rhs = ONE
    if q != 3:
        x = F.add(F.pow(F.gen, 2), F.pow(F.gen, 2 * q))
        rhs = tau ** (Z * U * Delta ** (F.log(x) // (q + 1)))
    out.append((rel(comm(sigma ** Delta, sigma ** Z), rhs), "steinberg", "(b)"))
    out.append((rel(comm(sigma, tau ** Z), sigma ** Z * (~tau) ** (Z * U)), "steinberg", "(c)"))
    if n > 2:
        out.append((comm(sigma, sigma ** (U ** V)), "steinberg", "(d)"))
        out.append((rel(comm(sigma, sigma ** V), sigma ** (V * U)), "steinberg", "(e)"))
        if n == 3 and q == 2:
            out.append((comm(sigma, sigma ** (U ** V * Delta)), "steinberg", "(d) q=2"))
            out.append((rel(comm(sigma, sigma ** (V * Delta)), sigma ** (V * U * ~Delta)), "steinberg", "(e) q=2"))
    if n < 4:
        out.append((comm(tau, tau ** U), "steinberg", "(f)"))
    if n == 3:
        out.append((comm(tau, sigma ** V), "steinberg", "(g)"))
    if n > 3:
        out.append((comm(sigma, sigma ** (V ** 2)), "steinberg", "(h)"))
    if n == 2 and q == 3:
        out.append((rel(tau, comm((~sigma) ** (U * Z), sigma) ** Delta), "exceptional-multiplier", "(vi)"))
    return out


def present(g: GroupSpec, T: FieldTower, psl_block: bool = False) -> Presentation:
    """psl_block replaces SL(2,q^2) on {sigma, Delta, UZ^2} by PSL(2,q^2) (SU(4,q)/<-I>, q odd)."""
    n, q = g.n, g.q
    sigma, tau, Z, delta, Delta, U, V = (gen(x) for x in ("sigma", "tau", "Z", "delta", "Delta", "U", "V"))
    V = _V(g)
    P = Presentation(g, generator_names(g, T))
    R = n_relators(g, omit=("D:iii", "D:vi", "d:ii", "Z:ii", "Z:vii"))
    for k, ws in R.items():
        P.extend(ws, "torus-normaliser", f"N {k}")
    P.extend([comm(sigma, c) for c in sigma_centraliser(g)], "centraliser", "sigma")
    P.extend([comm(tau, c) for c in tau_centraliser(g, True)], "centraliser", "tau")
    if g.e > 1:
        P.extend(sl2_relators(T.base, tau, delta, Z, "SL", "tau"), "base-case", "SL(2,q)")
    else:
        P.extend(sl2_relators(T.base, tau, None, Z, "SL", "tau"), "base-case", "SL(2,p)")
        P.add(rel(delta, delta_word_prime(T.base, tau, Z)), "base-case", "SL(2,p) delta")
    variant = "PSL" if psl_block else "SL"
    P.extend(sl2_relators(T.ext, sigma, Delta, U * Z ** 2, variant, "sigma"), "base-case", f"{variant}(2,q^2)")

    exceptional = []
    for w, tag, label in steinberg_relators(g, T, sigma, tau, Z, Delta, U, V):
        P.add(w, tag, label)
        if tag == "exceptional-multiplier":
            exceptional.append(label)
    P.meta["exceptional"] = exceptional
    if g.quotient:
        w, k = central_word(g, T)
        if k > 1:
            P.add(w, "center-kill")
    return P


def _v2(x: int) -> int:
    return (x & -x).bit_length() - 1


def central_word(g: GroupSpec, T: FieldTower):
    n, q = g.n, g.q
    k = math.gcd(q + 1, 2 * n)
    if k == 1:
        return ONE, 1
    h = gen("Delta") ** (q - 1) * gen("U") * ~_V(g)
    c = math.gcd(q + 1, n)
    if _v2(n) >= _v2(q + 1):
        return h ** ((n - 1) * (q + 1) // c), k
    return gen("Z") ** 2 * h ** ((n - 1) * (q + 1) // (2 * c)), k


def torus(g: GroupSpec, T: FieldTower) -> Torus:
    n, q = g.n, g.q
    names = [x for x in ("Z", "delta", "Delta", "U", "V") if x in generator_names(g, T)]
    P = Presentation(g, names)
    for k, ws in n_relators(g).items():
        P.extend(ws, "torus-normaliser", k)
    order = (q - 1) * (q * q - 1) ** (n - 1) * 2 ** n * math.factorial(n)
    return Torus(P, {k: gen(k) for k in names}, order)


def centralisers(g: GroupSpec, T: FieldTower) -> list[Centraliser]:
    n, q = g.n, g.q
    if n > 2:
        s_idx = 2 * n * (n - 1) * (q * q - 1)
    else:
        s_idx = 2 * (q * q - 1) if q % 2 else 4 * (q * q - 1)
    return [Centraliser("sigma", gen("sigma"), sigma_centraliser(g), s_idx),
            Centraliser("tau", gen("tau"), tau_centraliser(g), 2 * (q - 1) * n)]


def std_names(g: GroupSpec) -> list[str]:
    return ["s", "t", "delta", "u", "v", "x", "y"]


def pres_to_std(g: GroupSpec, T: FieldTower) -> dict:
    return {"s": ~gen("Z"), "t": ~gen("tau"), "delta": ~gen("delta"), "u": gen("U"), "v": _V(g),
            "x": gen("sigma"), "y": ~gen("Delta")}


def std_to_pres(g: GroupSpec, T: FieldTower) -> dict:
    out = {"Z": ~gen("s"), "tau": ~gen("t"), "delta": ~gen("delta"), "U": gen("u"),
           "sigma": gen("x"), "Delta": ~gen("y")}
    if g.n > 2:
        out["V"] = gen("v")
    return out
