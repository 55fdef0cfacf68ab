"""SL(d,q) on {tau, delta, U', V'} (delta dropped over prime fields)."""

from __future__ import annotations

import math

from ..field import FieldTower
from ..groups import GroupSpec, eps, mat_from_images, signed_cycle
from ..linalg import Mat
from ..slp import ONE, Presentation, Word, comm, gen, rel
from .common import Centraliser, Torus
from .sl2 import delta_word_prime, sl2_relators
from .sym import fix12_words, signed_relators, sym_relators


def matrices(g: GroupSpec, T: FieldTower) -> dict:
    F = T.base
    d = g.d
    w = F.gen
    out = {
        "tau": mat_from_images(F, d, {0: [(0, 1), (1, 1)]}),
        "delta": mat_from_images(F, d, {0: [(0, F.inv(w))], 1: [(1, w)]}),
        "U'": mat_from_images(F, d, {0: [(1, 1)], 1: [(0, F.neg_one)]}),
    }
    if d > 2:
        out["V'"] = mat_from_images(F, d, signed_cycle(F, d, list(range(d)), eps(d)))
    return out


def form(g: GroupSpec, T: FieldTower):
    return None


def std_names(g: GroupSpec) -> list[str]:
    return ["s", "t", "delta", "v"] if g.d > 2 else ["s", "t", "delta"]


def std_matrices(g: GroupSpec, T: FieldTower) -> dict:
    """Standard generators built directly (v is the block matrix [[0, 1], [-I, 0]])."""
    F = T.base
    d = g.d
    M = matrices(g, T)
    out = {"s": M["U'"], "t": M["tau"], "delta": M["delta"].inverse()}
    if d > 2:
        rows = [[0] * d for _ in range(d)]
        rows[0][d - 1] = 1
        for i in range(1, d):
            rows[i][i - 1] = F.neg_one
        out["v"] = Mat.from_rows(F, rows)
    return out


def pres_to_std(g: GroupSpec, T: FieldTower) -> dict:
    U = gen("U'")
    out = {"s": U, "t": gen("tau"), "delta": ~delta_word(g, T)}
    if g.d > 2:
        d, V = g.d, gen("V'")
        out["v"] = (V * ~U) ** (d - 1) * ~V if d % 2 and g.q % 2 else V ** (d - 1)
    return out


def std_to_pres(g: GroupSpec, T: FieldTower) -> dict:
    s, t, dl = gen("s"), gen("t"), gen("delta")
    out = {"tau": t, "U'": s}
    if g.e > 1:
        out["delta"] = ~dl
    if g.d > 2:
        d, v = g.d, gen("v")
        out["V'"] = ~v * (~s * v) ** (d - 1) if d % 2 and g.q % 2 else v ** (d - 1)
    return out


def perm_relators(U: Word, V: Word, d: int, q: int) -> list[Word]:
    return sym_relators(U, V, d) if q % 2 == 0 else signed_relators(U, V, d)


def n_relators(delta, U, V, d, q, omit=()):
    """Relations (ii)-(vi) for the torus normaliser <delta, U', V'>."""
    out = {}
    ii = []
    if d > 3:
        ii.append(comm(delta, U ** (V ** 2)))
    if d > 4:
        ii.append(comm(delta, V * U * U ** V))
    out["ii"] = ii
    out["iii"] = [rel(delta * delta ** V, delta ** (V * U))]
    out["iv"] = [rel(delta ** U, ~delta)]
    v = [comm(delta, delta ** V)]
    if d > 3:
        v.append(comm(delta, delta ** (V ** 2)))
    out["v"] = v
    out["vi"] = [delta ** (q - 1)] if q % 2 == 0 else [rel(delta ** ((q - 1) // 2), U ** 2)]
    res = []
    for k in ("ii", "iii", "iv", "v", "vi"):
        if k not in omit:
            res += out[k]
    return res


def centraliser_list(delta, U, V, d) -> list[Word]:
    out = []
    if d > 3:
        out.append(U ** (V ** 2))
    if d > 4:
        out.append(V * U * U ** V)
    if d > 3:
        out.append(delta ** (V ** 2))
    out.append(delta * (delta ** 2) ** V)
    return out


def present_sl(g: GroupSpec, T: FieldTower) -> Presentation:
    d, q, p, e = g.d, g.q, g.p, g.e
    F = T.base
    if d == 2:
        return present_sl2(g, T)
    tau, U, V = gen("tau"), gen("U'"), gen("V'")
    if e > 1:
        delta = gen("delta")
        P = Presentation(g, ["tau", "delta", "U'", "V'"])
        P.extend(perm_relators(U, V, d, q), "torus-normaliser", "N(i)")
        P.extend(n_relators(delta, U, V, d, q, omit=("iv", "vi")), "torus-normaliser", "N")
        P.extend(sl2_relators(F, tau, delta, U, "SL"), "base-case", "SL(2,q)")
        P.extend([comm(tau, c) for c in centraliser_list(delta, U, V, d)], "centraliser")
    else:
        P = Presentation(g, ["tau", "U'", "V'"])
        P.extend(perm_relators(U, V, d, q), "torus-normaliser", "N(i)")
        P.extend(sl2_relators(F, tau, None, U, "SL"), "base-case", "SL(2,p)")
        cent = []
        if d > 3:
            cent.append(comm(tau, U ** (V ** 2)))
        if d > 4:
            cent.append(comm(tau, V * ~U * (~U) ** V))
        P.extend(cent, "centraliser")
    P.add(rel(comm(tau, tau ** V), tau ** (U ** V)), "steinberg", "(a)")
    P.add(comm(tau, tau ** (U ** V)), "steinberg", "(b)")
    P.add(comm(tau, tau ** (U * V)), "steinberg", "(c)")
    if d > 3:
        P.add(comm(tau, tau ** (V ** 2)), "steinberg", "(d)")
    exceptional = []
    if q == 4 and d == 3:
        delta = gen("delta")
        P.add(rel(comm(tau, tau ** (delta * V)), tau ** (delta * U ** V)), "exceptional-multiplier", "(e)")
        P.add(comm(tau, tau ** (delta * U ** V)), "exceptional-multiplier", "(f)", redundant=True)
        P.add(comm(tau, tau ** (delta * U * V)), "exceptional-multiplier", "(g)", redundant=True)
        exceptional = ["(e)", "(f)", "(g)"]
    P.meta["exceptional"] = exceptional
    if g.quotient:
        w, order = central_word(g, T)
        if order > 1:
            P.add(w, "center-kill")
    return P


def present_sl2(g: GroupSpec, T: FieldTower) -> Presentation:
    F = T.base
    tau, U = gen("tau"), gen("U'")
    variant = "PSL" if g.quotient else "SL"
    if g.e > 1:
        P = Presentation(g, ["tau", "delta", "U'"])
        P.extend(sl2_relators(F, tau, gen("delta"), U, variant), "base-case", f"{variant}(2,q)")
    else:
        P = Presentation(g, ["tau", "U'"])
        P.extend(sl2_relators(F, tau, None, U, variant), "base-case", f"{variant}(2,p)")
    P.meta["exceptional"] = []
    return P


def delta_word(g: GroupSpec, T: FieldTower) -> Word:
    if g.e > 1:
        return gen("delta")
    return delta_word_prime(T.base, gen("tau"), gen("U'"))


def central_word(g: GroupSpec, T: FieldTower) -> tuple[Word, int]:
    d, q = g.d, g.q
    k = math.gcd(q - 1, d)
    if k == 1:
        return ONE, 1
    if d == 2:
        return gen("U'") ** 2, k
    delta = delta_word(g, T)
    return (delta * gen("U'") * ~gen("V'")) ** ((d - 1) * (q - 1) // k), k


def torus(g: GroupSpec, T: FieldTower) -> Torus:
    d, q = g.d, g.q
    order = (q - 1) ** (d - 1) * math.factorial(d)
    if d == 2:
        U = gen("U'")
        if q <= 3:
            P = Presentation(g, ["U'"])
            P.add(U ** (2 if q == 2 else 4), "torus-normaliser")
            return Torus(P, {"U'": gen("U'")}, order)
        delta = gen("delta")
        P = Presentation(g, ["delta", "U'"])
        if q % 2:
            P.extend([U ** 4, rel(delta ** ((q - 1) // 2), U ** 2), rel(delta ** U, ~delta)], "torus-normaliser")
        else:
            P.extend([U ** 2, delta ** (q - 1), rel(delta ** U, ~delta)], "torus-normaliser")
        return Torus(P, {"delta": delta_word(g, T), "U'": U}, order)
    U, V = gen("U'"), gen("V'")
    if q <= 3:
        P = Presentation(g, ["U'", "V'"])
        P.extend(perm_relators(U, V, d, q), "torus-normaliser")
        return Torus(P, {"U'": U, "V'": V}, order)
    delta = gen("delta")
    P = Presentation(g, ["delta", "U'", "V'"])
    P.extend(perm_relators(U, V, d, q), "torus-normaliser")
    P.extend(n_relators(delta, U, V, d, q), "torus-normaliser")
    return Torus(P, {"delta": delta_word(g, T), "U'": U, "V'": V}, order)


def centralisers(g: GroupSpec, T: FieldTower) -> list[Centraliser]:
    d, q = g.d, g.q
    tau = gen("tau")
    if d == 2:
        # N has order 2(q-1); only the centre {1, U'^2} commutes with tau
        if q % 2:
            return [Centraliser("long", tau, [gen("U'") ** 2], q - 1)]
        return [Centraliser("long", tau, [], 2 * (q - 1))]
    U, V = gen("U'"), gen("V'")
    if q <= 3:
        words = fix12_words(U, V, d) + ([U ** 2] if q == 3 else [])
        return [Centraliser("long", tau, words, (q - 1) * d * (d - 1))]
    return [Centraliser("long", tau, centraliser_list(gen("delta"), U, V, d), (q - 1) * d * (d - 1))]


def generator_names(g: GroupSpec, T: FieldTower) -> list[str]:
    names = ["tau", "delta", "U'", "V'"] if g.e > 1 else ["tau", "U'", "V'"]
    return names if g.d > 2 else names[:-1]


present = present_sl
