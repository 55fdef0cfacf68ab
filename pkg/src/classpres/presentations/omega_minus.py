"""Omega-(2n,q), n >= 3, on {sigma, tau, delta, z, U', V'} (q odd) or {sigma, tau, delta, z, U, V}
(q even); V' (V) is omitted for n = 3.

Basis (e_1, f_1, ..., e_{n-1}, f_{n-1}, w_1, w_2).  For odd q the bilinear form
has e_i.f_i = 1, w_1.w_1 = -2, w_2.w_2 = 2 omega0.  For even q the quadratic
form is x_i y_i on each hyperbolic pair plus a^2 + B ab + omega0 b^2 on
(w_1, w_2), with B = omega + omega^q.  All matrices are written over GF(q);
constants that come from GF(q^2) are restricted back.

Omega-(6,q) is presented through SU(4,q) (mod -I for odd q) acting on the
exterior square.
"""

from __future__ import annotations

import math

from ..field import FieldTower
from ..groups import GroupSpec, eps, mat_from_images, signed_cycle
from ..linalg import FormSpec, Mat
from ..slp import ONE, Presentation, comm, gen, rel, substitute
from . import su_even
from .common import Centraliser, Torus
from .sp import e_, f_
from .sym import signed_relators, sym_relators


def _odd(g):
    return g.q % 2 == 1


def _W(g):
    return 2 * g.n - 2, 2 * g.n - 1


def _consts(g: GroupSpec, T: FieldTower):
    """A, B, C of delta_1, restricted to GF(q)."""
    E = T.ext
    q = g.q
    w = E.gen
    a, b = E.prim_pow(q - 1), E.prim_pow(1 - q)
    if _odd(g):
        half = E.inv(2 % g.p)
        psi = T.psi
        A = E.mul(E.add(a, b), half)
        B = E.mul(E.mul(psi, E.sub(b, a)), half)
        C = E.mul(E.mul(E.inv(psi), E.sub(b, a)), half)
    else:
        A = E.add(E.add(a, b), 1)
        B = E.add(w, E.pow(w, q))
        C = E.add(E.inv(w), E.prim_pow(-q))
    return T.restrict(A), T.restrict(B), T.restrict(C)


def matrices(g: GroupSpec, T: FieldTower) -> dict:
    F = T.base
    n, d = g.n, g.d
    m = n - 1
    w0 = F.gen
    m1 = F.neg_one
    W1, W2 = _W(g)
    A, B, C = _consts(g, T)
    es = [e_(i) for i in range(1, m + 1)]
    fs = [f_(i) for i in range(1, m + 1)]
    perm = {}
    for i, j in ((1, 2), (2, 1)):
        perm[e_(i)] = [(e_(j), 1)]
        perm[f_(i)] = [(f_(j), 1)]
    cyc = signed_cycle(F, d, es, 1)
    cyc.update(signed_cycle(F, d, fs, 1))
    M = {"U": mat_from_images(F, d, perm), "V": mat_from_images(F, d, cyc)}
    ed = {e_(1): [(e_(1), F.inv(w0))], f_(1): [(f_(1), w0)]}
    if _odd(g):
        ed[W1] = [(W1, A), (W2, F.neg(C))]
        ed[W2] = [(W1, F.neg(B)), (W2, A)]
        sgn = signed_cycle(F, d, es, eps(m))
        sgn.update(signed_cycle(F, d, fs, eps(m)))
        M.update({
            "sigma": mat_from_images(F, d, {e_(1): [(e_(1), 1), (e_(2), 1)], f_(2): [(f_(2), 1), (f_(1), m1)]}),
            "tau": mat_from_images(F, d, {e_(1): [(e_(1), 1), (f_(1), 1), (W1, 1)],
                                          W1: [(W1, 1), (f_(1), 2 % g.p)]}),
            "delta": mat_from_images(F, d, ed),
            "z": mat_from_images(F, d, {e_(1): [(f_(1), 1)], f_(1): [(e_(1), 1)], W1: [(W1, m1)]}),
            "U'": mat_from_images(F, d, {e_(1): [(e_(2), 1)], e_(2): [(e_(1), m1)],
                                         f_(1): [(f_(2), 1)], f_(2): [(f_(1), m1)]}),
            "V'": mat_from_images(F, d, sgn),
        })
    else:
        ed[W1] = [(W1, A), (W2, C)]
        ed[W2] = [(W1, B), (W2, 1)]
        M.update({
            "sigma": mat_from_images(F, d, {e_(1): [(e_(1), 1), (e_(2), 1)], f_(2): [(f_(2), 1), (f_(1), 1)]}),
            "tau": mat_from_images(F, d, {e_(1): [(e_(1), 1), (f_(1), 1), (W1, 1)], W2: [(W2, 1), (f_(1), B)]}),
            "delta": mat_from_images(F, d, ed),
            "z": mat_from_images(F, d, {e_(1): [(f_(1), 1)], f_(1): [(e_(1), 1)], W2: [(W2, 1), (W1, B)]}),
        })
    return M


def form(g: GroupSpec, T: FieldTower) -> FormSpec:
    F = T.base
    d = g.d
    W1, W2 = _W(g)
    Q = [[0] * d for _ in range(d)]
    G = [[0] * d for _ in range(d)]
    for i in range(1, g.n):
        Q[e_(i)][f_(i)] = 1
        G[e_(i)][f_(i)] = G[f_(i)][e_(i)] = 1
    if _odd(g):
        G[W1][W1], G[W2][W2] = F.neg(2 % g.p), F.mul(2 % g.p, F.gen)
        Q[W1][W1], Q[W2][W2] = F.neg_one, F.gen
    else:
        B = _consts(g, T)[1]
        G[W1][W2] = G[W2][W1] = B
        Q[W1][W1], Q[W1][W2], Q[W2][W2] = 1, B, F.gen
    return FormSpec("quadratic-minus", Mat.from_rows(F, G), Mat.from_rows(F, Q))


def generator_names(g: GroupSpec, T: FieldTower) -> list[str]:
    names = ["sigma", "tau", "delta", "z", "U'", "V'"] if _odd(g) else ["sigma", "tau", "delta", "z", "U", "V"]
    return names if g.n > 3 else names[:-1]


def _gens(g):
    u, v = ("U'", "V'") if _odd(g) else ("U", "V")
    U = gen(u)
    return gen("sigma"), gen("tau"), gen("delta"), gen("z"), U, gen(v) if g.n > 3 else U


def _VU(g, U, V):
    return V * ~U if _odd(g) else V * U


# -- Omega-(6,q) through SU(4,q) --

def su4_map(g: GroupSpec) -> dict:
    sigma, tau, delta, z, U, _ = _gens(g)
    if _odd(g):
        return {"sigma": ~tau, "tau": sigma, "Z": U, "delta": delta * (~delta) ** U, "Delta": delta,
                "U": z * U ** 2}
    return {"sigma": tau, "tau": sigma, "Z": U, "delta": delta * (~delta) ** U, "Delta": delta, "U": z}


def omega6_block(g: GroupSpec, T: FieldTower) -> list:
    """(word, tag, label) for Omega-(6,q), transported from SU(4,q) (mod -I for odd q)."""
    h = GroupSpec("SU", 4, g.q)
    P = su_even.present(h, T, psl_block=_odd(g))
    mapping = su4_map(g)
    memo = {}
    return [(substitute(r.word, mapping, memo), r.tag, r.label) for r in P.relators]


# -- n >= 4 --

def n1_relators(g: GroupSpec, full=True) -> list:
    """N1 = <z, U', V'> (signed, odd q) or <z, U, V> = C2 wr S_{n-1} (even q).

    full=False drops z^2, [z, U'^2] (odd q), [z, z^U'] and U'^4 (U^2): the
    presentation of the whole group gets them from the Omega-(6,q) block.
    """
    m = g.n - 1
    _, _, _, z, U, V = _gens(g)
    if _odd(g):
        out = signed_relators(U, V, m)
    else:
        out = sym_relators(U, V, m)
    if not full:
        out = out[1:]
    if m > 2:
        out.append(comm(z, U ** V))
    if m > 3:
        out.append(comm(z, _VU(g, U, V)))
    if full:
        out.append(z ** 2)
        if _odd(g):
            out.append(comm(z, U ** 2))
        out.append(comm(z, z ** U))
    return out


def n_relators(g: GroupSpec, full=True) -> list:
    n, q = g.n, g.q
    _, _, d, z, U, V = _gens(g)
    out = n1_relators(g, full)
    if n > 3:
        out.append(comm(d, U ** V))
    if n > 4:
        out.append(comm(d, _VU(g, U, V)))
    if not full:
        return out
    if _odd(g):
        out.append(rel(U ** 2, (d * (~d) ** U) ** ((q - 1) // 2)))
        out += [rel(comm(d, z ** U), d ** (q - 1)), d ** ((q * q - 1) // 2)]
    else:
        out += [rel(comm(d, z ** U), d ** (q - 1)), d ** (q * q - 1)]
    out += [comm(d, d ** U), rel(d ** z, ~d), comm(d ** (q - 1), U)]
    return out


def sigma_centraliser(g: GroupSpec, full=True) -> list:
    n = g.n
    _, _, d, z, U, V = _gens(g)
    out = []
    if n > 4:
        out.append(U ** (V ** 2))
    if n > 5:
        out.append(V * ~U * ~(U ** V) if _odd(g) else V * U * U ** V)
    if n > 3:
        out += [z ** (V ** 2), d ** (V ** 2)]
    if full:
        out += [d * d ** U, z * z ** U * U]
    return out


def tau_centraliser(g: GroupSpec, full=True) -> list:
    n, q = g.n, g.q
    _, _, d, z, U, V = _gens(g)
    out = []
    if _odd(g):
        if full:
            # diag(-1,-1,w0^-1,w0,1,...,1,-1,-1)
            out += [d ** ((q - 1) // 2) * d ** U, U * z * U]
    elif n > 3:
        out.append(d ** (V ** 2) * (~d) ** V)
    if not _odd(g) and full:
        out.append(z ** U)
    if n > 3:
        out.append(U ** V)
    if n > 4:
        out.append(_VU(g, U, V))
    if not _odd(g) and n == 3 and full:
        # delta_1^(q-1) delta_2^2 (the V-conjugate word needs n > 3)
        out.append(d ** (q - 1) * (d ** 2) ** U)
    return out


def steinberg(g: GroupSpec):
    sigma, _, _, _, U, V = _gens(g)
    VU = _VU(g, U, V)
    out = [(rel(comm(sigma, sigma ** V), sigma ** VU), "(a)"), (comm(sigma, sigma ** VU), "(b)"),
           (comm(sigma, sigma ** (U ** VU)), "(c)")]
    if g.n > 4:
        out.append((comm(sigma, sigma ** (V ** 2)), "(d)"))
    return out


def present(g: GroupSpec, T: FieldTower) -> Presentation:
    P = Presentation(g, generator_names(g, T))
    exceptional = []
    block = omega6_block(g, T)
    if g.n > 3:
        sigma, tau, _, _, _, V = _gens(g)
        P.extend(n_relators(g, full=False), "torus-normaliser", "N")
        P.extend([comm(sigma, c) for c in sigma_centraliser(g, full=False)], "centraliser", "sigma")
        P.extend([comm(tau, c) for c in tau_centraliser(g, full=False)], "centraliser", "tau")
    for w, tag, label in block:
        P.add(w, tag, f"Omega-(6,q) {label}".rstrip())
        if tag == "exceptional-multiplier":
            exceptional.append(label)
    if g.n > 3:
        for w, label in steinberg(g):
            P.add(w, "steinberg", label)
        P.add(comm(sigma ** V, tau), "steinberg", "(e)")
    P.meta["exceptional"] = exceptional
    if g.quotient:
        w, k = central_word(g, T)
        if k > 1:
            P.add(w, "center-kill")
    return P


def central_word(g: GroupSpec, T: FieldTower):
    n, q = g.n, g.q
    if q % 2 == 0 or pow(q, n, 4) != 3:
        return ONE, 1
    V = _gens(g)[5]
    return V ** (n - 1) * gen("delta") ** ((q * q - 1) // 4), 2


def torus(g: GroupSpec, T: FieldTower) -> Torus:
    n, q = g.n, g.q
    names = generator_names(g, T)[2:]
    P = Presentation(g, names)
    P.extend(n_relators(g), "torus-normaliser")
    k = n - 2 if _odd(g) else n - 1
    order = (q + 1) * (q - 1) ** (n - 1) * 2 ** k * math.factorial(n - 1)
    return Torus(P, {x: gen(x) for x in names}, order)


def centralisers(g: GroupSpec, T: FieldTower) -> list[Centraliser]:
    n, q = g.n, g.q
    sigma, tau = gen("sigma"), gen("tau")
    ti = (n - 1) * (q * q - 1) * (1 if _odd(g) else 2)
    return [Centraliser("sigma", sigma, sigma_centraliser(g), 2 * (n - 1) * (n - 2) * (q - 1)),
            Centraliser("tau", tau, tau_centraliser(g), ti)]


# -- standard generators --

def std_names(g: GroupSpec) -> list[str]:
    return ["s", "t", "delta", "u", "v"]


def _dexp(q):
    return (q - 1) ** 2 // 2 - 1


def pres_to_std(g: GroupSpec, T: FieldTower) -> dict:
    _, tau, d, z, U, V = _gens(g)
    Vi = ~V
    t = tau if g.d % 4 == 0 else ~tau
    if _odd(g):
        dl = (d ** Vi) ** _dexp(g.q)
    else:
        dl = (~d) ** Vi
    return {"s": z ** Vi, "t": t ** Vi, "delta": dl, "u": U, "v": V}


def _m_even(T: FieldTower) -> int:
    E = T.ext
    w2 = E.mul(E.gen, E.gen)
    return T.base.log(T.restrict(E.add(w2, E.pow(w2, T.q))))


def std_to_pres(g: GroupSpec, T: FieldTower) -> dict:
    n, p, q = g.n, g.p, g.q
    s, t, dl, u, v = gen("s"), gen("t"), gen("delta"), gen("u"), gen("v")
    V = v if n > 3 else u
    z = s ** V
    tau = t ** V if g.d % 4 == 0 else ~(t ** V)
    U = u
    if _odd(g):
        d = (dl ** V) ** _dexp(q)
        sigma = comm(tau, tau ** (z * U)) ** ((p - 1) // 2)
        names = ("U'", "V'")
    else:
        d = ~(dl ** V)
        dV = d ** V
        sigma = comm(tau ** dV, tau ** U) ** (z * U * (~dV) ** (q - _m_even(T)))
        names = ("U", "V")
    out = {"sigma": sigma, "tau": tau, "delta": d, "z": z, names[0]: U}
    if n > 3:
        out[names[1]] = v
    return out
