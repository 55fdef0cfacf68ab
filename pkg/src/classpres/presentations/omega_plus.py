"""Omega+(2n,q).

Basis (e_1, f_1, ..., e_n, f_n), Q(sum x_i e_i + y_i f_i) = sum x_i y_i, so
e_i.f_i = 1 for the polar form.

Generators for n >= 3: odd q {sigma, Delta, Z, U', V'}; even q {sigma, delta,
Z, U, V}; Delta (odd) and delta (even) are dropped over prime fields.  For
n = 2 the group is a central product of two SL(2,q) and is presented on
{sigma, Delta, U', sigma', Delta', Z} (U in place of U' for even q), the second
copy being <sigma', Delta', Z U'>.
"""

from __future__ import annotations

import math

from ..field import FieldTower
from ..groups import GroupSpec, eps, mat_from_images, signed_cycle
from ..linalg import FormSpec, Mat
from ..slp import ONE, Presentation, comm, gen, rel
from .common import Centraliser, Torus
from .sl2 import delta_word_prime, sl2_relators
from .sp import e_, f_, perm_matrix
from .sym import signed_relators, sym_relators


def _odd(g):
    return g.q % 2 == 1


def _primes(g):
    """Names of U and V for this characteristic."""
    return ("U'", "V'") if _odd(g) else ("U", "V")


def matrices(g: GroupSpec, T: FieldTower) -> dict:
    F = T.base
    n, d = g.n, g.d
    w = F.gen
    wi = F.inv(w)
    m1 = F.neg_one
    out = {
        "Z": mat_from_images(F, d, {e_(1): [(f_(1), 1)], f_(1): [(e_(1), 1)],
                                    e_(2): [(f_(2), 1)], f_(2): [(e_(2), 1)]}),
        "U": perm_matrix(F, n, {1: 2, 2: 1}),
        "V": perm_matrix(F, n, {i: i % n + 1 for i in range(1, n + 1)}),
        "delta": mat_from_images(F, d, {e_(1): [(e_(1), wi)], f_(1): [(f_(1), w)]}),
        "Delta": mat_from_images(F, d, {e_(1): [(e_(1), wi)], f_(1): [(f_(1), w)],
                                        e_(2): [(e_(2), w)], f_(2): [(f_(2), wi)]}),
        "Delta'": mat_from_images(F, d, {e_(1): [(e_(1), wi)], f_(1): [(f_(1), w)],
                                         e_(2): [(e_(2), wi)], f_(2): [(f_(2), w)]}),
    }
    if _odd(g):
        out["sigma"] = mat_from_images(F, d, {e_(1): [(e_(1), 1), (e_(2), 1)], f_(2): [(f_(2), 1), (f_(1), m1)]})
        out["sigma'"] = mat_from_images(F, d, {e_(1): [(e_(1), 1), (f_(2), 1)], e_(2): [(e_(2), 1), (f_(1), m1)]})
        out["U'"] = mat_from_images(F, d, {e_(1): [(e_(2), 1)], e_(2): [(e_(1), m1)],
                                           f_(1): [(f_(2), 1)], f_(2): [(f_(1), m1)]})
        es = [e_(i) for i in range(1, n + 1)]
        fs = [f_(i) for i in range(1, n + 1)]
        imgs = signed_cycle(F, d, es, eps(n))
        imgs.update(signed_cycle(F, d, fs, eps(n)))
        out["V'"] = mat_from_images(F, d, imgs)
    else:
        out["sigma"] = mat_from_images(F, d, {e_(1): [(e_(1), 1), (e_(2), 1)], f_(2): [(f_(2), 1), (f_(1), 1)]})
        out["sigma'"] = mat_from_images(F, d, {e_(1): [(e_(1), 1), (f_(2), 1)], e_(2): [(e_(2), 1), (f_(1), 1)]})
    return out


def form(g: GroupSpec, T: FieldTower) -> FormSpec:
    F = T.base
    d = g.d
    Q = [[0] * d for _ in range(d)]
    G = [[0] * d for _ in range(d)]
    for i in range(1, g.n + 1):
        Q[e_(i)][f_(i)] = 1
        G[e_(i)][f_(i)] = G[f_(i)][e_(i)] = 1
    return FormSpec("quadratic-plus", Mat.from_rows(F, G), Mat.from_rows(F, Q))


def generator_names(g: GroupSpec, T: FieldTower) -> list[str]:
    U, V = _primes(g)
    if g.n == 2:
        names = ["sigma", "Delta", U, "sigma'", "Delta'", "Z"]
        if g.e == 1:
            names = [x for x in names if not x.startswith("Delta")]
        return names
    small = "Delta" if _odd(g) else "delta"
    names = ["sigma", small, "Z", U, V]
    if g.e == 1:
        names.remove(small)
    return names


def _gens(g):
    U, V = _primes(g)
    return gen("sigma"), gen("Z"), gen(U), gen(V)


def Delta_word(g: GroupSpec, T: FieldTower):
    """Delta_12 as a word (a generator when e > 1, built from sigma, U' otherwise)."""
    if g.e > 1:
        if _odd(g) or g.n == 2:
            return gen("Delta")
        U, delta = gen("U"), gen("delta")
        return comm(U, delta)
    if not _odd(g):
        return ONE
    return delta_word_prime(T.base, gen("sigma"), gen("U'"))


# -- n = 2 --

def _present4(g: GroupSpec, T: FieldTower, P: Presentation):
    F = T.base
    q = g.q
    U = gen(_primes(g)[0])
    sigma, sigma2, Z = gen("sigma"), gen("sigma'"), gen("Z")
    W = Z * U
    if g.e > 1:
        D1, D2 = gen("Delta"), gen("Delta'")
        first, second = [sigma, D1, U], [sigma2, D2, W]
    else:
        D1 = D2 = None
        first, second = [sigma, U], [sigma2, W]
    P.extend(sl2_relators(F, sigma, D1, U, "SL", "sigma"), "base-case", "SL(2,q) first")
    P.extend(sl2_relators(F, sigma2, D2, W, "SL", "sigma2"), "base-case", "SL(2,q) second")
    P.extend([comm(a, b) for a in first for b in second], "base-case", "commuting copies")
    if q % 2:
        if g.e > 1:
            P.add(rel(D1 ** ((q - 1) // 2), D2 ** ((q - 1) // 2)), "base-case", "amalgamation")
        else:
            P.add(rel(U ** 2, W ** 2), "base-case", "amalgamation")


def _torus4(g: GroupSpec, T: FieldTower) -> Torus:
    q = g.q
    Uname = _primes(g)[0]
    names = ["Delta", Uname, "Delta'", "Z"] if g.e > 1 else [Uname, "Z"]
    P = Presentation(g, names)
    U, Z = gen(Uname), gen("Z")
    W = Z * U
    pairs = [(gen("Delta"), U), (gen("Delta'"), W)] if g.e > 1 else [(None, U), (None, W)]
    for D, X in pairs:
        if q % 2:
            P.add(X ** 4, "torus-normaliser")
        else:
            P.add(X ** 2, "torus-normaliser")
        if D is not None:
            P.add(rel(D ** X, ~D), "torus-normaliser")
            P.add(rel(D ** ((q - 1) // 2), X ** 2) if q % 2 else D ** (q - 1), "torus-normaliser")
    (D1, X1), (D2, X2) = pairs
    a = [x for x in (D1, X1) if x is not None]
    b = [x for x in (D2, X2) if x is not None]
    P.extend([comm(x, y) for x in a for y in b], "torus-normaliser")
    if q % 2:
        P.add(rel(X1 ** 2, X2 ** 2), "torus-normaliser")
    if g.e == 1:
        order = 8 if q % 2 else 4
    else:
        order = (2 * (q - 1)) ** 2 // (2 if q % 2 else 1)
    return Torus(P, {k: gen(k) for k in names}, order)


# -- n >= 3 --

def n1_relators(g: GroupSpec) -> list:
    n = g.n
    _, Z, U, V = _gens(g)
    if _odd(g):
        out = signed_relators(U, V, n)
        if n > 3:
            out.append(comm(Z, U ** (V ** 2)))
        if n > 4:
            out.append(comm(Z, V * U * U ** V))
        out += [Z ** 2, comm(Z, (U ** 2) ** V), rel(Z * Z ** V, Z ** (V * U)), comm(Z, U), comm(Z, Z ** V)]
        if n > 3:
            out.append(comm(Z, Z ** (V ** 2)))
        return out
    out = sym_relators(U, V, n)
    if n > 3:
        out.append(comm(Z, U ** (V ** 2)))
    if n > 4:
        out.append(comm(Z, V * U * U ** V))
    out.append(Z ** 2)
    if n > 3:
        out.append(comm(Z, Z ** (V ** 2)))
    out += [rel(Z * Z ** V, Z ** (U ** V)), comm(Z, U), comm(Z, Z ** V)]
    return out


def n_relators(g: GroupSpec, with_order=True) -> list:
    """N = <Delta, Z, U', V'> (odd q) or <delta, Z, U, V> (even q), e > 1.

    with_order=False drops Delta^((q-1)/2) = U'^2, which the SL(2,q) block supplies.
    """
    n, q = g.n, g.q
    _, Z, U, V = _gens(g)
    out = n1_relators(g)
    if _odd(g):
        D = gen("Delta")
        if n > 3:
            out.append(comm(D, U ** (V ** 2)))
        if n > 4:
            out.append(comm(D, V * U * U ** V))
        if n > 3:
            out.append(comm(D, Z ** (V ** 2)))
        out += [rel(D ** U, ~D), comm(D, (U ** 2) ** V)]
        if with_order:
            out.append(rel(D ** ((q - 1) // 2), U ** 2))
        out += [rel(D * D ** V, D ** (V * U)), comm(D, D ** V)]
        if n > 3:
            out.append(comm(D, D ** (V ** 2)))
        out.append(rel(D ** Z, ~D))
        return out
    d = gen("delta")
    out.append(comm(d, U ** V))
    if n > 3:
        out.append(comm(d, V * U))
    out += [comm(d, d ** U), d ** (q - 1), rel(d ** Z, ~d), comm(d, Z ** V)]
    return out


def sigma_centraliser(g: GroupSpec) -> list:
    n = g.n
    _, Z, U, V = _gens(g)
    out = []
    if _odd(g):
        if n > 3:
            out.append(U ** (V ** 2))
        if n > 4:
            out.append(V * ~U * ~(U ** V))
        if n > 3:
            out.append(Z ** (V ** 2))
        if g.e > 1:
            D = gen("Delta")
            if n > 3:
                out.append(D ** (V ** 2))
            out.append(D ** (Z ** V))
        out.append(Z * U)
        if g.e > 1 and n < 5:
            out.append(D ** (U ** V) * D ** V)
        return out
    if n > 3:
        out.append(U ** (V ** 2))
    if n > 4:
        out.append(V * U * U ** V)
    if n > 3:
        out.append(Z ** (V ** 2))
    if g.e > 1:
        out.append(gen("delta") ** (V ** 2))
    out.append(Z * U)
    if g.e > 1:
        d = gen("delta")
        out.append(d * d ** U)
    return out


def steinberg(g: GroupSpec):
    n = g.n
    sigma, Z, U, V = _gens(g)
    out = []
    if _odd(g):
        VU = V * ~U
        W = U ** VU
    else:
        VU = V * U
        W = U ** VU
    out.append((rel(comm(sigma, sigma ** V), sigma ** VU), "(a)"))
    out.append((comm(sigma, sigma ** VU), "(b)"))
    out.append((comm(sigma, sigma ** W), "(c)"))
    if n > 3:
        out.append((comm(sigma, sigma ** (V ** 2)), "(d)"))
    out.append((comm(sigma, sigma ** (Z ** V)), "(e)"))
    if n == 4:
        out.append((comm(sigma, sigma ** (Z ** V * V ** 2)), "(f)"))
    return out


def present(g: GroupSpec, T: FieldTower) -> Presentation:
    F = T.base
    P = Presentation(g, generator_names(g, T))
    if g.n == 2:
        _present4(g, T, P)
    else:
        sigma, Z, U, V = _gens(g)
        if g.e > 1:
            P.extend(n_relators(g, with_order=not _odd(g)), "torus-normaliser", "N")
        else:
            P.extend(n1_relators(g), "torus-normaliser", "N1")
        P.extend([comm(sigma, c) for c in sigma_centraliser(g)], "centraliser", "sigma")
        if g.e > 1:
            Delta = gen("Delta") if _odd(g) else comm(U, gen("delta"))
            P.extend(sl2_relators(F, sigma, Delta, U, "SL", "sigma"), "base-case", "SL(2,q)")
        else:
            P.extend(sl2_relators(F, sigma, None, U, "SL"), "base-case", "SL(2,p)")
        for w, label in steinberg(g):
            P.add(w, "steinberg", label)
    P.meta["exceptional"] = []
    if g.quotient:
        w, k = central_word(g, T)
        if k > 1:
            P.add(w, "center-kill")
    return P


def central_word(g: GroupSpec, T: FieldTower):
    n, q = g.n, g.q
    if q % 2 == 0 or pow(q, n, 4) != 1:
        return ONE, 1
    if n == 2:
        return gen("U'") ** 2, 2
    _, Z, _, V = _gens(g)
    if n % 2 == 0:
        return V ** n, 2
    return (V * Z * Delta_word(g, T)) ** (n * (q - 1) // 4), 2


def torus(g: GroupSpec, T: FieldTower) -> Torus:
    n, q = g.n, g.q
    if n == 2:
        return _torus4(g, T)
    U, V = _primes(g)
    if g.e > 1:
        small = "Delta" if _odd(g) else "delta"
        names = [small, "Z", U, V]
        rels = n_relators(g)
        if _odd(g):
            order = (q - 1) ** n * 2 ** (n - 2) * math.factorial(n)
        else:
            order = (2 * (q - 1)) ** n * math.factorial(n) // 2
    else:
        names = ["Z", U, V]
        rels = n1_relators(g)
        order = 2 ** (2 * n - 2 if _odd(g) else n - 1) * math.factorial(n)
    P = Presentation(g, names)
    P.extend(rels, "torus-normaliser")
    return Torus(P, {k: gen(k) for k in names}, order)


def centralisers(g: GroupSpec, T: FieldTower) -> list[Centraliser]:
    n, q = g.n, g.q
    if n == 2:
        U = gen(_primes(g)[0])
        W = gen("Z") * U
        words = [gen("Delta'"), W] if g.e > 1 else [W]
        if q % 2:
            words.append(U ** 2)
            idx = q - 1 if g.e > 1 else 2
        else:
            idx = 2 * (q - 1) if g.e > 1 else 2
        return [Centraliser("sigma", gen("sigma"), words, idx)]
    if g.e > 1:
        idx = 2 * n * (n - 1) * (q - 1)
    else:
        idx = 4 * n * (n - 1) if _odd(g) else 2 * n * (n - 1)
    return [Centraliser("sigma", gen("sigma"), sigma_centraliser(g), idx)]


# -- standard generators --

def std_names(g: GroupSpec) -> list[str]:
    if _odd(g):
        return ["s", "t", "delta", "s'", "t'", "delta'", "v"]
    return ["s", "t", "delta", "u", "x", "y", "v"]


def std_matrices(g: GroupSpec, T: FieldTower) -> dict:
    """Standard generators written down directly; n = 2 uses the same matrices as n >= 3."""
    M = matrices(g, T)
    if _odd(g):
        return {"s": M["Z"] * M["U'"].inverse(), "t": M["sigma'"].inverse(),
                "delta": M["Delta'"].inverse(), "s'": M["U'"], "t'": M["sigma"],
                "delta'": M["Delta"].inverse(), "v": M["V'"] if g.n > 2 else M["U'"]}
    return {"s": M["Z"] * M["U"], "t": M["sigma'"], "delta": M["Delta'"].inverse(), "u": M["U"],
            "x": M["sigma"], "y": M["Delta"].inverse(), "v": M["V"] if g.n > 2 else M["U"]}


def pres_to_std(g: GroupSpec, T: FieldTower) -> dict:
    n = g.n
    sigma, Z = gen("sigma"), gen("Z")
    if _odd(g):
        U = gen("U'")
        V = gen("V'") if n > 2 else U
        if n == 2:
            D = gen("Delta") if g.e > 1 else delta_word_prime(T.base, sigma, U)
            D2 = gen("Delta'") if g.e > 1 else delta_word_prime(T.base, gen("sigma'"), Z * U)
            t, dl = ~gen("sigma'"), ~D2
        else:
            D = Delta_word(g, T)
            t, dl = (~sigma) ** (Z ** V), D ** (Z ** ~V)
        return {"s": Z * ~U, "t": t, "delta": dl, "s'": U, "t'": sigma, "delta'": ~D, "v": V}
    U = gen("U")
    V = gen("V") if n > 2 else U
    if n == 2:
        t = gen("sigma'")
        if g.e > 1:
            dl, y = ~gen("Delta'"), ~gen("Delta")
        else:
            dl = y = ONE
    else:
        t = (~sigma) ** (Z ** V)
        if g.e > 1:
            d = gen("delta")
            dl, y = ~d * (~d) ** U, ~(d * d ** (Z * U))
        else:
            dl = y = ONE
    return {"s": Z * U, "t": t, "delta": dl, "u": U, "x": sigma, "y": y, "v": V}


def std_to_pres(g: GroupSpec, T: FieldTower) -> dict:
    n, q = g.n, g.q
    out = {}
    if _odd(g):
        s, sp = gen("s"), gen("s'")
        out = {"sigma": gen("t'"), "U'": sp, "Z": s * sp}
        if n == 2:
            out["sigma'"] = ~gen("t")
            if g.e > 1:
                out["Delta"] = ~gen("delta'")
                out["Delta'"] = ~gen("delta")
        else:
            out["V'"] = gen("v")
            if g.e > 1:
                out["Delta"] = ~gen("delta'")
        return out
    s, u = gen("s"), gen("u")
    out = {"sigma": gen("x"), "U": u, "Z": s * u}
    if n == 2:
        out["sigma'"] = gen("t")
        if g.e > 1:
            out["Delta"] = ~gen("y")
            out["Delta'"] = ~gen("delta")
    else:
        out["V"] = gen("v")
        if g.e > 1:
            out["delta"] = (gen("delta") * gen("y")) ** ((q - 2) // 2)
    return out
