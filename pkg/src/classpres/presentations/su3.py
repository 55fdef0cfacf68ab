"""SU(3,q) on {nu, tau, Delta, t}, or {nu, nu', Delta, t} when q = 2.

Basis (e_1, v, f_1) with e_1.f_1 = v.v = 1 for the hermitian form.
"""

from __future__ import annotations

import math

from ..field import FieldTower, lemma_xy, linear_expression, minimal_polynomial, subfield_expression
from ..groups import GroupSpec
from ..linalg import FormSpec, Mat
from ..slp import ONE, Presentation, Word, aux, comm, gen, prod, rel
from .common import Centraliser, Torus


def nu_mat(T: FieldTower, a: int, b: int) -> Mat:
    F = T.ext
    return Mat.from_rows(F, [[1, a, b], [0, 1, F.neg(T.frob(a))], [0, 0, 1]])


def delta_mat(T: FieldTower, a: int) -> Mat:
    F, q = T.ext, T.q
    return Mat.diag(F, [a, F.pow(a, q - 1), F.inv(F.pow(a, q))])


def tau_beta(T: FieldTower) -> int:
    return T.zeta if T.q % 2 else 1


def small_k(T: FieldTower) -> int:
    """Least k for which the explicit q = 3, 5 relators hold with omega replaced by omega^k.

    Those presentations were written for a particular primitive element; k = 1 unless q is 3 or 5.
    """
    q = T.q
    if q not in _SMALL:
        return 1
    from ..slp import matrix_evaluator
    F, n = T.ext, T.ext.order
    rels = [_parse(x) for x in _SMALL[q]]
    for k in range(1, n):
        if math.gcd(k, n) == 1:
            ev = matrix_evaluator(_gens(T, k))
            if all(ev(r).is_identity() for r in rels):
                return k
    raise ArithmeticError(f"no primitive element fits the SU(3,{q}) presentation")


def _gens(T: FieldTower, k: int) -> dict:
    F, q = T.ext, T.q
    w = F.prim_pow(k)
    zeta = F.neg(F.pow(w, (q * q + q) // 2))
    return {
        "nu": nu_mat(T, 1, T.xi),
        "tau": nu_mat(T, 0, zeta if q % 2 else 1),
        "Delta": delta_mat(T, w),
        "t": Mat.from_rows(F, [[0, 0, 1], [0, F.neg_one, 0], [1, 0, 0]]),
    }


def matrices(g: GroupSpec, T: FieldTower) -> dict:
    F = T.ext
    w = F.gen
    if g.q in _SMALL:
        return _gens(T, small_k(T))
    out = {
        "nu": nu_mat(T, 1, T.xi),
        "tau": nu_mat(T, 0, tau_beta(T)),
        "Delta": delta_mat(T, w),
        "t": Mat.from_rows(F, [[0, 0, 1], [0, F.neg_one, 0], [1, 0, 0]]),
    }
    if g.q == 2:
        out["nu'"] = nu_mat(T, F.pow(w, 2), w)
    return out


def form(g: GroupSpec, T: FieldTower) -> FormSpec:
    F = T.ext
    G = Mat.from_rows(F, [[0, 0, 1], [0, 1, 0], [1, 0, 0]])
    return FormSpec("hermitian", G, None, T.q)


def generator_names(g: GroupSpec, T: FieldTower) -> list[str]:
    if g.q == 2:
        return ["nu", "nu'", "Delta", "t"]
    return ["nu", "tau", "Delta", "t"]


def poly_word(u: Word, coeffs, h: Word) -> Word:
    """u^{m(h)} = prod_i (u^{c_i})^{h^i} in the natural order."""
    return prod((u ** c) ** (h ** i) for i, c in enumerate(coeffs) if c)


def _gfp(F, cs):
    # coefficients of a minimal polynomial lie in GF(p); read them as integers
    return [F.coeffs(c)[0] for c in cs]


class UnipotentWords:
    """Words in nu, tau, Delta for elements nu(alpha, beta) of the unipotent radical U.

    W = Z(U) is spanned by the conjugates tau^{Delta^i}, and U/W by the nu^{Delta^k};
    an element is written as a product of nu^{Delta^k} powers times a W-correction.
    """

    def __init__(self, T: FieldTower):
        self.T = T
        F, q, e = T.ext, T.q, T.e
        self.F = F
        self.nu, self.tau, self.Delta = gen("nu"), gen("tau"), gen("Delta")
        self.nu_m = nu_mat(T, 1, T.xi)
        self.D_m = delta_mat(T, F.gen)
        w0inv = F.inv(T.omega0)
        self.w_basis = [F.pow(w0inv, i) for i in range(e)]
        # greedy GF(p)-basis of GF(q^2) among the alpha-coordinates omega^{k(q-2)} of nu^{Delta^k}
        self.u_ks, elems = [], []
        k = 0
        while len(elems) < 2 * e:
            cand = F.prim_pow(k * (q - 2))
            try:
                linear_expression(F, cand, elems) if elems else None
                dependent = bool(elems)
            except ValueError:
                dependent = False
            if not dependent:
                self.u_ks.append(k)
                elems.append(cand)
            k += 1
            if k > 4 * (q * q):
                raise ArithmeticError("nu^{Delta^k} do not span U/W")
        self.u_elems = elems

    def coords(self, M: Mat) -> tuple[int, int]:
        return M.entry(0, 1), M.entry(0, 2)

    def w_word(self, beta: int) -> Word:
        """nu(0, beta) with trace(beta) = 0, as a product of tau^{Delta^i}."""
        T, F = self.T, self.F
        if beta == 0:
            return ONE
        c = F.div(beta, tau_beta(T))
        cs = linear_expression(F, c, self.w_basis)
        return prod((self.tau ** a) ** (self.Delta ** i) for i, a in enumerate(cs) if a)

    def w_of(self, M: Mat) -> Word:
        a, b = self.coords(M)
        if a != 0 or not (M * nu_mat(self.T, 0, self.F.neg(b))).is_identity():
            raise ArithmeticError("matrix is not in W")
        return self.w_word(b)

    def u_word(self, alpha: int, beta: int) -> Word:
        T, F = self.T, self.F
        cs = linear_expression(F, alpha, self.u_elems)
        w = ONE
        M = Mat.identity(F, 3)
        for k, c in zip(self.u_ks, cs):
            if c:
                w = w * (self.nu ** c) ** (self.Delta ** k)
                M = M * (self.nu_m ** c).conj(self.D_m ** k)
        rest = M.inverse() * nu_mat(T, alpha, beta)
        return w * self.w_of(rest)


def delta_exponent(T: FieldTower, lam: int) -> int:
    """k with Delta^k = Delta(lam)."""
    return T.ext.log(lam)


def borel_relators(g: GroupSpec, T: FieldTower, seed: int = 0) -> dict:
    """R1 (without Delta^{q^2-1}), R2 and R3 for the Borel subgroup <nu, tau, Delta>."""
    q, p, e = g.q, g.p, g.e
    F = T.ext
    n = q * q - 1
    x, y = lemma_xy(T, seed)
    x, y = x % n, y % n
    nu, tau, Delta = gen("nu"), gen("tau"), gen("Delta")
    a, b = aux("a", Delta ** x), aux("b", Delta ** y)
    UW = UnipotentWords(T)
    M = matrices(g, T)
    nu_m, D_m = M["nu"], M["Delta"]
    A, B = D_m ** x, D_m ** y
    nua, nub, nuD = nu_m.conj(A), nu_m.conj(B), nu_m.conj(D_m)

    R1 = [nu ** p if p % 2 else rel(nu ** 2, tau), tau ** p]

    R2 = [rel(tau, tau ** a * tau ** b)]
    if p % 2:
        R2.append(rel(tau, tau ** b * tau ** a))
    w0 = T.omega0
    gcd1 = math.gcd(x, n) == 1
    if e > 1:
        m1 = _gfp(F, minimal_polynomial(F, F.pow(w0, -x % n)))
        R2.append(poly_word(tau, m1, a))
    if e == 1 or not gcd1:
        m2 = subfield_expression(F, F.inv(w0), F.pow(w0, -x % n), e - 1)
        R2.append(rel(tau ** Delta, poly_word(tau, m2, a)))

    def corr(lhs_m, rhs_m):
        # w in W with lhs = rhs * w
        return UW.w_of(rhs_m.inverse() * lhs_m)

    R3 = [rel(nu, nu ** a * nu ** b * corr(nu_m, nua * nub))]
    if p % 2:
        R3.append(rel(nu, nu ** b * nu ** a * corr(nu_m, nub * nua)))
    R3 += [comm(nu ** a, tau), comm(nu ** b, tau)]

    def cm(u, v):
        return u.inverse() * v.inverse() * u * v

    R3.append(rel(comm(nu, nu ** a), UW.w_of(cm(nu_m, nua))))
    if p == 2 and e > 1:
        R3.append(rel(comm(nu ** Delta, nu ** a), UW.w_of(cm(nuD, nua))))
        R3.append(rel(comm(nu ** Delta, nu ** b), UW.w_of(cm(nuD, nub))))
    rho = F.prim_pow(x * (q - 2))
    m3 = _gfp(F, minimal_polynomial(F, rho))

    def poly_mat(um, coeffs):
        out = Mat.identity(F, 3)
        for i, c in enumerate(coeffs):
            if c:
                out = out * (um ** c).conj(A ** i)
        return out

    R3.append(rel(poly_word(nu, m3, a), UW.w_of(poly_mat(nu_m, m3))))
    if p % 2 and not gcd1:
        m4 = subfield_expression(F, F.prim_pow(q - 2), rho, 2 * e - 1)
        R3.append(rel(nu ** Delta, poly_word(nu, m4, a) * corr(nuD, poly_mat(nu_m, m4))))
    elif p == 2:
        s = F.prim_pow(q - 2)
        elems = [F.pow(rho, i) for i in range(e)] + [F.mul(s, F.pow(rho, i)) for i in range(e)]
        cs = linear_expression(F, F.prim_pow(2 * q - 4), elems)
        m5, m6 = cs[:e], cs[e:]
        lhs = nu_m.conj(D_m ** 2)
        rhs = poly_mat(nu_m, m5) * poly_mat(nuD, m6)
        R3.append(rel(nu ** (Delta ** 2), poly_word(nu, m5, a) * poly_word(nu ** Delta, m6, a) * corr(lhs, rhs)))
    return {"R1": R1, "R2": R2, "R3": R3, "xy": (x, y), "words": UW}


def u0_elements(T: FieldTower) -> list[tuple[int, int]]:
    """The (alpha, beta) of the elements of U_0 whose P(u) relations complete the presentation."""
    F, q = T.ext, T.q
    zeta = T.zeta
    w = F.gen
    beta0 = F.mul(w, zeta)
    target = F.neg(T.trace(beta0))
    roots = [a for a in range(1, F.size) if T.norm(a) == target]
    gamma0 = _find_gamma(T, beta0, F.mul(F.inv(w), zeta))
    n = F.order
    if q % 3 != 2:
        alphas = [min(roots)]
    else:
        cube = next(a for a in sorted(roots) if F.log(a) % 3 == 0)
        alphas = [F.mul(cube, F.prim_pow(i * (q - 1))) for i in range(3)]
        assert all(F.log(a) % 3 == i for i, a in enumerate(alphas)), n
    out = []
    for a in alphas:
        out.append((a, beta0))
    out.append((0, gamma0))
    for a in alphas:
        # nu(a, beta0) nu(0, gamma0) = nu(a, beta0 + gamma0)
        out.append((a, F.add(beta0, gamma0)))
    return out


def _find_gamma(T, beta, eta):
    from ..field import find_gamma
    return find_gamma(T, beta, eta)


def p_relator(T: FieldTower, UW: UnipotentWords, alpha: int, beta: int) -> Word:
    """P(u): u^t = u_L d t u_R for u = nu(alpha, beta)."""
    F, q = T.ext, T.q
    t, Delta = gen("t"), gen("Delta")
    binv = F.inv(beta)
    u = UW.u_word(alpha, beta)
    uL = UW.u_word(F.neg(F.mul(alpha, F.inv(F.pow(beta, q)))), binv)
    uR = UW.u_word(F.neg(F.mul(alpha, binv)), binv)
    k = delta_exponent(T, F.inv(F.pow(beta, q)))
    return rel(u ** t, uL * Delta ** k * t * uR)


# explicit presentations for q = 3 and 5, letters n, T (tau), D, t; suffix is the exponent
_SMALL = {
    3: ["n3", "t2", "D-1 n-1 D-1 T-1 n D2 n-1", "D-1 n D-1 T-1 n-1 D2 n",
        "T t D-2 T t T t", "D T-1 n-1 t D T-1 n D t n T-1 t"],
    5: ["n5", "D T2 D-1 T", "D2 n2 D-2 n-1", "D5 t D t", "D-1 n t n-2 t n D t",
        "D n D-1 T-1 n-1 D n-1 D-1 n", "n-1 t T-1 n-1 t D-1 n2 t D n-1 t D T-1"],
}
_LETTERS = {"n": "nu", "T": "tau", "D": "Delta", "t": "t"}


def _parse(s: str) -> Word:
    out = ONE
    for tok in s.split():
        k = int(tok[1:]) if len(tok) > 1 else 1
        out = out * gen(_LETTERS[tok[0]]) ** k
    return out


def present_su32(g: GroupSpec, P: Presentation):
    nu, nup, Delta, t = gen("nu"), gen("nu'"), gen("Delta"), gen("t")
    a = aux("a", comm(nu, t))
    b = aux("b", (a ** 2) ** nu)
    P.extend([rel(a ** nu, ~b), rel(b ** nu, a * Delta), rel(a ** nup, a * b * a),
              rel(b ** nup, a * b * Delta), rel(nu ** 2, nup ** 2), rel(nu ** 2, comm(nu, nup)),
              rel(t, nu ** 2 * a ** 2 * b)], "base-case", "SU(3,2)")


def present(g: GroupSpec, T: FieldTower, seed: int = 0) -> Presentation:
    q = g.q
    P = Presentation(g, generator_names(g, T))
    Delta, t = gen("Delta"), gen("t")
    if q == 2:
        present_su32(g, P)
        u0 = 0
    elif q in _SMALL:
        P.extend([_parse(s) for s in _SMALL[q]], "base-case", f"SU(3,{q})")
        u0 = 0
    else:
        B = borel_relators(g, T, seed)
        for k in ("R1", "R2", "R3"):
            P.extend(B[k], "base-case", f"Borel {k}")
        P.extend([rel(Delta ** t, Delta ** -q), t ** 2], "torus-normaliser")
        U0 = u0_elements(T)
        for al, be in U0:
            P.add(p_relator(T, B["words"], al, be), "steinberg", "P(u)")
        u0 = len(U0)
    P.meta["exceptional"] = []
    P.meta["u0_size"] = u0
    if u0:
        P.meta["seed"] = seed
    if g.quotient:
        w, k = central_word(g, T)
        if k > 1:
            P.add(w, "center-kill")
    return P


def central_word(g: GroupSpec, T: FieldTower):
    q = g.q
    if (q + 1) % 3:
        return ONE, 1
    return gen("Delta") ** ((q * q - 1) // 3), 3


def torus(g: GroupSpec, T: FieldTower) -> Torus:
    """N = <Delta, t>, the normaliser of the diagonal torus, dihedral-like of order 2(q^2-1)."""
    q = g.q
    Delta, t = gen("Delta"), gen("t")
    P = Presentation(g, ["Delta", "t"])
    P.extend([Delta ** (q * q - 1), t ** 2, rel(Delta ** t, Delta ** -q)], "torus-normaliser")
    return Torus(P, {"Delta": Delta, "t": t}, 2 * (q * q - 1))


def centralisers(g: GroupSpec, T: FieldTower) -> list[Centraliser]:
    q = g.q
    root = gen("nu") ** 2 if q == 2 else gen("tau")
    return [Centraliser("tau", root, [gen("Delta") ** (q - 1)], 2 * (q - 1))]


def std_names(g: GroupSpec) -> list[str]:
    names = ["s", "t", "delta", "x", "y"]
    return names + ["x'"] if g.q == 2 else names


def _w_power(T: FieldTower, target: Mat, tau: Mat, D: Mat):
    """(c, j) with target = (tau^c)^{D^j}."""
    n = T.ext.order
    for j in range(n):
        base = tau.conj(D ** j)
        for c in range(1, T.p):
            if base ** c == target:
                return c, j
    raise ArithmeticError("element not a torus conjugate of a power of tau")


def _small_dictionary(g: GroupSpec, T: FieldTower):
    k = small_k(T)
    n = T.ext.order
    M = _gens(T, k)
    std = std_matrices(g, T)
    return k, pow(k, -1, n), _w_power(T, std["t"], M["tau"], M["Delta"]), \
        _w_power(T, M["tau"], std["t"], std["y"])


def pres_to_std(g: GroupSpec, T: FieldTower) -> dict:
    q = g.q
    Delta, t = gen("Delta"), gen("t")
    tau = gen("nu") ** 2 if q == 2 else gen("tau")
    if q in _SMALL:
        _, kinv, (c, j), _ = _small_dictionary(g, T)
        Delta = Delta ** kinv
        tau = (tau ** c) ** (gen("Delta") ** j)
    out = {"s": Delta ** ((q + 1) // 2) * t if q % 2 else t, "t": tau, "delta": Delta ** (q + 1),
           "x": gen("nu"), "y": Delta}
    if q == 2:
        out["x'"] = gen("nu'")
    return out


def std_to_pres(g: GroupSpec, T: FieldTower) -> dict:
    q = g.q
    s, y = gen("s"), gen("y")
    out = {"nu": gen("x"), "Delta": y, "t": y ** (-((q + 1) // 2)) * s if q % 2 else s}
    if q in _SMALL:
        k, _, _, (c, j) = _small_dictionary(g, T)
        out["Delta"] = y ** k
        out["tau"] = (gen("t") ** c) ** (y ** j)
        return out
    if q == 2:
        out["nu'"] = gen("x'")
    else:
        out["tau"] = gen("t")
    return out


def std_matrices(g: GroupSpec, T: FieldTower) -> dict:
    F, q = T.ext, T.q
    w = F.gen
    tm = Mat.from_rows(F, [[0, 0, 1], [0, F.neg_one, 0], [1, 0, 0]])
    out = {"t": nu_mat(T, 0, tau_beta(T)), "delta": delta_mat(T, F.pow(w, q + 1)),
           "x": nu_mat(T, 1, T.xi), "y": delta_mat(T, w),
           "s": delta_mat(T, F.pow(w, (q + 1) // 2)) * tm if q % 2 else tm}
    if q == 2:
        out["x'"] = nu_mat(T, F.pow(w, 2), w)
    return out
