"""SL(2,q) and PSL(2,q) on tau = [[1,1],[0,1]], delta = diag(w^-1, w), U = [[0,1],[-1,0]].

The relators are produced for arbitrary words playing those roles, so the
same code supplies the base-case blocks of the larger groups.  F is the field
whose primitive element plays w (GF(q) or GF(q^2)).
"""

from __future__ import annotations

from ..field import Field, discrete_log, minimal_polynomial, subfield_expression
from ..slp import ONE, Word, aux, comm, prod, rel


def _tau_i(tau: Word, tau1: Word, delta: Word, i: int) -> Word:
    if i % 2 == 0:
        return tau ** (delta ** (i // 2))
    return tau1 ** (delta ** ((i - 1) // 2))


def _tau1(F: Field, tau: Word, delta: Word, name: str) -> Word:
    """tau(w) as a product of conjugates of tau, from w = sum a_i w^{2i}."""
    w = F.gen
    a = subfield_expression(F, w, F.mul(w, w), F.k - 1)
    body = prod((tau ** c) ** (delta ** i) for i, c in enumerate(a) if c)
    return aux(name, body)


def _m_value(F: Field) -> tuple[int, bool]:
    """m with w^{2m} = 1+w (square case) or w^{2m+1} = 1+w."""
    one_plus = F.add(1, F.gen)
    lg = F.log(one_plus)
    if lg % 2 == 0:
        return lg // 2, True
    return (lg - 1) // 2, False


def sl2_relators(F: Field, tau: Word, delta: Word | None, U: Word, variant: str = "SL",
                 tag: str = "sl2") -> list[Word]:
    """Relators of SL(2,q) (variant 'SL') or PSL(2,q) (variant 'PSL')."""
    p, e = F.p, F.k
    q = F.size
    if variant not in ("SL", "PSL"):
        raise ValueError(variant)
    if e == 1:
        return _sl2_prime(p, tau, U, variant)
    if delta is None:
        raise ValueError("delta needed when e > 1")
    if p == 2:
        w2 = F.mul(F.gen, F.gen)
        m = discrete_log(F, F.add(1, w2), w2)
        u = minimal_polynomial(F, w2)
        return [
            (U * tau) ** 3, U ** 2, (U * delta) ** 2, (tau * delta) ** (q - 1), tau ** 2,
            rel(tau ** (delta ** m), comm(tau, delta)),
            prod((tau ** c) ** (delta ** i) for i, c in enumerate(u) if c),
        ]
    tau1 = _tau1(F, tau, delta, f"{tag}_tau1")
    f = minimal_polynomial(F, F.gen)
    tau_f = prod(_tau_i(tau, tau1, delta, i) ** c for i, c in enumerate(f) if c)
    m, square = _m_value(F)
    if q % 4 == 1:
        out = []
        if variant == "PSL":
            out += [(tau * U) ** 3, (U * delta) ** 2, U ** 2, delta ** ((q - 1) // 2)]
        else:
            out += [rel((tau * ~U) ** 3, U ** 2), rel((U * delta) ** 2, U ** 2), U ** 4,
                    rel(delta ** ((q - 1) // 2), U ** 2)]
        out += [(tau1 * U * delta) ** 3, tau ** p, comm(tau, tau1), comm(tau1, tau ** delta), tau_f]
        if square:
            out += [rel(tau ** (delta ** m), tau * tau1), rel(tau1 ** (delta ** m), tau1 * tau ** delta)]
        else:
            out += [rel(tau1 ** (delta ** m), tau * tau1),
                    rel(tau ** (delta ** (m + 1)), tau1 * tau ** delta)]
        return out
    # q = 3 mod 4, e > 1
    r = (q + 1) // 4 if square else (q - 3) // 4
    out = []
    if variant == "PSL":
        out += [(tau * U) ** 3, (U * delta) ** 2, U ** 2, rel(delta ** ((q - 1) // 2), tau ** p)]
    else:
        out += [rel((tau * ~U) ** 3, U ** 2), rel((U * delta) ** 2, U ** 2), U ** 4,
                rel(delta ** ((q - 1) // 2), tau ** p * U ** 2)]
    out += [comm(tau, tau ** (delta ** ((q + 1) // 4))), tau_f,
            rel(tau ** (delta ** m), comm(~tau, delta ** r))]
    return out


def _sl2_prime(p: int, tau: Word, U: Word, variant: str) -> list[Word]:
    if p == 2:
        return [(tau * U) ** 3, U ** 2, tau ** 2]
    k = p // 3
    if p % 3 == 1:
        tU2 = tau * U ** 2
        out = [rel(U ** 2, (U * tau * U ** 2) ** 3),
               (U * tU2 ** 4 * U * tU2 ** ((p + 1) // 2)) ** 2 * tU2 ** p * U ** (2 * k)]
    else:
        Ui = ~U
        out = [rel(U ** -2, (Ui * tau) ** 3),
               (Ui * tau ** 4 * Ui * tau ** ((p + 1) // 2)) ** 2 * tau ** p * U ** (-2 * k)]
    if variant == "PSL":
        out.append(U ** 2)
    return out


def delta_word_prime(F: Field, tau: Word, U: Word) -> Word:
    """delta = diag(w^-1, w) as a word in tau, U when F = GF(p) with primitive w."""
    p = F.p
    w = F.gen
    if p == 2:
        return ONE
    e1 = (w - w * w) % p
    e2 = pow(w, -1, p)
    e3 = (w - 1) % p
    return (tau ** e1) ** U * tau ** e2 * (tau ** e3) ** U * ~tau
