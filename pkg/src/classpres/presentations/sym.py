"""Symmetric and signed permutation groups on (U, V) and (U', V')."""

from __future__ import annotations

from ..slp import ONE, Presentation, Word, comm, gen, rel


def sym_relators(U: Word, V: Word, d: int) -> list[Word]:
    """Moore's presentation of S_d on U = (1,2), V = (1,...,d)."""
    if d <= 1:
        return []
    if d == 2:
        return [U ** 2]
    out = [U ** 2, V ** d, (U * V) ** (d - 1), (U * U ** V) ** 3]
    for j in range(2, d // 2 + 1):
        out.append((U * U ** (V ** j)) ** 2)
    return out


def signed_relators(U: Word, V: Word, d: int) -> list[Word]:
    """Signed permutation matrices of determinant 1 on U' = (1,2)^-, V' = (1,...,d)^eps."""
    if d <= 1:
        return []
    if d == 2:
        return [U ** 4]
    U2 = U ** 2
    out = [U ** 4, (U2 ** (V * U)) * U2 * (U2 ** V), (U * U ** V) ** 3]
    if d % 2:
        out += [V ** d, (U * V) ** (d - 1)]
        out += [comm(U, U ** (V ** j)) for j in range(2, (d - 1) // 2 + 1)]
    else:
        out += [comm(U, U ** (V ** j)) for j in range(2, d // 2 + 1)]
        out += [rel(V ** d, (U * V) ** (d - 1)), comm(V ** d, U), V ** (2 * d)]
    return out


def present_sym(d: int) -> Presentation:
    if d <= 2:
        raise ValueError("symmetric group presentation needs d > 2")
    P = Presentation({"family": "Sym", "d": d}, ["U", "V"])
    P.extend(sym_relators(gen("U"), gen("V"), d), "torus-normaliser")
    return P


def present_signed(d: int) -> Presentation:
    if d < 2:
        raise ValueError("signed group presentation needs d >= 2")
    names = ["U'", "V'"] if d > 2 else ["U'"]
    P = Presentation({"family": "Signed", "d": d}, names)
    V = gen("V'") if d > 2 else ONE
    P.extend(signed_relators(gen("U'"), V, d), "torus-normaliser")
    return P


def fix12_words(U: Word, V: Word, d: int) -> list[Word]:
    """Generators of the signed permutations fixing 1 and 2 (d > 3)."""
    out = []
    if d > 3:
        out.append(U ** (V ** 2))
    if d > 4:
        out.append(V * ~U * ~(U ** V))
    return out
