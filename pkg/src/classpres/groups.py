"""Group specifications, orders and small matrix-building helpers."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .field import Field, FieldTower, prime_power, tower_for_q
from .linalg import Mat

FAMILIES = ("SL", "Sp", "SU", "OmegaPlus", "OmegaCircle", "OmegaMinus")


class UnsupportedGroup(ValueError):
    pass


@dataclass(frozen=True)
class GroupSpec:
    family: str
    d: int
    q: int
    quotient: bool = False

    def __post_init__(self):
        validate(self)

    @property
    def p(self) -> int:
        return prime_power(self.q)[0]

    @property
    def e(self) -> int:
        return prime_power(self.q)[1]

    @property
    def n(self) -> int:
        return self.d // 2

    def tower(self) -> FieldTower:
        return tower_for_q(self.q)

    def name(self) -> str:
        base = {"SL": "SL", "Sp": "Sp", "SU": "SU", "OmegaPlus": "Omega+",
                "OmegaCircle": "Omega", "OmegaMinus": "Omega-"}[self.family]
        if self.quotient:
            base = "P" + base
        return f"{base}({self.d},{self.q})"

    def to_json(self) -> dict:
        return {"family": self.family, "d": self.d, "q": self.q, "quotient": self.quotient}

    def __str__(self):
        return self.name()


def validate(g: GroupSpec):
    if g.family not in FAMILIES:
        raise UnsupportedGroup(f"unknown family {g.family}")
    try:
        prime_power(g.q)
    except ValueError:
        raise UnsupportedGroup(f"q = {g.q} is not a prime power") from None
    f, d, q = g.family, g.d, g.q
    if f == "SL" and d < 2:
        raise UnsupportedGroup("SL needs d >= 2")
    if f == "Sp" and (d % 2 or d < 4):
        raise UnsupportedGroup("Sp needs d = 2n with n >= 2")
    if f == "SU" and d < 3:
        raise UnsupportedGroup("SU needs d >= 3")
    if f == "OmegaPlus" and (d % 2 or d < 4):
        raise UnsupportedGroup("Omega+ needs d = 2n with n >= 2")
    if f == "OmegaCircle":
        if d % 2 == 0:
            raise UnsupportedGroup("Omega(d,q) needs odd d")
        if d == 3:
            raise UnsupportedGroup("unsupported: Ω(3,q) ≅ PSL(2,q)")
        if d < 3:
            raise UnsupportedGroup("Omega(d,q) needs d >= 5")
        if q % 2 == 0:
            raise UnsupportedGroup("unsupported: Ω(2n+1,q) with q even ≅ Sp(2n,q)")
    if f == "OmegaMinus":
        if d % 2:
            raise UnsupportedGroup("Omega- needs even d")
        if d == 4:
            raise UnsupportedGroup("unsupported: Ω⁻(4,q) ≅ PSL(2,q²)")
        if d < 6:
            raise UnsupportedGroup("Omega- needs d = 2n with n >= 3")


def center_order(g: GroupSpec) -> int:
    f, d, q = g.family, g.d, g.q
    n = d // 2
    if f == "SL":
        return math.gcd(q - 1, d)
    if f == "Sp":
        return math.gcd(2, q - 1)
    if f == "SU":
        return math.gcd(q + 1, d)
    if f == "OmegaPlus":
        return 1 if q % 2 == 0 else (2 if pow(q, n, 4) == 1 else 1)
    if f == "OmegaMinus":
        return 1 if q % 2 == 0 else (2 if pow(q, n, 4) == 3 else 1)
    return 1


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


def group_order(g: GroupSpec) -> int:
    f, d, q = g.family, g.d, g.q
    n = d // 2
    if f == "SL":
        o = q ** (d * (d - 1) // 2) * _prod(q ** i - 1 for i in range(2, d + 1))
    elif f == "Sp":
        o = q ** (n * n) * _prod(q ** (2 * i) - 1 for i in range(1, n + 1))
    elif f == "SU":
        o = q ** (d * (d - 1) // 2) * _prod(q ** i - (-1) ** i for i in range(2, d + 1))
    elif f == "OmegaPlus":
        o = q ** (n * (n - 1)) * (q ** n - 1) * _prod(q ** (2 * i) - 1 for i in range(1, n))
        o //= math.gcd(2, q - 1)
    elif f == "OmegaMinus":
        o = q ** (n * (n - 1)) * (q ** n + 1) * _prod(q ** (2 * i) - 1 for i in range(1, n))
        o //= math.gcd(2, q - 1)
    else:
        m = (d - 1) // 2
        o = q ** (m * m) * _prod(q ** (2 * i) - 1 for i in range(1, m + 1)) // math.gcd(2, q - 1)
    if g.quotient:
        o //= center_order(g)
    return o


def signed_group_order(d: int) -> int:
    return 2 ** (d - 1) * math.factorial(d)


# -- matrix helpers --

def mat_from_images(F: Field, d: int, images: dict) -> Mat:
    """Matrix sending e_i to sum c e_j for (j, c) in images[i]; other e_i fixed."""
    rows = []
    for i in range(d):
        if i in images:
            row = [0] * d
            for j, c in images[i]:
                row[j] = F.add(row[j], c)
            rows.append(row)
        else:
            rows.append([1 if j == i else 0 for j in range(d)])
    return Mat.from_rows(F, rows)


def signed_cycle(F: Field, d: int, points: list[int], eps: int) -> dict:
    """Images for the signed cycle (a_1, ..., a_k)^eps on basis indices."""
    imgs = {}
    k = len(points)
    for i, a in enumerate(points):
        if i < k - 1:
            imgs[a] = [(points[i + 1], 1)]
        else:
            imgs[a] = [(points[0], 1 if eps == 1 else F.neg_one)]
    return imgs


def eps(d: int) -> int:
    return 1 if d % 2 == 1 else -1
