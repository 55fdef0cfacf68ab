"""Finite fields GF(p^k) and the tower GF(q) < GF(q^2).

Elements are plain ints: the polynomial c_0 + c_1 x + ... + c_{k-1} x^{k-1}
is stored as c_0 + c_1 p + ... + c_{k-1} p^{k-1}.  So elements of the prime
field are the integers 0..p-1 in every field.  Multiplication, inversion and
powers go through log/antilog tables, addition through the Zech table.

Moduli are the least primitive polynomial of the given degree, where monic
polynomials x^k + c_{k-1} x^{k-1} + ... + c_0 are ordered by the integer
c_0 + c_1 p + ... + c_{k-1} p^{k-1}.  The variable x is then primitive.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field as dc_field
from functools import lru_cache

MAX_FIELD_SIZE = 1 << 22


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def prime_power(q: int) -> tuple[int, int]:
    """Split q = p^e, raising ValueError if q is not a prime power."""
    if q < 2:
        raise ValueError(f"{q} is not a prime power")
    p = prime_factors(q)[0]
    e, r = 0, q
    while r % p == 0:
        r //= p
        e += 1
    if r != 1:
        raise ValueError(f"{q} is not a prime power")
    return p, e


# -- dense polynomial helpers over GF(p), coefficient lists low degree first --

def _poly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _poly_mulmod(a, b, f, p):
    k = len(f) - 1
    prod = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
    # f monic of degree k
    for i in range(len(prod) - 1, k - 1, -1):
        c = prod[i]
        if c:
            for j in range(k + 1):
                prod[i - k + j] = (prod[i - k + j] - c * f[j]) % p
    return _poly_trim(prod[:k])


def _poly_powmod(a, n, f, p):
    result = [1]
    base = a
    while n:
        if n & 1:
            result = _poly_mulmod(result, base, f, p)
        base = _poly_mulmod(base, base, f, p)
        n >>= 1
    return result


def _x_is_primitive(f, p):
    k = len(f) - 1
    order = p ** k - 1
    if f[0] == 0:
        return False
    if k == 1:
        g = (-f[0]) % p
        return all(pow(g, order // r, p) != 1 for r in prime_factors(order)) if order > 1 else g == 1
    x = [0, 1]
    if _poly_powmod(x, order, f, p) != [1]:
        return False
    return all(_poly_powmod(x, order // r, f, p) != [1] for r in prime_factors(order))


@lru_cache(maxsize=None)
def least_primitive_polynomial(p: int, k: int) -> tuple[int, ...]:
    """Coefficients (low first, monic) of the least primitive polynomial."""
    for code in range(p ** k):
        coeffs, c = [], code
        for _ in range(k):
            coeffs.append(c % p)
            c //= p
        f = coeffs + [1]
        if _x_is_primitive(f, p):
            return tuple(f)
    raise ArithmeticError(f"no primitive polynomial of degree {k} over GF({p})")


class Field:
    """GF(p^k) defined by a monic modulus for which x is primitive."""

    def __init__(self, p: int, k: int, modulus):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("degree must be positive")
        self.p, self.k = p, k
        self.size = p ** k
        if self.size > MAX_FIELD_SIZE:
            raise ValueError(f"GF({p}^{k}) exceeds the exact-integer budget")
        self.modulus = tuple(modulus)
        self.order = self.size - 1
        n = self.order
        exp = [0] * (2 * n + 1)
        log = [-1] * self.size
        if k == 1:
            g = (-self.modulus[0]) % p
            v = 1
            for i in range(n):
                exp[i] = v
                v = v * g % p
        else:
            low = self.modulus[:k]
            digits = [1] + [0] * (k - 1)
            for i in range(n):
                exp[i] = sum(c * p ** j for j, c in enumerate(digits))
                top = digits[-1]
                digits = [0] + digits[:-1]
                if top:
                    digits = [(d - top * low[j]) % p for j, d in enumerate(digits)]
        for i in range(n):
            if log[exp[i]] != -1:
                raise ValueError("modulus does not have x primitive")
            log[exp[i]] = i
        for i in range(n, 2 * n + 1):
            exp[i] = exp[i - n]
        self._exp = exp
        self._log = log
        self.gen = exp[1]
        self.neg_one = exp[n // 2] if p != 2 else 1
        # zech[i] = encoding of 1 + x^i
        self._zech = [self._slow_add(1, exp[i]) for i in range(n)]
        self._blocks: dict[int, list[list[int]]] = {}

    def __repr__(self):
        return f"GF({self.p}^{self.k})" if self.k > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.modulus) == (other.p, other.modulus)

    def __hash__(self):
        return hash((self.p, self.modulus))

    # -- coefficient vectors --
    def coeffs(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def from_coeffs(self, cs) -> int:
        cs = list(cs)
        if len(cs) > self.k:
            raise ValueError("too many coefficients")
        return sum((c % self.p) * self.p ** i for i, c in enumerate(cs))

    def _slow_add(self, a, b):
        p = self.p
        out, m = 0, 1
        while a or b:
            out += ((a % p + b % p) % p) * m
            a //= p
            b //= p
            m *= p
        return out

    # -- arithmetic --
    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if a == 0:
            return b
        if b == 0:
            return a
        la, lb = self._log[a], self._log[b]
        s = self._zech[(lb - la) % self.order]
        if s == 0:
            return 0
        return self._exp[la + self._log[s]]

    def neg(self, a: int) -> int:
        if a == 0 or self.p == 2:
            return a
        return self._exp[self._log[a] + self._log[self.neg_one]]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[self._log[a] + self._log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return self._exp[(self.order - self._log[a]) % self.order]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, n: int) -> int:
        if a == 0:
            if n < 0:
                raise ZeroDivisionError("negative power of zero")
            return 1 if n == 0 else 0
        return self._exp[(self._log[a] * n) % self.order]

    def prim_pow(self, n: int) -> int:
        """x^n for the primitive element x."""
        return self._exp[n % self.order]

    def log(self, a: int) -> int:
        if a == 0:
            raise ValueError("log of zero")
        return self._log[a]

    def from_int(self, n: int) -> int:
        return n % self.p

    def elements(self):
        return range(self.size)

    def mult_order(self, a: int) -> int:
        return self.order // math.gcd(self.order, self.log(a))

    def is_square(self, a: int) -> bool:
        return a == 0 or self.p == 2 or self.log(a) % 2 == 0

    def sqrt(self, a: int) -> int:
        if a == 0:
            return 0
        la = self.log(a)
        if self.p == 2:
            return self._exp[(la * ((self.order + 1) // 2)) % self.order]
        if la % 2:
            raise ValueError("not a square")
        return self._exp[la // 2]

    def block(self, a: int) -> list[list[int]]:
        """Matrix over GF(p) of y -> y*a in the basis 1, x, ..., x^{k-1} (row convention)."""
        b = self._blocks.get(a)
        if b is None:
            b = [self.coeffs(self.mul(self.prim_pow(i), a)) for i in range(self.k)]
            self._blocks[a] = b
        return b

    def to_json(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": list(self.modulus)}


def make_field(p: int, k: int) -> Field:
    return _make_field(p, k)


@lru_cache(maxsize=None)
def _make_field(p, k):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError("degree must be positive")
    return Field(p, k, least_primitive_polynomial(p, k))


def discrete_log(F: Field, beta: int, base: int) -> int:
    """Least k >= 0 with base^k = beta."""
    if beta == 0:
        raise ValueError("discrete log of zero")
    if base == 0:
        raise ValueError("zero base")
    n = F.order
    lb, lg = F.log(beta), F.log(base)
    g = math.gcd(lg, n)
    if lb % g:
        raise ValueError("element not in the cyclic group generated by base")
    m = n // g
    if m == 1:
        return 0
    return (lb // g) * pow(lg // g, -1, m) % m


def bsgs_log(F: Field, beta: int, base: int) -> int:
    """Baby-step giant-step using only field multiplication; used as a cross-check."""
    if beta == 0 or base == 0:
        raise ValueError("zero argument")
    n = F.mult_order(base)
    m = math.isqrt(n) + 1
    table = {}
    cur = 1
    for j in range(m):
        table.setdefault(cur, j)
        cur = F.mul(cur, base)
    giant = F.pow(base, -m)
    cur = beta
    for i in range(m + 1):
        if cur in table:
            return (i * m + table[cur]) % n
        cur = F.mul(cur, giant)
    raise ValueError("element not in the cyclic group generated by base")


def poly_mul(F: Field, a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def poly_eval(F: Field, coeffs, a: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = F.add(F.mul(acc, a), c)
    return acc


def minimal_polynomial(F: Field, alpha: int, sub_size: int | None = None) -> list[int]:
    """Monic minimal polynomial of alpha over the subfield of order sub_size (default GF(p)).

    Coefficients are returned as elements of F, low degree first.
    """
    r = F.p if sub_size is None else sub_size
    conj = [alpha]
    c = F.pow(alpha, r)
    while c != alpha:
        conj.append(c)
        c = F.pow(c, r)
    poly = [1]
    for c in conj:
        poly = poly_mul(F, poly, [F.neg(c), 1])
    return poly


def linear_expression(F: Field, target: int, elems) -> list[int]:
    """Coefficients c_i in GF(p) with sum c_i elems[i] = target."""
    p, k = F.p, F.k
    cols = [F.coeffs(x) for x in elems]
    ncol = len(cols)
    rhs = F.coeffs(target)
    # Gaussian elimination on the k x ncol system over GF(p)
    rows = [[cols[j][i] for j in range(ncol)] + [rhs[i]] for i in range(k)]
    pivots = []
    r = 0
    for c in range(ncol):
        piv = next((i for i in range(r, k) if rows[i][c] % p), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], -1, p)
        rows[r] = [v * inv % p for v in rows[r]]
        for i in range(k):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [(v - f * w) % p for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == k:
            break
    if any(rows[i][ncol] % p for i in range(r, k)):
        raise ValueError("target not in the GF(p)-span of the given elements")
    sol = [0] * ncol
    for i, c in enumerate(pivots):
        sol[c] = rows[i][ncol]
    return sol


def subfield_expression(F: Field, target: int, gen: int, max_degree: int) -> list[int]:
    """Coefficients c_i in GF(p) with sum c_i gen^i = target, deg <= max_degree."""
    sol = linear_expression(F, target, [F.pow(gen, i) for i in range(max_degree + 1)])
    _poly_trim(sol)
    return sol


@dataclass(frozen=True)
class FieldTower:
    """GF(q) < GF(q^2) with omega primitive in GF(q^2) and omega0 = omega^(q+1).

    The extension is built from the least primitive polynomial of degree 2e,
    omega is its variable.  The base field is modelled separately with
    modulus the minimal polynomial of omega0, so its variable is omega0.
    All named constants live in the extension.
    """

    p: int
    e: int
    base: Field
    ext: Field
    constants: dict = dc_field(default_factory=dict, compare=False)

    @property
    def q(self) -> int:
        return self.p ** self.e

    @property
    def omega(self) -> int:
        return self.ext.gen

    @property
    def omega0(self) -> int:
        return self.ext.prim_pow(self.q + 1)

    def embed(self, a: int) -> int:
        """Base-field element into the extension."""
        if a == 0:
            return 0
        return self.ext.prim_pow(self.base.log(a) * (self.q + 1))

    def restrict(self, a: int) -> int:
        """Extension element lying in GF(q) back to the base encoding."""
        if a == 0:
            return 0
        la = self.ext.log(a)
        if la % (self.q + 1):
            raise ValueError("element not in GF(q)")
        return self.base.prim_pow(la // (self.q + 1))

    def frob(self, a: int) -> int:
        return self.ext.pow(a, self.q)

    def trace(self, a: int) -> int:
        return self.ext.add(a, self.frob(a))

    def norm(self, a: int) -> int:
        return self.ext.pow(a, self.q + 1)

    def __getattr__(self, name):
        c = self.__dict__.get("constants", {})
        if name in c:
            return c[name]
        raise AttributeError(name)

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.e, "modulus": list(self.base.modulus),
                "ext_modulus": list(self.ext.modulus)}


def make_tower(p: int, e: int) -> FieldTower:
    return _make_tower(p, e)


@lru_cache(maxsize=None)
def _make_tower(p, e):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if e < 1:
        raise ValueError("degree must be positive")
    ext = make_field(p, 2 * e)
    q = p ** e
    w0 = ext.prim_pow(q + 1)
    mp = minimal_polynomial(ext, w0)
    base = Field(p, e, [c for c in mp])  # coefficients lie in GF(p), encoded < p
    F = ext
    w = ext.gen
    if q % 2 == 0:
        xi = F.inv(F.add(1, F.prim_pow(q - 1)))
        psi = 1
        phi = F.div(w, F.add(w, F.pow(w, q)))
    else:
        xi = F.neg(F.inv(2 % p))
        psi = F.prim_pow((q + 1) // 2)
        phi = xi
    zeta = F.neg(F.prim_pow((q * q + q) // 2))
    consts = {"xi": xi, "zeta": zeta, "psi": psi, "phi": phi}
    return FieldTower(p, e, base, ext, consts)


def tower_for_q(q: int) -> FieldTower:
    p, e = prime_power(q)
    return make_tower(p, e)


def _subfield_degree(F: Field, a: int) -> int:
    """Degree over GF(p) of GF(p)[a]."""
    return len(minimal_polynomial(F, a)) - 1


def lemma_xy_conditions(T: FieldTower, x: int, y: int) -> bool:
    F, q = T.ext, T.q
    c1 = F.add(F.prim_pow(x * (q - 2)), F.prim_pow(y * (q - 2))) == 1
    c2 = F.add(F.prim_pow(-x * (q + 1)), F.prim_pow(-y * (q + 1))) == 1
    c3 = _subfield_degree(F, F.prim_pow(x * (q + 1))) == T.e
    want = 2 * T.e if T.p % 2 else T.e
    c4 = _subfield_degree(F, F.prim_pow(x * (q - 2))) == want
    return c1 and c2 and c3 and c4


def lemma_xy(T: FieldTower, seed: int = 0) -> tuple[int, int]:
    """Integers x, y with the four field conditions used by the SU(3,q) Borel relations."""
    q, F = T.q, T.ext
    if q in (2, 3, 5):
        raise ValueError(f"no (x, y) pair exists for q = {q}")
    n = F.order
    if q % 2 == 0:
        w0 = T.omega0
        c = discrete_log(F, F.sub(1, w0), w0)
        x, y = -(q + 1), -c * (q + 1)
        if not lemma_xy_conditions(T, x, y):
            raise ArithmeticError("even-q recipe failed its own check")
        return x, y
    psi = T.psi
    psi2 = F.mul(psi, psi)

    def candidate(t):
        den = F.sub(F.mul(t, t), psi2)
        if den == 0:
            return None
        num = F.mul(F.mul(t, F.add(F.mul(t, t), F.mul(3 % T.p, psi2))), F.add(t, psi))
        ct = F.div(num, F.mul(den, den))
        if ct == 0:
            return None
        cy = F.sub(ct, F.pow(ct, q - 1))
        if cy == 0:
            return None
        x = (-F.log(ct)) % n
        y = (-F.log(cy)) % n
        # any x' = x mod n gives the same element; pick the representative
        if lemma_xy_conditions(T, x, y):
            return x, y
        return None

    def search(order):
        fallback = None
        for t in order:
            r = candidate(t)
            if r is None:
                continue
            if T.e == 1 or math.gcd(r[0], n) == 1:
                return r
            if fallback is None:
                fallback = r
        return fallback

    rng = random.Random(seed)
    trial = [rng.randrange(1, F.size) for _ in range(min(64, F.size))]
    r = search(trial)
    if r is not None and (T.e == 1 or math.gcd(r[0], n) == 1):
        return r
    r2 = search(range(1, F.size))
    if r2 is None:
        r2 = r
    if r2 is None:
        raise ArithmeticError(f"no (x, y) found for q = {q}")
    return r2


def find_gamma(T: FieldTower, beta: int, eta: int) -> int:
    """gamma with trace 0 and beta + gamma a GF(q)-multiple of eta."""
    F = T.ext
    tb, te = T.trace(beta), T.trace(eta)
    if tb == 0 or te == 0:
        raise ValueError("trace of beta and eta must be nonzero")
    t = F.div(tb, te)
    return F.sub(F.mul(t, eta), beta)
