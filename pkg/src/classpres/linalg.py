"""Dense matrices over GF(p^k), classical forms and membership checks.

A d x d matrix over GF(p^k) is held as its dk x dk image over GF(p) under the
regular representation (entry a becomes the k x k block of y -> y*a).  The map
is an injective ring homomorphism, so products, inverses and equality can all
be done with integer numpy arrays reduced mod p.  Vectors are rows and
matrices act on the right, so row i of a matrix is the image of e_i.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .field import Field


def _blow_up(F: Field, rows) -> np.ndarray:
    d, k = len(rows), F.k
    big = np.zeros((d * k, d * k), dtype=np.int64)
    for i, row in enumerate(rows):
        if len(row) != d:
            raise ValueError("matrix is not square")
        for j, a in enumerate(row):
            if a:
                big[i * k:(i + 1) * k, j * k:(j + 1) * k] = F.block(a)
    return big


def _inverse_mod_p(a: np.ndarray, p: int) -> np.ndarray:
    n = a.shape[0]
    m = np.concatenate([a % p, np.eye(n, dtype=np.int64)], axis=1)
    for c in range(n):
        nz = np.nonzero(m[c:, c])[0]
        if len(nz) == 0:
            raise ZeroDivisionError("singular matrix")
        r = c + nz[0]
        if r != c:
            m[[c, r]] = m[[r, c]]
        m[c] = m[c] * pow(int(m[c, c]), -1, p) % p
        col = m[:, c].copy()
        col[c] = 0
        m = (m - np.outer(col, m[c])) % p
    return m[:, n:]


class Mat:
    __slots__ = ("F", "d", "a", "_key")

    def __init__(self, F: Field, big: np.ndarray, d: int | None = None):
        self.F = F
        self.a = big
        self.d = big.shape[0] // F.k if d is None else d
        self._key = None

    @classmethod
    def from_rows(cls, F: Field, rows) -> "Mat":
        rows = [[int(x) for x in r] for r in rows]
        return cls(F, _blow_up(F, rows), len(rows))

    @classmethod
    def identity(cls, F: Field, d: int) -> "Mat":
        return cls(F, np.eye(d * F.k, dtype=np.int64), d)

    @classmethod
    def scalar(cls, F: Field, d: int, a: int) -> "Mat":
        return cls.from_rows(F, [[a if i == j else 0 for j in range(d)] for i in range(d)])

    @classmethod
    def diag(cls, F: Field, entries) -> "Mat":
        d = len(entries)
        return cls.from_rows(F, [[entries[i] if i == j else 0 for j in range(d)] for i in range(d)])

    def entry(self, i: int, j: int) -> int:
        k, p = self.F.k, self.F.p
        row = self.a[i * k, j * k:(j + 1) * k]
        return sum(int(c) * p ** t for t, c in enumerate(row))

    def rows(self) -> list[list[int]]:
        return [[self.entry(i, j) for j in range(self.d)] for i in range(self.d)]

    def __mul__(self, other: "Mat") -> "Mat":
        if self.d != other.d:
            raise ValueError("dimension mismatch")
        return Mat(self.F, (self.a @ other.a) % self.F.p, self.d)

    def inverse(self) -> "Mat":
        return Mat(self.F, _inverse_mod_p(self.a, self.F.p), self.d)

    def __pow__(self, n: int) -> "Mat":
        if n < 0:
            return self.inverse() ** (-n)
        result = Mat.identity(self.F, self.d)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conj(self, g: "Mat") -> "Mat":
        """self^g = g^-1 self g."""
        return g.inverse() * self * g

    def __eq__(self, other):
        return isinstance(other, Mat) and self.F == other.F and np.array_equal(self.a, other.a)

    def __hash__(self):
        return hash(self.key())

    def key(self) -> bytes:
        if self._key is None:
            self._key = self.a.astype(np.int8 if self.F.p < 128 else np.int16).tobytes()
        return self._key

    def is_identity(self) -> bool:
        return np.array_equal(self.a, np.eye(self.a.shape[0], dtype=np.int64))

    def transpose(self) -> "Mat":
        r = self.rows()
        return Mat.from_rows(self.F, [list(c) for c in zip(*r)])

    def map_entries(self, f) -> "Mat":
        return Mat.from_rows(self.F, [[f(x) for x in r] for r in self.rows()])

    def det(self) -> int:
        F = self.F
        m = self.rows()
        d = self.d
        det = 1
        for c in range(d):
            piv = next((r for r in range(c, d) if m[r][c]), None)
            if piv is None:
                return 0
            if piv != c:
                m[c], m[piv] = m[piv], m[c]
                det = F.neg(det)
            det = F.mul(det, m[c][c])
            inv = F.inv(m[c][c])
            for r in range(c + 1, d):
                if m[r][c]:
                    f = F.mul(m[r][c], inv)
                    m[r] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[r], m[c])]
        return det

    def rank_minus_identity(self) -> int:
        F = self.F
        m = self.rows()
        for i in range(self.d):
            m[i][i] = F.sub(m[i][i], 1)
        return rank(F, m)

    def __repr__(self):
        return f"Mat({self.F}, {self.rows()})"

    def to_json(self) -> list[list[list[int]]]:
        return [[self.F.coeffs(x) for x in r] for r in self.rows()]


def rank(F: Field, m) -> int:
    m = [list(r) for r in m]
    rows, cols = len(m), len(m[0]) if m else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = F.inv(m[r][c])
        for i in range(rows):
            if i != r and m[i][c]:
                f = F.mul(m[i][c], inv)
                m[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(m[i], m[r])]
        r += 1
    return r


def is_scalar(M: Mat) -> int | None:
    """The scalar lambda with M = lambda*I, or None."""
    lam = M.entry(0, 0)
    S = Mat.scalar(M.F, M.d, lam)
    return lam if S == M else None


# -- forms --

KINDS = ("symplectic", "hermitian", "symmetric", "quadratic-plus", "quadratic-minus", "quadratic-odd")


@dataclass(frozen=True)
class FormSpec:
    kind: str
    gram: Mat
    quad: Mat | None = None
    q: int | None = None  # frobenius exponent for hermitian forms

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown form kind {self.kind}")

    def to_json(self) -> dict:
        out = {"kind": self.kind, "gram": self.gram.to_json()}
        if self.quad is not None:
            out["quad"] = self.quad.to_json()
        return out


def _frob_mat(M: Mat, q: int) -> Mat:
    F = M.F
    return M.map_entries(lambda x: F.pow(x, q))


def quad_value(Q: Mat, v) -> int:
    F = Q.F
    rows = Q.rows()
    acc = 0
    for i, vi in enumerate(v):
        if vi:
            for j in range(i, len(v)):
                if v[j] and rows[i][j]:
                    acc = F.add(acc, F.mul(F.mul(vi, rows[i][j]), v[j]))
    return acc


def preserves_form(M: Mat, form: FormSpec) -> bool:
    if M.d != form.gram.d:
        raise ValueError("dimension mismatch")
    if form.kind == "hermitian":
        rhs = _frob_mat(M, form.q).transpose()
    else:
        rhs = M.transpose()
    if M * form.gram * rhs != form.gram:
        return False
    if form.quad is not None:
        F = M.F
        rows = M.rows()
        d = M.d
        basis = [[1 if j == i else 0 for j in range(d)] for i in range(d)]
        vecs = basis + [[F.add(a, b) for a, b in zip(basis[i], basis[j])]
                        for i in range(d) for j in range(i + 1, d)]
        for v in vecs:
            img = [0] * d
            for i, vi in enumerate(v):
                if vi:
                    img = [F.add(x, F.mul(vi, y)) for x, y in zip(img, rows[i])]
            if quad_value(form.quad, img) != quad_value(form.quad, v):
                return False
    return True


def _bilinear(F, G, u, v):
    acc = 0
    for i, ui in enumerate(u):
        if ui:
            for j, vj in enumerate(v):
                if vj and G[i][j]:
                    acc = F.add(acc, F.mul(F.mul(ui, G[i][j]), vj))
    return acc


def _vec_mat(F, v, rows):
    out = [0] * len(rows)
    for i, vi in enumerate(v):
        if vi:
            out = [F.add(x, F.mul(vi, y)) for x, y in zip(out, rows[i])]
    return out


def dickson_or_spinor(M: Mat, form: FormSpec) -> int:
    """Dickson invariant (even q) or spinor-norm parity (odd q) of an orthogonal matrix.

    Odd q uses the Wall form on V_g = image(1 - g): its Gram matrix in a basis
    u_s = e_s(1 - g) is B(e_s, u_t), and its determinant is the spinor norm
    up to squares.  A reflection r_v gets B(v,v)/2 = Q(v), as it should.
    """
    F = M.F
    if not preserves_form(M, form):
        raise ValueError("matrix does not preserve the form")
    if F.p == 2:
        return M.rank_minus_identity() % 2
    if M.det() != 1:
        raise ValueError("matrix not in SO")
    G = form.gram.rows()
    d = M.d
    rows = M.rows()
    one_minus = [[F.sub(1 if i == j else 0, rows[i][j]) for j in range(d)] for i in range(d)]
    chosen = []
    for i in range(d):
        if rank(F, [one_minus[s] for s in chosen] + [one_minus[i]]) > len(chosen):
            chosen.append(i)
    wall = [[_bilinear(F, G, [1 if k == s else 0 for k in range(d)], one_minus[t]) for t in chosen]
            for s in chosen]
    if not chosen:
        return 0
    det = Mat.from_rows(F, wall).det()
    return 0 if F.is_square(det) else 1
