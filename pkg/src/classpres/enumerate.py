"""Todd-Coxeter coset enumeration (Felsch by default, HLT with lookahead as option).

Columns of the table are letters: 2i is generator i and 2i+1 its inverse, so the
inverse column of x is x ^ 1.  Dead cosets are tracked by a union-find forest in
`parent`; the table is compacted when it fills up and once more at the end.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from numba import njit

from .slp import ExpansionBudget, Presentation, Slp, Word, cyclic_reduce, expand

DEFAULT_BUDGET = 10**6

# status codes shared with the kernels
_OK, _OVERFLOW = 0, 1
# size of the preferred-definition ring kept in the state vector
_PDL = 256


class Overflow(RuntimeError):
    def __init__(self, max_cosets, defined):
        super().__init__(f"coset table overflow: more than {max_cosets} live cosets")
        self.max_cosets = max_cosets
        self.defined = defined


@dataclass
class EnumerationResult:
    index: int
    defined: int
    max_live: int
    table: np.ndarray
    strategy: str

    @property
    def final(self) -> int:
        return self.index

    def to_json(self, with_table: bool = False) -> dict:
        out = {"index": self.index, "defined": self.defined, "final": self.index,
               "max_live": self.max_live, "strategy": self.strategy}
        if with_table:
            out["table"] = self.table.tolist()
        return out


# ----------------------------------------------------------------- kernels
# state layout: st[0] = number allocated, st[1] = live, st[2] = defined,
# st[3] = max live, st[4] = deduction stack top, st[5] = deduction overflow flag,
# st[6] = preferred definitions pushed, st[7:] = ring of (coset, letter) pairs


@njit(cache=True)
def _rep(parent, c):
    r = c
    while parent[r] != r:
        r = parent[r]
    while parent[c] != r:
        n = parent[c]
        parent[c] = r
        c = n
    return r


@njit(cache=True)
def _merge(parent, queue, qn, st, a, b):
    a = _rep(parent, a)
    b = _rep(parent, b)
    if a == b:
        return qn
    if a > b:
        a, b = b, a
    parent[b] = a
    queue[qn] = b
    st[1] -= 1
    return qn + 1


@njit(cache=True)
def _push(ded_c, ded_x, st, c, x):
    top = st[4]
    if top < ded_c.shape[0]:
        ded_c[top] = c
        ded_x[top] = x
        st[4] = top + 1
    else:
        st[5] = 1


@njit(cache=True)
def _coincidence(table, parent, queue, ded_c, ded_x, st, a, b):
    ncols = table.shape[1]
    qn = _merge(parent, queue, 0, st, a, b)
    i = 0
    while i < qn:
        g = queue[i]
        i += 1
        for x in range(ncols):
            d = table[g, x]
            if d < 0:
                continue
            xi = x ^ 1
            if table[d, xi] == g:
                table[d, xi] = -1
            mu = _rep(parent, g)
            nu = _rep(parent, d)
            t = table[mu, x]
            if t >= 0:
                qn = _merge(parent, queue, qn, st, nu, t)
            else:
                t = table[nu, xi]
                if t >= 0:
                    qn = _merge(parent, queue, qn, st, mu, t)
                else:
                    table[mu, x] = nu
                    table[nu, xi] = mu
                    _push(ded_c, ded_x, st, mu, x)


@njit(cache=True)
def _scan(table, parent, queue, ded_c, ded_x, st, letters, off, ln, c, s, define, cap):
    """Scan relator letters[off:off+ln] rotated by s from coset c.

    Returns 0 when done, 1 when a definition was needed but capacity is exhausted.
    """
    while True:
        f = c
        i = 0
        while i < ln:
            t = table[f, letters[off + (s + i) % ln]]
            if t < 0:
                break
            f = t
            i += 1
        if i == ln:
            if f != c:
                _coincidence(table, parent, queue, ded_c, ded_x, st, f, c)
            return 0
        b = c
        j = ln - 1
        while j >= i:
            t = table[b, letters[off + (s + j) % ln] ^ 1]
            if t < 0:
                break
            b = t
            j -= 1
        if j < i:
            _coincidence(table, parent, queue, ded_c, ded_x, st, f, b)
            return 0
        y = letters[off + (s + i) % ln]
        if j == i:
            table[f, y] = b
            table[b, y ^ 1] = f
            _push(ded_c, ded_x, st, f, y)
            return 0
        if not define:
            if j == i + 1:
                # one definition here would close the relator: a preferred definition
                k = st[6] % _PDL
                st[7 + 2 * k] = f
                st[8 + 2 * k] = y
                st[6] += 1
            return 0
        if st[0] >= cap:
            return 1
        n = st[0]
        st[0] += 1
        st[1] += 1
        st[2] += 1
        if st[1] > st[3]:
            st[3] = st[1]
        table[f, y] = n
        table[n, y ^ 1] = f
        _push(ded_c, ded_x, st, f, y)


@njit(cache=True)
def _full_scan(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel):
    """Non-defining scan of every live coset under every relator."""
    c = 0
    while c < st[0]:
        if parent[c] == c:
            for r in range(nrel):
                if parent[c] != c:
                    break
                _scan(table, parent, queue, ded_c, ded_x, st, letters, offs[r], lens[r], c, 0, False, 0)
        c += 1


@njit(cache=True)
def _process(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel, rot_ptr, rot_rel, rot_start):
    while True:
        while st[4] > 0:
            st[4] -= 1
            c = ded_c[st[4]]
            x = ded_x[st[4]]
            if parent[c] != c:
                continue
            for k in range(rot_ptr[x], rot_ptr[x + 1]):
                if parent[c] != c:
                    break
                r = rot_rel[k]
                _scan(table, parent, queue, ded_c, ded_x, st, letters, offs[r], lens[r], c, rot_start[k], False, 0)
        if st[5] == 0:
            return
        st[5] = 0
        _full_scan(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel)


@njit(cache=True)
def _compress(table, parent, keep, n):
    """Renumber the first n cosets, dropping dead ones; returns (live, new index of keep)."""
    ncols = table.shape[1]
    newid = np.full(n, -1, np.int32)
    k = 0
    for c in range(n):
        if parent[c] == c:
            newid[c] = k
            k += 1
    for c in range(n):
        nc = newid[c]
        if nc < 0:
            continue
        for x in range(ncols):
            t = table[c, x]
            if t >= 0:
                t = newid[_rep(parent, t)]
            table[nc, x] = t
    for c in range(k, n):
        for x in range(ncols):
            table[c, x] = -1
    for c in range(n):
        parent[c] = c
    return k, (newid[keep] if keep >= 0 else -1)


@njit(cache=True)
def _room(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel, rot_ptr, rot_rel, rot_start, a):
    """Table is full: look ahead for coincidences, then compact.  Returns new a (or -1)."""
    cap = table.shape[0]
    st[5] = 1
    _process(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel, rot_ptr, rot_rel, rot_start)
    if st[1] >= cap:
        return -2
    n, a2 = _compress(table, parent, a, st[0])
    st[0] = n
    st[6] = 0
    return a2


@njit(cache=True)
def _new_coset(table, st, a, x):
    n = st[0]
    st[0] += 1
    st[1] += 1
    st[2] += 1
    if st[1] > st[3]:
        st[3] = st[1]
    table[a, x] = n
    table[n, x ^ 1] = a


@njit(cache=True)
def _enum(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel,
          sub_letters, sub_offs, sub_lens, nsub, rot_ptr, rot_rel, rot_start, felsch, nfill, ffac):
    """felsch: define row by row with full deduction processing.
    Otherwise HLT: scan-and-fill the first nfill relators (the originals) at each coset,
    processing deductions as they arise, with lookahead when the table fills."""
    cap = table.shape[0]
    ncols = table.shape[1]
    st[0] = 1
    st[1] = 1
    st[2] = 1
    st[3] = 1
    for h in range(nsub):
        while True:
            rc = _scan(table, parent, queue, ded_c, ded_x, st, sub_letters, sub_offs[h], sub_lens[h], 0, 0, True, cap)
            if rc == 0:
                break
            if _room(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel,
                     rot_ptr, rot_rel, rot_start, 0) == -2:
                return _OVERFLOW
    _process(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel, rot_ptr, rot_rel, rot_start)
    while True:
        a = 0
        while a < st[0]:
            if parent[a] != a:
                a += 1
                continue
            restart = False
            if not felsch:
                r = 0
                while r < nfill:
                    if parent[a] != a:
                        break
                    rc = _scan(table, parent, queue, ded_c, ded_x, st, letters, offs[r], lens[r], a, 0, True, cap)
                    if rc == 1:
                        a = _room(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel,
                                  rot_ptr, rot_rel, rot_start, a)
                        if a == -2:
                            return _OVERFLOW
                        if a < 0:
                            restart = True
                            break
                        continue
                    _process(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel,
                             rot_ptr, rot_rel, rot_start)
                    r += 1
            if restart:
                a = 0
                continue
            if felsch:
                # preferred definitions, as long as row filling keeps up (fill factor)
                done = 0
                while st[6] > 0 and st[0] < cap and st[1] < ffac * (a + 1):
                    st[6] -= 1
                    k = st[6] % _PDL
                    c = st[7 + 2 * k]
                    y = st[8 + 2 * k]
                    if c < st[0] and parent[c] == c and table[c, y] < 0:
                        _new_coset(table, st, c, y)
                        _push(ded_c, ded_x, st, c, y)
                        _process(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel,
                                 rot_ptr, rot_rel, rot_start)
                        done = 1
                        break
                if done:
                    continue
            x = 0
            while x < ncols:
                if parent[a] != a:
                    break
                if table[a, x] >= 0:
                    x += 1
                    continue
                if st[0] >= cap:
                    a = _room(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel,
                              rot_ptr, rot_rel, rot_start, a)
                    if a == -2:
                        return _OVERFLOW
                    if a < 0:
                        restart = True
                        break
                    continue
                _new_coset(table, st, a, x)
                _push(ded_c, ded_x, st, a, x)
                _process(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel,
                         rot_ptr, rot_rel, rot_start)
                x += 1
            if restart:
                a = 0
                continue
            a += 1
        # closed: confirm every relator traces at every coset
        st[4] = 0
        live_before = st[1]
        st[5] = 1
        _process(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, nrel, rot_ptr, rot_rel, rot_start)
        if st[1] == live_before and _closed(table, parent, st[0]):
            break
    n, _ = _compress(table, parent, -1, st[0])
    st[0] = n
    return _OK


@njit(cache=True)
def _closed(table, parent, n):
    for c in range(n):
        if parent[c] == c:
            for x in range(table.shape[1]):
                if table[c, x] < 0:
                    return False
    return True


# ----------------------------------------------------------------- driver

def _pack(words: list[list[int]]):
    lens = np.array([len(w) for w in words], dtype=np.int64)
    offs = np.zeros(len(words), dtype=np.int64)
    if len(words) > 1:
        offs[1:] = np.cumsum(lens)[:-1]
    flat = np.array([l for w in words for l in w], dtype=np.int32) if words else np.zeros(0, np.int32)
    return flat, offs, lens


def _rotations(words: list[list[int]], ncols: int):
    buckets = [[] for _ in range(ncols)]
    for r, w in enumerate(words):
        for s, l in enumerate(w):
            buckets[l].append((r, s))
    ptr = np.zeros(ncols + 1, dtype=np.int64)
    rel = []
    start = []
    for x in range(ncols):
        ptr[x + 1] = ptr[x] + len(buckets[x])
        for r, s in buckets[x]:
            rel.append(r)
            start.append(s)
    return ptr, np.array(rel, dtype=np.int64), np.array(start, dtype=np.int64)


def _letters(w, names: list[str], index: dict, budget: int) -> list[int]:
    if isinstance(w, Slp):
        w = w.to_word(names)
    return expand(w, index, budget)


def coset_enumerate(generators: list[str], relators: list, subgroup: list = (),
                    max_cosets: int = 10**6, strategy: str = "felsch",
                    budget: int = DEFAULT_BUDGET, fill_factor: int = 0) -> EnumerationResult:
    """Enumerate cosets of <subgroup> in <generators | relators>.

    relators and subgroup entries are Words (or Slps over `generators`).
    Raises Overflow when more than max_cosets live cosets are needed and
    ExpansionBudget when the expanded words exceed `budget` symbols in total.
    """
    if strategy not in ("felsch", "hlt"):
        raise ValueError(f"unknown strategy {strategy}")
    index = {g: i for i, g in enumerate(generators)}
    ncols = 2 * len(generators)
    rels, total = [], 0
    for w in relators:
        ls = cyclic_reduce(_letters(w, generators, index, budget))
        total += len(ls)
        if total > budget:
            raise ExpansionBudget(f"relators expand to more than {budget} symbols")
        if ls:
            rels.append(ls)
    subs = []
    for w in subgroup:
        ls = _letters(w, generators, index, budget)
        if ls:
            subs.append(ls)
    # relators together with their inverses, so deductions only need forward rotations
    both = rels + [[l ^ 1 for l in reversed(w)] for w in rels]
    letters, offs, lens = _pack(both)
    sub_letters, sub_offs, sub_lens = _pack(subs)
    rot_ptr, rot_rel, rot_start = _rotations(both, ncols)

    cap = int(max_cosets) + 1
    table = np.full((cap, max(ncols, 1)), -1, dtype=np.int32)
    parent = np.arange(cap, dtype=np.int32)
    queue = np.zeros(cap, dtype=np.int32)
    dsize = max(4 * cap, 1024)
    ded_c = np.zeros(dsize, dtype=np.int32)
    ded_x = np.zeros(dsize, dtype=np.int32)
    st = np.zeros(8 + 2 * _PDL, dtype=np.int64)
    if ncols == 0:
        return EnumerationResult(1, 1, 1, table[:1, :0], strategy)
    code = _enum(table, parent, queue, ded_c, ded_x, st, letters, offs, lens, len(both),
                 sub_letters, sub_offs, sub_lens, len(subs), rot_ptr, rot_rel, rot_start,
                 strategy == "felsch", len(rels), fill_factor or (5 * (ncols + 2)) // 4)
    if code == _OVERFLOW:
        raise Overflow(max_cosets, int(st[2]))
    n = int(st[0])
    return EnumerationResult(n, int(st[2]), int(st[3]), table[:n].copy(), strategy)


def enumerate_presentation(P: Presentation, subgroup: list = (), max_cosets: int = 10**6,
                           strategy: str = "felsch", budget: int = DEFAULT_BUDGET) -> EnumerationResult:
    return coset_enumerate(P.generators, P.words, subgroup, max_cosets, strategy, budget)


def check_table(table: np.ndarray, relators: list[list[int]]) -> bool:
    """Closed table in which every relator traces a loop at every coset."""
    if (table < 0).any():
        return False
    n = table.shape[0]
    for c in range(n):
        for x in range(table.shape[1]):
            if table[table[c, x], x ^ 1] != c:
                return False
    for w in relators:
        cur = np.arange(n)
        for l in w:
            cur = table[cur, l]
        if not (cur == np.arange(n)).all():
            return False
    return True
