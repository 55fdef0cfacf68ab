"""Words, straight-line programs and presentations.

Relators are written with the `Word` expression type:

    a * b        product
    ~a           inverse
    a ** 3       power (kept as one cell, exponent stored in binary)
    a ** b       conjugate b^-1 a b
    comm(a, b)   commutator a^-1 b^-1 a b

Words are hash-consed, so equal expressions are the same object and
evaluation can memoise on identity.  `Slp` is the flat instruction-list form
used for serialisation: ["gen", i] | ["mul", a, b] | ["inv", a] | ["pow", a, k].
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Iterable

_INTERN: dict = {}


class Word:
    __slots__ = ("op", "args", "__weakref__")

    def __new__(cls, op, *args):
        key = (op,) + tuple(id(a) if isinstance(a, Word) else a for a in args)
        w = _INTERN.get(key)
        if w is None:
            w = object.__new__(cls)
            w.op = op
            w.args = args
            _INTERN[key] = w
        return w

    # construction helpers with light simplification
    def __mul__(self, other: "Word") -> "Word":
        if self.op == "one":
            return other
        if other.op == "one":
            return self
        return Word("mul", self, other)

    def __invert__(self) -> "Word":
        if self.op == "one":
            return self
        if self.op == "inv":
            return self.args[0]
        return Word("inv", self)

    def __pow__(self, k) -> "Word":
        if isinstance(k, Word):
            if k.op == "one" or self.op == "one":
                return self
            return Word("conj", self, k)
        k = int(k)
        if k == 0 or self.op == "one":
            return ONE
        if k == 1:
            return self
        if k == -1:
            return ~self
        return Word("pow", self, k)

    def __repr__(self):
        return render(self)

    @property
    def name(self) -> str:
        return self.args[0]


ONE = Word("one")


def gen(name: str) -> Word:
    return Word("gen", name)


def gens(names: str) -> list[Word]:
    return [gen(n) for n in names.split()]


def aux(name: str, definition: Word) -> Word:
    """A named auxiliary cell; counted once in the metrics, not as a generator."""
    return Word("aux", name, definition)


def comm(a: Word, b: Word) -> Word:
    if a.op == "one" or b.op == "one":
        return ONE
    return Word("comm", a, b)


def prod(ws: Iterable[Word]) -> Word:
    out = ONE
    for w in ws:
        out = out * w
    return out


def rel(lhs: Word, rhs: Word = ONE) -> Word:
    """The relator of the relation lhs = rhs."""
    return lhs * ~rhs


# -- traversal helpers --

def generators_used(w: Word, acc: set | None = None, seen: set | None = None) -> set:
    acc = set() if acc is None else acc
    seen = set() if seen is None else seen
    stack = [w]
    while stack:
        x = stack.pop()
        if id(x) in seen:
            continue
        seen.add(id(x))
        if x.op == "gen":
            acc.add(x.args[0])
        elif x.op == "aux":
            stack.append(x.args[1])
        else:
            stack.extend(a for a in x.args if isinstance(a, Word))
    return acc


def aux_cells(ws: Iterable[Word]) -> list[tuple[str, Word]]:
    """Auxiliary definitions reachable from ws, dependencies first."""
    order: list[tuple[str, Word]] = []
    seen: set = set()
    names: dict[str, Word] = {}

    def visit(x):
        if id(x) in seen:
            return
        seen.add(id(x))
        for a in x.args:
            if isinstance(a, Word):
                visit(a)
        if x.op == "aux":
            n = x.args[0]
            if n in names and names[n] is not x:
                raise ValueError(f"auxiliary name {n} defined twice")
            names[n] = x
            order.append((n, x.args[1]))

    for w in ws:
        visit(w)
    return order


def substitute(w: Word, mapping: dict, memo: dict | None = None) -> Word:
    """Replace generators by words; auxiliary cells keep their names."""
    memo = {} if memo is None else memo
    r = memo.get(id(w))
    if r is not None:
        return r
    op = w.op
    if op == "gen":
        r = mapping.get(w.args[0], w)
    elif op == "one":
        r = w
    elif op == "aux":
        r = aux(w.args[0], substitute(w.args[1], mapping, memo))
    elif op == "mul":
        r = substitute(w.args[0], mapping, memo) * substitute(w.args[1], mapping, memo)
    elif op == "inv":
        r = ~substitute(w.args[0], mapping, memo)
    elif op == "pow":
        r = substitute(w.args[0], mapping, memo) ** w.args[1]
    elif op == "conj":
        r = substitute(w.args[0], mapping, memo) ** substitute(w.args[1], mapping, memo)
    elif op == "comm":
        r = comm(substitute(w.args[0], mapping, memo), substitute(w.args[1], mapping, memo))
    else:
        raise ValueError(op)
    memo[id(w)] = r
    return r


# -- metrics --

def exponent_bits(k: int) -> int:
    return math.ceil(math.log2(abs(k) + 1)) + 1


def word_len(w: Word, memo: dict | None = None) -> int:
    """Length after expanding powers; auxiliary cells count as one symbol."""
    memo = {} if memo is None else memo
    r = memo.get(id(w))
    if r is not None:
        return r
    op = w.op
    if op == "one":
        r = 0
    elif op in ("gen", "aux"):
        r = 1
    elif op == "mul":
        r = word_len(w.args[0], memo) + word_len(w.args[1], memo)
    elif op == "inv":
        r = word_len(w.args[0], memo)
    elif op == "pow":
        r = abs(w.args[1]) * word_len(w.args[0], memo)
    elif op == "conj":
        r = word_len(w.args[0], memo) + 2 * word_len(w.args[1], memo)
    elif op == "comm":
        r = 2 * (word_len(w.args[0], memo) + word_len(w.args[1], memo))
    else:
        raise ValueError(op)
    memo[id(w)] = r
    return r


def bit_len(w: Word, memo: dict | None = None) -> int:
    """Symbols plus binary exponents; auxiliary cells count as one symbol."""
    memo = {} if memo is None else memo
    r = memo.get(id(w))
    if r is not None:
        return r
    op = w.op
    if op == "one":
        r = 0
    elif op in ("gen", "aux"):
        r = 1
    elif op == "mul":
        r = bit_len(w.args[0], memo) + bit_len(w.args[1], memo)
    elif op == "inv":
        r = bit_len(w.args[0], memo)
    elif op == "pow":
        r = bit_len(w.args[0], memo) + exponent_bits(w.args[1])
    elif op == "conj":
        r = bit_len(w.args[0], memo) + 2 * bit_len(w.args[1], memo)
    elif op == "comm":
        r = 2 * (bit_len(w.args[0], memo) + bit_len(w.args[1], memo))
    else:
        raise ValueError(op)
    memo[id(w)] = r
    return r


# documented per-symbol constant: bit_length <= BIT_CONSTANT * word_length
BIT_CONSTANT = 3


# -- evaluation --

class Evaluator:
    """Memoising evaluator of words in any group given by callables."""

    def __init__(self, assignment: dict, one, mul: Callable, inv: Callable, power: Callable | None = None):
        self.assignment = assignment
        self.one = one
        self.mul = mul
        self.inv = inv
        self.power = power
        self.memo: dict = {}
        self.inv_memo: dict = {}

    def _power(self, x, k):
        if self.power is not None:
            return self.power(x, k)
        if k < 0:
            x, k = self.inv(x), -k
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, x)
            k >>= 1
            if k:
                x = self.mul(x, x)
        return result

    def inverse_of(self, w: Word):
        r = self.inv_memo.get(id(w))
        if r is None:
            r = self.inv(self(w))
            self.inv_memo[id(w)] = r
        return r

    def __call__(self, w: Word):
        r = self.memo.get(id(w))
        if r is not None:
            return r
        op = w.op
        if op == "one":
            r = self.one
        elif op == "gen":
            try:
                r = self.assignment[w.args[0]]
            except KeyError:
                raise KeyError(f"generator {w.args[0]} not assigned") from None
        elif op == "aux":
            r = self(w.args[1])
        elif op == "mul":
            r = self.mul(self(w.args[0]), self(w.args[1]))
        elif op == "inv":
            r = self.inverse_of(w.args[0])
        elif op == "pow":
            r = self._power(self(w.args[0]), w.args[1])
        elif op == "conj":
            a, b = w.args
            r = self.mul(self.mul(self.inverse_of(b), self(a)), self(b))
        elif op == "comm":
            a, b = w.args
            r = self.mul(self.mul(self.inverse_of(a), self.inverse_of(b)), self.mul(self(a), self(b)))
        else:
            raise ValueError(op)
        self.memo[id(w)] = r
        return r


def matrix_evaluator(assignment: dict) -> Evaluator:
    from .linalg import Mat
    first = next(iter(assignment.values()))
    dims = {m.d for m in assignment.values()}
    if len(dims) != 1:
        raise ValueError("dimension mismatch in assignment")
    return Evaluator(assignment, Mat.identity(first.F, first.d), lambda a, b: a * b,
                     lambda a: a.inverse(), lambda a, k: a ** k)


def evaluate(w, assignment: dict):
    """Evaluate a Word or Slp on an assignment name -> Mat."""
    if isinstance(w, Slp):
        return w.eval(assignment)
    return matrix_evaluator(assignment)(w)


# -- expansion to letters (for coset enumeration) --

class ExpansionBudget(Exception):
    pass


def expand(w: Word, index: dict[str, int], budget: int = 10**6) -> list[int]:
    """Letters 2i (generator i) and 2i+1 (its inverse), freely reduced."""
    memo: dict = {}

    def ex(x) -> list[int]:
        r = memo.get(id(x))
        if r is not None:
            return r
        op = x.op
        if op == "one":
            r = []
        elif op == "gen":
            r = [2 * index[x.args[0]]]
        elif op == "aux":
            r = ex(x.args[1])
        elif op == "mul":
            r = _reduce(ex(x.args[0]) + ex(x.args[1]))
        elif op == "inv":
            r = [l ^ 1 for l in reversed(ex(x.args[0]))]
        elif op == "pow":
            base = ex(x.args[0])
            k = x.args[1]
            if k < 0:
                base, k = [l ^ 1 for l in reversed(base)], -k
            if len(base) * k > budget:
                raise ExpansionBudget(f"expansion exceeds {budget} symbols")
            r = _reduce(base * k)
        elif op == "conj":
            a, b = ex(x.args[0]), ex(x.args[1])
            r = _reduce([l ^ 1 for l in reversed(b)] + a + b)
        elif op == "comm":
            a, b = ex(x.args[0]), ex(x.args[1])
            ia = [l ^ 1 for l in reversed(a)]
            ib = [l ^ 1 for l in reversed(b)]
            r = _reduce(ia + ib + a + b)
        else:
            raise ValueError(op)
        if len(r) > budget:
            raise ExpansionBudget(f"expansion exceeds {budget} symbols")
        memo[id(x)] = r
        return r

    return ex(w)


def _reduce(letters: list[int]) -> list[int]:
    out: list[int] = []
    for l in letters:
        if out and out[-1] == l ^ 1:
            out.pop()
        else:
            out.append(l)
    return out


def cyclic_reduce(letters: list[int]) -> list[int]:
    w = _reduce(letters)
    i, j = 0, len(w) - 1
    while i < j and w[i] == w[j] ^ 1:
        i += 1
        j -= 1
    return w[i:j + 1]


# -- rendering --

_PREC = {"one": 9, "gen": 9, "aux": 9, "pow": 8, "conj": 8, "inv": 8, "comm": 9, "mul": 1}


def render(w: Word, ascii_only: bool = False) -> str:
    op = w.op
    if op == "one":
        return "1"
    if op in ("gen", "aux"):
        return w.args[0]

    def par(x):
        s = render(x, ascii_only)
        return s if _PREC[x.op] >= 8 and x.op not in ("pow", "conj", "inv") else f"({s})"

    def exp_str(x):
        s = render(x, ascii_only)
        return s if x.op in ("gen", "aux") else f"({s})"

    if op == "mul":
        return f"{render(w.args[0], ascii_only)}*{render(w.args[1], ascii_only)}"
    if op == "inv":
        return f"{par(w.args[0])}^-1"
    if op == "pow":
        return f"{par(w.args[0])}^{w.args[1]}"
    if op == "conj":
        return f"{par(w.args[0])}^{exp_str(w.args[1])}"
    if op == "comm":
        return f"[{render(w.args[0], ascii_only)}, {render(w.args[1], ascii_only)}]"
    raise ValueError(op)


class _Parser:
    """Reads the notation `render` writes: a*b, x^-1, x^5, x^y, x^(w), [a, b], 1.

    Generator names are matched longest first, so names like U' and V' work.
    """

    def __init__(self, text: str, names: Iterable[str]):
        self.s = text
        self.i = 0
        self.names = sorted(names, key=len, reverse=True)

    def error(self, msg):
        raise ValueError(f"{msg} at position {self.i} in {self.s!r}")

    def peek(self) -> str:
        while self.i < len(self.s) and self.s[self.i].isspace():
            self.i += 1
        return self.s[self.i] if self.i < len(self.s) else ""

    def take(self, ch):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.i += 1

    def word(self) -> Word:
        out = self.factor()
        while self.peek() == "*":
            self.i += 1
            out = out * self.factor()
        return out

    def factor(self) -> Word:
        out = self.atom()
        while self.peek() == "^":
            self.i += 1
            c = self.peek()
            if c == "-" or c.isdigit():
                out = out ** self.integer()
            else:
                out = out ** self.atom()
        return out

    def integer(self) -> int:
        j = self.i
        if self.s[j] == "-":
            j += 1
        k = j
        while k < len(self.s) and self.s[k].isdigit():
            k += 1
        if k == j:
            self.error("expected an integer")
        v = int(self.s[self.i:k])
        self.i = k
        return v

    def atom(self) -> Word:
        c = self.peek()
        if c == "(":
            self.i += 1
            w = self.word()
            self.take(")")
            return w
        if c == "[":
            self.i += 1
            a = self.word()
            self.take(",")
            b = self.word()
            self.take("]")
            return comm(a, b)
        if c == "1":
            self.i += 1
            return ONE
        for n in self.names:
            if self.s.startswith(n, self.i):
                self.i += len(n)
                return gen(n)
        self.error("unknown generator")


def parse_word(text: str, names: Iterable[str]) -> Word:
    p = _Parser(text, names)
    w = p.word()
    if p.peek():
        p.error("trailing input")
    return w


def parse_word_list(text: str, names: Iterable[str]) -> list[Word]:
    """Words separated by ';' or by commas outside brackets."""
    parts, depth, cur = [], 0, []
    for ch in text:
        if ch in "([":
            depth += 1
        elif ch in ")]":
            depth -= 1
        if depth == 0 and ch in ",;":
            parts.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    parts.append("".join(cur))
    return [parse_word(s, names) for s in parts if s.strip()]


# -- flat straight-line programs --

@dataclass(frozen=True)
class Slp:
    """Instruction list over generator indices; the last cell is the result."""

    lines: tuple
    ngens: int

    @classmethod
    def from_word(cls, w: Word, names: list[str]) -> "Slp":
        index = {n: i for i, n in enumerate(names)}
        lines: list = []
        memo: dict = {}

        def emit(x) -> int:
            r = memo.get(id(x))
            if r is not None:
                return r
            op = x.op
            if op == "gen":
                lines.append(("gen", index[x.args[0]]))
            elif op == "one":
                if not names:
                    raise ValueError("identity word needs at least one generator")
                g = emit(Word("gen", names[0]))
                lines.append(("pow", g, 0))
            elif op == "aux":
                r = emit(x.args[1])
                memo[id(x)] = r
                return r
            elif op == "mul":
                a, b = emit(x.args[0]), emit(x.args[1])
                lines.append(("mul", a, b))
            elif op == "inv":
                a = emit(x.args[0])
                lines.append(("inv", a))
            elif op == "pow":
                a = emit(x.args[0])
                lines.append(("pow", a, x.args[1]))
            elif op == "conj":
                a, b = emit(x.args[0]), emit(x.args[1])
                lines.append(("inv", b))
                ib = len(lines) - 1
                lines.append(("mul", ib, a))
                lines.append(("mul", len(lines) - 1, b))
            elif op == "comm":
                a, b = emit(x.args[0]), emit(x.args[1])
                lines.append(("inv", a))
                ia = len(lines) - 1
                lines.append(("inv", b))
                ib = len(lines) - 1
                lines.append(("mul", ia, ib))
                lines.append(("mul", a, b))
                lines.append(("mul", len(lines) - 2, len(lines) - 1))
            else:
                raise ValueError(op)
            r = len(lines) - 1
            memo[id(x)] = r
            return r

        emit(w)
        return cls(tuple(lines), len(names))

    def to_word(self, names: list[str]) -> Word:
        cells: list[Word] = []
        for ins in self.lines:
            t = ins[0]
            if t == "gen":
                cells.append(gen(names[ins[1]]))
            elif t == "mul":
                cells.append(cells[ins[1]] * cells[ins[2]])
            elif t == "inv":
                cells.append(~cells[ins[1]])
            elif t == "pow":
                cells.append(cells[ins[1]] ** ins[2])
            else:
                raise ValueError(t)
        return cells[-1]

    def eval_in(self, gens_values: list, one, mul, inv, power):
        cells = []
        for ins in self.lines:
            t = ins[0]
            if t == "gen":
                cells.append(gens_values[ins[1]])
            elif t == "mul":
                cells.append(mul(cells[ins[1]], cells[ins[2]]))
            elif t == "inv":
                cells.append(inv(cells[ins[1]]))
            elif t == "pow":
                k = ins[2]
                cells.append(one if k == 0 else power(cells[ins[1]], k))
            else:
                raise ValueError(t)
        return cells[-1]

    def eval(self, assignment, names: list[str] | None = None):
        """assignment: list of matrices by index, or dict name -> matrix with names."""
        from .linalg import Mat
        if isinstance(assignment, dict):
            if names is None:
                raise ValueError("names needed for a dict assignment")
            vals = []
            for n in names:
                if n not in assignment:
                    raise KeyError(f"generator {n} not assigned")
                vals.append(assignment[n])
        else:
            vals = list(assignment)
        if len({m.d for m in vals}) > 1:
            raise ValueError("dimension mismatch in assignment")
        one = Mat.identity(vals[0].F, vals[0].d)
        return self.eval_in(vals, one, lambda a, b: a * b, lambda a: a.inverse(), lambda a, k: a ** k)

    def to_json(self) -> list:
        return [list(ins) for ins in self.lines]

    @classmethod
    def from_json(cls, data, ngens: int) -> "Slp":
        lines = []
        for i, ins in enumerate(data):
            t = ins[0]
            if t == "gen":
                if not 0 <= ins[1] < ngens:
                    raise ValueError("generator index out of range")
            else:
                for a in ins[1:3] if t == "mul" else ins[1:2]:
                    if not 0 <= a < i:
                        raise ValueError("cell references must point backwards")
            lines.append(tuple(ins))
        return cls(tuple(lines), ngens)


# -- presentations --

TAGS = ("torus-normaliser", "base-case", "centraliser", "steinberg", "exceptional-multiplier", "center-kill")


@dataclass
class Relator:
    word: Word
    tag: str
    label: str = ""
    redundant: bool = False

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown tag {self.tag}")


@dataclass
class Presentation:
    group: object
    generators: list[str]
    relators: list[Relator] = field(default_factory=list)
    meta: dict = field(default_factory=dict)

    def add(self, w: Word, tag: str, label: str = "", redundant: bool = False):
        if w.op == "one":
            return
        self.relators.append(Relator(w, tag, label, redundant))

    def extend(self, ws: Iterable[Word], tag: str, label: str = ""):
        for w in ws:
            self.add(w, tag, label)

    @property
    def words(self) -> list[Word]:
        return [r.word for r in self.relators]

    def auxiliary(self) -> list[tuple[str, Word]]:
        return aux_cells(self.words)

    def check_generators(self):
        used = set()
        for w in self.words:
            generators_used(w, used)
        extra = used - set(self.generators)
        if extra:
            raise ValueError(f"relators use undeclared generators {sorted(extra)}")

    def word_length(self) -> int:
        memo: dict = {}
        total = len(self.generators) + sum(word_len(w, memo) for w in self.words)
        total += sum(word_len(d, memo) for _, d in self.auxiliary())
        return total

    def bit_length(self) -> int:
        memo: dict = {}
        total = len(self.generators) + sum(bit_len(w, memo) for w in self.words)
        total += sum(bit_len(d, memo) for _, d in self.auxiliary())
        return total

    def count(self, exclude_tag: str | None = None) -> int:
        return sum(1 for r in self.relators if r.tag != exclude_tag)

    def slps(self) -> list[Slp]:
        return [Slp.from_word(w, self.generators) for w in self.words]

    def metadata(self) -> dict:
        return {
            "relators": len(self.relators),
            "non_torus_relators": self.count("torus-normaliser"),
            "bit_length": self.bit_length(),
            "word_length": self.word_length(),
            **self.meta,
        }

    def to_json(self) -> dict:
        group = self.group.to_json() if hasattr(self.group, "to_json") else self.group
        return {
            "group": group,
            "generators": list(self.generators),
            "auxiliary": [{"name": n, "word": render(d), "slp": Slp.from_word(d, self.generators).to_json()}
                          for n, d in self.auxiliary()],
            "relators": [{"slp": s.to_json(), "text": render(r.word), "tag": r.tag, "label": r.label,
                          "redundant": r.redundant} for r, s in zip(self.relators, self.slps())],
            "metadata": self.metadata(),
        }

    def to_text(self, tags: bool = False) -> str:
        lines = [f"generators: {', '.join(self.generators)}"]
        for n, d in self.auxiliary():
            lines.append(f"  {n} := {render(d)}")
        for r in self.relators:
            s = render(r.word)
            if tags:
                extra = f"  [{r.tag}{' ' + r.label if r.label else ''}{' redundant' if r.redundant else ''}]"
                s += extra
            lines.append(s)
        md = self.metadata()
        lines.append(f"relators: {md['relators']}  bit_length: {md['bit_length']}  word_length: {md['word_length']}")
        return "\n".join(lines)
