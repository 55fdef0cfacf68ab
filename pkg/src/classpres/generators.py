"""Presentation and standard generators as explicit matrices, plus the dictionaries.

Conventions: row vectors, so row i of a matrix is the image of the i-th basis
vector; x^g = g^-1 x g; [a, b] = a^-1 b^-1 a b.  Basis orders:

    SL         (e_1, ..., e_d)
    Sp, SU(2n) (e_1, f_1, ..., e_n, f_n)
    SU(2n+1)   (e_1, f_1, ..., e_n, f_n, w)
    SU(3)      (e_1, w, f_1)
    Omega+     (e_1, f_1, ..., e_n, f_n)
    Omega      (e_1, f_1, ..., e_n, f_n, w)
    Omega-     (e_1, f_1, ..., e_{n-1}, f_{n-1}, w_1, w_2)

Each family module under presentations/ supplies the matrices, the form, and
both directions of the dictionary; this module is the uniform front end.
"""

from __future__ import annotations

from dataclasses import dataclass

from .field import Field, FieldTower
from .groups import GroupSpec
from .linalg import FormSpec
from .presentations import family_module
from .slp import Slp, Word, matrix_evaluator

PRES_TO_STD = "pres->std"
STD_TO_PRES = "std->pres"


@dataclass
class GeneratorSet:
    role: str
    entries: dict
    form: FormSpec | None
    tower: FieldTower
    group: GroupSpec | None = None

    @property
    def names(self) -> list[str]:
        return list(self.entries)

    def __getitem__(self, name):
        return self.entries[name]

    def to_json(self) -> dict:
        return {
            "group": self.group.to_json() if self.group else None,
            "role": self.role,
            "names": self.names,
            "matrices": {k: m.to_json() for k, m in self.entries.items()},
            "form": self.form.to_json() if self.form else None,
            "tower": self.tower.to_json(),
        }


def matrix_field(g: GroupSpec, T: FieldTower) -> Field:
    return T.ext if g.family == "SU" else T.base


def all_matrices(g: GroupSpec, T: FieldTower | None = None) -> dict:
    """Every named matrix of the family (presentation generators and helpers)."""
    T = T or g.tower()
    return family_module(g).matrices(g, T)


def presentation_generators(g: GroupSpec, T: FieldTower | None = None) -> GeneratorSet:
    T = T or g.tower()
    mod = family_module(g)
    M = mod.matrices(g, T)
    names = mod.generator_names(g, T)
    return GeneratorSet("presentation", {k: M[k] for k in names}, mod.form(g, T), T, g)


def word_dictionary(g: GroupSpec, direction: str, T: FieldTower | None = None) -> dict[str, Word]:
    T = T or g.tower()
    mod = family_module(g)
    if direction == PRES_TO_STD:
        return mod.pres_to_std(g, T)
    if direction == STD_TO_PRES:
        return mod.std_to_pres(g, T)
    raise ValueError(f"unknown direction {direction}")


def dictionary(g: GroupSpec, direction: str, T: FieldTower | None = None) -> dict[str, Slp]:
    """name -> Slp over the source generating set (in its declared order)."""
    T = T or g.tower()
    mod = family_module(g)
    src = mod.generator_names(g, T) if direction == PRES_TO_STD else mod.std_names(g)
    return {k: Slp.from_word(w, src) for k, w in word_dictionary(g, direction, T).items()}


def standard_generators(g: GroupSpec, T: FieldTower | None = None) -> GeneratorSet:
    """Standard generators obtained by evaluating the dictionary on the presentation matrices."""
    T = T or g.tower()
    mod = family_module(g)
    ev = matrix_evaluator(mod.matrices(g, T))
    words = mod.pres_to_std(g, T)
    entries = {k: ev(words[k]) for k in mod.std_names(g)}
    if hasattr(mod, "std_basis"):
        # standard generators assume a rescaled basis (Omega(2n+1,q): w.w = -1/2)
        C = mod.std_basis(g, T)
        Ci = C.inverse()
        entries = {k: C * m * Ci for k, m in entries.items()}
    form = mod.std_form(g, T) if hasattr(mod, "std_form") else mod.form(g, T)
    return GeneratorSet("standard", entries, form, T, g)


def central_element(g: GroupSpec, T: FieldTower | None = None) -> tuple[Word, int]:
    T = T or g.tower()
    return family_module(g).central_word(g, T)
