"""Presentation builders, one module per family, behind a uniform dispatcher."""

from __future__ import annotations

from ..field import FieldTower
from ..groups import GroupSpec
from ..slp import Presentation, Word


def family_module(g: GroupSpec):
    f = g.family
    if f == "SL":
        from . import sl as mod
    elif f == "Sp":
        from . import sp as mod
    elif f == "SU":
        if g.d == 3:
            from . import su3 as mod
        elif g.d % 2 == 0:
            from . import su_even as mod
        else:
            from . import su_odd as mod
    elif f == "OmegaPlus":
        from . import omega_plus as mod
    elif f == "OmegaCircle":
        from . import omega as mod
    elif f == "OmegaMinus":
        from . import omega_minus as mod
    else:
        raise ValueError(f)
    return mod


def present(g: GroupSpec, T: FieldTower | None = None, seed: int = 0) -> Presentation:
    """seed only reaches the random search for the SU(3,q) Borel constants."""
    T = T or g.tower()
    mod = family_module(g)
    if g.family == "SU" and g.d == 3:
        P = mod.present(g, T, seed=seed)
    else:
        P = mod.present(g, T)
    P.check_generators()
    return P


def torus_presentation(g: GroupSpec, T: FieldTower | None = None):
    """The torus normaliser N: its own presentation, images in G, and expected order."""
    T = T or g.tower()
    return family_module(g).torus(g, T)


def centraliser_words(g: GroupSpec, T: FieldTower | None = None):
    """Root elements with words (over the torus generators) generating their centralisers in N."""
    T = T or g.tower()
    return family_module(g).centralisers(g, T)


def central_word(g: GroupSpec, T: FieldTower | None = None) -> tuple[Word, int]:
    T = T or g.tower()
    return family_module(g).central_word(g, T)
