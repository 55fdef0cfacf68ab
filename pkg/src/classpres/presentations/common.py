"""Shared containers for the torus-normaliser and centraliser data of a family."""

from __future__ import annotations

from dataclasses import dataclass

from ..slp import Presentation, Word


@dataclass
class Torus:
    """Presentation of the torus normaliser N on its own generators.

    images maps each generator of N to a word in the group's presentation generators.
    """
    presentation: Presentation
    images: dict
    order: int


@dataclass
class Centraliser:
    """A root element and words (over the torus generators) that centralise it.

    index is the expected index of <words> in N.
    """
    name: str
    root: Word
    words: list
    index: int
