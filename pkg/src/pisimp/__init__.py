"""Partial simplicial maps, their normal forms, and monads as weighted (co)limits.

Submodules:

* :mod:`pisimp.ordinal_maps` -- partial monotone maps between finite ordinals;
* :mod:`pisimp.words` -- generator words, identity families, normal forms;
* :mod:`pisimp.weights` -- the left and right actions by ordinal sum;
* :mod:`pisimp.fincat` -- finite categories, functors, transformations, monads;
* :mod:`pisimp.monad_bridge` -- Eilenberg-Moore and Kleisli comparisons;
* :mod:`pisimp.bundled` -- the shipped example monads and probe categories;
* :mod:`pisimp.cli` -- the ``pisimp`` command.
"""

from .errors import PisimpError
from .ordinal_maps import Flavor, PMap, make_pmap, parse_pmap
from .words import GenWord, canonical_form, eval_word, normalize, parse_word

__version__ = "0.1.0"

__all__ = [
    "PisimpError",
    "Flavor",
    "PMap",
    "make_pmap",
    "parse_pmap",
    "GenWord",
    "canonical_form",
    "eval_word",
    "normalize",
    "parse_word",
]
