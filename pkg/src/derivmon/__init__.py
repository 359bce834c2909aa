"""Regular-expression derivatives with shuffle, for online trace monitoring.

The package is organized around one expression type (:mod:`.syntax`)
and two rewriting engines over it: total Brzozowski derivatives
(:mod:`.derivative`) and set-valued Antimirov partial derivatives
(:mod:`.partial`).  On top of the partial-derivative relation sit the
space-budget functions (:mod:`.bounds`), the NFA construction
(:mod:`.automaton`), and the streaming monitor (:mod:`.monitor`).
:mod:`.oracle` is an independent brute-force semantics used to validate
everything else, and :mod:`.corpus` provides seeded random expressions
plus the golden example set.

All values are immutable and all functions are pure, so everything here
is safe to share across threads; a monitor session is advanced by
building a new session rather than mutating the old one.
"""

from .syntax import (
    Cat,
    Empty,
    Eps,
    EpsFlag,
    Or,
    ParseError,
    Regex,
    Shuffle,
    Star,
    Sym,
    alphabet,
    format_regex,
    has_eps,
    height,
    parse,
    parse_word,
    size,
)
from .errors import CapacityError

__all__ = [
    "Cat",
    "CapacityError",
    "Empty",
    "Eps",
    "EpsFlag",
    "Or",
    "ParseError",
    "Regex",
    "Shuffle",
    "Star",
    "Sym",
    "alphabet",
    "format_regex",
    "has_eps",
    "height",
    "parse",
    "parse_word",
    "size",
]
