"""Brzozowski derivatives.

``derive(e, a)`` rewrites ``e`` into the unique expression whose
language is { w : a w in L(e) }.  The step is total and deterministic:
mismatching symbols produce ``0`` rather than getting stuck, and the
concatenation rule embeds the nullability flag of the left factor as a
literal ``eps`` or ``0`` constant.  No simplification is performed, so
iterated derivatives can grow without bound; the partial-derivative
engine is the space-friendly alternative.
"""

from __future__ import annotations

from typing import Sequence

from .syntax import (
    Cat,
    Empty,
    Eps,
    EpsFlag,
    Or,
    Regex,
    Shuffle,
    Star,
    Sym,
    Symbol,
    has_eps,
)


def derive(e: Regex, symbol: Symbol) -> Regex:
    """One-step derivative of ``e`` by ``symbol``."""
    match e:
        case Empty() | Eps():
            return Empty()
        case Sym(name):
            return Eps() if name == symbol else Empty()
        case Cat(left, right):
            return Or(
                Cat(derive(left, symbol), right),
                Cat(has_eps(left).as_regex(), derive(right, symbol)),
            )
        case Or(left, right):
            return Or(derive(left, symbol), derive(right, symbol))
        case Star(body):
            return Cat(derive(body, symbol), e)
        case Shuffle(left, right):
            return Or(
                Shuffle(derive(left, symbol), right),
                Shuffle(left, derive(right, symbol)),
            )
    raise TypeError(f"not a Regex: {e!r}")


def derive_word(e: Regex, word: Sequence[Symbol]) -> Regex:
    """Left fold of :func:`derive` over ``word``; the empty word is identity."""
    for symbol in word:
        e = derive(e, symbol)
    return e


def accepts(e: Regex, word: Sequence[Symbol]) -> bool:
    """Whether ``word`` is in the language of ``e``, by iterated derivation."""
    return has_eps(derive_word(e, word)) is EpsFlag.EPS
