"""Antimirov partial derivatives.

Where the Brzozowski derivative pads with ``0`` to stay total, the
partial-derivative step is a nondeterministic relation: it returns the
finite set of expressions reachable by consuming one symbol, and that
set may be empty.  Emptiness is the useful signal for online
monitoring: once no step is possible, no extension of the input can be
accepted.

Members are deduplicated by structural equality only; no smart
constructors, no reassociation.  The set of all expressions reachable
over all words (the closure) is finite, which is what makes the
construction usable as an NFA state space.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import CapacityError
from .syntax import (
    Cat,
    Empty,
    Eps,
    Or,
    Regex,
    Shuffle,
    Star,
    Sym,
    Symbol,
    alphabet,
    has_eps,
)

DEFAULT_CLOSURE_CAP = 1_000_000


def partial_derivatives(e: Regex, symbol: Symbol) -> frozenset[Regex]:
    """The set of one-step partial derivatives of ``e`` by ``symbol``.

    ``0``, ``eps`` and mismatched symbols have no derivatives at all;
    a nullable left factor lets concatenation step into its right side.
    """
    match e:
        case Empty() | Eps():
            return frozenset()
        case Sym(name):
            return frozenset({Eps()}) if name == symbol else frozenset()
        case Cat(left, right):
            out = {Cat(d, right) for d in partial_derivatives(left, symbol)}
            if has_eps(left):
                out |= partial_derivatives(right, symbol)
            return frozenset(out)
        case Or(left, right):
            return partial_derivatives(left, symbol) | partial_derivatives(right, symbol)
        case Star(body):
            return frozenset({Cat(d, e) for d in partial_derivatives(body, symbol)})
        case Shuffle(left, right):
            lefts = {Shuffle(d, right) for d in partial_derivatives(left, symbol)}
            rights = {Shuffle(left, d) for d in partial_derivatives(right, symbol)}
            return frozenset(lefts | rights)
    raise TypeError(f"not a Regex: {e!r}")


def step_frontier(frontier: Iterable[Regex], symbol: Symbol) -> frozenset[Regex]:
    """Set-lifted single step: the union of members' partial derivatives."""
    out: set[Regex] = set()
    for e in frontier:
        out |= partial_derivatives(e, symbol)
    return frozenset(out)


def partial_derivatives_word(e: Regex, word: Sequence[Symbol]) -> frozenset[Regex]:
    """All partial derivatives of ``e`` by ``word``; the empty word gives {e}."""
    frontier: frozenset[Regex] = frozenset({e})
    for symbol in word:
        frontier = step_frontier(frontier, symbol)
    return frontier


def accepts(e: Regex, word: Sequence[Symbol]) -> bool:
    """Whether some partial derivative of ``e`` by ``word`` is nullable."""
    return any(has_eps(d) for d in partial_derivatives_word(e, word))


def closure(e: Regex, *, cap: int = DEFAULT_CLOSURE_CAP) -> frozenset[Regex]:
    """All expressions reachable from ``e`` by partial derivatives.

    The search uses the symbols occurring in ``e``; derivatives never
    introduce new symbols.  The result is finite, so exceeding ``cap``
    signals a bug rather than expected behavior.
    """
    symbols = sorted(alphabet(e))
    seen: set[Regex] = {e}
    todo: list[Regex] = [e]
    while todo:
        current = todo.pop()
        for symbol in symbols:
            for successor in partial_derivatives(current, symbol):
                if successor not in seen:
                    seen.add(successor)
                    todo.append(successor)
                    if len(seen) > cap:
                        raise CapacityError(f"closure exceeded {cap} states")
    return frozenset(seen)
