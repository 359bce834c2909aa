"""Increment budgets for the space taken by partial derivatives.

For each metric (height, size) there is a budget function giving an
upper bound on how much that metric can still grow along any future
chain of partial-derivative steps.  Writing ``m`` for the metric and
``B`` for its budget, every single step ``e -> e'`` satisfies

    m(e') + B(e') <= m(e) + B(e)

so ``m + B`` never increases along a run.  Combined with the ranges
``0 <= height budget <= 1`` and ``0 <= size budget <= size^2``, any
derivative reachable by any word has height at most ``height(e) + 1``
and size at most ``size(e) + size(e)^2``.  The checkers below evaluate
the invariant on actual derivation steps and report per member.
"""

from __future__ import annotations

from dataclasses import dataclass

from .partial import partial_derivatives
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
    format_regex,
    height,
    size,
)


def height_geq(e0: Regex, e1: Regex) -> int:
    """1 if height(e0) >= height(e1), else 0."""
    return 1 if height(e0) >= height(e1) else 0


def height_increment_bound(e: Regex) -> int:
    """Budget for future height growth; always 0 or 1.

    Only a star can add a level, and only while it sits on the spine
    that determines the overall height: a concatenation forwards its
    left budget only when the left side is at least as tall, a shuffle
    keeps the budgets of its not-strictly-shorter sides, and a union
    discards both (its derivative drops the union node).
    """
    match e:
        case Empty() | Eps() | Sym() | Or():
            return 0
        case Star():
            return 1
        case Cat(left, right):
            return height_geq(left, right) * height_increment_bound(left)
        case Shuffle(left, right):
            return max(
                height_geq(left, right) * height_increment_bound(left),
                height_geq(right, left) * height_increment_bound(right),
            )
    raise TypeError(f"not a Regex: {e!r}")


def size_increment_bound(e: Regex) -> int:
    """Budget for future size growth; between 0 and size(e)^2.

    A star unfolds into ``d e*`` and so can add up to the size of its
    body plus the body's own budget plus one concatenation node.  The
    branches of a union and the consumed left factor of a concatenation
    are subtracted because stepping removes them.  A shuffle keeps both
    sides alive, so both budgets add up.  Intermediate values are
    signed; the outer max keeps the result non-negative.
    """
    match e:
        case Empty() | Eps() | Sym():
            return 0
        case Cat(left, right):
            return max(
                size_increment_bound(left),
                size_increment_bound(right) - size(left) - 1,
            )
        case Or(left, right):
            return max(
                size_increment_bound(left) - size(right) - 1,
                size_increment_bound(right) - size(left) - 1,
                0,
            )
        case Star(body):
            return size(body) + size_increment_bound(body) + 1
        case Shuffle(left, right):
            return size_increment_bound(left) + size_increment_bound(right)
    raise TypeError(f"not a Regex: {e!r}")


def height_budget(e: Regex) -> int:
    """Hard cap on the height of any derivative reachable from ``e``."""
    return height(e) + 1


def size_budget(e: Regex) -> int:
    """Hard cap on the size of any derivative reachable from ``e``."""
    return size(e) + size(e) ** 2


@dataclass(frozen=True)
class BoundReport:
    """One derivation step seen through a metric and its budget.

    ``step_label`` is the consumed symbol, or None for a baseline row
    describing the expression before any step.
    """

    expr: Regex
    metric_before: int
    metric_after: int
    bound_before: int
    bound_after: int
    step_label: Symbol | None

    @property
    def holds(self) -> bool:
        return self.metric_after + self.bound_after <= self.metric_before + self.bound_before


def check_height_invariant(e: Regex, symbol: Symbol) -> list[BoundReport]:
    """Height reports for every partial derivative of ``e`` by ``symbol``."""
    h, b = height(e), height_increment_bound(e)
    return [
        BoundReport(d, h, height(d), b, height_increment_bound(d), symbol)
        for d in sorted(partial_derivatives(e, symbol), key=format_regex)
    ]


def check_size_invariant(e: Regex, symbol: Symbol) -> list[BoundReport]:
    """Size reports for every partial derivative of ``e`` by ``symbol``."""
    s, b = size(e), size_increment_bound(e)
    return [
        BoundReport(d, s, size(d), b, size_increment_bound(d), symbol)
        for d in sorted(partial_derivatives(e, symbol), key=format_regex)
    ]


def star_chain_growth(n: int) -> tuple[int, int]:
    """Observed and predicted derivative size for an n-node star chain.

    The expression is a single symbol under n-1 stars, so its size is
    exactly n.  Its unique partial derivative under that symbol has
    size n + (n^2 + n)/2 - 1; the returned pair is (observed,
    predicted) and the two must agree.
    """
    if n < 2:
        raise ValueError("need n >= 2 for at least one star")
    e: Regex = Sym("a")
    for _ in range(n - 1):
        e = Star(e)
    (derivative,) = partial_derivatives(e, "a")
    predicted = size(e) + (n * n + n) // 2 - 1
    return size(derivative), predicted
