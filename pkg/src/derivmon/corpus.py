"""Random expression generation, shrinking, and the golden example set.

The generator is seeded and fully deterministic, so large randomized
sweeps can be reproduced from a single integer.  The worked examples
collect small expressions with independently known derivatives,
metrics, and verdicts; the test suites replay them as regressions.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Mapping

from .syntax import (
    Cat,
    Empty,
    Eps,
    Or,
    Regex,
    Shuffle,
    Star,
    Sym,
    Word,
    format_regex,
    size,
)

DEFAULT_WEIGHTS: Mapping[str, float] = {
    "empty": 1,
    "eps": 2,
    "sym": 8,
    "cat": 5,
    "or": 5,
    "star": 2,  # damped so trees do not degenerate into star towers
    "shuffle": 3,
}

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


@dataclass(frozen=True)
class GenConfig:
    """Knobs for the random generator; identical configs yield identical streams."""

    max_size: int = 15
    alphabet_size: int = 3
    shuffle_enabled: bool = True
    seed: int = 0
    weights: Mapping[str, float] = field(default_factory=lambda: DEFAULT_WEIGHTS)

    def symbols(self) -> list[str]:
        if self.alphabet_size <= len(_LETTERS):
            return list(_LETTERS[: self.alphabet_size])
        return [f"s{i}" for i in range(self.alphabet_size)]


def gen_regex(cfg: GenConfig, rng: random.Random | None = None) -> Regex:
    """One random expression with size(e) <= cfg.max_size."""
    if cfg.max_size < 1:
        raise ValueError("max_size must be at least 1")
    if rng is None:
        rng = random.Random(cfg.seed)
    return _gen(cfg, rng, cfg.max_size)


def gen_corpus(cfg: GenConfig, count: int) -> list[Regex]:
    """A reproducible stream of ``count`` random expressions."""
    rng = random.Random(cfg.seed)
    return [_gen(cfg, rng, cfg.max_size) for _ in range(count)]


def _gen(cfg: GenConfig, rng: random.Random, budget: int) -> Regex:
    kinds = ["empty", "eps", "sym"]
    if budget >= 2:
        kinds.append("star")
    if budget >= 3:
        kinds.extend(["cat", "or"])
        if cfg.shuffle_enabled:
            kinds.append("shuffle")
    weights = [cfg.weights.get(kind, 0.0) for kind in kinds]
    kind = rng.choices(kinds, weights=weights)[0]
    match kind:
        case "empty":
            return Empty()
        case "eps":
            return Eps()
        case "sym":
            return Sym(rng.choice(cfg.symbols()))
        case "star":
            return Star(_gen(cfg, rng, budget - 1))
    left_budget = rng.randint(1, budget - 2)
    left = _gen(cfg, rng, left_budget)
    right = _gen(cfg, rng, budget - 1 - left_budget)
    match kind:
        case "cat":
            return Cat(left, right)
        case "or":
            return Or(left, right)
    return Shuffle(left, right)


def file_descriptor_spec(n: int) -> Regex:
    """n interleaved open/access/close sessions: o1 a1 c1 || ... || on an cn."""
    if n < 1:
        raise ValueError("need at least one session")

    def session(i: int) -> Regex:
        return Cat(Cat(Sym(f"o{i}"), Sym(f"a{i}")), Sym(f"c{i}"))

    spec = session(1)
    for i in range(2, n + 1):
        spec = Shuffle(spec, session(i))
    return spec


@dataclass(frozen=True)
class CorpusEntry:
    """A golden example: an expression, an optional trace, and expectations.

    ``expect`` keys understood by the replay helpers in the test suite:

    - ``derive``: mapping symbol -> rendered Brzozowski derivative
    - ``derive_has_eps``: mapping symbol -> "EPS" | "ZERO"
    - ``frontier``: mapping symbol -> exact list of rendered members
    - ``walk_heights`` / ``walk_sizes`` / ``walk_size_slack``: metric
      values along the trace, which must keep the frontier a singleton
    - ``frontier_after_contains``: rendered members the final frontier
      must include
    - ``verdict``: final monitor verdict name for the trace
    - ``frontier_history``: frontier cardinality after each event
    """

    label: str
    text: str
    trace: Word = ()
    expect: Mapping[str, object] = field(default_factory=dict)


def worked_examples() -> list[CorpusEntry]:
    """The fixed regression corpus of hand-checked examples."""
    return [
        CorpusEntry(
            label="sum of products keeps both branches",
            text="a b + a c",
            expect={
                "derive": {
                    "a": "(eps b + 0 0) + (eps c + 0 0)",
                    "b": "(0 b + 0 eps) + (0 c + 0 0)",
                },
                "frontier": {"a": ["eps b", "eps c"]},
            },
        ),
        CorpusEntry(
            label="star pair, height rises then falls",
            text="a* b*",
            trace=("a", "b"),
            expect={"walk_heights": [2, 3, 2]},
        ),
        CorpusEntry(
            label="star pair, height stays flat",
            text="a* b*",
            trace=("b", "b"),
            expect={"walk_heights": [2, 2, 2]},
        ),
        CorpusEntry(
            label="nested stars, quadratic size jump",
            text="((a*)*)*",
            trace=("a", "a"),
            expect={"walk_sizes": [4, 13, 13]},
        ),
        CorpusEntry(
            label="late size growth under concatenation",
            text="a b**",
            trace=("a", "b"),
            expect={"walk_sizes": [5, 5, 8]},
        ),
        CorpusEntry(
            label="shuffle stuck on a foreign symbol",
            text="a0 || a1",
            expect={
                "derive": {"a2": "(0 || a1) + (a0 || 0)"},
                "derive_has_eps": {"a2": "ZERO"},
                "frontier": {"a2": []},
            },
        ),
        CorpusEntry(
            label="shuffled stars, size budget must add up",
            text="a* || b*",
            trace=("a",),
            expect={"walk_sizes": [5, 7], "walk_size_slack": [4, 2]},
        ),
        CorpusEntry(
            label="shuffle makes height budgets recur",
            text="(eps || a*) (b || a*)",
            trace=("a", "b", "a"),
            expect={"frontier_after_contains": ["eps || eps a*"]},
        ),
        CorpusEntry(
            label="two file sessions, valid interleaving",
            text="o1 a1 c1 || o2 a2 c2",
            trace=("o1", "o2", "a2", "a1", "c1", "c2"),
            expect={"verdict": "ACCEPTING"},
        ),
        CorpusEntry(
            label="two file sessions, close before access",
            text="o1 a1 c1 || o2 a2 c2",
            trace=("o1", "c1"),
            expect={"verdict": "VIOLATION", "frontier_history": [1, 1, 0]},
        ),
    ]


def _children(e: Regex) -> tuple[Regex, ...]:
    match e:
        case Cat(left, right) | Or(left, right) | Shuffle(left, right):
            return (left, right)
        case Star(body):
            return (body,)
    return ()


def _rebuild(e: Regex, kids: tuple[Regex, ...]) -> Regex:
    match e:
        case Cat():
            return Cat(*kids)
        case Or():
            return Or(*kids)
        case Shuffle():
            return Shuffle(*kids)
        case Star():
            return Star(*kids)
    return e


def shrink_regex(e: Regex, predicate: Callable[[Regex], bool]) -> Regex:
    """Greedily minimize ``e`` while ``predicate`` keeps holding.

    Candidates are direct subtrees and single-child hoists; the
    predicate is assumed true for ``e`` itself.
    """
    current = e
    while True:
        candidates: list[Regex] = list(_children(current))
        kids = _children(current)
        for i, child in enumerate(kids):
            for grandchild in _children(child):
                replaced = list(kids)
                replaced[i] = grandchild
                candidates.append(_rebuild(current, tuple(replaced)))
        candidates = [c for c in set(candidates) if size(c) < size(current)]
        candidates.sort(key=lambda c: (size(c), format_regex(c)))
        for candidate in candidates:
            if predicate(candidate):
                current = candidate
                break
        else:
            return current
