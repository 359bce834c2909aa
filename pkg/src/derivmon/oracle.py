"""Brute-force language enumeration, the semantic ground truth.

Everything here works directly from the set-theoretic meaning of the
operators, by enumerating all words up to a length bound.  It is
deliberately naive: the rest of the package is validated against these
functions on small instances, so they must not share any machinery with
the derivative engines.
"""

from __future__ import annotations

from functools import lru_cache

from .errors import CapacityError
from .syntax import Cat, Empty, Eps, Or, Regex, Shuffle, Star, Sym, Word

DEFAULT_MAX_LEN_GUARD = 12
DEFAULT_CAP = 1_000_000


@lru_cache(maxsize=None)
def shuffle_words(w1: Word, w2: Word) -> frozenset[Word]:
    """All order-preserving interleavings of two words.

    The result has at most C(|w1|+|w2|, |w1|) elements, with equality
    when the two words share no symbol.
    """
    if not w1:
        return frozenset({w2})
    if not w2:
        return frozenset({w1})
    first = {(w1[0],) + rest for rest in shuffle_words(w1[1:], w2)}
    second = {(w2[0],) + rest for rest in shuffle_words(w1, w2[1:])}
    return frozenset(first | second)


def lang_up_to(
    e: Regex,
    max_len: int,
    *,
    max_len_guard: int = DEFAULT_MAX_LEN_GUARD,
    cap: int = DEFAULT_CAP,
) -> frozenset[Word]:
    """All words of the language of ``e`` having length at most ``max_len``.

    ``max_len`` must stay at or below ``max_len_guard``; shuffles and
    stars blow up combinatorially, and a :class:`CapacityError` is
    raised instead of hanging when an intermediate set outgrows ``cap``.
    """
    if max_len < 0:
        raise ValueError("max_len must be non-negative")
    if max_len > max_len_guard:
        raise ValueError(f"max_len {max_len} exceeds guard {max_len_guard}")

    memo: dict[Regex, frozenset[Word]] = {}

    def check(words: set[Word] | frozenset[Word]) -> None:
        if len(words) > cap:
            raise CapacityError(f"language enumeration exceeded {cap} words")

    def go(e: Regex) -> frozenset[Word]:
        cached = memo.get(e)
        if cached is not None:
            return cached
        out: frozenset[Word]
        match e:
            case Empty():
                out = frozenset()
            case Eps():
                out = frozenset({()})
            case Sym(name):
                out = frozenset({(name,)}) if max_len >= 1 else frozenset()
            case Or(left, right):
                out = go(left) | go(right)
            case Cat(left, right):
                acc: set[Word] = set()
                for u in go(left):
                    room = max_len - len(u)
                    for v in go(right):
                        if len(v) <= room:
                            acc.add(u + v)
                    check(acc)
                out = frozenset(acc)
            case Shuffle(left, right):
                acc = set()
                for u in go(left):
                    room = max_len - len(u)
                    for v in go(right):
                        if len(v) <= room:
                            acc |= shuffle_words(u, v)
                    check(acc)
                out = frozenset(acc)
            case Star(body):
                base = [w for w in go(body) if w]
                reached: set[Word] = {()}
                todo: list[Word] = [()]
                while todo:
                    w = todo.pop()
                    for u in base:
                        v = w + u
                        if len(v) <= max_len and v not in reached:
                            reached.add(v)
                            todo.append(v)
                    check(reached)
                out = frozenset(reached)
            case _:
                raise TypeError(f"not a Regex: {e!r}")
        check(out)
        memo[e] = out
        return out

    return go(e)


def is_member(
    e: Regex,
    word: Word,
    *,
    max_len_guard: int = DEFAULT_MAX_LEN_GUARD,
    cap: int = DEFAULT_CAP,
) -> bool:
    """Whether ``word`` belongs to the language of ``e``, by enumeration."""
    word = tuple(word)
    return word in lang_up_to(e, len(word), max_len_guard=max_len_guard, cap=cap)
