"""Command-line front end.

Subcommands: derive, pderive, closure, bounds, nfa, oracle, monitor,
fuzz.  Monitor runs exit with 0/1/2 for ACCEPTING/PENDING/VIOLATION;
input problems (unparsable expressions, missing files) exit with 3.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds as bounds_mod
from . import corpus, derivative, oracle, partial
from .automaton import build_nfa
from .errors import CapacityError
from .monitor import TraceStats, current_verdict, new_session, step
from .syntax import (
    ParseError,
    Regex,
    Word,
    alphabet,
    format_regex,
    height,
    parse,
    parse_word,
    size,
)

_INPUT_ERROR = 3


def _word_from_args(symbols: list[str]) -> Word:
    return parse_word(" ".join(symbols))


def _cmd_derive(args: argparse.Namespace) -> int:
    e = parse(args.expr)
    print(format_regex(derivative.derive_word(e, _word_from_args(args.symbols))))
    return 0


def _cmd_pderive(args: argparse.Namespace) -> int:
    e = parse(args.expr)
    frontier = partial.partial_derivatives_word(e, _word_from_args(args.symbols))
    for member in sorted(frontier, key=format_regex):
        print(format_regex(member))
    return 0


def _cmd_closure(args: argparse.Namespace) -> int:
    reachable = partial.closure(parse(args.expr))
    for member in sorted(reachable, key=format_regex):
        print(format_regex(member))
    print(f"total {len(reachable)}")
    return 0


def _cmd_bounds(args: argparse.Namespace) -> int:
    e = parse(args.expr)
    if not args.trace:
        if args.symbols:
            raise ValueError("word arguments require --trace")
        print(f"height: {height(e)}")
        print(f"size: {size(e)}")
        print(f"deltaMax: {bounds_mod.height_increment_bound(e)}")
        print(f"etaMax: {bounds_mod.size_increment_bound(e)}")
        return 0
    word = _word_from_args(args.symbols)
    h_budget = bounds_mod.height_budget(e)
    s_budget = bounds_mod.size_budget(e)
    print("step\tsymbol\theight\tsize\tdeltaMax\tetaMax\theightBudget\tsizeBudget")

    def row(index: int, symbol: str, member: Regex) -> None:
        print(
            f"{index}\t{symbol}\t{height(member)}\t{size(member)}"
            f"\t{bounds_mod.height_increment_bound(member)}"
            f"\t{bounds_mod.size_increment_bound(member)}"
            f"\t{h_budget}\t{s_budget}"
        )

    frontier: frozenset[Regex] = frozenset({e})
    row(0, "-", e)
    for index, symbol in enumerate(word, start=1):
        frontier = partial.step_frontier(frontier, symbol)
        for member in sorted(frontier, key=format_regex):
            row(index, symbol, member)
    return 0


def _cmd_nfa(args: argparse.Namespace) -> int:
    nfa = build_nfa(parse(args.expr))
    if args.dot:
        print(nfa.to_dot())
    else:
        print(json.dumps(nfa.to_json_dict(), indent=2))
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    words = oracle.lang_up_to(parse(args.expr), args.max_len)
    for word in sorted(words, key=lambda w: (len(w), w)):
        print(" ".join(word))
    return 0


def _cmd_monitor(args: argparse.Namespace) -> int:
    spec = parse(Path(args.spec_file).read_text())
    if args.trace_file == "-":
        trace_text = sys.stdin.read()
    else:
        trace_text = Path(args.trace_file).read_text()
    events = parse_word(trace_text)

    session = new_session(spec)
    history = [len(session.frontier)]
    for index, event in enumerate(events, start=1):
        session = step(session, event)
        history.append(len(session.frontier))
        if args.step:
            verdict_here = current_verdict(session)
            print(f"{index} {event} {verdict_here.value} {len(session.frontier)}")
    verdict = current_verdict(session)
    print(verdict.value)
    if args.stats:
        stats = TraceStats(
            events=session.events_seen,
            verdict=verdict,
            max_size=session.max_size_seen,
            max_height=session.max_height_seen,
            size_budget=bounds_mod.size_budget(spec),
            height_budget=bounds_mod.height_budget(spec),
            frontier_history=tuple(history),
        )
        Path(args.stats).write_text(json.dumps(stats.to_json_dict(), indent=2) + "\n")
    return verdict.exit_code


def _all_words(symbols: list[str], max_len: int) -> list[Word]:
    words: list[Word] = [()]
    frontier: list[Word] = [()]
    for _ in range(max_len):
        frontier = [w + (s,) for w in frontier for s in symbols]
        words.extend(frontier)
    return words


def _check_expression(e: Regex, word_len: int) -> str | None:
    """First broken property on ``e``, or None; used by the fuzz command."""
    if not 0 <= bounds_mod.height_increment_bound(e) <= 1:
        return "height budget out of range"
    if not 0 <= bounds_mod.size_increment_bound(e) <= size(e) ** 2:
        return "size budget out of range"
    try:
        reachable = partial.closure(e, cap=100_000)
    except CapacityError:
        return "closure blow-up"
    symbols = sorted(alphabet(e))
    for state in reachable:
        if height(state) > bounds_mod.height_budget(e):
            return "height bound exceeded"
        if size(state) > bounds_mod.size_budget(e):
            return "size bound exceeded"
        for symbol in symbols:
            for report in bounds_mod.check_height_invariant(state, symbol):
                if not report.holds:
                    return "height invariant broken"
            for report in bounds_mod.check_size_invariant(state, symbol):
                if not report.holds:
                    return "size invariant broken"
    lang = oracle.lang_up_to(e, word_len)
    nfa = build_nfa(e)
    for word in _all_words(symbols, word_len):
        member = word in lang
        if derivative.accepts(e, word) != member:
            return f"derivative disagrees with oracle on {word!r}"
        if partial.accepts(e, word) != member:
            return f"partial derivatives disagree with oracle on {word!r}"
        if nfa.accepts(word) != member:
            return f"NFA disagrees with oracle on {word!r}"
    return None


def _cmd_fuzz(args: argparse.Namespace) -> int:
    cfg = corpus.GenConfig(seed=args.seed, shuffle_enabled=args.shuffle)
    for e in corpus.gen_corpus(cfg, args.count):
        problem = _check_expression(e, args.max_word_len)
        if problem is None:
            continue
        shrunk = corpus.shrink_regex(
            e, lambda x: _check_expression(x, args.max_word_len) is not None
        )
        print(f"FAIL: {problem}")
        print(f"counterexample: {format_regex(shrunk)}")
        return 1
    print(f"ok: {args.count} expressions checked (seed {args.seed})")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="derivmon",
        description="Regular-expression derivatives with shuffle, and trace monitoring.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("derive", help="print the word derivative of an expression")
    p.add_argument("expr")
    p.add_argument("symbols", nargs="*", help="event symbols; none means the empty word")
    p.set_defaults(func=_cmd_derive)

    p = sub.add_parser("pderive", help="print the partial-derivative frontier for a word")
    p.add_argument("expr")
    p.add_argument("symbols", nargs="*")
    p.set_defaults(func=_cmd_pderive)

    p = sub.add_parser("closure", help="print all reachable partial derivatives")
    p.add_argument("expr")
    p.set_defaults(func=_cmd_closure)

    p = sub.add_parser("bounds", help="print metrics and growth budgets")
    p.add_argument("expr")
    p.add_argument("symbols", nargs="*")
    p.add_argument("--trace", action="store_true", help="tabulate a walk over the word")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("nfa", help="emit the partial-derivative NFA")
    p.add_argument("expr")
    p.add_argument("--dot", action="store_true", help="Graphviz instead of JSON")
    p.set_defaults(func=_cmd_nfa)

    p = sub.add_parser("oracle", help="enumerate the language up to a length")
    p.add_argument("expr")
    p.add_argument("max_len", type=int)
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("monitor", help="check an event trace against a specification")
    p.add_argument("spec_file")
    p.add_argument("trace_file", nargs="?", default="-", help="trace file or - for stdin")
    p.add_argument("--stats", metavar="PATH", help="write end-of-trace statistics as JSON")
    p.add_argument("--step", action="store_true", help="print one verdict line per event")
    p.set_defaults(func=_cmd_monitor)

    p = sub.add_parser("fuzz", help="randomized agreement and bounds checking")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--shuffle", action="store_true", help="enable the shuffle operator")
    p.add_argument("--max-word-len", type=int, default=3)
    p.set_defaults(func=_cmd_fuzz)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, ValueError, CapacityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return _INPUT_ERROR


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
